/* C API for the residuum library: exact residue and conductor verification
 * on nodal and singular curves. All functions are thread-compatible; error
 * messages are thread-local. Reports and documents are opaque handles that
 * must be released with the matching _free call. */
#ifndef RESIDUUM_CAPI_H
#define RESIDUUM_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsd_status {
  RSD_OK = 0,
  RSD_INPUT_ERROR = 2,      /* unparseable or inconsistent input */
  RSD_TRUNCATION_ERROR = 3, /* series window too small; raise trunc */
  RSD_INVALID_ARGUMENT = 4, /* null handle, bad flag value */
  RSD_INTERNAL_ERROR = 5
} rsd_status;

typedef struct rsd_document rsd_document;
typedef struct rsd_report rsd_report;

const char* rsd_version(void);

/* Explains the most recent failing call on this thread; never NULL. */
const char* rsd_last_error(void);

/* Parses a curve-description JSON document. */
rsd_status rsd_document_parse(const char* json_text, rsd_document** out);
void rsd_document_free(rsd_document* doc);

/* Reports. A command that runs to completion returns RSD_OK even when the
 * verification it performed failed; the verdict lives in the report and in
 * rsd_report_exit_code (0 pass, 1 verification failure). */
void rsd_report_free(rsd_report* report);
const char* rsd_report_text(const rsd_report* report);
const char* rsd_report_json(const rsd_report* report);
int rsd_report_exit_code(const rsd_report* report);

rsd_status rsd_graph_invariants(const rsd_document* doc, rsd_report** out);

/* k <= 0 selects the document's sole differential. */
rsd_status rsd_check_balance(const rsd_document* doc, int k, rsd_report** out);

/* params: comma-separated "edge=p/q" assignments covering every edge. */
rsd_status rsd_construct(const rsd_document* doc, int k, const char* params,
                         rsd_report** out);

rsd_status rsd_span(const rsd_document* doc, rsd_report** out);

/* singularity: "node", "cusp", "tacnode", or the id of a custom entry in
 * doc (doc may be NULL for catalog names). differential: per-branch
 * rational functions of t separated by ';', or NULL for conductor data
 * only. trunc <= 0 selects the default window. */
rsd_status rsd_conductor(const rsd_document* doc, const char* singularity,
                         const char* differential, int k, int trunc, rsd_report** out);

rsd_status rsd_selftest(rsd_report** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RESIDUUM_CAPI_H */
