// residuum: batch verification of residue balancing, residue span, and
// conductor-level descent on nodal and singular curves. Thin shell over the
// shared library's C API; all mathematics lives behind residuum/capi.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "residuum/capi.h"

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitTruncation = 3;

int fail_status(rsd_status status) {
  std::cerr << "error: " << rsd_last_error() << "\n";
  if (status == RSD_TRUNCATION_ERROR) {
    std::cerr << "hint: raise the series window with --trunc\n";
    return kExitTruncation;
  }
  return kExitInputError;
}

struct DocHandle {
  rsd_document* doc = nullptr;
  ~DocHandle() { rsd_document_free(doc); }
};

struct ReportHandle {
  rsd_report* report = nullptr;
  ~ReportHandle() { rsd_report_free(report); }
};

int load_document(const std::string& path, DocHandle& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitInputError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  rsd_status status = rsd_document_parse(text.c_str(), &out.doc);
  if (status != RSD_OK) return fail_status(status);
  return 0;
}

int emit(const ReportHandle& rep, bool as_json) {
  std::fputs(as_json ? rsd_report_json(rep.report) : rsd_report_text(rep.report), stdout);
  return rsd_report_exit_code(rep.report);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact residue balancing and conductor descent on curves"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the machine-readable report");

  std::string file;
  int k = 0;
  int k_construct = 1;
  int trunc = 0;
  std::string params;
  std::string singularity;
  std::string differential;

  auto* inv = app.add_subcommand("graph-invariants", "combinatorics of the dual graph");
  inv->add_option("file", file, "curve document (JSON)")->required();

  auto* bal = app.add_subcommand("check-balance", "residue balancing verdicts");
  bal->add_option("file", file, "curve document (JSON)")->required();
  bal->add_option("--k", k, "tensor power selecting the document differential");

  auto* con = app.add_subcommand("construct", "build the edge-parameter differential");
  con->add_option("file", file, "curve document (JSON)")->required();
  con->add_option("--k", k_construct, "tensor power (default 1)");
  con->add_option("--params", params, "comma-separated edge=p/q assignments")->required();

  auto* span = app.add_subcommand("span", "residue span and dimension diagnostics");
  span->add_option("file", file, "curve document (JSON)")->required();

  auto* cond = app.add_subcommand("conductor", "conductor exponents and descent oracles");
  cond->add_option("file", file, "curve document (JSON), optional for catalog names");
  cond->add_option("--singularity", singularity, "node | cusp | tacnode | <document id>")
      ->required();
  cond->add_option("--differential", differential,
                   "per-branch rational functions of t, ';'-separated");
  cond->add_option("--k", k_construct, "tensor power (default 1)");
  cond->add_option("--trunc", trunc, "series truncation window");

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  (void)self;

  CLI11_PARSE(app, argc, argv);

  DocHandle doc;
  ReportHandle rep;
  rsd_status status = RSD_OK;

  if (inv->parsed()) {
    if (int rc = load_document(file, doc)) return rc;
    status = rsd_graph_invariants(doc.doc, &rep.report);
  } else if (bal->parsed()) {
    if (int rc = load_document(file, doc)) return rc;
    status = rsd_check_balance(doc.doc, k, &rep.report);
  } else if (con->parsed()) {
    if (int rc = load_document(file, doc)) return rc;
    status = rsd_construct(doc.doc, k_construct, params.c_str(), &rep.report);
  } else if (span->parsed()) {
    if (int rc = load_document(file, doc)) return rc;
    status = rsd_span(doc.doc, &rep.report);
  } else if (cond->parsed()) {
    if (!file.empty()) {
      if (int rc = load_document(file, doc)) return rc;
    }
    status = rsd_conductor(doc.doc, singularity.c_str(),
                           differential.empty() ? nullptr : differential.c_str(),
                           k_construct, trunc, &rep.report);
  } else {
    status = rsd_selftest(&rep.report);
  }

  if (status != RSD_OK) return fail_status(status);
  return emit(rep, as_json);
}
