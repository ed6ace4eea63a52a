// Exercises the shared library strictly through the C header, the way an
// external consumer would.
#include <cstdio>
#include <cstring>
#include <string>

#include "residuum/capi.h"

static int g_failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);      \
      ++g_failures;                                                    \
    }                                                                  \
  } while (0)

static const char* kPairK3 = R"({
  "format_version": "1",
  "components": [{"id": "A", "genus": 0}, {"id": "B", "genus": 0}],
  "edges": [{"id": "e", "ends": ["A", "B"]}],
  "differentials": [{"k": 3, "edge_params": {"e": "1"}}]
})";

static const char* kTriangle = R"({
  "format_version": "1",
  "components": [{"id": "C1"}, {"id": "C2"}, {"id": "C3"}],
  "edges": [
    {"id": "e12", "ends": ["C1", "C2"]},
    {"id": "e23", "ends": ["C2", "C3"]},
    {"id": "e31", "ends": ["C1", "C3"]}
  ]
})";

static const char* kUnbalanced = R"({
  "format_version": "1",
  "components": [{"id": "A"}, {"id": "B"}],
  "edges": [{"id": "e", "ends": ["A", "B"]}],
  "differentials": [{"k": 1, "pieces": {"A": "1/z", "B": "0"}}]
})";

int main() {
  EXPECT(std::strlen(rsd_version()) > 0);

  // parse errors surface with a message and RSD_INPUT_ERROR
  rsd_document* bad = nullptr;
  EXPECT(rsd_document_parse("{not json", &bad) == RSD_INPUT_ERROR);
  EXPECT(bad == nullptr);
  EXPECT(std::strlen(rsd_last_error()) > 0);

  rsd_document* missing_edge = nullptr;
  EXPECT(rsd_document_parse(R"({"components":[{"id":"A"}],"edges":
    [{"id":"e","ends":["A","Z"]}]})", &missing_edge) == RSD_INPUT_ERROR);

  // graph invariants on the triangle
  rsd_document* tri = nullptr;
  EXPECT(rsd_document_parse(kTriangle, &tri) == RSD_OK);
  rsd_report* inv = nullptr;
  EXPECT(rsd_graph_invariants(tri, &inv) == RSD_OK);
  EXPECT(rsd_report_exit_code(inv) == 0);
  EXPECT(std::string(rsd_report_text(inv)).find("b1 = 1") != std::string::npos);
  EXPECT(std::string(rsd_report_text(inv)).find("arithmetic_genus = 1") != std::string::npos);
  rsd_report_free(inv);

  // span on the triangle carries the constraint-count warning
  rsd_report* span = nullptr;
  EXPECT(rsd_span(tri, &span) == RSD_OK);
  EXPECT(rsd_report_exit_code(span) == 0);
  EXPECT(std::string(rsd_report_json(span)).find("W-DELTA-CONSTRAINT-COUNT") !=
         std::string::npos);
  rsd_report_free(span);

  // construct on the triangle: locally balanced by design
  rsd_report* made = nullptr;
  EXPECT(rsd_construct(tri, 1, "e12=1,e23=2,e31=3", &made) == RSD_OK);
  EXPECT(rsd_report_exit_code(made) == 0);
  EXPECT(std::string(rsd_report_text(made)).find("local_ok = true") != std::string::npos);
  rsd_report_free(made);
  rsd_report* incomplete = nullptr;
  EXPECT(rsd_construct(tri, 1, "e12=1", &incomplete) == RSD_INPUT_ERROR);
  rsd_document_free(tri);

  // the two-component pair at k = 3 passes both balancing conditions
  rsd_document* pair = nullptr;
  EXPECT(rsd_document_parse(kPairK3, &pair) == RSD_OK);
  rsd_report* bal = nullptr;
  EXPECT(rsd_check_balance(pair, 3, &bal) == RSD_OK);
  EXPECT(rsd_report_exit_code(bal) == 0);
  rsd_report_free(bal);
  rsd_document_free(pair);

  // an unbalanced document fails with exit code 1 and names the edge
  rsd_document* unb = nullptr;
  EXPECT(rsd_document_parse(kUnbalanced, &unb) == RSD_OK);
  rsd_report* ubal = nullptr;
  EXPECT(rsd_check_balance(unb, 0, &ubal) == RSD_OK);
  EXPECT(rsd_report_exit_code(ubal) == 1);
  EXPECT(std::string(rsd_report_text(ubal)).find("edge e residue sum") != std::string::npos);
  rsd_report_free(ubal);
  rsd_document_free(unb);

  // conductor over the catalog, no document
  rsd_report* cusp_rep = nullptr;
  EXPECT(rsd_conductor(nullptr, "cusp", "1/t^2", 1, 0, &cusp_rep) == RSD_OK);
  EXPECT(rsd_report_exit_code(cusp_rep) == 0);
  EXPECT(std::string(rsd_report_text(cusp_rep)).find("conductor_exponents = (2)") !=
         std::string::npos);
  rsd_report_free(cusp_rep);

  rsd_report* logpole = nullptr;
  EXPECT(rsd_conductor(nullptr, "cusp", "1/t", 1, 0, &logpole) == RSD_OK);
  EXPECT(rsd_report_exit_code(logpole) == 1); // descent fails
  EXPECT(std::string(rsd_report_json(logpole)).find("W-CUSP-EX2-CONFLICT") !=
         std::string::npos);
  rsd_report_free(logpole);

  rsd_report* nogood = nullptr;
  EXPECT(rsd_conductor(nullptr, "no-such-germ", nullptr, 1, 0, &nogood) == RSD_INPUT_ERROR);

  if (g_failures == 0) std::printf("capi_tests: all checks passed\n");
  return g_failures == 0 ? 0 : 1;
}
