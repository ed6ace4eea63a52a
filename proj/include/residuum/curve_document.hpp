#ifndef RESIDUUM_CURVE_DOCUMENT_HPP
#define RESIDUUM_CURVE_DOCUMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "residuum/dual_graph.hpp"
#include "residuum/local_sing.hpp"
#include "residuum/rational.hpp"

namespace residuum {

/// Parsed curve-description file. The format is a single JSON document:
///
/// {
///   "format_version": "1",
///   "components": [ {"id": "C1", "genus": 0,
///                    "nodes": {"e12": "0", "e31": "1"}}, ... ],
///   "edges":      [ {"id": "e12", "ends": ["C1", "C2"], "length": 1}, ... ],
///   "singularities": [ {"id": "s1", "type": "cusp"},
///                      {"id": "s2", "type": "custom",
///                       "branches": [{"x": "t^2", "y": "t^3"}]} ],
///   "differentials": [ {"k": 1, "pieces": {"C1": "1/z"}},
///                      {"k": 3, "edge_params": {"e12": "1"}} ]
/// }
///
/// Rationals are strings "p" or "p/q"; rational-function texts use the
/// component's affine coordinate z (branch series use t). A loop edge lists
/// the same component twice and may give its two slots as a two-element
/// array under "nodes".
struct CurveDocument {
  struct DifferentialSpec {
    int k = 1;
    std::map<std::string, std::string> pieces;      // component id -> f(z) text
    std::map<std::string, std::string> edge_params; // edge id -> rational text
    bool has_pieces() const { return !pieces.empty(); }
  };
  struct SingularitySpec {
    std::string id;
    std::string type; // "node", "cusp", "tacnode", "custom"
    std::vector<std::pair<std::string, std::string>> branches; // (x text, y text)
  };

  std::string format_version;
  DualGraph graph;
  std::vector<SingularitySpec> singularities;
  std::vector<DifferentialSpec> differentials;
  std::string raw_text; // byte-exact input, for the report digest

  /// Parses and validates; throws ParseError / InvalidInput /
  /// DisconnectedGraph with messages naming the offending element.
  static CurveDocument parse(const std::string& json_text);

  /// The differential spec to use for a command: the entry with matching k
  /// when `k` is given, the sole entry otherwise. Throws MissingDifferential.
  const DifferentialSpec& select_differential(std::optional<int> k) const;

  const SingularitySpec* find_singularity(const std::string& id) const;
};

/// Resolves a catalog name or a document singularity entry into branches.
BranchSystem resolve_branch_system(const CurveDocument* doc, const std::string& name,
                                   long long truncation);

/// Parses a per-branch differential text "g1(t);g2(t);..." into exact
/// Laurent data (one rational function of t per branch, expanded at 0).
std::vector<LaurentSeries> parse_branch_differential(const std::string& text, size_t branches,
                                                     long long truncation);

} // namespace residuum

#endif
