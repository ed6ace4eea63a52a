#ifndef RESIDUUM_COMMANDS_HPP
#define RESIDUUM_COMMANDS_HPP

#include <map>
#include <optional>
#include <string>

#include "residuum/curve_document.hpp"
#include "residuum/report.hpp"

namespace residuum {

Report cmd_graph_invariants(const CurveDocument& doc);

/// Balancing verdicts for the document's differential (selected by k).
Report cmd_check_balance(const CurveDocument& doc, std::optional<int> k);

/// Runs the edge-parameter construction and emits each piece as exact
/// rational-function text, its residue table, and a re-ingestable document
/// under the "emitted_document" entry.
Report cmd_construct(const CurveDocument& doc, int k,
                     const std::map<std::string, Rational>& params);

/// Section-space dimensions, residue-matrix rank and kernel diagnostics.
Report cmd_span(const CurveDocument& doc);

/// Conductor exponents, delta, and the descent oracles at a singularity.
/// `doc` may be null when `singularity` names a catalog entry.
Report cmd_conductor(const CurveDocument* doc, const std::string& singularity,
                     const std::optional<std::string>& differential, int k,
                     std::optional<long long> trunc);

/// Runs the acceptance suite; one pass/fail entry per criterion.
Report cmd_selftest();

} // namespace residuum

#endif
