#include "residuum/commands.hpp"

#include <json.hpp>

#include "residuum/acceptance.hpp"
#include "residuum/balance.hpp"
#include "residuum/errors.hpp"
#include "residuum/expr_parse.hpp"

namespace residuum {

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

GlobalKDifferential materialize(const CurveDocument& doc,
                                const CurveDocument::DifferentialSpec& spec) {
  if (!spec.has_pieces()) {
    std::map<std::string, Rational> params;
    for (const auto& [eid, text] : spec.edge_params) params[eid] = Rational::parse(text);
    for (const auto& e : doc.graph.edges()) {
      if (!params.count(e.id)) params[e.id] = Rational(0);
    }
    return construct_global(doc.graph, spec.k, params);
  }
  GlobalKDifferential eta;
  eta.k = spec.k;
  for (const auto& comp : doc.graph.components()) {
    auto it = spec.pieces.find(comp.id);
    if (it == spec.pieces.end()) {
      throw MissingDifferential("no differential text for component '" + comp.id + "'");
    }
    eta.pieces[comp.id] = KDifferential(spec.k, parse_rational_function(it->second, "z"));
  }
  return eta;
}

void report_balancing(Report& rep, const DualGraph& graph, const GlobalKDifferential& eta) {
  EdgeResidueReport bal = check_balancing(graph, eta);
  for (const auto& e : bal.edges) {
    std::string minus =
        e.res_minus.sign() < 0 ? "(" + e.res_minus.str() + ")" : e.res_minus.str();
    rep.check("edge " + e.edge_id + " residue sum", e.sum.is_zero(),
              e.res_plus.str() + " + " + minus + " = " + e.sum.str());
  }
  for (const auto& c : bal.components) {
    rep.check("component " + c.component_id + " residue sum", c.residue_sum.is_zero(),
              c.residue_sum.str());
  }
  rep.check("local_ok", bal.local_ok, bool_str(bal.local_ok));
  rep.check("global_ok", bal.global_ok, bool_str(bal.global_ok));
  if (eta.k % 2 == 0 && bal.local_ok && !bal.global_ok) {
    rep.warn("W-EVEN-K-RESIDUE",
             "for even k the componentwise residue sum of the balanced construction is "
             "(1 + (-1)^k) * sum(a_e) and does not vanish in general");
  }
}

std::string serialize_document(const DualGraph& graph, int k,
                               const std::map<std::string, std::string>& piece_texts) {
  nlohmann::ordered_json doc;
  doc["format_version"] = "1";
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& c : graph.components()) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["genus"] = c.genus;
    nlohmann::ordered_json nodes;
    for (const auto& slot : graph.slots_on(c.id)) {
      const Edge& e = graph.edge(slot.edge_id);
      if (e.plus_component == e.minus_component) {
        nodes[slot.edge_id] = {e.plus_coord.str(), e.minus_coord.str()};
      } else {
        nodes[slot.edge_id] = slot.coord.str();
      }
    }
    jc["nodes"] = nodes;
    comps.push_back(jc);
  }
  doc["components"] = comps;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges()) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["ends"] = {e.plus_component, e.minus_component};
    je["length"] = e.length;
    edges.push_back(je);
  }
  doc["edges"] = edges;
  nlohmann::ordered_json diff;
  diff["k"] = k;
  nlohmann::ordered_json pieces;
  for (const auto& [comp, text] : piece_texts) pieces[comp] = text;
  diff["pieces"] = pieces;
  doc["differentials"] = nlohmann::ordered_json::array({diff});
  return doc.dump();
}

} // namespace

Report cmd_graph_invariants(const CurveDocument& doc) {
  Report rep("graph-invariants", fnv1a_digest(doc.raw_text));
  const DualGraph& g = doc.graph;
  rep.info("components", std::to_string(g.components().size()));
  rep.info("edges", std::to_string(g.edges().size()));
  rep.info("b1", std::to_string(betti1(g)));
  rep.info("sum_genus", std::to_string(g.sum_genus()));
  rep.info("arithmetic_genus", std::to_string(arithmetic_genus(g)));
  rep.info("tropical_jacobian_dim", std::to_string(tropical_jacobian_dim(g)));
  rep.info("harmonic_space_dim", std::to_string(harmonic_space(g).size()));
  return rep;
}

Report cmd_check_balance(const CurveDocument& doc, std::optional<int> k) {
  Report rep("check-balance", fnv1a_digest(doc.raw_text));
  const auto& spec = doc.select_differential(k);
  rep.info("k", std::to_string(spec.k));
  GlobalKDifferential eta = materialize(doc, spec);
  report_balancing(rep, doc.graph, eta);
  return rep;
}

Report cmd_construct(const CurveDocument& doc, int k,
                     const std::map<std::string, Rational>& params) {
  Report rep("construct", fnv1a_digest(doc.raw_text));
  rep.info("k", std::to_string(k));
  for (const auto& e : doc.graph.edges()) {
    auto it = params.find(e.id);
    if (it == params.end()) throw InvalidInput("missing parameter for edge '" + e.id + "'");
    rep.info("a_" + e.id, it->second.str());
  }
  GlobalKDifferential eta = construct_global(doc.graph, k, params);

  std::map<std::string, std::string> piece_texts;
  for (const auto& comp : doc.graph.components()) {
    const KDifferential& piece = eta.pieces.at(comp.id);
    std::string text = piece.f().str("z");
    piece_texts[comp.id] = text;
    rep.info("piece " + comp.id, piece.str("z"));
    rep.info("piece " + comp.id + " residue at infinity",
             k_residue(piece, PolePoint::infinity()).str());
  }
  report_balancing(rep, doc.graph, eta);
  rep.info("emitted_document", serialize_document(doc.graph, k, piece_texts));
  return rep;
}

Report cmd_span(const CurveDocument& doc) {
  Report rep("span", fnv1a_digest(doc.raw_text));
  const DualGraph& g = doc.graph;
  auto basis = dualizing_section_space(g);
  ResidueMatrix m = residue_matrix(g, basis);
  long long delta = static_cast<long long>(g.edges().size());
  SpanReport span = span_report(m, g.sum_genus(), delta);
  DimensionReport dims = dimension_report(g);

  rep.info("dim_W", std::to_string(span.dim_w));
  rep.check("dim_W = b1", static_cast<long long>(span.dim_w) == betti1(g),
            std::to_string(span.dim_w) + " vs b1 = " + std::to_string(betti1(g)));
  rep.info("residue_matrix_rank", std::to_string(span.rank));
  rep.check("res_injective_on_W", span.injective, bool_str(span.injective));
  rep.check("residues_span_dual", span.spans_dual, bool_str(span.spans_dual));
  rep.info("delta_ge_g", bool_str(span.delta_ge_g));
  rep.info("equisingular_kernel_dim", std::to_string(span.equisingular_kernel_dim));
  rep.info("h_VD", std::to_string(dims.h_vd));
  rep.info("h_W", std::to_string(dims.h_w));
  rep.info("independent_constraints", std::to_string(dims.n_constraints_independent));
  rep.info("im_res_dim", std::to_string(dims.im_res_dim));
  rep.info("delta_minus_1", std::to_string(dims.delta - 1));
  if (dims.h_vd > 0) {
    rep.check("im_res_dim = delta - 1", dims.im_res_dim == dims.delta - 1,
              std::to_string(dims.im_res_dim));
  }
  if (dims.n_constraints_independent != dims.sum_delta_x) {
    rep.warn("W-DELTA-CONSTRAINT-COUNT",
             "independent balancing constraints = " +
                 std::to_string(dims.n_constraints_independent) + " (= delta - 1), not " +
                 "sum(delta_x) = " + std::to_string(dims.sum_delta_x) +
                 "; one dependency comes from the residue theorem");
  }
  return rep;
}

Report cmd_conductor(const CurveDocument* doc, const std::string& singularity,
                     const std::optional<std::string>& differential, int k,
                     std::optional<long long> trunc) {
  std::string digest_src = (doc ? doc->raw_text : std::string()) + "|" + singularity + "|" +
                           (differential ? *differential : std::string()) + "|k=" +
                           std::to_string(k);
  Report rep("conductor", fnv1a_digest(digest_src));
  rep.info("singularity", singularity);
  rep.info("k", std::to_string(k));

  // Provisional window to read pole orders off the differential, then the
  // final window from the truncation rule (overridable with --trunc).
  long long window = trunc.value_or(16);
  long long max_pole = 0;
  if (differential) {
    BranchSystem probe = resolve_branch_system(doc, singularity, std::max<long long>(window, 16));
    auto series = parse_branch_differential(*differential, probe.num_branches(), 8);
    for (const auto& s : series) {
      if (!s.is_zero() && s.valuation() < 0) max_pole = std::max(max_pole, -s.valuation());
    }
  }
  if (!trunc) window = std::max<long long>(16, default_truncation(4, k, max_pole));
  rep.info("truncation_window", std::to_string(window));

  BranchSystem b = resolve_branch_system(doc, singularity, window);
  ConductorData cond = conductor_exponents(b);
  std::string expo;
  for (size_t i = 0; i < cond.exponents.size(); ++i) {
    expo += (i ? "," : "") + std::to_string(cond.exponents[i]);
  }
  rep.info("branches", std::to_string(b.num_branches()));
  rep.info("conductor_exponents", "(" + expo + ")");
  rep.info("delta", std::to_string(cond.delta));
  if (singularity == "tacnode") {
    rep.warn("W-TACNODE-PARAM",
             "computed exponents (2,2) use the primitive normalization x = t, y = ±t^2; "
             "the non-primitive chart x = t^2 = s^2, y = t^4 = -s^4 would report (t^4)+(s^4)");
  }

  ConstraintSystem sys = descent_constraints(b, cond.exponents);
  rep.check("constraint_rank = delta",
            static_cast<long long>(sys.rank()) == cond.delta,
            std::to_string(sys.rank()) + " vs delta = " + std::to_string(cond.delta));

  if (differential) {
    auto series = parse_branch_differential(*differential, b.num_branches(), window);
    if (k == 1) {
      PrincipalPartSystem eta;
      eta.k = 1;
      for (const auto& s : series) {
        std::vector<Rational> tail;
        long long order = (!s.is_zero() && s.valuation() < 0) ? -s.valuation() : 0;
        for (long long j = order; j >= 1; --j) tail.push_back(s.coeff_or_zero(-j));
        eta.tails.push_back(std::move(tail));
      }
      bool desc = descends(b, eta);
      bool annih = conductor_annihilation_check(b, eta);
      Rational weighted = weighted_residue_check(b, eta);
      rep.check("descends", desc, bool_str(desc));
      rep.info("conductor_annihilation", bool_str(annih));
      rep.info("weighted_residue_sum", weighted.str());
      if (annih && !desc) {
        rep.warn("W-CUSP-EX2-CONFLICT",
                 "conductor annihilation holds but the residue-pairing descent fails; "
                 "annihilation alone is a necessary, not sufficient, criterion");
      }
    } else {
      bool desc = descends_k(b, series, k);
      rep.check("descends", desc, bool_str(desc));
      std::string bound;
      for (size_t i = 0; i < cond.exponents.size(); ++i) {
        bound += (i ? "," : "") + std::to_string(k * cond.exponents[i]);
      }
      rep.info("max_pole_orders_allowed", "(" + bound + ")");
    }
  }
  return rep;
}

Report cmd_selftest() { return selftest_report(); }

} // namespace residuum
