#include "residuum/balance.hpp"

#include <random>

#include "residuum/errors.hpp"

namespace residuum {

namespace {

void require_all_rational(const DualGraph& g) {
  for (const auto& c : g.components()) {
    if (!c.rational_chart()) {
      throw NonRationalComponent("component '" + c.id + "' has genus " +
                                 std::to_string(c.genus) +
                                 "; explicit differentials need genus 0");
    }
  }
}

long long rand_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// Small-integer rationals: numerators and denominators in [-9, 9] \ {0}.
Rational rand_rational(std::mt19937_64& rng) {
  long long n = rand_int(rng, -9, 9);
  if (n == 0) n = 1;
  return Rational(BigInt(n), BigInt(rand_int(rng, 1, 9)));
}

} // namespace

GlobalKDifferential construct_global(const DualGraph& g, int k,
                                     const std::map<std::string, Rational>& edge_params) {
  require_all_rational(g);
  for (const auto& [id, value] : edge_params) {
    g.edge(id); // throws UnknownEdge
    (void)value;
  }
  GlobalKDifferential eta;
  eta.k = k;
  for (const auto& comp : g.components()) {
    std::vector<PrincipalPart> parts;
    for (const auto& slot : g.slots_on(comp.id)) {
      auto it = edge_params.find(slot.edge_id);
      if (it == edge_params.end()) {
        throw InvalidInput("missing parameter for edge '" + slot.edge_id + "'");
      }
      Rational a = slot.plus_end ? it->second : -it->second;
      parts.push_back(PrincipalPart::pure(slot.coord, a, k));
    }
    eta.pieces[comp.id] = from_principal_parts(k, parts);
  }
  return eta;
}

EdgeResidueReport check_balancing(const DualGraph& g, const GlobalKDifferential& eta) {
  require_all_rational(g);
  for (const auto& comp : g.components()) {
    if (!eta.pieces.count(comp.id)) {
      throw MissingDifferential("no differential piece on component '" + comp.id + "'");
    }
  }
  for (const auto& [id, piece] : eta.pieces) {
    if (piece.k() != eta.k) {
      throw InvalidInput("piece on component '" + id + "' has k = " +
                         std::to_string(piece.k()) + ", expected " + std::to_string(eta.k));
    }
  }
  EdgeResidueReport report;
  report.local_ok = true;
  report.global_ok = true;
  for (const auto& e : g.edges()) {
    EdgeResidueReport::EdgeEntry entry;
    entry.edge_id = e.id;
    entry.res_plus = k_residue(eta.pieces.at(e.plus_component), PolePoint::finite(e.plus_coord));
    entry.res_minus =
        k_residue(eta.pieces.at(e.minus_component), PolePoint::finite(e.minus_coord));
    entry.sum = entry.res_plus + entry.res_minus;
    if (!entry.sum.is_zero()) report.local_ok = false;
    report.edges.push_back(std::move(entry));
  }
  for (const auto& comp : g.components()) {
    EdgeResidueReport::ComponentEntry entry;
    entry.component_id = comp.id;
    entry.residue_sum = residue_sum(eta.pieces.at(comp.id));
    if (!entry.residue_sum.is_zero()) report.global_ok = false;
    report.components.push_back(std::move(entry));
  }
  return report;
}

EquivalenceVerdict equivalence_probe(const DualGraph& g, int k, int trials,
                                     unsigned long long seed) {
  require_all_rational(g);
  std::mt19937_64 rng(seed);
  EquivalenceVerdict verdict;
  verdict.trials = trials;
  verdict.asserted = (k == 1);
  for (int t = 0; t < trials; ++t) {
    std::map<std::string, Rational> params;
    for (const auto& e : g.edges()) {
      params[e.id] = rand_int(rng, 0, 3) == 0 ? Rational(0) : rand_rational(rng);
    }
    GlobalKDifferential eta = construct_global(g, k, params);
    // Extra parts of order k+1 at the slots carry no k-residue, so they vary
    // the differentials without touching either side of the equivalence.
    for (const auto& comp : g.components()) {
      std::vector<PrincipalPart> extra;
      for (const auto& slot : g.slots_on(comp.id)) {
        if (rand_int(rng, 0, 2) == 0) {
          PrincipalPart part;
          part.location = slot.coord;
          part.coefficients.assign(static_cast<size_t>(k) + 1, Rational(0));
          part.coefficients.front() = rand_rational(rng);
          extra.push_back(part);
        }
      }
      if (!extra.empty()) {
        eta.pieces[comp.id] = eta.pieces[comp.id] + from_principal_parts(k, extra);
      }
    }
    EdgeResidueReport rep = check_balancing(g, eta);
    if (rep.local_ok && rep.global_ok) {
      ++verdict.both_ok;
    } else if (rep.local_ok) {
      ++verdict.local_only;
    } else if (rep.global_ok) {
      ++verdict.global_only;
    }
    if (rep.local_ok != rep.global_ok) {
      verdict.holds = false;
      if (!verdict.counterexample_params) verdict.counterexample_params = params;
    }
  }
  return verdict;
}

namespace {

// Variable layout for the slot-residue solves: 2i = + end of edge i, 2i+1
// = - end.
std::vector<std::string> slot_var_names(const DualGraph& g) {
  std::vector<std::string> names;
  for (const auto& e : g.edges()) {
    names.push_back(e.id + "+");
    names.push_back(e.id + "-");
  }
  return names;
}

// One row per component: the residue theorem on P^1 given that no pole at
// infinity is allowed (sum of slot residues must vanish).
RatMatrix component_sum_rows(const DualGraph& g) {
  RatMatrix m(g.components().size(), 2 * g.edges().size());
  for (size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& edge = g.edges()[e];
    m.at(g.component_index(edge.plus_component), 2 * e) += Rational(1);
    m.at(g.component_index(edge.minus_component), 2 * e + 1) += Rational(1);
  }
  return m;
}

GlobalKDifferential slot_vector_to_differential(const DualGraph& g,
                                                const std::vector<Rational>& v) {
  GlobalKDifferential eta;
  eta.k = 1;
  for (const auto& comp : g.components()) {
    std::vector<PrincipalPart> parts;
    for (const auto& slot : g.slots_on(comp.id)) {
      size_t e = g.edge_index(slot.edge_id);
      const Rational& r = v[2 * e + (slot.plus_end ? 0 : 1)];
      if (!r.is_zero()) parts.push_back({slot.coord, {r}});
    }
    eta.pieces[comp.id] = from_principal_parts(1, parts);
  }
  return eta;
}

} // namespace

std::vector<GlobalKDifferential> dualizing_section_space(const DualGraph& g, int k) {
  require_all_rational(g);
  if (k != 1) {
    throw InvalidInput("dualizing_section_space is implemented for k = 1 only");
  }
  RatMatrix m = component_sum_rows(g);
  for (size_t e = 0; e < g.edges().size(); ++e) {
    std::vector<Rational> row(2 * g.edges().size(), Rational(0));
    row[2 * e] = Rational(1);
    row[2 * e + 1] = Rational(1);
    m.append_row(row);
  }
  ConstraintSystem sys(std::move(m), slot_var_names(g));
  std::vector<GlobalKDifferential> basis;
  for (const auto& v : sys.solution_basis()) {
    basis.push_back(slot_vector_to_differential(g, v));
  }
  return basis;
}

ResidueMatrix residue_matrix(const DualGraph& g,
                             const std::vector<GlobalKDifferential>& basis) {
  ResidueMatrix out;
  out.m = RatMatrix(g.edges().size(), basis.size());
  for (const auto& e : g.edges()) out.edge_ids.push_back(e.id);
  for (size_t j = 0; j < basis.size(); ++j) {
    for (size_t e = 0; e < g.edges().size(); ++e) {
      const Edge& edge = g.edges()[e];
      out.m.at(e, j) = k_residue(basis[j].pieces.at(edge.plus_component),
                                 PolePoint::finite(edge.plus_coord));
    }
  }
  return out;
}

SpanReport span_report(const ResidueMatrix& m, long long g, long long delta) {
  SpanReport rep;
  rep.dim_w = m.m.cols();
  rep.rank = m.m.rank();
  rep.injective = rep.rank == rep.dim_w;
  rep.spans_dual = rep.injective;
  rep.delta_ge_g = delta >= g;
  rep.equisingular_kernel_dim = rep.dim_w - rep.rank;
  return rep;
}

std::vector<std::vector<Rational>> equisingular_kernel(const ResidueMatrix& m) {
  return m.m.kernel_basis();
}

DimensionReport dimension_report(const DualGraph& g) {
  require_all_rational(g);
  DimensionReport rep;
  rep.delta = static_cast<long long>(g.edges().size());
  rep.sum_delta_x = rep.delta;

  RatMatrix vd = component_sum_rows(g);
  auto vd_basis = vd.kernel_basis();
  rep.h_vd = static_cast<long long>(vd_basis.size());
  rep.h_w = static_cast<long long>(dualizing_section_space(g).size());
  rep.n_constraints_independent = rep.h_vd - rep.h_w;

  // Rank of the per-edge residue pairing on the simple-pole space.
  RatMatrix paired(vd_basis.size(), g.edges().size());
  for (size_t j = 0; j < vd_basis.size(); ++j) {
    for (size_t e = 0; e < g.edges().size(); ++e) {
      paired.at(j, e) = vd_basis[j][2 * e] + vd_basis[j][2 * e + 1];
    }
  }
  rep.im_res_dim = static_cast<long long>(paired.rank());
  return rep;
}

} // namespace residuum
