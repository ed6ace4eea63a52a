#include "residuum/dual_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "residuum/errors.hpp"

namespace residuum {

DualGraph::Builder& DualGraph::Builder::add_component(const std::string& id, int genus) {
  if (genus < 0) throw InvalidInput("component '" + id + "' has negative genus");
  components_.push_back({id, genus});
  return *this;
}

DualGraph::Builder& DualGraph::Builder::add_edge(const std::string& id,
                                                 const std::string& plus_comp,
                                                 const std::string& minus_comp,
                                                 long long length) {
  return add_edge(id, plus_comp, minus_comp, std::nullopt, std::nullopt, length);
}

DualGraph::Builder& DualGraph::Builder::add_edge(const std::string& id,
                                                 const std::string& plus_comp,
                                                 const std::string& minus_comp,
                                                 const Rational& plus_coord,
                                                 const Rational& minus_coord, long long length) {
  return add_edge(id, plus_comp, minus_comp, std::optional<Rational>(plus_coord),
                  std::optional<Rational>(minus_coord), length);
}

DualGraph::Builder& DualGraph::Builder::add_edge(const std::string& id,
                                                 const std::string& plus_comp,
                                                 const std::string& minus_comp,
                                                 const std::optional<Rational>& plus_coord,
                                                 const std::optional<Rational>& minus_coord,
                                                 long long length) {
  if (length < 1) throw InvalidInput("edge '" + id + "' has non-positive length");
  PendingEdge pe;
  pe.edge = {id, plus_comp, minus_comp, Rational(0), Rational(0), length};
  pe.plus_coord = plus_coord;
  pe.minus_coord = minus_coord;
  edges_.push_back(pe);
  return *this;
}

DualGraph DualGraph::Builder::build() const {
  DualGraph g;
  g.components_ = components_;
  std::sort(g.components_.begin(), g.components_.end(),
            [](const Component& a, const Component& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < g.components_.size(); ++i) {
    if (g.components_[i].id == g.components_[i + 1].id) {
      throw InvalidInput("duplicate component id '" + g.components_[i].id + "'");
    }
  }
  if (g.components_.empty()) throw InvalidInput("graph has no components");

  std::set<std::string> comp_ids;
  for (const auto& c : g.components_) comp_ids.insert(c.id);

  // Default slot coordinates: 0, 1, 2, ... per component in declaration
  // order, skipping values an explicit coordinate already occupies.
  std::map<std::string, std::set<Rational>> taken;
  for (const auto& pe : edges_) {
    if (pe.plus_coord) taken[pe.edge.plus_component].insert(*pe.plus_coord);
    if (pe.minus_coord) taken[pe.edge.minus_component].insert(*pe.minus_coord);
  }
  auto next_free = [&](const std::string& comp) {
    long long v = 0;
    while (taken[comp].count(Rational(v))) ++v;
    taken[comp].insert(Rational(v));
    return Rational(v);
  };

  std::vector<Edge> edges;
  std::set<std::string> edge_ids;
  for (const auto& pe : edges_) {
    Edge e = pe.edge;
    if (!edge_ids.insert(e.id).second) throw InvalidInput("duplicate edge id '" + e.id + "'");
    if (!comp_ids.count(e.plus_component)) {
      throw InvalidInput("edge '" + e.id + "' references unknown component '" +
                         e.plus_component + "'");
    }
    if (!comp_ids.count(e.minus_component)) {
      throw InvalidInput("edge '" + e.id + "' references unknown component '" +
                         e.minus_component + "'");
    }
    e.plus_coord = pe.plus_coord ? *pe.plus_coord : next_free(e.plus_component);
    e.minus_coord = pe.minus_coord ? *pe.minus_coord : next_free(e.minus_component);
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  g.edges_ = std::move(edges);

  // Slot coordinates must be pairwise distinct on each component.
  std::map<std::string, std::set<Rational>> used;
  for (const auto& e : g.edges_) {
    if (e.plus_component == e.minus_component && e.plus_coord == e.minus_coord) {
      throw InvalidInput("loop edge '" + e.id + "' needs two distinct slots");
    }
    if (!used[e.plus_component].insert(e.plus_coord).second) {
      throw InvalidInput("component '" + e.plus_component + "' has two node slots at z = " +
                         e.plus_coord.str());
    }
    if (!used[e.minus_component].insert(e.minus_coord).second) {
      throw InvalidInput("component '" + e.minus_component + "' has two node slots at z = " +
                         e.minus_coord.str());
    }
  }

  // Connectivity (union-find over component ids).
  std::map<std::string, std::string> parent;
  for (const auto& c : g.components_) parent[c.id] = c.id;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : g.edges_) parent[find(e.plus_component)] = find(e.minus_component);
  const std::string root = find(g.components_.front().id);
  for (const auto& c : g.components_) {
    if (find(c.id) != root) {
      throw DisconnectedGraph("dual graph is not connected: component '" + c.id +
                              "' is unreachable");
    }
  }
  return g;
}

const Component& DualGraph::component(const std::string& id) const {
  return components_[component_index(id)];
}

const Edge& DualGraph::edge(const std::string& id) const { return edges_[edge_index(id)]; }

size_t DualGraph::component_index(const std::string& id) const {
  for (size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].id == id) return i;
  }
  throw UnknownEdge("unknown component '" + id + "'");
}

size_t DualGraph::edge_index(const std::string& id) const {
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  throw UnknownEdge("unknown edge '" + id + "'");
}

std::vector<DualGraph::Slot> DualGraph::slots_on(const std::string& component_id) const {
  std::vector<Slot> slots;
  for (const auto& e : edges_) {
    if (e.plus_component == component_id) slots.push_back({e.id, true, e.plus_coord});
    if (e.minus_component == component_id) slots.push_back({e.id, false, e.minus_coord});
  }
  return slots;
}

int DualGraph::sum_genus() const {
  int s = 0;
  for (const auto& c : components_) s += c.genus;
  return s;
}

bool DualGraph::all_rational() const {
  for (const auto& c : components_) {
    if (!c.rational_chart()) return false;
  }
  return true;
}

long long betti1(const DualGraph& g) {
  return static_cast<long long>(g.edges().size()) -
         static_cast<long long>(g.components().size()) + 1;
}

long long arithmetic_genus(const DualGraph& g) { return g.sum_genus() + betti1(g); }

long long arithmetic_genus_from_delta(long long gg, const std::vector<long long>& deltas) {
  long long s = gg;
  for (long long d : deltas) s += d;
  return s;
}

ConstraintSystem vertex_balance_matrix(const DualGraph& g) {
  RatMatrix m(g.components().size(), g.edges().size());
  for (size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& edge = g.edges()[e];
    size_t vp = g.component_index(edge.plus_component);
    size_t vm = g.component_index(edge.minus_component);
    m.at(vp, e) += Rational(1);
    m.at(vm, e) += Rational(-1); // a loop contributes +1 - 1 = 0
  }
  std::vector<std::string> names;
  for (const auto& e : g.edges()) names.push_back(e.id);
  return ConstraintSystem(std::move(m), std::move(names));
}

std::vector<Flow> harmonic_space(const DualGraph& g) {
  ConstraintSystem sys = vertex_balance_matrix(g);
  std::vector<Flow> flows;
  for (const auto& vec : sys.solution_basis()) {
    Flow f;
    for (size_t e = 0; e < g.edges().size(); ++e) f.values[g.edges()[e].id] = vec[e];
    flows.push_back(std::move(f));
  }
  return flows;
}

long long tropical_jacobian_dim(const DualGraph& g) { return betti1(g); }

} // namespace residuum
