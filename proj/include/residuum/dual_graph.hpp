#ifndef RESIDUUM_DUAL_GRAPH_HPP
#define RESIDUUM_DUAL_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "residuum/linalg.hpp"
#include "residuum/rational.hpp"

namespace residuum {

/// One irreducible component of the curve: a vertex of the dual graph with a
/// genus label. Explicit differential computation is supported exactly on
/// genus-0 components, where a rational chart exists.
struct Component {
  std::string id;
  int genus = 0;

  bool rational_chart() const { return genus == 0; }
};

/// A node of the curve: an edge joining the two branch points. `plus` is the
/// orientation choice; loops are allowed and carry two distinct slots on the
/// same component. Slot coordinates live in the component's affine chart.
struct Edge {
  std::string id;
  std::string plus_component;
  std::string minus_component;
  Rational plus_coord;
  Rational minus_coord;
  long long length = 1; // degeneration exponent m_e of the local model xy = t^m
};

/// An edge flow r_e, the discrete stand-in for a residue assignment.
struct Flow {
  std::map<std::string, Rational> values; // edge id -> r_e
};

/// Validated dual graph of a connected nodal curve. Components and edges are
/// kept sorted by id so every derived matrix and report is deterministic.
class DualGraph {
public:
  /// Empty placeholder; a usable graph always comes from Builder::build.
  DualGraph() = default;

  class Builder {
  public:
    /// Declares a component; node slots without explicit coordinates are
    /// assigned 0, 1, 2, ... in edge declaration order.
    Builder& add_component(const std::string& id, int genus = 0);
    /// Declares an edge; ends without an explicit coordinate get the
    /// defaults.
    Builder& add_edge(const std::string& id, const std::string& plus_comp,
                      const std::string& minus_comp, long long length = 1);
    Builder& add_edge(const std::string& id, const std::string& plus_comp,
                      const std::string& minus_comp, const Rational& plus_coord,
                      const Rational& minus_coord, long long length = 1);
    Builder& add_edge(const std::string& id, const std::string& plus_comp,
                      const std::string& minus_comp,
                      const std::optional<Rational>& plus_coord,
                      const std::optional<Rational>& minus_coord, long long length);
    /// Checks connectivity, slot consistency and id uniqueness.
    DualGraph build() const;

  private:
    friend class DualGraph;
    struct PendingEdge {
      Edge edge;
      std::optional<Rational> plus_coord;
      std::optional<Rational> minus_coord;
    };
    std::vector<Component> components_;
    std::vector<PendingEdge> edges_;
  };

  const std::vector<Component>& components() const { return components_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const Component& component(const std::string& id) const;
  const Edge& edge(const std::string& id) const;
  size_t component_index(const std::string& id) const;
  size_t edge_index(const std::string& id) const;

  /// Slots on a component as (edge id, is_plus_end, coordinate), ordered by
  /// edge id with the + end first on loops.
  struct Slot {
    std::string edge_id;
    bool plus_end;
    Rational coord;
  };
  std::vector<Slot> slots_on(const std::string& component_id) const;

  int sum_genus() const;
  bool all_rational() const;

private:
  std::vector<Component> components_;
  std::vector<Edge> edges_;
};

/// b1 = |E| - |V| + 1 for a connected graph.
long long betti1(const DualGraph& g);

/// p_a = sum of genus labels + b1.
long long arithmetic_genus(const DualGraph& g);

/// p_a = g + sum of delta-invariants (no graph needed).
long long arithmetic_genus_from_delta(long long g, const std::vector<long long>& deltas);

/// One row per component, one column per edge; entry epsilon(v,e) = +1 when
/// e is oriented away from v, -1 toward v, 0 otherwise (loops cancel).
ConstraintSystem vertex_balance_matrix(const DualGraph& g);

/// Exact kernel basis of the vertex balance matrix; dimension b1.
std::vector<Flow> harmonic_space(const DualGraph& g);

/// Dimension of the tropical Jacobian, b1.
long long tropical_jacobian_dim(const DualGraph& g);

} // namespace residuum

#endif
