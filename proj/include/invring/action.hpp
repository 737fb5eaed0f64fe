#ifndef INVRING_ACTION_HPP
#define INVRING_ACTION_HPP

/// A description of a finite permutation group acting on a set of variable
/// positions, together with the fully materialized group table.
///
/// Four kinds of action are supported:
///  - GraphEdges(n):  S_n acting on the C(n,2) edge variables of a multigraph;
///  - DigraphArcs(n): S_n acting on the n^2 arc variables (loops included);
///  - Natural(m):     S_m permuting m variables directly;
///  - Explicit:       the closure of a user-supplied list of generators acting
///    on m positions.
/// Tables are materialized in full; a configurable order cap (default 50000)
/// guards against runaway closures.

#include <memory>
#include <string>
#include <vector>

#include "invring/perm.hpp"

namespace invring {

enum class ActionKind { GraphEdges, DigraphArcs, Natural, Explicit };

class ActionSpec {
 public:
  static ActionSpec graph_edges(int n);
  static ActionSpec digraph_arcs(int n);
  static ActionSpec natural(int m);
  static ActionSpec explicit_group(int m, std::vector<Permutation> generators);

  ActionKind kind() const { return kind_; }
  /// Number of vertices for graph/digraph kinds; 0 otherwise.
  int vertex_count() const { return n_; }
  /// Number of variable positions acted on.
  int position_count() const { return m_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::string describe() const;

  bool operator==(const ActionSpec& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && m_ == o.m_ && generators_ == o.generators_;
  }

 private:
  ActionSpec(ActionKind kind, int n, int m, std::vector<Permutation> gens)
      : kind_(kind), n_(n), m_(m), generators_(std::move(gens)) {}

  ActionKind kind_;
  int n_;
  int m_;
  std::vector<Permutation> generators_;
};

/// The fully materialized table of a group action on m positions.
class GroupTable {
 public:
  static constexpr long kDefaultOrderCap = 50000;

  /// Materializes the table for the action; throws if the group order would
  /// exceed the cap.
  explicit GroupTable(const ActionSpec& action, long order_cap = kDefaultOrderCap);

  const ActionSpec& action() const { return action_; }
  long order() const { return static_cast<long>(elements_.size()); }
  int position_count() const { return action_.position_count(); }

  /// Element g of the group as a permutation of positions.
  const Permutation& element(long g) const { return elements_[g]; }
  const Permutation& inverse(long g) const { return inverses_[g]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  /// For GraphEdges/DigraphArcs: the vertex permutation whose induced action
  /// is element(g).  Throws for other kinds.
  const Permutation& vertex_element(long g) const;
  bool has_vertex_elements() const { return !vertex_elements_.empty(); }

 private:
  ActionSpec action_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> inverses_;
  std::vector<Permutation> vertex_elements_;
};

}  // namespace invring

#endif
