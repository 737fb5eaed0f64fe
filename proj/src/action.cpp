#include "invring/action.hpp"

#include <set>

namespace invring {

ActionSpec ActionSpec::graph_edges(int n) {
  if (n < 1) throw std::invalid_argument("graph action needs n >= 1");
  return ActionSpec(ActionKind::GraphEdges, n, pair_count(n), {});
}

ActionSpec ActionSpec::digraph_arcs(int n) {
  if (n < 1) throw std::invalid_argument("digraph action needs n >= 1");
  return ActionSpec(ActionKind::DigraphArcs, n, n * n, {});
}

ActionSpec ActionSpec::natural(int m) {
  if (m < 1) throw std::invalid_argument("natural action needs m >= 1");
  return ActionSpec(ActionKind::Natural, 0, m, {});
}

ActionSpec ActionSpec::explicit_group(int m, std::vector<Permutation> generators) {
  if (m < 0) throw std::invalid_argument("explicit action needs m >= 0");
  for (const auto& g : generators)
    if (g.size() != m) throw std::invalid_argument("generator size does not match position count");
  return ActionSpec(ActionKind::Explicit, 0, m, std::move(generators));
}

std::string ActionSpec::describe() const {
  switch (kind_) {
    case ActionKind::GraphEdges:
      return "graph-edges(" + std::to_string(n_) + ")";
    case ActionKind::DigraphArcs:
      return "digraph-arcs(" + std::to_string(n_) + ")";
    case ActionKind::Natural:
      return "natural(" + std::to_string(m_) + ")";
    case ActionKind::Explicit:
      return "explicit(m=" + std::to_string(m_) +
             ", generators=" + std::to_string(generators_.size()) + ")";
  }
  return "?";
}

namespace {

// Breadth-first closure of a generator list, in a deterministic order.
std::vector<Permutation> close_generators(int m, const std::vector<Permutation>& gens,
                                          long order_cap) {
  std::set<Permutation> seen;
  std::vector<Permutation> frontier{Permutation::identity(m)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Permutation q = p * g;
        if (seen.insert(q).second) {
          if (static_cast<long>(seen.size()) > order_cap)
            throw std::runtime_error("group order exceeds cap of " + std::to_string(order_cap));
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

}  // namespace

GroupTable::GroupTable(const ActionSpec& action, long order_cap) : action_(action) {
  const int n = action.vertex_count();
  switch (action.kind()) {
    case ActionKind::GraphEdges:
    case ActionKind::DigraphArcs: {
      Int order = factorial(n);
      if (order > order_cap)
        throw std::runtime_error("group order " + order.get_str() + " exceeds cap of " +
                                 std::to_string(order_cap));
      vertex_elements_ = all_permutations(n);
      elements_.reserve(vertex_elements_.size());
      for (const auto& sigma : vertex_elements_)
        elements_.push_back(action.kind() == ActionKind::GraphEdges
                                ? induced_edge_permutation(sigma, n)
                                : induced_arc_permutation(sigma, n));
      break;
    }
    case ActionKind::Natural: {
      Int order = factorial(action.position_count());
      if (order > order_cap)
        throw std::runtime_error("group order " + order.get_str() + " exceeds cap of " +
                                 std::to_string(order_cap));
      elements_ = all_permutations(action.position_count());
      break;
    }
    case ActionKind::Explicit:
      elements_ = close_generators(action.position_count(), action.generators(), order_cap);
      break;
  }
  inverses_.reserve(elements_.size());
  for (const auto& p : elements_) inverses_.push_back(p.inverse());
}

const Permutation& GroupTable::vertex_element(long g) const {
  if (vertex_elements_.empty())
    throw std::logic_error("vertex permutations only exist for graph and digraph actions");
  return vertex_elements_[g];
}

}  // namespace invring
