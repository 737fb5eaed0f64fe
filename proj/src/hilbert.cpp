#include "invring/hilbert.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "invring/perm.hpp"

namespace invring {

namespace {

// Cycle type of the induced position permutation for one vertex class,
// computed combinatorially from the vertex cycle type.
std::map<int, int> position_cycle_type(const ActionSpec& action, const Partition& lambda) {
  switch (action.kind()) {
    case ActionKind::GraphEdges:
      return edge_cycle_type(lambda);
    case ActionKind::DigraphArcs:
      return arc_cycle_type(lambda);
    case ActionKind::Natural: {
      std::map<int, int> type;
      for (int p : lambda.parts) ++type[p];
      return type;
    }
    case ActionKind::Explicit:
      throw std::logic_error("position_cycle_type: no vertex classes for explicit groups");
  }
  throw std::logic_error("position_cycle_type: unknown action kind");
}

bool has_vertex_classes(const ActionSpec& action) {
  return action.kind() != ActionKind::Explicit;
}

int class_point_count(const ActionSpec& action) {
  return action.kind() == ActionKind::Natural ? action.position_count() : action.vertex_count();
}

// Average of per-element series over the group, where `factor` folds one
// cycle length/multiplicity pair into the running per-element series.
template <typename Fold>
TruncatedSeries averaged_series(const ActionSpec& action, int bound, Fold fold) {
  TruncatedSeries total(bound);
  Int order = 0;
  if (has_vertex_classes(action)) {
    int n = class_point_count(action);
    for (const ConjugacyClass& cls : conjugacy_classes(n)) {
      std::map<int, int> type = position_cycle_type(action, cls.cycle_type);
      TruncatedSeries term = TruncatedSeries::one(bound);
      for (const auto& [len, mult] : type) fold(term, len, mult);
      term *= Rat(cls.size);
      total += term;
      order += cls.size;
    }
  } else {
    GroupTable table(action);
    for (int g = 0; g < table.order(); ++g) {
      std::map<int, int> type;
      for (int len : table.element(g).cycle_type()) ++type[len];
      TruncatedSeries term = TruncatedSeries::one(bound);
      for (const auto& [len, mult] : type) fold(term, len, mult);
      total += term;
    }
    order = table.order();
  }
  total *= Rat(1) / Rat(order);
  if (!total.is_nonnegative_integral())
    throw std::logic_error("averaged series has a non-integral coefficient");
  return total;
}

}  // namespace

TruncatedSeries hilbert_series(const ActionSpec& action, int bound) {
  return averaged_series(action, bound, [](TruncatedSeries& s, int len, int mult) {
    for (int i = 0; i < mult; ++i) s.div_one_minus_pow(len);
  });
}

TruncatedSeries simple_graph_counts(int n, int bound) {
  return averaged_series(ActionSpec::graph_edges(n), bound,
                         [](TruncatedSeries& s, int len, int mult) {
                           for (int i = 0; i < mult; ++i) s.mul_one_plus_pow(len);
                         });
}

TruncatedSeries simple_digraph_counts(int n, int bound) {
  return averaged_series(ActionSpec::digraph_arcs(n), bound,
                         [](TruncatedSeries& s, int len, int mult) {
                           for (int i = 0; i < mult; ++i) s.mul_one_plus_pow(len);
                         });
}

TruncatedSeries multigraph_counts_exact_vertices(int k, int bound) {
  if (k < 0) throw std::invalid_argument("multigraph_counts_exact_vertices: negative k");
  if (k == 0) {
    TruncatedSeries none = TruncatedSeries::one(bound);
    return none;  // only the empty multigraph
  }
  if (k == 1) return TruncatedSeries(bound);  // a lone vertex would be isolated
  TruncatedSeries with_k = hilbert_series(ActionSpec::graph_edges(k), bound);
  TruncatedSeries with_fewer = k == 2 ? TruncatedSeries::one(bound)
                                      : hilbert_series(ActionSpec::graph_edges(k - 1), bound);
  TruncatedSeries diff = series_sub(with_k, with_fewer);
  diff[0] = 0;  // the empty multigraph has zero vertices, not k
  return diff;
}

std::vector<std::vector<Int>> connected_multigraph_counts(int max_k, int max_d) {
  if (max_k < 0 || max_d < 0)
    throw std::invalid_argument("connected_multigraph_counts: negative bound");
  int rows = max_k + 1, cols = max_d + 1;
  // all[k][d]: multigraphs with exactly k non-isolated vertices and d edges.
  std::vector<std::vector<Int>> all(rows, std::vector<Int>(cols, 0));
  for (int k = 0; k <= max_k; ++k) {
    TruncatedSeries row = multigraph_counts_exact_vertices(k, max_d);
    for (int d = 0; d <= max_d; ++d) all[k][d] = to_integer(row[d]);
  }

  // Invert 1 + sum all[k][d] y^k z^d = prod (1 - y^k z^d)^(-c[k][d]).
  // A factor at (k', d') only reaches cell (k, d) when k' < k (every factor
  // has k' >= 2, so two factors already overshoot in the vertex count), so
  // sweeping cells in lexicographic order keeps the partial product correct.
  std::vector<std::vector<Int>> product(rows, std::vector<Int>(cols, 0));
  product[0][0] = 1;
  std::vector<std::vector<Int>> connected(rows, std::vector<Int>(cols, 0));
  for (int k = 2; k <= max_k; ++k) {
    for (int d = 1; d <= max_d; ++d) {
      Int c = all[k][d] - product[k][d];
      if (c < 0) throw std::logic_error("connected_multigraph_counts: negative count");
      connected[k][d] = c;
      if (c == 0) continue;
      // Fold (1 - y^k z^d)^(-c) into the partial product.
      std::vector<std::vector<Int>> next(rows, std::vector<Int>(cols, 0));
      for (int a = 0; a < rows; ++a) {
        for (int b = 0; b < cols; ++b) {
          if (product[a][b] == 0) continue;
          for (int j = 0; a + j * k < rows && b + j * d < cols; ++j) {
            next[a + j * k][b + j * d] += product[a][b] * binomial(c - 1 + j, j);
          }
        }
      }
      product = std::move(next);
    }
  }
  return connected;
}

std::vector<Int> connected_counts_by_edges(int max_d) {
  std::vector<std::vector<Int>> c = connected_multigraph_counts(2 * max_d, max_d);
  std::vector<Int> totals(max_d + 1, 0);
  for (const auto& row : c)
    for (int d = 0; d <= max_d; ++d) totals[d] += row[d];
  return totals;
}

TruncatedSeries limit_hilbert_series(int bound) {
  std::vector<Int> n_d = connected_counts_by_edges(bound);
  TruncatedSeries s = TruncatedSeries::one(bound);
  for (int d = 1; d <= bound; ++d) {
    if (n_d[d] == 0) continue;
    s = series_mul(s, geometric_factor(d, n_d[d], bound));
  }
  return s;
}

DegreePolynomial secondary_degrees(const TruncatedSeries& hilbert,
                                   const std::vector<int>& sop_degrees) {
  int degree_sum = 0;
  for (int d : sop_degrees) {
    if (d <= 0) throw std::invalid_argument("secondary_degrees: parameter degree must be positive");
    degree_sum += d;
  }
  if (hilbert.bound() < degree_sum)
    throw std::invalid_argument("secondary_degrees: series truncated below the degree sum");
  TruncatedSeries numerator = hilbert;
  for (int d : sop_degrees) numerator.mul_one_minus_pow(d);

  int top = degree_sum - static_cast<int>(sop_degrees.size());
  std::vector<Int> coeffs;
  for (int e = 0; e <= numerator.bound(); ++e) {
    const Rat& c = numerator[e];
    if (!is_integer(c)) throw InfeasibleDegreeSequence(e, "fractional coefficient");
    Int value = to_integer(c);
    if (value < 0) throw InfeasibleDegreeSequence(e, "negative coefficient");
    if (e > top && value != 0)
      throw InfeasibleDegreeSequence(e, "nonzero coefficient beyond the expected top degree");
    if (e <= top) coeffs.push_back(value);
  }
  return DegreePolynomial(std::move(coeffs));
}

SecondaryStats secondary_stats(const std::vector<int>& sop_degrees, const Int& group_order,
                               int mu) {
  Int degree_product = 1;
  int degree_sum = 0;
  int max_degree = 0;
  for (int d : sop_degrees) {
    if (d <= 0) throw std::invalid_argument("secondary_stats: parameter degree must be positive");
    degree_product *= d;
    degree_sum += d;
    max_degree = std::max(max_degree, d);
  }
  if (group_order <= 0) throw std::invalid_argument("secondary_stats: group order must be positive");
  if (degree_product % group_order != 0)
    throw std::invalid_argument("secondary_stats: degree product not divisible by the group order");
  SecondaryStats stats;
  stats.count = degree_product / group_order;
  stats.top_degree = degree_sum - static_cast<int>(sop_degrees.size()) - mu;
  stats.degree_bound = std::max(max_degree, stats.top_degree);
  return stats;
}

int mu_formula(int n) {
  if (n < 4) throw std::invalid_argument("mu_formula: requires n >= 4");
  if (n % 2 == 0) return 0;
  return (3 * (n - 1) + 3) / 4;
}

int min_edges_without_odd_automorphism(int n) {
  if (n < 4)
    throw std::invalid_argument("min_edges_without_odd_automorphism: requires n >= 4");
  return (3 * (n - 1) + 3) / 4;
}

std::vector<int> conjectured_sop_degrees(int n) {
  if (n < 3) throw std::invalid_argument("conjectured_sop_degrees: requires n >= 3");
  std::vector<int> degrees;
  for (int d = 1; d <= n; ++d) degrees.push_back(d);
  int upper = (n - 1) * (n - 2) / 2;
  for (int d = 2; d <= upper; ++d) degrees.push_back(d);
  std::sort(degrees.begin(), degrees.end());
  assert(static_cast<int>(degrees.size()) == n * (n - 1) / 2);
  return degrees;
}

DominanceCertificate dominance_certificate(const TruncatedSeries& hilbert,
                                           const std::map<int, Int>& degree_multiplicities,
                                           int bound) {
  if (hilbert.bound() < bound)
    throw std::invalid_argument("dominance_certificate: series truncated below the bound");
  TruncatedSeries comparison = TruncatedSeries::one(bound);
  for (const auto& [degree, count] : degree_multiplicities) {
    if (degree <= 0)
      throw std::invalid_argument("dominance_certificate: generator degree must be positive");
    if (count < 0) throw std::invalid_argument("dominance_certificate: negative multiplicity");
    if (count == 0 || degree > bound) continue;
    comparison = series_mul(comparison, geometric_factor(degree, count, bound));
  }
  TruncatedSeries truncated(bound);
  for (int d = 0; d <= bound; ++d) truncated[d] = hilbert[d];
  DominanceVerdict verdict = dominates(truncated, comparison);
  DominanceCertificate cert;
  cert.dominated = verdict.dominated;
  cert.first_failure = verdict.first_failure;
  cert.bound_series = std::move(comparison);
  return cert;
}

namespace {

std::map<int, Int> series_to_multiset(const TruncatedSeries& counts) {
  std::map<int, Int> multiset;
  for (int d = 1; d <= counts.bound(); ++d) {
    Int c = to_integer(counts[d]);
    if (c < 0) throw std::logic_error("negative count in degree multiset");
    if (c > 0) multiset[d] = c;
  }
  return multiset;
}

}  // namespace

std::map<int, Int> simple_graph_degree_multiset(int n, int bound) {
  return series_to_multiset(simple_graph_counts(n, bound));
}

std::map<int, Int> simple_digraph_degree_multiset(int n, int bound) {
  return series_to_multiset(simple_digraph_counts(n, bound));
}

std::map<int, Int> connected_multigraph_degree_multiset(int max_k, int bound) {
  std::vector<std::vector<Int>> c = connected_multigraph_counts(max_k, bound);
  std::map<int, Int> multiset;
  for (const auto& row : c) {
    for (int d = 1; d <= bound; ++d) {
      if (row[d] > 0) multiset[d] += row[d];
    }
  }
  return multiset;
}

}  // namespace invring
