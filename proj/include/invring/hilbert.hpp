#ifndef INVRING_HILBERT_HPP
#define INVRING_HILBERT_HPP

/// Hilbert series of invariant rings of permutation actions, counting series
/// derived from them, and numeric consequences of a Hironaka decomposition.
///
/// For a permutation action, the Hilbert series is the average over the group
/// of 1 / prod (1 - z^(cycle length)); for the symmetric-group actions on
/// edges and arcs the average collapses to a sum over vertex cycle types with
/// the induced position cycle types computed combinatorially, so large n stay
/// cheap.  All series arithmetic is exact; integrality of the averaged
/// coefficients is asserted.

#include <map>

#include "invring/action.hpp"
#include "invring/series.hpp"

namespace invring {

/// Hilbert series of the invariant ring of the action, truncated at `bound`.
TruncatedSeries hilbert_series(const ActionSpec& action, int bound);

/// Generating series counting simple graphs on n vertices by edge count
/// (substituting 1 + z^i per induced cycle).
TruncatedSeries simple_graph_counts(int n, int bound);

/// Simple directed graphs on n vertices by arc count, loops allowed.
TruncatedSeries simple_digraph_counts(int n, int bound);

/// Multigraphs with exactly k non-isolated vertices, by edge count
/// (difference of the series for at most k and at most k-1 vertices).
TruncatedSeries multigraph_counts_exact_vertices(int k, int bound);

/// c[k][d] = number of connected multigraphs with k vertices (no isolated
/// ones) and d edges, for 0 <= k <= max_k, 0 <= d <= max_d, obtained by
/// inverting the Euler product over the exact-vertex counts.
std::vector<std::vector<Int>> connected_multigraph_counts(int max_k, int max_d);

/// Connected multigraphs with d edges, any vertex count (a component with d
/// edges and no isolated vertex has fewer than 2d vertices, so k <= 2d).
std::vector<Int> connected_counts_by_edges(int max_d);

/// Hilbert series of the edge invariant ring in the infinite-vertex limit:
/// prod_d (1 - z^d)^(-n_d) with n_d the connected count above.  Agrees with
/// hilbert_series(graph_edges(n)) exactly through degree floor(n/2).
TruncatedSeries limit_hilbert_series(int bound);

/// Raised when a degree sequence cannot be the degrees of a homogeneous
/// system of parameters for the given Hilbert series.
class InfeasibleDegreeSequence : public std::runtime_error {
 public:
  InfeasibleDegreeSequence(int degree, const std::string& reason)
      : std::runtime_error("infeasible degree sequence at degree " + std::to_string(degree) +
                          ": " + reason),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// Numerator polynomial H * prod (1 - z^d) over the candidate parameter
/// degrees: its coefficient at e counts secondary invariants of degree e.
/// The series bound must reach sum(sop_degrees).  Throws
/// InfeasibleDegreeSequence if any coefficient is negative or fractional, or
/// if a coefficient beyond sum(degrees) - count(degrees) is nonzero.
DegreePolynomial secondary_degrees(const TruncatedSeries& hilbert,
                                   const std::vector<int>& sop_degrees);

struct SecondaryStats {
  Int count;         // prod degrees / group order
  int top_degree;    // sum degrees - count of degrees - mu
  int degree_bound;  // max(largest parameter degree, top_degree)
};

/// Secondary-invariant statistics implied by a parameter degree sequence:
/// the count must come out integral (throws otherwise).
SecondaryStats secondary_stats(const std::vector<int>& sop_degrees, const Int& group_order,
                               int mu);

/// The degree of the minimal determinant-relative invariant for the edge
/// action: 0 for even n, ceil(3(n-1)/4) for odd n.  Requires n >= 4.
int mu_formula(int n);

/// Minimal edge count of a multigraph on n vertices admitting no vertex
/// automorphism of negative sign: ceil(3(n-1)/4).  Requires n >= 4.
int min_edges_without_odd_automorphism(int n);

/// Candidate parameter degrees {1, ..., n} together with {2, ..., C(n-1,2)};
/// the multiset has exactly C(n,2) entries.  Requires n >= 3.
std::vector<int> conjectured_sop_degrees(int n);

struct DominanceCertificate {
  bool dominated = true;
  int first_failure = -1;
  TruncatedSeries bound_series = TruncatedSeries(0);  // the comparison series F
};

/// Compares H against F = prod_d (1 - z^d)^(-mult(d)).  If a degree-d
/// coefficient of H exceeds F's, no generating set with the given degree
/// multiset can exist, and the first failing degree certifies that.
DominanceCertificate dominance_certificate(const TruncatedSeries& hilbert,
                                           const std::map<int, Int>& degree_multiplicities,
                                           int bound);

/// Degree multiset (degree -> count, degree >= 1) of simple graphs on n
/// vertices, up to `bound`.
std::map<int, Int> simple_graph_degree_multiset(int n, int bound);

/// Degree multiset of simple digraphs (loops allowed) on n vertices.
std::map<int, Int> simple_digraph_degree_multiset(int n, int bound);

/// Degree multiset of connected multigraphs with at most max_k vertices —
/// the generator degrees available to invariants supported on fewer than n
/// vertices.
std::map<int, Int> connected_multigraph_degree_multiset(int max_k, int bound);

}  // namespace invring

#endif
