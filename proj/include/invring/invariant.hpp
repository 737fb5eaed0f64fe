#ifndef INVRING_INVARIANT_HPP
#define INVRING_INVARIANT_HPP

/// Invariant polynomials in the orbit-sum basis.
///
/// For a (multi)graph g with exponent vector v, the orbit sum exps(g) is the
/// sum of the monomials x^w over the distinct vectors w in the orbit of v.
/// These sums, one per orbit, form a basis of the invariant ring; products of
/// orbit sums expand with nonnegative integer structure constants (counting
/// superpositions of the two graphs), which this module computes exactly by
/// expanding the smaller orbit against a fixed representative of the other
/// factor:
///
///   coefficient of exps(k) in exps(g) exps(h)
///     = #{m in orbit(g) : m + rep(h) in orbit(k)} * |orbit(h)| / |orbit(k)|.
///
/// The division is always exact; both that and integrality are asserted.
///
/// An InvariantPolynomial stores sorted (canonical id, coefficient) terms over
/// a caller-owned OrbitSpace, which must outlive every polynomial built on it.

#include <optional>
#include <vector>

#include "invring/orbit_space.hpp"

namespace invring {

/// Rational edge weights by position: the evaluation point for invariants.
using WeightedGraph = std::vector<Rat>;

class InvariantPolynomial {
 public:
  explicit InvariantPolynomial(OrbitSpace& space) : space_(&space) {}

  /// The orbit sum exps(g) of the orbit of v.
  static InvariantPolynomial orbit_sum(OrbitSpace& space, const ExponentVector& v);
  /// The constant polynomial c (a multiple of the empty-graph orbit sum).
  static InvariantPolynomial constant(OrbitSpace& space, const Rat& c);

  OrbitSpace& space() const { return *space_; }
  const std::vector<std::pair<int, Rat>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  Rat coefficient(int id) const;

  /// Largest degree among terms; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  InvariantPolynomial& operator+=(const InvariantPolynomial& o);
  InvariantPolynomial& operator-=(const InvariantPolynomial& o);
  InvariantPolynomial& operator*=(const Rat& c);
  InvariantPolynomial operator+(const InvariantPolynomial& o) const;
  InvariantPolynomial operator-(const InvariantPolynomial& o) const;
  InvariantPolynomial operator*(const Rat& c) const;
  bool operator==(const InvariantPolynomial& o) const;

  void add_term(int id, const Rat& c);

  /// Restriction to the terms of one degree.
  InvariantPolynomial homogeneous_component(int d) const;

 private:
  OrbitSpace* space_;
  std::vector<std::pair<int, Rat>> terms_;  // sorted by id, no zero coefficients
  friend InvariantPolynomial invariant_mul(const InvariantPolynomial&, const InvariantPolynomial&);
  friend InvariantPolynomial chain_mul(const InvariantPolynomial&, const InvariantPolynomial&);
};

/// Exact product in the orbit-sum basis.  Both factors must live on the same
/// space.  Not thread-safe against concurrent materialization: when called
/// from worker threads, the target degrees must have been materialized first.
InvariantPolynomial invariant_mul(const InvariantPolynomial& a, const InvariantPolynomial& b);

/// Value of p at the weighted graph w (substituting w_i for the variable at
/// position i).
Rat evaluate(const InvariantPolynomial& p, const WeightedGraph& w);

/// Elementary symmetric polynomial e_k of the position variables: the sum of
/// the orbit sums of all squarefree degree-k canonical vectors.
InvariantPolynomial elementary_symmetric(OrbitSpace& space, int k);

/// Power sum p_k = sum_i x_i^k of the position variables.
InvariantPolynomial power_sum(OrbitSpace& space, int k);

/// Values e_0..e_m of all elementary symmetric polynomials at the given
/// weights, via the coefficient recurrence for prod_i (1 + w_i t).
std::vector<Rat> elementary_symmetric_values(const std::vector<Rat>& weights);

/// For the graph action: sum_v X_v^k where X_v is the sum of the edge
/// variables incident to vertex v.
InvariantPolynomial vertex_power_sum(OrbitSpace& space, int k);

/// The orbit sums of all simple (squarefree) graphs with d edges.
std::vector<InvariantPolynomial> simple_graph_orbit_sums(OrbitSpace& space, int d);

struct SeparationResult {
  bool separated = false;
  int witness_index = -1;  // index into the invariant list
  Rat value_a, value_b;    // the differing values (witness only)
};

/// Evaluates each invariant on both weighted graphs; reports the first one
/// that takes different values, if any.
SeparationResult separates(const std::vector<InvariantPolynomial>& invariants,
                           const WeightedGraph& a, const WeightedGraph& b);

/// Restriction morphism between graph (or digraph) actions: terms whose
/// representative uses more than the target's vertex count vanish; the rest
/// are relabelled onto the target vertex set and recanonicalized.
InvariantPolynomial project(const InvariantPolynomial& p, OrbitSpace& target);

struct AutomorphismScan {
  long aut_order = 0;
  /// True iff some vertex permutation of negative sign fixes the graph.
  bool has_odd_automorphism = false;
};

/// Brute-force scan of the vertex permutations fixing v (graph and digraph
/// actions only).
AutomorphismScan automorphism_scan(OrbitSpace& space, const ExponentVector& v);

/// The connected components of v (vertices joined by positive positions),
/// each returned as a full-length exponent vector carrying only that
/// component's positions.  Components are ordered by smallest vertex.
std::vector<ExponentVector> connected_component_vectors(const OrbitSpace& space,
                                                        const ExponentVector& v);

/// A graph is quasi-connected when at most one of its connected components is
/// nontrivial (has a positive position).
bool is_quasi_connected(const OrbitSpace& space, const ExponentVector& v);

/// A formal polynomial in orbit sums of quasi-connected graphs: the sum of
/// coeff * prod_i exps(factor_ids[i]) over the listed terms.
struct QCTerm {
  Rat coeff;
  std::vector<int> factor_ids;  // canonical ids, sorted, repetition allowed
};
using QCExpression = std::vector<QCTerm>;

/// Expresses exps(g) exactly as a polynomial in orbit sums of quasi-connected
/// graphs by inverting the triangular system of component products.
/// Coefficients are exact rationals (repeated isomorphic components force
/// denominators: exps of two disjoint edges is half of exps(edge)^2 minus
/// correction terms).
QCExpression quasi_connected_decomposition(OrbitSpace& space, const ExponentVector& v);

/// Re-expands a quasi-connected expression through invariant_mul (round-trip
/// check for the decomposition).
InvariantPolynomial expand_qc(OrbitSpace& space, const QCExpression& expr);

}  // namespace invring

#endif
