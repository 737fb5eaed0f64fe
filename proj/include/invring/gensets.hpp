#ifndef INVRING_GENSETS_HPP
#define INVRING_GENSETS_HPP

/// Degree-by-degree subalgebra spans, minimal generating sets, secondary
/// invariants over a parameter system, and subalgebra membership tests.
///
/// All constructions work per homogeneous degree with exact row reduction.
/// The span of an algebra generated by homogeneous elements satisfies
/// A_d = sum over generators g of g * A_{d - deg g} (plus the degree-d
/// generators themselves), which drives every induction here.  Spans may be
/// built for the usual polynomial product or for the chain product; both
/// make the homogeneous components of the generated algebra well defined.

#include <map>
#include <memory>
#include <vector>

#include "invring/invariant.hpp"
#include "invring/rowbasis.hpp"
#include "invring/series.hpp"

namespace invring {

enum class ProductKind { Usual, Chain };

/// Multiplies under the selected product.
InvariantPolynomial product_of(ProductKind kind, const InvariantPolynomial& a,
                               const InvariantPolynomial& b);

/// Homogeneous components of the subalgebra generated by a fixed list of
/// homogeneous invariants (unit included), built and cached on demand.
class SubalgebraSpan {
 public:
  SubalgebraSpan(OrbitSpace* space, std::vector<InvariantPolynomial> generators,
                 ProductKind product = ProductKind::Usual);

  /// Row basis of the degree-d component of the generated algebra.
  const RowBasis& component(int d);

  const std::vector<InvariantPolynomial>& generators() const { return generators_; }

 private:
  OrbitSpace* space_;
  std::vector<InvariantPolynomial> generators_;  // homogeneous, positive degree
  ProductKind product_;
  std::vector<std::unique_ptr<RowBasis>> components_;
};

struct MembershipResult {
  bool member = false;
  /// Canonical residue modulo the subalgebra span in each degree of p;
  /// zero iff member.
  InvariantPolynomial residue;
};

/// Tests whether p lies in the algebra generated by gens (with 1).
MembershipResult subalgebra_membership(const InvariantPolynomial& p,
                                       const std::vector<InvariantPolynomial>& gens,
                                       ProductKind product = ProductKind::Usual);

struct GeneratorInfo {
  int id;      // canonical orbit id of the generating orbit sum
  int degree;  // its degree
};

struct MgsReport {
  std::vector<GeneratorInfo> generators;  // degree-ascending, enumeration order within degree
  std::vector<Int> new_generator_counts;  // s_d for d = 0..cap (s_0 = 0)
  int degree_cap = 0;
  int beta_observed = -1;  // largest degree contributing a generator, -1 if none
  bool complete = false;   // true when the cap meets a proven generation bound
  int proven_bound = -1;   // the bound used for the completeness claim, or -1
};

/// Degree bound up to which orbit sums of special monomials are known to
/// generate any permutation-invariant ring on m variables: max(m, C(m,2)).
int goebel_bound(int m);

/// Greedy minimal generating set by degree: scans orbit sums in enumeration
/// order, keeping those outside the algebra generated so far.  The count of
/// new generators per degree is independent of the scan order.  For the
/// usual product, completeness is certified when the cap reaches the proven
/// generation bound (goebel_bound by default, or `proven_bound` if
/// nonnegative); the chain product never claims completeness.
MgsReport minimal_generating_set(OrbitSpace& space, int degree_cap,
                                 ProductKind product = ProductKind::Usual,
                                 int proven_bound = -1);

struct SecondaryEntry {
  InvariantPolynomial poly;
  int degree = 0;
  bool reducible = false;  // product of lower-degree secondaries
};

struct SecondaryReport {
  DegreePolynomial expected;               // secondary counts per degree
  std::vector<SecondaryEntry> secondaries; // degree-ascending; the first is 1
  std::vector<int> removable_primaries;    // primaries inside the algebra of the others
  Int total = 0;
};

/// Secondary invariants over a homogeneous parameter system: per degree,
/// first spans the parameter ideal (its rank must be the component dimension
/// minus the predicted secondary count — the free-module consistency check),
/// then realizes as many secondaries as possible as products of
/// lower-degree irreducible ones, and fills the rest with orbit sums.
/// Finally each primary is tested for membership in the algebra generated by
/// the remaining primaries and the irreducible secondaries.  Throws if the
/// predicted counts are infeasible or the ideal rank falls short.
SecondaryReport algorithm1_secondaries(OrbitSpace& space,
                                       const std::vector<InvariantPolynomial>& primaries,
                                       const TruncatedSeries& hilbert,
                                       ProductKind product = ProductKind::Usual);

}  // namespace invring

#endif
