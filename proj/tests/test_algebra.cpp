// Row reduction, subalgebra spans, membership, minimal generating sets, and
// the secondary-invariant construction over a parameter system.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "invring/gensets.hpp"
#include "invring/hilbert.hpp"
#include "invring/invariant.hpp"
#include "invring/orbit_space.hpp"

using namespace invring;

namespace {

ExponentVector ev(const std::string& digits) {
  ExponentVector v(digits.size(), '\0');
  for (size_t i = 0; i < digits.size(); ++i) v[i] = static_cast<char>(digits[i] - '0');
  return v;
}

std::vector<int> generator_degrees(const MgsReport& report) {
  std::vector<int> out;
  for (const GeneratorInfo& g : report.generators) out.push_back(g.degree);
  return out;
}

std::vector<long> counts_as_long(const std::vector<Int>& v) {
  std::vector<long> out;
  for (const Int& c : v) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("row bases form canonical reduced echelon spans") {
  OrbitSpace space(ActionSpec::graph_edges(4));
  space.ensure_degree(2);
  InvariantPolynomial edge = InvariantPolynomial::orbit_sum(space, ev("100000"));
  InvariantPolynomial sq = invariant_mul(edge, edge);
  InvariantPolynomial adj = InvariantPolynomial::orbit_sum(space, ev("110000"));
  InvariantPolynomial dis = InvariantPolynomial::orbit_sum(space, ev("100001"));

  RowBasis basis(&space, 2);
  CHECK(basis.dimension() == 3);
  CHECK(basis.rank() == 0);
  CHECK(basis.insert(sq));
  CHECK_FALSE(basis.insert(sq));  // already in the span
  CHECK(basis.rank() == 1);
  CHECK(basis.contains(sq * Rat(7)));
  CHECK_FALSE(basis.contains(adj));
  CHECK(basis.insert(adj));
  CHECK(basis.insert(dis));
  CHECK(basis.complete());
  CHECK(basis.reduce(adj).is_zero());

  // The reduced rows do not depend on insertion order.
  RowBasis other(&space, 2);
  CHECK(other.insert(dis));
  CHECK(other.insert(sq));
  CHECK(other.insert(adj));
  auto rows_a = basis.rows();
  auto rows_b = other.rows();
  REQUIRE(rows_a.size() == rows_b.size());
  for (size_t i = 0; i < rows_a.size(); ++i) CHECK(rows_a[i] == rows_b[i]);

  // Residues are canonical: equal iff the difference lies in the span.
  RowBasis partial(&space, 2);
  partial.insert(sq);
  InvariantPolynomial r1 = partial.reduce(adj);
  InvariantPolynomial r2 = partial.reduce(adj + sq * Rat(3));
  CHECK(r1 == r2);
  CHECK_FALSE(r1.is_zero());

  CHECK_THROWS_AS(basis.insert(edge), std::invalid_argument);  // wrong degree
}

TEST_CASE("subalgebra spans grow as predicted by products") {
  OrbitSpace space(ActionSpec::graph_edges(4));
  InvariantPolynomial edge = InvariantPolynomial::orbit_sum(space, ev("100000"));
  SubalgebraSpan span(&space, {edge});
  CHECK(span.component(0).rank() == 1);  // the unit
  CHECK(span.component(1).rank() == 1);
  // Powers of e_1 alone give one dimension per degree.
  CHECK(span.component(2).rank() == 1);
  CHECK(span.component(3).rank() == 1);

  InvariantPolynomial vps2 = vertex_power_sum(space, 2);
  SubalgebraSpan two(&space, {edge, vps2.homogeneous_component(2)});
  CHECK(two.component(2).rank() == 2);
  CHECK(two.component(4).rank() == 3);  // e^4, e^2 q, q^2
}

TEST_CASE("subalgebra membership separates inside from outside") {
  OrbitSpace space(ActionSpec::graph_edges(4));
  InvariantPolynomial edge = InvariantPolynomial::orbit_sum(space, ev("100000"));
  InvariantPolynomial sq = invariant_mul(edge, edge);
  MembershipResult in = subalgebra_membership(sq, {edge});
  CHECK(in.member);
  CHECK(in.residue.is_zero());

  InvariantPolynomial adj = InvariantPolynomial::orbit_sum(space, ev("110000"));
  MembershipResult out = subalgebra_membership(adj, {edge});
  CHECK_FALSE(out.member);
  CHECK_FALSE(out.residue.is_zero());
  CHECK(out.residue.degree() == 2);

  // Mixed-degree polynomials reduce componentwise.
  MembershipResult mixed = subalgebra_membership(sq + edge, {edge});
  CHECK(mixed.member);
}

TEST_CASE("generation bound for orbit sums") {
  CHECK(goebel_bound(6) == 15);
  CHECK(goebel_bound(10) == 45);
  CHECK(goebel_bound(2) == 2);
  CHECK(goebel_bound(1) == 1);
}

TEST_CASE("minimal generating set of the four-vertex edge ring") {
  OrbitSpace space(ActionSpec::graph_edges(4));
  MgsReport report = minimal_generating_set(space, 15);
  CHECK(report.complete);
  CHECK(report.proven_bound == 15);
  CHECK(generator_degrees(report) == std::vector<int>{1, 2, 2, 3, 3, 3, 4, 4, 5});
  CHECK(counts_as_long(report.new_generator_counts) ==
        std::vector<long>{0, 1, 2, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(report.beta_observed == 5);

  // The reported generators really do generate: every component fills up.
  std::vector<InvariantPolynomial> gens;
  for (const GeneratorInfo& g : report.generators)
    gens.push_back(InvariantPolynomial::orbit_sum(space, space.rep(g.id)));
  SubalgebraSpan span(&space, gens);
  TruncatedSeries h = hilbert_series(space.action(), 8);
  for (int d = 1; d <= 8; ++d) CHECK(Int(span.component(d).rank()) == h[d]);
}

TEST_CASE("new generator counts are independent of the scan order") {
  // Scanning with a stricter cap reproduces the same counts per degree.
  OrbitSpace space(ActionSpec::graph_edges(4));
  MgsReport capped = minimal_generating_set(space, 6);
  MgsReport full = minimal_generating_set(space, 15);
  for (int d = 0; d <= 6; ++d)
    CHECK(capped.new_generator_counts[d] == full.new_generator_counts[d]);

  // Spans built from the generators listed in reverse order have the same
  // component ranks, so the per-degree counts cannot depend on ordering.
  std::vector<InvariantPolynomial> gens;
  for (const GeneratorInfo& g : full.generators)
    gens.push_back(InvariantPolynomial::orbit_sum(space, space.rep(g.id)));
  std::vector<InvariantPolynomial> reversed(gens.rbegin(), gens.rend());
  SubalgebraSpan forward(&space, gens);
  SubalgebraSpan backward(&space, reversed);
  for (int d = 1; d <= 6; ++d)
    CHECK(forward.component(d).rank() == backward.component(d).rank());
}

TEST_CASE("alternating group on four points has non-unimodal generator counts") {
  ActionSpec a4 = ActionSpec::explicit_group(4, {Permutation{std::vector<int>{1, 2, 0, 3}},
                                                 Permutation{std::vector<int>{1, 0, 3, 2}}});
  OrbitSpace space(a4);
  MgsReport report = minimal_generating_set(space, 6);
  CHECK(report.complete);
  CHECK(generator_degrees(report) == std::vector<int>{1, 2, 3, 4, 6});
  DegreePolynomial s{report.new_generator_counts};
  CHECK_FALSE(s.is_unimodal());  // 1,1,1,1,0,1 dips and rises again
}

TEST_CASE("secondary invariants over the elementary system on four vertices") {
  OrbitSpace space(ActionSpec::graph_edges(4));
  std::vector<InvariantPolynomial> primaries;
  for (int k = 1; k <= 6; ++k) primaries.push_back(elementary_symmetric(space, k));
  TruncatedSeries h = hilbert_series(space.action(), 21);
  SecondaryReport report = algorithm1_secondaries(space, primaries, h);

  CHECK(report.total == 30);
  CHECK(report.secondaries.size() == 30);
  CHECK(report.expected.coefficients() ==
        std::vector<Int>{1, 0, 1, 2, 2, 2, 4, 3, 3, 4, 2, 2, 2, 1, 0, 1});

  // Degrees listed ascending and matching the predicted counts.
  std::vector<Int> histogram(16, 0);
  int last = -1;
  for (const SecondaryEntry& entry : report.secondaries) {
    CHECK(entry.degree >= last);
    last = entry.degree;
    ++histogram[entry.degree];
    CHECK(entry.poly.is_homogeneous());
    CHECK(entry.poly.degree() == entry.degree);
  }
  CHECK(histogram == report.expected.coefficients());
  CHECK(report.secondaries.front().degree == 0);

  // e_6 (the top elementary symmetric) is redundant as a primary here.
  REQUIRE(report.removable_primaries.size() == 1);
  CHECK(report.removable_primaries[0] == 5);  // index into the primary list
}

TEST_CASE("secondary construction rejects a non-parameter system") {
  OrbitSpace space(ActionSpec::graph_edges(4));
  // Six copies of e_1 cannot be a parameter system; the expected counts are
  // already infeasible.
  std::vector<InvariantPolynomial> bad(6, elementary_symmetric(space, 1));
  TruncatedSeries h = hilbert_series(space.action(), 21);
  CHECK_THROWS(algorithm1_secondaries(space, bad, h));
}

TEST_CASE("secondary construction on the natural action is trivial") {
  OrbitSpace space(ActionSpec::natural(3));
  std::vector<InvariantPolynomial> primaries;
  for (int k = 1; k <= 3; ++k) primaries.push_back(elementary_symmetric(space, k));
  TruncatedSeries h = hilbert_series(space.action(), 6);
  SecondaryReport report = algorithm1_secondaries(space, primaries, h);
  CHECK(report.total == 1);
  CHECK(report.secondaries.size() == 1);
  CHECK(report.secondaries[0].degree == 0);
  CHECK(report.removable_primaries.empty());
}
