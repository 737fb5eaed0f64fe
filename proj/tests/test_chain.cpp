// Multichain layers, shapes, the chain product, and transfer of chain
// generators to the usual product.

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "invring/chain.hpp"
#include "invring/gensets.hpp"
#include "invring/invariant.hpp"
#include "invring/orbit_space.hpp"

using namespace invring;

namespace {

ExponentVector ev(const std::string& digits) {
  ExponentVector v(digits.size(), '\0');
  for (size_t i = 0; i < digits.size(); ++i) v[i] = static_cast<char>(digits[i] - '0');
  return v;
}

}  // namespace

TEST_CASE("layer decomposition and shapes") {
  MultiChain chain = layers(ev("210100"));
  REQUIRE(chain.layers.size() == 2);
  CHECK(shape(ev("210100")) == Shape{3, 1});
  CHECK(shape(ev("221100")) == Shape{4, 2});  // conjugate of (2,2,1,1)
  CHECK(shape(ev("100000")) == Shape{1});
  CHECK(shape(ev("000000")) == Shape{});
}

TEST_CASE("mergeability compares all layers") {
  CHECK(mergeable(ev("100000"), ev("200000")));   // same support
  CHECK_FALSE(mergeable(ev("100000"), ev("010000")));  // incomparable singletons
  CHECK(mergeable(ev("100000"), ev("110100")));   // edge inside triangle
  CHECK_FALSE(mergeable(ev("110100"), ev("000001")));  // triangle vs disjoint edge
  CHECK(mergeable(ev("000000"), ev("110100")));   // empty merges with anything
  CHECK(mergeable(ev("110000"), ev("210000")));   // nested layer stacks
  CHECK(mergeable(ev("210000"), ev("120000")) ==
        mergeable(ev("120000"), ev("210000")));   // symmetry
}

TEST_CASE("shape merging and dominance") {
  CHECK(merge_shapes(Shape{3, 1}, Shape{2}) == Shape{3, 2, 1});
  CHECK(merge_shapes(Shape{}, Shape{2, 2}) == Shape{2, 2});
  CHECK(shape_dominates(Shape{3, 1}, Shape{2, 2}));
  CHECK_FALSE(shape_dominates(Shape{2, 2}, Shape{3, 1}));
  CHECK(shape_dominates(Shape{2, 1}, Shape{2, 1}));
  CHECK_THROWS(shape_dominates(Shape{2}, Shape{1}));
}

TEST_CASE("chain product of two edge sums keeps only the doubled edge") {
  OrbitSpace space(ActionSpec::graph_edges(4));
  InvariantPolynomial edge = InvariantPolynomial::orbit_sum(space, ev("100000"));
  InvariantPolynomial star = chain_mul(edge, edge);
  CHECK(star.term_count() == 1);
  CHECK(star.coefficient(space.id_of(space.canonical_form(ev("200000")))) == 1);
}

TEST_CASE("chain powers of the edge sum collapse to power sums") {
  OrbitSpace space(ActionSpec::graph_edges(4));
  InvariantPolynomial edge = InvariantPolynomial::orbit_sum(space, ev("100000"));
  InvariantPolynomial acc = edge;
  for (int k = 2; k <= 4; ++k) {
    acc = chain_mul(acc, edge);
    CHECK(acc == power_sum(space, k));
  }
}

TEST_CASE("chain product is commutative, associative, and unital") {
  OrbitSpace space(ActionSpec::graph_edges(4));
  space.ensure_degree(6);
  InvariantPolynomial e = InvariantPolynomial::orbit_sum(space, ev("100000"));
  InvariantPolynomial a = InvariantPolynomial::orbit_sum(space, ev("110000"));
  InvariantPolynomial t = InvariantPolynomial::orbit_sum(space, ev("110100"));
  CHECK(chain_mul(e, a) == chain_mul(a, e));
  CHECK(chain_mul(chain_mul(e, a), t) == chain_mul(e, chain_mul(a, t)));
  InvariantPolynomial unit = InvariantPolynomial::constant(space, 1);
  CHECK(chain_mul(unit, t) == t);
  CHECK(chain_mul(e, a + t) == chain_mul(e, a) + chain_mul(e, t));
}

TEST_CASE("chain product is the extreme-shape part of the usual product") {
  OrbitSpace space(ActionSpec::graph_edges(4));
  space.ensure_degree(5);
  std::vector<int> ids;
  for (int d = 1; d <= 2; ++d)
    for (int id : space.canonical_ids(d)) ids.push_back(id);
  for (int id : space.canonical_ids(3)) ids.push_back(id);
  for (int a : ids) {
    for (int b : ids) {
      if (space.degree_of_id(a) + space.degree_of_id(b) > 5) continue;
      InvariantPolynomial pa = InvariantPolynomial::orbit_sum(space, space.rep(a));
      InvariantPolynomial pb = InvariantPolynomial::orbit_sum(space, space.rep(b));
      Shape merged = merge_shapes(shape(space.rep(a)), shape(space.rep(b)));
      InvariantPolynomial usual = invariant_mul(pa, pb);
      InvariantPolynomial chained = chain_mul(pa, pb);

      // Every chain term sits exactly on the merged shape, with positive
      // integer coefficients.
      for (const auto& [k, coeff] : chained.terms()) {
        CHECK(shape(space.rep(k)) == merged);
        CHECK(coeff.get_den() == 1);
        CHECK(coeff > 0);
      }
      // The remaining terms of the usual product live on strictly greater
      // shapes, so the chain product is the merged-shape component.
      InvariantPolynomial rest = usual - chained;
      for (const auto& [k, coeff] : rest.terms()) {
        Shape s = shape(space.rep(k));
        CHECK_FALSE(s == merged);
        CHECK(shape_dominates(s, merged));
      }
    }
  }
}

TEST_CASE("chain generators transfer to the usual product") {
  ChainTransferReport r3 = chain_transfer_check(3, 6);
  CHECK(r3.chain_generator_degrees == std::vector<int>{1, 2, 3});
  CHECK(r3.generates_usual);
  CHECK(r3.first_failure_degree == -1);

  ChainTransferReport r4 = chain_transfer_check(4, 6);
  CHECK(r4.generates_usual);
  CHECK(r4.first_failure_degree == -1);
  CHECK(std::is_sorted(r4.chain_generator_degrees.begin(),
                       r4.chain_generator_degrees.end()));
  CHECK(r4.chain_generator_degrees.front() == 1);
}

TEST_CASE("chain spans through the subalgebra machinery") {
  OrbitSpace space(ActionSpec::graph_edges(3));
  InvariantPolynomial edge = InvariantPolynomial::orbit_sum(space, ev("100"));
  // Under the chain product, powers of the edge sum only reach the power
  // sums: one dimension per degree.
  SubalgebraSpan span(&space, {edge}, ProductKind::Chain);
  for (int d = 1; d <= 4; ++d) CHECK(span.component(d).rank() == 1);
  CHECK(product_of(ProductKind::Chain, edge, edge) == chain_mul(edge, edge));
  CHECK(product_of(ProductKind::Usual, edge, edge) == invariant_mul(edge, edge));
}
