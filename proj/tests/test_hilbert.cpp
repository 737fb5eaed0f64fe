// Hilbert series, counting series, parameter-degree feasibility, and the
// dominance comparison that rules out generating-degree multisets.

#include <map>
#include <vector>

#include "doctest.h"
#include "invring/hilbert.hpp"
#include "invring/invariant.hpp"
#include "invring/orbit_space.hpp"

using namespace invring;

namespace {

std::vector<long> row(const TruncatedSeries& s) {
  std::vector<long> out;
  for (int d = 0; d <= s.bound(); ++d) out.push_back(to_integer(s[d]).get_si());
  return out;
}

}  // namespace

TEST_CASE("edge invariant ring dimensions") {
  CHECK(row(hilbert_series(ActionSpec::graph_edges(4), 6)) ==
        std::vector<long>{1, 1, 3, 6, 11, 18, 32});
  TruncatedSeries h5 = hilbert_series(ActionSpec::graph_edges(5), 10);
  CHECK(h5[2] == 3);
  CHECK(h5[10] == 974);
  CHECK(row(hilbert_series(ActionSpec::graph_edges(3), 4)) ==
        std::vector<long>{1, 1, 2, 3, 4});
}

TEST_CASE("natural action counts partitions with bounded part count") {
  TruncatedSeries h = hilbert_series(ActionSpec::natural(3), 6);
  // Partitions of d into at most 3 parts.
  CHECK(row(h) == std::vector<long>{1, 1, 2, 3, 4, 5, 7});
  CHECK(row(hilbert_series(ActionSpec::natural(1), 5)) ==
        std::vector<long>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("explicit trivial group counts all monomials") {
  TruncatedSeries h = hilbert_series(ActionSpec::explicit_group(2, {}), 5);
  CHECK(row(h) == std::vector<long>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("simple graph and digraph counting series") {
  CHECK(row(simple_graph_counts(3, 5)) == std::vector<long>{1, 1, 1, 1, 0, 0});
  TruncatedSeries g4 = simple_graph_counts(4, 6);
  CHECK(row(g4) == std::vector<long>{1, 1, 2, 3, 2, 1, 1});
  Int total = 0;
  for (int d = 0; d <= 6; ++d) total += g4[d];
  CHECK(total == 11);
  CHECK(row(simple_digraph_counts(2, 4)) == std::vector<long>{1, 2, 4, 2, 1});
}

TEST_CASE("connected multigraph counts match orbit enumeration") {
  auto counts = connected_multigraph_counts(4, 4);
  for (int k = 2; k <= 4; ++k) {
    OrbitSpace space(ActionSpec::graph_edges(k));
    space.ensure_degree(4);
    for (int d = 1; d <= 4; ++d) {
      long brute = 0;
      for (int id : space.canonical_ids(d)) {
        const ExponentVector& v = space.rep(id);
        // Connected and covering all k vertices.
        bool covers = true;
        for (int vert = 0; vert < k && covers; ++vert) {
          bool hit = false;
          for (int idx = 0; idx < pair_count(k); ++idx) {
            auto [i, j] = pair_unrank(idx, k);
            if (v[idx] > 0 && (i == vert || j == vert)) hit = true;
          }
          covers = hit;
        }
        if (covers && connected_component_vectors(space, v).size() == 1) ++brute;
      }
      CHECK(counts[k][d] == brute);
    }
  }
  CHECK(counts[2][1] == 1);
  // No connected multigraph has zero edges under this convention.
  CHECK(counts[0][0] == 0);
}

TEST_CASE("connected multigraphs by edge count") {
  auto by_edges = connected_counts_by_edges(6);
  std::vector<long> got;
  for (const Int& c : by_edges) got.push_back(c.get_si());
  CHECK(got == std::vector<long>{0, 1, 2, 5, 12, 33, 103});
}

TEST_CASE("connected degree multiset aggregates the table") {
  auto counts = connected_multigraph_counts(3, 4);
  auto multiset = connected_multigraph_degree_multiset(3, 4);
  for (int d = 1; d <= 4; ++d) {
    Int expected = 0;
    for (int k = 0; k <= 3; ++k) expected += counts[k][d];
    Int got = multiset.count(d) ? multiset.at(d) : Int(0);
    CHECK(got == expected);
  }
  CHECK(multiset.count(0) == 0);
}

TEST_CASE("limit series of the edge rings") {
  TruncatedSeries limit = limit_hilbert_series(6);
  CHECK(row(limit) == std::vector<long>{1, 1, 3, 8, 23, 66, 212});
  // Stability: n-vertex dimensions agree with the limit through degree n/2.
  TruncatedSeries h8 = hilbert_series(ActionSpec::graph_edges(8), 4);
  for (int d = 0; d <= 4; ++d) CHECK(h8[d] == limit[d]);
  TruncatedSeries h12 = hilbert_series(ActionSpec::graph_edges(12), 6);
  for (int d = 0; d <= 6; ++d) CHECK(h12[d] == limit[d]);
}

TEST_CASE("secondary degrees over the elementary parameter system") {
  TruncatedSeries h4 = hilbert_series(ActionSpec::graph_edges(4), 21);
  DegreePolynomial p4 = secondary_degrees(h4, {1, 2, 3, 4, 5, 6});
  std::vector<Int> expected = {1, 0, 1, 2, 2, 2, 4, 3, 3, 4, 2, 2, 2, 1, 0, 1};
  CHECK(p4.coefficients() == expected);
  CHECK(p4.is_palindromic());
  CHECK(p4.sum() == 30);
  CHECK(p4.degree() == 15);

  TruncatedSeries h3 = hilbert_series(ActionSpec::graph_edges(3), 6);
  DegreePolynomial p3 = secondary_degrees(h3, {1, 2, 3});
  CHECK(p3.coefficients() == std::vector<Int>{1});
}

TEST_CASE("infeasible parameter degrees are rejected") {
  TruncatedSeries h4 = hilbert_series(ActionSpec::graph_edges(4), 21);
  CHECK_THROWS_AS(secondary_degrees(h4, {1, 1, 1, 1, 1, 1}), InfeasibleDegreeSequence);
}

TEST_CASE("secondary statistics from degree products") {
  SecondaryStats s4 = secondary_stats({1, 2, 3, 4, 5, 6}, 24, 0);
  CHECK(s4.count == 30);
  CHECK(s4.top_degree == 15);
  CHECK(s4.degree_bound == 15);

  std::vector<int> d5;
  for (int d = 1; d <= 10; ++d) d5.push_back(d);
  SecondaryStats s5 = secondary_stats(d5, 120, 3);
  CHECK(s5.count == 30240);
  CHECK(s5.top_degree == 42);
  CHECK(s5.degree_bound == 42);

  SecondaryStats s3 = secondary_stats({1, 2, 3}, 6, 3);
  CHECK(s3.count == 1);
  CHECK(s3.top_degree == 0);

  // A degree product not divisible by the group order is inconsistent.
  CHECK_THROWS(secondary_stats({1, 2, 3}, 5, 0));
}

TEST_CASE("determinant-relative degree formula") {
  CHECK(mu_formula(4) == 0);
  CHECK(mu_formula(6) == 0);
  CHECK(mu_formula(5) == 3);
  CHECK(mu_formula(7) == 5);
  CHECK(mu_formula(9) == 6);
  CHECK(mu_formula(11) == 8);
  CHECK_THROWS(mu_formula(3));

  CHECK(min_edges_without_odd_automorphism(4) == 3);
  CHECK(min_edges_without_odd_automorphism(5) == 3);
  CHECK(min_edges_without_odd_automorphism(6) == 4);
  CHECK(min_edges_without_odd_automorphism(7) == 5);
}

TEST_CASE("conjectured parameter degrees") {
  CHECK(conjectured_sop_degrees(4) == std::vector<int>{1, 2, 2, 3, 3, 4});
  CHECK(conjectured_sop_degrees(5) == std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 5, 6});
  CHECK(static_cast<int>(conjectured_sop_degrees(6).size()) == 15);

  // Feasible for n = 4, with a numerator of degree 9 counting 6 secondaries.
  TruncatedSeries h4 = hilbert_series(ActionSpec::graph_edges(4), 15);
  DegreePolynomial p = secondary_degrees(h4, conjectured_sop_degrees(4));
  CHECK(p.sum() == 6);
  CHECK(p.degree() == 9);
}

TEST_CASE("dominance comparison against simple-graph generators") {
  // Five vertices: the simple-graph degree multiset fails at degree 4.
  TruncatedSeries h5 = hilbert_series(ActionSpec::graph_edges(5), 8);
  DominanceCertificate c5 = dominance_certificate(h5, simple_graph_degree_multiset(5, 8), 8);
  CHECK_FALSE(c5.dominated);
  CHECK(c5.first_failure == 4);
  CHECK(c5.bound_series[4] == 16);
  CHECK(h5[4] == 17);

  // Four vertices: dominated through the bound.
  TruncatedSeries h4 = hilbert_series(ActionSpec::graph_edges(4), 6);
  std::map<int, Int> m4 = simple_graph_degree_multiset(4, 6);
  CHECK(m4 == std::map<int, Int>{{1, 1}, {2, 2}, {3, 3}, {4, 2}, {5, 1}, {6, 1}});
  DominanceCertificate c4 = dominance_certificate(h4, m4, 6);
  CHECK(c4.dominated);
  CHECK(c4.first_failure == -1);
  CHECK(c4.bound_series[4] == 11);
  CHECK(c4.bound_series[5] == 18);
  CHECK(c4.bound_series[6] == 33);
}
