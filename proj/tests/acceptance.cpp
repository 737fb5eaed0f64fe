// Acceptance drive: one pass/fail line per top-level claim the library is
// expected to reproduce.  Exit code 0 when every claim passes.
//
// One claim is expected to fail on mathematical grounds: the published count
// of 57 generators of degree <= 9 for the five-vertex edge ring is not
// reproduced by exact computation, which finds 56 (the per-degree counts are
// verified independently).  With --expect-known-failures the exit code is 0
// exactly when all other claims pass and that one fails in the verified way,
// so regression runs stay sensitive in both directions.

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "invring/chain.hpp"
#include "invring/gensets.hpp"
#include "invring/hilbert.hpp"
#include "invring/invariant.hpp"
#include "invring/orbit_space.hpp"
#include "invring/parallel.hpp"
#include "invring/studies.hpp"

using namespace invring;

namespace {

struct Outcome {
  bool passed = false;
  bool known_failure_shape = false;  // failed exactly in the documented way
  std::string detail;
};

ExponentVector ev(const std::string& digits) {
  ExponentVector v(digits.size(), '\0');
  for (size_t i = 0; i < digits.size(); ++i) v[i] = static_cast<char>(digits[i] - '0');
  return v;
}

std::string join_counts(const std::vector<Int>& counts, int from, int to) {
  std::string out;
  for (int d = from; d <= to && d < static_cast<int>(counts.size()); ++d) {
    if (!out.empty()) out += ",";
    out += counts[d].get_str();
  }
  return out;
}

Outcome from_verdict(const Verdict& v, const std::string& detail) {
  Outcome o;
  o.passed = v.passed;
  o.detail = detail;
  return o;
}

// 1: nine generators for the four-vertex edge ring.
Outcome check_edge_ring_four(bool slow) {
  Verdict v = verify_aslaksen(slow);
  std::string detail = "n=4 edge ring: 9 generators, degrees {1,2,2,3,3,3,4,4,5}, beta = 5";
  if (slow) detail += ", completeness certified at the proven bound";
  return from_verdict(v, detail);
}

// 2: the published degree-9 generator count for five vertices.
Outcome check_edge_ring_five(bool slow) {
  Outcome o;
  OrbitSpace space(ActionSpec::graph_edges(5));
  int cap = slow ? 10 : 9;
  MgsReport report = minimal_generating_set(space, cap);
  long found = 0;
  for (const GeneratorInfo& g : report.generators)
    if (g.degree <= 9) ++found;

  const std::vector<Int> expected_s = {1, 2, 4, 7, 10, 13, 13, 4, 2};
  bool histogram_ok =
      report.new_generator_counts.size() >= 10 &&
      std::equal(expected_s.begin(), expected_s.end(), report.new_generator_counts.begin() + 1);
  bool s10_ok = !slow || (report.new_generator_counts.size() >= 11 &&
                          report.new_generator_counts[10] == 0);

  o.passed = found == 57 && histogram_ok && s10_ok;
  o.known_failure_shape = found == 56 && histogram_ok && s10_ok;
  o.detail = "n=5 edge ring through degree 9: published count 57, exact scan finds " +
             std::to_string(found) + " (per-degree " +
             join_counts(report.new_generator_counts, 1, 9) + ")";
  if (slow) o.detail += ", s_10 = " + report.new_generator_counts[10].get_str();
  return o;
}

// 3: the degree-10 component dimension for five vertices, two ways.
Outcome check_dimension_974() {
  Outcome o;
  TruncatedSeries h = hilbert_series(ActionSpec::graph_edges(5), 10);
  OrbitSpace space(ActionSpec::graph_edges(5));
  long orbits = static_cast<long>(space.canonical_ids(10).size());
  o.passed = h[10] == 974 && orbits == 974;
  o.detail = "n=5 degree-10 dimension: series coefficient " + h[10].get_str() +
             ", canonical orbits " + std::to_string(orbits) + ", expected 974 by both paths";
  return o;
}

// 4: simple-graph generator degrees fail dominance at degree 4 for n = 5..8.
Outcome check_simple_dominance() {
  return from_verdict(verify_simple_not_generating(),
                      "simple-graph degrees fail dominance at degree 4 for n = 5,6,7,8 "
                      "(n = 4 control dominated)");
}

// 5: few-vertex connected degrees fail dominance at n = 11.
Outcome check_pouzet(bool slow) {
  Verdict v = verify_pouzet_disproof(slow);
  std::string detail =
      "connected multigraphs on fewer vertices fail dominance at n = 11 by degree 24";
  if (slow) detail += " (and at n = 12)";
  return from_verdict(v, detail);
}

// 6: digraph witnesses and the loopless series failure at degree 5.
Outcome check_digraph_disproof() {
  return from_verdict(verify_grigoriev(),
                      "digraph n=3: both cubic witnesses lie outside the simple-digraph "
                      "subalgebra; loopless arc series fails dominance at degree 5");
}

// 7: secondary counts and Algorithm-style construction on four vertices.
Outcome check_secondary_counts() {
  Outcome o;
  SecondaryStats s4 = secondary_stats({1, 2, 3, 4, 5, 6}, 24, 0);
  std::vector<int> d5;
  for (int d = 1; d <= 10; ++d) d5.push_back(d);
  SecondaryStats s5 = secondary_stats(d5, 120, 3);

  OrbitSpace space(ActionSpec::graph_edges(4));
  std::vector<InvariantPolynomial> primaries;
  for (int k = 1; k <= 6; ++k) primaries.push_back(elementary_symmetric(space, k));
  TruncatedSeries h = hilbert_series(space.action(), 21);
  const std::vector<Int> expected_row = {1, 0, 1, 2, 2, 2, 4, 3, 3, 4, 2, 2, 2, 1, 0, 1};
  bool ok = s4.count == 30 && s4.top_degree == 15 && s5.count == 30240 && s5.top_degree == 42;
  bool realized_ok = false;
  try {
    SecondaryReport report = algorithm1_secondaries(space, primaries, h);
    std::vector<Int> realized(16, 0);
    for (const SecondaryEntry& e : report.secondaries) ++realized[e.degree];
    realized_ok = report.total == 30 && report.secondaries.size() == 30 &&
                  report.expected.coefficients() == expected_row && realized == expected_row;
  } catch (const std::exception&) {
    realized_ok = false;
  }
  o.passed = ok && realized_ok;
  o.detail = "n=4 elementary parameters: t = 30 secondaries with top degree 15, realized "
             "term by term; n=5 analogue predicts top degree 42";
  return o;
}

// 8: minimal edges without an odd automorphism match the closed formula.
Outcome check_mu(int threads) {
  return from_verdict(verify_mu(threads),
                      "brute-force minimal edge counts match ceil(3(n-1)/4) for n = 4..7");
}

// 9: the conjectured parameter degrees stay feasible for n <= 10.
Outcome check_conjectured_degrees() {
  return from_verdict(verify_conjectured_degrees(),
                      "candidate degrees {1..n} + {2..C(n-1,2)} give nonnegative integral "
                      "secondary counts for n = 3..10");
}

// 10: the infinite-vertex limit matches each finite ring through floor(n/2).
Outcome check_limit() {
  return from_verdict(verify_limit(),
                      "limit series 1,1,3,8,23,66,212 matches the n-vertex series through "
                      "degree floor(n/2) for n <= 10, diverging immediately after");
}

// 11: palindromic secondary-degree polynomials for even n.
Outcome check_palindromy() {
  return from_verdict(verify_gorenstein(),
                      "secondary-degree polynomials for n = 4 and n = 6 are palindromic");
}

// 12: the chain product and transfer of its generators.
Outcome check_chain() {
  Outcome o;
  OrbitSpace space(ActionSpec::graph_edges(4));
  InvariantPolynomial edge = InvariantPolynomial::orbit_sum(space, ev("100000"));
  InvariantPolynomial doubled = InvariantPolynomial::orbit_sum(space, ev("200000"));
  bool square_ok = chain_mul(edge, edge) == doubled;

  bool powers_ok = true;
  InvariantPolynomial acc = edge;
  for (int k = 2; k <= 5; ++k) {
    acc = chain_mul(acc, edge);
    powers_ok = powers_ok && acc == power_sum(space, k);
  }

  ChainTransferReport r3 = chain_transfer_check(3, 6);
  ChainTransferReport r4 = chain_transfer_check(4, 6);
  bool transfer_ok = r3.generates_usual && r4.generates_usual;

  o.passed = square_ok && powers_ok && transfer_ok;
  o.detail = "chain product: edge * edge = doubled edge, chain powers of e_1 collapse to "
             "power sums, chain generators for n = 3,4 generate under the usual product";
  return o;
}

// 13: value-equal but non-isomorphic pairs for the invariant field.
Outcome check_field_pairs() {
  return from_verdict(verify_field_counterexamples(),
                      "five-vertex graph pair and digraph pair agree on e_1..e_10 and the "
                      "pair invariant yet are non-isomorphic");
}

// 14: property families tying independent computations together.
Outcome check_properties() {
  Outcome o;

  // (a) Series coefficients count canonical orbits.
  bool counts_ok = true;
  {
    std::vector<ActionSpec> actions = {
        ActionSpec::graph_edges(3),  ActionSpec::graph_edges(4), ActionSpec::graph_edges(5),
        ActionSpec::digraph_arcs(2), ActionSpec::digraph_arcs(3), ActionSpec::natural(4),
        ActionSpec::explicit_group(4, {Permutation{std::vector<int>{1, 2, 0, 3}},
                                       Permutation{std::vector<int>{1, 0, 3, 2}}})};
    for (const ActionSpec& action : actions) {
      OrbitSpace space(action);
      TruncatedSeries h = hilbert_series(action, 5);
      for (int d = 0; d <= 5; ++d) {
        if (Int(static_cast<long>(space.canonical_ids(d).size())) != h[d]) counts_ok = false;
      }
    }
  }

  // (b) Structure constants against the monomial-level expansion.
  bool products_ok = true;
  {
    std::vector<ActionSpec> actions = {ActionSpec::graph_edges(3), ActionSpec::graph_edges(4),
                                       ActionSpec::digraph_arcs(2)};
    for (const ActionSpec& action : actions) {
      OrbitSpace space(action);
      space.ensure_degree(4);
      std::vector<int> ids;
      for (int d = 1; d <= 3; ++d)
        for (int id : space.canonical_ids(d)) ids.push_back(id);
      for (int a : ids) {
        for (int b : ids) {
          if (space.degree_of_id(a) + space.degree_of_id(b) > 4) continue;
          InvariantPolynomial product =
              invariant_mul(InvariantPolynomial::orbit_sum(space, space.rep(a)),
                            InvariantPolynomial::orbit_sum(space, space.rep(b)));
          std::map<int, long> expected;
          for (const ExponentVector& m1 : space.members(a)) {
            for (const ExponentVector& m2 : space.members(b)) {
              ExponentVector sum = m1;
              for (size_t i = 0; i < sum.size(); ++i)
                sum[i] = static_cast<char>(sum[i] + m2[i]);
              ++expected[space.id_of(space.canonical_form(sum))];
            }
          }
          if (product.term_count() != static_cast<int>(expected.size())) products_ok = false;
          for (const auto& [id, coeff] : product.terms()) {
            if (Rat(expected[id]) != coeff * Rat(space.orbit_size(id))) products_ok = false;
          }
        }
      }
    }
  }

  // (c) New-generator counts do not depend on the enumeration order.
  bool order_ok = true;
  {
    OrbitSpace space(ActionSpec::graph_edges(4));
    MgsReport capped = minimal_generating_set(space, 6);
    MgsReport full = minimal_generating_set(space, 15);
    for (int d = 0; d <= 6; ++d) {
      if (capped.new_generator_counts[d] != full.new_generator_counts[d]) order_ok = false;
    }
    std::vector<InvariantPolynomial> gens;
    for (const GeneratorInfo& g : full.generators)
      gens.push_back(InvariantPolynomial::orbit_sum(space, space.rep(g.id)));
    std::vector<InvariantPolynomial> reversed(gens.rbegin(), gens.rend());
    SubalgebraSpan forward(&space, gens);
    SubalgebraSpan backward(&space, reversed);
    for (int d = 1; d <= 6; ++d) {
      if (forward.component(d).rank() != backward.component(d).rank()) order_ok = false;
    }
  }

  // (d) Orbit-sum evaluation counts subgraph embeddings.
  bool eval_ok = true;
  for (int n : {4, 5}) {
    OrbitSpace space(ActionSpec::graph_edges(n));
    int m = pair_count(n);
    space.ensure_degree(3);
    for (int d = 1; d <= 3; ++d) {
      for (const InvariantPolynomial& h : simple_graph_orbit_sums(space, d)) {
        const ExponentVector& pattern = space.rep(h.terms().front().first);
        for (int mask = 0; mask < (1 << m); ++mask) {
          WeightedGraph w(m, Rat(0));
          long count = 0;
          for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) w[i] = 1;
          for (int sub = mask;; sub = (sub - 1) & mask) {
            if (__builtin_popcount(sub) == d) {
              ExponentVector s(m, '\0');
              for (int i = 0; i < m; ++i)
                if (sub & (1 << i)) s[i] = 1;
              if (space.canonical_form(s) == pattern) ++count;
            }
            if (sub == 0) break;
          }
          if (evaluate(h, w) != count) eval_ok = false;
        }
      }
    }
  }

  o.passed = counts_ok && products_ok && order_ok && eval_ok;
  o.detail = "property families: orbit counts vs series, product structure constants vs "
             "monomial oracle, order-independent generator counts, evaluation vs subgraph "
             "counts";
  if (!o.passed) {
    o.detail += " [failing:";
    if (!counts_ok) o.detail += " counts";
    if (!products_ok) o.detail += " products";
    if (!order_ok) o.detail += " order";
    if (!eval_ok) o.detail += " evaluation";
    o.detail += "]";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  bool expect_known = false;
  int threads = default_thread_count();
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      slow = true;
    } else if (std::strcmp(argv[i], "--expect-known-failures") == 0) {
      expect_known = true;
    } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      threads = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr,
                   "usage: %s [--slow] [--expect-known-failures] [--threads N]\n", argv[0]);
      return 2;
    }
  }

  std::vector<std::pair<int, Outcome>> results;
  results.emplace_back(1, check_edge_ring_four(slow));
  results.emplace_back(2, check_edge_ring_five(slow));
  results.emplace_back(3, check_dimension_974());
  results.emplace_back(4, check_simple_dominance());
  results.emplace_back(5, check_pouzet(slow));
  results.emplace_back(6, check_digraph_disproof());
  results.emplace_back(7, check_secondary_counts());
  results.emplace_back(8, check_mu(threads));
  results.emplace_back(9, check_conjectured_degrees());
  results.emplace_back(10, check_limit());
  results.emplace_back(11, check_palindromy());
  results.emplace_back(12, check_chain());
  results.emplace_back(13, check_field_pairs());
  results.emplace_back(14, check_properties());

  int passed = 0;
  bool acceptable = true;  // under --expect-known-failures
  for (const auto& [number, outcome] : results) {
    std::printf("%s %2d: %s\n", outcome.passed ? "PASS" : "FAIL", number,
                outcome.detail.c_str());
    if (outcome.passed) ++passed;
    bool expected_to_pass = number != 2;
    if (expected_to_pass) {
      if (!outcome.passed) acceptable = false;
    } else {
      // The documented failure must fail in exactly the verified shape; a
      // surprise pass (or a different failure) needs investigation.
      if (outcome.passed || !outcome.known_failure_shape) acceptable = false;
    }
  }
  std::printf("%d of %zu criteria passed\n", passed, results.size());

  if (expect_known) return acceptable ? 0 : 1;
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
