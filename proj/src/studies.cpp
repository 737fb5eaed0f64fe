#include "invring/studies.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "invring/encoding.hpp"
#include "invring/gensets.hpp"
#include "invring/hilbert.hpp"
#include "invring/invariant.hpp"
#include "invring/parallel.hpp"
#include "invring/perm.hpp"

namespace invring {

namespace {

using nlohmann::json;

template <typename Fill>
Verdict timed(const std::string& name, Fill fill) {
  Verdict v;
  v.suite = name;
  auto start = std::chrono::steady_clock::now();
  fill(v);
  v.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

json series_row(const TruncatedSeries& s, int up_to = -1) {
  json row = json::array();
  int top = up_to < 0 ? s.bound() : std::min(up_to, s.bound());
  for (int d = 0; d <= top; ++d) row.push_back(s[d].get_str());
  return row;
}

json poly_row(const DegreePolynomial& p) {
  json row = json::array();
  for (const Int& c : p.coefficients()) row.push_back(c.get_str());
  return row;
}

json int_list(const std::vector<Int>& xs) {
  json row = json::array();
  for (const Int& x : xs) row.push_back(x.get_str());
  return row;
}

std::vector<int> generator_degrees(const MgsReport& report) {
  std::vector<int> degrees;
  for (const GeneratorInfo& g : report.generators) degrees.push_back(g.degree);
  return degrees;
}

ExponentVector vector_from_digits(const std::string& digits) {
  ExponentVector v(digits.size(), '\0');
  for (std::size_t i = 0; i < digits.size(); ++i) v[i] = static_cast<char>(digits[i] - '0');
  return v;
}

WeightedGraph weights_from_vector(const ExponentVector& v) {
  WeightedGraph w;
  for (char c : v) w.push_back(Rat(static_cast<int>(static_cast<unsigned char>(c))));
  return w;
}

}  // namespace

BruteEdgeScan brute_min_edges_no_odd_automorphism(int n, int threads, int degree_limit) {
  OrbitSpace space(ActionSpec::graph_edges(n));
  for (int d = 1; d <= degree_limit; ++d) {
    space.ensure_degree(d);
    const std::vector<int>& ids = space.canonical_ids(d);
    std::vector<char> found(ids.size(), 0);
    parallel_ranges(static_cast<int>(ids.size()), threads, [&](int begin, int end) {
      for (int i = begin; i < end; ++i) {
        if (!automorphism_scan(space, space.rep(ids[i])).has_odd_automorphism) found[i] = 1;
      }
    });
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (found[i]) {
        return BruteEdgeScan{d, encode_graph_text(space.rep(ids[i]), space.action())};
      }
    }
  }
  return BruteEdgeScan{};
}

json verdict_to_json(const Verdict& v) {
  return json{{"suite", v.suite},
              {"passed", v.passed},
              {"runtime_seconds", v.runtime_seconds},
              {"evidence", v.evidence}};
}

Verdict verify_aslaksen(bool slow) {
  return timed("aslaksen", [&](Verdict& v) {
    OrbitSpace space(ActionSpec::graph_edges(4));
    int cap = slow ? goebel_bound(space.position_count()) : 9;
    MgsReport report = minimal_generating_set(space, cap);

    std::vector<int> observed = generator_degrees(report);
    const std::vector<int> expected = {1, 2, 2, 3, 3, 3, 4, 4, 5};
    const std::vector<Int> expected_s = {1, 2, 3, 2, 1};

    std::vector<Int> s_positive(report.new_generator_counts.begin() + 1,
                                report.new_generator_counts.end());
    bool degrees_ok = observed == expected;
    bool beta_ok = report.beta_observed == 5;
    bool s_ok = s_positive.size() >= 5 &&
                std::equal(expected_s.begin(), expected_s.end(), s_positive.begin());
    bool tail_ok = true;
    for (std::size_t i = 5; i < s_positive.size(); ++i) {
      if (s_positive[i] != 0) tail_ok = false;
    }
    DegreePolynomial s_poly{std::vector<Int>(expected_s)};
    bool unimodal = s_poly.is_unimodal();

    // Negative control: a mutated expectation (as if a degree-6 generator
    // were wrongly kept) must be detected as a mismatch.
    std::vector<int> mutated = expected;
    mutated.push_back(6);
    bool control_detects = observed != mutated;

    v.passed = degrees_ok && beta_ok && s_ok && tail_ok && unimodal && control_detects;
    v.evidence = json{{"degree_cap", cap},
                      {"generator_count", observed.size()},
                      {"generator_degrees", observed},
                      {"expected_degrees", expected},
                      {"new_generator_counts", int_list(s_positive)},
                      {"beta_observed", report.beta_observed},
                      {"series_unimodal", unimodal},
                      {"complete_certified", report.complete},
                      {"proven_bound", report.proven_bound},
                      {"negative_control_detects_mutation", control_detects}};
  });
}

Verdict verify_n5_partial(int cap) {
  return timed("n5-partial", [&](Verdict& v) {
    if (cap != 9 && cap != 10) throw std::invalid_argument("verify_n5_partial: cap must be 9 or 10");
    OrbitSpace space(ActionSpec::graph_edges(5));
    MgsReport report = minimal_generating_set(space, cap);
    std::vector<int> observed = generator_degrees(report);

    // The published count for this set is 57; exact rank computation yields
    // 56, confirmed by an independent modular-arithmetic recount of every
    // per-degree product rank (the per-degree counts below are the same
    // under both).  The cited-count comparison is kept as an honest check
    // and is expected to fail; everything else about the run is verified.
    bool cited_count_ok = observed.size() == 57;
    std::vector<Int> expected_s = {1, 2, 4, 7, 10, 13, 13, 4, 2};
    bool histogram_ok =
        report.new_generator_counts.size() >= 10 &&
        std::equal(expected_s.begin(), expected_s.end(),
                   report.new_generator_counts.begin() + 1);
    bool degrees_ok = std::all_of(observed.begin(), observed.end(), [](int d) { return d <= 9; });
    bool s10_ok = cap < 10 || report.new_generator_counts[10] == 0;

    // Degree-10 component dimension along two independent paths.
    TruncatedSeries h = hilbert_series(space.action(), 10);
    space.ensure_degree(10);
    Int dim_series = to_integer(h[10]);
    std::size_t dim_enumerated = space.canonical_ids(10).size();
    bool dim_ok = dim_series == 974 && dim_enumerated == 974;

    std::map<int, int> histogram;
    for (int d : observed) ++histogram[d];
    json histogram_json = json::object();
    for (const auto& [d, count] : histogram) histogram_json[std::to_string(d)] = count;

    v.passed = cited_count_ok && histogram_ok && degrees_ok && s10_ok && dim_ok;
    v.evidence = json{{"degree_cap", cap},
                      {"generator_count", observed.size()},
                      {"cited_count", 57},
                      {"cited_count_reproduced", cited_count_ok},
                      {"per_degree_counts_verified", histogram_ok},
                      {"degree_histogram", histogram_json},
                      {"new_generator_counts",
                       int_list({report.new_generator_counts.begin() + 1,
                                 report.new_generator_counts.end()})},
                      {"degree_10_dimension_series", dim_series.get_str()},
                      {"degree_10_dimension_enumerated", dim_enumerated},
                      {"s10_zero_checked", cap >= 10}};
  });
}

Verdict verify_simple_not_generating() {
  return timed("simple-not-generating", [&](Verdict& v) {
    const int bound = 6;
    bool all_ok = true;
    json per_n = json::array();
    for (int n = 5; n <= 8; ++n) {
      TruncatedSeries h = hilbert_series(ActionSpec::graph_edges(n), bound);
      DominanceCertificate cert =
          dominance_certificate(h, simple_graph_degree_multiset(n, bound), bound);
      bool ok = !cert.dominated && cert.first_failure == 4;
      all_ok = all_ok && ok;
      per_n.push_back(json{{"n", n},
                           {"first_failure", cert.first_failure},
                           {"hilbert", series_row(h)},
                           {"bound_series", series_row(cert.bound_series)}});
    }
    // Control: the n=4 ring is generated by simple graphs, so no failure
    // appears in this window.
    TruncatedSeries h4 = hilbert_series(ActionSpec::graph_edges(4), bound);
    DominanceCertificate control =
        dominance_certificate(h4, simple_graph_degree_multiset(4, bound), bound);
    bool control_ok = control.dominated;

    v.passed = all_ok && control_ok;
    v.evidence = json{{"failures", per_n},
                      {"control_n4_dominated", control.dominated},
                      {"control_n4_hilbert", series_row(h4)},
                      {"control_n4_bound_series", series_row(control.bound_series)}};
  });
}

Verdict verify_pouzet_disproof(bool slow) {
  return timed("pouzet", [&](Verdict& v) {
    std::vector<int> ns = {11};
    if (slow) ns.push_back(12);
    bool all_ok = true;
    json per_n = json::array();
    for (int n : ns) {
      int bound = 4 * n - 24 + 4;
      TruncatedSeries h = hilbert_series(ActionSpec::graph_edges(n), bound);
      DominanceCertificate cert =
          dominance_certificate(h, connected_multigraph_degree_multiset(n - 1, bound), bound);
      bool ok = !cert.dominated && cert.first_failure <= bound;
      all_ok = all_ok && ok;
      per_n.push_back(json{{"n", n},
                           {"bound", bound},
                           {"first_failure", cert.first_failure},
                           {"hilbert", series_row(h)},
                           {"bound_series", series_row(cert.bound_series)}});
    }
    // n = 10 recorded as evidence only: no claim is made either way.
    {
      int bound = 24;
      TruncatedSeries h = hilbert_series(ActionSpec::graph_edges(10), bound);
      DominanceCertificate cert =
          dominance_certificate(h, connected_multigraph_degree_multiset(9, bound), bound);
      per_n.push_back(json{{"n", 10},
                           {"bound", bound},
                           {"recorded_only", true},
                           {"dominated", cert.dominated},
                           {"first_failure", cert.first_failure}});
    }
    v.passed = all_ok;
    v.evidence = json{{"certificates", per_n}};
  });
}

// The arc ring on 3 vertices with the diagonal (loop) positions removed,
// realized as an explicit permutation group on the 6 off-diagonal arcs.
ActionSpec loopless_arc_action_3() {
  const int n = 3;
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) arcs.emplace_back(i, j);
    }
  }
  auto index_of = [&](int i, int j) {
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (arcs[k].first == i && arcs[k].second == j) return static_cast<int>(k);
    }
    throw std::logic_error("loopless arc index");
  };
  auto induced = [&](const std::vector<int>& sigma) {
    std::vector<int> images(arcs.size());
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      images[k] = index_of(sigma[arcs[k].first], sigma[arcs[k].second]);
    }
    return Permutation(images);
  };
  return ActionSpec::explicit_group(
      static_cast<int>(arcs.size()), {induced({1, 0, 2}), induced({1, 2, 0})});
}

Verdict verify_grigoriev() {
  return timed("grigoriev", [&](Verdict& v) {
    const int bound = 8;

    // Membership disproof in the full arc ring (loops included), the ring the
    // displayed witnesses are written in: both fail to lie in the algebra of
    // simple-digraph orbit sums.
    ActionSpec action = ActionSpec::digraph_arcs(3);
    OrbitSpace space(action);
    std::vector<InvariantPolynomial> simple_gens;
    for (int d = 1; d <= 3; ++d) {
      for (InvariantPolynomial& p : simple_graph_orbit_sums(space, d))
        simple_gens.push_back(std::move(p));
    }
    const std::string witness_a = "020001000";
    const std::string witness_b = "010002000";
    MembershipResult member_a = subalgebra_membership(
        InvariantPolynomial::orbit_sum(space, vector_from_digits(witness_a)), simple_gens);
    MembershipResult member_b = subalgebra_membership(
        InvariantPolynomial::orbit_sum(space, vector_from_digits(witness_b)), simple_gens);
    bool witnesses_ok = !member_a.member && !member_b.member;

    // Series obstruction.  With loop positions included, the free series over
    // all simple digraphs dominates the Hilbert series (recorded below), so
    // the coefficient comparison only becomes an obstruction once loops are
    // ignored: on the 6 off-diagonal arcs the bound series drops below the
    // Hilbert series, in particular at degree 5.
    TruncatedSeries h_loops = hilbert_series(action, 6);
    DominanceCertificate cert_loops =
        dominance_certificate(h_loops, simple_digraph_degree_multiset(3, 6), 6);

    ActionSpec loopless = loopless_arc_action_3();
    OrbitSpace loopless_space(loopless);
    std::map<int, Int> loopless_simple;
    {
      int m = loopless.position_count();
      for (long mask = 1; mask < (1L << m); ++mask) {
        ExponentVector vec(m, 0);
        int degree = 0;
        for (int k = 0; k < m; ++k) {
          if (mask & (1L << k)) {
            vec[k] = 1;
            ++degree;
          }
        }
        if (loopless_space.canonical_form(vec) == vec) loopless_simple[degree] += 1;
      }
    }
    TruncatedSeries h_loopless = hilbert_series(loopless, bound);
    DominanceCertificate cert =
        dominance_certificate(h_loopless, loopless_simple, bound);
    std::vector<int> failing;
    for (int d = 0; d <= bound; ++d) {
      if (h_loopless[d] > cert.bound_series[d]) failing.push_back(d);
    }
    bool fails_at_5 =
        !cert.dominated && std::find(failing.begin(), failing.end(), 5) != failing.end();

    v.passed = witnesses_ok && fails_at_5;
    v.evidence = json{{"witness_a", witness_a},
                      {"witness_a_outside", !member_a.member},
                      {"witness_a_residue_terms", member_a.residue.term_count()},
                      {"witness_b", witness_b},
                      {"witness_b_outside", !member_b.member},
                      {"witness_b_residue_terms", member_b.residue.term_count()},
                      {"simple_generator_count", simple_gens.size()},
                      {"with_loops", json{{"hilbert", series_row(h_loops)},
                                          {"bound_series", series_row(cert_loops.bound_series)},
                                          {"dominated", cert_loops.dominated}}},
                      {"loopless", json{{"hilbert", series_row(h_loopless)},
                                        {"bound_series", series_row(cert.bound_series)},
                                        {"first_failure", cert.first_failure},
                                        {"failing_degrees", failing},
                                        {"fails_at_degree_5", fails_at_5}}}};
  });
}

Verdict verify_mu(int threads) {
  return timed("mu", [&](Verdict& v) {
    bool all_ok = true;
    json per_n = json::array();
    for (int n = 4; n <= 7; ++n) {
      BruteEdgeScan scan = brute_min_edges_no_odd_automorphism(n, threads, 8);
      int formula = min_edges_without_odd_automorphism(n);
      bool scan_ok = scan.edges == formula;

      int mu = mu_formula(n);
      bool mu_ok;
      if (n % 2 == 0) {
        // Even n: every induced edge permutation is even, so the minimal
        // determinant-relative invariant is the constant.
        bool all_even = true;
        for (const Permutation& sigma : all_permutations(n)) {
          if (induced_edge_permutation(sigma, n).sign() != 1) all_even = false;
        }
        mu_ok = all_even && mu == 0;
      } else {
        mu_ok = mu == scan.edges;
      }

      all_ok = all_ok && scan_ok && mu_ok;
      per_n.push_back(json{{"n", n},
                           {"brute_min_edges", scan.edges},
                           {"formula_min_edges", formula},
                           {"witness", scan.witness},
                           {"mu", mu}});
    }
    v.passed = all_ok;
    v.evidence = json{{"per_n", per_n}};
  });
}

Verdict verify_sign_lemma() {
  return timed("sign-lemma", [&](Verdict& v) {
    bool all_ok = true;
    json per_n = json::array();
    for (int n = 2; n <= 7; ++n) {
      bool ok = true;
      long checked = 0;
      for (const Permutation& sigma : all_permutations(n)) {
        int induced_sign = induced_edge_permutation(sigma, n).sign();
        int expected = n % 2 == 0 ? 1 : sigma.sign();
        if (induced_sign != expected) ok = false;
        ++checked;
      }
      all_ok = all_ok && ok;
      per_n.push_back(json{{"n", n}, {"permutations_checked", checked}, {"consistent", ok}});
    }
    v.passed = all_ok;
    v.evidence = json{{"per_n", per_n}};
  });
}

Verdict verify_gorenstein() {
  return timed("gorenstein", [&](Verdict& v) {
    auto numerator_for = [](int n) {
      int m = n * (n - 1) / 2;
      std::vector<int> degrees;
      for (int d = 1; d <= m; ++d) degrees.push_back(d);
      int bound = m * (m + 1) / 2;
      TruncatedSeries h = hilbert_series(ActionSpec::graph_edges(n), bound);
      return secondary_degrees(h, degrees);
    };
    DegreePolynomial p4 = numerator_for(4);
    DegreePolynomial p6 = numerator_for(6);
    DegreePolynomial p5 = numerator_for(5);
    bool ok4 = p4.is_palindromic() && p4.degree() == 15;
    bool ok6 = p6.is_palindromic();

    v.passed = ok4 && ok6;
    v.evidence = json{{"n4_coefficients", poly_row(p4)},
                      {"n4_palindromic", p4.is_palindromic()},
                      {"n4_top_degree", p4.degree()},
                      {"n6_palindromic", p6.is_palindromic()},
                      {"n6_top_degree", p6.degree()},
                      {"n6_coefficients", poly_row(p6)},
                      {"n5_palindromic_recorded", p5.is_palindromic()},
                      {"n5_top_degree", p5.degree()},
                      {"n5_coefficients", poly_row(p5)}};
  });
}

Verdict verify_limit() {
  return timed("limit", [&](Verdict& v) {
    TruncatedSeries limit = limit_hilbert_series(6);
    bool all_ok = true;
    json per_n = json::array();
    for (int n = 2; n <= 10; ++n) {
      int half = n / 2;
      TruncatedSeries h = hilbert_series(ActionSpec::graph_edges(n), half + 1);
      bool agree = true;
      for (int d = 0; d <= half; ++d) {
        if (h[d] != limit[d]) agree = false;
      }
      bool differ = h[half + 1] != limit[half + 1];
      all_ok = all_ok && agree && differ;
      per_n.push_back(json{{"n", n},
                           {"agree_through", half},
                           {"value_at_next", h[half + 1].get_str()},
                           {"limit_value_at_next", limit[half + 1].get_str()}});
    }
    v.passed = all_ok;
    v.evidence = json{{"limit_coefficients", series_row(limit)}, {"per_n", per_n}};
  });
}

Verdict verify_conjectured_degrees() {
  return timed("conjectured-degrees", [&](Verdict& v) {
    bool all_ok = true;
    json per_n = json::array();
    for (int n = 3; n <= 10; ++n) {
      std::vector<int> degrees = conjectured_sop_degrees(n);
      int bound = 0;
      for (int d : degrees) bound += d;
      TruncatedSeries h = hilbert_series(ActionSpec::graph_edges(n), bound);
      json entry{{"n", n}, {"degree_count", degrees.size()}, {"degree_sum", bound}};
      try {
        DegreePolynomial p = secondary_degrees(h, degrees);
        entry["nonnegative_integral"] = true;
        entry["top_degree"] = p.degree();
        entry["secondary_count"] = p.sum().get_str();
        entry["coefficients"] = poly_row(p);
        if (n == 4 && p.degree() != 9) all_ok = false;
      } catch (const InfeasibleDegreeSequence& e) {
        entry["nonnegative_integral"] = false;
        entry["failure_degree"] = e.degree();
        all_ok = false;
      }
      per_n.push_back(std::move(entry));
    }
    v.passed = all_ok;
    v.evidence = json{{"per_n", per_n}};
  });
}

Verdict verify_field_counterexamples() {
  return timed("field-counterexamples", [&](Verdict& v) {
    auto compare_pair = [](OrbitSpace& space, const std::string& digits_a,
                           const std::string& digits_b, const std::string& p_digits) {
      ExponentVector va = vector_from_digits(digits_a);
      ExponentVector vb = vector_from_digits(digits_b);
      WeightedGraph wa = weights_from_vector(va);
      WeightedGraph wb = weights_from_vector(vb);

      std::vector<Rat> ea = elementary_symmetric_values(wa);
      std::vector<Rat> eb = elementary_symmetric_values(wb);
      InvariantPolynomial p = InvariantPolynomial::orbit_sum(space, vector_from_digits(p_digits));
      Rat pa = evaluate(p, wa);
      Rat pb = evaluate(p, wb);

      bool values_equal = ea == eb && pa == pb;
      bool isomorphic = space.canonical_form(va) == space.canonical_form(vb);

      json e_values = json::array();
      for (std::size_t k = 1; k < ea.size(); ++k) e_values.push_back(ea[k].get_str());
      return json{{"graph_a", digits_a},
                  {"graph_b", digits_b},
                  {"elementary_values", e_values},
                  {"pair_invariant_value_a", pa.get_str()},
                  {"pair_invariant_value_b", pb.get_str()},
                  {"unseparated", values_equal},
                  {"non_isomorphic", !isomorphic}};
    };

    OrbitSpace graph_space(ActionSpec::graph_edges(5));
    json graph_pair = compare_pair(graph_space, "1110000000", "1100100000", "1100000000");

    OrbitSpace digraph_space(ActionSpec::digraph_arcs(5));
    json digraph_pair = compare_pair(digraph_space, "0110000000000110000000000",
                                     "0110000000000000000000110",
                                     "0110000000000000000000000");

    bool graph_ok = graph_pair["unseparated"].get<bool>() && graph_pair["non_isomorphic"].get<bool>();
    bool digraph_ok =
        digraph_pair["unseparated"].get<bool>() && digraph_pair["non_isomorphic"].get<bool>();
    v.passed = graph_ok && digraph_ok;
    v.evidence = json{{"graph_pair", graph_pair}, {"digraph_pair", digraph_pair}};
  });
}

Verdict verify_unimodality() {
  return timed("unimodality", [&](Verdict& v) {
    OrbitSpace edge_space(ActionSpec::graph_edges(4));
    MgsReport edge_report = minimal_generating_set(edge_space, 5);
    std::vector<Int> edge_s(edge_report.new_generator_counts.begin() + 1,
                            edge_report.new_generator_counts.end());
    bool edge_unimodal = DegreePolynomial(std::vector<Int>(edge_s)).is_unimodal();

    // Alternating group on 4 points, natural action: generated by a 3-cycle
    // and a double transposition.
    std::vector<Permutation> gens = {Permutation({1, 2, 0, 3}), Permutation({1, 0, 3, 2})};
    OrbitSpace alt_space(ActionSpec::explicit_group(4, gens));
    MgsReport alt_report = minimal_generating_set(alt_space, 6);
    std::vector<int> alt_degrees = generator_degrees(alt_report);
    std::vector<Int> alt_s(alt_report.new_generator_counts.begin() + 1,
                           alt_report.new_generator_counts.end());
    bool degrees_ok = alt_degrees == std::vector<int>{1, 2, 3, 4, 6};
    bool alt_not_unimodal = !DegreePolynomial(std::vector<Int>(alt_s)).is_unimodal();

    v.passed = edge_unimodal && degrees_ok && alt_not_unimodal;
    v.evidence = json{{"edge_ring_counts", int_list(edge_s)},
                      {"edge_ring_unimodal", edge_unimodal},
                      {"alternating_degrees", alt_degrees},
                      {"alternating_counts", int_list(alt_s)},
                      {"alternating_unimodal", !alt_not_unimodal}};
  });
}

std::vector<std::string> suite_names() {
  return {"aslaksen",  "n5-partial", "simple-not-generating",  "pouzet",
          "grigoriev", "mu",         "sign-lemma",             "gorenstein",
          "limit",     "conjectured-degrees", "field-counterexamples", "unimodality"};
}

std::vector<Verdict> run_suites(const std::string& name, bool slow, int threads) {
  std::vector<Verdict> out;
  auto run_one = [&](const std::string& suite) {
    if (suite == "aslaksen") return verify_aslaksen(slow);
    if (suite == "n5-partial") return verify_n5_partial(slow ? 10 : 9);
    if (suite == "simple-not-generating") return verify_simple_not_generating();
    if (suite == "pouzet") return verify_pouzet_disproof(slow);
    if (suite == "grigoriev") return verify_grigoriev();
    if (suite == "mu") return verify_mu(threads);
    if (suite == "sign-lemma") return verify_sign_lemma();
    if (suite == "gorenstein") return verify_gorenstein();
    if (suite == "limit") return verify_limit();
    if (suite == "conjectured-degrees") return verify_conjectured_degrees();
    if (suite == "field-counterexamples") return verify_field_counterexamples();
    if (suite == "unimodality") return verify_unimodality();
    throw std::invalid_argument("unknown suite: " + suite);
  };
  if (name == "all") {
    for (const std::string& suite : suite_names()) out.push_back(run_one(suite));
  } else {
    out.push_back(run_one(name));
  }
  return out;
}

}  // namespace invring
