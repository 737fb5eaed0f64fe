// Command-line front end for the invariant-ring engine: series, enumeration,
// products, generating sets, dominance certificates, and verification suites.
//
// Exit codes: 0 success; 1 mathematical failure (a failed verification
// verdict, an infeasible degree sequence, or an --expect mismatch);
// 2 usage errors (bad flags or malformed encodings).

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "invring/cache.hpp"
#include "invring/chain.hpp"
#include "invring/encoding.hpp"
#include "invring/gensets.hpp"
#include "invring/hilbert.hpp"
#include "invring/invariant.hpp"
#include "invring/parallel.hpp"
#include "invring/series.hpp"
#include "invring/studies.hpp"

namespace {

using invring::ActionKind;
using invring::ActionSpec;
using invring::DegreePolynomial;
using invring::DominanceCertificate;
using invring::Int;
using invring::InvariantPolynomial;
using invring::MgsReport;
using invring::OrbitSpace;
using invring::Rat;
using invring::TruncatedSeries;
using nlohmann::json;

ActionSpec make_action(const std::string& kind, int n) {
  if (n <= 0) throw std::invalid_argument("--n must be positive");
  if (kind == "graph") return ActionSpec::graph_edges(n);
  if (kind == "digraph") return ActionSpec::digraph_arcs(n);
  if (kind == "natural") return ActionSpec::natural(n);
  throw std::invalid_argument("--action must be one of graph, digraph, natural");
}

std::vector<int> parse_degree_list(const std::string& text) {
  std::vector<int> degrees;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty entry in degree list");
    degrees.push_back(std::stoi(token));
  }
  if (degrees.empty()) throw std::invalid_argument("empty degree list");
  return degrees;
}

// "degree:count,degree:count,..." or "degree,degree,..." (count 1 each).
std::map<int, Int> parse_degree_multiset(const std::string& text) {
  std::map<int, Int> multiset;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty entry in degree multiset");
    auto colon = token.find(':');
    if (colon == std::string::npos) {
      multiset[std::stoi(token)] += 1;
    } else {
      multiset[std::stoi(token.substr(0, colon))] += Int(token.substr(colon + 1));
    }
  }
  if (multiset.empty()) throw std::invalid_argument("empty degree multiset");
  return multiset;
}

json series_json(const TruncatedSeries& s) {
  json row = json::array();
  for (int d = 0; d <= s.bound(); ++d) row.push_back(s[d].get_str());
  return row;
}

void print_series_text(std::ostream& out, const TruncatedSeries& s) {
  for (int d = 0; d <= s.bound(); ++d) out << d << " " << s[d].get_str() << "\n";
}

json poly_json(const DegreePolynomial& p) {
  json row = json::array();
  for (const Int& c : p.coefficients()) row.push_back(c.get_str());
  return row;
}

struct CommandResult {
  int exit_code = 0;
  std::string payload;
};

struct CommonOptions {
  bool json_out = false;
  bool timings = false;
  int threads = invring::default_thread_count();
};

int default_mu_for_graph(int n) {
  // The minimal determinant-relative degree: 0 for even n; for odd n >= 5
  // the closed form; n = 3 is the classical alternating polynomial in three
  // variables, degree 3.
  if (n % 2 == 0) return 0;
  if (n == 3) return 3;
  return invring::mu_formula(n);
}

}  // namespace

static CommandResult run_command(const std::string& name, const std::function<void(std::ostream&, int&)>& body) {
  CommandResult result;
  std::ostringstream out;
  body(out, result.exit_code);
  result.payload = out.str();
  (void)name;
  return result;
}

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant rings of permutation actions on graph edge and digraph arc spaces"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string cache_dir;
  bool no_cache = false;
  app.add_flag("--json", common.json_out, "emit JSON instead of text");
  app.add_flag("--timings", common.timings, "include runtime measurements in verify output");
  app.add_option("--threads", common.threads,
                 "worker threads (env INVRING_THREADS; default: machine parallelism)");
  app.add_option("--cache-dir", cache_dir,
                 "result cache directory (env INVRING_CACHE_DIR; caching off when unset)");
  app.add_flag("--no-cache", no_cache, "disable the result cache");

  // --- hilbert ---
  auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert series of the invariant ring");
  int n_hilbert = 0, bound_hilbert = 10;
  std::string action_hilbert = "graph";
  cmd_hilbert->add_option("--n", n_hilbert, "vertex count (positions for --action natural)")
      ->required();
  cmd_hilbert->add_option("--bound", bound_hilbert, "truncation degree");
  cmd_hilbert->add_option("--action", action_hilbert, "graph | digraph | natural");

  // --- dimension ---
  auto* cmd_dimension = app.add_subcommand("dimension", "dimension of one homogeneous component");
  int n_dim = 0, degree_dim = 0;
  std::string action_dim = "graph";
  bool dim_enumerate = false;
  cmd_dimension->add_option("--n", n_dim)->required();
  cmd_dimension->add_option("--degree", degree_dim)->required();
  cmd_dimension->add_option("--action", action_dim, "graph | digraph | natural");
  cmd_dimension->add_flag("--enumerate", dim_enumerate,
                          "count canonical orbits instead of reading the series");

  // --- enumerate ---
  auto* cmd_enumerate = app.add_subcommand("enumerate", "canonical representatives of one degree");
  int n_enum = 0, degree_enum = 0;
  std::string action_enum = "graph";
  cmd_enumerate->add_option("--n", n_enum)->required();
  cmd_enumerate->add_option("--degree", degree_enum)->required();
  cmd_enumerate->add_option("--action", action_enum, "graph | digraph | natural");

  // --- mul / chain-mul ---
  auto* cmd_mul = app.add_subcommand("mul", "product of two orbit sums");
  std::string mul_a, mul_b, mul_product = "usual";
  cmd_mul->add_option("--a", mul_a, "first orbit sum (graph text encoding)")->required();
  cmd_mul->add_option("--b", mul_b, "second orbit sum")->required();
  cmd_mul->add_option("--product", mul_product, "usual | chain");
  auto* cmd_chain_mul = app.add_subcommand("chain-mul", "chain product of two orbit sums");
  std::string cmul_a, cmul_b;
  cmd_chain_mul->add_option("--a", cmul_a)->required();
  cmd_chain_mul->add_option("--b", cmul_b)->required();

  // --- eval ---
  auto* cmd_eval = app.add_subcommand("eval", "evaluate an orbit sum at a weighted graph");
  std::string eval_invariant, eval_graph;
  cmd_eval->add_option("--invariant", eval_invariant, "orbit sum (graph text encoding)")
      ->required();
  cmd_eval->add_option("--graph", eval_graph, "weighted graph (rational entries allowed)")
      ->required();

  // --- separate ---
  auto* cmd_separate = app.add_subcommand("separate", "try to separate two weighted graphs");
  std::string sep_a, sep_b, sep_expect;
  std::vector<std::string> sep_invariants;
  bool sep_elementary = false;
  cmd_separate->add_option("--a", sep_a)->required();
  cmd_separate->add_option("--b", sep_b)->required();
  cmd_separate->add_option("--invariant", sep_invariants,
                           "orbit sum to evaluate on both sides (repeatable)");
  cmd_separate->add_flag("--elementary", sep_elementary,
                         "also compare all elementary symmetric values");
  cmd_separate->add_option("--expect", sep_expect, "separated | unseparated (exit 1 on mismatch)");

  // --- secondary-degrees ---
  auto* cmd_secdeg = app.add_subcommand(
      "secondary-degrees", "secondary-invariant counts implied by parameter degrees");
  int n_secdeg = 0;
  std::string action_secdeg = "graph", secdeg_degrees;
  bool secdeg_stats = false;
  int secdeg_mu = -1;
  cmd_secdeg->add_option("--n", n_secdeg)->required();
  cmd_secdeg->add_option("--action", action_secdeg, "graph | digraph | natural");
  cmd_secdeg->add_option("--degrees", secdeg_degrees,
                         "comma-separated parameter degrees (default: 1..position count)");
  cmd_secdeg->add_flag("--stats", secdeg_stats, "also print count and top degree");
  cmd_secdeg->add_option("--mu", secdeg_mu,
                         "relative-invariant degree for --stats (default known for graphs)");

  // --- mu ---
  auto* cmd_mu = app.add_subcommand(
      "mu", "minimal edge count of a multigraph with no odd automorphism");
  int n_mu = 0;
  bool mu_brute = false, mu_det = false;
  cmd_mu->add_option("--n", n_mu)->required();
  cmd_mu->add_flag("--brute", mu_brute, "verify the closed form by brute-force scan");
  cmd_mu->add_flag("--det", mu_det,
                   "print the determinant-relative invariant degree instead (0 for even n)");

  // --- connected-counts ---
  auto* cmd_conn = app.add_subcommand("connected-counts", "connected multigraph counts");
  int conn_max_k = 0, conn_bound = 0;
  bool conn_totals = false;
  cmd_conn->add_option("--max-vertices", conn_max_k, "largest vertex count (ignored with --totals)");
  cmd_conn->add_option("--bound", conn_bound, "largest edge count")->required();
  cmd_conn->add_flag("--totals", conn_totals, "totals over all vertex counts only");

  // --- limit-hilbert ---
  auto* cmd_limit = app.add_subcommand("limit-hilbert",
                                       "Hilbert series of the infinite-vertex limit ring");
  int limit_bound = 6;
  cmd_limit->add_option("--bound", limit_bound, "truncation degree");

  // --- dominance ---
  auto* cmd_dom = app.add_subcommand(
      "dominance", "compare the Hilbert series against a free generator-degree bound");
  int n_dom = 0, dom_bound = 6, dom_max_vertices = -1;
  std::string action_dom = "graph", dom_generators = "simple", dom_degrees, dom_expect;
  cmd_dom->add_option("--n", n_dom)->required();
  cmd_dom->add_option("--action", action_dom, "graph | digraph");
  cmd_dom->add_option("--bound", dom_bound, "comparison window");
  cmd_dom->add_option("--generators", dom_generators,
                      "simple | connected-below | explicit (degree multiset source)");
  cmd_dom->add_option("--max-vertices", dom_max_vertices,
                      "vertex cap for --generators connected-below (default n-1)");
  cmd_dom->add_option("--degrees", dom_degrees,
                      "explicit degree multiset, e.g. 1:3,2:5 (with --generators explicit)");
  cmd_dom->add_option("--expect", dom_expect, "dominated | failure (exit 1 on mismatch)");

  // --- mgs ---
  auto* cmd_mgs = app.add_subcommand("mgs", "minimal generating set by increasing degree");
  int n_mgs = 0, mgs_cap = 5, mgs_proven = -1;
  std::string action_mgs = "graph", mgs_product = "usual";
  cmd_mgs->add_option("--n", n_mgs)->required();
  cmd_mgs->add_option("--cap", mgs_cap, "largest scanned degree");
  cmd_mgs->add_option("--action", action_mgs, "graph | digraph | natural");
  cmd_mgs->add_option("--product", mgs_product, "usual | chain");
  cmd_mgs->add_option("--proven-bound", mgs_proven,
                      "override the generation bound used for the completeness claim");

  // --- secondaries ---
  auto* cmd_sec = app.add_subcommand(
      "secondaries", "secondary invariants over the elementary symmetric parameters");
  int n_sec = 0;
  std::string action_sec = "graph", sec_product = "usual";
  cmd_sec->add_option("--n", n_sec)->required();
  cmd_sec->add_option("--action", action_sec, "graph | digraph | natural");
  cmd_sec->add_option("--product", sec_product, "usual | chain");

  // --- verify ---
  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::string verify_suite = "all";
  bool verify_slow = false;
  cmd_verify->add_option("--suite", verify_suite, "suite name or 'all'");
  cmd_verify->add_flag("--slow", verify_slow, "include the slow variants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("INVRING_THREADS");
      env != nullptr && app.count("--threads") == 0) {
    common.threads = std::atoi(env);
  }
  if (common.threads < 1) common.threads = 1;
  if (cache_dir.empty()) {
    if (const char* env = std::getenv("INVRING_CACHE_DIR"); env != nullptr) cache_dir = env;
  }
  if (no_cache) cache_dir.clear();

  try {
    CommandResult result;
    std::string subcommand_name;

    auto produce = [&]() -> CommandResult {
      if (app.got_subcommand(cmd_hilbert)) {
        return run_command("hilbert", [&](std::ostream& out, int&) {
          TruncatedSeries h =
              invring::hilbert_series(make_action(action_hilbert, n_hilbert), bound_hilbert);
          if (common.json_out) {
            out << json{{"action", action_hilbert},
                        {"n", n_hilbert},
                        {"bound", bound_hilbert},
                        {"coefficients", series_json(h)}}
                       .dump()
                << "\n";
          } else {
            print_series_text(out, h);
          }
        });
      }
      if (app.got_subcommand(cmd_dimension)) {
        return run_command("dimension", [&](std::ostream& out, int&) {
          ActionSpec action = make_action(action_dim, n_dim);
          Int dim;
          if (dim_enumerate) {
            OrbitSpace space(action);
            space.ensure_degree(degree_dim);
            dim = Int(static_cast<unsigned long>(space.canonical_ids(degree_dim).size()));
          } else {
            dim = invring::to_integer(invring::hilbert_series(action, degree_dim)[degree_dim]);
          }
          if (common.json_out) {
            out << json{{"action", action_dim},
                        {"n", n_dim},
                        {"degree", degree_dim},
                        {"dimension", dim.get_str()},
                        {"path", dim_enumerate ? "enumeration" : "series"}}
                       .dump()
                << "\n";
          } else {
            out << dim.get_str() << "\n";
          }
        });
      }
      if (app.got_subcommand(cmd_enumerate)) {
        return run_command("enumerate", [&](std::ostream& out, int&) {
          OrbitSpace space(make_action(action_enum, n_enum));
          space.ensure_degree(degree_enum);
          json rows = json::array();
          for (int id : space.canonical_ids(degree_enum)) {
            std::string enc = invring::encode_graph_text(space.rep(id), space.action());
            if (common.json_out) {
              rows.push_back(json{{"graph", enc},
                                  {"orbit_size", space.orbit_size(id)},
                                  {"stabilizer_order", space.stabilizer_order(id)}});
            } else {
              out << enc << " orbit=" << space.orbit_size(id)
                  << " stabilizer=" << space.stabilizer_order(id) << "\n";
            }
          }
          if (common.json_out) {
            out << json{{"degree", degree_enum}, {"count", rows.size()}, {"orbits", rows}}.dump()
                << "\n";
          }
        });
      }
      if (app.got_subcommand(cmd_mul) || app.got_subcommand(cmd_chain_mul)) {
        bool chain = app.got_subcommand(cmd_chain_mul) || mul_product == "chain";
        if (!chain && mul_product != "usual")
          throw std::invalid_argument("--product must be usual or chain");
        std::string text_a = app.got_subcommand(cmd_chain_mul) ? cmul_a : mul_a;
        std::string text_b = app.got_subcommand(cmd_chain_mul) ? cmul_b : mul_b;
        return run_command("mul", [&](std::ostream& out, int&) {
          invring::ParsedGraph a = invring::parse_graph_text(text_a);
          invring::ParsedGraph b = invring::parse_graph_text(text_b);
          ActionSpec action = invring::action_for_parsed(a);
          if (!(invring::action_for_parsed(b) == action))
            throw std::invalid_argument("the two factors use different actions");
          OrbitSpace space(action);
          InvariantPolynomial pa = InvariantPolynomial::orbit_sum(space, a.exponents);
          InvariantPolynomial pb = InvariantPolynomial::orbit_sum(space, b.exponents);
          InvariantPolynomial prod = chain ? invring::chain_mul(pa, pb) : invring::invariant_mul(pa, pb);
          json terms = json::array();
          for (const auto& [id, c] : prod.terms()) {
            std::string enc = invring::encode_graph_text(space.rep(id), action);
            if (common.json_out) {
              terms.push_back(json{{"coefficient", c.get_str()}, {"graph", enc}});
            } else {
              out << c.get_str() << " " << enc << "\n";
            }
          }
          if (common.json_out) {
            out << json{{"product", chain ? "chain" : "usual"}, {"terms", terms}}.dump() << "\n";
          }
        });
      }
      if (app.got_subcommand(cmd_eval)) {
        return run_command("eval", [&](std::ostream& out, int&) {
          invring::ParsedGraph inv = invring::parse_graph_text(eval_invariant);
          invring::ParsedWeightedGraph wg = invring::parse_weighted_graph_text(eval_graph);
          ActionSpec action = invring::action_for_parsed(inv);
          invring::ParsedGraph wg_shape;
          wg_shape.kind = wg.kind;
          wg_shape.n = wg.n;
          if (!(invring::action_for_parsed(wg_shape) == action))
            throw std::invalid_argument("invariant and graph use different actions");
          OrbitSpace space(action);
          InvariantPolynomial p = InvariantPolynomial::orbit_sum(space, inv.exponents);
          Rat value = invring::evaluate(p, wg.weights);
          if (common.json_out) {
            out << json{{"value", value.get_str()}}.dump() << "\n";
          } else {
            out << value.get_str() << "\n";
          }
        });
      }
      if (app.got_subcommand(cmd_separate)) {
        return run_command("separate", [&](std::ostream& out, int& exit_code) {
          invring::ParsedWeightedGraph a = invring::parse_weighted_graph_text(sep_a);
          invring::ParsedWeightedGraph b = invring::parse_weighted_graph_text(sep_b);
          if (a.kind != b.kind || a.n != b.n)
            throw std::invalid_argument("the two graphs use different actions");
          invring::ParsedGraph shape;
          shape.kind = a.kind;
          shape.n = a.n;
          ActionSpec action = invring::action_for_parsed(shape);
          OrbitSpace space(action);

          bool use_elementary = sep_elementary || sep_invariants.empty();
          bool separated = false;
          std::string witness;
          Rat va, vb;
          if (use_elementary) {
            std::vector<Rat> ea = invring::elementary_symmetric_values(a.weights);
            std::vector<Rat> eb = invring::elementary_symmetric_values(b.weights);
            for (std::size_t k = 1; k < ea.size() && !separated; ++k) {
              if (ea[k] != eb[k]) {
                separated = true;
                witness = "e_" + std::to_string(k);
                va = ea[k];
                vb = eb[k];
              }
            }
          }
          for (const std::string& enc : sep_invariants) {
            if (separated) break;
            invring::ParsedGraph g = invring::parse_graph_text(enc);
            if (!(invring::action_for_parsed(g) == action))
              throw std::invalid_argument("invariant " + enc + " uses a different action");
            InvariantPolynomial p = InvariantPolynomial::orbit_sum(space, g.exponents);
            Rat pa = invring::evaluate(p, a.weights);
            Rat pb = invring::evaluate(p, b.weights);
            if (pa != pb) {
              separated = true;
              witness = enc;
              va = pa;
              vb = pb;
            }
          }
          if (!sep_expect.empty()) {
            if (sep_expect != "separated" && sep_expect != "unseparated")
              throw std::invalid_argument("--expect must be separated or unseparated");
            if ((sep_expect == "separated") != separated) exit_code = 1;
          }
          if (common.json_out) {
            json j{{"separated", separated}};
            if (separated) {
              j["witness"] = witness;
              j["value_a"] = va.get_str();
              j["value_b"] = vb.get_str();
            }
            out << j.dump() << "\n";
          } else {
            if (separated) {
              out << "separated by " << witness << ": " << va.get_str() << " vs " << vb.get_str()
                  << "\n";
            } else {
              out << "unseparated\n";
            }
          }
        });
      }
      if (app.got_subcommand(cmd_secdeg)) {
        return run_command("secondary-degrees", [&](std::ostream& out, int& exit_code) {
          ActionSpec action = make_action(action_secdeg, n_secdeg);
          std::vector<int> degrees;
          if (secdeg_degrees.empty()) {
            for (int d = 1; d <= action.position_count(); ++d) degrees.push_back(d);
          } else {
            degrees = parse_degree_list(secdeg_degrees);
          }
          int degree_sum = 0;
          for (int d : degrees) degree_sum += d;
          TruncatedSeries h = invring::hilbert_series(action, degree_sum);
          try {
            DegreePolynomial p = invring::secondary_degrees(h, degrees);
            json j{{"degrees", degrees}, {"coefficients", poly_json(p)},
                   {"top_degree", p.degree()}};
            if (secdeg_stats) {
              int mu = secdeg_mu;
              if (mu < 0) {
                if (action.kind() == ActionKind::GraphEdges) {
                  mu = default_mu_for_graph(n_secdeg);
                } else {
                  throw std::invalid_argument("--stats needs --mu for this action");
                }
              }
              invring::GroupTable table(action);
              invring::SecondaryStats stats =
                  invring::secondary_stats(degrees, Int(table.order()), mu);
              j["count"] = stats.count.get_str();
              j["top_degree_from_stats"] = stats.top_degree;
              j["degree_bound"] = stats.degree_bound;
            }
            if (common.json_out) {
              out << j.dump() << "\n";
            } else {
              for (std::size_t d = 0; d < p.coefficients().size(); ++d)
                out << d << " " << p.coefficients()[d].get_str() << "\n";
              if (secdeg_stats)
                out << "count " << j["count"].get<std::string>() << "\ntop_degree "
                    << j["top_degree_from_stats"].get<int>() << "\n";
            }
          } catch (const invring::InfeasibleDegreeSequence& e) {
            exit_code = 1;
            if (common.json_out) {
              out << json{{"infeasible", true}, {"degree", e.degree()}, {"message", e.what()}}
                         .dump()
                  << "\n";
            } else {
              out << "infeasible at degree " << e.degree() << ": " << e.what() << "\n";
            }
          }
        });
      }
      if (app.got_subcommand(cmd_mu)) {
        return run_command("mu", [&](std::ostream& out, int& exit_code) {
          if (mu_det) {
            int value = n_mu == 3 ? 3 : invring::mu_formula(n_mu);
            if (common.json_out) {
              out << json{{"n", n_mu}, {"relative_invariant_degree", value}}.dump() << "\n";
            } else {
              out << value << "\n";
            }
            return;
          }
          int formula = invring::min_edges_without_odd_automorphism(n_mu);
          json j{{"n", n_mu}, {"min_edges", formula}};
          if (mu_brute) {
            invring::BruteEdgeScan scan = invring::brute_min_edges_no_odd_automorphism(
                n_mu, common.threads, formula + 2);
            j["brute_min_edges"] = scan.edges;
            j["witness"] = scan.witness;
            if (scan.edges != formula) exit_code = 1;
          }
          if (common.json_out) {
            out << j.dump() << "\n";
          } else {
            out << formula << "\n";
            if (mu_brute)
              out << "brute " << j["brute_min_edges"].get<int>() << " witness "
                  << j["witness"].get<std::string>() << "\n";
          }
        });
      }
      if (app.got_subcommand(cmd_conn)) {
        return run_command("connected-counts", [&](std::ostream& out, int&) {
          if (conn_totals) {
            std::vector<Int> totals = invring::connected_counts_by_edges(conn_bound);
            if (common.json_out) {
              json row = json::array();
              for (const Int& c : totals) row.push_back(c.get_str());
              out << json{{"bound", conn_bound}, {"totals", row}}.dump() << "\n";
            } else {
              for (std::size_t d = 0; d < totals.size(); ++d)
                out << d << " " << totals[d].get_str() << "\n";
            }
            return;
          }
          if (conn_max_k <= 0)
            throw std::invalid_argument("--max-vertices is required without --totals");
          auto table = invring::connected_multigraph_counts(conn_max_k, conn_bound);
          if (common.json_out) {
            json rows = json::array();
            for (const auto& row : table) {
              json r = json::array();
              for (const Int& c : row) r.push_back(c.get_str());
              rows.push_back(r);
            }
            out << json{{"max_vertices", conn_max_k}, {"bound", conn_bound}, {"counts", rows}}
                       .dump()
                << "\n";
          } else {
            for (std::size_t k = 0; k < table.size(); ++k) {
              out << k << ":";
              for (const Int& c : table[k]) out << " " << c.get_str();
              out << "\n";
            }
          }
        });
      }
      if (app.got_subcommand(cmd_limit)) {
        return run_command("limit-hilbert", [&](std::ostream& out, int&) {
          TruncatedSeries s = invring::limit_hilbert_series(limit_bound);
          if (common.json_out) {
            out << json{{"bound", limit_bound}, {"coefficients", series_json(s)}}.dump() << "\n";
          } else {
            print_series_text(out, s);
          }
        });
      }
      if (app.got_subcommand(cmd_dom)) {
        return run_command("dominance", [&](std::ostream& out, int& exit_code) {
          ActionSpec action = make_action(action_dom, n_dom);
          std::map<int, Int> multiset;
          if (dom_generators == "simple") {
            multiset = action.kind() == ActionKind::DigraphArcs
                           ? invring::simple_digraph_degree_multiset(n_dom, dom_bound)
                           : invring::simple_graph_degree_multiset(n_dom, dom_bound);
          } else if (dom_generators == "connected-below") {
            int cap = dom_max_vertices > 0 ? dom_max_vertices : n_dom - 1;
            multiset = invring::connected_multigraph_degree_multiset(cap, dom_bound);
          } else if (dom_generators == "explicit") {
            if (dom_degrees.empty())
              throw std::invalid_argument("--generators explicit needs --degrees");
            multiset = parse_degree_multiset(dom_degrees);
          } else {
            throw std::invalid_argument(
                "--generators must be simple, connected-below or explicit");
          }
          TruncatedSeries h = invring::hilbert_series(action, dom_bound);
          DominanceCertificate cert = invring::dominance_certificate(h, multiset, dom_bound);
          if (!dom_expect.empty()) {
            if (dom_expect != "dominated" && dom_expect != "failure")
              throw std::invalid_argument("--expect must be dominated or failure");
            if ((dom_expect == "dominated") != cert.dominated) exit_code = 1;
          }
          if (common.json_out) {
            out << json{{"dominated", cert.dominated},
                        {"first_failure", cert.first_failure},
                        {"hilbert", series_json(h)},
                        {"bound_series", series_json(cert.bound_series)}}
                       .dump()
                << "\n";
          } else {
            if (cert.dominated) {
              out << "dominated through degree " << dom_bound << "\n";
            } else {
              out << "fails at degree " << cert.first_failure << ": "
                  << h[cert.first_failure].get_str() << " > "
                  << cert.bound_series[cert.first_failure].get_str() << "\n";
            }
          }
        });
      }
      if (app.got_subcommand(cmd_mgs)) {
        return run_command("mgs", [&](std::ostream& out, int&) {
          if (mgs_product != "usual" && mgs_product != "chain")
            throw std::invalid_argument("--product must be usual or chain");
          OrbitSpace space(make_action(action_mgs, n_mgs));
          MgsReport report = invring::minimal_generating_set(
              space, mgs_cap,
              mgs_product == "chain" ? invring::ProductKind::Chain : invring::ProductKind::Usual,
              mgs_proven);
          json gens = json::array();
          for (const invring::GeneratorInfo& g : report.generators) {
            gens.push_back(json{{"degree", g.degree},
                                {"graph", invring::encode_graph_text(space.rep(g.id),
                                                                     space.action())}});
          }
          json counts = json::array();
          for (int d = 1; d <= report.degree_cap; ++d)
            counts.push_back(report.new_generator_counts[d].get_str());
          if (common.json_out) {
            out << json{{"cap", report.degree_cap},
                        {"product", mgs_product},
                        {"generator_count", report.generators.size()},
                        {"generators", gens},
                        {"new_generator_counts", counts},
                        {"beta_observed", report.beta_observed},
                        {"complete", report.complete},
                        {"proven_bound", report.proven_bound}}
                       .dump()
                << "\n";
          } else {
            for (const auto& g : gens)
              out << g["degree"].get<int>() << " " << g["graph"].get<std::string>() << "\n";
            out << "count " << report.generators.size() << "\nbeta " << report.beta_observed
                << "\ncomplete " << (report.complete ? "yes" : "no") << "\n";
          }
        });
      }
      if (app.got_subcommand(cmd_sec)) {
        return run_command("secondaries", [&](std::ostream& out, int& exit_code) {
          if (sec_product != "usual" && sec_product != "chain")
            throw std::invalid_argument("--product must be usual or chain");
          OrbitSpace space(make_action(action_sec, n_sec));
          std::vector<InvariantPolynomial> primaries;
          for (int k = 1; k <= space.position_count(); ++k)
            primaries.push_back(invring::elementary_symmetric(space, k));
          int degree_sum = space.position_count() * (space.position_count() + 1) / 2;
          TruncatedSeries h = invring::hilbert_series(space.action(), degree_sum);
          try {
            invring::SecondaryReport report = invring::algorithm1_secondaries(
                space, primaries, h,
                sec_product == "chain" ? invring::ProductKind::Chain
                                       : invring::ProductKind::Usual);
            json entries = json::array();
            for (const invring::SecondaryEntry& e : report.secondaries) {
              entries.push_back(json{{"degree", e.degree},
                                     {"reducible", e.reducible},
                                     {"terms", e.poly.term_count()}});
            }
            json removable = json::array();
            for (int i : report.removable_primaries)
              removable.push_back("e_" + std::to_string(i + 1));
            if (common.json_out) {
              out << json{{"expected_counts", poly_json(report.expected)},
                          {"total", report.total.get_str()},
                          {"secondaries", entries},
                          {"removable_primaries", removable}}
                         .dump()
                  << "\n";
            } else {
              out << "total " << report.total.get_str() << "\n";
              for (std::size_t d = 0; d < report.expected.coefficients().size(); ++d)
                out << d << " " << report.expected.coefficients()[d].get_str() << "\n";
              out << "removable:";
              for (const auto& r : removable) out << " " << r.get<std::string>();
              out << "\n";
            }
          } catch (const invring::InfeasibleDegreeSequence& e) {
            exit_code = 1;
            out << json{{"infeasible", true}, {"degree", e.degree()}}.dump() << "\n";
          }
        });
      }
      if (app.got_subcommand(cmd_verify)) {
        return run_command("verify", [&](std::ostream& out, int& exit_code) {
          std::vector<invring::Verdict> verdicts =
              invring::run_suites(verify_suite, verify_slow, common.threads);
          for (const invring::Verdict& v : verdicts) {
            if (!v.passed) exit_code = 1;
            if (common.json_out) {
              json j = invring::verdict_to_json(v);
              if (!common.timings) j.erase("runtime_seconds");
              out << j.dump() << "\n";
            } else {
              out << (v.passed ? "PASS" : "FAIL") << " " << v.suite;
              if (common.timings) out << " (" << v.runtime_seconds << "s)";
              out << "\n";
            }
          }
        });
      }
      throw std::logic_error("no subcommand dispatched");
    };

    for (const auto* sub : app.get_subcommands()) subcommand_name = sub->get_name();

    if (!cache_dir.empty()) {
      std::string config;
      for (int i = 1; i < argc; ++i) {
        config += argv[i];
        config += '\x1e';
      }
      invring::ResultCache cache(cache_dir);
      std::string wrapped = cache.get_or_compute(
          invring::cache_key(invring::kEngineVersion, subcommand_name, config), [&]() {
            CommandResult r = produce();
            return std::to_string(r.exit_code) + "\n" + r.payload;
          });
      auto newline = wrapped.find('\n');
      result.exit_code = std::stoi(wrapped.substr(0, newline));
      result.payload = wrapped.substr(newline + 1);
    } else {
      result = produce();
    }

    std::cout << result.payload;
    return result.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
