#include "invring/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "invring/gensets.hpp"

namespace invring {

namespace {

ExponentVector add_vectors(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) {
    int s = static_cast<unsigned char>(r[i]) + static_cast<unsigned char>(b[i]);
    if (s > 255) throw std::overflow_error("exponent exceeds 255");
    r[i] = static_cast<char>(s);
  }
  return r;
}

// a <= b as bitsets.
bool subset(const LayerSet& a, const LayerSet& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

bool comparable(const LayerSet& a, const LayerSet& b) { return subset(a, b) || subset(b, a); }

}  // namespace

MultiChain layers(const ExponentVector& v) {
  int max_mult = 0;
  for (char c : v) max_mult = std::max(max_mult, static_cast<int>(static_cast<unsigned char>(c)));
  std::size_t words = (v.size() + 63) / 64;
  MultiChain chain;
  chain.layers.assign(max_mult, LayerSet(words, 0));
  for (std::size_t p = 0; p < v.size(); ++p) {
    int mult = static_cast<unsigned char>(v[p]);
    for (int i = 0; i < mult; ++i) chain.layers[i][p / 64] |= std::uint64_t{1} << (p % 64);
  }
  return chain;
}

Shape shape(const ExponentVector& v) {
  Shape s;
  int max_mult = 0;
  for (char c : v) max_mult = std::max(max_mult, static_cast<int>(static_cast<unsigned char>(c)));
  for (int i = 1; i <= max_mult; ++i) {
    int size = 0;
    for (char c : v)
      if (static_cast<unsigned char>(c) >= i) ++size;
    s.push_back(size);
  }
  return s;
}

bool mergeable(const MultiChain& a, const MultiChain& b) {
  for (const LayerSet& la : a.layers) {
    for (const LayerSet& lb : b.layers) {
      if (!comparable(la, lb)) return false;
    }
  }
  return true;
}

bool mergeable(const ExponentVector& a, const ExponentVector& b) {
  return mergeable(layers(a), layers(b));
}

Shape merge_shapes(const Shape& a, const Shape& b) {
  Shape merged = a;
  merged.insert(merged.end(), b.begin(), b.end());
  std::sort(merged.begin(), merged.end(), std::greater<int>());
  return merged;
}

bool shape_dominates(const Shape& a, const Shape& b) {
  long sum_a = 0, sum_b = 0;
  for (int x : a) sum_a += x;
  for (int x : b) sum_b += x;
  if (sum_a != sum_b) throw std::invalid_argument("shape_dominates: unequal weights");
  long pa = 0, pb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    pa += i < a.size() ? a[i] : 0;
    pb += i < b.size() ? b[i] : 0;
    if (pa < pb) return false;
  }
  return true;
}

InvariantPolynomial chain_mul(const InvariantPolynomial& a, const InvariantPolynomial& b) {
  if (&a.space() != &b.space())
    throw std::invalid_argument("chain_mul: polynomials from different spaces");
  OrbitSpace& space = a.space();
  int da = a.degree(), db = b.degree();
  if (da >= 0 && db >= 0) space.ensure_degree(da + db);

  std::unordered_map<int, Rat> acc;
  std::unordered_map<int, long> tally;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      // Expand the smaller orbit against the fixed representative of the
      // larger; keep only the mergeable monomial pairs.  Mergeability is
      // invariant under the group action, so fixing one representative is
      // as symmetric as the full double sum.
      const bool a_smaller = space.orbit_size(ga) <= space.orbit_size(gb);
      const int small = a_smaller ? ga : gb;
      const int big = a_smaller ? gb : ga;
      const MultiChain big_chain = layers(space.rep(big));
      tally.clear();
      for (const auto& m : space.members(small)) {
        if (!mergeable(layers(m), big_chain)) continue;
        ++tally[space.id_of(add_vectors(m, space.rep(big)))];
      }
      const long big_orbit = space.orbit_size(big);
      const Rat cab = ca * cb;
      for (const auto& [k, t] : tally) {
        const long k_orbit = space.orbit_size(k);
        const long num = t * big_orbit;
        if (num % k_orbit != 0)
          throw std::logic_error("non-integral chain structure constant (orbit accounting broken)");
        acc[k] += cab * Rat(num / k_orbit);
      }
    }
  }

  std::vector<std::pair<int, Rat>> terms(acc.begin(), acc.end());
  std::erase_if(terms, [](const auto& t) { return t.second == 0; });
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  InvariantPolynomial r(space);
  r.terms_ = std::move(terms);
  return r;
}

ChainTransferReport chain_transfer_check(int n, int degree_cap) {
  OrbitSpace space(ActionSpec::graph_edges(n));
  MgsReport chain_mgs = minimal_generating_set(space, degree_cap, ProductKind::Chain);

  ChainTransferReport report;
  std::vector<InvariantPolynomial> gens;
  for (const GeneratorInfo& g : chain_mgs.generators) {
    report.chain_generator_degrees.push_back(g.degree);
    gens.push_back(InvariantPolynomial::orbit_sum(space, space.rep(g.id)));
  }

  SubalgebraSpan span(&space, std::move(gens), ProductKind::Usual);
  report.generates_usual = true;
  for (int d = 1; d <= degree_cap; ++d) {
    if (!span.component(d).complete()) {
      report.generates_usual = false;
      report.first_failure_degree = d;
      break;
    }
  }
  return report;
}

}  // namespace invring
