#include "invring/gensets.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "invring/chain.hpp"
#include "invring/hilbert.hpp"

namespace invring {

namespace {

void check_generator(const OrbitSpace* space, const InvariantPolynomial& g) {
  if (&g.space() != space)
    throw std::invalid_argument("generator lives on a different orbit space");
  if (g.is_zero()) throw std::invalid_argument("zero generator");
  if (!g.is_homogeneous()) throw std::invalid_argument("generator is not homogeneous");
  if (g.degree() == 0) throw std::invalid_argument("degree-zero generator (the unit is implicit)");
}

InvariantPolynomial unit_orbit_sum(OrbitSpace& space, int id) {
  return InvariantPolynomial::orbit_sum(space, space.rep(id));
}

}  // namespace

InvariantPolynomial product_of(ProductKind kind, const InvariantPolynomial& a,
                               const InvariantPolynomial& b) {
  return kind == ProductKind::Usual ? invariant_mul(a, b) : chain_mul(a, b);
}

SubalgebraSpan::SubalgebraSpan(OrbitSpace* space, std::vector<InvariantPolynomial> generators,
                               ProductKind product)
    : space_(space), generators_(std::move(generators)), product_(product) {
  if (space_ == nullptr) throw std::invalid_argument("SubalgebraSpan: null orbit space");
  for (const InvariantPolynomial& g : generators_) check_generator(space_, g);
}

const RowBasis& SubalgebraSpan::component(int d) {
  if (d < 0) throw std::invalid_argument("SubalgebraSpan: negative degree");
  for (int e = static_cast<int>(components_.size()); e <= d; ++e) {
    auto basis = std::make_unique<RowBasis>(space_, e);
    if (e == 0) {
      basis->insert(InvariantPolynomial::constant(*space_, 1));
    } else {
      // A_e = sum over generators g of g * A_{e - deg g}: every monomial in
      // the generators factors through its first generator.
      for (const InvariantPolynomial& g : generators_) {
        int dg = g.degree();
        if (dg > e) continue;
        for (const InvariantPolynomial& row : components_[e - dg]->rows()) {
          basis->insert(product_of(product_, row, g));
          if (basis->complete()) break;
        }
        if (basis->complete()) break;
      }
    }
    components_.push_back(std::move(basis));
  }
  return *components_[d];
}

MembershipResult subalgebra_membership(const InvariantPolynomial& p,
                                       const std::vector<InvariantPolynomial>& gens,
                                       ProductKind product) {
  OrbitSpace& space = p.space();
  SubalgebraSpan span(&space, gens, product);
  MembershipResult result{false, InvariantPolynomial(space)};
  std::vector<int> degrees;
  for (const auto& [id, c] : p.terms()) {
    int d = space.degree_of_id(id);
    if (std::find(degrees.begin(), degrees.end(), d) == degrees.end()) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  for (int d : degrees) {
    result.residue += span.component(d).reduce(p.homogeneous_component(d));
  }
  result.member = result.residue.is_zero();
  return result;
}

int goebel_bound(int m) {
  if (m < 0) throw std::invalid_argument("goebel_bound: negative variable count");
  return std::max(m, m * (m - 1) / 2);
}

MgsReport minimal_generating_set(OrbitSpace& space, int degree_cap, ProductKind product,
                                 int proven_bound) {
  if (degree_cap < 0) throw std::invalid_argument("minimal_generating_set: negative cap");
  space.ensure_degree(degree_cap);

  MgsReport report;
  report.degree_cap = degree_cap;
  report.new_generator_counts.assign(degree_cap + 1, 0);

  std::vector<InvariantPolynomial> gens;
  for (int d = 1; d <= degree_cap; ++d) {
    RowBasis basis(&space, d);
    // Span of the algebra generated so far, in degree d.  Lower degrees are
    // fully generated by construction (the scan below adds generators until
    // the component is spanned), so A_{d - dg} has the orbit sums of degree
    // d - dg as a basis.
    for (std::size_t gi = 0; gi < gens.size() && !basis.complete(); ++gi) {
      const InvariantPolynomial& g = gens[gi];
      int dg = g.degree();
      if (dg > d) continue;
      for (int id : space.canonical_ids(d - dg)) {
        basis.insert(product_of(product, g, unit_orbit_sum(space, id)));
        if (basis.complete()) break;
      }
    }
    Int s = 0;
    for (int id : space.canonical_ids(d)) {
      if (basis.insert(unit_orbit_sum(space, id))) {
        gens.push_back(unit_orbit_sum(space, id));
        report.generators.push_back(GeneratorInfo{id, d});
        ++s;
      }
    }
    assert(basis.complete());
    report.new_generator_counts[d] = s;
    if (s > 0) report.beta_observed = d;
  }

  if (product == ProductKind::Usual) {
    int bound = proven_bound >= 0 ? proven_bound : goebel_bound(space.position_count());
    report.proven_bound = bound;
    report.complete = degree_cap >= bound;
  }
  return report;
}

SecondaryReport algorithm1_secondaries(OrbitSpace& space,
                                       const std::vector<InvariantPolynomial>& primaries,
                                       const TruncatedSeries& hilbert, ProductKind product) {
  std::vector<int> degrees;
  for (const InvariantPolynomial& theta : primaries) {
    check_generator(&space, theta);
    degrees.push_back(theta.degree());
  }

  SecondaryReport report;
  report.expected = secondary_degrees(hilbert, degrees);
  report.total = report.expected.sum();
  int top = report.expected.degree();
  space.ensure_degree(std::max(top, 0));

  // Irreducible secondaries of positive degree, pooled for product candidates.
  std::vector<InvariantPolynomial> irreducible;

  for (int d = 0; d <= top; ++d) {
    Int expected_here = report.expected.coefficient(d);
    if (d == 0) {
      if (expected_here != 1)
        throw std::logic_error("secondary count in degree zero must be 1");
      report.secondaries.push_back(
          SecondaryEntry{InvariantPolynomial::constant(space, 1), 0, false});
      continue;
    }
    int dim = static_cast<int>(space.canonical_ids(d).size());
    if (expected_here > dim)
      throw std::runtime_error("secondary count exceeds the component dimension at degree " +
                               std::to_string(d));
    int ideal_rank_target = dim - static_cast<int>(expected_here.get_si());

    // Parameter-ideal span in degree d: sum over primaries of theta * I_{d - deg theta}.
    RowBasis span(&space, d);
    for (std::size_t i = 0; i < primaries.size(); ++i) {
      int di = degrees[i];
      if (di > d) continue;
      for (int id : space.canonical_ids(d - di)) {
        span.insert(product_of(product, primaries[i], unit_orbit_sum(space, id)));
      }
    }
    if (span.rank() != ideal_rank_target)
      throw std::runtime_error(
          "parameter ideal rank mismatch at degree " + std::to_string(d) + ": expected " +
          std::to_string(ideal_rank_target) + ", found " + std::to_string(span.rank()) +
          " (the given invariants are not a parameter system for this series)");

    // Products of at least two lower-degree irreducible secondaries: any that
    // enlarge the span serve as reducible secondaries.
    struct Frame {
      int start;
      int remaining;
      InvariantPolynomial prefix;
      int depth;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{0, d, InvariantPolynomial::constant(space, 1), 0});
    while (!stack.empty()) {
      Frame frame = std::move(stack.back());
      stack.pop_back();
      for (int i = frame.start; i < static_cast<int>(irreducible.size()); ++i) {
        int dg = irreducible[i].degree();
        if (dg > frame.remaining) continue;
        InvariantPolynomial prod = frame.depth == 0
                                       ? irreducible[i]
                                       : product_of(product, frame.prefix, irreducible[i]);
        if (dg == frame.remaining) {
          if (frame.depth + 1 >= 2 && span.insert(prod)) {
            report.secondaries.push_back(SecondaryEntry{std::move(prod), d, true});
          }
        } else {
          stack.push_back(Frame{i, frame.remaining - dg, std::move(prod), frame.depth + 1});
        }
      }
    }

    // Remaining secondaries are fresh orbit sums.
    for (int id : space.canonical_ids(d)) {
      InvariantPolynomial candidate = unit_orbit_sum(space, id);
      if (span.insert(candidate)) {
        irreducible.push_back(candidate);
        report.secondaries.push_back(SecondaryEntry{std::move(candidate), d, false});
      }
    }
    assert(span.complete());
  }

  if (Int(static_cast<unsigned long>(report.secondaries.size())) != report.total)
    throw std::logic_error("secondary count mismatch against the predicted total");

  // A primary is removable when it lies in the algebra generated by the
  // remaining primaries together with the irreducible secondaries.
  for (std::size_t i = 0; i < primaries.size(); ++i) {
    std::vector<InvariantPolynomial> others;
    for (std::size_t j = 0; j < primaries.size(); ++j) {
      if (j != i) others.push_back(primaries[j]);
    }
    for (const InvariantPolynomial& s : irreducible) others.push_back(s);
    if (subalgebra_membership(primaries[i], others, product).member) {
      report.removable_primaries.push_back(static_cast<int>(i));
    }
  }
  return report;
}

}  // namespace invring
