#include "invring/invariant.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace invring {

namespace {

ExponentVector add_vectors(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size(), '\0');
  for (size_t i = 0; i < a.size(); ++i) {
    const int s = static_cast<unsigned char>(a[i]) + static_cast<unsigned char>(b[i]);
    if (s > 255) throw std::overflow_error("exponent overflow in product");
    r[i] = static_cast<char>(s);
  }
  return r;
}

void check_same_space(const InvariantPolynomial& a, const InvariantPolynomial& b) {
  if (&a.space() != &b.space())
    throw std::invalid_argument("polynomials live on different orbit spaces");
}

}  // namespace

InvariantPolynomial InvariantPolynomial::orbit_sum(OrbitSpace& space, const ExponentVector& v) {
  InvariantPolynomial p(space);
  space.ensure_degree(degree_of(v));
  p.terms_.emplace_back(space.id_of(space.canonical_form(v)), Rat(1));
  return p;
}

InvariantPolynomial InvariantPolynomial::constant(OrbitSpace& space, const Rat& c) {
  InvariantPolynomial p(space);
  if (c != 0) {
    space.ensure_degree(0);
    p.terms_.emplace_back(space.id_of(ExponentVector(space.position_count(), '\0')), c);
  }
  return p;
}

Rat InvariantPolynomial::coefficient(int id) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), id,
                             [](const auto& t, int v) { return t.first < v; });
  if (it == terms_.end() || it->first != id) return 0;
  return it->second;
}

int InvariantPolynomial::degree() const {
  int d = -1;
  for (const auto& [id, c] : terms_) d = std::max(d, space_->degree_of_id(id));
  return d;
}

bool InvariantPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = space_->degree_of_id(terms_.front().first);
  for (const auto& [id, c] : terms_)
    if (space_->degree_of_id(id) != d) return false;
  return true;
}

InvariantPolynomial& InvariantPolynomial::operator+=(const InvariantPolynomial& o) {
  check_same_space(*this, o);
  std::vector<std::pair<int, Rat>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rat c = terms_[i].second + o.terms_[j].second;
      if (c != 0) merged.emplace_back(terms_[i].first, std::move(c));
      ++i, ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

InvariantPolynomial& InvariantPolynomial::operator-=(const InvariantPolynomial& o) {
  InvariantPolynomial neg = o;
  for (auto& [id, c] : neg.terms_) c = -c;
  return *this += neg;
}

InvariantPolynomial& InvariantPolynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [id, coeff] : terms_) coeff *= c;
  }
  return *this;
}

InvariantPolynomial InvariantPolynomial::operator+(const InvariantPolynomial& o) const {
  InvariantPolynomial r = *this;
  r += o;
  return r;
}

InvariantPolynomial InvariantPolynomial::operator-(const InvariantPolynomial& o) const {
  InvariantPolynomial r = *this;
  r -= o;
  return r;
}

InvariantPolynomial InvariantPolynomial::operator*(const Rat& c) const {
  InvariantPolynomial r = *this;
  r *= c;
  return r;
}

bool InvariantPolynomial::operator==(const InvariantPolynomial& o) const {
  return space_ == o.space_ && terms_ == o.terms_;
}

void InvariantPolynomial::add_term(int id, const Rat& c) {
  InvariantPolynomial t(*space_);
  if (c != 0) t.terms_.emplace_back(id, c);
  *this += t;
}

InvariantPolynomial InvariantPolynomial::homogeneous_component(int d) const {
  InvariantPolynomial r(*space_);
  for (const auto& [id, c] : terms_)
    if (space_->degree_of_id(id) == d) r.terms_.emplace_back(id, c);
  return r;
}

InvariantPolynomial invariant_mul(const InvariantPolynomial& a, const InvariantPolynomial& b) {
  check_same_space(a, b);
  OrbitSpace& space = a.space();
  // Materialize every degree a product term can land in (no-ops once done).
  int da = a.degree(), db = b.degree();
  if (da >= 0 && db >= 0) space.ensure_degree(da + db);

  std::unordered_map<int, Rat> acc;
  std::unordered_map<int, long> tally;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      // Expand the smaller orbit against the fixed representative of the
      // larger one.
      const bool a_smaller = space.orbit_size(ga) <= space.orbit_size(gb);
      const int small = a_smaller ? ga : gb;
      const int big = a_smaller ? gb : ga;
      tally.clear();
      tally.reserve(space.members(small).size());
      for (const auto& m : space.members(small)) ++tally[space.id_of(add_vectors(m, space.rep(big)))];
      const long big_orbit = space.orbit_size(big);
      const Rat cab = ca * cb;
      for (const auto& [k, t] : tally) {
        const long k_orbit = space.orbit_size(k);
        const long num = t * big_orbit;
        if (num % k_orbit != 0)
          throw std::logic_error("non-integral structure constant (orbit accounting broken)");
        acc[k] += cab * Rat(num / k_orbit);
      }
    }
  }

  std::vector<std::pair<int, Rat>> terms(acc.begin(), acc.end());
  std::erase_if(terms, [](const auto& t) { return t.second == 0; });
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  InvariantPolynomial r(space);
  r.terms_ = std::move(terms);
  return r;
}

Rat evaluate(const InvariantPolynomial& p, const WeightedGraph& w) {
  OrbitSpace& space = p.space();
  if (static_cast<int>(w.size()) != space.position_count())
    throw std::invalid_argument("weight vector length does not match action");
  Rat total = 0;
  for (const auto& [id, c] : p.terms()) {
    Rat orbit_value = 0;
    for (const auto& m : space.members(id)) {
      Rat mono = 1;
      bool zero = false;
      for (size_t i = 0; i < m.size() && !zero; ++i) {
        int e = static_cast<unsigned char>(m[i]);
        if (e == 0) continue;
        if (w[i] == 0) {
          zero = true;
          break;
        }
        for (int t = 0; t < e; ++t) mono *= w[i];
      }
      if (!zero) orbit_value += mono;
    }
    total += c * orbit_value;
  }
  return total;
}

InvariantPolynomial elementary_symmetric(OrbitSpace& space, int k) {
  if (k < 0) throw std::invalid_argument("elementary_symmetric: negative degree");
  InvariantPolynomial p(space);
  if (k > space.position_count()) return p;
  for (int id : space.canonical_ids(k)) {
    const auto& rep = space.rep(id);
    bool squarefree = true;
    for (unsigned char c : rep)
      if (c > 1) squarefree = false;
    if (squarefree) p.add_term(id, 1);
  }
  return p;
}

InvariantPolynomial power_sum(OrbitSpace& space, int k) {
  if (k < 1) throw std::invalid_argument("power_sum: degree must be >= 1");
  InvariantPolynomial p(space);
  space.ensure_degree(k);
  for (int i = 0; i < space.position_count(); ++i) {
    ExponentVector v(space.position_count(), '\0');
    v[i] = static_cast<char>(k);
    const int id = space.id_of(space.canonical_form(v));
    // Each monomial x_i^k lies in exactly one orbit; record that orbit once.
    if (p.coefficient(id) == 0) p.add_term(id, 1);
  }
  return p;
}

std::vector<Rat> elementary_symmetric_values(const std::vector<Rat>& weights) {
  std::vector<Rat> e(weights.size() + 1, Rat(0));
  e[0] = 1;
  std::size_t used = 0;
  for (const Rat& w : weights) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += w * e[k - 1];
  }
  return e;
}

InvariantPolynomial vertex_power_sum(OrbitSpace& space, int k) {
  const ActionSpec& action = space.action();
  if (action.kind() != ActionKind::GraphEdges)
    throw std::invalid_argument("vertex_power_sum is defined for the graph action");
  if (k < 1) throw std::invalid_argument("vertex_power_sum: degree must be >= 1");
  const int n = action.vertex_count();
  const int m = space.position_count();
  space.ensure_degree(k);

  // Expand each X_v^k as a monomial map, sum over v, then read off the
  // orbit-sum coefficients from the canonical monomials.
  std::map<ExponentVector, Rat> monomials;
  for (int v = 0; v < n; ++v) {
    std::map<ExponentVector, Rat> power{{ExponentVector(m, '\0'), Rat(1)}};
    for (int step = 0; step < k; ++step) {
      std::map<ExponentVector, Rat> next;
      for (const auto& [mono, c] : power) {
        for (int u = 0; u < n; ++u) {
          if (u == v) continue;
          ExponentVector ext = mono;
          const int pos = pair_index(std::min(u, v), std::max(u, v), n);
          ext[pos] = static_cast<char>(static_cast<unsigned char>(ext[pos]) + 1);
          next[ext] += c;
        }
      }
      power = std::move(next);
    }
    for (const auto& [mono, c] : power) monomials[mono] += c;
  }

  InvariantPolynomial p(space);
  for (const auto& [mono, c] : monomials) {
    if (space.canonical_form(mono) == mono) p.add_term(space.id_of(mono), c);
  }
  return p;
}

std::vector<InvariantPolynomial> simple_graph_orbit_sums(OrbitSpace& space, int d) {
  std::vector<InvariantPolynomial> out;
  for (int id : space.canonical_ids(d)) {
    const auto& rep = space.rep(id);
    bool squarefree = true;
    for (unsigned char c : rep)
      if (c > 1) squarefree = false;
    if (!squarefree) continue;
    InvariantPolynomial p(space);
    p.add_term(id, 1);
    out.push_back(std::move(p));
  }
  return out;
}

SeparationResult separates(const std::vector<InvariantPolynomial>& invariants,
                           const WeightedGraph& a, const WeightedGraph& b) {
  for (size_t i = 0; i < invariants.size(); ++i) {
    Rat va = evaluate(invariants[i], a);
    Rat vb = evaluate(invariants[i], b);
    if (va != vb) return {true, static_cast<int>(i), std::move(va), std::move(vb)};
  }
  return {};
}

namespace {

// Vertices touched by each position of the action (pair for an edge, ordered
// pair collapsed to its endpoints for an arc, singleton for a loop).
std::vector<std::vector<int>> position_vertices(const ActionSpec& action) {
  std::vector<std::vector<int>> out(action.position_count());
  const int n = action.vertex_count();
  if (action.kind() == ActionKind::GraphEdges) {
    for (int p = 0; p < action.position_count(); ++p) {
      auto [i, j] = pair_unrank(p, n);
      out[p] = {i, j};
    }
  } else if (action.kind() == ActionKind::DigraphArcs) {
    for (int p = 0; p < action.position_count(); ++p) {
      auto [i, j] = arc_unrank(p, n);
      out[p] = i == j ? std::vector<int>{i} : std::vector<int>{i, j};
    }
  } else {
    throw std::invalid_argument("operation requires a graph or digraph action");
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

InvariantPolynomial project(const InvariantPolynomial& p, OrbitSpace& target) {
  OrbitSpace& source = p.space();
  const ActionSpec& sa = source.action();
  const ActionSpec& ta = target.action();
  if (sa.kind() != ta.kind() ||
      (sa.kind() != ActionKind::GraphEdges && sa.kind() != ActionKind::DigraphArcs))
    throw std::invalid_argument("projection requires graph (or digraph) actions of the same kind");
  const int n = sa.vertex_count();
  const int np = ta.vertex_count();

  const auto pos_vertices = position_vertices(sa);
  InvariantPolynomial out(target);
  for (const auto& [id, c] : p.terms()) {
    const auto& rep = source.rep(id);
    // Vertices used by the representative.
    std::vector<bool> used(n, false);
    for (int pos = 0; pos < static_cast<int>(rep.size()); ++pos)
      if (rep[pos] != 0)
        for (int v : pos_vertices[pos]) used[v] = true;
    std::vector<int> remap(n, -1);
    int k = 0;
    for (int v = 0; v < n; ++v)
      if (used[v]) remap[v] = k++;
    if (k > np) continue;  // needs more vertices than the target has

    ExponentVector image(target.position_count(), '\0');
    for (int pos = 0; pos < static_cast<int>(rep.size()); ++pos) {
      if (rep[pos] == 0) continue;
      int tpos;
      if (sa.kind() == ActionKind::GraphEdges) {
        auto [i, j] = pair_unrank(pos, n);
        tpos = pair_index(remap[i], remap[j], np);
      } else {
        auto [i, j] = arc_unrank(pos, n);
        tpos = arc_index(remap[i], remap[j], np);
      }
      image[tpos] = rep[pos];
    }
    target.ensure_degree(degree_of(image));
    out.add_term(target.id_of(target.canonical_form(image)), c);
  }
  return out;
}

AutomorphismScan automorphism_scan(OrbitSpace& space, const ExponentVector& v) {
  const GroupTable& table = space.table();
  if (!table.has_vertex_elements())
    throw std::invalid_argument("automorphism scan requires a graph or digraph action");
  AutomorphismScan scan;
  for (long g = 0; g < table.order(); ++g) {
    if (space.apply(g, v) == v) {
      ++scan.aut_order;
      if (table.vertex_element(g).sign() < 0) scan.has_odd_automorphism = true;
    }
  }
  return scan;
}

std::vector<ExponentVector> connected_component_vectors(const OrbitSpace& space,
                                                        const ExponentVector& v) {
  const ActionSpec& action = space.action();
  const auto pos_vertices = position_vertices(action);
  const int n = action.vertex_count();
  UnionFind uf(n);
  for (int pos = 0; pos < static_cast<int>(v.size()); ++pos)
    if (v[pos] != 0)
      for (size_t t = 1; t < pos_vertices[pos].size(); ++t)
        uf.unite(pos_vertices[pos][0], pos_vertices[pos][t]);

  // Group positive positions by component root, ordered by smallest vertex.
  std::map<int, ExponentVector> comp;
  for (int pos = 0; pos < static_cast<int>(v.size()); ++pos) {
    if (v[pos] == 0) continue;
    const int root = uf.find(pos_vertices[pos][0]);
    auto it = comp.try_emplace(root, ExponentVector(v.size(), '\0')).first;
    it->second[pos] = v[pos];
  }
  // Re-key by the smallest vertex in each component for a stable order.
  std::map<int, ExponentVector> ordered;
  for (auto& [root, vec] : comp) {
    int smallest = n;
    for (int pos = 0; pos < static_cast<int>(vec.size()); ++pos)
      if (vec[pos] != 0)
        for (int u : pos_vertices[pos]) smallest = std::min(smallest, u);
    ordered.emplace(smallest, std::move(vec));
  }
  std::vector<ExponentVector> out;
  for (auto& [v0, vec] : ordered) out.push_back(std::move(vec));
  return out;
}

bool is_quasi_connected(const OrbitSpace& space, const ExponentVector& v) {
  return connected_component_vectors(space, v).size() <= 1;
}

namespace {

void accumulate_qc(QCExpression& into, const QCTerm& term) {
  for (auto& t : into) {
    if (t.factor_ids == term.factor_ids) {
      t.coeff += term.coeff;
      return;
    }
  }
  into.push_back(term);
}

QCExpression scale_qc(const QCExpression& e, const Rat& c) {
  QCExpression out;
  for (const auto& t : e) out.push_back({t.coeff * c, t.factor_ids});
  return out;
}

QCExpression decompose_id(OrbitSpace& space, int id, std::unordered_map<int, QCExpression>& memo);

QCExpression decompose_vector(OrbitSpace& space, const ExponentVector& v,
                              std::unordered_map<int, QCExpression>& memo) {
  space.ensure_degree(degree_of(v));
  return decompose_id(space, space.id_of(space.canonical_form(v)), memo);
}

QCExpression decompose_id(OrbitSpace& space, int id, std::unordered_map<int, QCExpression>& memo) {
  if (auto it = memo.find(id); it != memo.end()) return it->second;
  const auto components = connected_component_vectors(space, space.rep(id));
  if (components.size() <= 1) {
    QCExpression base{{Rat(1), {id}}};
    memo.emplace(id, base);
    return base;
  }

  // Multiply the component orbit sums; the target orbit appears with
  // coefficient prod (multiplicity of each repeated component type)!, and
  // every other term has strictly fewer nontrivial components.
  std::vector<int> factor_ids;
  InvariantPolynomial product = InvariantPolynomial::constant(space, 1);
  for (const auto& cv : components) {
    factor_ids.push_back(space.id_of(space.canonical_form(cv)));
    product = invariant_mul(product, InvariantPolynomial::orbit_sum(space, cv));
  }
  std::sort(factor_ids.begin(), factor_ids.end());

  const Rat lead = product.coefficient(id);
  if (lead == 0) throw std::logic_error("component product lost its own superposition");

  QCExpression result{{Rat(1) / lead, factor_ids}};
  for (const auto& [h, c] : product.terms()) {
    if (h == id) continue;
    if (connected_component_vectors(space, space.rep(h)).size() >= components.size())
      throw std::logic_error("superposition did not reduce component count");
    QCExpression sub = decompose_id(space, h, memo);
    for (const auto& t : scale_qc(sub, -c / lead)) accumulate_qc(result, t);
  }
  std::erase_if(result, [](const QCTerm& t) { return t.coeff == 0; });
  memo.emplace(id, result);
  return result;
}

}  // namespace

QCExpression quasi_connected_decomposition(OrbitSpace& space, const ExponentVector& v) {
  std::unordered_map<int, QCExpression> memo;
  return decompose_vector(space, v, memo);
}

InvariantPolynomial expand_qc(OrbitSpace& space, const QCExpression& expr) {
  InvariantPolynomial total(space);
  for (const auto& term : expr) {
    InvariantPolynomial prod = InvariantPolynomial::constant(space, term.coeff);
    for (int id : term.factor_ids) {
      InvariantPolynomial f(space);
      f.add_term(id, 1);
      prod = invariant_mul(prod, f);
    }
    total += prod;
  }
  return total;
}

}  // namespace invring
