#include "invring/orbit_space.hpp"

#include <algorithm>

namespace invring {

namespace {

// Number of exponent vectors of degree d on m positions: C(d + m - 1, m - 1).
Int vector_count(int d, int m) {
  if (m == 0) return d == 0 ? 1 : 0;
  return binomial(Int(d) + m - 1, m - 1);
}

// Guard against accidentally materializing an astronomically large degree
// (the algorithms in this library only ever need modest ones).
constexpr long kMaterializationLimit = 20000000;

}  // namespace

void OrbitSpace::ensure_degree(int d) {
  for (int e = materialized_ + 1; e <= d; ++e) materialize_degree(e);
}

void OrbitSpace::materialize_degree(int d) {
  const int m = position_count();
  if (d > 255) throw std::invalid_argument("degree too large for byte-packed exponents");
  Int count = vector_count(d, m);
  if (count > kMaterializationLimit)
    throw std::runtime_error("degree " + std::to_string(d) + " has " + count.get_str() +
                             " exponent vectors; refusing to materialize");

  ids_by_degree_.resize(std::max<size_t>(ids_by_degree_.size(), d + 1));
  auto& degree_ids = ids_by_degree_[d];

  if (m == 0) {
    if (d == 0) {
      records_.push_back({ExponentVector(), 0, 1, {ExponentVector()}});
      vector_to_id_.emplace(ExponentVector(), 0);
      degree_ids.push_back(0);
    }
    materialized_ = d;
    return;
  }

  // Scan compositions of d into m parts in decreasing lexicographic order,
  // starting from (d, 0, ..., 0).  The first unseen vector of each orbit is
  // its canonical form; expand the orbit right away.
  ExponentVector v(m, '\0');
  v[0] = static_cast<char>(d);
  const long order = group_order();
  for (;;) {
    if (vector_to_id_.find(v) == vector_to_id_.end()) {
      const int id = static_cast<int>(records_.size());
      Record rec;
      rec.rep = v;
      rec.degree = d;
      for (long g = 0; g < order; ++g) {
        ExponentVector w = apply(g, v);
        if (vector_to_id_.emplace(w, id).second) rec.members.push_back(std::move(w));
      }
      rec.orbit_size = static_cast<long>(rec.members.size());
      if (order % rec.orbit_size != 0)
        throw std::logic_error("orbit size does not divide group order");
      records_.push_back(std::move(rec));
      degree_ids.push_back(id);
    }

    // Advance to the next composition in decreasing lexicographic order: take
    // the rightmost nonzero entry among the first m-1 positions, move one unit
    // rightward, and collect everything to its right just after it.
    int j = m - 2;
    while (j >= 0 && v[j] == 0) --j;
    if (j < 0) break;
    const int tail = static_cast<unsigned char>(v[m - 1]);
    v[j] = static_cast<char>(static_cast<unsigned char>(v[j]) - 1);
    v[m - 1] = 0;
    v[j + 1] = static_cast<char>(tail + 1);
    for (int k = j + 2; k < m; ++k) v[k] = 0;
  }
  materialized_ = d;
}

const ExponentVector& OrbitSpace::canonical_form(const ExponentVector& v) {
  if (static_cast<int>(v.size()) != position_count())
    throw std::invalid_argument("exponent vector length does not match action");
  ensure_degree(degree_of(v));
  return records_[vector_to_id_.at(v)].rep;
}

CanonicalGraph OrbitSpace::orbit_data(const ExponentVector& v) {
  if (static_cast<int>(v.size()) != position_count())
    throw std::invalid_argument("exponent vector length does not match action");
  ensure_degree(degree_of(v));
  const Record& rec = records_[vector_to_id_.at(v)];
  return {rec.rep, rec.orbit_size, group_order() / rec.orbit_size};
}

const std::vector<int>& OrbitSpace::canonical_ids(int d) {
  ensure_degree(d);
  static const std::vector<int> empty;
  if (d >= static_cast<int>(ids_by_degree_.size())) return empty;
  return ids_by_degree_[d];
}

int OrbitSpace::id_of(const ExponentVector& v) const {
  auto it = vector_to_id_.find(v);
  if (it == vector_to_id_.end())
    throw std::logic_error("exponent vector of unmaterialized degree (call ensure_degree first)");
  return it->second;
}

ExponentVector OrbitSpace::apply(long g, const ExponentVector& v) const {
  const Permutation& p = table_->element(g);
  ExponentVector w(v.size(), '\0');
  for (size_t i = 0; i < v.size(); ++i) w[p(static_cast<int>(i))] = v[i];
  return w;
}

}  // namespace invring
