#include "invring/perm.hpp"

#include <algorithm>
#include <numeric>

namespace invring {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& b) const {
  if (size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(size());
  for (int i = 0; i < size(); ++i) img[i] = b.img_[img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(size());
  for (int i = 0; i < size(); ++i) img[img_[i]] = i;
  return Permutation(std::move(img));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(size(), false);
  std::vector<int> lengths;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Permutation::sign() const {
  int parity = 0;
  for (int len : cycle_type()) parity += len - 1;
  return parity % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts) ++m[p];
  return m;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  // Standard descent recursion: parts weakly decreasing, largest first.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.parts.push_back(p);
      self(self, remaining - p, p);
      cur.parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Int centralizer_order(const Partition& lambda) {
  Int z = 1;
  for (auto [part, mult] : lambda.multiplicities()) {
    for (int i = 0; i < mult; ++i) z *= part;
    z *= factorial(mult);
  }
  return z;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  const Int order = factorial(n);
  std::vector<ConjugacyClass> classes;
  for (const auto& lambda : partitions_of(n)) {
    Int z = centralizer_order(lambda);
    classes.push_back({lambda, order / z});
  }
  return classes;
}

int pair_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (i < 0 || i == j || j >= n) throw std::invalid_argument("bad vertex pair");
  // Pairs starting with 0..i-1 come first: sum of (n-1-k) for k < i.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_unrank(int p, int n) {
  for (int i = 0; i < n - 1; ++i) {
    int row = n - 1 - i;
    if (p < row) return {i, i + 1 + p};
    p -= row;
  }
  throw std::invalid_argument("pair rank out of range");
}

Permutation induced_edge_permutation(const Permutation& sigma, int n) {
  if (sigma.size() != n) throw std::invalid_argument("vertex permutation size mismatch");
  std::vector<int> img(pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) img[pair_index(i, j, n)] = pair_index(sigma(i), sigma(j), n);
  return Permutation(std::move(img));
}

Permutation induced_arc_permutation(const Permutation& sigma, int n) {
  if (sigma.size() != n) throw std::invalid_argument("vertex permutation size mismatch");
  std::vector<int> img(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) img[arc_index(i, j, n)] = arc_index(sigma(i), sigma(j), n);
  return Permutation(std::move(img));
}

std::map<int, int> edge_cycle_type(const Partition& lambda) {
  std::map<int, int> type;
  const auto& parts = lambda.parts;
  for (size_t u = 0; u < parts.size(); ++u) {
    const int a = parts[u];
    // Pairs with both endpoints inside one vertex cycle.
    if (a % 2 == 1) {
      if (a >= 3) type[a] += (a - 1) / 2;
    } else {
      if (a >= 4) type[a] += (a - 2) / 2;
      type[a / 2] += 1;
    }
    // Pairs across two distinct vertex cycles.
    for (size_t v = u + 1; v < parts.size(); ++v) {
      const int b = parts[v];
      const int g = std::gcd(a, b);
      type[a / g * b] += g;
    }
  }
  return type;
}

std::map<int, int> arc_cycle_type(const Partition& lambda) {
  std::map<int, int> type;
  const auto& parts = lambda.parts;
  for (size_t u = 0; u < parts.size(); ++u) {
    const int a = parts[u];
    // Arcs with both endpoints inside one vertex cycle: the loops form one
    // a-cycle and the off-diagonal arcs form a-1 further a-cycles.
    type[a] += a;
    for (size_t v = u + 1; v < parts.size(); ++v) {
      const int b = parts[v];
      const int g = std::gcd(a, b);
      type[a / g * b] += 2 * g;
    }
  }
  return type;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace invring
