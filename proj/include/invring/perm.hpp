#ifndef INVRING_PERM_HPP
#define INVRING_PERM_HPP

/// Permutations of {0, ..., k-1}, integer partitions, and the actions induced
/// on edge and arc variables by vertex permutations.
///
/// Position conventions (fixed once and used by every module):
///  - Unordered pairs {i, j} with i < j on n vertices are numbered in
///    lexicographic order: {0,1} < {0,2} < ... < {0,n-1} < {1,2} < ... —
///    pair_index/pair_unrank.
///  - Ordered pairs (i, j) on n vertices, loops included, are numbered
///    row-major: (0,0), (0,1), ..., (0,n-1), (1,0), ... — arc_index.
/// User-facing encodings are 1-based; everything internal is 0-based.

#include <map>
#include <vector>

#include "invring/rational.hpp"

namespace invring {

/// A permutation of {0, ..., size()-1}, stored as the image list.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  /// Composition acting left-to-right on points: (a * b)(i) = b(a(i)).
  Permutation operator*(const Permutation& b) const;
  Permutation inverse() const;

  /// Cycle lengths in weakly decreasing order (includes fixed points).
  std::vector<int> cycle_type() const;

  /// +1 for even permutations, -1 for odd ones.
  int sign() const;

  bool is_identity() const;

 private:
  std::vector<int> img_;
};

/// A partition of an integer: parts in weakly decreasing order.
struct Partition {
  std::vector<int> parts;

  int sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  /// Multiplicity of each part value.
  std::map<int, int> multiplicities() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
};

/// All partitions of n, in reverse lexicographic order starting from (n).
std::vector<Partition> partitions_of(int n);

/// Order of the centralizer of a permutation of cycle type lambda in the
/// symmetric group: prod_i i^{m_i} * m_i!.
Int centralizer_order(const Partition& lambda);

struct ConjugacyClass {
  Partition cycle_type;
  Int size;  // n! / centralizer order
};

/// The conjugacy classes of the symmetric group S_n, keyed by cycle type.
std::vector<ConjugacyClass> conjugacy_classes(int n);

/// Number of unordered pairs C(n, 2).
inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Lexicographic rank of the pair {i, j}, 0 <= i < j < n.
int pair_index(int i, int j, int n);
/// Inverse of pair_index.
std::pair<int, int> pair_unrank(int p, int n);

/// Row-major rank of the ordered pair (i, j), loops allowed.
inline int arc_index(int i, int j, int n) { return i * n + j; }
inline std::pair<int, int> arc_unrank(int p, int n) { return {p / n, p % n}; }

/// The permutation of edge positions induced by the vertex permutation sigma:
/// position of {i, j} maps to position of {sigma(i), sigma(j)}.
Permutation induced_edge_permutation(const Permutation& sigma, int n);

/// The permutation of arc positions induced by sigma: (i, j) maps to
/// (sigma(i), sigma(j)); loops map to loops.
Permutation induced_arc_permutation(const Permutation& sigma, int n);

/// Cycle type of the induced edge permutation, computed directly from the
/// vertex cycle type:
///  - a pair of distinct vertex cycles of lengths a, b yields gcd(a,b) edge
///    cycles of length lcm(a,b);
///  - a single vertex cycle of odd length a yields (a-1)/2 cycles of length a;
///  - a single vertex cycle of even length a yields (a-2)/2 cycles of length a
///    plus one cycle of length a/2.
/// Returned as length -> multiplicity; multiplicities sum against lengths to
/// C(n, 2).
std::map<int, int> edge_cycle_type(const Partition& lambda);

/// Cycle type of the induced arc permutation (loops included):
///  - a pair of distinct vertex cycles of lengths a, b yields 2 gcd(a,b)
///    cycles of length lcm(a,b);
///  - a single vertex cycle of length a yields a cycles of length a.
/// Lengths weighted by multiplicities sum to n^2.
std::map<int, int> arc_cycle_type(const Partition& lambda);

/// All n! permutations of {0..n-1} in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

}  // namespace invring

#endif
