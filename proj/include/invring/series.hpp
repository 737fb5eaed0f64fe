#ifndef INVRING_SERIES_HPP
#define INVRING_SERIES_HPP

/// Truncated power series and integer polynomials in one variable z.
///
/// A TruncatedSeries carries its truncation bound explicitly: it represents a
/// power series modulo z^(bound+1).  Binary operations require both operands
/// to have the same bound; mixing bounds is a programming error and throws
/// rather than silently truncating.

#include <vector>

#include "invring/rational.hpp"

namespace invring {

class TruncatedSeries {
 public:
  /// The zero series truncated at the given bound (inclusive highest degree).
  explicit TruncatedSeries(int bound) : coeff_(bound + 1, Rat(0)) {
    if (bound < 0) throw std::invalid_argument("series bound must be >= 0");
  }

  static TruncatedSeries one(int bound) {
    TruncatedSeries s(bound);
    s.coeff_[0] = 1;
    return s;
  }

  int bound() const { return static_cast<int>(coeff_.size()) - 1; }

  const Rat& operator[](int d) const { return coeff_.at(d); }
  Rat& operator[](int d) { return coeff_.at(d); }

  bool operator==(const TruncatedSeries& o) const { return coeff_ == o.coeff_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_same_bound(o);
    for (size_t d = 0; d < coeff_.size(); ++d) coeff_[d] += o.coeff_[d];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_same_bound(o);
    for (size_t d = 0; d < coeff_.size(); ++d) coeff_[d] -= o.coeff_[d];
    return *this;
  }

  TruncatedSeries& operator*=(const Rat& c) {
    for (auto& x : coeff_) x *= c;
    return *this;
  }

  /// In-place multiplication by (1 - z^a): one backward sweep.
  void mul_one_minus_pow(int a) {
    if (a <= 0) throw std::invalid_argument("cycle length must be positive");
    for (int d = bound(); d >= a; --d) coeff_[d] -= coeff_[d - a];
  }

  /// In-place multiplication by (1 + z^a).
  void mul_one_plus_pow(int a) {
    if (a <= 0) throw std::invalid_argument("cycle length must be positive");
    for (int d = bound(); d >= a; --d) coeff_[d] += coeff_[d - a];
  }

  /// In-place division by (1 - z^a), i.e. multiplication by the geometric
  /// series 1 + z^a + z^{2a} + ...: one forward sweep.
  void div_one_minus_pow(int a) {
    if (a <= 0) throw std::invalid_argument("cycle length must be positive");
    for (int d = a; d <= bound(); ++d) coeff_[d] += coeff_[d - a];
  }

  bool is_zero() const {
    for (const auto& x : coeff_)
      if (x != 0) return false;
    return true;
  }

  /// True iff every coefficient is a nonnegative integer.
  bool is_nonnegative_integral() const {
    for (const auto& x : coeff_)
      if (x < 0 || !is_integer(x)) return false;
    return true;
  }

 private:
  void check_same_bound(const TruncatedSeries& o) const {
    if (coeff_.size() != o.coeff_.size())
      throw std::invalid_argument("series bound mismatch: " + std::to_string(bound()) + " vs " +
                                  std::to_string(o.bound()));
  }

  std::vector<Rat> coeff_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);

/// Full Cauchy product truncated at the common bound; throws on mismatched
/// bounds.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// The expansion of (1 - z^a)^(-b) truncated at `bound`; the coefficient of
/// z^(a j) is C(b - 1 + j, j).  Requires a >= 1 and b >= 0 (b = 0 gives 1).
TruncatedSeries geometric_factor(int a, const Int& b, int bound);

struct DominanceVerdict {
  bool dominated = true;
  /// Smallest degree d with a[d] > b[d]; meaningful only when !dominated.
  int first_failure = -1;
};

/// Coefficient-wise comparison: is a[d] <= b[d] for every d up to the common
/// bound?  Reports the first failing degree otherwise.
DominanceVerdict dominates(const TruncatedSeries& a, const TruncatedSeries& b);

/// A polynomial with integer coefficients, used for degree statistics
/// (secondary-invariant counts, generator counts by degree).  Trailing zero
/// coefficients are trimmed so degree() is exact; the zero polynomial has an
/// empty coefficient list.
class DegreePolynomial {
 public:
  DegreePolynomial() = default;
  explicit DegreePolynomial(std::vector<Int> coeff) : coeff_(std::move(coeff)) { trim(); }

  /// Degree of the polynomial, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }

  Int coefficient(int d) const {
    if (d < 0 || d > degree()) return 0;
    return coeff_[d];
  }

  const std::vector<Int>& coefficients() const { return coeff_; }

  bool operator==(const DegreePolynomial& o) const { return coeff_ == o.coeff_; }

  Int sum() const {
    Int s = 0;
    for (const auto& c : coeff_) s += c;
    return s;
  }

  /// True iff the coefficient list rises (weakly) to a peak and then falls
  /// (weakly).  With skip_ends, the first and last coefficients are excluded
  /// from the check (useful when the ends are structural outliers).
  bool is_unimodal(bool skip_ends = false) const;

  /// True iff coefficient(d) == coefficient(degree() - d) for all d.
  bool is_palindromic() const;

 private:
  void trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
  }
  std::vector<Int> coeff_;
};

}  // namespace invring

#endif
