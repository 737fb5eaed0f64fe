#include "invring/series.hpp"

namespace invring {

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  r += b;
  return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  r -= b;
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.bound() != b.bound())
    throw std::invalid_argument("series bound mismatch: " + std::to_string(a.bound()) + " vs " +
                                std::to_string(b.bound()));
  const int bound = a.bound();
  TruncatedSeries r(bound);
  for (int i = 0; i <= bound; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= bound; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

TruncatedSeries geometric_factor(int a, const Int& b, int bound) {
  if (a <= 0) throw std::invalid_argument("geometric_factor: exponent step must be >= 1");
  if (b < 0) throw std::invalid_argument("geometric_factor: negative multiplicity");
  TruncatedSeries r(bound);
  r[0] = 1;
  if (b > 0)
    for (int j = 1; a * j <= bound; ++j) r[a * j] = binomial(b - 1 + j, j);
  return r;
}

DominanceVerdict dominates(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.bound() != b.bound())
    throw std::invalid_argument("series bound mismatch in dominance comparison");
  for (int d = 0; d <= a.bound(); ++d) {
    if (a[d] > b[d]) return {false, d};
  }
  return {true, -1};
}

bool DegreePolynomial::is_unimodal(bool skip_ends) const {
  const int lo = skip_ends ? 1 : 0;
  const int hi = skip_ends ? degree() - 1 : degree();
  int d = lo;
  while (d + 1 <= hi && coeff_[d] <= coeff_[d + 1]) ++d;
  while (d + 1 <= hi && coeff_[d] >= coeff_[d + 1]) ++d;
  return d >= hi;
}

bool DegreePolynomial::is_palindromic() const {
  const int n = degree();
  for (int d = 0; 2 * d <= n; ++d)
    if (coeff_[d] != coeff_[n - d]) return false;
  return true;
}

}  // namespace invring
