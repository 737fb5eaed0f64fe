#ifndef INVRING_ROWBASIS_HPP
#define INVRING_ROWBASIS_HPP

/// Exact reduced row-echelon bases for homogeneous components of the
/// invariant ring, in orbit-sum coordinates.
///
/// Canonical ids within one degree are contiguous and their order is a graded
/// monomial order, so a degree-d invariant is a dense rational vector indexed
/// by `id - first id of the degree`.  Rows are kept monic with pairwise
/// distinct pivot columns and fully reduced against each other, which makes
/// `reduce` a canonical normal form modulo the row span: two polynomials have
/// equal residues iff they differ by an element of the span.

#include <vector>

#include "invring/invariant.hpp"

namespace invring {

class RowBasis {
 public:
  /// The basis spans a subspace of the degree-d homogeneous component; the
  /// orbit space is materialized through that degree on construction.
  RowBasis(OrbitSpace* space, int degree);

  /// Reduces p against the rows and, if a nonzero residue remains, stores it
  /// as a new monic row (eliminating its pivot from the other rows).
  /// Returns true exactly when the span grew.  p must be homogeneous of the
  /// basis degree, or zero.
  bool insert(const InvariantPolynomial& p);

  /// Canonical residue of p modulo the row span.
  InvariantPolynomial reduce(const InvariantPolynomial& p) const;

  bool contains(const InvariantPolynomial& p) const { return reduce(p).is_zero(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  /// Dimension of the ambient homogeneous component (= orbit count).
  int dimension() const { return dim_; }
  bool complete() const { return rank() == dim_; }
  int degree() const { return degree_; }
  OrbitSpace* space() const { return space_; }

  /// The rows as polynomials, ordered by pivot column (ascending pivot id).
  std::vector<InvariantPolynomial> rows() const;

 private:
  std::vector<Rat> to_dense(const InvariantPolynomial& p) const;
  InvariantPolynomial from_dense(const std::vector<Rat>& v) const;
  void reduce_dense(std::vector<Rat>& v) const;

  OrbitSpace* space_;
  int degree_;
  int first_id_;
  int dim_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivot_cols_;  // pivot column of each row
  std::vector<int> row_of_col_;  // column -> owning row, or -1
};

}  // namespace invring

#endif
