#include "invring/rowbasis.hpp"

#include <stdexcept>

namespace invring {

RowBasis::RowBasis(OrbitSpace* space, int degree) : space_(space), degree_(degree) {
  if (space == nullptr) throw std::invalid_argument("RowBasis: null orbit space");
  if (degree < 0) throw std::invalid_argument("RowBasis: negative degree");
  space_->ensure_degree(degree);
  const std::vector<int>& ids = space_->canonical_ids(degree);
  dim_ = static_cast<int>(ids.size());
  first_id_ = dim_ > 0 ? ids.front() : 0;
  row_of_col_.assign(dim_, -1);
}

std::vector<Rat> RowBasis::to_dense(const InvariantPolynomial& p) const {
  if (&p.space() != space_)
    throw std::invalid_argument("RowBasis: polynomial from another space");
  std::vector<Rat> v(dim_, Rat(0));
  for (const auto& [id, coeff] : p.terms()) {
    if (space_->degree_of_id(id) != degree_)
      throw std::invalid_argument("RowBasis: polynomial not homogeneous of the basis degree");
    v[id - first_id_] = coeff;
  }
  return v;
}

InvariantPolynomial RowBasis::from_dense(const std::vector<Rat>& v) const {
  InvariantPolynomial p(*space_);
  for (int col = 0; col < dim_; ++col) {
    if (v[col] != 0) p.add_term(first_id_ + col, v[col]);
  }
  return p;
}

void RowBasis::reduce_dense(std::vector<Rat>& v) const {
  // Rows are mutually reduced, so one ascending sweep over the columns
  // eliminates every pivot: a subtraction only changes columns right of the
  // pivot, none of which are pivot columns of other rows.
  for (int col = 0; col < dim_; ++col) {
    if (v[col] == 0) continue;
    int r = row_of_col_[col];
    if (r < 0) continue;
    Rat c = v[col];
    const std::vector<Rat>& row = rows_[r];
    v[col] = 0;
    for (int j = col + 1; j < dim_; ++j) {
      if (row[j] != 0) v[j] -= c * row[j];
    }
  }
}

bool RowBasis::insert(const InvariantPolynomial& p) {
  std::vector<Rat> v = to_dense(p);
  reduce_dense(v);
  int pivot = -1;
  for (int col = 0; col < dim_; ++col) {
    if (v[col] != 0) {
      pivot = col;
      break;
    }
  }
  if (pivot < 0) return false;
  Rat lead = v[pivot];
  for (int j = pivot; j < dim_; ++j) {
    if (v[j] != 0) v[j] /= lead;
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat c = rows_[r][pivot];
    if (c == 0) continue;
    std::vector<Rat>& row = rows_[r];
    for (int j = pivot; j < dim_; ++j) {
      if (v[j] != 0) row[j] -= c * v[j];
    }
  }
  row_of_col_[pivot] = static_cast<int>(rows_.size());
  pivot_cols_.push_back(pivot);
  rows_.push_back(std::move(v));
  return true;
}

InvariantPolynomial RowBasis::reduce(const InvariantPolynomial& p) const {
  std::vector<Rat> v = to_dense(p);
  reduce_dense(v);
  return from_dense(v);
}

std::vector<InvariantPolynomial> RowBasis::rows() const {
  // Order by pivot column so the result is independent of insertion order.
  std::vector<InvariantPolynomial> out;
  out.reserve(rows_.size());
  for (int col = 0; col < dim_; ++col) {
    int r = row_of_col_[col];
    if (r >= 0) out.push_back(from_dense(rows_[r]));
  }
  return out;
}

}  // namespace invring
