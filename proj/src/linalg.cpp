#include "residuum/linalg.hpp"

#include <sstream>

#include "residuum/errors.hpp"

namespace residuum {

void RatMatrix::append_row(const std::vector<Rational>& row) {
  if (cols_ == 0 && rows_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw Error(Error::Kind::internal, "appending row of wrong width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RatMatrix RatMatrix::rref(std::vector<size_t>* pivot_cols) const {
  RatMatrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  size_t pivot_row = 0;
  for (size_t col = 0; col < m.cols_ && pivot_row < m.rows_; ++col) {
    size_t sel = pivot_row;
    while (sel < m.rows_ && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows_) continue;
    if (sel != pivot_row) {
      for (size_t c = 0; c < m.cols_; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
    }
    Rational inv = m.at(pivot_row, col).inverse();
    for (size_t c = col; c < m.cols_; ++c) m.at(pivot_row, c) *= inv;
    for (size_t r = 0; r < m.rows_; ++r) {
      if (r == pivot_row || m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col);
      for (size_t c = col; c < m.cols_; ++c) m.at(r, c) -= f * m.at(pivot_row, c);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return m;
}

size_t RatMatrix::rank() const {
  std::vector<size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::vector<std::vector<Rational>> RatMatrix::kernel_basis() const {
  std::vector<size_t> pivots;
  RatMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free] = Rational(1);
    for (size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -r.at(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> RatMatrix::row_basis() const {
  std::vector<size_t> pivots;
  RatMatrix r = rref(&pivots);
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Rational> row(cols_);
    for (size_t c = 0; c < cols_; ++c) row[c] = r.at(i, c);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw Error(Error::Kind::internal, "matrix-vector size mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

bool RatMatrix::row_space_contains(const std::vector<Rational>& v) const {
  RatMatrix ext = *this;
  ext.append_row(v);
  return ext.rank() == rank();
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c).str();
    }
    os << "]\n";
  }
  return os.str();
}

bool ConstraintSystem::satisfied_by(const std::vector<Rational>& x) const {
  for (const Rational& y : matrix_.apply(x)) {
    if (!y.is_zero()) return false;
  }
  return true;
}

} // namespace residuum
