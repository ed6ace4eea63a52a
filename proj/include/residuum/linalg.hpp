#ifndef RESIDUUM_LINALG_HPP
#define RESIDUUM_LINALG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "residuum/rational.hpp"

namespace residuum {

/// Dense matrix over Rational with the exact solvers every verification in
/// this project reduces to. Pivoting is deterministic (first nonzero entry),
/// so reduced forms and kernel bases are reproducible byte for byte.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Rational>& row);

  /// Reduced row echelon form (pivots normalized to 1, cleared above and
  /// below), returned together with the pivot column indices.
  RatMatrix rref(std::vector<size_t>* pivot_cols = nullptr) const;

  size_t rank() const;

  /// Basis of the right kernel, one vector per non-pivot column, in column
  /// order, each with a 1 in its free coordinate.
  std::vector<std::vector<Rational>> kernel_basis() const;

  /// Row space basis (the nonzero rows of the RREF).
  std::vector<std::vector<Rational>> row_basis() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  /// True when v lies in the span of the rows.
  bool row_space_contains(const std::vector<Rational>& v) const;

  std::string str() const;

private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// A system of exact linear conditions M * x = 0 on named coefficients.
class ConstraintSystem {
public:
  ConstraintSystem() = default;
  ConstraintSystem(RatMatrix m, std::vector<std::string> var_names)
      : matrix_(std::move(m)), var_names_(std::move(var_names)) {}

  const RatMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& var_names() const { return var_names_; }

  size_t rank() const { return matrix_.rank(); }
  size_t num_vars() const { return matrix_.cols(); }
  size_t nullity() const { return num_vars() - rank(); }
  std::vector<std::vector<Rational>> solution_basis() const { return matrix_.kernel_basis(); }

  bool satisfied_by(const std::vector<Rational>& x) const;

private:
  RatMatrix matrix_;
  std::vector<std::string> var_names_;
};

} // namespace residuum

#endif
