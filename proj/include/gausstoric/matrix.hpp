#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "gausstoric/integers.hpp"

namespace gausstoric {

/// Dense matrix over Z with exact entries, row-major.  Row vectors are the
/// ambient convention throughout: a homomorphism Z^n -> Z^m is an n x m
/// matrix acting by right multiplication, v |-> v * M.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  void set_row(std::size_t i, const IntVec& v);

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  bool is_zero() const;

  IntMat operator*(const IntMat& rhs) const;
  IntMat transposed() const;

  /// Vertical concatenation; operands must agree on column count.
  static IntMat stacked(const IntMat& top, const IntMat& bottom);
  /// Horizontal concatenation; operands must agree on row count.
  static IntMat adjoined(const IntMat& left, const IntMat& right);

  IntMat submatrix_rows(std::size_t first, std::size_t count) const;
  IntMat submatrix_cols(std::size_t first, std::size_t count) const;

  void swap_rows(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  /// row_i -= q * row_j
  void subtract_row_multiple(std::size_t i, std::size_t j, const Int& q);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_col(std::size_t i);
  /// col_i -= q * col_j
  void subtract_col_multiple(std::size_t i, std::size_t j, const Int& q);

  /// Exact determinant (Bareiss fraction-free elimination); square only.
  Int det() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

IntVec row_times(const IntVec& v, const IntMat& m);

IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_scaled(const IntVec& a, const Int& c);
bool vec_is_zero(const IntVec& v);

/// Exact inverse of a square integer matrix with det = +-1; throws
/// std::invalid_argument otherwise.
IntMat inverse_unimodular(const IntMat& m);

/// Solves x * m = rhs over Q and returns x if it is integral.
std::optional<IntVec> solve_left_integral(const IntMat& m, const IntVec& rhs);

}  // namespace gausstoric
