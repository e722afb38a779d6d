#include "gausstoric/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gausstoric {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("row length mismatch");
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void IntMat::set_row(std::size_t i, const IntVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool IntMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
  IntMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

IntMat IntMat::transposed() const {
  IntMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMat IntMat::stacked(const IntMat& top, const IntMat& bottom) {
  if (top.cols_ != bottom.cols_ && top.rows_ != 0 && bottom.rows_ != 0)
    throw std::invalid_argument("column mismatch");
  std::size_t cols = top.rows_ == 0 ? bottom.cols_ : top.cols_;
  IntMat out(top.rows_ + bottom.rows_, cols);
  for (std::size_t i = 0; i < top.rows_; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows_; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out.at(top.rows_ + i, j) = bottom.at(i, j);
  return out;
}

IntMat IntMat::adjoined(const IntMat& left, const IntMat& right) {
  if (left.rows_ != right.rows_) throw std::invalid_argument("row mismatch");
  IntMat out(left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j) out.at(i, j) = left.at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j)
      out.at(i, left.cols_ + j) = right.at(i, j);
  }
  return out;
}

IntMat IntMat::submatrix_rows(std::size_t first, std::size_t count) const {
  IntMat out(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(first + i, j);
  return out;
}

IntMat IntMat::submatrix_cols(std::size_t first, std::size_t count) const {
  IntMat out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
  return out;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMat::subtract_row_multiple(std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) -= q * at(j, k);
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::negate_col(std::size_t i) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) = -at(k, i);
}

void IntMat::subtract_col_multiple(std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) -= q * at(k, j);
}

Int IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMat m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntVec row_times(const IntVec& v, const IntMat& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("dimension mismatch");
  IntVec out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m.at(k, j);
  }
  return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec vec_scaled(const IntVec& a, const Int& c) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool vec_is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

namespace {

// Gauss-Jordan over Q on [m | rhs]; returns the solution block or nullopt
// when m is singular.
std::optional<std::vector<std::vector<Rat>>> solve_rational(
    const IntMat& m, const std::vector<std::vector<Rat>>& rhs) {
  std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("square matrix required");
  std::size_t w = rhs.empty() ? 0 : rhs[0].size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + w));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    for (std::size_t j = 0; j < w; ++j) a[i][n + j] = rhs[i][j];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    Rat inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < n + w; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(w));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < w; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

IntMat inverse_unimodular(const IntMat& m) {
  std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("square matrix required");
  std::vector<std::vector<Rat>> rhs(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) rhs[i][i] = 1;
  auto sol = solve_rational(m, rhs);
  if (!sol) throw std::invalid_argument("matrix not invertible");
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = (*sol)[i][j];
      if (x.get_den() != 1)
        throw std::invalid_argument("matrix not unimodular");
      out.at(i, j) = x.get_num();
    }
  return out;
}

std::optional<IntVec> solve_left_integral(const IntMat& m, const IntVec& rhs) {
  // x * m = rhs  <=>  m^T * x^T = rhs^T
  IntMat mt = m.transposed();
  std::size_t n = mt.rows();
  if (mt.cols() != n)
    throw std::invalid_argument("square matrix required");
  std::vector<std::vector<Rat>> r(n, std::vector<Rat>(1));
  for (std::size_t i = 0; i < n; ++i) r[i][0] = Rat(rhs[i]);
  auto sol = solve_rational(mt, r);
  if (!sol) return std::nullopt;
  IntVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((*sol)[i][0].get_den() != 1) return std::nullopt;
    out[i] = (*sol)[i][0].get_num();
  }
  return out;
}

}  // namespace gausstoric
