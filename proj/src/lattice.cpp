#include "gausstoric/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gausstoric {

HermiteResult hermite_normal_form(const IntMat& a) {
  HermiteResult res;
  res.h = a;
  res.transform = IntMat::identity(a.rows());
  IntMat& h = res.h;
  IntMat& u = res.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // Euclidean elimination below row r in column c.
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == a.rows() ||
            cmp(abs(h.at(i, c)), abs(h.at(best, c))) < 0)
          best = i;
      }
      if (best == a.rows()) break;  // column clear below r
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      if (h.at(r, c) < 0) {
        h.negate_row(r);
        u.negate_row(r);
      }
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = floor_div(h.at(i, c), h.at(r, c));
        h.subtract_row_multiple(i, r, q);
        u.subtract_row_multiple(i, r, q);
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, c) != 0) {
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(h.at(i, c), h.at(r, c));
        h.subtract_row_multiple(i, r, q);
        u.subtract_row_multiple(i, r, q);
      }
      res.pivot_cols.push_back(c);
      ++r;
    }
  }
  res.rank = r;
  return res;
}

Lattice hermite_basis(const IntMat& generators) {
  HermiteResult hr = hermite_normal_form(generators);
  Lattice l;
  l.ambient_rank = generators.cols();
  l.basis = hr.h.submatrix_rows(0, hr.rank);
  return l;
}

IntMat SmithDecomposition::diagonal() const {
  IntMat d(rows, cols);
  for (std::size_t i = 0; i < divisors.size(); ++i) d.at(i, i) = divisors[i];
  return d;
}

SmithDecomposition smith(const IntMat& a) {
  SmithDecomposition res;
  res.rows = a.rows();
  res.cols = a.cols();
  res.left = IntMat::identity(a.rows());
  res.right = IntMat::identity(a.cols());
  IntMat d = a;
  IntMat& u = res.left;
  IntMat& v = res.right;

  std::size_t t = 0;
  std::size_t bound = std::min(a.rows(), a.cols());
  while (t < bound) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = a.rows(), pj = a.cols();
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (d.at(i, j) == 0) continue;
        if (pi == a.rows() || cmp(abs(d.at(i, j)), abs(d.at(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == a.rows()) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = floor_div(d.at(i, t), d.at(t, t));
        d.subtract_row_multiple(i, t, q);
        u.subtract_row_multiple(i, t, q);
        if (d.at(i, t) != 0) {
          // remainder smaller than pivot: promote it
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = floor_div(d.at(t, j), d.at(t, t));
        d.subtract_col_multiple(j, t, q);
        v.subtract_col_multiple(j, t, q);
        if (d.at(t, j) != 0) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // pivot must divide every remaining entry
      bool fixed = true;
      for (std::size_t i = t + 1; i < a.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < a.cols() && fixed; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.subtract_row_multiple(t, i, Int(-1));
            u.subtract_row_multiple(t, i, Int(-1));
            fixed = false;
          }
        }
      if (fixed) break;
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }
  res.divisors.reserve(t);
  for (std::size_t i = 0; i < t; ++i) res.divisors.push_back(d.at(i, i));
  return res;
}

Lattice kernel_basis(const IntMat& m) {
  if (m.cols() == 0) {
    Lattice l;
    l.ambient_rank = m.rows();
    l.basis = IntMat::identity(m.rows());
    return l;
  }
  HermiteResult hr = hermite_normal_form(m);
  IntMat gen = hr.transform.submatrix_rows(hr.rank, m.rows() - hr.rank);
  Lattice l = hermite_basis(gen);
  l.ambient_rank = m.rows();
  return l;
}

std::optional<IntVec> solve_in_lattice(const Lattice& l, const IntVec& v) {
  if (v.size() != l.ambient_rank)
    throw std::invalid_argument("ambient rank mismatch");
  // Echelon structure: peel off coordinates at the pivot columns.
  IntVec rem = v;
  IntVec coeff(l.rank());
  std::size_t row = 0;
  for (std::size_t c = 0; c < l.ambient_rank; ++c) {
    if (row < l.rank() && l.basis.at(row, c) != 0) {
      Int q = rem[c] / l.basis.at(row, c);
      if (q * l.basis.at(row, c) != rem[c]) return std::nullopt;
      coeff[row] = q;
      for (std::size_t j = c; j < l.ambient_rank; ++j)
        rem[j] -= q * l.basis.at(row, j);
      ++row;
    } else if (rem[c] != 0) {
      return std::nullopt;
    }
  }
  return coeff;
}

bool lattice_contains(const Lattice& l, const IntVec& v) {
  return solve_in_lattice(l, v).has_value();
}

bool lattice_contains(const Lattice& outer, const Lattice& inner) {
  for (std::size_t i = 0; i < inner.rank(); ++i)
    if (!lattice_contains(outer, inner.basis.row(i))) return false;
  return true;
}

Lattice saturate(const Lattice& l) {
  if (l.rank() == 0) return l;
  // Double annihilator: Sat(L) = (L^perp)^perp, and kernels of integer
  // matrices are saturated.
  Lattice perp = kernel_basis(l.basis.transposed());
  if (perp.rank() == 0) {
    Lattice full;
    full.ambient_rank = l.ambient_rank;
    full.basis = IntMat::identity(l.ambient_rank);
    return full;
  }
  return kernel_basis(perp.basis.transposed());
}

std::tuple<Int, Int, unsigned long> index_and_p_split(const Lattice& l,
                                                      const Lattice& s,
                                                      const Int& p) {
  if (l.ambient_rank != s.ambient_rank || l.rank() != s.rank())
    throw precondition_error("not finite index: ranks differ");
  IntMat coords(l.rank(), s.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) {
    auto c = solve_in_lattice(s, l.basis.row(i));
    if (!c) throw precondition_error("not finite index: not contained");
    coords.set_row(i, *c);
  }
  Int a = 1;
  for (const Int& d : smith(coords).divisors) a *= d;
  if (p == 0) return {a, a, 0};
  Int b = a;
  unsigned long s_exp = 0;
  while (b % p == 0) {
    b /= p;
    ++s_exp;
  }
  return {a, b, s_exp};
}

std::size_t rank_over_field(const IntMat& generators, const Int& p) {
  if (p == 0) {
    return hermite_normal_form(generators).rank;
  }
  if (!is_prime(p))
    throw input_error("characteristic must be 0 or prime");
  IntMat m(generators.rows(), generators.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.at(i, j) = mod_positive(generators.at(i, j), p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(rank, piv);
    Int inv;
    mpz_invert(inv.get_mpz_t(), m.at(rank, c).get_mpz_t(), p.get_mpz_t());
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m.at(i, c) == 0) continue;
      Int f = mod_positive(m.at(i, c) * inv, p);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = mod_positive(m.at(i, j) - f * m.at(rank, j), p);
    }
    ++rank;
  }
  return rank;
}

QuotientProjection quotient_projection(const Lattice& s) {
  std::size_t n = s.ambient_rank;
  std::size_t r = s.rank();
  if (saturate(s) != s) throw precondition_error("quotient has torsion");

  QuotientProjection q;
  if (r == 0) {
    q.matrix = IntMat::identity(n);
    q.kernel = s;
    q.splitting = IntMat::identity(n);
    return q;
  }
  SmithDecomposition sd = smith(s.basis);
  // Saturated lattice: all invariant factors are 1, so the rows of
  // right^-1 extend the basis to Z^n and the trailing columns of `right`
  // give the quotient coordinates.
  for (const Int& d : sd.divisors)
    if (d != 1) throw precondition_error("quotient has torsion");
  IntMat right_inv = inverse_unimodular(sd.right);
  q.matrix = sd.right.submatrix_cols(r, n - r);
  q.splitting = right_inv.submatrix_rows(r, n - r);
  q.kernel = hermite_basis(right_inv.submatrix_rows(0, r));
  if (q.kernel != s)
    throw std::logic_error("quotient kernel mismatch");
  return q;
}

IntMat embed_with_cokernel(const Lattice& k, const Int& c) {
  if (k.rank() == 0)
    throw precondition_error("embedding requires positive rank");
  if (c <= 0) throw input_error("cokernel order must be positive");
  IntMat f = k.basis;
  for (std::size_t j = 0; j < f.cols(); ++j) f.at(0, j) *= c;
  return f;
}

IntMat complete_to_kernel_basis(const Lattice& k, const IntMat& partial) {
  std::size_t q = partial.rows();
  std::size_t r = k.rank();
  if (q > r) throw precondition_error("too many rows to extend");
  IntMat coords(q, r);
  for (std::size_t i = 0; i < q; ++i) {
    auto c = solve_in_lattice(k, partial.row(i));
    if (!c) throw precondition_error("row not contained in the lattice");
    coords.set_row(i, *c);
  }
  SmithDecomposition sd = smith(coords);
  if (sd.divisors.size() != q)
    throw precondition_error("rows not independent");
  for (const Int& d : sd.divisors)
    if (d != 1) throw precondition_error("rows not primitive in the lattice");
  IntMat right_inv =
      q == 0 ? IntMat::identity(r) : inverse_unimodular(sd.right);
  IntMat completion_coords = right_inv.submatrix_rows(q, r - q);
  return completion_coords * k.basis;
}

}  // namespace gausstoric
