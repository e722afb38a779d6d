#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gausstoric/finite_field.hpp"
#include "gausstoric/gaussmap.hpp"

namespace gausstoric {

/// Lexicographic (n+1)-subsets of {0, ..., total-1}: the index set I of the
/// Plucker coordinates.
std::vector<std::vector<std::size_t>> index_tuples(std::size_t total,
                                                   std::size_t size);

template <class F>
using FieldVec = std::vector<typename F::Elt>;

template <class F>
struct TangentMatrixSample {
  std::vector<FieldVec<F>> gamma;  // (n+1) x (N+1), rows of the tangent frame
  std::vector<std::pair<std::vector<std::size_t>, typename F::Elt>> minors;
};

namespace detail {

template <class F>
typename F::Elt field_det(const F& f, std::vector<FieldVec<F>> m) {
  std::size_t n = m.size();
  typename F::Elt det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m[piv][c])) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    typename F::Elt inv = f.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m[i][c])) continue;
      typename F::Elt factor = f.mul(m[i][c], inv);
      for (std::size_t j = c; j < n; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(factor, m[c][j]));
    }
  }
  return det;
}

template <class F>
typename F::Elt monomial_value(const F& f, const FieldVec<F>& point,
                               const IntVec& exponents) {
  typename F::Elt acc = f.one();
  for (std::size_t i = 0; i < exponents.size(); ++i)
    acc = f.mul(acc, f.pow(point[i], exponents[i]));
  return acc;
}

}  // namespace detail

/// The tangent frame Gamma(x) with column j equal to z^{u_j} * (1, u_j),
/// together with all top minors in tuple order.
template <class F>
TangentMatrixSample<F> gamma_matrix(const F& f,
                                    const PointConfiguration& config,
                                    const FieldVec<F>& point) {
  std::size_t n = config.ambient_rank;
  std::size_t cols = config.size();
  for (const auto& z : point)
    if (f.is_zero(z)) throw input_error("evaluation point must lie in the torus");
  TangentMatrixSample<F> out;
  out.gamma.assign(n + 1, FieldVec<F>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    typename F::Elt zu = detail::monomial_value(f, point, config.points[j]);
    out.gamma[0][j] = zu;
    for (std::size_t r = 0; r < n; ++r)
      out.gamma[r + 1][j] = f.mul(zu, f.from_int(config.points[j][r]));
  }
  for (const auto& tuple : index_tuples(cols, n + 1)) {
    std::vector<FieldVec<F>> minor(n + 1, FieldVec<F>(n + 1));
    for (std::size_t r = 0; r <= n; ++r)
      for (std::size_t c = 0; c <= n; ++c)
        minor[r][c] = out.gamma[r][tuple[c]];
    out.minors.emplace_back(tuple, detail::field_det(f, std::move(minor)));
  }
  return out;
}

/// The monomial formula for the same Plucker vector: mu * z^{sum of the
/// tuple}, zero off the spanning tuples.
template <class F>
std::vector<std::pair<std::vector<std::size_t>, typename F::Elt>>
plucker_from_monomials(const F& f, const PointConfiguration& config,
                       const FieldVec<F>& point) {
  std::size_t n = config.ambient_rank;
  std::vector<std::pair<std::vector<std::size_t>, typename F::Elt>> out;
  for (const auto& tuple : index_tuples(config.size(), n + 1)) {
    Int mu = affine_determinant(config, tuple);
    typename F::Elt coeff = f.from_int(mu);
    if (f.is_zero(coeff)) {
      out.emplace_back(tuple, f.zero());
      continue;
    }
    IntVec sum(n);
    for (std::size_t idx : tuple) sum = vec_add(sum, config.points[idx]);
    out.emplace_back(tuple, f.mul(coeff, detail::monomial_value(f, point, sum)));
  }
  return out;
}

/// Projective comparison: both vectors normalized by their first nonzero
/// coordinate in tuple order.
template <class F>
bool projectively_equal(const F& f,
                        const std::vector<typename F::Elt>& a,
                        const std::vector<typename F::Elt>& b) {
  if (a.size() != b.size()) return false;
  std::size_t lead = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!f.is_zero(a[i]) || !f.is_zero(b[i])) {
      lead = i;
      break;
    }
  }
  if (lead == a.size()) return true;  // both identically zero
  if (f.is_zero(a[lead]) || f.is_zero(b[lead])) return false;
  typename F::Elt scale = f.mul(b[lead], f.inv(a[lead]));
  for (std::size_t i = lead; i < a.size(); ++i)
    if (!(f.mul(a[i], scale) == b[i])) return false;
  return true;
}

/// Brute-force count of z in (F_q^x)^n with z^g = 1 for all basis rows g of
/// L; the kernel of the induced torus morphism over F_q.  Guarded to
/// (q-1)^n <= 10^6.
Int fiber_count_oracle(const Lattice& l, const Int& p, unsigned e);

struct SweepOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  std::vector<Int> characteristics = {Int(0), Int(2), Int(3), Int(5)};
  std::size_t points_per_config = 5;
  std::size_t max_dim = 3;
  std::size_t max_points = 7;
  long coordinate_bound = 2;
};

struct SweepSummary {
  std::size_t configs = 0;
  std::size_t points = 0;
  std::size_t disagreements = 0;
  std::vector<std::string> failures;
};

/// Random corpus check: Plucker minors of Gamma against the monomial
/// formula, and the nonzero-minor support against the combinatorial tuple
/// set, at several torus points per configuration.
SweepSummary run_verification_sweep(const SweepOptions& opts);

/// Deterministic random spanning configuration used by the sweep and the
/// property tests.
PointConfiguration random_configuration(Rng& rng, const Int& p,
                                        std::size_t max_dim,
                                        std::size_t max_points,
                                        long coordinate_bound);

}  // namespace gausstoric
