#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "gausstoric/matrix.hpp"

namespace gausstoric {

/// A subgroup of Z^n held in canonical Hermite-form basis.  Two equal
/// sublattices always compare equal field-by-field.
struct Lattice {
  std::size_t ambient_rank = 0;
  IntMat basis;  // rank x ambient_rank, Hermite normal form

  std::size_t rank() const { return basis.rows(); }
  bool operator==(const Lattice& o) const = default;
};

struct HermiteResult {
  IntMat h;                        // same shape as input, echelon
  IntMat transform;                // unimodular, transform * input = h
  std::size_t rank = 0;            // number of nonzero rows of h
  std::vector<std::size_t> pivot_cols;
};

/// Row-style Hermite normal form: pivots march right with increasing row,
/// pivots positive, entries above each pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMat& a);

/// Canonical basis of the subgroup of Z^n generated by the rows.
Lattice hermite_basis(const IntMat& generators);

struct SmithDecomposition {
  IntMat left;            // unimodular
  std::vector<Int> divisors;  // positive invariant factors, d1 | d2 | ...
  IntMat right;           // unimodular
  std::size_t rows = 0;
  std::size_t cols = 0;

  /// Reassembles left * original * right.
  IntMat diagonal() const;
};

SmithDecomposition smith(const IntMat& a);

/// Basis of { v in Z^r : v * m = 0 } for an r x c matrix m.
Lattice kernel_basis(const IntMat& m);

/// Membership and coordinates: c with c * basis = v, if any.
std::optional<IntVec> solve_in_lattice(const Lattice& l, const IntVec& v);
bool lattice_contains(const Lattice& l, const IntVec& v);
bool lattice_contains(const Lattice& outer, const Lattice& inner);

/// L_R intersect Z^n: the smallest subgroup containing L with torsion-free
/// quotient.  Same rank as L; idempotent.
Lattice saturate(const Lattice& l);

/// Index [S : L] of a finite-index sublattice, split as a = p^s * b with
/// p coprime to b.  For p = 0 returns (a, a, 0).
std::tuple<Int, Int, unsigned long> index_and_p_split(const Lattice& l,
                                                      const Lattice& s,
                                                      const Int& p);

/// Rank of the row span over Q (p = 0) or over F_p (p prime).
std::size_t rank_over_field(const IntMat& generators, const Int& p);

struct QuotientProjection {
  IntMat matrix;     // n x (n - rank S), surjective, kernel = S
  Lattice kernel;    // = S
  IntMat splitting;  // (n - rank S) x n section: splitting * matrix = I
};

/// Canonical projection Z^n -> Z^n / S for saturated S, with a fixed
/// splitting.  Derived from the Smith decomposition, hence deterministic.
QuotientProjection quotient_projection(const Lattice& s);

/// Injective map Z^rank(K) -> K with cyclic cokernel of order c: the first
/// basis vector of K is scaled by c, the rest kept.  Rows of the result are
/// the images of the standard basis.
IntMat embed_with_cokernel(const Lattice& k, const Int& c);

/// Rows completing `partial` (rows already in K, jointly primitive) to a
/// basis of K.
IntMat complete_to_kernel_basis(const Lattice& k, const IntMat& partial);

}  // namespace gausstoric
