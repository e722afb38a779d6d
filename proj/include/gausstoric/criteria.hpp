#pragma once

#include <optional>

#include "gausstoric/gaussmap.hpp"

namespace gausstoric {

/// Both sides of the developability criterion for the covering family cut
/// out by a surjection pi: the family is contracted by the Gauss map iff
/// sum_j dim Aff_k(A_j) = n - N'.
struct DevelopabilityReport {
  IntMat projection;
  Int lhs = 0;  // sum of per-class affine dimensions over k
  Int rhs = 0;  // n - (#pi(A) - 1)
  bool developable = false;
  // <B-B> subset ker(pi), verified directly when an analysis is supplied.
  std::optional<bool> cross_check;
};

DevelopabilityReport developable(const PointConfiguration& config,
                                 const IntMat& pi,
                                 const GaussStructure* structure = nullptr);

/// Affine identification of A with the Cayley sum A^0 * ... * A^l induced
/// by the canonical projection of a separable analysis.
struct CayleyDecomposition {
  std::size_t l = 0;  // = Gauss defect
  std::vector<PointConfiguration> parts;  // in Z^(n-l)
  IntMat identification;   // unimodular n x n: u |-> (part coords, height)
  IntMat splitting_used;
};

CayleyDecomposition cayley_decompose(const GaussStructure& s);

struct JoinReport {
  Int join_dim = 0;     // l + sum_j rank Aff(A^j)
  Int codimension = 0;  // join_dim - n
  std::vector<Int> per_part_gaps;  // rank Aff(A^j) - dim Aff_k(A^j)
  bool is_join = false;
};

JoinReport join_report(const CayleyDecomposition& decomp);

struct JoinDecomposition {
  GaussStructure structure;
  CayleyDecomposition decomposition;
  JoinReport report;
};

/// Characteristic-zero pipeline: analyze, decompose, and certify that X_A
/// is the join of the torus-invariant pieces (codimension is always 0 at
/// p = 0).
JoinDecomposition join_decomposition_char0(const std::vector<IntVec>& raw_points);

}  // namespace gausstoric
