#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gausstoric/lattice.hpp"

namespace gausstoric {

/// 0 or a prime; the characteristic of the base field k.
struct Characteristic {
  Int p;

  static Characteristic checked(const Int& p);
  bool positive() const { return p > 0; }
  bool operator==(const Characteristic& o) const = default;
};

/// A finite list of distinct lattice points together with the field
/// characteristic; the combinatorial stand-in for the toric variety X_A.
/// Points are ordered; everything downstream that involves a choice uses
/// first-occurrence order.
struct PointConfiguration {
  std::size_t ambient_rank = 0;
  std::vector<IntVec> points;
  Characteristic characteristic{0};

  std::size_t size() const { return points.size(); }
  bool operator==(const PointConfiguration& o) const = default;
};

enum class DedupMode { strict, lenient };

struct ValidatedConfiguration {
  PointConfiguration config;
  std::vector<std::string> warnings;
};

ValidatedConfiguration validate(const std::vector<IntVec>& points,
                                const Int& p,
                                DedupMode mode = DedupMode::strict);

/// Result of rebasing a configuration so that it affinely spans Z^m,
/// m = rank<A - A>.  The original points are recovered as
/// normalized_i * change_of_basis + origin.
struct AffineNormalization {
  PointConfiguration normalized;
  std::size_t origin_index = 0;
  IntVec origin;
  IntMat change_of_basis;  // m x n, rows = Hermite basis of <A - A>

  IntVec to_original(const IntVec& normalized_point) const;
};

AffineNormalization normalize(const PointConfiguration& config);

/// dim over k of the affine span (rank over k of the difference set).
std::size_t affine_dim_over_k(const std::vector<IntVec>& points, const Int& p);

/// rank of <A - A> over Z.
std::size_t affine_rank_over_Z(const std::vector<IntVec>& points);

/// The partition A = A_0 u ... u A_N' induced by a surjection pi.
struct FiberPartition {
  IntMat projection;
  std::vector<IntVec> class_images;           // first-occurrence order
  std::vector<std::vector<std::size_t>> classes;  // indices into the points

  std::vector<IntVec> class_points(const PointConfiguration& config,
                                   std::size_t j) const;
};

/// Groups the points by image under pi (an n x l matrix that must be
/// surjective onto Z^l).
FiberPartition partition_by(const PointConfiguration& config,
                            const IntMat& pi);

/// (A^0 x {0}) u (A^1 x {e_1}) u ... u (A^l x {e_l}) in Z^(n-l) x Z^l,
/// points ordered part by part.
PointConfiguration cayley_sum(const std::vector<PointConfiguration>& parts);

/// Witness for an affine lattice isomorphism between the spans of two
/// configurations, in normalized coordinates: x |-> x * map + shift.
struct AffineIso {
  IntMat map;
  IntVec shift;
};

/// Tests whether two configurations agree up to an affine isomorphism of
/// their affine spans (unimodular change of basis plus translation).
std::optional<AffineIso> affinely_isomorphic(const PointConfiguration& a,
                                             const PointConfiguration& b);

}  // namespace gausstoric
