#pragma once

#include <map>
#include <string>

#include "gausstoric/configuration.hpp"

namespace gausstoric {

/// A generated configuration plus the recipe and parameters that produced
/// it; round-trip checks key on the provenance record.
struct ConstructionResult {
  PointConfiguration config;
  std::string generator;
  std::map<std::string, std::string> parameters;
};

/// Prescribed fiber and image: a configuration whose Gauss map has general
/// fiber components X_{A'}, image X_{A''}, and c components per fiber.
/// Requires p > 0 prime, gcd(c, p) = 1, rank(A'') >= 1, and
/// n = rank(A') + rank(A'') >= #A' - 1.  A' and A'' must be normalized with
/// first point 0.
ConstructionResult with_fiber_and_image(const PointConfiguration& fiber,
                                        const PointConfiguration& image,
                                        const Int& c, const Int& p);

/// Prescribed fiber, rank and component count.  Requires (p, r) != (2, 1),
/// n >= max(#A' - 1 + r, rank(A') + r + 1) and N above the characteristic-
/// dependent bound; see the report emitted on violation.
ConstructionResult with_fiber_rank_components(const PointConfiguration& fiber,
                                              unsigned long r, const Int& c,
                                              const Int& p, std::size_t n,
                                              std::size_t big_n);

/// {0, e_1, ..., e_n, sum a_i e_i}: a toric hypersurface with birational
/// Gauss map whenever every a_i is nonzero in k and sum a_i != 1 in k.
ConstructionResult birational_hypersurface(std::size_t n,
                                           const IntVec& coeffs, const Int& p);

/// {0, e_1, ..., e_n, e_1 + e_2, e_2 + ... + e_n}: codimension-two variety
/// with birational Gauss map in every characteristic; n >= 2.
ConstructionResult birational_codim2(std::size_t n, const Int& p);

}  // namespace gausstoric
