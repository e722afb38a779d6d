#pragma once

#include <string>
#include <vector>

#include "gausstoric/integers.hpp"

namespace gausstoric {

/// F_{p^e} realized as F_p[t] modulo a fixed monic irreducible (the
/// first one in coefficient order, so the representation is stable).
/// Elements are coefficient vectors of length e.  Only small fields are
/// supported; the oracle never needs more.
class FiniteField {
 public:
  using Elt = std::vector<unsigned long>;

  FiniteField(const Int& p, unsigned e);

  unsigned long p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned long q() const { return q_; }
  const std::vector<unsigned long>& modulus() const { return modulus_; }

  Elt zero() const { return Elt(e_, 0); }
  Elt one() const;
  Elt from_int(const Int& z) const;

  bool is_zero(const Elt& a) const;
  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt inv(const Elt& a) const;
  Elt pow(const Elt& a, const Int& exp) const;

  /// All q - 1 nonzero elements in a fixed order.
  std::vector<Elt> nonzero_elements() const;

  std::string to_string(const Elt& a) const;

 private:
  unsigned long p_;
  unsigned e_;
  unsigned long q_;
  std::vector<unsigned long> modulus_;  // monic, degree e, coeffs 0..e

  Elt from_value(unsigned long v) const;
};

/// Exact rationals with the same operations interface, so oracle routines
/// template over the scalar field.
struct RationalField {
  using Elt = Rat;

  Elt zero() const { return Rat(0); }
  Elt one() const { return Rat(1); }
  Elt from_int(const Int& z) const { return Rat(z); }
  bool is_zero(const Elt& a) const { return a == 0; }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt inv(const Elt& a) const { return 1 / a; }
  Elt pow(const Elt& a, const Int& exp) const;
  std::string to_string(const Elt& a) const { return a.get_str(); }
};

}  // namespace gausstoric
