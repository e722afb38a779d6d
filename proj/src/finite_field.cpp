#include "gausstoric/finite_field.hpp"

#include <sstream>
#include <stdexcept>

namespace gausstoric {

namespace {

constexpr unsigned long kMaxFieldOrder = 1u << 21;

// Polynomial arithmetic over F_p on raw coefficient vectors (little-endian,
// trailing zeros allowed).
using Poly = std::vector<unsigned long>;

std::size_t degree(const Poly& f) {
  std::size_t d = f.size();
  while (d > 0 && f[d - 1] == 0) --d;
  return d;  // 0 means the zero polynomial; otherwise degree + 1
}

Poly poly_rem(Poly f, const Poly& g, unsigned long p) {
  std::size_t dg = degree(g);
  while (true) {
    std::size_t df = degree(f);
    if (df < dg) break;
    // g is monic by construction
    unsigned long lead = f[df - 1];
    std::size_t shift = df - dg;
    for (std::size_t i = 0; i < dg; ++i) {
      unsigned long sub = lead * g[i] % p;
      f[shift + i] = (f[shift + i] + p - sub) % p;
    }
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, unsigned long p) {
  return degree(poly_rem(f, g, p)) == 0;
}

// Trial division by every monic polynomial of degree <= deg(f)/2; fine for
// the tiny moduli the oracle uses.
bool is_irreducible(const Poly& f, unsigned long p) {
  std::size_t e = degree(f) - 1;
  for (std::size_t d = 1; d <= e / 2; ++d) {
    unsigned long count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (unsigned long v = 0; v < count; ++v) {
      Poly g(d + 1, 0);
      unsigned long rem = v;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = rem % p;
        rem /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(const Int& p, unsigned e) {
  if (!is_prime(p)) throw input_error("field characteristic must be prime");
  if (e == 0) throw input_error("field extension degree must be positive");
  if (!p.fits_ulong_p())
    throw input_error("field characteristic too large for the oracle");
  p_ = p.get_ui();
  e_ = e;
  double qd = 1;
  for (unsigned i = 0; i < e; ++i) qd *= static_cast<double>(p_);
  if (qd > kMaxFieldOrder)
    throw input_error("field order too large for the oracle");
  q_ = 1;
  for (unsigned i = 0; i < e; ++i) q_ *= p_;

  if (e == 1) {
    modulus_ = {0, 1};  // t
    return;
  }
  if (e >= 2 && p_ > 100)
    throw input_error("extension fields limited to small characteristics");
  // First monic irreducible of degree e in coefficient order.
  unsigned long count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p_;
  for (unsigned long v = 0; v < count; ++v) {
    Poly f(e + 1, 0);
    unsigned long rem = v;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = rem % p_;
      rem /= p_;
    }
    f[e] = 1;
    if (is_irreducible(f, p_)) {
      modulus_ = f;
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField::Elt FiniteField::one() const {
  Elt a(e_, 0);
  a[0] = 1;
  return a;
}

FiniteField::Elt FiniteField::from_int(const Int& z) const {
  Elt a(e_, 0);
  a[0] = mod_positive(z, Int(p_)).get_ui();
  return a;
}

FiniteField::Elt FiniteField::from_value(unsigned long v) const {
  Elt a(e_, 0);
  for (unsigned i = 0; i < e_; ++i) {
    a[i] = v % p_;
    v /= p_;
  }
  return a;
}

bool FiniteField::is_zero(const Elt& a) const {
  for (unsigned long c : a)
    if (c != 0) return false;
  return true;
}

FiniteField::Elt FiniteField::add(const Elt& a, const Elt& b) const {
  Elt r(e_);
  for (unsigned i = 0; i < e_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FiniteField::Elt FiniteField::sub(const Elt& a, const Elt& b) const {
  Elt r(e_);
  for (unsigned i = 0; i < e_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

FiniteField::Elt FiniteField::neg(const Elt& a) const {
  Elt r(e_);
  for (unsigned i = 0; i < e_; ++i) r[i] = (p_ - a[i]) % p_;
  return r;
}

FiniteField::Elt FiniteField::mul(const Elt& a, const Elt& b) const {
  Poly prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  Poly rem = poly_rem(std::move(prod), modulus_, p_);
  Elt r(e_, 0);
  for (std::size_t i = 0; i < rem.size() && i < e_; ++i) r[i] = rem[i];
  return r;
}

FiniteField::Elt FiniteField::inv(const Elt& a) const {
  if (is_zero(a)) throw std::invalid_argument("inverse of zero");
  // a^(q-2); the fields are tiny
  return pow(a, Int(q_) - 2);
}

FiniteField::Elt FiniteField::pow(const Elt& a, const Int& exp) const {
  if (exp < 0) {
    return pow(inv(a), -exp);
  }
  Elt base = a;
  Elt acc = one();
  Int e = exp;
  if (!is_zero(a)) e = mod_positive(e, Int(q_ - 1));
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<FiniteField::Elt> FiniteField::nonzero_elements() const {
  std::vector<Elt> out;
  out.reserve(q_ - 1);
  for (unsigned long v = 1; v < q_; ++v) out.push_back(from_value(v));
  return out;
}

std::string FiniteField::to_string(const Elt& a) const {
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < e_; ++i) os << (i ? "," : "") << a[i];
  os << "]";
  return os.str();
}

RationalField::Elt RationalField::pow(const Elt& a, const Int& exp) const {
  if (exp < 0) return pow(inv(a), -exp);
  Elt base = a;
  Elt acc = one();
  Int e = exp;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

}  // namespace gausstoric
