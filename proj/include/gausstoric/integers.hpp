#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gausstoric {

// All lattice arithmetic is exact; Int/Rat are the only scalar types the
// core library uses.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;

/// Thrown for malformed user input (bad characteristic, duplicate points,
/// unparsable files).  The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation's mathematical preconditions fail (inseparable
/// Gauss map passed to the Cayley decomposition, construction hypotheses
/// violated, ...).  The CLI maps this to exit code 3.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what)
      : std::runtime_error(what) {}
};

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_positive(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Deterministic RNG for sweeps and property tests.  mt19937_64 plus
/// explicit modulo reduction keeps streams identical across platforms
/// (standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // inclusive bounds
  long below(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  bool chance(unsigned num, unsigned den) { return next() % den < num; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gausstoric
