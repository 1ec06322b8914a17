#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tiltfactor {

// All quantities that can exceed 64 bits (dimensions, Weyl group orders,
// weight multiplicities) are arbitrary precision.
using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// Exact quotient; the caller guarantees divisibility.
inline BigInt div_exact(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline bool divisible(const BigInt& a, const BigInt& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(); }

}  // namespace tiltfactor
