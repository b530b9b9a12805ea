#pragma once

#include <cstdint>

#include "utroots/errors.hpp"

namespace utroots {

// Deterministic trial division; intended for the small moduli this library
// works with, not for cryptographic sizes.
bool is_prime(uint32_t n);

// Reduce a possibly negative value into [0, p).
uint32_t reduce_signed(int64_t v, uint32_t p);

// Element of the prime field F_p with the modulus carried per value, so
// matrices over different primes can coexist in one process. Operations on
// mismatched moduli throw MismatchError. The stored value is always the
// canonical representative in [0, p).
class Fp {
 public:
  // Reduces value mod p. Throws NonPrimeModulus unless p is prime.
  Fp(int64_t value, uint32_t p);

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }

  Fp operator+(Fp o) const;
  Fp operator-(Fp o) const;
  Fp operator*(Fp o) const;
  Fp operator-() const;

  // Fermat inverse x^(p-2); throws InversionOfZero on 0.
  Fp inverse() const;

  // Binary exponentiation; a negative exponent inverts first.
  Fp pow(int64_t e) const;

  bool operator==(Fp o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(Fp o) const { return !(*this == o); }

 private:
  uint32_t v_;
  uint32_t p_;
};

}  // namespace utroots
