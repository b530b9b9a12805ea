#include "utroots/fp.hpp"

namespace utroots {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

uint32_t reduce_signed(int64_t v, uint32_t p) {
  int64_t r = v % static_cast<int64_t>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

Fp::Fp(int64_t value, uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  }
  v_ = reduce_signed(value, p);
}

namespace {

void check_same(Fp a, Fp b) {
  if (a.modulus() != b.modulus()) {
    throw MismatchError("mixed moduli " + std::to_string(a.modulus()) +
                        " and " + std::to_string(b.modulus()));
  }
}

}  // namespace

Fp Fp::operator+(Fp o) const {
  check_same(*this, o);
  uint32_t s = v_ + o.v_;
  if (s >= p_) s -= p_;
  return Fp(s, p_);
}

Fp Fp::operator-(Fp o) const {
  check_same(*this, o);
  uint32_t s = v_ + p_ - o.v_;
  if (s >= p_) s -= p_;
  return Fp(s, p_);
}

Fp Fp::operator*(Fp o) const {
  check_same(*this, o);
  uint64_t prod = static_cast<uint64_t>(v_) * o.v_;
  return Fp(static_cast<int64_t>(prod % p_), p_);
}

Fp Fp::operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

Fp Fp::inverse() const {
  if (v_ == 0) {
    throw InversionOfZero("no inverse of 0 mod " + std::to_string(p_));
  }
  return pow(static_cast<int64_t>(p_) - 2);
}

Fp Fp::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  uint64_t base = v_;
  uint64_t acc = 1;
  uint64_t exp = static_cast<uint64_t>(e);
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p_;
    base = base * base % p_;
    exp >>= 1;
  }
  return Fp(static_cast<int64_t>(acc), p_);
}

}  // namespace utroots
