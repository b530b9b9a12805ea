#include "utroots/nilpotency.hpp"

namespace utroots {

ShieldData shield_data_cyclic(uint32_t p, uint32_t s) {
  if (!is_prime(p)) {
    throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  }
  if (s < 1) throw MismatchError("need s >= 1");
  ShieldData sd;
  sd.p = p;
  sd.d = 1;
  for (uint32_t t = 1; t < s; ++t) sd.d *= p;  // p^(s-1)
  sd.e.assign(sd.d, 0);
  for (uint64_t v = 1; v <= sd.d; v *= p) sd.e[v - 1] = 1;
  uint64_t sum = 0;
  for (uint64_t v = 1; v <= sd.d; ++v) sum += v * sd.e[v - 1];
  sd.a = 1 + (p - 1) * sum;
  sd.b = (p - 1) * sd.d;
  return sd;
}

ShieldData shield_data_from_sizes(uint32_t p,
                                  const std::vector<size_t>& kp_sizes) {
  ShieldData sd;
  sd.p = p;
  sd.d = kp_sizes.size();
  for (size_t v = 1; v <= kp_sizes.size(); ++v) {
    size_t cur = kp_sizes[v - 1];
    size_t next = (v < kp_sizes.size()) ? kp_sizes[v] : 1;
    if (next == 0 || cur % next != 0) {
      throw MismatchError("K-series sizes are not nested");
    }
    size_t ratio = cur / next;
    uint32_t e = 0;
    while (ratio > 1) {
      if (ratio % p != 0) {
        throw MismatchError("K-series quotient is not a power of p");
      }
      ratio /= p;
      ++e;
    }
    sd.e.push_back(e);
  }
  uint64_t sum = 0;
  for (uint64_t v = 1; v <= sd.d; ++v) sum += v * sd.e[v - 1];
  sd.a = 1 + (p - 1) * sum;
  sd.b = (p - 1) * sd.d;
  return sd;
}

uint32_t ut_gamma_exponent_log(uint32_t n, uint32_t p, uint32_t w) {
  if (n < 2 || w < 1 || w > n - 1) {
    throw MismatchError("band index must satisfy 1 <= w <= n-1");
  }
  // nilpotency degree of the band: entries sit j - i >= w, so the longest
  // nonzero chain has floor((n-1)/w) links and dies at the next power
  uint32_t need = (n - 1) / w + 1;
  uint32_t log = 0;
  uint64_t pw = 1;
  while (pw < need) {
    pw *= p;
    ++log;
  }
  return log;
}

uint64_t shield_class(uint64_t a, uint64_t b,
                      const std::vector<uint32_t>& s_log) {
  uint64_t best = 0;
  for (size_t w = 1; w <= s_log.size(); ++w) {
    uint64_t val = a * w + static_cast<uint64_t>(s_log[w - 1] - 1) * b;
    if (val > best) best = val;
  }
  return best;
}

GroupOps<UtMatrix> matrix_group_ops(uint32_t n, uint32_t p) {
  GroupOps<UtMatrix> ops{
      [](const UtMatrix& a, const UtMatrix& b) { return a * b; },
      [](const UtMatrix& a) { return a.inverse(); },
      [](const UtMatrix& a) { return a.key(); },
      UtMatrix::identity(n, p)};
  return ops;
}

GroupOps<WreathElement> wreath_group_ops(uint32_t n, uint32_t p, uint32_t q) {
  GroupOps<WreathElement> ops{
      [](const WreathElement& a, const WreathElement& b) { return a * b; },
      [](const WreathElement& a) { return inverse(a); },
      [](const WreathElement& a) { return wreath_key(a); },
      wreath_identity(n, p, q)};
  return ops;
}

std::vector<UtMatrix> ut_generators(uint32_t n, uint32_t p) {
  std::vector<UtMatrix> gens;
  for (uint32_t k = 1; k < n; ++k) {
    gens.push_back(UtMatrix::transvection(n, p, k, k + 1, 1));
  }
  return gens;
}

std::vector<WreathElement> wreath_generators(uint32_t n, uint32_t p,
                                             uint32_t q) {
  std::vector<WreathElement> gens;
  for (const UtMatrix& g : ut_generators(n, p)) {
    WreathElement w = wreath_identity(n, p, q);
    w.base[0] = g;
    gens.push_back(std::move(w));
  }
  WreathElement shift = wreath_identity(n, p, q);
  shift.shift = 1 % q;
  gens.push_back(std::move(shift));
  return gens;
}

WreathClassReport wreath_class_check(uint32_t n, uint32_t p, uint32_t s,
                                     bool include_brute, size_t size_bound) {
  IndexScheme ix(n, p, s);  // validates the parameters
  uint32_t q = ix.q;

  WreathClassReport rep;
  rep.formula = static_cast<uint64_t>(q) * (n - 1);

  ShieldData sd = shield_data_cyclic(p, s);
  std::vector<uint32_t> s_log;
  for (uint32_t w = 1; w <= n - 1; ++w) {
    s_log.push_back(ut_gamma_exponent_log(n, p, w));
  }
  rep.shield = shield_class(sd.a, sd.b, s_log);
  rep.agree = rep.formula == rep.shield;

  if (include_brute) {
    GroupOps<WreathElement> ops = wreath_group_ops(n, p, q);
    SubgroupSet<WreathElement> w =
        subgroup_closure(wreath_generators(n, p, q), ops, size_bound);
    rep.group_size = w.size();
    LowerCentralSeries<WreathElement> lcs =
        lower_central_series(w, ops, size_bound);
    rep.brute = lcs.nilpotency_class;
    rep.agree = rep.agree && *rep.brute == rep.formula;
  }
  return rep;
}

}  // namespace utroots
