#include "utroots/ut_matrix.hpp"

#include <istream>
#include <sstream>

#include "utroots/kernels.hpp"

namespace utroots {

UtMatrix::UtMatrix(uint32_t n, uint32_t p)
    : n_(n), p_(p), e_(size_t{n} * n, 0) {
  if (n == 0) throw MismatchError("dimension must be positive");
  if (!is_prime(p)) {
    throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  }
  for (uint32_t i = 0; i < n; ++i) e_[size_t{i} * n + i] = 1;
}

UtMatrix UtMatrix::identity(uint32_t n, uint32_t p) { return UtMatrix(n, p); }

UtMatrix UtMatrix::transvection(uint32_t n, uint32_t p, uint32_t i, uint32_t j,
                                int64_t gamma) {
  UtMatrix m(n, p);
  if (!(1 <= i && i < j && j <= n)) {
    throw MismatchError("transvection needs 1 <= i < j <= n");
  }
  m.set(i, j, gamma);
  return m;
}

uint32_t UtMatrix::at(uint32_t i, uint32_t j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw MismatchError("index out of range");
  }
  return e_[size_t{i - 1} * n_ + (j - 1)];
}

void UtMatrix::set(uint32_t i, uint32_t j, int64_t v) {
  if (!(1 <= i && i < j && j <= n_)) {
    throw MismatchError("only strict upper entries are assignable");
  }
  e_[size_t{i - 1} * n_ + (j - 1)] = reduce_signed(v, p_);
}

UtMatrix UtMatrix::operator*(const UtMatrix& o) const {
  if (p_ != o.p_ || n_ != o.n_) {
    throw MismatchError("product dimension or modulus mismatch");
  }
  UtMatrix r(n_, p_);
  matmul_mod(e_.data(), o.e_.data(), r.e_.data(), n_, n_, n_, p_);
  return r;
}

UtMatrix UtMatrix::inverse() const {
  // Back substitution: X[i][j] = -sum_{i<k<=j} a[i][k] X[k][j], rows bottom
  // up. X stays unitriangular throughout.
  UtMatrix x(n_, p_);
  for (uint32_t i = n_; i >= 1; --i) {
    for (uint32_t j = i + 1; j <= n_; ++j) {
      uint64_t s = 0;
      for (uint32_t k = i + 1; k <= j; ++k) {
        s += static_cast<uint64_t>(at(i, k)) * x.at(k, j) % p_;
      }
      uint32_t v = static_cast<uint32_t>(s % p_);
      x.set(i, j, v == 0 ? 0 : static_cast<int64_t>(p_) - v);
    }
  }
  return x;
}

UtMatrix UtMatrix::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  UtMatrix acc = identity(n_, p_);
  UtMatrix base = *this;
  uint64_t exp = static_cast<uint64_t>(e);
  while (exp > 0) {
    if (exp & 1) acc = acc * base;
    base = base * base;
    exp >>= 1;
  }
  return acc;
}

bool UtMatrix::operator==(const UtMatrix& o) const {
  return p_ == o.p_ && n_ == o.n_ && e_ == o.e_;
}

bool UtMatrix::is_identity() const {
  for (uint32_t i = 1; i <= n_; ++i) {
    for (uint32_t j = i + 1; j <= n_; ++j) {
      if (at(i, j) != 0) return false;
    }
  }
  return true;
}

std::string UtMatrix::key() const {
  std::string k;
  k.reserve(8 + size_t{n_} * (n_ - 1) / 2);
  k.push_back(static_cast<char>(n_ & 0xff));
  k.push_back(static_cast<char>(n_ >> 8 & 0xff));
  k.push_back(static_cast<char>(p_ & 0xff));
  k.push_back(static_cast<char>(p_ >> 8 & 0xff));
  for (uint32_t i = 1; i <= n_; ++i) {
    for (uint32_t j = i + 1; j <= n_; ++j) {
      uint32_t v = at(i, j);
      // moduli beyond one byte get a two-byte encoding
      k.push_back(static_cast<char>(v & 0xff));
      if (p_ > 0xff) k.push_back(static_cast<char>(v >> 8 & 0xff));
    }
  }
  return k;
}

UtMatrix commutator(const UtMatrix& a, const UtMatrix& b) {
  return a.inverse() * b.inverse() * a * b;
}

UtMatrix conjugate(const UtMatrix& a, const UtMatrix& b) {
  return b.inverse() * a * b;
}

uint64_t element_order(const UtMatrix& a) {
  // The order divides a power of p, so repeated p-th powers reach e.
  uint64_t order = 1;
  UtMatrix x = a;
  while (!x.is_identity()) {
    x = x.pow(static_cast<int64_t>(a.modulus()));
    order *= a.modulus();
  }
  return order;
}

std::vector<Transvection> transvection_factors(const UtMatrix& a) {
  // Peel factors off the left: emitting t = t_{i,j}(r[i][j]) and replacing
  // r by t^-1 r (row_i -= gamma * row_j) clears (i,j) without touching any
  // band closer to the diagonal, so band-major order terminates with r = e.
  uint32_t n = a.dim(), p = a.modulus();
  std::vector<uint32_t> r(a.data(), a.data() + size_t{n} * n);
  auto entry = [&](uint32_t i, uint32_t j) -> uint32_t& {
    return r[size_t{i - 1} * n + (j - 1)];
  };
  std::vector<Transvection> out;
  for (uint32_t band = 1; band < n; ++band) {
    for (uint32_t i = 1; i + band <= n; ++i) {
      uint32_t j = i + band;
      uint32_t gamma = entry(i, j);
      if (gamma == 0) continue;
      out.push_back({i, j, gamma});
      for (uint32_t col = j; col <= n; ++col) {
        uint64_t sub = static_cast<uint64_t>(gamma) * entry(j, col) % p;
        entry(i, col) = static_cast<uint32_t>(
            (entry(i, col) + p - static_cast<uint32_t>(sub)) % p);
      }
    }
  }
  return out;
}

std::pair<UtMatrix, UtMatrix> split_first_row(const UtMatrix& a) {
  UtMatrix rest = a;
  for (uint32_t j = 2; j <= a.dim(); ++j) rest.set(1, j, 0);
  return {a * rest.inverse(), rest};
}

std::pair<UtMatrix, UtMatrix> split_last_column(const UtMatrix& a) {
  UtMatrix rest = a;
  for (uint32_t i = 1; i < a.dim(); ++i) rest.set(i, a.dim(), 0);
  return {a * rest.inverse(), rest};
}

UtMatrix random_unitriangular(uint32_t n, uint32_t p, std::mt19937_64& rng) {
  UtMatrix m = UtMatrix::identity(n, p);
  std::uniform_int_distribution<uint32_t> dist(0, p - 1);
  for (uint32_t i = 1; i <= n; ++i) {
    for (uint32_t j = i + 1; j <= n; ++j) m.set(i, j, dist(rng));
  }
  return m;
}

std::string format_matrix(const UtMatrix& a) {
  std::ostringstream out;
  out << a.modulus() << ' ' << a.dim() << '\n';
  for (uint32_t i = 1; i <= a.dim(); ++i) {
    for (uint32_t j = 1; j <= a.dim(); ++j) {
      if (j > 1) out << ' ';
      out << a.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

UtMatrix read_matrix(std::istream& in) {
  long long p = 0, n = 0;
  if (!(in >> p >> n)) throw ParseError("expected header line \"p n\"");
  if (p < 2 || p > 0xffffffffLL || !is_prime(static_cast<uint32_t>(p))) {
    throw ParseError("modulus " + std::to_string(p) + " is not prime");
  }
  if (n < 1 || n > 4096) {
    throw ParseError("dimension " + std::to_string(n) + " out of range");
  }
  UtMatrix m = UtMatrix::identity(static_cast<uint32_t>(n),
                                  static_cast<uint32_t>(p));
  for (long long i = 1; i <= n; ++i) {
    for (long long j = 1; j <= n; ++j) {
      long long v = 0;
      if (!(in >> v)) {
        throw ParseError("missing entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      std::string pos =
          "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (v < 0 || v >= p) {
        throw ParseError("entry " + pos + " out of range for modulus " +
                         std::to_string(p));
      }
      if (i == j && v != 1) {
        throw ParseError("not unitriangular: diagonal entry " + pos +
                         " must be 1");
      }
      if (i > j && v != 0) {
        throw ParseError("not unitriangular: entry " + pos +
                         " below the diagonal must be 0");
      }
      if (i < j) {
        m.set(static_cast<uint32_t>(i), static_cast<uint32_t>(j), v);
      }
    }
  }
  return m;
}

UtMatrix read_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

}  // namespace utroots
