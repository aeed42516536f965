#include "jstretch/monomial.hpp"

#include <bit>
#include <cstring>

#include "jstretch/errors.hpp"

namespace jst {

namespace {

constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
constexpr std::size_t kWords = kMaxVars / 8;

int byte_sum(std::uint64_t w) {
  int s = 0;
  for (int i = 0; i < 8; ++i) s += static_cast<int>((w >> (8 * i)) & 0xff);
  return s;
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) throw Error("too many variables");
  int d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw Error("negative exponent");
    d += exponents[i];
    if (d > kMaxDegree) throw DegreeBoundExceeded(d);
    bytes()[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  deg_ = static_cast<std::uint16_t>(d);
}

Monomial Monomial::variable(std::size_t index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  int d = deg_ - bytes()[i] + e;
  if (e < 0) throw Error("negative exponent");
  if (d > kMaxDegree) throw DegreeBoundExceeded(d);
  bytes()[i] = static_cast<std::uint8_t>(e);
  deg_ = static_cast<std::uint16_t>(d);
}

int Monomial::partial_degree(std::size_t first, std::size_t last) const {
  if (first == 0 && last >= kMaxVars) return deg_;
  int s = 0;
  for (std::size_t i = first; i < last && i < kMaxVars; ++i) s += bytes()[i];
  return s;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t w = 0; w < kWords; ++w) {
    std::uint64_t x = w_[w];
    if (!x) continue;
    // collapse each nonzero byte to its high bit
    std::uint64_t nz = ((x & ~kHigh) + ~kHigh) | x;
    nz &= kHigh;
    for (int b = 0; b < 8; ++b)
      if (nz & (0x80ULL << (8 * b))) mask |= 1u << (8 * w + b);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  // bytes are < 128, so (o|H) - a keeps every high bit iff a_i <= o_i for all i
  for (std::size_t w = 0; w < kWords; ++w) {
    if ((((other.w_[w] | kHigh) - w_[w]) & kHigh) != kHigh) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  int d = a.deg_ + b.deg_;
  if (d > kMaxDegree) throw DegreeBoundExceeded(d);
  Monomial r;
  for (std::size_t w = 0; w < kWords; ++w) r.w_[w] = a.w_[w] + b.w_[w];
  r.deg_ = static_cast<std::uint16_t>(d);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t w = 0; w < kWords; ++w) r.w_[w] = a.w_[w] - b.w_[w];
  r.deg_ = static_cast<std::uint16_t>(a.deg_ - b.deg_);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint8_t e = std::max(a.bytes()[i], b.bytes()[i]);
    r.bytes()[i] = e;
    d += e;
  }
  if (d > kMaxDegree) throw DegreeBoundExceeded(d);
  r.deg_ = static_cast<std::uint16_t>(d);
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : w_) h = (h ^ w) * 0xff51afd7ed558ccdULL;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::vector<int> Monomial::exponents(std::size_t nvars) const {
  std::vector<int> e(nvars);
  for (std::size_t i = 0; i < nvars; ++i) e[i] = bytes()[i];
  return e;
}

namespace {

// Highest-index variable where a and b differ within [first, last); -1 if none.
int last_difference(const Monomial& a, const Monomial& b, int first, int last) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (int w = static_cast<int>(kWords) - 1; w >= 0; --w) {
    std::uint64_t x = wa[w] ^ wb[w];
    if (!x) continue;
    for (int byte = 7; byte >= 0; --byte) {
      int v = 8 * w + byte;
      if (v >= last || v < first) continue;
      if ((x >> (8 * byte)) & 0xff) return v;
    }
  }
  return -1;
}

int first_difference(const Monomial& a, const Monomial& b) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t w = 0; w < kWords; ++w) {
    std::uint64_t x = wa[w] ^ wb[w];
    if (x) return static_cast<int>(8 * w) + std::countr_zero(x) / 8;
  }
  return -1;
}

int grevlex_range(const Monomial& a, const Monomial& b, int first, int last) {
  int da = a.partial_degree(first, last), db = b.partial_degree(first, last);
  if (da != db) return da < db ? -1 : 1;
  int v = last_difference(a, b, first, last);
  if (v < 0) return 0;
  // smaller exponent in the last differing variable means larger monomial
  return a[v] < b[v] ? 1 : -1;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      int v = last_difference(a, b, 0, static_cast<int>(kMaxVars));
      if (v < 0) return 0;
      return a[v] < b[v] ? 1 : -1;
    }
    case Kind::Lex: {
      int v = first_difference(a, b);
      if (v < 0) return 0;
      return a[v] < b[v] ? -1 : 1;
    }
    case Kind::Elimination: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, static_cast<int>(kMaxVars));
    }
  }
  return 0;
}

}  // namespace jst
