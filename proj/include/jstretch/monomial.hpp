#ifndef JSTRETCH_MONOMIAL_HPP
#define JSTRETCH_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jst {

inline constexpr std::size_t kMaxVars = 32;
/// Exponents are stored as bytes; total degree must stay below this.
inline constexpr int kMaxDegree = 127;

/// Exponent vector over at most kMaxVars variables. Variables beyond the ring's
/// count are always zero, so two monomials of one ring compare without knowing n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, int power = 1);

  int operator[](std::size_t i) const { return bytes()[i]; }
  void set(std::size_t i, int e);
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  /// Sum of the exponents of variables [first, last).
  int partial_degree(std::size_t first, std::size_t last) const;
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support() & other.support()) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.w_ == b.w_; }

  std::size_t hash() const;

  std::vector<int> exponents(std::size_t nvars) const;

  // word-level access for the orders
  const std::array<std::uint64_t, kMaxVars / 8>& words() const { return w_; }

 private:
  const std::uint8_t* bytes() const { return reinterpret_cast<const std::uint8_t*>(w_.data()); }
  std::uint8_t* bytes() { return reinterpret_cast<std::uint8_t*>(w_.data()); }

  std::array<std::uint64_t, kMaxVars / 8> w_{};
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders. Variable precedence is declaration order (variable 0 is largest).
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Block order: grevlex on the first k variables, ties broken by grevlex on the rest.
  /// Any monomial involving one of the first k variables beats every monomial free of them.
  static MonomialOrder elimination(int k) { return MonomialOrder(Kind::Elimination, k); }

  Kind kind() const { return kind_; }
  int block() const { return block_; }

  /// Returns <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool is_degree_compatible() const { return kind_ == Kind::Grevlex; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, int block) : kind_(k), block_(block) {}
  Kind kind_;
  int block_;
};

}  // namespace jst

#endif
