#ifndef JSTRETCH_GROEBNER_HPP
#define JSTRETCH_GROEBNER_HPP

#include <span>
#include <vector>

#include "jstretch/polynomial.hpp"

namespace jst {

struct GbOptions {
  /// Largest lcm degree an S-pair may reach before DegreeBoundExceeded.
  int degree_cap = 40;
  /// When positive, every monomial of this degree is known to lie in the ideal;
  /// terms of degree >= truncate_degree are dropped during reduction.
  int truncate_degree = 0;
  /// Largest truncation exponent N tried by local length computations.
  int truncation_cap = 60;
};

/// Full reduction of f by G. The result has no term divisible by a leading
/// monomial of G and differs from f by an element of (G).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, int truncate_degree = 0);

/// Reduced Groebner basis (monic, sorted ascending by leading monomial) of the
/// ideal generated by gens, in the ring order of the generators.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const GbOptions& options = {});

/// Same, after moving the generators to a copy of their ring carrying `order`.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, MonomialOrder order,
                                   const GbOptions& options = {});

/// Generators of (gens) intersected with k[x_{k+1}..x_n], returned in the ring of
/// the last n-k variables (grevlex).
std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, int k, const GbOptions& options = {});

/// True iff every S-polynomial of basis reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis);

}  // namespace jst

#endif
