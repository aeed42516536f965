#ifndef JSTRETCH_FIBERCONE_HPP
#define JSTRETCH_FIBERCONE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jstretch/ideal.hpp"

namespace jst {

/// A quotient of S[T_1..T_s] by a defining ideal, graded by T-degree.
struct GradedPresentation {
  RingPtr ring;
  std::size_t n_x = 0;
  std::size_t n_t = 0;
  /// Reduced Groebner basis of the defining ideal.
  std::vector<Polynomial> ideal;

  /// The T variables of the presentation, by name.
  std::vector<std::string> t_names() const;
};

/// Kernel of S[T] -> S[t]/H, T_i -> t a_i.
GradedPresentation rees_ideal(const Ideal& ideal);

/// Krull dimension of the special fiber k[T]/((Rees + m) ∩ k[T]).
int analytic_spread(const Ideal& ideal);

/// gr_I(R) = S[T]/(Rees + I).
GradedPresentation gr_presentation(const Ideal& ideal);

/// Mutual membership between the defining ideal and the target generators.
bool presents(const GradedPresentation& p, const std::vector<Polynomial>& target);

/// Krull dimension of the presented ring.
int presented_dim(const GradedPresentation& p);

/// Length of a regular sequence of random linear forms; the majority over seeds.
/// Throws NotHomogeneous unless the defining ideal is homogeneous.
int graded_depth(const GradedPresentation& p, const std::vector<std::uint64_t>& seeds = {1, 2, 3});

}  // namespace jst

#endif
