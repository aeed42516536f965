#include "jstretch/fibercone.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "jstretch/errors.hpp"

namespace jst {

std::vector<std::string> GradedPresentation::t_names() const {
  return {ring->variables.begin() + static_cast<std::ptrdiff_t>(n_x), ring->variables.end()};
}

namespace {

std::vector<std::string> fresh_t_names(const PolyRing& ring, std::size_t s) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= s; ++i) {
    std::string name = "T" + std::to_string(i);
    while (ring.index_of(name) >= 0) name = "_" + name;
    out.push_back(name);
  }
  return out;
}

std::vector<int> shift_map(std::size_t n, int offset) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i) + offset;
  return m;
}

std::vector<Polynomial> gb_of(const std::vector<Polynomial>& gens, const GbOptions& opts) {
  return buchberger(gens, opts);
}

}  // namespace

GradedPresentation rees_ideal(const Ideal& ideal) {
  const RingPtr& base = ideal.poly_ring();
  const std::size_t n = base->nvars();
  const auto& gens = ideal.generators();
  const std::size_t s = gens.size();
  if (n + s + 1 > kMaxVars) throw Error("rees_ideal: too many variables");
  auto tnames = fresh_t_names(*base, s);
  std::vector<std::string> vars{"_t"};
  vars.insert(vars.end(), base->variables.begin(), base->variables.end());
  vars.insert(vars.end(), tnames.begin(), tnames.end());
  RingPtr ext = make_ring(vars, base->field, MonomialOrder::elimination(1));
  auto into = shift_map(n, 1);
  Polynomial t = Polynomial::variable(ext, 0);
  std::vector<Polynomial> sys;
  for (const auto& h : ideal.ambient()->relations_gb()) sys.push_back(h.map_variables(ext, into));
  for (std::size_t i = 0; i < s; ++i)
    sys.push_back(Polynomial::variable(ext, n + 1 + i) - t * gens[i].map_variables(ext, into));
  GradedPresentation p;
  p.n_x = n;
  p.n_t = s;
  p.ideal = eliminate(sys, 1, ideal.ambient()->gb_options());
  std::vector<std::string> names(base->variables);
  names.insert(names.end(), tnames.begin(), tnames.end());
  p.ring = make_ring(names, base->field, MonomialOrder::grevlex());
  for (auto& g : p.ideal) g = g.rebind(p.ring);
  return p;
}

int analytic_spread(const Ideal& ideal) {
  if (!ideal.inside_maximal()) throw NotContainedInMaximal();
  if (ideal.is_zero()) return 0;
  GradedPresentation p = rees_ideal(ideal);
  std::vector<Polynomial> gens = p.ideal;
  for (std::size_t i = 0; i < p.n_x; ++i) gens.push_back(Polynomial::variable(p.ring, i));
  return dimension_from_leading_terms(gb_of(gens, ideal.ambient()->gb_options()), p.n_x + p.n_t);
}

GradedPresentation gr_presentation(const Ideal& ideal) {
  GradedPresentation p = rees_ideal(ideal);
  std::vector<Polynomial> gens = p.ideal;
  auto into = shift_map(p.n_x, 0);
  for (const auto& a : ideal.generators()) gens.push_back(a.map_variables(p.ring, into));
  p.ideal = gb_of(gens, ideal.ambient()->gb_options());
  return p;
}

bool presents(const GradedPresentation& p, const std::vector<Polynomial>& target) {
  for (const auto& f : target) {
    if (!same_ring(f.ring(), p.ring)) throw RingMismatch();
    if (!normal_form(f, p.ideal).is_zero()) return false;
  }
  auto tgb = buchberger(target);
  for (const auto& g : p.ideal)
    if (!normal_form(g, tgb).is_zero()) return false;
  return true;
}

int presented_dim(const GradedPresentation& p) {
  return dimension_from_leading_terms(p.ideal, p.ring->nvars());
}

int graded_depth(const GradedPresentation& p, const std::vector<std::uint64_t>& seeds) {
  for (const auto& g : p.ideal)
    if (!g.is_homogeneous()) throw NotHomogeneous();
  AmbientPtr amb = make_ambient(p.ring);
  const std::size_t n = p.ring->nvars();
  const PrimeField& field = p.ring->field;
  std::map<int, int> votes;
  for (auto seed : seeds) {
    std::mt19937_64 engine(seed);
    std::uniform_int_distribution<Coeff> dist(0, field.characteristic() - 1);
    Ideal q(amb, p.ideal);
    int depth = 0;
    for (;;) {
      if (q.is_unit() || dimension_from_leading_terms(q.gb(), n) == 0) break;
      bool extended = false;
      for (int draw = 0; draw < 5 && !extended; ++draw) {
        Polynomial l(p.ring);
        for (std::size_t i = 0; i < n; ++i) l += Polynomial::variable(p.ring, i).scaled(dist(engine));
        if (l.is_zero()) continue;
        if (colon(q, l) == q) {
          q = sum(q, principal(amb, l));
          ++depth;
          extended = true;
        }
      }
      if (!extended) break;
    }
    ++votes[depth];
  }
  return std::max_element(votes.begin(), votes.end(), [](const auto& a, const auto& b) {
           return a.second < b.second;
         })->first;
}

}  // namespace jst
