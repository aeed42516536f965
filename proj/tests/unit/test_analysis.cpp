#include <doctest.h>

#include <algorithm>
#include <string>

#include "jstretch/analysis.hpp"
#include "jstretch/errors.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace jst;
using jst::test::ambient;
using jst::test::ideal;
using jst::test::poly;
using jst::test::ring;

namespace {

Ideal ex22(int r) {
  auto R = ring({"x", "y", "z"});
  return ideal(ambient(R, "(x^" + std::to_string(r + 1) + ", x*z, y*z)"), "(x, y)");
}

Ideal ex26() { return ideal(ambient(ring({"a", "b", "c"})), "(a^2*b^2, a^2*c^2, a*b*c^2, b^2*c^2, a^2*b*c)"); }

Ideal semigroup() {
  auto R = ring({"a", "b", "c"});
  return ideal(ambient(R, "(b^2 - a*c, c^2 - a^2*b, a^3 - b*c)"), "(a, b)");
}

Ideal ex411(int t) {
  auto R = ring({"x", "y", "z"});
  return ideal(ambient(R, "(x^3 - x^2*y)"), "(x*y^" + std::to_string(t) + ", z)");
}

Ideal maximal2() { return ideal(ambient(ring({"x", "y"})), "(x, y)"); }

std::int64_t value(const LocalLength& l) {
  REQUIRE(l.finite());
  return *l;
}

// λ((x,y)^{n+1} + (x^{r+1}) / y(x,y)^n + (x^{r+1})) in k[x,y], by staircase count
long nu_oracle(int r, int n) {
  std::vector<Monomial> num, den;
  for (int i = 0; i <= n + 1; ++i) {
    int e[] = {i, n + 1 - i};
    num.emplace_back(e);
  }
  for (int i = 0; i <= n; ++i) {
    int e[] = {i, n + 1 - i};
    den.emplace_back(e);
  }
  int top[] = {r + 1, 0};
  num.emplace_back(top);
  den.emplace_back(top);
  return oracle::staircase_difference(2, num, den, r + n + 4);
}

}  // namespace

TEST_CASE("is_j_stretched") {
  SUBCASE("ex2.6") {
    auto s = is_j_stretched(sample_reduction(ex26(), 1));
    CHECK(value(s.length) == 1);
    CHECK(s.value);
  }
  SUBCASE("ex2.2") {
    for (int r : {2, 3, 4}) {
      auto s = is_j_stretched(sample_reduction(ex22(r), 1));
      CHECK(s.value);
      CHECK(value(s.length) == 1);
    }
  }
  SUBCASE("minimal j-multiplicity") {
    auto s = is_j_stretched(sample_reduction(maximal2(), 1));
    CHECK(value(s.length) == 0);
    CHECK(s.value);
  }
  SUBCASE("spread below dimension is rejected") {
    auto i = ideal(ambient(ring({"x", "y"})), "(x)");
    CHECK_THROWS_AS(is_j_stretched(sample_reduction(i, 1)), PreconditionFailed);
  }
}

TEST_CASE("classify") {
  SUBCASE("ex2.2, r = 4") {
    auto c = classify(sample_reduction(ex22(4), 1));
    CHECK(c.tail == 3);
    CHECK(!c.almost_minimal_j);
    CHECK(c.j_stretched);
  }
  SUBCASE("semigroup") {
    auto c = classify(sample_reduction(semigroup(), 1));
    CHECK(c.tail == 1);
    CHECK(c.almost_minimal_j);
    CHECK(!c.minimal_j);
  }
  SUBCASE("tail zero") {
    auto c = classify(sample_reduction(maximal2(), 1));
    CHECK(c.tail == 0);
    CHECK(c.minimal_j);
    CHECK(c.almost_minimal_j);
    CHECK(c.almost_almost_minimal_j);
    CHECK(c.j_stretched);
  }
  SUBCASE("threshold implications") {
    for (const auto& i : {ex22(2), ex22(3), ex26(), semigroup(), maximal2()}) {
      auto c = classify(sample_reduction(i, 2));
      CHECK((!c.minimal_j || c.almost_minimal_j));
      CHECK((!c.almost_minimal_j || c.almost_almost_minimal_j));
    }
  }
}

TEST_CASE("nu sequence of ex2.2 against the staircase") {
  for (int r : {2, 3, 4}) {
    CAPTURE(r);
    auto rd = sample_reduction(ex22(r), 3);
    auto nu = nu_sequence(rd, r);
    REQUIRE(nu.nu.size() == static_cast<std::size_t>(r + 1));
    for (int n = 1; n <= r; ++n) {
      CAPTURE(n);
      CHECK(value(nu.nu[n]) == nu_oracle(r, n));
      CHECK(value(nu.nubar[n]) == nu_oracle(r, n));
    }
    CHECK(value(nu.nu[r]) == 0);
  }
  auto nu = nu_sequence(sample_reduction(ex22(3), 1), 3);
  CHECK(value(nu.nu[0]) == 3);
  CHECK(value(nu.nu[1]) == 2);
  CHECK(value(nu.nu[2]) == 1);
}

TEST_CASE("nu sequence with reduction number zero") {
  auto rd = sample_reduction(maximal2(), 1);
  auto nu = nu_sequence(rd, 0);
  REQUIRE(nu.nu.size() == 1);
  CHECK(value(nu.nu[0]) == 0);
}

TEST_CASE("monotonicity and the first nu") {
  for (const auto& i : {ex22(2), ex22(3), ex22(4), ex26()}) {
    auto rd = sample_reduction(i, 1);
    int r = reduction_number(rd);
    int K = static_cast<int>(j_multiplicity(rd).tail) + 1;
    auto nu = nu_sequence(rd, r);
    for (int n = 2; n <= r; ++n) CHECK(value(nu.nu[n]) <= value(nu.nu[n - 1]));
    for (int n = 0; n <= r; ++n) CHECK(value(nu.nubar[n]) <= value(nu.nu[n]));
    CHECK(nu.nubar[1] == nu.nu[1]);
    CHECK(value(nu.nu[1]) == K - 1);
  }
}

TEST_CASE("properties audit on ex2.2") {
  auto rd = sample_reduction(ex22(3), 1);
  auto j = j_multiplicity(rd);
  auto audit = properties_audit(rd, 3, j.value, 1, 1);
  CHECK(audit.witness_source == "product");
  for (const auto& item : audit.items) {
    CAPTURE(item.name);
    CAPTURE(item.detail);
    CHECK(item.pass);
  }
  CHECK(audit.find("a") != nullptr);
  CHECK(audit.find("prop37a") != nullptr);
  CHECK(j.value >= 1 + 1 + 1);
  // the witness product spans I²/(JI + I³)
  auto amb = rd.ambient();
  auto span = sum(sum(product(rd.J(), rd.ideal()), rd.power(3)), principal(amb, audit.a * audit.b));
  CHECK(contains_locally_at_m(span, rd.power(2)));
}

TEST_CASE("properties audit rejects minimal j-multiplicity") {
  auto rd = sample_reduction(maximal2(), 1);
  CHECK_THROWS_AS(properties_audit(rd, 1, 1, 1, 0), PreconditionFailed);
}

TEST_CASE("Valabrega-Valla equalities") {
  SUBCASE("ex4.2 at n = K") {
    for (int r : {1, 2, 3}) {
      auto v = vv_equalities(sample_reduction(ex22(r), 1), r, r);
      CHECK(v.all_equal());
      CHECK(v.inclusion);
      CHECK(v.biconditional());
    }
  }
  SUBCASE("t = 0") {
    for (const auto& i : {ex22(3), ex26(), semigroup()}) CHECK(vv_equality(sample_reduction(i, 4), 0));
  }
}

TEST_CASE("theorem 4.1 verdicts") {
  Hypotheses none;
  Hypotheses all{true, true, true};
  auto t = theorem41_check(3, 3, 3, none);
  CHECK(t.predicted_cm);
  CHECK(t.r_equals_K);
  CHECK(t.verdict.status() == "CONDITIONAL");
  CHECK(t.verdict.unasserted.size() == 3);
  CHECK(theorem41_check(3, 3, 3, all).verdict.status() == "ASSERTED");
  CHECK(theorem41_check(3, 3, 3, all).verdict.unasserted.empty());
  auto u = theorem41_check(2, 1, 2, none);
  CHECK(!u.predicted_cm);
  CHECK(u.r_equals_K);
}

TEST_CASE("an ex4.3 monomial ideal has r = K = 2") {
  auto i = ideal(ambient(ring({"a", "b", "c", "d"})), "(a^2, a*c, b*c, b*d, c*d)");
  auto rd = sample_reduction(i, 1);
  int r = reduction_number(rd);
  int K = static_cast<int>(j_multiplicity(rd).tail) + 1;
  CHECK(r == 2);
  CHECK(theorem41_check(r, index_of_nilpotency(rd), K, {}).r_equals_K);
}

TEST_CASE("ex4.11 verdict stays conditional") {
  for (int t : {0, 1}) {
    CAPTURE(t);
    auto rd = sample_reduction(ex411(t), 1);
    REQUIRE(max_spread_check(rd));
    int r = reduction_number(rd);
    CHECK(r == 0);
    CHECK(classify(rd).minimal_j);
    Hypotheses partial{false, true, true};
    auto v = theorem41_check(r, index_of_nilpotency(rd), 1, partial).verdict;
    CHECK(v.status() == "CONDITIONAL");
    REQUIRE(v.unasserted.size() == 1);
    CHECK(v.unasserted[0] == "G_d");
  }
}

TEST_CASE("Sally condition") {
  CHECK(sally_condition(sample_reduction(semigroup(), 1), 2, {}).p == 1);
  CHECK(sally_condition(sample_reduction(ex22(3), 1), 3, {}).p == 2);
  CHECK(sally_condition(sample_reduction(maximal2(), 1), 1, {}).p == 1);
  auto s = sally_condition(sample_reduction(ex22(3), 1), 3, {});
  CHECK(s.verdict.value);
  CHECK(s.verdict.status() == "CONDITIONAL");
}

TEST_CASE("Corollary 4.6") {
  auto c = cor46_check(sample_reduction(ex22(3), 1), 3, {});
  CHECK(c.inclusion);
  CHECK(c.length_one);
  CHECK(c.biconditional());
  CHECK(cor46_check(sample_reduction(semigroup(), 1), 2, {}).biconditional());
  CHECK(cor46_check(sample_reduction(ex22(2), 1), 2, {}).biconditional());
  CHECK_THROWS_AS(cor46_check(sample_reduction(ex22(2), 1), 0, {}), PreconditionFailed);
}

TEST_CASE("type and embedding codimension") {
  auto t = type_and_codim(sample_reduction(ex22(3), 1), 3, {});
  CHECK(t.h == 1);
  CHECK(t.rbar_colength == 1);
  CHECK(value(t.tau) == 1);
  SUBCASE("tau is independent of the reduction") {
    auto first = value(type_and_codim(sample_reduction(ex22(3), 1), 3, {}).tau);
    for (std::uint64_t seed = 2; seed <= 20; ++seed)
      CHECK(value(type_and_codim(sample_reduction(ex22(3), seed), 3, {}).tau) == first);
  }
  SUBCASE("J = I") { CHECK(value(type_and_codim(sample_reduction(maximal2(), 1), 1, {}).tau) == 0); }
}

TEST_CASE("stretched test") {
  SUBCASE("semigroup is j-stretched but not stretched") {
    auto rd = sample_reduction(semigroup(), 1);
    CHECK(!stretched_test(rd).value);
    CHECK(is_j_stretched(rd).value);
  }
  SUBCASE("maximal ideal of a regular ring") {
    auto rd = sample_reduction(maximal2(), 1);
    auto s = stretched_test(rd);
    CHECK(s.value);
    CHECK(s.intersection_property);
  }
  SUBCASE("not m-primary") { CHECK_THROWS_AS(stretched_test(sample_reduction(ex22(2), 1)), NotMPrimary); }
  SUBCASE("stretched implies j-stretched") {
    auto R = ring({"x", "y"});
    for (const char* gens : {"(x^2, y)", "(x^2, x*y, y^3)", "(x^3, y^2)"}) {
      CAPTURE(gens);
      auto rd = sample_reduction(ideal(ambient(R), gens), 1);
      auto s = stretched_test(rd);
      if (s.value) CHECK(is_j_stretched(rd).value);
      if (s.intersection_property) CHECK(s.value == is_j_stretched(rd).value);
    }
  }
}

TEST_CASE("criterion with an explicit reduction") {
  SUBCASE("ex2.6 with the sampled reduction") {
    auto rd = sample_reduction(ex26(), 1);
    auto an = an_criterion(ex26(), rd.elements(), {});
    CHECK(an.value);
    CHECK(an.value == is_j_stretched(rd).value);
  }
  SUBCASE("complete intersection") {
    auto i = maximal2();
    auto an = an_criterion(i, i.generators(), {});
    CHECK(value(an.length) == 0);
    CHECK(an.value);
  }
  SUBCASE("semigroup with H = (a)") {
    auto i = semigroup();
    auto an = an_criterion(i, {poly(i.poly_ring(), "a")}, {});
    CHECK(value(an.length) <= 1);
    CHECK(an.value);
  }
  SUBCASE("reduction outside the ideal") {
    auto i = semigroup();
    CHECK_THROWS_AS(an_criterion(i, {poly(i.poly_ring(), "c")}, {}), PreconditionFailed);
  }
}

TEST_CASE("analyze") {
  AnalysisOptions opts;
  opts.trials = 3;
  auto rep = analyze(ex22(3), opts);
  CHECK(rep.d == 1);
  CHECK(rep.ell_is_d);
  CHECK(!rep.m_primary);
  CHECK(rep.r_J == 3);
  CHECK(rep.s_J == 3);
  CHECK(rep.K == 3);
  CHECK(rep.j_mult == 4);
  CHECK(rep.h == 1);
  CHECK(rep.flags.j_stretched);
  CHECK(!rep.flags.stretched.has_value());
  CHECK(rep.verdicts.thm41_predicted_CM->value);
  CHECK(rep.verdicts.thm41_predicted_CM->status() == "CONDITIONAL");
  CHECK(rep.warnings.empty());
  for (const auto& [name, count] : rep.dissent) CHECK(count == 0);
  CHECK(analyze(ex22(3), opts) == rep);

  opts.hyps = {true, true, true};
  auto asserted = analyze(ex22(3), opts);
  CHECK(asserted.verdicts.thm41_predicted_CM->status() == "ASSERTED");
  CHECK(asserted.asserted.all());
}

TEST_CASE("analyze reports the index of nilpotency separately from K") {
  AnalysisOptions opts;
  opts.trials = 3;
  auto rep = analyze(semigroup(), opts);
  CHECK(rep.m_primary);
  CHECK(rep.K == 2);
  CHECK(rep.s_J == 1);
  CHECK(rep.flags.stretched == false);
  CHECK(!rep.warnings.empty());
}
