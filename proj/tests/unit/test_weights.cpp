#include <doctest.h>

#include <functional>
#include <random>

#include "icanon/weights.hpp"

using namespace icanon;

namespace {

WeightFunction random_f(std::mt19937& rng, int m, int n, Mode mode, int radius = 4) {
  std::uniform_int_distribution<int> d(-radius, radius);
  std::vector<HalfInt> v;
  for (int i = 0; i < m + n; ++i)
    v.push_back(mode == Mode::Iota ? HalfInt::from_twice(2 * d(rng) + 1) : HalfInt::integer(d(rng)));
  return WeightFunction(m, n, mode, v);
}

}  // namespace

TEST_CASE("rho matches the closed formula; rho - rho0 is W-invariant") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const RootDatum rd(m, n);
      std::vector<HalfInt> expect;
      for (int i = 1; i <= m; ++i) expect.push_back(HalfInt::from_twice(1 - 2 * i));
      for (int j = 1; j <= n; ++j) expect.push_back(HalfInt::from_twice(2 * (m - j) + 1));
      CHECK(rd.rho() == Weight(m, n, expect));
      const Weight rho1 = rd.rho() - rd.rho0();
      for (int i = 0; i < m; ++i) CHECK(rho1[i] == HalfInt());
      for (int k = 0; k < n; ++k) CHECK(rho1[m + k] == HalfInt::from_twice(2 * m + 1));
      for (Generator s : all_generators(m, n))
        CHECK(weyl_act(WeylElement::generator(m, n, s), rho1) == rho1);
    }
}

TEST_CASE("positive roots are non-negative integer combinations of simple roots") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const RootDatum rd(m, n);
      CHECK(static_cast<int>(rd.simple_roots().size()) == m + n);
      for (const auto& r : rd.positive_roots()) {
        const auto c = rd.simple_root_coordinates(r);
        Weight back = Weight::zero(m, n);
        for (std::size_t j = 0; j < c.size(); ++j) {
          CHECK(c[j].is_integer());
          CHECK(c[j] >= HalfInt());
          back = back + rd.simple_roots()[j] * c[j].as_int();
        }
        CHECK(back == r);
      }
      // Even simple roots decompose every even positive root with non-negative
      // integer coefficients (checked by a bounded search on small ranks).
      for (const auto& r : rd.even_positive_roots()) {
        const auto& es = rd.even_simple_roots();
        bool found = false;
        std::vector<int> c(es.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t j) {
          if (found) return;
          if (j == es.size()) {
            Weight s = Weight::zero(m, n);
            for (std::size_t t = 0; t < es.size(); ++t) s = s + es[t] * c[t];
            found = (s == r);
            return;
          }
          for (int v = 0; v <= 2; ++v) {
            c[j] = v;
            rec(j + 1);
          }
        };
        rec(0);
        CHECK(found);
      }
    }
}

TEST_CASE("f_from_lambda / lambda_from_f") {
  const RootDatum rd(1, 1);
  CHECK(f_from_lambda(Weight::zero(1, 1), rd) == WeightFunction::parse(1, 1, Mode::Iota, "-1/2;-1/2"));
  CHECK(lambda_from_f(f_from_lambda(Weight::zero(1, 1), rd), rd) == Weight::zero(1, 1));
  CHECK_THROWS_AS(f_from_lambda(Weight::parse(1, 1, "1/2;1"), rd), UnsupportedWeightClass);
  CHECK(f_from_lambda(Weight::parse(1, 1, "1/2;1/2"), rd).mode() == Mode::Jota);
  std::mt19937 rng(3);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {0, 3}, {3, 0}})
    for (Mode mode : {Mode::Iota, Mode::Jota}) {
      const RootDatum r(m, n);
      for (int t = 0; t < 100; ++t) {
        const auto f = random_f(rng, m, n, mode);
        const Weight lam = lambda_from_f(f, r);
        CHECK(lam.weight_class() == mode);
        CHECK(f_from_lambda(lam, r) == f);
        for (Generator s : all_generators(m, n)) {
          const auto w = WeylElement::generator(m, n, s);
          CHECK(f_from_lambda(dot_action(w, lam, r), r) == act(f, w));
        }
      }
    }
}

TEST_CASE("dot action") {
  const RootDatum rd(2, 1);
  const Weight lam = Weight::parse(2, 1, "1,-2;3");
  const auto full = ParabolicDatum::full(2, 1);
  CHECK(dot_action(WeylElement::identity(2, 1), lam, rd) == lam);
  for (const auto& w : full.elements()) {
    CHECK(dot_action(w, -rd.rho0(), rd) == -rd.rho0());
    CHECK(f_from_lambda(dot_action(w, lam, rd), rd) == act(f_from_lambda(lam, rd), w));
  }
}

TEST_CASE("bruhat order") {
  const RootDatum rd(1, 1);
  const auto f = WeightFunction::parse(1, 1, Mode::Iota, "1/2;5/2");
  CHECK(bruhat_leq(f, f, rd));
  for (const auto& alpha : rd.simple_roots()) {
    const auto g = f_from_lambda(lambda_from_f(f, rd) - alpha, rd);
    CHECK(bruhat_leq(g, f, rd));
    CHECK_FALSE(bruhat_leq(f, g, rd));
  }
  // Difference -2 eps_1 + delta_1 = (-eps_1) - (eps_1 - delta_1) has mixed signs: incomparable.
  const auto g = f_from_lambda(lambda_from_f(f, rd) - Weight::parse(1, 1, "-2;1"), rd);
  CHECK_FALSE(bruhat_leq(g, f, rd));
  CHECK_FALSE(bruhat_leq(f, g, rd));
  CHECK_THROWS_AS(bruhat_leq(f, WeightFunction::parse(1, 1, Mode::Jota, "1;2")), UnsupportedWeightClass);

  // Partial order and linear extension on an exhaustive small window.
  std::vector<WeightFunction> all;
  for (int a = -3; a <= 2; ++a)
    for (int b = -3; b <= 2; ++b)
      all.emplace_back(1, 1, Mode::Iota, std::vector{HalfInt::from_twice(2 * a + 1), HalfInt::from_twice(2 * b + 1)});
  for (const auto& x : all)
    for (const auto& y : all) {
      if (bruhat_leq(x, y) && bruhat_leq(y, x)) CHECK(x == y);
      if (bruhat_leq(x, y) && x != y) CHECK(bruhat_height(x) < bruhat_height(y));
      for (const auto& z : all)
        if (bruhat_leq(x, y) && bruhat_leq(y, z)) CHECK(bruhat_leq(x, z));
    }
}

TEST_CASE("antidominance agrees between weight and f coordinates") {
  std::mt19937 rng(11);
  for (auto [m, n] : {std::pair{2, 0}, {2, 1}, {1, 2}, {3, 2}})
    for (Mode mode : {Mode::Iota, Mode::Jota}) {
      const RootDatum rd(m, n);
      for (int t = 0; t < 200; ++t) {
        const auto f = random_f(rng, m, n, mode, 2);
        for (Generator s : all_generators(m, n)) {
          const ParabolicDatum p(m, n, {s});
          CHECK(is_antidominant_zeta(lambda_from_f(f, rd), p, rd) == is_antidominant_for(f, s));
        }
      }
    }
  const RootDatum rd(2, 0);
  CHECK(is_antidominant_zeta(Weight::parse(2, 0, "5,-3;"), ParabolicDatum::trivial(2, 0), rd));
  // Dot-wall case: f(1) = f(2) gives pairing 0, which is antidominant.
  const auto wall = WeightFunction::parse(2, 0, Mode::Iota, "1/2,1/2;");
  CHECK(is_antidominant_zeta(lambda_from_f(wall, rd), ParabolicDatum::parse(2, 0, "a1"), rd));
}

TEST_CASE("antidominant elements are Bruhat-minimal in their orbit") {
  std::mt19937 rng(5);
  for (auto [m, n] : {std::pair{2, 0}, {1, 1}, {0, 2}, {1, 2}})
    for (const auto& p : ParabolicDatum::all(m, n))
      for (int t = 0; t < 30; ++t) {
        const auto f = random_f(rng, m, n, Mode::Iota, 2);
        const auto fm = antidominant_rep(f, p).first;
        for (const auto& g : orbit(f, p)) CHECK(bruhat_leq(fm, g));
      }
}

TEST_CASE("typicality") {
  CHECK(is_typical(WeightFunction::parse(1, 1, Mode::Iota, "1/2;5/2")));
  CHECK_FALSE(is_typical(WeightFunction::parse(1, 1, Mode::Iota, "1/2;1/2")));
  CHECK_FALSE(is_typical(WeightFunction::parse(1, 1, Mode::Iota, "-1/2;1/2")));
  CHECK(is_typical(WeightFunction::parse(0, 2, Mode::Iota, ";1/2,1/2")));
  CHECK(is_typical(WeightFunction::parse(2, 0, Mode::Iota, "1/2,1/2;")));
}
