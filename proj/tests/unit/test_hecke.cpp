#include <doctest.h>

#include <random>

#include "icanon/hecke.hpp"

using namespace icanon;

namespace {

const Window kW52 = Window::symmetric(HalfInt::from_twice(5), Mode::Iota);

WeightFunction wf(int m, int n, const std::string& s, Mode mode = Mode::Iota) {
  return WeightFunction::parse(m, n, mode, s);
}

FockVector random_vector(std::mt19937& rng, int m, int n, const Window& w) {
  const auto basis = w.basis(m, n);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
  FockVector v(m, n, w);
  for (int i = 0; i < 4; ++i) v.add(basis[pick(rng)], LaurentPoly::monomial(e(rng), c(rng)));
  return v;
}

}  // namespace

TEST_CASE("generator case rules") {
  const auto a1 = Generator::a(1);
  const auto fixed = FockVector::monomial(2, 0, kW52, wf(2, 0, "1/2,1/2;"));
  CHECK(act_generator(fixed, a1) == LaurentPoly::q_inv() * fixed);
  const auto low = wf(2, 0, "1/2,3/2;"), high = wf(2, 0, "3/2,1/2;");
  CHECK(act_generator(FockVector::monomial(2, 0, kW52, low), a1) == FockVector::monomial(2, 0, kW52, high));
  auto expect = FockVector::monomial(2, 0, kW52, low);
  expect.add(high, LaurentPoly::q_inv() - LaurentPoly::q());
  CHECK(act_generator(FockVector::monomial(2, 0, kW52, high), a1) == expect);
  // Type B generator: f(1) > 0 is the lower end.
  const auto pos = wf(1, 0, "1/2;"), neg = wf(1, 0, "-1/2;");
  CHECK(act_generator(FockVector::monomial(1, 0, kW52, pos), Generator::b0()) == FockVector::monomial(1, 0, kW52, neg));
  // jota fixed point f(1) = 0.
  const Window wj = Window::symmetric(HalfInt::integer(2), Mode::Jota);
  const auto zero = FockVector::monomial(1, 0, wj, wf(1, 0, "0;", Mode::Jota));
  CHECK(act_generator(zero, Generator::b0()) == LaurentPoly::q_inv() * zero);
  // W-part: f(kbar) > f(k+1 bar) is the lower end.
  const auto wl = wf(0, 2, ";3/2,1/2"), wh = wf(0, 2, ";1/2,3/2");
  CHECK(act_generator(FockVector::monomial(0, 2, kW52, wl), Generator::c(1)) == FockVector::monomial(0, 2, kW52, wh));
}

TEST_CASE("relations hold on whole windows") {
  for (auto [m, n] : {std::pair{2, 0}, {1, 2}, {2, 1}}) {
    const auto rep = verify_relations(m, n, kW52);
    INFO(rep.to_string());
    CHECK(rep.all_passed());
  }
  const Window wj = Window::symmetric(HalfInt::integer(2), Mode::Jota);
  const auto rep = verify_relations(2, 1, wj);
  INFO(rep.to_string());
  CHECK(rep.all_passed());
  const auto bad = verify_relations(2, 0, kW52, 0, 0, /*perturb=*/true);
  CHECK_FALSE(bad.all_passed());
  CHECK(bad.to_string().find("FAIL quadratic") != std::string::npos);
  CHECK(bad.to_string().find("counterexample") != std::string::npos);
}

TEST_CASE("reduced-word independence") {
  std::mt19937 rng(2);
  const Window w = kW52;
  for (int t = 0; t < 20; ++t) {
    const auto v = random_vector(rng, 3, 0, w);
    CHECK(act_word(v, {Generator::a(1), Generator::a(2), Generator::a(1)}) ==
          act_word(v, {Generator::a(2), Generator::a(1), Generator::a(2)}));
    CHECK(act_word(v, {Generator::b0(), Generator::a(1), Generator::b0(), Generator::a(1)}) ==
          act_word(v, {Generator::a(1), Generator::b0(), Generator::a(1), Generator::b0()}));
    CHECK(act_word(v, {}) == v);
  }
}

TEST_CASE("Hecke algebra: q-symmetrizer identities") {
  for (const auto& p : ParabolicDatum::all(2, 2)) {
    const HeckeElement s = q_symmetrizer(p);
    CHECK(bar(s) == s);
    for (const auto& w : p.elements()) {
      const auto hw = HeckeElement::basis(w);
      const auto expect = LaurentPoly::monomial(-w.length()) * s;
      CHECK(s * hw == expect);
      CHECK(hw * s == expect);
    }
  }
  const auto a1 = ParabolicDatum::parse(2, 0, "a1");
  HeckeElement expect = HeckeElement::one(2, 0);
  expect = LaurentPoly::q() * expect;
  expect.add(WeylElement::generator(2, 0, Generator::a(1)), 1);
  CHECK(q_symmetrizer(a1) == expect);
  CHECK(q_symmetrizer(ParabolicDatum::trivial(2, 0)) == HeckeElement::one(2, 0));
}

TEST_CASE("Hecke algebra: bar is an involution and inverts generators") {
  const auto b2 = ParabolicDatum::full(2, 1);
  for (const auto& w : b2.elements()) {
    const auto hw = HeckeElement::basis(w);
    CHECK(bar(bar(hw)) == hw);
    CHECK(hw * bar(HeckeElement::basis(w.inverse())) == HeckeElement::one(2, 1));
  }
}

TEST_CASE("q-symmetrizer on Fock vectors") {
  std::mt19937 rng(4);
  for (const auto& p : ParabolicDatum::all(2, 1)) {
    for (int t = 0; t < 5; ++t) {
      const auto v = random_vector(rng, 2, 1, kW52);
      const auto vs = q_symmetrizer_apply(v, p);
      for (Generator s : p.generators()) CHECK(act_generator(vs, s) == LaurentPoly::q_inv() * vs);
    }
  }
  const auto v = FockVector::monomial(2, 0, kW52, wf(2, 0, "3/2,1/2;"));
  CHECK(q_symmetrizer_apply(v, ParabolicDatum::trivial(2, 0)) == v);
}
