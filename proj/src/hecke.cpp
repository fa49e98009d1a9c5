#include "icanon/hecke.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace icanon {

namespace {

const LaurentPoly& qinv_minus_q() {
  static const LaurentPoly c = LaurentPoly::q_inv() - LaurentPoly::q();
  return c;
}

}  // namespace

// ---------------------------------------------------------------- HeckeElement

HeckeElement HeckeElement::basis(const WeylElement& w, const LaurentPoly& c) {
  HeckeElement h(w.m(), w.n());
  h.add(w, c);
  return h;
}

LaurentPoly HeckeElement::coefficient(const WeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const WeylElement& w, const LaurentPoly& c) {
  if (w.m() != m_ || w.n() != n_) throw std::invalid_argument("HeckeElement rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::times_generator(Generator s) const {
  HeckeElement r(m_, n_);
  for (const auto& [w, c] : terms_) {
    const WeylElement ws = w.times_generator(s);
    r.add(ws, c);
    if (ws.length() < w.length()) r.add(w, qinv_minus_q() * c);
  }
  return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r(a.m_, a.n_);
  for (const auto& [v, c] : b.terms_) {
    HeckeElement x = a;
    for (Generator s : v.reduced_word()) x = x.times_generator(s);
    r += c * x;
  }
  return r;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h) {
  HeckeElement r(h.m_, h.n_);
  for (const auto& [w, x] : h.terms_) r.add(w, c * x);
  return r;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) s += (s.empty() ? "" : " + ") + ("(" + c.to_string() + ")H" + w.to_string());
  return s;
}

HeckeElement bar(const HeckeElement& h) {
  const LaurentPoly shift = LaurentPoly::q() - LaurentPoly::q_inv();
  HeckeElement r(h.m(), h.n());
  for (const auto& [w, c] : h.terms()) {
    // bar(H_w) = prod over a reduced word of H_s^{-1} = H_s + q - q^{-1}.
    HeckeElement x = HeckeElement::one(h.m(), h.n());
    for (Generator s : w.reduced_word()) x = x.times_generator(s) + shift * x;
    r += bar(c) * x;
  }
  return r;
}

HeckeElement q_symmetrizer(const ParabolicDatum& p) {
  HeckeElement s(p.m(), p.n());
  const int top = p.longest_element().length();
  for (const auto& w : p.elements()) s.add(w, LaurentPoly::monomial(top - w.length()));
  return s;
}

// ---------------------------------------------------------------- action on Fock vectors

FockVector act_generator(const FockVector& v, Generator s, bool perturb) {
  s.check(v.m(), v.n());
  const LaurentPoly diag = perturb ? -qinv_minus_q() : qinv_minus_q();
  FockVector r(v.m(), v.n(), v.window());
  for (const auto& [f, c] : v.terms()) {
    const WeightFunction g = act(f, s);
    if (g == f) {
      r.add(f, c.shifted(-1));
    } else if (is_antidominant_for(g, s)) {
      r.add(g, c);
      r.add(f, diag * c);
    } else {
      r.add(g, c);
    }
  }
  return r;
}

FockVector act_word(const FockVector& v, const std::vector<Generator>& word, bool perturb) {
  FockVector r = v;
  for (Generator s : word) r = act_generator(r, s, perturb);
  return r;
}

FockVector act_hecke(const FockVector& v, const HeckeElement& h) {
  FockVector r(v.m(), v.n(), v.window());
  for (const auto& [w, c] : h.terms()) r += c * act_word(v, w.reduced_word());
  return r;
}

FockVector q_symmetrizer_apply(const FockVector& v, const ParabolicDatum& p) {
  return act_hecke(v, q_symmetrizer(p));
}

// ---------------------------------------------------------------- relation harness

bool RelationReport::all_passed() const {
  for (const auto& e : entries)
    if (e.failed > 0 || e.checked == 0) return false;
  return true;
}

std::string RelationReport::to_string() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << (e.failed == 0 && e.checked > 0 ? "PASS " : "FAIL ") << e.relation << ": " << e.checked - e.failed << "/"
       << e.checked;
    if (!e.counterexample.empty()) os << "  counterexample: " << e.counterexample;
    os << "\n";
  }
  return os.str();
}

namespace {

int braid_order(Generator s, Generator t) {
  using K = Generator::Kind;
  if (s.kind == K::B0 && t.kind == K::A && t.index == 1) return 4;
  if (s.kind == K::A && t.kind == K::A && t.index == s.index + 1) return 3;
  if (s.kind == K::C && t.kind == K::C && t.index == s.index + 1) return 3;
  return 2;
}

std::vector<Generator> alternating(Generator s, Generator t, int len) {
  std::vector<Generator> w;
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? s : t);
  return w;
}

}  // namespace

RelationReport verify_relations(int m, int n, const Window& window, int sample_count, unsigned seed, bool perturb) {
  std::vector<WeightFunction> monomials = window.basis(m, n);
  if (sample_count > 0 && static_cast<std::size_t>(sample_count) < monomials.size()) {
    std::mt19937 rng(seed);
    std::shuffle(monomials.begin(), monomials.end(), rng);
    monomials.resize(sample_count);
    std::sort(monomials.begin(), monomials.end());
  }
  const auto gens = all_generators(m, n);

  RelationReport report;
  std::map<std::string, std::size_t> index;
  auto record = [&](const std::string& name, bool ok, const std::string& where) {
    auto [it, inserted] = index.try_emplace(name, report.entries.size());
    if (inserted) report.entries.push_back({name, 0, 0, {}});
    auto& e = report.entries[it->second];
    ++e.checked;
    if (!ok) {
      ++e.failed;
      if (e.counterexample.empty()) e.counterexample = where;
    }
  };

  for (const auto& f : monomials) {
    const FockVector v = FockVector::monomial(m, n, window, f);
    for (Generator s : gens) {
      const std::string where = "M[" + f.to_string() + "], " + s.name();
      try {
        const FockVector h1 = act_generator(v, s, perturb);
        const FockVector h2 = act_generator(h1, s, perturb);
        record("quadratic (H-q^-1)(H+q)=0", (h2 - qinv_minus_q() * h1 - v).is_zero(), where);
      } catch (const WindowOverflow& e) {
        record("quadratic (H-q^-1)(H+q)=0", false, where + ": " + e.what());
      }
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        const Generator s = gens[i], t = gens[j];
        const int order = braid_order(s, t);
        std::string name;
        if (order == 4) name = "braid B (order 4)";
        else if (order == 3) name = "braid A (order 3)";
        else if (s.kind == Generator::Kind::C || t.kind != Generator::Kind::C) name = "commutation (same factor)";
        else name = "commutation (cross factor)";
        const std::string where = "M[" + f.to_string() + "], " + s.name() + "," + t.name();
        try {
          const bool ok = act_word(v, alternating(s, t, order), perturb) == act_word(v, alternating(t, s, order), perturb);
          record(name, ok, where);
        } catch (const WindowOverflow& e) {
          record(name, false, where + ": " + e.what());
        }
      }
  }
  return report;
}

}  // namespace icanon
