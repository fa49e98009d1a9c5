#include "icanon/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace icanon {

// ---------------------------------------------------------------- Generator

Generator Generator::parse(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s == "b0") return b0();
  if (s.size() >= 2 && (s[0] == 'a' || s[0] == 'c') &&
      std::all_of(s.begin() + 1, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    const int idx = std::stoi(s.substr(1));
    return s[0] == 'a' ? a(idx) : c(idx);
  }
  throw std::invalid_argument("unknown generator '" + raw + "' (expected b0, a<i> or c<k>)");
}

std::string Generator::name() const {
  switch (kind) {
    case Kind::B0: return "b0";
    case Kind::A: return "a" + std::to_string(index);
    case Kind::C: return "c" + std::to_string(index);
  }
  return "?";
}

void Generator::check(int m, int n) const {
  const bool ok = (kind == Kind::B0 && m >= 1) || (kind == Kind::A && index >= 1 && index <= m - 1) ||
                  (kind == Kind::C && index >= 1 && index <= n - 1);
  if (!ok)
    throw std::invalid_argument("generator " + name() + " does not exist for m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
}

std::vector<Generator> all_generators(int m, int n) {
  std::vector<Generator> out;
  if (m >= 1) out.push_back(Generator::b0());
  for (int i = 1; i < m; ++i) out.push_back(Generator::a(i));
  for (int k = 1; k < n; ++k) out.push_back(Generator::c(k));
  return out;
}

// ---------------------------------------------------------------- WeylElement

WeylElement::WeylElement(std::vector<int> signed_perm, std::vector<int> perm)
    : signed_(std::move(signed_perm)), perm_(std::move(perm)) {
  const int m = static_cast<int>(signed_.size());
  const int n = static_cast<int>(perm_.size());
  std::vector<bool> seen_s(m + 1, false), seen_p(n + 1, false);
  for (int v : signed_) {
    const int a = std::abs(v);
    if (a < 1 || a > m || seen_s[a]) throw std::invalid_argument("not a signed permutation");
    seen_s[a] = true;
  }
  for (int v : perm_) {
    if (v < 1 || v > n || seen_p[v]) throw std::invalid_argument("not a permutation");
    seen_p[v] = true;
  }
}

WeylElement WeylElement::identity(int m, int n) {
  std::vector<int> s(m), p(n);
  for (int i = 0; i < m; ++i) s[i] = i + 1;
  for (int k = 0; k < n; ++k) p[k] = k + 1;
  return {std::move(s), std::move(p)};
}

WeylElement WeylElement::generator(int m, int n, Generator g) {
  g.check(m, n);
  return identity(m, n).times_generator(g);
}

WeylElement WeylElement::from_word(int m, int n, const std::vector<Generator>& word) {
  WeylElement w = identity(m, n);
  for (Generator g : word) {
    g.check(m, n);
    w = w.times_generator(g);
  }
  return w;
}

bool WeylElement::is_identity() const { return *this == identity(m(), n()); }

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (o.m() != m() || o.n() != n()) throw std::invalid_argument("WeylElement rank mismatch");
  WeylElement r = *this;
  for (int i = 0; i < m(); ++i) {
    const int j = o.signed_[i];
    r.signed_[i] = j > 0 ? signed_[j - 1] : -signed_[-j - 1];
  }
  for (int k = 0; k < n(); ++k) r.perm_[k] = perm_[o.perm_[k] - 1];
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r = *this;
  for (int i = 0; i < m(); ++i) {
    const int j = signed_[i];
    r.signed_[std::abs(j) - 1] = j > 0 ? i + 1 : -(i + 1);
  }
  for (int k = 0; k < n(); ++k) r.perm_[perm_[k] - 1] = k + 1;
  return r;
}

WeylElement WeylElement::times_generator(Generator g) const {
  WeylElement r = *this;
  switch (g.kind) {
    case Generator::Kind::B0: r.signed_[0] = -r.signed_[0]; break;
    case Generator::Kind::A: std::swap(r.signed_[g.index - 1], r.signed_[g.index]); break;
    case Generator::Kind::C: std::swap(r.perm_[g.index - 1], r.perm_[g.index]); break;
  }
  return r;
}

int WeylElement::length() const {
  int len = 0;
  for (int i = 0; i < m(); ++i) {
    if (signed_[i] < 0) ++len;
    for (int j = i + 1; j < m(); ++j) {
      if (signed_[i] > signed_[j]) ++len;
      if (signed_[i] + signed_[j] < 0) ++len;
    }
  }
  for (int k = 0; k < n(); ++k)
    for (int l = k + 1; l < n(); ++l)
      if (perm_[k] > perm_[l]) ++len;
  return len;
}

std::vector<Generator> WeylElement::reduced_word() const {
  std::vector<Generator> word;
  WeylElement w = *this;
  const auto gens = all_generators(m(), n());
  while (w.length() > 0) {
    bool found = false;
    for (Generator g : gens) {
      WeylElement ws = w.times_generator(g);
      if (ws.length() < w.length()) {
        word.push_back(g);
        w = ws;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no descent found for nonidentity element");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string WeylElement::to_string() const {
  std::string s = "[";
  for (int i = 0; i < m(); ++i) s += (i ? "," : "") + std::to_string(signed_[i]);
  s += "|";
  for (int k = 0; k < n(); ++k) s += (k ? "," : "") + std::to_string(perm_[k]);
  return s + "]";
}

// ---------------------------------------------------------------- action

WeightFunction act(const WeightFunction& f, const WeylElement& w) {
  if (w.m() != f.m() || w.n() != f.n()) throw std::invalid_argument("WeylElement / WeightFunction rank mismatch");
  std::vector<HalfInt> v(f.size());
  for (int i = 0; i < f.m(); ++i) {
    const int j = w.signed_perm()[i];
    v[i] = j > 0 ? f[j - 1] : -f[-j - 1];
  }
  for (int k = 0; k < f.n(); ++k) v[f.m() + k] = f[f.m() + w.perm()[k] - 1];
  return WeightFunction(f.m(), f.n(), f.mode(), std::move(v));
}

WeightFunction act(const WeightFunction& f, Generator s) {
  return act(f, WeylElement::generator(f.m(), f.n(), s));
}

bool is_antidominant_for(const WeightFunction& f, Generator s) {
  s.check(f.m(), f.n());
  switch (s.kind) {
    case Generator::Kind::B0: return f[0] >= HalfInt();
    case Generator::Kind::A: return f[s.index - 1] <= f[s.index];
    case Generator::Kind::C: return f[f.m() + s.index - 1] >= f[f.m() + s.index];
  }
  return false;
}

bool is_strictly_lower_for(const WeightFunction& f, Generator s) {
  return is_antidominant_for(f, s) && act(f, s) != f;
}

// ---------------------------------------------------------------- ParabolicDatum

ParabolicDatum::ParabolicDatum(int m, int n, std::vector<Generator> gens) : m_(m), n_(n), gens_(std::move(gens)) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rank");
  for (Generator g : gens_) g.check(m, n);
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());

  // Breadth-first enumeration of the generated subgroup.
  std::set<WeylElement> seen{WeylElement::identity(m, n)};
  std::deque<WeylElement> queue{WeylElement::identity(m, n)};
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (Generator g : gens_) {
      WeylElement ws = w.times_generator(g);
      if (seen.insert(ws).second) queue.push_back(ws);
    }
  }
  elements_.assign(seen.begin(), seen.end());
  std::stable_sort(elements_.begin(), elements_.end(),
                   [](const WeylElement& a, const WeylElement& b) { return a.length() < b.length(); });
}

ParabolicDatum ParabolicDatum::parse(int m, int n, const std::string& text) {
  std::vector<Generator> gens;
  std::string trimmed;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') trimmed += ch;
  if (trimmed.empty() || trimmed == "0") return trivial(m, n);
  std::size_t start = 0;
  while (true) {
    const auto comma = trimmed.find(',', start);
    gens.push_back(Generator::parse(trimmed.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {m, n, std::move(gens)};
}

std::vector<ParabolicDatum> ParabolicDatum::all(int m, int n) {
  const auto gens = all_generators(m, n);
  std::vector<ParabolicDatum> out;
  for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
    std::vector<Generator> sub;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mask & (1u << i)) sub.push_back(gens[i]);
    out.emplace_back(m, n, std::move(sub));
  }
  return out;
}

bool ParabolicDatum::contains(Generator s) const { return std::binary_search(gens_.begin(), gens_.end(), s); }

std::vector<ParabolicFactor> ParabolicDatum::factors() const {
  std::vector<ParabolicFactor> out;
  int next_a = 1;
  if (contains(Generator::b0())) {
    ParabolicFactor b{'B', 1, {Generator::b0()}};
    while (next_a < m_ && contains(Generator::a(next_a))) {
      b.gens.push_back(Generator::a(next_a));
      ++b.rank;
      ++next_a;
    }
    out.push_back(std::move(b));
  }
  auto runs = [&](Generator::Kind kind, int from, int to) {
    for (int i = from; i <= to;) {
      if (!contains({kind, i})) {
        ++i;
        continue;
      }
      ParabolicFactor a{'A', 0, {}};
      while (i <= to && contains({kind, i})) {
        a.gens.push_back({kind, i});
        ++a.rank;
        ++i;
      }
      out.push_back(std::move(a));
    }
  };
  runs(Generator::Kind::A, next_a, m_ - 1);
  runs(Generator::Kind::C, 1, n_ - 1);
  return out;
}

const std::vector<WeylElement>& ParabolicDatum::elements() const { return elements_; }

WeylElement ParabolicDatum::longest_element() const { return elements_.back(); }

std::string ParabolicDatum::to_string() const {
  if (gens_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + gens_[i].name();
  return s;
}

// ---------------------------------------------------------------- free functions

std::vector<std::vector<int>> exponents(const ParabolicDatum& p) {
  std::vector<std::vector<int>> out;
  for (const auto& fac : p.factors()) {
    std::vector<int> e;
    for (int i = 1; i <= fac.rank; ++i) e.push_back(fac.type == 'B' ? 2 * i - 1 : i);
    out.push_back(std::move(e));
  }
  return out;
}

LaurentPoly poincare_bracket(const ParabolicDatum& p) {
  LaurentPoly r = 1;
  for (const auto& es : exponents(p))
    for (int e : es) r *= quantum_integer(e + 1);
  return r;
}

bool is_antidominant(const WeightFunction& f, const ParabolicDatum& p) {
  return std::all_of(p.generators().begin(), p.generators().end(),
                     [&](Generator s) { return is_antidominant_for(f, s); });
}

std::pair<WeightFunction, WeylElement> antidominant_rep(const WeightFunction& f, const ParabolicDatum& p) {
  for (const WeylElement& w : p.elements()) {
    WeightFunction g = act(f, w);
    if (is_antidominant(g, p)) return {std::move(g), w};
  }
  throw std::logic_error("orbit of " + f.to_string() + " has no antidominant element");
}

ParabolicDatum stabilizer(const WeightFunction& f, const ParabolicDatum& p) {
  if (!is_antidominant(f, p))
    throw std::invalid_argument("stabilizer: " + f.to_string() + " is not antidominant for " + p.to_string());
  std::vector<Generator> gens;
  for (Generator s : p.generators())
    if (act(f, s) == f) gens.push_back(s);
  return {p.m(), p.n(), std::move(gens)};
}

std::vector<std::pair<WeylElement, int>> shortest_coset_reps(const WeightFunction& f, const ParabolicDatum& p) {
  const ParabolicDatum wf = stabilizer(f, p);
  std::vector<std::pair<WeylElement, int>> out;
  for (const WeylElement& x : p.elements()) {
    const int lx = x.length();
    const bool minimal = std::all_of(wf.generators().begin(), wf.generators().end(), [&](Generator s) {
      return (WeylElement::generator(p.m(), p.n(), s) * x).length() > lx;
    });
    if (minimal) out.emplace_back(x, lx);
  }
  return out;
}

std::vector<WeightFunction> orbit(const WeightFunction& f, const ParabolicDatum& p) {
  std::set<WeightFunction> s;
  for (const WeylElement& w : p.elements()) s.insert(act(f, w));
  return {s.begin(), s.end()};
}

}  // namespace icanon
