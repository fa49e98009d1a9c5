#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "icanon/cli.hpp"

namespace icanon::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

Json laurent_json(const LaurentPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.to_pairs()) a.push_back(Json::array({e, c}));
  return a;
}

std::string lambda_label(const WeightFunction& f) { return lambda_from_f(f, RootDatum(f.m(), f.n())).to_string(); }

std::string basis_symbol(CanonicalExpansion::Kind k) {
  using K = CanonicalExpansion::Kind;
  switch (k) {
    case K::calT: return "N";
    case K::calTprime: return "tildeM";
    case K::calL: return "tildeN";
    default: return "M";
  }
}

}  // namespace

std::string render_table(const MultiplicityTable& t, Format format) {
  std::ostringstream os;
  const std::string kind = table_kind_name(t.kind), formula = table_kind_formula(t.kind);
  const std::string mode = t.mode == Mode::Iota ? "i" : "j";
  switch (format) {
    case Format::Json: {
      Json j;
      j["schema"] = kSchema;
      j["command"] = "mult";
      j["meta"] = {{"m", t.m},          {"n", t.n},        {"mode", mode},         {"zeta", t.zeta},
                   {"window", t.window.to_string()}, {"version", ICANON_VERSION}, {"kind", kind}, {"entry", formula}};
      Json idx = Json::array();
      for (const auto& f : t.rows) idx.push_back({{"lambda", lambda_label(f)}, {"f", f.to_string()}});
      j["index"] = idx;
      Json rows = Json::array();
      for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.cols.size(); ++c)
          rows.push_back({{"row_lambda", lambda_label(t.rows[r])},
                          {"row_f", t.rows[r].to_string()},
                          {"col_lambda", lambda_label(t.cols[c])},
                          {"col_f", t.cols[c].to_string()},
                          {"value", t.entries[r][c]}});
      j["entries"] = rows;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "# schema=" << kSchema << " kind=" << kind << " entry=" << formula << " m=" << t.m << " n=" << t.n
         << " mode=" << mode << " zeta=" << t.zeta << " window=" << t.window.to_string()
         << " version=" << ICANON_VERSION << "\n";
      os << "row_lambda,row_f,col_lambda,col_f,value\n";
      for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.cols.size(); ++c)
          os << csv_field(lambda_label(t.rows[r])) << "," << csv_field(t.rows[r].to_string()) << ","
             << csv_field(lambda_label(t.cols[c])) << "," << csv_field(t.cols[c].to_string()) << ","
             << t.entries[r][c] << "\n";
      break;
    case Format::Text:
      os << "# " << kind << ": entry = " << formula << "; m=" << t.m << " n=" << t.n << " mode=" << mode
         << " zeta=" << t.zeta << " window=" << t.window.to_string() << " version=" << ICANON_VERSION << "\n";
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "lambda=" << lambda_label(t.rows[r]) << "  f=" << t.rows[r].to_string() << " :";
        for (long long x : t.entries[r]) os << " " << x;
        os << "\n";
      }
      os << "columns (f):";
      for (const auto& c : t.cols) os << " " << c.to_string();
      os << "\n";
      break;
  }
  return os.str();
}

std::string render_expansion(const CanonicalExpansion& e, const JobConfig& cfg, const Window& w, Format format,
                             const std::string& label) {
  std::ostringstream os;
  const std::string kind = label.empty() ? kind_name(e.kind) : label, sym = basis_symbol(e.kind);
  std::vector<std::pair<WeightFunction, LaurentPoly>> certified;
  if (e.terms.count(e.top)) certified.emplace_back(e.top, e.coefficient(e.top));
  std::vector<std::pair<WeightFunction, LaurentPoly>> rest;
  for (const auto& [g, c] : e.terms)
    if (!(g == e.top) && !e.uncertified.count(g)) rest.emplace_back(g, c);
  std::stable_sort(rest.begin(), rest.end(),
                   [](const auto& a, const auto& b) { return bruhat_height(b.first) < bruhat_height(a.first); });
  certified.insert(certified.end(), rest.begin(), rest.end());
  std::size_t omitted = 0;
  for (const auto& [g, c] : e.terms)
    if (e.uncertified.count(g)) ++omitted;
  const std::string mode = cfg.mode == Mode::Iota ? "i" : "j";

  switch (format) {
    case Format::Json: {
      Json j;
      j["schema"] = kSchema;
      j["command"] = "basis";
      j["meta"] = {{"m", cfg.m}, {"n", cfg.n}, {"mode", mode}, {"zeta", cfg.zeta}, {"window", w.to_string()},
                   {"version", ICANON_VERSION}, {"kind", kind}, {"basis", sym}};
      j["top"] = {{"lambda", lambda_label(e.top)}, {"f", e.top.to_string()}};
      Json terms = Json::array();
      for (const auto& [g, c] : certified)
        terms.push_back({{"lambda", lambda_label(g)}, {"f", g.to_string()}, {"coeff", laurent_json(c)}});
      j["terms"] = terms;
      j["omitted_beyond_window"] = omitted;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "# schema=" << kSchema << " kind=" << kind << " basis=" << sym << " top=" << e.top.to_string()
         << " m=" << cfg.m << " n=" << cfg.n << " mode=" << mode << " zeta=" << cfg.zeta
         << " window=" << w.to_string() << " omitted_beyond_window=" << omitted << " version=" << ICANON_VERSION
         << "\n";
      os << "lambda,f,coeff\n";
      for (const auto& [g, c] : certified)
        os << csv_field(lambda_label(g)) << "," << csv_field(g.to_string()) << "," << csv_field(c.to_string()) << "\n";
      break;
    case Format::Text: {
      os << kind << "[" << e.top.to_string() << "] (lambda=" << lambda_label(e.top) << ") =";
      bool first = true;
      for (const auto& [g, c] : certified) {
        os << (first ? " " : " + ") << "(" << c.to_string() << ")*" << sym << "[" << g.to_string() << "]";
        first = false;
      }
      if (first) os << " 0";
      if (omitted) os << " + ... (" << omitted << " terms beyond window " << w.to_string() << ")";
      os << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace icanon::cli
