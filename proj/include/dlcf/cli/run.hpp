#pragma once

// The dlcf command line: argument parsing, subcommand dispatch and rendering.
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "dlcf/brute.hpp"
#include "dlcf/cli/cache.hpp"
#include "dlcf/cli/json_io.hpp"
#include "dlcf/dl.hpp"

namespace dlcf::cli {

enum class Format { Table, Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Family family = Family::GL;
  int n = 2;
  std::uint64_t q = 0;
  std::string command;
  Format format = Format::Table;
  std::optional<std::string> cache_dir;
  int verbosity = 0;
  bool opt_in = false;

  // subcommand arguments
  std::string torus, theta, torus2, theta2;
  std::string levi, class_label, input;
  std::string suite = "all";
  bool values = false;

  GroupSpec spec() const { return {family, n, q}; }

  void validate() const {
    static const std::vector<std::string> commands{"classes", "strata",    "tori",   "lines", "dlchar",
                                                   "induce",  "indicator", "mackey", "table", "verify"};
    if (std::find(commands.begin(), commands.end(), command) == commands.end()) throw UsageError("unknown command '" + command + "'");
    if (q == 0) throw UsageError("the field size -q is required");
    spec().validate();
    if (command == "dlchar" && torus.empty()) throw UsageError("dlchar needs --torus");
    if (command == "indicator" && class_label.empty()) throw UsageError("indicator needs --class");
    if (command == "induce") {
      if (levi.empty()) throw UsageError("induce needs --levi");
      if (torus.empty() == input.empty()) throw UsageError("induce needs exactly one of --torus or --input");
    }
    if (command == "mackey" && torus.empty() != torus2.empty()) throw UsageError("mackey needs both --torus and --torus2, or neither");
    if (command == "verify" && suite != "decomposition" && suite != "transitivity" && suite != "mackey" && suite != "oracle" &&
        suite != "all")
      throw UsageError("unknown suite '" + suite + "' (decomposition, transitivity, mackey, oracle, all)");
  }
};

// ---------------------------------------------------------------------------
// report model

struct Cell {
  std::string text;
  std::optional<Cyclo> value;
  Cell(std::string s) : text(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Cell(const char* s) : text(s) {}             // NOLINT(google-explicit-constructor)
  Cell(const Cyclo& c) : text(c.to_string()), value(c) {}  // NOLINT(google-explicit-constructor)
};

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  Json json = Json::object();
  std::vector<std::string> notes;
  std::vector<Table> tables;
  int status = kExitOk;
};

/// "≈ 0.5+0.866i" style approximation, used only in human tables.
inline std::string approximate(const Cyclo& c) {
  double re = 0, im = 0;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    const double a = c.coeffs()[i].get_d();
    const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(c.level());
    re += a * std::cos(t);
    im += a * std::sin(t);
  }
  auto fmt = [](double x) {
    if (std::fabs(x) < 1e-12) x = 0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  if (std::fabs(im) < 1e-12) return "≈ " + fmt(re);
  if (std::fabs(re) < 1e-12) return "≈ " + fmt(im) + "i";
  return "≈ " + fmt(re) + (im < 0 ? "-" : "+") + fmt(std::fabs(im)) + "i";
}

inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

inline std::string cell_table_text(const Cell& c) {
  if (c.value && !c.value->is_rational()) return c.text + "  " + approximate(*c.value);
  return c.text;
}

inline void render_table(const Report& r, std::ostream& out) {
  for (const auto& note : r.notes) out << note << '\n';
  for (const auto& t : r.tables) {
    out << '\n';
    if (!t.title.empty()) out << t.title << '\n';
    std::vector<std::vector<std::string>> text;
    text.push_back(t.header);
    for (const auto& row : t.rows) {
      std::vector<std::string> line;
      for (const auto& c : row) line.push_back(cell_table_text(c));
      text.push_back(std::move(line));
    }
    std::vector<std::size_t> width(t.header.size(), 0);
    for (const auto& line : text)
      for (std::size_t i = 0; i < line.size() && i < width.size(); ++i) width[i] = std::max(width[i], display_width(line[i]));
    for (std::size_t k = 0; k < text.size(); ++k) {
      std::string s;
      for (std::size_t i = 0; i < text[k].size(); ++i) {
        if (i) s += "  ";
        s += text[k][i];
        if (i + 1 < text[k].size()) s += std::string(width[i] - display_width(text[k][i]), ' ');
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << '\n';
      if (k == 0) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
        out << std::string(total, '-') << '\n';
      }
    }
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

/// One header row per table; tables separated by a blank line.
inline void render_csv(const Report& r, std::ostream& out) {
  for (std::size_t k = 0; k < r.tables.size(); ++k) {
    if (k) out << '\n';
    const auto& t = r.tables[k];
    for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << csv_field(t.header[i]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].text);
      out << '\n';
    }
  }
}

inline void render(const Report& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::Table:
      render_table(r, out);
      break;
    case Format::Csv:
      render_csv(r, out);
      break;
    case Format::Json:
      out << r.json.dump(2) << '\n';
      break;
  }
}

/// Rows of class functions with one column per class, in canonical order.
inline Table function_table(std::string title, const std::vector<std::pair<std::string, ClassFunction>>& rows) {
  Table t;
  t.title = std::move(title);
  t.header.push_back("function");
  if (!rows.empty())
    for (const auto& c : rows.front().second.group()->classes()) t.header.push_back(c.label);
  for (const auto& [name, f] : rows) {
    std::vector<Cell> row{name};
    for (const auto& v : f.values()) row.emplace_back(v.minimal());
    t.rows.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------
// argument helpers

/// "1,0", "(1,0)", "[1,-1]" -> exponents reduced modulo the factor orders.
inline TorusChar parse_theta(const std::string& text, const std::vector<std::uint64_t>& orders) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != '[' && c != ']') s += c;
  std::vector<long long> vals;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ',' || s[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s.substr(i), &used);
    } catch (const std::exception&) {
      throw UsageError("malformed character '" + text + "'");
    }
    vals.push_back(v);
    i += used;
    if (i < s.size() && s[i] != ',' && s[i] != ' ') throw UsageError("malformed character '" + text + "'");
  }
  if (vals.empty()) vals.assign(orders.size(), 0);
  if (vals.size() != orders.size())
    throw UsageError("character '" + text + "' needs " + std::to_string(orders.size()) + " exponents");
  TorusChar c(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) {
    const auto m = static_cast<long long>(orders[k]);
    c[k] = static_cast<std::uint64_t>(((vals[k] % m) + m) % m);
  }
  return c;
}

/// GL: "2,1" block sizes; SL_2: "split" (the torus) or "2" (SL_2 itself).
inline GroupPtr parse_levi(const GroupPtr& g, const std::string& text) {
  if (g->kind() == Group::Kind::SL2) {
    if (text == "split" || text == "1,1" || text == "T") return g->torus_group(TorusType::split());
    if (text == "2") return g;
    throw UsageError("Levis of SL_2 are 'split' and '2', got '" + text + "'");
  }
  std::vector<int> blocks;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',' || c == ' ' || c == 'x') {
      if (cur.empty()) continue;
      try {
        blocks.push_back(std::stoi(cur));
      } catch (const std::exception&) {
        throw UsageError("malformed Levi '" + text + "'");
      }
      cur.clear();
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else if (c != '(' && c != ')') {
      throw UsageError("malformed Levi '" + text + "'");
    }
  }
  if (blocks.empty()) throw UsageError("malformed Levi '" + text + "'");
  return levi_of(g, blocks);
}

inline Json string_list(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

inline Json coeffs_json(const std::vector<LineCoefficient>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back({{"line", c.line.to_string()}, {"coeff", cyclo_to_json(c.coeff.minimal())}});
  return a;
}

inline Table coeffs_table(std::string title, const std::vector<LineCoefficient>& cs) {
  Table t{std::move(title), {"line", "coefficient"}, {}};
  for (const auto& c : cs) t.rows.push_back({c.line.to_string(), c.coeff.minimal()});
  return t;
}

// ---------------------------------------------------------------------------
// commands

inline Report cmd_classes(const GroupPtr& g) {
  Report r;
  Table t{"", {"class", "size", "centralizer", "stratum"}, {}};
  Json arr = Json::array();
  for (const auto& c : g->classes()) {
    const auto st = stratum_of_class(*g, c.type).to_string();
    t.rows.push_back({c.label, c.size.get_str(), c.centralizer.get_str(), st});
    arr.push_back({{"label", c.label}, {"size", c.size.get_str()}, {"centralizer", c.centralizer.get_str()}, {"stratum", st}});
  }
  r.notes.push_back(g->name() + ": order " + g->order().get_str() + ", " + std::to_string(g->class_count()) + " classes");
  r.tables.push_back(std::move(t));
  r.json = {{"group", g->name()}, {"order", g->order().get_str()}, {"classes", std::move(arr)}};
  return r;
}

inline Report cmd_strata(const GroupPtr& g) {
  Report r;
  std::map<StratumLabel, std::size_t> count;
  for (const auto& c : g->classes()) ++count[stratum_of_class(*g, c.type)];
  Table t{"", {"stratum", "dimension", "classes"}, {}};
  Json arr = Json::array();
  const auto strata = enumerate_strata(*g);
  for (const auto& s : strata) {
    const auto k = count.count(s.label) ? count[s.label] : 0;
    t.rows.push_back({s.label.to_string(), std::to_string(s.dimension), std::to_string(k)});
    arr.push_back({{"stratum", s.label.to_string()}, {"dimension", s.dimension}, {"classes", k}});
  }
  r.notes.push_back(g->name() + ": " + std::to_string(strata.size()) + " strata, dense stratum " + dense_stratum(*g).to_string());
  r.tables.push_back(std::move(t));
  r.json = {{"group", g->name()}, {"strata", std::move(arr)}};
  return r;
}

inline Report cmd_tori(const GroupPtr& g) {
  Report r;
  Table t{"", {"torus", "order", "weyl", "character_orbits", "regular_orbits"}, {}};
  Json arr = Json::array();
  for (const auto& tt : g->tori()) {
    const auto w = g->weyl(tt).size();
    const auto orbits = g->character_orbits(tt);
    std::size_t regular = 0;
    for (const auto& o : orbits)
      if (o.size == w) ++regular;
    t.rows.push_back({tt.to_string(), tt.order(g->q()).get_str(), std::to_string(w), std::to_string(orbits.size()), std::to_string(regular)});
    arr.push_back({{"torus", tt.to_string()},
                   {"order", tt.order(g->q()).get_str()},
                   {"weyl", w},
                   {"character_orbits", orbits.size()},
                   {"regular_orbits", regular}});
  }
  r.tables.push_back(std::move(t));
  r.json = {{"group", g->name()}, {"tori", std::move(arr)}};
  return r;
}

inline Report cmd_lines(const GroupPtr& g, bool values) {
  Report r;
  const auto lines = enumerate_lines(g);
  Table t{"", {"line", "kind", "orbit_size", "stratum", "norm"}, {}};
  Json arr = Json::array();
  std::vector<std::pair<std::string, ClassFunction>> fs;
  for (const auto& l : lines) {
    const auto kind = l.line.kind == GammaLine::Kind::Torus ? "torus" : "cuspidal";
    const auto norm = inner_product(l.rep, l.rep);
    const auto st = l.line.stratum(*g).to_string();
    t.rows.push_back({l.line.to_string(), kind, std::to_string(l.orbit_size), st, norm});
    Json e = {{"line", l.line.to_string()}, {"kind", kind}, {"orbit_size", l.orbit_size}, {"stratum", st}, {"norm", cyclo_to_json(norm)}};
    if (values) e["function"] = function_to_json(l.rep);
    arr.push_back(std::move(e));
    fs.emplace_back(l.line.to_string(), l.rep);
  }
  r.notes.push_back(g->name() + ": " + std::to_string(lines.size()) + " lines, " + std::to_string(g->class_count()) + " classes");
  r.tables.push_back(std::move(t));
  if (values) r.tables.push_back(function_table("representatives", fs));
  r.json = {{"group", g->name()}, {"lines", std::move(arr)}};
  return r;
}

inline Report cmd_dlchar(const GroupPtr& g, const RunConfig& cfg) {
  const auto t = parse_torus(*g, cfg.torus);
  const auto theta = parse_theta(cfg.theta, t.factor_orders(g->q()));
  const auto f = dl_character(g, t, theta);
  const auto name = GammaLine::torus_line(t, theta).to_string();
  const auto norm = inner_product(f, f);
  Report r;
  r.notes.push_back(g->name() + ": " + name + ", <R,R> = " + norm.to_string());
  r.tables.push_back(function_table("", {{name, f}}));
  r.json = {{"torus", t.to_string()}, {"theta", theta}, {"norm", cyclo_to_json(norm)}, {"function", function_to_json(f)}};
  return r;
}

inline ClassFunction read_function_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
  if (j.contains("function") && !j.contains("values")) j = j["function"];
  return function_from_json(j);
}

inline Report cmd_induce(const GroupPtr& g, const RunConfig& cfg) {
  const auto m = parse_levi(g, cfg.levi);
  Report r;
  std::optional<ClassFunction> f;
  std::optional<ClassFunction> expected;
  std::string source;
  const LusztigInduction ind(g, m);
  if (!cfg.input.empty()) {
    f = read_function_file(cfg.input);
    if (f->group()->name() != m->name()) throw UsageError("input lives on " + f->group()->name() + ", not on " + m->name());
    source = "input " + cfg.input;
  } else {
    const auto t = parse_torus(*m, cfg.torus);
    const auto theta = parse_theta(cfg.theta, t.factor_orders(g->q()));
    f = dl_character(m, t, theta);
    source = GammaLine::torus_line(t, theta).to_string() + " on " + m->name();
    expected = ind.target_character(t, theta);
  }
  const auto coeffs = ind.expand(*f);
  const auto out = ind(*f);
  r.notes.push_back("R_M^G from " + m->name() + " to " + g->name() + " of " + source);
  r.tables.push_back(coeffs_table("expansion over the lines of " + m->name(), coeffs));
  r.tables.push_back(function_table("induced", {{"R_M^G(f)", out}}));
  r.json = {{"levi", m->name()}, {"source", source}, {"expansion", coeffs_json(coeffs)}, {"function", function_to_json(out)}};
  if (expected) {
    const bool ok = *expected == out;
    r.json["matches_torus_induction"] = ok;
    r.notes.push_back(std::string("agrees with R_T^G directly: ") + (ok ? "yes" : "NO"));
    if (!ok) r.status = kExitFailure;
  }
  return r;
}

inline Report cmd_indicator(const GroupPtr& g, const RunConfig& cfg) {
  const auto e = indicator_expansion(g, cfg.class_label);
  Report r;
  std::vector<std::string> rational;
  for (auto i : e.classes) rational.push_back(g->classes()[i].label);
  std::string rc;
  for (const auto& s : rational) rc += (rc.empty() ? "" : ", ") + s;
  r.notes.push_back(g->name() + ": indicator of " + e.label + (e.geometric ? " (geometric class)" : " (rational class)") + " = {" +
                    rc + "}");
  r.notes.push_back("torus span rank " + std::to_string(e.torus_rank) + ", with residual " + std::to_string(e.augmented_rank));
  r.notes.push_back(e.residual_zero ? "residual: zero (uniform)"
                                    : "residual: nonzero, on " + std::to_string(e.cuspidal_coeffs.size()) + " cuspidal line(s)");
  r.notes.push_back(std::string("reconstruction exact: ") + (e.reconstructed ? "yes" : "NO"));
  r.tables.push_back(coeffs_table("torus lines", e.torus_coeffs));
  if (!e.residual_zero) {
    r.tables.push_back(coeffs_table("cuspidal lines", e.cuspidal_coeffs));
    r.tables.push_back(function_table("residual", {{"residual", e.residual}}));
  }
  Json residual = {{"zero", e.residual_zero}, {"cuspidal_coeffs", coeffs_json(e.cuspidal_coeffs)}};
  if (!e.residual_zero) residual["function"] = function_to_json(e.residual);
  r.json = {{"group", g->name()},
            {"label", e.label},
            {"geometric", e.geometric},
            {"classes", string_list(rational)},
            {"torus_rank", e.torus_rank},
            {"augmented_rank", e.augmented_rank},
            {"torus_coeffs", coeffs_json(e.torus_coeffs)},
            {"residual", std::move(residual)},
            {"reconstructed", e.reconstructed}};
  if (!e.reconstructed) r.status = kExitFailure;
  return r;
}

inline Json mackey_json(const MackeyReport& m) {
  return {{"suite", "mackey"}, {"characters", m.characters}, {"pairs", m.checked}, {"failures", string_list(m.failures)}, {"ok", m.ok}};
}

inline Report cmd_mackey(const GroupPtr& g, const RunConfig& cfg) {
  Report r;
  if (!cfg.torus.empty()) {
    const auto t1 = parse_torus(*g, cfg.torus), t2 = parse_torus(*g, cfg.torus2);
    const auto c1 = parse_theta(cfg.theta, t1.factor_orders(g->q()));
    const auto c2 = parse_theta(cfg.theta2, t2.factor_orders(g->q()));
    const auto m = mackey_check(g, t1, c1, t2, c2);
    const auto a = GammaLine::torus_line(t1, c1).to_string(), b = GammaLine::torus_line(t2, c2).to_string();
    r.tables.push_back({"", {"left", "right", "inner_product", "weyl_count", "equal"}, {{a, b, m.lhs, std::to_string(m.rhs), m.equal ? "yes" : "NO"}}});
    r.json = {{"group", g->name()}, {"left", a}, {"right", b}, {"inner_product", cyclo_to_json(m.lhs)}, {"weyl_count", m.rhs}, {"equal", m.equal}};
    if (!m.equal) r.status = kExitFailure;
    return r;
  }
  const auto m = mackey_all(g);
  r.notes.push_back(g->name() + ": " + std::to_string(m.characters) + " torus characters, " + std::to_string(m.checked) +
                    " pairs, " + std::to_string(m.failures.size()) + " mismatches");
  Table t{"", {"mismatch"}, {}};
  for (const auto& f : m.failures) t.rows.push_back({f});
  if (!m.failures.empty()) r.tables.push_back(std::move(t));
  r.json = mackey_json(m);
  r.json["group"] = g->name();
  if (!m.ok) r.status = kExitFailure;
  return r;
}

inline void require_brute(const GroupSpec& s, bool opt_in) {
  if (group_order(s) > brute::kMatrixGroupBound)
    throw SizeError(s.name() + " has order " + group_order(s).get_str() + ", above the explicit-group bound " +
                    std::to_string(brute::kMatrixGroupBound));
  if (brute::is_opt_in(s) && !opt_in) throw UsageError(s.name() + " is slow to enumerate; pass --opt-in to run it");
}

inline Report cmd_table(const GroupPtr& g, const RunConfig& cfg) {
  require_brute(g->spec(), cfg.opt_in);
  const auto mg = brute::enumerate_group(g->spec());
  const auto t = brute::dixon_table(*mg);
  Report r;
  std::vector<std::pair<std::string, ClassFunction>> rows;
  Json irr = Json::array();
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    rows.emplace_back("chi_" + std::to_string(i + 1), t.irreducibles[i]);
    irr.push_back(function_to_json(t.irreducibles[i]));
  }
  r.notes.push_back(g->name() + ": " + std::to_string(t.irreducibles.size()) + " irreducible characters (Dixon-Schneider mod " +
                    std::to_string(t.prime) + ")");
  r.tables.push_back(function_table("", rows));
  r.json = {{"group", g->name()}, {"prime", t.prime}, {"degrees", t.degrees()}, {"irreducibles", std::move(irr)}};
  return r;
}

// ---------------------------------------------------------------------------
// verify

inline bool suite_decomposition(const GroupPtr& g, Report& r, Json& suites) {
  const auto d = verify_decomposition(g);
  const auto summary = std::to_string(d.lines) + " lines / " + std::to_string(d.classes) + " classes, rank " + std::to_string(d.rank);
  r.notes.push_back("decomposition: " + summary + (d.ok ? "  ok" : "  FAILED"));
  Table t{"decomposition: per-stratum spans", {"stratum", "gamma_lines", "theta_lines", "gamma_rank", "theta_rank", "union_rank", "ok"}, {}};
  Json strata = Json::array();
  for (const auto& s : d.strata) {
    t.rows.push_back({s.stratum.to_string(), std::to_string(s.gamma_lines), std::to_string(s.theta_lines), std::to_string(s.gamma_rank),
                      std::to_string(s.theta_rank), std::to_string(s.union_rank), s.ok ? "yes" : "NO"});
    strata.push_back({{"stratum", s.stratum.to_string()},
                      {"gamma_lines", s.gamma_lines},
                      {"theta_lines", s.theta_lines},
                      {"gamma_rank", s.gamma_rank},
                      {"theta_rank", s.theta_rank},
                      {"union_rank", s.union_rank},
                      {"ok", s.ok}});
  }
  r.tables.push_back(std::move(t));
  suites.push_back({{"suite", "decomposition"},
                    {"summary", summary},
                    {"lines", d.lines},
                    {"classes", d.classes},
                    {"rank", d.rank},
                    {"strata", std::move(strata)},
                    {"failures", string_list(d.failures)},
                    {"ok", d.ok}});
  return d.ok;
}

inline bool suite_transitivity(const GroupPtr& g, Report& r, Json& suites) {
  if (g->kind() != Group::Kind::GLBlocks || g->spec().n < 2) {
    r.notes.push_back("transitivity: not applicable to " + g->name() + " (no intermediate Levi)");
    suites.push_back({{"suite", "transitivity"}, {"skipped", "no intermediate Levi"}, {"ok", true}});
    return true;
  }
  bool ok = true;
  Table t{"transitivity", {"chain", "checked", "ok"}, {}};
  Json chains = Json::array();
  for (const auto& c : brute::compositions(g->spec().n)) {
    if (c.size() < 2) continue;
    const auto rep = transitivity_check(g, c);
    ok = ok && rep.ok;
    t.rows.push_back({rep.chain, std::to_string(rep.checked), rep.ok ? "yes" : "NO"});
    chains.push_back({{"chain", rep.chain}, {"checked", rep.checked}, {"failures", string_list(rep.failures)}, {"ok", rep.ok}});
  }
  r.notes.push_back(std::string("transitivity: ") + std::to_string(chains.size()) + " Levi chains" + (ok ? "  ok" : "  FAILED"));
  r.tables.push_back(std::move(t));
  suites.push_back({{"suite", "transitivity"}, {"chains", std::move(chains)}, {"ok", ok}});
  return ok;
}

inline bool suite_mackey(const GroupPtr& g, Report& r, Json& suites) {
  const auto m = mackey_all(g);
  r.notes.push_back("mackey: " + std::to_string(m.checked) + " pairs of " + std::to_string(m.characters) + " characters, " +
                    std::to_string(m.failures.size()) + " mismatches" + (m.ok ? "  ok" : "  FAILED"));
  suites.push_back(mackey_json(m));
  return m.ok;
}

inline bool suite_oracle(const GroupPtr& g, const RunConfig& cfg, bool optional, Report& r, Json& suites) {
  if (optional) {
    try {
      require_brute(g->spec(), cfg.opt_in);
    } catch (const std::exception& e) {
      r.notes.push_back(std::string("oracle: skipped (") + e.what() + ")");
      suites.push_back({{"suite", "oracle"}, {"skipped", e.what()}, {"ok", true}});
      return true;
    }
  } else {
    require_brute(g->spec(), cfg.opt_in);
  }
  const auto rep = brute::cross_validate(g->spec());
  Table t{"oracle", {"check", "checked", "ok", "first_failure"}, {}};
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    t.rows.push_back({c.name, std::to_string(c.checked), c.ok() ? "yes" : "NO", c.failures.empty() ? "" : c.failures.front()});
    checks.push_back({{"check", c.name}, {"checked", c.checked}, {"failures", string_list(c.failures)}, {"ok", c.ok()}});
  }
  r.notes.push_back(std::string("oracle: ") + std::to_string(rep.checks.size()) + " checks against explicit matrices" +
                    (rep.ok() ? "  ok" : "  FAILED"));
  r.tables.push_back(std::move(t));
  suites.push_back({{"suite", "oracle"}, {"checks", std::move(checks)}, {"ok", rep.ok()}});
  return rep.ok();
}

inline Report cmd_verify(const GroupPtr& g, const RunConfig& cfg) {
  Report r;
  Json suites = Json::array();
  bool ok = true;
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "decomposition") ok = suite_decomposition(g, r, suites) && ok;
  if (all || cfg.suite == "transitivity") ok = suite_transitivity(g, r, suites) && ok;
  if (all || cfg.suite == "mackey") ok = suite_mackey(g, r, suites) && ok;
  if (all || cfg.suite == "oracle") ok = suite_oracle(g, cfg, all, r, suites) && ok;
  r.notes.insert(r.notes.begin(), g->name() + ": verify " + cfg.suite + (ok ? " passed" : " FAILED"));
  r.json = {{"group", g->name()}, {"suite", cfg.suite}, {"suites", std::move(suites)}, {"ok", ok}};
  if (!ok) r.status = kExitFailure;
  return r;
}

inline Report dispatch(const GroupPtr& g, const RunConfig& cfg) {
  const auto& c = cfg.command;
  if (c == "classes") return cmd_classes(g);
  if (c == "strata") return cmd_strata(g);
  if (c == "tori") return cmd_tori(g);
  if (c == "lines") return cmd_lines(g, cfg.values);
  if (c == "dlchar") return cmd_dlchar(g, cfg);
  if (c == "induce") return cmd_induce(g, cfg);
  if (c == "indicator") return cmd_indicator(g, cfg);
  if (c == "mackey") return cmd_mackey(g, cfg);
  if (c == "table") return cmd_table(g, cfg);
  if (c == "verify") return cmd_verify(g, cfg);
  throw UsageError("unknown command '" + c + "'");
}

// ---------------------------------------------------------------------------
// entry points

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  try {
    cfg.validate();
    const auto g = Group::create(cfg.spec());
    const auto dir = resolve_cache_dir(cfg.cache_dir);
    const int n_bound = cfg.family == Family::GL ? cfg.n : 2;
    auto& cache = GreenCache::global();
    CacheLoad loaded;
    if (dir) {
      loaded = load_green_cache(*dir, n_bound, cache);
      if (cfg.verbosity > 0)
        err << "cache: " << green_cache_path(*dir, n_bound).string() << (loaded.file_found ? "" : " (absent)") << ", "
            << loaded.loaded << " entries loaded, " << loaded.rejected << " rejected\n";
    }
    const auto misses_before = cache.misses();

    const Report rep = dispatch(g, cfg);
    render(rep, cfg.format, out);

    const auto computed = cache.misses() - misses_before;
    if (dir && (loaded.rejected > 0 || cache_entries(cache, n_bound) != loaded.loaded)) {
      try {
        save_green_cache(*dir, n_bound, cache);
      } catch (const std::exception& e) {
        err << "warning: cache not written: " << e.what() << '\n';
      }
    }
    if (cfg.verbosity > 0) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      err << cfg.command << " on " << g->name() << ": " << ms << " ms, " << computed << " Green polynomials computed, "
          << cache.hits() << " cache hits\n";
    }
    return rep.status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const SizeError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const DimensionError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const InvariantViolation& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

/// Parses argv into a RunConfig and runs it.
inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Deligne-Lusztig class functions on GL_n(F_q) and SL_2(F_q)", "dlcf"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string family = "GL", format = "table";
  app.add_option("-f,--family", family, "GL or SL")->transform(CLI::IsMember({"GL", "SL"}, CLI::ignore_case));
  app.add_option("-n", cfg.n, "rank of GL_n (SL: 2)")->capture_default_str();
  app.add_option("-q", cfg.q, "field size, a prime power")->required();
  app.add_option("--format", format, "table, csv or json")->transform(CLI::IsMember({"table", "csv", "json"}, CLI::ignore_case));
  app.add_option("--cache-dir", cfg.cache_dir, std::string("Green-polynomial cache directory (overrides ") + kCacheEnv + ")");
  app.add_flag("-v,--verbose", cfg.verbosity, "timings and cache statistics on stderr");
  app.add_flag("--opt-in", cfg.opt_in, "allow the slow explicit-matrix groups GL_2(F_5) and GL_3(F_3)");

  app.add_subcommand("classes", "conjugacy classes with sizes, centralizers and strata");
  app.add_subcommand("strata", "strata with dimensions");
  app.add_subcommand("tori", "maximal tori, Weyl groups and character orbits");
  app.add_subcommand("lines", "Gamma-lines with strata and norms")->add_flag("--values", cfg.values, "print representatives");
  auto* dl = app.add_subcommand("dlchar", "R_T(theta) on every class");
  dl->add_option("--torus", cfg.torus, "torus type: partition such as 2,1 (GL) or split/coxeter (SL)")->required();
  dl->add_option("--theta", cfg.theta, "character exponents, e.g. 1,0 (default trivial)");
  auto* ind = app.add_subcommand("induce", "Lusztig induction from a standard Levi");
  ind->add_option("--levi", cfg.levi, "block sizes such as 2,1 (SL: split)")->required();
  ind->add_option("--torus", cfg.torus, "induce R_T^M(theta) for this torus of M, e.g. (1,1)x(1)");
  ind->add_option("--theta", cfg.theta, "character exponents");
  ind->add_option("--input", cfg.input, "class function on M as emitted with --format json");
  auto* indic = app.add_subcommand("indicator", "expand a class indicator over the lines");
  indic->add_option("--class", cfg.class_label, "geometric or rational class label")->required();
  auto* mk = app.add_subcommand("mackey", "inner products of DL characters against Weyl counts");
  mk->add_option("--torus", cfg.torus, "first torus (omit for all pairs)");
  mk->add_option("--theta", cfg.theta, "first character");
  mk->add_option("--torus2", cfg.torus2, "second torus");
  mk->add_option("--theta2", cfg.theta2, "second character");
  app.add_subcommand("table", "character table of the explicit matrix group");
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", cfg.suite, "decomposition, transitivity, mackey, oracle or all")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }
  for (char& c : family) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  cfg.family = family == "SL" ? Family::SL : Family::GL;
  if (cfg.family == Family::SL && app.count("-n") == 0) cfg.n = 2;
  cfg.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Table;
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace dlcf::cli
