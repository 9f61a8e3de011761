#pragma once

// JSON encoding of exact values and class functions.
//
// Cyclo:         {"level": N, "coeffs": ["p/q", ...]}   (power basis, length phi(N))
// ClassFunction: {"group": {...}, "name": "...", "classes": [...], "values": [Cyclo...]}
// Values are emitted at one common level, so parse followed by emit is the identity.

#include <json.hpp>
#include <string>
#include <vector>

#include "dlcf/dl/class_function.hpp"

namespace dlcf::cli {

using Json = nlohmann::ordered_json;

inline std::string rational_string(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw UsageError("empty rational");
  const auto slash = s.find('/');
  auto digits = [&](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num) || !digits(den) || den.front() == '-' || den.front() == '+') throw UsageError("malformed rational '" + s + "'");
  Rational r(Integer(num.front() == '+' ? num.substr(1) : num), Integer(den));
  if (r.get_den() == 0) throw UsageError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline Json cyclo_to_json(const Cyclo& c) {
  Json j;
  j["level"] = c.level();
  Json arr = Json::array();
  for (const auto& r : c.coeffs()) arr.push_back(rational_string(r));
  j["coeffs"] = std::move(arr);
  return j;
}

inline Cyclo cyclo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("coeffs") || !j["level"].is_number_unsigned() ||
      !j["coeffs"].is_array())
    throw UsageError("cyclotomic value needs an unsigned 'level' and a 'coeffs' array");
  std::vector<Rational> cs;
  for (const auto& e : j["coeffs"]) {
    if (!e.is_string()) throw UsageError("cyclotomic coefficients are strings \"p/q\"");
    cs.push_back(parse_rational(e.get<std::string>()));
  }
  const auto level = j["level"].get<std::uint64_t>();
  if (level == 0) throw UsageError("cyclotomic level must be positive");
  try {
    return Cyclo::from_coeffs(level, std::move(cs));
  } catch (const DimensionError& e) {
    throw UsageError(e.what());
  }
}

/// "(2,1)x(1)" for GL tori, "split"/"coxeter" for SL_2.
inline TorusType parse_torus(const Group& g, const std::string& text) {
  if (g.spec().family == Family::SL) {
    if (text == "split") return TorusType::split();
    if (text == "coxeter" || text == "nonsplit") return TorusType::coxeter();
    throw UsageError("SL_2 tori are 'split' or 'coxeter', got '" + text + "'");
  }
  std::vector<int> blocks = g.kind() == Group::Kind::GLBlocks ? g.blocks() : std::vector<int>{};
  if (g.kind() == Group::Kind::Torus)
    for (const auto& b : g.torus_type().blocks) blocks.push_back(b.weight());
  TorusType t;
  std::size_t start = 0;
  while (true) {
    const auto x = text.find('x', start);
    t.blocks.push_back(Partition::parse(std::string_view(text).substr(start, x == std::string::npos ? std::string::npos : x - start)));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  if (t.blocks.size() != blocks.size())
    throw UsageError("torus '" + text + "' needs one partition per block of " + g.name());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (t.blocks[b].weight() != blocks[b])
      throw UsageError("torus block " + t.blocks[b].to_string() + " does not partition " + std::to_string(blocks[b]));
  return t;
}

inline Json group_to_json(const Group& g) {
  Json j;
  j["family"] = g.spec().family == Family::GL ? "GL" : "SL";
  j["n"] = g.spec().n;
  j["q"] = g.spec().q;
  switch (g.kind()) {
    case Group::Kind::GLBlocks:
      j["levi"] = g.blocks();
      break;
    case Group::Kind::Torus:
      j["torus"] = g.torus_type().to_string();
      break;
    case Group::Kind::SL2:
      break;
  }
  return j;
}

inline GroupPtr group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("n") || !j.contains("q"))
    throw UsageError("group needs 'family', 'n' and 'q'");
  GroupSpec s;
  const auto fam = j["family"].get<std::string>();
  if (fam != "GL" && fam != "SL") throw UsageError("family must be GL or SL");
  s.family = fam == "GL" ? Family::GL : Family::SL;
  s.n = j["n"].get<int>();
  s.q = j["q"].get<std::uint64_t>();
  auto g = Group::create(s);
  if (j.contains("torus")) return g->torus_group(parse_torus(*g, j["torus"].get<std::string>()));
  if (j.contains("levi")) {
    const auto blocks = j["levi"].get<std::vector<int>>();
    if (s.family != Family::GL) throw UsageError("'levi' applies to GL only");
    return blocks.size() == 1 ? g : g->levi(blocks);
  }
  return g;
}

inline Json function_to_json(const ClassFunction& f) {
  const auto nf = f.normalized();
  const auto& g = *f.group();
  Json j;
  j["group"] = group_to_json(g);
  j["name"] = g.name();
  Json cls = Json::array(), vals = Json::array();
  for (std::size_t i = 0; i < g.class_count(); ++i) {
    cls.push_back(g.classes()[i].label);
    vals.push_back(cyclo_to_json(nf[i]));
  }
  j["classes"] = std::move(cls);
  j["values"] = std::move(vals);
  return j;
}

inline ClassFunction function_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("group") || !j.contains("values") || !j["values"].is_array())
      throw UsageError("class function needs 'group' and 'values'");
    auto g = group_from_json(j["group"]);
    if (j.contains("classes")) {
      const auto labels = j["classes"].get<std::vector<std::string>>();
      if (labels.size() != g->class_count()) throw UsageError("class list does not match " + g->name());
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != g->classes()[i].label)
          throw UsageError("class " + std::to_string(i) + " is '" + labels[i] + "', expected '" + g->classes()[i].label + "'");
    }
    std::vector<Cyclo> vals;
    for (const auto& v : j["values"]) vals.push_back(cyclo_from_json(v));
    if (vals.size() != g->class_count())
      throw UsageError(g->name() + " has " + std::to_string(g->class_count()) + " classes, got " + std::to_string(vals.size()) + " values");
    return ClassFunction(g, std::move(vals));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed class function JSON: ") + e.what());
  }
}

}  // namespace dlcf::cli
