#pragma once

// Gamma-lines (torus lines R_T(theta) up to W-conjugacy, plus the two
// cuspidal lines of SL_2) and Theta-lines (geometric class with a local
// system), with the map psi to strata.

#include <string>
#include <vector>

#include "dlcf/dl/character.hpp"
#include "dlcf/grptypes/strata.hpp"

namespace dlcf {

struct GammaLine {
  enum class Kind { Torus, Cuspidal };
  Kind kind = Kind::Torus;
  TorusType torus;
  TorusChar theta;
  int sign = 1;  // cuspidal: central sign of the unipotent coset

  static GammaLine torus_line(TorusType t, TorusChar c) { return GammaLine{Kind::Torus, std::move(t), std::move(c), 1}; }
  static GammaLine cuspidal(int sign) { return GammaLine{Kind::Cuspidal, {}, {}, sign}; }

  std::string theta_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < theta.size(); ++i) s += (i ? "," : "") + std::to_string(theta[i]);
    return s + "]";
  }
  std::string to_string() const {
    if (kind == Kind::Cuspidal) return "cuspidal(" + sign_str(sign) + ")";
    return "R[" + torus.to_string() + "]" + theta_string();
  }

  /// Stratum the line lives over: tori give the dense stratum, cuspidal lines their unipotent coset.
  StratumLabel stratum(const Group& g) const {
    if (kind == Kind::Cuspidal) return StratumLabel::sl2_label(StratumLabel::SL2Kind::UnipCoset, sign);
    return dense_stratum(g);
  }
};

struct LineRep {
  GammaLine line;
  std::size_t orbit_size = 1;
  ClassFunction rep;
};

namespace detail {

/// Class indices of the two rational classes in the unipotent coset z*U.
inline std::pair<std::size_t, std::size_t> sl2_unipotent_pair(const Group& g, int sign) {
  using K = SL2Class::Kind;
  return {g.index_of(ClassType{SL2Class{K::UnipotentCentral, sign, 0, 0}}),
          g.index_of(ClassType{SL2Class{K::UnipotentCentral, sign, 1, 0}})};
}

inline ClassFunction twisted_indicator(const GroupPtr& g, int sign) {
  const auto [a, b] = sl2_unipotent_pair(*g, sign);
  return ClassFunction::indicator(g, {a, b}, {Cyclo(1), Cyclo(-1)});
}

}  // namespace detail

/// Only the torus lines, without representatives.
inline std::vector<std::pair<GammaLine, std::size_t>> torus_lines(const Group& g) {
  std::vector<std::pair<GammaLine, std::size_t>> out;
  for (const auto& t : g.tori())
    for (const auto& o : g.character_orbits(t)) out.emplace_back(GammaLine::torus_line(t, o.rep), o.size);
  return out;
}

inline std::vector<LineRep> enumerate_lines(const GroupPtr& g) {
  std::vector<LineRep> out;
  for (auto& [line, size] : torus_lines(*g)) {
    auto rep = dl_character(g, line.torus, line.theta);
    out.push_back({std::move(line), size, std::move(rep)});
  }
  if (g->kind() == Group::Kind::SL2)
    for (int s : {1, -1}) out.push_back({GammaLine::cuspidal(s), 1, detail::twisted_indicator(g, s)});
  return out;
}

struct ThetaLine {
  std::string geometric_class;  // label of the geometric class D
  bool epsilon = false;         // nontrivial local system (SL_2 unipotent cosets only)
  std::vector<std::size_t> rational_classes;

  std::string to_string() const { return "(" + geometric_class + "," + (epsilon ? "epsilon" : "trivial") + ")"; }
};

namespace detail {
inline std::string sl2_unipotent_geometric_label(int sign) { return "U" + sign_str(sign); }
}  // namespace detail

/// Geometric classes of an ambient group: label and the rational classes they contain.
/// GL_n: every rational class is geometric. SL_2: "U+1", "U-1" group the two
/// rational unipotent-coset classes.
inline std::vector<std::pair<std::string, std::vector<std::size_t>>> geometric_classes(const Group& g) {
  detail::require_ambient(g);
  std::vector<std::pair<std::string, std::vector<std::size_t>>> out;
  const auto& cls = g.classes();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].type.is_sl2() && cls[i].type.sl2().kind == SL2Class::Kind::UnipotentCentral) {
      if (cls[i].type.sl2().square != 0) continue;
      const auto [a, b] = detail::sl2_unipotent_pair(g, cls[i].type.sl2().sign);
      out.push_back({detail::sl2_unipotent_geometric_label(cls[i].type.sl2().sign), {a, b}});
      continue;
    }
    out.push_back({cls[i].label, {i}});
  }
  return out;
}

/// The rational classes of a geometric class given by label.
inline std::vector<std::size_t> geometric_class(const Group& g, const std::string& label) {
  for (auto& [l, idx] : geometric_classes(g))
    if (l == label) return idx;
  throw UsageError("unknown geometric class '" + label + "' for " + g.name());
}

inline std::vector<ThetaLine> theta_lines(const Group& g) {
  std::vector<ThetaLine> out;
  for (auto& [label, idx] : geometric_classes(g)) {
    const bool has_eps = idx.size() == 2;
    out.push_back({label, false, idx});
    if (has_eps) out.push_back({label, true, idx});
  }
  return out;
}

inline ThetaLine make_theta_line(const Group& g, const std::string& label, bool epsilon) {
  auto idx = geometric_class(g, label);
  if (epsilon && idx.size() != 2)
    throw UsageError("class " + label + " of " + g.name() + " carries no nontrivial local system");
  return {label, epsilon, std::move(idx)};
}

/// Indicator (trivial local system) or twisted indicator (epsilon).
inline ClassFunction theta_line_rep(const GroupPtr& g, const ThetaLine& t) {
  if (!t.epsilon) return ClassFunction::indicator(g, t.rational_classes);
  if (t.rational_classes.size() != 2) throw UsageError("epsilon line " + t.to_string() + " needs two rational classes");
  // square class first
  const auto& c0 = g->classes()[t.rational_classes[0]].type.sl2();
  const auto sq = c0.square == 0 ? t.rational_classes[0] : t.rational_classes[1];
  const auto nsq = c0.square == 0 ? t.rational_classes[1] : t.rational_classes[0];
  return ClassFunction::indicator(g, {sq, nsq}, {Cyclo(1), Cyclo(-1)});
}

/// Generalized Springer data: trivial local systems go to the dense stratum,
/// the epsilon system on z*U to the unipotent coset z*U.
inline StratumLabel psi(const Group& g, const ThetaLine& t) {
  detail::require_ambient(g);
  if (!t.epsilon) return dense_stratum(g);
  if (t.rational_classes.size() != 2)
    throw UsageError("class " + t.geometric_class + " carries no nontrivial local system");
  const int sign = g.classes()[t.rational_classes[0]].type.sl2().sign;
  return StratumLabel::sl2_label(StratumLabel::SL2Kind::UnipCoset, sign);
}

inline bool is_principal_type(const Group& g, const ThetaLine& t) { return psi(g, t) == dense_stratum(g); }

}  // namespace dlcf
