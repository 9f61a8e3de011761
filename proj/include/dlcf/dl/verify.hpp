#pragma once

// Structural checks: the line decomposition and per-stratum span equality,
// the Mackey formula for pairs of tori, transitivity of induction through a
// Levi, and the expansion of class indicators over lines.

#include <map>
#include <string>
#include <vector>

#include "dlcf/dl/induction.hpp"

namespace dlcf {

struct StratumCheck {
  StratumLabel stratum;
  std::size_t gamma_lines = 0, theta_lines = 0;
  std::size_t gamma_rank = 0, theta_rank = 0, union_rank = 0;
  bool ok = false;
};

struct DecompositionReport {
  std::string group;
  std::size_t lines = 0, classes = 0, rank = 0;
  bool lines_span = false;  // count equals classes and the lines are independent
  std::vector<StratumCheck> strata;
  std::vector<std::string> failures;
  bool ok = false;
};

inline DecompositionReport verify_decomposition(const GroupPtr& g) {
  detail::require_ambient(*g);
  DecompositionReport rep;
  rep.group = g->name();
  rep.classes = g->class_count();
  const auto lines = enumerate_lines(g);
  rep.lines = lines.size();
  std::vector<ClassFunction> reps;
  for (const auto& l : lines) reps.push_back(l.rep);
  rep.rank = function_rank(reps);
  rep.lines_span = rep.lines == rep.classes && rep.rank == rep.classes;
  if (rep.lines != rep.classes)
    rep.failures.push_back(std::to_string(rep.lines) + " lines for " + std::to_string(rep.classes) + " classes");
  if (rep.rank != rep.lines)
    rep.failures.push_back("line representatives have rank " + std::to_string(rep.rank) + " < " + std::to_string(rep.lines));

  std::map<StratumLabel, std::vector<ClassFunction>> gamma, theta;
  for (const auto& l : lines) gamma[l.line.stratum(*g)].push_back(l.rep);
  for (const auto& t : theta_lines(*g)) theta[psi(*g, t)].push_back(theta_line_rep(g, t));

  for (const auto& s : enumerate_strata(*g)) {
    auto& gs = gamma[s.label];
    auto& ts = theta[s.label];
    if (gs.empty() && ts.empty()) continue;
    StratumCheck c;
    c.stratum = s.label;
    c.gamma_lines = gs.size();
    c.theta_lines = ts.size();
    const SpanProjector proj(g, gs);
    c.gamma_rank = proj.rank();
    c.theta_rank = function_rank(ts);
    std::vector<ClassFunction> residuals;
    for (const auto& t : ts) {
      auto r = proj.project(t).residual;
      if (!r.is_zero()) residuals.push_back(std::move(r));
    }
    c.union_rank = c.gamma_rank + function_rank(residuals);
    c.ok = c.gamma_rank == c.theta_rank && c.theta_rank == c.union_rank;
    if (!c.ok)
      rep.failures.push_back("stratum " + s.label.to_string() + ": rank(Gamma) = " + std::to_string(c.gamma_rank) +
                             ", rank(Theta) = " + std::to_string(c.theta_rank) + ", rank(union) = " +
                             std::to_string(c.union_rank));
    rep.strata.push_back(c);
  }
  rep.ok = rep.failures.empty();
  return rep;
}

struct MackeyResult {
  Cyclo lhs;
  long long rhs = 0;
  bool equal = false;
};

inline TorusChar reduce_char(const TorusType& t, TorusChar c, std::uint64_t q) {
  const auto orders = t.factor_orders(q);
  if (c.size() != orders.size())
    throw UsageError("character needs " + std::to_string(orders.size()) + " exponents for torus " + t.to_string());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] %= orders[i];
  return c;
}

/// <R_T(theta), R_T'(theta')> against #{w in W(T)^F : w theta = theta'} (0 for T != T').
inline MackeyResult mackey_check(const GroupPtr& g, const TorusType& t1, const TorusChar& c1, const TorusType& t2,
                                 const TorusChar& c2) {
  const auto a = reduce_char(t1, c1, g->q());
  const auto b = reduce_char(t2, c2, g->q());
  MackeyResult r;
  r.lhs = inner_product(dl_character(g, t1, a), dl_character(g, t2, b));
  if (t1 == t2) {
    const auto orders = t1.factor_orders(g->q());
    for (const auto& w : g->weyl(t1))
      if (apply_weyl(w, a, orders, g->q()) == b) ++r.rhs;
  }
  r.equal = r.lhs == Cyclo(static_cast<long>(r.rhs));
  return r;
}

struct MackeyReport {
  std::string group;
  std::size_t characters = 0, checked = 0;
  std::vector<std::string> failures;
  bool ok = false;
};

/// mackey_check over every pair of (torus, character), each character built once.
inline MackeyReport mackey_all(const GroupPtr& g) {
  MackeyReport rep;
  rep.group = g->name();
  struct Entry {
    TorusType t;
    TorusChar theta;
    ClassFunction f;
  };
  std::vector<Entry> all;
  for (const auto& t : g->tori())
    for_each_torus_tuple(t.factor_orders(g->q()), [&](const std::vector<std::uint64_t>& c) {
      all.push_back({t, c, dl_character(g, t, c)});
    });
  rep.characters = all.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto orders = all[i].t.factor_orders(g->q());
    const auto weyl = g->weyl(all[i].t);
    for (std::size_t j = i; j < all.size(); ++j) {
      long expect = 0;
      if (all[i].t == all[j].t)
        for (const auto& w : weyl)
          if (apply_weyl(w, all[i].theta, orders, g->q()) == all[j].theta) ++expect;
      ++rep.checked;
      if (inner_product(all[i].f, all[j].f) != Cyclo(expect))
        rep.failures.push_back(GammaLine::torus_line(all[i].t, all[i].theta).to_string() + " vs " +
                               GammaLine::torus_line(all[j].t, all[j].theta).to_string());
    }
  }
  rep.ok = rep.failures.empty() && rep.checked > 0;
  return rep;
}

struct IndicatorExpansion {
  std::string label;
  bool geometric = true;
  std::vector<std::size_t> classes;
  std::vector<LineCoefficient> torus_coeffs;
  std::vector<LineCoefficient> cuspidal_coeffs;
  ClassFunction target, torus_part, residual;
  std::size_t torus_rank = 0, augmented_rank = 0;
  bool residual_zero = false;
  bool reconstructed = false;
};

/// Expansion of the indicator of a geometric class (or, for SL_2, of a single
/// rational class) over the torus lines; what the torus lines miss is the
/// residual, expanded over the cuspidal lines.
inline IndicatorExpansion indicator_expansion(const GroupPtr& g, const std::string& label) {
  detail::require_ambient(*g);
  IndicatorExpansion e;
  e.label = label;
  bool found = false;
  for (auto& [l, idx] : geometric_classes(*g))
    if (l == label) {
      e.classes = idx;
      found = true;
    }
  if (!found) {
    e.classes = {g->index_of_label(label)};
    e.geometric = false;
  }
  e.target = ClassFunction::indicator(g, e.classes);

  const auto lines = enumerate_lines(g);
  std::vector<ClassFunction> tor, cusp;
  std::vector<GammaLine> tor_l, cusp_l;
  for (const auto& l : lines) {
    if (l.line.kind == GammaLine::Kind::Torus) {
      tor.push_back(l.rep);
      tor_l.push_back(l.line);
    } else {
      cusp.push_back(l.rep);
      cusp_l.push_back(l.line);
    }
  }
  const SpanProjector tp(g, tor);
  auto p = tp.project(e.target);
  for (std::size_t i = 0; i < tor.size(); ++i)
    if (!p.coeffs[i].is_zero()) e.torus_coeffs.push_back({tor_l[i], p.coeffs[i].minimal()});
  e.torus_part = p.projection;
  e.residual = p.residual;
  e.residual_zero = e.residual.is_zero();
  e.torus_rank = tp.rank();
  e.augmented_rank = e.torus_rank + (e.residual_zero ? 0 : 1);

  ClassFunction rebuilt = e.torus_part;
  if (!e.residual_zero && !cusp.empty()) {
    const SpanProjector cp(g, cusp);
    const auto pc = cp.project(e.residual);
    for (std::size_t i = 0; i < cusp.size(); ++i)
      if (!pc.coeffs[i].is_zero()) e.cuspidal_coeffs.push_back({cusp_l[i], pc.coeffs[i].minimal()});
    rebuilt += pc.projection;
  }
  e.reconstructed = rebuilt == e.target;
  return e;
}

struct TransitivityReport {
  std::string chain;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok = false;
};

/// R_M^G(R_T^M(theta)) = R_T^G(theta) for every torus T of M and every theta.
inline TransitivityReport transitivity_check(const GroupPtr& g, const std::vector<int>& m_blocks) {
  const auto m = levi_of(g, m_blocks);
  TransitivityReport rep;
  rep.chain = "T < " + m->name() + " < " + g->name();
  const LusztigInduction m_to_g(g, m);
  const std::vector<std::size_t> single(m_blocks.size(), 0);
  for (const auto& t : m->tori()) {
    const auto tg = g->torus_group(t);
    const LusztigInduction t_to_m(m, tg);
    for_each_torus_tuple(t.factor_orders(g->q()), [&](const std::vector<std::uint64_t>& theta) {
      const auto f = dl_character(tg, t, theta);
      const auto lhs = m_to_g(t_to_m(f));
      const auto [t_g, th_g] = transport_torus(t, theta, single, 1);
      const auto rhs = dl_character(g, t_g, th_g);
      ++rep.checked;
      if (!(lhs == rhs)) rep.failures.push_back(t.to_string() + " " + GammaLine::torus_line(t, theta).theta_string());
    });
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace dlcf
