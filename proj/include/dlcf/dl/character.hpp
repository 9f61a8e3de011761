#pragma once

// R_T^G(theta) for maximal tori T.
//
// GL_m: the value at a class with semisimple part sigma and unipotent
// partitions mu_o is
//   sum_{t in T^F, eigenvalues(t) = sigma} prod_o Q^{mu_o}_{rho_o(t)}(q^{d_o}) theta(t),
// where the torus coordinate i (a point of F_{q^lambda_i}^*) whose value lies
// in the orbit o of degree d_o contributes the part lambda_i / d_o to rho_o.
// The sum is grouped by the key (o, part) so that each group contributes one
// sparse sum of roots of unity. Levis multiply block by block.
// SL_2 uses the closed formulas.

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "dlcf/combinat/green.hpp"
#include "dlcf/dl/class_function.hpp"

namespace dlcf {

namespace detail {

/// zeta_m^k at the smallest level containing it.
inline Cyclo root_of_unity(std::uint64_t m, std::uint64_t k) {
  k %= m;
  if (k == 0) return Cyclo(1);
  const auto g = std::gcd(k, m);
  return Cyclo::zeta(m / g, static_cast<std::int64_t>(k / g));
}

/// theta(t) = prod_i zeta_{orders_i}^{c_i t_i}, computed at level lcm of the
/// orders of the factors c_i.
class TorusCharEval {
 public:
  TorusCharEval(const TorusChar& c, const std::vector<std::uint64_t>& orders) : orders_(orders) {
    if (c.size() != orders.size()) throw UsageError("character has " + std::to_string(c.size()) + " exponents, torus has " +
                                                    std::to_string(orders.size()) + " factors");
    level_ = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto ci = c[i] % orders[i];
      level_ = lcm_u64(level_, orders[i] / std::gcd(ci == 0 ? orders[i] : ci, orders[i]));
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto ci = c[i] % orders[i];
      if (ci == 0) {
        steps_.push_back(0);
        continue;
      }
      // zeta_m^c = zeta_{m/g}^{c/g} = zeta_L^{(c/g) L/(m/g)}
      const auto g = std::gcd(ci, orders[i]);
      steps_.push_back(static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(ci / g) * (level_ / (orders[i] / g))) % level_));
    }
  }
  std::uint64_t level() const { return level_; }
  /// Exponent of zeta_L for theta(t).
  std::uint64_t exponent(const std::vector<std::uint64_t>& t) const {
    unsigned __int128 s = 0;
    for (std::size_t i = 0; i < t.size(); ++i) s += static_cast<unsigned __int128>(t[i] % orders_[i]) * steps_[i];
    return static_cast<std::uint64_t>(s % level_);
  }
  Cyclo operator()(const std::vector<std::uint64_t>& t) const { return root_of_unity(level_, exponent(t)); }

 private:
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint64_t> steps_;
  std::uint64_t level_ = 1;
};

using SemisimpleKey = std::vector<std::pair<FrobOrbit, int>>;            // (orbit, multiplicity)
using TorusPointKey = std::vector<std::pair<FrobOrbit, std::vector<int>>>;  // (orbit, parts of rho_o)

inline SemisimpleKey semisimple_of(const GLClass& c) {
  SemisimpleKey s;
  for (const auto& p : c) s.emplace_back(p.orbit, p.mu.weight());
  return s;
}

/// R_T^{GL_m}(theta) on the classes of GL_m, lambda = torus type.
inline std::map<GLClass, Cyclo> gl_block_character(const Tower& tower, int m, const Partition& lambda,
                                                   const std::vector<std::uint64_t>& theta) {
  if (lambda.weight() != m) throw UsageError("torus type " + lambda.to_string() + " does not fit GL_" + std::to_string(m));
  const auto q = tower.q();
  const std::size_t r = lambda.length();
  std::vector<std::uint64_t> orders(r);
  for (std::size_t i = 0; i < r; ++i) orders[i] = tower.order(lambda[i]);
  const TorusCharEval chi(theta, orders);
  const auto L = chi.level();

  // orbit of every coordinate value, per factor
  std::vector<std::vector<FrobOrbit>> orbit_table(r);
  for (std::size_t i = 0; i < r; ++i) {
    orbit_table[i].reserve(orders[i]);
    for (std::uint64_t e = 0; e < orders[i]; ++e) orbit_table[i].push_back(tower.orbit_of(tower.elem(lambda[i], e)));
  }

  std::map<TorusPointKey, std::map<std::uint64_t, long>> acc;
  std::vector<std::pair<FrobOrbit, int>> pts(r);
  for_each_torus_tuple(orders, [&](const std::vector<std::uint64_t>& t) {
    for (std::size_t i = 0; i < r; ++i) pts[i] = {orbit_table[i][t[i]], lambda[i] / orbit_table[i][t[i]].degree};
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    TorusPointKey key;
    for (const auto& [o, part] : sorted) {
      if (key.empty() || key.back().first != o) key.emplace_back(o, std::vector<int>{});
      key.back().second.push_back(part);
    }
    ++acc[key][chi.exponent(t)];
  });

  // group by semisimple data
  struct Term {
    std::vector<Partition> rho;  // one per orbit, aligned with the semisimple key
    Cyclo sum;
  };
  std::map<SemisimpleKey, std::vector<Term>> by_sigma;
  for (const auto& [key, counts] : acc) {
    SemisimpleKey sigma;
    Term term;
    for (const auto& [o, parts] : key) {
      auto p = parts;
      std::sort(p.rbegin(), p.rend());
      const int w = std::accumulate(p.begin(), p.end(), 0);
      sigma.emplace_back(o, w);
      term.rho.emplace_back(std::move(p));
    }
    if (L == 1) {
      long s = 0;
      for (const auto& [e, c] : counts) s += c;
      term.sum = Cyclo(s);
    } else {
      std::vector<Rational> dense(L, Rational(0));
      for (const auto& [e, c] : counts) dense[e] = c;
      term.sum = Cyclo::from_powers(L, dense).minimal();
    }
    if (!term.sum.is_zero()) by_sigma[sigma].push_back(std::move(term));
  }

  std::map<GLClass, Cyclo> out;
  for (const auto& c : gl_class_types(tower, m)) {
    auto it = by_sigma.find(semisimple_of(c));
    Cyclo v;
    if (it != by_sigma.end()) {
      for (const auto& term : it->second) {
        Integer coef = 1;
        for (std::size_t j = 0; j < c.size(); ++j) {
          const Integer qd = int_pow(Integer(static_cast<unsigned long>(q)), static_cast<unsigned>(c[j].orbit.degree));
          coef *= green_polynomial(c[j].mu, term.rho[j]).eval(qd);
          if (coef == 0) break;
        }
        if (coef != 0) v += Cyclo(coef) * term.sum;
      }
    }
    out.emplace(c, v.minimal());
  }
  return out;
}

inline ClassFunction sl2_character(const GroupPtr& g, const TorusType& tau, const TorusChar& theta) {
  if (theta.size() != 1) throw UsageError("SL_2 torus characters have one exponent");
  const auto q = g->q();
  const bool split = tau.sl2 == TorusType::SL2Kind::Split;
  const std::uint64_t m = split ? q - 1 : q + 1;
  const auto c = theta[0] % m;
  auto th = [&](std::uint64_t e) { return root_of_unity(m, static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) * e) % m)); };
  // exponents of -1 in the two tori
  const std::uint64_t minus_one = m / 2;
  ClassFunction f(g);
  using K = SL2Class::Kind;
  const auto& cls = g->classes();
  const Integer qq = static_cast<unsigned long>(q);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const auto& s = cls[i].type.sl2();
    const Cyclo tz = th(s.sign > 0 ? 0 : minus_one);
    switch (s.kind) {
      case K::Central:
        f[i] = Cyclo(split ? Integer(qq + 1) : Integer(1 - qq)) * tz;
        break;
      case K::UnipotentCentral:
        f[i] = tz;
        break;
      case K::SplitRSS:
        if (split) f[i] = (th(s.param) + th(m - s.param)).minimal();
        break;
      case K::NonsplitRSS:
        if (!split) f[i] = (th(s.param) + th(m - s.param)).minimal();
        break;
    }
  }
  return f;
}

}  // namespace detail

/// R_T^G(theta) as a class function on g (GL_n, a Levi, a torus or SL_2).
inline ClassFunction dl_character(const GroupPtr& g, const TorusType& tau, const TorusChar& theta) {
  switch (g->kind()) {
    case Group::Kind::SL2:
      if (!tau.is_sl2()) throw UsageError("torus type " + tau.to_string() + " is not a torus of SL_2");
      return detail::sl2_character(g, tau, theta);
    case Group::Kind::Torus: {
      if (!(tau == g->torus_type())) throw UsageError("torus type " + tau.to_string() + " is not " + g->name());
      const detail::TorusCharEval chi(theta, tau.factor_orders(g->q()));
      ClassFunction f(g);
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = chi(g->classes()[i].type.torus());
      return f;
    }
    case Group::Kind::GLBlocks:
      break;
  }
  if (tau.is_sl2() || tau.blocks.size() != g->blocks().size())
    throw UsageError("torus type " + tau.to_string() + " does not fit " + g->name());
  const auto f_total = tau.factors().size();
  if (theta.size() != f_total)
    throw UsageError("character needs " + std::to_string(f_total) + " exponents, got " + std::to_string(theta.size()));
  std::vector<std::map<GLClass, Cyclo>> per_block;
  std::size_t off = 0;
  for (std::size_t b = 0; b < tau.blocks.size(); ++b) {
    const auto len = tau.blocks[b].length();
    std::vector<std::uint64_t> th(theta.begin() + static_cast<std::ptrdiff_t>(off),
                                  theta.begin() + static_cast<std::ptrdiff_t>(off + len));
    off += len;
    per_block.push_back(detail::gl_block_character(g->tower(), g->blocks()[b], tau.blocks[b], th));
  }
  ClassFunction f(g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& ct = g->classes()[i].type.gl();
    Cyclo v(1);
    for (std::size_t b = 0; b < ct.size() && !v.is_zero(); ++b) v = v * per_block[b].at(ct[b]);
    f[i] = v.minimal();
  }
  return f;
}

}  // namespace dlcf
