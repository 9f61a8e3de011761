#pragma once

// Oracle comparison of the type-level pipeline against explicit matrix groups.

#include <functional>
#include <string>
#include <vector>

#include "dlcf/brute/dixon.hpp"
#include "dlcf/brute/harish_chandra.hpp"
#include "dlcf/dl/induction.hpp"

namespace dlcf::brute {

/// Groups whose oracle runs are opt-in (slow).
inline bool is_opt_in(const GroupSpec& s) {
  return s.family == Family::GL && ((s.n == 3 && s.q == 3) || (s.n == 2 && s.q == 5));
}

struct CrossCheck {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct CrossReport {
  std::string group;
  std::vector<CrossCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return !checks.empty();
  }
};

/// Ordered block sizes summing to n.
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int b = 1; b <= rem; ++b) {
      cur.push_back(b);
      rec(rem - b);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

/// Standard Levis of an ambient group (G itself included).
inline std::vector<GroupPtr> standard_levis(const GroupPtr& g) {
  if (g->kind() == Group::Kind::SL2) return {g->torus_group(TorusType::split()), g};
  std::vector<GroupPtr> out;
  for (const auto& c : compositions(g->spec().n)) out.push_back(levi_of(g, c));
  return out;
}

inline bool is_unipotent_class(const ClassType& c) {
  if (c.is_sl2()) {
    const auto& s = c.sl2();
    return s.sign == 1 && (s.kind == SL2Class::Kind::Central || s.kind == SL2Class::Kind::UnipotentCentral);
  }
  for (const auto& blk : c.gl())
    for (const auto& p : blk)
      if (!(p.orbit == FrobOrbit{1, 0})) return false;
  return true;
}

/// Both orthogonality relations and the degree sum, exactly.
inline CrossCheck check_table(const CharacterTable& t) {
  CrossCheck c{"dixon_orthogonality", 0, {}};
  const auto& g = t.group;
  const std::size_t r = g->class_count();
  if (t.irreducibles.size() != r) c.failures.push_back(std::to_string(t.irreducibles.size()) + " irreducibles for " + std::to_string(r) + " classes");
  Integer sum = 0;
  for (auto d : t.degrees()) {
    if (d <= 0) c.failures.push_back("non-positive degree " + std::to_string(d));
    sum += d * d;
  }
  if (sum != g->order()) c.failures.push_back("sum of squared degrees " + sum.get_str());
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    for (std::size_t j = i; j < t.irreducibles.size(); ++j) {
      ++c.checked;
      if (inner_product(t.irreducibles[i], t.irreducibles[j]) != Cyclo(i == j ? 1L : 0L))
        c.failures.push_back("rows " + std::to_string(i) + "," + std::to_string(j));
    }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      Cyclo s;
      for (const auto& chi : t.irreducibles) s += chi[a] * chi[b].conj();
      ++c.checked;
      const Cyclo expect = a == b ? Cyclo(g->classes()[a].centralizer) : Cyclo(0L);
      if (s != expect) c.failures.push_back("columns " + g->classes()[a].label + "," + g->classes()[b].label);
    }
  return c;
}

inline CrossReport cross_validate(const GroupSpec& spec) {
  CrossReport rep;
  const auto g = Group::create(spec);
  rep.group = g->name();

  CrossCheck classes{"class_data", 0, {}};
  std::shared_ptr<const MatrixGroup> mg;
  try {
    mg = std::make_shared<const MatrixGroup>(g);
    for (std::size_t k = 0; k < mg->classes().size(); ++k) {
      ++classes.checked;
      const auto& bc = mg->classes()[k];
      const auto& info = g->classes()[k];
      if (Integer(static_cast<unsigned long>(bc.size)) != info.size || g->order() / info.size != info.centralizer)
        classes.failures.push_back(info.label);
    }
  } catch (const std::exception& e) {
    classes.failures.push_back(e.what());
    rep.checks.push_back(classes);
    return rep;
  }
  rep.checks.push_back(classes);

  // (1) R_M^G against Harish-Chandra induction
  CrossCheck ind{"induction_vs_harish_chandra", 0, {}};
  for (const auto& m : standard_levis(g)) {
    const LusztigInduction lus(g, m);
    for (const auto& l : enumerate_lines(m)) {
      ++ind.checked;
      if (lus(l.rep) != harish_chandra(*mg, m, l.rep)) ind.failures.push_back(m->name() + " " + l.line.to_string());
    }
  }
  rep.checks.push_back(ind);

  // Harish-Chandra induction of 1 from the torus at unipotent elements counts fixed flags.
  CrossCheck flags{"fixed_flags", 0, {}};
  {
    const auto t = standard_levis(g).front();
    const auto h = harish_chandra(*mg, t, ClassFunction::constant(t, 1));
    const FlagVariety fv(mg->ops());
    for (std::size_t k = 0; k < g->class_count(); ++k) {
      if (!is_unipotent_class(g->classes()[k].type)) continue;
      ++flags.checked;
      if (h[k] != Cyclo(static_cast<long>(fv.fixed_by(mg->element(mg->classes()[k].rep)))))
        flags.failures.push_back(g->classes()[k].label);
    }
  }
  rep.checks.push_back(flags);

  const auto table = dixon_table(*mg);
  rep.checks.push_back(check_table(table));

  // (2) integrality of every line against every irreducible; cuspidal lines
  // are scale-free, so their pairings need only have rational ratios.
  CrossCheck integ{"integrality", 0, {}};
  const auto lines = enumerate_lines(g);
  for (const auto& l : lines) {
    std::vector<Cyclo> pairings;
    for (const auto& chi : table.irreducibles) pairings.push_back(inner_product(l.rep, chi));
    ++integ.checked;
    if (l.line.kind == GammaLine::Kind::Torus) {
      for (const auto& p : pairings)
        if (!p.is_rational() || p.rational().get_den() != 1) {
          integ.failures.push_back(l.line.to_string() + " pairs to " + p.to_string());
          break;
        }
      continue;
    }
    const Cyclo* pivot = nullptr;
    for (const auto& p : pairings)
      if (!p.is_zero()) {
        pivot = &p;
        break;
      }
    if (!pivot) {
      integ.failures.push_back(l.line.to_string() + " is orthogonal to every irreducible");
      continue;
    }
    const auto inv = pivot->inv();
    for (const auto& p : pairings)
      if (!(p * inv).is_rational()) {
        integ.failures.push_back(l.line.to_string() + " pairing ratio " + (p * inv).to_string());
        break;
      }
  }
  rep.checks.push_back(integ);

  // (3) theta in general position gives +-irreducible
  CrossCheck gp{"general_position", 0, {}};
  for (const auto& t : g->tori()) {
    const auto wsize = g->weyl(t).size();
    for (const auto& o : g->character_orbits(t)) {
      if (o.size != wsize) continue;
      ++gp.checked;
      const auto r = dl_character(g, t, o.rep);
      if (inner_product(r, r) != Cyclo(1)) gp.failures.push_back(t.to_string() + " " + GammaLine::torus_line(t, o.rep).theta_string());
    }
  }
  rep.checks.push_back(gp);
  return rep;
}

}  // namespace dlcf::brute
