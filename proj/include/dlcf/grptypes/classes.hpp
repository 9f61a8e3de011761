#pragma once

// Conjugacy class types.
//
// GL_n: a multiset of (Frobenius orbit of eigenvalues, partition); the orbit
// of degree d with partition mu of m contributes d*m to n. A class of a Levi
// GL_{n1} x ... x GL_{nr} is a tuple of such, one per block.
// Torus: an element, given by exponents per cyclic factor.
// SL_2 (q odd): central, unipotent-central (two square classes each), split
// and nonsplit regular semisimple.

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dlcf/combinat/partition.hpp"
#include "dlcf/gftower/tower.hpp"
#include "dlcf/grptypes/spec.hpp"

namespace dlcf {

struct GLClassPart {
  FrobOrbit orbit;
  Partition mu;
  auto operator<=>(const GLClassPart&) const = default;
  bool operator==(const GLClassPart&) const = default;
};

/// Parts sorted by orbit; orbits distinct.
using GLClass = std::vector<GLClassPart>;

struct SL2Class {
  enum class Kind { Central, UnipotentCentral, SplitRSS, NonsplitRSS };
  Kind kind = Kind::Central;
  int sign = 1;             // central part for Central / UnipotentCentral
  int square = 0;           // UnipotentCentral: 0 for the class of [[1,1],[0,1]], 1 for the non-square class
  std::uint64_t param = 0;  // SplitRSS: x = g_1^param; NonsplitRSS: y = g_2^{(q-1) param}; least of param, -param
  auto operator<=>(const SL2Class&) const = default;
  bool operator==(const SL2Class&) const = default;
};

using TorusElem = std::vector<std::uint64_t>;

struct ClassType {
  std::variant<std::vector<GLClass>, TorusElem, SL2Class> v;

  bool is_gl() const { return v.index() == 0; }
  bool is_torus() const { return v.index() == 1; }
  bool is_sl2() const { return v.index() == 2; }
  const std::vector<GLClass>& gl() const { return std::get<0>(v); }
  const GLClass& gl_single() const { return std::get<0>(v).at(0); }
  const TorusElem& torus() const { return std::get<1>(v); }
  const SL2Class& sl2() const { return std::get<2>(v); }

  bool operator==(const ClassType& o) const { return v == o.v; }
  bool operator<(const ClassType& o) const { return v < o.v; }
};

inline std::string gl_class_label(const GLClass& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ';';
    s += c[i].orbit.to_string() + c[i].mu.to_string();
  }
  return s;
}

inline std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

inline std::string class_label(const ClassType& c) {
  if (c.is_gl()) {
    std::string s;
    for (std::size_t b = 0; b < c.gl().size(); ++b) {
      if (b) s += '|';
      s += gl_class_label(c.gl()[b]);
    }
    return s;
  }
  if (c.is_torus()) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.torus().size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c.torus()[i]);
    }
    return s + "]";
  }
  const auto& x = c.sl2();
  switch (x.kind) {
    case SL2Class::Kind::Central:
      return "z" + sign_str(x.sign);
    case SL2Class::Kind::UnipotentCentral:
      return "u" + sign_str(x.sign) + (x.square ? ".nu" : ".1");
    case SL2Class::Kind::SplitRSS:
      return "s" + std::to_string(x.param);
    case SL2Class::Kind::NonsplitRSS:
      return "n" + std::to_string(x.param);
  }
  return {};
}

/// |centralizer| of a class of GL_m with the given parts: prod_o z_mu(q^d),
/// z_mu(t) = t^{sum mu'^2 - sum_j m_j(m_j+1)/2} prod_j prod_{i<=m_j} (t^i - 1).
inline Integer gl_centralizer_order(const GLClass& c, std::uint64_t q) {
  Integer r = 1;
  for (const auto& part : c) {
    const Integer t = int_pow(Integer(static_cast<unsigned long>(q)), static_cast<unsigned>(part.orbit.degree));
    int e = part.mu.conj_square_sum();
    for (auto [len, mult] : part.mu.multiplicities()) {
      (void)len;
      e -= mult * (mult + 1) / 2;
      for (int i = 1; i <= mult; ++i) r *= int_pow(t, static_cast<unsigned>(i)) - 1;
    }
    r *= int_pow(t, static_cast<unsigned>(e));
  }
  return r;
}

/// Total weight sum d*|mu|.
inline int gl_class_weight(const GLClass& c) {
  int w = 0;
  for (const auto& p : c) w += p.orbit.degree * p.mu.weight();
  return w;
}

namespace detail {

inline void gl_classes_rec(const std::vector<FrobOrbit>& orbits, std::size_t start, int rem, GLClass& cur,
                           std::vector<GLClass>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < orbits.size(); ++i) {
    const int d = orbits[i].degree;
    if (d > rem) break;  // orbits are sorted by degree
    for (int m = 1; d * m <= rem; ++m)
      for (const auto& mu : partitions(m)) {
        cur.push_back({orbits[i], mu});
        gl_classes_rec(orbits, i + 1, rem - d * m, cur, out);
        cur.pop_back();
      }
  }
}

}  // namespace detail

/// All class types of GL_m(F_q), sorted.
inline std::vector<GLClass> gl_class_types(const Tower& t, int m) {
  std::vector<FrobOrbit> orbits;
  for (int d = 1; d <= m; ++d) {
    auto o = t.orbits_of_degree(d);
    orbits.insert(orbits.end(), o.begin(), o.end());
  }
  std::vector<GLClass> out;
  GLClass cur;
  detail::gl_classes_rec(orbits, 0, m, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dlcf
