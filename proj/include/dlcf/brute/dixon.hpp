#pragma once

// Dixon-Schneider character tables. The class coefficients
// a_ijk = #{x in C_i : x^{-1} z_k in C_j} give matrices A_i with
// A_i w = w_i w for every central character w_chi(C_k) = |C_k| chi(z_k) / chi(1).
// Their common eigenvectors are found over F_l, l = 1 mod exponent, by
// successive eigenspace splitting; degrees come from the norm identity and
// values are lifted to Q(zeta_o) through eigenvalue multiplicities
//   m_t = o^{-1} sum_j chi(g^j) w^{-jt}.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dlcf/brute/matrix_group.hpp"
#include "dlcf/dl/class_function.hpp"

namespace dlcf::brute {

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;  // sorted by degree
  std::uint64_t prime = 0;
  std::size_t exponent = 0;

  std::size_t identity_class = 0;

  std::vector<long> degrees() const {
    std::vector<long> d;
    for (const auto& chi : irreducibles) d.push_back(chi[identity_class].rational().get_num().get_si());
    return d;
  }
};

namespace detail {

struct ModP {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, p); }
  std::uint64_t inv(std::uint64_t a) const {
    if (a % p == 0) throw DivisionError("inverse of 0 mod " + std::to_string(p));
    return pow(a, p - 2);
  }
};

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

/// Basis of the kernel of an m x m matrix mod p, as column vectors.
inline std::vector<std::vector<std::uint64_t>> kernel_mod(ModMatrix a, const ModP& f) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const auto inv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const auto fac = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = f.sub(a[i][k], f.mul(fac, a[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, a[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Characteristic polynomial det(x I - R), low degree first (Faddeev-LeVerrier).
inline std::vector<std::uint64_t> charpoly_mod(const ModMatrix& r, const ModP& f) {
  const std::size_t m = r.size();
  std::vector<std::uint64_t> c(m + 1, 0);
  c[m] = 1;
  ModMatrix mk(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t k = 1; k <= m; ++k) {
    ModMatrix next(m, std::vector<std::uint64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t s = 0;
        for (std::size_t t = 0; t < m; ++t) s = f.add(s, f.mul(r[i][t], mk[t][j]));
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < m; ++i) next[i][i] = f.add(next[i][i], c[m - k + 1]);
    mk = std::move(next);
    std::uint64_t tr = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t t = 0; t < m; ++t) tr = f.add(tr, f.mul(r[i][t], mk[t][i]));
    c[m - k] = f.sub(0, f.mul(tr, f.inv(k)));
  }
  return c;
}

/// Column-echelon basis: pivot row s of column s is 1, other columns vanish there.
struct Subspace {
  std::vector<std::vector<std::uint64_t>> basis;  // vectors of length r
  std::vector<std::size_t> pivots;
};

inline Subspace echelon(std::vector<std::vector<std::uint64_t>> vs, const ModP& f) {
  Subspace s;
  if (vs.empty()) return s;
  const std::size_t len = vs[0].size();
  std::size_t done = 0;
  for (std::size_t row = 0; row < len && done < vs.size(); ++row) {
    std::size_t p = done;
    while (p < vs.size() && vs[p][row] == 0) ++p;
    if (p == vs.size()) continue;
    std::swap(vs[p], vs[done]);
    const auto inv = f.inv(vs[done][row]);
    for (auto& x : vs[done]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i == done || vs[i][row] == 0) continue;
      const auto fac = vs[i][row];
      for (std::size_t k = 0; k < len; ++k) vs[i][k] = f.sub(vs[i][k], f.mul(fac, vs[done][k]));
    }
    s.pivots.push_back(row);
    ++done;
  }
  vs.resize(done);
  s.basis = std::move(vs);
  return s;
}

inline std::uint64_t primitive_root(std::uint64_t p) {
  const auto fs = factorize(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (const auto& [r, e] : fs)
      if (powmod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

inline std::uint64_t isqrt(std::uint64_t v) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

}  // namespace detail

/// Character table by the Dixon-Schneider method (classes in the group's class order).
inline CharacterTable dixon_table(const MatrixGroup& mg) {
  const auto& g = mg.group();
  const std::size_t r = mg.classes().size();
  const std::size_t order = mg.order();
  const std::size_t e = mg.exponent();

  // a[i][j][k]
  std::vector<std::vector<std::vector<std::uint64_t>>> a(r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const auto z = mg.classes()[k].rep;
    for (std::size_t x = 0; x < order; ++x) ++a[mg.class_of(x)][mg.class_of(mg.mul(mg.inverse(x), z))][k];
  }
  const std::size_t id = mg.class_of(mg.identity_index());
  std::vector<std::size_t> inv_class(r), ord(r);
  std::vector<std::vector<std::size_t>> power_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto z = mg.classes()[k].rep;
    inv_class[k] = mg.class_of(mg.inverse(z));
    ord[k] = mg.element_order(z);
    auto x = mg.identity_index();
    for (std::size_t j = 0; j < ord[k]; ++j) {
      power_class[k].push_back(mg.class_of(x));
      x = mg.mul(x, z);
    }
  }

  for (std::uint64_t ell = (2 * order / e + 1) * e + 1;; ell += e) {
    if (!is_prime(ell)) continue;
    const detail::ModP f{ell};
    std::vector<detail::Subspace> spaces;
    {
      std::vector<std::vector<std::uint64_t>> id_basis(r, std::vector<std::uint64_t>(r, 0));
      for (std::size_t i = 0; i < r; ++i) id_basis[i][i] = 1;
      spaces.push_back(detail::echelon(std::move(id_basis), f));
    }
    bool failed = false;
    for (std::size_t i = 0; i < r && !failed; ++i) {
      std::vector<detail::Subspace> next;
      for (auto& sp : spaces) {
        const std::size_t m = sp.basis.size();
        if (m == 1) {
          next.push_back(std::move(sp));
          continue;
        }
        // image of each basis vector under A_i, read off at the pivot rows
        detail::ModMatrix rmat(m, std::vector<std::uint64_t>(m, 0));
        for (std::size_t t = 0; t < m; ++t) {
          const auto& b = sp.basis[t];
          for (std::size_t s = 0; s < m; ++s) {
            const auto row = sp.pivots[s];
            std::uint64_t v = 0;
            for (std::size_t k = 0; k < r; ++k)
              if (b[k]) v = f.add(v, f.mul(a[i][row][k] % ell, b[k]));
            rmat[s][t] = v;
          }
        }
        const auto cp = detail::charpoly_mod(rmat, f);
        std::size_t covered = 0;
        for (std::uint64_t lam = 0; lam < ell && covered < m; ++lam) {
          std::uint64_t val = 0;
          for (std::size_t d = cp.size(); d-- > 0;) val = f.add(f.mul(val, lam), cp[d]);
          if (val != 0) continue;
          auto shifted = rmat;
          for (std::size_t s = 0; s < m; ++s) shifted[s][s] = f.sub(shifted[s][s], lam);
          const auto ker = detail::kernel_mod(shifted, f);
          std::vector<std::vector<std::uint64_t>> vs;
          for (const auto& u : ker) {
            std::vector<std::uint64_t> w(r, 0);
            for (std::size_t t = 0; t < m; ++t)
              if (u[t])
                for (std::size_t k = 0; k < r; ++k) w[k] = f.add(w[k], f.mul(u[t], sp.basis[t][k]));
            vs.push_back(std::move(w));
          }
          covered += vs.size();
          next.push_back(detail::echelon(std::move(vs), f));
        }
        if (covered != m) failed = true;
      }
      spaces = std::move(next);
    }
    if (failed || spaces.size() != r) continue;

    const std::uint64_t root = f.pow(detail::primitive_root(ell), (ell - 1) / e);
    CharacterTable tab{g, {}, ell, e, id};
    for (const auto& sp : spaces) {
      auto w = sp.basis[0];
      if (w[id] == 0) {
        failed = true;
        break;
      }
      const auto s0 = f.inv(w[id]);
      for (auto& x : w) x = f.mul(x, s0);
      std::uint64_t norm = 0;
      for (std::size_t k = 0; k < r; ++k)
        norm = f.add(norm, f.mul(f.mul(w[k], w[inv_class[k]]), f.inv(mg.classes()[k].size % ell)));
      if (norm == 0) {
        failed = true;
        break;
      }
      const auto d2 = f.mul(order % ell, f.inv(norm));
      const auto d = detail::isqrt(d2);
      if (d == 0 || d * d != d2) {
        failed = true;
        break;
      }
      std::vector<std::uint64_t> chi(r);
      for (std::size_t k = 0; k < r; ++k) chi[k] = f.mul(f.mul(w[k], d), f.inv(mg.classes()[k].size % ell));
      ClassFunction cf(g);
      for (std::size_t k = 0; k < r && !failed; ++k) {
        const auto o = ord[k];
        const auto wo = f.pow(root, e / o);
        const auto winv = f.inv(wo);
        std::vector<Rational> mult(o, Rational(0));
        const auto inv_o = f.inv(o % ell);
        for (std::size_t t = 0; t < o; ++t) {
          std::uint64_t s = 0;
          const auto step = f.pow(winv, t);
          std::uint64_t wj = 1;
          for (std::size_t j = 0; j < o; ++j) {
            s = f.add(s, f.mul(chi[power_class[k][j]], wj));
            wj = f.mul(wj, step);
          }
          const auto m = f.mul(s, inv_o);
          if (m > d) {
            failed = true;
            break;
          }
          mult[t] = static_cast<long>(m);
        }
        if (!failed) cf[k] = Cyclo::from_powers(o, mult).minimal();
      }
      if (failed) break;
      tab.irreducibles.push_back(std::move(cf));
    }
    if (failed) continue;
    std::stable_sort(tab.irreducibles.begin(), tab.irreducibles.end(), [&](const ClassFunction& x, const ClassFunction& y) {
      return x[id].rational() < y[id].rational();
    });
    return tab;
  }
}

}  // namespace dlcf::brute
