#pragma once

// Maximal tori up to conjugacy, their characters, and the relative Weyl
// action. A GL torus of type lambda is prod_i F_{q^{lambda_i}}^*; inside a Levi
// block structure the type is one partition per block. The SL_2 tori are the
// split torus F_q^* and the norm-one subgroup of F_{q^2}^*. Elements and
// characters are exponent tuples; theta(t) = prod_i zeta_{|factor i|}^{c_i e_i}.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "dlcf/combinat/partition.hpp"
#include "dlcf/grptypes/spec.hpp"

namespace dlcf {

struct TorusType {
  enum class SL2Kind { None, Split, Coxeter };
  SL2Kind sl2 = SL2Kind::None;
  std::vector<Partition> blocks;  // GL only

  static TorusType gl(Partition p) { return TorusType{SL2Kind::None, {std::move(p)}}; }
  static TorusType split() { return TorusType{SL2Kind::Split, {}}; }
  static TorusType coxeter() { return TorusType{SL2Kind::Coxeter, {}}; }

  bool is_sl2() const { return sl2 != SL2Kind::None; }

  /// Field degrees of the cyclic factors, block by block.
  std::vector<int> factors() const {
    if (sl2 == SL2Kind::Split) return {1};
    if (sl2 == SL2Kind::Coxeter) return {2};
    std::vector<int> f;
    for (const auto& b : blocks) f.insert(f.end(), b.parts().begin(), b.parts().end());
    return f;
  }

  /// Orders of the cyclic factors.
  std::vector<std::uint64_t> factor_orders(std::uint64_t q) const {
    if (sl2 == SL2Kind::Split) return {q - 1};
    if (sl2 == SL2Kind::Coxeter) return {q + 1};
    std::vector<std::uint64_t> o;
    for (int k : factors()) o.push_back(ipow(q, static_cast<unsigned>(k)) - 1);
    return o;
  }

  Integer order(std::uint64_t q) const {
    Integer r = 1;
    for (auto o : factor_orders(q)) r *= static_cast<unsigned long>(o);
    return r;
  }

  /// The same torus viewed in GL_n: concatenated parts, sorted.
  Partition concatenated() const {
    auto f = factors();
    std::sort(f.rbegin(), f.rend());
    return Partition(std::move(f));
  }

  std::string to_string() const {
    if (sl2 == SL2Kind::Split) return "split";
    if (sl2 == SL2Kind::Coxeter) return "coxeter";
    std::string s;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b) s += 'x';
      s += blocks[b].to_string();
    }
    return s;
  }

  auto operator<=>(const TorusType&) const = default;
  bool operator==(const TorusType&) const = default;
};

using TorusChar = std::vector<std::uint64_t>;

/// Element of the relative Weyl group: x -> y with y[perm[i]] = x[i] * q^twist[i]
/// (and inversion for SL_2).
struct WeylElem {
  std::vector<std::size_t> perm;
  std::vector<int> twist;
  bool invert = false;
};

inline std::vector<std::uint64_t> apply_weyl(const WeylElem& w, const std::vector<std::uint64_t>& x,
                                             const std::vector<std::uint64_t>& orders, std::uint64_t q) {
  std::vector<std::uint64_t> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto m = orders[i];
    std::uint64_t v = x[i] % m;
    for (int j = 0; j < w.twist[i]; ++j) v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * q) % m);
    if (w.invert) v = (m - v) % m;
    y[w.perm[i]] = v;
  }
  return y;
}

/// W(T)^F: for GL, permutations of equal parts within a block combined with a
/// Frobenius power on each factor; for SL_2, {1, inversion}.
inline std::vector<WeylElem> weyl_elements(const TorusType& t) {
  const auto f = t.factors();
  const std::size_t r = f.size();
  std::vector<std::size_t> id(r);
  std::iota(id.begin(), id.end(), 0);
  if (t.is_sl2()) return {WeylElem{id, {0}, false}, WeylElem{id, {0}, true}};

  // groups of interchangeable factor indices
  std::vector<std::vector<std::size_t>> groups;
  std::size_t base = 0;
  for (const auto& b : t.blocks) {
    std::size_t i = 0;
    while (i < b.length()) {
      std::size_t j = i;
      while (j < b.length() && b[j] == b[i]) ++j;
      std::vector<std::size_t> g;
      for (std::size_t k = i; k < j; ++k) g.push_back(base + k);
      groups.push_back(std::move(g));
      i = j;
    }
    base += b.length();
  }
  std::vector<std::vector<std::size_t>> perms{id};
  for (const auto& g : groups) {
    std::vector<std::vector<std::size_t>> next;
    auto images = g;
    std::sort(images.begin(), images.end());
    do {
      for (auto p : perms) {
        for (std::size_t k = 0; k < g.size(); ++k) p[g[k]] = images[k];
        next.push_back(std::move(p));
      }
    } while (std::next_permutation(images.begin(), images.end()));
    perms = std::move(next);
  }
  std::vector<WeylElem> out;
  for (const auto& p : perms) {
    std::vector<int> tw(r, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == r) {
        out.push_back(WeylElem{p, tw, false});
        return;
      }
      for (int j = 0; j < f[i]; ++j) {
        tw[i] = j;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

struct CharOrbit {
  TorusChar rep;  // lexicographically least member
  std::size_t size = 0;
};

/// Calls fn on every exponent tuple of the torus in lexicographic order.
inline void for_each_torus_tuple(const std::vector<std::uint64_t>& orders,
                                 const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  std::vector<std::uint64_t> x(orders.size(), 0);
  while (true) {
    fn(x);
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      if (++x[i] < orders[i]) break;
      x[i] = 0;
      if (i == 0) return;
    }
    if (x.empty()) return;
  }
}

inline TorusChar canonical_char(const std::vector<WeylElem>& w, const TorusChar& c,
                                const std::vector<std::uint64_t>& orders, std::uint64_t q) {
  TorusChar best = c;
  for (const auto& e : w) best = std::min(best, apply_weyl(e, c, orders, q));
  return best;
}

/// Orbit representatives of characters (or elements) of a torus under W.
inline std::vector<CharOrbit> torus_character_orbits(const TorusType& t, std::uint64_t q, bool trivial_weyl = false) {
  const auto orders = t.factor_orders(q);
  const auto w = trivial_weyl ? std::vector<WeylElem>{} : weyl_elements(t);
  const std::size_t wsize = trivial_weyl ? 1 : w.size();
  std::vector<CharOrbit> out;
  for_each_torus_tuple(orders, [&](const std::vector<std::uint64_t>& c) {
    if (trivial_weyl) {
      out.push_back({c, 1});
      return;
    }
    std::size_t stab = 0;
    for (const auto& e : w) {
      const auto img = apply_weyl(e, c, orders, q);
      if (img < c) return;
      if (img == c) ++stab;
    }
    out.push_back({c, wsize / stab});
  });
  return out;
}

/// #{w in W : w theta = theta'}.
inline std::size_t weyl_count(const TorusType& t, const TorusChar& a, const TorusChar& b, std::uint64_t q) {
  const auto orders = t.factor_orders(q);
  std::size_t n = 0;
  for (const auto& e : weyl_elements(t))
    if (apply_weyl(e, a, orders, q) == b) ++n;
  return n;
}

}  // namespace dlcf
