#pragma once

// Compatible tower F_q ⊂ F_{q^k} (k <= kmax) in discrete-log representation.
// Nonzero elements of level k are g_k^e, e mod q^k - 1, and the generators
// satisfy g_k^{(q^k-1)/(q^d-1)} = g_d for d | k. Elements of level d embed in
// level k by multiplying the exponent by (q^k-1)/(q^d-1).

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dlcf/errors.hpp"
#include "dlcf/exactnum/arith.hpp"
#include "dlcf/gftower/field.hpp"

namespace dlcf {

inline constexpr std::uint64_t kTowerBound = 1u << 20;

/// Nonzero field element g_level^exponent, or zero.
struct FieldElem {
  int level = 1;
  std::uint64_t exponent = 0;
  bool zero = false;
};

/// Frobenius orbit {g_d^{e q^j}} of true degree d; e is the least exponent in the orbit.
struct FrobOrbit {
  int degree = 1;
  std::uint64_t exponent = 0;
  auto operator<=>(const FrobOrbit&) const = default;
  std::string to_string() const { return std::to_string(degree) + ":" + std::to_string(exponent); }
};

class Tower {
 public:
  Tower(std::uint64_t q, int kmax) : q_(q), kmax_(kmax) {
    const auto [p, a] = prime_power(q);
    p_ = static_cast<int>(p);
    a_ = a;
    if (kmax < 1) throw UsageError("tower needs kmax >= 1");
    orders_.push_back(0);
    std::uint64_t qk = 1;
    for (int k = 1; k <= kmax; ++k) {
      if (qk > kTowerBound / q) throw SizeError("tower: q^" + std::to_string(k) + " exceeds 2^20");
      qk *= q;
      orders_.push_back(qk - 1);
    }
    fields_.push_back(nullptr);
    gens_.push_back(0);
    for (int k = 1; k <= kmax; ++k) {
      fields_.push_back(std::make_unique<FiniteField>(p_, a_ * k));
      gens_.push_back(find_generator(k));
    }
  }

  std::uint64_t q() const { return q_; }
  int p() const { return p_; }
  int kmax() const { return kmax_; }
  /// |F_{q^k}^*|
  std::uint64_t order(int k) const {
    check_level(k);
    return orders_[static_cast<std::size_t>(k)];
  }
  /// (q^k - 1)/(q^d - 1)
  std::uint64_t norm_index(int k, int d) const {
    if (d < 1 || k % d) throw UsageError("level " + std::to_string(d) + " does not divide " + std::to_string(k));
    return order(k) / order(d);
  }

  const FiniteField& field(int k) const {
    check_level(k);
    return *fields_[static_cast<std::size_t>(k)];
  }
  /// Polynomial-basis encoding of g_k.
  std::uint64_t generator(int k) const {
    check_level(k);
    return gens_[static_cast<std::size_t>(k)];
  }

  /// Polynomial-basis encoding of an element (tables built on first use).
  std::uint64_t encode(const FieldElem& x) const {
    if (x.zero) return 0;
    const auto& f = field(x.level);
    f.build_tables(generator(x.level));
    return f.exp_table(x.exponent);
  }
  FieldElem decode(int k, std::uint64_t v) const {
    if (v == 0) return zero(k);
    const auto& f = field(k);
    f.build_tables(generator(k));
    return elem(k, f.log_table(v));
  }

  FieldElem elem(int k, std::uint64_t e) const { return FieldElem{k, e % order(k), false}; }
  FieldElem zero(int k) const {
    check_level(k);
    return FieldElem{k, 0, true};
  }
  FieldElem one(int k = 1) const { return elem(k, 0); }

  /// Re-expresses x at level k (level(x) must divide k).
  FieldElem lift(const FieldElem& x, int k) const {
    if (x.zero) return zero(k);
    const auto n = norm_index(k, x.level);
    return FieldElem{k, static_cast<std::uint64_t>((static_cast<unsigned __int128>(x.exponent) * n) % order(k)), false};
  }

  /// Least d | level with x in F_{q^d}.
  int true_degree(const FieldElem& x) const {
    if (x.zero) return 1;
    for (auto d : divisors(static_cast<std::uint64_t>(x.level)))
      if (x.exponent % norm_index(x.level, static_cast<int>(d)) == 0) return static_cast<int>(d);
    return x.level;
  }

  /// Same element at its true degree.
  FieldElem canonical(const FieldElem& x) const {
    if (x.zero) return zero(1);
    const int d = true_degree(x);
    return FieldElem{d, x.exponent / norm_index(x.level, d), false};
  }

  bool equal(const FieldElem& x, const FieldElem& y) const {
    const auto a = canonical(x), b = canonical(y);
    return a.zero == b.zero && a.level == b.level && a.exponent == b.exponent;
  }

  FieldElem mul(const FieldElem& x, const FieldElem& y) const {
    const int k = static_cast<int>(lcm_u64(static_cast<std::uint64_t>(x.level), static_cast<std::uint64_t>(y.level)));
    if (x.zero || y.zero) return zero(k);
    const auto a = lift(x, k), b = lift(y, k);
    return elem(k, (a.exponent + b.exponent) % order(k));
  }
  FieldElem inv(const FieldElem& x) const {
    if (x.zero) throw DivisionError("inverse of zero field element");
    return elem(x.level, (order(x.level) - x.exponent) % order(x.level));
  }
  FieldElem pow(const FieldElem& x, std::int64_t e) const {
    if (x.zero) {
      if (e <= 0) throw DivisionError("non-positive power of zero");
      return x;
    }
    const auto m = static_cast<std::int64_t>(order(x.level));
    const auto ee = static_cast<std::uint64_t>(mod_floor(e, m));
    return elem(x.level, static_cast<std::uint64_t>((static_cast<unsigned __int128>(x.exponent) * ee) % order(x.level)));
  }
  FieldElem frobenius(const FieldElem& x) const {
    if (x.zero) return x;
    return elem(x.level, static_cast<std::uint64_t>((static_cast<unsigned __int128>(x.exponent) * q_) % order(x.level)));
  }

  /// Norm from level k = level(x) down to d | k.
  FieldElem norm_map(const FieldElem& x, int d) const {
    norm_index(x.level, d);
    if (x.zero) return zero(d);
    // g_k^{e N} = g_d^e
    return elem(d, x.exponent % order(d));
  }

  FrobOrbit orbit_of(const FieldElem& x) const {
    if (x.zero) throw DivisionError("zero has no Frobenius orbit in the multiplicative group");
    const auto c = canonical(x);
    std::uint64_t best = c.exponent, e = c.exponent;
    for (int j = 1; j < c.level; ++j) {
      e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(e) * q_) % order(c.level));
      best = std::min(best, e);
    }
    return FrobOrbit{c.level, best};
  }

  /// Exponents (at level degree) of the members of an orbit, in Frobenius order.
  std::vector<std::uint64_t> orbit_members(const FrobOrbit& o) const {
    std::vector<std::uint64_t> out{o.exponent};
    std::uint64_t e = o.exponent;
    for (int j = 1; j < o.degree; ++j) {
      e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(e) * q_) % order(o.degree));
      out.push_back(e);
    }
    return out;
  }

  /// All orbits of F_{q^k}^*, each at its true degree, sorted by (degree, exponent).
  std::vector<FrobOrbit> frobenius_orbits(int k) const {
    check_level(k);
    std::vector<FrobOrbit> out;
    for (auto dd : divisors(static_cast<std::uint64_t>(k))) {
      const int d = static_cast<int>(dd);
      auto part = orbits_of_degree(d);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  /// Orbits of true degree exactly d.
  std::vector<FrobOrbit> orbits_of_degree(int d) const {
    check_level(d);
    std::vector<FrobOrbit> out;
    for (std::uint64_t e = 0; e < order(d); ++e) {
      const FieldElem x{d, e, false};
      if (true_degree(x) != d) continue;
      if (orbit_of(x).exponent == e) out.push_back(FrobOrbit{d, e});
    }
    return out;
  }

  /// Characteristic polynomial over F_q of an orbit, coefficients encoded in
  /// the level-1 field, low degree first, monic of degree o.degree.
  std::vector<std::uint64_t> orbit_polynomial(const FrobOrbit& o) const {
    const auto& f = field(o.degree);
    f.build_tables(generator(o.degree));
    std::vector<std::uint64_t> poly{1};
    for (auto e : orbit_members(o)) {
      const auto c = f.exp_table(e);
      std::vector<std::uint64_t> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = f.add(next[i + 1], poly[i]);
        next[i] = f.sub(next[i], f.mul(poly[i], c));
      }
      poly = std::move(next);
    }
    std::vector<std::uint64_t> out;
    for (auto v : poly) {
      const auto c = canonical(decode(o.degree, v));
      if (c.level != 1) throw InvariantViolation("orbit polynomial not over F_q");
      out.push_back(encode(c));
    }
    return out;
  }

  std::string to_string(const FieldElem& x) const {
    if (x.zero) return "0";
    return "g" + std::to_string(x.level) + "^" + std::to_string(x.exponent);
  }

 private:
  void check_level(int k) const {
    if (k < 1 || k > kmax_) throw UsageError("tower level " + std::to_string(k) + " outside [1, " + std::to_string(kmax_) + "]");
  }

  // First primitive element (in encoding order) whose norms to every proper
  // divisor level share an F_p-minimal polynomial with that level's generator.
  std::uint64_t find_generator(int k) const {
    const auto& f = *fields_[static_cast<std::size_t>(k)];
    std::vector<std::pair<std::uint64_t, FpPoly>> targets;
    for (auto dd : divisors(static_cast<std::uint64_t>(k))) {
      const int d = static_cast<int>(dd);
      if (d == k) continue;
      targets.emplace_back(orders_[static_cast<std::size_t>(k)] / orders_[static_cast<std::size_t>(d)],
                           fields_[static_cast<std::size_t>(d)]->minimal_polynomial(gens_[static_cast<std::size_t>(d)]));
    }
    for (std::uint64_t v = 1; v < f.size(); ++v) {
      if (!f.is_primitive(v)) continue;
      bool ok = true;
      for (const auto& [n, mp] : targets)
        if (f.minimal_polynomial(f.pow(v, n)) != mp) {
          ok = false;
          break;
        }
      if (ok) return v;
    }
    throw InvariantViolation("no compatible generator at level " + std::to_string(k));
  }

  std::uint64_t q_;
  int kmax_, p_ = 0, a_ = 0;
  std::vector<std::uint64_t> orders_;
  std::vector<std::unique_ptr<FiniteField>> fields_;
  std::vector<std::uint64_t> gens_;
};

}  // namespace dlcf
