#pragma once

// A finite field F_p[x]/(f) with elements encoded as integers whose base-p
// digits are the polynomial coefficients (digit i = coefficient of x^i).

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dlcf/errors.hpp"
#include "dlcf/exactnum/arith.hpp"

namespace dlcf {

using FpPoly = std::vector<int>;  // coefficients mod p, low degree first

namespace detail {

inline void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
  }
  fp_trim(r);
  return r;
}

inline int fp_inv(int a, int p) { return static_cast<int>(powmod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(p - 2), static_cast<std::uint64_t>(p))); }

// a mod m, m nonzero (not necessarily monic)
inline FpPoly fp_mod(FpPoly a, const FpPoly& m, int p) {
  fp_trim(a);
  const int lead_inv = fp_inv(m.back(), p);
  while (a.size() >= m.size()) {
    const int c = static_cast<int>(1LL * a.back() * lead_inv % p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] = static_cast<int>(((a[shift + j] - 1LL * c * m[j]) % p + p) % p);
    fp_trim(a);
  }
  return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, int p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    a = fp_mod(a, b, p);
    std::swap(a, b);
  }
  return a;
}

inline FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& m, int p) {
  FpPoly r{1};
  base = fp_mod(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp_mod(fp_mul(r, base, p), m, p);
    e >>= 1;
    if (e > 0) base = fp_mod(fp_mul(base, base, p), m, p);
  }
  return r;
}

// Rabin's test for a monic polynomial of degree >= 1.
inline bool fp_irreducible(const FpPoly& f, int p) {
  const auto d = static_cast<std::uint64_t>(f.size() - 1);
  const FpPoly x{0, 1};
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  auto full = fp_powmod(x, pd, f, p);
  if (full != fp_mod(x, f, p)) return false;
  for (const auto& [r, mult] : factorize(d)) {
    (void)mult;
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d / r));
    auto h = fp_powmod(x, pe, f, p);
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] - 1 + p) % p;
    fp_trim(h);
    auto g = fp_gcd(h, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

class FiniteField {
 public:
  FiniteField(int p, int degree) : p_(p), deg_(degree) {
    if (degree < 1) throw UsageError("field degree must be positive");
    size_ = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(degree));
    // first monic irreducible of the given degree, lower coefficients enumerated as base-p integers
    for (std::uint64_t c = 0; c < size_; ++c) {
      FpPoly f = digits(c);
      f.resize(static_cast<std::size_t>(deg_), 0);
      if (f[0] == 0 && deg_ > 1) continue;
      f.push_back(1);
      if (detail::fp_irreducible(f, p_)) {
        modulus_ = std::move(f);
        break;
      }
    }
    if (modulus_.empty()) throw InvariantViolation("no irreducible polynomial found");
  }

  int characteristic() const { return p_; }
  int degree() const { return deg_; }
  std::uint64_t size() const { return size_; }
  const FpPoly& modulus() const { return modulus_; }

  FpPoly digits(std::uint64_t v) const {
    FpPoly d;
    while (v) {
      d.push_back(static_cast<int>(v % static_cast<std::uint64_t>(p_)));
      v /= static_cast<std::uint64_t>(p_);
    }
    return d;
  }
  std::uint64_t encode(const FpPoly& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(d[i]);
    return v;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (deg_ == 1) return (a + b) % size_;
    auto x = digits(a), y = digits(b);
    if (x.size() < y.size()) x.resize(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }
  std::uint64_t neg(std::uint64_t a) const {
    auto x = digits(a);
    for (auto& c : x) c = (p_ - c) % p_;
    return encode(x);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (const auto* t = tables_if_built()) return t->exp[(t->log[a] + t->log[b]) % (size_ - 1)];
    return mul_poly(a, b);
  }
  std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const {
    if (deg_ == 1) return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % size_);
    return encode(detail::fp_mod(detail::fp_mul(digits(a), digits(b), p_), modulus_, p_));
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul_poly(r, a);
      e >>= 1;
      if (e) a = mul_poly(a, a);
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw DivisionError("inverse of zero in finite field");
    return pow(a, size_ - 2);
  }

  bool is_primitive(std::uint64_t a) const {
    if (a == 0) return false;
    for (const auto& [r, m] : factorize(size_ - 1)) {
      (void)m;
      if (pow(a, (size_ - 1) / r) == 1) return false;
    }
    return true;
  }

  /// F_p-minimal polynomial of a (coefficients in F_p, monic).
  FpPoly minimal_polynomial(std::uint64_t a) const {
    std::vector<std::uint64_t> conj{a};
    for (std::uint64_t c = pow(a, static_cast<std::uint64_t>(p_)); c != a; c = pow(c, static_cast<std::uint64_t>(p_))) conj.push_back(c);
    // product of (X - c) with field coefficients
    std::vector<std::uint64_t> poly{1};
    for (auto c : conj) {
      std::vector<std::uint64_t> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = add(next[i + 1], poly[i]);
        next[i] = sub(next[i], mul_poly(poly[i], c));
      }
      poly = std::move(next);
    }
    FpPoly out;
    for (auto v : poly) {
      if (v >= static_cast<std::uint64_t>(p_)) throw InvariantViolation("minimal polynomial left the prime field");
      out.push_back(static_cast<int>(v));
    }
    return out;
  }

  /// Builds exp/log tables relative to the primitive element g (idempotent).
  void build_tables(std::uint64_t g) const {
    std::call_once(tables_once_, [&] {
      auto t = std::make_unique<Tables>();
      t->exp.resize(size_ - 1);
      t->log.assign(size_, 0);
      std::uint64_t x = 1;
      for (std::uint64_t i = 0; i + 1 < size_; ++i) {
        t->exp[i] = x;
        t->log[x] = i;
        x = mul_poly(x, g);
      }
      if (x != 1) throw InvariantViolation("table generator is not primitive");
      tables_ = std::move(t);
      built_.store(true, std::memory_order_release);
    });
  }
  bool tables_built() const { return built_.load(std::memory_order_acquire); }
  std::uint64_t exp_table(std::uint64_t e) const { return tables_if_built()->exp[e % (size_ - 1)]; }
  std::uint64_t log_table(std::uint64_t v) const {
    if (v == 0) throw DivisionError("log of zero");
    return tables_if_built()->log[v];
  }

  std::string to_string(std::uint64_t v) const {
    if (deg_ == 1) return std::to_string(v);
    const auto d = digits(v);
    if (d.empty()) return "0";
    std::string s;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (!d[i]) continue;
      if (!s.empty()) s += '+';
      if (d[i] != 1 || i == 0) s += std::to_string(d[i]);
      if (i > 0) s += i == 1 ? "a" : "a^" + std::to_string(i);
    }
    return s;
  }

 private:
  struct Tables {
    std::vector<std::uint64_t> exp, log;
  };
  const Tables* tables_if_built() const { return built_.load(std::memory_order_acquire) ? tables_.get() : nullptr; }

  int p_, deg_;
  std::uint64_t size_ = 0;
  FpPoly modulus_;
  mutable std::once_flag tables_once_;
  mutable std::unique_ptr<Tables> tables_;
  mutable std::atomic<bool> built_{false};
};

}  // namespace dlcf
