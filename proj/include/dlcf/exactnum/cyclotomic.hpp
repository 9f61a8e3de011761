#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element at level N is stored as its coefficient vector in the power basis
// 1, z, ..., z^(phi(N)-1) of Q[z]/(Phi_N). Reduction is modulo Phi_N itself (not
// z^N - 1), so two elements at the same level are equal iff their coefficient
// vectors are equal. Binary operations lift both operands to the lcm of their
// levels; nothing is ever approximated.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "dlcf/errors.hpp"
#include "dlcf/exactnum/arith.hpp"

namespace dlcf {

inline constexpr std::uint64_t kDefaultCyclotomicBound = 1'000'000;

namespace detail {

/// Phi_n for n > 1 as the truncated product prod_{d|n} (1 - x^d)^mu(n/d).
inline std::vector<std::int64_t> compute_cyclotomic(std::uint64_t n) {
  if (n == 1) return {-1, 1};
  std::uint64_t rad = 1;
  for (auto [p, e] : factorize(n)) rad *= p;
  const std::uint64_t stretch = n / rad;
  const std::uint64_t deg = euler_phi(rad);

  std::vector<Integer> a(deg + 1);
  a[0] = 1;
  const auto ds = divisors(rad);
  for (auto d : ds) {
    if (mobius(rad / d) != 1 || d > deg) continue;
    for (std::uint64_t i = deg; i >= d; --i) a[i] -= a[i - d];
  }
  for (auto d : ds) {
    if (mobius(rad / d) != -1 || d > deg) continue;
    for (std::uint64_t i = d; i <= deg; ++i) a[i] += a[i - d];
  }
  std::vector<std::int64_t> out(deg * stretch + 1, 0);
  for (std::uint64_t i = 0; i <= deg; ++i) {
    if (!a[i].fits_slong_p()) throw SizeError("cyclotomic coefficient exceeds 64 bits");
    out[i * stretch] = a[i].get_si();
  }
  return out;
}

struct CyclotomicData {
  std::uint64_t level = 1;
  std::size_t degree = 1;
  std::vector<std::int64_t> coeffs;                          // low to high, monic
  std::vector<std::pair<std::size_t, std::int64_t>> lower;  // nonzero terms below the leading one
};

inline std::shared_ptr<const CyclotomicData> cyclotomic_data(std::uint64_t n, std::uint64_t bound) {
  if (n == 0 || n > bound)
    throw SizeError("cyclotomic order " + std::to_string(n) + " outside [1, " + std::to_string(bound) + "]");
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const CyclotomicData>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  auto data = std::make_shared<CyclotomicData>();
  data->level = n;
  data->coeffs = compute_cyclotomic(n);
  data->degree = data->coeffs.size() - 1;
  for (std::size_t i = 0; i < data->degree; ++i)
    if (data->coeffs[i] != 0) data->lower.emplace_back(i, data->coeffs[i]);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(n, std::move(data)).first->second;
}

/// In-place reduction of a polynomial in z modulo Phi_N; result has phi(N) entries.
inline void reduce_mod_cyclotomic(std::vector<Rational>& poly, const CyclotomicData& phi) {
  const std::size_t deg = phi.degree;
  Rational t;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    const std::size_t base = i - deg;
    for (auto [j, c] : phi.lower) {
      t = poly[i] * c;
      poly[base + j] -= t;
    }
  }
  poly.resize(deg);
}

// Dense polynomial helpers over Q used by inversion.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline void poly_divmod(const QPoly& num, const QPoly& den, QPoly& quo, QPoly& rem) {
  rem = num;
  trim(rem);
  quo.assign(rem.size() >= den.size() ? rem.size() - den.size() + 1 : 0, Rational(0));
  const Rational& lead = den.back();
  while (rem.size() >= den.size() && !rem.empty()) {
    const std::size_t shift = rem.size() - den.size();
    Rational f = rem.back() / lead;
    quo[shift] = f;
    for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= f * den[j];
    rem.pop_back();
    trim(rem);
  }
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace detail

/// The N-th cyclotomic polynomial, coefficients from degree 0 upward.
inline std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n,
                                                       std::uint64_t bound = kDefaultCyclotomicBound) {
  return detail::cyclotomic_data(n, bound)->coeffs;
}

class Cyclo {
 public:
  Cyclo() : Cyclo(Rational(0)) {}
  Cyclo(long v) : Cyclo(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclo(const Integer& v) : Cyclo(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& v) : level_(1), coeffs_{v} { coeffs_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)

  /// zeta_N^k for any integer k.
  static Cyclo zeta(std::uint64_t n, std::int64_t k = 1) {
    const auto phi = detail::cyclotomic_data(n, kDefaultCyclotomicBound);
    const auto e = static_cast<std::size_t>(mod_floor(k, static_cast<std::int64_t>(n)));
    std::vector<Rational> p(std::max<std::size_t>(e + 1, phi->degree), Rational(0));
    p[e] = 1;
    detail::reduce_mod_cyclotomic(p, *phi);
    return Cyclo(n, std::move(p));
  }

  /// Element from a canonical coefficient vector of length phi(N).
  static Cyclo from_coeffs(std::uint64_t n, std::vector<Rational> coeffs) {
    const auto phi = detail::cyclotomic_data(n, kDefaultCyclotomicBound);
    if (coeffs.size() != phi->degree)
      throw DimensionError("level " + std::to_string(n) + " needs " + std::to_string(phi->degree) + " coefficients");
    for (auto& c : coeffs) c.canonicalize();
    return Cyclo(n, std::move(coeffs));
  }

  /// Element sum_k a[k] zeta_N^k for an arbitrary-length vector (exponents taken mod N).
  static Cyclo from_powers(std::uint64_t n, std::span<const Rational> a) {
    const auto phi = detail::cyclotomic_data(n, kDefaultCyclotomicBound);
    std::vector<Rational> p(std::max<std::size_t>(phi->degree, std::min<std::size_t>(a.size(), n)), Rational(0));
    for (std::size_t k = 0; k < a.size(); ++k)
      if (sgn(a[k]) != 0) {
        Rational c = a[k];
        c.canonicalize();
        p[k % n] += c;
      }
    detail::reduce_mod_cyclotomic(p, *phi);
    return Cyclo(n, std::move(p));
  }

  std::uint64_t level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) return false;
    return true;
  }

  /// The value as a rational; throws RepresentationError when irrational.
  Rational rational() const {
    if (!is_rational()) throw RepresentationError("cyclotomic value " + to_string() + " is not rational");
    return coeffs_[0];
  }

  /// Re-expresses the value at level n. Works upward whenever level() | n and
  /// downward whenever the value happens to lie in Q(zeta_n).
  Cyclo change_level(std::uint64_t n) const {
    if (n == level_) return *this;
    if (n % level_ == 0) return embed(n);
    const std::uint64_t l = lcm_u64(level_, n);
    auto lifted = embed(l);
    auto down = lifted.descend(n);
    if (!down) throw RepresentationError(to_string() + " does not lie in Q(zeta_" + std::to_string(n) + ")");
    return *down;
  }

  /// Same value at the smallest level that can hold it.
  Cyclo minimal() const {
    if (is_rational()) return Cyclo(coeffs_[0]);
    for (auto d : divisors(level_)) {
      if (d == level_) break;
      if (auto down = descend(d)) return *down;
    }
    return *this;
  }

  Cyclo conj() const {
    if (level_ <= 2) return *this;
    const auto phi = data();
    std::vector<Rational> p(level_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[(level_ - i) % level_] = coeffs_[i];
    detail::reduce_mod_cyclotomic(p, *phi);
    return Cyclo(level_, std::move(p));
  }

  Cyclo inv() const {
    if (is_zero()) throw DivisionError("inverse of zero in Q(zeta_" + std::to_string(level_) + ")");
    if (is_rational()) return Cyclo(Rational(1 / coeffs_[0])).change_level(level_);
    const auto phi = data();
    detail::QPoly r0(phi->coeffs.begin(), phi->coeffs.end());
    detail::QPoly r1 = coeffs_;
    detail::trim(r1);
    detail::QPoly s0, s1{Rational(1)}, quo, rem;
    while (!r1.empty()) {
      detail::poly_divmod(r0, r1, quo, rem);
      auto s2 = detail::poly_sub(s0, detail::poly_mul(quo, s1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi_N is irreducible.
    const Rational c = r0.at(0);
    for (auto& v : s0) v /= c;
    s0.resize(std::max(s0.size(), phi->degree), Rational(0));
    detail::reduce_mod_cyclotomic(s0, *phi);
    return Cyclo(level_, std::move(s0));
  }

  Cyclo pow(std::int64_t k) const {
    if (k < 0) return inv().pow(-k);
    Cyclo result = Cyclo(1).change_level(level_);
    Cyclo base = *this;
    while (k) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  Cyclo operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Cyclo& operator+=(const Cyclo& o) {
    if (o.level_ == level_) {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
      return *this;
    }
    if (o.level_ == 1) {
      // rational shift: add to the image of 1 at this level
      *this += Cyclo(o.coeffs_[0]).embed(level_);
      return *this;
    }
    const auto l = lcm_u64(level_, o.level_);
    *this = embed(l);
    *this += o.embed(l);
    return *this;
  }

  Cyclo& operator-=(const Cyclo& o) { return *this += -o; }

  Cyclo& operator*=(const Cyclo& o) {
    if (o.level_ == 1) {
      for (auto& c : coeffs_) c *= o.coeffs_[0];
      return *this;
    }
    if (level_ == 1) {
      Rational s = coeffs_[0];
      *this = o;
      for (auto& c : coeffs_) c *= s;
      return *this;
    }
    if (o.level_ != level_) {
      const auto l = lcm_u64(level_, o.level_);
      Cyclo a = embed(l);
      a *= o.embed(l);
      return *this = std::move(a);
    }
    const auto phi = data();
    const std::size_t n = coeffs_.size();
    std::vector<Rational> p(2 * n - 1, Rational(0));
    Rational t;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(o.coeffs_[j]) == 0) continue;
        t = coeffs_[i] * o.coeffs_[j];
        p[i + j] += t;
      }
    }
    detail::reduce_mod_cyclotomic(p, *phi);
    coeffs_ = std::move(p);
    return *this;
  }

  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inv(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
    const auto l = lcm_u64(a.level_, b.level_);
    return a.embed(l).coeffs_ == b.embed(l).coeffs_;
  }

  /// Human-readable form, e.g. "1/2 - 3*z8 + z8^3".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (sgn(c) == 0) continue;
      Rational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) os << "-";
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << level_;
      if (i > 1) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
  }

 private:
  Cyclo(std::uint64_t level, std::vector<Rational> coeffs) : level_(level), coeffs_(std::move(coeffs)) {}

  std::shared_ptr<const detail::CyclotomicData> data() const {
    return detail::cyclotomic_data(level_, kDefaultCyclotomicBound);
  }

  /// Value-preserving embedding into level n, a multiple of level().
  Cyclo embed(std::uint64_t n) const {
    if (n == level_) return *this;
    const auto phi = detail::cyclotomic_data(n, kDefaultCyclotomicBound);
    const std::uint64_t step = n / level_;
    if (level_ == 1) {
      // 1 at level n; Phi_1 reduction makes the level-1 coefficient the value itself
      std::vector<Rational> p(phi->degree, Rational(0));
      p[0] = coeffs_[0];
      return Cyclo(n, std::move(p));
    }
    std::vector<Rational> p(std::max<std::size_t>((coeffs_.size() - 1) * step + 1, phi->degree), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
    detail::reduce_mod_cyclotomic(p, *phi);
    return Cyclo(n, std::move(p));
  }

  /// Attempts to rewrite this value (at level L) at a divisor n of L.
  std::optional<Cyclo> descend(std::uint64_t n) const {
    if (n == level_) return *this;
    const auto small = detail::cyclotomic_data(n, kDefaultCyclotomicBound);
    const std::size_t rows = coeffs_.size(), cols = small->degree;
    // columns: images of zeta_n^j; last column: this value
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j) {
      Cyclo b = zeta(n, static_cast<std::int64_t>(j)).embed(level_);
      for (std::size_t i = 0; i < rows; ++i) m[i][j] = b.coeffs_[i];
    }
    for (std::size_t i = 0; i < rows; ++i) m[i][cols] = coeffs_[i];
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && sgn(m[p][c]) == 0) ++p;
      if (p == rows) continue;
      std::swap(m[p], m[r]);
      Rational inv = 1 / m[r][c];
      for (auto& v : m[r]) v *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || sgn(m[i][c]) == 0) continue;
        Rational f = m[i][c];
        for (std::size_t k = c; k <= cols; ++k) m[i][k] -= f * m[r][k];
      }
      pivot_col.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(m[i][cols]) != 0) return std::nullopt;
    std::vector<Rational> out(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) out[pivot_col[i]] = m[i][cols];
    return Cyclo(n, std::move(out));
  }

  std::uint64_t level_;
  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.to_string(); }

/// Brings a set of values to their common (lcm) level.
inline std::uint64_t common_level(std::span<const Cyclo> xs) {
  std::uint64_t l = 1;
  for (const auto& x : xs) l = lcm_u64(l, x.level());
  return l;
}

}  // namespace dlcf
