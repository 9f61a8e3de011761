#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlcf/exactnum/arith.hpp"

namespace dlcf {

/// Integer polynomial in q; coeffs[i] is the coefficient of q^i, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPolynomial monomial(std::int64_t a, std::size_t deg) {
    std::vector<std::int64_t> c(deg + 1, 0);
    c[deg] = a;
    return IntPolynomial(std::move(c));
  }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(std::int64_t s, IntPolynomial p) {
    for (auto& x : p.c_) x *= s;
    p.trim();
    return p;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
  }

  /// Coefficients reversed against q^d: q^d p(1/q). Requires d >= degree.
  IntPolynomial reversed(std::size_t d) const {
    std::vector<std::int64_t> r(d + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[d - i] = c_[i];
    return IntPolynomial(std::move(r));
  }

  Integer eval(const Integer& t) const {
    Integer r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
  }
  std::int64_t eval_at_one() const {
    std::int64_t s = 0;
    for (auto x : c_) s += x;
    return s;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const auto a = c_[i];
      if (a == 0) continue;
      const auto mag = a < 0 ? -a : a;
      if (s.empty()) s += a < 0 ? "-" : "";
      else s += a < 0 ? " - " : " + ";
      if (mag != 1 || i == 0) s += std::to_string(mag);
      if (i > 0) {
        if (mag != 1) s += '*';
        s += 'q';
        if (i > 1) s += '^' + std::to_string(i);
      }
    }
    return s;
  }

  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

}  // namespace dlcf
