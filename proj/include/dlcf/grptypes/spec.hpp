#pragma once

#include <cstdint>
#include <string>

#include "dlcf/errors.hpp"
#include "dlcf/exactnum/arith.hpp"
#include "dlcf/gftower/tower.hpp"

namespace dlcf {

enum class Family { GL, SL };

struct GroupSpec {
  Family family = Family::GL;
  int n = 2;
  std::uint64_t q = 2;

  bool operator==(const GroupSpec&) const = default;

  std::string name() const {
    return std::string(family == Family::GL ? "GL_" : "SL_") + std::to_string(n) + "(F_" + std::to_string(q) + ")";
  }

  /// Throws UsageError / SizeError when out of the supported range.
  void validate() const {
    prime_power(q);
    if (family == Family::GL) {
      if (n < 1 || n > 4) throw UsageError("GL_n needs 1 <= n <= 4, got n = " + std::to_string(n));
      std::uint64_t qn = 1;
      for (int i = 0; i < n; ++i) {
        if (qn > kTowerBound / q) throw SizeError(name() + ": q^n exceeds 2^20");
        qn *= q;
      }
    } else {
      if (n != 2) throw UsageError("SL family supports only n = 2");
      if (q % 2 == 0) throw UsageError("SL_2 needs odd q, got q = " + std::to_string(q));
      if (q > 1000) throw SizeError(name() + ": q above 1000");
    }
  }

  /// Dimension of the algebraic group.
  int dimension() const { return family == Family::GL ? n * n : 3; }
};

inline Integer gl_order(int n, std::uint64_t q) {
  Integer qn, r = 1;
  mpz_ui_pow_ui(qn.get_mpz_t(), q, static_cast<unsigned long>(n));
  Integer qi = 1;
  for (int i = 0; i < n; ++i) {
    r *= qn - qi;
    qi *= q;
  }
  return r;
}

inline Integer group_order(const GroupSpec& s) {
  if (s.family == Family::GL) return gl_order(s.n, s.q);
  const Integer q = static_cast<unsigned long>(s.q);
  return q * (q * q - 1);
}

/// t^k as an Integer.
inline Integer int_pow(const Integer& t, unsigned k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), t.get_mpz_t(), k);
  return r;
}

}  // namespace dlcf
