#pragma once

// Green polynomials Q^lambda_rho(q) of GL_m: lambda labels the unipotent class
// (Jordan type), rho the maximal torus type.
//
//   Q^lambda_rho(q) = sum_mu chi^mu(rho) * q^{n(lambda)} K_{mu,lambda}(1/q)
//
// Q^lambda_rho(q) is the value at a unipotent element of type lambda of the
// Deligne-Lusztig character of a torus of type rho, with no sign or |T|
// factor: Q^{(1^m)}_rho(q) is the degree of R_T(theta) (signed).

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "dlcf/combinat/kostka.hpp"
#include "dlcf/combinat/symmetric.hpp"

namespace dlcf {

inline IntPolynomial compute_green_polynomial(const Partition& lambda, const Partition& rho) {
  const int m = lambda.weight();
  if (m != rho.weight()) throw DimensionError("green_polynomial: |" + lambda.to_string() + "| != |" + rho.to_string() + "|");
  if (m < 1) throw DimensionError("green_polynomial: empty partition");
  IntPolynomial q;
  const auto nl = static_cast<std::size_t>(lambda.n_stat());
  for (const auto& mu : partitions(m)) {
    const auto chi = sym_char(mu, rho);
    if (chi == 0) continue;
    const auto k = kostka_foulkes(mu, lambda);
    if (k.is_zero()) continue;
    q += chi * k.reversed(nl);
  }
  return q;
}

/// Thread-safe memo of Green polynomials; entries can be imported from and
/// exported to a persistent store.
class GreenCache {
 public:
  using Key = std::pair<Partition, Partition>;

  IntPolynomial get(const Partition& lambda, const Partition& rho) {
    {
      std::lock_guard lock(mu_);
      if (auto it = table_.find({lambda, rho}); it != table_.end()) {
        ++hits_;
        return it->second;
      }
    }
    auto v = compute_green_polynomial(lambda, rho);
    std::lock_guard lock(mu_);
    ++misses_;
    table_.emplace(Key{lambda, rho}, v);
    return v;
  }

  /// Preloads an entry; a loaded value is trusted only if it matches a fresh computation
  /// when `verify` is set.
  bool insert(const Partition& lambda, const Partition& rho, IntPolynomial value, bool verify = false) {
    if (lambda.weight() != rho.weight() || lambda.weight() < 1) return false;
    if (verify && compute_green_polynomial(lambda, rho) != value) return false;
    std::lock_guard lock(mu_);
    table_.insert_or_assign(Key{lambda, rho}, std::move(value));
    return true;
  }

  std::map<Key, IntPolynomial> snapshot() const {
    std::lock_guard lock(mu_);
    return table_;
  }

  std::size_t hits() const {
    std::lock_guard lock(mu_);
    return hits_;
  }
  std::size_t misses() const {
    std::lock_guard lock(mu_);
    return misses_;
  }

  static GreenCache& global() {
    static GreenCache c;
    return c;
  }

 private:
  mutable std::mutex mu_;
  std::map<Key, IntPolynomial> table_;
  std::size_t hits_ = 0, misses_ = 0;
};

inline IntPolynomial green_polynomial(const Partition& lambda, const Partition& rho) {
  return GreenCache::global().get(lambda, rho);
}

}  // namespace dlcf
