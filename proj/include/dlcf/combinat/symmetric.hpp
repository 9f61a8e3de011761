#pragma once

// Irreducible characters of S_n by the Murnaghan-Nakayama rule on beta-sets.

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "dlcf/combinat/partition.hpp"

namespace dlcf {

namespace detail {

// beads[i] = lambda_i + (l - 1 - i), strictly decreasing
inline std::vector<int> beta_set(const Partition& l) {
  std::vector<int> b(l.length());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = l[i] + static_cast<int>(b.size() - 1 - i);
  return b;
}

inline Partition from_beta(std::vector<int> beads) {
  std::sort(beads.rbegin(), beads.rend());
  std::vector<int> parts;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int p = beads[i] - static_cast<int>(beads.size() - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

inline long long mn_rec(const Partition& lambda, std::vector<int> rho, std::map<std::pair<Partition, std::vector<int>>, long long>& memo) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, rho);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int k = rho.back();
  rho.pop_back();
  const auto beads = beta_set(lambda);
  long long total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int to = beads[i] - k;
    if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
    int between = 0;
    for (int b : beads)
      if (b > to && b < beads[i]) ++between;
    auto moved = beads;
    moved[i] = to;
    const long long v = mn_rec(from_beta(moved), rho, memo);
    total += (between % 2 ? -v : v);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// chi^lambda evaluated at the class of cycle type rho.
inline long long sym_char(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw DimensionError("sym_char: |" + lambda.to_string() + "| != |" + rho.to_string() + "|");
  static std::mutex mu;
  static std::map<std::pair<Partition, std::vector<int>>, long long> memo;
  std::lock_guard lock(mu);
  return detail::mn_rec(lambda, rho.parts(), memo);
}

}  // namespace dlcf
