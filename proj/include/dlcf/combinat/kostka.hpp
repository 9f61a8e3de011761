#pragma once

// Kostka-Foulkes polynomials K_{mu,lambda}(q) as generating functions of the
// charge statistic over semistandard tableaux.
//
// Reading convention: the reading word of a tableau (English notation)
// concatenates its rows from the bottom row up to the top row, each row read
// left to right. Charge of a word with partition content: repeatedly extract
// a standard subword by starting at the right end, scanning leftwards for a 1,
// then continuing leftwards (cyclically) for 2, 3, ...; the letter r+1 gets
// index(r) + 1 when the scan wraps around the left end, index(r) otherwise,
// and the letter 1 gets index 0. Charge is the sum of all indices.

#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "dlcf/combinat/partition.hpp"
#include "dlcf/combinat/polynomial.hpp"

namespace dlcf {

using Tableau = std::vector<std::vector<int>>;

/// Semistandard tableaux of shape mu with content lambda (entries 1-based).
inline std::vector<Tableau> semistandard_tableaux(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw DimensionError("tableaux: |" + mu.to_string() + "| != |" + lambda.to_string() + "|");
  std::vector<Tableau> out;
  Tableau t(mu.length());
  for (std::size_t r = 0; r < mu.length(); ++r) t[r].assign(static_cast<std::size_t>(mu[r]), 0);
  std::vector<int> left(lambda.parts());
  // fill row-major
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == t.size()) {
      out.push_back(t);
      return;
    }
    std::size_t nr = r, nc = c + 1;
    if (nc == t[r].size()) {
      ++nr;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= static_cast<int>(left.size()); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      --left[static_cast<std::size_t>(v - 1)];
      t[r][c] = v;
      fill(nr, nc);
      ++left[static_cast<std::size_t>(v - 1)];
    }
    t[r][c] = 0;
  };
  if (mu.empty()) {
    out.push_back(t);
    return out;
  }
  fill(0, 0);
  return out;
}

inline std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (std::size_t r = t.size(); r-- > 0;) w.insert(w.end(), t[r].begin(), t[r].end());
  return w;
}

/// Charge of a word whose content is a partition.
inline int charge(const std::vector<int>& w) {
  std::vector<bool> used(w.size(), false);
  std::size_t remaining = w.size();
  int total = 0;
  while (remaining > 0) {
    std::size_t pos = w.size();
    int index = 0;
    for (int letter = 1;; ++letter) {
      // scan leftwards from pos-1, wrapping once
      bool found = false, wrapped = false;
      std::size_t p = pos;
      for (std::size_t steps = 0; steps < w.size(); ++steps) {
        if (p == 0) {
          p = w.size();
          wrapped = true;
        }
        --p;
        if (!used[p] && w[p] == letter) {
          found = true;
          break;
        }
      }
      if (!found) break;
      if (letter > 1 && wrapped) ++index;
      total += letter > 1 ? index : 0;
      used[p] = true;
      --remaining;
      pos = p;
    }
  }
  return total;
}

inline IntPolynomial kostka_foulkes(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw DimensionError("kostka_foulkes: |" + mu.to_string() + "| != |" + lambda.to_string() + "|");
  static std::mutex mu_lock;
  static std::map<std::pair<Partition, Partition>, IntPolynomial> memo;
  {
    std::lock_guard lock(mu_lock);
    if (auto it = memo.find({mu, lambda}); it != memo.end()) return it->second;
  }
  IntPolynomial k;
  if (mu.dominates(lambda))
    for (const auto& t : semistandard_tableaux(mu, lambda))
      k += IntPolynomial::monomial(1, static_cast<std::size_t>(charge(reading_word(t))));
  std::lock_guard lock(mu_lock);
  memo.emplace(std::make_pair(mu, lambda), k);
  return k;
}

}  // namespace dlcf
