#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "dlcf/errors.hpp"
#include "dlcf/exactnum/arith.hpp"

namespace dlcf {

inline constexpr int kPartitionBound = 20;

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw UsageError("partition parts must be positive");
    if (!std::is_sorted(parts_.rbegin(), parts_.rend())) throw UsageError("partition parts must be weakly decreasing");
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (m) or (1^m).
  static Partition row(int m) { return m == 0 ? Partition() : Partition({m}); }
  static Partition column(int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  Partition conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    Partition out;
    out.parts_ = std::move(c);
    return out;
  }

  /// n(lambda) = sum (i-1) lambda_i.
  int n_stat() const {
    int s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
    return s;
  }

  /// Sum of squares of the conjugate parts.
  int conj_square_sum() const {
    int s = 0;
    for (int c : conjugate().parts_) s += c * c;
    return s;
  }

  /// part -> multiplicity
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  bool dominates(const Partition& o) const {
    int a = 0, b = 0;
    for (std::size_t i = 0; i < std::max(length(), o.length()); ++i) {
      a += (*this)[i];
      b += o[i];
      if (a < b) return false;
    }
    return true;
  }

  /// Centralizer order of an element of cycle type *this in S_n.
  Integer z() const {
    Integer r = 1;
    for (auto [part, mult] : multiplicities()) {
      for (int i = 0; i < mult; ++i) r *= part;
      for (int i = 2; i <= mult; ++i) r *= i;
    }
    return r;
  }

  /// "(2,1,1)"; the empty partition is "()".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  /// Accepts "(2,1,1)", "2,1,1", "2 1 1" or "()"; parts must be weakly decreasing.
  static Partition parse(std::string_view text) {
    std::string_view s = text;
    if (!s.empty() && s.front() == '(') {
      if (s.back() != ')') throw UsageError("malformed partition '" + std::string(text) + "'");
      s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] == ',' || s[i] == ' ') {
        ++i;
        continue;
      }
      if (s[i] < '0' || s[i] > '9') throw UsageError("malformed partition '" + std::string(text) + "'");
      int v = 0;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        v = v * 10 + (s[i] - '0');
        if (v > 1000) throw UsageError("partition part too large in '" + std::string(text) + "'");
        ++i;
      }
      parts.push_back(v);
    }
    try {
      return Partition(std::move(parts));
    } catch (const UsageError& e) {
      throw UsageError("malformed partition '" + std::string(text) + "': " + e.what());
    }
  }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

namespace detail {
inline void partitions_rec(int rem, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rem, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rem - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions(int n) {
  if (n < 0 || n > kPartitionBound)
    throw SizeError("partitions: n = " + std::to_string(n) + " outside [0, " + std::to_string(kPartitionBound) + "]");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace dlcf
