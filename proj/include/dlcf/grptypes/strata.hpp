#pragma once

// Strata: for GL_n a stratum is labelled by the Levi L = H_G(g) (block sizes)
// together with the unipotent class on each block, as a multiset of pairs
// (m, mu). Every eigenvalue orbit of degree d carrying the partition mu of m
// contributes (m, mu) d times. SL_2 has the five strata RSS, UnipCoset(+-1)
// and Center(+-1).

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dlcf/grptypes/group.hpp"

namespace dlcf {

struct StratumLabel {
  enum class SL2Kind { None, RSS, UnipCoset, Center };
  SL2Kind sl2 = SL2Kind::None;
  int sign = 1;
  std::vector<std::pair<int, Partition>> gl;  // sorted

  static StratumLabel sl2_label(SL2Kind k, int sign = 1) { return StratumLabel{k, k == SL2Kind::RSS ? 1 : sign, {}}; }

  std::string to_string() const {
    switch (sl2) {
      case SL2Kind::RSS:
        return "RSS";
      case SL2Kind::UnipCoset:
        return "UnipCoset(" + sign_str(sign) + ")";
      case SL2Kind::Center:
        return "Center(" + sign_str(sign) + ")";
      case SL2Kind::None:
        break;
    }
    std::string s = "{";
    for (std::size_t i = 0; i < gl.size(); ++i) {
      if (i) s += ',';
      s += "(" + std::to_string(gl[i].first) + "," + gl[i].second.to_string() + ")";
    }
    return s + "}";
  }

  auto operator<=>(const StratumLabel&) const = default;
  bool operator==(const StratumLabel&) const = default;
};

struct StratumInfo {
  StratumLabel label;
  int dimension = 0;
};

namespace detail {
inline void require_ambient(const Group& g) {
  if (!g.is_ambient()) throw UsageError("strata are defined here for GL_n and SL_2, not " + g.name());
}
}  // namespace detail

/// Dimension 2 nu_G - 2 nu_L + dim S, with dim S = #blocks + sum (m^2 - sum mu'^2).
inline int stratum_dimension(const GroupSpec& spec, const StratumLabel& s) {
  if (s.sl2 != StratumLabel::SL2Kind::None) {
    switch (s.sl2) {
      case StratumLabel::SL2Kind::RSS:
        return 3;
      case StratumLabel::SL2Kind::UnipCoset:
        return 2;
      default:
        return 0;
    }
  }
  const int n = spec.n;
  int nu_l = 0, dim_s = static_cast<int>(s.gl.size());
  for (const auto& [m, mu] : s.gl) {
    nu_l += m * (m - 1) / 2;
    dim_s += m * m - mu.conj_square_sum();
  }
  return n * (n - 1) - 2 * nu_l + dim_s;
}

inline StratumLabel stratum_of_class(const Group& g, const ClassType& c) {
  detail::require_ambient(g);
  if (c.is_sl2()) {
    using K = SL2Class::Kind;
    using S = StratumLabel::SL2Kind;
    switch (c.sl2().kind) {
      case K::Central:
        return StratumLabel::sl2_label(S::Center, c.sl2().sign);
      case K::UnipotentCentral:
        return StratumLabel::sl2_label(S::UnipCoset, c.sl2().sign);
      default:
        return StratumLabel::sl2_label(S::RSS);
    }
  }
  StratumLabel s;
  for (const auto& part : c.gl_single())
    for (int i = 0; i < part.orbit.degree; ++i) s.gl.emplace_back(part.mu.weight(), part.mu);
  std::sort(s.gl.begin(), s.gl.end());
  return s;
}

inline std::vector<StratumInfo> enumerate_strata(const Group& g) {
  detail::require_ambient(g);
  std::vector<StratumInfo> out;
  if (g.kind() == Group::Kind::SL2) {
    using S = StratumLabel::SL2Kind;
    for (auto l : {StratumLabel::sl2_label(S::RSS), StratumLabel::sl2_label(S::UnipCoset, 1),
                   StratumLabel::sl2_label(S::UnipCoset, -1), StratumLabel::sl2_label(S::Center, 1),
                   StratumLabel::sl2_label(S::Center, -1)})
      out.push_back({l, stratum_dimension(g.spec(), l)});
    return out;
  }
  // multisets of (m, mu) with sum m = n
  std::vector<std::pair<int, Partition>> atoms;
  for (int m = 1; m <= g.spec().n; ++m)
    for (const auto& mu : partitions(m)) atoms.emplace_back(m, mu);
  std::sort(atoms.begin(), atoms.end());
  std::vector<std::pair<int, Partition>> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int rem) {
    if (rem == 0) {
      StratumLabel l{StratumLabel::SL2Kind::None, 1, cur};
      out.push_back({l, stratum_dimension(g.spec(), l)});
      return;
    }
    for (std::size_t i = start; i < atoms.size(); ++i) {
      if (atoms[i].first > rem) continue;
      cur.push_back(atoms[i]);
      rec(i, rem - atoms[i].first);
      cur.pop_back();
    }
  };
  rec(0, g.spec().n);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.dimension > b.dimension; });
  return out;
}

/// The unique stratum of dimension dim G (regular semisimple elements).
inline StratumLabel dense_stratum(const Group& g) {
  detail::require_ambient(g);
  if (g.kind() == Group::Kind::SL2) return StratumLabel::sl2_label(StratumLabel::SL2Kind::RSS);
  StratumLabel s;
  for (int i = 0; i < g.spec().n; ++i) s.gl.emplace_back(1, Partition{1});
  return s;
}

/// One block of L: size and unipotent label.
using LeviBlockLabel = std::pair<int, Partition>;

/// |c_G| / |c_M| for L (blocks with unipotent labels, grouped by the block of M
/// containing them) inside the Levi M of G. c_G permutes the blocks of L
/// preserving (size, label); c_M only permutes within each block of M.
inline Integer covering_degree(const GroupSpec& g, const std::vector<int>& m_blocks,
                               const std::vector<std::vector<LeviBlockLabel>>& l_in_m) {
  if (m_blocks.size() != l_in_m.size()) throw UsageError("covering_degree: one list of L-blocks per block of M");
  int total = 0;
  for (std::size_t b = 0; b < m_blocks.size(); ++b) {
    int s = 0;
    for (const auto& [m, mu] : l_in_m[b]) {
      if (mu.weight() != m) throw UsageError("covering_degree: label " + mu.to_string() + " does not fit block " + std::to_string(m));
      s += m;
    }
    if (s != m_blocks[b]) throw UsageError("covering_degree: L is not contained in M (block " + std::to_string(b) + ")");
    total += s;
  }
  const int n = g.family == Family::SL ? 2 : g.n;
  if (total != n) throw UsageError("covering_degree: M is not a Levi of " + g.name());
  auto stabilizer = [](const std::vector<LeviBlockLabel>& labels) {
    std::map<LeviBlockLabel, int> cnt;
    for (const auto& l : labels) ++cnt[l];
    Integer r = 1;
    for (const auto& [l, c] : cnt)
      for (int i = 2; i <= c; ++i) r *= i;
    return r;
  };
  std::vector<LeviBlockLabel> all;
  Integer cm = 1;
  for (const auto& blk : l_in_m) {
    all.insert(all.end(), blk.begin(), blk.end());
    cm *= stabilizer(blk);
  }
  return stabilizer(all) / cm;
}

}  // namespace dlcf
