#pragma once

// R_M^G on class functions: expand f over the lines of M, then send each torus
// line R_T^M(theta) to R_T^G(theta). The torus of M (one partition per block
// of M) becomes a torus of G by concatenating the parts that fall into the
// same block of G; theta follows the same reordering.

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "dlcf/dl/lines.hpp"
#include "dlcf/dl/span.hpp"

namespace dlcf {

namespace detail {

/// Block sizes of a GL-type group (a Levi or a torus).
inline std::vector<int> block_sizes(const Group& g) {
  if (g.kind() == Group::Kind::GLBlocks) return g.blocks();
  std::vector<int> b;
  for (const auto& p : g.torus_type().blocks) b.push_back(p.weight());
  return b;
}

/// For each block of m, the block of g containing it; throws when m's blocks
/// do not group consecutively into g's.
inline std::vector<std::size_t> block_grouping(const std::vector<int>& m, const std::vector<int>& g) {
  std::vector<std::size_t> owner;
  std::size_t gb = 0;
  int filled = 0;
  for (int b : m) {
    if (gb >= g.size()) throw UsageError("Levi is not contained in the target group");
    owner.push_back(gb);
    filled += b;
    if (filled > g[gb]) throw UsageError("Levi is not contained in the target group");
    if (filled == g[gb]) {
      ++gb;
      filled = 0;
    }
  }
  if (gb != g.size() || filled != 0) throw UsageError("Levi is not contained in the target group");
  return owner;
}

}  // namespace detail

/// A torus line of M viewed as a torus line of G.
inline std::pair<TorusType, TorusChar> transport_torus(const TorusType& t, const TorusChar& theta,
                                                       const std::vector<std::size_t>& owner, std::size_t g_blocks) {
  if (t.is_sl2()) return {t, theta};
  std::vector<std::vector<std::pair<int, std::uint64_t>>> per(g_blocks);
  std::size_t off = 0;
  for (std::size_t b = 0; b < t.blocks.size(); ++b)
    for (int part : t.blocks[b].parts()) per[owner.at(b)].emplace_back(part, theta.at(off++));
  TorusType out;
  TorusChar th;
  for (auto& v : per) {
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<int> parts;
    for (const auto& [p, c] : v) {
      parts.push_back(p);
      th.push_back(c);
    }
    out.blocks.emplace_back(std::move(parts));
  }
  return {out, th};
}

struct LineCoefficient {
  GammaLine line;
  Cyclo coeff;
};

class LusztigInduction {
 public:
  LusztigInduction(GroupPtr g, GroupPtr m) : g_(std::move(g)), m_(std::move(m)) {
    if (!(g_->spec() == m_->spec())) throw UsageError(m_->name() + " is not a subgroup of " + g_->name());
    if (g_->kind() == Group::Kind::Torus) {
      if (m_->kind() != Group::Kind::Torus || !(m_->torus_type() == g_->torus_type()))
        throw UsageError(m_->name() + " is not a Levi of " + g_->name());
      identity_ = true;
      return;
    }
    if (g_->kind() == Group::Kind::SL2) {
      if (m_->kind() == Group::Kind::SL2) identity_ = true;
      else if (m_->kind() != Group::Kind::Torus) throw UsageError("Levis of SL_2 are its tori and SL_2 itself");
      return;
    }
    if (m_->kind() == Group::Kind::SL2) throw UsageError(m_->name() + " is not a Levi of " + g_->name());
    owner_ = detail::block_grouping(detail::block_sizes(*m_), g_->blocks());
    identity_ = m_->kind() == Group::Kind::GLBlocks && m_->blocks() == g_->blocks();
  }

  const GroupPtr& source() const { return m_; }
  const GroupPtr& target() const { return g_; }

  /// Coefficients of f over the lines of M (zero coefficients omitted).
  std::vector<LineCoefficient> expand(const ClassFunction& f) const {
    check_source(f);
    std::vector<LineCoefficient> out;
    if (m_->kind() == Group::Kind::Torus) {
      // characters of T are orthonormal
      for (const auto& o : m_->character_orbits(m_->torus_type())) {
        const auto c = inner_product(f, dl_character(m_, m_->torus_type(), o.rep));
        if (!c.is_zero()) out.push_back({GammaLine::torus_line(m_->torus_type(), o.rep), c});
      }
      return out;
    }
    const auto& proj = m_projector();
    const auto p = proj.project(f);
    if (!p.residual.is_zero()) throw InvariantViolation("class function on " + m_->name() + " is not in the span of its lines");
    const auto& lines = m_lines();
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (!p.coeffs[i].is_zero()) out.push_back({lines[i].line, p.coeffs[i].minimal()});
    return out;
  }

  ClassFunction operator()(const ClassFunction& f) const {
    check_source(f);
    if (identity_) return ClassFunction(g_, f.values());
    ClassFunction out(g_);
    for (const auto& [line, c] : expand(f)) {
      if (line.kind == GammaLine::Kind::Cuspidal) throw InvariantViolation("cuspidal line of a proper Levi");
      out += c * target_character(line.torus, line.theta);
    }
    return out.minimal();
  }

  /// R_T^G(theta) for a torus line of M.
  ClassFunction target_character(const TorusType& t, const TorusChar& theta) const {
    auto [tg, thg] = g_->kind() == Group::Kind::SL2 ? std::pair{t, theta} : transport_torus(t, theta, owner_, g_->blocks().size());
    std::lock_guard lock(mu_);
    auto key = std::pair{tg, thg};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto r = dl_character(g_, tg, thg);
    cache_.emplace(std::move(key), r);
    return r;
  }

 private:
  void check_source(const ClassFunction& f) const {
    if (!f.group() || f.group()->name() != m_->name()) throw UsageError("class function does not live on " + m_->name());
  }
  const std::vector<LineRep>& m_lines() const {
    m_projector();
    return lines_;
  }
  const SpanProjector& m_projector() const {
    std::call_once(lines_once_, [&] {
      lines_ = enumerate_lines(m_);
      std::vector<ClassFunction> reps;
      for (const auto& l : lines_) reps.push_back(l.rep);
      projector_.emplace(m_, std::move(reps));
    });
    return *projector_;
  }

  GroupPtr g_, m_;
  std::vector<std::size_t> owner_;
  bool identity_ = false;
  mutable std::once_flag lines_once_;
  mutable std::vector<LineRep> lines_;
  mutable std::optional<SpanProjector> projector_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<TorusType, TorusChar>, ClassFunction> cache_;
};

inline ClassFunction lusztig_induction(const GroupPtr& g, const GroupPtr& m, const ClassFunction& f) {
  return LusztigInduction(g, m)(f);
}

/// Levi of g given by block sizes (g itself for a single block).
inline GroupPtr levi_of(const GroupPtr& g, const std::vector<int>& blocks) {
  if (blocks.size() == 1 && g->is_ambient()) return g;
  return g->levi(blocks);
}

}  // namespace dlcf
