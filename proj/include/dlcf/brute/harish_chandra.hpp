#pragma once

// Harish-Chandra induction through the standard block-upper-triangular
// parabolic P = M U, by direct summation
//   (Ind f)(g) = |P|^{-1} sum_{x in G, x g x^{-1} in P} f(pi_M(x g x^{-1})),
// and full flags fixed by an element, enumerated directly.

#include <map>
#include <set>
#include <vector>

#include "dlcf/brute/matrix_group.hpp"
#include "dlcf/dl/class_function.hpp"

namespace dlcf::brute {

namespace detail {

/// Block index of every row/column for the given block sizes.
inline std::vector<int> block_of_index(const std::vector<int>& blocks) {
  std::vector<int> out;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int i = 0; i < blocks[b]; ++i) out.push_back(static_cast<int>(b));
  return out;
}

}  // namespace detail

/// Index into m's classes of the Levi part of y, or -1 when y is not in P.
class ParabolicProjection {
 public:
  ParabolicProjection(const MatrixGroup& mg, GroupPtr m) : mg_(mg), m_(std::move(m)) {
    const auto& g = *mg_.group();
    if (g.kind() == Group::Kind::SL2) {
      if (m_->kind() != Group::Kind::Torus || !(m_->torus_type() == TorusType::split()))
        throw UsageError("the standard Levis of SL_2 handled here are the split torus and SL_2");
      blocks_ = {1, 1};
      sl2_ = true;
    } else {
      if (m_->kind() != Group::Kind::GLBlocks || !(m_->spec() == g.spec()))
        throw UsageError(m_->name() + " is not a standard Levi of " + g.name());
      blocks_ = m_->blocks();
    }
    block_of_ = detail::block_of_index(blocks_);
    for (int b : blocks_) block_ops_.emplace_back(b, std::make_shared<const FieldTables>(mg_.ops().field()));
    cache_.assign(mg_.order(), -2);
  }

  int operator()(std::size_t y) const {
    if (cache_[y] != -2) return cache_[y];
    const Mat& a = mg_.element(y);
    const int n = mg_.n();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (block_of_[static_cast<std::size_t>(i)] > block_of_[static_cast<std::size_t>(j)] && a(i, j) != 0) return cache_[y] = -1;
    if (sl2_) {
      const auto e = mg_.group()->tower().decode(1, a(0, 0)).exponent;
      return cache_[y] = static_cast<int>(m_->index_of(ClassType{TorusElem{e}}));
    }
    std::vector<GLClass> parts;
    int off = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      Mat blk;
      for (int i = 0; i < blocks_[b]; ++i)
        for (int j = 0; j < blocks_[b]; ++j) blk(i, j) = a(off + i, off + j);
      parts.push_back(mg_.gl_type(block_ops_[b], blk));
      off += blocks_[b];
    }
    return cache_[y] = static_cast<int>(m_->index_of(ClassType{std::move(parts)}));
  }

 private:
  const MatrixGroup& mg_;
  GroupPtr m_;
  std::vector<int> blocks_, block_of_;
  bool sl2_ = false;
  std::vector<MatOps> block_ops_;
  mutable std::vector<int> cache_;
};

inline ClassFunction harish_chandra(const MatrixGroup& mg, const GroupPtr& m, const ClassFunction& f) {
  if (!f.group() || f.group()->name() != m->name()) throw UsageError("class function does not live on " + m->name());
  const auto& g = mg.group();
  if (m->kind() == Group::Kind::GLBlocks && m->blocks().size() == 1 && g->kind() == Group::Kind::GLBlocks)
    return ClassFunction(g, f.values());
  if (m->kind() == Group::Kind::SL2) return ClassFunction(g, f.values());
  const ParabolicProjection pi(mg, m);
  std::size_t p_order = 0;
  for (std::size_t y = 0; y < mg.order(); ++y)
    if (pi(y) >= 0) ++p_order;
  ClassFunction out(g);
  for (std::size_t k = 0; k < mg.classes().size(); ++k) {
    const auto z = mg.classes()[k].rep;
    // sum_x f(pi(x z x^{-1})): count hits per class of M first
    std::vector<long> hits(m->class_count(), 0);
    for (std::size_t x = 0; x < mg.order(); ++x) {
      const int c = pi(mg.mul(mg.mul(x, z), mg.inverse(x)));
      if (c >= 0) ++hits[static_cast<std::size_t>(c)];
    }
    Cyclo s;
    for (std::size_t c = 0; c < hits.size(); ++c)
      if (hits[c] && !f[c].is_zero()) s += Cyclo(hits[c]) * f[c];
    out[k] = (s * Cyclo(Rational(1, static_cast<long>(p_order)))).minimal();
  }
  return out;
}

/// Full flags 0 < V_1 < ... < V_n of F_q^n; each subspace as the sorted keys of its vectors.
class FlagVariety {
 public:
  explicit FlagVariety(const MatOps& ops) : ops_(ops) {
    const int n = ops.n();
    const auto q = static_cast<std::uint64_t>(ops.field().q);
    total_ = ipow(q, static_cast<unsigned>(n));
    std::vector<std::vector<std::uint64_t>> chain{{0}};
    rec(chain);
  }
  std::size_t size() const { return flags_.size(); }

  /// Number of flags with g V_i = V_i for all i.
  std::size_t fixed_by(const Mat& g) const {
    std::size_t count = 0;
    for (const auto& flag : flags_) {
      bool fixed = true;
      for (const auto& sp : flag) {
        const std::set<std::uint64_t> s(sp.begin(), sp.end());
        for (auto v : sp)
          if (!s.count(apply(g, v))) {
            fixed = false;
            break;
          }
        if (!fixed) break;
      }
      if (fixed) ++count;
    }
    return count;
  }

 private:
  std::vector<std::uint8_t> vec(std::uint64_t k) const {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(ops_.n()));
    for (int i = ops_.n(); i-- > 0;) {
      v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k % static_cast<std::uint64_t>(ops_.field().q));
      k /= static_cast<std::uint64_t>(ops_.field().q);
    }
    return v;
  }
  std::uint64_t key(const std::vector<std::uint8_t>& v) const {
    std::uint64_t k = 0;
    for (auto x : v) k = k * static_cast<std::uint64_t>(ops_.field().q) + x;
    return k;
  }
  std::uint64_t apply(const Mat& g, std::uint64_t k) const {
    const auto v = vec(k);
    std::vector<std::uint8_t> w(v.size(), 0);
    const auto& f = ops_.field();
    for (int i = 0; i < ops_.n(); ++i)
      for (int j = 0; j < ops_.n(); ++j)
        w[static_cast<std::size_t>(i)] = f.add(w[static_cast<std::size_t>(i)], f.mul(g(i, j), v[static_cast<std::size_t>(j)]));
    return key(w);
  }
  std::vector<std::uint64_t> extend(const std::vector<std::uint64_t>& sp, std::uint64_t v) const {
    std::set<std::uint64_t> out;
    const auto& f = ops_.field();
    const auto vv = vec(v);
    for (auto s : sp) {
      const auto sv = vec(s);
      for (int c = 0; c < f.q; ++c) {
        std::vector<std::uint8_t> w(sv.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = f.add(sv[i], f.mul(static_cast<std::uint8_t>(c), vv[i]));
        out.insert(key(w));
      }
    }
    return {out.begin(), out.end()};
  }
  void rec(std::vector<std::vector<std::uint64_t>>& chain) {
    if (chain.size() == static_cast<std::size_t>(ops_.n()) + 1) {
      flags_.emplace_back(chain.begin() + 1, chain.end());
      return;
    }
    const auto cur = chain.back();
    const std::set<std::uint64_t> in(cur.begin(), cur.end());
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t v = 1; v < total_; ++v) {
      if (in.count(v)) continue;
      auto next = extend(cur, v);
      if (!seen.insert(next).second) continue;
      chain.push_back(std::move(next));
      rec(chain);
      chain.pop_back();
    }
  }

  const MatOps& ops_;
  std::uint64_t total_ = 0;
  std::vector<std::vector<std::vector<std::uint64_t>>> flags_;
};

}  // namespace dlcf::brute
