#pragma once

// Type-level model of GL_n(F_q), its split Levi subgroups GL_{n1} x ... x GL_{nr},
// its maximal tori, and SL_2(F_q).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dlcf/grptypes/classes.hpp"
#include "dlcf/grptypes/spec.hpp"
#include "dlcf/grptypes/tori.hpp"

namespace dlcf {

struct ClassInfo {
  ClassType type;
  Integer size;
  Integer centralizer;
  std::string label;
};

class Group {
 public:
  enum class Kind { GLBlocks, Torus, SL2 };

  /// GL_n(F_q) or SL_2(F_q).
  static std::shared_ptr<const Group> create(const GroupSpec& spec) {
    spec.validate();
    auto tower = std::make_shared<const Tower>(spec.q, spec.family == Family::GL ? spec.n : 2);
    if (spec.family == Family::GL) return std::shared_ptr<const Group>(new Group(spec, tower, Kind::GLBlocks, {spec.n}, {}));
    return std::shared_ptr<const Group>(new Group(spec, tower, Kind::SL2, {}, {}));
  }

  /// Block-diagonal Levi GL_{b1} x ... x GL_{br} of GL_n.
  std::shared_ptr<const Group> levi(std::vector<int> blocks) const {
    if (spec_.family != Family::GL || kind_ != Kind::GLBlocks || blocks_.size() != 1)
      throw UsageError("Levi subgroups are taken in GL_n");
    int s = 0;
    for (int b : blocks) {
      if (b < 1) throw UsageError("Levi block sizes must be positive");
      s += b;
    }
    if (s != spec_.n) throw UsageError("Levi blocks must sum to n = " + std::to_string(spec_.n));
    return std::shared_ptr<const Group>(new Group(spec_, tower_, Kind::GLBlocks, std::move(blocks), {}));
  }

  /// The torus of the given type, as a group in its own right.
  std::shared_ptr<const Group> torus_group(const TorusType& t) const {
    if (t.is_sl2() != (spec_.family == Family::SL)) throw UsageError("torus type does not fit " + spec_.name());
    if (!t.is_sl2()) {
      int s = 0;
      for (const auto& b : t.blocks) s += b.weight();
      if (s != spec_.n) throw UsageError("torus type " + t.to_string() + " has wrong rank");
    }
    return std::shared_ptr<const Group>(new Group(spec_, tower_, Kind::Torus, {}, t));
  }

  Kind kind() const { return kind_; }
  const GroupSpec& spec() const { return spec_; }
  std::uint64_t q() const { return spec_.q; }
  const Tower& tower() const { return *tower_; }
  std::shared_ptr<const Tower> tower_ptr() const { return tower_; }
  const std::vector<int>& blocks() const { return blocks_; }
  const TorusType& torus_type() const { return torus_; }
  bool is_ambient() const { return kind_ == Kind::SL2 || (kind_ == Kind::GLBlocks && blocks_.size() == 1); }

  std::string name() const {
    const std::string fq = "(F_" + std::to_string(spec_.q) + ")";
    switch (kind_) {
      case Kind::SL2:
        return "SL_2" + fq;
      case Kind::Torus:
        return "T[" + torus_.to_string() + "]" + fq;
      case Kind::GLBlocks: {
        std::string s;
        for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "xGL_" : "GL_") + std::to_string(blocks_[i]);
        return s + fq;
      }
    }
    return {};
  }

  Integer order() const { return order_; }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }

  std::size_t index_of(const ClassType& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw UsageError("class " + class_label(c) + " not in " + name());
    return it->second;
  }
  bool contains(const ClassType& c) const { return index_.count(c) > 0; }

  std::size_t index_of_label(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) throw UsageError("unknown class label '" + label + "' for " + name());
    return it->second;
  }

  /// Maximal tori up to conjugacy (split first).
  std::vector<TorusType> tori() const {
    if (kind_ == Kind::SL2) return {TorusType::split(), TorusType::coxeter()};
    if (kind_ == Kind::Torus) return {torus_};
    std::vector<TorusType> out{TorusType{}};
    for (int b : blocks_) {
      auto ps = partitions(b);
      std::reverse(ps.begin(), ps.end());
      std::vector<TorusType> next;
      for (const auto& t : out)
        for (const auto& p : ps) {
          auto u = t;
          u.blocks.push_back(p);
          next.push_back(std::move(u));
        }
      out = std::move(next);
    }
    return out;
  }

  /// W(T)^F inside this group (trivial when the group is the torus itself).
  std::vector<WeylElem> weyl(const TorusType& t) const {
    if (kind_ == Kind::Torus) {
      std::vector<std::size_t> id(t.factors().size());
      std::iota(id.begin(), id.end(), 0);
      return {WeylElem{id, std::vector<int>(id.size(), 0), false}};
    }
    return weyl_elements(t);
  }

  std::vector<CharOrbit> character_orbits(const TorusType& t) const {
    return torus_character_orbits(t, spec_.q, kind_ == Kind::Torus);
  }

 private:
  Group(GroupSpec spec, std::shared_ptr<const Tower> tower, Kind kind, std::vector<int> blocks, TorusType torus)
      : spec_(spec), tower_(std::move(tower)), kind_(kind), blocks_(std::move(blocks)), torus_(std::move(torus)) {
    switch (kind_) {
      case Kind::GLBlocks:
        build_gl();
        break;
      case Kind::Torus:
        build_torus();
        break;
      case Kind::SL2:
        build_sl2();
        break;
    }
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      index_.emplace(classes_[i].type, i);
      label_index_.emplace(classes_[i].label, i);
    }
  }

  void build_gl() {
    order_ = 1;
    std::vector<std::vector<GLClass>> per_block;
    for (int b : blocks_) {
      order_ *= gl_order(b, spec_.q);
      per_block.push_back(gl_class_types(*tower_, b));
    }
    std::vector<std::vector<GLClass>> tuples{{}};
    for (const auto& cls : per_block) {
      std::vector<std::vector<GLClass>> next;
      for (const auto& t : tuples)
        for (const auto& c : cls) {
          auto u = t;
          u.push_back(c);
          next.push_back(std::move(u));
        }
      tuples = std::move(next);
    }
    for (auto& t : tuples) {
      Integer cent = 1;
      for (const auto& c : t) cent *= gl_centralizer_order(c, spec_.q);
      ClassType ct{std::move(t)};
      auto label = class_label(ct);
      classes_.push_back({std::move(ct), order_ / cent, cent, std::move(label)});
    }
  }

  void build_torus() {
    order_ = torus_.order(spec_.q);
    for_each_torus_tuple(torus_.factor_orders(spec_.q), [&](const std::vector<std::uint64_t>& e) {
      ClassType ct{TorusElem(e)};
      auto label = class_label(ct);
      classes_.push_back({std::move(ct), Integer(1), order_, std::move(label)});
    });
  }

  void build_sl2() {
    const auto q = spec_.q;
    const Integer qq = static_cast<unsigned long>(q);
    order_ = group_order(spec_);
    auto add = [&](SL2Class c, const Integer& cent) {
      ClassType ct{c};
      auto label = class_label(ct);
      classes_.push_back({std::move(ct), order_ / cent, cent, std::move(label)});
    };
    using K = SL2Class::Kind;
    for (int s : {1, -1}) add({K::Central, s, 0, 0}, order_);
    for (int s : {1, -1})
      for (int a : {0, 1}) add({K::UnipotentCentral, s, a, 0}, 2 * qq);
    for (std::uint64_t e = 1; 2 * e < q - 1; ++e) add({K::SplitRSS, 1, 0, e}, qq - 1);
    for (std::uint64_t f = 1; 2 * f < q + 1; ++f) add({K::NonsplitRSS, 1, 0, f}, qq + 1);
  }

  GroupSpec spec_;
  std::shared_ptr<const Tower> tower_;
  Kind kind_;
  std::vector<int> blocks_;
  TorusType torus_;
  Integer order_;
  std::vector<ClassInfo> classes_;
  std::map<ClassType, std::size_t> index_;
  std::map<std::string, std::size_t> label_index_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// enumerate_classes(spec)
inline std::vector<ClassInfo> enumerate_classes(const GroupSpec& spec) { return Group::create(spec)->classes(); }

struct TorusInfo {
  TorusType type;
  Integer order;
};

inline std::vector<TorusInfo> enumerate_tori(const Group& g) {
  std::vector<TorusInfo> out;
  for (auto& t : g.tori()) out.push_back({t, t.order(g.q())});
  return out;
}

}  // namespace dlcf
