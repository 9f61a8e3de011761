#pragma once

#include <string>
#include <vector>

#include "dlcf/exactnum/cyclotomic.hpp"
#include "dlcf/grptypes/group.hpp"

namespace dlcf {

/// A class function: one value per class of the group, in the group's class order.
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(GroupPtr g) : group_(std::move(g)), values_(group_->class_count()) {}
  ClassFunction(GroupPtr g, std::vector<Cyclo> values) : group_(std::move(g)), values_(std::move(values)) {
    if (values_.size() != group_->class_count())
      throw DimensionError("class function on " + group_->name() + " needs " + std::to_string(group_->class_count()) +
                           " values, got " + std::to_string(values_.size()));
  }

  static ClassFunction constant(GroupPtr g, const Cyclo& c) {
    ClassFunction f(std::move(g));
    for (auto& v : f.values_) v = c;
    return f;
  }
  /// Weighted indicator: weight w_i on class indices[i].
  static ClassFunction indicator(GroupPtr g, const std::vector<std::size_t>& indices, const std::vector<Cyclo>& weights = {}) {
    ClassFunction f(std::move(g));
    for (std::size_t i = 0; i < indices.size(); ++i) f.values_.at(indices[i]) = weights.empty() ? Cyclo(1) : weights[i];
    return f;
  }

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclo>& values() const { return values_; }
  std::vector<Cyclo>& values() { return values_; }
  const Cyclo& operator[](std::size_t i) const { return values_[i]; }
  Cyclo& operator[](std::size_t i) { return values_[i]; }
  const Cyclo& at(const ClassType& c) const { return values_[group_->index_of(c)]; }
  std::size_t size() const { return values_.size(); }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

  /// Every value at its minimal level.
  ClassFunction minimal() const {
    ClassFunction f = *this;
    for (auto& v : f.values_) v = v.minimal();
    return f;
  }
  /// All values at one common level (the lcm of the minimal levels).
  ClassFunction normalized() const {
    ClassFunction f = minimal();
    const auto l = common_level(f.values_);
    for (auto& v : f.values_) v = v.change_level(l);
    return f;
  }

  ClassFunction& operator+=(const ClassFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (!o.values_[i].is_zero()) values_[i] += o.values_[i];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (!o.values_[i].is_zero()) values_[i] -= o.values_[i];
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Cyclo& s, ClassFunction f) {
    for (auto& v : f.values_)
      if (!v.is_zero()) v *= s;
    return f;
  }
  ClassFunction conj() const {
    ClassFunction f = *this;
    for (auto& v : f.values_) v = v.conj();
    return f;
  }

  /// Exact equality of values (levels may differ).
  bool operator==(const ClassFunction& o) const {
    if (group_ != o.group_ && (!group_ || !o.group_ || group_->name() != o.group_->name())) return false;
    if (values_.size() != o.values_.size()) return false;
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] != o.values_[i]) return false;
    return true;
  }

  void check_same(const ClassFunction& o) const {
    if (!group_ || !o.group_ || (group_ != o.group_ && group_->name() != o.group_->name()))
      throw UsageError("class functions live on different groups");
  }

 private:
  GroupPtr group_;
  std::vector<Cyclo> values_;
};

/// |G|^{-1} sum_c |c| f(c) conj(g(c))
inline Cyclo inner_product(const ClassFunction& f, const ClassFunction& g) {
  f.check_same(g);
  const auto& cls = f.group()->classes();
  Cyclo s;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (f[i].is_zero() || g[i].is_zero()) continue;
    s += Cyclo(Rational(cls[i].size)) * f[i] * g[i].conj();
  }
  Rational inv_order(Integer(1), f.group()->order());
  inv_order.canonicalize();
  return (s * Cyclo(inv_order)).minimal();
}

}  // namespace dlcf
