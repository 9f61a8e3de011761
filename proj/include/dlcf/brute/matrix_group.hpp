#pragma once

// Explicit matrix groups GL_n(F_q), SL_2(F_q) for small orders: every element
// enumerated, conjugacy classes by orbit search under a generating set, and
// each class matched to its ClassType through kernel dimensions of f(A)^k for
// the characteristic polynomials f of the Frobenius orbits.

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "dlcf/grptypes/group.hpp"

namespace dlcf::brute {

inline constexpr std::uint64_t kMatrixGroupBound = 25000;

/// Arithmetic tables of F_q in the level-1 polynomial encoding.
struct FieldTables {
  int q = 0;
  std::vector<std::uint8_t> add_t, mul_t, neg_t, inv_t;

  explicit FieldTables(const FiniteField& f) : q(static_cast<int>(f.size())) {
    const auto qq = static_cast<std::size_t>(q);
    add_t.resize(qq * qq);
    mul_t.resize(qq * qq);
    neg_t.resize(qq);
    inv_t.resize(qq);
    for (std::size_t a = 0; a < qq; ++a) {
      neg_t[a] = static_cast<std::uint8_t>(f.neg(a));
      if (a) inv_t[a] = static_cast<std::uint8_t>(f.inv(a));
      for (std::size_t b = 0; b < qq; ++b) {
        add_t[a * qq + b] = static_cast<std::uint8_t>(f.add(a, b));
        mul_t[a * qq + b] = static_cast<std::uint8_t>(f.mul_poly(a, b));
      }
    }
  }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_t[a * static_cast<std::size_t>(q) + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_t[a * static_cast<std::size_t>(q) + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_t[a]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }
  std::uint8_t inv(std::uint8_t a) const {
    if (a == 0) throw DivisionError("inverse of 0 in F_q");
    return inv_t[a];
  }
};

/// Row-major n x n matrix, n <= 4.
struct Mat {
  std::array<std::uint8_t, 16> a{};
  std::uint8_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i * 4 + j)]; }
  std::uint8_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i * 4 + j)]; }
  bool operator==(const Mat&) const = default;
};

/// Matrix arithmetic over F_q for a fixed size.
class MatOps {
 public:
  MatOps(int n, std::shared_ptr<const FieldTables> f) : n_(n), f_(std::move(f)) {}
  int n() const { return n_; }
  const FieldTables& field() const { return *f_; }

  Mat identity() const { return scalar(1); }
  Mat scalar(std::uint8_t c) const {
    Mat m;
    for (int i = 0; i < n_; ++i) m(i, i) = c;
    return m;
  }
  Mat mul(const Mat& x, const Mat& y) const {
    Mat r;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        std::uint8_t s = 0;
        for (int k = 0; k < n_; ++k) s = f_->add(s, f_->mul(x(i, k), y(k, j)));
        r(i, j) = s;
      }
    return r;
  }
  Mat add(const Mat& x, const Mat& y) const {
    Mat r;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(i, j) = f_->add(x(i, j), y(i, j));
    return r;
  }
  Mat scale(std::uint8_t c, const Mat& x) const {
    Mat r;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(i, j) = f_->mul(c, x(i, j));
    return r;
  }
  /// Rank by Gaussian elimination.
  int rank(Mat m) const {
    int r = 0;
    for (int c = 0; c < n_ && r < n_; ++c) {
      int p = r;
      while (p < n_ && m(p, c) == 0) ++p;
      if (p == n_) continue;
      for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(r, j));
      const auto inv = f_->inv(m(r, c));
      for (int j = 0; j < n_; ++j) m(r, j) = f_->mul(inv, m(r, j));
      for (int i = 0; i < n_; ++i) {
        if (i == r || m(i, c) == 0) continue;
        const auto fac = m(i, c);
        for (int j = 0; j < n_; ++j) m(i, j) = f_->sub(m(i, j), f_->mul(fac, m(r, j)));
      }
      ++r;
    }
    return r;
  }
  std::uint8_t det(Mat m) const {
    std::uint8_t d = 1;
    for (int c = 0; c < n_; ++c) {
      int p = c;
      while (p < n_ && m(p, c) == 0) ++p;
      if (p == n_) return 0;
      if (p != c) {
        for (int j = 0; j < n_; ++j) std::swap(m(p, j), m(c, j));
        d = f_->neg(d);
      }
      d = f_->mul(d, m(c, c));
      const auto inv = f_->inv(m(c, c));
      for (int i = c + 1; i < n_; ++i) {
        if (m(i, c) == 0) continue;
        const auto fac = f_->mul(m(i, c), inv);
        for (int j = c; j < n_; ++j) m(i, j) = f_->sub(m(i, j), f_->mul(fac, m(c, j)));
      }
    }
    return d;
  }
  Mat inverse(const Mat& x) const {
    Mat m = x, r = identity();
    for (int c = 0; c < n_; ++c) {
      int p = c;
      while (p < n_ && m(p, c) == 0) ++p;
      if (p == n_) throw DivisionError("singular matrix");
      for (int j = 0; j < n_; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(r(p, j), r(c, j));
      }
      const auto inv = f_->inv(m(c, c));
      for (int j = 0; j < n_; ++j) {
        m(c, j) = f_->mul(inv, m(c, j));
        r(c, j) = f_->mul(inv, r(c, j));
      }
      for (int i = 0; i < n_; ++i) {
        if (i == c || m(i, c) == 0) continue;
        const auto fac = m(i, c);
        for (int j = 0; j < n_; ++j) {
          m(i, j) = f_->sub(m(i, j), f_->mul(fac, m(c, j)));
          r(i, j) = f_->sub(r(i, j), f_->mul(fac, r(c, j)));
        }
      }
    }
    return r;
  }
  /// f(A) for a polynomial given low degree first.
  Mat poly_eval(const std::vector<std::uint64_t>& f, const Mat& x) const {
    Mat r;
    for (std::size_t i = f.size(); i-- > 0;) r = add(mul(r, x), scalar(static_cast<std::uint8_t>(f[i])));
    return r;
  }
  std::uint64_t key(const Mat& x) const {
    std::uint64_t k = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) k = k * static_cast<std::uint64_t>(f_->q) + x(i, j);
    return k;
  }
  Mat from_key(std::uint64_t k) const {
    Mat m;
    for (int i = n_; i-- > 0;)
      for (int j = n_; j-- > 0;) {
        m(i, j) = static_cast<std::uint8_t>(k % static_cast<std::uint64_t>(f_->q));
        k /= static_cast<std::uint64_t>(f_->q);
      }
    return m;
  }
  std::string to_string(const Mat& x) const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ";";
      for (int j = 0; j < n_; ++j) s += (j ? "," : "") + std::to_string(x(i, j));
    }
    return s + "]";
  }

 private:
  int n_;
  std::shared_ptr<const FieldTables> f_;
};

struct BruteClass {
  std::size_t rep = 0;      // element index of the representative
  std::size_t size = 0;
  std::size_t type_index = 0;  // index into the type-level class list
};

class MatrixGroup {
 public:
  explicit MatrixGroup(GroupPtr g) : group_(std::move(g)) {
    if (!group_->is_ambient()) throw UsageError("matrix groups are built for GL_n and SL_2 only");
    const auto& spec = group_->spec();
    if (group_->order() > kMatrixGroupBound)
      throw SizeError(spec.name() + " has order " + group_->order().get_str() + " > " + std::to_string(kMatrixGroupBound));
    n_ = spec.family == Family::SL ? 2 : spec.n;
    const auto& f1 = group_->tower().field(1);
    ops_ = std::make_unique<MatOps>(n_, std::make_shared<const FieldTables>(f1));
    enumerate();
    build_generators();
    build_classes();
    match_classes();
  }

  const GroupPtr& group() const { return group_; }
  const MatOps& ops() const { return *ops_; }
  int n() const { return n_; }
  std::size_t order() const { return elems_.size(); }
  const Mat& element(std::size_t i) const { return elems_[i]; }
  const std::vector<Mat>& elements() const { return elems_; }
  std::size_t index(const Mat& m) const {
    const auto k = ops_->key(m);
    if (k >= index_.size() || index_[k] < 0) throw InvariantViolation("matrix " + ops_->to_string(m) + " not in group");
    return static_cast<std::size_t>(index_[k]);
  }
  std::size_t identity_index() const { return index(ops_->identity()); }
  std::size_t mul(std::size_t i, std::size_t j) const { return index(ops_->mul(elems_[i], elems_[j])); }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  const std::vector<std::size_t>& generators() const { return gens_; }

  /// BFS classes, in the order of the type-level class list.
  const std::vector<BruteClass>& classes() const { return classes_; }
  /// Index (into classes()) of the class of every element.
  std::size_t class_of(std::size_t e) const { return class_of_[e]; }
  std::size_t exponent() const { return exponent_; }
  std::size_t element_order(std::size_t e) const {
    std::size_t k = 1;
    for (auto x = e; x != identity_index(); x = mul(x, e)) ++k;
    return k;
  }

  /// ClassType of a GL_m matrix (m <= n) given through its orbit data.
  GLClass gl_type(const MatOps& ops, const Mat& x) const {
    const int m = ops.n();
    GLClass c;
    int found = 0;
    for (int d = 1; d <= m && found < m; ++d)
      for (const auto& o : group_->tower().orbits_of_degree(d)) {
        const auto f = group_->tower().orbit_polynomial(o);
        const Mat fa = ops.poly_eval(f, x);
        Mat pw = ops.identity();
        std::vector<int> kernel{0};
        for (int k = 1; k * d <= m; ++k) {
          pw = ops.mul(pw, fa);
          kernel.push_back(m - ops.rank(pw));
          if (kernel.back() == kernel[static_cast<std::size_t>(k - 1)]) break;
        }
        if (kernel.back() == 0) continue;
        // kernel dims d * (mu'_1 + ... + mu'_k)
        std::vector<int> conj;
        for (std::size_t k = 1; k < kernel.size(); ++k)
          if (kernel[k] > kernel[k - 1]) conj.push_back((kernel[k] - kernel[k - 1]) / d);
        const auto mu = Partition(conj).conjugate();
        c.push_back({o, mu});
        found += d * mu.weight();
      }
    std::sort(c.begin(), c.end());
    if (found != m) throw InvariantViolation("eigenvalue data of " + ops.to_string(x) + " does not add up");
    return c;
  }

 private:
  void enumerate() {
    const auto q = static_cast<std::uint64_t>(ops_->field().q);
    const std::uint64_t total = ipow(q, static_cast<unsigned>(n_ * n_));
    index_.assign(total, -1);
    const bool sl = group_->spec().family == Family::SL;
    for (std::uint64_t k = 0; k < total; ++k) {
      const Mat m = ops_->from_key(k);
      const auto d = ops_->det(m);
      if (d == 0 || (sl && d != 1)) continue;
      index_[k] = static_cast<std::int32_t>(elems_.size());
      elems_.push_back(m);
    }
    if (Integer(static_cast<unsigned long>(elems_.size())) != group_->order())
      throw InvariantViolation("enumerated " + std::to_string(elems_.size()) + " elements, expected " + group_->order().get_str());
    inverse_.resize(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) inverse_[i] = index(ops_->inverse(elems_[i]));
  }

  // Transvections 1 + c E_ij for c in an F_p-basis of F_q, plus diag(g, 1, ...)
  // for GL; checked to generate by a closure count.
  void build_generators() {
    const auto& tw = group_->tower();
    const int a = static_cast<int>(tw.field(1).degree());
    std::vector<std::uint8_t> basis;
    for (int i = 0; i < a; ++i) basis.push_back(static_cast<std::uint8_t>(ipow(static_cast<std::uint64_t>(tw.p()), static_cast<unsigned>(i))));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        for (auto c : basis) {
          Mat m = ops_->identity();
          m(i, j) = c;
          gens_.push_back(index(m));
        }
      }
    if (group_->spec().family == Family::GL) {
      Mat m = ops_->identity();
      m(0, 0) = static_cast<std::uint8_t>(tw.encode(tw.elem(1, 1)));
      gens_.push_back(index(m));
    }
    std::vector<char> seen(elems_.size(), 0);
    std::deque<std::size_t> queue{identity_index()};
    seen[identity_index()] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto s : gens_) {
        const auto y = mul(x, s);
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          queue.push_back(y);
        }
      }
    }
    if (count != elems_.size()) throw InvariantViolation("generating set reaches only " + std::to_string(count) + " elements");
  }

  void build_classes() {
    class_of_.assign(elems_.size(), SIZE_MAX);
    std::vector<BruteClass> found;
    for (std::size_t e = 0; e < elems_.size(); ++e) {
      if (class_of_[e] != SIZE_MAX) continue;
      const auto id = found.size();
      BruteClass c{e, 0, 0};
      std::deque<std::size_t> queue{e};
      class_of_[e] = id;
      while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        ++c.size;
        for (auto s : gens_) {
          const auto y = mul(mul(s, x), inverse_[s]);
          if (class_of_[y] == SIZE_MAX) {
            class_of_[y] = id;
            queue.push_back(y);
          }
        }
      }
      found.push_back(c);
    }
    classes_ = std::move(found);
    exponent_ = 1;
    for (const auto& c : classes_) exponent_ = static_cast<std::size_t>(lcm_u64(exponent_, element_order(c.rep)));
  }

  void match_classes() {
    const auto& types = group_->classes();
    if (classes_.size() != types.size())
      throw InvariantViolation(group_->name() + ": " + std::to_string(classes_.size()) + " classes by orbit search, " +
                               std::to_string(types.size()) + " class types");
    std::vector<char> used(types.size(), 0);
    for (auto& c : classes_) {
      const auto t = group_->index_of(type_of(c));
      if (used[t]) throw InvariantViolation("two classes match type " + types[t].label);
      used[t] = 1;
      c.type_index = t;
      if (Integer(static_cast<unsigned long>(c.size)) != types[t].size)
        throw InvariantViolation("class " + types[t].label + " has " + std::to_string(c.size) + " elements, expected " +
                                 types[t].size.get_str());
    }
    // reorder to the type-level order
    std::vector<BruteClass> ordered(classes_.size());
    std::vector<std::size_t> remap(classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      ordered[classes_[i].type_index] = classes_[i];
      remap[i] = classes_[i].type_index;
    }
    for (auto& c : class_of_) c = remap[c];
    classes_ = std::move(ordered);
  }

  ClassType type_of(const BruteClass& c) const {
    const auto gt = gl_type(*ops_, elems_[c.rep]);
    if (group_->spec().family == Family::GL) return ClassType{std::vector<GLClass>{gt}};
    // SL_2: translate the GL_2 data
    using K = SL2Class::Kind;
    const auto q = group_->q();
    auto sign_of = [&](const FrobOrbit& o) { return o.exponent == 0 ? 1 : -1; };
    if (gt.size() == 1 && gt[0].orbit.degree == 1) {
      const int s = sign_of(gt[0].orbit);
      if (gt[0].mu == Partition{1, 1}) return ClassType{SL2Class{K::Central, s, 0, 0}};
      // z * [[1,1],[0,1]] lies in the square class
      Mat u = ops_->scalar(static_cast<std::uint8_t>(group_->tower().encode(gt[0].orbit.exponent == 0 ? group_->tower().one()
                                                                                                     : group_->tower().elem(1, gt[0].orbit.exponent))));
      u(0, 1) = u(0, 0);
      const int square = class_of_[index(u)] == class_of_[c.rep] ? 0 : 1;
      return ClassType{SL2Class{K::UnipotentCentral, s, square, 0}};
    }
    if (gt.size() == 2) {
      const auto e = gt[0].orbit.exponent;
      return ClassType{SL2Class{K::SplitRSS, 1, 0, std::min(e, q - 1 - e)}};
    }
    const auto f = gt[0].orbit.exponent / (q - 1);
    return ClassType{SL2Class{K::NonsplitRSS, 1, 0, std::min(f, q + 1 - f)}};
  }

  GroupPtr group_;
  int n_ = 0;
  std::unique_ptr<MatOps> ops_;
  std::vector<Mat> elems_;
  std::vector<std::int32_t> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> gens_;
  std::vector<BruteClass> classes_;
  std::vector<std::size_t> class_of_;
  std::size_t exponent_ = 1;
};

/// enumerate_group(spec)
inline std::shared_ptr<const MatrixGroup> enumerate_group(const GroupSpec& spec) {
  return std::make_shared<const MatrixGroup>(Group::create(spec));
}

}  // namespace dlcf::brute
