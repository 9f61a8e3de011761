#pragma once

// Spans of class functions. The pairing is positive definite, so the rank of a
// family equals the rank of its Gram matrix, and orthogonal projection onto a
// span is the solution of G x = (<v, f_j>)_j. Gram matrices of lines are
// rational, which keeps these computations over Q.

#include <optional>
#include <thread>
#include <vector>

#include "dlcf/dl/class_function.hpp"
#include "dlcf/exactnum/matrix.hpp"

namespace dlcf {

/// G(j, i) = <f_i, f_j>.
inline CycloMatrix gram_matrix(const std::vector<ClassFunction>& fs) {
  const std::size_t k = fs.size();
  CycloMatrix g(k, k);
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) jobs.emplace_back(i, j);
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t t = begin; t < jobs.size(); t += step) {
      const auto [i, j] = jobs[t];
      const auto v = inner_product(fs[i], fs[j]);
      g.at(j, i) = v;
      if (i != j) g.at(i, j) = v.conj();
    }
  };
  const std::size_t threads = jobs.size() < 64 ? 1 : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return g;
}

inline std::size_t gram_rank(const CycloMatrix& g) {
  if (g.rows() == 0) return 0;
  if (auto rs = RationalSystem::from(g)) return rs->rank();
  return rank(g);
}

inline std::size_t function_rank(const std::vector<ClassFunction>& fs) { return gram_rank(gram_matrix(fs)); }

struct Projection {
  std::vector<Cyclo> coeffs;  // one per basis function (a particular solution if dependent)
  ClassFunction projection;
  ClassFunction residual;
};

class SpanProjector {
 public:
  SpanProjector(GroupPtr g, std::vector<ClassFunction> basis)
      : group_(std::move(g)), basis_(std::move(basis)), gram_(gram_matrix(basis_)) {
    rational_ = basis_.empty() ? std::nullopt : RationalSystem::from(gram_);
  }

  std::size_t rank() const { return rational_ ? rational_->rank() : gram_rank(gram_); }
  const CycloMatrix& gram() const { return gram_; }
  const std::vector<ClassFunction>& basis() const { return basis_; }

  Projection project(const ClassFunction& v) const {
    Projection p{std::vector<Cyclo>(basis_.size()), ClassFunction(group_), v};
    if (basis_.empty()) return p;
    std::vector<Cyclo> b(basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) b[j] = inner_product(v, basis_[j]);
    std::optional<std::vector<Cyclo>> x;
    if (rational_) {
      x = rational_->solve(b);
    } else {
      auto s = solve_linear(gram_, b);
      if (s.consistent) x = std::move(s.solution);
    }
    if (!x) throw InvariantViolation("normal equations inconsistent: Gram matrix is not Hermitian positive semidefinite");
    p.coeffs = std::move(*x);
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (!p.coeffs[j].is_zero()) p.projection += p.coeffs[j] * basis_[j];
    p.projection = p.projection.minimal();
    p.residual = (v - p.projection).minimal();
    return p;
  }

 private:
  GroupPtr group_;
  std::vector<ClassFunction> basis_;
  CycloMatrix gram_;
  std::optional<RationalSystem> rational_;
};

}  // namespace dlcf
