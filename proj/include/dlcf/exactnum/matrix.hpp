#pragma once

// Dense matrices over Q(zeta_N) and exact Gaussian elimination.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dlcf/errors.hpp"
#include "dlcf/exactnum/cyclotomic.hpp"

namespace dlcf {

class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Matrix whose columns are the given vectors (all of equal length).
  static CycloMatrix from_columns(std::span<const std::vector<Cyclo>> columns, std::size_t rows) {
    CycloMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionError("column " + std::to_string(j) + " has wrong length");
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
    }
    m.unify_level();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Cyclo& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cyclo& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Lifts all entries to the lcm of their levels.
  std::uint64_t unify_level() {
    const auto l = common_level(data_);
    for (auto& x : data_) x = x.change_level(l);
    return l;
  }

  std::vector<Cyclo> apply(std::span<const Cyclo> x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    std::vector<Cyclo> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cyclo> data_;
};

struct LinearSolution {
  bool consistent = false;
  std::vector<Cyclo> solution;  // one particular solution (free variables set to 0)
  std::size_t rank = 0;
  std::size_t nullity = 0;
  /// When inconsistent: y with y*A = 0 and y*b != 0.
  std::vector<Cyclo> certificate;
};

namespace detail {

// Row-reduces [A | B] in place, pivoting only on the first `pivot_cols` columns.
// Returns the pivot column of each leading row.
inline std::vector<std::size_t> row_reduce(std::vector<std::vector<Cyclo>>& m, std::size_t pivot_cols) {
  // one common level up front; otherwise every product re-embeds its operands
  std::uint64_t level = 1;
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_rational()) level = lcm_u64(level, x.level());
  for (auto& row : m)
    for (auto& x : row)
      if (!x.is_rational()) x = x.change_level(level);
      else if (x.level() != 1) x = Cyclo(x.rational());
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    // rational pivots invert for free; take one when available
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      if (p == rows) p = i;
      if (m[i][c].is_rational()) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Cyclo inv = m[r][c].inv();
    for (std::size_t k = c; k < m[r].size(); ++k)
      if (!m[r][k].is_zero()) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Cyclo f = m[i][c];
      for (std::size_t k = c; k < m[i].size(); ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Exact solve of A x = b by Gauss-Jordan elimination.
inline LinearSolution solve_linear(const CycloMatrix& a, std::span<const Cyclo> b) {
  if (b.size() != a.rows())
    throw DimensionError("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                         std::to_string(a.rows()) + " rows");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Cyclo>> m(rows, std::vector<Cyclo>(cols + 1 + rows));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a.at(i, j);
    m[i][cols] = b[i];
    m[i][cols + 1 + i] = Cyclo(1);
  }
  const auto pivots = detail::row_reduce(m, cols);

  LinearSolution out;
  out.rank = pivots.size();
  out.nullity = cols - out.rank;
  for (std::size_t i = out.rank; i < rows; ++i) {
    if (m[i][cols].is_zero()) continue;
    out.consistent = false;
    out.certificate.assign(m[i].begin() + static_cast<std::ptrdiff_t>(cols + 1), m[i].end());
    return out;
  }
  out.consistent = true;
  out.solution.assign(cols, Cyclo(0));
  for (std::size_t i = 0; i < out.rank; ++i) out.solution[pivots[i]] = m[i][cols];
  return out;
}

inline std::size_t rank(const CycloMatrix& a) {
  std::vector<std::vector<Cyclo>> m(a.rows(), std::vector<Cyclo>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
  return detail::row_reduce(m, a.cols()).size();
}

/// Rank of the span of a family of vectors of equal length.
inline std::size_t span_rank(std::span<const std::vector<Cyclo>> vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<Cyclo>> m(vectors.begin(), vectors.end());
  return detail::row_reduce(m, m.front().size()).size();
}

/// A x = b for a rational matrix A, reduced once and reused for many
/// cyclotomic right-hand sides (solved coefficientwise over Q).
class RationalSystem {
 public:
  explicit RationalSystem(std::vector<std::vector<Rational>> a) : rows_(a.size()), cols_(a.empty() ? 0 : a[0].size()) {
    for (auto& row : a) {
      if (row.size() != cols_) throw DimensionError("ragged rational matrix");
      row.resize(cols_ + rows_, Rational(0));
    }
    for (std::size_t i = 0; i < rows_; ++i) a[i][cols_ + i] = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && sgn(a[p][c]) == 0) ++p;
      if (p == rows_) continue;
      std::swap(a[p], a[r]);
      const Rational inv = 1 / a[r][c];
      for (auto& x : a[r]) x *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || sgn(a[i][c]) == 0) continue;
        const Rational f = a[i][c];
        for (std::size_t k = c; k < a[i].size(); ++k)
          if (sgn(a[r][k]) != 0) a[i][k] -= f * a[r][k];
      }
      pivots_.push_back(c);
      ++r;
    }
    transform_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) transform_[i].assign(a[i].begin() + static_cast<std::ptrdiff_t>(cols_), a[i].end());
  }

  /// Entries of a matrix that is rational, or nothing.
  static std::optional<RationalSystem> from(const CycloMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m.at(i, j).is_rational()) return std::nullopt;
        a[i][j] = m.at(i, j).rational();
      }
    return RationalSystem(std::move(a));
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// One solution (free variables 0), or nothing when inconsistent.
  std::optional<std::vector<Cyclo>> solve(std::span<const Cyclo> b) const {
    if (b.size() != rows_) throw DimensionError("right-hand side length mismatch");
    auto row = [&](std::size_t i) {
      Cyclo y;
      for (std::size_t k = 0; k < rows_; ++k)
        if (sgn(transform_[i][k]) != 0 && !b[k].is_zero()) y += Cyclo(transform_[i][k]) * b[k];
      return y;
    };
    for (std::size_t i = rank(); i < rows_; ++i)
      if (!row(i).is_zero()) return std::nullopt;
    std::vector<Cyclo> x(cols_);
    for (std::size_t i = 0; i < rank(); ++i) x[pivots_[i]] = row(i);
    return x;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Rational>> transform_;
};

}  // namespace dlcf
