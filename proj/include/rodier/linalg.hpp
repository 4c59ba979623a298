#ifndef RODIER_LINALG_HPP
#define RODIER_LINALG_HPP

// Exact dense linear algebra over an ordered field scalar (rodier::Rational or any
// Eigen-compatible exact type). No pivot thresholds: a pivot is any nonzero entry.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rodier/rational.hpp"

namespace rodier {

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QVec = Vec<Rational>;
using QMat = Mat<Rational>;

template <class Scalar>
struct Echelon {
  Mat<Scalar> reduced;      // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class Scalar>
Echelon<Scalar> reduced_row_echelon(Mat<Scalar> m) {
  Echelon<Scalar> out;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar(0)) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Scalar>
int rank(const Mat<Scalar>& m) {
  return reduced_row_echelon<Scalar>(m).rank();
}

/// Rows are the given vectors. All vectors must share one dimension.
template <class Scalar>
Mat<Scalar> stack_rows(std::span<const Vec<Scalar>> vectors, Eigen::Index dim) {
  Mat<Scalar> m(static_cast<Eigen::Index>(vectors.size()), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  return m;
}

template <class Scalar>
int rank_of(std::span<const Vec<Scalar>> vectors, Eigen::Index dim) {
  if (vectors.empty()) return 0;
  return rank<Scalar>(stack_rows<Scalar>(vectors, dim));
}

/// Canonical basis of the row space: the nonzero rows of the RREF.
template <class Scalar>
std::vector<Vec<Scalar>> row_space_basis(std::span<const Vec<Scalar>> vectors, Eigen::Index dim) {
  std::vector<Vec<Scalar>> basis;
  if (vectors.empty()) return basis;
  const auto e = reduced_row_echelon<Scalar>(stack_rows<Scalar>(vectors, dim));
  for (int i = 0; i < e.rank(); ++i) basis.push_back(e.reduced.row(i).transpose());
  return basis;
}

/// Basis of {x : m x = 0}, one vector per free column with that entry set to 1.
template <class Scalar>
std::vector<Vec<Scalar>> nullspace(const Mat<Scalar>& m) {
  const auto e = reduced_row_echelon<Scalar>(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec<Scalar>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec<Scalar> x = Vec<Scalar>::Zero(cols);
    x(free) = Scalar(1);
    for (int i = 0; i < e.rank(); ++i) x(e.pivots[static_cast<std::size_t>(i)]) = -e.reduced(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Some solution of a x = b, or nullopt when inconsistent. Free variables are 0.
template <class Scalar>
std::optional<Vec<Scalar>> solve(const Mat<Scalar>& a, const Vec<Scalar>& b) {
  Mat<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto e = reduced_row_echelon<Scalar>(aug);
  Vec<Scalar> x = Vec<Scalar>::Zero(a.cols());
  for (int i = 0; i < e.rank(); ++i) {
    const int p = e.pivots[static_cast<std::size_t>(i)];
    if (p == a.cols()) return std::nullopt;
    x(p) = e.reduced(i, a.cols());
  }
  return x;
}

/// Coefficients c with sum_i c_i * vectors[i] == v, if v lies in their span.
template <class Scalar>
std::optional<Vec<Scalar>> coordinates_in(std::span<const Vec<Scalar>> vectors, const Vec<Scalar>& v) {
  if (vectors.empty()) {
    if ((v.array() == Scalar(0)).all()) return Vec<Scalar>(0);
    return std::nullopt;
  }
  return solve<Scalar>(stack_rows<Scalar>(vectors, v.size()).transpose(), v);
}

template <class Scalar>
bool in_span(std::span<const Vec<Scalar>> vectors, const Vec<Scalar>& v) {
  return coordinates_in<Scalar>(vectors, v).has_value();
}

/// c > 0 with u == c * v, if it exists.
template <class Scalar>
std::optional<Scalar> positive_ratio(const Vec<Scalar>& u, const Vec<Scalar>& v) {
  if (u.size() != v.size()) return std::nullopt;
  std::optional<Scalar> ratio;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (v(i) == Scalar(0)) {
      if (u(i) != Scalar(0)) return std::nullopt;
      continue;
    }
    const Scalar c = u(i) / v(i);
    if (ratio && *ratio != c) return std::nullopt;
    ratio = c;
  }
  if (!ratio || !(*ratio > Scalar(0))) return std::nullopt;
  return ratio;
}

/// Orthogonal projector (w.r.t. the standard dot product) onto the row space of `basis`.
template <class Scalar>
Mat<Scalar> orthogonal_projector(std::span<const Vec<Scalar>> basis, Eigen::Index dim) {
  if (basis.empty()) return Mat<Scalar>::Zero(dim, dim);
  const Mat<Scalar> b = stack_rows<Scalar>(basis, dim).transpose();  // dim x k
  const Mat<Scalar> gram = b.transpose() * b;
  const Eigen::Index k = gram.rows();
  Mat<Scalar> inv(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    Vec<Scalar> e = Vec<Scalar>::Zero(k);
    e(j) = Scalar(1);
    inv.col(j) = *solve<Scalar>(gram, e);
  }
  return b * inv * b.transpose();
}

/// Smallest integer vector on the same ray as v (v != 0).
std::vector<long long> primitive_integral(const QVec& v);

/// Lexicographic comparison of rational vectors.
bool lex_less(const QVec& a, const QVec& b);

}  // namespace rodier

#endif  // RODIER_LINALG_HPP
