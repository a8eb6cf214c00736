#pragma once

#include <Eigen/Core>

#include <vector>

namespace weildeco {

// Exact Gaussian elimination over any field-like scalar (Rational, RatFunc):
// pivots are chosen as the first nonzero entry, no magnitude comparisons.

template <class S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

namespace detail {

// Reduces m in place to row echelon form; returns pivot columns.
template <class S>
std::vector<int> echelonize(DenseMat<S>& m) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!(m(r, col) == S(0))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const S f = m(r, col);
      if (f == S(0)) continue;
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class S>
int exactRank(DenseMat<S> m) {
  return static_cast<int>(detail::echelonize(m).size());
}

// Columns form a basis of the right kernel {v : m v = 0}.
template <class S>
DenseMat<S> exactKernel(DenseMat<S> m) {
  const Eigen::Index n = m.cols();
  const std::vector<int> pivots = detail::echelonize(m);
  std::vector<int> freeCols;
  {
    std::size_t p = 0;
    for (Eigen::Index c = 0; c < n; ++c) {
      if (p < pivots.size() && pivots[p] == c) {
        ++p;
      } else {
        freeCols.push_back(static_cast<int>(c));
      }
    }
  }
  DenseMat<S> ker(n, static_cast<Eigen::Index>(freeCols.size()));
  for (Eigen::Index j = 0; j < ker.cols(); ++j)
    for (Eigen::Index i = 0; i < n; ++i) ker(i, j) = S(0);
  for (std::size_t k = 0; k < freeCols.size(); ++k) {
    const int fc = freeCols[k];
    ker(fc, static_cast<Eigen::Index>(k)) = S(1);
    for (std::size_t p = 0; p < pivots.size(); ++p)
      ker(pivots[p], static_cast<Eigen::Index>(k)) = S(0) - m(static_cast<Eigen::Index>(p), fc);
  }
  return ker;
}

template <class S>
S exactDet(DenseMat<S> m) {
  S det = S(1);
  Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (!(m(r, col) == S(0))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return S(0);
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      det = S(0) - det;
    }
    det = det * m(col, col);
    const S inv = S(1) / m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const S f = m(r, col) * inv;
      if (f == S(0)) continue;
      for (Eigen::Index c = col; c < n; ++c) m(r, c) = m(r, c) - f * m(col, c);
    }
  }
  return det;
}

}  // namespace weildeco
