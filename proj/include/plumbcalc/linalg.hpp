#pragma once

#include <cstddef>
#include <utility>

#include <Eigen/Core>

#include "plumbcalc/graph.hpp"

namespace plumbcalc {

// Fraction-free Gaussian elimination. Exact for any integral domain scalar.
template <class Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = input(i, j);

  Scalar prev(1);
  int flip = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Scalar(0);
      for (Eigen::Index j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      flip = -flip;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = t / prev;
      }
    }
    prev = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  return flip < 0 ? Scalar(-det) : det;
}

// Sylvester inertia by symmetric elimination over a field. Zero diagonals are
// handled with 2x2 hyperbolic blocks.
template <class Field, class Derived>
Inertia symmetric_inertia(const Eigen::MatrixBase<Derived>& input) {
  const Eigen::Index n = input.rows();
  Eigen::Matrix<Field, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Field(input(i, j));

  std::vector<bool> done(static_cast<std::size_t>(n), false);
  Inertia out;
  auto eliminate = [&](Eigen::Index p) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (done[i] || i == p || a(i, p) == 0) continue;
      Field f = a(i, p) / a(p, p);
      for (Eigen::Index j = 0; j < n; ++j)
        if (!done[j]) a(i, j) -= f * a(p, j);
    }
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != p) a(i, p) = a(p, i) = 0;
  };

  Eigen::Index remaining = n;
  while (remaining > 0) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      if (a(piv, piv) > 0)
        ++out.positive;
      else
        ++out.negative;
      eliminate(piv);
      done[piv] = true;
      --remaining;
      continue;
    }
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = 0; i < n && pi < 0; ++i) {
      if (done[i]) continue;
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (!done[j] && a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    }
    if (pi < 0) {
      out.zero += static_cast<std::size_t>(remaining);
      break;
    }
    // e_i + e_j has square 2 a_ij != 0; it becomes a pivot.
    for (Eigen::Index k = 0; k < n; ++k)
      if (!done[k]) a(pi, k) += a(pj, k);
    for (Eigen::Index k = 0; k < n; ++k)
      if (!done[k]) a(k, pi) += a(k, pj);
  }
  return out;
}

}  // namespace plumbcalc
