#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "fieldevo/errors.hpp"

namespace fieldevo {

template <typename Scalar>
struct SymmetricEigenResult {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Vector eigenvalues;   // descending
  Matrix eigenvectors;  // columns match eigenvalues
  int sweeps = 0;
};

template <typename Derived>
typename Derived::Scalar off_diagonal_norm(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Scalar sum(0);
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Rotations sweep
/// the upper triangle row by row until the off-diagonal Frobenius norm drops
/// below `tolerance`. Eigenpairs come back sorted by eigenvalue, descending,
/// ties kept in diagonal order. Only the upper triangle of `input` is read.
template <typename Derived>
SymmetricEigenResult<typename Derived::Scalar> jacobi_eigen(
    const Eigen::MatrixBase<Derived>& input,
    typename Derived::Scalar tolerance = typename Derived::Scalar(1e-12),
    int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using Result = SymmetricEigenResult<Scalar>;
  using Matrix = typename Result::Matrix;

  const Eigen::Index n = input.rows();
  Matrix a = input.template triangularView<Eigen::Upper>();
  a.template triangularView<Eigen::StrictlyLower>() = a.transpose();
  Matrix v = Matrix::Identity(n, n);

  int sweep = 0;
  while (off_diagonal_norm(a) >= tolerance) {
    if (sweep == max_sweeps) {
      throw ConvergenceFailure("Jacobi eigensolver did not converge in " +
                               std::to_string(max_sweeps) + " sweeps");
    }
    ++sweep;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                         (std::abs(theta) + std::hypot(theta, Scalar(1)));
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  Result result;
  result.sweeps = sweep;
  result.eigenvalues.resize(n);
  result.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    result.eigenvalues(k) = a(order[k], order[k]);
    result.eigenvectors.col(k) = v.col(order[k]);
  }
  return result;
}

}  // namespace fieldevo
