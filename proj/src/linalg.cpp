#include "wga/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "wga/error.hpp"

namespace wga::linalg {

Eigensystem eig_general(const MatrixXc& m) {
  const auto n = m.rows();
  if (n != m.cols() || n == 0 || n > kMaxDim)
    throw Error(ErrorCode::InvalidConfig, "eig_general expects a square matrix of dim 1.." +
                                              std::to_string(kMaxDim));
  if (!m.allFinite()) throw Error(ErrorCode::NonFiniteValue, "eig_general input");

  // Hessenberg reduction followed by shifted QR to complex Schur form.
  Eigen::ComplexEigenSolver<MatrixXc> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::DefectiveMatrix, "Schur iteration did not converge");

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto& ev = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    if (ev[i].real() != ev[j].real()) return ev[i].real() < ev[j].real();
    return ev[i].imag() < ev[j].imag();
  });

  Eigensystem es;
  es.values.resize(n);
  es.right.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    es.values[k] = ev[order[k]];
    es.right.col(k) = solver.eigenvectors().col(order[k]).normalized();
  }

  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(es.values[i] - es.values[j]) < kMinEigenGap * scale)
        throw Error(ErrorCode::DefectiveMatrix, "near-degenerate eigenvalues");

  Eigen::JacobiSVD<MatrixXc> svd(es.right);
  const auto& sv = svd.singularValues();
  if (sv[n - 1] <= 0.0 || sv[0] / sv[n - 1] > kMaxCondition)
    throw Error(ErrorCode::DefectiveMatrix, "eigenvector matrix is ill-conditioned");

  // Rows of V^{-1} are the left eigenvectors, already biorthonormal to V.
  const MatrixXc vinv = es.right.fullPivLu().inverse();
  es.left = vinv.transpose();
  es.projectors.reserve(n);
  for (Eigen::Index k = 0; k < n; ++k)
    es.projectors.push_back(es.right.col(k) * es.left.col(k).transpose());
  return es;
}

VectorXc solve_resolvent(const MatrixXc& m, cplx z, const VectorXc& v) {
  MatrixXc shifted = -m;
  shifted.diagonal().array() += z;
  Eigen::FullPivLU<MatrixXc> lu(shifted);
  const double scale = std::abs(z) + m.cwiseAbs().rowwise().sum().maxCoeff();
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot > 1e-13 * std::max(1.0, scale)))
    throw Error(ErrorCode::SingularShift, "z is an eigenvalue of M (pivot " +
                                              std::to_string(min_pivot) + ")");
  return lu.solve(v);
}

VectorXc residue_weights(const Eigensystem& es, const VectorXc& bra, const VectorXc& ket) {
  const VectorXc bra_right = es.right.transpose() * bra;  // bra^T r_l
  const VectorXc left_ket = es.left.transpose() * ket;    // l_l^T ket
  return bra_right.cwiseProduct(left_ket);
}

cplx spectral_resolvent(const Eigensystem& es, cplx z, const VectorXc& bra, const VectorXc& ket) {
  const VectorXc c = residue_weights(es, bra, ket);
  cplx sum{};
  for (int l = 0; l < es.dim(); ++l) sum += c[l] / (z - es.values[l]);
  return sum;
}

}  // namespace wga::linalg
