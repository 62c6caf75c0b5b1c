#pragma once

// Small dense complex linear algebra for the non-Hermitian effective
// Hamiltonians (dimension 2, 3 and 5 in practice, up to 8 supported).

#include <vector>

#include "wga/types.hpp"

namespace wga::linalg {

inline constexpr int kMaxDim = 8;
inline constexpr double kMaxCondition = 1e10;
inline constexpr double kMinEigenGap = 1e-8;

/// Eigen-decomposition M = sum_l values[l] * projectors[l].
///
/// Right vectors are the columns of `right`; left vectors are the columns of
/// `left`, normalised so that left.col(l).transpose() * right.col(m) = delta_lm
/// (plain transpose, no conjugation). P_l = right_l * left_l^T.
struct Eigensystem {
  VectorXc values;
  MatrixXc right;
  MatrixXc left;
  std::vector<MatrixXc> projectors;

  int dim() const { return static_cast<int>(values.size()); }
};

/// Eigenvalues sorted by real part (ties by imaginary part). Throws
/// DefectiveMatrix when two eigenvalues are closer than kMinEigenGap or the
/// eigenvector matrix has condition number above kMaxCondition.
Eigensystem eig_general(const MatrixXc& m);

/// Solves (z I - M) w = v. Throws SingularShift when z is numerically an
/// eigenvalue of M.
VectorXc solve_resolvent(const MatrixXc& m, cplx z, const VectorXc& v);

/// c_l = bra^T P_l ket, so that bra^T (z - M)^{-1} ket = sum_l c_l / (z - alpha_l).
VectorXc residue_weights(const Eigensystem& es, const VectorXc& bra, const VectorXc& ket);

/// bra^T (z - M)^{-1} ket evaluated from the spectral decomposition.
cplx spectral_resolvent(const Eigensystem& es, cplx z, const VectorXc& bra, const VectorXc& ket);

}  // namespace wga::linalg
