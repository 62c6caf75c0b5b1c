#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace wga {

using cplx = std::complex<double>;

using Matrix3c = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;
using Matrix5c = Eigen::Matrix<cplx, 5, 5>;
using Vector5c = Eigen::Matrix<cplx, 5, 1>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

}  // namespace wga
