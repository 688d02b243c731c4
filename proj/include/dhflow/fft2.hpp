#pragma once

#include <complex>

#include <Eigen/Core>

namespace dhflow {

using Complex = std::complex<double>;
using VectorXcd = Eigen::VectorXcd;

/// 2-D FFT on n x n row-major data, normalized so that
///   coeffs = forward(field) gives field(x_j) = sum_k coeffs[k] e^{i k.x_j}
/// with x_j = side * j / n and k the signed integer modes of the grid.
/// Plans are cached per n; execution is deterministic.
namespace fft2 {

/// field (n*n, row-major) -> mode coefficients (n*n, FFT slot order).
VectorXcd forward(int n, const VectorXcd& field);

/// mode coefficients -> field values.
VectorXcd backward(int n, const VectorXcd& coeffs);

} // namespace fft2

} // namespace dhflow
