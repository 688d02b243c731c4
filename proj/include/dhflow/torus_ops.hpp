#pragma once

#include <Eigen/Core>

#include "dhflow/fft2.hpp"
#include "dhflow/grid.hpp"
#include "dhflow/spinor.hpp"

namespace dhflow {

using VectorXd = Eigen::VectorXd;

// Spectral transforms for spinor fields use the shifted modes k + delta; the
// shift is realized by untwisting with the phase e^{-i delta.x} before the
// plain FFT and twisting back afterwards.

/// Mode coefficients of one spinor component (shifted modes).
VectorXcd spinor_component_modes(const SpinTorusGrid& g, const VectorXcd& comp);
VectorXcd spinor_component_from_modes(const SpinTorusGrid& g, const VectorXcd& modes);

/// Flat Dirac operator c_1 d_1 + c_2 d_2 acting spectrally on shifted modes.
PlainSpinorField flat_dirac(const PlainSpinorField& psi);

/// Heat propagator e^{t Laplacian}: multiplier exp(-|k|^2 t) on integer modes
/// for scalar fields, exp(-|k+delta|^2 t) on shifted modes for spinor fields.
/// t = 0 is the identity; negative t is rejected.
VectorXd heat_propagate_scalar(const SpinTorusGrid& g, const VectorXd& f, double t);
PlainSpinorField heat_propagate(const PlainSpinorField& psi, double t);

/// phi_1(t Laplacian) f, with phi_1(z) = (e^z - 1)/z and phi_1(0) = 1;
/// the exponential-integrator weight, per integer mode.
VectorXd phi1_apply(const SpinTorusGrid& g, const VectorXd& f, double t);

/// Spectral gradient of a real scalar field: two real fields (d_1 f, d_2 f).
std::array<VectorXd, 2> gradient(const SpinTorusGrid& g, const VectorXd& f);

/// Spectral Laplacian of a real scalar field.
VectorXd laplacian(const SpinTorusGrid& g, const VectorXd& f);

/// Pointwise Clifford multiplication by the frame vector e_a, a in {1,2},
/// or by a real 2-vector v (v_1 c_1 + v_2 c_2).
PlainSpinorField clifford_mul(int a, const PlainSpinorField& psi);
PlainSpinorField clifford_mul(const Eigen::Vector2d& v, const PlainSpinorField& psi);

/// Right quaternion action on the spinor factor.
PlainSpinorField quaternion_act(const PlainSpinorField& psi, const Quaternion& h);

/// Pointwise real part of the hermitian pairing; one real value per point.
VectorXd real_inner(const PlainSpinorField& a, const PlainSpinorField& b);

/// Cell-measure-weighted L2 pairings.
double l2_inner(const PlainSpinorField& a, const PlainSpinorField& b);
Complex hermitian_l2_inner(const PlainSpinorField& a, const PlainSpinorField& b);
double l2_norm(const PlainSpinorField& a);

/// Same L2 pairing evaluated in mode space (Parseval route).
Complex hermitian_l2_inner_fourier(const PlainSpinorField& a, const PlainSpinorField& b);

} // namespace dhflow
