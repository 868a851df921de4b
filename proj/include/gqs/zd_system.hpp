#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "gqs/errors.hpp"

namespace gqs {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// exp(2 pi i k / d)
std::complex<double> unit_root(int d, long long k);

// Largest absolute entry of a - b.
template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    return (a.derived() - b.derived()).cwiseAbs().maxCoeff();
}

Matrix matrix_power(const Matrix& m, long long k);

/*
 * Tensor product with factor 0 carrying the LEAST significant base-p digit:
 * the combined index of (i_0, ..., i_{n-1}) is i_0 + i_1 d_0 + i_2 d_0 d_1 + ...
 * This matches the field-label convention index = sum_k m_k p^k.
 */
Matrix tensor_factors(const std::vector<Matrix>& factors);
Vector tensor_state(const std::vector<Vector>& factors);

/*
 * The d-dimensional quantum system over Z_d: position/momentum bases related
 * by the discrete Fourier transform
 *
 *   F_{mn} = d^{-1/2} omega(mn),   omega(k) = exp(2 pi i k / d),   F^4 = 1,
 *
 * and the displacement operators Z = omega^x, X = omega^{-p} with
 *   Z^a |P;m> = |P;m+a>,  X^b |X;m> = |X;m+b>,  X^b Z^a = Z^a X^b omega(-ab).
 */
Matrix fourier_zd(int d);

Vector position_state(int d, int m);
Vector momentum_state(int d, int m);

Matrix position_op(int d);  // diag(0..d-1) in the position basis
Matrix momentum_op(int d);  // F position_op F^dagger

Matrix z_op(int d);
Matrix x_op(int d);
Matrix z_pow_zd(int d, int alpha);
Matrix x_pow_zd(int d, int beta);

// D(a, b) = Z^a X^b omega(-2^{-1} a b); the symmetric phase needs odd d.
Matrix displacement_zd(int d, int alpha, int beta);

}  // namespace gqs
