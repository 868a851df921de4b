#include "gqs/zd_system.hpp"

#include <cmath>
#include <numbers>

namespace gqs {

std::complex<double> unit_root(int d, long long k) {
    k %= d;
    if (k < 0) k += d;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / d;
    return {std::cos(angle), std::sin(angle)};
}

Matrix matrix_power(const Matrix& m, long long k) {
    if (k < 0) throw Error("matrix_power exponent must be non-negative");
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix base = m;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}


Matrix tensor_factors(const std::vector<Matrix>& factors) {
    Matrix result = Matrix::Ones(1, 1);
    // factor 0 least significant: prepend each new factor as the high digit
    for (const auto& f : factors) {
        const Eigen::Index dr = result.rows(), dc = result.cols();
        Matrix next(dr * f.rows(), dc * f.cols());
        for (Eigen::Index i = 0; i < f.rows(); ++i) {
            for (Eigen::Index j = 0; j < f.cols(); ++j) {
                next.block(i * dr, j * dc, dr, dc) = f(i, j) * result;
            }
        }
        result = std::move(next);
    }
    return result;
}

Vector tensor_state(const std::vector<Vector>& factors) {
    Vector result = Vector::Ones(1);
    for (const auto& f : factors) {
        const Eigen::Index dr = result.size();
        Vector next(dr * f.size());
        for (Eigen::Index i = 0; i < f.size(); ++i) {
            next.segment(i * dr, dr) = f(i) * result;
        }
        result = std::move(next);
    }
    return result;
}

Matrix fourier_zd(int d) {
    if (d < 2) throw InvalidDimension("Fourier transform needs d >= 2, got " + std::to_string(d));
    Matrix f(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            f(m, n) = scale * unit_root(d, static_cast<long long>(m) * n);
        }
    }
    return f;
}

Vector position_state(int d, int m) {
    if (d < 2) throw InvalidDimension("position state needs d >= 2");
    if (m < 0 || m >= d) throw IndexOutOfRange("position label out of range");
    Vector v = Vector::Zero(d);
    v(m) = 1.0;
    return v;
}

Vector momentum_state(int d, int m) {
    if (d < 2) throw InvalidDimension("momentum state needs d >= 2");
    if (m < 0 || m >= d) throw IndexOutOfRange("momentum label out of range");
    Vector v(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int n = 0; n < d; ++n) v(n) = scale * unit_root(d, static_cast<long long>(m) * n);
    return v;
}

Matrix position_op(int d) {
    if (d < 2) throw InvalidDimension("position operator needs d >= 2");
    Matrix x = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) x(n, n) = static_cast<double>(n);
    return x;
}

Matrix momentum_op(int d) {
    const Matrix f = fourier_zd(d);
    return f * position_op(d) * f.adjoint();
}

Matrix z_pow_zd(int d, int alpha) {
    if (d < 2) throw InvalidDimension("displacement needs d >= 2");
    Matrix z = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) z(n, n) = unit_root(d, static_cast<long long>(alpha) * n);
    return z;
}

Matrix x_pow_zd(int d, int beta) {
    if (d < 2) throw InvalidDimension("displacement needs d >= 2");
    // diagonal omega(-beta n) in the momentum basis == position shift m -> m + beta
    Matrix x = Matrix::Zero(d, d);
    for (int m = 0; m < d; ++m) {
        x(((m + beta) % d + d) % d, m) = 1.0;
    }
    return x;
}

Matrix z_op(int d) { return z_pow_zd(d, 1); }

Matrix x_op(int d) { return x_pow_zd(d, 1); }

Matrix displacement_zd(int d, int alpha, int beta) {
    if (d < 2) throw InvalidDimension("displacement needs d >= 2");
    if (d % 2 == 0) throw EvenDimension("the symmetric displacement phase needs 2 invertible mod d");
    const int half = (d + 1) / 2;  // 2^{-1} mod d for odd d
    const long long phase = -static_cast<long long>(half) * alpha % d * beta % d;
    return unit_root(d, phase) * (z_pow_zd(d, alpha) * x_pow_zd(d, beta));
}

}  // namespace gqs
