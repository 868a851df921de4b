#include "gqs/galois_system.hpp"

#include <cmath>

namespace gqs {

Matrix GaloisSystem::fourier() const {
    const int d = dim();
    const int p = ctx_.p();
    Matrix f(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        const FieldElement m = label(i);
        for (int j = 0; j < d; ++j) {
            f(i, j) = scale * unit_root(p, ctx_.trace_product(m, label(j)));
        }
    }
    return f;
}

Matrix GaloisSystem::tensor_fourier() const {
    return tensor_factors(std::vector<Matrix>(ctx_.ell(), fourier_zd(ctx_.p())));
}

Vector GaloisSystem::position_state(const FieldElement& m) const {
    Vector v = Vector::Zero(dim());
    v(index_of(m)) = 1.0;
    return v;
}

Vector GaloisSystem::momentum_state(const FieldElement& m) const {
    const int d = dim();
    Vector v(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int n = 0; n < d; ++n) {
        v(n) = scale * unit_root(ctx_.p(), ctx_.trace_product(m, label(n)));
    }
    return v;
}

FieldDiagonalOperator GaloisSystem::x_hat() const {
    FieldDiagonalOperator op{FieldDiagonalOperator::Basis::position, {}};
    op.eigenvalues.reserve(dim());
    for (int n = 0; n < dim(); ++n) op.eigenvalues.push_back(label(n));
    return op;
}

FieldDiagonalOperator GaloisSystem::p_hat() const {
    FieldDiagonalOperator op{FieldDiagonalOperator::Basis::momentum, {}};
    op.eigenvalues.reserve(dim());
    for (int n = 0; n < dim(); ++n) op.eigenvalues.push_back(label(n));
    return op;
}

Matrix GaloisSystem::realize_diagonal(const FieldDiagonalOperator& op,
                                      const std::function<Complex(const FieldElement&)>& f) const {
    const int d = dim();
    if (static_cast<int>(op.eigenvalues.size()) != d) {
        throw ContextMismatch("diagonal operator size does not match system dimension");
    }
    Matrix diag = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) diag(n, n) = f(op.eigenvalues[n]);
    if (op.basis == FieldDiagonalOperator::Basis::position) return diag;
    const Matrix fr = fourier();
    return fr * diag * fr.adjoint();
}

Matrix GaloisSystem::z_pow(const FieldElement& alpha) const {
    const int d = dim();
    Matrix z = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        z(n, n) = unit_root(ctx_.p(), ctx_.trace_product(alpha, label(n)));
    }
    return z;
}

Matrix GaloisSystem::x_pow(const FieldElement& beta) const {
    const int d = dim();
    Matrix x = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        x(index_of(ctx_.add(label(n), beta)), n) = 1.0;
    }
    return x;
}

Matrix GaloisSystem::displacement(const FieldElement& alpha, const FieldElement& beta) const {
    const int p = ctx_.p();
    const int half = (p + 1) / 2;  // 2^{-1} in Z_p
    const long long phase = -static_cast<long long>(half) * ctx_.trace_product(alpha, beta);
    return unit_root(p, phase) * (z_pow(alpha) * x_pow(beta));
}

}  // namespace gqs
