#pragma once

#include <random>

#include "gqs/field.hpp"
#include "gqs/zd_system.hpp"

namespace gqs::testing {

// GF(9) with the irreducible polynomial e^2 + e + 2 used throughout.
inline FieldContext gf9(std::vector<int> h = {1, 0}) {
    return FieldContext::build(3, 2, IrreduciblePoly{{2, 1}}, FieldElement{std::move(h)});
}

// GF(27) with e^3 + 2e + 2 (no roots in Z_3).
inline FieldContext gf27(std::vector<int> h = {1, 0, 0}) {
    return FieldContext::build(3, 3, IrreduciblePoly{{2, 2, 0}}, FieldElement{std::move(h)});
}

// GF(25) with e^2 + 2 (-2 is not a square mod 5).
inline FieldContext gf25(std::vector<int> h = {1, 0}) {
    return FieldContext::build(5, 2, IrreduciblePoly{{2, 0}}, FieldElement{std::move(h)});
}

// GF(49) with e^2 + 1 (-1 is not a square mod 7).
inline FieldContext gf49(std::vector<int> h = {1, 0}) {
    return FieldContext::build(7, 2, IrreduciblePoly{{1, 0}}, FieldElement{std::move(h)});
}

inline FieldElement random_element(const FieldContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(0, ctx.dim() - 1);
    return ctx.from_index(dist(rng));
}

inline double unitarity_residual(const Matrix& u) {
    return max_abs_diff(u * u.adjoint(), Matrix::Identity(u.rows(), u.cols()));
}

// Haar-ish random unitary from the QR decomposition of a Ginibre matrix.
inline Matrix random_unitary(int d, std::mt19937& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix a(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a(i, j) = Complex{normal(rng), normal(rng)};
    }
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    return q;
}

}  // namespace gqs::testing
