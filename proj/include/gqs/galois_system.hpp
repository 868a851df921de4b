#pragma once

#include <functional>
#include <vector>

#include "gqs/field.hpp"
#include "gqs/zd_system.hpp"

namespace gqs {

/*
 * Diagonal operator with eigenvalues in GF(p^ell) rather than C. The spectrum
 * stays symbolic because a field element has no canonical complex value;
 * realize_diagonal() maps it through a user-supplied scalar function when a
 * complex matrix is needed.
 */
struct FieldDiagonalOperator {
    enum class Basis { position, momentum };
    Basis basis;
    std::vector<FieldElement> eigenvalues;  // indexed by basis label index
};

/*
 * Quantum system of dimension d = p^ell whose position and momentum labels
 * live in GF(p^ell). The Hilbert space is the ell-fold tensor power of the
 * p-dimensional system, with position state |X;m> = |x;m_0> x ... x |x;m_{ell-1}>
 * sitting at index sum_k m_k p^k (factor 0 least significant).
 *
 * The Fourier transform uses the additive characters of the field,
 *
 *   F_{mn} = (p^ell)^{-1/2} omega[Tr(h m n)],   omega = exp(2 pi i / p),
 *
 * and differs from the tensor power of the Z_p Fourier transform when ell > 1.
 */
class GaloisSystem {
public:
    explicit GaloisSystem(FieldContext ctx) : ctx_(std::move(ctx)) {}

    const FieldContext& field() const { return ctx_; }
    int dim() const { return ctx_.dim(); }

    int index_of(const FieldElement& m) const { return ctx_.index_of(m); }
    FieldElement label(int index) const { return ctx_.from_index(index); }

    Matrix fourier() const;
    Matrix tensor_fourier() const;  // the ell-fold tensor power of fourier_zd(p)

    Vector position_state(const FieldElement& m) const;
    Vector momentum_state(const FieldElement& m) const;  // F |X;m>

    // x maps position index -> its field label; p = F x F^dagger at the label
    // level, with eigenvalue m attached to the momentum state |P;m>.
    FieldDiagonalOperator x_hat() const;
    FieldDiagonalOperator p_hat() const;

    // sum_m f(m) |X;m><X;m| (position) or sum_m f(m) |P;m><P;m| (momentum)
    Matrix realize_diagonal(const FieldDiagonalOperator& op,
                            const std::function<Complex(const FieldElement&)>& f) const;

    // Z^a diagonal omega[Tr(h a n)] in position; X^b diagonal omega[-Tr(h b n)]
    // in momentum, which is exactly the position shift m -> m + b.
    Matrix z_pow(const FieldElement& alpha) const;
    Matrix x_pow(const FieldElement& beta) const;

    // D(a, b) = Z^a X^b omega[-2^{-1} Tr(h a b)]; factorizes as the tensor
    // product of Z_p displacements with dual components of a and components of b.
    Matrix displacement(const FieldElement& alpha, const FieldElement& beta) const;

private:
    FieldContext ctx_;
};

}  // namespace gqs
