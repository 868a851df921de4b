#pragma once

#include <optional>
#include <vector>

#include "gqs/galois_system.hpp"

namespace gqs {

// One Galois conjugacy class of position labels, ordered [m, m^p, m^{p^2}, ...]
// from the orbit representative.
struct FrobeniusOrbit {
    FieldElement representative;
    std::vector<FieldElement> members;
    std::vector<int> indices;  // basis indices of the members
    ZpPoly minimal_poly;
};

// The kappa-th copy subspace: span of the kappa-th Frobenius power of one
// representative from each degree-ell orbit.
struct CopySubspace {
    int kappa;
    std::vector<FieldElement> basis_labels;
    std::vector<int> basis_indices;
};

// max |A - B| entry after applying the three conjugation identities
//   G^l X^b G^-l = X^{b^{p^l}}
//   G^l Z^a G^-l = Z^{a^{p^l} h^{p^l - 1}}
//   G^l D(a,b) G^-l = D(a^{p^l} h^{p^l - 1}, b^{p^l})
struct ConjugationCheck {
    double x_residual;
    double z_residual;
    double d_residual;
    double max_residual() const;
    bool ok(double tol) const { return max_residual() <= tol; }
};

/*
 * Partition of the position labels into Frobenius orbits and everything the
 * paper builds on top of it: the orbit projectors Pi_Xi, the Frobenius
 * transformation G (cyclic shift along every orbit, G^ell = 1), the copy
 * subspaces h_Xk tiling H_A, and the s-dimensional Heisenberg-Weyl machinery
 * (F_k, S_k, R_k, r_k, g_k) inside each copy.
 *
 * Canonical form: orbit representatives are the lexicographically smallest
 * component vectors, degree-ell orbits first in ascending representative
 * order, then the base-field singletons. build_with_representatives() accepts
 * an explicit representative list instead (any conjugate, any orbit order);
 * the formalism is equivariant under that choice.
 *
 * with_rotation(U) moves everything to the subspaces spanned by U|X;m>.
 */
class FrobeniusDecomposition {
public:
    static FrobeniusDecomposition build(const GaloisSystem& sys);
    static FrobeniusDecomposition build_with_representatives(
        const GaloisSystem& sys, const std::vector<FieldElement>& representatives);

    FrobeniusDecomposition with_rotation(Matrix u) const;

    const GaloisSystem& system() const { return sys_; }
    int s() const { return s_; }
    int orbit_count() const { return static_cast<int>(orbits_.size()); }
    const std::vector<FrobeniusOrbit>& orbits() const { return orbits_; }
    bool rotated() const { return rotation_.has_value(); }
    const Matrix& rotation() const;

    Matrix projector(int i) const;       // Pi_Xi
    Matrix layer_a_projector() const;    // onto H_A
    Matrix layer_b_projector() const;    // onto H_B

    Matrix g_i(int i) const;
    Matrix g_total() const;

    std::vector<CopySubspace> copy_subspaces() const;
    CopySubspace copy_subspace(int kappa) const;
    Matrix copy_projector(int kappa) const;  // Sigma_Xk

    // Basis state of h_Xk at slot lambda (rotation applied when present).
    Vector basis_state(int kappa, int lambda) const;

    Matrix fourier_sub(int kappa) const;     // s-point Fourier kernel on h_Xk
    Matrix s_op(int kappa) const;            // cyclic shift S_k
    Matrix r_op(int kappa) const;            // R_k = F_k S_k F_k^dagger
    Vector dual_state(int kappa, int lambda) const;
    Matrix position_sub_op(int kappa) const;         // r_k
    Matrix momentum_sub_op(int kappa) const;         // g_k = F_k r_k F_k^dagger
    Matrix momentum_sub_op_kernel(int kappa) const;  // same operator from the Delta_1 kernel

    // S_k^N on a state supported in h_Xk (projector residual below tol).
    Vector stroboscopic_evolve(int kappa, const Vector& state, long long n,
                               double tol = 1e-8) const;

private:
    FrobeniusDecomposition(GaloisSystem sys, std::vector<FrobeniusOrbit> orbits, int s)
        : sys_(std::move(sys)), orbits_(std::move(orbits)), s_(s) {}

    void require_copy_layer() const;
    Matrix maybe_rotate(Matrix m) const;

    GaloisSystem sys_;
    std::vector<FrobeniusOrbit> orbits_;  // degree-ell orbits first, then singletons
    int s_;
    std::optional<Matrix> rotation_;
};

ConjugationCheck verify_conjugation(const FrobeniusDecomposition& dec, const FieldElement& alpha,
                                    const FieldElement& beta, int lambda);

}  // namespace gqs
