#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gqs/errors.hpp"
#include "gqs/zp_poly.hpp"

namespace gqs {

using Complex = std::complex<double>;

/*
 * Element of GF(p^ell) written in the polynomial basis,
 *
 *   a = a_0 + a_1 e + ... + a_{ell-1} e^{ell-1},   a_k in [0, p),
 *
 * where e is the root of the context's irreducible polynomial. Elements are
 * plain values; all arithmetic lives on FieldContext.
 */
struct FieldElement {
    std::vector<int> coeffs;
    bool operator==(const FieldElement&) const = default;
};

// Monic irreducible polynomial P(e) = c_0 + c_1 e + ... + c_{ell-1} e^{ell-1} + e^ell.
// Only the non-leading coefficients are stored.
struct IrreduciblePoly {
    std::vector<int> coeffs;
    bool operator==(const IrreduciblePoly&) const = default;
};

/*
 * Immutable description of GF(p^ell) together with the tables used throughout:
 *
 *   C        ell x ell matrix with e^{mu p} = sum_k e^k C_{k,mu}; C^ell = 1
 *   E[k]     Tr(h e^k) for k = 0..2ell-2
 *   g        g_{l,k} = E[l+k], the bilinear form of Tr(h a b) in components
 *   G        g^{-1} over Z_p
 *   E_k      dual basis, Tr(h e^k E_l) = delta_{k,l}
 *
 * h is the fixed nonzero "inverse Planck" constant; changing it means a new
 * context. Construction validates p (odd prime), irreducibility and h != 0.
 * Instances are immutable after construction and safe to share across threads.
 */
class FieldContext {
public:
    static FieldContext build(int p, int ell, IrreduciblePoly poly, FieldElement h);

    int p() const { return p_; }
    int ell() const { return ell_; }
    int dim() const { return d_; }  // p^ell
    const IrreduciblePoly& poly() const { return poly_; }
    const FieldElement& planck() const { return h_; }

    const std::vector<std::vector<int>>& frobenius_matrix() const { return C_; }
    const std::vector<int>& trace_table() const { return E_vec_; }
    const std::vector<std::vector<int>>& g_matrix() const { return g_; }
    const std::vector<std::vector<int>>& G_matrix() const { return G_; }
    const std::vector<FieldElement>& dual_basis() const { return dual_basis_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement epsilon() const;           // the basis root e (== scalar 0 when ell == 1)
    FieldElement scalar(int value) const;   // image of Z_p in the field
    FieldElement from_coeffs(std::vector<int> coeffs) const;

    // Bijection with [0, p^ell): index = sum_k a_k p^k (base-p digits).
    FieldElement from_index(int index) const;
    int index_of(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(const FieldElement& a, long long k) const;
    FieldElement inv(const FieldElement& a) const;
    bool is_zero(const FieldElement& a) const;

    // Tr(a) = a + a^p + ... + a^{p^{ell-1}}, an element of Z_p.
    int trace(const FieldElement& a) const;

    // a^{p^lambda} through the component action of C^lambda; lambda taken mod ell.
    FieldElement frobenius_power(const FieldElement& a, int lambda) const;

    // Distinct Galois orbit [a, a^p, ...] in application order.
    std::vector<FieldElement> conjugates(const FieldElement& a) const;

    // Dual components abar_l = Tr(h a e^l) and the inverse transport a = G abar.
    std::vector<int> dual_components(const FieldElement& a) const;
    FieldElement from_dual_components(const std::vector<int>& dual) const;

    int trace_product(const FieldElement& a, const FieldElement& b) const;  // Tr(h a b)

    // Additive character chi(a) = exp(2 pi i Tr(a) / p).
    Complex character(const FieldElement& a) const;

    // Brute-force (1/p^ell) sum_n omega[Tr(n m - n^{p^lambda} r)];
    // equals 1 when m^{p^lambda} = r and 0 otherwise.
    Complex character_sum(const FieldElement& m, const FieldElement& r, int lambda) const;

    ZpPoly minimal_polynomial(const FieldElement& a) const;

    bool operator==(const FieldContext&) const = default;

private:
    FieldContext() = default;

    int p_ = 0, ell_ = 0, d_ = 0;
    IrreduciblePoly poly_;
    FieldElement h_;
    std::vector<std::vector<int>> C_;
    std::vector<int> E_vec_;                 // E_0 .. E_{2ell-2}
    std::vector<std::vector<int>> g_, G_;
    std::vector<FieldElement> dual_basis_;
    std::vector<FieldElement> eps_powers_;   // e^k reduced, k = 0 .. 2ell-2

    void check_element(const FieldElement& a) const;
    FieldElement reduce_product(const std::vector<long long>& raw) const;
};

}  // namespace gqs
