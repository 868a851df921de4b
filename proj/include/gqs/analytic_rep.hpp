#pragma once

#include "gqs/frobenius.hpp"

namespace gqs {

/*
 * The ell-sheeted extended complex plane: ell copies of the Riemann sphere cut
 * along the rays arg z = 2 pi k / ell. Sheet S_k is the open sector
 * 2 pi k / ell < arg z < 2 pi (k+1) / ell; 0 and infinity are branch points
 * of order ell - 1. Only the Bose case of odd s is supported.
 */
struct SheetedPlane {
    int ell;
    int s;

    SheetedPlane(int ell, int s);
    Complex theta() const { return unit_root(ell, 1); }
};

/*
 * A state in H_A as the polynomial data f(lambda, kappa): column kappa holds
 * the coefficients of the copy subspace h_Xk, and on sheet S_k the state is
 * the polynomial f(z) = sum_lambda d(s,lambda) f(lambda, kappa) z^{ell lambda}.
 */
struct AnalyticRep {
    Eigen::MatrixXcd coeffs;  // s rows, ell columns

    int s() const { return static_cast<int>(coeffs.rows()); }
    int ell() const { return static_cast<int>(coeffs.cols()); }
};

// SU(2) coherent-state weight d(s, lambda) = sqrt(binomial(s-1, lambda)),
// i.e. sqrt((2j)! / ((j+n)!(j-n)!)) with j = (s-1)/2 and n = lambda - j.
double coherent_weight(int s, int lambda);

// tau(z) = integer part of ell * arg(z) / (2 pi), arg in [0, 2 pi).
// Raises OnCut when z = 0 or arg(z) falls exactly on a cut ray.
int sheet_number(const SheetedPlane& plane, Complex z);

// Coefficient read-off in the decomposition's copy-subspace bases. The state
// must lie in H_A (projection onto H_B below tol) and s must be odd.
AnalyticRep represent(const FrobeniusDecomposition& dec, const Vector& state, double tol = 1e-8);

Complex evaluate_on_sheet(const AnalyticRep& rep, int kappa, Complex z);
Complex evaluate(const AnalyticRep& rep, const SheetedPlane& plane, Complex z);

// Jump across the cut c_k: (value on sheet k) - (value on sheet k-1).
Complex discontinuity(const AnalyticRep& rep, const SheetedPlane& plane, int kappa, Complex z);

struct QuadratureSpec {
    int radial_nodes = 64;
    int angular_nodes = 64;
    double tol = 1e-4;
};

/*
 * <g|f> = (s/pi) integral of g*(z) f(z) (1+|z|^{2l})^{1-s} dmu_l(z) with
 * dmu_l = l^2 |z|^{2(l-1)} (1+|z|^{2l})^{-2} dz_R dz_I, evaluated sheet by
 * sheet with Gauss-Legendre nodes in u = |z|^{2l}/(1+|z|^{2l}) and uniform
 * angular nodes strictly inside each sheet. The value at doubled resolution
 * must agree within spec.tol, otherwise QuadratureNotConverged.
 */
Complex inner_product_numeric(const AnalyticRep& bra, const AnalyticRep& ket,
                              const SheetedPlane& plane, const QuadratureSpec& spec = {});

// Rep of the argument-rotated function: result(z) = rep(z theta^kappa),
// i.e. coefficient columns cyclically shifted by kappa.
AnalyticRep frobenius_action(const AnalyticRep& rep, const SheetedPlane& plane, int kappa);

}  // namespace gqs
