#include "gqs/analytic_rep.hpp"

#include <cmath>
#include <numbers>

#include "gqs/gauss_legendre.hpp"

namespace gqs {

SheetedPlane::SheetedPlane(int ell, int s) : ell(ell), s(s) {
    if (ell < 1) throw InvalidDimension("sheet count must be positive");
    if (s < 1) throw InvalidDimension("subspace dimension must be positive");
    if (s % 2 == 0) throw EvenS("only the Bose case of odd s is supported");
}

double coherent_weight(int s, int lambda) {
    if (lambda < 0 || lambda >= s) throw IndexOutOfRange("coherent weight index out of range");
    double binom = 1.0;
    for (int k = 0; k < lambda; ++k) {
        binom *= static_cast<double>(s - 1 - k) / static_cast<double>(k + 1);
    }
    return std::sqrt(binom);
}

int sheet_number(const SheetedPlane& plane, Complex z) {
    if (z == Complex{0.0, 0.0}) throw OnCut("z = 0 is the branch point shared by all cuts");
    double arg = std::atan2(z.imag(), z.real());
    if (arg < 0.0) arg += 2.0 * std::numbers::pi;
    const double scaled = plane.ell * arg / (2.0 * std::numbers::pi);
    double sheet = std::floor(scaled);
    if (sheet >= plane.ell) sheet = plane.ell - 1;  // arg rounded up to 2 pi
    if (scaled == sheet) throw OnCut("arg(z) lies exactly on a cut ray");
    return static_cast<int>(sheet);
}

AnalyticRep represent(const FrobeniusDecomposition& dec, const Vector& state, double tol) {
    const int s = dec.s();
    const int ell = dec.system().field().ell();
    if (s % 2 == 0) throw EvenS("only the Bose case of odd s is supported");
    if (state.size() != dec.system().dim()) throw ContextMismatch("state has wrong dimension");

    const double outside = (dec.layer_b_projector() * state).norm();
    if (outside >= tol) {
        throw StateOutsideHA("state has H_B component of norm " + std::to_string(outside));
    }

    AnalyticRep rep;
    rep.coeffs.resize(s, ell);
    for (int kappa = 0; kappa < ell; ++kappa) {
        for (int lambda = 0; lambda < s; ++lambda) {
            rep.coeffs(lambda, kappa) = dec.basis_state(kappa, lambda).dot(state);
        }
    }
    return rep;
}

Complex evaluate_on_sheet(const AnalyticRep& rep, int kappa, Complex z) {
    const int ell = rep.ell();
    kappa %= ell;
    if (kappa < 0) kappa += ell;
    const Complex w = std::pow(z, ell);
    Complex power{1.0, 0.0};
    Complex acc{0.0, 0.0};
    for (int lambda = 0; lambda < rep.s(); ++lambda) {
        acc += coherent_weight(rep.s(), lambda) * rep.coeffs(lambda, kappa) * power;
        power *= w;
    }
    return acc;
}

Complex evaluate(const AnalyticRep& rep, const SheetedPlane& plane, Complex z) {
    return evaluate_on_sheet(rep, sheet_number(plane, z), z);
}

Complex discontinuity(const AnalyticRep& rep, const SheetedPlane& plane, int kappa, Complex z) {
    const int ell = plane.ell;
    kappa %= ell;
    if (kappa < 0) kappa += ell;
    const int prev = (kappa + ell - 1) % ell;
    return evaluate_on_sheet(rep, kappa, z) - evaluate_on_sheet(rep, prev, z);
}

namespace {

Complex quadrature_pass(const AnalyticRep& bra, const AnalyticRep& ket, const SheetedPlane& plane,
                        int radial_nodes, int angular_nodes) {
    const int ell = plane.ell;
    const int s = plane.s;
    const GaussLegendreRule radial = gauss_legendre_unit(radial_nodes);

    // radius from the compactified variable u = |z|^{2l} / (1 + |z|^{2l})
    std::vector<double> radius(radial_nodes), weight(radial_nodes);
    for (int i = 0; i < radial_nodes; ++i) {
        const double u = radial.nodes[i];
        radius[i] = std::pow(u / (1.0 - u), 1.0 / (2.0 * ell));
        weight[i] = radial.weights[i] * std::pow(1.0 - u, s - 1);
    }

    const double sheet_width = 2.0 * std::numbers::pi / ell;
    const double angular_weight = sheet_width / angular_nodes;

    Complex acc{0.0, 0.0};
    for (int kappa = 0; kappa < ell; ++kappa) {
        for (int j = 0; j < angular_nodes; ++j) {
            const double phi = sheet_width * (kappa + (j + 0.5) / angular_nodes);
            const Complex direction{std::cos(phi), std::sin(phi)};
            for (int i = 0; i < radial_nodes; ++i) {
                const Complex z = radius[i] * direction;
                acc += weight[i] * angular_weight *
                       std::conj(evaluate_on_sheet(bra, kappa, z)) * evaluate_on_sheet(ket, kappa, z);
            }
        }
    }
    return acc * (static_cast<double>(s) / std::numbers::pi) * (ell / 2.0);
}

}  // namespace

Complex inner_product_numeric(const AnalyticRep& bra, const AnalyticRep& ket,
                              const SheetedPlane& plane, const QuadratureSpec& spec) {
    if (bra.s() != plane.s || bra.ell() != plane.ell || ket.s() != plane.s || ket.ell() != plane.ell) {
        throw ContextMismatch("representation does not match the sheeted plane");
    }
    const Complex coarse = quadrature_pass(bra, ket, plane, spec.radial_nodes, spec.angular_nodes);
    const Complex fine = quadrature_pass(bra, ket, plane, 2 * spec.radial_nodes, 2 * spec.angular_nodes);
    if (std::abs(coarse - fine) > spec.tol) {
        throw QuadratureNotConverged("quadrature refinement moved by " + std::to_string(std::abs(coarse - fine)));
    }
    return fine;
}

AnalyticRep frobenius_action(const AnalyticRep& rep, const SheetedPlane& plane, int kappa) {
    const int ell = plane.ell;
    kappa %= ell;
    if (kappa < 0) kappa += ell;
    AnalyticRep out;
    out.coeffs.resize(rep.s(), ell);
    for (int col = 0; col < ell; ++col) {
        out.coeffs.col(col) = rep.coeffs.col((col + kappa) % ell);
    }
    return out;
}

}  // namespace gqs
