// Acceptance suite: every criterion prints one PASS/FAIL line with its
// residual and elapsed time, and the binary exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gqs/analytic_rep.hpp"
#include "gqs/frobenius.hpp"
#include "gqs/galois_system.hpp"
#include "gqs/zp_poly.hpp"

using namespace gqs;

namespace {

struct Criterion {
    std::string name;
    double time_limit_seconds;
    std::function<double()> residual;  // max residual; pass if <= tolerance
    double tolerance;
};

FieldContext gf9(std::vector<int> h = {1, 0}) {
    return FieldContext::build(3, 2, IrreduciblePoly{{2, 1}}, FieldElement{std::move(h)});
}

double int_table_residual(const std::vector<std::vector<int>>& got,
                          const std::vector<std::vector<int>>& want, int p) {
    double residual = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        for (std::size_t j = 0; j < want[i].size(); ++j) {
            const int canonical = ((want[i][j] % p) + p) % p;
            residual = std::max(residual, std::abs(static_cast<double>(got[i][j] - canonical)));
        }
    }
    return residual;
}

double criterion_tables_h1() {
    const auto ctx = gf9();
    double r = int_table_residual(ctx.frobenius_matrix(), {{1, -1}, {0, -1}}, 3);
    r = std::max(r, int_table_residual({ctx.trace_table()}, {{-1, -1, 0}}, 3));
    r = std::max(r, int_table_residual(ctx.g_matrix(), {{-1, -1}, {-1, 0}}, 3));
    r = std::max(r, int_table_residual(ctx.G_matrix(), {{0, -1}, {-1, 1}}, 3));
    return r;
}

double criterion_tables_h1e() {
    const auto ctx = gf9({1, 1});
    double r = int_table_residual({ctx.trace_table()}, {{1, -1, -1}}, 3);
    r = std::max(r, int_table_residual(ctx.g_matrix(), {{1, -1}, {-1, -1}}, 3));
    r = std::max(r, int_table_residual(ctx.G_matrix(), {{-1, 1}, {1, 1}}, 3));
    return r;
}

double criterion_momentum_states() {
    const GaloisSystem sys1{gf9()};
    const auto m = sys1.field().from_coeffs({1, 1});
    double r = max_abs_diff(sys1.fourier() * sys1.position_state(m),
                            tensor_state({momentum_state(3, 1), momentum_state(3, 2)}));
    const GaloisSystem sys2{gf9({1, 1})};
    r = std::max(r, max_abs_diff(sys2.fourier() * sys2.position_state(m),
                                 tensor_state({momentum_state(3, 0), momentum_state(3, 1)})));
    return r;
}

double criterion_fourier_order() {
    const std::vector<FieldContext> contexts{
        gf9(),
        gf9({1, 1}),
        FieldContext::build(3, 3, IrreduciblePoly{{2, 2, 0}}, FieldElement{{1, 0, 0}}),
        FieldContext::build(3, 3, IrreduciblePoly{{2, 2, 0}}, FieldElement{{0, 1, 0}}),
        FieldContext::build(5, 2, IrreduciblePoly{{2, 0}}, FieldElement{{1, 0}}),
        FieldContext::build(5, 2, IrreduciblePoly{{2, 0}}, FieldElement{{3, 2}}),
        FieldContext::build(7, 2, IrreduciblePoly{{1, 0}}, FieldElement{{1, 0}}),
        FieldContext::build(7, 2, IrreduciblePoly{{1, 0}}, FieldElement{{4, 6}}),
    };
    double r = 0.0;
    for (const auto& ctx : contexts) {
        const auto start = std::chrono::steady_clock::now();
        const GaloisSystem sys{ctx};
        const Matrix f = sys.fourier();
        const Matrix identity = Matrix::Identity(sys.dim(), sys.dim());
        r = std::max({r, max_abs_diff(f * f.adjoint(), identity),
                      max_abs_diff(matrix_power(f, 4), identity)});
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (elapsed.count() > 5.0) return 1.0;  // per-system build+check budget
    }
    return r;
}

double criterion_commutation_and_factorization() {
    const GaloisSystem sys{gf9()};
    const auto& ctx = sys.field();
    double r = 0.0;
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            const auto alpha = sys.label(i);
            const auto beta = sys.label(j);
            const Matrix lhs = sys.x_pow(beta) * sys.z_pow(alpha);
            const Matrix rhs = unit_root(3, -ctx.trace_product(alpha, beta)) *
                               (sys.z_pow(alpha) * sys.x_pow(beta));
            r = std::max(r, max_abs_diff(lhs, rhs));

            const auto dual = ctx.dual_components(alpha);
            r = std::max(r, max_abs_diff(sys.displacement(alpha, beta),
                                         tensor_factors({displacement_zd(3, dual[0], beta.coeffs[0]),
                                                         displacement_zd(3, dual[1], beta.coeffs[1])})));
        }
    }
    return r;
}

double criterion_irreducible_enumeration() {
    const auto e32 = enumerate_irreducibles(3, 2);
    std::set<std::vector<int>> got, want;
    for (const auto& f : e32.degree_ell) got.insert(f.coeffs());
    want.insert({2, 2, 1});  // y^2 + 2y + 2
    want.insert({2, 1, 1});  // y^2 + y + 2
    want.insert({1, 0, 1});  // y^2 + 1
    if (got != want || e32.s != 3) return 1.0;

    for (const auto [p, ell] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 2}}) {
        const auto e = enumerate_irreducibles(p, ell);
        ZpPoly layer_a = ZpPoly::one(p);
        for (const auto& f : e.degree_ell) layer_a = layer_a * f;
        ZpPoly layer_b = ZpPoly::one(p);
        for (const auto& f : e.linear) layer_b = layer_b * f;
        long long d = 1;
        for (int i = 0; i < ell; ++i) d *= p;
        const ZpPoly y_p = ZpPoly::monomial(p, p) - ZpPoly::monomial(p, 1);
        const ZpPoly y_d = ZpPoly::monomial(p, static_cast<int>(d)) - ZpPoly::monomial(p, 1);
        if (!(layer_b == y_p)) return 1.0;
        if (!(layer_a * layer_b == y_d)) return 1.0;
        const auto division = y_d.divmod(y_p);
        if (!division.remainder.is_zero() || !(layer_a == division.quotient)) return 1.0;
    }
    return 0.0;
}

double criterion_frobenius_subspaces() {
    const GaloisSystem sys{gf9()};
    const auto dec = FrobeniusDecomposition::build(sys);

    std::set<std::set<int>> got;
    for (const auto& orbit : dec.orbits()) {
        got.insert(std::set<int>(orbit.indices.begin(), orbit.indices.end()));
    }
    const std::set<std::set<int>> want{{4, 6}, {3, 8}, {5, 7}, {0}, {1}, {2}};
    if (got != want) return 1.0;

    Matrix expected = Matrix::Zero(9, 9);
    expected(4, 6) = expected(6, 4) = 1.0;
    expected(3, 8) = expected(8, 3) = 1.0;
    expected(7, 5) = expected(5, 7) = 1.0;
    expected(0, 0) = expected(1, 1) = expected(2, 2) = 1.0;
    const Matrix g = dec.g_total();
    return std::max(max_abs_diff(g, expected), max_abs_diff(g * g, Matrix::Identity(9, 9)));
}

double criterion_conjugation_identities() {
    double r = 0.0;
    for (const auto& ctx : {gf9(), gf9({1, 1})}) {
        const GaloisSystem sys{ctx};
        const auto dec = FrobeniusDecomposition::build(sys);
        for (int lambda = 0; lambda < 2; ++lambda) {
            for (int i = 0; i < 9; ++i) {
                for (int j = 0; j < 9; ++j) {
                    r = std::max(r, verify_conjugation(dec, sys.label(i), sys.label(j), lambda)
                                        .max_residual());
                }
            }
        }
    }
    const GaloisSystem sys27{
        FieldContext::build(3, 3, IrreduciblePoly{{2, 2, 0}}, FieldElement{{0, 1, 0}})};
    const auto dec27 = FrobeniusDecomposition::build(sys27);
    std::mt19937 rng(890);
    std::uniform_int_distribution<int> dist(0, 26), lambda_dist(0, 2);
    for (int t = 0; t < 100; ++t) {
        r = std::max(r, verify_conjugation(dec27, sys27.label(dist(rng)), sys27.label(dist(rng)),
                                           lambda_dist(rng))
                            .max_residual());
    }
    return r;
}

double criterion_subspace_operators() {
    const GaloisSystem sys{gf9()};
    const auto& ctx = sys.field();
    // the copy subspaces exactly as listed for GF(9): representatives 1+e, e, 1+2e
    const auto dec = FrobeniusDecomposition::build_with_representatives(
        sys, {ctx.from_coeffs({1, 1}), ctx.from_coeffs({0, 1}), ctx.from_coeffs({1, 2})});

    Matrix s0 = Matrix::Zero(9, 9);
    s0(3, 4) = s0(7, 3) = s0(4, 7) = 1.0;
    Matrix r0 = Matrix::Zero(9, 9);
    r0(4, 4) = 1.0;
    r0(3, 3) = unit_root(3, 1);
    r0(7, 7) = unit_root(3, 2);
    Matrix s1 = Matrix::Zero(9, 9);
    s1(8, 6) = s1(5, 8) = s1(6, 5) = 1.0;
    Matrix r1 = Matrix::Zero(9, 9);
    r1(6, 6) = 1.0;
    r1(8, 8) = unit_root(3, 1);
    r1(5, 5) = unit_root(3, 2);

    double r = std::max({max_abs_diff(dec.s_op(0), s0), max_abs_diff(dec.r_op(0), r0),
                         max_abs_diff(dec.s_op(1), s1), max_abs_diff(dec.r_op(1), r1)});
    for (int kappa = 0; kappa < 2; ++kappa) {
        const Matrix s = dec.s_op(kappa);
        const Matrix rr = dec.r_op(kappa);
        r = std::max(r, max_abs_diff(matrix_power(s, 3), dec.copy_projector(kappa)));
        for (int l = 0; l < 3; ++l) {
            for (int m = 0; m < 3; ++m) {
                const Matrix lhs = matrix_power(s, l) * matrix_power(rr, m);
                const Matrix rhs = unit_root(3, -l * m) * (matrix_power(rr, m) * matrix_power(s, l));
                r = std::max(r, max_abs_diff(lhs, rhs));
            }
        }
    }
    return r;
}

double criterion_character_sums() {
    // 729 brute-force sums of 9 terms: every (m, r) pair and lambda = 0..8
    // (the Frobenius exponent wraps modulo ell)
    const auto ctx = gf9();
    double r = 0.0;
    for (int lambda = 0; lambda < 9; ++lambda) {
        for (int i = 0; i < 9; ++i) {
            for (int j = 0; j < 9; ++j) {
                const auto m = ctx.from_index(i);
                const auto target = ctx.from_index(j);
                const Complex value = ctx.character_sum(m, target, lambda);
                const double expected = (ctx.frobenius_power(m, lambda) == target) ? 1.0 : 0.0;
                r = std::max(r, std::abs(value - expected));
            }
        }
    }
    return r;
}

double criterion_analytic_representation() {
    const GaloisSystem sys{gf9()};
    const auto dec = FrobeniusDecomposition::build(sys);
    const SheetedPlane plane{2, 3};

    std::vector<AnalyticRep> reps;
    for (int kappa = 0; kappa < 2; ++kappa) {
        for (int lambda = 0; lambda < 3; ++lambda) {
            reps.push_back(represent(dec, dec.basis_state(kappa, lambda)));
        }
    }
    double gram = 0.0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = 0; j < reps.size(); ++j) {
            const Complex ip = inner_product_numeric(reps[i], reps[j], plane, {64, 64, 1e-4});
            gram = std::max(gram, std::abs(ip - (i == j ? 1.0 : 0.0)));
        }
    }
    if (gram > 1e-4) return 1.0;

    std::mt19937 rng(1111);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector state(9);
    for (int i = 0; i < 9; ++i) state(i) = Complex{normal(rng), normal(rng)};
    state = dec.layer_a_projector() * state;
    state /= state.norm();
    const auto rep = represent(dec, state);
    const auto rotated = frobenius_action(rep, plane, 1);
    double square = 0.0;
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    int points = 0;
    while (points < 100) {
        const Complex z{coord(rng), coord(rng)};
        try {
            square = std::max(square,
                              std::abs(evaluate(rotated, plane, z) - evaluate(rep, plane, z * plane.theta())));
        } catch (const OnCut&) {
            continue;
        }
        ++points;
    }
    return square;
}

double criterion_stroboscopic() {
    const GaloisSystem sys{gf9()};
    const auto dec = FrobeniusDecomposition::build(sys);
    const Matrix sigma = dec.copy_projector(0);
    std::mt19937 rng(2024);
    std::normal_distribution<double> normal(0.0, 1.0);
    double r = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        Vector state(9);
        for (int i = 0; i < 9; ++i) state(i) = Complex{normal(rng), normal(rng)};
        state = sigma * state;
        state /= state.norm();
        for (int n = 0; n <= 12; ++n) {
            const Vector evolved = dec.stroboscopic_evolve(0, state, n);
            r = std::max(r, (evolved - sigma * evolved).norm());
            if (n % 3 == 0) r = std::max(r, max_abs_diff(evolved, state));
        }
    }
    return r;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1 GF(9) h=1 tables C, E, g, G match exactly", 1.0, criterion_tables_h1, 0.0},
        {"2 GF(9) h=1+e tables E, g, G match exactly", 1.0, criterion_tables_h1e, 0.0},
        {"3 momentum states factorize per worked example", 5.0, criterion_momentum_states, 1e-10},
        {"4 F^4 = 1 for (3,2) (3,3) (5,2) (7,2), two h each", 40.0, criterion_fourier_order, 1e-10},
        {"5 Weyl commutation and displacement factorization, 81 pairs", 10.0,
         criterion_commutation_and_factorization, 1e-10},
        {"6 irreducible enumeration and product identities", 5.0, criterion_irreducible_enumeration, 0.0},
        {"7 Frobenius subspaces and G for GF(9)", 5.0, criterion_frobenius_subspaces, 1e-10},
        {"8 conjugation identities, exhaustive GF(9) + 100 GF(27) triples", 60.0,
         criterion_conjugation_identities, 1e-10},
        {"9 subspace operators S_0 R_0 S_1 R_1 and Heisenberg-Weyl", 5.0,
         criterion_subspace_operators, 1e-10},
        {"10 character-sum delta pattern, all (m, r, lambda)", 1.0, criterion_character_sums, 1e-10},
        {"11 analytic representation: gram identity and commuting square", 30.0,
         criterion_analytic_representation, 1e-10},
        {"12 stroboscopic evolution stays in the subspace and returns", 10.0,
         criterion_stroboscopic, 1e-10},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        double residual = 1.0;
        std::string error;
        try {
            residual = criterion.residual();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        const bool pass =
            error.empty() && residual <= criterion.tolerance && elapsed.count() <= criterion.time_limit_seconds;
        if (!pass) ++failures;
        std::printf("%s criterion %s  residual=%.3e  time=%.2fs%s%s\n", pass ? "PASS" : "FAIL",
                    criterion.name.c_str(), residual, elapsed.count(), error.empty() ? "" : "  error: ",
                    error.c_str());
    }
    if (failures == 0) {
        std::printf("ACCEPTANCE PASS (12/12)\n");
    } else {
        std::printf("ACCEPTANCE FAIL (%d criteria failed)\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
