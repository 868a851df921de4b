// Command-line front end: reproducible tables, operator matrices and reports
// for Galois quantum systems. All output is deterministic (fixed field order,
// 17-significant-digit floats), so runs can be diffed byte for byte.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 quadrature
// non-convergence.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "gqs/analytic_rep.hpp"
#include "gqs/field.hpp"
#include "gqs/frobenius.hpp"
#include "gqs/galois_system.hpp"
#include "gqs/io.hpp"
#include "gqs/zp_poly.hpp"

namespace {

using namespace gqs;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string spec;
    std::string out = "-";
    std::string format;
    double tol = 1e-10;
    int quad_nodes = 64;
};

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output file '" + path + "'");
    file << content;
    if (!content.empty() && content.back() != '\n') file << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << file.rdbuf();
    return os.str();
}

void check_format(const CommonOptions& opts, const std::string& expected) {
    if (!opts.format.empty() && opts.format != expected) {
        throw UsageError("this command emits " + expected + ", not " + opts.format);
    }
}

std::string json_int_list(const std::vector<int>& values) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << values[i];
    }
    os << ']';
    return os.str();
}

std::string json_int_matrix(const std::vector<std::vector<int>>& rows) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ", ";
        os << json_int_list(rows[i]);
    }
    os << ']';
    return os.str();
}

std::string json_string_list(const std::vector<std::string>& values) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << '"' << values[i] << '"';
    }
    os << ']';
    return os.str();
}

// --- field-table -----------------------------------------------------------

std::string field_table_json(const FieldContext& ctx) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"p\": " << ctx.p() << ",\n";
    os << "  \"ell\": " << ctx.ell() << ",\n";
    os << "  \"dim\": " << ctx.dim() << ",\n";
    os << "  \"poly\": \"" << element_to_text(FieldElement{ctx.poly().coeffs}) << "\",\n";
    os << "  \"h\": \"" << element_to_text(ctx.planck()) << "\",\n";
    os << "  \"C\": " << json_int_matrix(ctx.frobenius_matrix()) << ",\n";
    os << "  \"E\": " << json_int_list(ctx.trace_table()) << ",\n";
    os << "  \"g\": " << json_int_matrix(ctx.g_matrix()) << ",\n";
    os << "  \"G\": " << json_int_matrix(ctx.G_matrix()) << ",\n";
    std::vector<std::string> dual;
    for (const auto& e : ctx.dual_basis()) dual.push_back(element_to_text(e));
    os << "  \"dual_basis\": " << json_string_list(dual) << ",\n";
    os << "  \"elements\": [\n";
    for (int i = 0; i < ctx.dim(); ++i) {
        const FieldElement a = ctx.from_index(i);
        std::vector<std::string> conj;
        for (const auto& c : ctx.conjugates(a)) conj.push_back(element_to_text(c));
        os << "    {\"index\": " << i << ", \"element\": \"" << element_to_text(a)
           << "\", \"trace\": " << ctx.trace(a)
           << ", \"dual_components\": " << json_int_list(ctx.dual_components(a))
           << ", \"conjugates\": " << json_string_list(conj)
           << ", \"minimal_polynomial\": \"" << poly_to_text(ctx.minimal_polynomial(a)) << "\"}";
        os << (i + 1 < ctx.dim() ? ",\n" : "\n");
    }
    os << "  ]\n}";
    return os.str();
}

// --- irreducibles ----------------------------------------------------------

std::string irreducibles_json(int p, int ell) {
    const auto e = enumerate_irreducibles(p, ell);
    std::vector<std::string> top, linear;
    for (const auto& f : e.degree_ell) top.push_back(poly_to_text(f));
    for (const auto& f : e.linear) linear.push_back(poly_to_text(f));
    std::ostringstream os;
    os << "{\n";
    os << "  \"p\": " << p << ",\n  \"ell\": " << ell << ",\n  \"s\": " << e.s << ",\n";
    os << "  \"degree_ell\": " << json_string_list(top) << ",\n";
    os << "  \"linear\": " << json_string_list(linear) << ",\n";
    os << "  \"count\": " << (e.degree_ell.size() + e.linear.size()) << "\n}";
    return os.str();
}

// --- operator --------------------------------------------------------------

Matrix build_operator(const GaloisSystem& sys, const std::string& which, const FieldElement& alpha,
                      const FieldElement& beta, int kappa) {
    if (which == "F") return sys.fourier();
    if (which == "tensorF") return sys.tensor_fourier();
    if (which == "Z") return sys.z_pow(alpha);
    if (which == "X") return sys.x_pow(beta);
    if (which == "D") return sys.displacement(alpha, beta);
    const auto dec = FrobeniusDecomposition::build(sys);
    if (which == "G") return dec.g_total();
    if (which == "S") return dec.s_op(kappa);
    if (which == "R") return dec.r_op(kappa);
    if (which == "r") return dec.position_sub_op(kappa);
    if (which == "g") return dec.momentum_sub_op(kappa);
    if (which == "Fsub") return dec.fourier_sub(kappa);
    throw UsageError("unknown operator '" + which + "'");
}

// --- frobenius-decompose ---------------------------------------------------

std::string decompose_json(const GaloisSystem& sys, bool emit_operators) {
    const auto dec = FrobeniusDecomposition::build(sys);
    const auto& ctx = sys.field();
    std::ostringstream os;
    os << "{\n";
    os << "  \"p\": " << ctx.p() << ",\n  \"ell\": " << ctx.ell() << ",\n";
    os << "  \"dim\": " << sys.dim() << ",\n  \"s\": " << dec.s() << ",\n";
    os << "  \"layer_a_count\": " << dec.s() << ",\n";
    os << "  \"layer_b_count\": " << (dec.orbit_count() - dec.s()) << ",\n";
    os << "  \"orbits\": [\n";
    for (int i = 0; i < dec.orbit_count(); ++i) {
        const auto& orbit = dec.orbits()[i];
        std::vector<std::string> members;
        for (const auto& m : orbit.members) members.push_back(element_to_text(m));
        os << "    {\"index\": " << i << ", \"size\": " << orbit.members.size()
           << ", \"representative\": \"" << element_to_text(orbit.representative)
           << "\", \"members\": " << json_string_list(members)
           << ", \"minimal_polynomial\": \"" << poly_to_text(orbit.minimal_poly) << "\"}"
           << (i + 1 < dec.orbit_count() ? ",\n" : "\n");
    }
    os << "  ]";

    const bool has_copies = ctx.ell() >= 2 && is_prime(ctx.ell()) && dec.s() >= 2;
    if (has_copies) {
        os << ",\n  \"copy_subspaces\": [\n";
        for (int kappa = 0; kappa < ctx.ell(); ++kappa) {
            const auto cs = dec.copy_subspace(kappa);
            std::vector<std::string> basis;
            for (const auto& m : cs.basis_labels) basis.push_back(element_to_text(m));
            os << "    {\"kappa\": " << kappa << ", \"basis\": " << json_string_list(basis) << "}"
               << (kappa + 1 < ctx.ell() ? ",\n" : "\n");
        }
        os << "  ]";
    }
    if (emit_operators) {
        os << ",\n  \"operators\": {\n";
        os << "    \"G\": " << matrix_to_json(dec.g_total());
        if (has_copies) {
            os << ",\n    \"S\": [";
            for (int kappa = 0; kappa < ctx.ell(); ++kappa) {
                if (kappa) os << ", ";
                os << matrix_to_json(dec.s_op(kappa));
            }
            os << "],\n    \"R\": [";
            for (int kappa = 0; kappa < ctx.ell(); ++kappa) {
                if (kappa) os << ", ";
                os << matrix_to_json(dec.r_op(kappa));
            }
            os << ']';
        }
        os << "\n  }";
    }
    os << "\n}";
    return os.str();
}

// --- invariants ------------------------------------------------------------

struct CheckLine {
    std::string name;
    double residual;
    double tol;
};

void field_suite(const FieldContext& ctx, std::vector<CheckLine>& lines, double tol) {
    const int ell = ctx.ell();

    // C^ell = 1 and C_{k,0} = delta(k,0), exact integers
    {
        std::vector<std::vector<int>> power(ell, std::vector<int>(ell, 0));
        for (int i = 0; i < ell; ++i) power[i][i] = 1;
        for (int step = 0; step < ell; ++step) {
            std::vector<std::vector<int>> next(ell, std::vector<int>(ell, 0));
            for (int i = 0; i < ell; ++i) {
                for (int j = 0; j < ell; ++j) {
                    long long acc = 0;
                    for (int k = 0; k < ell; ++k) {
                        acc += static_cast<long long>(ctx.frobenius_matrix()[i][k]) * power[k][j];
                    }
                    next[i][j] = static_cast<int>(acc % ctx.p());
                }
            }
            power = next;
        }
        double residual = 0.0;
        for (int i = 0; i < ell; ++i) {
            for (int j = 0; j < ell; ++j) {
                residual = std::max(residual, std::abs(power[i][j] - (i == j ? 1.0 : 0.0)));
            }
            residual = std::max(residual, std::abs(ctx.frobenius_matrix()[i][0] - (i == 0 ? 1.0 : 0.0)));
        }
        lines.push_back({"field.frobenius_matrix_order", residual, 0.5});
    }

    // Tr(h e^k E_l) = delta(k,l)
    {
        double residual = 0.0;
        FieldElement eps_power = ctx.one();
        for (int k = 0; k < ell; ++k) {
            for (int l = 0; l < ell; ++l) {
                const int t = ctx.trace(ctx.mul(ctx.mul(ctx.planck(), eps_power), ctx.dual_basis()[l]));
                residual = std::max(residual, std::abs(t - (k == l ? 1.0 : 0.0)));
            }
            eps_power = ctx.mul(eps_power, ctx.epsilon());
        }
        lines.push_back({"field.dual_basis_duality", residual, 0.5});
    }

    // abar = g a and a = G abar for every element
    {
        double residual = 0.0;
        for (int i = 0; i < ctx.dim(); ++i) {
            const auto a = ctx.from_index(i);
            const auto dual = ctx.dual_components(a);
            for (int l = 0; l < ell; ++l) {
                long long acc = 0;
                for (int k = 0; k < ell; ++k) acc += static_cast<long long>(ctx.g_matrix()[l][k]) * a.coeffs[k];
                residual = std::max(residual, std::abs(static_cast<double>(acc % ctx.p() - dual[l])));
            }
            if (!(ctx.from_dual_components(dual) == a)) residual = std::max(residual, 1.0);
        }
        lines.push_back({"field.component_transport", residual, 0.5});
    }

    // character orthogonality, the lambda = 0 delta pattern
    {
        double residual = 0.0;
        for (int i = 0; i < ctx.dim(); ++i) {
            for (int j = 0; j < ctx.dim(); ++j) {
                const Complex value = ctx.character_sum(ctx.from_index(i), ctx.from_index(j), 0);
                residual = std::max(residual, std::abs(value - (i == j ? 1.0 : 0.0)));
            }
        }
        lines.push_back({"field.character_orthogonality", residual, tol});
    }

    // product of all irreducibles = y^{p^ell} - y
    if (ell == 1 || is_prime(ell)) {
        const auto e = enumerate_irreducibles(ctx.p(), ell);
        ZpPoly product = ZpPoly::one(ctx.p());
        for (const auto& f : e.degree_ell) product = product * f;
        for (const auto& f : e.linear) product = product * f;
        const ZpPoly target = ZpPoly::monomial(ctx.p(), ctx.dim()) - ZpPoly::monomial(ctx.p(), 1);
        lines.push_back({"field.irreducible_product", product == target ? 0.0 : 1.0, 0.5});
    }
}

void fourier_suite(const GaloisSystem& sys, std::vector<CheckLine>& lines, double tol) {
    const Matrix f = sys.fourier();
    const Matrix identity = Matrix::Identity(sys.dim(), sys.dim());
    lines.push_back({"fourier.unitary", max_abs_diff(f * f.adjoint(), identity), tol});
    lines.push_back({"fourier.fourth_power", max_abs_diff(matrix_power(f, 4), identity), tol});

    double residual = 0.0;
    for (int i = 0; i < sys.dim(); ++i) {
        const auto m = sys.label(i);
        const auto dual = sys.field().dual_components(m);
        std::vector<Vector> factors;
        for (int k = 0; k < sys.field().ell(); ++k) {
            factors.push_back(momentum_state(sys.field().p(), dual[k]));
        }
        residual = std::max(residual, max_abs_diff(sys.momentum_state(m), tensor_state(factors)));
    }
    lines.push_back({"fourier.momentum_factorization", residual, tol});
}

void displacement_suite(const GaloisSystem& sys, std::vector<CheckLine>& lines, double tol) {
    const auto& ctx = sys.field();
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<int> dist(0, sys.dim() - 1);
    const bool exhaustive = sys.dim() <= 81;

    std::vector<std::pair<FieldElement, FieldElement>> pairs;
    if (exhaustive) {
        for (int i = 0; i < sys.dim(); ++i) {
            for (int j = 0; j < sys.dim(); ++j) pairs.emplace_back(sys.label(i), sys.label(j));
        }
    } else {
        for (int t = 0; t < 50; ++t) pairs.emplace_back(sys.label(dist(rng)), sys.label(dist(rng)));
    }

    double weyl = 0.0, factor = 0.0;
    for (const auto& [alpha, beta] : pairs) {
        const Matrix lhs = sys.x_pow(beta) * sys.z_pow(alpha);
        const Matrix rhs =
            unit_root(ctx.p(), -ctx.trace_product(alpha, beta)) * (sys.z_pow(alpha) * sys.x_pow(beta));
        weyl = std::max(weyl, max_abs_diff(lhs, rhs));

        const auto dual = ctx.dual_components(alpha);
        std::vector<Matrix> factors;
        for (int k = 0; k < ctx.ell(); ++k) {
            factors.push_back(displacement_zd(ctx.p(), dual[k], beta.coeffs[k]));
        }
        factor = std::max(factor, max_abs_diff(sys.displacement(alpha, beta), tensor_factors(factors)));
    }
    lines.push_back({"displacement.weyl_commutation", weyl, tol});
    lines.push_back({"displacement.tensor_factorization", factor, tol});

    double unitary = 0.0, composition = 0.0;
    const Matrix identity = Matrix::Identity(sys.dim(), sys.dim());
    for (int t = 0; t < 10; ++t) {
        const auto a1 = sys.label(dist(rng)), b1 = sys.label(dist(rng));
        const auto a2 = sys.label(dist(rng)), b2 = sys.label(dist(rng));
        const Matrix d1 = sys.displacement(a1, b1);
        unitary = std::max(unitary, max_abs_diff(d1 * d1.adjoint(), identity));
        const Matrix product = d1 * sys.displacement(a2, b2);
        const Matrix direct = sys.displacement(ctx.add(a1, a2), ctx.add(b1, b2));
        composition =
            std::max(composition, std::abs(std::abs((direct.adjoint() * product).trace()) - sys.dim()));
    }
    lines.push_back({"displacement.unitarity", unitary, tol});
    lines.push_back({"displacement.group_composition", composition, tol});
}

void frobenius_suite(const GaloisSystem& sys, std::vector<CheckLine>& lines, double tol) {
    const auto dec = FrobeniusDecomposition::build(sys);
    const auto& ctx = sys.field();
    const Matrix g = dec.g_total();
    const Matrix identity = Matrix::Identity(sys.dim(), sys.dim());

    lines.push_back({"frobenius.g_unitary", max_abs_diff(g * g.adjoint(), identity), tol});
    lines.push_back({"frobenius.g_order", max_abs_diff(matrix_power(g, ctx.ell()), identity), tol});

    double commute = 0.0;
    for (int i = 0; i < dec.orbit_count(); ++i) {
        const Matrix pi = dec.projector(i);
        commute = std::max(commute, max_abs_diff(g * pi, pi * g));
    }
    lines.push_back({"frobenius.projector_commutation", commute, tol});

    double conjugation = 0.0;
    if (sys.dim() <= 81) {
        for (int lambda = 0; lambda < ctx.ell(); ++lambda) {
            for (int i = 0; i < sys.dim(); ++i) {
                for (int j = 0; j < sys.dim(); ++j) {
                    conjugation =
                        std::max(conjugation,
                                 verify_conjugation(dec, sys.label(i), sys.label(j), lambda).max_residual());
                }
            }
        }
    } else {
        std::mt19937 rng(0xBEEF);
        std::uniform_int_distribution<int> dist(0, sys.dim() - 1);
        std::uniform_int_distribution<int> lambda_dist(0, ctx.ell() - 1);
        for (int t = 0; t < 100; ++t) {
            conjugation = std::max(
                conjugation,
                verify_conjugation(dec, sys.label(dist(rng)), sys.label(dist(rng)), lambda_dist(rng))
                    .max_residual());
        }
    }
    lines.push_back({"frobenius.displacement_conjugation", conjugation, tol});
}

void subspace_suite(const GaloisSystem& sys, std::vector<CheckLine>& lines, double tol) {
    const auto dec = FrobeniusDecomposition::build(sys);
    const auto& ctx = sys.field();
    const Matrix g = dec.g_total();
    const int s = dec.s();

    double hw = 0.0, order = 0.0, dual_route = 0.0, transport = 0.0, exponentials = 0.0;
    for (int kappa = 0; kappa < ctx.ell(); ++kappa) {
        const Matrix s_k = dec.s_op(kappa);
        const Matrix r_k = dec.r_op(kappa);
        const Matrix sigma = dec.copy_projector(kappa);

        order = std::max({order, max_abs_diff(matrix_power(s_k, s), sigma),
                          max_abs_diff(matrix_power(r_k, s), sigma)});
        for (int l = 0; l < s; ++l) {
            for (int m = 0; m < s; ++m) {
                const Matrix lhs = matrix_power(s_k, l) * matrix_power(r_k, m);
                const Matrix rhs = unit_root(s, -static_cast<long long>(l) * m) *
                                   (matrix_power(r_k, m) * matrix_power(s_k, l));
                hw = std::max(hw, max_abs_diff(lhs, rhs));
            }
        }
        dual_route = std::max(dual_route,
                              max_abs_diff(dec.momentum_sub_op(kappa), dec.momentum_sub_op_kernel(kappa)));

        const int next = (kappa + 1) % ctx.ell();
        transport = std::max(
            {transport,
             max_abs_diff(g * dec.position_sub_op(kappa) * g.adjoint(), dec.position_sub_op(next)),
             max_abs_diff(g * s_k * g.adjoint(), dec.s_op(next)),
             max_abs_diff(g * r_k * g.adjoint(), dec.r_op(next))});

        Matrix omega_r = Matrix::Zero(sys.dim(), sys.dim());
        Matrix omega_minus_g = Matrix::Zero(sys.dim(), sys.dim());
        for (int lambda = 0; lambda < s; ++lambda) {
            const Vector b = dec.basis_state(kappa, lambda);
            const Vector d = dec.dual_state(kappa, lambda);
            omega_r += unit_root(s, lambda) * (b * b.adjoint());
            omega_minus_g += unit_root(s, -lambda) * (d * d.adjoint());
        }
        exponentials =
            std::max({exponentials, max_abs_diff(omega_r, r_k), max_abs_diff(omega_minus_g, s_k)});
    }
    lines.push_back({"subspace.heisenberg_weyl", hw, tol});
    lines.push_back({"subspace.shift_order", order, tol});
    lines.push_back({"subspace.momentum_dual_route", dual_route, tol});
    lines.push_back({"subspace.g_transport", transport, tol});
    lines.push_back({"subspace.exponential_maps", exponentials, tol});
}

void analytic_suite(const GaloisSystem& sys, std::vector<CheckLine>& lines, double tol,
                    int quad_nodes) {
    const auto dec = FrobeniusDecomposition::build(sys);
    const SheetedPlane plane{sys.field().ell(), dec.s()};

    double gram = 0.0;
    std::vector<AnalyticRep> reps;
    for (int kappa = 0; kappa < plane.ell; ++kappa) {
        for (int lambda = 0; lambda < plane.s; ++lambda) {
            reps.push_back(represent(dec, dec.basis_state(kappa, lambda)));
        }
    }
    const QuadratureSpec spec{quad_nodes, quad_nodes, 1e-4};
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = 0; j < reps.size(); ++j) {
            const Complex ip = inner_product_numeric(reps[i], reps[j], plane, spec);
            gram = std::max(gram, std::abs(ip - (i == j ? 1.0 : 0.0)));
        }
    }
    lines.push_back({"analytic.gram_identity", gram, 1e-4});

    std::mt19937 rng(0xD1CE);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector state(sys.dim());
    for (int i = 0; i < sys.dim(); ++i) state(i) = Complex{normal(rng), normal(rng)};
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
            const Complex a = evaluate(rotated, plane, z);
            const Complex b = evaluate(rep, plane, z * plane.theta());
            square = std::max(square, std::abs(a - b));
        } catch (const OnCut&) {
            continue;
        }
        ++points;
    }
    lines.push_back({"analytic.frobenius_commuting_square", square, tol});
}

std::string run_invariants(const FieldContext& ctx, const std::string& suite, double tol,
                           int quad_nodes) {
    const GaloisSystem sys{ctx};
    std::vector<CheckLine> lines;
    std::vector<std::string> skipped;
    const bool all = suite == "all";

    const bool prime_ell = ctx.ell() == 1 || is_prime(ctx.ell());
    const bool has_copies = ctx.ell() >= 2 && is_prime(ctx.ell());

    if (all || suite == "field") field_suite(ctx, lines, tol);
    if (all || suite == "fourier") fourier_suite(sys, lines, tol);
    if (all || suite == "displacement") displacement_suite(sys, lines, tol);
    if (all || suite == "frobenius") {
        if (prime_ell) {
            frobenius_suite(sys, lines, tol);
        } else {
            skipped.push_back("frobenius (ell is composite)");
        }
    }
    if (all || suite == "subspace") {
        if (has_copies) {
            subspace_suite(sys, lines, tol);
        } else {
            skipped.push_back("subspace (needs prime ell >= 2)");
        }
    }
    if (all || suite == "analytic") {
        const long long s = has_copies ? (sys.dim() - ctx.p()) / ctx.ell() : 0;
        if (has_copies && s % 2 == 1) {
            analytic_suite(sys, lines, tol, quad_nodes);
        } else {
            skipped.push_back("analytic (needs prime ell >= 2 and odd s)");
        }
    }
    if (lines.empty() && skipped.empty()) throw UsageError("unknown suite '" + suite + "'");

    std::ostringstream os;
    bool ok = true;
    for (const auto& line : lines) {
        const bool pass = line.residual <= line.tol;
        ok = ok && pass;
        os << (pass ? "PASS " : "FAIL ") << line.name
           << " max_residual=" << format_double(line.residual) << '\n';
    }
    for (const auto& skip : skipped) os << "SKIP " << skip << '\n';
    os << (ok ? "RESULT PASS" : "RESULT FAIL");
    if (!ok) throw Error(os.str());
    return os.str();
}

// --- evolve / analytic state input -----------------------------------------

Vector load_state(const GaloisSystem& sys, const std::string& state_text,
                  const std::string& state_file) {
    if (!state_text.empty() && !state_file.empty()) {
        throw UsageError("give either --state or --state-file, not both");
    }
    if (!state_text.empty()) {
        return sys.position_state(element_from_text(sys.field(), state_text));
    }
    if (!state_file.empty()) {
        const Vector v = state_from_json(read_file(state_file));
        if (v.size() != sys.dim()) throw Error("state dimension does not match the system");
        if (std::abs(v.norm() - 1.0) > 1e-8) throw Error("state vector is not normalized");
        return v;
    }
    throw UsageError("a state is required (--state or --state-file)");
}

std::string analytic_csv(const FrobeniusDecomposition& dec, const Vector& state, int r_nodes,
                         int phi_nodes, double r_max, bool emit_discontinuity) {
    const SheetedPlane plane{dec.system().field().ell(), dec.s()};
    const auto rep = represent(dec, state);
    std::ostringstream os;
    if (emit_discontinuity) {
        os << "kappa,r,re,im\n";
        for (int kappa = 0; kappa < plane.ell; ++kappa) {
            for (int i = 0; i < r_nodes; ++i) {
                const double r = r_max * (i + 1) / r_nodes;
                const Complex z = r * std::pow(plane.theta(), kappa);
                const Complex jump = discontinuity(rep, plane, kappa, z);
                os << kappa << ',' << format_double(r) << ',' << format_double(jump.real()) << ','
                   << format_double(jump.imag()) << '\n';
            }
        }
        return os.str();
    }
    os << "sheet,r,phi,re,im\n";
    const double width = 2.0 * std::numbers::pi / plane.ell;
    for (int kappa = 0; kappa < plane.ell; ++kappa) {
        for (int j = 0; j < phi_nodes; ++j) {
            const double phi = width * (kappa + (j + 0.5) / phi_nodes);
            for (int i = 0; i < r_nodes; ++i) {
                const double r = r_max * i / std::max(r_nodes - 1, 1);
                const Complex value = evaluate_on_sheet(rep, kappa, std::polar(r, phi));
                os << kappa << ',' << format_double(r) << ',' << format_double(phi) << ','
                   << format_double(value.real()) << ',' << format_double(value.imag()) << '\n';
            }
        }
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois quantum systems toolkit"};
    app.require_subcommand(1);

    CommonOptions opts;
    auto add_common = [&](CLI::App* cmd, bool needs_spec = true) {
        if (needs_spec) {
            cmd->add_option("--spec", opts.spec, "system spec, e.g. p=3,l=2,poly=2,1,h=1,0")->required();
        }
        cmd->add_option("--out", opts.out, "output path or - for stdout");
        cmd->add_option("--format", opts.format, "output format (json or csv)")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--tol", opts.tol, "residual tolerance");
        cmd->add_option("--quad-nodes", opts.quad_nodes, "quadrature nodes per axis and sheet");
    };

    auto* cmd_field_table =
        app.add_subcommand("field-table", "field tables: C, E, g, G, dual basis, conjugates");
    add_common(cmd_field_table);

    int irr_p = 0, irr_ell = 0;
    auto* cmd_irreducibles =
        app.add_subcommand("irreducibles", "monic irreducible polynomials of degree dividing ell");
    cmd_irreducibles->add_option("-p,--prime", irr_p, "base prime")->required();
    cmd_irreducibles->add_option("-l,--ell", irr_ell, "extension degree")->required();
    add_common(cmd_irreducibles, false);

    std::string which, alpha_text, beta_text;
    int kappa = 0;
    auto* cmd_operator = app.add_subcommand("operator", "emit an operator matrix as JSON");
    add_common(cmd_operator);
    cmd_operator->add_option("--which", which, "F tensorF Z X D G S R r g Fsub")->required();
    cmd_operator->add_option("--alpha", alpha_text, "field element for Z and D");
    cmd_operator->add_option("--beta", beta_text, "field element for X and D");
    cmd_operator->add_option("--kappa", kappa, "copy-subspace index for S R r g Fsub");

    bool emit_operators = false;
    auto* cmd_decompose =
        app.add_subcommand("frobenius-decompose", "orbits, minimal polynomials and layer structure");
    add_common(cmd_decompose);
    cmd_decompose->add_flag("--emit-operators", emit_operators, "include G, S_k, R_k matrices");

    std::string suite = "all";
    auto* cmd_invariants = app.add_subcommand("invariants", "run property suites and report residuals");
    add_common(cmd_invariants);
    cmd_invariants->add_option("--suite", suite,
                               "all field fourier displacement frobenius subspace analytic");

    std::string state_text, state_file;
    long long steps = 0;
    auto* cmd_evolve = app.add_subcommand("evolve", "apply S_kappa^N to a copy-subspace state");
    add_common(cmd_evolve);
    cmd_evolve->add_option("--kappa", kappa, "copy-subspace index");
    cmd_evolve->add_option("--state", state_text, "position-state label, e.g. 1,1");
    cmd_evolve->add_option("--state-file", state_file, "state JSON file");
    cmd_evolve->add_option("--N", steps, "number of stroboscopic steps")->required();

    int r_nodes = 32, phi_nodes = 16;
    double r_max = 2.0;
    bool emit_discontinuity = false;
    auto* cmd_analytic =
        app.add_subcommand("analytic", "sample the analytic representation on a polar grid");
    add_common(cmd_analytic);
    cmd_analytic->add_option("--state", state_text, "position-state label in H_A");
    cmd_analytic->add_option("--state-file", state_file, "state JSON file");
    cmd_analytic->add_option("--r-nodes", r_nodes, "radial sample count");
    cmd_analytic->add_option("--phi-nodes", phi_nodes, "angular samples per sheet");
    cmd_analytic->add_option("--r-max", r_max, "largest sampled radius");
    cmd_analytic->add_flag("--discontinuity", emit_discontinuity, "emit cut discontinuities instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }

    try {
        if (cmd_field_table->parsed()) {
            check_format(opts, "json");
            write_output(opts.out, field_table_json(context_from_spec(opts.spec)));
        } else if (cmd_irreducibles->parsed()) {
            check_format(opts, "json");
            write_output(opts.out, irreducibles_json(irr_p, irr_ell));
        } else if (cmd_operator->parsed()) {
            check_format(opts, "json");
            const GaloisSystem sys{context_from_spec(opts.spec)};
            const FieldElement alpha =
                alpha_text.empty() ? sys.field().zero() : element_from_text(sys.field(), alpha_text);
            const FieldElement beta =
                beta_text.empty() ? sys.field().zero() : element_from_text(sys.field(), beta_text);
            write_output(opts.out, matrix_to_json(build_operator(sys, which, alpha, beta, kappa)));
        } else if (cmd_decompose->parsed()) {
            check_format(opts, "json");
            write_output(opts.out, decompose_json(GaloisSystem{context_from_spec(opts.spec)}, emit_operators));
        } else if (cmd_invariants->parsed()) {
            write_output(opts.out,
                         run_invariants(context_from_spec(opts.spec), suite, opts.tol, opts.quad_nodes));
        } else if (cmd_evolve->parsed()) {
            check_format(opts, "json");
            const GaloisSystem sys{context_from_spec(opts.spec)};
            const auto dec = FrobeniusDecomposition::build(sys);
            const Vector state = load_state(sys, state_text, state_file);
            write_output(opts.out, state_to_json(dec.stroboscopic_evolve(kappa, state, steps)));
        } else if (cmd_analytic->parsed()) {
            check_format(opts, "csv");
            const GaloisSystem sys{context_from_spec(opts.spec)};
            const auto dec = FrobeniusDecomposition::build(sys);
            const Vector state = load_state(sys, state_text, state_file);
            write_output(opts.out, analytic_csv(dec, state, r_nodes, phi_nodes, r_max, emit_discontinuity));
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const QuadratureNotConverged& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
