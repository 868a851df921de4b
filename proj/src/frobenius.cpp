#include "gqs/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace gqs {

double ConjugationCheck::max_residual() const {
    return std::max({x_residual, z_residual, d_residual});
}

namespace {

bool lex_less(const FieldElement& a, const FieldElement& b) {
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(),
                                         b.coeffs.begin(), b.coeffs.end());
}

void require_prime_or_trivial_ell(int ell) {
    if (ell > 1 && !is_prime(ell)) {
        throw NonPrimeEll("Frobenius layer structure needs prime ell, got " + std::to_string(ell));
    }
}

FrobeniusOrbit make_orbit(const GaloisSystem& sys, const FieldElement& start) {
    const auto& ctx = sys.field();
    std::vector<FieldElement> members = ctx.conjugates(start);
    std::vector<int> indices;
    for (const auto& m : members) indices.push_back(sys.index_of(m));
    return FrobeniusOrbit{start, std::move(members), std::move(indices), ctx.minimal_polynomial(start)};
}

}  // namespace

FrobeniusDecomposition FrobeniusDecomposition::build(const GaloisSystem& sys) {
    const auto& ctx = sys.field();
    require_prime_or_trivial_ell(ctx.ell());

    std::vector<FrobeniusOrbit> degree_ell, singletons;
    std::vector<bool> seen(sys.dim(), false);
    for (int idx = 0; idx < sys.dim(); ++idx) {
        if (seen[idx]) continue;
        const auto members = ctx.conjugates(ctx.from_index(idx));
        FieldElement rep = members.front();
        for (const auto& m : members) {
            seen[sys.index_of(m)] = true;
            if (lex_less(m, rep)) rep = m;
        }
        auto orbit = make_orbit(sys, rep);
        (orbit.members.size() == 1 ? singletons : degree_ell).push_back(std::move(orbit));
    }
    std::sort(degree_ell.begin(), degree_ell.end(),
              [](const auto& a, const auto& b) { return lex_less(a.representative, b.representative); });
    std::sort(singletons.begin(), singletons.end(),
              [](const auto& a, const auto& b) { return a.representative.coeffs[0] < b.representative.coeffs[0]; });

    const int s = static_cast<int>(degree_ell.size());
    for (auto& orbit : singletons) degree_ell.push_back(std::move(orbit));
    return FrobeniusDecomposition(sys, std::move(degree_ell), s);
}

FrobeniusDecomposition FrobeniusDecomposition::build_with_representatives(
    const GaloisSystem& sys, const std::vector<FieldElement>& representatives) {
    const auto& ctx = sys.field();
    require_prime_or_trivial_ell(ctx.ell());

    std::vector<FrobeniusOrbit> orbits;
    std::set<int> covered;
    for (const auto& rep : representatives) {
        auto orbit = make_orbit(sys, rep);
        if (static_cast<int>(orbit.members.size()) != ctx.ell()) {
            throw Error("representative " + std::to_string(sys.index_of(rep)) +
                        " does not have a full degree-ell orbit");
        }
        for (int idx : orbit.indices) {
            if (!covered.insert(idx).second) throw Error("representatives share a Frobenius orbit");
        }
        orbits.push_back(std::move(orbit));
    }
    const int s = static_cast<int>(orbits.size());
    const long long expected = (static_cast<long long>(sys.dim()) - ctx.p()) / ctx.ell();
    if (s != expected) {
        throw Error("expected " + std::to_string(expected) + " representatives, got " + std::to_string(s));
    }
    for (int value = 0; value < ctx.p(); ++value) {
        orbits.push_back(make_orbit(sys, ctx.scalar(value)));
    }
    return FrobeniusDecomposition(sys, std::move(orbits), s);
}

FrobeniusDecomposition FrobeniusDecomposition::with_rotation(Matrix u) const {
    if (u.rows() != sys_.dim() || u.cols() != sys_.dim()) {
        throw ContextMismatch("rotation operator has wrong dimension");
    }
    FrobeniusDecomposition out = *this;
    out.rotation_ = std::move(u);
    return out;
}

const Matrix& FrobeniusDecomposition::rotation() const {
    if (!rotation_) throw Error("decomposition carries no rotation");
    return *rotation_;
}

Matrix FrobeniusDecomposition::maybe_rotate(Matrix m) const {
    if (!rotation_) return m;
    return (*rotation_) * m * rotation_->adjoint();
}

Matrix FrobeniusDecomposition::projector(int i) const {
    if (i < 0 || i >= orbit_count()) throw IndexOutOfRange("orbit index out of range");
    Matrix pi = Matrix::Zero(sys_.dim(), sys_.dim());
    for (int idx : orbits_[i].indices) pi(idx, idx) = 1.0;
    return maybe_rotate(std::move(pi));
}

Matrix FrobeniusDecomposition::layer_a_projector() const {
    Matrix pa = Matrix::Zero(sys_.dim(), sys_.dim());
    for (int i = 0; i < s_; ++i) {
        for (int idx : orbits_[i].indices) pa(idx, idx) = 1.0;
    }
    return maybe_rotate(std::move(pa));
}

Matrix FrobeniusDecomposition::layer_b_projector() const {
    Matrix pb = Matrix::Zero(sys_.dim(), sys_.dim());
    for (int i = s_; i < orbit_count(); ++i) {
        for (int idx : orbits_[i].indices) pb(idx, idx) = 1.0;
    }
    return maybe_rotate(std::move(pb));
}

Matrix FrobeniusDecomposition::g_i(int i) const {
    if (i < 0 || i >= orbit_count()) throw IndexOutOfRange("orbit index out of range");
    const auto& idx = orbits_[i].indices;
    const int k = static_cast<int>(idx.size());
    Matrix g = Matrix::Zero(sys_.dim(), sys_.dim());
    for (int l = 0; l < k; ++l) {
        g(idx[(l + 1) % k], idx[l]) = 1.0;  // |X;m^{p^{l+1}}><X;m^{p^l}|
    }
    return maybe_rotate(std::move(g));
}

Matrix FrobeniusDecomposition::g_total() const {
    Matrix g = Matrix::Zero(sys_.dim(), sys_.dim());
    for (int i = 0; i < orbit_count(); ++i) {
        const auto& idx = orbits_[i].indices;
        const int k = static_cast<int>(idx.size());
        for (int l = 0; l < k; ++l) g(idx[(l + 1) % k], idx[l]) = 1.0;
    }
    return maybe_rotate(std::move(g));
}

void FrobeniusDecomposition::require_copy_layer() const {
    const int ell = sys_.field().ell();
    if (ell < 2 || !is_prime(ell) || s_ < 2) {
        throw NonPrimeEll("copy subspaces need prime ell >= 2 with s >= 2");
    }
}

CopySubspace FrobeniusDecomposition::copy_subspace(int kappa) const {
    require_copy_layer();
    const int ell = sys_.field().ell();
    kappa %= ell;
    if (kappa < 0) kappa += ell;
    CopySubspace cs;
    cs.kappa = kappa;
    for (int i = 0; i < s_; ++i) {
        // members are ordered [m, m^p, ...], so slot kappa is the p^kappa power
        cs.basis_labels.push_back(orbits_[i].members[kappa]);
        cs.basis_indices.push_back(orbits_[i].indices[kappa]);
    }
    return cs;
}

std::vector<CopySubspace> FrobeniusDecomposition::copy_subspaces() const {
    require_copy_layer();
    std::vector<CopySubspace> all;
    for (int kappa = 0; kappa < sys_.field().ell(); ++kappa) all.push_back(copy_subspace(kappa));
    return all;
}

Matrix FrobeniusDecomposition::copy_projector(int kappa) const {
    const auto cs = copy_subspace(kappa);
    Matrix sigma = Matrix::Zero(sys_.dim(), sys_.dim());
    for (int idx : cs.basis_indices) sigma(idx, idx) = 1.0;
    return maybe_rotate(std::move(sigma));
}

Vector FrobeniusDecomposition::basis_state(int kappa, int lambda) const {
    const auto cs = copy_subspace(kappa);
    if (lambda < 0 || lambda >= s_) throw IndexOutOfRange("copy-subspace slot out of range");
    Vector v = Vector::Zero(sys_.dim());
    v(cs.basis_indices[lambda]) = 1.0;
    if (rotation_) return (*rotation_) * v;
    return v;
}

Matrix FrobeniusDecomposition::fourier_sub(int kappa) const {
    const auto cs = copy_subspace(kappa);
    Matrix f = Matrix::Zero(sys_.dim(), sys_.dim());
    const double scale = 1.0 / std::sqrt(static_cast<double>(s_));
    for (int l = 0; l < s_; ++l) {
        for (int m = 0; m < s_; ++m) {
            f(cs.basis_indices[l], cs.basis_indices[m]) =
                scale * unit_root(s_, static_cast<long long>(l) * m);
        }
    }
    return maybe_rotate(std::move(f));
}

Matrix FrobeniusDecomposition::s_op(int kappa) const {
    const auto cs = copy_subspace(kappa);
    Matrix s = Matrix::Zero(sys_.dim(), sys_.dim());
    for (int l = 0; l < s_; ++l) {
        s(cs.basis_indices[(l + 1) % s_], cs.basis_indices[l]) = 1.0;
    }
    return maybe_rotate(std::move(s));
}

Matrix FrobeniusDecomposition::r_op(int kappa) const {
    const auto cs = copy_subspace(kappa);
    Matrix r = Matrix::Zero(sys_.dim(), sys_.dim());
    for (int l = 0; l < s_; ++l) {
        r(cs.basis_indices[l], cs.basis_indices[l]) = unit_root(s_, l);
    }
    return maybe_rotate(std::move(r));
}

Vector FrobeniusDecomposition::dual_state(int kappa, int lambda) const {
    const auto cs = copy_subspace(kappa);
    if (lambda < 0 || lambda >= s_) throw IndexOutOfRange("dual-state label out of range");
    Vector v = Vector::Zero(sys_.dim());
    const double scale = 1.0 / std::sqrt(static_cast<double>(s_));
    for (int m = 0; m < s_; ++m) {
        v(cs.basis_indices[m]) = scale * unit_root(s_, static_cast<long long>(lambda) * m);
    }
    if (rotation_) return (*rotation_) * v;
    return v;
}

Matrix FrobeniusDecomposition::position_sub_op(int kappa) const {
    const auto cs = copy_subspace(kappa);
    Matrix r = Matrix::Zero(sys_.dim(), sys_.dim());
    for (int l = 0; l < s_; ++l) r(cs.basis_indices[l], cs.basis_indices[l]) = static_cast<double>(l);
    return maybe_rotate(std::move(r));
}

Matrix FrobeniusDecomposition::momentum_sub_op(int kappa) const {
    const Matrix f = fourier_sub(kappa);
    return f * position_sub_op(kappa) * f.adjoint();
}

Matrix FrobeniusDecomposition::momentum_sub_op_kernel(int kappa) const {
    // (2 pi i s)^{-1} Delta_1(l - m) with Delta_1(l) = 2 pi i sum_k k Omega(k l),
    // i.e. matrix elements s^{-1} sum_k k Omega(k(l - m)).
    const auto cs = copy_subspace(kappa);
    Matrix g = Matrix::Zero(sys_.dim(), sys_.dim());
    for (int l = 0; l < s_; ++l) {
        for (int m = 0; m < s_; ++m) {
            Complex acc{0.0, 0.0};
            for (int k = 0; k < s_; ++k) {
                acc += static_cast<double>(k) * unit_root(s_, static_cast<long long>(k) * (l - m));
            }
            g(cs.basis_indices[l], cs.basis_indices[m]) = acc / static_cast<double>(s_);
        }
    }
    return maybe_rotate(std::move(g));
}

Vector FrobeniusDecomposition::stroboscopic_evolve(int kappa, const Vector& state, long long n,
                                                   double tol) const {
    if (state.size() != sys_.dim()) throw ContextMismatch("state has wrong dimension");
    const Matrix sigma = copy_projector(kappa);
    const double residual = (state - sigma * state).norm();
    if (residual >= tol) {
        throw StateOutsideSubspace("state lies outside the copy subspace (residual " +
                                   std::to_string(residual) + ")");
    }
    long long k = n % s_;
    if (k < 0) k += s_;
    Vector evolved = state;
    const Matrix s = s_op(kappa);
    for (long long i = 0; i < k; ++i) evolved = s * evolved;
    return evolved;
}

ConjugationCheck verify_conjugation(const FrobeniusDecomposition& dec, const FieldElement& alpha,
                                    const FieldElement& beta, int lambda) {
    const auto& sys = dec.system();
    const auto& ctx = sys.field();
    if (lambda < 0 || lambda >= ctx.ell()) throw IndexOutOfRange("lambda out of range");

    long long p_lambda = 1;
    for (int i = 0; i < lambda; ++i) p_lambda *= ctx.p();
    const FieldElement h_factor = ctx.pow(ctx.planck(), p_lambda - 1);
    const FieldElement alpha_conj = ctx.mul(ctx.frobenius_power(alpha, lambda), h_factor);
    const FieldElement beta_conj = ctx.frobenius_power(beta, lambda);

    const Matrix g = matrix_power(dec.g_total(), lambda);
    auto transported = [&](const Matrix& op) -> Matrix { return g * op * g.adjoint(); };
    auto in_frame = [&](Matrix op) -> Matrix {
        if (dec.rotated()) return dec.rotation() * op * dec.rotation().adjoint();
        return op;
    };

    ConjugationCheck check{};
    check.x_residual = max_abs_diff(transported(in_frame(sys.x_pow(beta))), in_frame(sys.x_pow(beta_conj)));
    check.z_residual = max_abs_diff(transported(in_frame(sys.z_pow(alpha))), in_frame(sys.z_pow(alpha_conj)));
    check.d_residual = max_abs_diff(transported(in_frame(sys.displacement(alpha, beta))),
                                    in_frame(sys.displacement(alpha_conj, beta_conj)));
    return check;
}

}  // namespace gqs
