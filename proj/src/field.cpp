#include "gqs/field.hpp"

#include <cmath>
#include <numbers>

namespace gqs {

namespace {

// Gauss-Jordan inverse of a square matrix over Z_p.
std::vector<std::vector<int>> invert_mod_p(std::vector<std::vector<int>> m, int p) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw Error("singular matrix over Z_p");
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        const int scale = mod_inverse(m[col][col], p);
        for (int j = 0; j < n; ++j) {
            m[col][j] = static_cast<int>(static_cast<long long>(m[col][j]) * scale % p);
            inv[col][j] = static_cast<int>(static_cast<long long>(inv[col][j]) * scale % p);
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const int f = m[row][col];
            for (int j = 0; j < n; ++j) {
                m[row][j] = static_cast<int>(((m[row][j] - static_cast<long long>(f) * m[col][j]) % p + p) % p);
                inv[row][j] = static_cast<int>(((inv[row][j] - static_cast<long long>(f) * inv[col][j]) % p + p) % p);
            }
        }
    }
    return inv;
}

}  // namespace

FieldContext FieldContext::build(int p, int ell, IrreduciblePoly poly, FieldElement h) {
    if (!is_prime(p) || p == 2) {
        throw CompositeModulus("p must be an odd prime, got " + std::to_string(p));
    }
    if (ell < 1) throw Error("ell must be positive");
    if (static_cast<int>(poly.coeffs.size()) != ell) {
        throw ReduciblePolynomial("polynomial must have exactly ell non-leading coefficients");
    }

    std::vector<int> full = poly.coeffs;
    for (auto& c : full) {
        c %= p;
        if (c < 0) c += p;
    }
    poly.coeffs = full;
    full.push_back(1);
    if (!is_irreducible(ZpPoly(p, full))) {
        throw ReduciblePolynomial("polynomial " + ZpPoly(p, full).to_string() + " is reducible over Z_" + std::to_string(p));
    }

    FieldContext ctx;
    ctx.p_ = p;
    ctx.ell_ = ell;
    ctx.d_ = 1;
    for (int i = 0; i < ell; ++i) ctx.d_ *= p;
    ctx.poly_ = std::move(poly);

    // e^k reduced modulo the irreducible polynomial, k = 0 .. 2ell-2:
    // enough for schoolbook products of two degree-(ell-1) polynomials.
    ctx.eps_powers_.resize(std::max(2 * ell - 1, 1));
    for (int k = 0; k < static_cast<int>(ctx.eps_powers_.size()); ++k) {
        if (k < ell) {
            std::vector<int> c(ell, 0);
            c[k] = 1;
            ctx.eps_powers_[k] = FieldElement{std::move(c)};
        } else {
            // e^k = e * e^{k-1}, then substitute e^ell = -(c_0 + ... + c_{ell-1} e^{ell-1})
            const auto& prev = ctx.eps_powers_[k - 1].coeffs;
            std::vector<long long> shifted(ell + 1, 0);
            for (int j = 0; j < ell; ++j) shifted[j + 1] = prev[j];
            const long long top = shifted[ell];
            std::vector<int> c(ell, 0);
            for (int j = 0; j < ell; ++j) {
                long long v = shifted[j] - top * ctx.poly_.coeffs[j];
                v %= p;
                if (v < 0) v += p;
                c[j] = static_cast<int>(v);
            }
            ctx.eps_powers_[k] = FieldElement{std::move(c)};
        }
    }

    for (auto& c : h.coeffs) {
        c %= p;
        if (c < 0) c += p;
    }
    ctx.check_element(h);
    ctx.h_ = h;
    if (ctx.is_zero(h)) throw ZeroPlanck("inverse Planck constant must be nonzero");

    // C matrix: column mu holds the components of e^{mu p}.
    ctx.C_.assign(ell, std::vector<int>(ell, 0));
    for (int mu = 0; mu < ell; ++mu) {
        FieldElement ep = ctx.pow(ctx.eps_powers_[mu], p);
        for (int k = 0; k < ell; ++k) ctx.C_[k][mu] = ep.coeffs[k];
    }

    // E_lambda = Tr(h e^lambda), lambda = 0 .. 2ell-2 (the range g needs).
    ctx.E_vec_.resize(2 * ell - 1);
    for (int lambda = 0; lambda <= 2 * ell - 2; ++lambda) {
        ctx.E_vec_[lambda] = ctx.trace(ctx.mul(ctx.h_, ctx.eps_powers_[lambda]));
    }

    ctx.g_.assign(ell, std::vector<int>(ell, 0));
    for (int l = 0; l < ell; ++l) {
        for (int k = 0; k < ell; ++k) ctx.g_[l][k] = ctx.E_vec_[l + k];
    }
    ctx.G_ = invert_mod_p(ctx.g_, p);

    // Dual basis E_k = sum_l G_{k,l} e^l; duality Tr(h e^k E_l) = delta is
    // checked exactly as a construction guard.
    ctx.dual_basis_.resize(ell);
    for (int k = 0; k < ell; ++k) {
        std::vector<int> c(ell, 0);
        for (int l = 0; l < ell; ++l) c[l] = ctx.G_[k][l];
        ctx.dual_basis_[k] = FieldElement{std::move(c)};
    }
    for (int k = 0; k < ell; ++k) {
        for (int l = 0; l < ell; ++l) {
            const int t = ctx.trace(ctx.mul(ctx.mul(ctx.h_, ctx.eps_powers_[k]), ctx.dual_basis_[l]));
            if (t != (k == l ? 1 : 0)) throw Error("dual basis construction failed");
        }
    }
    return ctx;
}

void FieldContext::check_element(const FieldElement& a) const {
    if (static_cast<int>(a.coeffs.size()) != ell_) {
        throw ContextMismatch("element has " + std::to_string(a.coeffs.size()) +
                              " components, context expects " + std::to_string(ell_));
    }
    for (int c : a.coeffs) {
        if (c < 0 || c >= p_) throw ContextMismatch("component out of range [0, p)");
    }
}

FieldElement FieldContext::zero() const { return FieldElement{std::vector<int>(ell_, 0)}; }

FieldElement FieldContext::one() const { return scalar(1); }

FieldElement FieldContext::epsilon() const {
    std::vector<int> c(ell_, 0);
    if (ell_ > 1) {
        c[1] = 1;
    } else {
        c[0] = (p_ - poly_.coeffs[0]) % p_;  // root of the linear polynomial y + c_0
    }
    return FieldElement{std::move(c)};
}

FieldElement FieldContext::scalar(int value) const {
    value %= p_;
    if (value < 0) value += p_;
    std::vector<int> c(ell_, 0);
    c[0] = value;
    return FieldElement{std::move(c)};
}

FieldElement FieldContext::from_coeffs(std::vector<int> coeffs) const {
    if (static_cast<int>(coeffs.size()) > ell_) {
        throw ContextMismatch("too many components for ell = " + std::to_string(ell_));
    }
    coeffs.resize(ell_, 0);
    for (auto& c : coeffs) {
        c %= p_;
        if (c < 0) c += p_;
    }
    return FieldElement{std::move(coeffs)};
}

FieldElement FieldContext::from_index(int index) const {
    if (index < 0 || index >= d_) throw IndexOutOfRange("field index out of range");
    std::vector<int> c(ell_, 0);
    for (int k = 0; k < ell_; ++k) {
        c[k] = index % p_;
        index /= p_;
    }
    return FieldElement{std::move(c)};
}

int FieldContext::index_of(const FieldElement& a) const {
    check_element(a);
    int index = 0;
    for (int k = ell_ - 1; k >= 0; --k) index = index * p_ + a.coeffs[k];
    return index;
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    std::vector<int> c(ell_);
    for (int k = 0; k < ell_; ++k) c[k] = (a.coeffs[k] + b.coeffs[k]) % p_;
    return FieldElement{std::move(c)};
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    std::vector<int> c(ell_);
    for (int k = 0; k < ell_; ++k) c[k] = ((a.coeffs[k] - b.coeffs[k]) % p_ + p_) % p_;
    return FieldElement{std::move(c)};
}

FieldElement FieldContext::neg(const FieldElement& a) const {
    check_element(a);
    std::vector<int> c(ell_);
    for (int k = 0; k < ell_; ++k) c[k] = (p_ - a.coeffs[k]) % p_;
    return FieldElement{std::move(c)};
}

FieldElement FieldContext::reduce_product(const std::vector<long long>& raw) const {
    std::vector<long long> acc(ell_, 0);
    for (int k = 0; k < static_cast<int>(raw.size()); ++k) {
        if (raw[k] == 0) continue;
        const auto& ek = eps_powers_[k].coeffs;
        for (int j = 0; j < ell_; ++j) acc[j] += raw[k] % p_ * ek[j];
    }
    std::vector<int> c(ell_);
    for (int j = 0; j < ell_; ++j) c[j] = static_cast<int>((acc[j] % p_ + p_) % p_);
    return FieldElement{std::move(c)};
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    std::vector<long long> raw(2 * ell_ - 1, 0);
    for (int i = 0; i < ell_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < ell_; ++j) {
            raw[i + j] += static_cast<long long>(a.coeffs[i]) * b.coeffs[j];
        }
    }
    return reduce_product(raw);
}

FieldElement FieldContext::pow(const FieldElement& a, long long k) const {
    check_element(a);
    if (k < 0) throw Error("pow exponent must be non-negative");
    FieldElement result = one();
    FieldElement base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

FieldElement FieldContext::inv(const FieldElement& a) const {
    check_element(a);
    if (is_zero(a)) throw DivisionByZero("inverse of zero field element");
    return pow(a, static_cast<long long>(d_) - 2);
}

bool FieldContext::is_zero(const FieldElement& a) const {
    check_element(a);
    for (int c : a.coeffs) {
        if (c != 0) return false;
    }
    return true;
}

int FieldContext::trace(const FieldElement& a) const {
    check_element(a);
    FieldElement acc = zero();
    FieldElement conj = a;
    for (int k = 0; k < ell_; ++k) {
        acc = add(acc, conj);
        conj = pow(conj, p_);
    }
    for (int k = 1; k < ell_; ++k) {
        if (acc.coeffs[k] != 0) throw Error("trace left the base field");
    }
    return acc.coeffs[0];
}

FieldElement FieldContext::frobenius_power(const FieldElement& a, int lambda) const {
    check_element(a);
    lambda %= ell_;
    if (lambda < 0) lambda += ell_;
    // component action of C^lambda: C columns hold the images of e^mu
    std::vector<int> cur = a.coeffs;
    for (int step = 0; step < lambda; ++step) {
        std::vector<long long> next(ell_, 0);
        for (int mu = 0; mu < ell_; ++mu) {
            if (cur[mu] == 0) continue;
            for (int k = 0; k < ell_; ++k) next[k] += static_cast<long long>(C_[k][mu]) * cur[mu];
        }
        for (int k = 0; k < ell_; ++k) cur[k] = static_cast<int>(next[k] % p_);
    }
    return FieldElement{std::move(cur)};
}

std::vector<FieldElement> FieldContext::conjugates(const FieldElement& a) const {
    check_element(a);
    std::vector<FieldElement> orbit{a};
    FieldElement next = frobenius_power(a, 1);
    while (!(next == a)) {
        orbit.push_back(next);
        next = frobenius_power(next, 1);
    }
    return orbit;
}

std::vector<int> FieldContext::dual_components(const FieldElement& a) const {
    check_element(a);
    std::vector<int> dual(ell_);
    for (int l = 0; l < ell_; ++l) {
        dual[l] = trace(mul(mul(h_, a), eps_powers_[l]));
    }
    return dual;
}

FieldElement FieldContext::from_dual_components(const std::vector<int>& dual) const {
    if (static_cast<int>(dual.size()) != ell_) {
        throw ContextMismatch("dual component vector has wrong length");
    }
    std::vector<int> c(ell_, 0);
    for (int l = 0; l < ell_; ++l) {
        long long acc = 0;
        for (int k = 0; k < ell_; ++k) acc += static_cast<long long>(G_[l][k]) * dual[k];
        c[l] = static_cast<int>((acc % p_ + p_) % p_);
    }
    return FieldElement{std::move(c)};
}

int FieldContext::trace_product(const FieldElement& a, const FieldElement& b) const {
    return trace(mul(mul(h_, a), b));
}

Complex FieldContext::character(const FieldElement& a) const {
    const double angle = 2.0 * std::numbers::pi * trace(a) / p_;
    return Complex{std::cos(angle), std::sin(angle)};
}

Complex FieldContext::character_sum(const FieldElement& m, const FieldElement& r, int lambda) const {
    check_element(m);
    check_element(r);
    Complex acc{0.0, 0.0};
    for (int idx = 0; idx < d_; ++idx) {
        const FieldElement n = from_index(idx);
        const FieldElement term = sub(mul(n, m), mul(frobenius_power(n, lambda), r));
        const double angle = 2.0 * std::numbers::pi * trace(term) / p_;
        acc += Complex{std::cos(angle), std::sin(angle)};
    }
    return acc / static_cast<double>(d_);
}

ZpPoly FieldContext::minimal_polynomial(const FieldElement& a) const {
    // expand prod_k (y - a^{p^k}) over the orbit; coefficients land in Z_p
    const auto orbit = conjugates(a);
    std::vector<FieldElement> poly{one()};  // coefficients in GF(p^ell), low-to-high
    for (const auto& root : orbit) {
        std::vector<FieldElement> next(poly.size() + 1, zero());
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = add(next[k + 1], poly[k]);
            next[k] = sub(next[k], mul(root, poly[k]));
        }
        poly = std::move(next);
    }
    std::vector<int> base_coeffs(poly.size());
    for (std::size_t k = 0; k < poly.size(); ++k) {
        for (int j = 1; j < ell_; ++j) {
            if (poly[k].coeffs[j] != 0) throw Error("minimal polynomial left the base field");
        }
        base_coeffs[k] = poly[k].coeffs[0];
    }
    return ZpPoly(p_, std::move(base_coeffs));
}

}  // namespace gqs
