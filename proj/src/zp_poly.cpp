#include "gqs/zp_poly.hpp"

#include <algorithm>
#include <sstream>

namespace gqs {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

int mod_inverse(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw DivisionByZero("mod_inverse of 0 mod " + std::to_string(p));
    // Fermat: a^{p-2} mod p
    long long result = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(result);
}

ZpPoly::ZpPoly(int p, std::vector<int> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    if (p < 2) throw CompositeModulus("polynomial modulus must be at least 2");
    for (auto& c : coeffs_) {
        c %= p_;
        if (c < 0) c += p_;
    }
    normalize();
}

void ZpPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZpPoly ZpPoly::monomial(int p, int degree, int coeff) {
    std::vector<int> c(degree + 1, 0);
    c[degree] = coeff;
    return ZpPoly(p, std::move(c));
}

int ZpPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

ZpPoly ZpPoly::operator+(const ZpPoly& other) const {
    std::vector<int> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = (coeff(static_cast<int>(k)) + other.coeff(static_cast<int>(k))) % p_;
    }
    return ZpPoly(p_, std::move(c));
}

ZpPoly ZpPoly::operator-(const ZpPoly& other) const {
    std::vector<int> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = (coeff(static_cast<int>(k)) - other.coeff(static_cast<int>(k))) % p_;
    }
    return ZpPoly(p_, std::move(c));
}

ZpPoly ZpPoly::operator*(const ZpPoly& other) const {
    if (is_zero() || other.is_zero()) return zero(p_);
    std::vector<int> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            c[i + j] = static_cast<int>((c[i + j] + static_cast<long long>(coeffs_[i]) * other.coeffs_[j]) % p_);
        }
    }
    return ZpPoly(p_, std::move(c));
}

ZpPoly ZpPoly::mod(const ZpPoly& divisor) const { return divmod(divisor).remainder; }

ZpPolyDivMod ZpPoly::divmod(const ZpPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<int> rem = coeffs_;
    const int dd = divisor.degree();
    const int lead_inv = mod_inverse(divisor.coeffs_.back(), p_);
    std::vector<int> quot;
    if (degree() >= dd) quot.assign(degree() - dd + 1, 0);
    for (int k = degree(); k >= dd; --k) {
        const int r = rem[k];
        if (r == 0) continue;
        const int factor = static_cast<int>(static_cast<long long>(r) * lead_inv % p_);
        quot[k - dd] = factor;
        for (int j = 0; j <= dd; ++j) {
            long long v = rem[k - dd + j] - static_cast<long long>(factor) * divisor.coeff(j);
            v %= p_;
            if (v < 0) v += p_;
            rem[k - dd + j] = static_cast<int>(v);
        }
    }
    return {ZpPoly(p_, std::move(quot)), ZpPoly(p_, std::move(rem))};
}

ZpPoly ZpPoly::monic() const {
    if (is_zero()) return *this;
    const int inv = mod_inverse(coeffs_.back(), p_);
    std::vector<int> c = coeffs_;
    for (auto& x : c) x = static_cast<int>(static_cast<long long>(x) * inv % p_);
    return ZpPoly(p_, std::move(c));
}

ZpPoly ZpPoly::gcd(ZpPoly a, ZpPoly b) {
    while (!b.is_zero()) {
        ZpPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ZpPoly ZpPoly::pow_mod(const ZpPoly& base, long long exponent, const ZpPoly& modulus) {
    ZpPoly result = one(base.p());
    ZpPoly acc = base.mod(modulus);
    while (exponent > 0) {
        if (exponent & 1) result = (result * acc).mod(modulus);
        acc = (acc * acc).mod(modulus);
        exponent >>= 1;
    }
    return result;
}

std::string ZpPoly::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) os << ',';
        os << coeffs_[k];
    }
    if (coeffs_.empty()) os << '0';
    return os.str();
}

bool is_irreducible(const ZpPoly& f) {
    const int n = f.degree();
    const int p = f.p();
    if (n <= 0) return false;
    if (n == 1) return true;
    const ZpPoly y = ZpPoly::monomial(p, 1);

    // y^{p^k} mod f by repeated p-th powering
    auto frobenius_iterate = [&](int k) {
        ZpPoly acc = y.mod(f);
        for (int i = 0; i < k; ++i) acc = ZpPoly::pow_mod(acc, p, f);
        return acc;
    };

    if (!(frobenius_iterate(n) == y.mod(f))) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime(q)) continue;
        ZpPoly h = frobenius_iterate(n / q) - y;
        if (ZpPoly::gcd(h, f).degree() != 0) return false;
    }
    return true;
}

IrreducibleEnumeration enumerate_irreducibles(int p, int ell) {
    if (!is_prime(p)) throw CompositeModulus("p must be prime, got " + std::to_string(p));
    if (ell > 1 && !is_prime(ell)) {
        throw NonPrimeEll("two-layer enumeration needs prime ell, got " + std::to_string(ell));
    }
    IrreducibleEnumeration out;
    for (int m = 0; m < p; ++m) {
        out.linear.push_back(ZpPoly(p, {(p - m) % p, 1}));  // y - m
    }
    if (ell > 1) {
        // all monic degree-ell candidates, lexicographic in (c_0,...,c_{ell-1})
        long long total = 1;
        for (int i = 0; i < ell; ++i) total *= p;
        for (long long code = 0; code < total; ++code) {
            std::vector<int> c(ell + 1, 0);
            long long rest = code;
            // decode with c_0 as the most significant digit, so ascending
            // codes give lexicographic (c_0,...,c_{ell-1}) order
            for (int i = 0; i < ell; ++i) {
                long long radix = 1;
                for (int j = i + 1; j < ell; ++j) radix *= p;
                c[i] = static_cast<int>(rest / radix);
                rest %= radix;
            }
            c[ell] = 1;
            ZpPoly f(p, std::move(c));
            if (is_irreducible(f)) out.degree_ell.push_back(std::move(f));
        }
    }
    out.s = static_cast<int>(out.degree_ell.size());
    return out;
}

}  // namespace gqs
