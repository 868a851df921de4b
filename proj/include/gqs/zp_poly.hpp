#pragma once

#include <string>
#include <vector>

#include "gqs/errors.hpp"

namespace gqs {

bool is_prime(long long n);

// Inverse of a modulo a prime p.
int mod_inverse(int a, int p);

/*
 * Dense univariate polynomial over Z_p, coefficients stored low-to-high with
 * no trailing zeros (the zero polynomial has an empty coefficient vector and
 * degree -1). All arithmetic is exact residue arithmetic.
 */
class ZpPoly;

// Quotient and remainder of polynomial division.
struct ZpPolyDivMod;

class ZpPoly {
public:
    ZpPoly(int p, std::vector<int> coeffs);

    static ZpPoly zero(int p) { return ZpPoly(p, {}); }
    static ZpPoly one(int p) { return ZpPoly(p, {1}); }
    static ZpPoly monomial(int p, int degree, int coeff = 1);

    int p() const { return p_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<int>& coeffs() const { return coeffs_; }
    int coeff(int k) const;

    ZpPoly operator+(const ZpPoly& other) const;
    ZpPoly operator-(const ZpPoly& other) const;
    ZpPoly operator*(const ZpPoly& other) const;
    bool operator==(const ZpPoly& other) const = default;

    // Quotient and remainder by a nonzero divisor.
    ZpPolyDivMod divmod(const ZpPoly& divisor) const;
    ZpPoly mod(const ZpPoly& divisor) const;

    ZpPoly monic() const;

    static ZpPoly gcd(ZpPoly a, ZpPoly b);
    static ZpPoly pow_mod(const ZpPoly& base, long long exponent, const ZpPoly& modulus);

    // Coefficients as "c0,c1,..." text (low-to-high).
    std::string to_string() const;

private:
    int p_;
    std::vector<int> coeffs_;
    void normalize();
};

struct ZpPolyDivMod {
    ZpPoly quotient;
    ZpPoly remainder;
};

// Rabin test: f is irreducible over Z_p iff y^{p^n} = y (mod f) and
// gcd(y^{p^{n/q}} - y, f) = 1 for every prime q dividing n = deg f.
bool is_irreducible(const ZpPoly& f);

/*
 * All monic irreducible polynomials over Z_p of degree dividing ell, split
 * into the degree-ell layer (s = (p^ell - p)/ell polynomials, lexicographic
 * by coefficient vector) and the linear layer (y - m for m = 0..p-1).
 * Requires ell = 1 or ell prime; composite ell raises NonPrimeEll.
 */
struct IrreducibleEnumeration {
    std::vector<ZpPoly> degree_ell;
    std::vector<ZpPoly> linear;
    int s = 0;
};

IrreducibleEnumeration enumerate_irreducibles(int p, int ell);

}  // namespace gqs
