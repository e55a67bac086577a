#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace qortho {

/// Dense polynomial in the base variable v with arbitrary-precision integer
/// coefficients. Coefficient i multiplies v^i; the coefficient vector never
/// stores trailing zeros, so degree() is size-1 (and -1 for the zero
/// polynomial).
class VPoly {
public:
    VPoly() = default;
    VPoly(long c);
    explicit VPoly(mpz_class c);
    static VPoly monomial(mpz_class c, int exp);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Smallest exponent with a nonzero coefficient (0 for the zero poly).
    int low_order() const;
    /// Coefficient of v^i; zero outside the stored range.
    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const;
    const mpz_class& constant_term() const { return coeff(0); }

    VPoly operator-() const;
    VPoly& operator+=(const VPoly& o);
    VPoly& operator-=(const VPoly& o);
    friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
    friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
    friend VPoly operator*(const VPoly& a, const VPoly& b);
    friend bool operator==(const VPoly& a, const VPoly& b) { return a.c_ == b.c_; }

    VPoly mul_int(const mpz_class& k) const;
    /// Multiplication by v^k, k >= 0.
    VPoly shifted(int k) const;

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;
    /// Divides every coefficient by k (must be exact).
    void div_content(const mpz_class& k);
    /// Exact polynomial division; throws std::logic_error if not exact.
    static VPoly div_exact(const VPoly& a, const VPoly& b);
    /// Polynomial gcd over Z[v] (primitive PRS), including the integer
    /// content gcd; result has positive leading coefficient.
    static VPoly gcd(VPoly a, VPoly b);

    /// v -> v^2 (doubles every exponent).
    VPoly stretch2() const;
    bool only_even_exponents() const;
    /// Collapses v^(2i) -> q^i; requires only_even_exponents().
    VPoly compress_even() const;

    double eval_double(double v) const;
    mpq_class eval_mpq(const mpq_class& x) const;

    const std::vector<mpz_class>& coeffs() const { return c_; }

private:
    void trim();
    std::vector<mpz_class> c_;
};

}  // namespace qortho
