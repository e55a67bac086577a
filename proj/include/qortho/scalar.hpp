#pragma once

#include "qortho/vpoly.hpp"

#include <string>

namespace qortho {

/// Element of the field Q(v), v^2 = q, kept as a canonical reduced fraction
///
///     value = v^off * num / den
///
/// with num, den integer-coefficient polynomials in v. Canonical form:
///   - num has a nonzero constant term (the pure v-power is carried by off),
///   - den has a nonzero constant term and positive leading coefficient,
///   - gcd(num, den) = 1 over Z[v] (primitive parts and integer contents),
///   - zero is represented as (num = 0, off = 0, den = 1).
///
/// Laurent exponents (negative off) are allowed so that half-integer powers
/// of q are ordinary monomials in v. Values are immutable in the sense that
/// every operation returns a fresh canonical Scalar; sharing between threads
/// is safe.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    Scalar(mpz_class n) : num_(std::move(n)), den_(1) {}

    /// Canonicalizing constructor; throws std::domain_error on zero denominator.
    static Scalar make(VPoly num, long off, VPoly den);
    static Scalar from_fraction(mpz_class num, mpz_class den);
    static Scalar from_mpq(const mpq_class& r);
    /// v^k (k may be negative).
    static Scalar v_power(long k);
    /// q^k = v^(2k).
    static Scalar q_power(long k);
    static Scalar q();
    static Scalar v();

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return off_ == 0 && num_.is_one() && den_.is_one(); }
    bool is_integer() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.off_ == b.off_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;
    Scalar pow(long e) const;

    /// True when the value lies in Q(q), i.e. every v-exponent is even.
    bool only_even_v() const;
    /// Base change q -> q^2 (substitutes v -> v^2).
    Scalar stretch_q() const;
    /// Substitutes a Scalar value for v. Throws std::domain_error when the
    /// substitution hits a pole (den vanishes, or value 0 with negative off).
    Scalar eval_at_v(const Scalar& value) const;
    /// Exact evaluation at a rational q; requires only_even_v().
    mpq_class eval_q_rational(const mpq_class& q) const;
    /// Numeric evaluation at v = sqrt(q).
    double eval_double_q(double q) const;

    const VPoly& num() const { return num_; }
    const VPoly& den() const { return den_; }
    long off() const { return off_; }

private:
    void normalize();
    VPoly num_;
    long off_ = 0;
    VPoly den_;
};

}  // namespace qortho
