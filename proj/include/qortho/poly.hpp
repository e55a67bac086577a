#pragma once

#include "qortho/scalar.hpp"

#include <functional>
#include <map>
#include <optional>

namespace qortho {

/// Exponent pair of a monomial x^x_exp * s^s_exp.
struct Mono {
    int x = 0;
    int s = 0;
    friend auto operator<=>(const Mono&, const Mono&) = default;
};

/// Orders terms by descending x-degree, then descending s-degree; this is the
/// canonical term order used everywhere (rendering, JSON, comparisons).
struct MonoDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.x != b.x) return a.x > b.x;
        return a.s > b.s;
    }
};

/// Sparse polynomial in x and s with Scalar coefficients; the universal
/// carrier for every polynomial family. Zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Mono, Scalar, MonoDesc>;

    Poly() = default;
    Poly(long c) : Poly(Scalar(c)) {}
    Poly(const Scalar& c);

    static Poly x();
    static Poly s();
    static Poly monomial(Scalar c, int x_exp, int s_exp = 0);

    bool is_zero() const { return t_.empty(); }
    bool is_scalar() const;
    /// The value as a Scalar; throws std::logic_error unless is_scalar().
    Scalar as_scalar() const;

    /// Degree in x (-1 for the zero polynomial).
    int deg_x() const;
    int deg_s() const;
    const Scalar& coeff(int x_exp, int s_exp) const;
    /// Coefficient of x^k as a polynomial in s.
    Poly coeff_x(int k) const;
    /// Leading coefficient in x (as a polynomial in s).
    Poly leading_x() const;
    bool has_x() const;
    bool has_s() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Scalar& c) const;
    /// Exact division by a scalar.
    Poly divided(const Scalar& c) const { return scaled(c.inverse()); }
    Poly pow(int e) const;

    /// Substitutes a polynomial for x (s untouched).
    Poly subst_x(const Poly& value) const;
    /// Substitutes a scalar for s.
    Poly subst_s(const Scalar& value) const;
    Poly subst_s_poly(const Poly& value) const;
    /// Applies a map to every coefficient (e.g. v -> 1 specialization).
    Poly map_scalars(const std::function<Scalar(const Scalar&)>& f) const;

    /// d/dx with s treated as a constant.
    Poly d_dx() const;
    /// Multiplies by x^a s^b.
    Poly mono_shift(int a, int b) const;

    double eval_double(double x, double s, double q) const;

    const TermMap& terms() const { return t_; }
    void set_coeff(Mono m, Scalar c);

private:
    TermMap t_;
};

}  // namespace qortho
