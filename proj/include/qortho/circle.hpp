#pragma once

#include "qortho/scalar.hpp"

#include <map>

namespace qortho {

/// Trigonometric polynomial on the unit circle: a finite Scalar combination
/// of z^k, k in Z. Coefficients are real expressions in v, so conjugation is
/// the algebraic map z -> z^(-1).
class LaurentCirclePoly {
public:
    LaurentCirclePoly() = default;
    static LaurentCirclePoly monomial(const Scalar& c, int k);

    bool is_zero() const { return c_.empty(); }
    const Scalar& coeff(int k) const;
    void add(int k, const Scalar& c);

    LaurentCirclePoly conjugate() const;
    friend LaurentCirclePoly operator*(const LaurentCirclePoly& a, const LaurentCirclePoly& b);
    friend bool operator==(const LaurentCirclePoly& a, const LaurentCirclePoly& b) {
        return a.c_ == b.c_;
    }

    const std::map<int, Scalar>& coeffs() const { return c_; }

private:
    std::map<int, Scalar> c_;
};

/// R_n(z, -sqrt(q), q) = sum_k (-1)^(n-k) [n,k] v^(n-k) z^k.
LaurentCirclePoly rs_unit(int n);
/// The circle functional: z^n -> v^(n^2), extended linearly.
Scalar lambda_R(const LaurentCirclePoly& p);
/// Lambda_R(R_m conj(R_n)) by the direct double sum; equals (q;q)_n [m=n].
Scalar circle_inner_product(int m, int n);
/// The signed-sum form of the same inner product (the derivation's final
/// line); tested against the direct double sum.
Scalar circle_inner_product_sum_form(int m, int n);

}  // namespace qortho
