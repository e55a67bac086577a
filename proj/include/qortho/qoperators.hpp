#pragma once

#include "qortho/cheb.hpp"
#include "qortho/poly.hpp"

#include <functional>

namespace qortho {

/// D_q x^n = [n] x^(n-1), extended linearly (s is inert).
Poly d_q(const Poly& p);
/// eps_q p(x) = p(qx).
Poly eps_q(const Poly& p);

/// A linear operator on polynomials, built by composing the generators
/// (multiplication operators, D, D_q, eps_q) with sums, scalar multiples,
/// and powers. Operators are evaluated by action, never normalized.
class OpSpec {
public:
    using Action = std::function<Poly(const Poly&)>;

    explicit OpSpec(Action a) : act_(std::move(a)) {}

    static OpSpec identity();
    static OpSpec mul(Poly factor);
    static OpSpec mul_x() { return mul(Poly::x()); }
    static OpSpec diff();     // d/dx
    static OpSpec diff_q();   // D_q
    static OpSpec shift_q();  // eps_q

    Poly operator()(const Poly& p) const { return act_(p); }

    OpSpec operator+(const OpSpec& o) const;
    OpSpec operator-(const OpSpec& o) const;
    /// Composition: (a * b)(p) = a(b(p)).
    OpSpec operator*(const OpSpec& o) const;
    /// Left multiplication by a polynomial: (c . A)(p) = c * A(p).
    OpSpec scaled(const Poly& c) const;
    OpSpec pow(int n) const;

private:
    Action act_;
};

/// op^n applied to target.
Poly op_power_apply(const OpSpec& op, int n, const Poly& target);
/// Replaces x^k in p by op^k, applies the resulting operator to the constant
/// polynomial 1, weighting by p's coefficients (which may involve s).
Poly op_substitute(const Poly& p, const OpSpec& op);

/// g(x) * exp(sign * x^2 / (2s)), closed under the operator -sD:
///   (-sD)(g e^{sigma x^2/(2s)}) = (-s g' - sigma x g) e^{sigma x^2/(2s)}.
struct GaussPair {
    Poly g;
    int sign;  // -1 or +1, the sigma above
};

/// Applies (-sD)^n to the unit pair g = 1 with the given carrier sign; the
/// minus carrier reproduces the probabilists' Hermite polynomials.
GaussPair gauss_rodrigues(int n, int sign);
GaussPair gauss_step(const GaussPair& gp);

/// Askey-Wilson operator on the Chebyshev-T basis:
/// Delta_q T_n = ([n]/v^(n-1)) U_{n-1}, converted back to T. Delta_q T_0 = 0.
ChebPoly aw_delta(const ChebPoly& p);
/// Applies the n raising factors (2x - ((1-q)/2) v^k Delta_q), innermost
/// first, to the constant 1; the k sequence descends from n-2 (the exponent
/// of the innermost factor acts on a constant and is immaterial).
ChebPoly aw_raising_chain(int n);

}  // namespace qortho
