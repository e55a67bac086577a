#include "qortho/qoperators.hpp"

#include "qortho/qcore.hpp"

#include <stdexcept>

namespace qortho {

Poly d_q(const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.x == 0) continue;
        r.set_coeff(Mono{m.x - 1, m.s}, c * q_int(m.x));
    }
    return r;
}

Poly eps_q(const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.terms()) r.set_coeff(m, c * Scalar::q_power(m.x));
    return r;
}

OpSpec OpSpec::identity() {
    return OpSpec([](const Poly& p) { return p; });
}

OpSpec OpSpec::mul(Poly factor) {
    return OpSpec([f = std::move(factor)](const Poly& p) { return f * p; });
}

OpSpec OpSpec::diff() {
    return OpSpec([](const Poly& p) { return p.d_dx(); });
}

OpSpec OpSpec::diff_q() {
    return OpSpec([](const Poly& p) { return d_q(p); });
}

OpSpec OpSpec::shift_q() {
    return OpSpec([](const Poly& p) { return eps_q(p); });
}

OpSpec OpSpec::operator+(const OpSpec& o) const {
    return OpSpec([a = act_, b = o.act_](const Poly& p) { return a(p) + b(p); });
}

OpSpec OpSpec::operator-(const OpSpec& o) const {
    return OpSpec([a = act_, b = o.act_](const Poly& p) { return a(p) - b(p); });
}

OpSpec OpSpec::operator*(const OpSpec& o) const {
    return OpSpec([a = act_, b = o.act_](const Poly& p) { return a(b(p)); });
}

OpSpec OpSpec::scaled(const Poly& c) const {
    return OpSpec([a = act_, c](const Poly& p) { return c * a(p); });
}

OpSpec OpSpec::pow(int n) const {
    if (n < 0) throw std::domain_error("OpSpec::pow: negative power");
    return OpSpec([a = act_, n](const Poly& p) {
        Poly r = p;
        for (int i = 0; i < n; ++i) r = a(r);
        return r;
    });
}

Poly op_power_apply(const OpSpec& op, int n, const Poly& target) {
    Poly r = target;
    for (int i = 0; i < n; ++i) r = op(r);
    return r;
}

Poly op_substitute(const Poly& p, const OpSpec& op) {
    // Accumulate op^k(1) incrementally; coefficients of x^k may involve s.
    Poly result;
    Poly op_k(1);
    int d = p.deg_x();
    for (int k = 0; k <= d; ++k) {
        if (k > 0) op_k = op(op_k);
        Poly ck = p.coeff_x(k);
        if (!ck.is_zero()) result += ck * op_k;
    }
    return result;
}

GaussPair gauss_step(const GaussPair& gp) {
    Poly minus_s = -Poly::s();
    Poly xg = Poly::x() * gp.g;
    Poly r = minus_s * gp.g.d_dx();
    if (gp.sign < 0)
        r += xg;
    else
        r -= xg;
    return GaussPair{std::move(r), gp.sign};
}

GaussPair gauss_rodrigues(int n, int sign) {
    GaussPair gp{Poly(1), sign < 0 ? -1 : 1};
    for (int i = 0; i < n; ++i) gp = gauss_step(gp);
    return gp;
}

ChebPoly aw_delta(const ChebPoly& p) {
    if (p.basis() != ChebBasis::T) throw std::logic_error("aw_delta: T basis required");
    ChebPoly u(ChebBasis::U);
    for (const auto& [n, c] : p.coeffs()) {
        if (n == 0) continue;
        u.add(n - 1, c * q_int(n) * Scalar::v_power(-(n - 1)));
    }
    return cheb_convert(u, ChebBasis::T);
}

ChebPoly aw_raising_chain(int n) {
    ChebPoly r = ChebPoly::unit(ChebBasis::T, 0);
    Scalar half_one_minus_q = (Scalar(1) - Scalar::q()) / Scalar(2);
    for (int j = 1; j <= n; ++j) {
        // factor (2x - ((1-q)/2) v^(j-2) Delta_q); for j = 1 the Delta_q term
        // acts on a constant and vanishes.
        ChebPoly next = r.mul_2x_T();
        if (j >= 2) next -= aw_delta(r).scaled(half_one_minus_q * Scalar::v_power(j - 2));
        r = std::move(next);
    }
    return r;
}

}  // namespace qortho
