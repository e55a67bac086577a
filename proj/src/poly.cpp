#include "qortho/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace qortho {

namespace {
const Scalar kZeroScalar;
}

Poly::Poly(const Scalar& c) {
    if (!c.is_zero()) t_.emplace(Mono{0, 0}, c);
}

Poly Poly::x() { return monomial(Scalar(1), 1, 0); }
Poly Poly::s() { return monomial(Scalar(1), 0, 1); }

Poly Poly::monomial(Scalar c, int x_exp, int s_exp) {
    Poly p;
    if (!c.is_zero()) p.t_.emplace(Mono{x_exp, s_exp}, std::move(c));
    return p;
}

bool Poly::is_scalar() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0});
}

Scalar Poly::as_scalar() const {
    if (t_.empty()) return Scalar();
    if (!is_scalar()) throw std::logic_error("Poly::as_scalar: polynomial is not constant");
    return t_.begin()->second;
}

int Poly::deg_x() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.x);
    return d;
}

int Poly::deg_s() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.s);
    return d;
}

const Scalar& Poly::coeff(int x_exp, int s_exp) const {
    auto it = t_.find(Mono{x_exp, s_exp});
    return it == t_.end() ? kZeroScalar : it->second;
}

Poly Poly::coeff_x(int k) const {
    Poly r;
    for (const auto& [m, c] : t_)
        if (m.x == k) r.t_.emplace(Mono{0, m.s}, c);
    return r;
}

Poly Poly::leading_x() const { return coeff_x(deg_x()); }

bool Poly::has_x() const {
    for (const auto& [m, c] : t_)
        if (m.x > 0) return true;
    return false;
}

bool Poly::has_s() const {
    for (const auto& [m, c] : t_)
        if (m.s > 0) return true;
    return false;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

void Poly::set_coeff(Mono m, Scalar c) {
    if (c.is_zero())
        t_.erase(m);
    else
        t_[m] = std::move(c);
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) {
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) {
        auto [it, inserted] = t_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.t_) {
        for (const auto& [mb, cb] : b.t_) {
            Mono m{ma.x + mb.x, ma.s + mb.s};
            Scalar prod = ca * cb;
            auto [it, inserted] = r.t_.try_emplace(m, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    }
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : t_) r.t_.emplace(m, coef * c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
    Poly r(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

Poly Poly::subst_x(const Poly& value) const {
    // Horner in x over polynomials in s.
    int d = deg_x();
    if (d <= 0) return *this;
    Poly acc;
    for (int k = d; k >= 0; --k) {
        acc = acc * value;
        acc += coeff_x(k);
    }
    return acc;
}

Poly Poly::subst_s(const Scalar& value) const {
    Poly r;
    for (const auto& [m, c] : t_) {
        Scalar nc = c * value.pow(m.s);
        if (nc.is_zero()) continue;
        Mono nm{m.x, 0};
        auto [it, inserted] = r.t_.try_emplace(nm, nc);
        if (!inserted) {
            it->second += nc;
            if (it->second.is_zero()) r.t_.erase(it);
        }
    }
    return r;
}

Poly Poly::subst_s_poly(const Poly& value) const {
    Poly r;
    for (const auto& [m, c] : t_) r += value.pow(m.s).scaled(c).mono_shift(m.x, 0);
    return r;
}

Poly Poly::map_scalars(const std::function<Scalar(const Scalar&)>& f) const {
    Poly r;
    for (const auto& [m, c] : t_) {
        Scalar nc = f(c);
        if (!nc.is_zero()) r.t_.emplace(m, std::move(nc));
    }
    return r;
}

Poly Poly::d_dx() const {
    Poly r;
    for (const auto& [m, c] : t_) {
        if (m.x == 0) continue;
        r.t_.emplace(Mono{m.x - 1, m.s}, c * Scalar(m.x));
    }
    return r;
}

Poly Poly::mono_shift(int a, int b) const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(Mono{m.x + a, m.s + b}, c);
    return r;
}

double Poly::eval_double(double x, double s, double q) const {
    double acc = 0.0;
    for (const auto& [m, c] : t_)
        acc += c.eval_double_q(q) * std::pow(x, m.x) * std::pow(s, m.s);
    return acc;
}

}  // namespace qortho
