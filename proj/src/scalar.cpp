#include "qortho/scalar.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qortho {

void Scalar::normalize() {
    if (den_.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (num_.is_zero()) {
        off_ = 0;
        den_ = VPoly(1);
        return;
    }
    // Pure v-powers move into the Laurent offset.
    int ln = num_.low_order();
    if (ln > 0) {
        num_ = VPoly::div_exact(num_, VPoly::monomial(1, ln));
        off_ += ln;
    }
    int ld = den_.low_order();
    if (ld > 0) {
        den_ = VPoly::div_exact(den_, VPoly::monomial(1, ld));
        off_ -= ld;
    }
    if (!den_.is_one()) {
        VPoly g = VPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = VPoly::div_exact(num_, g);
            den_ = VPoly::div_exact(den_, g);
        }
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::make(VPoly num, long off, VPoly den) {
    Scalar s;
    s.num_ = std::move(num);
    s.off_ = off;
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

Scalar Scalar::from_fraction(mpz_class num, mpz_class den) {
    return make(VPoly(std::move(num)), 0, VPoly(std::move(den)));
}

Scalar Scalar::from_mpq(const mpq_class& r) {
    return from_fraction(r.get_num(), r.get_den());
}

Scalar Scalar::v_power(long k) {
    Scalar s;
    s.num_ = VPoly(1);
    s.off_ = k;
    s.den_ = VPoly(1);
    return s;
}

Scalar Scalar::q_power(long k) { return v_power(2 * k); }
Scalar Scalar::q() { return v_power(2); }
Scalar Scalar::v() { return v_power(1); }

bool Scalar::is_integer() const { return off_ == 0 && den_.is_one() && num_.degree() <= 0; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long off = std::min(off_, o.off_);
    VPoly a = num_.shifted(static_cast<int>(off_ - off));
    VPoly b = o.num_.shifted(static_cast<int>(o.off_ - off));
    if (den_ == o.den_) {
        num_ = a + b;
        off_ = off;
    } else {
        num_ = a * o.den_ + b * den_;
        den_ = den_ * o.den_;
        off_ = off;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Scalar();
    num_ = num_ * o.num_;
    off_ += o.off_;
    if (!(den_.is_one() && o.den_.is_one())) den_ = den_ * o.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.off_ = -off_;
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool Scalar::only_even_v() const {
    if (is_zero()) return true;
    // In canonical form num(0) != 0 and den(0) != 0, so the value is even in
    // v exactly when the offset is even and both polynomials are.
    return off_ % 2 == 0 && num_.only_even_exponents() && den_.only_even_exponents();
}

Scalar Scalar::stretch_q() const {
    Scalar r;
    r.num_ = num_.stretch2();
    r.den_ = den_.stretch2();
    r.off_ = 2 * off_;
    return r;
}

namespace {

Scalar eval_vpoly_at(const VPoly& p, const Scalar& x) {
    Scalar acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x;
        if (p.coeff(i) != 0) acc += Scalar(p.coeff(i));
    }
    return acc;
}

}  // namespace

Scalar Scalar::eval_at_v(const Scalar& value) const {
    if (is_zero()) return Scalar();
    Scalar den_val = eval_vpoly_at(den_, value);
    if (den_val.is_zero()) throw std::domain_error("Scalar::eval_at_v: pole");
    if (value.is_zero()) {
        if (off_ < 0) throw std::domain_error("Scalar::eval_at_v: pole at v=0");
        if (off_ > 0) return Scalar();
        return Scalar(num_.constant_term()) / den_val;
    }
    Scalar num_val = eval_vpoly_at(num_, value);
    return num_val * value.pow(off_) / den_val;
}

mpq_class Scalar::eval_q_rational(const mpq_class& q) const {
    if (is_zero()) return mpq_class(0);
    if (!only_even_v()) throw std::domain_error("Scalar::eval_q_rational: odd power of v present");
    // off_ may be negative; fold v^off = q^(off/2) into the fraction.
    mpq_class num_val = num_.compress_even().eval_mpq(q);
    mpq_class den_val = den_.compress_even().eval_mpq(q);
    if (den_val == 0) throw std::domain_error("Scalar::eval_q_rational: pole");
    mpq_class r = num_val / den_val;
    long h = off_ / 2;
    if (h > 0) {
        mpq_class p = q;
        for (long i = 1; i < h; ++i) p *= q;
        r *= p;
    } else if (h < 0) {
        if (q == 0) throw std::domain_error("Scalar::eval_q_rational: pole at q=0");
        mpq_class p = q;
        for (long i = 1; i < -h; ++i) p *= q;
        r /= p;
    }
    r.canonicalize();
    return r;
}

double Scalar::eval_double_q(double q) const {
    if (is_zero()) return 0.0;
    double v = std::sqrt(q);
    return num_.eval_double(v) * std::pow(v, static_cast<double>(off_)) / den_.eval_double(v);
}

}  // namespace qortho
