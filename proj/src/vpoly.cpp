#include "qortho/vpoly.hpp"

#include <stdexcept>
#include <utility>

namespace qortho {

namespace {
const mpz_class kZero = 0;
}

VPoly::VPoly(long c) {
    if (c != 0) c_.push_back(mpz_class(c));
}

VPoly::VPoly(mpz_class c) {
    if (c != 0) c_.push_back(std::move(c));
}

VPoly VPoly::monomial(mpz_class c, int exp) {
    VPoly p;
    if (c != 0) {
        p.c_.assign(exp + 1, kZero);
        p.c_[exp] = std::move(c);
    }
    return p;
}

bool VPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

int VPoly::low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

const mpz_class& VPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const mpz_class& VPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

void VPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

VPoly VPoly::operator-() const {
    VPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

VPoly& VPoly::operator+=(const VPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
    if (a.is_zero() || b.is_zero()) return VPoly();
    VPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

VPoly VPoly::mul_int(const mpz_class& k) const {
    if (k == 0) return VPoly();
    VPoly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

VPoly VPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    VPoly r;
    r.c_.assign(c_.size() + k, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

mpz_class VPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void VPoly::div_content(const mpz_class& k) {
    for (auto& c : c_) {
        mpz_class r;
        mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
        if (r != 0) throw std::logic_error("VPoly::div_content: not exact");
    }
}

VPoly VPoly::div_exact(const VPoly& a, const VPoly& b) {
    if (b.is_zero()) throw std::logic_error("VPoly::div_exact: division by zero");
    if (a.is_zero()) return VPoly();
    if (a.degree() < b.degree()) throw std::logic_error("VPoly::div_exact: not exact");
    VPoly rem = a;
    VPoly quot;
    quot.c_.assign(a.degree() - b.degree() + 1, kZero);
    const mpz_class& lb = b.leading();
    for (int d = a.degree(); d >= b.degree(); --d) {
        mpz_class qc, r;
        mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.c_[d].get_mpz_t(), lb.get_mpz_t());
        if (r != 0) throw std::logic_error("VPoly::div_exact: not exact");
        int shift = d - b.degree();
        quot.c_[shift] = qc;
        if (qc != 0) {
            for (int i = 0; i <= b.degree(); ++i)
                mpz_submul(rem.c_[i + shift].get_mpz_t(), qc.get_mpz_t(), b.c_[i].get_mpz_t());
        }
    }
    rem.trim();
    if (!rem.is_zero()) throw std::logic_error("VPoly::div_exact: nonzero remainder");
    quot.trim();
    return quot;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed in place over Z[v].
VPoly pseudo_rem(VPoly a, const VPoly& b) {
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        mpz_class la = a.leading();
        a = a.mul_int(lb);
        VPoly sub = b.mul_int(la).shifted(shift);
        a -= sub;
    }
    return a;
}

}  // namespace

VPoly VPoly::gcd(VPoly a, VPoly b) {
    if (a.is_zero() && b.is_zero()) return VPoly();
    mpz_class ca = a.content(), cb = b.content();
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_zero()) {
        b.div_content(cb);
        if (b.leading() < 0) b = -b;
        return b.mul_int(c);
    }
    if (b.is_zero()) {
        a.div_content(ca);
        if (a.leading() < 0) a = -a;
        return a.mul_int(c);
    }
    a.div_content(ca);
    b.div_content(cb);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        VPoly r = pseudo_rem(a, b);
        if (!r.is_zero()) r.div_content(r.content());
        a = std::move(b);
        b = std::move(r);
    }
    if (a.leading() < 0) a = -a;
    return a.mul_int(c);
}

VPoly VPoly::stretch2() const {
    if (is_zero()) return VPoly();
    VPoly r;
    r.c_.assign(2 * c_.size() - 1, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i];
    return r;
}

bool VPoly::only_even_exponents() const {
    for (std::size_t i = 1; i < c_.size(); i += 2)
        if (c_[i] != 0) return false;
    return true;
}

VPoly VPoly::compress_even() const {
    if (!only_even_exponents()) throw std::logic_error("VPoly::compress_even: odd exponent present");
    VPoly r;
    r.c_.assign(c_.size() / 2 + 1, kZero);
    for (std::size_t i = 0; i < c_.size(); i += 2) r.c_[i / 2] = c_[i];
    r.trim();
    return r;
}

double VPoly::eval_double(double v) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + it->get_d();
    return acc;
}

mpq_class VPoly::eval_mpq(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

}  // namespace qortho
