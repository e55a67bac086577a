#include "qortho/cheb.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qortho {

namespace {
const Scalar kZeroScalar;
const Scalar kHalf = Scalar::from_fraction(1, 2);
}

ChebPoly ChebPoly::unit(ChebBasis b, int n) {
    ChebPoly p(b);
    p.add(n, Scalar(1));
    return p;
}

const Scalar& ChebPoly::coeff(int n) const {
    auto it = c_.find(n);
    return it == c_.end() ? kZeroScalar : it->second;
}

void ChebPoly::add(int n, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

ChebPoly ChebPoly::operator-() const {
    ChebPoly r(basis_);
    for (const auto& [n, c] : c_) r.c_.emplace(n, -c);
    return r;
}

ChebPoly& ChebPoly::operator+=(const ChebPoly& o) {
    if (basis_ != o.basis_) throw std::logic_error("ChebPoly: basis mismatch");
    for (const auto& [n, c] : o.c_) add(n, c);
    return *this;
}

ChebPoly& ChebPoly::operator-=(const ChebPoly& o) {
    if (basis_ != o.basis_) throw std::logic_error("ChebPoly: basis mismatch");
    for (const auto& [n, c] : o.c_) add(n, -c);
    return *this;
}

ChebPoly ChebPoly::scaled(const Scalar& k) const {
    ChebPoly r(basis_);
    if (k.is_zero()) return r;
    for (const auto& [n, c] : c_) r.c_.emplace(n, c * k);
    return r;
}

ChebPoly ChebPoly::mul_2x_T() const {
    if (basis_ != ChebBasis::T) throw std::logic_error("mul_2x_T: T basis required");
    ChebPoly r(ChebBasis::T);
    for (const auto& [n, c] : c_) {
        r.add(n + 1, c);
        r.add(n >= 1 ? n - 1 : 1, c);
    }
    return r;
}

namespace {

std::mutex cheb_mutex;
std::vector<Poly> cache_T, cache_U;

const Poly& cheb_cached(std::vector<Poly>& cache, int n, bool second_kind) {
    std::scoped_lock lock(cheb_mutex);
    if (cache.empty()) {
        cache.push_back(Poly(1));
        Poly x = Poly::x();
        cache.push_back(second_kind ? x + x : x);
    }
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        Poly next = Poly::x() * cache[m - 1];
        next += next;
        next -= cache[m - 2];
        cache.push_back(std::move(next));
    }
    return cache[n];
}

}  // namespace

const Poly& chebyshev_T(int n) { return cheb_cached(cache_T, n, false); }
const Poly& chebyshev_U(int n) { return cheb_cached(cache_U, n, true); }

Poly cheb_to_poly(const ChebPoly& p) {
    Poly r;
    for (const auto& [n, c] : p.coeffs()) {
        switch (p.basis()) {
            case ChebBasis::T: r += chebyshev_T(n).scaled(c); break;
            case ChebBasis::U: r += chebyshev_U(n).scaled(c); break;
            case ChebBasis::Monomial: r += Poly::monomial(c, n); break;
        }
    }
    return r;
}

ChebPoly cheb_from_poly(const Poly& p) {
    if (p.has_s()) throw std::logic_error("cheb_from_poly: polynomial involves s");
    ChebPoly r(ChebBasis::Monomial);
    for (const auto& [m, c] : p.terms()) r.add(m.x, c);
    return r;
}

namespace {

// x * p for p in the T or U basis:
//   2x T_m = T_{m+1} + T_{|m-1|}
//   2x U_m = U_{m+1} + U_{m-1}   (U_{-1} = 0)
ChebPoly mul_x(const ChebPoly& p) {
    ChebPoly r(p.basis());
    for (const auto& [n, c] : p.coeffs()) {
        Scalar h = c * kHalf;
        r.add(n + 1, h);
        if (p.basis() == ChebBasis::T) {
            r.add(n >= 1 ? n - 1 : 1, h);
        } else if (n >= 1) {
            r.add(n - 1, h);
        }
    }
    return r;
}

ChebPoly monomial_to(const ChebPoly& p, ChebBasis to) {
    ChebPoly r(to);
    // Build x^n iteratively inside the target basis.
    int top = p.max_index();
    ChebPoly xn = ChebPoly::unit(to, 0);
    for (int n = 0; n <= top; ++n) {
        if (n > 0) xn = mul_x(xn);
        if (!p.coeff(n).is_zero()) r += xn.scaled(p.coeff(n));
    }
    return r;
}

ChebPoly t_to_u(const ChebPoly& p) {
    // T_0 = U_0, T_1 = U_1/2, T_n = (U_n - U_{n-2})/2 for n >= 2.
    ChebPoly r(ChebBasis::U);
    for (const auto& [n, c] : p.coeffs()) {
        if (n == 0) {
            r.add(0, c);
        } else {
            Scalar h = c * kHalf;
            r.add(n, h);
            if (n >= 2) r.add(n - 2, -h);
        }
    }
    return r;
}

ChebPoly u_to_t(const ChebPoly& p) {
    // U_{2m} = T_0 + 2(T_2 + ... + T_{2m}), U_{2m+1} = 2(T_1 + T_3 + ... + T_{2m+1}).
    ChebPoly r(ChebBasis::T);
    for (const auto& [n, c] : p.coeffs()) {
        for (int j = n; j >= 0; j -= 2) r.add(j, j == 0 ? c : c + c);
    }
    return r;
}

}  // namespace

ChebPoly cheb_convert(const ChebPoly& p, ChebBasis to) {
    if (p.basis() == to) return p;
    if (p.basis() == ChebBasis::Monomial) return monomial_to(p, to);
    if (to == ChebBasis::Monomial) return cheb_from_poly(cheb_to_poly(p));
    if (p.basis() == ChebBasis::T) return t_to_u(p);
    return u_to_t(p);
}

}  // namespace qortho
