#include "qortho/circle.hpp"

#include "qortho/qcore.hpp"

namespace qortho {

namespace {
const Scalar kZeroScalar;
}

LaurentCirclePoly LaurentCirclePoly::monomial(const Scalar& c, int k) {
    LaurentCirclePoly p;
    p.add(k, c);
    return p;
}

const Scalar& LaurentCirclePoly::coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? kZeroScalar : it->second;
}

void LaurentCirclePoly::add(int k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

LaurentCirclePoly LaurentCirclePoly::conjugate() const {
    LaurentCirclePoly r;
    for (const auto& [k, c] : c_) r.c_.emplace(-k, c);
    return r;
}

LaurentCirclePoly operator*(const LaurentCirclePoly& a, const LaurentCirclePoly& b) {
    LaurentCirclePoly r;
    for (const auto& [ka, ca] : a.c_)
        for (const auto& [kb, cb] : b.c_) r.add(ka + kb, ca * cb);
    return r;
}

LaurentCirclePoly rs_unit(int n) {
    LaurentCirclePoly p;
    for (int k = 0; k <= n; ++k) {
        Scalar c = q_binomial(n, k) * Scalar::v_power(n - k);
        if ((n - k) % 2 != 0) c = -c;
        p.add(k, c);
    }
    return p;
}

Scalar lambda_R(const LaurentCirclePoly& p) {
    Scalar acc;
    for (const auto& [k, c] : p.coeffs())
        acc += c * Scalar::v_power(static_cast<long>(k) * k);
    return acc;
}

Scalar circle_inner_product(int m, int n) {
    return lambda_R(rs_unit(m) * rs_unit(n).conjugate());
}

Scalar circle_inner_product_sum_form(int m, int n) {
    // (-1)^(m+n) q^((m+n)/2) sum_j (-1)^j q^C(j,2) [m,j] prod_{l=0..n-1} (1 - q^(l-j))
    Scalar acc;
    for (int j = 0; j <= m; ++j) {
        Scalar prod(1);
        for (int l = 0; l < n; ++l) prod *= Scalar(1) - Scalar::q_power(l - j);
        Scalar term = q_triangular(j) * q_binomial(m, j) * prod;
        acc += (j % 2 != 0) ? -term : term;
    }
    Scalar pref = Scalar::v_power(m + n);
    if ((m + n) % 2 != 0) pref = -pref;
    return pref * acc;
}

}  // namespace qortho
