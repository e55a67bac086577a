#include "qortho/qcore.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace qortho {

Scalar q_int(int n) {
    if (n <= 0) return Scalar();
    VPoly p;
    for (int i = 0; i < n; ++i) p += VPoly::monomial(1, 2 * i);
    return Scalar::make(std::move(p), 0, VPoly(1));
}

Scalar q_factorial(int n) {
    Scalar r(1);
    for (int i = 2; i <= n; ++i) r *= q_int(i);
    return r;
}

namespace {
std::mutex qbinom_mutex;
std::map<std::pair<int, int>, Scalar> qbinom_cache;
}

Scalar q_binomial(int n, int k) {
    if (k < 0 || k > n) return Scalar();
    if (k == 0 || k == n) return Scalar(1);
    if (2 * k > n) k = n - k;
    {
        std::scoped_lock lock(qbinom_mutex);
        auto it = qbinom_cache.find({n, k});
        if (it != qbinom_cache.end()) return it->second;
    }
    // [n choose k] = prod_{i=1..k} (1 - q^(n-k+i)) / (1 - q^i); the division
    // is exact in Q(v) and the canonical form is the Gaussian polynomial.
    Scalar r(1);
    for (int i = 1; i <= k; ++i) {
        r *= Scalar(1) - Scalar::q_power(n - k + i);
        r /= Scalar(1) - Scalar::q_power(i);
    }
    std::scoped_lock lock(qbinom_mutex);
    return qbinom_cache.emplace(std::make_pair(n, k), std::move(r)).first->second;
}

Poly q_pochhammer(int n) {
    Poly r(1);
    for (int i = 0; i < n; ++i) r *= Poly(1) - Poly::x().scaled(Scalar::q_power(i));
    return r;
}

Scalar q_pochhammer_at(const Scalar& a, int n) {
    Scalar r(1);
    for (int i = 0; i < n; ++i) r *= Scalar(1) - a * Scalar::q_power(i);
    return r;
}

Scalar q_q_pochhammer(int n) { return q_pochhammer_at(Scalar::q(), n); }

Scalar q_triangular(long k) { return Scalar::q_power(k * (k - 1) / 2); }

mpz_class binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class double_factorial_odd(long n) {
    mpz_class r = 1;
    for (long i = 2 * n - 1; i >= 1; i -= 2) r *= i;
    return r;
}

mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class catalan(long n) {
    mpz_class b = binom(2 * n, n);
    return b / (n + 1);
}

}  // namespace qortho
