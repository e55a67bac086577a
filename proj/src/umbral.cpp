#include "qortho/umbral.hpp"

#include "qortho/qcore.hpp"

#include <stdexcept>

namespace qortho {

const Poly& CoeffMatrix::entry(int n, int k) const {
    static const Poly kZero;
    if (n < 0 || n > n_max() || k < 0 || k > n) return kZero;
    return rows_[n][k];
}

Poly CoeffMatrix::row_poly(int n) const {
    Poly r;
    for (int k = 0; k <= n; ++k) r += rows_[n][k].mono_shift(k, 0);
    return r;
}

CoeffMatrix coeff_matrix_from_rows(const std::vector<Poly>& rows) {
    CoeffMatrix m(static_cast<int>(rows.size()) - 1);
    for (int n = 0; n < static_cast<int>(rows.size()); ++n) {
        const Poly& p = rows[n];
        if (p.deg_x() != n)
            throw std::domain_error("coeff_matrix: row " + std::to_string(n) +
                                    " has degree " + std::to_string(p.deg_x()));
        for (int k = 0; k <= n; ++k) m.entry(n, k) = p.coeff_x(k);
    }
    return m;
}

CoeffMatrix coeff_matrix(Family f, int N) {
    std::vector<Poly> rows;
    rows.reserve(N + 1);
    for (int n = 0; n <= N; ++n) rows.push_back(functional_row(f, n));
    return coeff_matrix_from_rows(rows);
}

CoeffMatrix umbral_inverse(const CoeffMatrix& m) {
    const int N = m.n_max();
    CoeffMatrix inv(N);
    std::vector<Scalar> diag_inv(N + 1);
    for (int n = 0; n <= N; ++n) {
        if (!m.entry(n, n).is_scalar())
            throw std::domain_error("umbral_inverse: diagonal entry involves s");
        Scalar d = m.entry(n, n).as_scalar();
        if (d.is_zero()) throw std::domain_error("umbral_inverse: zero diagonal entry");
        diag_inv[n] = d.inverse();
    }
    // Forward substitution, column by column: inv(n,k) solves
    // sum_j m(n,j) inv(j,k) = [n = k].
    for (int k = 0; k <= N; ++k) {
        inv.entry(k, k) = Poly(diag_inv[k]);
        for (int n = k + 1; n <= N; ++n) {
            Poly acc;
            for (int j = k; j < n; ++j) acc += m.entry(n, j) * inv.entry(j, k);
            inv.entry(n, k) = (-acc).scaled(diag_inv[n]);
        }
    }
    return inv;
}

std::vector<Poly> matrix_apply(const CoeffMatrix& m, const std::vector<Poly>& x) {
    if (static_cast<int>(x.size()) != m.n_max() + 1)
        throw std::invalid_argument("matrix_apply: size mismatch");
    std::vector<Poly> y(x.size());
    for (int n = 0; n <= m.n_max(); ++n)
        for (int k = 0; k <= n; ++k) y[n] += m.entry(n, k) * x[k];
    return y;
}

MomentFunctional moments(Family f, int N, const std::optional<Scalar>& s_value) {
    MomentFunctional mf{f, {}};
    mf.lambda.resize(N + 1);
    std::vector<Poly> rows;
    rows.reserve(N + 1);
    for (int n = 0; n <= N; ++n) {
        Poly r = functional_row(f, n);
        if (s_value) r = r.subst_s(*s_value);
        rows.push_back(std::move(r));
    }
    CoeffMatrix m = coeff_matrix_from_rows(rows);
    for (int n = 0; n <= N; ++n) {
        Poly acc = n == 0 ? Poly(1) : Poly();
        for (int k = 0; k < n; ++k) acc -= m.entry(n, k) * mf.lambda[k];
        Scalar d = m.entry(n, n).as_scalar();
        mf.lambda[n] = acc.scaled(d.inverse());
    }
    return mf;
}

Poly apply_functional(const MomentFunctional& mf, const Poly& p) {
    Poly acc;
    int d = p.deg_x();
    for (int k = 0; k <= d; ++k) {
        if (k >= static_cast<int>(mf.lambda.size()))
            throw std::domain_error("apply_functional: moments not computed far enough");
        Poly ck = p.coeff_x(k);
        if (!ck.is_zero()) acc += ck * mf.lambda[k];
    }
    return acc;
}

bool has_closed_moment(Family f) {
    switch (f) {
        case Family::hermite_classical:
        case Family::q_hermite:
        case Family::fibonacci:
        case Family::lucas:
        case Family::chebyshev_t:
        case Family::chebyshev_u:
        case Family::q_fibonacci:
        case Family::q_lucas:
        case Family::rogers_szego:
            return true;
        default:
            return false;
    }
}

std::optional<Scalar> closed_moment_s(Family f) {
    switch (f) {
        case Family::fibonacci:
        case Family::lucas:
        case Family::q_fibonacci:
        case Family::q_lucas:
            return Scalar(-1);
        default:
            return std::nullopt;
    }
}

Poly closed_moment(Family f, int n) {
    const bool odd = n % 2 != 0;
    const int m = n / 2;
    switch (f) {
        case Family::hermite_classical:
            // (2m-1)!! s^m
            if (odd) return Poly();
            return Poly::monomial(Scalar(double_factorial_odd(m)), 0, m);
        case Family::q_hermite: {
            // Touchard-Riordan: s^m sum_j (C(2m,m-j) - C(2m,m-j-1)) (-1)^j q^(C(j+1,2))
            if (odd) return Poly();
            Scalar acc;
            for (int j = 0; j <= m; ++j) {
                mpz_class w = binom(2 * m, m - j) - binom(2 * m, m - j - 1);
                Scalar term = Scalar(w) * q_triangular(j + 1);
                acc += (j % 2 != 0) ? -term : term;
            }
            return Poly::monomial(acc, 0, m);
        }
        case Family::fibonacci:
            return odd ? Poly() : Poly(Scalar(catalan(m)));
        case Family::lucas:
            return odd ? Poly() : Poly(Scalar(binom(2 * m, m)));
        case Family::chebyshev_t:
            return odd ? Poly()
                       : Poly(Scalar(binom(2 * m, m)) / Scalar(4).pow(m));
        case Family::chebyshev_u:
            return odd ? Poly()
                       : Poly(Scalar(catalan(m)) / Scalar(4).pow(m));
        case Family::q_fibonacci: {
            // q^m [2m choose m] / [m+1]  (the q-Catalan number times q^m)
            if (odd) return Poly();
            Scalar qc = q_binomial(2 * m, m) / q_int(m + 1);
            return Poly(Scalar::q_power(m) * qc);
        }
        case Family::q_lucas:
            return odd ? Poly() : Poly(q_binomial(2 * m, m));
        case Family::rogers_szego: {
            // (-s)^n q^(C(n,2))
            Scalar c = q_triangular(n);
            if (n % 2 != 0) c = -c;
            return Poly::monomial(c, 0, n);
        }
        default:
            throw std::invalid_argument("closed_moment: no closed formula for family");
    }
}

bool family_orthogonal(Family f) {
    switch (f) {
        case Family::rogers_szego:
        case Family::q_fibonacci:
        case Family::q_lucas:
            return false;
        default:
            return true;
    }
}

GramResult gram_diagonal(Family f, int N, const std::optional<Scalar>& s_value) {
    MomentFunctional mf = moments(f, 2 * N, s_value);
    std::vector<Poly> rows;
    for (int n = 0; n <= N; ++n) {
        Poly r = functional_row(f, n);
        if (s_value) r = r.subst_s(*s_value);
        rows.push_back(std::move(r));
    }
    GramResult res;
    res.off_diagonal_zero = true;
    for (int n = 0; n <= N; ++n) res.diagonal.push_back(apply_functional(mf, rows[n] * rows[n]));
    for (int mi = 0; mi <= N; ++mi)
        for (int ni = mi + 1; ni <= N; ++ni)
            if (!apply_functional(mf, rows[mi] * rows[ni]).is_zero()) res.off_diagonal_zero = false;
    return res;
}

}  // namespace qortho
