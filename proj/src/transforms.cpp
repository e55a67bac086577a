#include "qortho/transforms.hpp"

#include "qortho/qcore.hpp"

#include <stdexcept>

namespace qortho {

namespace {

struct ConnName {
    ConnectionId id;
    std::string_view name;
};

constexpr ConnName kConnNames[] = {
    {ConnectionId::eq_3_4, "eq_3_4"},   {ConnectionId::eq_3_5, "eq_3_5"},
    {ConnectionId::eq_4_10, "eq_4_10"}, {ConnectionId::eq_4_11, "eq_4_11"},
    {ConnectionId::eq_5_11, "eq_5_11"}, {ConnectionId::eq_5_12, "eq_5_12"},
    {ConnectionId::eq_5_20, "eq_5_20"}, {ConnectionId::eq_5_23, "eq_5_23"},
    {ConnectionId::eq_5_28, "eq_5_28"}, {ConnectionId::eq_5_29, "eq_5_29"},
    {ConnectionId::eq_6_4, "eq_6_4"},   {ConnectionId::eq_6_5, "eq_6_5"},
    {ConnectionId::eq_6_6, "eq_6_6"},   {ConnectionId::eq_6_7, "eq_6_7"},
};

}  // namespace

std::optional<ConnectionId> connection_from_string(std::string_view id) {
    for (const auto& n : kConnNames)
        if (n.name == id) return n.id;
    return std::nullopt;
}

std::string_view connection_to_string(ConnectionId id) {
    for (const auto& n : kConnNames)
        if (n.id == id) return n.name;
    return "?";
}

const std::vector<ConnectionId>& all_connections() {
    static const std::vector<ConnectionId> ids = [] {
        std::vector<ConnectionId> v;
        for (const auto& n : kConnNames) v.push_back(n.id);
        return v;
    }();
    return ids;
}

namespace {

// p(x, -s): flips the sign of s.
Poly at_neg_s(const Poly& p) { return p.subst_s_poly(-Poly::s()); }

// [n,k] - [n,k-1]
Scalar qbin_diff(int n, int k) { return q_binomial(n, k) - q_binomial(n, k - 1); }

// q^C(k,2) ([n]/[n-k]) [n-k,k], expanded to stay polynomial.
Scalar lucas_q_weight_tri(int n, int k) {
    return q_triangular(k) *
           (Scalar::q_power(k) * q_binomial(n - k, k) + q_binomial(n - k - 1, k - 1));
}

Poly sum_over_k(int n, const std::function<Scalar(int)>& weight,
                const std::function<Poly(int)>& part, bool weight_s_power) {
    Poly acc;
    for (int k = 0; 2 * k <= n; ++k) {
        Scalar w = weight(k);
        if (w.is_zero()) continue;
        Poly term = part(k).scaled(w);
        if (weight_s_power) term = term.mono_shift(0, k);
        acc += term;
    }
    return acc;
}

Poly xn(int n) { return Poly::monomial(Scalar(1), n); }

}  // namespace

ConnectionSides connection_sides(ConnectionId id, int n) {
    using F = Family;
    switch (id) {
        case ConnectionId::eq_3_4:
            // sum (C(n,k)-C(n,k-1)) s^k F_{n+1-2k}(x,-s) = x^n
            return {sum_over_k(
                        n, [n](int k) { return Scalar(binom(n, k) - binom(n, k - 1)); },
                        [n](int k) { return at_neg_s(family_poly(F::fibonacci, n + 1 - 2 * k)); },
                        true),
                    xn(n)};
        case ConnectionId::eq_3_5:
            // sum C(n,k) s^k L*_{n-2k}(x,-s) = x^n
            return {sum_over_k(
                        n, [n](int k) { return Scalar(binom(n, k)); },
                        [n](int k) { return at_neg_s(family_poly(F::lucas_star, n - 2 * k)); },
                        true),
                    xn(n)};
        case ConnectionId::eq_4_10:
            // 2^-n sum (C(n,k)-C(n,k-1)) U_{n-2k} = x^n
            return {sum_over_k(
                        n,
                        [n](int k) {
                            return Scalar(binom(n, k) - binom(n, k - 1)) / Scalar(2).pow(n);
                        },
                        [n](int k) { return family_poly(F::chebyshev_u, n - 2 * k); }, false),
                    xn(n)};
        case ConnectionId::eq_4_11:
            // 2^(1-n) sum C(n,k) T*_{n-2k} = x^n
            return {sum_over_k(
                        n,
                        [n](int k) { return Scalar(binom(n, k)) / Scalar(2).pow(n - 1); },
                        [n](int k) { return family_poly(F::chebyshev_t_star, n - 2 * k); }, false),
                    xn(n)};
        case ConnectionId::eq_5_11:
            // sum [n,k] s^k L*_{n-2k}(x,-s) = H_n(x,s,q)
            return {sum_over_k(
                        n, [n](int k) { return q_binomial(n, k); },
                        [n](int k) { return at_neg_s(family_poly(F::lucas_star, n - 2 * k)); },
                        true),
                    family_poly(F::q_hermite, n)};
        case ConnectionId::eq_5_12:
            // sum ([n,k]-[n,k-1]) s^k F_{n+1-2k}(x,-s) = H_n(x,s,q)
            return {sum_over_k(
                        n, [n](int k) { return qbin_diff(n, k); },
                        [n](int k) { return at_neg_s(family_poly(F::fibonacci, n + 1 - 2 * k)); },
                        true),
                    family_poly(F::q_hermite, n)};
        case ConnectionId::eq_5_20:
            // sum [n,k] s^k L*_{n-2k}(x,-s,q) = x^n
            return {sum_over_k(
                        n, [n](int k) { return q_binomial(n, k); },
                        [n](int k) {
                            int m = n - 2 * k;
                            return m == 0 ? Poly(1) : at_neg_s(family_poly(F::q_lucas, m));
                        },
                        true),
                    xn(n)};
        case ConnectionId::eq_5_23:
            // sum ([n,k]-[n,k-1]) s^k F_{n+1-2k}(x,-s,q) = x^n
            return {sum_over_k(
                        n, [n](int k) { return qbin_diff(n, k); },
                        [n](int k) {
                            return at_neg_s(family_poly(F::q_fibonacci, n + 1 - 2 * k));
                        },
                        true),
                    xn(n)};
        case ConnectionId::eq_5_28:
            // L*_n(x,-s) = sum q^C(k,2) [n]/[n-k] [n-k,k] (-s)^k H_{n-2k}(x,s,q)
            return {at_neg_s(family_poly(F::lucas_star, n)),
                    sum_over_k(
                        n,
                        [n](int k) {
                            Scalar w = lucas_q_weight_tri(n, k);
                            return k % 2 != 0 ? -w : w;
                        },
                        [n](int k) { return family_poly(F::q_hermite, n - 2 * k); }, true)};
        case ConnectionId::eq_5_29:
            // F_{n+1}(x,-s) = sum [n-k,k] q^C(k+1,2) (-s)^k H_{n-2k}(x,s,q)
            return {at_neg_s(family_poly(F::fibonacci, n + 1)),
                    sum_over_k(
                        n,
                        [n](int k) {
                            Scalar w = q_binomial(n - k, k) * q_triangular(k + 1);
                            return k % 2 != 0 ? -w : w;
                        },
                        [n](int k) { return family_poly(F::q_hermite, n - 2 * k); }, true)};
        case ConnectionId::eq_6_4:
            // sum ([n,k]-[n,k-1]) U_{n-2k} = H_n(x|q)
            return {sum_over_k(
                        n, [n](int k) { return qbin_diff(n, k); },
                        [n](int k) { return family_poly(F::chebyshev_u, n - 2 * k); }, false),
                    family_poly(F::cont_q_hermite, n)};
        case ConnectionId::eq_6_5:
            // U_n = sum [n-k,k] q^C(k+1,2) (-1)^k H_{n-2k}(x|q)
            return {family_poly(F::chebyshev_u, n),
                    sum_over_k(
                        n,
                        [n](int k) {
                            Scalar w = q_binomial(n - k, k) * q_triangular(k + 1);
                            return k % 2 != 0 ? -w : w;
                        },
                        [n](int k) { return family_poly(F::cont_q_hermite, n - 2 * k); }, false)};
        case ConnectionId::eq_6_6: {
            // H_n(x|q) = sum_{k=0..n} [n,k] T_{n-2k}, with T_{-m} = T_m
            Poly rhs;
            for (int k = 0; k <= n; ++k) {
                int idx = n - 2 * k;
                if (idx < 0) idx = -idx;
                rhs += family_poly(F::chebyshev_t, idx).scaled(q_binomial(n, k));
            }
            return {family_poly(F::cont_q_hermite, n), rhs};
        }
        case ConnectionId::eq_6_7:
            // T*_n = 1/2 sum q^C(k,2) [n]/[n-k] [n-k,k] (-1)^k H_{n-2k}(x|q)
            // (the star normalization T*_0 = 1/2 resolves the n = 0 weight)
            return {family_poly(F::chebyshev_t_star, n),
                    sum_over_k(
                        n,
                        [n](int k) {
                            Scalar w = lucas_q_weight_tri(n, k) / Scalar(2);
                            return k % 2 != 0 ? -w : w;
                        },
                        [n](int k) { return family_poly(F::cont_q_hermite, n - 2 * k); }, false)};
    }
    throw std::invalid_argument("connection_sides: unknown identity");
}

ConnectionVerdict connection_check(ConnectionId id, int n) {
    ConnectionSides sides = connection_sides(id, n);
    Poly residual = sides.lhs - sides.rhs;
    return ConnectionVerdict{residual.is_zero(), std::move(residual)};
}

std::vector<Poly> to_basis(const Poly& p, Family f) {
    Poly rem = p;
    int d = std::max(rem.deg_x(), 0);
    std::vector<Poly> coeffs(d + 1);
    for (int k = d; k >= 0; --k) {
        Poly row = functional_row(f, k);
        Poly lead = row.coeff_x(k);
        if (!lead.is_scalar() || lead.as_scalar().is_zero())
            throw std::domain_error("to_basis: family row has deficient degree");
        Poly ck = rem.coeff_x(k).scaled(lead.as_scalar().inverse());
        rem -= ck * row;
        coeffs[k] = std::move(ck);
    }
    if (!rem.is_zero()) throw std::logic_error("to_basis: triangular reduction failed");
    return coeffs;
}

Poly from_basis(const std::vector<Poly>& coeffs, Family f) {
    Poly acc;
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
        if (!coeffs[k].is_zero()) acc += coeffs[k] * functional_row(f, k);
    return acc;
}

std::optional<PairId> pair_from_string(std::string_view id) {
    if (id == "pair_3_6") return PairId::pair_3_6;
    if (id == "pair_3_8") return PairId::pair_3_8;
    if (id == "pair_5_21") return PairId::pair_5_21;
    if (id == "pair_5_24") return PairId::pair_5_24;
    return std::nullopt;
}

std::string_view pair_to_string(PairId id) {
    switch (id) {
        case PairId::pair_3_6: return "pair_3_6";
        case PairId::pair_3_8: return "pair_3_8";
        case PairId::pair_5_21: return "pair_5_21";
        case PairId::pair_5_24: return "pair_5_24";
    }
    return "?";
}

namespace {

// Weight of the k-th term at index n, before the s^k (or (-s)^k) factor.
Scalar pair_weight(PairId id, PairDirection dir, int n, int k) {
    bool fwd = dir == PairDirection::forward;
    switch (id) {
        case PairId::pair_3_6:
            return fwd ? Scalar(binom(n - k, k)) : Scalar(binom(n, k) - binom(n, k - 1));
        case PairId::pair_3_8:
            return fwd ? Scalar(binom(n - k, k) + binom(n - k - 1, k - 1)) : Scalar(binom(n, k));
        case PairId::pair_5_21:
            return fwd ? q_binomial(n, k) : lucas_q_weight_tri(n, k);
        case PairId::pair_5_24:
            return fwd ? qbin_diff(n, k) : q_binomial(n - k, k) * q_triangular(k + 1);
    }
    return Scalar();
}

}  // namespace

std::vector<Poly> inverse_pair_apply(PairId id, const std::vector<Poly>& seq, PairDirection dir,
                                     const Poly& s_value) {
    if (seq.empty()) throw std::invalid_argument("inverse_pair_apply: empty sequence");
    const bool backward = dir == PairDirection::backward;
    std::vector<Poly> out(seq.size());
    for (int n = 0; n < static_cast<int>(seq.size()); ++n) {
        Poly acc;
        for (int k = 0; 2 * k <= n; ++k) {
            Scalar w = pair_weight(id, dir, n, k);
            if (w.is_zero()) continue;
            // forward carries s^k, backward (-s)^k
            Poly sk = s_value.pow(k);
            if (backward && k % 2 != 0) sk = -sk;
            acc += seq[n - 2 * k] * sk.scaled(w);
        }
        out[n] = std::move(acc);
    }
    return out;
}

ChebPoly cheb_basis_convert(const ChebPoly& p, ChebBasis to) { return cheb_convert(p, to); }

}  // namespace qortho
