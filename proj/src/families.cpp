#include "qortho/families.hpp"

#include "qortho/qcore.hpp"
#include "qortho/qoperators.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qortho {

namespace {

struct FamilyName {
    Family f;
    std::string_view id;
};

constexpr FamilyName kNames[] = {
    {Family::hermite_classical, "hermite_classical"},
    {Family::hermite_bivar_tilde, "hermite_bivar_tilde"},
    {Family::q_hermite, "q_hermite"},
    {Family::cont_q_hermite, "cont_q_hermite"},
    {Family::physicists_q_hermite, "physicists_q_hermite"},
    {Family::fibonacci, "fibonacci"},
    {Family::lucas, "lucas"},
    {Family::lucas_star, "lucas_star"},
    {Family::chebyshev_t, "chebyshev_t"},
    {Family::chebyshev_t_star, "chebyshev_t_star"},
    {Family::chebyshev_u, "chebyshev_u"},
    {Family::rogers_szego, "rogers_szego"},
    {Family::q_fibonacci, "q_fibonacci"},
    {Family::q_lucas, "q_lucas"},
    {Family::monomials, "monomials"},
};

}  // namespace

std::optional<Family> family_from_string(std::string_view id) {
    for (const auto& n : kNames)
        if (n.id == id) return n.f;
    return std::nullopt;
}

std::string_view family_to_string(Family f) {
    for (const auto& n : kNames)
        if (n.f == f) return n.id;
    return "?";
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> fams = {
        Family::hermite_classical, Family::hermite_bivar_tilde, Family::q_hermite,
        Family::cont_q_hermite,    Family::physicists_q_hermite, Family::fibonacci,
        Family::lucas,             Family::lucas_star,           Family::chebyshev_t,
        Family::chebyshev_t_star,  Family::chebyshev_u,          Family::rogers_szego,
        Family::q_fibonacci,       Family::q_lucas,
    };
    return fams;
}

bool family_uses_s(Family f) {
    switch (f) {
        case Family::hermite_classical:
        case Family::hermite_bivar_tilde:
        case Family::q_hermite:
        case Family::fibonacci:
        case Family::lucas:
        case Family::lucas_star:
        case Family::rogers_szego:
        case Family::q_fibonacci:
        case Family::q_lucas:
            return true;
        default:
            return false;
    }
}

bool family_shifted_degree(Family f) {
    return f == Family::fibonacci || f == Family::q_fibonacci;
}

namespace {

Poly recurrence_step(Family f, int n, const Poly& p1, const Poly& p2) {
    const Poly x = Poly::x();
    const Poly s = Poly::s();
    switch (f) {
        case Family::hermite_classical:
            return x * p1 - (s * p2).scaled(Scalar(n - 1));
        case Family::hermite_bivar_tilde:
            return x * p1 - (s * p2).scaled(q_int(n - 1));
        case Family::q_hermite:
            return x * p1 - (s * p2).scaled(Scalar(1) - Scalar::q_power(n - 1));
        case Family::cont_q_hermite:
            return (x * p1).scaled(Scalar(2)) - p2.scaled(Scalar(1) - Scalar::q_power(n - 1));
        case Family::physicists_q_hermite:
            return (x * p1).scaled(Scalar(2)) - p2.scaled(q_int(2 * (n - 1)));
        case Family::fibonacci:
        case Family::lucas:
            return x * p1 + s * p2;
        case Family::chebyshev_t:
        case Family::chebyshev_u:
            return (x * p1).scaled(Scalar(2)) - p2;
        case Family::rogers_szego:
            return (x + s) * p1 + (x * s * p2).scaled(Scalar::q_power(n - 1) - Scalar(1));
        case Family::q_fibonacci:
        case Family::q_lucas:
            // p_n = (x + (q-1) s D_q) p_{n-1} + s p_{n-2}
            return x * p1 + (s * d_q(p1)).scaled(Scalar::q() - Scalar(1)) + s * p2;
        default:
            throw std::invalid_argument("recurrence_step: family has no plain recurrence");
    }
}

std::pair<Poly, Poly> initial_values(Family f) {
    const Poly one(1);
    const Poly x = Poly::x();
    switch (f) {
        case Family::hermite_classical:
        case Family::hermite_bivar_tilde:
        case Family::q_hermite:
        case Family::chebyshev_t:
            return {one, x};
        case Family::cont_q_hermite:
        case Family::physicists_q_hermite:
        case Family::chebyshev_u:
            return {one, x + x};
        case Family::fibonacci:
        case Family::q_fibonacci:
            return {Poly(), one};
        case Family::lucas:
        case Family::q_lucas:
            return {Poly(2), x};
        case Family::rogers_szego:
            return {one, x + Poly::s()};
        default:
            throw std::invalid_argument("initial_values: derived family");
    }
}

std::mutex family_mutex;
std::map<Family, std::vector<Poly>> family_cache;

}  // namespace

Poly family_poly(Family f, int n) {
    if (n < 0) throw std::invalid_argument("family_poly: negative index");
    switch (f) {
        case Family::lucas_star:
            return n == 0 ? Poly(1) : family_poly(Family::lucas, n);
        case Family::chebyshev_t_star:
            return n == 0 ? Poly(Scalar::from_fraction(1, 2))
                          : family_poly(Family::chebyshev_t, n);
        case Family::monomials:
            return Poly::monomial(Scalar(1), n);
        default:
            break;
    }
    std::scoped_lock lock(family_mutex);
    auto& cache = family_cache[f];
    if (cache.empty()) {
        auto [p0, p1] = initial_values(f);
        cache.push_back(std::move(p0));
        cache.push_back(std::move(p1));
    }
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        cache.push_back(recurrence_step(f, m, cache[m - 1], cache[m - 2]));
    }
    return cache[n];
}

Scalar q_hermite_coeff(int n, int k) {
    // h(n,k,q) = sum_j ([n,j] - [n,j-1]) C(n-k-j, k-j) (-1)^(k-j)
    Scalar acc;
    for (int j = 0; j <= k; ++j) {
        mpz_class c = binom(n - k - j, k - j);
        if (c == 0) continue;
        Scalar w = q_binomial(n, j) - q_binomial(n, j - 1);
        Scalar term = w * Scalar(c);
        if ((k - j) % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

namespace {

// [n]/[n-k] * [n-k choose k] expanded as q^k [n-k,k] + [n-k-1, k-1], which
// stays polynomial for every admissible (n, k) including n = 2k.
Scalar lucas_q_weight(int n, int k) {
    return Scalar::q_power(k) * q_binomial(n - k, k) + q_binomial(n - k - 1, k - 1);
}

// n/(n-k) * C(n-k,k) = C(n-k,k) + C(n-k-1,k-1).
mpz_class lucas_weight(int n, int k) { return binom(n - k, k) + binom(n - k - 1, k - 1); }

Poly assemble(int deg, bool use_s, const std::function<Scalar(int)>& coeff_of_k) {
    Poly r;
    for (int k = 0; 2 * k <= deg; ++k) {
        Scalar c = coeff_of_k(k);
        if (!c.is_zero()) r += Poly::monomial(c, deg - 2 * k, use_s ? k : 0);
    }
    return r;
}

}  // namespace

Poly family_closed_form(Family f, int n) {
    if (n < 0) throw std::invalid_argument("family_closed_form: negative index");
    const Scalar two(2);
    switch (f) {
        case Family::hermite_classical:
            return assemble(n, true, [n](int k) {
                Scalar c(binom(n, 2 * k) * double_factorial_odd(k));
                return k % 2 != 0 ? -c : c;
            });
        case Family::q_hermite:
            return assemble(n, true, [n](int k) { return q_hermite_coeff(n, k); });
        case Family::hermite_bivar_tilde:
            return assemble(n, true, [n](int k) {
                Scalar denom = (Scalar(1) - Scalar::q()).pow(k);
                return q_hermite_coeff(n, k) / denom;
            });
        case Family::cont_q_hermite:
            return assemble(n, false, [n, &two](int k) {
                return q_hermite_coeff(n, k) * two.pow(n - 2 * k);
            });
        case Family::physicists_q_hermite:
            return assemble(n, false, [n, &two](int k) {
                Scalar denom = (Scalar(1) - Scalar::q()).pow(k);
                return q_hermite_coeff(n, k).stretch_q() * two.pow(n - 2 * k) / denom;
            });
        case Family::fibonacci:
            if (n == 0) return Poly();
            return assemble(n - 1, true, [n](int k) { return Scalar(binom(n - 1 - k, k)); });
        case Family::lucas:
            if (n == 0) return Poly(2);
            return assemble(n, true, [n](int k) { return Scalar(lucas_weight(n, k)); });
        case Family::lucas_star:
            return n == 0 ? Poly(1) : family_closed_form(Family::lucas, n);
        case Family::chebyshev_t:
            // T_n = (1/2) L_n(2x, -1)
            if (n == 0) return Poly(1);
            return assemble(n, false, [n, &two](int k) {
                Scalar c = Scalar(lucas_weight(n, k)) * two.pow(n - 2 * k) / two;
                return k % 2 != 0 ? -c : c;
            });
        case Family::chebyshev_t_star:
            return n == 0 ? Poly(Scalar::from_fraction(1, 2))
                          : family_closed_form(Family::chebyshev_t, n);
        case Family::chebyshev_u:
            // U_n = F_{n+1}(2x, -1)
            return assemble(n, false, [n, &two](int k) {
                Scalar c = Scalar(binom(n - k, k)) * two.pow(n - 2 * k);
                return k % 2 != 0 ? -c : c;
            });
        case Family::rogers_szego: {
            // R_n = sum_k [n,k] x^k s^(n-k)
            Poly r;
            for (int k = 0; k <= n; ++k) r += Poly::monomial(q_binomial(n, k), k, n - k);
            return r;
        }
        case Family::q_fibonacci:
            if (n == 0) return Poly();
            return assemble(n - 1, true, [n](int k) {
                return q_binomial(n - 1 - k, k) * q_triangular(k + 1);
            });
        case Family::q_lucas:
            if (n == 0) return Poly(2);
            return assemble(n, true, [n](int k) { return lucas_q_weight(n, k) * q_triangular(k); });
        case Family::monomials:
            return Poly::monomial(Scalar(1), n);
    }
    throw std::invalid_argument("family_closed_form: unknown family");
}

Poly functional_row(Family f, int n) {
    // Row 0 must have constant term 1 so that Lambda(1) = 1; the families
    // whose own p_0 breaks that delegate to the normalized variant.
    switch (f) {
        case Family::fibonacci:
        case Family::q_fibonacci:
            return family_poly(f, n + 1);
        case Family::lucas:
            return family_poly(Family::lucas_star, n);
        case Family::q_lucas:
            return n == 0 ? Poly(1) : family_poly(f, n);
        case Family::chebyshev_t_star:
            return family_poly(Family::chebyshev_t, n);
        default:
            return family_poly(f, n);
    }
}

std::optional<SpecialValueKind> special_value_from_string(std::string_view id) {
    if (id == "gauss") return SpecialValueKind::gauss;
    if (id == "rs_q2") return SpecialValueKind::rs_q2;
    if (id == "rs_negq") return SpecialValueKind::rs_negq;
    if (id == "qh_q2") return SpecialValueKind::qh_q2;
    if (id == "qh_negq") return SpecialValueKind::qh_negq;
    return std::nullopt;
}

namespace {

// (1-q)(1-q^3)...(1-q^(2m-1))
Scalar odd_q_product(int m) {
    Scalar r(1);
    for (int i = 1; i <= m; ++i) r *= Scalar(1) - Scalar::q_power(2 * i - 1);
    return r;
}

// Evaluates the q-Hermite recurrence directly at scalar arguments x0, s0
// with (1 - Q^n) coefficients for Q = q^base_stretch.
Scalar q_hermite_at(const Scalar& x0, const Scalar& s0, int stretch, int n) {
    Scalar p0(1), p1 = x0;
    if (n == 0) return p0;
    for (int m = 2; m <= n; ++m) {
        Scalar next = x0 * p1 - (Scalar(1) - Scalar::q_power(stretch * (m - 1))) * s0 * p0;
        p0 = p1;
        p1 = next;
    }
    return p1;
}

// R_n(x0, y0, q^stretch) via the closed-form sum over Gaussian binomials.
Scalar rs_sum(const Scalar& x0, const Scalar& y0, int stretch, int n) {
    Scalar acc;
    for (int k = 0; k <= n; ++k) {
        Scalar b = q_binomial(n, k);
        if (stretch == 2) b = b.stretch_q();
        acc += b * x0.pow(k) * y0.pow(n - k);
    }
    return acc;
}

}  // namespace

SpecialValue special_value(SpecialValueKind kind, int n) {
    Scalar lhs, rhs;
    switch (kind) {
        case SpecialValueKind::gauss:
            lhs = rs_sum(Scalar(1), Scalar(-1), 1, n);
            rhs = n % 2 != 0 ? Scalar() : odd_q_product(n / 2);
            break;
        case SpecialValueKind::rs_q2: {
            lhs = rs_sum(Scalar::q(), Scalar(1), 2, n);
            rhs = Scalar(1);
            for (int i = 1; i <= n; ++i) rhs *= Scalar(1) + Scalar::q_power(i);
            break;
        }
        case SpecialValueKind::rs_negq:
            lhs = rs_sum(-Scalar::q(), Scalar(1), 1, n);
            rhs = odd_q_product((n + 1) / 2);
            break;
        case SpecialValueKind::qh_q2: {
            Scalar x0 = Scalar::v() + Scalar::v_power(-1);
            lhs = q_hermite_at(x0, Scalar(1), 2, n);
            rhs = Scalar(1);
            for (int i = 1; i <= n; ++i) rhs *= Scalar(1) + Scalar::q_power(i);
            rhs *= Scalar::v_power(-n);
            break;
        }
        case SpecialValueKind::qh_negq:
            lhs = q_hermite_at(Scalar(1) - Scalar::q(), -Scalar::q(), 1, n);
            rhs = odd_q_product((n + 1) / 2);
            break;
    }
    return SpecialValue{lhs, rhs, lhs == rhs};
}

}  // namespace qortho
