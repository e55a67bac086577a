#include "qortho/suites.hpp"

#include "qortho/analytic.hpp"
#include "qortho/circle.hpp"
#include "qortho/families.hpp"
#include "qortho/qcore.hpp"
#include "qortho/qoperators.hpp"
#include "qortho/text.hpp"
#include "qortho/transforms.hpp"
#include "qortho/umbral.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

namespace qortho {

namespace {

struct Check {
    std::string id;
    std::string tag;
    std::function<void(std::ostringstream&)> run;  // throws or writes detail
};

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw check_failure(what);
}

std::string fam(Family f) { return std::string(family_to_string(f)); }

Poly phys_hermite(int n) {
    // bold H_n(x) = H_n(2x, 2)
    Poly p = family_poly(Family::hermite_classical, n);
    return p.subst_x(Poly::x() + Poly::x()).subst_s(Scalar(2));
}

bool poly_only_even_v(const Poly& p) {
    for (const auto& [m, c] : p.terms())
        if (!c.only_even_v()) return false;
    return true;
}

// ---------------------------------------------------------------- classical

std::vector<Check> classical_checks(const SuiteOptions& opt) {
    std::vector<Check> cs;
    const int N = opt.upto;
    cs.push_back({"hermite_closed_recurrence", "1.4/1.6", [N](std::ostringstream& out) {
        for (int n = 0; n <= N; ++n)
            require(family_poly(Family::hermite_classical, n) ==
                        family_closed_form(Family::hermite_classical, n),
                    "mismatch at n=" + std::to_string(n));
        out << "recurrence = closed form, n <= " << N;
    }});
    cs.push_back({"hermite_printed_values", "1.4", [](std::ostringstream& out) {
        const char* expected[] = {"1", "x", "x^2 - s", "x^3 - 3*s*x",
                                  "x^4 - 6*s*x^2 + 3*s^2", "x^5 - 10*s*x^3 + 15*s^2*x"};
        for (int n = 0; n <= 5; ++n) {
            Poly p = family_poly(Family::hermite_classical, n);
            require(p == parse_poly(expected[n]), "value mismatch at n=" + std::to_string(n));
            require(render_poly(p) == render_poly(parse_poly(expected[n])),
                    "rendering mismatch at n=" + std::to_string(n));
        }
        out << "first six polynomials match";
    }});
    cs.push_back({"hermite_umbral_inverse", "1.13", [N](std::ostringstream& out) {
        CoeffMatrix m = coeff_matrix(Family::hermite_classical, N);
        CoeffMatrix inv = umbral_inverse(m);
        std::vector<Poly> neg_rows;
        for (int n = 0; n <= N; ++n)
            neg_rows.push_back(
                family_poly(Family::hermite_classical, n).subst_s_poly(-Poly::s()));
        require(inv == coeff_matrix_from_rows(neg_rows), "inverse is not H_n(x,-s)");
        out << "umbral inverse is s -> -s, N = " << N;
    }});
    cs.push_back({"hermite_moments", "1.22", [N](std::ostringstream& out) {
        MomentFunctional mf = moments(Family::hermite_classical, N);
        for (int n = 0; n <= N; ++n)
            require(mf.lambda[n] == closed_moment(Family::hermite_classical, n),
                    "moment mismatch at n=" + std::to_string(n));
        out << "moments equal (2n-1)!! s^n, n <= " << N;
    }});
    cs.push_back({"hermite_gram", "1.27", [N](std::ostringstream& out) {
        int half = N / 2 + 1;
        GramResult g = gram_diagonal(Family::hermite_classical, half);
        require(g.off_diagonal_zero, "off-diagonal entry nonzero");
        for (int n = 0; n <= half; ++n)
            require(g.diagonal[n] == Poly::monomial(Scalar(factorial(n)), 0, n),
                    "diagonal mismatch at n=" + std::to_string(n));
        out << "Gram diagonal s^n n!, n <= " << half;
    }});
    return cs;
}

// --------------------------------------------------------------- q_binomial

std::vector<Check> q_binomial_checks(const SuiteOptions& opt) {
    std::vector<Check> cs;
    const int N = std::max(opt.upto, 20);
    cs.push_back({"pascal_rules", "2.1/2.2", [N](std::ostringstream& out) {
        for (int n = 0; n < N; ++n)
            for (int k = 0; k <= n + 1; ++k) {
                Scalar lhs = q_binomial(n + 1, k);
                require(lhs == Scalar::q_power(k) * q_binomial(n, k) + q_binomial(n, k - 1),
                        "rule (2.1) fails");
                require(lhs == q_binomial(n, k) +
                                   Scalar::q_power(n + 1 - k) * q_binomial(n, k - 1),
                        "rule (2.2) fails");
            }
        out << "both Pascal rules hold, n <= " << N;
    }});
    cs.push_back({"symmetry", "2.1", [N](std::ostringstream& out) {
        for (int n = 0; n <= N; ++n)
            for (int k = 0; k <= n; ++k)
                require(q_binomial(n, k) == q_binomial(n, n - k), "symmetry fails");
        out << "[n,k] = [n,n-k], n <= " << N;
    }});
    cs.push_back({"v1_specialization", "2.1", [N](std::ostringstream& out) {
        for (int n = 0; n <= N; ++n)
            for (int k = 0; k <= n; ++k)
                require(q_binomial(n, k).eval_at_v(Scalar(1)) == Scalar(binom(n, k)),
                        "binomial specialization fails");
        out << "q-binomial at v=1 is the binomial, n <= " << N;
    }});
    cs.push_back({"pochhammer_coefficients", "2.13", [](std::ostringstream& out) {
        for (int n = 0; n <= 12; ++n) {
            Poly p = q_pochhammer(n);
            for (int k = 0; k <= n; ++k) {
                Scalar expect = q_triangular(k) * q_binomial(n, k);
                if (k % 2 != 0) expect = -expect;
                require(p.coeff(k, 0) == expect, "coefficient mismatch");
            }
        }
        out << "(x;q)_n coefficients are (-1)^k q^C(k,2) [n,k], n <= 12";
    }});
    return cs;
}

// -------------------------------------------------------------- rogers_szego

std::vector<Check> rogers_szego_checks(const SuiteOptions& opt) {
    std::vector<Check> cs;
    const int N = opt.upto;
    cs.push_back({"closed_recurrence", "2.7/2.9", [N](std::ostringstream& out) {
        for (int n = 0; n <= N; ++n)
            require(family_poly(Family::rogers_szego, n) ==
                        family_closed_form(Family::rogers_szego, n),
                    "mismatch at n=" + std::to_string(n));
        out << "recurrence = Gaussian-binomial sum, n <= " << N;
    }});
    cs.push_back({"operator_form", "2.7", [N](std::ostringstream& out) {
        OpSpec op = OpSpec::mul_x() + OpSpec::shift_q().scaled(Poly::s());
        for (int n = 0; n <= N; ++n)
            require(op_power_apply(op, n, Poly(1)) == family_poly(Family::rogers_szego, n),
                    "operator power mismatch at n=" + std::to_string(n));
        out << "(x + s eps)^n 1 = R_n, n <= " << N;
    }});
    cs.push_back({"dq_lowering", "2.8", [N](std::ostringstream& out) {
        for (int n = 1; n <= N; ++n)
            require(d_q(family_poly(Family::rogers_szego, n)) ==
                        family_poly(Family::rogers_szego, n - 1).scaled(q_int(n)),
                    "lowering fails at n=" + std::to_string(n));
        out << "D_q R_n = [n] R_{n-1}, n <= " << N;
    }});
    cs.push_back({"special_values", "Gauss/2.11/2.12", [N](std::ostringstream& out) {
        for (int n = 0; n <= N; ++n) {
            require(special_value(SpecialValueKind::gauss, n).equal,
                    "Gauss formula fails at n=" + std::to_string(n));
            require(special_value(SpecialValueKind::rs_q2, n).equal,
                    "(2.11) fails at n=" + std::to_string(n));
            require(special_value(SpecialValueKind::rs_negq, n).equal,
                    "(2.12) fails at n=" + std::to_string(n));
        }
        out << "Gauss, base-q^2 and -q evaluations, n <= " << N;
    }});
    cs.push_back({"umbral_inverse", "2.18/2.19", [N](std::ostringstream& out) {
        CoeffMatrix inv = umbral_inverse(coeff_matrix(Family::rogers_szego, N));
        for (int n = 0; n <= N; ++n) {
            // inverse rows and the product form prod_j (x - q^j s)
            Poly prod(1);
            for (int j = 0; j < n; ++j)
                prod *= Poly::x() - Poly::s().scaled(Scalar::q_power(j));
            require(inv.row_poly(n) == prod, "product form mismatch");
            for (int k = 0; k <= n; ++k) {
                Scalar expect = q_triangular(n - k) * q_binomial(n, k);
                if ((n - k) % 2 != 0) expect = -expect;
                require(inv.entry(n, k) == Poly::monomial(expect, 0, n - k),
                        "coefficient mismatch");
            }
        }
        out << "inverse rows are (-s)^(n-k) q^C(n-k,2) [n,k]; equal the shifted product, N = "
            << N;
    }});
    cs.push_back({"moments", "2.20", [N](std::ostringstream& out) {
        MomentFunctional mf = moments(Family::rogers_szego, N);
        for (int n = 0; n <= N; ++n)
            require(mf.lambda[n] == closed_moment(Family::rogers_szego, n),
                    "moment mismatch at n=" + std::to_string(n));
        out << "moments are (-s)^n q^C(n,2), n <= " << N;
    }});
    return cs;
}

// ----------------------------------------------------------- fib_lucas_cheb

std::vector<Check> fib_lucas_cheb_checks(const SuiteOptions& opt) {
    std::vector<Check> cs;
    const int N = opt.upto;
    cs.push_back({"closed_recurrence", "3.1/3.2/4.1/4.3", [N](std::ostringstream& out) {
        for (Family f : {Family::fibonacci, Family::lucas, Family::chebyshev_t,
                         Family::chebyshev_u}) {
            for (int n = 0; n <= N + 1; ++n)
                require(family_poly(f, n) == family_closed_form(f, n),
                        fam(f) + " mismatch at n=" + std::to_string(n));
        }
        out << "recurrence = closed form for F, L, T, U, n <= " << N + 1;
    }});
    cs.push_back({"lucas_fibonacci_relation", "3.3", [N](std::ostringstream& out) {
        for (int n = 1; n <= N; ++n)
            require(family_poly(Family::lucas, n) ==
                        family_poly(Family::fibonacci, n + 1) +
                            Poly::s() * family_poly(Family::fibonacci, n - 1),
                    "relation fails at n=" + std::to_string(n));
        out << "L_n = F_{n+1} + s F_{n-1}, 1 <= n <= " << N;
    }});
    cs.push_back({"fibonacci_gcd", "3.1", [](std::ostringstream& out) {
        std::vector<mpz_class> fib(21);
        for (int n = 0; n <= 20; ++n) {
            Poly p = family_poly(Family::fibonacci, n).subst_x(Poly(1)).subst_s(Scalar(1));
            fib[n] = p.is_zero() ? mpz_class(0) : p.as_scalar().num().constant_term();
        }
        for (int m = 1; m <= 20; ++m)
            for (int n = 1; n <= 20; ++n) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), fib[m].get_mpz_t(), fib[n].get_mpz_t());
                long d = std::gcd(m, n);
                require(g == fib[d], "gcd property fails");
            }
        out << "gcd(F_m, F_n) = F_gcd(m,n), m,n <= 20";
    }});
    cs.push_back({"chebyshev_from_lucas", "4.1/4.3", [N](std::ostringstream& out) {
        Poly two_x = Poly::x() + Poly::x();
        for (int n = 1; n <= N; ++n) {
            Poly t = family_poly(Family::lucas, n).subst_x(two_x).subst_s(Scalar(-1));
            require(family_poly(Family::chebyshev_t, n) ==
                        t.scaled(Scalar::from_fraction(1, 2)),
                    "T_n identity fails");
            Poly u = family_poly(Family::fibonacci, n + 1).subst_x(two_x).subst_s(Scalar(-1));
            require(family_poly(Family::chebyshev_u, n) == u, "U_n identity fails");
        }
        out << "T_n = L_n(2x,-1)/2 and U_n = F_{n+1}(2x,-1), n <= " << N;
    }});
    cs.push_back({"pell_identity", "4.5", [N](std::ostringstream& out) {
        int bound = std::min(N, 12);
        for (int n = 1; n <= bound; ++n) {
            Poly t = family_poly(Family::chebyshev_t, n);
            Poly u = family_poly(Family::chebyshev_u, n - 1);
            Poly lhs = t * t - (Poly::x() * Poly::x() - Poly(1)) * u * u;
            require(lhs == Poly(1), "Pell identity fails at n=" + std::to_string(n));
        }
        out << "T_n^2 - (x^2-1) U_{n-1}^2 = 1, n <= " << bound;
    }});
    cs.push_back({"connections", "3.4/3.5/4.10/4.11", [N](std::ostringstream& out) {
        for (ConnectionId id : {ConnectionId::eq_3_4, ConnectionId::eq_3_5,
                                ConnectionId::eq_4_10, ConnectionId::eq_4_11})
            for (int n = 0; n <= N; ++n)
                require(connection_check(id, n).pass,
                        std::string(connection_to_string(id)) + " fails at n=" +
                            std::to_string(n));
        out << "monomial expansions hold, n <= " << N;
    }});
    cs.push_back({"inverse_pairs", "3.6-3.9", [N](std::ostringstream& out) {
        std::vector<Poly> seq;
        for (int n = 0; n <= N; ++n) seq.push_back(Poly(Scalar(1 + ((7 * n) % 5))));
        seq[0] = Poly(1);
        for (PairId id : {PairId::pair_3_6, PairId::pair_3_8}) {
            auto fwd = inverse_pair_apply(id, seq, PairDirection::forward);
            auto back = inverse_pair_apply(id, fwd, PairDirection::backward);
            require(back == seq, "round trip fails");
        }
        out << "backward o forward = id on test sequences, length " << N + 1;
    }});
    cs.push_back({"moments", "3.10/3.12/4.7/4.9", [N](std::ostringstream& out) {
        for (Family f : {Family::fibonacci, Family::lucas, Family::chebyshev_t,
                         Family::chebyshev_u}) {
            MomentFunctional mf = moments(f, N, closed_moment_s(f));
            for (int n = 0; n <= N; ++n)
                require(mf.lambda[n] == closed_moment(f, n),
                        fam(f) + " moment mismatch at n=" + std::to_string(n));
        }
        out << "Catalan / central binomial / Chebyshev moments, n <= " << N;
    }});
    cs.push_back({"cheb_conversions", "4.2/4.4", [N](std::ostringstream& out) {
        for (int n = 0; n <= N; ++n) {
            for (ChebBasis from : {ChebBasis::T, ChebBasis::U, ChebBasis::Monomial})
                for (ChebBasis to : {ChebBasis::T, ChebBasis::U, ChebBasis::Monomial}) {
                    ChebPoly p = ChebPoly::unit(from, n);
                    require(cheb_convert(cheb_convert(p, to), from) == p,
                            "round trip fails");
                }
            require(cheb_to_poly(ChebPoly::unit(ChebBasis::T, n)) ==
                        family_poly(Family::chebyshev_t, n),
                    "T unit mismatch");
        }
        out << "basis conversions round-trip, n <= " << N;
    }});
    return cs;
}

// ---------------------------------------------------------- q_hermite_exact

std::vector<Check> q_hermite_checks(const SuiteOptions& opt) {
    std::vector<Check> cs;
    const int N = opt.upto;
    cs.push_back({"printed_values", "5.1/5.4-lists", [](std::ostringstream& out) {
        const char* qh[] = {"1", "x", "x^2 - (1 - q)*s", "x^3 - (1 - q)*(q + 2)*s*x",
                            "x^4 - (1 - q)*(q^2 + 2*q + 3)*s*x^2 + (1 - q)^2*(1 + q + q^2)*s^2"};
        for (int n = 0; n <= 4; ++n)
            require(family_poly(Family::q_hermite, n) == parse_poly(qh[n]),
                    "q-Hermite list mismatch at n=" + std::to_string(n));
        const char* qf[] = {"0", "1", "x", "x^2 + q*s", "x^3 + q*(1 + q)*s*x",
                            "x^4 + q*(1 + q + q^2)*s*x^2 + q^3*s^2",
                            "x^5 + q*(1 + q + q^2 + q^3)*s*x^3 + q^3*(1 + q + q^2)*s^2*x"};
        for (int n = 0; n <= 6; ++n)
            require(family_poly(Family::q_fibonacci, n) == parse_poly(qf[n]),
                    "q-Fibonacci list mismatch at n=" + std::to_string(n));
        out << "printed value lists match";
    }});
    cs.push_back({"closed_recurrence", "5.2/5.3/5.13/5.14/5.17/5.19", [N](std::ostringstream& out) {
        for (Family f : {Family::q_hermite, Family::hermite_bivar_tilde, Family::q_fibonacci,
                         Family::q_lucas})
            for (int n = 0; n <= N + 1; ++n)
                require(family_poly(f, n) == family_closed_form(f, n),
                        fam(f) + " mismatch at n=" + std::to_string(n));
        out << "recurrence = closed form for the q-families, n <= " << N + 1;
    }});
    cs.push_back({"eq_5_4_substitution", "5.4", [N](std::ostringstream& out) {
        OpSpec op = OpSpec::mul_x() +
                    OpSpec::diff_q().scaled(Poly::s().scaled(Scalar(1) - Scalar::q()));
        for (int n = 0; n <= N; ++n)
            require(op_substitute(family_poly(Family::q_hermite, n), op) ==
                        Poly::monomial(Scalar(1), n),
                    "substitution fails at n=" + std::to_string(n));
        out << "H_n(x + (1-q)s D_q, s, q) 1 = x^n, n <= " << N;
    }});
    cs.push_back({"umbral_inverse", "5.4/5.5", [N](std::ostringstream& out) {
        int bound = std::min(N, 12);
        OpSpec op = OpSpec::mul_x() +
                    OpSpec::diff_q().scaled(Poly::s().scaled(Scalar(1) - Scalar::q()));
        std::vector<Poly> h_rows;
        for (int n = 0; n <= bound; ++n) h_rows.push_back(op_power_apply(op, n, Poly(1)));
        require(umbral_inverse(coeff_matrix(Family::q_hermite, bound)) ==
                    coeff_matrix_from_rows(h_rows),
                "inverse differs from (x + (1-q)s D_q)^n 1");
        out << "umbral inverse rows are h_n, N = " << bound;
    }});
    cs.push_back({"h_poly_expansions", "5.30", [N](std::ostringstream& out) {
        OpSpec op = OpSpec::mul_x() +
                    OpSpec::diff_q().scaled(Poly::s().scaled(Scalar(1) - Scalar::q()));
        for (int n = 0; n <= N; ++n) {
            Poly h = op_power_apply(op, n, Poly(1));
            Poly lucas_sum, fib_sum;
            for (int k = 0; 2 * k <= n; ++k) {
                int m = n - 2 * k;
                Poly lstar = m == 0 ? Poly(1) : family_poly(Family::q_lucas, m);
                lucas_sum += lstar.subst_s_poly(-Poly::s())
                                 .scaled(Scalar(binom(n, k)))
                                 .mono_shift(0, k);
                fib_sum += family_poly(Family::q_fibonacci, m + 1)
                               .subst_s_poly(-Poly::s())
                               .scaled(Scalar(binom(n, k) - binom(n, k - 1)))
                               .mono_shift(0, k);
            }
            require(h == lucas_sum, "Lucas expansion fails at n=" + std::to_string(n));
            require(h == fib_sum, "Fibonacci expansion fails at n=" + std::to_string(n));
        }
        out << "h_n matches both expansions, n <= " << N;
    }});
    cs.push_back({"special_values", "5.7/5.8", [N](std::ostringstream& out) {
        for (int n = 0; n <= N; ++n) {
            require(special_value(SpecialValueKind::qh_q2, n).equal,
                    "(5.7) fails at n=" + std::to_string(n));
            require(special_value(SpecialValueKind::qh_negq, n).equal,
                    "(5.8) fails at n=" + std::to_string(n));
        }
        out << "special evaluations agree with products, n <= " << N;
    }});
    cs.push_back({"connections", "5.11/5.12/5.20/5.23/5.28/5.29", [N](std::ostringstream& out) {
        for (ConnectionId id : {ConnectionId::eq_5_11, ConnectionId::eq_5_12,
                                ConnectionId::eq_5_20, ConnectionId::eq_5_23,
                                ConnectionId::eq_5_28, ConnectionId::eq_5_29})
            for (int n = 0; n <= N; ++n)
                require(connection_check(id, n).pass,
                        std::string(connection_to_string(id)) + " fails at n=" +
                            std::to_string(n));
        out << "q-connection identities hold, n <= " << N;
    }});
    cs.push_back({"specializations", "5.11 at q=1, q=0", [N](std::ostringstream& out) {
        auto at_v = [](const Poly& p, const Scalar& v) {
            return p.map_scalars([&](const Scalar& c) { return c.eval_at_v(v); });
        };
        for (int n = 0; n <= N; ++n) {
            ConnectionSides s511 = connection_sides(ConnectionId::eq_5_11, n);
            // q = 1: both sides reduce to the classical identity (3.5)
            ConnectionSides s35 = connection_sides(ConnectionId::eq_3_5, n);
            require(at_v(s511.lhs, Scalar(1)) == s35.lhs, "q=1 lhs mismatch");
            require(at_v(s511.rhs, Scalar(1)) == Poly::monomial(Scalar(1), n),
                    "q=1 rhs is not x^n");
            // q = 0: rhs telescopes to F_{n+1}(x,-s)
            require(at_v(s511.rhs, Scalar(0)) ==
                        family_poly(Family::fibonacci, n + 1).subst_s_poly(-Poly::s()),
                    "q=0 rhs mismatch");
            require(at_v(s511.lhs, Scalar(0)) == at_v(s511.rhs, Scalar(0)),
                    "q=0 sides differ");
        }
        out << "(5.11) degenerates to (3.5) at q=1 and telescopes at q=0, n <= " << N;
    }});
    cs.push_back({"inverse_pairs", "5.21-5.25", [N](std::ostringstream& out) {
        std::vector<Poly> seq;
        for (int n = 0; n <= N; ++n) seq.push_back(Poly(Scalar(1 + ((3 * n) % 7))));
        seq[0] = Poly(1);
        for (PairId id : {PairId::pair_5_21, PairId::pair_5_24}) {
            auto fwd = inverse_pair_apply(id, seq, PairDirection::forward);
            auto back = inverse_pair_apply(id, fwd, PairDirection::backward);
            require(back == seq, "round trip fails");
            auto fwd2 = inverse_pair_apply(id, back, PairDirection::forward);
            require(fwd2 == fwd, "forward o backward fails");
        }
        // delta sequence under (5.21): b(2k) = [2k,k] s^k
        std::vector<Poly> delta(N + 1);
        delta[0] = Poly(1);
        auto b = inverse_pair_apply(PairId::pair_5_21, delta, PairDirection::forward);
        for (int n = 0; n <= N; ++n) {
            Poly expect = n % 2 == 0 ? Poly::monomial(q_binomial(n, n / 2), 0, n / 2) : Poly();
            require(b[n] == expect, "delta image mismatch");
        }
        out << "q-inverse pairs round-trip; delta maps to [2k,k] s^k";
    }});
    cs.push_back({"moments_q_fib_lucas", "5.26/5.27", [N](std::ostringstream& out) {
        for (Family f : {Family::q_fibonacci, Family::q_lucas}) {
            MomentFunctional mf = moments(f, N, closed_moment_s(f));
            for (int n = 0; n <= N; ++n)
                require(mf.lambda[n] == closed_moment(f, n),
                        fam(f) + " moment mismatch at n=" + std::to_string(n));
        }
        out << "q-Catalan and q-central-binomial moments, n <= " << N;
    }});
    cs.push_back({"touchard_riordan", "5.31", [N](std::ostringstream& out) {
        MomentFunctional mf = moments(Family::q_hermite, N);
        for (int n = 0; n <= N; ++n)
            require(mf.lambda[n] == closed_moment(Family::q_hermite, n),
                    "formula mismatch at n=" + std::to_string(n));
        out << "moments match the signed ballot sum, n <= " << N;
    }});
    cs.push_back({"gram_and_nonorthogonality", "5.3/§5.4", [N](std::ostringstream& out) {
        int half = std::min(N, 6);
        GramResult g = gram_diagonal(Family::q_hermite, half);
        require(g.off_diagonal_zero, "q-Hermite off-diagonal nonzero");
        for (int n = 0; n <= half; ++n)
            require(g.diagonal[n] == Poly::monomial(q_q_pochhammer(n), 0, n),
                    "diagonal is not (q;q)_n s^n");
        GramResult f = gram_diagonal(Family::q_fibonacci, half, Scalar(-1));
        require(!f.off_diagonal_zero, "q-Fibonacci unexpectedly orthogonal");
        GramResult l = gram_diagonal(Family::q_lucas, half, Scalar(-1));
        require(!l.off_diagonal_zero, "q-Lucas unexpectedly orthogonal");
        out << "q-Hermite orthogonal with (q;q)_n s^n; q-Fibonacci/Lucas are not";
    }});
    return cs;
}

// ------------------------------------------------------------------ operators

std::vector<Check> operators_checks(const SuiteOptions& opt) {
    std::vector<Check> cs;
    const int N = opt.upto;
    cs.push_back({"product_rule", "2.3", [](std::ostringstream& out) {
        Poly f = parse_poly("x^3 + 2*s*x - 1");
        Poly g = parse_poly("x^5 - s*x^2 + 3*x");
        for (int i = 0; i < 3; ++i) {
            require(d_q(f * g) == g * d_q(f) + eps_q(f) * d_q(g), "product rule fails");
            f = f * g - Poly::x();
            g = g + f.d_dx();
        }
        out << "D_q(fg) = g D_q f + f(qx) D_q g on stacked test polynomials";
    }});
    cs.push_back({"noncommutation", "2.5/2.6", [N](std::ostringstream& out) {
        OpSpec A = OpSpec::mul_x();
        OpSpec B = OpSpec::shift_q();
        for (int d = 0; d <= 12; ++d) {
            Poly xd = Poly::monomial(Scalar(1), d);
            require((B * A)(xd) == (A * B)(xd).scaled(Scalar::q()), "BA != qAB");
        }
        int bound = std::min(N, 8);
        Poly probe = parse_poly("x^4 + s*x^2 + 2*x + 1");
        for (int n = 0; n <= bound; ++n) {
            Poly direct = op_power_apply(A + B, n, probe);
            Poly expanded;
            for (int k = 0; k <= n; ++k) {
                Poly term = probe;
                term = op_power_apply(B, n - k, term);
                term = op_power_apply(A, k, term);
                expanded += term.scaled(q_binomial(n, k));
            }
            require(direct == expanded, "(2.6) fails at n=" + std::to_string(n));
        }
        out << "eps x = q x eps; (A+B)^n expands with Gaussian binomials, n <= " << bound;
    }});
    cs.push_back({"eps_via_dq", "2.10", [](std::ostringstream& out) {
        Poly p = parse_poly("x^10 - 3*s*x^7 + x^4 + 5*x - 2");
        Poly rhs = p + Poly::x().scaled(Scalar::q() - Scalar(1)) * d_q(p);
        require(eps_q(p) == rhs, "identity fails");
        require(eps_q(Poly::x() * p) == (Poly::x() * eps_q(p)).scaled(Scalar::q()),
                "commutation on multiplication fails");
        out << "eps = 1 + (q-1) x D_q; eps x = q x eps";
    }});
    cs.push_back({"hermite_operator_forms", "1.7/1.8/1.9/1.10", [N](std::ostringstream& out) {
        OpSpec lower = OpSpec::mul_x() - OpSpec::diff().scaled(Poly::s());
        OpSpec raise = OpSpec::mul_x() + OpSpec::diff().scaled(Poly::s());
        for (int n = 0; n <= N; ++n) {
            Poly h = family_poly(Family::hermite_classical, n);
            require(op_power_apply(lower, n, Poly(1)) == h, "(1.10) fails");
            require(op_substitute(h, raise) == Poly::monomial(Scalar(1), n), "(1.7) fails");
            if (n >= 1)
                require(h.d_dx() == family_poly(Family::hermite_classical, n - 1)
                                        .scaled(Scalar(n)),
                        "(1.8) fails");
        }
        out << "(x - sD)^n 1 = H_n, H_n(x+sD,s) 1 = x^n, D H_n = n H_{n-1}, n <= " << N;
    }});
    cs.push_back({"physicists_forms", "1.17/1.18/1.20", [N](std::ostringstream& out) {
        OpSpec raise2 = OpSpec::mul(Poly::x() + Poly::x()) - OpSpec::diff();
        OpSpec half_d = OpSpec::mul_x() +
                        OpSpec::diff().scaled(Poly(Scalar::from_fraction(1, 2)));
        for (int n = 0; n <= N; ++n) {
            Poly bold = phys_hermite(n);
            require(op_power_apply(raise2, n, Poly(1)) == bold, "(1.18) fails");
            require(op_substitute(bold, half_d) ==
                        Poly::monomial(Scalar(mpz_class(1) << n), n),
                    "(1.20) fails");
            if (n >= 1)
                require(bold.d_dx() == phys_hermite(n - 1).scaled(Scalar(2 * n)),
                        "(1.17) fails");
        }
        out << "bold-Hermite operator identities, n <= " << N;
    }});
    cs.push_back({"gauss_rodrigues", "1.14/1.15/1.16", [N](std::ostringstream& out) {
        for (int n = 0; n <= N; ++n) {
            GaussPair gp = gauss_rodrigues(n, -1);
            require(gp.g == family_poly(Family::hermite_classical, n),
                    "(-sD)^n on the Gaussian carrier fails at n=" + std::to_string(n));
        }
        out << "(-sD)^n e^(-x^2/2s) = H_n e^(-x^2/2s), n <= " << N;
    }});
    cs.push_back({"q_binomial_theorem_op", "2.13", [N](std::ostringstream& out) {
        int bound = std::min(N, 10);
        OpSpec A = OpSpec::shift_q().scaled(Poly::x());
        OpSpec B = OpSpec::shift_q().scaled(Poly::s());
        for (int n = 0; n <= bound; ++n) {
            Poly lhs = op_power_apply(A + B, n, Poly(1));
            Poly prod(1);
            for (int j = 0; j < n; ++j)
                prod *= Poly::s() + Poly::x().scaled(Scalar::q_power(j));
            Poly sum;
            for (int k = 0; k <= n; ++k)
                sum += Poly::monomial(q_triangular(k) * q_binomial(n, k), k, n - k);
            require(lhs == prod, "operator power differs from the product");
            require(lhs == sum, "operator power differs from the sum");
        }
        out << "(x eps + s eps)^n 1 equals product and Gaussian sum, n <= " << bound;
    }});
    cs.push_back({"eq_5_4_and_5_5", "5.4/5.5/5.30/5.31", [N](std::ostringstream& out) {
        OpSpec op = OpSpec::mul_x() +
                    OpSpec::diff_q().scaled(Poly::s().scaled(Scalar(1) - Scalar::q()));
        for (int n = 0; n <= N; ++n)
            require(op_substitute(family_poly(Family::q_hermite, n), op) ==
                        Poly::monomial(Scalar(1), n),
                    "(5.4) fails");
        // c(2m, m, q) s^m, the constant term of h_{2m}, equals the closed
        // even moment.
        for (int m = 0; m <= std::min(N, 8); ++m) {
            Poly h2m = op_power_apply(op, 2 * m, Poly(1));
            require(h2m.coeff_x(0) == closed_moment(Family::q_hermite, 2 * m),
                    "(5.31) cross-check fails at m=" + std::to_string(m));
        }
        out << "substitution identity and moment cross-checks, n <= " << N;
    }});
    cs.push_back({"q_fibonacci_induction", "5.17/§5.4", [N](std::ostringstream& out) {
        int bound = std::min(N + 2, 12);
        for (int n = 0; n <= bound; ++n)
            require(family_poly(Family::q_fibonacci, n) ==
                        family_closed_form(Family::q_fibonacci, n),
                    "operator recurrence differs from closed form");
        out << "operator recurrence reproduces the closed form, n <= " << bound;
    }});
    return cs;
}

// ---------------------------------------------------------------- askey_wilson

std::vector<Check> askey_wilson_checks(const SuiteOptions& opt) {
    std::vector<Check> cs;
    const int N = opt.upto;
    cs.push_back({"lowering_basics", "6.20", [](std::ostringstream& out) {
        require(aw_delta(ChebPoly::unit(ChebBasis::T, 0)).is_zero(), "Delta_q T_0 != 0");
        ChebPoly d1 = aw_delta(ChebPoly::unit(ChebBasis::T, 1));
        require(d1.coeff(0) == Scalar(1) && d1.coeffs().size() == 1, "Delta_q T_1 != 1");
        ChebPoly d2 = aw_delta(ChebPoly::unit(ChebBasis::T, 2));
        Scalar expect = (Scalar(1) + Scalar::q()) * Scalar::v_power(-1) * Scalar(2);
        require(d2.coeff(1) == expect && d2.coeffs().size() == 1,
                "Delta_q T_2 != 2(1+q)/v T_1");
        out << "Delta_q on T_0, T_1, T_2";
    }});
    cs.push_back({"hermite_lowering", "6.21", [N](std::ostringstream& out) {
        for (int n = 1; n <= N; ++n) {
            ChebPoly hn = cheb_convert(
                cheb_from_poly(family_poly(Family::cont_q_hermite, n)), ChebBasis::T);
            ChebPoly hn1 = cheb_convert(
                cheb_from_poly(family_poly(Family::cont_q_hermite, n - 1)), ChebBasis::T);
            Scalar factor = Scalar(2) * Scalar::v_power(-(n - 1)) * q_int(n);
            require(aw_delta(hn) == hn1.scaled(factor),
                    "lowering fails at n=" + std::to_string(n));
        }
        out << "Delta_q H_n = 2 v^(1-n) [n] H_{n-1}, 1 <= n <= " << N;
    }});
    cs.push_back({"raising_chain", "6.22/6.1", [N](std::ostringstream& out) {
        int bound = std::min(N, 8);
        for (int n = 0; n <= bound; ++n) {
            ChebPoly chain = aw_raising_chain(n);
            Poly back = cheb_to_poly(chain);
            require(back == family_poly(Family::cont_q_hermite, n),
                    "chain fails at n=" + std::to_string(n));
            require(poly_only_even_v(back), "odd v power appears");
        }
        out << "raising chain reproduces H_n(x|q), n <= " << bound;
    }});
    cs.push_back({"cheb_connections", "6.4-6.7", [N](std::ostringstream& out) {
        for (ConnectionId id : {ConnectionId::eq_6_4, ConnectionId::eq_6_5,
                                ConnectionId::eq_6_6, ConnectionId::eq_6_7})
            for (int n = 0; n <= N; ++n)
                require(connection_check(id, n).pass,
                        std::string(connection_to_string(id)) + " fails at n=" +
                            std::to_string(n));
        out << "Chebyshev connection identities hold, n <= " << N;
    }});
    cs.push_back({"cqh_gram", "6.8", [N](std::ostringstream& out) {
        int half = std::min(N, 6);
        GramResult g = gram_diagonal(Family::cont_q_hermite, half);
        require(g.off_diagonal_zero, "off-diagonal entry nonzero");
        for (int n = 0; n <= half; ++n)
            require(g.diagonal[n] == Poly(q_q_pochhammer(n)),
                    "diagonal mismatch at n=" + std::to_string(n));
        out << "Lambda(H_n H_m) = (q;q)_n [n=m], n <= " << half;
    }});
    return cs;
}

// --------------------------------------------------------------------- circle

std::vector<Check> circle_checks(const SuiteOptions& opt) {
    std::vector<Check> cs;
    const int N = std::min(opt.upto, 8);
    cs.push_back({"unit_values", "2.21", [](std::ostringstream& out) {
        require(rs_unit(0) == LaurentCirclePoly::monomial(Scalar(1), 0), "R_0 != 1");
        LaurentCirclePoly r1;
        r1.add(1, Scalar(1));
        r1.add(0, -Scalar::v());
        require(rs_unit(1) == r1, "R_1 != z - v");
        LaurentCirclePoly r2;
        r2.add(2, Scalar(1));
        r2.add(1, -(Scalar(1) + Scalar::q()) * Scalar::v());
        r2.add(0, Scalar::q());
        require(rs_unit(2) == r2, "R_2 != z^2 - (1+q) v z + q");
        out << "R_0, R_1, R_2 coefficients";
    }});
    cs.push_back({"functional_values", "2.22", [](std::ostringstream& out) {
        require(lambda_R(LaurentCirclePoly::monomial(Scalar(1), 0)) == Scalar(1), "z^0");
        require(lambda_R(LaurentCirclePoly::monomial(Scalar(1), 2)) == Scalar::q_power(2),
                "z^2");
        require(lambda_R(LaurentCirclePoly::monomial(Scalar(1), -1)) == Scalar::v(), "z^-1");
        out << "Lambda_R(z^n) = v^(n^2)";
    }});
    cs.push_back({"orthogonality", "2.23", [N](std::ostringstream& out) {
        for (int m = 0; m <= N; ++m)
            for (int n = 0; n <= N; ++n) {
                Scalar ip = circle_inner_product(m, n);
                Scalar expect = m == n ? q_pochhammer_at(Scalar::q(), n) : Scalar();
                require(ip == expect, "inner product mismatch at (" + std::to_string(m) +
                                          "," + std::to_string(n) + ")");
            }
        out << "I(m,n) = (q;q)_n [m=n], m,n <= " << N;
    }});
    cs.push_back({"sum_form", "2.24", [N](std::ostringstream& out) {
        for (int m = 0; m <= N; ++m)
            for (int n = 0; n <= N; ++n)
                require(circle_inner_product(m, n) == circle_inner_product_sum_form(m, n),
                        "sum form differs from double sum");
        out << "signed-sum evaluation agrees with the double sum, m,n <= " << N;
    }});
    cs.push_back({"finite_product_identity", "2.13 at x=q^-j", [](std::ostringstream& out) {
        for (int n = 0; n <= 6; ++n)
            for (int j = 0; j <= 6; ++j) {
                Scalar sum;
                for (int k = 0; k <= n; ++k) {
                    Scalar term = q_triangular(k) * q_binomial(n, k) *
                                  Scalar::q_power(-static_cast<long>(j) * k);
                    sum += (k % 2 != 0) ? -term : term;
                }
                Scalar prod(1);
                for (int l = 0; l < n; ++l) prod *= Scalar(1) - Scalar::q_power(l - j);
                require(sum == prod, "identity fails");
            }
        out << "sum equals the shifted product, n,j <= 6";
    }});
    return cs;
}

// ------------------------------------------------------------- numeric suites

double exact_moment_q(Family f, int n, const mpq_class& q, int upto) {
    static std::mutex m;
    static std::map<Family, MomentFunctional> cache;
    std::scoped_lock lock(m);
    auto it = cache.find(f);
    if (it == cache.end() || static_cast<int>(it->second.lambda.size()) <= n)
        it = cache.insert_or_assign(f, moments(f, std::max(n, upto))).first;
    Poly lam = it->second.lambda[n];
    return lam.is_zero() ? 0.0 : lam.as_scalar().eval_q_rational(q).get_d();
}

NumericConfig cfg_for_q(const SuiteOptions& opt, const mpq_class& q) {
    NumericConfig cfg;
    cfg.q = q;
    cfg.trunc_K = opt.trunc;
    cfg.tol = std::min(opt.tol, 1e-9);
    return cfg;
}

std::vector<Check> numeric_weights_checks(const SuiteOptions& options) {
    std::vector<Check> cs;
    // Checks outlive this builder; every lambda captures the options by value.
    const SuiteOptions opt = options;
    const double tol = opt.tol;
    cs.push_back({"weight_moments_vs_exact", "6.11", [opt](std::ostringstream& out) {
        for (const auto& q : opt.q_values) {
            NumericConfig cfg = cfg_for_q(opt, q);
            for (int n = 0; n <= 8; ++n) {
                double numeric = quadrature_moment(MeasureKind::qhermite_weight,
                                                   Integrand::x_power, n, cfg);
                double exact = exact_moment_q(Family::cont_q_hermite, n, q, 8);
                require(std::abs(numeric - exact) < 1e-8,
                        "moment mismatch at n=" + std::to_string(n));
            }
        }
        out << "integral moments match the exact functional within 1e-8, n <= 8";
    }});
    cs.push_back({"u_and_t_moments", "6.9/6.10", [opt, tol](std::ostringstream& out) {
        for (const auto& q : opt.q_values) {
            NumericConfig cfg = cfg_for_q(opt, q);
            double qd = q.get_d();
            for (int n = 0; n <= 4; ++n) {
                double u = quadrature_moment(MeasureKind::qhermite_weight, Integrand::cheb_u,
                                             2 * n, cfg);
                double u_exact = std::pow(qd, 0.5 * n * (n + 1)) * (n % 2 != 0 ? -1.0 : 1.0);
                require(std::abs(u - u_exact) < tol, "U moment mismatch");
                double t = quadrature_moment(MeasureKind::qhermite_weight, Integrand::cheb_t,
                                             2 * n, cfg);
                double t_exact = 0.5 * std::pow(qd, 0.5 * n * (n - 1)) *
                                 (1.0 + std::pow(qd, n)) * (n % 2 != 0 ? -1.0 : 1.0);
                require(std::abs(t - t_exact) < tol, "T moment mismatch");
                require(std::abs(quadrature_moment(MeasureKind::qhermite_weight,
                                                   Integrand::cheb_u, 2 * n + 1, cfg)) < tol,
                        "odd U moment nonzero");
            }
        }
        out << "Lambda(U_2n) and Lambda(T_2n) match the closed values, n <= 4";
    }});
    cs.push_back({"circle_form_matches", "6.14/6.16", [opt, tol](std::ostringstream& out) {
        for (const auto& q : opt.q_values) {
            NumericConfig cfg = cfg_for_q(opt, q);
            for (int n = 0; n <= 4; ++n) {
                double circle = quadrature_moment(MeasureKind::qhermite_circle,
                                                  Integrand::cosine, 2 * n, cfg);
                double direct = quadrature_moment(MeasureKind::qhermite_weight,
                                                  Integrand::cheb_t, 2 * n, cfg);
                require(std::abs(circle - direct) < tol, "circle form mismatch");
            }
        }
        out << "infinite-product measure reproduces the T moments, n <= 4";
    }});
    cs.push_back({"cheb_numeric_orthogonality", "6.13", [opt](std::ostringstream& out) {
        NumericConfig cfg = cfg_for_q(opt, opt.q_values.front());
        for (int m = 0; m <= 6; ++m)
            for (int n = m; n <= 6; ++n) {
                auto f = [&](double theta) {
                    return std::sin((m + 1) * theta) * std::sin((n + 1) * theta);
                };
                double val = integrate(f, 0.0, std::numbers::pi, 1e-11, cfg.panels);
                double expect = m == n ? std::numbers::pi / 2 : 0.0;
                require(std::abs(val - expect) < 1e-8, "orthogonality fails");
            }
        out << "int U_m U_n sqrt(1-x^2) = (pi/2)[m=n], m,n <= 6";
    }});
    cs.push_back({"gauss_numeric", "1.26/1.27", [opt, tol](std::ostringstream& out) {
        NumericConfig cfg = cfg_for_q(opt, opt.q_values.front());
        for (int n = 0; n <= 6; ++n) {
            double numeric =
                quadrature_moment(MeasureKind::gauss, Integrand::x_power, n, cfg, 1.0);
            double exact = n % 2 != 0 ? 0.0 : double_factorial_odd(n / 2).get_d();
            require(std::abs(numeric - exact) < tol, "Gaussian moment mismatch");
        }
        for (int m = 0; m <= 4; ++m)
            for (int n = m; n <= 4; ++n) {
                Poly hm = family_poly(Family::hermite_classical, m).subst_s(Scalar(1));
                Poly hn = family_poly(Family::hermite_classical, n).subst_s(Scalar(1));
                auto f = [&](double x) {
                    return hm.eval_double(x, 1.0, 0.5) * hn.eval_double(x, 1.0, 0.5) *
                           std::exp(-x * x / 2.0) / std::sqrt(2.0 * std::numbers::pi);
                };
                double val = integrate(f, -12.0, 12.0, 1e-10, cfg.panels);
                double expect = m == n ? factorial(n).get_d() : 0.0;
                require(std::abs(val - expect) < tol, "Hermite Gram integral mismatch");
                // physicists' normalization: (1/sqrt(pi)) int bH_m bH_n e^(-x^2) = 2^n n! [m=n]
                Poly bm = phys_hermite(m);
                Poly bn = phys_hermite(n);
                auto g = [&](double x) {
                    return bm.eval_double(x, 0.0, 0.5) * bn.eval_double(x, 0.0, 0.5) *
                           std::exp(-x * x) / std::sqrt(std::numbers::pi);
                };
                double bold_val = integrate(g, -9.0, 9.0, 1e-10, cfg.panels);
                double bold_expect = m == n ? std::pow(2.0, n) * factorial(n).get_d() : 0.0;
                require(std::abs(bold_val - bold_expect) < tol,
                        "physicists' Gram integral mismatch");
            }
        out << "Gaussian moments (2n-1)!! and both Gram normalizations at s=1, within tol";
    }});
    cs.push_back({"classical_measures", "3.11/3.13/4.6/4.8", [opt, tol](std::ostringstream& out) {
        NumericConfig cfg = cfg_for_q(opt, opt.q_values.front());
        for (int n = 0; n <= 4; ++n) {
            double semi =
                quadrature_moment(MeasureKind::semicircle, Integrand::x_power, 2 * n, cfg);
            require(std::abs(semi - catalan(n).get_d()) < tol, "semicircle moment mismatch");
            double arc =
                quadrature_moment(MeasureKind::arcsine, Integrand::x_power, 2 * n, cfg);
            double arc_exact = binom(2 * n, n).get_d() / std::pow(4.0, n);
            require(std::abs(arc - arc_exact) < tol, "arcsine moment mismatch");
            // Eq 3.13 is the arcsine law on [-2,2]: moments scale by 4^n.
            require(std::abs(arc * std::pow(4.0, n) - binom(2 * n, n).get_d()) <
                        tol * std::pow(4.0, n),
                    "scaled arcsine mismatch");
            double wig =
                quadrature_moment(MeasureKind::wigner, Integrand::x_power, 2 * n, cfg);
            double wig_exact = catalan(n).get_d() / std::pow(4.0, n);
            require(std::abs(wig - wig_exact) < tol, "Wigner moment mismatch");
        }
        out << "semicircle/arcsine/Wigner moments match the binomial closed forms, n <= 4";
    }});
    cs.push_back({"wrapped_moments", "2.22", [opt](std::ostringstream& out) {
        for (const auto& q : opt.q_values) {
            NumericConfig cfg = cfg_for_q(opt, q);
            for (int n = 0; n <= 4; ++n) {
                double numeric = wrapped_gauss_moment(n, cfg);
                double exact = std::pow(q.get_d(), 0.5 * n * n);
                require(std::abs(numeric - exact) < 1e-8,
                        "wrapped moment mismatch at n=" + std::to_string(n));
            }
        }
        out << "wrapped Gaussian Fourier coefficients are q^(n^2/2), n <= 4";
    }});
    cs.push_back({"rodrigues_pointwise", "6.23", [opt](std::ostringstream& out) {
        const double thetas[] = {0.7, std::numbers::pi / 2, 2.2};
        for (const auto& q : opt.q_values) {
            NumericConfig cfg = cfg_for_q(opt, q);
            // the 1e-8 target needs the product tail q^K/(1-q) well below it
            cfg.trunc_K = std::max(cfg.trunc_K, factors_for_tail(q.get_d(), 1e-12));
            for (int n = 0; n <= 3; ++n)
                for (double theta : thetas)
                    require(q_rodrigues_pointwise(n, theta, cfg) < 1e-8,
                            "residual too large at n=" + std::to_string(n));
        }
        out << "lowering residual < 1e-8 at n <= 3, three angles";
    }});
    cs.push_back({"weight_nonnegative", "6.12", [opt](std::ostringstream& out) {
        for (const auto& q : opt.q_values) {
            NumericConfig cfg = cfg_for_q(opt, q);
            for (int i = 0; i <= 200; ++i) {
                double x = -1.0 + 2.0 * i / 200.0;
                require(weight_density(x, cfg) > -1e-12, "negative density found");
            }
            double mass = integrate([&](double x) { return weight_density(x, cfg); }, -1.0,
                                    1.0, 1e-9, cfg.panels);
            require(std::abs(mass - 1.0) < 1e-6, "total mass differs from 1");
        }
        out << "density nonnegative on a 201-point grid; total mass 1";
    }});
    cs.push_back({"truncation_stability", "5.10/6.14", [opt, tol](std::ostringstream& out) {
        for (const auto& q : opt.q_values) {
            NumericConfig cfg = cfg_for_q(opt, q);
            NumericConfig big = cfg;
            big.trunc_K *= 2;
            big.trunc_J *= 2;
            GfParams p{0.3, 0.1, 0.2, 0.0, 0};
            require(std::abs(product_gf_check(ProductGfId::eq_5_10, cfg, p) -
                             product_gf_check(ProductGfId::eq_5_10, big, p)) < tol,
                    "gf residual unstable under doubling");
            double a = quadrature_moment(MeasureKind::qhermite_circle, Integrand::cosine, 2,
                                         cfg);
            double b = quadrature_moment(MeasureKind::qhermite_circle, Integrand::cosine, 2,
                                         big);
            require(std::abs(a - b) < tol, "circle integral unstable under doubling");
        }
        out << "doubling K and J moves results by less than tol";
    }});
    return cs;
}

std::vector<Check> numeric_series_checks(const SuiteOptions& options) {
    std::vector<Check> cs;
    const SuiteOptions opt = options;
    const int order = std::max(8, std::min(opt.upto, 10));
    cs.push_back({"q_exponential_identities", "2.16/2.17", [order](std::ostringstream& out) {
        SeriesVerdict a = series_identity_check(SeriesIdentity::eq_2_16, order);
        require(a.pass, "(2.16): " + a.detail);
        SeriesVerdict b = series_identity_check(SeriesIdentity::eq_2_17, order);
        require(b.pass, "(2.17): " + b.detail);
        out << "exponential identities exact through order " << order;
    }});
    cs.push_back({"euler_identities", "2.25/2.26", [order](std::ostringstream& out) {
        SeriesVerdict a = series_identity_check(SeriesIdentity::eq_2_25, order);
        require(a.pass, "(2.25): " + a.detail);
        SeriesVerdict b = series_identity_check(SeriesIdentity::eq_2_26, order);
        require(b.pass, "(2.26): " + b.detail);
        out << "telescoping product identities exact through order " << order;
    }});
    cs.push_back({"w_coefficients", "6.17/6.18", [](std::ostringstream& out) {
        SeriesVerdict v = series_identity_check(SeriesIdentity::eq_6_18, 10);
        require(v.pass, v.detail);
        out << v.detail;
    }});
    cs.push_back({"finite_jacobi", "2.27 finite step", [](std::ostringstream& out) {
        for (int n = 1; n <= 4; ++n)
            require(finite_jacobi_check(n), "finite identity fails at n=" + std::to_string(n));
        out << "finite triple-product step exact, n <= 4";
    }});
    cs.push_back({"jacobi_numeric_tail", "2.27", [opt](std::ostringstream& out) {
        NumericConfig cfg;
        cfg.q = mpq_class(1, 2);
        cfg.trunc_K = std::max(opt.trunc, 60);
        double r = jacobi_numeric_residual(cfg, 0.25);
        require(r < 1e-10, "residual " + std::to_string(r));
        out << "theta sum vs truncated product residual < 1e-10 at q=1/2, x=1/4";
    }});
    cs.push_back({"product_generating_functions", "5.10/6.2", [](std::ostringstream& out) {
        NumericConfig cfg;
        cfg.q = mpq_class(1, 2);
        cfg.trunc_K = 40;
        cfg.trunc_J = 40;
        GfParams p{0.3, 0.1, 0.2, 0.0, 0};
        require(product_gf_check(ProductGfId::eq_5_10, cfg, p) < 1e-10, "(5.10) residual");
        GfParams zero{0.3, 0.1, 0.0, 0.0, 0};
        require(product_gf_check(ProductGfId::eq_5_10, cfg, zero) == 0.0, "t=0 case");
        GfParams c{0.0, 0.0, 0.0, 1.0, 3};
        require(product_gf_check(ProductGfId::eq_6_2, cfg, c) < 1e-12, "(6.2) residual");
        out << "generating-function residuals below tolerance";
    }});
    return cs;
}

// --------------------------------------------------------------- registry

using SuiteBuilder = std::vector<Check> (*)(const SuiteOptions&);

struct SuiteEntry {
    const char* name;
    SuiteBuilder build;
};

const SuiteEntry kSuites[] = {
    {"classical", classical_checks},
    {"q_binomial", q_binomial_checks},
    {"rogers_szego", rogers_szego_checks},
    {"fib_lucas_cheb", fib_lucas_cheb_checks},
    {"q_hermite_exact", q_hermite_checks},
    {"operators", operators_checks},
    {"askey_wilson", askey_wilson_checks},
    {"circle", circle_checks},
    {"numeric_weights", numeric_weights_checks},
    {"numeric_series", numeric_series_checks},
};

int thread_budget(const SuiteOptions& opt, std::size_t n_checks) {
    int n = opt.threads;
    if (n <= 0) {
        if (const char* env = std::getenv("QORTHO_THREADS")) n = std::atoi(env);
        if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
    }
    return std::max(1, std::min<int>(n, static_cast<int>(n_checks)));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuites) v.push_back(s.name);
        v.push_back("all");
        return v;
    }();
    return names;
}

bool is_suite_name(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    std::vector<std::pair<std::string, Check>> tagged;  // (suite, check)
    for (const auto& entry : kSuites) {
        if (name != "all" && name != entry.name) continue;
        for (auto& c : entry.build(opt)) tagged.emplace_back(entry.name, std::move(c));
    }
    if (tagged.empty() && name != "all") throw std::invalid_argument("unknown suite: " + name);

    SuiteReport report;
    report.suite = name;
    report.records.resize(tagged.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tagged.size()) return;
            const auto& [suite, check] = tagged[i];
            CheckRecord rec;
            rec.id = suite + "/" + check.id;
            rec.tag = check.tag;
            auto start = std::chrono::steady_clock::now();
            try {
                std::ostringstream detail;
                check.run(detail);
                rec.pass = true;
                rec.detail = detail.str();
            } catch (const std::exception& e) {
                rec.pass = false;
                rec.detail = e.what();
            }
            rec.ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
            report.records[i] = std::move(rec);
        }
    };

    int n_threads = thread_budget(opt, tagged.size());
    auto t0 = std::chrono::steady_clock::now();
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    report.total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::sort(report.records.begin(), report.records.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    report.pass = true;
    for (const auto& r : report.records)
        if (!r.pass) report.pass = false;
    return report;
}

}  // namespace qortho
