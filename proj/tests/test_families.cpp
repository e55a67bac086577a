#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qortho/families.hpp"
#include "qortho/qcore.hpp"
#include "qortho/text.hpp"

#include <atomic>
#include <numeric>
#include <thread>

using namespace qortho;

namespace {

Poly eval_v(const Poly& p, long v) {
    return p.map_scalars([&](const Scalar& c) { return c.eval_at_v(Scalar(v)); });
}

}  // namespace

TEST_CASE("identifier round trip") {
    for (Family f : all_families()) {
        auto back = family_from_string(family_to_string(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK(!family_from_string("no_such_family").has_value());
    CHECK(all_families().size() == 14);
}

TEST_CASE("printed first values") {
    CHECK(family_poly(Family::hermite_classical, 3) == parse_poly("x^3 - 3*s*x"));
    CHECK(family_poly(Family::q_hermite, 2) == parse_poly("x^2 - (1 - q)*s"));
    CHECK(family_poly(Family::cont_q_hermite, 4) ==
          parse_poly("16*x^4 + 4*(q^3 + q^2 + q - 3)*x^2 + q^4 - q^3 - q + 1"));
    CHECK(family_poly(Family::q_fibonacci, 5) ==
          parse_poly("x^4 + q*(1 + q + q^2)*s*x^2 + q^3*s^2"));
    CHECK(family_poly(Family::fibonacci, 0).is_zero());
    CHECK(family_poly(Family::lucas, 0) == Poly(2));
    CHECK(family_poly(Family::lucas_star, 0) == Poly(1));
    CHECK(family_poly(Family::chebyshev_t_star, 0) == Poly(Scalar::from_fraction(1, 2)));
}

TEST_CASE("independently computed family fixtures") {
    // frozen from a second computer-algebra system
    CHECK(family_poly(Family::q_fibonacci, 7) ==
          parse_poly("q^7*s^2*x^2 + q^6*s^3 + q^6*s^2*x^2 + 2*q^5*s^2*x^2 + q^5*s*x^4 + "
                     "q^4*s^2*x^2 + q^4*s*x^4 + q^3*s^2*x^2 + q^3*s*x^4 + q^2*s*x^4 + q*s*x^4 "
                     "+ x^6"));
    CHECK(q_binomial(10, 4) ==
          parse_scalar("q^24 + q^23 + 2*q^22 + 3*q^21 + 5*q^20 + 6*q^19 + 9*q^18 + 10*q^17 + "
                       "13*q^16 + 14*q^15 + 16*q^14 + 16*q^13 + 18*q^12 + 16*q^11 + 16*q^10 + "
                       "14*q^9 + 13*q^8 + 10*q^7 + 9*q^6 + 6*q^5 + 5*q^4 + 3*q^3 + 2*q^2 + q "
                       "+ 1"));
}

TEST_CASE("closed form equals recurrence for all families") {
    for (Family f : all_families())
        for (int n = 0; n <= 16; ++n)
            CHECK(family_poly(f, n) == family_closed_form(f, n));
}

TEST_CASE("degrees are exact") {
    for (Family f : all_families()) {
        for (int n = 1; n <= 12; ++n) {
            int expect = family_shifted_degree(f) ? n - 1 : n;
            CHECK(family_poly(f, n).deg_x() == expect);
        }
    }
}

TEST_CASE("closed-form spot examples") {
    CHECK(family_closed_form(Family::fibonacci, 5) == parse_poly("x^4 + 3*s*x^2 + s^2"));
    CHECK(family_closed_form(Family::lucas, 4) == parse_poly("x^4 + 4*s*x^2 + 2*s^2"));
    CHECK(family_closed_form(Family::q_hermite, 3) == parse_poly("x^3 - (1 - q)*(q + 2)*s*x"));
}

TEST_CASE("lucas from fibonacci") {
    for (int n = 1; n <= 16; ++n)
        CHECK(family_poly(Family::lucas, n) ==
              family_poly(Family::fibonacci, n + 1) +
                  Poly::s() * family_poly(Family::fibonacci, n - 1));
}

TEST_CASE("chebyshev as specialized fibonacci and lucas") {
    Poly two_x = Poly::x().scaled(Scalar(2));
    for (int n = 1; n <= 16; ++n) {
        CHECK(family_poly(Family::chebyshev_t, n) ==
              family_poly(Family::lucas, n)
                  .subst_x(two_x)
                  .subst_s(Scalar(-1))
                  .scaled(Scalar::from_fraction(1, 2)));
        CHECK(family_poly(Family::chebyshev_u, n) ==
              family_poly(Family::fibonacci, n + 1).subst_x(two_x).subst_s(Scalar(-1)));
    }
}

TEST_CASE("pell identity") {
    for (int n = 1; n <= 12; ++n) {
        Poly t = family_poly(Family::chebyshev_t, n);
        Poly u = family_poly(Family::chebyshev_u, n - 1);
        CHECK(t * t - (Poly::x() * Poly::x() - Poly(1)) * u * u == Poly(1));
    }
}

TEST_CASE("q = 1 specializations") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(eval_v(family_poly(Family::hermite_bivar_tilde, n), 1) ==
              family_poly(Family::hermite_classical, n));
        CHECK(eval_v(family_poly(Family::q_fibonacci, n), 1) ==
              family_poly(Family::fibonacci, n));
        // q-Hermite collapses to x^n
        CHECK(eval_v(family_poly(Family::q_hermite, n), 1) == Poly::monomial(Scalar(1), n));
        // the rescaled family becomes the physicists' Hermite polynomials
        Poly phys = family_poly(Family::hermite_classical, n)
                        .subst_x(Poly::x().scaled(Scalar(2)))
                        .subst_s(Scalar(2));
        CHECK(eval_v(family_poly(Family::physicists_q_hermite, n), 1) == phys);
    }
}

TEST_CASE("fibonacci numbers and their gcd property") {
    std::vector<mpz_class> fib(21);
    for (int n = 0; n <= 20; ++n) {
        Poly p = family_poly(Family::fibonacci, n).subst_x(Poly(1)).subst_s(Scalar(1));
        fib[n] = p.is_zero() ? mpz_class(0) : p.as_scalar().num().constant_term();
    }
    CHECK(fib[10] == 55);
    for (int m = 1; m <= 20; ++m)
        for (int n = 1; n <= 20; ++n) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), fib[m].get_mpz_t(), fib[n].get_mpz_t());
            CHECK(g == fib[std::gcd(m, n)]);
        }
}

TEST_CASE("rogers-szego closed form and recurrence") {
    for (int n = 0; n <= 12; ++n) {
        Poly r = family_poly(Family::rogers_szego, n);
        CHECK(r == family_closed_form(Family::rogers_szego, n));
        for (int k = 0; k <= n; ++k) CHECK(r.coeff(k, n - k) == q_binomial(n, k));
    }
}

TEST_CASE("special values: both routes agree") {
    for (int n = 0; n <= 10; ++n) {
        for (SpecialValueKind kind :
             {SpecialValueKind::gauss, SpecialValueKind::rs_q2, SpecialValueKind::rs_negq,
              SpecialValueKind::qh_q2, SpecialValueKind::qh_negq}) {
            SpecialValue sv = special_value(kind, n);
            CHECK(sv.equal);
            CHECK(sv.lhs == sv.rhs);
        }
    }
    SUBCASE("frozen small cases") {
        // alternating evaluation at n = 2 collapses to 1 - q
        SpecialValue negq2 = special_value(SpecialValueKind::rs_negq, 2);
        CHECK(negq2.lhs == parse_scalar("1 - q"));
        SpecialValue gauss2 = special_value(SpecialValueKind::gauss, 2);
        CHECK(gauss2.lhs == parse_scalar("1 - q"));
        CHECK(special_value(SpecialValueKind::gauss, 1).lhs.is_zero());
        CHECK(special_value(SpecialValueKind::gauss, 3).lhs.is_zero());
        SpecialValue q2 = special_value(SpecialValueKind::qh_q2, 2);
        CHECK(q2.lhs == parse_scalar("(1 + q)*(1 + q^2)/q"));
    }
}

TEST_CASE("integer-q families carry only even powers of v") {
    for (Family f : all_families())
        for (int n = 0; n <= 10; ++n) {
            Poly p = family_poly(f, n);
            for (const auto& [m, c] : p.terms()) CHECK(c.only_even_v());
        }
}

TEST_CASE("memo cache is safe under concurrent readers") {
    std::vector<std::thread> pool;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&ok] {
            for (int n = 0; n <= 14; ++n)
                for (Family f : {Family::q_hermite, Family::q_fibonacci, Family::cont_q_hermite})
                    if (!(family_poly(f, n) == family_closed_form(f, n))) ok = false;
        });
    for (auto& th : pool) th.join();
    CHECK(ok);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(family_poly(Family::fibonacci, -1), std::invalid_argument);
    CHECK_THROWS_AS(family_closed_form(Family::lucas, -2), std::invalid_argument);
}
