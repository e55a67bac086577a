#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qortho/qcore.hpp"
#include "qortho/qoperators.hpp"
#include "qortho/text.hpp"
#include "qortho/umbral.hpp"

#include <random>

using namespace qortho;

namespace {

OpSpec q_hermite_raising() {
    return OpSpec::mul_x() +
           OpSpec::diff_q().scaled(Poly::s().scaled(Scalar(1) - Scalar::q()));
}

}  // namespace

TEST_CASE("coefficient matrix rows") {
    CoeffMatrix u2 = coeff_matrix(Family::chebyshev_u, 2);
    CHECK(u2.entry(0, 0) == Poly(1));
    CHECK(u2.entry(1, 0).is_zero());
    CHECK(u2.entry(1, 1) == Poly(2));
    CHECK(u2.entry(2, 0) == Poly(-1));
    CHECK(u2.entry(2, 1).is_zero());
    CHECK(u2.entry(2, 2) == Poly(4));

    CoeffMatrix id = coeff_matrix(Family::monomials, 5);
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(id.entry(n, k) == (n == k ? Poly(1) : Poly()));

    CoeffMatrix h2 = coeff_matrix(Family::hermite_classical, 2);
    CHECK(h2.entry(2, 0) == -Poly::s());
    CHECK(h2.entry(2, 1).is_zero());
    CHECK(h2.entry(2, 2) == Poly(1));
}

TEST_CASE("degree deficiency raises") {
    std::vector<Poly> rows = {Poly(1), Poly(1)};  // row 1 is constant
    CHECK_THROWS_AS(coeff_matrix_from_rows(rows), std::domain_error);
}

TEST_CASE("zero or s-dependent diagonal raises on inversion") {
    CoeffMatrix m(1);
    m.entry(0, 0) = Poly(1);
    m.entry(1, 1) = Poly::s();  // invertible row degree, but diagonal carries s
    m.entry(1, 0) = Poly(1);
    CHECK_THROWS_AS(umbral_inverse(m), std::domain_error);
    m.entry(1, 1) = Poly();
    CHECK_THROWS_AS(umbral_inverse(m), std::domain_error);
}

TEST_CASE("umbral inverse basics") {
    CoeffMatrix id = coeff_matrix(Family::monomials, 6);
    CHECK(umbral_inverse(id) == id);

    // Hermite: the inverse is the coefficient matrix of H_n(x, -s).
    CoeffMatrix m = coeff_matrix(Family::hermite_classical, 12);
    std::vector<Poly> neg;
    for (int n = 0; n <= 12; ++n)
        neg.push_back(family_poly(Family::hermite_classical, n).subst_s_poly(-Poly::s()));
    CHECK(umbral_inverse(m) == coeff_matrix_from_rows(neg));

    // Rogers-Szego: inverse entries are (-s)^(n-k) q^C(n-k,2) [n,k].
    CoeffMatrix rs_inv = umbral_inverse(coeff_matrix(Family::rogers_szego, 10));
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            Scalar c = q_triangular(n - k) * q_binomial(n, k);
            if ((n - k) % 2 != 0) c = -c;
            CHECK(rs_inv.entry(n, k) == Poly::monomial(c, 0, n - k));
        }
}

TEST_CASE("q-hermite umbral inverse is the D_q power sequence") {
    OpSpec op = q_hermite_raising();
    std::vector<Poly> h_rows;
    for (int n = 0; n <= 12; ++n) h_rows.push_back(op_power_apply(op, n, Poly(1)));
    CHECK(umbral_inverse(coeff_matrix(Family::q_hermite, 12)) ==
          coeff_matrix_from_rows(h_rows));
}

TEST_CASE("umbral inverse is an involution") {
    for (Family f : all_families()) {
        CoeffMatrix m = coeff_matrix(f, 12);
        CHECK(umbral_inverse(umbral_inverse(m)) == m);
    }
}

TEST_CASE("inverse relations on random integer sequences") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> val(-9, 9);
    for (Family f : {Family::hermite_classical, Family::q_hermite, Family::fibonacci,
                     Family::chebyshev_u, Family::rogers_szego}) {
        CoeffMatrix m = coeff_matrix(f, 10);
        CoeffMatrix inv = umbral_inverse(m);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Poly> x(11);
            x[0] = Poly(1);
            for (int n = 1; n <= 10; ++n) x[n] = Poly(val(rng));
            auto y = matrix_apply(m, x);
            auto back = matrix_apply(inv, y);
            CHECK(back == x);
        }
    }
}

TEST_CASE("moments by triangular solve") {
    // Catalan moments of the Fibonacci functional at s = -1
    MomentFunctional fib = moments(Family::fibonacci, 8, Scalar(-1));
    CHECK(fib.lambda[4] == Poly(2));
    CHECK(fib.lambda[0] == Poly(1));
    for (int n = 0; n <= 8; ++n) {
        Poly expect = n % 2 != 0 ? Poly() : Poly(Scalar(catalan(n / 2)));
        CHECK(fib.lambda[n] == expect);
    }

    MomentFunctional qh = moments(Family::q_hermite, 8);
    CHECK(qh.lambda[2] == Poly::monomial(parse_scalar("1 - q"), 0, 1));
    CHECK(qh.lambda[4] == Poly::monomial(parse_scalar("(1 - q)^2*(q + 2)"), 0, 2));
    CHECK(qh.lambda[4].coeff(0, 2) == parse_scalar("2 - 3*q + q^3"));
}

TEST_CASE("closed moments examples") {
    CHECK(closed_moment(Family::hermite_classical, 4) == Poly::monomial(Scalar(3), 0, 2));
    CHECK(closed_moment(Family::lucas, 4) == Poly(6));
    CHECK(closed_moment(Family::q_hermite, 4) ==
          Poly::monomial(parse_scalar("(1 - q)^2*(q + 2)"), 0, 2));
    CHECK(closed_moment(Family::q_lucas, 4) == Poly(q_binomial(4, 2)));
    CHECK_THROWS_AS(closed_moment(Family::cont_q_hermite, 2), std::invalid_argument);
}

TEST_CASE("moments equal closed forms for every family that has one") {
    for (Family f : all_families()) {
        if (!has_closed_moment(f)) continue;
        MomentFunctional mf = moments(f, 16, closed_moment_s(f));
        for (int n = 0; n <= 16; ++n) CHECK(mf.lambda[n] == closed_moment(f, n));
    }
}

TEST_CASE("every functional is normalized to Lambda(1) = 1") {
    for (Family f : all_families()) {
        MomentFunctional mf = moments(f, 2, closed_moment_s(f));
        CHECK(mf.lambda[0] == Poly(1));
    }
}

TEST_CASE("odd moments vanish when x p_{n-1} is the only x term") {
    for (Family f : all_families()) {
        if (f == Family::rogers_szego) continue;  // recurrence carries x + s
        MomentFunctional mf = moments(f, 9, closed_moment_s(f));
        for (int n = 1; n <= 9; n += 2) CHECK(mf.lambda[n].is_zero());
    }
}

TEST_CASE("independently computed moment fixtures") {
    // frozen from a second computer-algebra system
    MomentFunctional mf = moments(Family::q_hermite, 8);
    CHECK(mf.lambda[6] == parse_poly("-q^6*s^3 + 5*q^3*s^3 - 9*q*s^3 + 5*s^3"));
    CHECK(mf.lambda[8] ==
          parse_poly("q^10*s^4 - 7*q^6*s^4 + 20*q^3*s^4 - 28*q*s^4 + 14*s^4"));
}

TEST_CASE("gram diagonals") {
    GramResult h = gram_diagonal(Family::hermite_classical, 5);
    CHECK(h.off_diagonal_zero);
    for (int n = 0; n <= 5; ++n)
        CHECK(h.diagonal[n] == Poly::monomial(Scalar(factorial(n)), 0, n));

    GramResult cq = gram_diagonal(Family::cont_q_hermite, 5);
    CHECK(cq.off_diagonal_zero);
    for (int n = 0; n <= 5; ++n) CHECK(cq.diagonal[n] == Poly(q_q_pochhammer(n)));

    GramResult qf = gram_diagonal(Family::q_fibonacci, 5, Scalar(-1));
    CHECK(!qf.off_diagonal_zero);
}
