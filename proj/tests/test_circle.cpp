#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qortho/analytic.hpp"
#include "qortho/circle.hpp"
#include "qortho/qcore.hpp"
#include "qortho/text.hpp"

using namespace qortho;

TEST_CASE("unit polynomials") {
    CHECK(rs_unit(0) == LaurentCirclePoly::monomial(Scalar(1), 0));

    LaurentCirclePoly r1;
    r1.add(1, Scalar(1));
    r1.add(0, -Scalar::v());
    CHECK(rs_unit(1) == r1);

    LaurentCirclePoly r2;
    r2.add(2, Scalar(1));
    r2.add(1, -(Scalar(1) + Scalar::q()) * Scalar::v());
    r2.add(0, Scalar::q());
    CHECK(rs_unit(2) == r2);
}

TEST_CASE("functional on monomials") {
    CHECK(lambda_R(LaurentCirclePoly::monomial(Scalar(1), 0)) == Scalar(1));
    CHECK(lambda_R(LaurentCirclePoly::monomial(Scalar(1), 2)) == Scalar::q_power(2));
    CHECK(lambda_R(LaurentCirclePoly::monomial(Scalar(1), -1)) == Scalar::v());
    CHECK(lambda_R(LaurentCirclePoly::monomial(Scalar(1), -3)) == Scalar::v_power(9));
}

TEST_CASE("conjugation flips exponents") {
    LaurentCirclePoly p = rs_unit(3);
    LaurentCirclePoly c = p.conjugate();
    for (const auto& [k, coeff] : p.coeffs()) CHECK(c.coeff(-k) == coeff);
    CHECK(c.conjugate() == p);
}

TEST_CASE("inner product orthogonality") {
    CHECK(circle_inner_product(0, 0) == Scalar(1));
    CHECK(circle_inner_product(1, 1) == parse_scalar("1 - q"));
    CHECK(circle_inner_product(0, 1).is_zero());
    CHECK(circle_inner_product(3, 3) == q_pochhammer_at(Scalar::q(), 3));
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) {
            Scalar expect = m == n ? q_pochhammer_at(Scalar::q(), n) : Scalar();
            CHECK(circle_inner_product(m, n) == expect);
        }
}

TEST_CASE("independently computed inner-product fixture") {
    // frozen from a second computer-algebra system
    CHECK(circle_inner_product(4, 4) ==
          parse_scalar("(q - 1)^4*(q + 1)^2*(q^2 + 1)*(q^2 + q + 1)"));
}

TEST_CASE("signed-sum form agrees with the double sum") {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n)
            CHECK(circle_inner_product(m, n) == circle_inner_product_sum_form(m, n));
}

TEST_CASE("finite product identity at shifted arguments") {
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
            CHECK(sum == prod);
        }
}

TEST_CASE("circle functional matches the wrapped gaussian numerically") {
    NumericConfig cfg;
    cfg.q = mpq_class(1, 2);
    for (int n = 0; n <= 4; ++n) {
        double numeric = wrapped_gauss_moment(n, cfg);
        double exact = lambda_R(LaurentCirclePoly::monomial(Scalar(1), n)).eval_double_q(0.5);
        CHECK(std::abs(numeric - exact) < 1e-8);
    }
}
