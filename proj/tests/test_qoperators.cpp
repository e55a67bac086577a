#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qortho/families.hpp"
#include "qortho/qcore.hpp"
#include "qortho/qoperators.hpp"
#include "qortho/text.hpp"

#include <random>

using namespace qortho;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> se(0, 2);
    Poly p;
    for (int d = 0; d <= max_deg; ++d) p += Poly::monomial(Scalar(coeff(rng)), d, se(rng));
    return p;
}

OpSpec q_hermite_raising() {
    return OpSpec::mul_x() +
           OpSpec::diff_q().scaled(Poly::s().scaled(Scalar(1) - Scalar::q()));
}

}  // namespace

TEST_CASE("d_q basics") {
    CHECK(d_q(parse_poly("x^3")) == parse_poly("(1 + q + q^2)*x^2"));
    CHECK(d_q(Poly(7)).is_zero());
    CHECK(d_q(parse_poly("s^2")).is_zero());
    for (int n = 1; n <= 10; ++n)
        CHECK(d_q(family_poly(Family::rogers_szego, n)) ==
              family_poly(Family::rogers_szego, n - 1).scaled(q_int(n)));
}

TEST_CASE("eps_q basics and identities") {
    CHECK(eps_q(parse_poly("x^2 + 1")) == parse_poly("q^2*x^2 + 1"));
    std::mt19937 rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_poly(rng, 10);
        // eps = 1 + (q-1) x D_q
        CHECK(eps_q(p) == p + Poly::x().scaled(Scalar::q() - Scalar(1)) * d_q(p));
        // eps x = q x eps
        CHECK(eps_q(Poly::x() * p) == (Poly::x() * eps_q(p)).scaled(Scalar::q()));
    }
}

TEST_CASE("product rule") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 12; ++trial) {
        Poly f = random_poly(rng, 8);
        Poly g = random_poly(rng, 8);
        CHECK(d_q(f * g) == g * d_q(f) + eps_q(f) * d_q(g));
    }
}

TEST_CASE("noncommutation and the operator binomial theorem") {
    OpSpec A = OpSpec::mul_x();
    OpSpec B = OpSpec::shift_q();
    for (int d = 0; d <= 12; ++d) {
        Poly xd = Poly::monomial(Scalar(1), d);
        CHECK((B * A)(xd) == (A * B)(xd).scaled(Scalar::q()));
    }
    std::mt19937 rng(2024);
    Poly probe = random_poly(rng, 6);
    for (int n = 0; n <= 8; ++n) {
        Poly direct = op_power_apply(A + B, n, probe);
        Poly expanded;
        for (int k = 0; k <= n; ++k)
            expanded += op_power_apply(A, k, op_power_apply(B, n - k, probe))
                            .scaled(q_binomial(n, k));
        CHECK(direct == expanded);
    }
}

TEST_CASE("hermite operator forms") {
    OpSpec lower = OpSpec::mul_x() - OpSpec::diff().scaled(Poly::s());
    OpSpec raise = OpSpec::mul_x() + OpSpec::diff().scaled(Poly::s());
    CHECK(op_power_apply(lower, 3, Poly(1)) == parse_poly("x^3 - 3*s*x"));
    for (int n = 0; n <= 12; ++n) {
        Poly h = family_poly(Family::hermite_classical, n);
        CHECK(op_power_apply(lower, n, Poly(1)) == h);
        CHECK(op_substitute(h, raise) == Poly::monomial(Scalar(1), n));
        if (n >= 1)
            CHECK(h.d_dx() == family_poly(Family::hermite_classical, n - 1).scaled(Scalar(n)));
        // (x + sD)^n 1 = H_n(x, -s)
        CHECK(op_power_apply(raise, n, Poly(1)) == h.subst_s_poly(-Poly::s()));
    }
}

TEST_CASE("physicists hermite operator forms") {
    auto phys = [](int n) {
        return family_poly(Family::hermite_classical, n)
            .subst_x(Poly::x().scaled(Scalar(2)))
            .subst_s(Scalar(2));
    };
    OpSpec raise2 = OpSpec::mul(Poly::x().scaled(Scalar(2))) - OpSpec::diff();
    OpSpec half_d = OpSpec::mul_x() + OpSpec::diff().scaled(Poly(Scalar::from_fraction(1, 2)));
    CHECK(op_substitute(phys(2), half_d) == parse_poly("4*x^2"));
    for (int n = 0; n <= 10; ++n) {
        CHECK(op_power_apply(raise2, n, Poly(1)) == phys(n));
        CHECK(op_substitute(phys(n), half_d) == Poly::monomial(Scalar(mpz_class(1) << n), n));
        if (n >= 1) CHECK(phys(n).d_dx() == phys(n - 1).scaled(Scalar(2 * n)));
    }
}

TEST_CASE("q-hermite operator forms") {
    OpSpec op = q_hermite_raising();
    CHECK(op_power_apply(op, 2, Poly(1)) == parse_poly("x^2 + (1 - q)*s"));
    for (int n = 0; n <= 10; ++n) {
        CHECK(op_substitute(family_poly(Family::q_hermite, n), op) ==
              Poly::monomial(Scalar(1), n));
        // the constant term of h_{2m} is the even moment c(2m, m, q) s^m
        Poly h = op_power_apply(op, n, Poly(1));
        if (n % 2 == 0) {
            std::vector<Poly> expansion;
            for (int k = 0; 2 * k <= n; ++k) {
                int m = n - 2 * k;
                Poly lstar = m == 0 ? Poly(1) : family_poly(Family::q_lucas, m);
                expansion.push_back(lstar.subst_s_poly(-Poly::s())
                                        .scaled(Scalar(binom(n, k)))
                                        .mono_shift(0, k));
            }
            Poly sum;
            for (const Poly& t : expansion) sum += t;
            CHECK(h == sum);
        }
    }
}

TEST_CASE("operator q-binomial theorem, product and sum forms") {
    OpSpec A = OpSpec::shift_q().scaled(Poly::x());
    OpSpec B = OpSpec::shift_q().scaled(Poly::s());
    for (int n = 0; n <= 10; ++n) {
        Poly lhs = op_power_apply(A + B, n, Poly(1));
        Poly prod(1);
        for (int j = 0; j < n; ++j) prod *= Poly::s() + Poly::x().scaled(Scalar::q_power(j));
        Poly sum;
        for (int k = 0; k <= n; ++k)
            sum += Poly::monomial(q_triangular(k) * q_binomial(n, k), k, n - k);
        CHECK(lhs == prod);
        CHECK(lhs == sum);
    }
}

TEST_CASE("gauss pair rodrigues chain") {
    CHECK(gauss_rodrigues(0, -1).g == Poly(1));
    CHECK(gauss_rodrigues(2, -1).g == parse_poly("x^2 - s"));
    CHECK(gauss_rodrigues(3, -1).g == parse_poly("x^3 - 3*s*x"));
    for (int n = 0; n <= 12; ++n)
        CHECK(gauss_rodrigues(n, -1).g == family_poly(Family::hermite_classical, n));
    // the plus carrier produces (-1)^n H_n(x, -s)
    for (int n = 0; n <= 8; ++n) {
        Poly expect = family_poly(Family::hermite_classical, n).subst_s_poly(-Poly::s());
        if (n % 2 != 0) expect = -expect;
        CHECK(gauss_rodrigues(n, +1).g == expect);
    }
}

TEST_CASE("q-fibonacci operator recurrence reproduces the closed form") {
    for (int n = 0; n <= 12; ++n) {
        CHECK(family_poly(Family::q_fibonacci, n) == family_closed_form(Family::q_fibonacci, n));
        CHECK(family_poly(Family::q_lucas, n) == family_closed_form(Family::q_lucas, n));
    }
}

TEST_CASE("askey-wilson lowering") {
    CHECK(aw_delta(ChebPoly::unit(ChebBasis::T, 0)).is_zero());
    ChebPoly d1 = aw_delta(ChebPoly::unit(ChebBasis::T, 1));
    CHECK(d1.coeff(0) == Scalar(1));
    CHECK(d1.coeffs().size() == 1);
    ChebPoly d2 = aw_delta(ChebPoly::unit(ChebBasis::T, 2));
    CHECK(d2.coeff(1) == Scalar(2) * (Scalar(1) + Scalar::q()) * Scalar::v_power(-1));
    CHECK(d2.coeffs().size() == 1);

    for (int n = 1; n <= 10; ++n) {
        ChebPoly hn =
            cheb_convert(cheb_from_poly(family_poly(Family::cont_q_hermite, n)), ChebBasis::T);
        ChebPoly hn1 = cheb_convert(cheb_from_poly(family_poly(Family::cont_q_hermite, n - 1)),
                                    ChebBasis::T);
        Scalar factor = Scalar(2) * Scalar::v_power(-(n - 1)) * q_int(n);
        CHECK(aw_delta(hn) == hn1.scaled(factor));
    }
}

TEST_CASE("askey-wilson raising chain") {
    CHECK(cheb_to_poly(aw_raising_chain(0)) == Poly(1));
    CHECK(cheb_to_poly(aw_raising_chain(1)) == parse_poly("2*x"));
    CHECK(cheb_to_poly(aw_raising_chain(2)) == parse_poly("4*x^2 + q - 1"));
    for (int n = 0; n <= 8; ++n)
        CHECK(cheb_to_poly(aw_raising_chain(n)) == family_poly(Family::cont_q_hermite, n));
}
