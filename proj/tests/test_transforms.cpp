#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qortho/qcore.hpp"
#include "qortho/text.hpp"
#include "qortho/transforms.hpp"

#include <random>

using namespace qortho;

TEST_CASE("to_basis examples") {
    auto c = to_basis(parse_poly("x^2"), Family::chebyshev_t);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Poly(Scalar::from_fraction(1, 2)));
    CHECK(c[1].is_zero());
    CHECK(c[2] == Poly(Scalar::from_fraction(1, 2)));

    auto h = to_basis(parse_poly("x^2"), Family::cont_q_hermite);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == Poly(parse_scalar("(1 - q)/4")));
    CHECK(h[1].is_zero());
    CHECK(h[2] == Poly(Scalar::from_fraction(1, 4)));

    Poly p = parse_poly("3*x^3 - x + 5");
    auto mono = to_basis(p, Family::monomials);
    CHECK(from_basis(mono, Family::monomials) == p);
    CHECK(mono[3] == Poly(3));
    CHECK(mono[1] == Poly(-1));
    CHECK(mono[0] == Poly(5));
}

TEST_CASE("to_basis round-trips on random polynomials") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (Family f : {Family::hermite_classical, Family::q_hermite, Family::chebyshev_t,
                     Family::chebyshev_u, Family::fibonacci, Family::cont_q_hermite}) {
        for (int trial = 0; trial < 4; ++trial) {
            Poly p;
            for (int d = 0; d <= 12; ++d) p += Poly::monomial(Scalar(coeff(rng)), d, 0);
            auto c = to_basis(p, f);
            CHECK(from_basis(c, f) == p);
        }
    }
}

TEST_CASE("connection identities all hold symbolically") {
    for (ConnectionId id : all_connections())
        for (int n = 0; n <= 12; ++n) {
            ConnectionVerdict v = connection_check(id, n);
            INFO("identity ", connection_to_string(id), " at n=", n, ", residual ",
                 render_poly(v.residual));
            CHECK(v.pass);
            CHECK(v.residual.is_zero());
        }
}

TEST_CASE("connection worked examples") {
    // U_2 + q U_0 = H_2(x|q)
    ConnectionSides s64 = connection_sides(ConnectionId::eq_6_4, 2);
    CHECK(s64.lhs == parse_poly("4*x^2 - 1 + q"));
    CHECK(s64.rhs == parse_poly("4*x^2 + q - 1"));

    ConnectionSides s511 = connection_sides(ConnectionId::eq_5_11, 2);
    CHECK(s511.rhs == parse_poly("x^2 - (1 - q)*s"));

    // T_2 = (H_2(x|q) - (1+q) H_0)/2
    ConnectionSides s67 = connection_sides(ConnectionId::eq_6_7, 2);
    CHECK(s67.lhs == parse_poly("2*x^2 - 1"));

    // folding T_{-n} = T_n appears for n >= 1 in eq_6_6
    for (int n = 1; n <= 6; ++n) CHECK(connection_check(ConnectionId::eq_6_6, n).pass);
}

TEST_CASE("inverse pairs: delta image, frozen oracle values, round trips") {
    std::vector<Poly> delta(9);
    delta[0] = Poly(1);

    SUBCASE("pair_5_21 forward of delta gives [2k,k] s^k") {
        auto b = inverse_pair_apply(PairId::pair_5_21, delta, PairDirection::forward);
        for (int n = 0; n <= 8; ++n) {
            Poly expect = n % 2 == 0 ? Poly::monomial(q_binomial(n, n / 2), 0, n / 2) : Poly();
            CHECK(b[n] == expect);
        }
    }

    SUBCASE("pair_3_6 oracle values") {
        // brute force of the forward rule with s = 1 on the delta sequence
        auto fwd = inverse_pair_apply(PairId::pair_3_6, delta, PairDirection::forward, Poly(1));
        std::vector<long> expect_fwd = {1, 0, 1, 0, 1, 0, 1, 0, 1};
        for (int n = 0; n <= 8; ++n) CHECK(fwd[n] == Poly(expect_fwd[n]));
        // backward rule with s = -1: (C(n,k) - C(n,k-1)) weights, Catalan values
        auto back = inverse_pair_apply(PairId::pair_3_6, delta, PairDirection::backward, Poly(-1));
        std::vector<long> expect_back = {1, 0, 1, 0, 2, 0, 5, 0, 14};
        for (int n = 0; n <= 8; ++n) CHECK(back[n] == Poly(expect_back[n]));
    }

    SUBCASE("round trips with symbolic s") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> val(-9, 9);
        for (PairId id : {PairId::pair_3_6, PairId::pair_3_8, PairId::pair_5_21,
                          PairId::pair_5_24}) {
            std::vector<Poly> seq(11);
            seq[0] = Poly(1);
            for (int n = 1; n <= 10; ++n) seq[n] = Poly(val(rng));
            auto fwd = inverse_pair_apply(id, seq, PairDirection::forward);
            auto back = inverse_pair_apply(id, fwd, PairDirection::backward);
            CHECK(back == seq);
            auto fwd2 = inverse_pair_apply(id, back, PairDirection::forward);
            CHECK(fwd2 == fwd);
        }
    }

    SUBCASE("empty sequence is an error") {
        CHECK_THROWS_AS(inverse_pair_apply(PairId::pair_3_6, {}, PairDirection::forward),
                        std::invalid_argument);
    }
}

TEST_CASE("5.28/5.29 as expansions in the q-hermite basis") {
    for (int n = 0; n <= 10; ++n) {
        Poly lstar = (n == 0 ? Poly(1) : family_poly(Family::lucas, n)).subst_s_poly(-Poly::s());
        auto c = to_basis(lstar, Family::q_hermite);
        for (int k = 0; 2 * k <= n; ++k) {
            Scalar w = q_triangular(k) *
                       (Scalar::q_power(k) * q_binomial(n - k, k) + q_binomial(n - k - 1, k - 1));
            if (k % 2 != 0) w = -w;
            CHECK(c[n - 2 * k] == Poly::monomial(w, 0, k));
        }
        Poly fib = family_poly(Family::fibonacci, n + 1).subst_s_poly(-Poly::s());
        auto cf = to_basis(fib, Family::q_hermite);
        for (int k = 0; 2 * k <= n; ++k) {
            Scalar w = q_binomial(n - k, k) * q_triangular(k + 1);
            if (k % 2 != 0) w = -w;
            CHECK(cf[n - 2 * k] == Poly::monomial(w, 0, k));
        }
    }
}

TEST_CASE("chebyshev basis conversions") {
    ChebPoly u2 = ChebPoly::unit(ChebBasis::U, 2);
    ChebPoly u2_in_t = cheb_basis_convert(u2, ChebBasis::T);
    CHECK(u2_in_t.coeff(2) == Scalar(2));
    CHECK(u2_in_t.coeff(0) == Scalar(1));
    CHECK(u2_in_t.coeffs().size() == 2);

    ChebPoly t2_mono = cheb_basis_convert(ChebPoly::unit(ChebBasis::T, 2), ChebBasis::Monomial);
    CHECK(cheb_to_poly(t2_mono) == parse_poly("2*x^2 - 1"));

    ChebPoly u1_in_t = cheb_basis_convert(ChebPoly::unit(ChebBasis::U, 1), ChebBasis::T);
    CHECK(u1_in_t.coeff(1) == Scalar(2));
    CHECK(u1_in_t.coeffs().size() == 1);

    for (int n = 0; n <= 12; ++n)
        for (ChebBasis from : {ChebBasis::T, ChebBasis::U, ChebBasis::Monomial})
            for (ChebBasis to : {ChebBasis::T, ChebBasis::U, ChebBasis::Monomial}) {
                ChebPoly p = ChebPoly::unit(from, n);
                CHECK(cheb_basis_convert(cheb_basis_convert(p, to), from) == p);
                CHECK(cheb_to_poly(cheb_basis_convert(p, to)) == cheb_to_poly(p));
            }
}

TEST_CASE("specializations of eq_5_11") {
    auto at_v = [](const Poly& p, long v) {
        return p.map_scalars([&](const Scalar& c) { return c.eval_at_v(Scalar(v)); });
    };
    for (int n = 0; n <= 10; ++n) {
        ConnectionSides s511 = connection_sides(ConnectionId::eq_5_11, n);
        ConnectionSides s35 = connection_sides(ConnectionId::eq_3_5, n);
        CHECK(at_v(s511.lhs, 1) == s35.lhs);
        CHECK(at_v(s511.rhs, 1) == Poly::monomial(Scalar(1), n));
        // q = 0 telescopes to F_{n+1}(x, -s)
        Poly fib = family_poly(Family::fibonacci, n + 1).subst_s_poly(-Poly::s());
        CHECK(at_v(s511.lhs, 0) == fib);
        CHECK(at_v(s511.rhs, 0) == fib);
    }
}
