#include "doctest.h"

#include <random>

#include "cumulantkit/errors.hpp"
#include "cumulantkit/polynomial.hpp"
#include "cumulantkit/rational.hpp"

using namespace cumulantkit;

TEST_CASE("rationals stay canonical") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(1, 2) / Rational(3) == Rational(1, 6));
    CHECK(-Rational(1, 2) < Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ParseError);
}

TEST_CASE("rational parsing is strict") {
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("/2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse(" 1"), ParseError);
}

TEST_CASE("interpolation recovers simple polynomials") {
    const UniPoly squares = lagrange_interpolate({{0, 0}, {1, 1}, {2, 4}});
    CHECK(squares == UniPoly(Indet::N, {Rational(0), Rational(0), Rational(1)}));

    const UniPoly doubling = lagrange_interpolate({{0, 0}, {1, 2}, {2, 4}});
    CHECK(doubling == UniPoly(Indet::N, {Rational(0), Rational(2)}));

    // values of (m2 - m1^2) N + m1^2 N^2 at m1 = 1, m2 = 2
    const UniPoly mixed = lagrange_interpolate({{0, 0}, {1, 2}, {2, 6}});
    CHECK(mixed == UniPoly(Indet::N, {Rational(0), Rational(1), Rational(1)}));

    CHECK_THROWS_AS(lagrange_interpolate({{1, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_interpolate({}), std::invalid_argument);
}

TEST_CASE("interpolation is exact at the nodes and node-independent") {
    std::mt19937_64 rng(11);
    const auto rnd = [&] {
        return Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1);
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<long, Rational>> pts;
        for (long x = 0; x <= 5; ++x) pts.emplace_back(x, rnd());
        const UniPoly p = lagrange_interpolate(pts);
        for (const auto& [x, y] : pts) CHECK(p.eval(Rational(x)) == y);
    }
    // a degree <= n+1 polynomial sampled at any n+2 distinct integers
    // interpolates to itself
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> coeffs;
        for (int k = 0; k <= 4; ++k) coeffs.push_back(rnd());
        const UniPoly p(Indet::N, coeffs);
        std::vector<std::pair<long, Rational>> a, b;
        for (long x = 0; x <= 5; ++x) a.emplace_back(x, p.eval(Rational(x)));
        for (long x = -3; x <= 2; ++x) b.emplace_back(2 * x + 1, p.eval(Rational(2 * x + 1)));
        CHECK(lagrange_interpolate(a) == p);
        CHECK(lagrange_interpolate(b) == p);
    }
}

TEST_CASE("polynomial derivatives") {
    const UniPoly t2 = UniPoly::monomial(Indet::T, 2);
    CHECK(poly_derivative(t2, Indet::T) == UniPoly::monomial(Indet::T, 1, Rational(2)));
    CHECK(poly_derivative(UniPoly(Rational(5)), Indet::T).is_zero());
    CHECK_THROWS_AS(poly_derivative(t2, Indet::S), std::invalid_argument);

    // (m2 - m1^2) t + m1^2 t^2 at m1 = 1, m2 = 2; derivative at 0 is the
    // second-order cumulant m2 - m1^2
    const UniPoly p(Indet::T, {Rational(0), Rational(1), Rational(1)});
    CHECK(p.derivative(Indet::T).eval(Rational(0)) == Rational(1));
}

TEST_CASE("polynomial arithmetic keeps constants indeterminate-agnostic") {
    const UniPoly n = UniPoly::monomial(Indet::N, 1);
    const UniPoly t = UniPoly::monomial(Indet::T, 1);
    CHECK_NOTHROW(n + UniPoly(Rational(3)));
    CHECK_THROWS_AS(n + t, std::invalid_argument);
    CHECK((n + (-n)).is_zero());
    CHECK(n.retagged(Indet::T) == t);
    CHECK((t * t).degree() == 2);
    CHECK(UniPoly(Indet::T, {Rational(1), Rational(1)}).eval(Rational(2)) == Rational(3));
}

TEST_CASE("bivariate polynomials expand t+s binomially") {
    const UniPoly square = UniPoly::monomial(Indet::N, 2);
    const BiPoly expanded = BiPoly::at_t_plus_s(square);
    CHECK(expanded.coeff(2, 0) == Rational(1));
    CHECK(expanded.coeff(1, 1) == Rational(2));
    CHECK(expanded.coeff(0, 2) == Rational(1));
    CHECK(expanded.coeff(1, 0) == Rational(0));

    const BiPoly t = BiPoly::lift(UniPoly::monomial(Indet::T, 1));
    const BiPoly s = BiPoly::lift(UniPoly::monomial(Indet::S, 1));
    CHECK((t + s) * (t + s) == expanded);
    CHECK(t * s == s * t);
    CHECK((t - t).is_zero());

    // s := t collapse and s := 0 specialization
    CHECK(expanded.collapse_s_to_t() ==
          UniPoly(Indet::T, {Rational(0), Rational(0), Rational(4)}));
    CHECK(expanded.at_s_zero() == UniPoly(Indet::T, {Rational(0), Rational(0), Rational(1)}));
}
