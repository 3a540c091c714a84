#include "doctest.h"

#include <random>

#include "cumulantkit/genfun.hpp"
#include "cumulantkit/ncseries.hpp"

using namespace cumulantkit;

namespace {

using RSeries = NCSeries<Rational>;

RSeries random_series(int r, int degree, std::mt19937_64& rng, bool zero_constant = false) {
    RSeries s(r, degree);
    if (!zero_constant) s.set_coeff({}, Rational(static_cast<long>(rng() % 7) - 3));
    for (const auto& w : all_words(r, degree))
        s.set_coeff(w, Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 4) + 1));
    return s;
}

} // namespace

TEST_CASE("generators do not commute") {
    const RSeries one = RSeries::constant(2, 3, Rational(1));
    const RSeries z1 = RSeries::generator(2, 3, 1);
    const RSeries z2 = RSeries::generator(2, 3, 2);

    const RSeries product = (one + z1) * (one + z2);
    CHECK(product.coeff({}) == Rational(1));
    CHECK(product.coeff({1}) == Rational(1));
    CHECK(product.coeff({2}) == Rational(1));
    CHECK(product.coeff({1, 2}) == Rational(1));
    CHECK(product.coeff({2, 1}) == Rational(0));

    CHECK(z1 * z2 != z2 * z1);

    std::mt19937_64 rng(1);
    const RSeries a = random_series(2, 3, rng);
    CHECK(a * one == a);
    CHECK(one * a == a);
}

TEST_CASE("products truncate at the degree bound") {
    const RSeries z1 = RSeries::generator(1, 3, 1);
    const RSeries one = RSeries::constant(1, 3, Rational(1));
    const RSeries t = z1 * (one + z1); // z + z^2
    const RSeries square = t * t;
    CHECK(square.coeff({1, 1}) == Rational(1));
    CHECK(square.coeff({1, 1, 1}) == Rational(2));
    CHECK(square.coefficients().count({1, 1, 1, 1}) == 0);
}

TEST_CASE("substitution composes monomials") {
    const int r = 1, d = 3;
    const RSeries z1 = RSeries::generator(r, d, 1);
    const RSeries one = RSeries::constant(r, d, Rational(1));
    const RSeries target = z1 * (one + z1);

    CHECK(substitute(z1, {target}) == target);

    const RSeries p = z1 * z1;
    const RSeries composed = substitute(p, {target});
    CHECK(composed.coeff({1, 1}) == Rational(1));
    CHECK(composed.coeff({1, 1, 1}) == Rational(2));

    CHECK(substitute(p, {z1}) == p); // identity substitution

    CHECK_THROWS_AS(substitute(p, {one}), std::invalid_argument);
    CHECK_THROWS_AS(substitute(p, std::vector<RSeries>{}), std::invalid_argument);
    CHECK_THROWS_AS(p + RSeries(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(p * RSeries(2, 3), std::invalid_argument);
}

TEST_CASE("ring laws hold exactly on random series") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const RSeries a = random_series(2, 4, rng);
        const RSeries b = random_series(2, 4, rng);
        const RSeries c = random_series(2, 4, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK(a - a == RSeries(2, 4));
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        const RSeries a = random_series(2, 4, rng);
        const RSeries b = random_series(2, 4, rng);
        const std::vector<RSeries> targets{random_series(2, 4, rng, true),
                                           random_series(2, 4, rng, true)};
        CHECK(substitute(a * b, targets) == substitute(a, targets) * substitute(b, targets));
        CHECK(substitute(a + b, targets) == substitute(a, targets) + substitute(b, targets));
    }
}

TEST_CASE("component vectors compose associatively") {
    std::mt19937_64 rng(4);
    const auto vec = [&] {
        SeriesVector<Rational> v;
        v.components.push_back(RSeries::generator(2, 4, 1) * random_series(2, 4, rng));
        v.components.push_back(RSeries::generator(2, 4, 2) * random_series(2, 4, rng));
        return v;
    };
    const auto id = identity_vector<Rational>(2, 4);
    for (int trial = 0; trial < 5; ++trial) {
        const auto u = vec(), v = vec(), w = vec();
        CHECK(mu_compose(mu_compose(u, v), w) == mu_compose(u, mu_compose(v, w)));
        CHECK(mu_compose(u, id) == u);
        CHECK(mu_compose(id, u) == u);
    }
}

TEST_CASE("series JSON round trip") {
    std::mt19937_64 rng(5);
    const RSeries a = random_series(2, 3, rng);
    CHECK(series_from_json_text(series_to_json_text(a)) == a);

    NCSeries<UniPoly> pt(1, 2);
    pt.set_coeff({}, UniPoly(Rational(1)));
    pt.set_coeff({1}, UniPoly(Indet::T, {Rational(0), Rational(1)}));
    const std::string text = series_to_json_text(pt);
    CHECK(text.find("\"t\"") != std::string::npos);
    CHECK(text.find("\"D\"") != std::string::npos);
}
