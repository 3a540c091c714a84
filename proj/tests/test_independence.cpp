#include "doctest.h"

#include "cumulantkit/errors.hpp"
#include "cumulantkit/independence.hpp"
#include "cumulantkit/partitions.hpp"

using namespace cumulantkit;

namespace {

AlgebraFamily two_singles(std::uint64_t sa, std::uint64_t sb, int depth) {
    AlgebraFamily fam;
    fam.add(1, random_functional(1, depth, sa));
    fam.add(2, random_functional(1, depth, sb));
    return fam;
}

} // namespace

TEST_CASE("the four calculation rules on the word X Y X") {
    const AlgebraFamily fam = two_singles(3, 4, 2);
    const Rational x1 = fam.at(1).moment({1});
    const Rational x2 = fam.at(1).moment({1, 1});
    const Rational y1 = fam.at(2).moment({1});
    const LabeledWord xyx{{1, 1}, {2, 1}, {1, 1}};

    CHECK(mixed_moment(Flavor::Tensor, fam, xyx) == x2 * y1);
    CHECK(mixed_moment(Flavor::Boolean, fam, xyx) == x1 * y1 * x1);
    CHECK(mixed_moment(Flavor::Monotone, fam, xyx) == y1 * x2);
    CHECK(mixed_moment(Flavor::Free, fam, xyx) == y1 * x2);
}

TEST_CASE("alternating fourth moments match the textbook forms") {
    const AlgebraFamily fam = two_singles(7, 8, 2);
    const Rational x1 = fam.at(1).moment({1});
    const Rational x2 = fam.at(1).moment({1, 1});
    const Rational y1 = fam.at(2).moment({1});
    const Rational y2 = fam.at(2).moment({1, 1});
    const LabeledWord xyxy{{1, 1}, {2, 1}, {1, 1}, {2, 1}};

    CHECK(mixed_moment(Flavor::Tensor, fam, xyxy) == x2 * y2);
    CHECK(mixed_moment(Flavor::Boolean, fam, xyxy) == x1 * x1 * y1 * y1);
    CHECK(mixed_moment(Flavor::Monotone, fam, xyxy) == y1 * y1 * x2);
    CHECK(mixed_moment(Flavor::Free, fam, xyxy) ==
          x2 * y1 * y1 + x1 * x1 * y2 - x1 * x1 * y1 * y1);
}

TEST_CASE("free vanishing on alternating centered words") {
    for (const std::uint64_t seed : {10u, 11u, 12u}) {
        MomentFunctional a = random_functional(1, 6, seed);
        MomentFunctional b = random_functional(1, 6, seed + 100);
        a.table[{1}] = Rational(0);
        b.table[{1}] = Rational(0);
        AlgebraFamily fam;
        fam.add(1, a);
        fam.add(2, b);
        for (int n = 2; n <= 6; ++n) {
            LabeledWord w;
            for (int i = 0; i < n; ++i) w.push_back({i % 2 == 0 ? 1 : 2, 1});
            CHECK(mixed_moment(Flavor::Free, fam, w) == Rational(0));
        }
    }
}

TEST_CASE("monotone reduction does not depend on the peak choice") {
    AlgebraFamily fam;
    fam.add(1, random_functional(1, 6, 21));
    fam.add(2, random_functional(1, 6, 22));
    fam.add(3, random_functional(1, 6, 23));
    MixedMomentEvaluator left(Flavor::Monotone, fam, PeakChoice::Leftmost);
    MixedMomentEvaluator right(Flavor::Monotone, fam, PeakChoice::Rightmost);
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> labels(static_cast<std::size_t>(n), 1);
        while (true) {
            LabeledWord w;
            for (const int l : labels) w.push_back({l, 1});
            CHECK(left.eval(w) == right.eval(w));
            std::size_t pos = labels.size();
            while (pos > 0 && labels[pos - 1] == 3) labels[--pos] = 1;
            if (pos == 0) break;
            ++labels[pos - 1];
        }
    }
}

TEST_CASE("moments are invariant under order-preserving relabeling") {
    AlgebraFamily dense, sparse;
    for (int i = 0; i < 3; ++i) {
        MomentFunctional phi = random_functional(1, 5, 30 + static_cast<std::uint64_t>(i));
        dense.add(i + 1, phi);
        sparse.add(2 * i + 2, phi); // 1,2,3 -> 2,4,6 keeps the order
    }
    const std::vector<std::vector<int>> patterns{
        {1, 2, 1}, {2, 1, 3, 1}, {3, 2, 1, 2, 3}, {1, 3, 2, 2, 3}};
    for (const Flavor f : {Flavor::Tensor, Flavor::Free, Flavor::Boolean, Flavor::Monotone}) {
        for (const auto& pattern : patterns) {
            LabeledWord a, b;
            for (const int l : pattern) {
                a.push_back({l, 1});
                b.push_back({2 * l, 1});
            }
            CHECK(mixed_moment(f, dense, a) == mixed_moment(f, sparse, b));
        }
    }
}

TEST_CASE("copy expansion: one copy, zero copies, two copies") {
    const MomentFunctional phi = random_functional(2, 3, 40);
    for (const Flavor f : {Flavor::Tensor, Flavor::Free, Flavor::Boolean, Flavor::Monotone}) {
        DotCalculator calc(f, phi);
        for (const auto& w : all_words(2, 3)) {
            CHECK(calc.dot(w, 1) == phi.moment(w));
            CHECK(calc.dot(w, 0) == Rational(0));
        }
    }
    // two monotone copies of one variable: 2 m2 + 2 m1^2
    MomentFunctional single;
    single.num_vars = 1;
    single.max_len = 2;
    single.table[{1}] = Rational(1, 3);
    single.table[{1, 1}] = Rational(5, 7);
    DotCalculator calc(Flavor::Monotone, single);
    CHECK(calc.dot({1, 1}, 2) ==
          Rational(2) * single.table[{1, 1}] + Rational(2) * single.table[{1}] * single.table[{1}]);
}

TEST_CASE("copy-count polynomials") {
    MomentFunctional single;
    single.num_vars = 1;
    single.max_len = 2;
    single.table[{1}] = Rational(1);
    single.table[{1, 1}] = Rational(2);
    DotCalculator calc(Flavor::Monotone, single);

    CHECK(calc.phi_t({1}) == UniPoly(Indet::T, {Rational(0), Rational(1)}));
    // (m2 - m1^2) t + m1^2 t^2 with m1 = 1, m2 = 2
    CHECK(calc.phi_t({1, 1}) == UniPoly(Indet::T, {Rational(0), Rational(1), Rational(1)}));

    const MomentFunctional phi = random_functional(2, 3, 50);
    for (const Flavor f : {Flavor::Tensor, Flavor::Free, Flavor::Boolean, Flavor::Monotone}) {
        DotCalculator deep(f, phi);
        for (const auto& w : all_words(2, 3)) {
            const UniPoly p = deep.phi_t(w);
            CHECK(p.coeff(0) == Rational(0));
            CHECK(p.degree() <= static_cast<int>(w.size()));
            CHECK(p.eval(Rational(1)) == phi.moment(w));
            // beyond the interpolation nodes: the polynomial keeps matching
            const long beyond1 = static_cast<long>(w.size()) + 1;
            const long beyond2 = static_cast<long>(w.size()) + 2;
            CHECK(p.eval(Rational(beyond1)) == deep.dot(w, beyond1));
            CHECK(p.eval(Rational(beyond2)) == deep.dot(w, beyond2));
        }
    }
}

TEST_CASE("pairwise-sum expansion") {
    AlgebraFamily fam = two_singles(60, 61, 3);
    const MomentFunctional& x = fam.at(1);
    const MomentFunctional& y = fam.at(2);

    CHECK(prop51_expansion(fam, {1}) == x.moment({1}) + y.moment({1}));
    CHECK(prop51_expansion(fam, {1, 1}) ==
          x.moment({1, 1}) + Rational(2) * x.moment({1}) * y.moment({1}) + y.moment({1, 1}));

    // length three vs direct monotone evaluation of the expanded product
    MixedMomentEvaluator ev(Flavor::Monotone, fam);
    const Word w{1, 1, 1};
    Rational direct(0);
    for (unsigned mask = 0; mask < 8; ++mask) {
        LabeledWord lw;
        for (int i = 0; i < 3; ++i) lw.push_back({(mask >> i) & 1u ? 2 : 1, 1});
        direct += ev.eval(lw);
    }
    CHECK(prop51_expansion(fam, w) == direct);

    AlgebraFamily three = fam;
    three.add(3, random_functional(1, 3, 62));
    CHECK_THROWS_AS(prop51_expansion(three, {1}), std::invalid_argument);
}

TEST_CASE("two-part expansion of the copy semigroup in (t, s)") {
    const MomentFunctional phi = random_functional(2, 4, 70);
    DotCalculator calc(Flavor::Monotone, phi);
    for (const auto& w : all_words(2, 4)) {
        const int n = static_cast<int>(w.size());
        const BiPoly lhs = BiPoly::at_t_plus_s(calc.phi_t(w));
        BiPoly rhs;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Block v;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1u) v.push_back(i + 1);
            BiPoly term = BiPoly::lift(calc.phi_t(subword_at(w, v)).retagged(Indet::T));
            for (const auto& gap : complement_decomposition(n, v))
                term = term * BiPoly::lift(calc.phi_t(subword_at(w, gap)).retagged(Indet::S));
            rhs += term;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("labeled word JSON") {
    const LabeledWord w{{1, 1}, {2, 1}};
    CHECK(labeled_word_from_json_text(labeled_word_to_json_text(w)) == w);
    CHECK_THROWS_AS(labeled_word_from_json_text("{}"), ParseError);
    CHECK_THROWS_AS(labeled_word_from_json_text(R"({"word":[]})"), ParseError);
    CHECK_THROWS_AS(labeled_word_from_json_text(R"({"word":[{"label":1}]})"), ParseError);
}

TEST_CASE("family lookups fail loudly for unknown labels") {
    AlgebraFamily fam = two_singles(80, 81, 2);
    CHECK_THROWS_AS(fam.at(9), std::invalid_argument);
    CHECK_THROWS_AS(mixed_moment(Flavor::Tensor, fam, {{9, 1}}), std::invalid_argument);
    MomentFunctional shallow = random_functional(1, 1, 82);
    fam.add(3, shallow);
    // merged run X3 X3 needs a second moment that is not stored
    CHECK_THROWS_AS(mixed_moment(Flavor::Boolean, fam, {{3, 1}, {3, 1}}), DepthError);
}
