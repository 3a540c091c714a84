#include "doctest.h"

#include <fstream>
#include <sstream>

#include "closed_forms.hpp"
#include "cumulantkit/cumulants.hpp"
#include "cumulantkit/errors.hpp"

using namespace cumulantkit;

namespace {

const std::vector<Flavor> kAllFlavors{Flavor::Tensor, Flavor::Free, Flavor::Boolean,
                                      Flavor::Monotone};

} // namespace

TEST_CASE("first and second cumulants for every flavor") {
    const MomentFunctional phi = random_functional(2, 2, 5);
    for (const Flavor f : kAllFlavors) {
        for (int i = 1; i <= 2; ++i)
            CHECK(cumulant_dot(f, phi, {i}) == phi.moment({i}));
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                CHECK(cumulant_dot(f, phi, {i, j}) ==
                      phi.moment({i, j}) - phi.moment({i}) * phi.moment({j}));
    }
}

TEST_CASE("block products extract subwords") {
    CumulantFunctional k;
    k.flavor = Flavor::Tensor;
    k.num_vars = 3;
    k.max_order = 3;
    for (const auto& w : all_words(3, 3)) k.table[w] = Rational(static_cast<long>(w.size()));
    k.table[{1, 3}] = Rational(7);
    k.table[{2}] = Rational(5);

    const Word w{1, 2, 3};
    CHECK(cumulant_of_partition(k, make_partition(3, {{1}, {2}, {3}}), w) ==
          k.table[{1}] * k.table[{2}] * k.table[{3}]);
    CHECK(cumulant_of_partition(k, make_partition(3, {{1, 2, 3}}), w) == k.table[{1, 2, 3}]);
    CHECK(cumulant_of_partition(k, make_partition(3, {{1, 3}, {2}}), w) == Rational(35));
    CHECK_THROWS_AS(cumulant_of_partition(k, make_partition(2, {{1}, {2}}), w),
                    std::invalid_argument);
}

TEST_CASE("moment sums at orders one and two") {
    const MomentFunctional phi = random_functional(2, 2, 6);
    for (const Flavor f : kAllFlavors) {
        const CumulantFunctional k = cumulants_from_moments(f, phi, 2);
        const MomentFunctional back = moments_from_cumulants(k, 2);
        for (int i = 1; i <= 2; ++i) CHECK(back.moment({i}) == k.table.at(Word{i}));
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                CHECK(back.moment({i, j}) ==
                      k.table.at(Word{i, j}) + k.table.at(Word{i}) * k.table.at(Word{j}));
    }
}

TEST_CASE("inversion matches the closed forms through order four") {
    // single variable with m1 = 1, m2 = 2, m3 = 6
    MomentFunctional single;
    single.num_vars = 1;
    single.max_len = 3;
    single.table[{1}] = Rational(1);
    single.table[{1, 1}] = Rational(2);
    single.table[{1, 1, 1}] = Rational(6);
    const CumulantFunctional k = cumulants_from_moments(Flavor::Monotone, single, 3);
    CHECK(k.table.at(Word{1, 1}) == Rational(1));      // variance
    CHECK(k.table.at(Word{1, 1, 1}) == Rational(5, 2)); // 6 - 2*2 - 1/2*2 + 3/2

    for (const std::uint64_t seed : {201u, 202u}) {
        const MomentFunctional phi = random_functional(4, 4, seed);
        const CumulantFunctional km = cumulants_from_moments(Flavor::Monotone, phi, 4);
        for (const auto& w : all_words(4, 4))
            CHECK(km.table.at(w) == testing::monotone_closed_form(phi, w));
    }
}

TEST_CASE("the bundled regression fixtures agree with the closed forms") {
    const std::string dir = CUMULANTKIT_FIXTURE_DIR;
    const MomentFunctional phi = load_moments(dir + "/closed_form_moments.json");
    const CumulantFunctional expected = load_cumulants(dir + "/closed_form_cumulants.json");
    CHECK(expected.flavor == Flavor::Monotone);
    for (const auto& w : all_words(4, 4))
        CHECK(expected.table.at(w) == testing::monotone_closed_form(phi, w));
    CHECK(cumulants_from_moments(Flavor::Monotone, phi, 4).table == expected.table);
}

TEST_CASE("round trip between moments and cumulants at order five") {
    const MomentFunctional phi = random_functional(2, 5, 7);
    for (const Flavor f : kAllFlavors) {
        const CumulantFunctional k = cumulants_from_moments(f, phi, 5);
        const MomentFunctional back = moments_from_cumulants(k, 5);
        CHECK(back.table == phi.table);
        const CumulantFunctional again = cumulants_from_moments(f, back, 5);
        CHECK(again.table == k.table);
    }
}

TEST_CASE("ordered-partition sums agree with the per-partition weights") {
    const MomentFunctional phi = random_functional(2, 5, 8);
    const CumulantFunctional k = cumulants_from_moments(Flavor::Monotone, phi, 5);
    const MomentFunctional back = moments_from_cumulants(k, 5);
    for (const auto& w : all_words(2, 5))
        CHECK(back.moment(w) == monotone_moment_via_ordered_partitions(k, w));
}

TEST_CASE("partition weights equal the leading coefficients for universal flavors") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_partitions(n, PartitionKind::All))
            for (const Flavor f : {Flavor::Tensor, Flavor::Free, Flavor::Boolean})
                CHECK(partition_weight(f, p) == highest_coefficient(f, p));
    // one-block sequences have weight one in the monotone case as well
    CHECK(partition_weight(Flavor::Monotone, make_partition(3, {{1, 2, 3}})) == Rational(1));
    CHECK(partition_weight(Flavor::Monotone, make_partition(2, {{1}, {2}})) == Rational(1));
    CHECK(partition_weight(Flavor::Monotone, make_partition(3, {{1, 3}, {2}})) == Rational(1, 2));
    CHECK(partition_weight(Flavor::Monotone, make_partition(4, {{1, 3}, {2, 4}})) == Rational(0));
}

TEST_CASE("multilinearity in one slot") {
    // variable 3 is the sum of variables 1 and 2: every moment containing
    // it expands linearly over the choices
    const MomentFunctional base = random_functional(2, 3, 9);
    MomentFunctional sum;
    sum.num_vars = 3;
    sum.max_len = 3;
    for (const auto& w : all_words(3, 3)) {
        Rational acc(0);
        std::vector<std::size_t> spots;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] == 3) spots.push_back(i);
        for (unsigned mask = 0; mask < (1u << spots.size()); ++mask) {
            Word u = w;
            for (std::size_t b = 0; b < spots.size(); ++b) u[spots[b]] = (mask >> b) & 1u ? 2 : 1;
            acc += base.moment(u);
        }
        sum.table[w] = acc;
    }
    for (const Flavor f : kAllFlavors) {
        DotCalculator calc(f, sum);
        for (const auto& w : all_words(2, 3)) {
            for (std::size_t slot = 0; slot < w.size(); ++slot) {
                Word with_sum = w, with_one = w, with_two = w;
                with_sum[slot] = 3;
                with_one[slot] = 1;
                with_two[slot] = 2;
                CHECK(calc.cumulant(with_sum) ==
                      calc.cumulant(with_one) + calc.cumulant(with_two));
            }
        }
    }

    // scaling one slot scales the cumulant
    const Rational c(3, 2);
    MomentFunctional scaled;
    scaled.num_vars = 2;
    scaled.max_len = 3;
    for (const auto& w : all_words(2, 3)) {
        Rational factor(1);
        Word u = w;
        for (auto& v : u)
            if (v == 2) {
                v = 1;
                factor *= c;
            }
        scaled.table[w] = factor * base.moment(u);
    }
    for (const Flavor f : kAllFlavors) {
        DotCalculator calc(f, scaled);
        for (const auto& w : all_words(1, 3)) {
            Word one_scaled = w;
            one_scaled[0] = 2;
            CHECK(calc.cumulant(one_scaled) == c * calc.cumulant(w));
        }
    }
}

TEST_CASE("mixed independent words have vanishing universal cumulants") {
    AlgebraFamily fam;
    fam.add(1, random_functional(1, 4, 11));
    fam.add(2, random_functional(1, 4, 12));
    const LabeledWord xy{{1, 1}, {2, 1}};
    const LabeledWord xyxy{{1, 1}, {2, 1}, {1, 1}, {2, 1}};
    for (const Flavor f : {Flavor::Tensor, Flavor::Free, Flavor::Boolean}) {
        CHECK(check_mk3(f, fam, xy) == Rational(0));
        CHECK(check_mk3(f, fam, xyxy) == Rational(0));
    }
    CHECK_THROWS_AS(check_mk3(Flavor::Tensor, fam, LabeledWord{{1, 1}, {1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("the monotone third cumulant of X, Y, X does not vanish") {
    MomentFunctional x;
    x.num_vars = 1;
    x.max_len = 3;
    x.table[{1}] = Rational(1);
    x.table[{1, 1}] = Rational(2);
    x.table[{1, 1, 1}] = Rational(4);
    MomentFunctional y = x;
    y.table[{1, 1}] = Rational(1);
    y.table[{1, 1, 1}] = Rational(1);
    AlgebraFamily fam;
    fam.add(1, x);
    fam.add(2, y);
    const Rational k3 = check_mk3(Flavor::Monotone, fam, {{1, 1}, {2, 1}, {1, 1}});
    CHECK(k3 == Rational(1, 2));
    CHECK(k3 ==
          (x.table.at({1, 1}) * y.table.at({1}) - x.table.at({1}) * y.table.at({1}) * x.table.at({1})) /
              Rational(2));
}

TEST_CASE("cumulant files round-trip and validate") {
    const MomentFunctional phi = random_functional(2, 3, 13);
    const CumulantFunctional k = cumulants_from_moments(Flavor::Boolean, phi, 3);
    const CumulantFunctional reloaded = cumulants_from_json_text(cumulants_to_json_text(k));
    CHECK(reloaded.flavor == k.flavor);
    CHECK(reloaded.table == k.table);

    CHECK_THROWS_AS(cumulants_from_json_text(
                        R"({"flavor":"monotone","num_vars":1,"max_order":2,"cumulants":{"1":"1"}})"),
                    ParseError);
    CHECK_THROWS_AS(cumulants_from_json_text(
                        R"({"flavor":"sideways","num_vars":1,"max_order":1,"cumulants":{"1":"1"}})"),
                    ParseError);
}

TEST_CASE("depth shortfalls name the offending word") {
    const MomentFunctional phi = random_functional(1, 2, 14);
    CHECK_THROWS_WITH_AS(cumulants_from_moments(Flavor::Free, phi, 3),
                         doctest::Contains("1,1,1"), DepthError);
    CumulantFunctional k = cumulants_from_moments(Flavor::Free, phi, 2);
    CHECK_THROWS_AS(moments_from_cumulants(k, 3), DepthError);
    CHECK_THROWS_AS(k.cumulant({1, 1, 1}), DepthError);
}
