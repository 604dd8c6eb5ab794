#include <cmath>

#include "sunbeam/dist.hpp"
#include "sunbeam/errors.hpp"

#include "doctest.h"

using namespace sunbeam;

namespace {

SuperpositionInput single_term(int order, std::vector<int> occupation) {
    SuperpositionInput input;
    input.order = order;
    input.terms.push_back({{1.0, 0.0}, std::move(occupation)});
    input.normalized = true;
    return input;
}

SuperpositionInput cnl_state(int order, int k_max) {
    SuperpositionInput input;
    input.order = order;
    const double c = 1.0 / std::sqrt(static_cast<double>(k_max + 1));
    for (int k = 0; k <= k_max; ++k) {
        std::vector<int> occ(static_cast<size_t>(order), 1);
        occ[0] = order * k;
        occ[static_cast<size_t>(order) - 1] = 2;
        input.terms.push_back({{c, 0.0}, std::move(occ)});
    }
    input.normalized = true;
    return input;
}

}  // namespace

TEST_CASE("input validation") {
    SuperpositionInput empty;
    empty.order = 2;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);

    SuperpositionInput bad = single_term(2, {1, 1});
    bad.terms[0].amplitude = {0.5, 0.0};  // claims normalized but |c|^2 = 1/4
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    SuperpositionInput wrong_len = single_term(3, {1, 1});
    CHECK_THROWS_AS(wrong_len.validate(), std::invalid_argument);
}

TEST_CASE("HOM distribution") {
    auto dist = output_distribution(single_term(2, {1, 1}), 4);
    CHECK(dist.at({1, 1}) == 0.0);  // exact-zero lift: the core is exact
    CHECK(dist.at({2, 0}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dist.at({0, 2}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("three-port single-photon distribution") {
    auto dist = output_distribution(single_term(3, {1, 1, 1}), 4);
    CHECK(dist.at({1, 1, 1}) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    double sum = 0.0;
    for (const auto& [m, p] : dist) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("permuting input modes permutes the distribution") {
    auto dist_a = output_distribution(single_term(3, {0, 1, 2}), 4);
    auto dist_b = output_distribution(single_term(3, {2, 1, 0}), 4);
    for (const auto& [m, p] : dist_a) {
        std::vector<int> swapped(m.rbegin(), m.rend());
        CHECK(dist_b.at(swapped) == doctest::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("superposed sectors stay disjoint") {
    SuperpositionInput input;
    input.order = 2;
    input.terms.push_back({{1.0 / std::sqrt(2.0), 0.0}, {1, 1}});
    input.terms.push_back({{1.0 / std::sqrt(2.0), 0.0}, {1, 0}});
    input.normalized = true;
    auto dist = output_distribution(input, 4);
    // two-photon sector halves plus one-photon sector halves
    CHECK(dist.at({1, 1}) == 0.0);
    CHECK(dist.at({2, 0}) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(dist.at({1, 0}) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(dist.at({0, 1}) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("resource cap") {
    CHECK_THROWS_AS(output_distribution(single_term(2, {9, 9}), 4), ResourceGuardError);
}

TEST_CASE("CNL check on the constructed family") {
    auto result = cnl_check(cnl_state(3, 2), 3);  // totals up to 9 photons
    CHECK(result.passed);
    CHECK(result.violations.empty());
    for (double p : result.diagonal) CHECK(p < 1e-12);
}

TEST_CASE("even-even inputs break the nodal line") {
    auto result = cnl_check(single_term(2, {2, 2}), 2);
    CHECK_FALSE(result.passed);
    CHECK(result.violations == std::vector<int>{2});
}

TEST_CASE("odd-odd two-port input keeps the nodal line") {
    auto result = cnl_check(single_term(2, {1, 3}), 3);
    CHECK(result.passed);
}

TEST_CASE("JSON round trip") {
    SuperpositionInput input = cnl_state(3, 1);
    SuperpositionInput back = SuperpositionInput::from_json(input.to_json());
    CHECK(back.order == 3);
    CHECK(back.terms.size() == 2);
    CHECK(back.terms[1].occupation == std::vector<int>{3, 1, 2});
}
