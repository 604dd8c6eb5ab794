#include <random>
#include <set>

#include "sunbeam/symmetry.hpp"

#include "doctest.h"

using namespace sunbeam;

TEST_CASE("p_sym from the worked examples") {
    CHECK(p_sym(Transition(4, {1, 1, 1, 1}, {1, 1, 1, 1})) == 0);
    CHECK(p_sym(Transition(3, {0, 1, 2}, {1, 1, 1})) == 2);
    CHECK(p_sym(Transition(5, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1})) == 0);
}

TEST_CASE("p_tilde from the worked examples") {
    CHECK(p_tilde(coincident_transition(12, {0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 4})) == 0);
    CHECK(p_tilde(coincident_transition(14, {0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 3, 3, 3})) == 0);
    for (int k = 0; k <= 4; ++k)
        CHECK(p_tilde(coincident_transition(3, {3 * k, 1, 2})) == 2);
    CHECK_THROWS_AS(p_tilde(Transition(2, {1, 1}, {2, 0})), std::invalid_argument);
}

TEST_CASE("verdicts") {
    Verdict diag = verdict(Transition(4, {1, 1, 1, 1}, {1, 1, 1, 1}));
    CHECK(diag.sign == -1);
    CHECK(diag.p_sym == 0);
    CHECK(diag.status == VerdictStatus::ProvenZero);

    Verdict even = verdict(Transition(4, {2, 2, 2, 2}, {2, 2, 2, 2}));
    CHECK(even.sign == 1);
    CHECK(even.p_sym == 0);
    CHECK(even.status == VerdictStatus::Inconclusive);
    CHECK_FALSE(amplitude_unnormalized(Transition(4, {2, 2, 2, 2}, {2, 2, 2, 2})).is_zero());

    Transition case1 = coincident_transition(12, {0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 4});
    Verdict afsr_case = verdict(case1);
    CHECK(afsr_case.status == VerdictStatus::Inconclusive);
    CHECK(afsr_case.p_tilde == 0);

    CHECK_THROWS_AS(verdict(Transition(2, {1, 1}, {2, 0})), std::invalid_argument);
}

TEST_CASE("sorted input enumeration") {
    CHECK(sorted_inputs(3, 3).size() == 3);
    CHECK(sorted_inputs(3, 9).size() == 12);
    CHECK(sorted_inputs(4, 4).size() == 5);
    CHECK(sorted_inputs(4, 16).size() == 64);
    CHECK(sorted_inputs(6, 6).size() == 11);
    auto first = sorted_inputs(3, 3).front();
    CHECK(first == std::vector<int>{0, 0, 3});
}

TEST_CASE("scan (3,9) reproduces the zero-input list") {
    ScanResult scan = scan_gehom(3, 9);
    CHECK(scan.summary.zero_count == 6);
    CHECK(scan.summary.nonzero_count == 6);
    CHECK(scan.summary.identity_violations == 0);
    CHECK(scan.summary.soundness_violations == 0);
    CHECK(scan.summary.inconclusive_zero_count == 0);
    std::set<std::vector<int>> zeros;
    for (const auto& row : scan.rows)
        if (row.amplitude_zero.value()) zeros.insert(row.input);
    CHECK(zeros == std::set<std::vector<int>>{{0, 1, 8},
                                              {0, 2, 7},
                                              {0, 4, 5},
                                              {1, 2, 6},
                                              {1, 3, 5},
                                              {2, 3, 4}});
}

TEST_CASE("scan (4,4) row-level detail") {
    ScanResult scan = scan_gehom(4, 4);
    CHECK(scan.summary.zero_count == 4);
    CHECK(scan.summary.nonzero_count == 1);
    CHECK(scan.summary.p_sym_zero == std::set<int>{0, 1, 3});
    CHECK(scan.summary.p_sym_nonzero == std::set<int>{2});
    CHECK(scan.summary.delta_nonzero_count == 1);
    CHECK(scan.summary.sign == -1);
    for (const auto& row : scan.rows) {
        const bool proven = row.verdict.status == VerdictStatus::ProvenZero;
        CHECK(proven == (row.verdict.p_tilde != 0));  // reduced-form equivalence
        if (proven) CHECK(row.amplitude_zero.value());
    }
}

TEST_CASE("scan (6,6) matches the even-N table row") {
    ScanResult scan = scan_gehom(6, 6);
    CHECK(scan.summary.zero_count == 8);
    CHECK(scan.summary.nonzero_count == 3);
    CHECK(scan.summary.p_sym_zero == std::set<int>{0, 1, 2, 5});
    CHECK(scan.summary.p_sym_nonzero == std::set<int>{3});
    CHECK(scan.summary.delta_nonzero_count == 6);
    CHECK(scan.summary.identity_violations == 0);
}

TEST_CASE("scan budget produces an explicit partial marker") {
    ScanOptions opts;
    opts.max_inputs = 3;
    ScanResult scan = scan_gehom(4, 8, opts);
    CHECK(scan.summary.partial);
    CHECK(scan.rows.size() == 3);
    CHECK(scan.summary.rows_evaluated == 3);
    CHECK(scan.summary.input_count == 15);
}

TEST_CASE("verdict-only scan skips the exact columns") {
    ScanOptions opts;
    opts.confirm_exact = false;
    ScanResult scan = scan_gehom(4, 8, opts);
    CHECK_FALSE(scan.rows.front().amplitude_zero.has_value());
    CHECK(scan.to_csv().find("Inconclusive") != std::string::npos);
}

TEST_CASE("scan output is independent of worker count") {
    ScanOptions one, four;
    one.ryser.jobs = 1;
    four.ryser.jobs = 4;
    CHECK(scan_gehom(4, 8, one).to_csv() == scan_gehom(4, 8, four).to_csv());
}

TEST_CASE("the lambda procedure lands back on lambda") {
    Transition t(4, {1, 2, 2, 3}, {2, 2, 2, 2});
    LambdaTriple triple = procedure_lambda_triple(t);
    CHECK(triple.matches_lambda);
    CHECK(triple.prime == build_lambda_prime(t));
    // Lambda'' from the displayed procedure: rows of Lambda' rescaled
    CHECK(triple.second(0, 1) == 1);
    CHECK(triple.second(2, 0) == 0);
    CHECK(triple.second(6, 0) == 0);
    CHECK(triple.third == build_lambda(t));

    CHECK(procedure_lambda_triple(Transition(2, {1, 1}, {1, 1})).matches_lambda);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int order = 2 + static_cast<int>(rng() % 4);  // N <= 5
        const int m = 1 + static_cast<int>(rng() % 2);
        const int n = order * m;
        std::vector<int> input(static_cast<size_t>(order));
        for (int k = 0; k < n; ++k) ++input[rng() % order];
        CHECK(procedure_lambda_triple(coincident_transition(order, input)).matches_lambda);
    }

    CHECK_THROWS_AS(procedure_lambda_triple(Transition(2, {1, 1}, {2, 0})),
                    std::invalid_argument);
}

TEST_CASE("diagonal transitions") {
    CHECK(diagonal_gehom_zero(4, 3));
    CHECK_FALSE(diagonal_gehom_zero(4, 2));
    CHECK_FALSE(diagonal_gehom_zero(3, 1));
    CHECK_THROWS_AS(diagonal_gehom_zero(1, 1), std::invalid_argument);

    CHECK(amplitude_unnormalized(Transition(4, {3, 3, 3, 3}, {3, 3, 3, 3})).is_zero());
    CHECK_FALSE(amplitude_unnormalized(Transition(4, {2, 2, 2, 2}, {2, 2, 2, 2})).is_zero());
    CHECK(*amplitude_unnormalized(Transition(3, {1, 1, 1}, {1, 1, 1})).as_constant() == -3);
}

TEST_CASE("all-odd inputs with N twice an odd number") {
    Transition six = coincident_transition(6, {1, 1, 1, 3, 3, 3});
    CHECK(all_odd_zero_applies(six));
    CHECK(amplitude_unnormalized(six).is_zero());

    CHECK_FALSE(all_odd_zero_applies(Transition(4, {1, 1, 1, 1}, {1, 1, 1, 1})));
    CHECK_FALSE(all_odd_zero_applies(coincident_transition(6, {1, 1, 2, 2, 3, 3})));
}

TEST_CASE("CNL family") {
    auto family = cnl_family(3, 6);
    REQUIRE(family.size() == 7);
    for (const auto& entry : family) {
        CHECK(entry.verdict.status == VerdictStatus::ProvenZero);
        CHECK(entry.verdict.p_tilde == 2);
        if (entry.amplitude_zero.has_value()) CHECK(*entry.amplitude_zero);
    }
    // exact confirmation covered k <= 3 at the default photon cap
    CHECK(family[3].amplitude_zero.has_value());
    CHECK_FALSE(family[6].amplitude_zero.has_value());

    auto n4 = cnl_family(4, 0);
    CHECK(n4[0].transition.input == std::vector<int>{0, 1, 1, 2});
    CHECK(n4[0].amplitude_zero.value());

    auto n5 = cnl_family(5, 1);
    CHECK(n5[1].verdict.p_tilde == 4);
    CHECK(n5[1].verdict.status == VerdictStatus::ProvenZero);

    CHECK_THROWS_AS(cnl_family(2, 3), std::invalid_argument);

    // the family's exponent never vanishes
    for (int order = 3; order <= 30; ++order)
        CHECK((((order + 1) * (order - 2) / 2) % order) != 0);
}

TEST_CASE("zero-ness is invariant under the port relabelings S_N admits") {
    // The DFT grid keeps its form under cyclic shifts and reversal of the
    // port labels (and full permutations only at N <= 3); arbitrary
    // transpositions genuinely change the physics for N >= 4:
    // |1,1,3,3> -> |2222> is nonzero while |1,3,1,3> -> |2222> vanishes.
    CHECK_FALSE(amplitude_unnormalized(Transition(4, {1, 1, 3, 3}, {2, 2, 2, 2})).is_zero());
    CHECK(amplitude_unnormalized(Transition(4, {1, 3, 1, 3}, {2, 2, 2, 2})).is_zero());

    std::mt19937 rng(515);
    for (int trial = 0; trial < 10; ++trial) {
        // full S_3 = dihedral group of the triangle, so any permutation works
        std::vector<int> input(3);
        for (int k = 0; k < 6; ++k) ++input[rng() % 3];
        const bool zero = amplitude_unnormalized(coincident_transition(3, input)).is_zero();
        std::sort(input.begin(), input.end());
        do {
            CHECK(amplitude_unnormalized(coincident_transition(3, input)).is_zero() == zero);
        } while (std::next_permutation(input.begin(), input.end()));
    }

    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> input(4);
        for (int k = 0; k < 8; ++k) ++input[rng() % 4];
        const bool zero = amplitude_unnormalized(coincident_transition(4, input)).is_zero();
        std::vector<int> shifted = input;
        std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
        CHECK(amplitude_unnormalized(coincident_transition(4, shifted)).is_zero() == zero);
        std::vector<int> reversed = input;  // fix port 1, reverse 2..N
        std::reverse(reversed.begin() + 1, reversed.end());
        CHECK(amplitude_unnormalized(coincident_transition(4, reversed)).is_zero() == zero);
    }
}

TEST_CASE("scan CSV shape") {
    std::string csv = scan_gehom(3, 3).to_csv();
    CHECK(csv.rfind("input,amplitude_zero,p_sym,p_tilde,sign,status,delta_perm_nonzero\n", 0) == 0);
    CHECK(csv.find("\"0,0,3\"") != std::string::npos);
}
