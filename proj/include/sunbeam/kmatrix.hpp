#pragma once

#include <functional>
#include <vector>

#include "sunbeam/cyclo.hpp"
#include "sunbeam/transition.hpp"

#include "json.hpp"

namespace sunbeam {

/// |P_N(n)| = C(n+N-1, n): weak compositions of n into N parts.
Int count_weak_compositions(int n, int order);

/// N x N non-negative integer matrix with row sums n_i and column sums m_j;
/// one valid K is one scattering configuration (sub-amplitude).
struct KMatrix {
    int order = 0;
    std::vector<int> entries;  // row-major

    int operator()(int i, int j) const { return entries[static_cast<size_t>(i) * order + j]; }
};

struct EnumerationBudget {
    long long max_visits = 10'000'000;        // valid K matrices delivered
    long long max_nodes = 1'000'000'000;      // backtracking node expansions
};

/// Visits every valid K exactly once (row-wise backtracking with running
/// column-capacity bounds); returns the count. The visited set equals the
/// brute-force product-of-partitions filter (tested as an oracle).
long long enumerate_k(const Transition& t, const std::function<void(const KMatrix&)>& visit,
                      const EnumerationBudget& budget = {});

/// Mod[sum_ij i*j*k_ij, N], 1-based indices: the power of w carried by K.
int k_exponent(const KMatrix& k);

/// 1 / prod_ij k_ij!: the combinatorial weight of K.
Rat k_coefficient(const KMatrix& k);

/// Sum over valid K of k_coefficient * w^k_exponent; proportional to the
/// permanent-route amplitude (exact relation tested in the suite).
CycloPoly amplitude_by_ksum(const Transition& t, const EnumerationBudget& budget = {});

/// Sub-amplitude cancellation analysis: valid K matrices grouped by their
/// combinatorial coefficient, with per-exponent counts and per-group sums.
struct GroupReport {
    struct Group {
        Rat coeff;
        std::vector<long long> counts;  // counts[p] = # valid K at exponent p
        CycloPoly sum;                  // coeff * sum_p counts[p] w^p
        bool zero = false;              // group individually cancels

        Group() : sum(1) {}
    };

    Transition transition;
    long long valid_count = 0;
    std::vector<Group> groups;  // ascending by coefficient
    CycloPoly total;            // equals amplitude_by_ksum

    GroupReport() : total(1) {}

    nlohmann::json to_json() const;
    std::string to_csv() const;  // coefficient,p,count triples
};

GroupReport group_analysis(const Transition& t, const EnumerationBudget& budget = {});

/// Closed-form estimate of the number of valid K matrices, evaluated with
/// Gamma-function binomials and rounded half-away-from-zero: once as
/// given, once with the margins swapped, plus the rounded average.
struct JknEstimate {
    Int omega_nm;
    Int omega_mn;
    Int omega_sym;
};

JknEstimate jkn_estimate(const Transition& t);

}  // namespace sunbeam
