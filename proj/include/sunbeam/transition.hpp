#pragma once

#include <vector>

#include "sunbeam/bs_core.hpp"

#include "json.hpp"

namespace sunbeam {

/// One unit of work: input occupations n_i, output occupations m_j, both of
/// length N with equal totals (the conserved photon number n).
struct Transition {
    int order = 0;
    std::vector<int> input;
    std::vector<int> output;

    Transition() = default;
    Transition(int order_, std::vector<int> input_, std::vector<int> output_);

    int total() const;
    /// True iff every output port carries the same occupation.
    bool coincident_output() const;
    /// Throws invalid_argument on size/negativity/photon-number violations.
    void validate() const;

    nlohmann::json to_json() const;
};

/// Coincident geHOM transition |n_1..n_N> -> |n/N>^(x N). Requires N | n.
Transition coincident_transition(int order, std::vector<int> input);

/// The n x n matrix whose permanent is proportional to the transition
/// amplitude: row i of S_N replicated m_i times (zero rows skipped), then
/// column j replicated n_j times. Requires n >= 1.
ExponentMatrix build_lambda(const Transition& t);

/// D_L * Lambda * D_R with block-diagonal monomials: every row in the
/// i-th replicated block gains exponent i-1, every column in the j-th
/// block gains j-1, all mod N.
ExponentMatrix build_lambda_prime(const Transition& t);

}  // namespace sunbeam
