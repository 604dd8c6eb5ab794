#pragma once

#include <complex>
#include <map>
#include <vector>

#include "sunbeam/permanent.hpp"

#include "json.hpp"

namespace sunbeam {

/// Finite superposition of Fock product inputs with complex coefficients.
/// The exact cyclotomic core runs underneath each basis term, so exact
/// per-term zeros survive the floating superposition.
struct SuperpositionTerm {
    std::complex<double> amplitude;
    std::vector<int> occupation;
};

struct SuperpositionInput {
    int order = 0;
    std::vector<SuperpositionTerm> terms;
    bool normalized = false;

    void validate() const;

    static SuperpositionInput from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// Output probabilities P(m) = |sum_k c_k A(n_k -> m)|^2 for every output
/// occupation whose total matches some input term. Terms with different
/// totals feed disjoint output sectors.
std::map<std::vector<int>, double> output_distribution(const SuperpositionInput& input,
                                                       int total_cap,
                                                       const RyserOptions& opts = {});

/// Central-nodal-line check: P(m, m, ..., m) < 1e-12 for all m <= max_m.
struct CnlCheckResult {
    bool passed = true;
    std::vector<int> violations;            // offending m values
    std::vector<double> diagonal;           // P(m,...,m) for m = 0..max_m
};

CnlCheckResult cnl_check(const SuperpositionInput& input, int max_m,
                         const RyserOptions& opts = {});

}  // namespace sunbeam
