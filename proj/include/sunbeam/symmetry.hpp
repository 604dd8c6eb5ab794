#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sunbeam/permanent.hpp"
#include "sunbeam/transition.hpp"

#include "json.hpp"

namespace sunbeam {

/// Mod[sum_i i*(n_i + m_i) - 2n, N], 1-based ports: the w-power by which
/// Perm(D_L Lambda D_R) scales relative to Perm(Lambda).
int p_sym(const Transition& t);

/// Mod[sum_i i*n_i, N]: the reduced, output-independent form of the
/// constraint exponent. Requires a coincident output.
int p_tilde(const Transition& t);

enum class VerdictStatus { ProvenZero, Inconclusive };

std::string to_string(VerdictStatus s);

/// Outcome of the symmetry constraint for a coincident (geHOM) transition.
/// ProvenZero iff w^p_sym differs from the sign factor as ring constants,
/// equivalently iff p_tilde != 0. Computed from occupations alone in O(N);
/// Inconclusive never claims the amplitude is nonzero.
struct Verdict {
    int p_sym = 0;
    int p_tilde = 0;
    int photons_per_port = 0;            // m = n/N
    int sign = 1;                        // (-1)^((N-1) m)
    VerdictStatus status = VerdictStatus::Inconclusive;

    nlohmann::json to_json() const;
};

Verdict verdict(const Transition& t);

/// The Lambda' -> Lambda'' -> Lambda''' procedure: block-row rescaling by
/// w^(N+1-i) followed by a downward rotation of m rows, landing back on
/// Lambda entrywise. Requires a coincident output.
struct LambdaTriple {
    ExponentMatrix prime;
    ExponentMatrix second;
    ExponentMatrix third;
    bool matches_lambda = false;  // third == build_lambda(t) entrywise

    LambdaTriple() : prime(1, 0, 0), second(1, 0, 0), third(1, 0, 0) {}
};

LambdaTriple procedure_lambda_triple(const Transition& t);

/// Prediction for the diagonal transitions |m>^N -> |m>^N:
/// amplitude provably zero iff N even and m odd.
bool diagonal_gehom_zero(int order, int m);

/// True iff N = 2N' with N' odd and every input occupation is odd; the
/// constraint then forces a zero amplitude on the coincident output.
bool all_odd_zero_applies(const Transition& t);

/// The |Nk>|1>^(N-2)|2> -> |k+1>^N family: every member is ProvenZero for
/// N >= 3, independent of k. Exact amplitudes confirmed up to a photon cap.
struct CnlEntry {
    Transition transition;
    Verdict verdict;
    std::optional<bool> amplitude_zero;  // set when exact confirmation ran
};

std::vector<CnlEntry> cnl_family(int order, int k_max, int confirm_max_photons = 12,
                                 const RyserOptions& opts = {});

/// One scanned geHOM input (sorted occupations) with its exact zero-ness,
/// verdict, and whether Perm(D_L Lambda D_R) differs from Perm(Lambda) as
/// coefficient vectors.
struct ScanRow {
    std::vector<int> input;
    std::optional<bool> amplitude_zero;
    Verdict verdict;
    std::optional<bool> delta_perm_nonzero;
    bool identities_ok = true;   // scaling / procedure / step-6 identities
    bool soundness_ok = true;    // ProvenZero implies exact zero
};

struct ScanSummary {
    int order = 0;
    int total = 0;
    int photons_per_port = 0;
    int sign = 1;
    long long input_count = 0;     // |P_N^sorted(n)|
    long long rows_evaluated = 0;
    bool exact = true;
    long long zero_count = 0;
    long long nonzero_count = 0;
    std::set<int> p_sym_zero;
    std::set<int> p_sym_nonzero;
    long long delta_nonzero_count = 0;
    long long identity_violations = 0;
    long long soundness_violations = 0;
    long long inconclusive_zero_count = 0;
    bool partial = false;          // budget exhausted, counts incomplete

    nlohmann::json to_json() const;
};

struct ScanOptions {
    RyserOptions ryser;
    /// Rows to evaluate before emitting a partial result; -1 = all.
    long long max_inputs = -1;
    /// Compute exact permanents and identity checks (the default); off
    /// gives a verdict-only sweep.
    bool confirm_exact = true;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    ScanSummary summary;

    std::string to_csv() const;
};

/// Enumerates all sorted inputs for the geHOM transition family with N
/// ports and n photons (N | n) in lexicographic order.
ScanResult scan_gehom(int order, int n, const ScanOptions& opts = {});

/// Non-decreasing occupation vectors of length N summing to n.
std::vector<std::vector<int>> sorted_inputs(int order, int n);

}  // namespace sunbeam
