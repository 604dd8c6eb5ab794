#include "sunbeam/symmetry.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sunbeam {

namespace {

void require_coincident(const Transition& t, const char* who) {
    t.validate();
    if (!t.coincident_output()) {
        std::ostringstream os;
        os << who << ": output state must be coincident (equal occupation in every port)";
        throw std::invalid_argument(os.str());
    }
}

int euclid_mod(long long v, int order) {
    long long r = v % order;
    if (r < 0) r += order;
    return static_cast<int>(r);
}

}  // namespace

int p_sym(const Transition& t) {
    t.validate();
    long long sum = 0;
    for (int i = 0; i < t.order; ++i)
        sum += static_cast<long long>(i + 1) *
               (t.input[static_cast<size_t>(i)] + t.output[static_cast<size_t>(i)]);
    return euclid_mod(sum - 2LL * t.total(), t.order);
}

int p_tilde(const Transition& t) {
    require_coincident(t, "p_tilde");
    long long sum = 0;
    for (int i = 0; i < t.order; ++i)
        sum += static_cast<long long>(i + 1) * t.input[static_cast<size_t>(i)];
    return euclid_mod(sum, t.order);
}

std::string to_string(VerdictStatus s) {
    return s == VerdictStatus::ProvenZero ? "ProvenZero" : "Inconclusive";
}

nlohmann::json Verdict::to_json() const {
    return {{"p_sym", p_sym},
            {"p_tilde", p_tilde},
            {"photons_per_port", photons_per_port},
            {"sign", sign},
            {"status", to_string(status)}};
}

Verdict verdict(const Transition& t) {
    require_coincident(t, "verdict");
    Verdict v;
    v.p_sym = p_sym(t);
    v.p_tilde = p_tilde(t);
    v.photons_per_port = t.output.empty() ? 0 : t.output.front();
    v.sign = ((t.order - 1) * v.photons_per_port) % 2 == 0 ? 1 : -1;
    const bool proven = v.sign == 1 ? (v.p_sym != 0) : (v.p_sym != t.order / 2);
    v.status = proven ? VerdictStatus::ProvenZero : VerdictStatus::Inconclusive;
    // Both constraint forms must agree (reduction derived mod N).
    if (proven != (v.p_tilde != 0))
        throw std::logic_error("verdict: full and reduced constraint forms disagree");
    return v;
}

LambdaTriple procedure_lambda_triple(const Transition& t) {
    require_coincident(t, "procedure_lambda_triple");
    const ExponentMatrix lambda = build_lambda(t);
    const int n = lambda.rows();
    const int order = t.order;
    const int m = t.output.front();

    LambdaTriple out;
    out.prime = build_lambda_prime(t);
    // Rows of Lambda' in block i (1-based, m rows each) gain exponent N+1-i.
    out.second = ExponentMatrix(order, n, n);
    for (int r = 0; r < n; ++r) {
        const int block = r / m;  // 0-based
        const int gain = (order - block) % order;
        for (int c = 0; c < n; ++c) out.second.set(r, c, (out.prime(r, c) + gain) % order);
    }
    // Cyclic downward rotation by m rows: bottom m rows move to the top.
    out.third = ExponentMatrix(order, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.third.set((r + m) % n, c, out.second(r, c));
    out.matches_lambda = (out.third == lambda);
    return out;
}

bool diagonal_gehom_zero(int order, int m) {
    if (order < 2 || m < 1) throw std::invalid_argument("diagonal_gehom_zero: need N >= 2, m >= 1");
    return order % 2 == 0 && m % 2 == 1;
}

bool all_odd_zero_applies(const Transition& t) {
    require_coincident(t, "all_odd_zero_applies");
    if (t.order % 2 != 0 || (t.order / 2) % 2 == 0) return false;
    for (int v : t.input)
        if (v % 2 == 0) return false;
    return true;
}

std::vector<CnlEntry> cnl_family(int order, int k_max, int confirm_max_photons,
                                 const RyserOptions& opts) {
    if (order < 3) throw std::invalid_argument("cnl_family: requires N >= 3");
    if (k_max < 0) throw std::invalid_argument("cnl_family: k_max must be >= 0");
    std::vector<CnlEntry> out;
    for (int k = 0; k <= k_max; ++k) {
        std::vector<int> input(static_cast<size_t>(order), 1);
        input[0] = order * k;
        input[static_cast<size_t>(order) - 1] = 2;
        CnlEntry entry;
        entry.transition = coincident_transition(order, std::move(input));
        entry.verdict = verdict(entry.transition);
        if (entry.transition.total() <= confirm_max_photons)
            entry.amplitude_zero = amplitude_unnormalized(entry.transition, opts).is_zero();
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<std::vector<int>> sorted_inputs(int order, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(order));
    // Non-decreasing fill; each slot at least the previous value.
    auto rec = [&](auto&& self, int slot, int remaining, int minv) -> void {
        if (slot == order) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        const int slots_left = order - slot;
        for (int v = minv; static_cast<long long>(v) * slots_left <= remaining; ++v) {
            cur[static_cast<size_t>(slot)] = v;
            self(self, slot + 1, remaining - v, v);
        }
    };
    rec(rec, 0, n, 0);
    return out;
}

namespace {

ScanRow evaluate_row(int order, const std::vector<int>& input, bool confirm_exact,
                     const RyserOptions& ryser) {
    ScanRow row;
    row.input = input;
    Transition t = coincident_transition(order, input);
    row.verdict = verdict(t);
    if (!confirm_exact) return row;

    RyserOptions sequential = ryser;
    sequential.jobs = 1;  // rows are already distributed across workers
    const CycloPoly perm = permanent_ryser(build_lambda(t), sequential);
    const CycloPoly perm_prime = permanent_ryser(build_lambda_prime(t), sequential);
    row.amplitude_zero = perm.is_zero();
    row.delta_perm_nonzero = (perm_prime != perm);

    bool ok = true;
    // Diagonal scaling: Perm(Lambda') = w^p_sym Perm(Lambda), exact vectors.
    ok = ok && (perm_prime == perm.shifted(row.verdict.p_sym));
    // Procedure lands back on Lambda entrywise.
    ok = ok && procedure_lambda_triple(t).matches_lambda;
    // Step-6 identity: Perm(Lambda') = sign * Perm(Lambda) modulo Phi_N.
    const CycloPoly step6 = perm_prime - perm.scaled(Rat(row.verdict.sign));
    ok = ok && step6.is_zero();
    row.identities_ok = ok;

    row.soundness_ok =
        !(row.verdict.status == VerdictStatus::ProvenZero && !*row.amplitude_zero);
    return row;
}

}  // namespace

ScanResult scan_gehom(int order, int n, const ScanOptions& opts) {
    if (order < 1 || n < 1 || n % order != 0)
        throw std::invalid_argument("scan_gehom: need N >= 1, n >= 1, N | n");
    const std::vector<std::vector<int>> inputs = sorted_inputs(order, n);

    ScanResult result;
    result.summary.order = order;
    result.summary.total = n;
    result.summary.photons_per_port = n / order;
    result.summary.sign = ((order - 1) * (n / order)) % 2 == 0 ? 1 : -1;
    result.summary.input_count = static_cast<long long>(inputs.size());
    result.summary.exact = opts.confirm_exact;

    long long limit = static_cast<long long>(inputs.size());
    if (opts.max_inputs >= 0 && opts.max_inputs < limit) {
        limit = opts.max_inputs;
        result.summary.partial = true;
    }
    result.summary.rows_evaluated = limit;

    result.rows.resize(static_cast<size_t>(limit));
    int jobs = opts.ryser.jobs > 0 ? opts.ryser.jobs
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = static_cast<int>(std::min<long long>(jobs, std::max<long long>(1, limit)));

    std::atomic<long long> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (;;) {
                const long long idx = next.fetch_add(1);
                if (idx >= limit) break;
                result.rows[static_cast<size_t>(idx)] = evaluate_row(
                    order, inputs[static_cast<size_t>(idx)], opts.confirm_exact, opts.ryser);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w) workers.emplace_back(work);
        for (auto& t : workers) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const ScanRow& row : result.rows) {
        auto& s = result.summary;
        if (row.amplitude_zero.has_value()) {
            if (*row.amplitude_zero) {
                ++s.zero_count;
                s.p_sym_zero.insert(row.verdict.p_sym);
                if (row.verdict.status == VerdictStatus::Inconclusive) ++s.inconclusive_zero_count;
            } else {
                ++s.nonzero_count;
                s.p_sym_nonzero.insert(row.verdict.p_sym);
            }
        }
        if (row.delta_perm_nonzero.value_or(false)) ++s.delta_nonzero_count;
        if (!row.identities_ok) ++s.identity_violations;
        if (!row.soundness_ok) ++s.soundness_violations;
    }
    return result;
}

nlohmann::json ScanSummary::to_json() const {
    nlohmann::json j{{"N", order},
                     {"n", total},
                     {"output_per_port", photons_per_port},
                     {"sign", sign},
                     {"inputs", input_count},
                     {"rows_evaluated", rows_evaluated},
                     {"exact", exact},
                     {"partial", partial}};
    if (exact) {
        j["zero_count"] = zero_count;
        j["nonzero_count"] = nonzero_count;
        j["p_sym_zero"] = p_sym_zero;
        j["p_sym_nonzero"] = p_sym_nonzero;
        j["delta_perm_nonzero_count"] = delta_nonzero_count;
        j["identity_violations"] = identity_violations;
        j["soundness_violations"] = soundness_violations;
        j["inconclusive_zero_count"] = inconclusive_zero_count;
    }
    return j;
}

std::string ScanResult::to_csv() const {
    std::ostringstream os;
    os << "input,amplitude_zero,p_sym,p_tilde,sign,status,delta_perm_nonzero\n";
    for (const ScanRow& row : rows) {
        os << '"';
        for (size_t i = 0; i < row.input.size(); ++i) {
            if (i) os << ',';
            os << row.input[i];
        }
        os << "\",";
        if (row.amplitude_zero.has_value()) os << (*row.amplitude_zero ? 1 : 0);
        os << ',' << row.verdict.p_sym << ',' << row.verdict.p_tilde << ',' << row.verdict.sign
           << ',' << to_string(row.verdict.status) << ',';
        if (row.delta_perm_nonzero.has_value()) os << (*row.delta_perm_nonzero ? 1 : 0);
        os << '\n';
    }
    return os.str();
}

}  // namespace sunbeam
