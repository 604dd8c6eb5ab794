#include "sunbeam/dist.hpp"

#include <atomic>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sunbeam/errors.hpp"

namespace sunbeam {

namespace {

constexpr double kCnlTolerance = 1e-12;

int term_total(const SuperpositionTerm& term) {
    return std::accumulate(term.occupation.begin(), term.occupation.end(), 0);
}

std::vector<std::vector<int>> compositions(int n, int slots) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(slots));
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == slots - 1) {
            cur[static_cast<size_t>(slot)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(slot)] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

std::complex<double> sector_amplitude(const SuperpositionInput& input, int total,
                                      const std::vector<int>& out_occ, const RyserOptions& opts) {
    std::complex<double> amp{0.0, 0.0};
    for (const auto& term : input.terms) {
        if (term_total(term) != total) continue;  // orthogonal sector
        if (total == 0) {
            amp += term.amplitude;  // vacuum passes through untouched
            continue;
        }
        Transition t(input.order, term.occupation, out_occ);
        amp += term.amplitude * amplitude_normalized(t, opts);
    }
    return amp;
}

}  // namespace

void SuperpositionInput::validate() const {
    if (order < 1) throw std::invalid_argument("SuperpositionInput: order must be >= 1");
    if (terms.empty()) throw std::invalid_argument("SuperpositionInput: empty input");
    double norm = 0.0;
    for (const auto& term : terms) {
        if (static_cast<int>(term.occupation.size()) != order)
            throw std::invalid_argument("SuperpositionInput: occupation length != N");
        for (int v : term.occupation)
            if (v < 0) throw std::invalid_argument("SuperpositionInput: negative occupation");
        norm += std::norm(term.amplitude);
    }
    if (normalized && std::abs(norm - 1.0) > 1e-9)
        throw std::invalid_argument("SuperpositionInput: marked normalized but sum |c_k|^2 != 1");
}

SuperpositionInput SuperpositionInput::from_json(const nlohmann::json& j) {
    SuperpositionInput input;
    input.order = j.at("N").get<int>();
    input.normalized = j.value("normalized", false);
    for (const auto& jt : j.at("terms")) {
        SuperpositionTerm term;
        const auto& a = jt.at("amplitude");
        term.amplitude = {a.at(0).get<double>(), a.at(1).get<double>()};
        term.occupation = jt.at("occupation").get<std::vector<int>>();
        input.terms.push_back(std::move(term));
    }
    input.validate();
    return input;
}

nlohmann::json SuperpositionInput::to_json() const {
    nlohmann::json jterms = nlohmann::json::array();
    for (const auto& term : terms)
        jterms.push_back({{"amplitude", {term.amplitude.real(), term.amplitude.imag()}},
                          {"occupation", term.occupation}});
    return {{"N", order}, {"terms", jterms}, {"normalized", normalized}};
}

std::map<std::vector<int>, double> output_distribution(const SuperpositionInput& input,
                                                       int total_cap, const RyserOptions& opts) {
    input.validate();
    std::set<int> totals;
    for (const auto& term : input.terms) {
        const int total = term_total(term);
        if (total > total_cap) {
            std::ostringstream os;
            os << "output_distribution: term with " << total << " photons exceeds the cap "
               << total_cap;
            throw ResourceGuardError(os.str());
        }
        totals.insert(total);
    }
    std::vector<std::pair<int, std::vector<int>>> outputs;
    for (int total : totals)
        for (auto& out_occ : compositions(total, input.order))
            outputs.emplace_back(total, std::move(out_occ));

    // Outputs are independent; amplitudes per output run on their own worker.
    std::vector<double> probs(outputs.size());
    int jobs = opts.jobs > 0 ? opts.jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    RyserOptions sequential = opts;
    sequential.jobs = 1;
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (;;) {
                const size_t idx = next.fetch_add(1);
                if (idx >= outputs.size()) break;
                probs[idx] = std::norm(
                    sector_amplitude(input, outputs[idx].first, outputs[idx].second, sequential));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (jobs == 1 || outputs.size() < 2) {
        work();
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w) workers.emplace_back(work);
        for (auto& t : workers) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::map<std::vector<int>, double> dist;
    for (size_t i = 0; i < outputs.size(); ++i) dist[outputs[i].second] = probs[i];
    return dist;
}

CnlCheckResult cnl_check(const SuperpositionInput& input, int max_m, const RyserOptions& opts) {
    input.validate();
    std::set<int> totals;
    for (const auto& term : input.terms) totals.insert(term_total(term));

    CnlCheckResult result;
    for (int m = 0; m <= max_m; ++m) {
        double p = 0.0;
        if (totals.count(m * input.order)) {
            const std::vector<int> diag(static_cast<size_t>(input.order), m);
            p = std::norm(sector_amplitude(input, m * input.order, diag, opts));
        }
        result.diagonal.push_back(p);
        if (p >= kCnlTolerance) {
            result.passed = false;
            result.violations.push_back(m);
        }
    }
    return result;
}

}  // namespace sunbeam
