#include "sunbeam/kmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sunbeam/errors.hpp"

namespace sunbeam {

Int count_weak_compositions(int n, int order) {
    if (n < 0 || order < 1) throw std::invalid_argument("count_weak_compositions: need n >= 0, N >= 1");
    return binomial(n + order - 1, n);
}

namespace {

struct Enumerator {
    const Transition& t;
    const std::function<void(const KMatrix&)>& visit;
    const EnumerationBudget& budget;
    int order;
    KMatrix k;
    std::vector<int> caps;        // remaining column capacity
    long long visits = 0;
    long long nodes = 0;

    Enumerator(const Transition& t_, const std::function<void(const KMatrix&)>& v,
               const EnumerationBudget& b)
        : t(t_), visit(v), budget(b), order(t_.order) {
        k.order = order;
        k.entries.assign(static_cast<size_t>(order) * order, 0);
        caps = t.output;
    }

    void charge_node() {
        if (++nodes > budget.max_nodes)
            throw BudgetExceededError("enumerate_k: node budget exceeded");
    }

    void row(int i) {
        if (i == order) {
            if (++visits > budget.max_visits)
                throw BudgetExceededError("enumerate_k: valid-K visit budget exceeded");
            if (visit) visit(k);
            return;
        }
        cell(i, 0, t.input[static_cast<size_t>(i)]);
    }

    void cell(int i, int j, int remaining) {
        charge_node();
        if (j == order - 1) {
            if (remaining <= caps[static_cast<size_t>(j)]) {
                place(i, j, remaining);
                row(i + 1);
                unplace(i, j, remaining);
            }
            return;
        }
        int suffix = 0;
        for (int jj = j + 1; jj < order; ++jj) suffix += caps[static_cast<size_t>(jj)];
        const int low = std::max(0, remaining - suffix);
        const int high = std::min(remaining, caps[static_cast<size_t>(j)]);
        for (int v = low; v <= high; ++v) {
            place(i, j, v);
            cell(i, j + 1, remaining - v);
            unplace(i, j, v);
        }
    }

    void place(int i, int j, int v) {
        k.entries[static_cast<size_t>(i) * order + j] = v;
        caps[static_cast<size_t>(j)] -= v;
    }
    void unplace(int i, int j, int v) {
        k.entries[static_cast<size_t>(i) * order + j] = 0;
        caps[static_cast<size_t>(j)] += v;
    }
};

long double lbinom_gamma(long double a, long double k) {
    // C(a, k) = Gamma(a+1) / (Gamma(k+1) Gamma(a-k+1)), real arguments
    if (a + 1 <= 0 || k + 1 <= 0 || a - k + 1 <= 0)
        throw std::invalid_argument("jkn_estimate: Gamma pole (margins outside the estimator's domain)");
    return std::lgamma(a + 1) - std::lgamma(k + 1) - std::lgamma(a - k + 1);
}

Int round_half_away(long double x) {
    const long double r = std::round(x);  // halfway cases away from zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0Lf", r);
    return Int(buf);
}

Int jkn_one_direction(int order, const std::vector<int>& rows, const std::vector<int>& cols) {
    const long double n = std::accumulate(rows.begin(), rows.end(), 0LL);
    long double c2 = 0;
    for (int m : cols) c2 += static_cast<long double>(m) * m;
    if (c2 == n)
        throw std::invalid_argument("jkn_estimate: degenerate alpha denominator (sum m_j^2 == n)");
    const long double alpha = (n * n - n + (n * n - c2) / order) / (c2 - n);
    long double log_est = -lbinom_gamma(n + order * alpha - 1, n);
    for (int v : rows) log_est += lbinom_gamma(v + alpha - 1, static_cast<long double>(v));
    for (int v : cols) log_est += lbinom_gamma(v + order - 1, static_cast<long double>(v));
    return round_half_away(std::exp(log_est));
}

}  // namespace

long long enumerate_k(const Transition& t, const std::function<void(const KMatrix&)>& visit,
                      const EnumerationBudget& budget) {
    t.validate();
    Enumerator e(t, visit, budget);
    e.row(0);
    return e.visits;
}

int k_exponent(const KMatrix& k) {
    long long sum = 0;
    for (int i = 0; i < k.order; ++i)
        for (int j = 0; j < k.order; ++j)
            sum += static_cast<long long>(i + 1) * (j + 1) * k(i, j);
    return static_cast<int>(sum % k.order);
}

Rat k_coefficient(const KMatrix& k) {
    Int denom(1);
    for (int v : k.entries)
        if (v > 1) denom *= factorial(v);
    Rat r(1);
    r /= Rat(denom);
    return r;
}

CycloPoly amplitude_by_ksum(const Transition& t, const EnumerationBudget& budget) {
    CycloPoly acc(t.order);
    enumerate_k(
        t, [&acc](const KMatrix& k) { acc.coeff(k_exponent(k)) += k_coefficient(k); }, budget);
    return acc;
}

GroupReport group_analysis(const Transition& t, const EnumerationBudget& budget) {
    std::map<Rat, std::vector<long long>> histograms;
    long long count = enumerate_k(
        t,
        [&](const KMatrix& k) {
            auto& hist = histograms.try_emplace(k_coefficient(k),
                                                std::vector<long long>(static_cast<size_t>(t.order)))
                             .first->second;
            ++hist[static_cast<size_t>(k_exponent(k))];
        },
        budget);

    GroupReport report;
    report.transition = t;
    report.valid_count = count;
    report.total = CycloPoly(t.order);
    for (auto& [coeff, hist] : histograms) {
        GroupReport::Group g;
        g.coeff = coeff;
        g.counts = hist;
        g.sum = CycloPoly(t.order);
        for (int p = 0; p < t.order; ++p)
            g.sum.coeff(p) = coeff * Rat(static_cast<long>(hist[static_cast<size_t>(p)]));
        g.zero = g.sum.is_zero();
        report.total += g.sum;
        report.groups.push_back(std::move(g));
    }
    return report;
}

nlohmann::json GroupReport::to_json() const {
    nlohmann::json gs = nlohmann::json::array();
    for (const auto& g : groups)
        gs.push_back({{"coeff", to_string(g.coeff)},
                      {"counts", g.counts},
                      {"sum", g.sum.to_json()},
                      {"is_zero", g.zero}});
    return {{"transition", transition.to_json()},
            {"valid_count", valid_count},
            {"groups", gs},
            {"total", total.to_json()},
            {"total_is_zero", total.is_zero()}};
}

std::string GroupReport::to_csv() const {
    std::ostringstream os;
    os << "coefficient,p,count\n";
    for (const auto& g : groups)
        for (int p = 0; p < transition.order; ++p)
            if (g.counts[static_cast<size_t>(p)] != 0)
                os << to_string(g.coeff) << ',' << p << ',' << g.counts[static_cast<size_t>(p)] << '\n';
    return os.str();
}

JknEstimate jkn_estimate(const Transition& t) {
    t.validate();
    JknEstimate est;
    est.omega_nm = jkn_one_direction(t.order, t.input, t.output);
    est.omega_mn = jkn_one_direction(t.order, t.output, t.input);
    // Rounded average of the two directions; counts are non-negative, so
    // half-away-from-zero means rounding .5 up.
    const Int sum = est.omega_nm + est.omega_mn;
    est.omega_sym = (sum + sum % 2) / 2;
    return est;
}

}  // namespace sunbeam
