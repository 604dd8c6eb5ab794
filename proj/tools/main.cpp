#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sunbeam/dist.hpp"
#include "sunbeam/errors.hpp"
#include "sunbeam/kmatrix.hpp"
#include "sunbeam/symmetry.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using namespace sunbeam;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResourceGuard = 2;
constexpr int kExitMismatch = 3;

struct GlobalConfig {
    int jobs = 0;  // 0 = auto
    RyserOptions ryser;
    EnumerationBudget enum_budget;
};

std::vector<int> parse_occupation(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size() || v < 0)
            throw std::invalid_argument("occupation vectors are comma-separated non-negative integers");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty occupation vector");
    return out;
}

void load_config(GlobalConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not readable: " + path);
    json j = json::parse(in);
    cfg.ryser.max_side = j.value("ryser_max_side", cfg.ryser.max_side);
    cfg.enum_budget.max_visits = j.value("enum_max_visits", cfg.enum_budget.max_visits);
    cfg.enum_budget.max_nodes = j.value("enum_max_nodes", cfg.enum_budget.max_nodes);
}

int resolve_jobs(const GlobalConfig& cfg) {
    if (cfg.jobs > 0) return cfg.jobs;
    if (const char* env = std::getenv("SUNBEAM_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw > 0 ? hw : 1;
}

json numeric_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

// amplitude --N 4 --in 1,2,2,3 --out 2,2,2,2 [--method perm|ksum|both] [--exact|--numeric]
int cmd_amplitude(const GlobalConfig& cfg, int order, const std::string& in_csv,
                  const std::string& out_csv, const std::string& method, bool exact_only,
                  bool numeric_only) {
    Transition t(order, parse_occupation(in_csv), parse_occupation(out_csv));
    RyserOptions ryser = cfg.ryser;
    ryser.jobs = resolve_jobs(cfg);

    json out{{"transition", t.to_json()}, {"method", method}};
    const bool want_exact = !numeric_only;
    const bool want_numeric = !exact_only;

    CycloPoly perm_value(t.order);
    bool have_perm = false;
    if (method == "perm" || method == "both") {
        perm_value = amplitude_unnormalized(t, ryser);
        have_perm = true;
    }
    CycloPoly ksum_value(t.order);
    if (method == "ksum" || method == "both") ksum_value = amplitude_by_ksum(t, cfg.enum_budget);

    const CycloPoly& primary = have_perm ? perm_value : ksum_value;
    if (want_exact) {
        out["exact"] = primary.reduced().to_json();
        out["exact_text"] = primary.reduced().to_text();
    }
    out["is_zero"] = primary.is_zero();
    if (want_numeric) {
        if (have_perm) {
            const std::complex<double> raw = perm_value.reduced().eval_numeric();
            long double log_norm = -0.5L * t.total() * std::log(static_cast<long double>(t.order));
            for (int v : t.input) log_norm -= 0.5L * std::lgamma(static_cast<long double>(v) + 1);
            for (int v : t.output) log_norm -= 0.5L * std::lgamma(static_cast<long double>(v) + 1);
            out["numeric"] = numeric_json(raw * static_cast<double>(std::exp(log_norm)));
        } else {
            out["numeric"] = numeric_json(ksum_value.reduced().eval_numeric());
            out["numeric_note"] = "ksum route is unnormalized";
        }
    }

    if (method == "both") {
        // Exact relation: Perm(Lambda) = w^c * prod n_i! * prod m_j! * ksum
        // with c = n - sum i n_i - sum j m_j (mod N).
        long long shift = t.total();
        Int rho(1);
        for (int i = 0; i < t.order; ++i) {
            shift -= static_cast<long long>(i + 1) *
                     (t.input[static_cast<size_t>(i)] + t.output[static_cast<size_t>(i)]);
            rho *= factorial(t.input[static_cast<size_t>(i)]);
            rho *= factorial(t.output[static_cast<size_t>(i)]);
        }
        const CycloPoly predicted = ksum_value.scaled(Rat(rho)).shifted(shift);
        const bool consistent = (predicted == perm_value);
        out["ksum"] = ksum_value.to_json();
        out["consistent"] = consistent;
        std::cout << out.dump() << "\n";
        if (!consistent) {
            std::cerr << "amplitude: permanent and K-sum routes disagree\n";
            return kExitMismatch;
        }
        return kExitOk;
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_scan(const GlobalConfig& cfg, int order, int n, bool confirm_exact, long long budget) {
    ScanOptions opts;
    opts.ryser = cfg.ryser;
    opts.ryser.jobs = resolve_jobs(cfg);
    opts.confirm_exact = confirm_exact;
    opts.max_inputs = budget;
    ScanResult result = scan_gehom(order, n, opts);
    std::cout << result.to_csv();
    std::cout << result.summary.to_json().dump() << "\n";
    return kExitOk;
}

int cmd_groups(const GlobalConfig& cfg, int order, const std::string& in_csv,
               const std::string& out_csv, bool csv) {
    Transition t(order, parse_occupation(in_csv), parse_occupation(out_csv));
    GroupReport report = group_analysis(t, cfg.enum_budget);
    if (csv)
        std::cout << report.to_csv();
    else
        std::cout << report.to_json().dump() << "\n";
    return kExitOk;
}

int cmd_enumerate(const GlobalConfig& cfg, int order, const std::string& in_csv,
                  const std::string& out_csv, bool list) {
    Transition t(order, parse_occupation(in_csv), parse_occupation(out_csv));
    if (list) {
        long long count = enumerate_k(
            t,
            [&](const KMatrix& k) {
                json rows = json::array();
                for (int i = 0; i < k.order; ++i) {
                    json row = json::array();
                    for (int j = 0; j < k.order; ++j) row.push_back(k(i, j));
                    rows.push_back(row);
                }
                std::cout << json{{"k", rows},
                                  {"p", k_exponent(k)},
                                  {"coeff", to_string(k_coefficient(k))}}
                                 .dump()
                          << "\n";
            },
            cfg.enum_budget);
        std::cout << count << "\n";
    } else {
        std::cout << enumerate_k(t, nullptr, cfg.enum_budget) << "\n";
    }
    return kExitOk;
}

int cmd_jkn(const GlobalConfig&, int order, const std::string& in_csv, const std::string& out_csv) {
    Transition t(order, parse_occupation(in_csv), parse_occupation(out_csv));
    JknEstimate est = jkn_estimate(t);
    std::cout << json{{"omega_nm", to_string(est.omega_nm)},
                      {"omega_mn", to_string(est.omega_mn)},
                      {"omega_sym", to_string(est.omega_sym)}}
                     .dump()
              << "\n";
    return kExitOk;
}

int cmd_predict(const GlobalConfig&, int order, const std::string& in_csv,
                const std::string& out_csv) {
    std::vector<int> input = parse_occupation(in_csv);
    Transition t = out_csv.empty() ? coincident_transition(order, input)
                                   : Transition(order, input, parse_occupation(out_csv));
    Verdict v = verdict(t);
    json out = v.to_json();
    out["transition"] = t.to_json();
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_cnl(const GlobalConfig& cfg, int order, int k_max, int confirm_max) {
    RyserOptions ryser = cfg.ryser;
    ryser.jobs = resolve_jobs(cfg);
    json out = json::array();
    for (const CnlEntry& e : cnl_family(order, k_max, confirm_max, ryser)) {
        json row{{"transition", e.transition.to_json()}, {"verdict", e.verdict.to_json()}};
        if (e.amplitude_zero.has_value()) row["amplitude_zero"] = *e.amplitude_zero;
        out.push_back(row);
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int cmd_dist(const GlobalConfig& cfg, int order, const std::string& state_path, bool plot_data,
             bool csv, int total_cap) {
    std::ifstream in(state_path);
    if (!in) throw std::invalid_argument("state file not readable: " + state_path);
    SuperpositionInput input = SuperpositionInput::from_json(json::parse(in));
    if (input.order != order)
        throw std::invalid_argument("--N disagrees with the state file's N");
    RyserOptions ryser = cfg.ryser;
    ryser.jobs = resolve_jobs(cfg);
    auto dist = output_distribution(input, total_cap, ryser);
    if (plot_data || csv) {
        std::cout.precision(17);
        for (int i = 0; i < order; ++i) std::cout << 'm' << (i + 1) << ',';
        std::cout << "p\n";
        for (const auto& [m, p] : dist) {
            for (int v : m) std::cout << v << ',';
            std::cout << p << "\n";
        }
    } else {
        json outputs = json::array();
        for (const auto& [m, p] : dist) outputs.push_back({{"m", m}, {"p", p}});
        std::cout << json{{"outputs", outputs}}.dump() << "\n";
    }
    return kExitOk;
}

int cmd_table2(const GlobalConfig& cfg, int max_order) {
    RyserOptions ryser = cfg.ryser;
    ryser.jobs = resolve_jobs(cfg);
    std::cout << "N,perm_reduced,value\n";
    for (int order = 2; order <= max_order; ++order) {
        const CycloPoly perm = permanent_ryser(build_sn(order), ryser).reduced();
        std::cout << order << ",\"" << perm.to_text() << "\",";
        if (auto c = perm.as_constant())
            std::cout << to_string(*c) << "\n";
        else
            std::cout << perm.eval_numeric().real() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiphoton interference engine for the symmetric SU(N) beam splitter"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalConfig cfg;
    std::string config_path;
    app.add_option("--jobs", cfg.jobs, "worker threads (0 = auto; SUNBEAM_JOBS env overrides auto)");
    app.add_option("--config", config_path, "JSON config with budget overrides");
    CLI::Option* ryser_limit_opt =
        app.add_option("--ryser-limit", cfg.ryser.max_side, "largest permanent side accepted");

    int order = 0, n = 0, k_max = 0, confirm_max = 12, max_order = 14, total_cap = 12;
    std::string in_csv, out_csv, method = "perm", state_path;
    bool exact_only = false, numeric_only = false, confirm_exact = true;
    bool csv = false, list = false, plot_data = false, count_only = false;
    long long budget = -1;

    CLI::App* amplitude = app.add_subcommand("amplitude", "transition amplitude, exact and numeric");
    amplitude->add_option("--N", order, "ports")->required();
    amplitude->add_option("--in", in_csv, "input occupations n1,...,nN")->required();
    amplitude->add_option("--out", out_csv, "output occupations m1,...,mN")->required();
    amplitude->add_option("--method", method, "perm|ksum|both")
        ->check(CLI::IsMember({"perm", "ksum", "both"}));
    amplitude->add_flag("--exact", exact_only, "print only the exact reduced polynomial");
    amplitude->add_flag("--numeric", numeric_only, "print only the numeric value");

    CLI::App* scan = app.add_subcommand("scan", "geHOM zero/nonzero table for all sorted inputs");
    scan->add_option("--N", order, "ports")->required();
    scan->add_option("--n", n, "total photons (N | n)")->required();
    scan->add_flag("--confirm-exact,!--no-confirm-exact", confirm_exact,
                   "compute exact permanents (default on)");
    scan->add_option("--budget", budget, "max inputs to evaluate (-1 = all)");

    CLI::App* groups = app.add_subcommand("groups", "sub-amplitude cancellation groups");
    groups->add_option("--N", order, "ports")->required();
    groups->add_option("--in", in_csv, "input occupations")->required();
    groups->add_option("--out", out_csv, "output occupations")->required();
    groups->add_flag("--csv", csv, "emit coefficient,p,count CSV instead of JSON");

    CLI::App* enumerate = app.add_subcommand("enumerate", "count (or list) valid K matrices");
    enumerate->add_option("--N", order, "ports")->required();
    enumerate->add_option("--in", in_csv, "input occupations")->required();
    enumerate->add_option("--out", out_csv, "output occupations")->required();
    enumerate->add_flag("--count-only", count_only, "print only the count (default)");
    enumerate->add_flag("--list", list, "print each valid K as a JSON line");

    CLI::App* jkn = app.add_subcommand("jkn", "JKN estimate of the valid-K count");
    jkn->add_option("--N", order, "ports")->required();
    jkn->add_option("--in", in_csv, "input occupations")->required();
    jkn->add_option("--out", out_csv, "output occupations")->required();

    CLI::App* predict = app.add_subcommand("predict", "symmetry-constraint verdict (no permanent)");
    predict->add_option("--N", order, "ports")->required();
    predict->add_option("--in", in_csv, "input occupations")->required();
    predict->add_option("--out", out_csv, "output occupations (default: coincident)");

    CLI::App* cnl = app.add_subcommand("cnl", "central-nodal-line family report");
    cnl->add_option("--N", order, "ports (>= 3)")->required();
    cnl->add_option("--kmax", k_max, "largest k in |Nk,1,...,1,2>")->required();
    cnl->add_option("--confirm-max", confirm_max, "exact-confirmation photon cap");

    CLI::App* dist = app.add_subcommand("dist", "output distribution of a superposition input");
    dist->add_option("--N", order, "ports")->required();
    dist->add_option("--state", state_path, "JSON state file")->required();
    dist->add_flag("--plot-data", plot_data, "emit m-vector,p rows for external plotting");
    dist->add_flag("--csv", csv, "same as --plot-data");
    dist->add_option("--total-cap", total_cap, "largest per-term photon total accepted");

    CLI::App* table2 = app.add_subcommand("table2", "unnormalized Perm(S_N), N = 2..max");
    table2->add_option("--max-N", max_order, "largest N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!config_path.empty()) {
            const int flag_limit = cfg.ryser.max_side;  // flags beat the config file
            load_config(cfg, config_path);
            if (ryser_limit_opt->count() > 0) cfg.ryser.max_side = flag_limit;
        }
        if (amplitude->parsed())
            return cmd_amplitude(cfg, order, in_csv, out_csv, method, exact_only, numeric_only);
        if (scan->parsed()) return cmd_scan(cfg, order, n, confirm_exact, budget);
        if (groups->parsed()) return cmd_groups(cfg, order, in_csv, out_csv, csv);
        if (enumerate->parsed()) return cmd_enumerate(cfg, order, in_csv, out_csv, list);
        if (jkn->parsed()) return cmd_jkn(cfg, order, in_csv, out_csv);
        if (predict->parsed()) return cmd_predict(cfg, order, in_csv, out_csv);
        if (cnl->parsed()) return cmd_cnl(cfg, order, k_max, confirm_max);
        if (dist->parsed()) return cmd_dist(cfg, order, state_path, plot_data, csv, total_cap);
        if (table2->parsed()) return cmd_table2(cfg, max_order);
    } catch (const ResourceGuardError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
