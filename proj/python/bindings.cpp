#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sunbeam/dist.hpp"
#include "sunbeam/errors.hpp"
#include "sunbeam/kmatrix.hpp"
#include "sunbeam/symmetry.hpp"

namespace py = pybind11;
using namespace sunbeam;

namespace {

ExponentMatrix matrix_from_rows(int order, const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    ExponentMatrix m(order, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged exponent matrix");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

std::vector<std::vector<int>> matrix_to_rows(const ExponentMatrix& m) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(m.rows()),
                                       std::vector<int>(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);
    return rows;
}

RyserOptions make_opts(int max_side, int jobs) {
    RyserOptions opts;
    opts.max_side = max_side;
    opts.jobs = jobs;
    return opts;
}

SuperpositionInput input_from_terms(
    int order, const std::vector<std::pair<std::complex<double>, std::vector<int>>>& terms) {
    SuperpositionInput input;
    input.order = order;
    for (const auto& [c, occ] : terms) input.terms.push_back({c, occ});
    input.validate();
    return input;
}

}  // namespace

PYBIND11_MODULE(_sunbeam, m) {
    m.doc() = "exact multiphoton interference amplitudes at the symmetric SU(N) beam splitter";

    py::register_exception<ResourceGuardError>(m, "ResourceGuardError", PyExc_RuntimeError);

    py::class_<CycloPoly>(m, "CycloPoly")
        .def(py::init<int>(), py::arg("order"))
        .def_static("from_power", &CycloPoly::from_power, py::arg("order"), py::arg("p"))
        .def_property_readonly("order", &CycloPoly::order)
        .def("coeffs",
             [](const CycloPoly& p) {
                 std::vector<std::string> out;
                 for (const Rat& c : p.coeffs()) out.push_back(to_string(c));
                 return out;
             })
        .def("reduced", &CycloPoly::reduced)
        .def("is_zero", &CycloPoly::is_zero)
        .def("eval", &CycloPoly::eval_numeric)
        .def("as_constant",
             [](const CycloPoly& p) -> py::object {
                 auto c = p.as_constant();
                 if (!c) return py::none();
                 return py::str(to_string(*c));
             })
        .def("__eq__", [](const CycloPoly& a, const CycloPoly& b) { return a == b; })
        .def("__add__", [](const CycloPoly& a, const CycloPoly& b) { return a + b; })
        .def("__mul__", [](const CycloPoly& a, const CycloPoly& b) { return a * b; })
        .def("__repr__", [](const CycloPoly& p) { return "CycloPoly(" + p.to_text() + ")"; })
        .def("text", &CycloPoly::to_text)
        .def("json", [](const CycloPoly& p) { return p.to_json().dump(); });

    m.def("build_sn", [](int order) { return matrix_to_rows(build_sn(order)); }, py::arg("N"));
    m.def("fsr", &fsr, py::arg("N"));
    m.def("afsr", &afsr, py::arg("N"), py::arg("q"));

    m.def(
        "build_lambda",
        [](int order, const std::vector<int>& input, const std::vector<int>& output) {
            return matrix_to_rows(build_lambda(Transition(order, input, output)));
        },
        py::arg("N"), py::arg("input"), py::arg("output"));

    m.def(
        "permanent",
        [](int order, const std::vector<std::vector<int>>& rows, int max_side, int jobs) {
            return permanent_ryser(matrix_from_rows(order, rows), make_opts(max_side, jobs));
        },
        py::arg("N"), py::arg("rows"), py::arg("max_side") = 20, py::arg("jobs") = 0);

    m.def(
        "amplitude",
        [](int order, const std::vector<int>& input, const std::vector<int>& output, int max_side,
           int jobs) {
            return amplitude_unnormalized(Transition(order, input, output),
                                          make_opts(max_side, jobs));
        },
        py::arg("N"), py::arg("input"), py::arg("output"), py::arg("max_side") = 20,
        py::arg("jobs") = 0);

    m.def(
        "amplitude_numeric",
        [](int order, const std::vector<int>& input, const std::vector<int>& output, int max_side,
           int jobs) {
            return amplitude_normalized(Transition(order, input, output),
                                        make_opts(max_side, jobs));
        },
        py::arg("N"), py::arg("input"), py::arg("output"), py::arg("max_side") = 20,
        py::arg("jobs") = 0);

    m.def(
        "count_k",
        [](int order, const std::vector<int>& input, const std::vector<int>& output) {
            return enumerate_k(Transition(order, input, output), nullptr);
        },
        py::arg("N"), py::arg("input"), py::arg("output"));

    m.def(
        "ksum",
        [](int order, const std::vector<int>& input, const std::vector<int>& output) {
            return amplitude_by_ksum(Transition(order, input, output));
        },
        py::arg("N"), py::arg("input"), py::arg("output"));

    m.def(
        "group_report_json",
        [](int order, const std::vector<int>& input, const std::vector<int>& output) {
            return group_analysis(Transition(order, input, output)).to_json().dump();
        },
        py::arg("N"), py::arg("input"), py::arg("output"));

    m.def(
        "jkn",
        [](int order, const std::vector<int>& input, const std::vector<int>& output) {
            JknEstimate est = jkn_estimate(Transition(order, input, output));
            return py::make_tuple(py::int_(py::str(to_string(est.omega_nm))),
                                  py::int_(py::str(to_string(est.omega_mn))),
                                  py::int_(py::str(to_string(est.omega_sym))));
        },
        py::arg("N"), py::arg("input"), py::arg("output"));

    m.def(
        "predict_json",
        [](int order, const std::vector<int>& input) {
            Transition t = coincident_transition(order, input);
            nlohmann::json j = verdict(t).to_json();
            j["transition"] = t.to_json();
            return j.dump();
        },
        py::arg("N"), py::arg("input"));

    m.def(
        "scan_json",
        [](int order, int n, bool confirm_exact, int max_side, int jobs) {
            ScanOptions opts;
            opts.confirm_exact = confirm_exact;
            opts.ryser = make_opts(max_side, jobs);
            ScanResult result = scan_gehom(order, n, opts);
            nlohmann::json j = result.summary.to_json();
            j["csv"] = result.to_csv();
            return j.dump();
        },
        py::arg("N"), py::arg("n"), py::arg("confirm_exact") = true, py::arg("max_side") = 20,
        py::arg("jobs") = 0);

    m.def(
        "cnl_family_json",
        [](int order, int k_max, int confirm_max) {
            nlohmann::json out = nlohmann::json::array();
            for (const CnlEntry& e : cnl_family(order, k_max, confirm_max)) {
                nlohmann::json row{{"transition", e.transition.to_json()},
                                   {"verdict", e.verdict.to_json()}};
                if (e.amplitude_zero) row["amplitude_zero"] = *e.amplitude_zero;
                out.push_back(row);
            }
            return out.dump();
        },
        py::arg("N"), py::arg("k_max"), py::arg("confirm_max") = 12);

    m.def(
        "output_distribution",
        [](int order, const std::vector<std::pair<std::complex<double>, std::vector<int>>>& terms,
           int total_cap, int max_side, int jobs) {
            auto dist = output_distribution(input_from_terms(order, terms), total_cap,
                                            make_opts(max_side, jobs));
            py::dict out;
            for (const auto& [occ, p] : dist) out[py::tuple(py::cast(occ))] = p;
            return out;
        },
        py::arg("N"), py::arg("terms"), py::arg("total_cap") = 12, py::arg("max_side") = 20,
        py::arg("jobs") = 0);

    m.def(
        "cnl_check",
        [](int order, const std::vector<std::pair<std::complex<double>, std::vector<int>>>& terms,
           int max_m, int max_side, int jobs) {
            CnlCheckResult r =
                cnl_check(input_from_terms(order, terms), max_m, make_opts(max_side, jobs));
            return py::make_tuple(r.passed, r.violations, r.diagonal);
        },
        py::arg("N"), py::arg("terms"), py::arg("max_m"), py::arg("max_side") = 20,
        py::arg("jobs") = 0);

    m.def("p_sym",
          [](int order, const std::vector<int>& input, const std::vector<int>& output) {
              return p_sym(Transition(order, input, output));
          });
    m.def("p_tilde", [](int order, const std::vector<int>& input) {
        return p_tilde(coincident_transition(order, input));
    });
    m.def("diagonal_gehom_zero", &diagonal_gehom_zero, py::arg("N"), py::arg("m"));
}
