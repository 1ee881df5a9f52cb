#include "zetaforge/errors.hpp"
#include "zetaforge/eta_zeta.hpp"
#include "zetaforge/lambda.hpp"
#include "zetaforge/prediction.hpp"
#include "zetaforge/report.hpp"
#include "zetaforge/sieve.hpp"
#include "zetaforge/zero_finder.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>
#include <utility>

namespace py = pybind11;
using namespace zetaforge;

namespace {

// Rationals cross the boundary as (numerator, denominator) decimal strings.
std::pair<std::string, std::string> rational_parts(const Rational& r) {
    return {numerator(r).str(), denominator(r).str()};
}

py::dict eval_dict(const EvalResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["err_estimate"] = r.err_estimate;
    d["terms_used"] = r.terms_used;
    return d;
}

} // namespace

PYBIND11_MODULE(_zetaforge, m) {
    m.doc() = "zetaforge native core";
    m.attr("__version__") = kVersion;

    auto numerical = py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<DomainError>(m, "DomainError", numerical.ptr());
    py::register_exception<PoleError>(m, "PoleError", numerical.ptr());
    py::register_exception<SingularityError>(m, "SingularityError", numerical.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", numerical.ptr());
    py::register_exception<SelfCheckError>(m, "SelfCheckError", numerical.ptr());
    py::register_exception<CompletenessError>(m, "CompletenessError", numerical.ptr());
    py::register_exception<CacheError>(m, "CacheError", numerical.ptr());

    m.def("sieve_primes", [](std::uint64_t limit, std::size_t jobs) { return sieve_primes(limit, jobs).primes; },
          py::arg("limit"), py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("removal_ratios", [](std::size_t count) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& r : removal_ratios(count)) {
            out.push_back(rational_parts(r.value));
        }
        return out;
    }, py::arg("count"));
    m.def("empirical_sift", [](std::uint32_t limit) {
        std::vector<std::tuple<std::uint32_t, std::uint64_t, std::uint32_t>> out;
        for (const auto& c : empirical_sift(limit)) {
            out.emplace_back(c.p, c.members_count, c.largest_member);
        }
        return out;
    }, py::arg("limit"), py::call_guard<py::gil_scoped_release>());

    m.def("eta2_accelerated", [](Complex s, double tol) { return eval_dict(eta2_accelerated(s, tol)); },
          py::arg("s"), py::arg("tol") = 1e-12);
    m.def("eta_m_partial", [](unsigned base, Complex s, std::uint64_t terms, std::size_t jobs) {
        EvalResult r;
        {
            py::gil_scoped_release release;
            r = eta_m_partial(base, s, terms, jobs);
        }
        return eval_dict(r);
    }, py::arg("base"), py::arg("s"), py::arg("terms"), py::arg("jobs") = 1);
    m.def("zeta", [](Complex s, double tol) { return eval_dict(zeta_from_eta(s, tol)); },
          py::arg("s"), py::arg("tol") = 1e-12);
    m.def("zeta_partial_corrected", &zeta_partial_corrected, py::arg("s"), py::arg("terms"), py::arg("jobs") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("euler_product_partial", &euler_product_partial, py::arg("s"), py::arg("n_primes"));
    m.def("functional_equation_residual", &functional_equation_residual, py::arg("t"), py::arg("tol") = 1e-9);

    m.def("lambda_partial", &lambda_partial, py::arg("s"), py::arg("n"), py::arg("jobs") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("lambda_relative_error", &lambda_relative_error, py::arg("s"), py::arg("n"), py::arg("jobs") = 1,
          py::call_guard<py::gil_scoped_release>());

    m.def("hardy_z", &hardy_z, py::arg("y"));
    m.def("zero_count_estimate", &zero_count_estimate, py::arg("t"));
    m.def("scan_zeros", [](double t_min, double t_max, double step, double tol, std::size_t jobs) {
        ScanConfig c;
        c.t_min = t_min;
        c.t_max = t_max;
        c.step = step;
        c.tol = tol;
        std::vector<std::tuple<int, double, double>> out;
        {
            py::gil_scoped_release release;
            for (const auto& r : scan_zeros(c, jobs)) {
                out.emplace_back(r.k, r.gamma, r.residual);
            }
        }
        return out;
    }, py::arg("t_min") = 2.0, py::arg("t_max") = 100.0, py::arg("step") = 0.01, py::arg("tol") = 1e-8,
       py::arg("jobs") = 1);

    m.def("predicted_y_asymptotic", &predicted_y_asymptotic, py::arg("n"), py::arg("k") = 2);
    m.def("predicted_y_prime_pair", &predicted_y_prime_pair, py::arg("p"), py::arg("q"), py::arg("k") = 2);

    m.def("validate", [] {
        RunConfig c;
        c.subcommand = Subcommand::validate;
        std::vector<py::dict> out;
        std::vector<ClaimCheck> checks;
        {
            py::gil_scoped_release release;
            checks = run_claims_ledger(c);
        }
        for (const auto& check : checks) {
            py::dict d;
            d["check_id"] = check.check_id;
            d["paper_ref"] = check.paper_ref;
            d["passed"] = check.passed;
            d["measured"] = check.measured;
            d["tolerance"] = check.tolerance;
            out.push_back(std::move(d));
        }
        return out;
    });
}
