#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbern/errors.hpp"
#include "qbern/numeric.hpp"
#include "qbern/qbernstein.hpp"
#include "qbern/qcore.hpp"
#include "qbern/qeuler.hpp"
#include "qbern/qintegrals.hpp"
#include "qbern/qstirling.hpp"
#include "qbern/verify.hpp"

namespace py = pybind11;
using namespace qbern;

// Rationals cross the boundary as canonical "a/b" strings; the Python layer
// turns them into fractions.Fraction.
namespace {

ExactRational rat(const std::string& s) { return ExactRational::parse(s); }

std::vector<std::string> strs(const std::vector<ExactRational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

std::vector<ExactRational> rats(const std::vector<std::string>& v) {
    std::vector<ExactRational> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(rat(s));
    return out;
}

OperatorMethod operator_method(const std::string& name) {
    if (name == "direct") return OperatorMethod::direct;
    if (name == "kim") return OperatorMethod::kim;
    if (name == "difference") return OperatorMethod::difference;
    throw ParseError("unknown operator method '" + name + "'");
}

IntegralMethod integral_method(const std::string& name) {
    if (name == "direct") return IntegralMethod::direct;
    if (name == "reflected") return IntegralMethod::reflected;
    throw ParseError("unknown integral method '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_qbern, m) {
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    m.def("q_number", [](long x, const std::string& q) { return q_number_int(x, rat(q)).str(); });
    m.def("q_number_real", &q_number_real);
    m.def("basis_eval", [](long k, long n, const std::string& u) { return basis_eval_exact({k, n}, rat(u)).str(); });
    m.def("basis_eval_real", [](long k, long n, double x, double q) { return basis_eval_real({k, n}, x, q); });
    m.def("basis_derivative", [](long k, long n, double x, double q) { return basis_derivative({k, n}, x, q); });
    m.def("basis_upoly", [](long k, long n) {
        const UPoly p = basis_upoly({k, n});
        return strs({p.coeffs().begin(), p.coeffs().end()});
    });
    m.def("operator_apply", [](const std::vector<std::string>& samples, const std::string& u, const std::string& method) {
        return operator_apply(rats(samples), rat(u), operator_method(method)).str();
    });
    m.def("euler_table", [](const std::string& q, long nmax) { return strs(euler_table(rat(q), nmax).values()); });
    m.def("euler_closed", [](long n, const std::string& q) { return euler_closed(n, rat(q)).str(); });
    m.def("euler_poly", [](long n, long x, const std::string& q) { return euler_poly(n, x, rat(q)).str(); });
    m.def("complement_moment", [](long n, const std::string& q) { return complement_moment(n, rat(q)).str(); });
    m.def("fermionic_sum", [](long n, const std::string& q, long p, long level) {
        return fermionic_sum(n, rat(q), p, level).str();
    });
    m.def("padic_valuation", [](const std::string& r, long p) -> py::object {
        const Valuation v = padic_valuation(rat(r), p);
        if (v.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
        return py::int_(v.value());
    });
    m.def("integral_basis", [](long k, long n, const std::string& q) { return integral_basis(k, n, rat(q)).str(); });
    m.def("integral_product", [](long k, const std::vector<long>& ns, const std::string& q, const std::string& method) {
        return integral_product(k, ns, rat(q), integral_method(method)).str();
    });
    m.def("q_stirling2", [](long n, long k, const std::string& q) { return q_stirling2(n, k, rat(q)).str(); });
    m.def("run_verify", [](const std::vector<std::string>& suites, const std::vector<std::string>& qs, long nmax,
                           long smax, long kmax, bool include_printed) {
        VerifyConfig cfg = VerifyConfig::defaults();
        if (!suites.empty()) {
            cfg.suites.clear();
            for (const auto& s : suites)
                for (Suite x : parse_suite(s)) cfg.suites.insert(x);
        }
        if (!qs.empty()) cfg.qs = rats(qs);
        cfg.nmax = nmax;
        cfg.smax = smax;
        cfg.kmax = kmax;
        cfg.include_printed = include_printed;
        py::gil_scoped_release release;
        return run_verify_suite(cfg).to_json().dump();
    });
}
