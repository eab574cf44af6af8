#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qbern/errors.hpp"
#include "qbern/numeric.hpp"
#include "qbern/oracles.hpp"
#include "qbern/qbernstein.hpp"
#include "qbern/qcore.hpp"
#include "qbern/qeuler.hpp"
#include "qbern/qstirling.hpp"
#include "qbern/verify.hpp"

namespace qbern::cli {

namespace {

using Row = std::vector<std::pair<std::string, std::string>>;

std::string real_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void emit(std::ostream& out, const std::vector<Row>& rows, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json obj;
            for (const auto& [k, v] : row) obj[k] = v;
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << "\n";
        return;
    }
    if (rows.empty()) return;
    for (std::size_t i = 0; i < rows.front().size(); ++i) out << (i ? "," : "") << rows.front()[i].first;
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].second);
        out << "\n";
    }
}

std::vector<double> parse_grid(const std::string& spec) {
    const auto a = spec.find(':');
    const auto b = spec.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) throw ParseError("grid must be start:end:step, got '" + spec + "'");
    double start, end, step;
    try {
        start = std::stod(spec.substr(0, a));
        end = std::stod(spec.substr(a + 1, b - a - 1));
        step = std::stod(spec.substr(b + 1));
    } catch (const std::exception&) {
        throw ParseError("grid must be start:end:step, got '" + spec + "'");
    }
    if (!(step > 0.0) || end < start) throw UsageError("grid needs step > 0 and end >= start");
    std::vector<double> out;
    const long count = static_cast<long>(std::floor((end - start) / step + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

// "t^m" -> m
long parse_monomial(const std::string& spec) {
    if (spec == "t") return 1;
    if (spec == "1") return 0;
    if (spec.rfind("t^", 0) != 0 || spec.size() == 2) throw ParseError("f must be t^m, got '" + spec + "'");
    for (std::size_t i = 2; i < spec.size(); ++i)
        if (spec[i] < '0' || spec[i] > '9') throw ParseError("f must be t^m, got '" + spec + "'");
    return std::stol(spec.substr(2));
}

// CSV of "k,value" lines; a header line is skipped when its first field is not a number.
std::vector<ExactRational> read_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open samples file '" + path + "'");
    std::map<long, ExactRational> byk;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("samples line '" + line + "' is not k,value");
        const std::string kf = line.substr(0, comma);
        const bool numeric = !kf.empty() && kf.find_first_not_of("0123456789") == std::string::npos;
        if (!numeric) {
            if (first) {
                first = false;
                continue;
            }
            throw ParseError("samples line '" + line + "' has a non-integer k");
        }
        first = false;
        byk[std::stol(kf)] = ExactRational::parse(line.substr(comma + 1));
    }
    std::vector<ExactRational> out;
    for (const auto& [k, v] : byk) {
        if (k != static_cast<long>(out.size())) throw UsageError("samples must cover k = 0..n without gaps");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("samples file is empty");
    return out;
}

std::vector<ExactRational> parse_q_list(const std::vector<std::string>& raw) {
    std::vector<ExactRational> out;
    for (const auto& s : raw) out.push_back(ExactRational::parse(s));
    return out;
}

void print_report_summary(std::ostream& out, const IdentityReport& report) {
    std::map<std::string, std::pair<long, long>> by_id;
    for (const auto& e : report.entries) {
        auto& c = by_id[e.identity_id];
        ++c.first;
        if (e.verdict == Verdict::fail) ++c.second;
    }
    for (const auto& [id, c] : by_id)
        out << (c.second == 0 ? "PASS " : "FAIL ") << id << " (" << c.first << " checked, " << c.second
            << " failed)\n";
    for (const auto& e : report.entries) {
        if (e.verdict == Verdict::pass) continue;
        out << "  violation " << e.identity_id;
        for (const auto& [k, v] : e.params) out << " " << k << "=" << v;
        out << ": " << e.lhs << " != " << e.rhs << "\n";
    }
    const auto s = report.summary();
    out << "summary: " << s.checked << " checked, " << s.passed << " passed, " << s.failed << " failed\n";
    if (!report.counterexamples.empty()) {
        std::map<std::string, std::pair<long, long>> cx;
        for (const auto& e : report.counterexamples) {
            auto& c = cx[e.identity_id];
            ++c.first;
            if (e.verdict == Verdict::fail) ++c.second;
        }
        out << "printed-form counterexamples (expected to fail):\n";
        for (const auto& [id, c] : cx)
            out << (c.second > 0 ? "REFUTED " : "UNREFUTED ") << id << " (" << c.second << " of " << c.first
                << " instances violated)\n";
        for (const auto& e : report.counterexamples) {
            if (e.verdict == Verdict::pass) continue;
            out << "  violation " << e.identity_id;
            for (const auto& [k, v] : e.params) out << " " << k << "=" << v;
            out << ": " << e.lhs << " != " << e.rhs << "\n";
        }
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-Bernstein, q-Euler and q-Stirling computations and identity verification", "qb"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Run the identity verification suites");
    std::string suite = "all";
    std::vector<std::string> verify_qs;
    VerifyConfig vcfg = VerifyConfig::defaults();
    std::string report_path;
    verify->add_option("--suite", suite, "all|bernstein|euler|integrals|stirling");
    verify->add_option("--q", verify_qs, "Rational sample value of q (repeatable)");
    verify->add_option("--nmax", vcfg.nmax, "Maximum degree");
    verify->add_option("--smax", vcfg.smax, "Maximum number of product factors");
    verify->add_option("--kmax", vcfg.kmax, "Maximum basis index in product integrals");
    verify->add_flag("--include-printed-counterexamples", vcfg.include_printed,
                     "Also evaluate the printed forms of misstated identities");
    verify->add_option("--out", report_path, "Write the JSON report here");

    // euler
    auto* euler = app.add_subcommand("euler", "Table of q-Euler numbers");
    std::string euler_q;
    long euler_nmax = 10;
    std::string format = "csv";
    euler->add_option("--q", euler_q, "Rational q")->required();
    euler->add_option("--nmax", euler_nmax, "Largest index");
    euler->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // bernstein
    auto* bern = app.add_subcommand("bernstein", "q-Bernstein basis evaluation and expansion");
    bern->require_subcommand(1);
    long bk = 0, bn = 0;
    std::optional<double> bx, bq;
    std::string bu;
    auto* beval = bern->add_subcommand("eval", "Evaluate B_{k,n}");
    beval->add_option("--k", bk)->required();
    beval->add_option("--n", bn)->required();
    beval->add_option("--x", bx, "Real x in [0,1]");
    beval->add_option("--q", bq, "Real q > 0");
    beval->add_option("--u", bu, "Exact u = [x]_q as a/b");
    beval->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    auto* bpoly = bern->add_subcommand("upoly", "Coefficients of B_{k,n} in powers of u = [x]_q");
    bpoly->add_option("--k", bk)->required();
    bpoly->add_option("--n", bn)->required();
    bpoly->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // stirling
    auto* stir = app.add_subcommand("stirling", "Table of (q-)Stirling numbers of the second kind");
    long stir_nmax = 6;
    std::string stir_q;
    stir->add_option("--nmax", stir_nmax);
    stir->add_option("--q", stir_q, "Rational q; omitted means the classical numbers");
    stir->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // operator
    auto* op = app.add_subcommand("operator", "Apply the q-Bernstein operator");
    std::string op_f, op_samples, op_grid = "0:1:0.1", op_u;
    long op_n = -1;
    double op_q = 1.0;
    auto* f_opt = op->add_option("--f", op_f, "Monomial t^m");
    auto* s_opt = op->add_option("--samples", op_samples, "CSV of k,f(k/n)");
    f_opt->excludes(s_opt);
    op->add_option("--n", op_n, "Order (required with --f)");
    op->add_option("--q", op_q, "Real q for grid evaluation");
    op->add_option("--grid", op_grid, "x grid start:end:step");
    op->add_option("--u", op_u, "Exact u = [x]_q; prints all three evaluation routes");
    op->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // padic
    auto* padic = app.add_subcommand("padic", "Truncated fermionic sums against E_{n,q}");
    long pp = 3, pn = 1, plevels = 5;
    std::string pq = "4";
    padic->add_option("--p", pp, "Odd prime");
    padic->add_option("--q", pq, "Rational q with |1-q|_p < 1");
    padic->add_option("--n", pn, "Moment order");
    padic->add_option("--levels", plevels, "Levels N = 1..levels");
    padic->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "qb: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*verify) {
            vcfg.suites = parse_suite(suite);
            if (verify->count("--q") > 0) vcfg.qs = parse_q_list(verify_qs);
            const IdentityReport report = run_verify_suite(vcfg);
            print_report_summary(out, report);
            if (!report_path.empty()) {
                std::ofstream f(report_path);
                if (!f) throw UsageError("cannot write report to '" + report_path + "'");
                f << report.to_json().dump(2) << "\n";
            }
            return report.ok() ? kExitOk : kExitViolation;
        }
        if (*euler) {
            const EulerTable table = EulerTable::build(ExactRational::parse(euler_q), euler_nmax);
            std::vector<Row> rows;
            for (long n = 0; n <= euler_nmax; ++n) rows.push_back({{"n", std::to_string(n)}, {"value", table.at(n).str()}});
            emit(out, rows, format);
            return kExitOk;
        }
        if (*beval) {
            std::vector<Row> rows;
            if (!bu.empty()) {
                const ExactRational u = ExactRational::parse(bu);
                rows.push_back({{"k", std::to_string(bk)}, {"n", std::to_string(bn)}, {"u", u.str()},
                                {"value", basis_eval_exact({bk, bn}, u).str()}});
            } else {
                if (!bx || !bq) throw UsageError("bernstein eval needs --u, or both --x and --q");
                rows.push_back({{"k", std::to_string(bk)}, {"n", std::to_string(bn)}, {"x", real_str(*bx)},
                                {"q", real_str(*bq)}, {"value", real_str(basis_eval_real({bk, bn}, *bx, *bq))},
                                {"derivative", real_str(basis_derivative({bk, bn}, *bx, *bq))}});
            }
            emit(out, rows, format);
            return kExitOk;
        }
        if (*bpoly) {
            const UPoly p = basis_upoly({bk, bn});
            std::vector<Row> rows;
            for (long l = 0; l <= std::max(bn, 0L); ++l)
                rows.push_back({{"power", std::to_string(l)}, {"coeff", p.coeff(l).str()}});
            emit(out, rows, format);
            return kExitOk;
        }
        if (*stir) {
            std::vector<Row> rows;
            const bool classical = stir_q.empty();
            const ExactRational q = classical ? ExactRational(1) : ExactRational::parse(stir_q);
            for (long n = 0; n <= stir_nmax; ++n)
                for (long k = 0; k <= n; ++k)
                    rows.push_back({{"n", std::to_string(n)}, {"k", std::to_string(k)},
                                    {"value", classical ? stirling2(n, k).get_str() : q_stirling2(n, k, q).str()}});
            emit(out, rows, format);
            return kExitOk;
        }
        if (*op) {
            std::vector<ExactRational> samples;
            if (!op_samples.empty()) {
                samples = read_samples(op_samples);
                if (op_n >= 0 && static_cast<std::size_t>(op_n) + 1 != samples.size())
                    throw DomainError("--n does not match the number of samples");
            } else {
                if (op_f.empty()) throw UsageError("operator needs --f or --samples");
                if (op_n < 1) throw UsageError("operator with --f needs --n >= 1");
                const long m = parse_monomial(op_f);
                for (long k = 0; k <= op_n; ++k) samples.push_back(int_pow(ExactRational(k, op_n), m));
            }
            std::vector<Row> rows;
            if (!op_u.empty()) {
                const ExactRational u = ExactRational::parse(op_u);
                rows.push_back({{"u", u.str()},
                                {"direct", operator_apply(samples, u, OperatorMethod::direct).str()},
                                {"kim", operator_apply(samples, u, OperatorMethod::kim).str()},
                                {"difference", operator_apply(samples, u, OperatorMethod::difference).str()}});
            } else {
                for (double x : parse_grid(op_grid))
                    rows.push_back({{"x", real_str(x)}, {"u", real_str(q_number_real(x, op_q))},
                                    {"value", real_str(operator_apply_real(samples, x, op_q))}});
            }
            emit(out, rows, format);
            return kExitOk;
        }
        if (*padic) {
            const ExactRational q = ExactRational::parse(pq);
            require_padic_regime(q, pp);
            if (pn < 0) throw UsageError("--n must be nonnegative");
            const ExactRational target = EulerTable::build(q, pn).at(pn);
            std::vector<Row> rows;
            for (long level = 1; level <= plevels; ++level) {
                const ExactRational s = fermionic_sum(pn, q, pp, level);
                rows.push_back({{"level", std::to_string(level)}, {"S_N", s.str()}, {"E", target.str()},
                                {"valuation", padic_valuation(s - target, pp).str()}});
            }
            emit(out, rows, format);
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "qb: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "qb: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "qb: domain error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace qbern::cli
