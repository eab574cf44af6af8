#include "qbern/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <tuple>

#include "qbern/errors.hpp"
#include "qbern/numeric.hpp"
#include "qbern/oracles.hpp"
#include "qbern/qbernstein.hpp"
#include "qbern/qcore.hpp"
#include "qbern/qeuler.hpp"
#include "qbern/qintegrals.hpp"
#include "qbern/qstirling.hpp"

namespace qbern {

namespace {

using Params = std::map<std::string, std::string>;

std::string real_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<long>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

ExactRational binom(long n, long k) { return ExactRational(binomial_coeff(n, k)); }

class Recorder {
public:
    explicit Recorder(std::vector<ReportEntry>& sink) : sink_(sink) {}

    void exact(std::string id, Params params, const ExactRational& lhs, const ExactRational& rhs) {
        push(std::move(id), std::move(params), lhs.str(), rhs.str(), lhs == rhs);
    }

    void poly(std::string id, Params params, const UPoly& lhs, const UPoly& rhs) {
        push(std::move(id), std::move(params), lhs.str(), rhs.str(), lhs == rhs);
    }

    void real(std::string id, Params params, double lhs, double rhs, double tol, bool relative) {
        const double bound = relative ? tol * std::fabs(rhs) : tol;
        const bool ok = std::isfinite(lhs) && std::isfinite(rhs) && std::fabs(lhs - rhs) <= bound;
        push(std::move(id), std::move(params), real_str(lhs), real_str(rhs), ok);
        sink_.back().tolerance = tol;
        sink_.back().relative_tolerance = relative;
    }

    /// A statement checked as a whole, e.g. "valuation >= level".
    void predicate(std::string id, Params params, std::string lhs, std::string rhs, bool ok) {
        push(std::move(id), std::move(params), std::move(lhs), std::move(rhs), ok);
    }

private:
    void push(std::string id, Params params, std::string lhs, std::string rhs, bool ok) {
        sink_.push_back(ReportEntry{std::move(id), std::move(params), std::move(lhs), std::move(rhs),
                                    ok ? Verdict::pass : Verdict::fail, std::nullopt, false});
    }

    std::vector<ReportEntry>& sink_;
};

Params P(std::initializer_list<std::pair<const std::string, std::string>> kv) { return Params(kv); }
std::string S(long v) { return std::to_string(v); }

// Nondecreasing tuples of length s with entries in [0, top].
void tuples(long s, long top, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (static_cast<long>(cur.size()) == s) {
        out.push_back(cur);
        return;
    }
    for (long v = cur.empty() ? 0 : cur.back(); v <= top; ++v) {
        cur.push_back(v);
        tuples(s, top, cur, out);
        cur.pop_back();
    }
}

// Fermionic moment of a polynomial integrand: sum_l c_l E_{l,q}.
ExactRational moment_of(const UPoly& p, const EulerTable& table) {
    ExactRational acc;
    for (long l = 0; l <= p.degree(); ++l) acc += p.coeff(l) * table.at(l);
    return acc;
}

const std::vector<double> kGrid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
const std::vector<double> kInterior = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

// ---------------------------------------------------------------- bernstein

void bernstein_suite(const VerifyConfig& cfg, Recorder& rec, Recorder* printed) {
    const long nmax = cfg.nmax;
    const UPoly u = UPoly::identity();
    const UPoly one_minus_u({ExactRational(1), ExactRational(-1)});

    for (long n = 0; n <= nmax; ++n) {
        UPoly sum;
        for (long k = 0; k <= n; ++k) sum += basis_upoly({k, n});
        rec.poly("bernstein.partition_of_unity", P({{"n", S(n)}}), sum, UPoly::constant(1));
    }

    for (long n = 0; n <= nmax; ++n) {
        for (long k = 0; k <= n; ++k) {
            const Params kn = P({{"k", S(k)}, {"n", S(n)}});
            const UPoly b = basis_upoly({k, n});
            if (n >= 1)
                rec.poly("bernstein.recurrence", kn, one_minus_u * basis_upoly({k, n - 1}) + u * basis_upoly({k - 1, n - 1}), b);
            rec.poly("bernstein.symmetry_exact", kn, basis_upoly({n - k, n}).reflect(), b);
            const auto terms = degree_elevate({k, n});
            rec.poly("bernstein.degree_elevation", kn,
                     terms[0].coeff * basis_upoly(terms[0].idx) + terms[1].coeff * basis_upoly(terms[1].idx), b);
            rec.poly("bernstein.monomial_expansion", kn, b, oracle::bernstein_by_product({k, n}));
            if (k >= 1)
                rec.poly("bernstein.ratio_recurrence", kn,
                         ExactRational(n - k + 1, k) * u * basis_upoly({k - 1, n}), one_minus_u * b);

            const auto c = monomial_in_basis(k, n);
            UPoly combo;
            for (long i = 0; i <= n; ++i) combo += c[static_cast<std::size_t>(i)] * basis_upoly({i, n});
            rec.poly("bernstein.monomial_in_basis", P({{"j", S(k)}, {"n", S(n)}}), combo, UPoly::monomial(k));

            if (printed) {
                const UPoly wrong = printed::basis_upoly({k, n});
                const UPoly truth = oracle::bernstein_by_product({k, n});
                for (long l = k; l <= n; ++l)
                    printed->exact("printed.monomial_expansion", P({{"k", S(k)}, {"n", S(n)}, {"l", S(l)}}),
                                   wrong.coeff(l), truth.coeff(l));
            }
        }
    }

    // de Casteljau against the direct formula
    const ExactRational u25(2, 5);
    for (long n = 0; n <= std::min(nmax, 6L); ++n) {
        std::vector<ExactRational> ones(static_cast<std::size_t>(n) + 1, ExactRational(1));
        rec.exact("bernstein.decasteljau_unity", P({{"n", S(n)}, {"u", u25.str()}}), decasteljau_eval(ones, u25), 1);
        for (long k = 0; k <= n; ++k) {
            std::vector<ExactRational> e(static_cast<std::size_t>(n) + 1);
            e[static_cast<std::size_t>(k)] = 1;
            rec.exact("bernstein.decasteljau_unit", P({{"k", S(k)}, {"n", S(n)}, {"u", u25.str()}}),
                      decasteljau_eval(e, u25), basis_eval_exact({k, n}, u25));
        }
    }

    // operator: three algebraic routes, plus reproduction of 1 and u
    const std::vector<ExactRational> points = {ExactRational(1, 3), ExactRational(2, 5), ExactRational(7, 4)};
    for (long n = 1; n <= nmax; ++n) {
        for (long m = 0; m <= 6; ++m) {
            std::vector<ExactRational> samples;
            for (long k = 0; k <= n; ++k) samples.push_back(int_pow(ExactRational(k, n), m));
            for (const auto& pt : points) {
                const Params pp = P({{"f", "t^" + S(m)}, {"n", S(n)}, {"u", pt.str()}});
                const ExactRational direct = operator_apply(samples, pt, OperatorMethod::direct);
                rec.exact("bernstein.operator_kim", pp, operator_apply(samples, pt, OperatorMethod::kim), direct);
                rec.exact("bernstein.operator_difference", pp, operator_apply(samples, pt, OperatorMethod::difference),
                          direct);
                if (m == 0) rec.exact("bernstein.operator_reproduces_one", pp, direct, 1);
                if (m == 1) rec.exact("bernstein.operator_reproduces_u", pp, direct, pt);
            }
            if (n <= 10) {
                UPoly lhs;
                for (long k = 0; k <= n; ++k) lhs += samples[static_cast<std::size_t>(k)] * basis_upoly({k, n});
                lhs *= int_pow(ExactRational(n), m);
                UPoly rhs;
                for (long k = 0; k <= n; ++k)
                    rhs += UPoly::monomial(k, binom(n, k) * ExactRational(factorial(k) * stirling2(m, k)));
                rec.poly("bernstein.operator_stirling_bridge", P({{"m", S(m)}, {"n", S(n)}}), lhs, rhs);
            }
        }
    }
    std::mt19937 rng(20100611);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9), order(1, std::max(1L, nmax));
    for (int trial = 0; trial < 20; ++trial) {
        const long n = order(rng);
        std::vector<ExactRational> samples;
        for (long k = 0; k <= n; ++k) samples.push_back(ExactRational(num(rng), den(rng)));
        const ExactRational pt(num(rng), den(rng));
        const Params pp = P({{"trial", S(trial)}, {"n", S(n)}, {"u", pt.str()}});
        const ExactRational direct = operator_apply(samples, pt, OperatorMethod::direct);
        rec.exact("bernstein.operator_random_kim", pp, operator_apply(samples, pt, OperatorMethod::kim), direct);
        rec.exact("bernstein.operator_random_difference", pp,
                  operator_apply(samples, pt, OperatorMethod::difference), direct);
    }

    for (const auto& pt : {ExactRational(1, 3), ExactRational(2, 5)}) {
        for (long k = 0; k <= 4; ++k) {
            const auto coeffs = generating_coeffs(k, pt, 10);
            for (long m = 0; m <= 10; ++m)
                rec.exact("bernstein.generating_series", P({{"k", S(k)}, {"m", S(m)}, {"u", pt.str()}}),
                          coeffs[static_cast<std::size_t>(m)], basis_eval_exact({k, m}, pt));
        }
    }

    // floating-point identities
    for (double q : {0.3, 0.7, 1.5}) {
        for (double x : kGrid) {
            rec.real("qcore.complement", P({{"q", real_str(q)}, {"x", real_str(x)}}), q_number_real(1.0 - x, 1.0 / q),
                     1.0 - q_number_real(x, q), 1e-12, false);
            for (long n = 0; n <= 6; ++n)
                for (long k = 0; k <= n; ++k)
                    rec.real("bernstein.symmetry_real",
                             P({{"k", S(k)}, {"n", S(n)}, {"q", real_str(q)}, {"x", real_str(x)}}),
                             basis_eval_real({n - k, n}, 1.0 - x, 1.0 / q), basis_eval_real({k, n}, x, q), 1e-12, false);
        }
    }
    for (double q : {0.3, 0.7}) {
        for (double x : kInterior) {
            for (long n = 0; n <= 6; ++n) {
                for (long k = 0; k <= n; ++k) {
                    const double fd = oracle::central_difference(
                        [&](double t) { return basis_eval_real({k, n}, t, q); }, x, 1e-5);
                    rec.real("bernstein.derivative",
                             P({{"k", S(k)}, {"n", S(n)}, {"q", real_str(q)}, {"x", real_str(x)}}),
                             basis_derivative({k, n}, x, q), fd, 1e-6, true);
                }
            }
        }
    }
    const double q_near = 1.0 - 1e-6;
    for (double x : kGrid) {
        for (long n = 0; n <= 6; ++n) {
            for (long k = 0; k <= n; ++k) {
                const double classical =
                    binomial_coeff(n, k).get_d() * std::pow(x, double(k)) * std::pow(1.0 - x, double(n - k));
                rec.real("bernstein.classical_limit", P({{"k", S(k)}, {"n", S(n)}, {"x", real_str(x)}}),
                         basis_eval_real({k, n}, x, q_near), classical, 1e-4, false);
            }
        }
    }
    rec.real("bernstein.binary_channel", P({{"x", "0.001"}}),
             basis_eval_real({2, 3}, 0.001, 1.0) + basis_eval_real({3, 3}, 0.001, 1.0), 2.998e-6, 1e-9, false);

    for (const auto& q : {ExactRational(1, 2), ExactRational(2, 3), ExactRational(5, 4)})
        for (long a = -10; a <= 10; ++a)
            for (long b = -10; b <= 10; ++b)
                rec.exact("qcore.q_number_addition", P({{"a", S(a)}, {"b", S(b)}, {"q", q.str()}}),
                          q_number_int(a + b, q), q_number_int(a, q) + int_pow(q, a) * q_number_int(b, q));
}

// -------------------------------------------------------------------- euler

void euler_suite(const VerifyConfig& cfg, Recorder& rec, Recorder* printed) {
    const long nmax = cfg.nmax;
    rec.exact("euler.anchor", P({{"n", "1"}, {"q", "1/2"}}), EulerTable::build(ExactRational(1, 2), 1).at(1),
              ExactRational(-2, 3));
    rec.exact("euler.anchor", P({{"n", "4"}, {"q", "1/2"}}), EulerTable::build(ExactRational(1, 2), 4).at(4),
              ExactRational(464, 765));
    rec.exact("euler.anchor", P({{"n", "4"}, {"q", "2"}}), EulerTable::build(ExactRational(2), 4).at(4),
              ExactRational(-29, 765));

    for (const auto& q : cfg.qs) {
        const std::string qs = q.str();
        const EulerTable table = EulerTable::build(q, std::max(20L, nmax));
        for (long n = 0; n <= 20; ++n)
            rec.exact("euler.closed_vs_recurrence", P({{"n", S(n)}, {"q", qs}}), euler_closed(n, q), table.at(n));

        for (long n = 0; n <= std::min(nmax, 10L); ++n) {
            rec.exact("euler.poly_at_zero", P({{"n", S(n)}, {"q", qs}}), euler_poly(n, 0, table), table.at(n));
            for (long x = -2; x <= 3; ++x) {
                const Params px = P({{"n", S(n)}, {"q", qs}, {"x", S(x)}});
                rec.exact("euler.poly_closed", px, euler_poly(n, x, table), euler_poly_closed(n, x, q));
                const auto [a, b] = reflection_check(n, x, q);
                rec.exact("euler.reflection", px, a, b);
            }
        }
        for (long shift = 1; shift <= 4; ++shift)
            for (long m = 0; m <= 8; ++m)
                rec.exact("euler.shift_moment", P({{"m", S(m)}, {"q", qs}, {"shift", S(shift)}}),
                          shift_moment(shift, m, q), shift_moment_rhs(shift, m, q));

        for (long n = 1; n <= nmax; ++n)
            rec.exact("euler.complement_moment", P({{"n", S(n)}, {"q", qs}}), complement_moment(n, table),
                      complement_moment_reflected(n, q));

        if (printed) {
            for (long n = 1; n <= nmax; ++n)
                printed->exact("printed.complement_moment", P({{"n", S(n)}, {"q", qs}}), complement_moment(n, table),
                               printed::complement_moment(n, q));
            for (long n = 1; n <= 4; ++n)
                for (long x = 1; x <= 2; ++x)
                    printed->exact("printed.euler_poly", P({{"n", S(n)}, {"q", qs}, {"x", S(x)}}),
                                   printed::euler_poly(n, x, q), euler_poly(n, x, table));
        }
    }

    // p-adic oracle
    const ExactRational q4(4);
    const long p = 3;
    for (long n = 0; n <= 4; ++n) {
        const auto vals = oracle::fermionic_convergence(n, q4, p, 5);
        for (long level = 1; level <= 5; ++level) {
            const Valuation& v = vals[static_cast<std::size_t>(level - 1)];
            bool ok = v >= level;
            if (n >= 1 && level >= 2) ok = ok && vals[static_cast<std::size_t>(level - 2)] < v;
            if (n == 0) ok = ok && v.is_infinite();
            rec.predicate("euler.padic_convergence", P({{"level", S(level)}, {"n", S(n)}, {"p", "3"}, {"q", "4"}}),
                          v.str(), n == 0 ? "inf" : ">= " + S(level) + ", increasing", ok);
        }
    }
    rec.exact("euler.padic_anchor", P({{"level", "1"}, {"n", "1"}}), fermionic_sum(1, q4, p, 1), 4);
    rec.exact("euler.padic_anchor", P({{"level", "2"}, {"n", "1"}}), fermionic_sum(1, q4, p, 2), 17476);
}

// ---------------------------------------------------------------- integrals

void integrals_suite(const VerifyConfig& cfg, Recorder& rec, Recorder* printed) {
    const long nmax = cfg.nmax;
    const long nbasis = std::min(nmax, 10L);
    const long ni_max = 5;
    const long needed = std::max({nmax, cfg.smax * ni_max, 16L});  // power products reach 2*(4*2)

    for (const auto& q : cfg.qs) {
        const std::string qs = q.str();
        const EulerMoments mo = EulerMoments::build(q, needed);
        const EulerTable table = EulerTable::build(q, needed);

        for (long n = 0; n <= nbasis; ++n) {
            ExactRational total;
            for (long k = 0; k <= n; ++k) {
                const Params kn = P({{"k", S(k)}, {"n", S(n)}, {"q", qs}});
                const ExactRational direct = integral_basis(k, n, mo);
                total += direct;
                rec.exact("integrals.basis_moment", kn, direct, moment_of(basis_upoly({k, n}), table));
                if (k < n) {
                    rec.exact("integrals.basis_reflected", kn, integral_basis_reflected(k, n, mo), direct);
                    if (printed)
                        printed->exact("printed.basis_reflected", kn, printed::integral_basis_reflected(k, n, mo),
                                       direct);
                }
            }
            rec.exact("integrals.partition_of_unity", P({{"n", S(n)}, {"q", qs}}), total, 1);
        }

        for (long s = 1; s <= cfg.smax; ++s) {
            std::vector<std::vector<long>> tups;
            std::vector<long> cur;
            tuples(s, ni_max, cur, tups);
            for (const auto& ns : tups) {
                const long total = std::accumulate(ns.begin(), ns.end(), 0L);
                for (long k = 0; k <= cfg.kmax; ++k) {
                    const Params pp = P({{"k", S(k)}, {"ns", join(ns)}, {"q", qs}});
                    const ExactRational direct = integral_product(k, ns, mo, IntegralMethod::direct);
                    UPoly prod = UPoly::constant(1);
                    for (long n : ns) prod *= basis_upoly({k, n});
                    rec.exact("integrals.product_moment", pp, direct, moment_of(prod, table));
                    if (total > s * k) {
                        rec.exact("integrals.product_reflected", pp,
                                  integral_product(k, ns, mo, IntegralMethod::reflected), direct);
                        if (printed)
                            printed->exact("printed.product_reflected", pp,
                                           printed::integral_product_reflected(k, ns, mo), direct);
                    }
                }
            }
        }

        // powers m_i in {1, 2}, at most two distinct factors
        for (long k = 0; k <= cfg.kmax; ++k) {
            for (long n1 = 0; n1 <= 4; ++n1) {
                for (long m1 = 1; m1 <= 2; ++m1) {
                    for (long n2 = -1; n2 <= 4; ++n2) {
                        for (long m2 = 1; m2 <= (n2 < 0 ? 1 : 2); ++m2) {
                            IntegralInstance inst{k, {{n1, m1}}, q};
                            if (n2 >= 0) inst.degrees.push_back({n2, m2});
                            std::string pairs = "(" + S(n1) + "," + S(m1) + ")";
                            if (n2 >= 0) pairs += "(" + S(n2) + "," + S(m2) + ")";
                            const Params pp = P({{"k", S(k)}, {"pairs", pairs}, {"q", qs}});
                            const ExactRational direct = integral_power_product(inst, mo, IntegralMethod::direct);
                            UPoly prod = UPoly::constant(1);
                            for (const auto& d : inst.degrees) prod *= basis_upoly({k, d.n}).pow(d.m);
                            rec.exact("integrals.power_moment", pp, direct, moment_of(prod, table));
                            if (inst.total_degree() > k * inst.total_power()) {
                                rec.exact("integrals.power_reflected", pp,
                                          integral_power_product(inst, mo, IntegralMethod::reflected), direct);
                                if (printed)
                                    printed->exact("printed.power_reflected", pp,
                                                   printed::integral_power_product(inst, mo), direct);
                            }
                        }
                    }
                }
            }
        }
    }

    const ExactRational half(1, 2);
    const std::vector<long> two_two{2, 2};
    rec.exact("integrals.anchor", P({{"k", "1"}, {"method", "direct"}, {"ns", "2,2"}, {"q", "1/2"}}),
              integral_product(1, two_two, half, IntegralMethod::direct), ExactRational(-16, 255));
    rec.exact("integrals.anchor", P({{"k", "1"}, {"method", "reflected"}, {"ns", "2,2"}, {"q", "1/2"}}),
              integral_product(1, two_two, half, IntegralMethod::reflected), ExactRational(-16, 255));
    rec.exact("integrals.anchor", P({{"k", "1"}, {"method", "reflected"}, {"ns", "3"}, {"q", "1/2"}}),
              integral_basis_reflected(1, 3, half), ExactRational(2, 15));
    if (printed)
        printed->exact("printed.basis_reflected_anchor", P({{"k", "1"}, {"n", "3"}, {"q", "1/2"}}),
                       printed::integral_basis_reflected(1, 3, EulerMoments::build(half, 3)), ExactRational(2, 15));

    // p-adic oracle on the basis integrals
    const ExactRational q4(4);
    for (long n = 0; n <= 3; ++n) {
        for (long k = 0; k <= n; ++k) {
            const ExactRational value = integral_basis(k, n, q4);
            for (long level = 1; level <= 4; ++level) {
                const Valuation v = padic_valuation(fermionic_sum(basis_upoly({k, n}), q4, 3, level) - value, 3);
                rec.predicate("integrals.padic_oracle",
                              P({{"k", S(k)}, {"level", S(level)}, {"n", S(n)}, {"p", "3"}, {"q", "4"}}), v.str(),
                              ">= " + S(level), v >= level);
            }
        }
    }
}

// ----------------------------------------------------------------- stirling

void stirling_suite(const VerifyConfig& cfg, Recorder& rec) {
    const long nst = std::min(cfg.nmax, 8L);
    for (const auto& q : cfg.qs) {
        const std::string qs = q.str();
        for (long n = 0; n <= nst; ++n)
            rec.poly("stirling.monomial_expansion", P({{"n", S(n)}, {"q", qs}}), qstirling_expansion_upoly(n, q),
                     UPoly::monomial(n));
        rec.exact("stirling.s_q_3_2", P({{"q", qs}}), q_stirling2(3, 2, q), ExactRational(2) + q);
        for (long j = 0; j <= nst; ++j) {
            const UPoly target = qstirling_expansion_upoly(j, q);
            for (long n = j; n <= nst; ++n) {
                const auto c = monomial_in_basis(j, n);
                UPoly combo;
                for (long k = 0; k <= n; ++k) combo += c[static_cast<std::size_t>(k)] * basis_upoly({k, n});
                rec.poly("stirling.basis_composition", P({{"j", S(j)}, {"n", S(n)}, {"q", qs}}), combo, target);
            }
        }
    }
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k)
            rec.exact("stirling.classical_limit", P({{"k", S(k)}, {"n", S(n)}}), q_stirling2(n, k, ExactRational(1)),
                      ExactRational(stirling2(n, k)));
    for (long m = 1; m <= 12; ++m)
        for (long k = 1; k <= m; ++k)
            rec.exact("stirling.recurrence", P({{"k", S(k)}, {"m", S(m)}}), ExactRational(stirling2(m, k)),
                      ExactRational(BigInt(k) * stirling2(m - 1, k) + stirling2(m - 1, k - 1)));
    for (const auto& q : {ExactRational(1, 2), ExactRational(2, 3), ExactRational(5, 4), ExactRational(1)})
        for (long k = 1; k <= 12; ++k)
            for (long j = 0; j <= k; ++j)
                rec.exact("qcore.gaussian_pascal", P({{"j", S(j)}, {"k", S(k)}, {"q", q.str()}}),
                          gaussian_binomial(k, j, q),
                          gaussian_binomial(k - 1, j - 1, q) + int_pow(q, j) * gaussian_binomial(k - 1, j, q));
    for (long m = 0; m <= 8; ++m) {
        std::vector<ExactRational> samples;
        for (long t = 0; t <= 8; ++t) samples.push_back(int_pow(ExactRational(t), m) - ExactRational(3 * t, 2));
        const auto a = forward_differences(samples);
        const auto b = forward_differences_alternating(samples);
        for (std::size_t i = 0; i < a.size(); ++i)
            rec.exact("qcore.forward_differences", P({{"f", "t^" + S(m) + "-3t/2"}, {"order", S(long(i))}}), a[i], b[i]);
    }
}

bool params_less(const ReportEntry& a, const ReportEntry& b) {
    return std::tie(a.identity_id, a.params) < std::tie(b.identity_id, b.params);
}

ReportSummary summarize(const std::vector<ReportEntry>& entries) {
    ReportSummary s;
    for (const auto& e : entries) {
        ++s.checked;
        (e.verdict == Verdict::pass ? s.passed : s.failed) += 1;
    }
    return s;
}

nlohmann::json entry_json(const ReportEntry& e) {
    nlohmann::json j = {{"identity_id", e.identity_id},
                        {"params", e.params},
                        {"lhs", e.lhs},
                        {"rhs", e.rhs},
                        {"verdict", e.verdict == Verdict::pass ? "pass" : "fail"}};
    if (e.tolerance) {
        j["tolerance"] = *e.tolerance;
        j["tolerance_kind"] = e.relative_tolerance ? "relative" : "absolute";
    }
    return j;
}

nlohmann::json summary_json(const ReportSummary& s) {
    return {{"checked", s.checked}, {"passed", s.passed}, {"failed", s.failed}};
}

}  // namespace

std::set<Suite> parse_suite(const std::string& name) {
    if (name == "all") return {Suite::bernstein, Suite::euler, Suite::integrals, Suite::stirling};
    if (name == "bernstein") return {Suite::bernstein};
    if (name == "euler") return {Suite::euler};
    if (name == "integrals") return {Suite::integrals};
    if (name == "stirling") return {Suite::stirling};
    throw ParseError("unknown suite '" + name + "'");
}

std::string suite_name(Suite suite) {
    switch (suite) {
        case Suite::bernstein: return "bernstein";
        case Suite::euler: return "euler";
        case Suite::integrals: return "integrals";
        case Suite::stirling: return "stirling";
    }
    return "?";
}

std::vector<ExactRational> default_q_samples() {
    return {ExactRational(1, 2), ExactRational(2, 3), ExactRational(3, 5), ExactRational(5, 4), ExactRational(3)};
}

VerifyConfig VerifyConfig::defaults() {
    VerifyConfig cfg;
    cfg.qs = default_q_samples();
    return cfg;
}

ReportSummary IdentityReport::summary() const { return summarize(entries); }

ReportSummary IdentityReport::counterexample_summary() const { return summarize(counterexamples); }

std::vector<std::string> IdentityReport::unrefuted_counterexamples() const {
    std::map<std::string, bool> refuted;
    for (const auto& e : counterexamples) refuted[e.identity_id] = refuted[e.identity_id] || e.verdict == Verdict::fail;
    std::vector<std::string> out;
    for (const auto& [id, r] : refuted)
        if (!r) out.push_back(id);
    return out;
}

bool IdentityReport::ok() const { return summary().failed == 0 && unrefuted_counterexamples().empty(); }

void IdentityReport::sort() {
    std::stable_sort(entries.begin(), entries.end(), params_less);
    std::stable_sort(counterexamples.begin(), counterexamples.end(), params_less);
}

nlohmann::json IdentityReport::to_json() const {
    nlohmann::json out;
    out["summary"] = summary_json(summary());
    out["entries"] = nlohmann::json::array();
    for (const auto& e : entries) out["entries"].push_back(entry_json(e));
    nlohmann::json cx;
    cx["summary"] = summary_json(counterexample_summary());
    cx["unrefuted"] = unrefuted_counterexamples();
    cx["entries"] = nlohmann::json::array();
    for (const auto& e : counterexamples) cx["entries"].push_back(entry_json(e));
    out["printed_counterexamples"] = std::move(cx);
    return out;
}

IdentityReport run_verify_suite(const VerifyConfig& config) {
    if (config.qs.empty()) throw UsageError("the q sample list is empty");
    if (config.nmax < 0 || config.nmax > kMaxVerifyDegree)
        throw UsageError("nmax must lie in [0, " + std::to_string(kMaxVerifyDegree) + "]");
    if (config.smax < 1 || config.smax > kMaxVerifyFactors)
        throw UsageError("smax must lie in [1, " + std::to_string(kMaxVerifyFactors) + "]");
    if (config.kmax < 0 || config.kmax > config.nmax) throw UsageError("kmax must lie in [0, nmax]");
    for (const auto& q : config.qs)
        if (q.is_zero() || q == 1 || q == -1) throw DomainError("sample q = " + q.str() + " is a pole");

    IdentityReport report;
    Recorder rec(report.entries);
    Recorder cx(report.counterexamples);
    Recorder* printed = config.include_printed ? &cx : nullptr;
    if (config.suites.count(Suite::bernstein)) bernstein_suite(config, rec, printed);
    if (config.suites.count(Suite::euler)) euler_suite(config, rec, printed);
    if (config.suites.count(Suite::integrals)) integrals_suite(config, rec, printed);
    if (config.suites.count(Suite::stirling)) stirling_suite(config, rec);
    report.sort();
    return report;
}

}  // namespace qbern
