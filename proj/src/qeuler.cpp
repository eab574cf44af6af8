#include "qbern/qeuler.hpp"

#include <cmath>
#include <stdexcept>

#include "qbern/errors.hpp"
#include "qbern/qcore.hpp"

namespace qbern {

namespace {

ExactRational binom(long n, long k) { return ExactRational(binomial_coeff(n, k)); }

void reject_poles(const ExactRational& q) {
    if (q == 1) throw DomainError("q = 1 is a pole of the closed q-Euler form");
    if (q == -1) throw DomainError("q = -1 is a pole of the q-Euler numbers");
}

void extend_values(const ExactRational& q, std::vector<ExactRational>& values, long nmax) {
    for (long n = static_cast<long>(values.size()); n <= nmax; ++n) {
        const ExactRational denom = ExactRational(1) + int_pow(q, n);
        if (denom.is_zero()) throw DomainError("1 + q^" + std::to_string(n) + " vanishes");
        ExactRational acc;
        for (long l = 0; l < n; ++l) acc += binom(n, l) * int_pow(q, l) * values[static_cast<std::size_t>(l)];
        values.push_back(-acc / denom);
    }
}

}  // namespace

EulerTable EulerTable::build(const ExactRational& q, long nmax) {
    if (nmax < 0) throw DomainError("negative table size");
    std::vector<ExactRational> values{ExactRational(1)};
    extend_values(q, values, nmax);
    return EulerTable(q, std::move(values));
}

EulerTable EulerTable::extended(long nmax) const {
    std::vector<ExactRational> values = values_;
    extend_values(q_, values, nmax);
    return EulerTable(q_, std::move(values));
}

const ExactRational& EulerTable::at(long n) const {
    if (n < 0 || n > nmax())
        throw std::out_of_range("E_" + std::to_string(n) + " not in table of size " + std::to_string(nmax()));
    return values_[static_cast<std::size_t>(n)];
}

EulerTable euler_table(const ExactRational& q, long nmax) { return EulerTable::build(q, nmax); }

ExactRational euler_closed(long n, const ExactRational& q) {
    reject_poles(q);
    if (n < 0) throw DomainError("negative q-Euler index");
    ExactRational acc;
    for (long l = 0; l <= n; ++l) acc += binom(n, l) * sign_pow(l) / (ExactRational(1) + int_pow(q, l));
    return ExactRational(2) * acc / int_pow(ExactRational(1) - q, n);
}

ExactRational euler_poly(long n, long x, const EulerTable& table) {
    const ExactRational& q = table.q();
    reject_poles(q);
    const ExactRational qx = q_number_int(x, q);
    ExactRational acc;
    for (long l = 0; l <= n; ++l) acc += binom(n, l) * int_pow(q, l * x) * table.at(l) * int_pow(qx, n - l);
    return acc;
}

ExactRational euler_poly(long n, long x, const ExactRational& q) {
    reject_poles(q);
    return euler_poly(n, x, EulerTable::build(q, n));
}

ExactRational euler_poly_closed(long n, long x, const ExactRational& q) {
    reject_poles(q);
    ExactRational acc;
    for (long l = 0; l <= n; ++l)
        acc += binom(n, l) * sign_pow(l) * int_pow(q, l * x) / (ExactRational(1) + int_pow(q, l));
    return ExactRational(2) * acc / int_pow(ExactRational(1) - q, n);
}

double euler_poly_real(long n, double x, double q) {
    if (!(q > 0.0) || q == 1.0) throw DomainError("real q-Euler polynomial requires q > 0, q != 1");
    std::vector<double> e{1.0};
    for (long m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (long l = 0; l < m; ++l) acc += binomial_coeff(m, l).get_d() * std::pow(q, double(l)) * e[std::size_t(l)];
        e.push_back(-acc / (1.0 + std::pow(q, double(m))));
    }
    const double qx = q_number_real(x, q);
    double acc = 0.0;
    for (long l = 0; l <= n; ++l)
        acc += binomial_coeff(n, l).get_d() * std::pow(q, double(l) * x) * e[std::size_t(l)] * std::pow(qx, double(n - l));
    return acc;
}

ExactRational shift_moment(long shift, long m, const ExactRational& q) {
    if (shift < 1) throw DomainError("shift must be positive");
    const EulerTable table = EulerTable::build(q, m);
    return euler_poly(m, shift, table) + sign_pow(shift - 1) * table.at(m);
}

ExactRational shift_moment_rhs(long shift, long m, const ExactRational& q) {
    reject_poles(q);
    if (shift < 1) throw DomainError("shift must be positive");
    ExactRational acc;
    for (long l = 0; l < shift; ++l) acc += sign_pow(shift - l - 1) * int_pow(q_number_int(l, q), m);
    return ExactRational(2) * acc;
}

std::pair<ExactRational, ExactRational> reflection_check(long n, long x, const ExactRational& q) {
    if (q.is_zero()) throw DomainError("q = 0 has no reflection");
    reject_poles(q);
    const ExactRational inv = ExactRational(1) / q;
    return {euler_poly(n, 1 - x, inv), sign_pow(n) * int_pow(q, n) * euler_poly(n, x, q)};
}

ExactRational complement_moment(long n, const EulerTable& table) {
    ExactRational acc;
    for (long l = 0; l <= n; ++l) acc += binom(n, l) * sign_pow(l) * table.at(l);
    return acc;
}

ExactRational complement_moment(long n, const ExactRational& q) {
    if (q.is_zero()) throw DomainError("q = 0 is excluded");
    reject_poles(q);
    return complement_moment(n, EulerTable::build(q, n));
}

ExactRational complement_moment_reflected(long n, const ExactRational& q) {
    if (q.is_zero()) throw DomainError("q = 0 is excluded");
    reject_poles(q);
    if (n == 0) return 1;
    return ExactRational(2) + EulerTable::build(ExactRational(1) / q, n).at(n);
}

void require_padic_regime(const ExactRational& q, long p) {
    if (p % 2 == 0 || !is_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
    if (!(padic_valuation(q, p) >= 0)) throw DomainError("q must be a p-adic integer");
    if (!(padic_valuation(q - ExactRational(1), p) >= 1)) throw DomainError("fermionic sum requires |1 - q|_p < 1");
}

ExactRational fermionic_sum(const UPoly& integrand, const ExactRational& q, long p, long level) {
    require_padic_regime(q, p);
    if (level < 1) throw DomainError("level must be at least 1");
    BigInt count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(level));
    ExactRational acc;
    ExactRational u;  // [x]_q, advanced by [x+1]_q = 1 + q [x]_q
    bool negative = false;
    for (BigInt x = 0; x < count; ++x) {
        const ExactRational value = integrand(u);
        acc += negative ? -value : value;
        negative = !negative;
        u = ExactRational(1) + q * u;
    }
    return acc;
}

ExactRational fermionic_sum(long n, const ExactRational& q, long p, long level) {
    if (n < 0) throw DomainError("negative moment");
    return fermionic_sum(UPoly::monomial(n), q, p, level);
}

namespace printed {

ExactRational euler_poly(long n, long x, const ExactRational& q) {
    reject_poles(q);
    const EulerTable table = EulerTable::build(q, n);
    ExactRational acc;
    for (long l = 0; l <= n; ++l) acc += binom(n, l) * int_pow(q, l * x) * table.at(l);
    return acc;
}

ExactRational complement_moment(long n, const ExactRational& q) {
    reject_poles(q);
    return ExactRational(2) + EulerTable::build(q, n).at(n);
}

}  // namespace printed

}  // namespace qbern
