#include "qbern/qintegrals.hpp"

#include <numeric>

#include "qbern/errors.hpp"
#include "qbern/numeric.hpp"

namespace qbern {

namespace {

ExactRational binom(long n, long k) { return ExactRational(binomial_coeff(n, k)); }

void reject_poles(const ExactRational& q) {
    if (q.is_zero() || q == 1 || q == -1) throw DomainError("q must avoid 0, 1 and -1, got " + q.str());
}

void require_nonnegative(long k, std::span<const long> ns) {
    if (k < 0) throw DomainError("negative basis index");
    for (long n : ns)
        if (n < 0) throw DomainError("negative degree");
}

// prod_i C(n_i, k)^{m_i}
ExactRational binomial_weight(long k, std::span<const DegreePower> degrees) {
    ExactRational w(1);
    for (const auto& d : degrees) w *= int_pow(binom(d.n, k), d.m);
    return w;
}

// Integral of u^a (1-u)^b by expanding (1-u)^b.
ExactRational moment_direct(long a, long b, const EulerMoments& mo) {
    ExactRational acc;
    for (long j = 0; j <= b; ++j) acc += binom(b, j) * sign_pow(j) * mo.forward(j + a);
    return acc;
}

// Integral of u^a (1-u)^{D-a} by rewriting u^a in powers of (1-u); the
// reflected moment of (1-u)^m is 2 + E_{m,1/q} for m >= 1.
ExactRational moment_reflected(long a, long total, const EulerMoments& mo, bool with_constant) {
    ExactRational acc;
    for (long j = 0; j <= a; ++j) {
        const ExactRational e = with_constant ? ExactRational(2) + mo.reflected(total - j) : mo.reflected(total - j);
        acc += binom(a, j) * sign_pow(a - j) * e;
    }
    return acc;
}

std::vector<DegreePower> as_degrees(std::span<const long> ns) {
    std::vector<DegreePower> out;
    out.reserve(ns.size());
    for (long n : ns) out.push_back({n, 1});
    return out;
}

long required_size(const IntegralInstance& instance) { return std::max(instance.total_degree(), 0L); }

void validate(const IntegralInstance& instance) {
    if (instance.k < 0) throw DomainError("negative basis index");
    for (const auto& d : instance.degrees) {
        if (d.n < 0) throw DomainError("negative degree");
        if (d.m < 1) throw DomainError("powers m_i must be at least 1");
    }
}

}  // namespace

EulerMoments EulerMoments::build(const ExactRational& q, long nmax) {
    reject_poles(q);
    return EulerMoments(EulerTable::build(q, nmax), EulerTable::build(ExactRational(1) / q, nmax));
}

ExactRational integral_basis(long k, long n, const EulerMoments& moments) {
    if (k < 0 || n < 0) throw DomainError("negative basis index");
    if (n < k) return 0;
    return binom(n, k) * moment_direct(k, n - k, moments);
}

ExactRational integral_basis(long k, long n, const ExactRational& q) {
    return integral_basis(k, n, EulerMoments::build(q, std::max(n, 0L)));
}

ExactRational integral_basis_reflected(long k, long n, const EulerMoments& moments) {
    if (k < 0 || n <= k) throw DomainError("reflected basis integral requires 0 <= k < n");
    if (k == 0) return ExactRational(2) + moments.reflected(n);
    return binom(n, k) * moment_reflected(k, n, moments, false);
}

ExactRational integral_basis_reflected(long k, long n, const ExactRational& q) {
    if (k < 0 || n <= k) throw DomainError("reflected basis integral requires 0 <= k < n");
    return integral_basis_reflected(k, n, EulerMoments::build(q, n));
}

ExactRational integral_product(long k, std::span<const long> ns, const EulerMoments& moments, IntegralMethod method) {
    require_nonnegative(k, ns);
    const auto degrees = as_degrees(ns);
    const long s = static_cast<long>(ns.size());
    const long total = std::accumulate(ns.begin(), ns.end(), 0L);
    if (method == IntegralMethod::reflected) {
        if (total <= s * k) throw DomainError("reflected product integral requires sum n_i > s k");
        if (k == 0) return ExactRational(2) + moments.reflected(total);
        return binomial_weight(k, degrees) * moment_reflected(s * k, total, moments, false);
    }
    const ExactRational weight = binomial_weight(k, degrees);
    if (weight.is_zero()) return 0;
    return weight * moment_direct(s * k, total - s * k, moments);
}

ExactRational integral_product(long k, std::span<const long> ns, const ExactRational& q, IntegralMethod method) {
    const long total = std::accumulate(ns.begin(), ns.end(), 0L);
    return integral_product(k, ns, EulerMoments::build(q, std::max(total, 0L)), method);
}

long IntegralInstance::total_power() const {
    long out = 0;
    for (const auto& d : degrees) out += d.m;
    return out;
}

long IntegralInstance::total_degree() const {
    long out = 0;
    for (const auto& d : degrees) out += d.m * d.n;
    return out;
}

ExactRational integral_power_product(const IntegralInstance& instance, const EulerMoments& moments,
                                     IntegralMethod method) {
    validate(instance);
    const long km = instance.k * instance.total_power();
    const long total = instance.total_degree();
    const ExactRational weight = binomial_weight(instance.k, instance.degrees);
    if (method == IntegralMethod::reflected) {
        if (total <= km) throw DomainError("reflected power-product integral requires sum m_i n_i > k sum m_i");
        return weight * moment_reflected(km, total, moments, true);
    }
    if (weight.is_zero()) return 0;
    return weight * moment_direct(km, total - km, moments);
}

ExactRational integral_power_product(const IntegralInstance& instance, IntegralMethod method) {
    validate(instance);
    return integral_power_product(instance, EulerMoments::build(instance.q, required_size(instance)), method);
}

namespace printed {

ExactRational integral_basis_reflected(long k, long n, const EulerMoments& moments) {
    if (k < 0 || n <= k) throw DomainError("reflected basis integral requires 0 <= k < n");
    if (k == 0) return ExactRational(2) + moments.forward(n);
    ExactRational acc;
    for (long j = 0; j <= k; ++j) acc += binom(k, j) * sign_pow(k + j) * moments.forward(n - j);
    return binom(n, k) * acc;
}

ExactRational integral_product_reflected(long k, std::span<const long> ns, const EulerMoments& moments) {
    require_nonnegative(k, ns);
    const long s = static_cast<long>(ns.size());
    const long total = std::accumulate(ns.begin(), ns.end(), 0L);
    if (total <= s * k) throw DomainError("reflected product integral requires sum n_i > s k");
    if (k == 0) return ExactRational(2) + moments.forward(total);
    ExactRational acc;
    for (long j = 0; j <= s * k; ++j) acc += binom(s * k, j) * sign_pow(s * k - j) * moments.forward(total - j);
    return binomial_weight(k, as_degrees(ns)) * acc;
}

ExactRational integral_power_product(const IntegralInstance& instance, const EulerMoments& moments) {
    validate(instance);
    const long km = instance.k * instance.total_power();
    const long total = instance.total_degree();
    if (total <= km) throw DomainError("reflected power-product integral requires sum m_i n_i > k sum m_i");
    ExactRational acc;
    for (long j = 0; j <= km; ++j)
        acc += binom(km, j) * sign_pow(km - j) * (ExactRational(2) + moments.forward(total - j));
    return binomial_weight(instance.k, instance.degrees) * acc;
}

}  // namespace printed

}  // namespace qbern
