#include "qbern/qbernstein.hpp"

#include <cmath>

#include "qbern/errors.hpp"
#include "qbern/numeric.hpp"
#include "qbern/qcore.hpp"

namespace qbern {

namespace {

ExactRational binom(long n, long k) { return ExactRational(binomial_coeff(n, k)); }

bool vanishes(BernsteinIndex idx) { return idx.k < 0 || idx.n < 0 || idx.k > idx.n; }

}  // namespace

ExactRational basis_eval_exact(BernsteinIndex idx, const ExactRational& u) {
    if (vanishes(idx)) return 0;
    return binom(idx.n, idx.k) * int_pow(u, idx.k) * int_pow(ExactRational(1) - u, idx.n - idx.k);
}

double basis_eval_real(BernsteinIndex idx, double x, double q) {
    if (!(q > 0.0)) throw DomainError("real q must be positive");
    if (vanishes(idx)) return 0.0;
    const double u = q_number_real(x, q);
    const double v = q_number_real(1.0 - x, 1.0 / q);
    return binomial_coeff(idx.n, idx.k).get_d() * std::pow(u, static_cast<double>(idx.k)) *
           std::pow(v, static_cast<double>(idx.n - idx.k));
}

UPoly basis_upoly(BernsteinIndex idx) {
    if (vanishes(idx)) return UPoly();
    std::vector<ExactRational> coeffs(static_cast<std::size_t>(idx.n) + 1);
    for (long l = idx.k; l <= idx.n; ++l)
        coeffs[static_cast<std::size_t>(l)] = sign_pow(l - idx.k) * binom(idx.n, l) * binom(l, idx.k);
    return UPoly(std::move(coeffs));
}

ExactRational decasteljau_eval(std::span<const ExactRational> coeffs, const ExactRational& u) {
    if (coeffs.empty()) throw DomainError("de Casteljau evaluation needs at least one coefficient");
    std::vector<ExactRational> work(coeffs.begin(), coeffs.end());
    const ExactRational v = ExactRational(1) - u;
    for (std::size_t round = work.size() - 1; round > 0; --round)
        for (std::size_t i = 0; i < round; ++i) work[i] = v * work[i] + u * work[i + 1];
    return work.front();
}

double basis_derivative(BernsteinIndex idx, double x, double q) {
    if (!(q > 0.0)) throw DomainError("real q must be positive");
    if (idx.n == 0) return 0.0;
    const double lower = basis_eval_real({idx.k - 1, idx.n - 1}, x, q);
    const double same = basis_eval_real({idx.k, idx.n - 1}, x, q);
    const double scale = q == 1.0 ? 1.0 : std::log1p(q - 1.0) / (q - 1.0) * std::pow(q, x);
    return static_cast<double>(idx.n) * (lower - same) * scale;
}

std::array<BernsteinTerm, 2> degree_elevate(BernsteinIndex idx) {
    const ExactRational n1(idx.n + 1);
    return {BernsteinTerm{ExactRational(idx.n + 1 - idx.k) / n1, {idx.k, idx.n + 1}},
            BernsteinTerm{ExactRational(idx.k + 1) / n1, {idx.k + 1, idx.n + 1}}};
}

std::vector<ExactRational> monomial_in_basis(long j, long n) {
    if (j < 0 || n < 0 || j > n) throw DomainError("monomial_in_basis requires 0 <= j <= n");
    std::vector<ExactRational> out(static_cast<std::size_t>(n) + 1);
    const ExactRational denom = binom(n, j);
    for (long k = j; k <= n; ++k) out[static_cast<std::size_t>(k)] = binom(k, j) / denom;
    return out;
}

ExactRational operator_apply(std::span<const ExactRational> samples, const ExactRational& u,
                             OperatorMethod method) {
    if (samples.empty()) throw DomainError("operator needs at least one sample");
    const long n = static_cast<long>(samples.size()) - 1;
    ExactRational acc;
    switch (method) {
        case OperatorMethod::direct:
            for (long k = 0; k <= n; ++k) acc += samples[static_cast<std::size_t>(k)] * basis_eval_exact({k, n}, u);
            break;
        case OperatorMethod::kim:
            for (long m = 0; m <= n; ++m) {
                ExactRational inner;
                for (long k = 0; k <= m; ++k)
                    inner += binom(m, k) * sign_pow(m - k) * samples[static_cast<std::size_t>(k)];
                acc += binom(n, m) * int_pow(u, m) * inner;
            }
            break;
        case OperatorMethod::difference: {
            const auto deltas = forward_differences(samples);
            for (long k = 0; k <= n; ++k) acc += binom(n, k) * int_pow(u, k) * deltas[static_cast<std::size_t>(k)];
            break;
        }
    }
    return acc;
}

ExactRational operator_apply(std::span<const ExactRational> samples, long n, const ExactRational& u,
                             OperatorMethod method) {
    if (n < 0 || samples.size() != static_cast<std::size_t>(n) + 1)
        throw DomainError("operator of order " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                          " samples, got " + std::to_string(samples.size()));
    return operator_apply(samples, u, method);
}

double operator_apply_real(std::span<const ExactRational> samples, double x, double q) {
    if (samples.empty()) throw DomainError("operator needs at least one sample");
    const long n = static_cast<long>(samples.size()) - 1;
    double acc = 0.0;
    for (long k = 0; k <= n; ++k) acc += samples[static_cast<std::size_t>(k)].to_double() * basis_eval_real({k, n}, x, q);
    return acc;
}

std::vector<ExactRational> generating_coeffs(long k, const ExactRational& u, long order) {
    if (k < 0 || order < 0) throw DomainError("generating_coeffs requires k >= 0 and order >= 0");
    std::vector<ExactRational> out(static_cast<std::size_t>(order) + 1);
    if (k > order) return out;
    // (t u)^k / k!  times  sum_j ((1-u) t)^j / j!, both as series in t
    const UPoly head = UPoly::monomial(k, int_pow(u, k) / ExactRational(factorial(k)));
    std::vector<ExactRational> tail(static_cast<std::size_t>(order) + 1);
    const ExactRational v = ExactRational(1) - u;
    for (long j = 0; j <= order; ++j) tail[static_cast<std::size_t>(j)] = int_pow(v, j) / ExactRational(factorial(j));
    const UPoly series = (head * UPoly(std::move(tail))).truncated(order);
    for (long m = 0; m <= order; ++m) out[static_cast<std::size_t>(m)] = series.coeff(m) * ExactRational(factorial(m));
    return out;
}

}  // namespace qbern

namespace qbern::printed {

UPoly basis_upoly(BernsteinIndex idx) {
    if (idx.k < 0 || idx.k > idx.n) return UPoly();
    std::vector<ExactRational> coeffs(static_cast<std::size_t>(idx.n) + 1);
    for (long l = idx.k; l <= idx.n; ++l)
        coeffs[static_cast<std::size_t>(l)] = sign_pow(l - idx.k) * ExactRational(binomial_coeff(l, idx.k)) *
                                              ExactRational(binomial_coeff(idx.n, idx.k));
    return UPoly(std::move(coeffs));
}

}  // namespace qbern::printed
