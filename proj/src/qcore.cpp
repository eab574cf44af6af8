#include "qbern/qcore.hpp"

#include <cmath>

#include "qbern/errors.hpp"

namespace qbern {

QContext QContext::real(double q) {
    if (!(q > 0.0)) throw DomainError("real q must be positive");
    return QContext(Mode::real, q);
}

const ExactRational& QContext::exact_q() const {
    if (mode_ != Mode::exact) throw DomainError("operation requires an exact q");
    return *exact_;
}

double QContext::real_q() const {
    if (mode_ != Mode::real) throw DomainError("operation requires a real q");
    return *real_;
}

bool QContext::is_one() const { return mode_ == Mode::exact ? *exact_ == 1 : *real_ == 1.0; }

ExactRational q_number_int(long x, const QContext& ctx) {
    const ExactRational& q = ctx.exact_q();
    if (q == 1) return x;
    if (q.is_zero() && x < 0) throw DomainError("[x]_q with q = 0 and negative x");
    return (ExactRational(1) - int_pow(q, x)) / (ExactRational(1) - q);
}

double q_number_real(double x, double q) {
    if (!(q > 0.0)) throw DomainError("real q must be positive");
    if (q == 1.0) return x;
    // expm1/log1p keep the ratio accurate as q approaches 1
    const double log_q = std::log1p(q - 1.0);
    return std::expm1(x * log_q) / std::expm1(log_q);
}

ExactRational q_factorial(long k, const QContext& ctx) {
    if (k < 0) throw DomainError("q-factorial of a negative integer");
    ExactRational out(1);
    for (long i = 1; i <= k; ++i) out *= q_number_int(i, ctx);
    return out;
}

ExactRational gaussian_binomial(long k, long j, const QContext& ctx) {
    if (j < 0 || j > k) return 0;
    // product form avoids recomputing three factorials
    ExactRational out(1);
    for (long i = 1; i <= j; ++i) out *= q_number_int(k - j + i, ctx) / q_number_int(i, ctx);
    return out;
}

UPoly qbinom_upoly(long k, const QContext& ctx) {
    const ExactRational& q = ctx.exact_q();
    if (q.is_zero()) throw DomainError("q = 0 has no q-binomial polynomial");
    if (q == -1) throw DomainError("q = -1 is a pole of the q-binomial polynomial");
    if (k < 0) throw DomainError("negative q-binomial index");
    UPoly out = UPoly::constant(1);
    for (long i = 0; i < k; ++i) {
        UPoly factor({-q_number_int(i, ctx), ExactRational(1)});
        out *= factor * int_pow(q, -i);
    }
    return out * (ExactRational(1) / q_factorial(k, ctx));
}

std::vector<ExactRational> forward_differences(std::span<const ExactRational> samples) {
    if (samples.empty()) throw DomainError("forward differences of an empty sample list");
    std::vector<ExactRational> row(samples.begin(), samples.end());
    std::vector<ExactRational> out;
    out.reserve(row.size());
    while (!row.empty()) {
        out.push_back(row.front());
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
    return out;
}

std::vector<ExactRational> forward_differences_alternating(std::span<const ExactRational> samples) {
    if (samples.empty()) throw DomainError("forward differences of an empty sample list");
    const long n = static_cast<long>(samples.size()) - 1;
    std::vector<ExactRational> out;
    out.reserve(samples.size());
    for (long m = 0; m <= n; ++m) {
        ExactRational acc;
        for (long k = 0; k <= m; ++k)
            acc += ExactRational(binomial_coeff(m, k)) * sign_pow(m - k) * samples[static_cast<std::size_t>(k)];
        out.push_back(acc);
    }
    return out;
}

BigInt stirling2(long m, long k) {
    if (m < 0 || k < 0) throw DomainError("negative Stirling index");
    if (k > m) return 0;
    std::vector<ExactRational> zero_powers;
    zero_powers.reserve(static_cast<std::size_t>(k) + 1);
    for (long j = 0; j <= k; ++j) zero_powers.push_back(int_pow(ExactRational(j), m));
    const ExactRational delta = forward_differences(zero_powers).back();
    return (delta / ExactRational(factorial(k))).numerator();
}

}  // namespace qbern
