#include "qbern/qstirling.hpp"

#include "qbern/errors.hpp"
#include "qbern/numeric.hpp"
#include "qbern/qcore.hpp"

namespace qbern {

namespace {

void reject_poles(const ExactRational& q) {
    if (q.is_zero()) throw DomainError("q = 0 is excluded for q-Stirling numbers");
    if (q == -1) throw DomainError("q = -1 is a pole of the q-Stirling numbers");
}

long choose2(long k) { return k * (k - 1) / 2; }

}  // namespace

ExactRational q_stirling2(long n, long k, const ExactRational& q) {
    reject_poles(q);
    if (n < 0 || k < 0) throw DomainError("negative q-Stirling index");
    ExactRational acc;
    for (long j = 0; j <= k; ++j)
        acc += sign_pow(j) * int_pow(q, choose2(j)) * gaussian_binomial(k, j, q) * int_pow(q_number_int(k - j, q), n);
    return int_pow(q, -choose2(k)) / q_factorial(k, q) * acc;
}

UPoly qstirling_expansion_upoly(long n, const ExactRational& q) {
    reject_poles(q);
    if (n < 0) throw DomainError("negative q-Stirling index");
    UPoly out;
    for (long k = 0; k <= n; ++k)
        out += qbinom_upoly(k, q) * (int_pow(q, choose2(k)) * q_factorial(k, q) * q_stirling2(n, k, q));
    return out;
}

}  // namespace qbern
