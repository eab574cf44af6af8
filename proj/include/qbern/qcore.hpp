#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qbern/numeric.hpp"
#include "qbern/rational.hpp"
#include "qbern/upoly.hpp"

namespace qbern {

/// Which q an evaluation runs under: an exact rational or a positive real.
class QContext {
public:
    enum class Mode { exact, real };

    QContext(const ExactRational& q) : mode_(Mode::exact), exact_(q) {}  // NOLINT(google-explicit-constructor)
    static QContext real(double q);

    Mode mode() const { return mode_; }
    /// Throws DomainError in real mode.
    const ExactRational& exact_q() const;
    /// Throws DomainError in exact mode.
    double real_q() const;

    bool is_one() const;

private:
    QContext(Mode mode, double q) : mode_(mode), real_(q) {}

    Mode mode_;
    std::optional<ExactRational> exact_;
    std::optional<double> real_;
};

/// [x]_q = (1 - q^x)/(1 - q) for integer x; returns x at q = 1.
ExactRational q_number_int(long x, const QContext& ctx);

/// Real-valued [x]_q. q must be positive; q = 1 returns x.
double q_number_real(double x, double q);

/// [k]_q! = [1]_q [2]_q ... [k]_q
ExactRational q_factorial(long k, const QContext& ctx);

/// Gaussian binomial [k]_q! / ([j]_q! [k-j]_q!); zero for j outside [0, k].
ExactRational gaussian_binomial(long k, long j, const QContext& ctx);

/// The generalized q-binomial (x choose k)_q written as a polynomial in u = [x]_q,
/// via [x - i]_q = (u - [i]_q) / q^i.
UPoly qbinom_upoly(long k, const QContext& ctx);

/// Delta^k f(0) for k = 0..n from samples f(0..n), by iterated differencing.
std::vector<ExactRational> forward_differences(std::span<const ExactRational> samples);

/// Same quantity through the alternating sum
/// Delta^n f(0) = sum_k C(n,k) (-1)^(n-k) f(k).
std::vector<ExactRational> forward_differences_alternating(std::span<const ExactRational> samples);

/// Stirling number of the second kind, Delta^k 0^m / k!, with 0^0 = 1.
BigInt stirling2(long m, long k);

}  // namespace qbern
