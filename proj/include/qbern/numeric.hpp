#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "qbern/rational.hpp"

namespace qbern {

/// p-adic valuation of a rational, with an explicit +infinity for zero.
class Valuation {
public:
    static Valuation infinity() { return Valuation(); }
    static Valuation finite(long v) { return Valuation(v); }

    bool is_infinite() const { return infinite_; }
    /// Only meaningful when finite.
    long value() const { return value_; }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }
    friend bool operator>=(const Valuation& a, long v) { return a.infinite_ || a.value_ >= v; }

private:
    Valuation() : infinite_(true) {}
    explicit Valuation(long v) : infinite_(false), value_(v) {}

    bool infinite_;
    long value_ = 0;
};

bool is_prime(long p);

/// v_p(r) = v_p(numerator) - v_p(denominator). p must be an odd prime.
Valuation padic_valuation(const ExactRational& r, long p);

/// Exact r^k for any integer k; throws DomainError for 0 to a negative power.
/// 0^0 = 1.
ExactRational int_pow(const ExactRational& r, long k);

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial_coeff(long n, long k);

BigInt factorial(long n);

/// (-1)^k as a rational.
inline ExactRational sign_pow(long k) { return (k % 2 == 0) ? ExactRational(1) : ExactRational(-1); }

}  // namespace qbern
