#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qbern {

using BigInt = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Canonical form is enforced on every construction and after every
/// operation, so two values are equal iff their numerators and denominators
/// are equal. Zero is 0/1.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit ExactRational(const BigInt& value) : value_(value) {}
    ExactRational(const BigInt& numerator, const BigInt& denominator);
    ExactRational(long numerator, long denominator)
        : ExactRational(BigInt(numerator), BigInt(denominator)) {}

    /// Parses "a/b", "-a/b" or "a". Also accepts a finite decimal literal
    /// such as "-0.125", converted exactly.
    static ExactRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    /// Canonical "a/b" text, or "a" when the denominator is 1.
    std::string str() const;

    ExactRational operator-() const;
    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

}  // namespace qbern
