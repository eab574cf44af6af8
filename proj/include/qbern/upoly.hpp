#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qbern/rational.hpp"

namespace qbern {

/// Dense univariate polynomial in u = [x]_q with exact coefficients.
///
/// Coefficient i multiplies u^i. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and equality is coefficient-wise.
class UPoly {
public:
    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    UPoly() = default;
    explicit UPoly(std::vector<ExactRational> coeffs);

    static UPoly constant(const ExactRational& c);
    /// c * u^power
    static UPoly monomial(long power, const ExactRational& c = ExactRational(1));
    /// The polynomial u.
    static UPoly identity() { return monomial(1); }

    /// kZeroDegree for the zero polynomial.
    long degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of u^i; zero past the degree.
    ExactRational coeff(long i) const;
    std::span<const ExactRational> coeffs() const { return coeffs_; }

    ExactRational operator()(const ExactRational& u) const;
    double operator()(double u) const;

    /// p(1 - u)
    UPoly reflect() const;
    /// Drops every term of degree > order.
    UPoly truncated(long order) const;
    UPoly pow(long e) const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& rhs);
    UPoly& operator-=(const UPoly& rhs);
    UPoly& operator*=(const UPoly& rhs);
    UPoly& operator*=(const ExactRational& c);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator*(UPoly a, const ExactRational& c) { return a *= c; }
    friend UPoly operator*(const ExactRational& c, UPoly a) { return a *= c; }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// "[c0, c1, ...]" with canonical rational literals.
    std::string str() const;

private:
    void trim();

    std::vector<ExactRational> coeffs_;
};

}  // namespace qbern
