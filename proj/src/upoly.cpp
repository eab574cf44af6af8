#include "qbern/upoly.hpp"

#include <algorithm>

#include "qbern/errors.hpp"
#include "qbern/numeric.hpp"

namespace qbern {

UPoly::UPoly(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const ExactRational& c) { return UPoly({c}); }

UPoly UPoly::monomial(long power, const ExactRational& c) {
    if (power < 0) throw DomainError("negative monomial power");
    std::vector<ExactRational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactRational UPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

ExactRational UPoly::operator()(const ExactRational& u) const {
    ExactRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

double UPoly::operator()(double u) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + it->to_double();
    return acc;
}

UPoly UPoly::reflect() const {
    // sum_i c_i (1-u)^i, expanded binomially
    std::vector<ExactRational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j <= i; ++j)
            out[j] += coeffs_[i] * ExactRational(binomial_coeff(static_cast<long>(i), static_cast<long>(j))) *
                      sign_pow(static_cast<long>(j));
    }
    return UPoly(std::move(out));
}

UPoly UPoly::truncated(long order) const {
    if (order < 0) return UPoly();
    std::vector<ExactRational> out(coeffs_.begin(),
                                   coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), order + 1));
    return UPoly(std::move(out));
}

UPoly UPoly::pow(long e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    UPoly result = constant(1);
    UPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

UPoly UPoly::operator-() const {
    UPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<ExactRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const ExactRational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

std::string UPoly::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeffs_[i].str();
    }
    return out + "]";
}

}  // namespace qbern
