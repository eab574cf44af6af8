#include "qbern/rational.hpp"

#include <ostream>

#include "qbern/errors.hpp"

namespace qbern {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

BigInt parse_natural(std::string_view s, std::string_view whole) {
    if (!all_digits(s)) throw ParseError("malformed rational literal '" + std::string(whole) + "'");
    return BigInt(std::string(s), 10);
}

}  // namespace

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw DomainError("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    ExactRational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_natural(body.substr(0, slash), text);
        BigInt den = parse_natural(body.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        out = ExactRational(num, den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw ParseError("malformed rational literal '" + std::string(text) + "'");
        BigInt w = whole.empty() ? BigInt(0) : parse_natural(whole, text);
        BigInt f = frac.empty() ? BigInt(0) : parse_natural(frac, text);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        out = ExactRational(w * scale + f, scale);
    } else {
        out = ExactRational(parse_natural(body, text));
    }
    return negative ? -out : out;
}

std::string ExactRational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational ExactRational::operator-() const {
    ExactRational r;
    r.value_ = -value_;
    return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

}  // namespace qbern
