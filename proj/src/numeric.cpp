#include "qbern/numeric.hpp"

#include "qbern/errors.hpp"

namespace qbern {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

long strip_factor(BigInt n, long p) {
    long v = 0;
    const BigInt bp(p);
    while (n != 0 && mpz_divisible_p(n.get_mpz_t(), bp.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), bp.get_mpz_t());
        ++v;
    }
    return v;
}

}  // namespace

Valuation padic_valuation(const ExactRational& r, long p) {
    if (p % 2 == 0 || !is_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
    if (r.is_zero()) return Valuation::infinity();
    return Valuation::finite(strip_factor(r.numerator(), p) - strip_factor(r.denominator(), p));
}

ExactRational int_pow(const ExactRational& r, long k) {
    if (k < 0) {
        if (r.is_zero()) throw DomainError("zero raised to a negative power");
        return int_pow(ExactRational(r.denominator(), r.numerator()), -k);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), r.numerator().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), r.denominator().get_mpz_t(), static_cast<unsigned long>(k));
    return ExactRational(num, den);
}

BigInt binomial_coeff(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

}  // namespace qbern
