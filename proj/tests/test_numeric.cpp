#include <doctest.h>

#include <random>

#include "qbern/errors.hpp"
#include "qbern/numeric.hpp"
#include "qbern/rational.hpp"

using namespace qbern;

TEST_CASE("rational literals are canonical") {
    CHECK(ExactRational::parse("6/4").str() == "3/2");
    CHECK(ExactRational::parse("-2/3").str() == "-2/3");
}

TEST_CASE("rational parse rejects malformed text") {
    CHECK_THROWS_AS(ExactRational::parse(""), ParseError);
    CHECK_THROWS_AS(ExactRational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(ExactRational::parse("a/2"), ParseError);
    CHECK_THROWS_AS(ExactRational::parse("1/"), ParseError);
    CHECK_THROWS_AS(ExactRational::parse("4/-1"), ParseError);
    CHECK_THROWS_AS(ExactRational::parse("."), ParseError);
}

TEST_CASE("rational basics") {
    CHECK(ExactRational(0).str() == "0");
    CHECK(ExactRational(-6, 4) == ExactRational(-3, 2));
    CHECK(ExactRational(3, -6).denominator() == 2);
    CHECK(ExactRational::parse("-0.125") == ExactRational(-1, 8));
    CHECK(ExactRational::parse("+7") == 7);
    CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), DomainError);
    CHECK(ExactRational(1, 3) < ExactRational(1, 2));
}

TEST_CASE("format then parse round-trips to lowest terms") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
    for (int i = 0; i < 500; ++i) {
        const long a = num(rng), b = den(rng);
        const ExactRational r(a, b);
        const ExactRational back = ExactRational::parse(r.str());
        CHECK(back == r);
        CHECK(back.str() == r.str());
        const BigInt num_abs = abs(r.numerator());
        const BigInt g = gcd(num_abs, r.denominator());
        CHECK(g == 1);
    }
}

TEST_CASE("padic_valuation examples") {
    CHECK(padic_valuation(ExactRational(21, 5), 3) == Valuation::finite(1));
    CHECK(padic_valuation(ExactRational(9, 2), 3) == Valuation::finite(2));
    CHECK(padic_valuation(ExactRational(5, 27), 3) == Valuation::finite(-3));
    CHECK(padic_valuation(ExactRational(0), 5).is_infinite());
    CHECK(padic_valuation(ExactRational(0), 5) >= 1000000);
}

TEST_CASE("padic_valuation rejects even or composite p") {
    CHECK_THROWS_AS(padic_valuation(ExactRational(8), 2), DomainError);
    CHECK_THROWS_AS(padic_valuation(ExactRational(8), 9), DomainError);
    CHECK_THROWS_AS(padic_valuation(ExactRational(8), 1), DomainError);
}

TEST_CASE("padic_valuation is additive over products") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-3000, 3000), den(1, 3000);
    for (long p : {3L, 5L, 7L}) {
        for (int i = 0; i < 300; ++i) {
            const ExactRational a(num(rng), den(rng)), b(num(rng), den(rng));
            if (a.is_zero() || b.is_zero()) continue;
            CHECK(padic_valuation(a * b, p).value() == padic_valuation(a, p).value() + padic_valuation(b, p).value());
        }
    }
}

TEST_CASE("int_pow") {
    CHECK(int_pow(ExactRational(2, 3), 3) == ExactRational(8, 27));
    CHECK(int_pow(ExactRational(-7, 5), 0) == 1);
    CHECK(int_pow(ExactRational(0), 0) == 1);
    CHECK(int_pow(ExactRational(1, 2), -1) == 2);
    CHECK(int_pow(ExactRational(-2, 3), -3) == ExactRational(-27, 8));
    CHECK_THROWS_AS(int_pow(ExactRational(0), -2), DomainError);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial_coeff(3, 2) == 3);
    CHECK(binomial_coeff(6, 3) == 20);
    CHECK(binomial_coeff(9, 0) == 1);
    CHECK(binomial_coeff(4, 5) == 0);
    CHECK(binomial_coeff(4, -1) == 0);
    for (long n = 2; n <= 30; ++n)
        for (long k = 1; k <= n - 1; ++k)
            CHECK(binomial_coeff(n, k) == binomial_coeff(n - 1, k - 1) + binomial_coeff(n - 1, k));
}
