#include <doctest.h>

#include <cmath>
#include <random>

#include "qbern/errors.hpp"
#include "qbern/qcore.hpp"

using namespace qbern;

namespace {
const ExactRational half(1, 2);
}

TEST_CASE("q_number_int examples") {
    CHECK(q_number_int(0, half) == 0);
    CHECK(q_number_int(3, half) == ExactRational(7, 4));
    CHECK(q_number_int(-1, half) == -2);
    CHECK(q_number_int(5, ExactRational(1)) == 5);
    CHECK(q_number_int(-3, ExactRational(1)) == -3);
    CHECK(q_number_int(4, ExactRational(0)) == 1);
    CHECK_THROWS_AS(q_number_int(-1, ExactRational(0)), DomainError);
    CHECK_THROWS_AS(q_number_int(2, QContext::real(0.5)), DomainError);
}

TEST_CASE("q_number_int addition rule") {
    for (const auto& q : {half, ExactRational(2, 3), ExactRational(5, 4)})
        for (long a = -10; a <= 10; ++a)
            for (long b = -10; b <= 10; ++b)
                CHECK(q_number_int(a + b, q) == q_number_int(a, q) + int_pow(q, a) * q_number_int(b, q));
}

TEST_CASE("q_number_real") {
    CHECK(q_number_real(0.5, 0.5) == doctest::Approx((1.0 - std::sqrt(0.5)) / 0.5).epsilon(1e-14));
    CHECK(q_number_real(0.5, 0.5) == doctest::Approx(0.585786).epsilon(1e-6));
    for (double q : {0.2, 0.9, 3.0}) CHECK(q_number_real(1.0, q) == doctest::Approx(1.0).epsilon(1e-15));
    for (double x : {0.0, 0.3, 0.77, 1.0}) CHECK(std::fabs(q_number_real(x, 1.0 - 1e-9) - x) < 1e-6);
    CHECK(q_number_real(0.4, 1.0) == 0.4);
    CHECK_THROWS_AS(q_number_real(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(q_number_real(0.5, -2.0), DomainError);
}

TEST_CASE("complement identity [1-x]_{1/q} = 1 - [x]_q") {
    for (double q : {0.3, 0.7, 1.5})
        for (int i = 0; i <= 10; ++i) {
            const double x = i / 10.0;
            CHECK(std::fabs(q_number_real(1.0 - x, 1.0 / q) - (1.0 - q_number_real(x, q))) <= 1e-12);
        }
    for (const auto& q : {half, ExactRational(3, 7), ExactRational(5, 2)})
        for (long x = -4; x <= 5; ++x) CHECK(q_number_int(1 - x, ExactRational(1) / q) == 1 - q_number_int(x, q));
}

TEST_CASE("q_factorial") {
    CHECK(q_factorial(0, ExactRational(9, 7)) == 1);
    CHECK(q_factorial(3, half) == ExactRational(21, 8));
    CHECK(q_factorial(4, ExactRational(1)) == 24);
}

TEST_CASE("gaussian_binomial") {
    CHECK(gaussian_binomial(2, 1, half) == ExactRational(3, 2));
    CHECK(gaussian_binomial(4, 2, ExactRational(2)) == 35);
    CHECK(gaussian_binomial(7, 0, half) == 1);
    CHECK(gaussian_binomial(7, 8, half) == 0);
    CHECK(gaussian_binomial(7, -1, half) == 0);
    CHECK(gaussian_binomial(6, 3, ExactRational(1)) == 20);
    // factorial ratio agrees with the product form
    for (long k = 0; k <= 8; ++k)
        for (long j = 0; j <= k; ++j)
            CHECK(gaussian_binomial(k, j, half) == q_factorial(k, half) / (q_factorial(j, half) * q_factorial(k - j, half)));
}

TEST_CASE("gaussian_binomial obeys the q-Pascal rule") {
    for (const auto& q : {half, ExactRational(2, 3), ExactRational(5, 4), ExactRational(1), ExactRational(-3)})
        for (long k = 1; k <= 12; ++k)
            for (long j = 0; j <= k; ++j)
                CHECK(gaussian_binomial(k, j, q) ==
                      gaussian_binomial(k - 1, j - 1, q) + int_pow(q, j) * gaussian_binomial(k - 1, j, q));
}

TEST_CASE("qbinom_upoly") {
    CHECK(qbinom_upoly(0, half) == UPoly::constant(1));
    CHECK(qbinom_upoly(1, half) == UPoly::identity());
    CHECK(qbinom_upoly(2, half) == UPoly({0, ExactRational(-4, 3), ExactRational(4, 3)}));
    // q = 1: u(u-1)/2
    CHECK(qbinom_upoly(2, ExactRational(1)) == UPoly({0, ExactRational(-1, 2), ExactRational(1, 2)}));
    CHECK_THROWS_AS(qbinom_upoly(2, ExactRational(0)), DomainError);
    CHECK_THROWS_AS(qbinom_upoly(2, ExactRational(-1)), DomainError);
}

TEST_CASE("qbinom_upoly matches Gaussian binomials at integer x") {
    // at x = m >= 0, u = [m]_q and (m choose k)_q is the Gaussian binomial
    for (const auto& q : {half, ExactRational(5, 4)})
        for (long k = 0; k <= 6; ++k) {
            const UPoly p = qbinom_upoly(k, q);
            CHECK(p.degree() == k);
            for (long m = 0; m <= 8; ++m) CHECK(p(q_number_int(m, q)) == gaussian_binomial(m, k, q));
        }
}

TEST_CASE("forward differences") {
    using V = std::vector<ExactRational>;
    CHECK(forward_differences(V{0, 1, 4}) == V{0, 1, 2});
    CHECK(forward_differences(V{ExactRational(3, 5), ExactRational(3, 5), ExactRational(3, 5)}) ==
          V{ExactRational(3, 5), 0, 0});
    CHECK(forward_differences(V{0, 1, 8, 27}) == V{0, 1, 6, 6});
    CHECK(forward_differences_alternating(V{0, 1, 8, 27}) == V{0, 1, 6, 6});
    CHECK_THROWS_AS(forward_differences(V{}), DomainError);
    CHECK_THROWS_AS(forward_differences_alternating(V{}), DomainError);
}

TEST_CASE("forward difference routes agree on random samples") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 12), len(1, 14);
    for (int t = 0; t < 50; ++t) {
        std::vector<ExactRational> s;
        const long n = len(rng);
        for (long i = 0; i < n; ++i) s.emplace_back(num(rng), den(rng));
        CHECK(forward_differences(s) == forward_differences_alternating(s));
    }
}

TEST_CASE("stirling2") {
    for (long n = 0; n <= 10; ++n) CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(2, 5) == 0);
    CHECK(stirling2(10, 4) == 34105);
    for (long m = 1; m <= 12; ++m)
        for (long k = 1; k <= m; ++k) CHECK(stirling2(m, k) == k * stirling2(m - 1, k) + stirling2(m - 1, k - 1));
}
