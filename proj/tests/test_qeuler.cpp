#include <doctest.h>

#include <cmath>

#include "qbern/errors.hpp"
#include "qbern/oracles.hpp"
#include "qbern/qcore.hpp"
#include "qbern/qeuler.hpp"

using namespace qbern;

namespace {
const ExactRational half(1, 2);
const std::vector<ExactRational> samples = {ExactRational(1, 2), ExactRational(2, 3), ExactRational(3, 5),
                                            ExactRational(5, 4), ExactRational(3)};
}  // namespace

TEST_CASE("euler_table values") {
    const EulerTable t = euler_table(half, 4);
    CHECK(t.at(0) == 1);
    CHECK(t.at(1) == ExactRational(-2, 3));
    CHECK(t.at(2) == ExactRational(-4, 15));
    CHECK(t.at(3) == ExactRational(8, 45));
    CHECK(t.at(4) == ExactRational(464, 765));
    const EulerTable t2 = euler_table(ExactRational(2), 4);
    CHECK(t2.at(1) == ExactRational(-1, 3));
    CHECK(t2.at(2) == ExactRational(1, 15));
    CHECK(t2.at(3) == ExactRational(1, 45));
    CHECK(t2.at(4) == ExactRational(-29, 765));
    CHECK_THROWS_AS(t.at(5), std::out_of_range);
}

TEST_CASE("euler_table recurrence invariant") {
    for (const auto& q : samples) {
        const EulerTable t = euler_table(q, 15);
        for (long n = 1; n <= 15; ++n) {
            ExactRational lhs;
            for (long l = 0; l <= n; ++l) lhs += ExactRational(binomial_coeff(n, l)) * int_pow(q, l) * t.at(l);
            CHECK(lhs + t.at(n) == 0);
        }
    }
}

TEST_CASE("classical Euler numbers at q = 1") {
    const EulerTable t = euler_table(ExactRational(1), 6);
    // E_n = E_n(0): 1, -1/2, 0, 1/4, 0, -1/2, 0
    CHECK(t.values() ==
          std::vector<ExactRational>{1, ExactRational(-1, 2), 0, ExactRational(1, 4), 0, ExactRational(-1, 2), 0});
}

TEST_CASE("euler_table rejects q = -1") { CHECK_THROWS_AS(euler_table(ExactRational(-1), 3), DomainError); }

TEST_CASE("extended tables are new values") {
    const EulerTable t = euler_table(half, 3);
    const EulerTable longer = t.extended(8);
    CHECK(t.nmax() == 3);
    CHECK(longer.nmax() == 8);
    CHECK(longer.at(4) == ExactRational(464, 765));
    CHECK(longer.values() == euler_table(half, 8).values());
}

TEST_CASE("euler_closed matches the recurrence") {
    CHECK(euler_closed(0, ExactRational(7, 3)) == 1);
    CHECK(euler_closed(1, half) == ExactRational(-2, 3));
    CHECK(euler_closed(2, ExactRational(2)) == ExactRational(1, 15));
    for (const auto& q : samples) {
        const EulerTable t = euler_table(q, 20);
        for (long n = 0; n <= 20; ++n) CHECK(euler_closed(n, q) == t.at(n));
    }
    CHECK_THROWS_AS(euler_closed(2, ExactRational(1)), DomainError);
    CHECK_THROWS_AS(euler_closed(2, ExactRational(-1)), DomainError);
}

TEST_CASE("euler_poly") {
    const EulerTable t = euler_table(half, 10);
    for (long n = 0; n <= 10; ++n) CHECK(euler_poly(n, 0, half) == t.at(n));
    CHECK(euler_poly(1, 1, half) == ExactRational(2, 3));
    CHECK(euler_poly(1, 2, half) == ExactRational(4, 3));
    for (const auto& q : samples)
        for (long n = 0; n <= 8; ++n)
            for (long x = -3; x <= 4; ++x) CHECK(euler_poly(n, x, q) == euler_poly_closed(n, x, q));
    CHECK_THROWS_AS(euler_poly(2, 1, ExactRational(1)), DomainError);
}

TEST_CASE("euler_poly addition rule as a fermionic moment") {
    // E_{n,q}(x) is the moment of [y+x]_q^n = ([x]_q + q^x [y]_q)^n: expand and integrate term-wise
    for (const auto& q : samples) {
        const EulerTable t = euler_table(q, 6);
        for (long x = -2; x <= 3; ++x)
            for (long n = 0; n <= 6; ++n) {
                const UPoly shifted = UPoly({q_number_int(x, q), int_pow(q, x)}).pow(n);
                ExactRational moment;
                for (long l = 0; l <= n; ++l) moment += shifted.coeff(l) * t.at(l);
                CHECK(euler_poly(n, x, q) == moment);
            }
    }
}

TEST_CASE("euler_poly_real agrees with the exact value") {
    for (double q : {0.5, 1.25, 3.0})
        for (long x = -1; x <= 2; ++x)
            for (long n = 0; n <= 5; ++n) {
                const ExactRational qe = ExactRational::parse(q == 0.5 ? "1/2" : (q == 1.25 ? "5/4" : "3"));
                CHECK(euler_poly_real(n, double(x), q) == doctest::Approx(euler_poly(n, x, qe).to_double()).epsilon(1e-10));
            }
    CHECK_THROWS_AS(euler_poly_real(2, 0.5, 1.0), DomainError);
}

TEST_CASE("shift_moment") {
    CHECK(shift_moment(1, 1, half) == 0);
    CHECK(shift_moment(1, 0, ExactRational(7, 5)) == 2);
    CHECK(shift_moment(2, 1, half) == 2);
    for (const auto& q : samples)
        for (long shift = 1; shift <= 4; ++shift)
            for (long m = 0; m <= 8; ++m) CHECK(shift_moment(shift, m, q) == shift_moment_rhs(shift, m, q));
    CHECK_THROWS_AS(shift_moment(0, 1, half), DomainError);
}

TEST_CASE("reflection_check") {
    auto [a, b] = reflection_check(1, 0, half);
    CHECK(a == ExactRational(1, 3));
    CHECK(b == ExactRational(1, 3));
    std::tie(a, b) = reflection_check(1, 1, half);
    CHECK(a == ExactRational(-1, 3));
    CHECK(b == ExactRational(-1, 3));
    std::tie(a, b) = reflection_check(0, 5, ExactRational(4, 9));
    CHECK(a == 1);
    CHECK(b == 1);
    for (const auto& q : samples)
        for (long n = 0; n <= 10; ++n)
            for (long x = -2; x <= 3; ++x) {
                const auto [l, r] = reflection_check(n, x, q);
                CHECK(l == r);
            }
    CHECK_THROWS_AS(reflection_check(1, 0, ExactRational(0)), DomainError);
}

TEST_CASE("complement_moment") {
    CHECK(complement_moment(1, half) == ExactRational(5, 3));
    CHECK(complement_moment_reflected(1, half) == ExactRational(5, 3));
    CHECK(complement_moment(2, half) == ExactRational(31, 15));
    CHECK(complement_moment_reflected(2, half) == ExactRational(31, 15));
    CHECK(complement_moment(0, ExactRational(3)) == 1);
    CHECK(complement_moment_reflected(0, ExactRational(3)) == 1);
    for (const auto& q : samples)
        for (long n = 1; n <= 12; ++n) CHECK(complement_moment(n, q) == complement_moment_reflected(n, q));
}

TEST_CASE("printed complement moment fails at n = 1, q = 1/2") {
    CHECK(printed::complement_moment(1, half) == ExactRational(4, 3));
    CHECK(complement_moment(1, half) == ExactRational(5, 3));
}

TEST_CASE("printed euler_poly misses the [x]_q power") {
    // E_{1,q}(2) should be 2 + E_{1,q}
    const ExactRational e1 = euler_table(half, 1).at(1);
    CHECK(euler_poly(1, 2, half) == 2 + e1);
    CHECK(printed::euler_poly(1, 2, half) == 1 - half * half / (1 + half));
    CHECK(printed::euler_poly(1, 2, half) != 2 + e1);
}

TEST_CASE("fermionic_sum anchors") {
    const ExactRational q4(4);
    CHECK(fermionic_sum(1, q4, 3, 1) == 4);
    CHECK(padic_valuation(fermionic_sum(1, q4, 3, 1) - ExactRational(-1, 5), 3) == Valuation::finite(1));
    CHECK(fermionic_sum(1, q4, 3, 2) == 17476);
    CHECK(padic_valuation(ExactRational(17476) + ExactRational(1, 5), 3) == Valuation::finite(2));
    for (long level = 1; level <= 4; ++level) CHECK(fermionic_sum(0, ExactRational(7), 3, level) == 1);
}

TEST_CASE("fermionic_sum converges p-adically to E_{n,q}") {
    const ExactRational q4(4);
    for (long n = 1; n <= 4; ++n) {
        const auto v = oracle::fermionic_convergence(n, q4, 3, 5);
        for (long level = 1; level <= 5; ++level) {
            CHECK(v[std::size_t(level - 1)] >= level);
            if (level > 1) CHECK(v[std::size_t(level - 2)] < v[std::size_t(level - 1)]);
        }
    }
    for (const auto& v : oracle::fermionic_convergence(0, q4, 3, 3)) CHECK(v.is_infinite());
    // another regime: p = 5, q = 6
    for (long n = 1; n <= 3; ++n) {
        const auto v = oracle::fermionic_convergence(n, ExactRational(6), 5, 3);
        for (long level = 1; level <= 3; ++level) CHECK(v[std::size_t(level - 1)] >= level);
    }
}

TEST_CASE("fermionic_sum preconditions") {
    CHECK_THROWS_AS(fermionic_sum(1, half, 3, 2), DomainError);            // not a 3-adic integer
    CHECK_THROWS_AS(fermionic_sum(1, ExactRational(2), 3, 2), DomainError);  // |1 - q|_3 = 1
    CHECK_THROWS_AS(fermionic_sum(1, ExactRational(4), 2, 2), DomainError);
    CHECK_THROWS_AS(fermionic_sum(1, ExactRational(4), 9, 2), DomainError);
    CHECK_THROWS_AS(fermionic_sum(1, ExactRational(4), 3, 0), DomainError);
    CHECK_NOTHROW(fermionic_sum(2, ExactRational(7, 4), 3, 2));  // 7/4 - 1 = 3/4
}
