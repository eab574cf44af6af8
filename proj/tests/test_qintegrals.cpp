#include <doctest.h>

#include "qbern/errors.hpp"
#include "qbern/qbernstein.hpp"
#include "qbern/qeuler.hpp"
#include "qbern/qintegrals.hpp"

using namespace qbern;

namespace {
const ExactRational half(1, 2);
const std::vector<ExactRational> samples = {ExactRational(1, 2), ExactRational(2, 3), ExactRational(3, 5),
                                            ExactRational(5, 4), ExactRational(3)};

// Moment of a polynomial integrand, coefficient by coefficient.
ExactRational moment_of(const UPoly& p, const ExactRational& q) {
    const EulerTable t = euler_table(q, std::max(p.degree(), 0L));
    ExactRational acc;
    for (long l = 0; l <= p.degree(); ++l) acc += p.coeff(l) * t.at(l);
    return acc;
}
}  // namespace

TEST_CASE("integral_basis examples") {
    CHECK(integral_basis(1, 2, half) == ExactRational(-4, 5));
    CHECK(integral_basis(0, 1, half) == ExactRational(5, 3));
    CHECK(integral_basis(0, 1, half) == complement_moment(1, half));
    for (long n = 0; n <= 6; ++n) CHECK(integral_basis(n, n, half) == euler_table(half, n).at(n));
    CHECK(integral_basis(4, 2, half) == 0);
    CHECK_THROWS_AS(integral_basis(1, 2, ExactRational(1)), DomainError);
    CHECK_THROWS_AS(integral_basis(1, 2, ExactRational(0)), DomainError);
    CHECK_THROWS_AS(integral_basis(1, 2, ExactRational(-1)), DomainError);
}

TEST_CASE("integral_basis equals the moment of the expanded basis") {
    for (const auto& q : samples)
        for (long n = 0; n <= 10; ++n)
            for (long k = 0; k <= n; ++k) CHECK(integral_basis(k, n, q) == moment_of(basis_upoly({k, n}), q));
}

TEST_CASE("integral_basis_reflected") {
    CHECK(integral_basis_reflected(1, 3, half) == ExactRational(2, 15));
    CHECK(integral_basis(1, 3, half) == ExactRational(2, 15));
    CHECK(integral_basis_reflected(0, 2, half) == ExactRational(31, 15));
    for (const auto& q : samples) {
        const EulerMoments mo = EulerMoments::build(q, 10);
        for (long n = 1; n <= 10; ++n)
            for (long k = 0; k < n; ++k) CHECK(integral_basis_reflected(k, n, mo) == integral_basis(k, n, mo));
    }
    CHECK_THROWS_AS(integral_basis_reflected(2, 2, half), DomainError);
    CHECK_THROWS_AS(integral_basis_reflected(3, 2, half), DomainError);
}

TEST_CASE("printed reflected basis integral is separated at (k, n) = (1, 3)") {
    const EulerMoments mo = EulerMoments::build(half, 3);
    CHECK(printed::integral_basis_reflected(1, 3, mo) == ExactRational(-4, 3));
    CHECK(printed::integral_basis_reflected(1, 3, mo) != integral_basis(1, 3, mo));
}

TEST_CASE("integrals of the partition of unity") {
    for (const auto& q : samples)
        for (long n = 0; n <= 10; ++n) {
            ExactRational sum;
            for (long k = 0; k <= n; ++k) sum += integral_basis(k, n, q);
            CHECK(sum == 1);
        }
}

TEST_CASE("integral_product examples") {
    const std::vector<long> two_two{2, 2};
    CHECK(integral_product(1, two_two, half, IntegralMethod::direct) == ExactRational(-16, 255));
    CHECK(integral_product(1, two_two, half, IntegralMethod::reflected) == ExactRational(-16, 255));
    const std::vector<long> one_one{1, 1};
    CHECK(integral_product(0, one_one, half, IntegralMethod::direct) == ExactRational(31, 15));
    CHECK(integral_product(0, one_one, half, IntegralMethod::reflected) == ExactRational(31, 15));
    CHECK(complement_moment(2, half) == ExactRational(31, 15));
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k) {
            const std::vector<long> single{n};
            CHECK(integral_product(k, single, half, IntegralMethod::direct) == integral_basis(k, n, half));
        }
    const std::vector<long> small{1, 1};
    CHECK_THROWS_AS(integral_product(1, small, half, IntegralMethod::reflected), DomainError);
}

TEST_CASE("direct and reflected product integrals agree") {
    for (const auto& q : {ExactRational(1, 2), ExactRational(2, 3), ExactRational(3, 5), ExactRational(5, 4)}) {
        const EulerMoments mo = EulerMoments::build(q, 15);
        for (long a = 0; a <= 5; ++a)
            for (long b = 0; b <= 5; ++b)
                for (long c = -1; c <= 5; ++c) {
                    std::vector<long> ns{a, b};
                    if (c >= 0) ns.push_back(c);
                    const long s = static_cast<long>(ns.size());
                    const long total = a + b + std::max(c, 0L);
                    for (long k = 0; k <= 2; ++k) {
                        if (total <= s * k) continue;
                        CHECK(integral_product(k, ns, mo, IntegralMethod::direct) ==
                              integral_product(k, ns, mo, IntegralMethod::reflected));
                    }
                    if (total > 0)
                        CHECK(integral_product(0, ns, mo, IntegralMethod::direct) == 2 + mo.reflected(total));
                }
    }
}

TEST_CASE("product integral equals the moment of the multiplied basis") {
    for (const auto& q : {ExactRational(2, 3), ExactRational(3)}) {
        for (long k = 0; k <= 2; ++k) {
            const std::vector<long> ns{2, 3, 4};
            UPoly prod = UPoly::constant(1);
            for (long n : ns) prod *= basis_upoly({k, n});
            CHECK(integral_product(k, ns, q, IntegralMethod::direct) == moment_of(prod, q));
        }
    }
}

TEST_CASE("printed reflected product form at a coincidental and a separating instance") {
    const EulerMoments mo = EulerMoments::build(half, 6);
    const std::vector<long> two_two{2, 2};
    // this instance does not separate the forms
    CHECK(printed::integral_product_reflected(1, two_two, mo) == integral_product(1, two_two, mo, IntegralMethod::direct));
    const std::vector<long> three{3};
    CHECK(printed::integral_product_reflected(1, three, mo) != integral_product(1, three, mo, IntegralMethod::direct));
    const std::vector<long> one_one{1, 1};
    CHECK(printed::integral_product_reflected(0, one_one, mo) == 2 + mo.forward(2));
    CHECK(printed::integral_product_reflected(0, one_one, mo) != ExactRational(31, 15));
}

TEST_CASE("integral_power_product") {
    IntegralInstance inst{1, {{2, 2}}, half};
    CHECK(integral_power_product(inst, IntegralMethod::direct) == ExactRational(-16, 255));
    CHECK(integral_power_product(inst, IntegralMethod::reflected) == ExactRational(-16, 255));
    IntegralInstance zero{0, {{1, 2}}, half};
    CHECK(integral_power_product(zero, IntegralMethod::direct) == ExactRational(31, 15));
    CHECK(integral_power_product(zero, IntegralMethod::reflected) == ExactRational(31, 15));

    for (const auto& q : samples) {
        const EulerMoments mo = EulerMoments::build(q, 16);
        for (long k = 0; k <= 2; ++k)
            for (long n1 = 0; n1 <= 4; ++n1)
                for (long m1 = 1; m1 <= 2; ++m1)
                    for (long n2 = 0; n2 <= 4; ++n2)
                        for (long m2 = 1; m2 <= 2; ++m2) {
                            IntegralInstance pi{k, {{n1, m1}, {n2, m2}}, q};
                            const ExactRational direct = integral_power_product(pi, mo, IntegralMethod::direct);
                            const UPoly prod = basis_upoly({k, n1}).pow(m1) * basis_upoly({k, n2}).pow(m2);
                            CHECK(direct == moment_of(prod, q));
                            if (pi.total_degree() > k * pi.total_power())
                                CHECK(integral_power_product(pi, mo, IntegralMethod::reflected) == direct);
                            if (m1 == 1 && m2 == 1) {
                                const std::vector<long> ns{n1, n2};
                                CHECK(direct == integral_product(k, ns, mo, IntegralMethod::direct));
                            }
                        }
    }
}

TEST_CASE("integral_power_product preconditions") {
    CHECK_THROWS_AS(integral_power_product(IntegralInstance{1, {{2, 0}}, half}, IntegralMethod::direct), DomainError);
    CHECK_THROWS_AS(integral_power_product(IntegralInstance{2, {{2, 3}}, half}, IntegralMethod::reflected),
                    DomainError);
    CHECK_THROWS_AS(integral_power_product(IntegralInstance{1, {{2, 1}}, ExactRational(1)}, IntegralMethod::direct),
                    DomainError);
}

TEST_CASE("basis integrals match the truncated fermionic sums p-adically") {
    const ExactRational q4(4);
    for (long n = 0; n <= 3; ++n)
        for (long k = 0; k <= n; ++k) {
            const ExactRational value = integral_basis(k, n, q4);
            for (long level = 1; level <= 4; ++level)
                CHECK(padic_valuation(fermionic_sum(basis_upoly({k, n}), q4, 3, level) - value, 3) >= level);
        }
}
