#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qbern/numeric.hpp"
#include "qbern/rational.hpp"
#include "qbern/upoly.hpp"

namespace qbern {

/// q-Euler numbers E_{0,q} .. E_{N,q} for one rational q, generated by the
/// umbral recurrence (qE + 1)^n + E_n = 0, n >= 1, with E_0 = 1.
///
/// Tables are immutable; extended() returns a longer copy.
class EulerTable {
public:
    /// q = 1 gives the classical Euler numbers. Throws DomainError when
    /// 1 + q^n vanishes for some n <= nmax (q = -1).
    static EulerTable build(const ExactRational& q, long nmax);

    EulerTable extended(long nmax) const;

    const ExactRational& q() const { return q_; }
    long nmax() const { return static_cast<long>(values_.size()) - 1; }
    /// Throws std::out_of_range past nmax().
    const ExactRational& at(long n) const;
    const std::vector<ExactRational>& values() const { return values_; }

private:
    EulerTable(ExactRational q, std::vector<ExactRational> values) : q_(std::move(q)), values_(std::move(values)) {}

    ExactRational q_;
    std::vector<ExactRational> values_;
};

EulerTable euler_table(const ExactRational& q, long nmax);

/// E_{n,q} = 2/(1-q)^n sum_l C(n,l) (-1)^l / (1 + q^l). Rejects q = 1 and q = -1.
ExactRational euler_closed(long n, const ExactRational& q);

/// E_{n,q}(x) = sum_l C(n,l) q^(l x) E_{l,q} [x]_q^(n-l) for integer x.
ExactRational euler_poly(long n, long x, const ExactRational& q);
ExactRational euler_poly(long n, long x, const EulerTable& table);

/// Closed sum 2/(1-q)^n sum_l C(n,l) (-1)^l q^(l x) / (1 + q^l); cross-check for euler_poly.
ExactRational euler_poly_closed(long n, long x, const ExactRational& q);

/// Floating-point E_{n,q}(x) for real x and q > 0, q != 1.
double euler_poly_real(long n, double x, double q);

/// E_{m,q}(shift) + (-1)^(shift-1) E_{m,q}
ExactRational shift_moment(long shift, long m, const ExactRational& q);
/// 2 sum_{l<shift} (-1)^(shift-l-1) [l]_q^m, what shift_moment must equal.
ExactRational shift_moment_rhs(long shift, long m, const ExactRational& q);

/// (E_{n,1/q}(1-x), (-1)^n q^n E_{n,q}(x)); the components agree.
std::pair<ExactRational, ExactRational> reflection_check(long n, long x, const ExactRational& q);

/// sum_l C(n,l) (-1)^l E_{l,q}, the moment of (1 - [x]_q)^n.
ExactRational complement_moment(long n, const ExactRational& q);
ExactRational complement_moment(long n, const EulerTable& table);
/// What complement_moment equals: 2 + E_{n,1/q} for n >= 1, and 1 for n = 0.
ExactRational complement_moment_reflected(long n, const ExactRational& q);

/// Checks that q is admissible for the fermionic-sum oracle at prime p:
/// p an odd prime, v_p(q) >= 0 and v_p(q - 1) >= 1. Throws DomainError otherwise.
void require_padic_regime(const ExactRational& q, long p);

/// S_N = sum_{x=0}^{p^N - 1} (-1)^x [x]_q^n
ExactRational fermionic_sum(long n, const ExactRational& q, long p, long level);

/// S_N for an arbitrary integrand given as a polynomial in u = [x]_q.
ExactRational fermionic_sum(const UPoly& integrand, const ExactRational& q, long p, long level);

namespace printed {

/// E_{n,q}(x) as sum_l C(n,l) q^(l x) E_{l,q}, missing the [x]_q^(n-l) factor.
ExactRational euler_poly(long n, long x, const ExactRational& q);

/// 2 + E_{n,q}, the unreflected right side for the complement moment.
ExactRational complement_moment(long n, const ExactRational& q);

}  // namespace printed

}  // namespace qbern
