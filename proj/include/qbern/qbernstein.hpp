#pragma once

#include <array>
#include <span>
#include <vector>

#include "qbern/rational.hpp"
#include "qbern/upoly.hpp"

namespace qbern {

/// Index (k, n) of the basis polynomial B_{k,n}(x, q) = C(n,k) [x]_q^k [1-x]_{1/q}^{n-k}.
/// k > n is allowed; those elements vanish identically.
struct BernsteinIndex {
    long k = 0;
    long n = 0;

    friend bool operator==(const BernsteinIndex&, const BernsteinIndex&) = default;
};

/// B_{k,n} at u = [x]_q, using [1-x]_{1/q} = 1 - u. Zero when n < k or k < 0.
ExactRational basis_eval_exact(BernsteinIndex idx, const ExactRational& u);

/// B_{k,n}(x, q) in floating point. q = 1 gives the classical basis.
double basis_eval_real(BernsteinIndex idx, double x, double q);

/// B_{k,n} expanded in powers of u:
/// coefficient of u^l is (-1)^(l-k) C(n,l) C(l,k) for k <= l <= n.
UPoly basis_upoly(BernsteinIndex idx);

/// Evaluates sum_k coeffs[k] B_{k,n}(u), n = coeffs.size() - 1, by repeated
/// convex combination c_k <- (1-u) c_k + u c_{k+1}.
ExactRational decasteljau_eval(std::span<const ExactRational> coeffs, const ExactRational& u);

/// d/dx B_{k,n}(x, q) = n (B_{k-1,n-1} - B_{k,n-1}) (log q / (q-1)) q^x.
double basis_derivative(BernsteinIndex idx, double x, double q);

struct BernsteinTerm {
    ExactRational coeff;
    BernsteinIndex idx;
};

/// B_{k,n} = ((n+1-k)/(n+1)) B_{k,n+1} + ((k+1)/(n+1)) B_{k+1,n+1}
std::array<BernsteinTerm, 2> degree_elevate(BernsteinIndex idx);

/// Coefficients c_0..c_n with sum_k c_k B_{k,n} = u^j, namely c_k = C(k,j)/C(n,j).
std::vector<ExactRational> monomial_in_basis(long j, long n);

enum class OperatorMethod { direct, kim, difference };

/// The q-Bernstein operator sum_k f(k/n) B_{k,n}(x, q) at u = [x]_q, where
/// samples[k] = f(k/n) and n = samples.size() - 1.
///   direct:     sum_k f(k/n) B_{k,n}(u)
///   kim:        sum_m C(n,m) u^m sum_k C(m,k) (-1)^(m-k) f(k/n)
///   difference: sum_k C(n,k) u^k Delta^k f(0)
ExactRational operator_apply(std::span<const ExactRational> samples, const ExactRational& u,
                             OperatorMethod method);

/// As above with the order n stated; throws DomainError unless samples.size() == n + 1.
ExactRational operator_apply(std::span<const ExactRational> samples, long n, const ExactRational& u,
                             OperatorMethod method);

/// Floating-point operator value sum_k f(k/n) B_{k,n}(x, q).
double operator_apply_real(std::span<const ExactRational> samples, double x, double q);

/// Coefficients of t^m/m!, m = 0..order, in (t u)^k e^{(1-u) t} / k!, obtained
/// by multiplying truncated power series. Entry m equals B_{k,m}(u).
std::vector<ExactRational> generating_coeffs(long k, const ExactRational& u, long order);

}  // namespace qbern

namespace qbern::printed {

/// Monomial expansion with coefficient (-1)^(l-k) C(l,k) C(n,k), the
/// misstated form of the expansion in basis_upoly.
UPoly basis_upoly(BernsteinIndex idx);

}  // namespace qbern::printed
