#pragma once

#include <span>
#include <vector>

#include "qbern/qeuler.hpp"
#include "qbern/rational.hpp"

namespace qbern {

/// q-Euler tables for q and for the reflected parameter 1/q, sized together.
/// The fermionic moments of products of q-Bernstein polynomials are linear
/// in these values.
class EulerMoments {
public:
    /// Rejects q in {0, 1, -1}.
    static EulerMoments build(const ExactRational& q, long nmax);

    const ExactRational& q() const { return forward_.q(); }
    long nmax() const { return forward_.nmax(); }
    /// E_{n,q}
    const ExactRational& forward(long n) const { return forward_.at(n); }
    /// E_{n,1/q}
    const ExactRational& reflected(long n) const { return reflected_.at(n); }

private:
    EulerMoments(EulerTable forward, EulerTable reflected)
        : forward_(std::move(forward)), reflected_(std::move(reflected)) {}

    EulerTable forward_;
    EulerTable reflected_;
};

enum class IntegralMethod { direct, reflected };

/// Integral of B_{k,n}: C(n,k) sum_l C(n-k,l) (-1)^l E_{k+l,q}. Zero when n < k.
ExactRational integral_basis(long k, long n, const ExactRational& q);
ExactRational integral_basis(long k, long n, const EulerMoments& moments);

/// The same integral via the symmetry B_{k,n}(x,q) = B_{n-k,n}(1-x,1/q):
/// 2 + E_{n,1/q} for k = 0, else C(n,k) sum_j C(k,j) (-1)^(k+j) E_{n-j,1/q}.
/// Requires n > k.
ExactRational integral_basis_reflected(long k, long n, const ExactRational& q);
ExactRational integral_basis_reflected(long k, long n, const EulerMoments& moments);

/// Integral of prod_i B_{k,n_i}. With N = sum n_i and s = ns.size():
///   direct:    prod C(n_i,k) sum_{j<=N-sk} C(N-sk,j) (-1)^j E_{j+sk,q}
///   reflected: 2 + E_{N,1/q} for k = 0, else
///              prod C(n_i,k) sum_{j<=sk} C(sk,j) (-1)^(sk-j) E_{N-j,1/q}; requires N > sk.
ExactRational integral_product(long k, std::span<const long> ns, const ExactRational& q, IntegralMethod method);
ExactRational integral_product(long k, std::span<const long> ns, const EulerMoments& moments, IntegralMethod method);

struct DegreePower {
    long n = 0;
    long m = 1;
};

/// Integral of prod_i B_{k,n_i}^{m_i}.
struct IntegralInstance {
    long k = 0;
    std::vector<DegreePower> degrees;
    ExactRational q;

    /// sum_i m_i
    long total_power() const;
    /// sum_i m_i n_i
    long total_degree() const;
};

/// direct:    prod C(n_i,k)^{m_i} sum_j C(D-kM,j) (-1)^j E_{j+kM,q}
/// reflected: prod C(n_i,k)^{m_i} sum_{j<=kM} C(kM,j) (-1)^(kM-j) (2 + E_{D-j,1/q}); requires D > kM
/// with M = sum m_i and D = sum m_i n_i.
ExactRational integral_power_product(const IntegralInstance& instance, IntegralMethod method);
ExactRational integral_power_product(const IntegralInstance& instance, const EulerMoments& moments,
                                     IntegralMethod method);

namespace printed {

/// Reflected forms with E_{.,q} where E_{.,1/q} belongs.
ExactRational integral_basis_reflected(long k, long n, const EulerMoments& moments);
ExactRational integral_product_reflected(long k, std::span<const long> ns, const EulerMoments& moments);
ExactRational integral_power_product(const IntegralInstance& instance, const EulerMoments& moments);

}  // namespace printed

}  // namespace qbern
