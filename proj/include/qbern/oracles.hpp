#pragma once

#include <functional>
#include <vector>

#include "qbern/numeric.hpp"
#include "qbern/qbernstein.hpp"
#include "qbern/upoly.hpp"

// Reference computations that share no code path with the routines they
// check. The verifier pits each library routine against one of these.
namespace qbern::oracle {

/// C(n,k) u^k (1-u)^{n-k} by repeated polynomial multiplication.
UPoly bernstein_by_product(BernsteinIndex idx);

/// (f(x+h) - f(x-h)) / 2h
double central_difference(const std::function<double(double)>& f, double x, double h);

/// v_p(S_N - E_{n,q}) for N = 1..levels, where S_N is the truncated fermionic sum.
std::vector<Valuation> fermionic_convergence(long n, const ExactRational& q, long p, long levels);

}  // namespace qbern::oracle
