#include "qbern/oracles.hpp"

#include "qbern/errors.hpp"
#include "qbern/qeuler.hpp"

namespace qbern::oracle {

UPoly bernstein_by_product(BernsteinIndex idx) {
    if (idx.k < 0 || idx.k > idx.n) return UPoly();
    const UPoly u = UPoly::identity();
    const UPoly one_minus_u({ExactRational(1), ExactRational(-1)});
    UPoly out = UPoly::constant(ExactRational(binomial_coeff(idx.n, idx.k)));
    for (long i = 0; i < idx.k; ++i) out *= u;
    for (long i = idx.k; i < idx.n; ++i) out *= one_minus_u;
    return out;
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

std::vector<Valuation> fermionic_convergence(long n, const ExactRational& q, long p, long levels) {
    if (levels < 1) throw DomainError("levels must be at least 1");
    const EulerTable table = EulerTable::build(q, n);
    std::vector<Valuation> out;
    out.reserve(static_cast<std::size_t>(levels));
    for (long level = 1; level <= levels; ++level)
        out.push_back(padic_valuation(fermionic_sum(n, q, p, level) - table.at(n), p));
    return out;
}

}  // namespace qbern::oracle
