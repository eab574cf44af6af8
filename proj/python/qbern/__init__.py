"""Exact q-Bernstein, q-Euler and q-Stirling computations."""

import json
from fractions import Fraction

from . import _qbern
from ._qbern import DomainError, ParseError, UsageError

__all__ = [
    "DomainError",
    "ParseError",
    "UsageError",
    "q_number",
    "basis_eval",
    "basis_eval_real",
    "basis_derivative",
    "basis_upoly",
    "operator_apply",
    "euler_table",
    "euler_closed",
    "euler_poly",
    "complement_moment",
    "fermionic_sum",
    "padic_valuation",
    "integral_basis",
    "integral_product",
    "q_stirling2",
    "run_verify",
]


def _s(value):
    return str(Fraction(value))


def q_number(x, q):
    return Fraction(_qbern.q_number(x, _s(q)))


def basis_eval(k, n, u):
    """B_{k,n} at u = [x]_q."""
    return Fraction(_qbern.basis_eval(k, n, _s(u)))


def basis_eval_real(k, n, x, q):
    return _qbern.basis_eval_real(k, n, float(x), float(q))


def basis_derivative(k, n, x, q):
    return _qbern.basis_derivative(k, n, float(x), float(q))


def basis_upoly(k, n):
    """Coefficients of B_{k,n} in powers of u, lowest first."""
    return [Fraction(c) for c in _qbern.basis_upoly(k, n)]


def operator_apply(samples, u, method="direct"):
    return Fraction(_qbern.operator_apply([_s(s) for s in samples], _s(u), method))


def euler_table(q, nmax):
    return [Fraction(v) for v in _qbern.euler_table(_s(q), nmax)]


def euler_closed(n, q):
    return Fraction(_qbern.euler_closed(n, _s(q)))


def euler_poly(n, x, q):
    return Fraction(_qbern.euler_poly(n, x, _s(q)))


def complement_moment(n, q):
    return Fraction(_qbern.complement_moment(n, _s(q)))


def fermionic_sum(n, q, p, level):
    return Fraction(_qbern.fermionic_sum(n, _s(q), p, level))


def padic_valuation(r, p):
    return _qbern.padic_valuation(_s(r), p)


def integral_basis(k, n, q):
    return Fraction(_qbern.integral_basis(k, n, _s(q)))


def integral_product(k, ns, q, method="direct"):
    return Fraction(_qbern.integral_product(k, list(ns), _s(q), method))


def q_stirling2(n, k, q):
    return Fraction(_qbern.q_stirling2(n, k, _s(q)))


def run_verify(suites=(), qs=(), nmax=12, smax=3, kmax=2, include_printed=False):
    """Runs the identity suites and returns the report as a dict."""
    raw = _qbern.run_verify(list(suites), [_s(q) for q in qs], nmax, smax, kmax, include_printed)
    return json.loads(raw)
