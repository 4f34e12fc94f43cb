"""The normalized reciprocal Christoffel function K_n and the weighted basis Q_j.

K_n(x) = (1/(n+1)) sum_{k=0}^n (P_k*(x))^2 admits two further equivalent
forms, both valid for complex x:

- Christoffel-Darboux: K_n = (P_{n+1}' P_n - P_{n+1} P_n') / 2
- closed form:         K_n = ((n+1)^2 P_n^2 - (x^2 - 1) P_n'^2) / (2(n+1))

The weighted basis is Q_j = P_j* / sqrt(K_n); its squares sum to exactly
n + 1 at every point of [-1, 1], which is the optimal stability factor for
arcsine-sampled least squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .certificates import Certificate, residual_certificate
from .legendre import legendre_all, legendre_eval, legendre_exact
from .ratpoly import LaurentPoly

MODES = ("sum", "christoffel_darboux", "closed_form")


@dataclass(frozen=True)
class ChristoffelEvaluator:
    """Evaluator for K_n in one of the three equivalent modes.

    ``sum`` is the numerically safe choice on [-1, 1] (manifestly positive);
    ``closed_form`` and ``christoffel_darboux`` extend to complex arguments.
    """

    n: int
    mode: str = "sum"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("degree must be non-negative")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")

    def __call__(self, x):
        return kn_eval(self, x)


def kn_eval(ev: ChristoffelEvaluator, x):
    """K_n(x) by the evaluator's mode; elementwise on arrays."""
    n = ev.n
    if ev.mode == "sum":
        values = legendre_all(n, x)
        total = 0.0 * x
        for k, p in enumerate(values):
            total = total + (2 * k + 1) / 2 * p * p
        return total / (n + 1)
    if ev.mode == "christoffel_darboux":
        pn, dn = legendre_eval(n, x)
        pn1, dn1 = legendre_eval(n + 1, x)
        return 0.5 * (dn1 * pn - pn1 * dn)
    pn, dn = legendre_eval(n, x)
    return ((n + 1) ** 2 * pn * pn - (x * x - 1.0) * dn * dn) / (2 * (n + 1))


def kn_exact(n: int) -> LaurentPoly:
    """Exact degree-2n polynomial K_n, certified against the closed form."""
    sum_form = _kn_exact_sum(n)
    closed = _kn_exact_closed(n)
    if sum_form != closed:
        raise ArithmeticError(f"K_{n} sum and closed forms disagree")
    return sum_form


def _kn_exact_sum(n: int) -> LaurentPoly:
    total = LaurentPoly.zero()
    for k in range(n + 1):
        p = legendre_exact(k)
        total = total + Fraction(2 * k + 1, 2) * p * p
    return total * Fraction(1, n + 1)


def _kn_exact_closed(n: int) -> LaurentPoly:
    p = legendre_exact(n)
    dp = p.diff()
    x2m1 = LaurentPoly.from_pairs({2: 1, 0: -1})
    return ((n + 1) ** 2 * p * p - x2m1 * dp * dp) * Fraction(1, 2 * (n + 1))


def _kn_exact_cd(n: int) -> LaurentPoly:
    p = legendre_exact(n)
    p1 = legendre_exact(n + 1)
    return Fraction(1, 2) * (p1.diff() * p - p1 * p.diff())


def check_kn_forms(n: int) -> Certificate:
    """Certify that the sum, Christoffel-Darboux and closed forms of K_n agree exactly."""
    sum_form = _kn_exact_sum(n)
    residual = (sum_form - _kn_exact_closed(n)) + (sum_form - _kn_exact_cd(n))
    return residual_certificate("christoffel-forms-agree", n, residual)


def q_basis_all(n: int, x) -> np.ndarray:
    """All weighted basis values Q_j(x) = P_j*(x)/sqrt(K_n(x)), j = 0..n.

    Returns shape (n+1,) + shape(x).  K_n is evaluated in sum form, which is
    positive on [-1, 1] in floating point.
    """
    xs = np.asarray(x, dtype=float)
    if np.any(np.abs(xs) > 1):
        raise ValueError("Q basis is defined on [-1, 1]")
    values = legendre_all(n, xs)
    pstar = np.stack([math.sqrt((2 * k + 1) / 2) * p for k, p in enumerate(values)])
    kn = np.sum(pstar * pstar, axis=0) / (n + 1)
    return pstar / np.sqrt(kn)


def q_basis_eval(n: int, j: int, x):
    """Q_j(x) for a single index j."""
    if not 0 <= j <= n:
        raise ValueError("index must satisfy 0 <= j <= n")
    q = q_basis_all(n, x)[j]
    if np.ndim(x) == 0:
        return float(q)
    return q
