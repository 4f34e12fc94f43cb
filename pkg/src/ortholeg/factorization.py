"""Construction and certification of the spectral factors F_n and G_n.

F_n(z) = d/dz(z^{n+1} P_n(J(z))) is a degree-2n polynomial in even powers of
z with strictly positive dyadic coefficients, and together with its reversal
G_n(z) = z^{2n} F_n(1/z) it factors the Christoffel polynomial on the circle:

    K_n(J(z)) = F_n(z) F_n(1/z) / (2(n+1)).

Four independent constructions of F_n are certified to agree exactly (the
derivative definition, the closed binomial coefficients, the terminating
hypergeometric series, and the second-order ODE it satisfies), and its 2n
roots are computed and certified to be simple and strictly inside the unit
disk, which is what makes the contour-moment bookkeeping work.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .certificates import Certificate, condition_certificate, residual_certificate
from .christoffel import kn_exact
from .legendre import legendre_on_circle
from .ratpoly import JOUKOWSKI, LaurentPoly, substitute


def fn_from_definition(n: int) -> LaurentPoly:
    """F_n as the derivative of z^{n+1} P_n(J(z))."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return legendre_on_circle(n).shift(n + 1).diff()


def fn_closed_coeffs(n: int) -> LaurentPoly:
    """F_n from its closed coefficients 2^{-2n} (2k+1) C(2k,k) C(2n-2k,n-k) z^{2k}."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    scale = Fraction(1, 4**n)
    pairs = {
        2 * k: scale * (2 * k + 1) * math.comb(2 * k, k) * math.comb(2 * n - 2 * k, n - k)
        for k in range(n + 1)
    }
    return LaurentPoly.from_pairs(pairs)


def _hypergeometric_series(n: int) -> tuple[LaurentPoly, Fraction]:
    """Terminating 2F1(-n, 3/2; 1/2-n; w) as an exact polynomial in w.

    Returns the unscaled series and its leading coefficient.  The rising
    factorials are accumulated exactly; (1/2 - n)_k never vanishes for
    k <= n, which is asserted.
    """
    a = Fraction(-n)
    b = Fraction(3, 2)
    c = Fraction(1, 2) - n
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for k in range(n):
        ck = c + k
        if ck == 0:
            raise ArithmeticError("degenerate lower parameter in hypergeometric series")
        term = term * (a + k) * (b + k) / (ck * (k + 1))
        coeffs.append(term)
    return LaurentPoly(coeffs), coeffs[-1]


def fn_hypergeometric(n: int) -> LaurentPoly:
    """F_n via the scaled hypergeometric series with w -> z^2."""
    series, _ = _hypergeometric_series(n)
    scale = Fraction(math.comb(2 * n, n), 4**n)
    pairs = {2 * e: scale * c for e, c in series.terms()}
    return LaurentPoly.from_pairs(pairs)


def gn_build(n: int) -> LaurentPoly:
    """G_n = z^{2n} F_n(1/z), certified against the coefficient-reversal rule."""
    f = fn_from_definition(n)
    g = f.recip().shift(2 * n)
    reversed_rule = LaurentPoly.from_pairs(
        {2 * k: f.coeff(2 * (n - k)) for k in range(n + 1)}
    )
    if g != reversed_rule:
        raise ArithmeticError(f"G_{n} reversal constructions disagree")
    return g


@dataclass(frozen=True)
class FactorPair:
    """The factor F_n together with its reversal G_n."""

    n: int
    f: LaurentPoly
    g: LaurentPoly

    @classmethod
    def build(cls, n: int) -> "FactorPair":
        f = fn_from_definition(n)
        g = gn_build(n)
        if any(e % 2 or c <= 0 for e, c in f.terms()):
            raise ArithmeticError(f"F_{n} is not even with positive coefficients")
        if f.coeff(0) != Fraction(math.comb(2 * n, n), 4**n):
            raise ArithmeticError(f"F_{n}(0) has the wrong value")
        if g.coeff(0) != (2 * n + 1) * f.coeff(0):
            raise ArithmeticError(f"G_{n}(0) != (2n+1) F_{n}(0)")
        return cls(n=n, f=f, g=g)


def check_fn_constructions(n: int) -> Certificate:
    """Certify derivative definition == closed coefficients == hypergeometric form."""
    f = fn_from_definition(n)
    residual = (f - fn_closed_coeffs(n)) + (f - fn_hypergeometric(n))
    return residual_certificate("factor-closed-coefficients", n, residual)


def hypergeometric_check(n: int) -> Certificate:
    """Certify the hypergeometric construction, including its leading coefficient 2n+1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    try:
        series, leading = _hypergeometric_series(n)
    except ArithmeticError as exc:
        return Certificate("factor-hypergeometric", n, status="fail", detail=str(exc))
    residual = fn_hypergeometric(n) - fn_from_definition(n)
    cert = residual_certificate("factor-hypergeometric", n, residual)
    if cert.passed and leading != 2 * n + 1:
        return Certificate(
            "factor-hypergeometric", n, status="fail",
            detail=f"unscaled leading coefficient {leading} != {2 * n + 1}",
        )
    return cert


def check_reversal(n: int) -> Certificate:
    """Certify both G_n constructions and G_n(0) = (2n+1) F_n(0)."""
    try:
        pair = FactorPair.build(n)
    except ArithmeticError as exc:
        return Certificate("factor-reversal", n, status="fail", detail=str(exc))
    ok = sorted(pair.f.coeffs) == sorted(pair.g.coeffs)
    return condition_certificate(
        "factor-reversal", n, ok,
        detail="" if ok else "coefficient multisets differ",
    )


def check_fejer_riesz(n: int) -> Certificate:
    """Certify K_n(J(z)) = F_n(z) F_n(1/z) / (2(n+1)) exactly."""
    f = fn_from_definition(n)
    kj = substitute(kn_exact(n), JOUKOWSKI)
    residual = kj - Fraction(1, 2 * (n + 1)) * f * f.recip()
    return residual_certificate("fejer-riesz", n, residual)


def check_fn_gn_alt(n: int) -> Certificate:
    """Certify the recurrence forms of F_n and G_n.

    Multiplied through by (z^2 - 1) to stay polynomial:

      (z^2-1) F_n = z^n {((2n+1)z^2 - 1) P_n(J) - 2nz P_{n-1}(J)}
      (z^2-1) G_n = z^n {(z^2 - (2n+1)) P_n(J) + 2nz P_{n-1}(J)}

    A floating spot check at z = 0.7 + 0.2i guards the algebra independently.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    f = fn_from_definition(n)
    g = gn_build(n)
    ln = legendre_on_circle(n)
    ln1 = legendre_on_circle(n - 1)
    x2m1 = LaurentPoly.from_pairs({2: 1, 0: -1})
    z = LaurentPoly.monomial(1)
    rhs_f = (LaurentPoly.from_pairs({2: 2 * n + 1, 0: -1}) * ln - 2 * n * z * ln1).shift(n)
    rhs_g = (LaurentPoly.from_pairs({2: 1, 0: -(2 * n + 1)}) * ln + 2 * n * z * ln1).shift(n)
    residual = (x2m1 * f - rhs_f) + (x2m1 * g - rhs_g)
    cert = residual_certificate("factor-recurrence-form", n, residual)
    if not cert.passed:
        return cert
    z0 = 0.7 + 0.2j
    lhs = (z0 * z0 - 1) * f(z0)
    rhs = rhs_f(z0)
    if abs(lhs - rhs) > 1e-12 * max(1.0, abs(lhs)):
        return Certificate(
            "factor-recurrence-form", n, status="fail",
            detail=f"floating spot check deviates by {abs(lhs - rhs):.3e}",
        )
    return cert


def check_ode(n: int) -> Certificate:
    """Certify z(1-z^2) F_n'' + 2((n-2)z^2 - n) F_n' + 6nz F_n = 0.

    This is the second-order ODE satisfied by F_n, cleared of its 1/z
    coefficient to remain in polynomial arithmetic.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    f = fn_from_definition(n)
    df = f.diff()
    ddf = df.diff()
    term1 = LaurentPoly.from_pairs({1: 1, 3: -1}) * ddf
    term2 = LaurentPoly.from_pairs({2: 2 * (n - 2), 0: -2 * n}) * df
    term3 = LaurentPoly.monomial(1, 6 * n) * f
    return residual_certificate("factor-ode", n, term1 + term2 + term3)


# -- root localization -------------------------------------------------------


@dataclass(frozen=True)
class RootRecord:
    re: float
    im: float
    modulus: float
    residual: float
    converged: bool

    def to_json(self) -> dict:
        return {"re": self.re, "im": self.im, "modulus": self.modulus,
                "residual": self.residual}


@dataclass(frozen=True)
class RootReport:
    n: int
    roots: tuple[RootRecord, ...]
    max_modulus: float
    min_separation: float

    def to_json(self) -> dict:
        return {"n": self.n, "roots": [r.to_json() for r in self.roots]}

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _aberth_polish(coeffs: np.ndarray, roots: np.ndarray, max_iter: int = 60) -> np.ndarray:
    """Simultaneous Aberth refinement of all roots of a monic polynomial.

    ``coeffs`` are monic coefficients, highest power first.  Converges to
    residuals near machine precision from companion-matrix starting points.
    """
    deriv = np.polyder(coeffs)
    scale = np.sum(np.abs(coeffs))
    for _ in range(max_iter):
        values = np.polyval(coeffs, roots)
        if np.max(np.abs(values)) <= 1e-15 * scale:
            break
        newton = values / np.polyval(deriv, roots)
        diffs = roots[:, None] - roots[None, :]
        np.fill_diagonal(diffs, 1.0)
        repulsion = np.sum(1.0 / diffs, axis=1) - 1.0
        roots = roots - newton / (1.0 - newton * repulsion)
    return roots


def fn_roots(n: int, residual_tol: float = 1e-10) -> RootReport:
    """Compute and certify the 2n roots of F_n.

    F_n is even, so the companion matrix of the degree-n polynomial in
    w = z^2 is solved first and the w-roots are polished by simultaneous
    Aberth iteration; the z-roots are then the +- square roots, preserving
    the pair structure exactly.  Each root carries its residual |F_n(z)|
    against ``residual_tol * (n+1)`` (F_n has positive coefficients, so
    n + 1 = F_n(1) bounds it on the closed disk).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    f = fn_from_definition(n)
    even = np.array([float(f.coeff(2 * k)) for k in range(n, -1, -1)])
    monic = even / even[0]
    companion = np.zeros((n, n), dtype=complex)
    companion[0, :] = -monic[1:]
    if n > 1:
        companion[np.arange(1, n), np.arange(0, n - 1)] = 1.0
    w_roots = np.linalg.eigvals(companion)
    w_roots = _aberth_polish(monic, w_roots)
    scale = float(n + 1)
    records = []
    for w in sorted(w_roots, key=lambda v: (v.real, v.imag)):
        s = cmath.sqrt(w)
        for z in (s, -s):
            res = abs(f(z))
            records.append(RootRecord(
                re=z.real, im=z.imag, modulus=abs(z),
                residual=res, converged=res <= residual_tol * scale,
            ))
    records.sort(key=lambda r: (r.re, r.im))
    zs = np.array([complex(r.re, r.im) for r in records])
    diffs = np.abs(zs[:, None] - zs[None, :])
    np.fill_diagonal(diffs, np.inf)
    return RootReport(
        n=n,
        roots=tuple(records),
        max_modulus=max(r.modulus for r in records),
        min_separation=float(diffs.min()),
    )
