"""SU(2)-valued nonlinear Fourier series of finite coefficient sequences.

The pair (a, b) is the top row of the ordered product of the unit
determinant factors (1+|F_j|^2)^{-1/2} [[1, F_j z^j], [-conj(F_j) z^{-j}, 1]].
Frequency supports: a lives on [-n, 0], b on [1, n].  The determinant law
a a* + b b* = 1 holds exactly at the coefficient level.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import HypothesisError, MalformedPairError, StrippingError
from .laurent import LaurentPoly
from .measures import CircleMeasure, circle_nodes

B_SUP_THRESHOLD = 2 ** -0.5


@dataclass(frozen=True)
class NLFSPair:
    a: LaurentPoly
    b: LaurentPoly
    n: int

    def validate(self, tol: float = 1e-9):
        if not self.b.is_zero() and (self.b.lo < 1 or self.b.hi > self.n):
            raise MalformedPairError(
                f"b support [{self.b.lo},{self.b.hi}] outside [1,{self.n}]"
            )
        if self.a.is_zero() or self.a.lo < -self.n or self.a.hi > 0:
            raise MalformedPairError(
                f"a support outside [-{self.n},0]"
            )
        res = su2_residual(self.a, self.b)
        if res > tol:
            raise MalformedPairError(f"SU(2) residual {res:.3e} exceeds {tol:.1e}")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": {"lo": self.a.lo, "coeffs": _c2j(self.a.coeffs)},
            "b": {"lo": self.b.lo, "coeffs": _c2j(self.b.coeffs)},
        }

    @staticmethod
    def from_json(doc: dict) -> "NLFSPair":
        a = LaurentPoly(_j2c(doc["a"]["coeffs"]), doc["a"]["lo"])
        b = LaurentPoly(_j2c(doc["b"]["coeffs"]), doc["b"]["lo"])
        return NLFSPair(a, b, int(doc["n"]))


def _c2j(arr):
    return [[float(np.real(c)), float(np.imag(c))] for c in np.asarray(arr)]


def _j2c(items):
    return np.array([complex(x, y) for x, y in items], dtype=np.complex128)


def su2_residual(a: LaurentPoly, b: LaurentPoly) -> float:
    """Coefficient-level residual of a a* + b b* - 1."""
    d = a * a.star() + b * b.star() - 1
    return d.max_abs()


def forward(F) -> NLFSPair:
    """Multiply the matrix factors left to right.

    One step sends (a, b) to ((a - conj(F_j) z^{-j} b) / rho,
    (F_j z^j a + b) / rho) with rho = sqrt(1+|F_j|^2).
    """
    F = np.asarray(F, dtype=np.complex128)
    a = LaurentPoly.one()
    b = LaurentPoly.zero()
    for j, f in enumerate(F, start=1):
        rho = np.sqrt(1.0 + abs(f) ** 2)
        a_new = (a - b.shift(-j).scale(np.conj(f))) / rho
        b_new = (a.shift(j).scale(f) + b) / rho
        a, b = a_new, b_new
    return NLFSPair(a, b, len(F))


def to_polys(pair: NLFSPair, tol: float = 1e-9):
    """phi_n = z^n (a + b*), phitilde_n = z^n (a - b*)."""
    pair.validate(tol)
    bs = pair.b.star()
    phi = (pair.a + bs).shift(pair.n)
    phitilde = (pair.a - bs).shift(pair.n)
    return phi, phitilde


def from_polys(phi: LaurentPoly, phitilde: LaurentPoly, n: int, tol: float = 1e-9) -> NLFSPair:
    a = (phi + phitilde).shift(-n).scale(0.5)
    b = (phi - phitilde).shift(-n).scale(0.5).star()
    pair = NLFSPair(a, b, n)
    pair.validate(tol)
    return pair


def layer_strip(pair: NLFSPair, tol: float = 1e-9) -> np.ndarray:
    """Recover F from an exact finite pair by peeling factors off both ends.

    Bottom factors (k = 1, 2, ...) are peeled off the left of the product
    with F_k = b[k] / conj(a[0]), top factors (k = n, n-1, ...) off the
    right with F_k = b[k] / a[0]; the two sweeps meet at a split index.
    Peeling from one end only lets roundoff compound over all n steps;
    splitting keeps each sweep short enough that the recovered sequence
    satisfies forward(F) = pair to well below 1e-9 per coefficient.
    """
    res = su2_residual(pair.a, pair.b)
    if res > 1e-8:
        raise StrippingError(
            f"input is not an SU(2) pair (residual {res:.3e})", residual=res
        )
    # discarded coefficients of an exact pair are pure roundoff, but their
    # size scales with the accumulated dynamic range (norms grow like
    # prod(1+|F_j|^2)), so the structural check sits well above tol
    spill_tol = max(1e4 * tol, 1e4 * res)
    a, b = pair.a, pair.b
    n = pair.n
    F = np.zeros(n, dtype=np.complex128)
    h = n // 2
    for k in range(1, h + 1):
        a0c = np.conj(a[0])
        if abs(a0c) < 1e-12:
            raise StrippingError(f"stripping degenerate at step {k}: |a[0]| < 1e-12")
        f = b[k] / a0c
        F[k - 1] = f
        rho = np.sqrt(1.0 + abs(f) ** 2)
        a_new = (a + b.star().shift(k).scale(f)) / rho
        b_new = (b - a.star().shift(k).scale(f)) / rho
        spill = max(_outside(a_new, -(n - k), 0), _outside(b_new, k + 1, n))
        if spill > spill_tol:
            raise StrippingError(
                f"pair is not an exact finite series (spill {spill:.3e} at step {k})",
                residual=spill,
            )
        a = a_new.clip(-(n - k), 0)
        b = b_new.clip(k + 1, n)
    for k in range(n, h, -1):
        a0 = a[0]
        if abs(a0) < 1e-12:
            raise StrippingError(f"stripping degenerate at step {k}: |a[0]| < 1e-12")
        f = b[k] / a0
        F[k - 1] = f
        rho = np.sqrt(1.0 + abs(f) ** 2)
        a_new = (a + b.shift(-k).scale(np.conj(f))) / rho
        b_new = (b - a.shift(k).scale(f)) / rho
        # the remaining product holds factors h+1 .. k-1
        spill = max(
            _outside(a_new, -(k - 1 - h), 0),
            _outside(b_new, h + 1, k - 1),
        )
        if spill > spill_tol:
            raise StrippingError(
                f"pair is not an exact finite series (spill {spill:.3e} at step {k})",
                residual=spill,
            )
        a = a_new.clip(-(k - 1 - h), 0)
        b = b_new.clip(h + 1, k - 1)
    rem = (a - 1).max_abs() + b.max_abs()
    if rem > 1e-7:
        raise StrippingError(
            f"residual pair is not the identity (norm {rem:.3e})", residual=rem
        )
    return F


def _outside(p: LaurentPoly, lo: int, hi: int) -> float:
    if p.is_zero():
        return 0.0
    mask = np.ones(len(p.coeffs), dtype=bool)
    ks = np.arange(p.lo, p.hi + 1)
    mask &= (ks < lo) | (ks > hi)
    return float(np.max(np.abs(p.coeffs[mask]))) if mask.any() else 0.0


def layer_strip_truncated(a: LaurentPoly, b: LaurentPoly, steps: int, bandwidth: int):
    """Peel bottom factors of a possibly infinite series, with clipping.

    For k = 1..steps: F_k = b[k] / star(a)[0], then left-multiply by the
    inverse factor, clipping a to [-bandwidth, 0] and b to
    [k+1, k+bandwidth].  No error budget is asserted; the report carries
    the residual sup of |b| left after the last step and the grid SU(2)
    residual of the clipped pair.
    """
    a = a.clip(-bandwidth, 0)
    b = b.clip(1, bandwidth + steps)
    F = np.zeros(steps, dtype=np.complex128)
    for k in range(1, steps + 1):
        astar0 = np.conj(a[0])
        if abs(astar0) < 1e-12:
            raise StrippingError(f"stripping degenerate at step {k}")
        f = b[k] / astar0
        F[k - 1] = f
        rho = np.sqrt(1.0 + abs(f) ** 2)
        a_new = (a + b.star().shift(k).scale(f)) / rho
        b_new = (b - a.star().shift(k).scale(f)) / rho
        a = a_new.clip(-bandwidth, 0)
        b = b_new.clip(k + 1, k + bandwidth)
    grid = circle_nodes(2048)
    av, bv = a(grid), b(grid)
    report = {
        "b_residual_sup": float(np.max(np.abs(bv))) if not b.is_zero() else 0.0,
        "su2_grid_residual": float(
            np.max(np.abs(np.abs(av) ** 2 + np.abs(bv) ** 2 - 1.0))
        ),
    }
    return F, report


LOG_FLOOR = -700.0


def outer_from_modulus(logmod_samples, degree_cap: int = 256):
    """Analytic outer function with prescribed boundary log-modulus.

    Takes log|g| on the uniform grid, forms the analytic completion
    h = hhat_0 + 2 sum_{1<=k<=D} hhat_k z^k of its Fourier series, and
    exponentiates the truncated series.  Returns (poly, max_abs_err) where
    the error compares the boundary modulus of the result with the input.
    """
    samples = np.asarray(logmod_samples, dtype=np.float64)
    clamped = bool(np.any(samples < LOG_FLOOR))
    samples = np.maximum(samples, LOG_FLOOR)
    m = len(samples)
    d = min(degree_cap, m // 2 - 1)
    fhat = np.fft.fft(samples) / m
    coeffs = np.zeros(d + 1, dtype=np.complex128)
    coeffs[0] = fhat[0]
    coeffs[1:] = 2.0 * fhat[1 : d + 1]
    h = LaurentPoly(coeffs, 0)
    result = exp_series(h, d)
    grid = circle_nodes(m)
    err = float(np.max(np.abs(np.abs(result(grid)) - np.exp(samples))))
    return result, err, clamped


def exp_series(h: LaurentPoly, degree_cap: int) -> LaurentPoly:
    """exp of a truncated analytic series by scaling and squaring.

    Splits off the constant term, scales the rest by 2^-m so its maximal
    coefficient is <= 1/2, applies a 16-term Taylor expansion, and squares
    m times, truncating to the degree cap throughout.
    """
    if h.is_zero():
        return LaurentPoly.one()
    if h.lo < 0:
        raise MalformedPairError("exp_series expects an analytic series")
    c0 = h[0]
    hp = (h - c0).clip(0, degree_cap)
    m = 0
    norm = hp.max_abs()
    while norm > 0.5:
        norm /= 2.0
        m += 1
    t = hp.scale(2.0 ** -m)
    acc = LaurentPoly.one()
    term = LaurentPoly.one()
    fact = 1.0
    for k in range(1, 17):
        term = (term * t).clip(0, degree_cap)
        fact *= k
        acc = acc + term.scale(1.0 / fact)
        if term.is_zero():
            break
    for _ in range(m):
        acc = (acc * acc).clip(0, degree_cap)
    return acc.scale(np.exp(c0))


def w_from_ab(a: LaurentPoly, b: LaurentPoly, m: int = 8192) -> np.ndarray:
    """Density samples w = 1/((a* - b)(a + b*)) on the uniform grid.

    Requires grid sup of |b| strictly below 2^{-1/2}; this threshold is
    sharp, beyond it the limiting object is no longer a measure.
    """
    nodes = circle_nodes(m)
    av = a(nodes)
    bv = b(nodes)
    bmax = float(np.max(np.abs(bv)))
    if bmax >= B_SUP_THRESHOLD - 1e-9:
        raise HypothesisError(
            f"sup|b| = {bmax:.6f} >= 2^-1/2; the density is not well defined"
        )
    # star coincides with conjugation on the circle
    return 1.0 / ((np.conj(av) - bv) * (av + np.conj(bv)))


def measure_from_pair(a: LaurentPoly, b: LaurentPoly, m: int = 8192) -> CircleMeasure:
    """Absolutely continuous measure with density w_from_ab.

    The density integrates to 1 within 1e-8 for genuine pairs; violations
    raise."""
    samples = w_from_ab(a, b, m)
    mu = CircleMeasure.from_samples(samples, kind="nlfs-density")
    c0 = np.mean(samples)
    if abs(c0 - 1.0) > 1e-8:
        raise HypothesisError(f"density does not normalize: c_0 = {c0:.10f}")
    return mu


def convergence_functional(pair: NLFSPair, s: complex) -> complex:
    """((a* + b)(a - b*))^2 at a circle point s.

    Equals (star(phi_n) phitilde_n)^2(s) by the polynomial representation
    of the pair."""
    if abs(abs(s) - 1.0) > 1e-9:
        raise MalformedPairError("s must lie on the unit circle")
    val = ((pair.a.star() + pair.b) * (pair.a - pair.b.star()))(complex(s))
    return val ** 2
