"""Monic and normalized left/right orthogonal polynomial ladders.

Two construction routes: the recurrence from coefficient sequences
(production path) and Heine's determinant formula from quadrature moments
(cross-validation oracle, limited to small degrees by the conditioning of
Toeplitz determinants).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, MalformedLadderError, NearSingularMomentError
from .laurent import LaurentPoly
from .measures import CircleMeasure, circle_nodes, moment, pairing

T_MINUS = "Tminus"
T_PLUS = "Tplus"
T_GENERAL = "T"

CLASS_TOL = 1e-9


@dataclass
class OrthoSystem:
    """Coefficient sequences and the normalized polynomial ladders.

    phi[n] and phitilde[n] are the normalized left/right polynomials of
    degree n; norms[n] is the monic pairing ∏_{j<=n}(1+|F_j|^2) for the
    Tminus convention (∏(1-|F_j|^2) for Tplus).
    """

    F: np.ndarray
    Ftilde: np.ndarray
    phi: list
    phitilde: list
    norms: np.ndarray
    class_tag: str = T_MINUS
    both_classes: bool = False

    @property
    def size(self) -> int:
        return len(self.F)

    def monic(self, n: int) -> LaurentPoly:
        return self.phi[n] * np.sqrt(self.norms[n])

    def monic_tilde(self, n: int) -> LaurentPoly:
        return self.phitilde[n] * np.sqrt(self.norms[n])

    def to_json(self) -> dict:
        return {
            "class": self.class_tag,
            "F": _c2j(self.F),
            "Ftilde": _c2j(self.Ftilde),
            "phi": [_c2j(p.window(0, n)) for n, p in enumerate(self.phi)],
            "phitilde": [_c2j(p.window(0, n)) for n, p in enumerate(self.phitilde)],
            "norms": list(map(float, self.norms)),
        }

    @staticmethod
    def from_json(doc: dict) -> "OrthoSystem":
        F = _j2c(doc["F"])
        sys = ladder_from_coeffs(F, doc.get("class", T_MINUS))
        return sys


def _c2j(arr):
    return [[float(np.real(c)), float(np.imag(c))] for c in np.asarray(arr)]


def _j2c(items):
    return np.array([complex(a, b) for a, b in items], dtype=np.complex128)


def ladder_from_coeffs(F, cls: str = T_MINUS) -> OrthoSystem:
    """Build the normalized ladder from recursion coefficients.

    phi_{n+1} = (z phi_n + z^n conj(F_{n+1}) star(phitilde_n)) / rho,
    phitilde_{n+1} = (z phitilde_n -+ z^n conj(F_{n+1}) star(phi_n)) / rho,
    with the minus sign and rho = sqrt(1+|F|^2) for the Tminus class, plus
    sign and rho = sqrt(1-|F|^2) for Tplus.
    """
    F = np.asarray(F, dtype=np.complex128)
    if cls not in (T_MINUS, T_PLUS):
        raise DomainError(f"class must be {T_MINUS} or {T_PLUS}")
    sign = -1.0 if cls == T_MINUS else 1.0
    if cls == T_PLUS and np.any(np.abs(F) >= 1):
        raise DomainError("Tplus recursion requires |F_j| < 1")
    phi = [LaurentPoly.one()]
    phitilde = [LaurentPoly.one()]
    norms = np.empty(len(F) + 1)
    norms[0] = 1.0
    for n, f in enumerate(F):
        fsq = abs(f) ** 2
        norms[n + 1] = norms[n] * (1 + fsq) if cls == T_MINUS else norms[n] * (1 - fsq)
        rho = np.sqrt(1 + fsq) if cls == T_MINUS else np.sqrt(1 - fsq)
        fc = np.conj(f)
        p, q = phi[n], phitilde[n]
        phi.append((p.shift(1) + q.star().shift(n).scale(fc)) / rho)
        phitilde.append((q.shift(1) + p.star().shift(n).scale(sign * fc)) / rho)
    Ftilde = sign * F  # Ftilde = -F (Tminus) or F (Tplus)
    return OrthoSystem(
        F=F,
        Ftilde=Ftilde,
        phi=phi,
        phitilde=phitilde,
        norms=norms,
        class_tag=cls,
    )


def extract_coeffs(Phi, PhiTilde):
    """Recover (F, Ftilde, class_tag) from monic consecutive-degree ladders.

    F_{n+1} = conj(Phi_{n+1}(0)).  The tag is Tminus when Ftilde = -F
    within tolerance, Tplus when Ftilde = F; the all-zero tie resolves to
    Tminus with a both-classes flag.
    """
    if len(Phi) != len(PhiTilde):
        raise MalformedLadderError("ladders must have equal length")
    n_max = len(Phi) - 1
    for n in range(n_max + 1):
        for lad in (Phi, PhiTilde):
            p = lad[n]
            if p.hi != n or abs(p[n] - 1) > 1e-8:
                raise MalformedLadderError(f"entry {n} is not monic of degree {n}")
    F = np.array([np.conj(Phi[n][0]) for n in range(1, n_max + 1)])
    Ftilde = np.array([np.conj(PhiTilde[n][0]) for n in range(1, n_max + 1)])
    if len(F) == 0:
        return F, Ftilde, T_MINUS, True
    minus = float(np.max(np.abs(F + Ftilde)))
    plus = float(np.max(np.abs(F - Ftilde)))
    both = minus < CLASS_TOL and plus < CLASS_TOL
    if minus < CLASS_TOL:
        tag = T_MINUS
    elif plus < CLASS_TOL:
        tag = T_PLUS
    else:
        tag = T_GENERAL
    return F, Ftilde, tag, both


def monic_from_moments(mu: CircleMeasure, n: int, m: int = 4096):
    """Monic degree-n polynomials via Heine's determinant formula.

    Returns (Phi_n, PhiTilde_n, deltas) where deltas[k] is the Toeplitz
    moment determinant of order k for k = 0..n.  PhiTilde comes from the
    conjugate measure.  Ill-conditioning limits this route to small n.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    c = {j: moment(mu, j, m) for j in range(-n, n + 1)}
    deltas = _toeplitz_dets(c, n)
    phi = _heine(c, deltas, n)
    cbar = {j: np.conj(c[-j]) for j in range(-n, n + 1)}
    deltas_bar = _toeplitz_dets(cbar, n)
    phitilde = _heine(cbar, deltas_bar, n)
    return phi, phitilde, deltas


def _moment_matrix(c, k):
    """(k+1)x(k+1) Toeplitz matrix with entries c_{i-j}."""
    return np.array(
        [[c[i - j] for j in range(k + 1)] for i in range(k + 1)], dtype=np.complex128
    )


def _toeplitz_dets(c, n):
    deltas = np.empty(n + 1, dtype=np.complex128)
    for k in range(n + 1):
        mat = _moment_matrix(c, k)
        det = np.linalg.det(mat)
        scale = float(np.prod(np.linalg.norm(mat, axis=1))) or 1.0
        if abs(det) < 1e-10 * scale:
            raise NearSingularMomentError(
                f"moment determinant of order {k} is numerically zero "
                "(measure likely outside the uniqueness class)",
                index=k,
            )
        deltas[k] = det
    return deltas


def _heine(c, deltas, n):
    if n == 0:
        return LaurentPoly.one()
    mat = _moment_matrix(c, n)  # row 0 is the z-powers row in Heine's determinant
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    for j in range(n + 1):
        # minor: drop row 0 and column j; z-power of column j is z^{n-j}
        minor = np.delete(np.delete(mat, 0, axis=0), j, axis=1)
        coeffs[n - j] = (-1) ** j * np.linalg.det(minor) / deltas[n - 1]
    return LaurentPoly(coeffs, 0)


@dataclass
class SystemReport:
    """Residuals from checking a system against a measure."""

    orthonormality_max: float
    det_identity_max: float
    monic_norm_max: float

    def max_residual(self) -> float:
        return max(self.orthonormality_max, self.det_identity_max, self.monic_norm_max)


def verify_system(
    sys: OrthoSystem, mu: CircleMeasure, m: int = 4096, grid: int = 512
) -> SystemReport:
    """Check orthonormality, the on-circle determinant identity, and the
    monic pairing against the stored norms.  Failures are reported, not
    raised."""
    n_max = sys.size
    ortho = 0.0
    for j in range(n_max + 1):
        for k in range(n_max + 1):
            val = pairing(sys.phi[j], sys.phitilde[k], mu, m)
            ortho = max(ortho, abs(val - (1.0 if j == k else 0.0)))
    nodes = circle_nodes(grid)
    det = 0.0
    for n in range(n_max + 1):
        vals = np.abs(sys.phi[n](nodes)) ** 2 + np.abs(sys.phitilde[n](nodes)) ** 2
        det = max(det, float(np.max(np.abs(vals - 2.0))))
    norm = 0.0
    for n in range(n_max + 1):
        val = pairing(sys.monic(n), sys.monic_tilde(n), mu, m)
        norm = max(norm, abs(val - sys.norms[n]))
    return SystemReport(ortho, det, norm)


LOG_FLOOR = -700.0


def plancherel_check(sys: OrthoSystem, l: int, m: int, nodes: int = 4096):
    """Both sides of the log-subharmonicity inequality for index pair l < m.

    lhs = -2 * mean over the grid of log(|phi_l^* phi_m + phitilde_l^*
    phitilde_m| / 2), rhs = sum_{l<j<=m} log(1+|F_j|^2).  The caller
    asserts lhs <= rhs (+ tolerance).  Returns (lhs, rhs, clamped).
    """
    if not 0 <= l < m <= sys.size:
        raise DomainError("need 0 <= l < m <= N")
    zs = circle_nodes(nodes)
    # on the circle star = conjugate
    u = np.conj(sys.phi[l](zs)) * sys.phi[m](zs)
    v = np.conj(sys.phitilde[l](zs)) * sys.phitilde[m](zs)
    mag = 0.5 * np.abs(u + v)
    clamped = bool(np.any(mag <= np.exp(LOG_FLOOR)))
    logs = np.log(np.maximum(mag, np.exp(LOG_FLOOR)))
    lhs = -2.0 * float(np.mean(logs))
    rhs = float(np.sum(np.log1p(np.abs(sys.F[l:m]) ** 2)))
    return lhs, rhs, clamped
