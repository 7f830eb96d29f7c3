"""Complex probability measures on the unit circle.

A measure is an absolutely continuous part (a density against normalized
arclength dθ/2π) plus a finite list of atoms.  The single fixed
convention throughout the package is normalized arclength: quadrature of a
density w is (1/M) Σ_k w(node_k), and atom sums are exact, never smeared
onto the grid.
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigError, DomainError, ToleranceError
from .laurent import LaurentPoly

MAX_QUAD_NODES = 2 ** 20
ADAPTIVE_TOL = 1e-10


def circle_nodes(m: int) -> np.ndarray:
    """Quadrature nodes e^{2 pi i k / M}, exact for frequencies in (-M, M)."""
    return np.exp(2j * np.pi * np.arange(m) / m)


class Quadrature:
    """Uniform quadrature rule on the circle with equal weights 1/M."""

    def __init__(self, m: int):
        if m < 1:
            raise DomainError("node count must be positive")
        self.m = m
        self.nodes = circle_nodes(m)

    def integrate(self, values) -> complex:
        return complex(np.sum(values) / self.m)


class CircleMeasure:
    """Density (closed-form or sampled) plus finite atom list.

    Parameters
    ----------
    density : vectorized callable z -> w(z) on |z| = 1, or None for zero
        absolutely continuous part.
    atoms : iterable of (point, weight) with |point| = 1.
    kind : short descriptive tag, used for serialization.
    """

    def __init__(self, density=None, atoms=(), kind="custom", normalization_tol=1e-6):
        self.density = density
        self.atoms = tuple((complex(p), complex(w)) for p, w in atoms)
        self.kind = kind
        self.normalization_tol = normalization_tol
        for p, _ in self.atoms:
            if abs(abs(p) - 1.0) > 1e-9:
                raise DomainError(f"atom at {p} is not on the unit circle")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def uniform() -> "CircleMeasure":
        return CircleMeasure(lambda z: np.ones_like(z), kind="uniform")

    @staticmethod
    def mu_r(r: float) -> "CircleMeasure":
        """The one-nonzero-coefficient family: density (1+r^2)/(1-r^2-2ri Im z)."""
        if not 0 <= r < 1:
            raise DomainError("mu_r requires 0 <= r < 1")

        def w(z):
            z = np.asarray(z, dtype=np.complex128)
            return (1 + r * r) / (1 - r * r - 2j * r * z.imag)

        m = CircleMeasure(w, kind=f"mu_r:{r}")
        m.r = r
        return m

    @staticmethod
    def from_samples(values, kind="samples") -> "CircleMeasure":
        """Measure from M uniform density samples, M a power of two.

        Off-grid evaluation goes through the trigonometric interpolant of
        the samples (Fourier coefficients of the sample array), so smooth
        densities stay smooth.
        """
        values = np.asarray(values, dtype=np.complex128)
        m = len(values)
        if m < 2 or (m & (m - 1)) != 0:
            raise DomainError("sample count must be a power of two >= 2")
        fhat = np.fft.fft(values) / m  # fhat[k] multiplies z^k (k mod m, centered below)
        ks = np.fft.fftfreq(m, 1.0 / m).astype(int)

        def w(z):
            z = np.asarray(z, dtype=np.complex128)
            out = np.zeros(z.shape, dtype=np.complex128)
            for k, c in zip(ks, fhat):
                out += c * z ** k
            return out

        meas = CircleMeasure(w, kind=kind)
        meas.samples = values
        return meas

    @staticmethod
    def from_atoms(atoms) -> "CircleMeasure":
        return CircleMeasure(None, atoms=atoms, kind="atoms")

    def with_atoms(self, atoms) -> "CircleMeasure":
        return CircleMeasure(self.density, atoms=atoms, kind=self.kind + "+atoms")

    def scaled(self, c) -> "CircleMeasure":
        density = None
        if self.density is not None:
            base = self.density
            density = lambda z: c * base(z)
        return CircleMeasure(
            density, [(p, c * w) for p, w in self.atoms], kind=self.kind
        )

    def conjugate(self) -> "CircleMeasure":
        """The measure mu-bar: conjugated density and atom weights."""
        density = None
        if self.density is not None:
            base = self.density
            density = lambda z: np.conj(base(z))
        return CircleMeasure(
            density,
            [(p, np.conj(w)) for p, w in self.atoms],
            kind=self.kind + ":conj",
        )

    # -- density access ----------------------------------------------------

    def density_on_grid(self, m: int) -> np.ndarray:
        if self.density is None:
            return np.zeros(m, dtype=np.complex128)
        samples = getattr(self, "samples", None)
        if samples is not None:
            n = len(samples)
            if m >= n and m % n == 0:
                return _resample(samples, m)
            if m < n and n % m == 0:
                # coarser uniform grids share nodes with the sample grid
                return samples[:: n // m].copy()
        return np.asarray(self.density(circle_nodes(m)), dtype=np.complex128)

    def density_at(self, s) -> complex:
        if self.density is None:
            return 0j
        return complex(np.asarray(self.density(np.asarray([s], dtype=np.complex128)))[0])

    # -- integration -------------------------------------------------------

    def integrate(self, f, m: int) -> complex:
        """Integral of f dμ at a fixed grid size plus exact atom sum."""
        total = 0j
        if self.density is not None:
            nodes = circle_nodes(m)
            total += complex(np.sum(f(nodes) * self.density_on_grid(m)) / m)
        for p, wt in self.atoms:
            total += complex(np.asarray(f(np.asarray([p], dtype=np.complex128)))[0]) * wt
        return total

    def integrate_adaptive(self, f, m: int) -> complex:
        """Double the grid until successive values differ by < 1e-10."""
        m = max(int(m), 64)
        prev = self.integrate(f, m)
        while m < MAX_QUAD_NODES:
            m *= 2
            cur = self.integrate(f, m)
            if abs(cur - prev) < ADAPTIVE_TOL:
                return cur
            prev = cur
        cur = prev
        prev = self.integrate(f, m // 2)
        if abs(cur - prev) < ADAPTIVE_TOL:
            return cur
        raise ToleranceError(
            f"adaptive quadrature not converged at {m} nodes",
            last=cur,
            previous=prev,
        )

    def check_normalization(self, m: int = 4096) -> float:
        """Return |c_0 - 1|; raise if it exceeds normalization_tol."""
        err = abs(moment(self, 0, m) - 1.0)
        if err > self.normalization_tol:
            raise DomainError(f"measure not normalized: |c_0 - 1| = {err:.3e}")
        return err


def _resample(samples: np.ndarray, m: int) -> np.ndarray:
    """Evaluate the trig interpolant of the samples on a finer uniform grid."""
    n = len(samples)
    fhat = np.fft.fft(samples)
    padded = np.zeros(m, dtype=np.complex128)
    h = n // 2
    padded[:h] = fhat[:h]
    padded[-h:] = fhat[-h:]
    return np.fft.ifft(padded) * (m / n)


def moment(mu: CircleMeasure, j: int, m: int = 256) -> complex:
    """j-th moment c_j = integral of z^j dμ, adaptively refined."""
    return mu.integrate_adaptive(lambda z: z ** j, m)


def pairing(f: LaurentPoly, g: LaurentPoly, mu: CircleMeasure, m: int = 256) -> complex:
    """Sesquilinear pairing: integral of f * star(g) dμ."""
    h = f * g.star()
    if h.is_zero():
        return 0j
    return mu.integrate_adaptive(h, m)


def l_functional(mu: CircleMeasure, s: complex, n: int, m: int = 65536) -> float:
    """Approximate-identity-weighted variation of μ around its value at s.

    Computes  ∫ min{n+1, 1/((n+1)|y-s|^2)} |dμ(y) - w(s) m(dy)|  with m
    normalized arclength, at a fixed grid size plus exact atom terms.
    Nonnegative; vanishes identically for the uniform measure.  Whether s
    is a Lebesgue point is not (and cannot be) detected here.
    """
    if abs(abs(s) - 1.0) > 1e-9:
        raise DomainError("s must lie on the unit circle")
    if n < 0:
        raise DomainError("n must be nonnegative")
    s = complex(s)
    ws = mu.density_at(s)
    total = 0.0
    if mu.density is not None or ws != 0:
        nodes = circle_nodes(m)
        # a node coinciding with s divides by zero; the min caps it at n+1
        with np.errstate(divide="ignore"):
            kern = np.minimum(n + 1.0, 1.0 / ((n + 1.0) * np.abs(nodes - s) ** 2))
        wvals = mu.density_on_grid(m)
        total += float(np.sum(kern * np.abs(wvals - ws)) / m)
    for p, wt in mu.atoms:
        d2 = abs(p - s) ** 2
        k = n + 1.0 if d2 == 0 else min(n + 1.0, 1.0 / ((n + 1.0) * d2))
        total += k * abs(wt)
    return total


# -- JSON measure descriptions --------------------------------------------


def measure_from_json(spec: dict) -> CircleMeasure:
    """Build a measure from its JSON description.

    Kinds: {"kind":"uniform"} | {"kind":"mu_r","r":0.5} |
    {"kind":"samples","values":[[re,im],...]} |
    {"kind":"atoms","list":[{"point":[re,im],"weight":[re,im]},...]}.
    Any density kind accepts an optional "atoms" list and an optional
    "scale" factor, so convex combinations can be composed.
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError("measure spec must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "uniform":
        mu = CircleMeasure.uniform()
    elif kind == "mu_r":
        if "r" not in spec:
            raise ConfigError("mu_r measure needs an 'r' field")
        mu = CircleMeasure.mu_r(float(spec["r"]))
    elif kind == "samples":
        try:
            values = [complex(v[0], v[1]) for v in spec["values"]]
        except (KeyError, TypeError, IndexError) as e:
            raise ConfigError("samples measure needs 'values': [[re,im],...]") from e
        mu = CircleMeasure.from_samples(values)
    elif kind == "atoms":
        mu = CircleMeasure.from_atoms(_parse_atoms(spec.get("list", [])))
    else:
        raise ConfigError(f"unknown measure kind {kind!r}")
    if "scale" in spec:
        mu = mu.scaled(complex(spec["scale"]))
    if spec.get("atoms") and kind != "atoms":
        mu = mu.with_atoms(_parse_atoms(spec["atoms"]))
    return mu


def _parse_atoms(items):
    out = []
    for it in items:
        try:
            p = complex(it["point"][0], it["point"][1])
            w = complex(it["weight"][0], it["weight"][1])
        except (KeyError, TypeError, IndexError) as e:
            raise ConfigError(
                "atom entries need 'point': [re,im] and 'weight': [re,im]"
            ) from e
        out.append((p, w))
    return out
