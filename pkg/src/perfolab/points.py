"""Marked Poisson point process and the induced hole set.

A realization consists of Poisson centers ``z_i`` in the blown-up domain
``(1/eps) D`` together with i.i.d. radius marks ``rho_i``.  Each point
generates a spherical hole of radius ``eps^(d/(d-2)) * rho_i`` centered at
``eps * z_i``.  All sampling is keyed by ``(seed, stream)`` so repeated calls
are bit-identical.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy import integrate
from scipy.spatial import cKDTree

from .geometry import Ball, ConfigurationError, DomainSpec, sample_in_box
from .rng import stream


class MomentDivergenceError(ValueError):
    """Requested moment of the radius law does not exist."""


@dataclass(frozen=True)
class RadiusLaw:
    """Distribution of the radius marks.

    families:
        ``pareto``   -- density a m^a / x^(a+1) on [m, inf)
        ``constant`` -- point mass at rho0
        ``uniform``  -- uniform on [a, b]
    """

    family: str = "pareto"
    min_scale: float = 1.0
    tail_exponent: float = 2.5
    value: float = 1.0
    low: float = 0.5
    high: float = 1.5
    beta: float = 0.4

    def validate(self, d: int) -> None:
        if self.family not in ("pareto", "constant", "uniform"):
            raise ConfigurationError(f"unknown radius family {self.family!r}")
        if self.beta <= 0:
            raise ConfigurationError("moment margin beta must be positive")
        if self.family == "pareto":
            if self.min_scale <= 0:
                raise ConfigurationError("pareto min_scale must be positive")
            # the (d-2)+beta moment must be finite
            if self.tail_exponent <= (d - 2) + self.beta:
                raise ConfigurationError(
                    f"pareto tail exponent {self.tail_exponent} too small: "
                    f"needs alpha > d-2+beta = {(d - 2) + self.beta}"
                )
        elif self.family == "constant":
            if self.value <= 0:
                raise ConfigurationError("constant radius must be positive")
        else:
            if not (0 < self.low <= self.high):
                raise ConfigurationError("uniform bounds must satisfy 0 < low <= high")

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        if self.family == "constant":
            return np.full(n, self.value)
        if self.family == "uniform":
            return rng.uniform(self.low, self.high, n)
        # inverse CDF of Pareto
        u = rng.random(n)
        return self.min_scale * (1.0 - u) ** (-1.0 / self.tail_exponent)

    def moment(self, p: float) -> float:
        """Closed-form p-th moment; raises if it diverges."""
        if p == 0:
            return 1.0
        if self.family == "constant":
            return self.value**p
        if self.family == "uniform":
            a, b = self.low, self.high
            if a == b:
                return a**p
            if p == -1:
                return (math.log(b) - math.log(a)) / (b - a)
            return (b ** (p + 1) - a ** (p + 1)) / ((p + 1) * (b - a))
        if p >= self.tail_exponent:
            raise MomentDivergenceError(
                f"pareto moment of order {p} diverges (tail exponent {self.tail_exponent})"
            )
        return self.tail_exponent * self.min_scale**p / (self.tail_exponent - p)

    def moment_quadrature(self, p: float, rel_tol: float = 1e-6) -> float:
        """Numeric cross-check of ``moment`` (relative error <= rel_tol)."""
        if self.family == "constant":
            return self.value**p
        if self.family == "uniform":
            val, _ = integrate.quad(lambda x: x**p / (self.high - self.low), self.low, self.high)
            return val
        if p >= self.tail_exponent:
            raise MomentDivergenceError("divergent moment")
        a, m = self.tail_exponent, self.min_scale
        val, err = integrate.quad(
            lambda x: x**p * a * m**a / x ** (a + 1), m, np.inf, epsrel=rel_tol
        )
        return val

    def describe(self) -> str:
        if self.family == "constant":
            return f"constant({self.value:.17g})"
        if self.family == "uniform":
            return f"uniform({self.low:.17g},{self.high:.17g})"
        return f"pareto({self.min_scale:.17g},{self.tail_exponent:.17g})"


def law_from_string(text: str, beta: float = 0.4) -> RadiusLaw:
    text = text.strip()
    kind, _, args = text.partition("(")
    vals = [float(v) for v in args.rstrip(")").split(",")] if args else []
    if kind == "constant":
        return RadiusLaw(family="constant", value=vals[0], beta=beta)
    if kind == "uniform":
        return RadiusLaw(family="uniform", low=vals[0], high=vals[1], beta=beta)
    if kind == "pareto":
        return RadiusLaw(family="pareto", min_scale=vals[0], tail_exponent=vals[1], beta=beta)
    raise ConfigurationError(f"cannot parse radius law {text!r}")


@dataclass(frozen=True)
class MarkedRealization:
    """Centers and radius marks of one sampled configuration."""

    d: int
    epsilon: float
    intensity: float
    seed: int
    domain: DomainSpec
    law: RadiusLaw
    points: np.ndarray = field(repr=False)  # (N, d), coordinates in (1/eps) D
    radii: np.ndarray = field(repr=False)  # (N,), marks rho_i

    @property
    def n_points(self) -> int:
        return len(self.radii)

    @property
    def hole_exponent(self) -> float:
        return self.d / (self.d - 2)

    @property
    def centers(self) -> np.ndarray:
        """Physical hole centers eps * z_i."""
        return self.epsilon * self.points

    @property
    def hole_radii(self) -> np.ndarray:
        """Physical hole radii eps^(d/(d-2)) * rho_i."""
        return self.epsilon**self.hole_exponent * self.radii


def sample_realization(
    domain: DomainSpec,
    intensity: float,
    law: RadiusLaw,
    epsilon: float,
    seed: int,
    d: int = 3,
) -> MarkedRealization:
    """Sample the marked process restricted to ``(1/eps) D``.

    The count is Poisson with mean ``intensity * |D| / eps^d``; given the
    count, centers are uniform in ``(1/eps) D`` and marks are i.i.d.
    """
    if epsilon <= 0:
        raise ConfigurationError("epsilon must be positive")
    if intensity < 0:
        raise ConfigurationError("intensity must be nonnegative")
    if d < 3:
        raise ConfigurationError("dimension must be at least 3")
    law.validate(d)

    rng = stream(seed, "realization", round(epsilon * 1e12))
    mean = intensity * domain.volume(d) / epsilon**d
    n = int(rng.poisson(mean)) if mean > 0 else 0
    hw = domain.bounding_halfwidth(scale=1.0 / epsilon)
    lo, hi = np.full(d, -hw), np.full(d, hw)
    if domain.shape == "box":
        pts = sample_in_box(rng, n, lo, hi)
    else:
        # rejection from the bounding cube keeps the count exact
        pts = np.empty((n, d))
        got = 0
        while got < n:
            batch = sample_in_box(rng, max(2 * (n - got), 64), lo, hi)
            keep = batch[domain.contains(batch, scale=1.0 / epsilon)]
            take = min(len(keep), n - got)
            pts[got : got + take] = keep[:take]
            got += take
    radii = law.sample(rng, n)
    return MarkedRealization(
        d=d, epsilon=epsilon, intensity=intensity, seed=seed, domain=domain, law=law,
        points=pts, radii=radii,
    )


def holes(r: MarkedRealization) -> list[Ball]:
    """One ball per point: center eps*z_i, radius eps^(d/(d-2)) * rho_i."""
    return [
        Ball(tuple(c), float(a))
        for c, a in zip(r.centers, r.hole_radii)
    ]


def thin(r: MarkedRealization, eta: float) -> MarkedRealization:
    """Keep exactly the points whose nearest neighbor is at distance >= eta.

    Distances are measured between the unscaled coordinates ``z_i``; points
    in a mutually violating pair are both removed.
    """
    if eta <= 0:
        raise ConfigurationError("thinning distance must be positive")
    if r.n_points < 2:
        return r
    tree = cKDTree(r.points)
    dist, _ = tree.query(r.points, k=2)
    keep = dist[:, 1] >= eta
    return replace(r, points=r.points[keep], radii=r.radii[keep])


def count(r: MarkedRealization, region) -> int:
    """Number of points z_i with z_i in (1/eps) * region."""
    if r.n_points == 0:
        return 0
    if isinstance(region, DomainSpec):
        return int(np.sum(region.contains(r.points, scale=1.0 / r.epsilon)))
    if isinstance(region, Ball):
        c = np.asarray(region.center) / r.epsilon
        rad = region.radius / r.epsilon
        return int(np.sum(np.sum((r.points - c) ** 2, axis=1) <= rad**2))
    raise ConfigurationError(f"unsupported query region {type(region)}")


def empirical_moment(law: RadiusLaw, p: float) -> float:
    """p-th moment of the radius law (closed form where available)."""
    return law.moment(p)


# -- line-based text serialization -------------------------------------------

def dump_realization(r: MarkedRealization) -> str:
    buf = io.StringIO()
    buf.write(
        f"# d={r.d} epsilon={r.epsilon:.17g} lambda={r.intensity:.17g} "
        f"seed={r.seed} law={r.law.describe()} beta={r.law.beta:.17g} "
        f"domain={r.domain.shape}({r.domain.extent:.17g})\n"
    )
    for z, rho in zip(r.points, r.radii):
        coords = " ".join(f"{v:.17g}" for v in z)
        buf.write(f"{coords} {rho:.17g}\n")
    return buf.getvalue()


def load_realization(text: str) -> MarkedRealization:
    lines = text.strip().splitlines()
    header = lines[0].lstrip("# ").split()
    meta = dict(kv.split("=", 1) for kv in header)
    d = int(meta["d"])
    law = law_from_string(meta["law"], beta=float(meta.get("beta", 0.4)))
    shape, _, ext = meta["domain"].partition("(")
    domain = DomainSpec(shape=shape, extent=float(ext.rstrip(")")))
    rows = [list(map(float, ln.split())) for ln in lines[1:] if ln.strip()]
    arr = np.asarray(rows, dtype=float).reshape(-1, d + 1)
    return MarkedRealization(
        d=d,
        epsilon=float(meta["epsilon"]),
        intensity=float(meta["lambda"]),
        seed=int(meta["seed"]),
        domain=domain,
        law=law,
        points=arr[:, :d],
        radii=arr[:, d],
    )
