"""Basic geometric primitives shared across the package.

Everything is vectorized over point arrays of shape ``(m, d)``.  Balls are
closed; membership ties on the boundary are resolved by ``<=`` on squared
distances, which is immaterial for Monte Carlo estimates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree


class ConfigurationError(ValueError):
    """Invalid model or solver configuration."""


@dataclass(frozen=True)
class Ball:
    center: tuple
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ConfigurationError(f"ball radius must be positive, got {self.radius}")

    def contains(self, points: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(points)
        c = np.asarray(self.center, dtype=float)
        return np.sum((pts - c) ** 2, axis=1) <= self.radius**2


@dataclass(frozen=True)
class DomainSpec:
    """Axis-aligned box or ball centered at the origin.

    ``extent`` is the half-width of the box or the radius of the ball.  Both
    shapes are star-shaped with respect to the origin by construction.
    """

    shape: str = "box"  # "box" | "ball"
    extent: float = 0.5

    def __post_init__(self):
        if self.shape not in ("box", "ball"):
            raise ConfigurationError(f"unknown domain shape {self.shape!r}")
        if self.extent <= 0:
            raise ConfigurationError("domain extent must be positive")

    def volume(self, d: int) -> float:
        if self.shape == "box":
            return (2.0 * self.extent) ** d
        return unit_ball_volume(d) * self.extent**d

    def contains(self, points: np.ndarray, scale: float = 1.0) -> np.ndarray:
        """Membership in ``scale * D`` (componentwise dilation about the origin)."""
        pts = np.atleast_2d(points)
        if self.shape == "box":
            return np.max(np.abs(pts), axis=1) <= self.extent * scale
        return np.sum(pts**2, axis=1) <= (self.extent * scale) ** 2

    def bounding_halfwidth(self, scale: float = 1.0) -> float:
        return self.extent * scale


def unit_ball_volume(d: int) -> float:
    from math import gamma, pi

    return pi ** (d / 2) / gamma(d / 2 + 1)


def unit_sphere_area(d: int) -> float:
    """Surface area of the unit sphere in R^d (boundary of the unit ball)."""
    return d * unit_ball_volume(d)


def sample_in_ball(rng: np.random.Generator, n: int, d: int, center, radius: float) -> np.ndarray:
    """Uniform points in a closed ball, via direction * radius^(1/d)."""
    x = rng.standard_normal((n, d))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    r = radius * rng.random(n) ** (1.0 / d)
    return np.asarray(center, dtype=float) + x * r[:, None]


def sample_in_box(rng: np.random.Generator, n: int, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    return rng.uniform(lo, hi, size=(n, len(lo)))


def ball_overlap_volume(r1: float, r2: float, dist: float, d: int = 3) -> float:
    """Volume of the intersection of two balls (d = 3 closed form)."""
    if d != 3:
        raise NotImplementedError("overlap volume implemented for d = 3 only")
    if dist >= r1 + r2:
        return 0.0
    if dist <= abs(r1 - r2):
        return unit_ball_volume(3) * min(r1, r2) ** 3
    # spherical lens
    num = (r1 + r2 - dist) ** 2 * (
        dist**2 + 2 * dist * (r1 + r2) - 3 * (r1 - r2) ** 2
    )
    return np.pi * num / (12 * dist)


class NeighborIndex:
    """KD-trees over balls bucketed by radius octave.

    Supports "which balls intersect this ball/point" queries where the ball
    radii span several orders of magnitude, without scanning everything with
    the globally largest radius.
    """

    def __init__(self, centers: np.ndarray, radii: np.ndarray, ids: np.ndarray | None = None):
        centers = np.asarray(centers, dtype=float)
        radii = np.asarray(radii, dtype=float)
        self.ids = np.arange(len(radii)) if ids is None else np.asarray(ids)
        self._buckets = []
        if len(radii) == 0:
            return
        octave = np.floor(np.log2(np.maximum(radii, 1e-300))).astype(int)
        for o in np.unique(octave):
            sel = octave == o
            self._buckets.append(
                (cKDTree(centers[sel]), radii[sel], self.ids[sel], float(radii[sel].max()))
            )

    def query_ball(self, center: np.ndarray, radius: float, factor: float = 1.0):
        """Ids i with |c_i - center| < radius + factor * r_i (strict overlap)."""
        out = []
        for tree, radii, ids, rmax in self._buckets:
            cand = tree.query_ball_point(center, radius + factor * rmax + 1e-300)
            if cand:
                cand = np.asarray(cand)
                dist = np.linalg.norm(tree.data[cand] - center, axis=1)
                keep = dist < radius + factor * radii[cand]
                out.append(ids[cand[keep]])
        if not out:
            return np.empty(0, dtype=self.ids.dtype)
        return np.concatenate(out)

    def query_points(self, points: np.ndarray, factor: float = 1.0) -> np.ndarray:
        """Boolean mask: point j lies in some ball dilated by ``factor``."""
        points = np.atleast_2d(points)
        hit = np.zeros(len(points), dtype=bool)
        for tree, radii, ids, rmax in self._buckets:
            pending = np.flatnonzero(~hit)
            if len(pending) == 0:
                break
            lists = tree.query_ball_point(points[pending], factor * rmax + 1e-300)
            for row, cand in zip(pending, lists):
                if not cand:
                    continue
                cand = np.asarray(cand)
                d2 = np.sum((tree.data[cand] - points[row]) ** 2, axis=1)
                if np.any(d2 <= (factor * radii[cand]) ** 2):
                    hit[row] = True
        return hit

    def covering_ids(self, point: np.ndarray, factor: float = 1.0):
        """Ids of balls whose ``factor``-dilation contains the point."""
        return self.query_ball(np.asarray(point, dtype=float), 0.0, factor=factor)
