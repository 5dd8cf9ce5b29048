"""Good/bad hole classification and the dilated covering of the bad set.

The construction partitions the holes of a realization into a *good* set
(small, well separated, away from the bad region) and a *bad* set, splits the
bad holes into geometric size classes ``J_k`` for ``k = -3 .. k_max``, and
selects dilation factors ``lambda_j`` so that the dilated balls cover every
bad hole while satisfying a family of separation invariants:

* upper classes (``k >= -2``) are sparse; within one class and across
  adjacent classes their ``theta^2``-dilated covering balls are disjoint,
  enforced by absorbing the smaller ball into the larger one;
* class ``-3`` is a dense catch-all, where pairwise dilated disjointness is
  unattainable at laboratory scale.  Instead every hole is protected: no
  other ball's exclusion zone (theta-dilation for lower classes, the plain
  ball for earlier same-class members) may cut into a hole that a covering
  ball owns.  Violators are absorbed, which is a subcritical process because
  holes never move or grow;
* a covering ball fully contained in a higher-class ball is absorbed into it;
* a covering ball deeply straddling a higher-class ball is grown until a
  fixed fraction of its volume lies outside, so its residual cell keeps
  positive volume relative to the ball;
* good holes keep a buffer of ``eps^(1+delta)`` (in unscaled coordinates)
  from the theta-dilated covering balls; violators are demoted to bad and
  the selection is rebuilt until stable.

Distances in the good-set predicates (separation, safety buffer) are
measured between the unscaled coordinates ``z_i``, matching the thinning
operation; size-class brackets compare the physical hole radii against
powers of ``eps``.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from .geometry import ConfigurationError, NeighborIndex, ball_overlap_volume, unit_ball_volume
from .points import MarkedRealization, thin

GOOD_CLASS = 999  # sentinel in class arrays


class EpsilonTooLarge(RuntimeError):
    """The realization cannot be covered at this eps with these parameters."""


@dataclass(frozen=True)
class CoveringParams:
    delta: float = 0.05
    theta: float = 1.2
    lam_max: float = 1.0e3
    k_max: int = 40
    c_hole: float = 0.01  # target lower bound for residual cell volume fractions
    sliver_margin: float = 0.05  # enforced outside-volume fraction against higher-class balls

    def __post_init__(self):
        if self.delta <= 0 or self.theta <= 1 or self.lam_max < 1 or self.k_max < 0:
            raise ConfigurationError("need delta > 0, theta > 1, lam_max >= 1, k_max >= 0")

    @staticmethod
    def default_k_max(d: int, delta: float) -> int:
        return math.ceil((d / (d - 2) - 1) / delta)


@dataclass(frozen=True)
class Covering:
    """Result of the classification/partition/selection pipeline.

    Arrays are indexed by point index into the source realization.  ``lam``
    is meaningful for alive covering balls; ``owner_of`` maps every bad point
    to the alive ball whose covering ball contains its hole.
    """

    realization: MarkedRealization
    params: CoveringParams
    good: np.ndarray  # sorted indices of good holes
    alive: np.ndarray  # sorted indices of selected covering balls (the set J)
    class_of: np.ndarray  # per point: -3..k_max for bad, GOOD_CLASS for good
    lam: np.ndarray  # per point dilation factor (1.0 where not applicable)
    absorbed_into: np.ndarray  # per point: immediate absorber or -1
    owner_of: np.ndarray  # per bad point: final alive owner (self if alive)
    order_rank: np.ndarray = field(repr=False)  # per point: rank of alive balls, -1 otherwise

    # -- derived geometry ---------------------------------------------------

    @property
    def centers(self) -> np.ndarray:
        return self.realization.centers

    @property
    def hole_radii(self) -> np.ndarray:
        return self.realization.hole_radii

    def covering_radii(self, idx) -> np.ndarray:
        return self.lam[idx] * self.hole_radii[idx]

    @property
    def bad(self) -> np.ndarray:
        n = self.realization.n_points
        mask = np.ones(n, dtype=bool)
        mask[self.good] = False
        return np.flatnonzero(mask)

    def alive_in_class(self, k: int) -> np.ndarray:
        return self.alive[self.class_of[self.alive] == k]

    @property
    def active_classes(self) -> list[int]:
        ks = np.unique(self.class_of[self.alive])
        return sorted(int(k) for k in ks)

    def owned_holes(self, j: int) -> np.ndarray:
        return np.flatnonzero(self.owner_of == j)


# -- size classes -------------------------------------------------------------


def size_class_of(radii: np.ndarray, epsilon: float, delta: float, k_max: int) -> np.ndarray:
    """Class indices for physical hole radii.

    Class -3 collects radii below ``eps^(1+2 delta)``; class k >= -2 is the
    half-open bracket ``eps^(1-delta k) <= r < eps^(1-delta (k+1))`` with the
    lower edge inclusive.  Radii at or above the ``k_max`` bracket raise
    EpsilonTooLarge.
    """
    radii = np.atleast_1d(np.asarray(radii, dtype=float))
    ks = np.full(radii.shape, -3, dtype=int)
    big = radii >= epsilon ** (1 + 2 * delta)
    if np.any(big):
        t = np.log(radii[big]) / math.log(epsilon)
        # eps^(1-delta k) <= r < eps^(1-delta(k+1))  <=>  k = floor((1-t)/delta);
        # the 1e-9 guard keeps radii sitting exactly on a bracket edge inclusive.
        k = np.floor((1.0 - t) / delta + 1e-9).astype(int)
        k = np.maximum(k, -2)
        if np.any(k > k_max):
            j = int(np.argmax(k))
            raise EpsilonTooLarge(
                f"hole radius {radii[big][j]:.6g} exceeds the k_max={k_max} "
                f"bracket at eps={epsilon}"
            )
        ks[big] = k
    return ks


def partition_size_classes(
    r: MarkedRealization, bad: np.ndarray, params: CoveringParams
) -> dict[int, np.ndarray]:
    """Assign bad holes to size classes; raises EpsilonTooLarge on overflow."""
    ks = size_class_of(r.hole_radii[bad], r.epsilon, params.delta, params.k_max)
    return {int(k): bad[ks == k] for k in np.unique(ks)}


# -- pair queries -------------------------------------------------------------


def _overlap_pairs(centers_a, radii_a, ids_a, centers_b, radii_b, ids_b, pad=0.0):
    """Pairs (i from a, j from b) with dist < r_a + r_b + pad, octaved on b."""
    if len(ids_a) == 0 or len(ids_b) == 0:
        return np.empty((0, 2), dtype=int)
    out = []
    octave = np.floor(np.log2(np.maximum(radii_b, 1e-300))).astype(int)
    for o in np.unique(octave):
        sel = octave == o
        tree = cKDTree(centers_b[sel])
        rmax = float(radii_b[sel].max())
        lists = tree.query_ball_point(centers_a, radii_a + rmax + pad + 1e-300)
        sub_ids = ids_b[sel]
        sub_r = radii_b[sel]
        sub_c = centers_b[sel]
        for row, cand in enumerate(lists):
            if not cand:
                continue
            cand = np.asarray(cand)
            dist = np.linalg.norm(sub_c[cand] - centers_a[row], axis=1)
            keep = dist < radii_a[row] + sub_r[cand] + pad
            for c in cand[keep]:
                out.append((ids_a[row], sub_ids[c]))
    if not out:
        return np.empty((0, 2), dtype=int)
    return np.asarray(out, dtype=int)


# -- selection state ----------------------------------------------------------


class _SelectState:
    def __init__(self, r: MarkedRealization, params: CoveringParams, bad: np.ndarray):
        self.r = r
        self.params = params
        self.centers = r.centers
        self.hole_r = r.hole_radii
        self.n = r.n_points
        self.alive = np.zeros(self.n, dtype=bool)
        self.alive[bad] = True
        self.lam = np.ones(self.n)
        self.absorbed_into = np.full(self.n, -1, dtype=int)
        self.owner_of = np.full(self.n, -1, dtype=int)
        self.owner_of[bad] = bad
        self.class_of = np.full(self.n, GOOD_CLASS, dtype=int)
        for k, idx in partition_size_classes(r, bad, params).items():
            self.class_of[idx] = k

    def cov_r(self, idx):
        return self.lam[idx] * self.hole_r[idx]

    def order_keys(self, idx: np.ndarray) -> np.ndarray:
        """Canonical processing order: covering radius, then center, then index."""
        cov = self.cov_r(idx)
        cols = [self.centers[idx][:, j] for j in range(self.centers.shape[1])]
        perm = np.lexsort(tuple(reversed(cols)) + (cov,))
        return idx[perm]

    def absorb(self, small: int, big: int) -> None:
        """Remove ``small`` from J; ``big`` takes over its holes and grows
        just enough to contain them."""
        assert self.alive[small] and self.alive[big] and small != big
        self.alive[small] = False
        self.absorbed_into[small] = big
        mine = np.flatnonzero(self.owner_of == small)
        self.owner_of[mine] = big
        dist = np.linalg.norm(self.centers[mine] - self.centers[big], axis=1)
        need = np.max(dist + self.hole_r[mine])
        lam_needed = need / self.hole_r[big]
        if lam_needed > self.lam[big]:
            self.lam[big] = lam_needed
        self._check_caps(big)

    def _check_caps(self, j: int) -> None:
        p, r = self.params, self.r
        if self.lam[j] > p.lam_max or self.cov_r(j) > p.lam_max * r.epsilon ** (
            2 * r.d * p.delta
        ):
            raise EpsilonTooLarge(
                f"required dilation lambda={self.lam[j]:.3g} (radius {self.cov_r(j):.3g}) "
                f"exceeds the cap at eps={r.epsilon}; retry with smaller eps"
            )

    # -- invariant enforcement passes --------------------------------------

    def pass_upper_separation(self) -> int:
        """theta^2-dilated covering balls of one class and its adjacent class
        must be disjoint, for classes -2 and up.  The smaller ball of a
        violating pair is absorbed with a theta safety margin."""
        th2 = self.params.theta**2
        changed = 0
        while True:
            idx = np.flatnonzero(self.alive & (self.class_of >= -2))
            if len(idx) < 2:
                return changed
            pairs = _overlap_pairs(
                self.centers[idx], th2 * self.cov_r(idx), idx,
                self.centers[idx], th2 * self.cov_r(idx), idx,
            )
            pairs = pairs[pairs[:, 0] < pairs[:, 1]]
            pairs = pairs[np.abs(self.class_of[pairs[:, 0]] - self.class_of[pairs[:, 1]]) <= 1]
            if len(pairs) == 0:
                return changed
            a, b = pairs[0]
            for a2, b2 in pairs[1:]:
                if max(self.cov_r(a2), self.cov_r(b2)) > max(self.cov_r(a), self.cov_r(b)):
                    a, b = a2, b2
            small, big = (a, b) if self._precedes(a, b) else (b, a)
            dist = np.linalg.norm(self.centers[small] - self.centers[big])
            lam_needed = self.params.theta * (dist + self.cov_r(small)) / self.hole_r[big]
            self.alive[small] = False
            self.absorbed_into[small] = big
            mine = np.flatnonzero(self.owner_of == small)
            self.owner_of[mine] = big
            self.lam[big] = max(self.lam[big], lam_needed)
            self._check_caps(big)
            changed += 1

    def _precedes(self, a: int, b: int) -> bool:
        """True when a precedes b in (covering radius, center, index) order."""
        ra, rb = self.cov_r(a), self.cov_r(b)
        if ra != rb:
            return ra < rb
        ta, tb = tuple(self.centers[a]), tuple(self.centers[b])
        if ta != tb:
            return ta < tb
        return a < b

    def pass_containment(self) -> int:
        """Absorb any ball whose covering ball lies inside a single
        higher-class covering ball."""
        changed = 0
        while True:
            idx = np.flatnonzero(self.alive)
            if len(idx) < 2:
                return changed
            pairs = _overlap_pairs(
                self.centers[idx], np.zeros(len(idx)), idx,
                self.centers[idx], self.cov_r(idx), idx,
            )
            pairs = pairs[pairs[:, 0] != pairs[:, 1]]
            if len(pairs) == 0:
                return changed
            j, i = pairs[:, 0], pairs[:, 1]
            keep = self.class_of[i] > self.class_of[j]
            j, i = j[keep], i[keep]
            if len(j) == 0:
                return changed
            dist = np.linalg.norm(self.centers[j] - self.centers[i], axis=1)
            inside = dist + self.cov_r(j) <= self.cov_r(i)
            j, i = j[inside], i[inside]
            if len(j) == 0:
                return changed
            done = set()
            for a, b in sorted(zip(j, i), key=lambda t: (self.cov_r(t[0]), t[0])):
                if a in done or not (self.alive[a] and self.alive[b]):
                    continue
                self.absorb(a, b)
                done.add(a)
                changed += 1

    def pass_hole_protection(self) -> int:
        """No alive ball's exclusion zone may cut an owned hole.

        Exclusion zones: the theta-dilated covering ball against holes owned
        by strictly higher classes, the plain covering ball against holes
        owned by later same-class members.  The smaller covering ball of a
        violating pair is absorbed into the larger.
        """
        theta = self.params.theta
        changed = 0
        while True:
            idx = np.flatnonzero(self.alive)
            holes = np.flatnonzero(self.owner_of >= 0)
            if len(idx) == 0 or len(holes) == 0:
                return changed
            pairs = _overlap_pairs(
                self.centers[idx], theta * self.cov_r(idx), idx,
                self.centers[holes], self.hole_r[holes], holes,
            )
            if len(pairs) == 0:
                return changed
            viol = []
            for i, h in pairs:
                j = self.owner_of[h]
                if j == i or not self.alive[i]:
                    continue
                ci, cj = self.class_of[i], self.class_of[j]
                dist = np.linalg.norm(self.centers[i] - self.centers[h])
                if ci < cj and dist < theta * self.cov_r(i) + self.hole_r[h]:
                    viol.append((i, j))
                elif ci == cj and self._precedes(i, j) and dist < self.cov_r(i) + self.hole_r[h]:
                    viol.append((i, j))
            if not viol:
                return changed
            for i, j in sorted(set(viol), key=lambda t: (min(self.cov_r(t[0]), self.cov_r(t[1])), t)):
                if not (self.alive[i] and self.alive[j]):
                    continue
                small, big = (i, j) if self._precedes(i, j) else (j, i)
                self.absorb(small, big)
                changed += 1

    def pass_sliver_margin(self) -> int:
        """Grow balls that deeply straddle a higher-class ball until at least
        ``sliver_margin`` of their volume lies outside it."""
        margin = self.params.sliver_margin
        changed = 0
        idx = np.flatnonzero(self.alive)
        if len(idx) < 2:
            return 0
        pairs = _overlap_pairs(
            self.centers[idx], self.cov_r(idx), idx,
            self.centers[idx], self.cov_r(idx), idx,
        )
        pairs = pairs[pairs[:, 0] != pairs[:, 1]]
        pairs = pairs[self.class_of[pairs[:, 1]] > self.class_of[pairs[:, 0]]]
        for j, i in sorted(map(tuple, pairs), key=lambda t: (self.cov_r(t[0]), t)):
            if not (self.alive[j] and self.alive[i]):
                continue
            dist = float(np.linalg.norm(self.centers[j] - self.centers[i]))
            rj, ri = self.cov_r(j), self.cov_r(i)
            if dist >= rj + ri:
                continue

            def outside_frac(rad: float) -> float:
                vol = unit_ball_volume(3) * rad**3
                return 1.0 - ball_overlap_volume(rad, ri, dist) / vol

            if outside_frac(rj) >= margin:
                continue
            lo, hi = rj, dist + ri + self.hole_r[j]
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if outside_frac(mid) >= margin:
                    hi = mid
                else:
                    lo = mid
            self.lam[j] = hi / self.hole_r[j]
            self._check_caps(j)
            changed += 1
        return changed

    def run(self) -> None:
        for _ in range(1000):
            changed = self.pass_upper_separation()
            changed += self.pass_containment()
            changed += self.pass_hole_protection()
            changed += self.pass_sliver_margin()
            if changed == 0:
                return
        raise EpsilonTooLarge("covering selection did not stabilize")


# -- public pipeline ----------------------------------------------------------


def _candidate_good(r: MarkedRealization, params: CoveringParams) -> np.ndarray:
    """Size + separation predicate of the good set (before the safety buffer)."""
    eps, delta = r.epsilon, params.delta
    size_ok = r.hole_radii <= eps ** (1 + 2 * delta)
    kept = thin(r, 2 * eps ** (1 + delta / 2))
    sep_ok = np.zeros(r.n_points, dtype=bool)
    if kept.n_points:
        tree = cKDTree(r.points)
        _, orig = tree.query(kept.points, k=1)
        sep_ok[orig] = True
    elif r.n_points == 1:
        sep_ok[:] = True
    return size_ok & sep_ok


def _demote_unsafe(r, params, good_mask: np.ndarray, state: _SelectState) -> int:
    """Demote good holes whose buffer to the theta-dilated covering is too
    small; distances are taken in unscaled coordinates."""
    eps = r.epsilon
    buffer_phys = eps ** (2 + params.delta)
    good = np.flatnonzero(good_mask)
    alive = np.flatnonzero(state.alive)
    if len(good) == 0 or len(alive) == 0:
        return 0
    pairs = _overlap_pairs(
        r.centers[alive], params.theta * state.cov_r(alive), alive,
        r.centers[good], r.hole_radii[good], good,
        pad=buffer_phys,
    )
    if len(pairs) == 0:
        return 0
    demote = np.unique(pairs[:, 1])
    good_mask[demote] = False
    return len(demote)


def build_covering(r: MarkedRealization, params: CoveringParams | None = None) -> Covering:
    """Full pipeline: classify, partition, select dilations, safety fixed point."""
    params = params or CoveringParams()
    good_mask = _candidate_good(r, params)
    state = None
    for _ in range(100):
        bad = np.flatnonzero(~good_mask)
        state = _SelectState(r, params, bad)
        state.run()
        if _demote_unsafe(r, params, good_mask, state) == 0:
            break
    else:
        raise EpsilonTooLarge("safety-layer demotion did not stabilize")

    alive = np.flatnonzero(state.alive)
    order = state.order_keys(alive)
    rank = np.full(r.n_points, -1, dtype=int)
    rank[order] = np.arange(len(order))
    class_of = state.class_of.copy()
    class_of[good_mask] = GOOD_CLASS
    return Covering(
        realization=r,
        params=params,
        good=np.flatnonzero(good_mask),
        alive=np.sort(alive),
        class_of=class_of,
        lam=state.lam,
        absorbed_into=state.absorbed_into,
        owner_of=state.owner_of,
        order_rank=rank,
    )


def classify_holes(r: MarkedRealization, params: CoveringParams | None = None):
    """(good indices, bad indices) after the safety fixed point."""
    c = build_covering(r, params)
    return c.good, c.bad


def select_dilations(r: MarkedRealization, classes: dict[int, np.ndarray], params: CoveringParams):
    """Dilations and pruned index set for a given class partition.

    Runs the same enforcement passes as ``build_covering`` but on the caller's
    partition (no good set involved).
    """
    bad = np.concatenate(list(classes.values())) if classes else np.empty(0, dtype=int)
    state = _SelectState(r, params, np.sort(bad))
    state.class_of[:] = GOOD_CLASS
    for k, idx in classes.items():
        state.class_of[idx] = k
    state.run()
    alive = np.flatnonzero(state.alive)
    return {int(j): float(state.lam[j]) for j in alive}, alive, state


# -- verification --------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    violations: int = 0
    first: tuple | None = None
    detail: str = ""


@dataclass
class CoveringReport:
    entries: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def __str__(self) -> str:
        lines = []
        for e in self.entries:
            status = "pass" if e.passed else f"FAIL ({e.violations} violations, first={e.first})"
            lines.append(f"{e.name:28s} {status} {e.detail}")
        return "\n".join(lines)


def verify_covering(c: Covering) -> CoveringReport:
    """Exhaustive exact checks of every covering invariant."""
    r, p = c.realization, c.params
    eps, theta = r.epsilon, p.theta
    centers, hole_r = c.centers, c.hole_radii
    alive = c.alive
    cov_r = c.covering_radii(alive)
    entries = []

    def record(name, pairs, detail=""):
        pairs = list(pairs)
        entries.append(
            CheckResult(name, len(pairs) == 0, len(pairs), pairs[0] if pairs else None, detail)
        )

    # size-class brackets (alive and absorbed keep their class)
    bad_idx = c.bad
    expected = size_class_of(hole_r[bad_idx], eps, p.delta, p.k_max) if len(bad_idx) else []
    record(
        "class-brackets",
        [(int(j),) for j, k in zip(bad_idx, expected) if c.class_of[j] != k],
    )

    # good-set size and separation
    good = c.good
    record("good-size", [(int(i),) for i in good if hole_r[i] > eps ** (1 + 2 * p.delta)])
    viol = []
    if len(good) >= 2:
        tree = cKDTree(r.points[good])
        dist, nbr = tree.query(r.points[good], k=2)
        bad_pairs = np.flatnonzero(dist[:, 1] < 2 * eps ** (1 + p.delta / 2))
        viol = [(int(good[i]), int(good[nbr[i, 1]])) for i in bad_pairs]
    record("good-separation", viol)

    # dilation range and covering radius cap
    record(
        "dilation-range",
        [(int(j),) for j, lam in zip(alive, c.lam[alive]) if not (1.0 <= lam <= p.lam_max)],
    )
    cap = p.lam_max * eps ** (2 * r.d * p.delta)
    record("radius-cap", [(int(j),) for j, rr in zip(alive, cov_r) if rr > cap])

    # cover: every bad hole inside its owner's covering ball
    viol = []
    for h in bad_idx:
        j = c.owner_of[h]
        if j < 0 or not np.any(alive == j):
            viol.append((int(h), int(j)))
            continue
        dist = np.linalg.norm(centers[h] - centers[j])
        if dist + hole_r[h] > c.lam[j] * hole_r[j] + 1e-12 * hole_r[j]:
            viol.append((int(h), int(j)))
    record("cover", viol)

    # theta^2 separation among classes >= -2 (same and adjacent classes)
    upper = alive[c.class_of[alive] >= -2]
    viol = []
    if len(upper) >= 2:
        rr = theta**2 * c.covering_radii(upper)
        pairs = _overlap_pairs(centers[upper], rr, upper, centers[upper], rr, upper)
        for a, b in pairs:
            if a < b and abs(c.class_of[a] - c.class_of[b]) <= 1:
                viol.append((int(a), int(b)))
    record("upper-class-separation", viol)

    # hole protection
    viol = []
    holes = bad_idx
    if len(alive) and len(holes):
        pairs = _overlap_pairs(
            centers[alive], theta * c.covering_radii(alive), alive,
            centers[holes], hole_r[holes], holes,
        )
        for i, h in pairs:
            j = c.owner_of[h]
            if j == i:
                continue
            ci, cj = c.class_of[i], c.class_of[j]
            dist = np.linalg.norm(centers[i] - centers[h])
            if ci < cj and dist < theta * c.lam[i] * hole_r[i] + hole_r[h]:
                viol.append((int(i), int(h)))
            elif ci == cj and c.order_rank[i] < c.order_rank[j] and dist < c.lam[i] * hole_r[i] + hole_r[h]:
                viol.append((int(i), int(h)))
    record("hole-protection", viol)

    # sliver margin against higher-class balls
    viol = []
    if len(alive) >= 2:
        pairs = _overlap_pairs(
            centers[alive], c.covering_radii(alive), alive,
            centers[alive], c.covering_radii(alive), alive,
        )
        for j, i in pairs:
            if c.class_of[i] <= c.class_of[j] or j == i:
                continue
            rj, ri = c.lam[j] * hole_r[j], c.lam[i] * hole_r[i]
            dist = np.linalg.norm(centers[j] - centers[i])
            if dist >= rj + ri:
                continue
            vol = unit_ball_volume(3) * rj**3
            outside = 1.0 - ball_overlap_volume(rj, ri, dist) / vol
            if outside < p.sliver_margin - 1e-9:
                viol.append((int(j), int(i)))
    record("sliver-margin", viol, detail=f"margin={p.sliver_margin}")

    # safety layer: good holes vs theta-dilated covering, unscaled gap
    viol = []
    if len(good) and len(alive):
        pairs = _overlap_pairs(
            centers[alive], theta * c.covering_radii(alive), alive,
            centers[good], hole_r[good], good,
            pad=eps ** (2 + p.delta),
        )
        viol = [(int(i), int(g)) for i, g in pairs]
    record("safety-layer", viol, detail=f"buffer eps^(1+delta) = {eps ** (1 + p.delta):.4g} (unscaled)")

    return CoveringReport(entries)


# -- serialization --------------------------------------------------------------


def dump_covering(c: Covering) -> str:
    p = c.params
    buf = io.StringIO()
    buf.write(
        f"# delta={p.delta:.17g} theta={p.theta:.17g} lam_max={p.lam_max:.17g} "
        f"k_max={p.k_max} epsilon={c.realization.epsilon:.17g} seed={c.realization.seed}\n"
    )
    alive = set(int(j) for j in c.alive)
    for i in range(c.realization.n_points):
        if c.class_of[i] == GOOD_CLASS:
            buf.write(f"{i} good 1\n")
        elif i in alive:
            buf.write(f"{i} {c.class_of[i]} {c.lam[i]:.17g}\n")
        else:
            buf.write(f"{i} absorbed 0\n")
    return buf.getvalue()
