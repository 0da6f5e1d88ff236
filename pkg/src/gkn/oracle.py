"""Exact verification that plane points impose independent conditions.

A point ``P`` with multiplicity demand ``s`` asks a degree-``d`` form to
vanish at ``P`` together with all its partial derivatives of order ``< s``;
that is ``s(s+1)/2`` linear conditions on the ``(d+1)(d+2)/2`` coefficients.
The conditions are realized as rows of an exact rational matrix whose rank
is computed by fraction-free elimination.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, perm
from typing import Sequence

import numpy as np

from .criteria import plane_severi_bound

GENERATOR = "numpy.Philox4x64-10/SeedSequence"
DEFAULT_SEED = 20240611
DEFAULT_COORD_BOUND = 100


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class PlanePoint:
    """Homogeneous point, scaled so its last nonzero coordinate is 1."""

    xyz: tuple[Fraction, Fraction, Fraction]

    def __init__(self, xyz: Sequence):
        vals = [Fraction(v) for v in xyz]
        if len(vals) != 3:
            raise OracleError(f"a plane point needs 3 coordinates, got {len(vals)}")
        nz = [i for i, v in enumerate(vals) if v != 0]
        if not nz:
            raise OracleError("(0:0:0) is not a point")
        c = vals[nz[-1]]
        object.__setattr__(self, "xyz", tuple(v / c for v in vals))

    @property
    def chart(self) -> int:
        """Index of the canonical (last nonzero) coordinate."""
        return max(i for i, v in enumerate(self.xyz) if v != 0)

    def __str__(self):
        return "(" + ":".join(str(v) for v in self.xyz) + ")"


@dataclass(frozen=True)
class PointConditionScheme:
    points: tuple[tuple[PlanePoint, int], ...]
    degree: int

    def __init__(self, points, degree: int):
        pts = tuple((p if isinstance(p, PlanePoint) else PlanePoint(p), int(m))
                    for p, m in points)
        if degree < 0:
            raise OracleError(f"degree must be >= 0, got {degree}")
        if any(m < 1 for _, m in pts):
            raise OracleError("multiplicities must be >= 1")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "degree", int(degree))

    @property
    def condition_count(self) -> int:
        return sum(m * (m + 1) // 2 for _, m in self.points)

    @property
    def h0(self) -> int:
        return h0_plane(self.degree)

    def with_degree(self, degree: int) -> PointConditionScheme:
        return PointConditionScheme(self.points, degree)

    def to_dict(self) -> dict:
        return {"degree": self.degree,
                "points": [{"xyz": [str(v) for v in p.xyz], "mult": m}
                           for p, m in self.points]}


def h0_plane(d: int) -> int:
    """Dimension of the space of degree-d ternary forms."""
    return (d + 1) * (d + 2) // 2 if d >= 0 else 0


def monomials(d: int) -> list[tuple[int, int, int]]:
    """Exponent triples of degree d, x > y > z lexicographic."""
    return [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


def jet_rows(point: PlanePoint, mult: int, degree: int,
             chart: int | None = None) -> list[list[Fraction]]:
    """Rows of partial derivatives of order < mult at ``point``.

    The forms are dehomogenized by setting coordinate ``chart`` to 1 (the
    point is rescaled accordingly); the default is the canonical chart.
    """
    if chart is None:
        chart = point.chart
    c = point.xyz[chart]
    if c == 0:
        raise OracleError(f"point {point} does not lie in chart {chart}")
    affine = [i for i in range(3) if i != chart]
    u0, v0 = (point.xyz[i] / c for i in affine)
    mons = monomials(degree)
    rows = []
    for order in range(mult):
        for a in range(order, -1, -1):
            b = order - a
            row = []
            for e in mons:
                p, q = e[affine[0]], e[affine[1]]
                if a > p or b > q:
                    row.append(Fraction(0))
                else:
                    row.append(perm(p, a) * perm(q, b) * u0 ** (p - a) * v0 ** (q - b))
            rows.append(row)
    return rows


def _check_distinct(scheme: PointConditionScheme) -> None:
    seen: dict[PlanePoint, int] = {}
    dups = []
    for i, (p, _) in enumerate(scheme.points):
        if p in seen:
            dups.append(f"{p} (entries {seen[p]} and {i})")
        else:
            seen[p] = i
    if dups:
        raise OracleError("duplicate points: " + ", ".join(dups))


def evaluation_matrix(scheme: PointConditionScheme,
                      charts: Sequence[int | None] | None = None) -> list[list[Fraction]]:
    _check_distinct(scheme)
    if charts is None:
        charts = [None] * len(scheme.points)
    rows = []
    for (p, m), ch in zip(scheme.points, charts):
        rows.extend(jet_rows(p, m, scheme.degree, ch))
    return rows


def exact_rank(M: Sequence[Sequence]) -> int:
    """Rank over Q by Bareiss elimination on the denominator-cleared matrix."""
    rows = []
    for row in M:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        ints = [x.numerator * (den // x.denominator) for x in row]
        if any(ints):
            rows.append(ints)
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        piv = p[col]
        for i in range(rank + 1, len(rows)):
            r = rows[i]
            f = r[col]
            # exact division is guaranteed by Sylvester's identity
            rows[i] = [(piv * r[j] - f * p[j]) // prev if j > col else 0
                       for j in range(ncols)]
        prev = piv
        rank += 1
        if rank == len(rows):
            break
    return rank


@dataclass(frozen=True)
class RankReport:
    rows: int
    cols: int
    rank: int
    expected_conditions: int
    h0: int

    @property
    def independent(self) -> bool:
        return self.rank == min(self.expected_conditions, self.h0)

    @property
    def residual_dimension(self) -> int:
        return self.h0 - self.rank

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "rank": self.rank,
                "expected_conditions": self.expected_conditions, "h0": self.h0,
                "independent": self.independent,
                "residual_dimension": self.residual_dimension}


def independent_conditions(scheme: PointConditionScheme) -> RankReport:
    M = evaluation_matrix(scheme)
    return RankReport(len(M), scheme.h0, exact_rank(M), scheme.condition_count, scheme.h0)


# ---------------------------------------------------------------------------
# random configurations

def _rng(seed) -> np.random.Generator:
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return np.random.Generator(np.random.Philox(seed))


def random_configuration(count: int, multiplicity: int = 1,
                         coord_bound: int = DEFAULT_COORD_BOUND, seed=DEFAULT_SEED,
                         degree: int = 0) -> PointConditionScheme:
    """``count`` distinct affine points ``(x:y:1)`` with integer x, y in
    ``[-coord_bound, coord_bound]``."""
    if coord_bound < 1 or count < 1:
        raise OracleError("need coord_bound >= 1 and count >= 1")
    side = 2 * coord_bound + 1
    if count > side * side:
        raise OracleError(
            f"cannot place {count} distinct points on a {side}x{side} grid")
    rng = _rng(seed)
    chosen: list[tuple[int, int]] = []
    seen = set()
    while len(chosen) < count:
        x, y = (int(v) for v in rng.integers(-coord_bound, coord_bound, size=2, endpoint=True))
        if (x, y) not in seen:
            seen.add((x, y))
            chosen.append((x, y))
    return PointConditionScheme([((x, y, 1), multiplicity) for x, y in chosen], degree)


def trial_seeds(seed, trials: int) -> list[np.random.SeedSequence]:
    return np.random.SeedSequence(seed).spawn(trials)


@dataclass(frozen=True)
class SeveriVerification:
    n: int
    k: int
    degree: int
    delta: int
    trials: int
    seed: int
    coord_bound: int
    ranks: tuple[int, ...]
    overflow_ranks: tuple[int, ...]  # ranks with delta + 1 points

    @property
    def independent_trials(self) -> int:
        return sum(r == self.delta for r in self.ranks)

    @property
    def capped(self) -> bool:
        """Every delta+1 configuration has rank at most h0 = delta."""
        return all(r <= self.delta for r in self.overflow_ranks)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "degree": self.degree, "delta": self.delta,
                "trials": self.trials, "seed": self.seed, "generator": GENERATOR,
                "coord_bound": self.coord_bound,
                "independent_trials": self.independent_trials,
                "summary": f"independent in {self.independent_trials}/{self.trials} trials",
                "overflow_points": self.delta + 1,
                "overflow_max_rank": max(self.overflow_ranks, default=None),
                "overflow_capped": self.capped}


def verify_plane_severi(n: int, k: int, trials: int, seed: int = DEFAULT_SEED,
                        coord_bound: int = DEFAULT_COORD_BOUND) -> SeveriVerification:
    """Sample the conclusion of the plane Severi bound: ``delta`` general simple
    points impose independent conditions on curves of degree ``n - 3 - k``."""
    delta = plane_severi_bound(n, k).bound
    degree = n - 3 - k
    ranks, over = [], []
    for ss in trial_seeds(seed, trials):
        a, b = ss.spawn(2)
        ranks.append(independent_conditions(
            random_configuration(delta, 1, coord_bound, a, degree)).rank)
        over.append(independent_conditions(
            random_configuration(delta + 1, 1, coord_bound, b, degree)).rank)
    return SeveriVerification(n, k, degree, delta, trials, seed, coord_bound,
                              tuple(ranks), tuple(over))


# ---------------------------------------------------------------------------
# point-list files

def parse_scheme(data) -> PointConditionScheme:
    """Read ``{"degree": d, "points": [{"xyz": ["1","0","1"], "mult": 1}, ...]}``."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        pts = [([Fraction(str(c)) for c in entry["xyz"]], int(entry.get("mult", 1)))
               for entry in data["points"]]
        return PointConditionScheme(pts, int(data["degree"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, OracleError):
            raise
        raise OracleError(f"malformed point list: {exc}") from exc
