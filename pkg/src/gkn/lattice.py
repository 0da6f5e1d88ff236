"""Picard lattices of the supported surfaces.

A surface is modelled by the Gram matrix of its intersection form together
with the classes of the hyperplane section ``H`` and the canonical divisor
``K``.  Everything is integer arithmetic; cohomological facts that cannot be
read off the lattice are carried as declared flags.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence


class LatticeError(ValueError):
    """Raised for malformed lattice data or unsupported queries."""


class SurfaceKind(str, Enum):
    PROJECTIVE_PLANE = "projective_plane"
    SMOOTH_QUADRIC = "quadric"
    COMPLETE_INTERSECTION = "complete_intersection"
    GENERAL_LATTICE = "lattice"


@dataclass(frozen=True)
class DivisorClass:
    coords: tuple[int, ...]

    def __init__(self, coords: Sequence[int]):
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        _same_length(self, other)
        return DivisorClass([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        _same_length(self, other)
        return DivisorClass([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> DivisorClass:
        return DivisorClass([-a for a in self.coords])

    def __mul__(self, n: int) -> DivisorClass:
        return DivisorClass([n * a for a in self.coords])

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"DivisorClass({list(self.coords)})"


def _same_length(a: DivisorClass, b: DivisorClass) -> None:
    if len(a) != len(b):
        raise LatticeError(f"dimension mismatch: {len(a)} vs {len(b)}")


def _always_true(_: int) -> bool:
    return True


@dataclass(frozen=True)
class SurfaceModel:
    """A surface ``S`` in ``P^r`` seen through its Picard lattice.

    ``ambient_dim`` is the ``r`` of the embedding; it is only needed for the
    Brill-Noether number and may be ``None`` for user lattices.
    """

    kind: SurfaceKind
    gram: tuple[tuple[int, ...], ...]
    hyperplane: DivisorClass
    canonical: DivisorClass
    ambient_dim: int | None = None
    multidegrees: tuple[int, ...] = ()
    h1_kH_vanishes: Callable[[int], bool] = field(default=_always_true, compare=False)
    k_normal_flag: Callable[[int], bool] = field(default=_always_true, compare=False)
    # raw flag values for user lattices, kept for serialization
    declared_flags: tuple[tuple[str, bool], ...] = ()

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        n = len(gram)
        if n == 0 or any(len(row) != n for row in gram):
            raise LatticeError("gram must be a nonempty square matrix")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise LatticeError("gram matrix is not symmetric")
        for name, cls in (("H", self.hyperplane), ("K", self.canonical)):
            if len(cls) != n:
                raise LatticeError(
                    f"dimension mismatch: {name} has length {len(cls)}, lattice rank is {n}")
        if self.degree <= 0:
            raise LatticeError(f"H^2 must be positive, got {self.degree}")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def degree(self) -> int:
        return intersect(self, self.hyperplane, self.hyperplane)

    def multiple_of_h(self, n: int) -> DivisorClass:
        return n * self.hyperplane

    def divisor(self, coords: Sequence[int]) -> DivisorClass:
        d = DivisorClass(coords)
        if len(d) != self.rank:
            raise LatticeError(
                f"dimension mismatch: divisor has length {len(d)}, lattice rank is {self.rank}")
        return d

    @property
    def name(self) -> str:
        if self.kind is SurfaceKind.PROJECTIVE_PLANE:
            return "P2"
        if self.kind is SurfaceKind.SMOOTH_QUADRIC:
            return "quadric"
        if self.kind is SurfaceKind.COMPLETE_INTERSECTION:
            degs = ",".join(str(d) for d in self.multidegrees)
            return f"CI(r={self.ambient_dim}; {degs})"
        return f"lattice(rank {self.rank})"


def projective_plane() -> SurfaceModel:
    return SurfaceModel(SurfaceKind.PROJECTIVE_PLANE, ((1,),), DivisorClass([1]),
                        DivisorClass([-3]), ambient_dim=2)


def smooth_quadric() -> SurfaceModel:
    # basis: the two rulings, so coordinates are bidegrees
    return SurfaceModel(SurfaceKind.SMOOTH_QUADRIC, ((0, 1), (1, 0)), DivisorClass([1, 1]),
                        DivisorClass([-2, -2]), ambient_dim=3)


def complete_intersection(ambient_dim: int, degrees: Sequence[int]) -> SurfaceModel:
    """Rank-one model of a smooth complete intersection surface in ``P^r``.

    The Picard group is taken to be generated by ``H``; only multiples of
    ``H`` are ever needed on these surfaces.
    """
    degrees = tuple(int(d) for d in degrees)
    if ambient_dim < 3:
        raise LatticeError(f"ambient dimension must be >= 3, got {ambient_dim}")
    if len(degrees) != ambient_dim - 2:
        raise LatticeError(
            f"a surface in P^{ambient_dim} needs {ambient_dim - 2} degrees, got {len(degrees)}")
    if any(d < 1 for d in degrees):
        raise LatticeError("hypersurface degrees must be >= 1")
    return SurfaceModel(SurfaceKind.COMPLETE_INTERSECTION, ((math.prod(degrees),),),
                        DivisorClass([1]), DivisorClass([sum(degrees) - ambient_dim - 1]),
                        ambient_dim=ambient_dim, multidegrees=degrees)


def general_lattice(gram, hyperplane, canonical, *, h1_kH_vanishes: bool = False,
                    k_normal: bool = False, ambient_dim: int | None = None) -> SurfaceModel:
    """User-supplied lattice.  The cohomological flags are taken on trust."""
    return SurfaceModel(
        SurfaceKind.GENERAL_LATTICE, gram, DivisorClass(hyperplane), DivisorClass(canonical),
        ambient_dim=ambient_dim,
        h1_kH_vanishes=lambda _k, v=bool(h1_kH_vanishes): v,
        k_normal_flag=lambda _k, v=bool(k_normal): v,
        declared_flags=(("h1_kH_vanishes", bool(h1_kH_vanishes)), ("k_normal", bool(k_normal))),
    )


# ---------------------------------------------------------------------------
# intersection numbers

def intersect(S: SurfaceModel, A: DivisorClass, B: DivisorClass) -> int:
    """Intersection number ``A . B`` on ``S``."""
    n = len(S.gram)
    if len(A) != n or len(B) != n:
        raise LatticeError(
            f"dimension mismatch: got lengths {len(A)} and {len(B)}, lattice rank is {n}")
    return sum(a * S.gram[i][j] * b
               for i, a in enumerate(A.coords) if a
               for j, b in enumerate(B.coords) if b)


def self_intersection(S: SurfaceModel, A: DivisorClass) -> int:
    return intersect(S, A, A)


def arithmetic_genus(S: SurfaceModel, D: DivisorClass) -> int:
    """Adjunction genus ``D.(D+K)/2 + 1``."""
    twice = intersect(S, D, D + S.canonical)
    if twice % 2:
        raise LatticeError("non-integral genus: inconsistent lattice data")
    return twice // 2 + 1


def geometric_genus(S: SurfaceModel, D: DivisorClass, delta: int) -> int:
    if delta < 0:
        raise LatticeError(f"delta must be nonnegative, got {delta}")
    pa = arithmetic_genus(S, D)
    if delta > pa:
        raise LatticeError(
            f"geometric genus would be negative: delta={delta} exceeds p_a={pa}")
    return pa - delta


def hodge_number(S: SurfaceModel, D: DivisorClass, k: int) -> int:
    """``k^2 ((D.H)^2 - D^2 H^2)``; nonnegative by Hodge index when H is ample."""
    dh = intersect(S, D, S.hyperplane)
    return k * k * (dh * dh - intersect(S, D, D) * S.degree)


def _check_positivity_supported(S: SurfaceModel) -> None:
    if S.kind is SurfaceKind.GENERAL_LATTICE:
        raise LatticeError("positivity undecidable for user lattices")


def is_nef(S: SurfaceModel, D: DivisorClass) -> bool:
    _check_positivity_supported(S)
    S.divisor(D.coords)
    return all(c >= 0 for c in D.coords)


def is_big_and_nef(S: SurfaceModel, D: DivisorClass) -> bool:
    _check_positivity_supported(S)
    S.divisor(D.coords)
    return all(c > 0 for c in D.coords)


def canonical_multiple(S: SurfaceModel) -> int | None:
    """The integer ``k`` with ``K = kH`` if there is one, else ``None``."""
    k = None
    for h, c in zip(S.hyperplane.coords, S.canonical.coords):
        if h == 0:
            if c != 0:
                return None
            continue
        if c % h:
            return None
        q = c // h
        if k is None:
            k = q
        elif k != q:
            return None
    return k


# ---------------------------------------------------------------------------
# parsing and serialization

_BUILTIN_CI = re.compile(r"^ci:(.*)$")


def parse_surface(spec) -> SurfaceModel:
    """Build a model from a JSON-style dict, a JSON string, or a shorthand.

    Shorthands: ``p2``, ``quadric``, ``ci:r=3,deg=6`` (``deg`` may repeat
    with ``+``, e.g. ``ci:r=4,deg=2+2``).
    """
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("{"):
            return parse_surface(json.loads(text))
        low = text.lower()
        if low in ("p2", "plane", "projective_plane"):
            return projective_plane()
        if low == "quadric":
            return smooth_quadric()
        m = _BUILTIN_CI.match(low)
        if m:
            params = dict(part.split("=", 1) for part in m.group(1).split(",") if part)
            try:
                r = int(params["r"])
                degs = [int(d) for d in params["deg"].split("+")]
            except (KeyError, ValueError) as exc:
                raise LatticeError(f"bad complete intersection shorthand {spec!r}") from exc
            return complete_intersection(r, degs)
        raise LatticeError(f"unknown surface shorthand {spec!r}")

    if not isinstance(spec, dict) or "model" not in spec:
        raise LatticeError("surface spec must be an object with a 'model' field")
    model = spec["model"]
    if model == "projective_plane":
        return projective_plane()
    if model == "quadric":
        return smooth_quadric()
    if model == "complete_intersection":
        return complete_intersection(int(spec["ambient_dim"]), spec["degrees"])
    if model == "lattice":
        flags = spec.get("flags", {})
        amb = spec.get("ambient_dim")
        return general_lattice(spec["gram"], spec["H"], spec["K"],
                               h1_kH_vanishes=flags.get("h1_kH_vanishes", False),
                               k_normal=flags.get("k_normal", False),
                               ambient_dim=None if amb is None else int(amb))
    raise LatticeError(f"unknown surface model {model!r}")


def surface_to_dict(S: SurfaceModel) -> dict:
    if S.kind is SurfaceKind.PROJECTIVE_PLANE:
        return {"model": "projective_plane"}
    if S.kind is SurfaceKind.SMOOTH_QUADRIC:
        return {"model": "quadric"}
    if S.kind is SurfaceKind.COMPLETE_INTERSECTION:
        return {"model": "complete_intersection", "ambient_dim": S.ambient_dim,
                "degrees": list(S.multidegrees)}
    out = {"model": "lattice", "gram": [list(r) for r in S.gram],
           "H": list(S.hyperplane.coords), "K": list(S.canonical.coords),
           "flags": dict(S.declared_flags)}
    if S.ambient_dim is not None:
        out["ambient_dim"] = S.ambient_dim
    return out


_NH = re.compile(r"^\s*([+-]?\d*)\s*\*?\s*H\s*$")


def parse_divisor(S: SurfaceModel, spec) -> DivisorClass:
    """Parse ``"nH"``, ``"(a,b)"``, a coordinate list or ``{"coords": [...]}``."""
    if isinstance(spec, DivisorClass):
        return S.divisor(spec.coords)
    if isinstance(spec, dict):
        return S.divisor(spec["coords"])
    if isinstance(spec, (list, tuple)):
        return S.divisor(spec)
    if isinstance(spec, str):
        text = spec.strip()
        m = _NH.match(text)
        if m:
            coef = m.group(1)
            n = int(coef) if coef not in ("", "+", "-") else int(coef + "1")
            return S.multiple_of_h(n)
        if text.startswith("{"):
            return parse_divisor(S, json.loads(text))
        stripped = text.strip("()[]")
        try:
            return S.divisor([int(p) for p in stripped.split(",")])
        except ValueError as exc:
            raise LatticeError(f"cannot parse divisor {spec!r}") from exc
    raise LatticeError(f"cannot parse divisor {spec!r}")
