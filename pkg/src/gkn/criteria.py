"""Numerical sufficiency criteria for geometric k-normality.

Every verdict here is one-directional: a positive outcome guarantees the
property, a failed check only means "no conclusion".  The single negative
statement produced is the Brill-Noether obstruction for k = 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .lattice import (
    DivisorClass,
    LatticeError,
    SurfaceModel,
    arithmetic_genus,
    canonical_multiple,
    geometric_genus,
    hodge_number,
    intersect,
    is_big_and_nef,
)
from .surd import QuadraticSurd


class CriteriaError(ValueError):
    pass


def _check_k(k: int) -> None:
    if k < 1:
        raise CriteriaError(f"k must be a positive integer, got {k}")


# ---------------------------------------------------------------------------
# hypotheses and the bound

@dataclass(frozen=True)
class TraceEntry:
    tag: str
    lhs: int
    rhs: int
    relation: str  # always a strict inequality lhs <relation> rhs
    passed: bool

    def to_dict(self) -> dict:
        return {"tag": self.tag, "lhs": self.lhs, "relation": self.relation,
                "rhs": self.rhs, "passed": self.passed}


def check_hypotheses(S: SurfaceModel, D: DivisorClass, k: int) -> list[TraceEntry]:
    """Evaluate the four numerical hypotheses on ``(S, D, kH)``."""
    _check_k(k)
    H = S.hyperplane
    E = D - 2 * k * H
    dh = intersect(S, D, H)
    e2 = intersect(S, E, E)
    t = intersect(S, D, E)
    nu = hodge_number(S, D, k)
    return [
        TraceEntry("(2.1)", dh, k * S.degree, ">", dh > k * S.degree),
        TraceEntry("(2.2a)", e2, 0, ">", e2 > 0),
        TraceEntry("(2.2b)", t, 0, ">", t > 0),
        TraceEntry("(2.3)", nu, 4 * (t - 4), "<", nu < 4 * (t - 4)),
    ]


@dataclass(frozen=True)
class BoundReport:
    """The bound ``f = (t + sqrt(s)) / 8`` with ``t = D.(D-2kH)``, ``s = D^2 (D-2kH)^2``."""

    k: int
    D_squared: int
    D_dot_H: int
    residual_squared: int  # (D - 2kH)^2
    t: int
    s: int
    nu: int
    bound: QuadraticSurd
    max_admissible_delta: int | None

    def admits(self, delta: int) -> bool:
        """``delta < f`` decided in integers."""
        u = 8 * delta - self.t
        return u < 0 or u * u < self.s

    @property
    def surd_text(self) -> str:
        return f"({self.t}+sqrt({self.s}))/8"

    def to_dict(self) -> dict:
        return {
            "k": self.k, "D2": self.D_squared, "DH": self.D_dot_H,
            "residual2": self.residual_squared, "t": self.t, "s": self.s, "nu": self.nu,
            "bound_exact": self.surd_text, "bound_normal_form": str(self.bound),
            "bound_is_rational": self.bound.is_rational,
            "bound_approx": float(self.bound),
            "max_admissible_delta": self.max_admissible_delta,
        }


def delta_bound(S: SurfaceModel, D: DivisorClass, k: int) -> BoundReport:
    _check_k(k)
    H = S.hyperplane
    E = D - 2 * k * H
    d2 = intersect(S, D, D)
    e2 = intersect(S, E, E)
    t = intersect(S, D, E)
    s = d2 * e2
    if e2 <= 0 or t <= 0 or s < 0:
        raise CriteriaError("hypotheses (2.2) violated; bound undefined")
    bound = QuadraticSurd(t, 1, s, 8)
    top = bound.largest_int_below()
    return BoundReport(k, d2, intersect(S, D, H), e2, t, s, hodge_number(S, D, k), bound,
                       top if top >= 0 else None)


class Outcome(str, Enum):
    SUFFICIENT = "SufficientGkn"
    HYPOTHESIS_FAILED = "HypothesisFailed"
    BOUND_FAILED = "BoundFailed"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class GknVerdict:
    outcome: Outcome
    k: int
    delta: int
    trace: tuple[TraceEntry, ...] = ()
    failed: tuple[str, ...] = ()
    bound: BoundReport | None = None
    reason: str = ""
    # whether h^1 vanishing is also necessary (D - kH nef and big); None if undecidable
    vanishing_is_necessary: bool | None = None

    @property
    def sufficient(self) -> bool:
        return self.outcome is Outcome.SUFFICIENT

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value, "k": self.k, "delta": self.delta,
            "failed": list(self.failed), "reason": self.reason,
            "trace": [e.to_dict() for e in self.trace],
            "bound": self.bound.to_dict() if self.bound else None,
            "vanishing_is_necessary": self.vanishing_is_necessary,
        }


def _nef_and_big_or_none(S: SurfaceModel, D: DivisorClass) -> bool | None:
    try:
        return is_big_and_nef(S, D)
    except LatticeError:
        return None


def gkn_sufficient(S: SurfaceModel, D: DivisorClass, k: int, delta: int) -> GknVerdict:
    """Decide whether the numerical criterion guarantees geometric k-normality
    of a curve in ``|D|`` with ``delta`` nodes and cusps."""
    _check_k(k)
    if delta < 0:
        raise CriteriaError(f"delta must be nonnegative, got {delta}")
    upgrade = _nef_and_big_or_none(S, D - k * S.hyperplane)
    pa = arithmetic_genus(S, D)
    if delta > pa:
        return GknVerdict(Outcome.INAPPLICABLE, k, delta,
                          reason=f"delta={delta} exceeds the arithmetic genus {pa}",
                          vanishing_is_necessary=upgrade)

    trace = tuple(check_hypotheses(S, D, k))
    failed = [e.tag for e in trace if not e.passed]
    if not (S.h1_kH_vanishes(k) and S.k_normal_flag(k)):
        failed.append("flags")
    if failed:
        return GknVerdict(Outcome.HYPOTHESIS_FAILED, k, delta, trace, tuple(failed),
                          vanishing_is_necessary=upgrade)

    report = delta_bound(S, D, k)
    outcome = Outcome.SUFFICIENT if report.admits(delta) else Outcome.BOUND_FAILED
    return GknVerdict(outcome, k, delta, trace, (), report, vanishing_is_necessary=upgrade)


# ---------------------------------------------------------------------------
# complete intersections

@dataclass(frozen=True)
class CIBound:
    n: int
    k: int
    deg_S: int
    n_at_least_2k_plus_1: bool
    degree_condition: bool  # deg(S) > 4 / (n(n-2k))
    bound: Fraction
    max_delta: int | None

    @property
    def admissible(self) -> bool:
        return self.n_at_least_2k_plus_1 and self.degree_condition

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "deg_S": self.deg_S,
                "admissible": self.admissible,
                "n_at_least_2k_plus_1": self.n_at_least_2k_plus_1,
                "degree_condition": self.degree_condition,
                "bound": str(self.bound), "max_delta": self.max_delta}


def ci_bound(n: int, k: int, deg_S: int) -> CIBound:
    """``delta < n(n-2k) deg(S) / 4`` for ``C`` in ``|nH|`` on a complete intersection."""
    _check_k(k)
    if n < 1 or deg_S < 1:
        raise CriteriaError("n and deg_S must be positive integers")
    prod = n * (n - 2 * k)
    bound = Fraction(prod * deg_S, 4)
    cond_n = n >= 2 * k + 1
    cond_deg = prod > 0 and deg_S * prod > 4
    if bound > 0:
        top = bound.numerator // bound.denominator
        if top == bound:
            top -= 1
    else:
        top = None
    return CIBound(n, k, deg_S, cond_n, cond_deg, bound, top)


# ---------------------------------------------------------------------------
# the auxiliary quadratic

@dataclass(frozen=True)
class InstabilityQuadratic:
    coefficients: tuple[int, int, int]  # (16, -4t, nu)
    alpha: QuadraticSurd
    beta: QuadraticSurd
    integer_witness: int | None

    def __call__(self, x) -> int | Fraction:
        a, b, c = self.coefficients
        return a * x * x + b * x + c

    def to_dict(self) -> dict:
        return {"coefficients": list(self.coefficients),
                "alpha": str(self.alpha), "beta": str(self.beta),
                "alpha_approx": float(self.alpha), "beta_approx": float(self.beta),
                "integer_witness": self.integer_witness}


def instability_quadratic(S: SurfaceModel, D: DivisorClass, k: int) -> InstabilityQuadratic:
    """``F(x) = 16x^2 - 4tx + nu`` and its open negativity interval."""
    report = delta_bound(S, D, k)
    t, nu = report.t, report.nu
    # reduced discriminant 4(t^2 - 4 nu) = 4 D^2 (D-2kH)^2
    disc = t * t - 4 * nu
    if disc != report.s:
        raise AssertionError(f"discriminant mismatch: t^2-4nu={disc}, s={report.s}")
    alpha = QuadraticSurd(t, -1, disc, 8)
    beta = QuadraticSurd(t, 1, disc, 8)
    if beta != report.bound:
        raise AssertionError("larger root differs from the delta bound")
    w = alpha.smallest_int_above()
    witness = w if beta.compare(w) > 0 else None
    return InstabilityQuadratic((16, -4 * t, nu), alpha, beta, witness)


def bogomolov_discriminant(S: SurfaceModel, D: DivisorClass, k: int, delta0: int) -> int:
    """``(D - kH)^2 - 4 delta0``; positive means Bogomolov-unstable."""
    _check_k(k)
    E = D - k * S.hyperplane
    return intersect(S, E, E) - 4 * delta0


# ---------------------------------------------------------------------------
# Brill-Noether

def brill_noether_rho(g: int, r: int, d: int) -> int:
    if g < 0 or r < 1 or d < 1:
        raise CriteriaError("need g >= 0, r >= 1, d >= 1")
    return g - (r + 1) * (r - d + g)


class ObstructionOutcome(str, Enum):
    NOT_G2N = "NotG2N"
    NO_CONCLUSION = "NoConclusion"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class ObstructionVerdict:
    outcome: ObstructionOutcome
    reasons: tuple[str, ...] = ()
    g: int | None = None
    r: int | None = None
    d: int | None = None
    rho: int | None = None

    def to_dict(self) -> dict:
        return {"outcome": self.outcome.value, "reasons": list(self.reasons),
                "g": self.g, "r": self.r, "d": self.d, "rho": self.rho}


def obstruction_2normal(S: SurfaceModel, D: DivisorClass, delta: int) -> ObstructionVerdict:
    """Positive Brill-Noether number rules out geometric 2-normality, provided
    ``S`` is linearly and 2-normal, ``h^1(O_S(iH)) = 0`` for i = 0, 1, 2 and
    ``D - 3H`` is big and nef."""
    reasons = []
    g = r = d = rho = None
    try:
        g = geometric_genus(S, D, delta)
    except LatticeError as exc:
        reasons.append(str(exc))
    r = S.ambient_dim
    if r is None:
        reasons.append("ambient dimension of S unknown")
    d = intersect(S, D, S.hyperplane)
    if g is not None and r is not None and d >= 1:
        rho = brill_noether_rho(g, r, d)

    if not (S.k_normal_flag(1) and S.k_normal_flag(2)):
        reasons.append("S not declared linearly normal and 2-normal")
    if not all(S.h1_kH_vanishes(i) for i in (0, 1, 2)):
        reasons.append("h^1(O_S(iH)) = 0 for i = 0, 1, 2 not declared")
    try:
        if not is_big_and_nef(S, D - 3 * S.hyperplane):
            reasons.append("D−3H not big and nef")
    except LatticeError as exc:
        reasons.append(str(exc))

    if reasons or rho is None:
        return ObstructionVerdict(ObstructionOutcome.INAPPLICABLE, tuple(reasons), g, r, d, rho)
    if rho > 0:
        return ObstructionVerdict(ObstructionOutcome.NOT_G2N, (f"rho = {rho} > 0",), g, r, d, rho)
    return ObstructionVerdict(ObstructionOutcome.NO_CONCLUSION, (f"rho = {rho} <= 0",),
                              g, r, d, rho)


# ---------------------------------------------------------------------------
# regularity and Severi varieties

@dataclass(frozen=True)
class ZeroRegularityReport:
    applies: bool
    failures: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.applies

    def to_dict(self) -> dict:
        return {"applies": self.applies, "failures": list(self.failures)}


def zero_regularity_equiv(S: SurfaceModel, D: DivisorClass, k: int) -> ZeroRegularityReport:
    """Whether h^1-vanishing of the ideal twist is equivalent to 0-regularity
    of the next twist, i.e. ``D - (k+1)H`` big and nef and ``h^1(O_S(kH)) = 0``."""
    _check_k(k)
    failures = []
    if not is_big_and_nef(S, D - (k + 1) * S.hyperplane):
        failures.append(f"D−{k + 1}H not big and nef")
    if not S.h1_kH_vanishes(k):
        failures.append(f"h^1(O_S({k}H)) = 0 not declared")
    return ZeroRegularityReport(not failures, tuple(failures))


@dataclass(frozen=True)
class SeveriVerdict:
    regular_point_guaranteed: bool
    k: int | None
    gkn: GknVerdict | None
    reason: str = ""

    def to_dict(self) -> dict:
        return {"regular_point_guaranteed": self.regular_point_guaranteed, "k": self.k,
                "reason": self.reason, "gkn": self.gkn.to_dict() if self.gkn else None}


def severi_regularity_sufficient(S: SurfaceModel, D: DivisorClass, delta: int) -> SeveriVerdict:
    """On a surface with ``K ~ kH`` (k >= 1) the adjoint system ``|D + K - kH|``
    is ``|D|`` itself, so the k-normality criterion certifies that ``[C]`` is a
    regular point of the Severi variety."""
    k = canonical_multiple(S)
    if k is None or k < 1:
        return SeveriVerdict(False, None, None, "K_S is not a positive multiple of H")
    verdict = gkn_sufficient(S, D, k, delta)
    return SeveriVerdict(verdict.sufficient, k, verdict,
                         "" if verdict.sufficient else f"criterion gave {verdict.outcome.value}")


@dataclass(frozen=True)
class PlaneSeveriBound:
    n: int
    k: int
    bound: int
    h0_check: int

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "bound": self.bound, "h0_check": self.h0_check,
                "target_degree": self.n - 3 - self.k}


def plane_severi_bound(n: int, k: int) -> PlaneSeveriBound:
    """Largest delta for which the general delta-nodal plane curve of degree n
    is known to be geometrically k-normal (k = 1, 2, 3)."""
    if k not in (1, 2, 3):
        raise CriteriaError("theorem proved only for k=1,2,3")
    if n - 3 - k < 0:
        raise CriteriaError(f"need n - 3 - k >= 0, got n={n}, k={k}")
    num = n * n - (3 + 2 * k) * n + 2 + k * k + 3 * k
    h0 = (n - k - 1) * (n - k - 2) // 2
    if num % 2 or num // 2 != h0:
        raise AssertionError(f"quadratic {num}/2 disagrees with h0 = {h0}")
    return PlaneSeveriBound(n, k, num // 2, h0)


def castelnuovo_max_genus(d: int, r: int) -> int:
    """Castelnuovo's bound for a non-degenerate smooth curve of degree d in P^r."""
    if d < 1 or r < 2:
        raise CriteriaError("need d >= 1 and r >= 2")
    m, eps = divmod(d - 1, r - 1)
    return m * (m - 1) * (r - 1) // 2 + m * eps


__all__ = [
    "BoundReport", "CIBound", "CriteriaError", "GknVerdict", "InstabilityQuadratic",
    "ObstructionOutcome", "ObstructionVerdict", "Outcome", "PlaneSeveriBound",
    "SeveriVerdict", "TraceEntry", "ZeroRegularityReport", "bogomolov_discriminant",
    "brill_noether_rho", "castelnuovo_max_genus", "check_hypotheses", "ci_bound",
    "delta_bound", "gkn_sufficient", "instability_quadratic", "obstruction_2normal",
    "plane_severi_bound", "severi_regularity_sufficient", "zero_regularity_equiv",
]
