"""Floating-point model of the three curves and the Del Pezzo pencil.

Each curve is ``x1^2 + x2^2 + x3^2 = 0, x0^2 = a1 x1^2 + a2 x2^2 + a3 x3^2`` in
P^3. The conic is parametrized by ``(s:t) = (x1 + i x2 : x3) = (-x3 : x1 - i x2)``
and a point of the product lies on ``Y_lambda`` when ``s1 s2 s3 = lambda t1 t2 t3``.
Membership is tested through the eight bilinear equations obtained by choosing
one of the two ratios on each curve, so no ratio is ever divided out.

Everything here is an independent check of the exact quarter-point calculus in
``legendre``: nothing is shared except the group elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .actions import (
    ActionElement,
    Context,
    PerCurveSign,
    Tag,
    fixed_locus_tag,
    per_curve_components,
    subspace_elements,
)

MEMBERSHIP_TOL = 1e-8
AMBIGUITY_BAND = (1e-8, 1e-4)
CLUSTER_TOL = 1e-7
POINT_TOL = 1e-10
GENERICITY_MARGIN = 1e-2
RESAMPLE_BUDGET = 100


class OracleError(RuntimeError):
    pass


class PrecisionError(OracleError):
    """A residual fell in the forbidden band between on and off."""


@dataclass(frozen=True)
class CurveParams:
    a: tuple[complex, complex, complex]
    margin: float

    def quadrics(self, v: np.ndarray) -> tuple[complex, complex]:
        x0, x1, x2, x3 = v
        a1, a2, a3 = self.a
        return x1 * x1 + x2 * x2 + x3 * x3, x0 * x0 - (a1 * x1 * x1 + a2 * x2 * x2 + a3 * x3 * x3)

    def jacobian(self, v: np.ndarray) -> np.ndarray:
        x0, x1, x2, x3 = v
        a1, a2, a3 = self.a
        return np.array([[0, 2 * x1, 2 * x2, 2 * x3], [2 * x0, -2 * a1 * x1, -2 * a2 * x2, -2 * a3 * x3]])


def genericity_margin(a: Sequence[complex]) -> float:
    """Smallest distance between the a_i or from a_i = 0."""
    pairs = [abs(a[i] - a[j]) for i, j in ((0, 1), (0, 2), (1, 2))]
    return float(min(pairs + [abs(x) for x in a]))


def _sample_params(rng: np.random.Generator, margin: float) -> CurveParams:
    for _ in range(RESAMPLE_BUDGET):
        a = tuple(complex(x, y) for x, y in rng.uniform(-2, 2, size=(3, 2)))
        m = genericity_margin(a)
        if m >= margin:
            return CurveParams(a, m)
    raise OracleError("resample budget exhausted while looking for generic curve parameters")


def random_curve(seed: int, margin: float = GENERICITY_MARGIN) -> CurveParams:
    return _sample_params(np.random.default_rng(seed), margin)


def random_curves(seed: int, margin: float = GENERICITY_MARGIN) -> tuple[CurveParams, CurveParams, CurveParams]:
    """Parameters (a_i), (b_i), (c_i) for the three curves, deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    return tuple(_sample_params(rng, margin) for _ in range(3))


@dataclass(frozen=True, eq=False)
class CurvePoint:
    coords: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        v = np.asarray(self.coords, dtype=complex)
        k = int(np.argmax(np.abs(v)))
        if abs(v[k]) == 0:
            raise ValueError("the zero vector is not a projective point")
        object.__setattr__(self, "coords", v / v[k])

    @classmethod
    def checked(cls, coords, params: CurveParams, tol: float = POINT_TOL) -> CurvePoint:
        p = cls(coords)
        r = p.residual(params)
        if r >= tol:
            raise OracleError(f"point is off its curve (residual {r:.2e})")
        return p

    def residual(self, params: CurveParams) -> float:
        return float(max(abs(q) for q in params.quadrics(self.coords)))

    def act(self, s: PerCurveSign) -> CurvePoint:
        a0, a1, a2, a3 = s.signs()
        return CurvePoint(self.coords * np.array([a0, a1, a2, a3]))

    def close_to(self, other: CurvePoint, tol: float = CLUSTER_TOL) -> bool:
        u, v = self.coords, other.coords
        return bool(np.max(np.abs(np.outer(u, v) - np.outer(v, u))) < tol)

    def __repr__(self) -> str:
        return "CurvePoint(" + ", ".join(f"{z:.6g}" for z in self.coords) + ")"


def _sqrt(z: complex) -> complex:
    return complex(np.sqrt(complex(z)))


def points_with_vanishing_coordinate(params: CurveParams, j: int) -> list[CurvePoint]:
    """The four points of the curve with x_j = 0, in closed form."""
    a1, a2, a3 = params.a
    if j == 0:
        # x2 = 1: a1 X + a3 Z = -a2 and X + Z = -1 with X = x1^2, Z = x3^2
        if abs(a1 - a3) < 1e-12:
            raise OracleError("degenerate parameters: a1 = a3")
        X = (a3 - a2) / (a1 - a3)
        Z = -1 - X
        if min(abs(X), abs(Z)) < 1e-12:
            raise OracleError("degenerate parameters: solutions collide")
        r1, r3 = _sqrt(X), _sqrt(Z)
        raw = [(0, s1 * r1, 1, s3 * r3) for s1 in (1, -1) for s3 in (1, -1)]
    else:
        # the remaining two conic coordinates satisfy u^2 + w^2 = 0, so w = +-i u
        others = [k for k in (1, 2, 3) if k != j]
        raw = []
        for w in (1j, -1j):
            v = [0j, 0j, 0j, 0j]
            v[others[0]], v[others[1]] = 1, w
            x0sq = a1 * v[1] ** 2 + a2 * v[2] ** 2 + a3 * v[3] ** 2
            if abs(x0sq) < 1e-12:
                raise OracleError("degenerate parameters: solutions collide")
            r0 = _sqrt(x0sq)
            for s0 in (1, -1):
                u = list(v)
                u[0] = s0 * r0
                raw.append(tuple(u))
    return [CurvePoint.checked(v, params) for v in raw]


def point_from_parameter(params: CurveParams, s: complex, t: complex, sheet: int = 1) -> CurvePoint:
    x1 = (s * s - t * t) / 2
    x2 = (s * s + t * t) / 2j
    x3 = s * t
    a1, a2, a3 = params.a
    x0 = sheet * _sqrt(a1 * x1 * x1 + a2 * x2 * x2 + a3 * x3 * x3)
    return CurvePoint.checked((x0, x1, x2, x3), params, tol=1e-9)


def _ratio_pairs(p: CurvePoint) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
    _, x1, x2, x3 = p.coords
    return (x1 + 1j * x2, x3), (-x3, x1 - 1j * x2)


def eight_equations_residual(p1: CurvePoint, p2: CurvePoint, p3: CurvePoint, lam: complex = 1) -> float:
    """Largest normalized residual of the eight equations cutting out Y_lambda.

    Equation (j1, j2, j3) uses ratio j_k on curve k and reads
    ``prod A = lambda prod B``. Each residual is divided by the product of the
    norms of the ratio pairs it uses (and by max(1, |lambda|)), which makes it
    invariant under rescaling any of the three points.
    """
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    pairs = [_ratio_pairs(p) for p in (p1, p2, p3)]
    scale = max(1.0, abs(lam))
    worst = 0.0
    for choice in itertools.product((0, 1), repeat=3):
        lhs, rhs, norm = 1 + 0j, 1 + 0j, 1.0
        for k, j in enumerate(choice):
            A, B = pairs[k][j]
            lhs *= A
            rhs *= B
            norm *= float(np.hypot(abs(A), abs(B)))
        if norm == 0:
            continue  # both ratios vanish on some curve: the equation is empty
        worst = max(worst, abs(lhs - lam * rhs) / (norm * scale))
    return worst


@dataclass
class LemmaReport:
    passed: bool
    trials: int
    lam: complex
    max_on_residual: float
    min_off_residual: float
    counterexamples: list[dict]

    def as_dict(self) -> dict:
        return {
            "pass": self.passed,
            "trials": self.trials,
            "lambda": [self.lam.real, self.lam.imag],
            "max_on_residual": self.max_on_residual,
            "min_off_residual": self.min_off_residual,
            "counterexamples": self.counterexamples,
        }


def _random_parameter(rng: np.random.Generator) -> tuple[complex, complex]:
    z = complex(*rng.normal(size=2))
    return z, 1 + 0j


def verify_delpezzo_lemma(
    seed: int,
    trials: int,
    lam: complex = 1,
    on_tol: float = 1e-9,
    off_tol: float = 1e-3,
) -> LemmaReport:
    """Sample points on and off Y_lambda and check the eight equations separate them.

    On-samples solve ``s1 s2 s3 = lambda t1 t2 t3`` for s3; off-samples perturb
    that s3 by a random factor bounded away from 1.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    rng = np.random.default_rng(seed)
    curves = random_curves(seed)
    max_on, min_off = 0.0, np.inf
    bad = []
    for n in range(trials):
        (s1, t1), (s2, t2) = _random_parameter(rng), _random_parameter(rng)
        t3 = 1 + 0j
        s3 = lam * t1 * t2 * t3 / (s1 * s2)
        sheets = rng.choice((-1, 1), size=3)
        p1 = point_from_parameter(curves[0], s1, t1, sheets[0])
        p2 = point_from_parameter(curves[1], s2, t2, sheets[1])
        on = eight_equations_residual(p1, p2, point_from_parameter(curves[2], s3, t3, sheets[2]), lam)
        factor = np.exp(complex(rng.uniform(0.3, 1.5), rng.uniform(-np.pi, np.pi)))
        off = eight_equations_residual(p1, p2, point_from_parameter(curves[2], s3 * factor, t3, sheets[2]), lam)
        max_on, min_off = max(max_on, on), min(min_off, off)
        if on >= on_tol or off <= off_tol:
            bad.append({"trial": n, "on_residual": on, "off_residual": off})
    return LemmaReport(not bad, trials, complex(lam), max_on, float(min_off), bad)


def _fixed_coordinate(s: PerCurveSign) -> int:
    """Coordinate whose vanishing cuts out the fixed points of a sign action."""
    flips = [i for i, b in zip((0, 1, 3), s.bits()) if b]
    if len(flips) == 3:
        return 2
    if len(flips) == 1:
        return flips[0]
    raise ValueError("this sign action is fixed-point free or trivial")


def fixed_points_on_curve(s: PerCurveSign, params: CurveParams) -> list[CurvePoint]:
    pts = points_with_vanishing_coordinate(params, _fixed_coordinate(s))
    for p in pts:
        if not p.act(s).close_to(p):
            raise OracleError("computed fixed point is not fixed")
    return pts


Triple = tuple[CurvePoint, CurvePoint, CurvePoint]


def fixed_points_on_T_numeric(e: ActionElement, curves: Sequence[CurveParams]) -> list[Triple]:
    if fixed_locus_tag(e) is not Tag.DIM0:
        raise ValueError(f"{e} does not have isolated fixed points")
    per_curve = [fixed_points_on_curve(s, c) for s, c in zip(per_curve_components(e), curves)]
    return list(itertools.product(*per_curve))


@dataclass(frozen=True)
class Tolerances:
    membership: float = MEMBERSHIP_TOL
    band_ceiling: float = AMBIGUITY_BAND[1]
    cluster: float = CLUSTER_TOL

    def __post_init__(self) -> None:
        if not 0 < self.membership < self.band_ceiling:
            raise ValueError("need 0 < membership threshold < ambiguity-band ceiling")
        if self.cluster <= 0:
            raise ValueError("cluster tolerance must be positive")


DEFAULT_TOL = Tolerances()


def classify_residual(residual: float, tol: Tolerances = DEFAULT_TOL) -> bool:
    """On (True) below the membership threshold, off above the band, error in between."""
    if residual < tol.membership:
        return True
    if residual <= tol.band_ceiling:
        raise PrecisionError(
            f"residual {residual:.3e} lies in the ambiguous band [{tol.membership:g}, {tol.band_ceiling:g}]"
        )
    return False


def points_on_xhat(
    e: ActionElement, curves: Sequence[CurveParams], lam: complex = 1, tol: Tolerances = DEFAULT_TOL
) -> list[Triple]:
    return [
        t for t in fixed_points_on_T_numeric(e, curves) if classify_residual(eight_equations_residual(*t, lam), tol)
    ]


def count_on_xhat_numeric(
    e: ActionElement, curves: Sequence[CurveParams], lam: complex = 1, tol: Tolerances = DEFAULT_TOL
) -> int:
    return len(points_on_xhat(e, curves, lam, tol))


def count_on_base_locus_numeric(
    e: ActionElement, curves: Sequence[CurveParams], lams=(1, 2.5 - 0.7j), tol: Tolerances = DEFAULT_TOL
) -> int:
    """Fixed points lying on two distinct members of the pencil, hence on all of them."""
    n = 0
    for t in fixed_points_on_T_numeric(e, curves):
        if all(classify_residual(eight_equations_residual(*t, lam), tol) for lam in lams):
            n += 1
    return n


def meets_numeric(e: ActionElement, ctx: Context, seed: int, tol: Tolerances = DEFAULT_TOL) -> bool:
    curves = random_curves(seed)
    if ctx is Context.BASE_LOCUS:
        return count_on_base_locus_numeric(e, curves, tol=tol) > 0
    return count_on_xhat_numeric(e, curves, tol=tol) > 0


def act_triple(e: ActionElement, t: Triple) -> Triple:
    return tuple(p.act(s) for p, s in zip(t, per_curve_components(e)))


def _same(t: Triple, u: Triple, tol: float) -> bool:
    return all(p.close_to(q, tol) for p, q in zip(t, u))


def numeric_orbits(
    points: Sequence[Triple], group: Sequence[ActionElement], cluster: float = CLUSTER_TOL
) -> list[list[int]]:
    """Orbits of the group on the points, by index; images are matched at ``cluster``."""

    def find(t: Triple) -> int:
        hits = [i for i, u in enumerate(points) if _same(t, u, cluster)]
        if len(hits) != 1:
            raise OracleError(f"image point matched {len(hits)} points")
        return hits[0]

    images = {g: [find(act_triple(g, t)) for t in points] for g in group}
    seen: set[int] = set()
    orbits = []
    for i in range(len(points)):
        if i in seen:
            continue
        orbit = sorted({images[g][i] for g in group})
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


@dataclass
class CaseCounts:
    case_id: str
    seed: int
    on_t: int
    on_xhat: int
    orbit_sizes: list[int]
    max_on_residual: float
    min_off_residual: float

    def as_dict(self) -> dict:
        return {
            "case": self.case_id,
            "seed": self.seed,
            "fixed_points_on_T": self.on_t,
            "on_xhat": self.on_xhat,
            "orbits": len(self.orbit_sizes),
            "orbit_sizes": self.orbit_sizes,
            "max_on_residual": self.max_on_residual,
            "min_off_residual": self.min_off_residual,
        }


def case_counts(case, seed: int, tol: Tolerances = DEFAULT_TOL) -> CaseCounts:
    """Numeric fixed-point and orbit counts for one case's distinguished element."""
    curves = random_curves(seed)
    pts = fixed_points_on_T_numeric(case.fixed_element, curves)
    res = [eight_equations_residual(*t) for t in pts]
    on = [t for t, r in zip(pts, res) if classify_residual(r, tol)]
    group = subspace_elements(case.span())
    orbits = numeric_orbits(on, group, tol.cluster)
    on_res = [r for r in res if r < tol.membership]
    off_res = [r for r in res if r >= tol.membership]
    return CaseCounts(
        case.case_id,
        seed,
        len(pts),
        len(on),
        sorted(len(o) for o in orbits),
        float(max(on_res, default=0.0)),
        float(min(off_res, default=float("inf"))),
    )


def is_smooth(params: CurveParams, samples: int = 20, seed: int = 0, tol: float = 1e-6) -> bool:
    """Rank-2 Jacobian at sampled points of the curve."""
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        s, t = _random_parameter(rng)
        p = point_from_parameter(params, s, t)
        sv = np.linalg.svd(params.jacobian(p.coords), compute_uv=False)
        if sv[-1] < tol * sv[0]:
            return False
    return True


__all__ = [
    "CurveParams",
    "CurvePoint",
    "OracleError",
    "PrecisionError",
    "Tolerances",
    "classify_residual",
    "random_curve",
    "random_curves",
    "points_with_vanishing_coordinate",
    "eight_equations_residual",
    "verify_delpezzo_lemma",
    "fixed_points_on_T_numeric",
    "count_on_xhat_numeric",
    "count_on_base_locus_numeric",
    "meets_numeric",
    "numeric_orbits",
    "case_counts",
]
