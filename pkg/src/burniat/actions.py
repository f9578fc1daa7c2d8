"""Sign actions of (Z/2)^6 and (Z/2)^5 on a product of three elliptic curves.

Each curve ``E_k`` is cut out by two diagonal quadrics in P^3 with coordinates
``(x0:x1:x2:x3)``; a group element multiplies ``x0, x1, x3`` by signs (``x2`` is
normalized to stay fixed). The group elements are 7-tuples of bits

    (eps0, eta1, eps1, eta0, eps2, zeta0, eps3),   eps1 + eps2 + eps3 = 0,

where curve 1 gets the sign bits ``(eps0, eta1, eps1)``, curve 2 gets
``(eta0, eta1, eps2)`` and curve 3 gets ``(zeta0, eta1, eps3)``.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .f2space import F2Subspace, F2Vector

FIELDS = ("eps0", "eta1", "eps1", "eta0", "eps2", "zeta0", "eps3")

# Script coordinates: positions of the 7-tuple used by the 6- and 5-dim spaces.
V6_ORDER = ("eps0", "eta1", "eps1", "eta0", "eps2", "zeta0")
V5_ORDER = ("eps0", "eps1", "eta0", "eps2", "zeta0")


class Group(str, enum.Enum):
    G0 = "G0"  # eta1 free: (Z/2)^6
    G1 = "G1"  # eta1 = 0: (Z/2)^5


@dataclass(frozen=True, order=True)
class ActionElement:
    eps0: int
    eta1: int
    eps1: int
    eta0: int
    eps2: int
    zeta0: int
    eps3: int

    def __post_init__(self) -> None:
        bits = self.to_tuple()
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"not a bit vector: {bits}")
        if (self.eps1 + self.eps2 + self.eps3) % 2:
            raise ValueError(f"eps1 + eps2 + eps3 must vanish: {bits}")

    @classmethod
    def from_tuple(cls, bits: Sequence[int]) -> ActionElement:
        if len(bits) != 7:
            raise ValueError("need 7 bits")
        return cls(*bits)

    @classmethod
    def zero(cls) -> ActionElement:
        return cls(0, 0, 0, 0, 0, 0, 0)

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, f) for f in FIELDS)

    def __add__(self, other: ActionElement) -> ActionElement:
        return ActionElement.from_tuple([a ^ b for a, b in zip(self.to_tuple(), other.to_tuple())])

    def __bool__(self) -> bool:
        return any(self.to_tuple())

    def in_g1(self) -> bool:
        return self.eta1 == 0

    # script coordinates

    @classmethod
    def from_v6(cls, v: F2Vector) -> ActionElement:
        if v.dim != 6:
            raise ValueError("expected a vector of V6")
        vals = dict(zip(V6_ORDER, v.to_tuple()))
        return cls(eps3=vals["eps1"] ^ vals["eps2"], **vals)

    @classmethod
    def from_v5(cls, v: F2Vector) -> ActionElement:
        if v.dim != 5:
            raise ValueError("expected a vector of V5")
        vals = dict(zip(V5_ORDER, v.to_tuple()))
        return cls(eta1=0, eps3=vals["eps1"] ^ vals["eps2"], **vals)

    def to_v6(self) -> F2Vector:
        return F2Vector.from_tuple([getattr(self, f) for f in V6_ORDER])

    def to_v5(self) -> F2Vector:
        if not self.in_g1():
            raise ValueError("element has eta1 = 1, not in G1")
        return F2Vector.from_tuple([getattr(self, f) for f in V5_ORDER])

    # per-curve view

    def curve_bits(self) -> tuple[tuple[int, int, int], ...]:
        """Sign bits (alpha0, alpha1, alpha3) for each of the three curves."""
        return (
            (self.eps0, self.eta1, self.eps1),
            (self.eta0, self.eta1, self.eps2),
            (self.zeta0, self.eta1, self.eps3),
        )

    @classmethod
    def from_curve_bits(cls, triples: Sequence[Sequence[int]]) -> ActionElement:
        (a, h1, b), (c, h2, d), (e, h3, f) = triples
        if not h1 == h2 == h3:
            raise ValueError(f"the alpha1 bit must agree on all curves: {triples}")
        return cls(a, h1, b, c, d, e, f)

    def to_nine(self) -> tuple[int, ...]:
        """Display form (eps0,eta1,eps1 | eta0,eta1,eps2 | zeta0,eta1,eps3)."""
        return tuple(b for t in self.curve_bits() for b in t)

    @classmethod
    def from_nine(cls, bits: Sequence[int]) -> ActionElement:
        if len(bits) != 9:
            raise ValueError("need 9 bits")
        return cls.from_curve_bits([bits[0:3], bits[3:6], bits[6:9]])

    def permute_curves(self, perm: Sequence[int]) -> ActionElement:
        """Relabel curves so that new curve i carries the data of old curve perm[i]."""
        old = self.curve_bits()
        return ActionElement.from_curve_bits([old[perm[i]] for i in range(3)])

    def __str__(self) -> str:
        n = self.to_nine()
        return " ".join("".join(map(str, n[i : i + 3])) for i in (0, 3, 6))


CURVE_PERMUTATIONS = tuple(itertools.permutations(range(3)))
SWAP_12 = (1, 0, 2)


def group_elements(group: Group) -> list[ActionElement]:
    """All elements of G0 or G1, sorted."""
    out = []
    for bits in itertools.product((0, 1), repeat=6):
        e = ActionElement.from_v6(F2Vector.from_tuple(bits))
        if group is Group.G1 and not e.in_g1():
            continue
        out.append(e)
    return sorted(out)


def to_script_vector(e: ActionElement, group: Group) -> F2Vector:
    return e.to_v6() if group is Group.G0 else e.to_v5()


def from_script_vector(v: F2Vector) -> ActionElement:
    return ActionElement.from_v6(v) if v.dim == 6 else ActionElement.from_v5(v)


def script_dim(group: Group) -> int:
    return 6 if group is Group.G0 else 5


def subspace_elements(space: F2Subspace) -> list[ActionElement]:
    return [from_script_vector(v) for v in space.elements()]


def span_of(elements: Sequence[ActionElement], group: Group) -> F2Subspace:
    return F2Subspace.span([to_script_vector(e, group) for e in elements], script_dim(group))


@dataclass(frozen=True)
class PerCurveSign:
    """Signs on (x0, x1, x2, x3) of one curve; alpha2 is always +1."""

    alpha0: int
    alpha1: int
    alpha3: int
    alpha2: int = 1

    def __post_init__(self) -> None:
        if self.alpha2 != 1:
            raise ValueError("alpha2 is normalized to +1")
        if any(a not in (1, -1) for a in (self.alpha0, self.alpha1, self.alpha3)):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> PerCurveSign:
        a0, a1, a3 = ((-1) ** b for b in bits)
        return cls(a0, a1, a3)

    def bits(self) -> tuple[int, int, int]:
        return tuple(int(a == -1) for a in (self.alpha0, self.alpha1, self.alpha3))

    def is_identity(self) -> bool:
        return self.bits() == (0, 0, 0)

    def signs(self) -> tuple[int, int, int, int]:
        """Multipliers for (x0, x1, x2, x3)."""
        return (self.alpha0, self.alpha1, self.alpha2, self.alpha3)


def per_curve_components(e: ActionElement) -> tuple[PerCurveSign, PerCurveSign, PerCurveSign]:
    return tuple(PerCurveSign.from_bits(b) for b in e.curve_bits())


def has_fixed_points_on_curve(s: PerCurveSign) -> bool:
    """A sign action has fixed points iff all three signs are -1 or exactly one is."""
    if s.is_identity():
        raise ValueError("identity has every point fixed")
    flips = sum(s.bits())
    return flips == 3 or flips == 1


class Tag(str, enum.Enum):
    FREE = "Free"
    DIM0 = "Dim0"
    DIM1 = "Dim1"
    DIM2 = "Dim2"


@dataclass(frozen=True)
class FixedLocusClass:
    tag: Tag
    meets_xhat: bool | None = None

    def __post_init__(self) -> None:
        if self.meets_xhat is not None and self.tag is not Tag.DIM0:
            raise ValueError("meets_xhat only applies to isolated fixed points")


_DIM_TAG = {1: Tag.DIM2, 2: Tag.DIM1, 3: Tag.DIM0}


def fixed_locus_tag(e: ActionElement) -> Tag:
    if not e:
        raise ValueError("the identity has no fixed locus class")
    moving = [s for s in per_curve_components(e) if not s.is_identity()]
    if not all(has_fixed_points_on_curve(s) for s in moving):
        return Tag.FREE
    return _DIM_TAG[len(moving)]


def fixed_locus_class(e: ActionElement) -> FixedLocusClass:
    return FixedLocusClass(fixed_locus_tag(e))


# Column order of the published fixed-point tables (numbered from 1).
G0_FIXED_COLUMNS: tuple[tuple[int, ...], ...] = (
    (0, 0, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 1), (0, 0, 0, 1, 0, 1, 0), (0, 0, 1, 0, 0, 0, 1),
    (1, 0, 0, 0, 0, 1, 0), (0, 0, 1, 0, 1, 0, 0), (1, 0, 0, 1, 0, 0, 0),
    (1, 0, 0, 1, 0, 1, 0), (1, 0, 0, 0, 1, 0, 1), (0, 1, 0, 0, 0, 0, 0),
    (0, 1, 0, 1, 1, 1, 1), (0, 0, 1, 1, 0, 0, 1), (0, 0, 1, 0, 1, 1, 0),
    (1, 1, 1, 0, 0, 1, 1), (1, 1, 1, 1, 1, 0, 0),
)
G1_FIXED_COLUMNS: tuple[tuple[int, ...], ...] = G0_FIXED_COLUMNS[:11] + (
    (0, 0, 1, 1, 0, 0, 1), (0, 0, 1, 0, 1, 1, 0),
)

FIXED_COLUMNS = {Group.G0: G0_FIXED_COLUMNS, Group.G1: G1_FIXED_COLUMNS}


def labelled_element(group: Group, label: int) -> ActionElement:
    """Element by its 1-based column label in the published table."""
    return ActionElement.from_tuple(FIXED_COLUMNS[group][label - 1])


def element_label(group: Group, e: ActionElement) -> int | None:
    try:
        return FIXED_COLUMNS[group].index(e.to_tuple()) + 1
    except ValueError:
        return None


# The exceptional isolated-fixed-point element (x0 = u0 = z0 = 0): label 10 in both groups.
ELEMENT_10 = ActionElement(1, 0, 0, 1, 0, 1, 0)

_TAG_RANK = {Tag.DIM2: 0, Tag.DIM1: 1, Tag.DIM0: 2}


@dataclass(frozen=True)
class TableRow:
    label: int | None
    element: ActionElement
    tag: Tag


def fixed_point_table(group: Group) -> list[TableRow]:
    """Non-free elements, grouped by fixed-locus dimension (2, then 1, then 0).

    Within a group, rows follow the published column order when the element
    has a label, and lexicographic order otherwise.
    """
    rows = []
    for e in group_elements(group):
        if not e:
            continue
        tag = fixed_locus_tag(e)
        if tag is Tag.FREE:
            continue
        rows.append(TableRow(element_label(group, e), e, tag))

    def key(r: TableRow) -> tuple:
        return (_TAG_RANK[r.tag], r.label is None, r.label or 0, r.element)

    return sorted(rows, key=key)


def partition_sizes(rows: Sequence[TableRow]) -> tuple[int, int, int]:
    """Counts of (Dim2, Dim1, Dim0) rows."""
    return tuple(sum(r.tag is t for r in rows) for t in (Tag.DIM2, Tag.DIM1, Tag.DIM0))


class Context(str, enum.Enum):
    XHAT = "xhat"  # G0 fixed points on the hypersurface
    BASE_LOCUS = "base"  # G1 fixed points on the base locus of the pencil


def iter_dim0(group: Group) -> Iterator[ActionElement]:
    for e in group_elements(group):
        if e and fixed_locus_tag(e) is Tag.DIM0:
            yield e


@functools.lru_cache(maxsize=None)
def isolated_meets_xhat(
    e: ActionElement, ctx: Context = Context.XHAT, seeds: tuple[int, ...] = (1, 2, 3)
) -> bool:
    """Whether the isolated fixed points of ``e`` meet the hypersurface (or base locus).

    Decided numerically on several random curve triples; the exact quarter-point
    calculus gives a second verdict and any disagreement raises.
    """
    from . import legendre, numoracle

    if fixed_locus_tag(e) is not Tag.DIM0:
        raise ValueError(f"{e} does not have isolated fixed points")
    verdicts = {numoracle.meets_numeric(e, ctx, seed) for seed in seeds}
    if len(verdicts) != 1:
        raise numoracle.OracleError(f"seeds disagree on whether {e} meets {ctx.value}")
    numeric = verdicts.pop()
    symbolic = legendre.action_meets(e, base_locus=ctx is Context.BASE_LOCUS)
    if numeric != symbolic:
        raise numoracle.OracleError(
            f"numeric ({numeric}) and exact ({symbolic}) verdicts differ for {e}"
        )
    return numeric
