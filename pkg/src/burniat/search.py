"""Searches for subgroups G of the sign-action groups with prescribed fixed-point behaviour.

A subgroup of index 4 is the kernel of a surjection onto (Z/2)^2. Two images
are prescribed, as in the original searches, so that every kernel is found
once per choice of complement. ``Primary`` looks for (Z/2)^3 in the 5-dim group
acting freely on the pencil members; ``Nodal4`` looks for (Z/2)^4 in the 6-dim
group in which exactly one element has isolated fixed points on the hypersurface.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .actions import (
    CURVE_PERMUTATIONS,
    ELEMENT_10,
    SWAP_12,
    ActionElement,
    Context,
    Group,
    Tag,
    fixed_locus_tag,
    fixed_point_table,
    from_script_vector,
    isolated_meets_xhat,
    script_dim,
    subspace_elements,
    to_script_vector,
)
from .f2space import F2Hom, F2Subspace, F2Vector, enumerate_homs, kernel


class SearchContext(str, enum.Enum):
    PRIMARY = "primary"
    NODAL4 = "nodal4"

    @property
    def group(self) -> Group:
        return Group.G1 if self is SearchContext.PRIMARY else Group.G0

    @property
    def kernel_dim(self) -> int:
        return 3 if self is SearchContext.PRIMARY else 4

    @property
    def meet_context(self) -> Context:
        # isolated points on X_lambda for general lambda are exactly those on the base locus
        return Context.BASE_LOCUS if self is SearchContext.PRIMARY else Context.XHAT


# prescribed images (w1, w2) in search coordinates
_W = {
    SearchContext.PRIMARY: ((1, 0, 0, 0, 0), (0, 0, 1, 0, 0)),
    SearchContext.NODAL4: ((1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0)),
}


class SearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class Constraints:
    avoid: tuple[F2Subspace, ...]
    exactly_one_of: frozenset[F2Vector] | None


@lru_cache(maxsize=None)
def derive_constraints(context: SearchContext) -> Constraints:
    """Avoid-lists and the F-set, derived from the fixed-point classification."""
    group = context.group
    n = script_dim(group)
    avoid, special = [], []
    for row in fixed_point_table(group):
        v = to_script_vector(row.element, group)
        if row.tag is not Tag.DIM0:
            avoid.append(v)
        elif isolated_meets_xhat(row.element, context.meet_context):
            (avoid if context is SearchContext.PRIMARY else special).append(v)
    spaces = tuple(F2Subspace.span([v], n) for v in sorted(avoid))
    if context is SearchContext.PRIMARY:
        return Constraints(spaces, None)
    return Constraints(spaces, frozenset(special))


@dataclass(frozen=True)
class SubgroupSpec:
    kernel: F2Subspace
    context: SearchContext
    fixed_element: ActionElement | None = None
    hom: F2Hom | None = None

    def elements(self) -> list[ActionElement]:
        return subspace_elements(self.kernel)

    def permute(self, perm: Sequence[int]) -> SubgroupSpec:
        return spec_from_elements(
            [e.permute_curves(perm) for e in self.elements()], self.context, fixed=None
        )

    def generators(self) -> list[ActionElement]:
        return [from_script_vector(v) for v in self.kernel.basis_vectors()]


def spec_from_elements(
    elements: Sequence[ActionElement], context: SearchContext, fixed: ActionElement | None = None
) -> SubgroupSpec:
    group = context.group
    space = F2Subspace.span([to_script_vector(e, group) for e in elements], script_dim(group))
    if fixed is None and context is SearchContext.NODAL4:
        fixed = _unique_fixed(space, derive_constraints(context))
    return SubgroupSpec(space, context, fixed)


def _unique_fixed(space: F2Subspace, cons: Constraints) -> ActionElement | None:
    hits = [v for v in cons.exactly_one_of or () if v in space]
    return from_script_vector(hits[0]) if len(hits) == 1 else None


def _prescribed(context: SearchContext) -> list[tuple[F2Vector, F2Vector]]:
    w1, w2 = _W[context]
    return [
        (F2Vector.from_tuple(w1), F2Vector.from_tuple((1, 0))),
        (F2Vector.from_tuple(w2), F2Vector.from_tuple((0, 1))),
    ]


def candidate_homs(context: SearchContext, use_special: bool = True) -> list[F2Hom]:
    cons = derive_constraints(context)
    return enumerate_homs(
        script_dim(context.group),
        prescribed=_prescribed(context),
        avoid=cons.avoid,
        exactly_one_of=cons.exactly_one_of if use_special else None,
    )


def classify(context: SearchContext) -> list[SubgroupSpec]:
    cons = derive_constraints(context)
    specs = []
    for h in candidate_homs(context):
        k = kernel(h)
        fixed = _unique_fixed(k, cons) if context is SearchContext.NODAL4 else None
        spec = SubgroupSpec(k, context, fixed, h)
        check_spec(spec)
        specs.append(spec)
    return specs


def check_spec(spec: SubgroupSpec) -> None:
    """Re-derive the fixed-point pattern of every nonzero element."""
    if spec.kernel.dim != spec.context.kernel_dim:
        raise SearchError(f"kernel has dimension {spec.kernel.dim}")
    isolated = []
    for e in spec.elements():
        if not e:
            continue
        tag = fixed_locus_tag(e)
        if tag is Tag.FREE or e == ELEMENT_10:
            continue
        if tag is not Tag.DIM0 or not isolated_meets_xhat(e, spec.context.meet_context):
            raise SearchError(f"{e} has fixed points of type {tag.value}")
        isolated.append(e)
    if spec.context is SearchContext.PRIMARY and isolated:
        raise SearchError("primary subgroup has an element with fixed points")
    if spec.context is SearchContext.NODAL4 and isolated != [spec.fixed_element]:
        raise SearchError(f"expected exactly one element with fixed points, found {len(isolated)}")


@dataclass(frozen=True)
class SymmetryOrbit:
    members: tuple[SubgroupSpec, ...]
    representative: SubgroupSpec
    witnesses: tuple[tuple[int, int, int], ...]  # witnesses[i] maps members[i] to the representative


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Apply q, then p (new curve i takes old curve q[p[i]])."""
    return tuple(q[p[i]] for i in range(3))


def _generated(perms: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    out = [(0, 1, 2)]
    frontier = list(out)
    while frontier:
        nxt = []
        for a in frontier:
            for p in perms:
                c = _compose(tuple(p), a)
                if c not in out:
                    out.append(c)
                    nxt.append(c)
        frontier = nxt
    return out


def _check_preserves(perm: Sequence[int], context: SearchContext) -> None:
    group = context.group
    cons = derive_constraints(context)
    n = script_dim(group)

    def move(v: F2Vector) -> F2Vector:
        return to_script_vector(from_script_vector(v).permute_curves(perm), group)

    avoid = {u.basis for u in cons.avoid}
    if {F2Subspace.span([move(v) for v in u.basis_vectors()], n).basis for u in cons.avoid} != avoid:
        raise SearchError(f"permutation {tuple(perm)} does not preserve the avoid-list")
    if cons.exactly_one_of is not None and {move(v) for v in cons.exactly_one_of} != cons.exactly_one_of:
        raise SearchError(f"permutation {tuple(perm)} does not preserve the F-set")


def reduce_by_symmetry(specs: Sequence[SubgroupSpec], perms: Sequence[Sequence[int]]) -> list[SymmetryOrbit]:
    """Partition specs into orbits of the curve permutations they generate.

    The representative of an orbit is its first member in input order.
    """
    if not specs:
        return []
    context = specs[0].context
    for p in perms:
        _check_preserves(p, context)
    group = _generated(perms)
    assigned = [False] * len(specs)
    orbits = []
    for i, rep in enumerate(specs):
        if assigned[i]:
            continue
        members, witnesses = [], []
        for j, s in enumerate(specs):
            if assigned[j]:
                continue
            w = next((p for p in group if s.permute(p).kernel == rep.kernel), None)
            if w is not None:
                assigned[j] = True
                members.append(s)
                witnesses.append(w)
        orbits.append(SymmetryOrbit(tuple(members), rep, tuple(witnesses)))
    return orbits


class FamilyType(str, enum.Enum):
    TYPE_ABC = "TypeABC"
    TYPE_DEFG = "TypeDEFG"


def projection_kernels(spec: SubgroupSpec) -> list[F2Subspace]:
    """K_i: the elements of G acting trivially on curve i."""
    group = spec.context.group
    n = script_dim(group)
    out = []
    for i in range(3):
        vs = [to_script_vector(e, group) for e in spec.elements() if not any(e.curve_bits()[i])]
        out.append(F2Subspace.span(vs, n))
    return out


def family_type(spec: SubgroupSpec) -> FamilyType:
    if spec.context is not SearchContext.NODAL4:
        raise ValueError("family types are defined for the 4-nodal search")
    K = projection_kernels(spec)
    contained, trivial = [], []
    for i in range(3):
        j, l = [x for x in range(3) if x != i]
        other = K[j] + K[l]
        contained.append(K[i].issubspace(other))
        trivial.append(K[i].intersection(other).dim == 0)
    if all(trivial) and not any(contained):
        return FamilyType.TYPE_DEFG
    if any(contained) and not all(trivial):
        return FamilyType.TYPE_ABC
    raise SearchError(f"projection kernels of dimensions {[k.dim for k in K]} fit neither family")


def case_kernels() -> dict[str, F2Subspace]:
    from .cases import CASE_IDS, get_case

    return {cid: get_case(cid).span() for cid in CASE_IDS}


def label_cases(specs: Sequence[SubgroupSpec]) -> list[str | None]:
    """Case letter of each kernel (or of its image under swapping curves 1 and 2)."""
    table = case_kernels()
    out = []
    for s in specs:
        label = next((c for c, k in table.items() if k == s.kernel), None)
        if label is None:
            swapped = s.permute(SWAP_12).kernel
            label = next((c.lower() for c, k in table.items() if k == swapped), None)
        out.append(label)
    return out


def families(specs: Sequence[SubgroupSpec]) -> list[SymmetryOrbit]:
    return reduce_by_symmetry(specs, [p for p in CURVE_PERMUTATIONS if p != (0, 1, 2)])


__all__ = [
    "SearchContext",
    "Constraints",
    "SubgroupSpec",
    "SymmetryOrbit",
    "FamilyType",
    "derive_constraints",
    "classify",
    "candidate_homs",
    "check_spec",
    "reduce_by_symmetry",
    "family_type",
    "projection_kernels",
    "label_cases",
    "families",
]
