"""Fundamental groups of the nodal quotients as finite quotients of Gamma / 2 Lambda.

Gamma is generated by affine lifts of the four group generators and the lattice
translations. Since twice the lattice is generated by torsion elements, the
fundamental group is (Gamma/2Lambda) / N where N is the normal closure of the
relators g0 * t_lambda, one per orbit of fixed points on the hypersurface.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Sequence

import numpy as np

from .affine import AMBIENT_ORDER, AffineElement, decode, lattice_basis, mul_codes, swap_real_tau
from .cases import CaseData, get_case
from .catalog import Identification, identify
from .finitegroup import (
    FiniteGroup,
    GroupError,
    GroupFingerprint,
    abelian_invariants,
    abelianization,
    fingerprint,
    isomorphism,
    normal_closure,
    quotient,
    quotient_map,
)
from .legendre import NodalData, nodal_data

GAMMA_ORDER = 1024
PI1_ORDER = 16


class PipelineError(RuntimeError):
    pass


def _closure_codes(gen_codes: Sequence[int]) -> np.ndarray:
    gens = np.array(gen_codes, dtype=np.int64)
    seen = np.zeros(AMBIENT_ORDER, dtype=bool)
    ident = AffineElement.identity().code()
    seen[ident] = True
    frontier = np.array([ident], dtype=np.int64)
    while frontier.size:
        prods = mul_codes(frontier[:, None], gens[None, :]).ravel()
        prods = np.unique(prods)
        new = prods[~seen[prods]]
        seen[new] = True
        frontier = new
    return np.flatnonzero(seen)


def affine_group(gens: Sequence[AffineElement]) -> FiniteGroup:
    """Closure of the given elements inside {+-1}^3 x| (Z/4)^6."""
    codes = _closure_codes([g.code() for g in gens])
    elements = sorted(decode(int(c)) for c in codes)
    codes = np.array([e.code() for e in elements], dtype=np.int64)
    lookup = np.full(AMBIENT_ORDER, -1, dtype=np.int64)
    lookup[codes] = np.arange(len(codes))
    table = lookup[mul_codes(codes[:, None], codes[None, :])]
    if (table < 0).any():
        raise GroupError("closure is not closed")
    index = {e: i for i, e in enumerate(elements)}
    return FiniteGroup(tuple(elements), table, tuple(index[g] for g in gens))


def build_gamma_mod2(case: CaseData | str) -> FiniteGroup:
    if isinstance(case, str):
        case = get_case(case)
    g = affine_group(list(case.generators) + lattice_basis())
    if g.order != GAMMA_ORDER:
        raise PipelineError(f"case {case.case_id}: Gamma/2Lambda has order {g.order}")
    return g


def torsion_relators(case: CaseData | str, nd: NodalData) -> list[AffineElement]:
    """g0 * t_lambda for each offset lambda (a vector of Lambda / 2 Lambda)."""
    if isinstance(case, str):
        case = get_case(case)
    if nd.case_id != case.case_id:
        raise ValueError("nodal data belongs to another case")
    return relators_from_offsets(case, nd.lambda_hats)


def relators_from_offsets(case: CaseData, offsets: Sequence[Sequence[int]]) -> list[AffineElement]:
    out = []
    for lam in offsets:
        if len(lam) != 6 or any(x not in (0, 1) for x in lam):
            raise ValueError(f"offset {lam} is not a vector of Lambda / 2 Lambda")
        out.append(case.g0 * AffineElement.lattice(lam))
    return out


@dataclass
class Pi1Result:
    case_id: str
    labels: str
    gamma: FiniteGroup
    normal: FiniteGroup
    group: FiniteGroup
    relators: list[AffineElement]
    offsets: list[tuple[int, ...]]
    fingerprint: GroupFingerprint
    identification: Identification
    generator_images: list[int]  # images of the four generators in the quotient

    @property
    def catalog_id(self) -> tuple[int, int]:
        return self.identification.entry.id

    def abelian_invariants(self) -> tuple[int, ...]:
        return abelian_invariants(abelianization(self.group))

    def summary(self) -> dict:
        entry = self.identification.entry
        catalog_group = entry.group()
        witness = [
            list(catalog_group.elements[self.identification.witness[i]]) for i in self.generator_images
        ]
        return {
            "case": self.case_id,
            "labels": self.labels,
            "gamma_mod_2lambda_order": self.gamma.order,
            "normal_closure_order": self.normal.order,
            "order": self.group.order,
            "offsets": [list(v) for v in self.offsets],
            "relators": [str(r) for r in self.relators],
            "fingerprint": self.fingerprint.as_dict(),
            "catalog_id": list(entry.id),
            "catalog_name": entry.name,
            "generator_images": witness,
        }


def offsets_for(case_id: str, labels: str = "standard") -> list[tuple[int, ...]]:
    """Offsets lambda of the torsion relators.

    ``standard`` uses the orbit representatives of fixed points on the
    hypersurface. ``swapped`` reads every offset with the real and tau lattice
    directions exchanged. It is only a diagnostic: the result then depends on
    which orbit representatives were picked.
    """
    lams = list(nodal_data(case_id).lambda_hats)
    if labels == "standard":
        return lams
    if labels == "swapped":
        return [swap_real_tau(v) for v in lams]
    raise ValueError(f"unknown labelling {labels!r}")


def pi1_from_offsets(case: CaseData, offsets: Sequence[Sequence[int]], labels: str = "custom") -> Pi1Result:
    gamma = build_gamma_mod2(case)
    relators = relators_from_offsets(case, offsets)
    normal = normal_closure(gamma, [gamma.index(r) for r in relators])
    q = quotient(gamma, normal)
    if q.order * normal.order != gamma.order:
        raise PipelineError("coset count does not match |Gamma| / |N|")
    proj = quotient_map(gamma, q, normal)
    return Pi1Result(
        case_id=case.case_id,
        labels=labels,
        gamma=gamma,
        normal=normal,
        group=q,
        relators=relators,
        offsets=[tuple(v) for v in offsets],
        fingerprint=fingerprint(q),
        identification=identify(q),
        generator_images=[proj[gamma.index(g)] for g in case.generators],
    )


@lru_cache(maxsize=None)
def pi1(case_id: str, labels: str = "standard") -> Pi1Result:
    """Full pipeline for one case; the quotient must have order 16."""
    result = pi1_from_offsets(get_case(case_id), offsets_for(case_id, labels), labels)
    if labels == "standard" and result.group.order != PI1_ORDER:
        raise PipelineError(f"case {case_id}: quotient has order {result.group.order}, expected {PI1_ORDER}")
    return result


def lattice_quotient(case_id: str) -> FiniteGroup:
    """Gamma/2Lambda modulo the translations Lambda/2Lambda; should be G itself."""
    gamma = build_gamma_mod2(case_id)
    trans = gamma.generated([gamma.index(t) for t in lattice_basis()])
    return quotient(gamma, trans)


def transport_case(case: CaseData, perm: Sequence[int], new_id: str | None = None) -> CaseData:
    """Relabel the curves of a case: new curve i carries old curve perm[i]."""
    return replace(
        case,
        case_id=new_id or case.case_id,
        generators=tuple(g.permute_curves(perm) for g in case.generators),
        sign_rows=tuple(e.permute_curves(perm) for e in case.sign_rows),
        fixed_element=case.fixed_element.permute_curves(perm),
        lambda_hats=None,
    )


@dataclass
class TransportCheck:
    source: str
    target: str
    perm: tuple[int, int, int]
    same_fixed_points: bool
    same_on_xhat: bool
    same_orbits: bool
    isomorphism: dict[int, int] | None
    groups: tuple[FiniteGroup, FiniteGroup] | None = field(default=None, repr=False)  # (relabelled source, target)

    @property
    def ok(self) -> bool:
        return self.same_fixed_points and self.same_on_xhat and self.same_orbits and self.isomorphism is not None

    def as_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "perm": list(self.perm),
            "same_fixed_points": self.same_fixed_points,
            "same_on_xhat": self.same_on_xhat,
            "same_orbits": self.same_orbits,
            "pi1_isomorphic": self.isomorphism is not None,
            "ok": self.ok,
        }


# curve relabellings carrying one case onto another
TRANSPORTS = (("A", "B", (0, 2, 1)), ("A", "C", (1, 2, 0)), ("E", "F", (2, 0, 1)), ("E", "G", (1, 2, 0)))


def _partition(nd: NodalData) -> set[frozenset]:
    return {frozenset(o) for o in nd.orbits}


def transport_check(source: str, target: str, perm: Sequence[int], labels: str = "standard") -> TransportCheck:
    """Relabel the source case's input data and compare with the target case.

    Nodal data are recomputed from the relabelled generators and compared as
    sets and set partitions. The fundamental groups are compared through an
    explicit isomorphism between the two quotients.
    """
    moved = transport_case(get_case(source), perm, new_id=f"{source}{tuple(perm)}")
    nd_src, nd_dst = nodal_data(moved), nodal_data(target)
    offsets = list(nd_src.lambda_hats)
    if labels == "swapped":
        offsets = [swap_real_tau(v) for v in offsets]
    g_src = pi1_from_offsets(moved, offsets, labels).group
    g_dst = pi1(target, labels).group
    return TransportCheck(
        source,
        target,
        tuple(perm),
        set(nd_src.fixed_points) == set(nd_dst.fixed_points),
        set(nd_src.on_xhat) == set(nd_dst.on_xhat),
        _partition(nd_src) == _partition(nd_dst),
        isomorphism(g_src, g_dst),
        (g_src, g_dst),
    )
