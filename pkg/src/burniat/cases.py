"""Data for the seven 4-nodal cases A..G, loaded from ``data/cases.json``.

Each case lists four affine generators (sign vector, translation in quarter
lattice units), which of them is the element with fixed points, the sign-action
rows spanning the group, and for A, D, E a reference list of offsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .actions import ActionElement, Group, span_of
from .affine import AffineElement
from .f2space import F2Subspace

CASE_IDS = ("A", "B", "C", "D", "E", "F", "G")


class CaseDataError(ValueError):
    pass


@dataclass(frozen=True)
class CaseData:
    case_id: str
    generators: tuple[AffineElement, ...]
    fixed_generator: int
    sign_rows: tuple[ActionElement, ...]
    fixed_element: ActionElement
    lambda_hats: tuple[tuple[int, ...], ...] | None

    @property
    def g0(self) -> AffineElement:
        return self.generators[self.fixed_generator]

    @property
    def eps(self) -> tuple[int, ...]:
        """Translation of g0 in half-lattice units, as bits."""
        return self.g0.t

    def span(self) -> F2Subspace:
        return span_of(self.sign_rows, Group.G0)


def _parse_generator(raw: dict) -> AffineElement:
    quarter = raw["translation"]
    if any(x % 2 for x in quarter):
        raise CaseDataError(f"translation {quarter} is not a half-lattice vector")
    return AffineElement(tuple(raw["sign"]), tuple(x // 2 for x in quarter))


@lru_cache(maxsize=None)
def load_cases() -> dict[str, CaseData]:
    text = resources.files("burniat.data").joinpath("cases.json").read_text()
    raw = json.loads(text)
    out = {}
    for cid in CASE_IDS:
        c = raw["cases"][cid]
        lam = c.get("lambda_hats")
        data = CaseData(
            case_id=cid,
            generators=tuple(_parse_generator(g) for g in c["generators"]),
            fixed_generator=c["fixed_generator"],
            sign_rows=tuple(ActionElement.from_nine(r) for r in c["sign_rows"]),
            fixed_element=ActionElement.from_nine(c["fixed_element"]),
            lambda_hats=None if lam is None else tuple(tuple(v) for v in lam),
        )
        check_case(data)
        out[cid] = data
    return out


def get_case(case_id: str) -> CaseData:
    try:
        return load_cases()[case_id]
    except KeyError:
        raise KeyError(f"unknown case {case_id!r}; expected one of {', '.join(CASE_IDS)}") from None


def group_mod_lattice(gens: tuple[AffineElement, ...]) -> set[AffineElement]:
    """Closure of the generators with translations taken modulo Lambda."""
    ident = AffineElement.identity()
    seen = {ident}
    frontier = [ident]
    gens = tuple(g.mod_lattice() for g in gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = (x * g).mod_lattice()
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def check_case(data: CaseData) -> None:
    """Transcription self-check; raises CaseDataError on the first problem."""
    cid = data.case_id
    for k, g in enumerate(data.generators):
        if not (g * g).is_lattice_translation():
            raise CaseDataError(f"case {cid}: generator {k + 1} squared is not a lattice translation")
    group = group_mod_lattice(data.generators)
    if len(group) != 16:
        raise CaseDataError(f"case {cid}: generators give a group of order {len(group)} mod Lambda")
    if data.g0.d != (-1, -1, -1):
        raise CaseDataError(f"case {cid}: the fixed generator must negate every curve")
    if AffineElement.from_action(data.fixed_element) != data.g0.mod_lattice():
        raise CaseDataError(f"case {cid}: fixed generator does not match the fixed sign action")
    try:
        actions = {g.to_action() for g in group}
    except ValueError as exc:
        raise CaseDataError(f"case {cid}: some element is not the lift of a sign action ({exc})") from None
    if actions != {ActionElement.from_v6(v) for v in data.span().elements()}:
        raise CaseDataError(f"case {cid}: affine generators and sign rows span different groups")
