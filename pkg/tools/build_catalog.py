"""Regenerate src/burniat/data/order16.json.

Each group is built from an explicit construction (direct and semidirect
products of cyclic groups), then stored as right-regular permutations of a
small generating set together with its fingerprint. The numbering follows the
standard small-groups library for orders 1, 2, 4, 8 and 16.

    python tools/build_catalog.py
"""

from __future__ import annotations

import itertools
import json
import re
from pathlib import Path

from burniat.finitegroup import FiniteGroup, fingerprint

OUT = Path(__file__).resolve().parents[1] / "src" / "burniat" / "data" / "order16.json"


def cyclic_product(*ns):
    elems = list(itertools.product(*[range(n) for n in ns]))

    def mul(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, ns))

    gens = [tuple(int(i == j) for j in range(len(ns))) for i in range(len(ns))]
    return elems, mul, gens


def semidirect(n_mods, auto, k):
    """(Z/n_1 x ... ) x| Z/k where the generator of Z/k acts by ``auto``."""
    base = list(itertools.product(*[range(n) for n in n_mods]))

    def act(v, times):
        for _ in range(times % k):
            v = auto(v)
        return v

    def mul(a, b):
        (v, s), (w, t) = a, b
        w = act(w, s)
        return (tuple((x + y) % n for x, y, n in zip(v, w, n_mods)), (s + t) % k)

    elems = [(v, s) for v in base for s in range(k)]
    zero = tuple(0 for _ in n_mods)
    gens = [(tuple(int(i == j) for j in range(len(n_mods))), 0) for i in range(len(n_mods))]
    gens.append((zero, 1))
    return elems, mul, gens


def cyclic_action(n, r):
    return semidirect((n,), lambda v: ((r * v[0]) % n,), 2)


def dicyclic(n):
    """Order 4n: x^(2n) = 1, y^2 = x^n, y x y^-1 = x^-1."""

    def mul(a, b):
        (k1, s1), (k2, s2) = a, b
        k = (k1 + (-1) ** s1 * k2 + (n if s1 and s2 else 0)) % (2 * n)
        return (k, s1 ^ s2)

    elems = [(k, s) for k in range(2 * n) for s in (0, 1)]
    return elems, mul, [(1, 0), (0, 1)]


def times_c2(construction):
    elems, mul, gens = construction
    new = [(x, c) for x in elems for c in (0, 1)]

    def mul2(a, b):
        return (mul(a[0], b[0]), (a[1] + b[1]) % 2)

    ident0 = next(x for x in elems if all(mul(x, y) == y for y in elems))
    return new, mul2, [(g, 0) for g in gens] + [(ident0, 1)]


ENTRIES = [
    ((1, 1), "trivial", "1", cyclic_product(1)),
    ((2, 1), "C2", "Z/2", cyclic_product(2)),
    ((4, 1), "C4", "Z/4", cyclic_product(4)),
    ((4, 2), "C2 x C2", "(Z/2)^2", cyclic_product(2, 2)),
    ((8, 1), "C8", "Z/8", cyclic_product(8)),
    ((8, 2), "C4 x C2", "Z/4 x Z/2", cyclic_product(4, 2)),
    ((8, 3), "D8", "dihedral of order 8", cyclic_action(4, -1)),
    ((8, 4), "Q8", "quaternion group", dicyclic(2)),
    ((8, 5), "C2^3", "(Z/2)^3", cyclic_product(2, 2, 2)),
    ((16, 1), "C16", "Z/16", cyclic_product(16)),
    ((16, 2), "C4 x C4", "Z/4 x Z/4", cyclic_product(4, 4)),
    ((16, 3), "(C4 x C2) : C2", "c acts by a -> ab, b -> b", semidirect((4, 2), lambda v: (v[0], (v[0] + v[1]) % 2), 2)),
    ((16, 4), "C4 : C4", "Z/4 x| Z/4 acting by inversion", semidirect((4,), lambda v: ((-v[0]) % 4,), 4)),
    ((16, 5), "C8 x C2", "Z/8 x Z/2", cyclic_product(8, 2)),
    ((16, 6), "M16", "Z/8 x| Z/2 acting by x -> 5x", cyclic_action(8, 5)),
    ((16, 7), "D16", "dihedral of order 16", cyclic_action(8, -1)),
    ((16, 8), "QD16", "semidihedral, Z/8 x| Z/2 acting by x -> 3x", cyclic_action(8, 3)),
    ((16, 9), "Q16", "generalized quaternion", dicyclic(4)),
    ((16, 10), "C4 x C2 x C2", "(Z/2)^2 x Z/4", cyclic_product(4, 2, 2)),
    ((16, 11), "D8 x C2", "dihedral of order 8 times Z/2", times_c2(cyclic_action(4, -1))),
    ((16, 12), "Q8 x C2", "quaternion group times Z/2", times_c2(dicyclic(2))),
    ((16, 13), "(C4 x C2) : C2", "central product of D8 and C4; c acts by a -> a, b -> a^2 b",
     semidirect((4, 2), lambda v: ((v[0] + 2 * v[1]) % 4, v[1]), 2)),
    ((16, 14), "C2^4", "(Z/2)^4", cyclic_product(2, 2, 2, 2)),
]


def regular_perms(elems, mul, gens):
    elems = sorted(elems)
    index = {x: i for i, x in enumerate(elems)}
    return [[index[mul(x, g)] for x in elems] for g in gens]


def build() -> dict:
    entries = []
    for gid, name, description, (elems, mul, gens) in ENTRIES:
        perms = regular_perms(elems, mul, gens)
        group = FiniteGroup.from_permutations(perms)
        assert group.order == gid[0], (gid, group.order)
        entries.append(
            {
                "id": list(gid),
                "name": name,
                "description": description,
                "generators": perms,
                "fingerprint": fingerprint(group).as_dict(),
            }
        )
    return {"format": "group-catalog/1", "entries": entries}


def main() -> None:
    data = build()
    text = json.dumps(data, indent=1)
    # one line per flat list of numbers
    text = re.sub(r"\[\s+([-\d,\s]+?)\s+\]", lambda m: "[" + ", ".join(m.group(1).split()).replace(",,", ",") + "]", text)
    OUT.write_text(text + "\n")
    print(f"wrote {len(data['entries'])} groups to {OUT}")


if __name__ == "__main__":
    main()
