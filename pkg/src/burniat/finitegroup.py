"""Small finite groups given by explicit multiplication tables.

A FiniteGroup is a sorted tuple of hashable element labels plus an ``n x n``
numpy table of indices. Subgroups and quotients are again FiniteGroups; a
subgroup remembers the parent indices of its elements.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

MAX_ORDER = 4096


class GroupError(ValueError):
    pass


@dataclass(eq=False)
class FiniteGroup:
    elements: tuple[Hashable, ...]
    table: np.ndarray
    generators: tuple[int, ...] = ()
    parent_index: tuple[int, ...] | None = None
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        n = len(self.elements)
        if self.table.shape != (n, n):
            raise GroupError("table shape does not match the element count")
        self.table = np.asarray(self.table, dtype=np.int32)
        self.table.setflags(write=False)
        self._index = {x: i for i, x in enumerate(self.elements)}
        row_ids = np.flatnonzero((self.table == np.arange(n)).all(axis=1))
        if len(row_ids) != 1:
            raise GroupError("no unique identity")
        self.identity = int(row_ids[0])
        inv = np.argmax(self.table == self.identity, axis=1)
        if not (self.table[np.arange(n), inv] == self.identity).all():
            raise GroupError("some element has no inverse")
        self.inverse = inv.astype(np.int32)

    # construction

    @classmethod
    def from_generators(
        cls,
        gens: Sequence[Hashable],
        mul: Callable[[Hashable, Hashable], Hashable],
        identity: Hashable,
        bound: int = MAX_ORDER,
    ) -> FiniteGroup:
        """Closure of the generators; elements are sorted so the result is canonical."""
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > bound:
                            raise GroupError(f"closure exceeds {bound} elements")
            frontier = nxt
        elements = tuple(sorted(seen))
        index = {x: i for i, x in enumerate(elements)}
        table = np.array([[index[mul(a, b)] for b in elements] for a in elements], dtype=np.int32)
        return cls(elements, table, tuple(index[g] for g in gens))

    @classmethod
    def from_table(cls, elements: Sequence[Hashable], table, generators: Sequence[int] = ()) -> FiniteGroup:
        return cls(tuple(elements), np.asarray(table), tuple(generators))

    @classmethod
    def from_permutations(cls, perms: Sequence[Sequence[int]]) -> FiniteGroup:
        """Group generated by permutations given as image lists."""
        degree = len(perms[0])

        def compose(p, q):  # apply p first, then q
            return tuple(q[i] for i in p)

        return cls.from_generators([tuple(p) for p in perms], compose, tuple(range(degree)))

    # basic data

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x: Hashable) -> int:
        return self._index[x]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, a: int, k: int) -> int:
        x = self.identity
        for _ in range(k):
            x = self.mul(x, a)
        return x

    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        for k in range(1, n + 1):
            hit = (cur == self.identity) & (orders == 0)
            orders[hit] = k
            if (orders > 0).all():
                break
            cur = self.table[cur, np.arange(n)]
        return orders

    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(int(o) for o in self.element_orders()).items()))

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def check_axioms(self, trials: int = 1000, rng: np.random.Generator | None = None) -> bool:
        """Identity and inverses exactly; associativity on random triples (all if small)."""
        n = self.order
        idx = np.arange(n)
        if not ((self.table[self.identity] == idx).all() and (self.table[:, self.identity] == idx).all()):
            return False
        if not (self.table[idx, self.inverse] == self.identity).all():
            return False
        if n**3 <= trials:
            a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
            a, b, c = a.ravel(), b.ravel(), c.ravel()
        else:
            rng = rng or np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, trials))
        t = self.table
        return bool((t[t[a, b], c] == t[a, t[b, c]]).all())

    # subgroups

    def closure(self, seeds: Iterable[int]) -> list[int]:
        """Indices of the subgroup generated by the seeds, sorted."""
        seeds = list(dict.fromkeys(int(s) for s in seeds))
        members = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in seeds:
                    y = int(self.table[x, s])
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(members)

    def subgroup(self, members: Iterable[int], generators: Sequence[int] = ()) -> FiniteGroup:
        members = sorted(set(int(m) for m in members))
        pos = {m: i for i, m in enumerate(members)}
        sub = self.table[np.ix_(members, members)]
        try:
            local = np.vectorize(pos.__getitem__, otypes=[np.int32])(sub)
        except KeyError:
            raise GroupError("element set is not closed under multiplication") from None
        g = FiniteGroup(
            tuple(self.elements[m] for m in members),
            local,
            tuple(pos[x] for x in generators if x in pos),
            tuple(members),
        )
        return g

    def generated(self, seeds: Iterable[int]) -> FiniteGroup:
        seeds = list(seeds)
        return self.subgroup(self.closure(seeds), seeds)

    def conjugate(self, x: int, g: int) -> int:
        """g x g^-1."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def is_normal(self, members: Iterable[int]) -> bool:
        members = np.array(sorted(set(members)))
        allowed = np.zeros(self.order, dtype=bool)
        allowed[members] = True
        gens = self.generators or tuple(range(self.order))
        for g in gens:
            conj = self.table[self.table[g, members], self.inverse[g]]
            if not allowed[conj].all():
                return False
        return True

    def center(self) -> list[int]:
        return [int(i) for i in np.flatnonzero((self.table == self.table.T).all(axis=1))]

    def commutator(self, a: int, b: int) -> int:
        t, inv = self.table, self.inverse
        return int(t[t[a, b], t[inv[a], inv[b]]])

    def derived_subgroup(self) -> list[int]:
        t, inv = self.table, self.inverse
        idx = np.arange(self.order)
        a, b = np.meshgrid(idx, idx, indexing="ij")
        comms = np.unique(t[t[a, b], t[inv[a], inv[b]]])
        return self.closure(comms)

    def small_generating_set(self) -> list[int]:
        """Greedy generating set, preferring elements of large order."""
        orders = self.element_orders()
        candidates = sorted(range(self.order), key=lambda i: (-orders[i], i))
        gens: list[int] = []
        current = {self.identity}
        for c in candidates:
            if len(current) == self.order:
                break
            if c not in current:
                gens.append(c)
                current = set(self.closure(gens))
        return gens


def normal_closure(g: FiniteGroup, seeds: Iterable[int]) -> FiniteGroup:
    """Smallest normal subgroup containing the seeds."""
    conj_by = list(g.generators) or list(range(g.order))
    members = set(g.closure(seeds))
    while True:
        new = set()
        for x in members:
            for h in conj_by:
                y = g.conjugate(x, h)
                if y not in members:
                    new.add(y)
        if not new:
            break
        members = set(g.closure(list(members) + list(new)))
    return g.subgroup(members, sorted(set(int(s) for s in seeds)))


def quotient(g: FiniteGroup, n: FiniteGroup) -> FiniteGroup:
    """Coset group g / n; cosets are labelled by the element label of their smallest index."""
    if n.parent_index is None:
        raise GroupError("the normal subgroup must come from g")
    members = np.array(n.parent_index)
    if len(g.closure(members)) != len(members):
        raise GroupError("not a subgroup")
    if not g.is_normal(members):
        raise GroupError("subgroup is not normal")
    coset_of = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if coset_of[x] >= 0:
            continue
        coset = g.table[x, members]
        coset_of[coset] = len(reps)
        reps.append(int(coset.min()))
    reps_arr = np.array(reps)
    qtable = coset_of[g.table[np.ix_(reps_arr, reps_arr)]]
    labels = tuple(g.elements[r] for r in reps)
    order = sorted(range(len(reps)), key=lambda i: labels[i])
    relabel = np.empty(len(reps), dtype=np.int64)
    relabel[order] = np.arange(len(reps))
    table = relabel[qtable][np.ix_(order, order)]
    gens = tuple(sorted({int(relabel[coset_of[x]]) for x in g.generators}))
    return FiniteGroup(tuple(labels[i] for i in order), table, gens)


def quotient_map(g: FiniteGroup, q: FiniteGroup, n: FiniteGroup) -> list[int]:
    """Index in q of the coset of each element of g."""
    members = np.array(n.parent_index)
    out = []
    for x in range(g.order):
        rep = g.elements[int(g.table[x, members].min())]
        out.append(q.index(rep))
    return out


# invariants


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def abelian_invariants(g: FiniteGroup) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of an abelian group, ascending."""
    if not g.is_abelian():
        raise GroupError("group is not abelian")
    elementary: list[int] = []
    orders = g.element_orders()
    for p, _ in _factor(g.order).items():
        # log_p of #{x : x^(p^k) = 1} for k = 0, 1, ...
        ranks = [0]
        k = 1
        while True:
            count = int(sum(1 for o in orders if (p**k) % o == 0))
            r = round(np.log(count) / np.log(p))
            ranks.append(r)
            if count == p ** _factor(g.order)[p]:
                break
            k += 1
        at_least = [ranks[j] - ranks[j - 1] for j in range(1, len(ranks))]  # factors of order >= p^j
        for j in range(len(at_least)):
            exactly = at_least[j] - (at_least[j + 1] if j + 1 < len(at_least) else 0)
            elementary.extend([p ** (j + 1)] * exactly)
    # combine elementary divisors into invariant factors
    by_prime: dict[int, list[int]] = {}
    for q in elementary:
        by_prime.setdefault(min(_factor(q)), []).append(q)
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * width
    for qs in by_prime.values():
        qs = sorted(qs, reverse=True)
        for i, q in enumerate(qs):
            factors[width - 1 - i] *= q
    return tuple(factors)


def abelianization(g: FiniteGroup) -> FiniteGroup:
    derived = g.subgroup(g.derived_subgroup())
    return quotient(g, derived)


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    histogram: tuple[tuple[int, int], ...]
    center: int
    derived: int
    abelian_invariants: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "histogram": {str(k): v for k, v in self.histogram},
            "center": self.center,
            "derived": self.derived,
            "abelian_invariants": list(self.abelian_invariants),
        }

    @classmethod
    def from_dict(cls, d: dict) -> GroupFingerprint:
        return cls(
            d["order"],
            tuple(sorted((int(k), v) for k, v in d["histogram"].items())),
            d["center"],
            d["derived"],
            tuple(d["abelian_invariants"]),
        )


def fingerprint(g: FiniteGroup) -> GroupFingerprint:
    if g.order > MAX_ORDER:
        raise GroupError(f"fingerprint limited to order {MAX_ORDER}")
    return GroupFingerprint(
        g.order,
        tuple(g.order_histogram().items()),
        len(g.center()),
        len(g.derived_subgroup()),
        abelian_invariants(abelianization(g)),
    )


def _extend_hom(g: FiniteGroup, h: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> list[int] | None:
    """The homomorphism sending gens to images, or None if none exists."""
    phi = [-1] * g.order
    phi[g.identity] = h.identity
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, t in zip(gens, images):
                y = int(g.table[x, s])
                img = int(h.table[phi[x], t])
                if phi[y] == -1:
                    phi[y] = img
                    nxt.append(y)
                elif phi[y] != img:
                    return None
        frontier = nxt
    return phi


def isomorphism(g: FiniteGroup, h: FiniteGroup) -> dict[int, int] | None:
    """An explicit isomorphism g -> h as an index map, or None."""
    if max(g.order, h.order) > 256:
        raise GroupError("isomorphism test limited to order 256")
    if g.order != h.order:
        return None
    if fingerprint(g) != fingerprint(h):
        return None
    gens = g.small_generating_set()
    g_orders, h_orders = g.element_orders(), h.element_orders()
    pools = [[y for y in range(h.order) if h_orders[y] == g_orders[x]] for x in gens]

    def search(i: int, chosen: list[int]) -> list[int] | None:
        if i == len(gens):
            phi = _extend_hom(g, h, gens, chosen)
            if phi is not None and len(set(phi)) == h.order:
                return phi
            return None
        for y in pools[i]:
            if y in chosen:
                continue
            # prune: the partial assignment must already be a hom on the subgroup it generates
            if i + 1 < len(gens) and _extend_hom(g, h, gens[: i + 1], chosen + [y]) is None:
                continue
            found = search(i + 1, chosen + [y])
            if found is not None:
                return found
        return None

    phi = search(0, [])
    return None if phi is None else dict(enumerate(phi))


def isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return isomorphism(g, h) is not None
