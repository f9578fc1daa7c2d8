"""Linear algebra over GF(2) on bit-packed vectors.

A vector of dimension ``n`` is stored as an int whose most significant of the
``n`` bits is coordinate 0, so integer order agrees with lexicographic order
on the coordinate tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_DIM = 16


@dataclass(frozen=True, order=True)
class F2Vector:
    bits: int
    dim: int

    def __post_init__(self) -> None:
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension {self.dim} out of range")
        if not 0 <= self.bits < (1 << self.dim):
            raise ValueError(f"bits {self.bits} do not fit in dimension {self.dim}")

    @classmethod
    def from_tuple(cls, coords: Sequence[int]) -> F2Vector:
        bits = 0
        for c in coords:
            if c not in (0, 1):
                raise ValueError(f"coordinate {c!r} is not a bit")
            bits = (bits << 1) | c
        return cls(bits, len(coords))

    @classmethod
    def zero(cls, dim: int) -> F2Vector:
        return cls(0, dim)

    @classmethod
    def unit(cls, i: int, dim: int) -> F2Vector:
        return cls(1 << (dim - 1 - i), dim)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.dim:
            raise IndexError(i)
        return (self.bits >> (self.dim - 1 - i)) & 1

    def __add__(self, other: F2Vector) -> F2Vector:
        _check_dims(self.dim, other.dim)
        return F2Vector(self.bits ^ other.bits, self.dim)

    def __bool__(self) -> bool:
        return self.bits != 0

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self[i] for i in range(self.dim))

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def __repr__(self) -> str:
        return "F2Vector(" + "".join(map(str, self.to_tuple())) + ")"


def _check_dims(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"dimension mismatch: {a} vs {b}")


def all_vectors(dim: int) -> Iterator[F2Vector]:
    """All vectors of the given dimension in lexicographic order."""
    for bits in range(1 << dim):
        yield F2Vector(bits, dim)


def _rref(rows: Iterable[int], dim: int) -> tuple[int, ...]:
    """Reduced row echelon basis of the span, pivots ordered left to right."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            if r & _leading(b):
                r ^= b
        if r:
            lead = _leading(r)
            basis = [b ^ r if b & lead else b for b in basis]
            basis.append(r)
    basis.sort(reverse=True)
    return tuple(basis)


def _leading(x: int) -> int:
    return 1 << (x.bit_length() - 1)


@dataclass(frozen=True)
class F2Subspace:
    """A subspace stored by its reduced echelon basis; equality is structural."""

    basis: tuple[int, ...]
    ambient_dim: int

    @classmethod
    def span(cls, vectors: Iterable[F2Vector], ambient_dim: int) -> F2Subspace:
        rows = []
        for v in vectors:
            _check_dims(v.dim, ambient_dim)
            rows.append(v.bits)
        return cls(_rref(rows, ambient_dim), ambient_dim)

    @classmethod
    def zero(cls, ambient_dim: int) -> F2Subspace:
        return cls((), ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> F2Subspace:
        return cls.span((F2Vector.unit(i, ambient_dim) for i in range(ambient_dim)), ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_vectors(self) -> list[F2Vector]:
        return [F2Vector(b, self.ambient_dim) for b in self.basis]

    def __contains__(self, v: F2Vector) -> bool:
        _check_dims(v.dim, self.ambient_dim)
        r = v.bits
        for b in self.basis:
            if r & _leading(b):
                r ^= b
        return r == 0

    def elements(self) -> list[F2Vector]:
        """All 2**dim elements, sorted lexicographically."""
        out = []
        for coeffs in itertools.product((0, 1), repeat=self.dim):
            bits = 0
            for c, b in zip(coeffs, self.basis):
                if c:
                    bits ^= b
            out.append(F2Vector(bits, self.ambient_dim))
        return sorted(out)

    def __add__(self, other: F2Subspace) -> F2Subspace:
        _check_dims(self.ambient_dim, other.ambient_dim)
        return F2Subspace(_rref(self.basis + other.basis, self.ambient_dim), self.ambient_dim)

    def intersection(self, other: F2Subspace) -> F2Subspace:
        _check_dims(self.ambient_dim, other.ambient_dim)
        small, big = sorted((self, other), key=lambda s: s.dim)
        return F2Subspace.span((v for v in small.elements() if v in big), self.ambient_dim)

    def issubspace(self, other: F2Subspace) -> bool:
        return all(v in other for v in self.basis_vectors())

    def image(self, fn) -> F2Subspace:
        """Span of the images of the basis under a linear map given as a callable."""
        images = [fn(v) for v in self.basis_vectors()]
        dim = images[0].dim if images else self.ambient_dim
        return F2Subspace.span(images, dim)

    def __repr__(self) -> str:
        rows = ["".join(map(str, v.to_tuple())) for v in self.basis_vectors()]
        return f"F2Subspace(dim={self.dim}, basis=[{', '.join(rows)}])"


def meets_trivially(a: F2Subspace, b: F2Subspace) -> bool:
    """True iff the two subspaces intersect only in zero."""
    _check_dims(a.ambient_dim, b.ambient_dim)
    return (a + b).dim == a.dim + b.dim


@dataclass(frozen=True, order=True)
class F2Hom:
    """Linear map given by the images of the standard basis vectors (the matrix rows)."""

    rows: tuple[int, ...]
    domain_dim: int
    codomain_dim: int

    def __post_init__(self) -> None:
        if len(self.rows) != self.domain_dim:
            raise ValueError("need one row per domain basis vector")
        if any(not 0 <= r < (1 << self.codomain_dim) for r in self.rows):
            raise ValueError("row does not fit in the codomain")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> F2Hom:
        rows = [F2Vector.from_tuple(r) for r in matrix]
        codim = rows[0].dim
        return cls(tuple(r.bits for r in rows), len(rows), codim)

    def matrix(self) -> list[tuple[int, ...]]:
        return [F2Vector(r, self.codomain_dim).to_tuple() for r in self.rows]

    def __call__(self, v: F2Vector) -> F2Vector:
        _check_dims(v.dim, self.domain_dim)
        out = 0
        for i, r in enumerate(self.rows):
            if v[i]:
                out ^= r
        return F2Vector(out, self.codomain_dim)

    def rank(self) -> int:
        return len(_rref(self.rows, self.codomain_dim))


def kernel(h: F2Hom) -> F2Subspace:
    """Kernel by elimination on the rows, tracking which basis vectors were combined."""
    n = h.domain_dim
    pivots: list[tuple[int, int]] = []  # (reduced row, combination of domain basis)
    null: list[F2Vector] = []
    for i, row in enumerate(h.rows):
        combo = F2Vector.unit(i, n).bits
        for prow, pcombo in pivots:
            if row & _leading(prow):
                row ^= prow
                combo ^= pcombo
        if row:
            # keep leading bits descending so one pass fully reduces later rows
            pivots.append((row, combo))
            pivots.sort(reverse=True)
        else:
            null.append(F2Vector(combo, n))
    return F2Subspace.span(null, n)


def enumerate_homs(
    domain_dim: int,
    prescribed: Sequence[tuple[F2Vector, F2Vector]] = (),
    avoid: Sequence[F2Subspace] = (),
    exactly_one_of: Iterable[F2Vector] | None = None,
    codomain_dim: int = 2,
) -> list[F2Hom]:
    """All homs satisfying the constraints, in lexicographic order of their row matrices.

    ``prescribed`` fixes images of given vectors, every kernel must meet each
    ``avoid`` subspace trivially, and if ``exactly_one_of`` is given the kernel
    must contain exactly one of those vectors.
    """
    for v, img in prescribed:
        _check_dims(v.dim, domain_dim)
        _check_dims(img.dim, codomain_dim)
    special = None if exactly_one_of is None else list(exactly_one_of)
    found = []
    for rows in itertools.product(range(1 << codomain_dim), repeat=domain_dim):
        h = F2Hom(rows, domain_dim, codomain_dim)
        if any(h(v) != img for v, img in prescribed):
            continue
        ker = kernel(h)
        if not all(meets_trivially(ker, u) for u in avoid):
            continue
        if special is not None and sum(v in ker for v in special) != 1:
            continue
        found.append(h)
    return found
