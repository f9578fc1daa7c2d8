"""Affine maps of C^3 preserving the lattice, reduced modulo twice the lattice.

An element is ``z -> d*z + t/2`` with a sign ``d_k`` per curve and a translation
``t`` given in half-lattice units on the basis (e1, tau1*e1, e2, tau2*e2, e3,
tau3*e3). Reducing modulo 2*Lambda makes ``t`` live in (Z/4)^6, so the ambient
group {+-1}^3 x| (Z/4)^6 has 2**15 elements.

Elements are also packed into 15-bit integer codes so whole multiplication
tables can be computed with numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .actions import ActionElement

AMBIENT_ORDER = 2**15


@dataclass(frozen=True, order=True)
class AffineElement:
    d: tuple[int, int, int]
    t: tuple[int, int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.d) != 3 or any(s not in (1, -1) for s in self.d):
            raise ValueError(f"bad sign vector {self.d}")
        if len(self.t) != 6:
            raise ValueError(f"bad translation {self.t}")
        object.__setattr__(self, "t", tuple(int(x) % 4 for x in self.t))
        object.__setattr__(self, "d", tuple(int(s) for s in self.d))

    @classmethod
    def identity(cls) -> AffineElement:
        return cls((1, 1, 1), (0,) * 6)

    @classmethod
    def translation(cls, half_units: Sequence[int]) -> AffineElement:
        return cls((1, 1, 1), tuple(half_units))

    @classmethod
    def lattice(cls, lam: Sequence[int]) -> AffineElement:
        """Translation by the lattice vector with integer coordinates ``lam``."""
        return cls.translation([2 * x for x in lam])

    @classmethod
    def from_action(cls, e: ActionElement) -> AffineElement:
        """Affine lift of a sign action.

        Per curve, the bits (a0, a1, a3) act as -z, -z + tau/2 and -z + 1/2;
        their product negates z iff an odd number is set, and contributes a
        half translation along tau for a1 and along 1 for a3.
        """
        d, t = [], []
        for a0, a1, a3 in e.curve_bits():
            d.append(-1 if (a0 + a1 + a3) % 2 else 1)
            t.extend((a3, a1))
        return cls(tuple(d), tuple(t))

    def to_action(self) -> ActionElement:
        """The sign action this element induces (inverse of ``from_action`` mod Lambda)."""
        triples = []
        for k in range(3):
            a3, a1 = self.t[2 * k] % 2, self.t[2 * k + 1] % 2
            a0 = (a1 + a3 + (self.d[k] == -1)) % 2
            triples.append((a0, a1, a3))
        return ActionElement.from_curve_bits(triples)

    def _act_t(self, t: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.d[i // 2] * x for i, x in enumerate(t))

    def __mul__(self, other: AffineElement) -> AffineElement:
        """Composition: apply ``other`` first, then ``self``."""
        d = tuple(a * b for a, b in zip(self.d, other.d))
        t = tuple(a + b for a, b in zip(self._act_t(other.t), self.t))
        return AffineElement(d, t)

    def inverse(self) -> AffineElement:
        return AffineElement(self.d, tuple(-x for x in self._act_t(self.t)))

    def order(self) -> int:
        x, k = self, 1
        ident = AffineElement.identity()
        while x != ident:
            x, k = x * self, k + 1
        return k

    def is_translation(self) -> bool:
        return self.d == (1, 1, 1)

    def is_lattice_translation(self) -> bool:
        """Translation by an element of Lambda (even half-units) modulo 2*Lambda."""
        return self.is_translation() and all(x % 2 == 0 for x in self.t)

    def mod_lattice(self) -> AffineElement:
        """Representative with translation in {0,1}^6, i.e. the image modulo Lambda."""
        return AffineElement(self.d, tuple(x % 2 for x in self.t))

    def act_on_quarter(self, q: Sequence[int]) -> tuple[int, ...]:
        """Image of the quarter point z = q/4 (coordinates mod 4)."""
        return tuple((self.d[i // 2] * x + 2 * self.t[i]) % 4 for i, x in enumerate(q))

    def permute_curves(self, perm: Sequence[int]) -> AffineElement:
        """New curve i carries the data of old curve perm[i]."""
        d = tuple(self.d[perm[i]] for i in range(3))
        t = tuple(self.t[2 * perm[i] + j] for i in range(3) for j in range(2))
        return AffineElement(d, t)

    def code(self) -> int:
        return encode(self.d, self.t)

    @classmethod
    def from_code(cls, code: int) -> AffineElement:
        return decode(code)

    def __str__(self) -> str:
        parts = []
        for k in range(3):
            term = "z" if self.d[k] == 1 else "-z"
            real, tau = self.t[2 * k], self.t[2 * k + 1]
            if real:
                term += f"+{Fraction(real, 2)}"
            if tau:
                term += "+" + {1: "tau/2", 2: "tau", 3: "3tau/2"}[tau]
            parts.append(term)
        return "(" + ", ".join(parts) + ")"


# Codes: bit k of the top three bits is set when d_k = -1; then two bits per
# translation coordinate, coordinate 0 most significant.


def encode(d: Sequence[int], t: Sequence[int]) -> int:
    code = 0
    for s in d:
        code = (code << 1) | (s == -1)
    for x in t:
        code = (code << 2) | (x % 4)
    return code


def decode(code: int) -> AffineElement:
    t = [(code >> (2 * (5 - i))) & 3 for i in range(6)]
    d = [-1 if (code >> (12 + 2 - k)) & 1 else 1 for k in range(3)]
    return AffineElement(tuple(d), tuple(t))


def mul_codes(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorized product of packed elements (broadcasting)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    da, db = a >> 12, b >> 12
    out = (da ^ db) << 12
    for i in range(6):
        shift = 2 * (5 - i)
        neg = (da >> (2 - i // 2)) & 1
        tb = (b >> shift) & 3
        tb = np.where(neg == 1, (-tb) % 4, tb)
        out |= ((tb + ((a >> shift) & 3)) % 4) << shift
    return out


def lattice_basis() -> list[AffineElement]:
    """The six translations e1, tau1 e1, ..., tau3 e3 modulo 2*Lambda."""
    return [AffineElement.lattice([int(i == j) for j in range(6)]) for i in range(6)]


def swap_real_tau(v: Sequence[int]) -> tuple[int, ...]:
    """Exchange the real and tau coordinate on every curve."""
    return tuple(v[i ^ 1] for i in range(6))
