"""The ring R_{k,s} = F_{4^{2k}}[u_1..u_s] / (u_i^2 - u_i).

Elements are stored in CRT ("Gray") coordinates: component i is the
coefficient of the idempotent I_i, which is the value of the element at
the point u_e = 1 - r_e where T_i = (r_1, ..., r_s).  In these
coordinates multiplication is componentwise and the automorphism
u_e -> u_e + 1, a -> a^(4^k) becomes "Frobenius each coordinate, then
reverse the coordinate order".

The monomial basis U_0..U_{2^s-1} exists only at the conversion boundary
(:meth:`Ring.from_monomial` / :meth:`Ring.to_monomial`).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .gf import Field

MAX_S = 8


def ordered_tuples(s: int) -> list[tuple[int, ...]]:
    """Exponent tuples grouped by weight, each group in descending lex order."""
    out = []
    for w in range(s + 1):
        block = []
        for ones in combinations(range(s), w):
            block.append(tuple(1 if e in ones else 0 for e in range(s)))
        block.sort(reverse=True)
        out.extend(block)
    return out


class RingElement:
    __slots__ = ("ring", "c")

    def __init__(self, ring: "Ring", components: Sequence[int]):
        self.ring = ring
        self.c = tuple(components)

    def _same(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError("ring elements belong to different rings")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._same(other)
        return RingElement(self.ring, [a ^ b for a, b in zip(self.c, other.c)])

    __sub__ = __add__

    def __neg__(self) -> "RingElement":
        return self

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._same(other)
        mul = self.ring.field.mul
        return RingElement(self.ring, [mul(a, b) for a, b in zip(self.c, other.c)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingElement) and self.c == other.c and self.ring == other.ring

    def __hash__(self) -> int:
        return hash(self.c)

    def __bool__(self) -> bool:
        return any(self.c)

    def __repr__(self) -> str:
        f = self.ring.field
        return "crt(" + ", ".join(f.format(a) for a in self.c) + ")"

    def theta(self) -> "RingElement":
        return self.ring.theta(self)

    def is_unit(self) -> bool:
        return all(self.c)


class Ring:
    """R_{k,s} over a given field; build with :func:`build_ring`."""

    def __init__(self, field: Field, s: int):
        self.field = field
        self.s = s
        self.size = 1 << s
        self.tuples = ordered_tuples(s)
        # component i of from_monomial(b) sums b_j over crt_support[i]
        self.crt_support = [
            [j for j, tj in enumerate(self.tuples) if not any(x & y for x, y in zip(ti, tj))]
            for ti in self.tuples
        ]
        # inverse of the 0/1 matrix above, entrywise the tensor power of
        # [[0,1],[1,1]]: b_j sums alpha_i over i with T_i | T_j = all-ones
        self.monomial_support = [
            [i for i, ti in enumerate(self.tuples) if all(x | y for x, y in zip(ti, tj))]
            for tj in self.tuples
        ]
        self.zero = RingElement(self, [0] * self.size)
        self.one = RingElement(self, [1] * self.size)

    def __repr__(self) -> str:
        return f"Ring(k={self.field.k}, s={self.s}, modulus={self.field.modulus:#x})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.s == other.s and self.field == other.field

    def __hash__(self) -> int:
        return hash((self.field, self.s))

    @property
    def monomials(self) -> list[tuple[int, ...]]:
        """Exponent tuples mu(U_0), ..., mu(U_{2^s-1}); identical to the tuple table."""
        return self.tuples

    @property
    def cardinality(self) -> int:
        return self.field.order**self.size

    @property
    def crt_matrix(self) -> list[list[int]]:
        return [[1 if j in sup else 0 for j in range(self.size)] for sup in self.crt_support]

    @property
    def crt_matrix_inverse(self) -> list[list[int]]:
        return [[1 if i in sup else 0 for i in range(self.size)] for sup in self.monomial_support]

    # constructors -----------------------------------------------------

    def element(self, components: Sequence[int]) -> RingElement:
        if len(components) != self.size:
            raise ValueError(f"expected {self.size} components, got {len(components)}")
        for a in components:
            self.field.check(a)
        return RingElement(self, components)

    def constant(self, a: int) -> RingElement:
        return RingElement(self, [self.field.check(a)] * self.size)

    def variable(self, e: int) -> RingElement:
        """u_e for 1 <= e <= s."""
        if not 1 <= e <= self.s:
            raise ValueError(f"u{e} is undefined for s={self.s}")
        return RingElement(self, [1 - t[e - 1] for t in self.tuples])

    def idempotent(self, i: int) -> RingElement:
        if not 0 <= i < self.size:
            raise IndexError(f"idempotent index {i} out of range [0, {self.size})")
        return RingElement(self, [1 if j == i else 0 for j in range(self.size)])

    def idempotents(self) -> list[RingElement]:
        return [self.idempotent(i) for i in range(self.size)]

    def render_idempotent(self, i: int) -> str:
        """Product form, e.g. ``(u_1+1)u_2u_3`` for s=3, i=1."""
        if not 0 <= i < self.size:
            raise IndexError(f"idempotent index {i} out of range [0, {self.size})")
        return "".join(
            f"(u_{e + 1}+1)" if r else f"u_{e + 1}" for e, r in enumerate(self.tuples[i])
        )

    # basis conversions ------------------------------------------------

    def from_monomial(self, b: Sequence[int]) -> RingElement:
        """Element sum_j b_j U_j, returned in CRT coordinates."""
        if len(b) != self.size:
            raise ValueError(f"expected {self.size} monomial coefficients, got {len(b)}")
        out = []
        for sup in self.crt_support:
            acc = 0
            for j in sup:
                acc ^= b[j]
            out.append(acc)
        return self.element(out)

    def to_monomial(self, a: RingElement) -> list[int]:
        out = []
        for sup in self.monomial_support:
            acc = 0
            for i in sup:
                acc ^= a.c[i]
            out.append(acc)
        return out

    def gray(self, a: RingElement) -> tuple[int, ...]:
        return a.c

    def ungray(self, t: Sequence[int]) -> RingElement:
        return self.element(t)

    def theta(self, a: RingElement) -> RingElement:
        th = self.field.theta
        c = a.c
        n = self.size - 1
        return RingElement(self, [th(c[n - i]) for i in range(self.size)])

    # enumeration ------------------------------------------------------

    def element_at(self, index: int) -> RingElement:
        """Mixed-radix decoding: component 0 is the least significant digit,
        each digit indexing the field's 0-first discrete-log order."""
        elems = self.field.elements()
        q = self.field.order
        comps = []
        for _ in range(self.size):
            index, d = divmod(index, q)
            comps.append(elems[d])
        return RingElement(self, comps)

    def index_of(self, a: RingElement) -> int:
        q = self.field.order
        idx = 0
        for comp in reversed(a.c):
            idx = idx * q + self.field.index_of(comp)
        return idx

    def elements(self) -> Iterable[RingElement]:
        for i in range(self.cardinality):
            yield self.element_at(i)


@lru_cache(maxsize=None)
def build_ring(field: Field, s: int) -> Ring:
    if not isinstance(s, int) or not 1 <= s <= MAX_S:
        raise ValueError(f"s must be an integer in [1, {MAX_S}], got {s!r}")
    return Ring(field, s)


def gray(a: RingElement) -> tuple[int, ...]:
    return a.ring.gray(a)


def theta_ring(a: RingElement) -> RingElement:
    return a.ring.theta(a)


def is_unit(a: RingElement) -> bool:
    return a.is_unit()
