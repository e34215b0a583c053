"""Arithmetic in the binary field GF(2^(4k)), i.e. F_{4^{2k}}.

Elements are plain ints whose bit j is the coefficient of y^j.  A
:class:`Field` carries the modulus and, for small fields, exp/log tables
keyed on the residue class of ``y`` (written ``b`` when printed).
"""

from __future__ import annotations

from functools import lru_cache

# Conventional primitive polynomials of degree 4k, keyed by k.
DEFAULT_MODULI: dict[int, int] = {
    1: 0b10011,  # y^4 + y + 1
    2: 0b100011101,  # y^8 + y^4 + y^3 + y^2 + 1
    3: (1 << 12) | (1 << 6) | (1 << 4) | (1 << 1) | 1,
    4: (1 << 16) | (1 << 5) | (1 << 3) | (1 << 2) | 1,
}

MAX_K = 4
_TABLE_K = 2  # exp/log tables eager up to this k


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    return poly_mod(clmul(a, b), m)


def poly_powmod(a: int, e: int, m: int) -> int:
    r = 1
    a = poly_mod(a, m)
    while e:
        if e & 1:
            r = poly_mulmod(r, a, m)
        a = poly_mulmod(a, a, m)
        e >>= 1
    return r


def is_irreducible(f: int) -> bool:
    """Trial division by every bit-polynomial of degree <= deg(f)/2."""
    d = f.bit_length() - 1
    if d < 1:
        return False
    for g in range(2, 1 << (d // 2 + 1)):
        if poly_mod(f, g) == 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_primitive(f: int) -> bool:
    """True when ``y`` generates the multiplicative group of GF(2)[y]/(f)."""
    if not is_irreducible(f):
        return False
    d = f.bit_length() - 1
    order = (1 << d) - 1
    if poly_powmod(0b10, order, f) != 1:
        return False
    return all(poly_powmod(0b10, order // p, f) != 1 for p in _prime_factors(order))


@lru_cache(maxsize=None)
def primitive_polynomials(degree: int) -> tuple[int, ...]:
    """All primitive bit-polynomials of the given degree, ascending."""
    top = 1 << degree
    return tuple(f for f in range(top | 1, top << 1, 2) if is_primitive(f))


def format_bitpoly(f: int, var: str = "y") -> str:
    terms = []
    for j in range(f.bit_length() - 1, -1, -1):
        if f >> j & 1:
            terms.append("1" if j == 0 else var if j == 1 else f"{var}^{j}")
    return " + ".join(terms) or "0"


class Field:
    """The field F_{4^{2k}} = GF(2^(4k)) with a fixed primitive modulus.

    Instances are immutable once built; use :func:`build_field`.
    """

    def __init__(self, k: int, modulus: int):
        self.k = k
        self.degree = 4 * k
        self.modulus = modulus
        self.order = 1 << self.degree
        self.group_order = self.order - 1
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._theta: list[int] | None = None
        if k <= _TABLE_K:
            self._build_tables()
            self._theta = [self._theta_by_squaring(a) for a in range(self.order)]

    def __repr__(self) -> str:
        return f"Field(k={self.k}, modulus={format_bitpoly(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.k, self.modulus))

    def _build_tables(self) -> None:
        q1 = self.group_order
        exp = [0] * (2 * q1)
        log = [0] * self.order
        v = 1
        for i in range(q1):
            exp[i] = v
            log[v] = i
            v <<= 1
            if v >> self.degree:
                v ^= self.modulus
        exp[q1:] = exp[:q1]
        self._exp, self._log = exp, log

    def _tables(self) -> tuple[list[int], list[int]]:
        if self._exp is None:
            self._build_tables()
        return self._exp, self._log  # type: ignore[return-value]

    # arithmetic -------------------------------------------------------

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not an element of GF(2^{self.degree})")
        return a

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k <= _TABLE_K:
            return self._exp[self._log[a] + self._log[b]]  # type: ignore[index]
        return poly_mulmod(a, b, self.modulus)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        exp, log = self._tables()
        return exp[(self.group_order - log[a]) % self.group_order]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        exp, log = self._tables()
        return exp[(log[a] * e) % self.group_order]

    def _theta_by_squaring(self, a: int) -> int:
        for _ in range(2 * self.k):
            a = self.mul(a, a)
        return a

    def theta(self, a: int) -> int:
        """The order-2 Frobenius power a -> a^(4^k)."""
        if self._theta is not None:
            return self._theta[a]
        return self._theta_by_squaring(a)

    def exp(self, i: int) -> int:
        exp, _ = self._tables()
        return exp[i % self.group_order]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("discrete log of 0 is undefined")
        _, log = self._tables()
        return log[a]

    # enumeration / display -------------------------------------------

    def elements(self) -> list[int]:
        """0 first, then b^0, b^1, ... in discrete-log order."""
        exp, _ = self._tables()
        return [0] + exp[: self.group_order]

    def index_of(self, a: int) -> int:
        """Position of ``a`` in :meth:`elements`."""
        return 0 if a == 0 else self.log(a) + 1

    def fixed_subfield(self) -> list[int]:
        return [a for a in self.elements() if self.theta(a) == a]

    def format(self, a: int) -> str:
        if a == 0:
            return "0"
        i = self.log(a)
        if i == 0:
            return "1"
        return "b" if i == 1 else f"b^{i}"


@lru_cache(maxsize=None)
def build_field(k: int, modulus: int | None = None) -> Field:
    if not isinstance(k, int) or not 1 <= k <= MAX_K:
        raise ValueError(f"k must be an integer in [1, {MAX_K}], got {k!r}")
    if modulus is None:
        modulus = DEFAULT_MODULI[k]
    deg = modulus.bit_length() - 1
    if deg != 4 * k:
        raise ValueError(f"modulus {format_bitpoly(modulus)} has degree {deg}, need {4 * k}")
    if not is_irreducible(modulus):
        raise ValueError(f"modulus {format_bitpoly(modulus)} is reducible")
    if not is_primitive(modulus):
        raise ValueError(f"modulus {format_bitpoly(modulus)} is irreducible but not primitive")
    return Field(k, modulus)


def parse_bitpoly(text: str) -> int:
    """Parse ``y^4+y+1``, ``0b10011``, ``0x13`` or ``19`` into a bit-polynomial."""
    t = text.replace(" ", "").lower()
    if not t:
        raise ValueError("empty polynomial")
    if t[0].isdigit() and "y" not in t:
        return int(t, 0)
    f = 0
    for term in t.split("+"):
        if term == "1":
            j = 0
        elif term == "y":
            j = 1
        elif term.startswith("y^") and term[2:].isdigit():
            j = int(term[2:])
        else:
            raise ValueError(f"bad polynomial term {term!r} in {text!r}")
        f ^= 1 << j
    return f
