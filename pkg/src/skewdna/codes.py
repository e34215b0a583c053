"""Principally generated skew cyclic codes of even length over R_{k,s}."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .dna import DnaCodebook, encode_codeword
from .ring import Ring, RingElement
from .skewpoly import (
    SkewPoly,
    UnsupportedDivisorError,
    is_palindromic,
    is_theta_palindromic,
    right_divides_xn_minus_1,
    right_divmod,
    skew_mul,
)
from .text import format_message, format_poly

THETA_PALINDROMIC_ODD = "theta-palindromic-odd-degree"
PALINDROMIC_EVEN = "palindromic-even-degree"
NO_SYMMETRY = "none"

DEFAULT_CAP = 1 << 20


class EnumerationLimitError(ValueError):
    """The requested enumeration or search is larger than its budget."""


def classify_symmetry(g: SkewPoly) -> str:
    if g.degree % 2:
        return THETA_PALINDROMIC_ODD if is_theta_palindromic(g) else NO_SYMMETRY
    return PALINDROMIC_EVEN if is_palindromic(g) else NO_SYMMETRY


@dataclass(frozen=True)
class SkewCyclicCode:
    g: SkewPoly
    n: int
    t: int
    symmetry: str

    @property
    def ring(self) -> Ring:
        return self.g.ring

    @property
    def size(self) -> int:
        return self.ring.cardinality**self.t

    @property
    def guaranteed_reversible(self) -> bool:
        return self.symmetry != NO_SYMMETRY

    def __str__(self) -> str:
        return f"C = (g), g = {format_poly(self.g)}, n = {self.n}, t = {self.t}, {self.symmetry}"


@dataclass(frozen=True)
class Codeword:
    word: tuple[RingElement, ...]
    msg: tuple[RingElement, ...] | None = None

    def __len__(self) -> int:
        return len(self.word)

    def poly(self) -> SkewPoly:
        return SkewPoly(self.word[0].ring, self.word)


def build_code(g: SkewPoly, n: int) -> SkewCyclicCode:
    if n % 2:
        raise ValueError(f"code length must be even, got n={n}")
    if not g.is_monic():
        raise UnsupportedDivisorError("generator must be monic")
    if not right_divides_xn_minus_1(g, n):
        raise ValueError(f"{format_poly(g)} is not a right divisor of x^{n} - 1")
    return SkewCyclicCode(g, n, n - g.degree, classify_symmetry(g))


def _word_of(code: SkewCyclicCode, w: Codeword | Sequence[RingElement]) -> tuple[RingElement, ...]:
    word = w.word if isinstance(w, Codeword) else tuple(w)
    if len(word) != code.n:
        raise ValueError(f"expected a word of length {code.n}, got {len(word)}")
    return word


def encode(code: SkewCyclicCode, msg: Sequence[RingElement]) -> Codeword:
    """c(x) = sum_i msg_i x^i g(x)."""
    msg = tuple(msg)
    if len(msg) != code.t:
        raise ValueError(f"message must have {code.t} symbols, got {len(msg)}")
    c = skew_mul(SkewPoly(code.ring, msg), code.g)
    return Codeword(tuple(c.padded(code.n)), msg)


def contains(code: SkewCyclicCode, w: Codeword | Sequence[RingElement]) -> bool:
    word = _word_of(code, w)
    _, r = right_divmod(SkewPoly(code.ring, word), code.g)
    return not r


def skew_shift(w: Codeword | Sequence[RingElement]) -> Codeword:
    """(c_0..c_{n-1}) -> (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))."""
    word = w.word if isinstance(w, Codeword) else tuple(w)
    th = word[0].ring.theta
    return Codeword(tuple(th(c) for c in word[-1:] + word[:-1]))


def theta_reverse(w: Codeword | Sequence[RingElement]) -> Codeword:
    """The word whose DNA image is the string reverse of w's."""
    word = w.word if isinstance(w, Codeword) else tuple(w)
    th = word[0].ring.theta
    return Codeword(tuple(th(c) for c in reversed(word)))


def reverse_message(code: SkewCyclicCode, msg: Sequence[RingElement]) -> tuple[RingElement, ...]:
    if len(msg) != code.t:
        raise ValueError(f"message must have {code.t} symbols, got {len(msg)}")
    th = code.ring.theta
    return tuple(th(m) for m in reversed(msg))


def reverse_codeword(code: SkewCyclicCode, msg: Sequence[RingElement]) -> Codeword:
    """c'(x) = sum_i theta(msg_i) x^(t-1-i) g(x)."""
    return encode(code, reverse_message(code, msg))


def message_at(code: SkewCyclicCode, index: int) -> tuple[RingElement, ...]:
    """Mixed-radix message; symbol 0 is the least significant digit."""
    ring = code.ring
    q = ring.cardinality
    out = []
    for _ in range(code.t):
        index, d = divmod(index, q)
        out.append(ring.element_at(d))
    return tuple(out)


def random_message(code: SkewCyclicCode, rng: random.Random) -> tuple[RingElement, ...]:
    ring = code.ring
    elems = ring.field.elements()
    return tuple(
        ring.element([rng.choice(elems) for _ in range(ring.size)]) for _ in range(code.t)
    )


def enumerate_codewords(
    code: SkewCyclicCode,
    cap: int = DEFAULT_CAP,
    *,
    sample: int | None = None,
    seed: int = 0,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[Codeword]:
    """Yield codewords by message index in [start, stop).

    Exhaustive when |C| <= cap.  Larger codes need ``sample``, which draws
    that many uniformly random messages from a PRNG seeded with ``seed``.
    Disjoint index ranges can be handed to separate workers.
    """
    if sample is not None:
        rng = random.Random(seed)
        for _ in range(sample):
            yield encode(code, random_message(code, rng))
        return
    total = code.size
    if total > cap:
        raise EnumerationLimitError(
            f"code has {total} codewords, above the cap of {cap}; pass sample=N to sample"
        )
    stop = total if stop is None else min(stop, total)
    for i in range(start, stop):
        yield encode(code, message_at(code, i))


@dataclass
class ReversibilityReport:
    passed: bool
    mode: str
    checked: int
    seed: int | None = None
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        s = f"reversibility {status} ({self.mode}, {self.checked} codewords"
        if self.seed is not None:
            s += f", seed {self.seed}"
        s += ")"
        if self.counterexample:
            s += f"\n  counterexample: {self.counterexample}"
        return s


def verify_reversible(
    code: SkewCyclicCode,
    book: DnaCodebook,
    mode: str = "exhaustive",
    trials: int = 1000,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
) -> ReversibilityReport:
    """Check that the DNA image of ``code`` is closed under string reversal.

    ``exhaustive`` builds the full DNA string set and tests closure.
    ``sampled`` checks, per random message, that the explicit reverse
    codeword c' encodes to the reversed string and lies in the code.
    """
    ring = code.ring
    if mode == "exhaustive":
        words: dict[str, tuple[RingElement, ...]] = {}
        for cw in enumerate_codewords(code, cap):
            words[encode_codeword(book, ring, cw.word)] = cw.msg  # type: ignore[assignment]
        for d, msg in words.items():
            if d[::-1] not in words:
                return ReversibilityReport(
                    False, mode, len(words),
                    counterexample=f"msg={format_message(msg)} dna={d} reverse={d[::-1]} not in code",
                )
        return ReversibilityReport(True, mode, len(words))
    if mode == "sampled":
        rng = random.Random(seed)
        for i in range(trials):
            msg = random_message(code, rng)
            c = encode(code, msg)
            c_rev = reverse_codeword(code, msg)
            d = encode_codeword(book, ring, c.word)
            d_rev = encode_codeword(book, ring, c_rev.word)
            if d_rev != d[::-1] or not contains(code, c_rev):
                target = theta_reverse(c)
                in_code = contains(code, target)
                return ReversibilityReport(
                    False, mode, i + 1, seed,
                    counterexample=(
                        f"msg={format_message(msg)} dna={d} constructed reverse={d_rev}; "
                        f"true reverse {'is' if in_code else 'is not'} a codeword"
                    ),
                )
        return ReversibilityReport(True, mode, trials, seed)
    raise ValueError(f"unknown mode {mode!r} (use 'exhaustive' or 'sampled')")


def _slots(degree: int, symmetry: str) -> list[int]:
    if symmetry == "any":
        return list(range(degree))
    if symmetry in ("palindromic", "theta-palindromic"):
        return list(range(1, degree // 2 + 1)) if degree >= 2 else []
    raise ValueError(f"unknown symmetry {symmetry!r}")


def count_candidates(degree: int, symmetry: str, coeff_set: Sequence[RingElement]) -> int:
    return len(coeff_set) ** len(_slots(degree, symmetry))


def search_divisors(
    ring: Ring,
    n: int,
    degree: int,
    symmetry: str,
    coeff_set: Sequence[RingElement],
    budget: int = 1 << 20,
) -> list[SkewPoly]:
    """Monic right divisors of x^n - 1 of the given degree and symmetry.

    Coefficient slots are filled low degree first, the lowest slot varying
    slowest; each slot runs through ``coeff_set`` in its given order.
    """
    if n % 2:
        raise ValueError(f"code length must be even, got n={n}")
    if not 1 <= degree < n:
        raise ValueError(f"need 1 <= degree < n, got degree={degree}, n={n}")
    coeff_set = list(coeff_set)
    if not coeff_set:
        return []
    slots = _slots(degree, symmetry)
    total = len(coeff_set) ** len(slots)
    if total > budget:
        raise EnumerationLimitError(f"{total} candidates exceed the budget of {budget}")
    th = ring.theta
    fixed = [c for c in coeff_set if th(c) == c]
    choices = []
    for i in slots:
        middle = symmetry == "theta-palindromic" and 2 * i == degree
        choices.append(fixed if middle else coeff_set)
    xn1 = SkewPoly.xn_minus_1(ring, n)
    found = []
    for combo in itertools.product(*choices):
        coeffs = [ring.zero] * (degree + 1)
        coeffs[degree] = ring.one
        if symmetry == "any":
            coeffs[:degree] = combo
        else:
            coeffs[0] = ring.one
            for i, c in zip(slots, combo):
                coeffs[i] = c
                coeffs[degree - i] = th(c) if symmetry == "theta-palindromic" else c
        g = SkewPoly(ring, coeffs)
        if not right_divmod(xn1, g)[1]:
            found.append(g)
    return found


def dna_min_distance(
    code: SkewCyclicCode, book: DnaCodebook, mode: str = "exhaustive", cap: int = 4096
) -> int:
    """Minimum pairwise Hamming distance between distinct DNA codeword strings."""
    if mode != "exhaustive":
        raise ValueError("only exhaustive minimum distance is supported")
    strings = sorted({encode_codeword(book, code.ring, cw.word) for cw in enumerate_codewords(code, cap)})
    if len(strings) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    best = len(strings[0])
    for a, b in itertools.combinations(strings, 2):
        d = sum(x != y for x, y in zip(a, b))
        if d < best:
            best = d
            if best == 1:
                break
    return best
