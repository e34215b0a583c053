"""Field-element <-> DNA 2k-mer correspondence and DNA string utilities.

A codebook sends each a in F_{4^{2k}} to a 2k-mer so that a and its
Frobenius image theta(a) = a^(4^k) land on string reverses of each other.
Fixed points of theta therefore take exactly the palindromic 2k-mers.
"""

from __future__ import annotations

from itertools import product
from typing import IO, Iterable, Sequence

from .gf import Field
from .ring import Ring, RingElement

ALPHABET = "ACGT"
_COMPLEMENT = str.maketrans("ACGT", "TGCA")

# k = 1 table keyed by discrete log of the element (None is the zero
# element).  Eleven entries are pinned by worked example ex3;
# b^6, b^9, b^10, b^11, b^14 are a deterministic completion.
REFERENCE_TABLE_K1: dict[int | None, str] = {
    None: "AA",
    0: "TT",
    1: "AT",
    2: "GC",
    3: "AG",
    4: "TA",
    5: "CC",
    6: "AC",
    7: "GT",
    8: "CG",
    9: "CA",
    10: "GG",
    11: "TC",
    12: "GA",
    13: "TG",
    14: "CT",
}


def dna_reverse(d: str) -> str:
    return d[::-1]


def wcc_complement(d: str) -> str:
    """Watson-Crick complement, base by base (A<->T, C<->G)."""
    _validate(d)
    return d.translate(_COMPLEMENT)


def _validate(d: str) -> None:
    bad = set(d) - set(ALPHABET)
    if bad:
        raise ValueError(f"non-DNA characters {sorted(bad)} in {d!r}")


def is_palindrome(d: str) -> bool:
    return d == d[::-1]


class DnaCodebook:
    """Bijection between field elements and DNA strings of length 2k."""

    def __init__(self, field: Field, forward: Sequence[str], source: str):
        self.field = field
        self.source = source
        self.kmer_length = 2 * field.k
        self.forward = list(forward)
        self.backward = {s: a for a, s in enumerate(self.forward)}
        if len(self.backward) != field.order:
            raise ValueError("codebook is not injective")

    def __repr__(self) -> str:
        return f"DnaCodebook(k={self.field.k}, source={self.source!r})"

    def tau(self, a: int) -> str:
        return self.forward[a]

    def tau_inv(self, d: str) -> int:
        if len(d) != self.kmer_length:
            raise ValueError(f"expected a {self.kmer_length}-mer, got {d!r}")
        try:
            return self.backward[d]
        except KeyError:
            raise ValueError(f"{d!r} is not a DNA {self.kmer_length}-mer") from None

    def dump(self) -> list[str]:
        """``element<TAB>kmer`` lines, 0 first then discrete-log order."""
        f = self.field
        return [f"{f.format(a)}\t{self.forward[a]}" for a in f.elements()]


def _generated_table(field: Field) -> list[str]:
    kmers = ["".join(p) for p in product(ALPHABET, repeat=2 * field.k)]
    palins = iter([s for s in kmers if is_palindrome(s)])
    others = [s for s in kmers if not is_palindrome(s)]
    used: set[str] = set()
    forward: list[str | None] = [None] * field.order
    oi = 0
    for a in field.elements():
        if forward[a] is not None:
            continue
        ta = field.theta(a)
        if ta == a:
            forward[a] = next(palins)
            continue
        while others[oi] in used:
            oi += 1
        s = others[oi]
        forward[a], forward[ta] = s, s[::-1]
        used.update((s, s[::-1]))
    return forward  # type: ignore[return-value]


def build_codebook(field: Field, source: str = "generated") -> DnaCodebook:
    if source == "generated":
        return DnaCodebook(field, _generated_table(field), source)
    if source == "reference":
        if field.k != 1:
            raise ValueError("the reference codebook exists only for k=1")
        forward = [""] * field.order
        for a in field.elements():
            forward[a] = REFERENCE_TABLE_K1[None if a == 0 else field.log(a)]
        return DnaCodebook(field, forward, source)
    raise ValueError(f"unknown codebook source {source!r} (use 'generated' or 'reference')")


def tau(book: DnaCodebook, a: int) -> str:
    return book.tau(a)


def tau_inv(book: DnaCodebook, d: str) -> int:
    return book.tau_inv(d)


def encode_gray_tuple(book: DnaCodebook, t: Sequence[int], width: int | None = None) -> str:
    """Concatenate the k-mers of a Gray tuple; ``width`` checks its length."""
    if width is not None and len(t) != width:
        raise ValueError(f"expected a {width}-tuple, got length {len(t)}")
    fw = book.forward
    return "".join(fw[a] for a in t)


def encode_element(book: DnaCodebook, a: RingElement) -> str:
    _check_field(book, a.ring)
    fw = book.forward
    return "".join(fw[x] for x in a.c)


def encode_codeword(book: DnaCodebook, ring: Ring, word: Iterable[RingElement]) -> str:
    _check_field(book, ring)
    fw = book.forward
    out = []
    for c in word:
        if c.ring is not ring and c.ring != ring:
            raise ValueError("codeword symbol from a different ring")
        out.extend(fw[x] for x in c.c)
    return "".join(out)


def decode_codeword(book: DnaCodebook, ring: Ring, d: str) -> list[RingElement]:
    _check_field(book, ring)
    m = book.kmer_length
    sym = m * ring.size
    if len(d) % sym:
        raise ValueError(f"DNA length {len(d)} is not a multiple of {sym}")
    out = []
    for i in range(0, len(d), sym):
        chunk = d[i : i + sym]
        out.append(ring.element([book.tau_inv(chunk[j : j + m]) for j in range(0, sym, m)]))
    return out


def _check_field(book: DnaCodebook, ring: Ring) -> None:
    if book.field != ring.field:
        raise ValueError("codebook and ring use different fields")


def write_fasta(handle: IO[str], records: Iterable[tuple[str, str]]) -> int:
    """Write ``>header`` / sequence pairs, one sequence line each."""
    count = 0
    for header, seq in records:
        handle.write(f">{header}\n{seq}\n")
        count += 1
    return count


def read_fasta(handle: IO[str]) -> list[tuple[str, str]]:
    records = []
    header = None
    seq: list[str] = []
    for line in handle:
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            if header is not None:
                records.append((header, "".join(seq)))
            header, seq = line[1:], []
        else:
            seq.append(line)
    if header is not None:
        records.append((header, "".join(seq)))
    return records
