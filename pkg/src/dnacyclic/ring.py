"""The eight-element chain ring GF(2)[u]/(u^3) and its dinucleotide codec.

An element a0 + a1*u + a2*u^2 is packed into an int 0..7 as
a0 | a1 << 1 | a2 << 2.  Addition is XOR; multiplication truncates at
u^3 = 0.  The Watson-Crick complement of a is a + u^2, which pairs each
element with the element whose two-letter DNA codon is the basewise
complement of its own.

Codon table (a bijection onto 8 of the 16 dinucleotides):

    GC <-> 0      CG <-> u2
    AT <-> 1      TA <-> 1+u2
    GT <-> u      CA <-> u+u2
    TG <-> 1+u    AC <-> 1+u+u2

Everything here is a pure function over small ints; thread-safe.
"""

from __future__ import annotations

ZERO = 0
ONE = 1
U = 2
U2 = 4

ELEMENTS = tuple(range(8))


def add(a, b):
    """Sum in the ring (coordinatewise XOR)."""
    return a ^ b


def _mul(a, b):
    a0, a1, a2 = a & 1, (a >> 1) & 1, (a >> 2) & 1
    b0, b1, b2 = b & 1, (b >> 1) & 1, (b >> 2) & 1
    c0 = a0 & b0
    c1 = (a0 & b1) ^ (a1 & b0)
    c2 = (a0 & b2) ^ (a1 & b1) ^ (a2 & b0)
    return c0 | c1 << 1 | c2 << 2


MUL = tuple(tuple(_mul(a, b) for b in ELEMENTS) for a in ELEMENTS)


def mul(a, b):
    """Product in the ring, u^3 = 0."""
    return MUL[a][b]


def complement(a):
    """Watson-Crick complement a + u^2; an involution."""
    return a ^ U2


def is_unit(a):
    """Units are exactly the four elements with constant coefficient 1."""
    return bool(a & 1)


INVERSE = {a: next(b for b in ELEMENTS if MUL[a][b] == ONE)
           for a in ELEMENTS if a & 1}


def inverse(a):
    """Multiplicative inverse of a unit."""
    if not is_unit(a):
        raise ValueError(f"{token(a)!r} is not a unit")
    return INVERSE[a]


_TOKEN_OF = ("0", "1", "u", "1+u", "u2", "1+u2", "u+u2", "1+u+u2")
_VALUE_OF = {t: v for v, t in enumerate(_TOKEN_OF)}


def token(a):
    """Canonical text token of an element, e.g. "1+u2"."""
    return _TOKEN_OF[a]


def from_token(s):
    """Parse a canonical element token."""
    try:
        return _VALUE_OF[s.strip()]
    except KeyError:
        raise ValueError(f"unknown ring element token {s!r}") from None


_CODON_OF = ("GC", "AT", "GT", "TG", "CG", "TA", "CA", "AC")
_VALUE_OF_CODON = {c: v for v, c in enumerate(_CODON_OF)}

BASE_COMPLEMENT = {"A": "T", "T": "A", "G": "C", "C": "G"}


def to_codon(a):
    """Two-letter DNA codon of an element."""
    return _CODON_OF[a]


def from_codon(s):
    """Ring element of a mapped codon; lowercase accepted, unmapped rejected."""
    c = s.strip().upper()
    if len(c) != 2 or any(b not in "ACGT" for b in c):
        raise ValueError(f"not a dinucleotide: {s!r}")
    try:
        return _VALUE_OF_CODON[c]
    except KeyError:
        raise ValueError(f"unmapped codon {c!r}") from None
