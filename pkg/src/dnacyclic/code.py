"""Cyclic codes over GF(2)[u]/(u^3) as ideals of R[x]/(x^n - 1).

A code is stored as the GF(2) row span of its 3n-bit layer expansion.
A codeword with layers (f1, f2, f3) packs into the integer

    f3  |  f2 << n  |  f1 << 2n

so that multiplication by u is a plain right shift by n and the
u^2-only subspace is exactly the low n bits.  The basis is kept in
reduced row echelon form with the pivot of a row being its highest set
bit; RREF is unique per subspace, which makes code equality a tuple
comparison and every derived quantity deterministic.

The ideal generated by a set of words equals the GF(2) span of
{u^j * x^i * w}, because R itself is the GF(2) span of {1, u, u^2}; this
reduces all module arithmetic to bit linear algebra.

Codes are immutable after construction.  The enumeration, distance and
closure oracles walk all 2^dim codewords and are guarded by a
configurable dimension cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import polyf2
from .polyf2 import CapExceeded
from .polyr import RingWord, bit_reverse

DEFAULT_ENUM_CAP = 24

# From this dimension up, the streaming oracles switch to vectorized
# whole-code passes (same elementwise checks, evaluated in bulk).
_VECTOR_MIN_DIM = 14

_REV_TABLES = {}


def _rev_table(n):
    if n not in _REV_TABLES:
        _REV_TABLES[n] = tuple(bit_reverse(v, n) for v in range(1 << n))
    return _REV_TABLES[n]


def pack(word):
    """3n-bit layer expansion of a word."""
    n = word.n
    return word.f3 | word.f2 << n | word.f1 << 2 * n


def unpack(n, v):
    """Inverse of pack."""
    mask = (1 << n) - 1
    return RingWord(n, (v >> 2 * n) & mask, (v >> n) & mask, v & mask)


def _insert(pivots, v):
    """Insert v into an RREF basis kept as {pivot bit: row}; True if rank grew.

    Rows carry no pivot bit but their own, so the basis is the unique
    reduced echelon form of its span.
    """
    while v:
        p = v.bit_length() - 1
        if p not in pivots:
            break
        v ^= pivots[p]
    if not v:
        return False
    p = v.bit_length() - 1
    for q, r in pivots.items():
        if (v >> q) & 1:
            v ^= r
    for q, r in pivots.items():
        if (r >> p) & 1:
            pivots[q] = r ^ v
    pivots[p] = v
    return True


def _rows_of(pivots):
    return tuple(pivots[p] for p in sorted(pivots, reverse=True))


@dataclass(frozen=True)
class Presentation:
    """Structure-theorem generator data (unused fields are zero per case).

    case 1: <g + u p1 + u^2 p2>
    case 2: <g + u p1 + u^2 p2, u^2 a2>
    case 3: <g + u p1 + u^2 p2, u a1 + u^2 q, u^2 a2>
    """

    case: int
    g: int
    p1: int
    p2: int
    a1: int
    q: int
    a2: int

    def generator_words(self, n):
        """The generating words of the presentation (zero words omitted)."""
        words = []
        if self.g or self.p1 or self.p2:
            words.append(RingWord.from_polys(n, self.g, self.p1, self.p2))
        if self.a1 or self.q:
            words.append(RingWord.from_polys(n, 0, self.a1, self.q))
        if self.a2:
            words.append(RingWord.from_polys(n, 0, 0, self.a2))
        return words

    def to_json(self):
        return {
            "case": self.case,
            "g": polyf2.to_text(self.g),
            "p1": polyf2.to_text(self.p1),
            "p2": polyf2.to_text(self.p2),
            "a1": polyf2.to_text(self.a1),
            "q": polyf2.to_text(self.q),
            "a2": polyf2.to_text(self.a2),
        }


class CyclicCode:
    """An ideal of R[x]/(x^n - 1) with a canonical GF(2) basis."""

    __slots__ = ("n", "rows", "generators")

    def __init__(self, n, rows, generators=()):
        self.n = n
        self.rows = tuple(rows)
        self.generators = tuple(generators)

    @classmethod
    def from_generators(cls, n, generators):
        """The ideal generated by the given words (the zero code for none)."""
        generators = tuple(generators)
        pivots = {}
        for w in generators:
            if w.n != n:
                raise ValueError(f"generator length {w.n} does not match n = {n}")
            base = pack(w)
            for j in range(3):
                v = base >> (n * j)
                word = unpack(n, v)
                for _ in range(n):
                    _insert(pivots, pack(word))
                    word = word.shift(1)
        return cls(n, _rows_of(pivots), generators)

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def full(cls, n):
        """The whole ambient space R^n, the ideal generated by 1."""
        return cls.from_generators(n, [RingWord(n, 1)])

    @property
    def dim(self):
        """GF(2) dimension; the code has 2^dim words."""
        return len(self.rows)

    @property
    def cardinality(self):
        return 1 << len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, CyclicCode)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"CyclicCode(n={self.n}, dim={self.dim})"

    def _reduce(self, v):
        for r in self.rows:
            if v.bit_length() == r.bit_length():
                v ^= r
        return v

    def contains(self, word):
        if word.n != self.n:
            raise ValueError(f"length mismatch: {word.n} vs {self.n}")
        return self._reduce(pack(word)) == 0

    def _check_cap(self, cap):
        cap = DEFAULT_ENUM_CAP if cap is None else cap
        if self.dim > cap:
            raise CapExceeded(
                f"enumeration of 2^{self.dim} codewords exceeds cap 2^{cap}")

    def packed_words(self, cap=None):
        """All 2^dim packed codewords, Gray-code order, each exactly once."""
        self._check_cap(cap)
        rows = self.rows
        v = 0
        yield v
        for k in range(1, 1 << len(rows)):
            v ^= rows[(k & -k).bit_length() - 1]
            yield v

    def words(self, cap=None):
        """All codewords as RingWord values."""
        n = self.n
        return (unpack(n, v) for v in self.packed_words(cap))

    def _use_vectorized(self):
        return self.dim >= _VECTOR_MIN_DIM and 3 * self.n <= 62 and self.n <= 16

    def _packed_array(self, cap):
        """All packed codewords as a uint64 array (subset-sum doubling)."""
        self._check_cap(cap)
        arr = np.zeros(1, dtype=np.uint64)
        for r in self.rows:
            arr = np.concatenate([arr, arr ^ np.uint64(r)])
        return arr

    def min_hamming_distance(self, cap=None):
        """Minimum weight over nonzero codewords; inf for the zero code.

        Coordinates are counted nonzero/zero over R, and linearity makes
        the minimum weight equal the minimum pairwise distance.
        """
        if self.dim == 0:
            return math.inf
        n = self.n
        mask = (1 << n) - 1
        if self._use_vectorized():
            arr = self._packed_array(cap)
            support = (arr | arr >> np.uint64(n) | arr >> np.uint64(2 * n)) \
                & np.uint64(mask)
            weights = np.bitwise_count(support)
            return int(weights[weights > 0].min())
        best = n + 1
        for v in self.packed_words(cap):
            if v == 0:
                continue
            w = ((v | v >> n | v >> 2 * n) & mask).bit_count()
            if w < best:
                best = w
                if best == 1:
                    break
        return best

    def _vec_closed(self, use_reverse, use_complement, cap):
        """Vectorized closure check of the chosen coordinate map."""
        n = self.n
        arr = self._packed_array(cap)
        arr.sort()
        out = arr
        if use_reverse:
            table = np.asarray(_rev_table(n), dtype=np.uint64)
            mask = np.uint64((1 << n) - 1)
            s1, s2 = np.uint64(n), np.uint64(2 * n)
            out = (table[(out & mask).astype(np.int64)]
                   | table[((out >> s1) & mask).astype(np.int64)] << s1
                   | table[((out >> s2) & mask).astype(np.int64)] << s2)
        if use_complement:
            out = out ^ np.uint64((1 << n) - 1)
        idx = np.minimum(np.searchsorted(arr, out), len(arr) - 1)
        return bool(np.all(arr[idx] == out))

    def _is_closed_under(self, mapper, cap=None):
        members = set(self.packed_words(cap))
        return all(mapper(v) in members for v in members)

    def _packed_reverse(self, v):
        n = self.n
        mask = (1 << n) - 1
        t = _rev_table(n) if n <= 16 else None
        if t is not None:
            return (t[v & mask] | t[(v >> n) & mask] << n
                    | t[(v >> 2 * n) & mask] << 2 * n)
        return (bit_reverse(v & mask, n) | bit_reverse((v >> n) & mask, n) << n
                | bit_reverse((v >> 2 * n) & mask, n) << 2 * n)

    def is_reversible(self, cap=None):
        """Brute-force check that every codeword's reversal is a codeword."""
        if self._use_vectorized():
            return self._vec_closed(True, False, cap)
        return self._is_closed_under(self._packed_reverse, cap)

    def is_complement_closed(self, cap=None):
        """Brute-force check of closure under the coordinatewise complement."""
        if self._use_vectorized():
            return self._vec_closed(False, True, cap)
        mask = (1 << self.n) - 1
        return self._is_closed_under(lambda v: v ^ mask, cap)

    def is_rc_closed(self, cap=None):
        """Brute-force check of closure under reverse-complement."""
        if self._use_vectorized():
            return self._vec_closed(True, True, cap)
        mask = (1 << self.n) - 1
        return self._is_closed_under(lambda v: self._packed_reverse(v) ^ mask, cap)

    def sum_with(self, other):
        """The code C1 + C2 (span of the union)."""
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        pivots = {}
        for r in self.rows:
            _insert(pivots, r)
        for r in other.rows:
            _insert(pivots, r)
        return CyclicCode(self.n, _rows_of(pivots),
                          self.generators + other.generators)

    def intersect_with(self, other):
        """The code C1 ∩ C2, via the Zassenhaus double-block reduction."""
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        w = 3 * self.n
        pivots = {}
        for r in self.rows:
            _insert(pivots, (r << w) | r)
        for r in other.rows:
            _insert(pivots, r << w)
        inter = {}
        for r in _rows_of(pivots):
            if r >> w == 0 and r:
                _insert(inter, r)
        rows = _rows_of(inter)
        return CyclicCode(self.n, rows, tuple(unpack(self.n, r) for r in rows))

    def report_json(self, cap=None):
        """Summary report of the code as a JSON-ready dict."""
        d = self.min_hamming_distance(cap)
        return {
            "n": self.n,
            "dim": self.dim,
            "cardinality": self.cardinality,
            "min_distance": None if d == math.inf else d,
            "reversible": self.is_reversible(cap),
            "rc_closed": self.is_rc_closed(cap),
            "presentation": (self.canonical_presentation().to_json()
                             if self.n % 2 == 0 else None),
        }

    def u2_subcode(self):
        """The subcode of codewords supported only on the u^2 layer.

        With the chosen packing these are spanned by exactly the basis
        rows whose pivot lies below bit n.
        """
        rows = tuple(r for r in self.rows if r.bit_length() - 1 < self.n)
        return CyclicCode(self.n, rows, tuple(unpack(self.n, r) for r in rows))

    def _layer_rows(self, i):
        """Basis rows whose pivot sits in layer i of the packing."""
        n = self.n
        lo, hi = (2 - i) * n, (3 - i) * n
        return [r for r in self.rows if lo <= r.bit_length() - 1 < hi]

    def torsion_generator(self, i):
        """Monic minimum-degree generator of the torsion code T_i.

        T_i = {a in GF(2)[x] : some codeword is congruent to u^i * a
        modulo u^(i+1)}; the generator is the gcd of all members with
        x^n + 1, so the zero torsion code yields x^n + 1 itself.
        """
        if i not in (0, 1, 2):
            raise ValueError("torsion layer must be 0, 1 or 2")
        shift = (2 - i) * self.n
        g = polyf2.xn1(self.n)
        for r in self._layer_rows(i):
            g = polyf2.gcd(g, r >> shift)
        return g

    def _lift(self, layer, target):
        """The smallest basis combination whose layer part equals target.

        The rows with a pivot in the given layer carry echelon layer
        parts, so the combination is unique; "smallest" refers to the
        deterministic enumeration order over basis combinations.
        """
        shift = (2 - layer) * self.n
        acc = 0
        t = target
        for r in self._layer_rows(layer):
            part = r >> shift
            if t >> (part.bit_length() - 1) & 1:
                t ^= part
                acc ^= r
        if t:
            raise ValueError("target polynomial is not a layer member")
        return acc

    def canonical_presentation(self):
        """Extract deterministic structure-theorem generator data.

        Torsion gcds give g, a1, a2; echelon lifts give the generator
        words; remainder reduction of p1 modulo the a1-lift and of p2, q
        modulo a2 pins the degree bounds deg p1 < deg a1, deg p2 < deg a2,
        deg q < deg a2.  The case tag is the smallest generator set that
        rebuilds the code exactly.
        """
        n = self.n
        if n % 2:
            raise ValueError("presentation extraction requires even length")
        m = polyf2.xn1(n)
        mask = (1 << n) - 1

        def normal(t):
            return 0 if t == m else t

        a2 = normal(self.torsion_generator(2)) if self._layer_rows(2) else 0
        a1 = normal(self.torsion_generator(1)) if self._layer_rows(1) else 0
        g = normal(self.torsion_generator(0)) if self._layer_rows(0) else 0

        q = 0
        c_a1 = 0
        if a1:
            c_a1 = self._lift(1, a1)
            q = c_a1 & mask
            if a2:
                quot, q = polyf2.divrem(q, a2)
                c_a1 ^= polyf2.mul(quot, a2)

        p1 = p2 = 0
        c_g = 0
        if g:
            c_g = self._lift(0, g)
            p1 = (c_g >> n) & mask
            if a1:
                quot, p1 = polyf2.divrem(p1, a1)
                if quot:
                    h = RingWord.from_polys(n, quot)
                    c_g ^= pack(h * unpack(n, c_a1))
            p2 = c_g & mask
            if a2:
                quot, p2 = polyf2.divrem(p2, a2)
                c_g ^= polyf2.mul(quot, a2)

        single = Presentation(1, g, p1, p2, 0, 0, 0)
        if CyclicCode.from_generators(n, single.generator_words(n)) == self:
            return single
        double = Presentation(2, g, p1, p2, 0, 0, a2)
        if CyclicCode.from_generators(n, double.generator_words(n)) == self:
            return double
        return Presentation(3, g, p1, p2, a1, q, a2)
