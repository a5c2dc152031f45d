"""Euclidean and Hermitian inner products, dual codes, and the
divisibility relations between a code's generators and its dual's.

The Euclidean product of X and Y is sum(x_i * y_i) in the ring; the
Hermitian product pairs X with the coordinatewise Watson-Crick
complement of Y.  Because the complement is the affine map y + u^2, the
Hermitian product of X with the zero word is u^2 times the coordinate
sum of X rather than zero; the kernel solver accounts for that with one
extra parity equation.

dual_code solves a GF(2) linear system over the 3n layer bits (each
basis codeword contributes three parity equations); dual_brute filters
every word of R^n by definitional inner products against every codeword
and exists solely as an independent oracle for small n.
"""

from __future__ import annotations

from . import polyf2
from .code import CyclicCode, _insert, unpack

FLAVORS = ("euclidean", "hermitian")


def _check_flavor(flavor):
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}, got {flavor!r}")


def inner_euclidean(x, y):
    """sum(x_i * y_i) over the coordinates, as a ring element."""
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    c0 = (x.f1 & y.f1).bit_count() & 1
    c1 = ((x.f1 & y.f2).bit_count() ^ (x.f2 & y.f1).bit_count()) & 1
    c2 = ((x.f1 & y.f3).bit_count() ^ (x.f2 & y.f2).bit_count()
          ^ (x.f3 & y.f1).bit_count()) & 1
    return c0 | c1 << 1 | c2 << 2


def inner_hermitian(x, y):
    """sum(x_i * complement(y_i)); equals the Euclidean product of x
    with the complemented word."""
    return inner_euclidean(x, y.complement())


def _orthogonality_masks(c, flavor):
    """Parity-equation masks over the 3n packed bits of an unknown word.

    A packed unknown v satisfies every mask m with parity(v & m) = 0
    exactly when it is orthogonal (in the requested flavor) to every
    codeword of c.
    """
    n = c.n
    mask = (1 << n) - 1
    masks = []
    for b in c.rows:
        g1, g2, g3 = b >> 2 * n, (b >> n) & mask, b & mask
        if flavor == "hermitian":
            g3 ^= mask
        masks.append(g1 << 2 * n)
        masks.append(g2 << 2 * n | g1 << n)
        masks.append(g3 << 2 * n | g2 << n | g1)
    if flavor == "hermitian":
        # Orthogonality to the complement of the zero codeword.
        masks.append(mask << 2 * n)
    return [m for m in masks if m]


def _kernel(masks, width):
    """Basis of the solution space of the parity equations."""
    pivots = {}
    for row in masks:
        _insert(pivots, row)
    basis = []
    for col in range(width):
        if col in pivots:
            continue
        v = 1 << col
        for p, r in pivots.items():
            if (r >> col) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def dual_code(c, flavor="euclidean"):
    """The dual code by the kernel method."""
    _check_flavor(flavor)
    n = c.n
    masks = _orthogonality_masks(c, flavor)
    words = [unpack(n, v) for v in _kernel(masks, 3 * n)]
    return CyclicCode.from_generators(n, words)


def dual_brute(c, flavor="euclidean"):
    """Exhaustive dual oracle: filter all 8^n words against all codewords."""
    _check_flavor(flavor)
    n = c.n
    if n > 8:
        raise ValueError("the exhaustive dual oracle is limited to n <= 8")
    inner = inner_euclidean if flavor == "euclidean" else inner_hermitian
    codewords = list(c.words())
    keep = []
    for v in range(1 << 3 * n):
        w = unpack(n, v)
        if all(inner(w, y) == 0 for y in codewords):
            keep.append(w)
    return CyclicCode.from_generators(n, keep)


def check_dual_reversibility_equivalence(c, cap=None):
    """Whether c, its Euclidean dual and its Hermitian dual are all
    reversible or all not, as the three-way equivalence demands."""
    r0 = c.is_reversible(cap)
    re = dual_code(c, "euclidean").is_reversible(cap)
    rh = dual_code(c, "hermitian").is_reversible(cap)
    return r0 == re == rh


_CLAIM_COFACTORS = ("a2", "a1", "g", "g", "a1", "g")
_CLAIM_TARGETS = ("g", "a1", "a2", "q", "p1", "p2")


def verify_dual_divisibility(pres, pres_hat, n):
    """Check the six generator-divisibility claims relating a code's
    presentation to its dual's.

    Claim k states that (x^n + 1) / r* divides the k-th dual generator
    polynomial, where r runs over (a2, a1, g, g, a1, g) and the targets
    over (g^, a1^, a2^, q^, p1^, p2^).  A zero target is vacuously
    divisible and noted as such.  Hypothesis violations are reported in
    the result rather than raised.
    """
    m = polyf2.xn1(n)
    violations = []
    if pres.case != 3:
        violations.append(f"presentation is case {pres.case}, the claims "
                          "address three-generator codes")
    g, p1, p2, a1, q, a2 = pres.g, pres.p1, pres.p2, pres.a1, pres.q, pres.a2
    if not (g and a1 and a2):
        violations.append("g, a1, a2 must all be nonzero")
    else:
        if not (polyf2.divides(a2, a1) and polyf2.divides(a1, g)
                and polyf2.divides(g, m)):
            violations.append("divisibility chain a2 | a1 | g | x^n+1 violated")
        if not polyf2.divides(a1, p1):
            violations.append("a1 does not divide p1")
        if not polyf2.divides(a2, p2):
            violations.append("a2 does not divide p2")
        if not polyf2.divides(a2, q):
            violations.append("a2 does not divide q")
        if not (polyf2.degree(g) > polyf2.degree(p1)
                and polyf2.degree(g) > polyf2.degree(p2)):
            violations.append("deg g must exceed deg p1 and deg p2")
        if not polyf2.degree(a1) > polyf2.degree(q):
            violations.append("deg a1 must exceed deg q")

    hypotheses_ok = not violations
    claims = []
    notes = []
    if hypotheses_ok:
        cof = {}
        for name, poly in (("g", g), ("a1", a1), ("a2", a2)):
            quot, rem = polyf2.divrem(m, polyf2.reciprocal(poly))
            assert rem == 0
            cof[name] = quot
        hat = {"g": pres_hat.g, "a1": pres_hat.a1, "a2": pres_hat.a2,
               "q": pres_hat.q, "p1": pres_hat.p1, "p2": pres_hat.p2}
        for k, (cname, tname) in enumerate(zip(_CLAIM_COFACTORS, _CLAIM_TARGETS),
                                           start=1):
            target = hat[tname]
            claims.append(polyf2.divides(cof[cname], target))
            if target == 0:
                notes.append(f"claim {k}: dual part {tname} is zero, "
                             "vacuously divisible")
    else:
        claims = [None] * 6
        notes.append("hypotheses not met; claims not evaluated")

    return {
        "hypotheses_ok": hypotheses_ok,
        "violations": violations,
        "claims": claims,
        "notes": notes,
    }
