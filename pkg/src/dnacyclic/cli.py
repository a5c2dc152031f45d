"""Command-line interface.

Subcommands: table2, check, search, dual, distance, enumerate, canonical.
Code specs are JSON, inline or in a file:

    {"n": 8, "generators": [{"f2": "x^6+x^4+x^2+1", "u": "x^5+x", "u2": "x^4+x^2"}]}

where "f2" is the unit layer and "u"/"u2" the u- and u^2-layers of one
generator word.  DNA output encodes each ring coordinate as one
dinucleotide, so reversal acts on codon blocks, never on raw
nucleotides.

Exit codes: 0 success, 1 check failed (property not satisfied),
2 input error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constraints, dual, polyf2, polyr, ring
from .code import CyclicCode, DEFAULT_ENUM_CAP
from .polyf2 import CapExceeded
from .polyr import RingWord

# The bundled length-8 reference code: a single-generator cyclic DNA code
# whose generator layers are (x+1)^6, x^5+x, x^4+x^2.
_REF_N = 8
_REF_G = polyf2.from_text("x^6+x^4+x^2+1")
_REF_P1 = polyf2.from_text("x^5+x")
_REF_P2 = polyf2.from_text("x^4+x^2")


def word_to_dna(word):
    """DNA string of a word: one codon per coordinate, index 0 first."""
    return "".join(ring.to_codon(e) for e in word.elements())


def dna_to_word(text):
    """Inverse of word_to_dna; rejects odd lengths and unmapped codons."""
    s = text.strip()
    if len(s) % 2:
        raise ValueError("DNA string must have even length (whole codons)")
    if not s:
        raise ValueError("empty DNA string")
    return RingWord.from_elements(
        ring.from_codon(s[i:i + 2]) for i in range(0, len(s), 2))


def reference_catalog():
    """The catalog of DNA strings for the bundled reference code.

    Contains every ring-constant multiple of the generator, every cyclic
    shift of those words, and the reverse-complement of the zero word
    (the all-u2 word), deduplicated.
    """
    gen = RingWord.from_polys(_REF_N, _REF_G, _REF_P1, _REF_P2)
    words = set()
    for alpha in ring.ELEMENTS:
        scaled = gen.scale(alpha)
        for i in range(_REF_N):
            words.add(scaled.shift(i))
    words.add(polyr.u2_all_ones(_REF_N))
    return {word_to_dna(w) for w in words}


def _load_spec(text):
    raw = text.strip()
    if not raw.startswith("{"):
        raw = Path(raw).read_text(encoding="utf-8")
    spec = json.loads(raw)
    n = spec.get("n")
    if not isinstance(n, int) or n < 1:
        raise ValueError("spec field 'n' must be a positive integer")
    gens = spec.get("generators", [])
    if not isinstance(gens, list):
        raise ValueError("spec field 'generators' must be a list")
    words = []
    triples = []
    for entry in gens:
        if not isinstance(entry, dict):
            raise ValueError("each generator must be an object with "
                             "'f2', 'u', 'u2' polynomial strings")
        f1 = polyf2.from_text(entry.get("f2", "0"))
        f2 = polyf2.from_text(entry.get("u", "0"))
        f3 = polyf2.from_text(entry.get("u2", "0"))
        triples.append((f1, f2, f3))
        words.append(RingWord.from_polys(n, f1, f2, f3))
    return n, words, triples


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _cmd_table2(args):
    strings = sorted(reference_catalog())
    _emit({"count": len(strings), "strings": strings})
    return 0


def _theorem_verdict(n, triples, mode):
    """Run the matching checker for a 1- or 2-generator structural spec."""
    if len(triples) == 1:
        g, p1, p2 = triples[0]
        if mode == "reversible":
            return constraints.check_reversible_single(n, g, p1, p2)
        return constraints.check_rc_single(n, g, p1, p2)
    if len(triples) == 2 and triples[1][0] == 0 and triples[1][1] == 0:
        g, p1, p2 = triples[0]
        a2 = triples[1][2]
        if mode == "reversible":
            return constraints.check_reversible_double(n, g, p1, p2, a2)
        return constraints.check_rc_double(n, g, p1, p2, a2)
    raise ValueError("theorem checkers need one generator (g, p1, p2) or "
                     "two with the second of the form u^2*a2")


def _cmd_check(args):
    n, words, triples = _load_spec(args.spec)
    report = {"mode": args.mode, "method": args.method,
              "theorem": None, "oracle": None, "agreement": None}
    theorem_ok = oracle_ok = None
    if args.method in ("theorem", "both"):
        try:
            verdict = _theorem_verdict(n, triples, args.mode)
            report["theorem"] = verdict.to_json()
            theorem_ok = verdict.satisfied if verdict.hypothesis_ok else None
        except ValueError as exc:
            report["theorem"] = {"satisfied": False, "case": "NONE",
                                 "hypothesis_ok": False, "notes": str(exc)}
    if args.method in ("oracle", "both"):
        c = CyclicCode.from_generators(n, words)
        oracle_ok = (c.is_reversible(args.cap) if args.mode == "reversible"
                     else c.is_rc_closed(args.cap))
        report["oracle"] = {"satisfied": oracle_ok}
    if args.method == "both":
        report["agreement"] = (None if theorem_ok is None
                               else theorem_ok == oracle_ok)
    satisfied = oracle_ok if oracle_ok is not None else bool(theorem_ok)
    report["satisfied"] = satisfied
    _emit(report)
    if args.method == "both" and report["agreement"] is False:
        return 1
    return 0 if satisfied else 1


def _search_candidates(n, cap):
    """Yield (g, p1, p2, a2_or_None) structural candidates for even n."""
    divisors = polyf2.divisors_of_xn1(n)
    for g in divisors:
        r = polyf2.degree(g)
        if not 1 <= r <= n - 1:
            continue
        sub = [d for d in divisors if d != g and polyf2.divides(d, g)]
        for p1 in range(1 << r):
            for p2 in range(1 << r):
                yield g, p1, p2, None
                for a2 in sub:
                    yield g, p1, p2, a2


def _cmd_search(args):
    n = args.n
    if n < 2 or n % 2:
        raise ValueError("search requires an even length n >= 2")
    cap = args.cap
    require = args.require
    truncated = False
    configs = 0
    seen = {}
    for g, p1, p2, a2 in _search_candidates(n, cap):
        configs += 1
        if configs > args.max_configs:
            truncated = True
            break
        if a2 is None:
            verdict = (constraints.check_rc_single(n, g, p1, p2)
                       if require == "rc"
                       else constraints.check_reversible_single(n, g, p1, p2))
            words = [RingWord.from_polys(n, g, p1, p2)]
        else:
            verdict = (constraints.check_rc_double(n, g, p1, p2, a2)
                       if require == "rc"
                       else constraints.check_reversible_double(n, g, p1, p2, a2))
            words = [RingWord.from_polys(n, g, p1, p2),
                     RingWord.from_polys(n, 0, 0, a2)]
        if not verdict.satisfied:
            continue
        c = CyclicCode.from_generators(n, words)
        if c.rows in seen:
            continue
        if c.dim > (DEFAULT_ENUM_CAP if cap is None else cap):
            truncated = True
            continue
        seen[c.rows] = {
            "n": n,
            "g": polyf2.to_text(g),
            "p1": polyf2.to_text(p1),
            "p2": polyf2.to_text(p2),
            "a2": polyf2.to_text(a2) if a2 is not None else None,
            "case": verdict.case,
            "dim": c.dim,
            "cardinality": c.cardinality,
            "min_distance": c.min_hamming_distance(cap),
        }
    hits = [h for h in seen.values() if h["min_distance"] >= args.min_distance]
    hits.sort(key=lambda h: (-h["min_distance"], -h["cardinality"],
                             h["g"], h["p1"], h["p2"], h["a2"] or ""))
    for h in hits:
        print(json.dumps(h, sort_keys=True))
    print(json.dumps({"summary": True, "hits": len(hits),
                      "configs": configs, "truncated": truncated},
                     sort_keys=True))
    return 3 if truncated else 0


def _cmd_dual(args):
    n, words, _ = _load_spec(args.spec)
    c = CyclicCode.from_generators(n, words)
    d = dual.dual_code(c, args.flavor)
    report = {"flavor": args.flavor, "n": n, "dim": d.dim,
              "cardinality": d.cardinality,
              "divisibility_claims": None, "notes": []}
    if n % 2 == 0:
        pres = c.canonical_presentation()
        pres_hat = d.canonical_presentation()
        result = dual.verify_dual_divisibility(pres, pres_hat, n)
        report["divisibility_claims"] = result["claims"]
        report["notes"] = result["violations"] + result["notes"]
    else:
        report["notes"] = ["odd length: presentation claims not evaluated"]
    _emit(report)
    return 0


def _cmd_distance(args):
    n, words, _ = _load_spec(args.spec)
    c = CyclicCode.from_generators(n, words)
    d = c.min_hamming_distance(args.cap)
    _emit({"n": n, "min_distance": None if d == float("inf") else d})
    return 0


def _cmd_enumerate(args):
    n, words, _ = _load_spec(args.spec)
    c = CyclicCode.from_generators(n, words)
    for w in c.words(args.cap):
        print(word_to_dna(w) if args.format == "dna" else w.tokens())
    return 0


def _cmd_canonical(args):
    n, words, _ = _load_spec(args.spec)
    c = CyclicCode.from_generators(n, words)
    _emit(c.canonical_presentation().to_json())
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="dnacyclic",
        description="Cyclic codes over the 8-element ring GF(2)[u]/(u^3) "
                    "with DNA codon mapping.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table2", help="emit the bundled reference DNA catalog")
    p.set_defaults(func=_cmd_table2)

    p = sub.add_parser("check", help="certify reverse / reverse-complement closure")
    p.add_argument("--spec", required=True, help="JSON code spec (inline or file)")
    p.add_argument("--mode", choices=("reversible", "rc"), default="rc")
    p.add_argument("--method", choices=("theorem", "oracle", "both"),
                   default="both")
    p.add_argument("--cap", type=int, default=None,
                   help=f"enumeration dimension cap (default {DEFAULT_ENUM_CAP})")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("search", help="catalog codes passing a closure constraint")
    p.add_argument("--n", type=int, required=True, help="even code length")
    p.add_argument("--min-distance", type=int, default=0)
    p.add_argument("--require", choices=("rc", "reversible"), default="rc")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--max-configs", type=int, default=1_000_000,
                   help="candidate budget before truncation")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("dual", help="dual code report")
    p.add_argument("--spec", required=True)
    p.add_argument("--flavor", choices=dual.FLAVORS, default="euclidean")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("distance", help="minimum Hamming distance")
    p.add_argument("--spec", required=True)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("enumerate", help="list every codeword")
    p.add_argument("--spec", required=True)
    p.add_argument("--format", choices=("tokens", "dna"), default="tokens")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("canonical", help="canonical presentation extraction")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=_cmd_canonical)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(json.dumps({"error": "cap exceeded", "detail": str(exc)}),
              file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": "input error", "detail": str(exc)}),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
