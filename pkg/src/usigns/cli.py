"""Command-line surface: relations, count, solve, sign-of, verify, diagram.

Exit codes: 0 success, 1 verification failure, 2 inconsistent input pattern,
3 usage error. All output is deterministic for fixed flags; the only
randomness (sampled oracle checks at n=8) is seeded.
"""
from __future__ import annotations

import argparse
import json
import math
import random
import sys

from .ngon import Polygon, all_orderings, canonicalize, ordering_count
from .patterns import SignPattern
from .relations import (
    DEFAULT_ENUMERATION_CAP,
    URelation,
    consistent_patterns,
    count_consistent,
    extended_relations,
    primitive_relations,
)
from .points import realize, signs_from_points
from .signs import sign_of_ordering
from .solver import (
    InconsistentPatternError,
    SolverTrace,
    ordering_from_sign_matrix,
    reconstruct_sign_matrix,
    solve,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INCONSISTENT = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class UsageError(ValueError):
    pass


def _product_str(term) -> str:
    return "*".join(f"u[{i},{j}]" for i, j in term)


def _relation_line(rel: URelation) -> str:
    return f"{_product_str(rel.t1)} + {_product_str(rel.t2)} = 1"


def _relation_json(rel: URelation) -> dict:
    return {
        "t1": [list(c) for c in rel.t1],
        "t2": [list(c) for c in rel.t2],
        "cuts": list(rel.cuts) if rel.cuts else None,
    }


def _pattern_document(poly: Polygon, pattern: SignPattern, **extra) -> dict:
    doc = {
        "n": poly.n,
        "chords": [list(c) for c in poly.chords],
        "signs": str(pattern),
    }
    doc.update(extra)
    return doc


def _trace_json(trace: SolverTrace) -> list[dict]:
    return [
        {
            "chord": list(step.chord),
            "swap": list(step.swap),
            "pattern": str(step.pattern),
            "negatives": step.negatives,
            "min_length": step.min_length,
        }
        for step in trace.steps
    ]


def _parse_pattern(poly: Polygon, text: str | None) -> SignPattern:
    if text is None:
        raise UsageError("--pattern is required")
    try:
        return SignPattern.from_string(poly.n, text.strip())
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_word(poly: Polygon, text: str | None) -> tuple[int, ...]:
    if text is None:
        raise UsageError("--ordering is required")
    pieces = text.replace(",", " ").split()
    try:
        word = tuple(int(p) for p in pieces)
    except ValueError as exc:
        raise UsageError(f"cannot parse ordering {text!r}") from exc
    if sorted(word) != list(range(1, poly.n + 1)):
        raise UsageError(f"{text!r} is not a permutation of 1..{poly.n}")
    return word


def cmd_relations(args) -> int:
    if not 4 <= args.n <= 12:
        raise UsageError(f"n must be in 4..12, got {args.n}")
    poly = Polygon(args.n)
    rels = primitive_relations(poly) if args.primitive else extended_relations(poly)
    if args.json:
        mode = "primitive" if args.primitive else "extended"
        doc = {"n": args.n, "mode": mode, "relations": [_relation_json(r) for r in rels]}
        print(json.dumps(doc))
    else:
        for rel in rels:
            print(_relation_line(rel))
    return EXIT_OK


def cmd_count(args) -> int:
    poly = Polygon(args.n)
    if args.n > args.cap:
        raise UsageError(f"n={args.n} exceeds the cap {args.cap} (raise with --cap)")
    realizable = ordering_count(poly)
    mode = "primitive" if args.primitive_only else "extended"

    progress = None
    if args.n >= 9:
        def progress(done: int, total: int) -> None:
            print(f"\rchunks {done}/{total}", end="", file=sys.stderr, flush=True)

    if args.out:
        count = 0
        with open(args.out, "w", encoding="utf-8") as fh:
            for pattern in consistent_patterns(
                poly, primitive_only=args.primitive_only, cap=args.cap
            ):
                fh.write(f"{pattern}\n")
                count += 1
    else:
        count = count_consistent(
            poly,
            primitive_only=args.primitive_only,
            cap=args.cap,
            threads=args.threads,
            progress=progress,
        )
    if progress is not None:
        print(file=sys.stderr)
    match = count == realizable
    if args.json:
        print(
            json.dumps(
                {
                    "n": args.n,
                    "mode": mode,
                    "consistent": count,
                    "realizable": realizable,
                    "match": match,
                }
            )
        )
    else:
        print(f"n={args.n}")
        print(f"consistent ({mode}): {count}")
        print(f"realizable (n-1)!/2: {realizable}")
        print(f"agreement: {'yes' if match else 'no'}")
    return EXIT_OK


def cmd_solve(args) -> int:
    poly = Polygon(args.n)
    pattern = _parse_pattern(poly, args.pattern)
    try:
        word, trace = solve(poly, pattern)
    except InconsistentPatternError:
        print("inconsistent", file=sys.stderr)
        return EXIT_INCONSISTENT
    if args.json:
        doc = _pattern_document(
            poly, pattern, ordering=list(word), trace=_trace_json(trace)
        )
        print(json.dumps(doc))
    else:
        print("ordering:", " ".join(map(str, word)))
        rendered = trace.render()
        if rendered:
            print(rendered)
    return EXIT_OK


def cmd_sign_of(args) -> int:
    poly = Polygon(args.n)
    word = _parse_word(poly, args.ordering)
    pattern = sign_of_ordering(poly, word)
    if args.json:
        print(json.dumps(_pattern_document(poly, pattern, ordering=list(canonicalize(word)))))
    else:
        print(pattern)
    return EXIT_OK


def _verify_suites(n: int, seed: int, threads: int):
    """Yield (suite name, passed) pairs for cmd_verify."""
    poly = Polygon(n)
    cap = max(n, DEFAULT_ENUMERATION_CAP)

    consistent_bits = {
        p.bits for p in consistent_patterns(poly, cap=cap)
    }
    realizable = ordering_count(poly)
    yield "count", len(consistent_bits) == realizable

    by_ordering = {}
    for word in all_orderings(poly):
        by_ordering[sign_of_ordering(poly, word).bits] = word
    yield "bijection", set(by_ordering) == consistent_bits

    solver_ok = True
    matrix_ok = True
    for bits in sorted(consistent_bits):
        pattern = SignPattern(n, bits)
        word, trace = solve(poly, pattern)
        if sign_of_ordering(poly, word).bits != bits:
            solver_ok = False
            break
        if n <= 7:
            other = ordering_from_sign_matrix(poly, reconstruct_sign_matrix(poly, pattern))
            if other != word:
                matrix_ok = False
    yield "solver", solver_ok
    if n <= 7:
        yield "reconstruction", matrix_ok

    if n <= 7:
        sample = list(all_orderings(poly))
    else:
        rng = random.Random(seed)
        pool = list(all_orderings(poly))
        sample = rng.sample(pool, min(500, len(pool)))
    oracle_ok = all(
        signs_from_points(realize(poly, w)) == sign_of_ordering(poly, w) for w in sample
    )
    yield "oracle", oracle_ok


def cmd_verify(args) -> int:
    if not 4 <= args.n <= 8:
        raise UsageError(f"verify supports n in 4..8, got {args.n}")
    results = dict(_verify_suites(args.n, args.seed, args.threads))
    ok = all(results.values())
    if args.json:
        print(json.dumps({"n": args.n, "suites": results, "ok": ok}))
    else:
        for name, passed in results.items():
            print(f"{name}: {'pass' if passed else 'FAIL'}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def render_diagram(poly: Polygon, pattern: SignPattern) -> str:
    """Deterministic SVG of the n-gon with negative chords highlighted."""
    size = 420.0
    cx = cy = size / 2
    radius = 165.0
    n = poly.n

    def corner(v: int) -> tuple[float, float]:
        angle = -math.pi / 2 + 2 * math.pi * (v - 1) / n
        return cx + radius * math.cos(angle), cy + radius * math.sin(angle)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="0 0 {size:.0f} {size:.0f}">',
        f'<rect width="{size:.0f}" height="{size:.0f}" fill="white"/>',
    ]
    ring = " ".join(f"{corner(v)[0]:.2f},{corner(v)[1]:.2f}" for v in range(1, n + 1))
    lines.append(f'<polygon points="{ring}" fill="none" stroke="#bbbbbb" stroke-width="1"/>')
    for c in poly.chords:
        (x1, y1), (x2, y2) = corner(c[0]), corner(c[1])
        if pattern.is_negative(c):
            style = 'stroke="#c1272d" stroke-width="2.5"'
        else:
            style = 'stroke="#222222" stroke-width="1"'
        lines.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" {style}/>'
        )
    for v in range(1, n + 1):
        x, y = corner(v)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3.5" fill="#222222"/>')
        lx = cx + (radius + 16) * math.cos(-math.pi / 2 + 2 * math.pi * (v - 1) / n)
        ly = cy + (radius + 16) * math.sin(-math.pi / 2 + 2 * math.pi * (v - 1) / n)
        lines.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="14" font-family="sans-serif" '
            f'text-anchor="middle" dominant-baseline="middle">{v}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_diagram(args) -> int:
    poly = Polygon(args.n)
    pattern = _parse_pattern(poly, args.pattern)
    svg = render_diagram(poly, pattern)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="usigns", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("relations", help="list the u-relations of the n-gon")
    p.add_argument("n", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--extended", action="store_true", default=True)
    group.add_argument("--primitive", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("count", help="count consistent sign patterns")
    p.add_argument("n", type=int)
    p.add_argument("--primitive-only", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", help="also stream the consistent patterns to this file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("solve", help="dihedral ordering from a sign pattern")
    p.add_argument("n", type=int)
    p.add_argument("--pattern", default=None, help="signs over chords, e.g. '-++++'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sign-of", help="sign pattern of a dihedral ordering")
    p.add_argument("n", type=int)
    p.add_argument("--ordering", default=None, help="labels, e.g. '1,4,2,5,3'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sign_of)

    p = sub.add_parser("verify", help="run the full consistency/solver/oracle check")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diagram", help="write an SVG of the n-gon sign pattern")
    p.add_argument("n", type=int)
    p.add_argument("--pattern", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_diagram)

    return parser


def _extract_dash_values(argv: list[str]) -> tuple[list[str], dict[str, str]]:
    """Pull --pattern/--ordering values out of argv before argparse runs.

    Sign patterns like '--' or '-++-' look like flags to argparse, so these
    two options are parsed by hand and re-attached afterwards.
    """
    out: list[str] = []
    values: dict[str, str] = {}
    i = 0
    while i < len(argv):
        arg = argv[i]
        for name in ("pattern", "ordering"):
            flag = f"--{name}"
            if arg == flag and i + 1 < len(argv):
                values[name] = argv[i + 1]
                i += 2
                break
            if arg.startswith(flag + "="):
                values[name] = arg[len(flag) + 1 :]
                i += 1
                break
        else:
            out.append(arg)
            i += 1
    return out, values


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv, values = _extract_dash_values(list(argv))
    args = parser.parse_args(argv)
    for name, value in values.items():
        setattr(args, name, value)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usigns: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usigns: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
