"""scx command line: inspect complexes, compute vector and series data, run checks.

Complexes travel in the facet-list text format (see `parse_facet_text`); an
input argument of '-' reads that format from standard input, and the verbs
that output a complex (make, link, join, suspend) emit the same format so
commands compose under pipes. Everything else prints JSON by default or a
human-readable rendition under --pretty. Exit codes: 0 success, 1 domain
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import product

from . import complexes, hilbert, properties
from .errors import InternalInconsistency, ScxError, TooLarge
from .vectors import f_to_e, vector_json


class _Usage(Exception):
    """Command line is well formed for argparse but still malformed for us."""


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    """Execute one command; returns the exit code without calling sys.exit."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        out = args.handler(args, stdin)
    except _Usage as exc:
        print(f"scx: usage error: {exc}", file=stderr)
        return 2
    except ScxError as exc:
        print(f"scx: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"scx: {exc}", file=stderr)
        return 1
    stdout.write(out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scx",
        description="Exact f/h/e-vectors, exponential Hilbert series and "
                    "structural checks for abstract simplicial complexes.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON output (the default)")
    group.add_argument("--pretty", action="store_true", help="human-readable output")

    p = sub.add_parser("info", parents=[fmt], help="vertices, facets, dimension, purity")
    p.add_argument("input", help="facet-list file, or - for stdin")
    p.set_defaults(handler=_cmd_info)

    p = sub.add_parser("vectors", parents=[fmt], help="exact f-, h- and e-vectors")
    p.add_argument("input")
    p.set_defaults(handler=_cmd_vectors)

    p = sub.add_parser("series", parents=[fmt], help="coarse e-vector, optional fine terms and numeric value")
    p.add_argument("input")
    p.add_argument("--fine", action="store_true", help="include the fine coefficient table")
    p.add_argument("--eval", type=float, default=None, metavar="T",
                   help="also evaluate the coarse series at t=T")
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("check", parents=[fmt], help="full property report (always all checks)")
    p.add_argument("input")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("make", help="emit a generated complex in facet-list form")
    p.add_argument("kind", help="boundary-simplex | full-simplex | cycle | "
                                "cross-polytope | whiskered-cycle | random")
    p.add_argument("params", nargs="*", help="integer parameters for the kind")
    p.add_argument("--seed", type=int, default=0, help="seed for kind 'random'")
    p.set_defaults(handler=_cmd_make)

    p = sub.add_parser("link", help="link of a face, in facet-list form")
    p.add_argument("input")
    p.add_argument("--face", default="", metavar="A,B,...",
                   help="comma-separated vertex labels (omit for the empty face)")
    p.set_defaults(handler=_cmd_link)

    p = sub.add_parser("join", help="join of two complexes, in facet-list form")
    p.add_argument("input1")
    p.add_argument("input2")
    p.set_defaults(handler=_cmd_join)

    p = sub.add_parser("suspend", help="suspension (join with two points), in facet-list form")
    p.add_argument("input")
    p.set_defaults(handler=_cmd_suspend)

    p = sub.add_parser("oracle", parents=[fmt],
                       help="cross-check series coefficients against graded dimensions")
    p.add_argument("input")
    p.add_argument("--max-entry", type=int, default=2, metavar="K",
                   help="check all multidegrees with entries 0..K (default 2)")
    p.set_defaults(handler=_cmd_oracle)

    return parser


def _read_complex(source: str, stdin) -> complexes.SimplicialComplex:
    if source == "-":
        text = stdin.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    return complexes.parse_facet_text(text)


def _dump(payload: dict) -> str:
    return json.dumps(payload) + "\n"


def _cmd_info(args, stdin) -> str:
    c = _read_complex(args.input, stdin)
    if c.is_void:
        payload = {"kind": "void", "vertices": 0, "labels": [], "facets": []}
    else:
        payload = {
            "kind": "nonvoid",
            "vertices": c.n,
            "labels": list(c.labels),
            "facets": [list(f) for f in c.facets()],
            "dimension": c.dimension(),
            "pure": c.is_pure(),
            "faces": len(c.face_mask_set),
        }
    if not args.pretty:
        return _dump(payload)
    if c.is_void:
        return "void complex (no faces)\n"
    lines = [
        f"vertices: {c.n} ({' '.join(c.labels)})",
        "facets: " + " ".join("{" + " ".join(f) + "}" for f in c.facets()),
        f"dimension: {c.dimension()}   pure: {'yes' if c.is_pure() else 'no'}   faces: {len(c.face_mask_set)}",
    ]
    return "\n".join(lines) + "\n"


def _vector_lines(payload: dict) -> str:
    lines = [f"d = {payload['d']}"]
    for key in ("f", "h", "e"):
        lines.append(f"{key} = ({', '.join(payload[key])})")
    return "\n".join(lines) + "\n"


def _cmd_vectors(args, stdin) -> str:
    c = _read_complex(args.input, stdin)
    payload = vector_json(c.f_vector())
    if args.pretty:
        return _vector_lines(payload)
    return _dump(payload)


def _cmd_series(args, stdin) -> str:
    c = _read_complex(args.input, stdin)
    e = f_to_e(c.f_vector())
    payload: dict = {"e": [str(v) for v in e]}
    fine = None
    if args.fine:
        fine = hilbert.fine_e_polynomial(c)
        if hilbert.coarse_from_fine(fine) != e:
            raise InternalInconsistency("fine series does not specialize to the e-vector")
        payload["fine"] = [{"subset": list(subset), "coeff": str(coeff)}
                           for subset, coeff in fine.sorted_terms()]
    if args.eval is not None:
        payload["eval"] = {"t": args.eval, "value": hilbert.evaluate_coarse(e, args.eval)}
    if not args.pretty:
        return _dump(payload)
    lines = [f"e = ({', '.join(payload['e'])})"]
    if fine is not None:
        for subset, coeff in fine.sorted_terms():
            lines.append("c{" + " ".join(subset) + "} = " + str(coeff))
    if args.eval is not None:
        lines.append(f"value at t={args.eval}: {payload['eval']['value']}")
    return "\n".join(lines) + "\n"


def _cmd_check(args, stdin) -> str:
    c = _read_complex(args.input, stdin)
    report = properties.classify(c)
    payload = vector_json(c.f_vector()) | report.to_dict()
    if not args.pretty:
        return _dump(payload)
    lines = [_vector_lines(payload).rstrip("\n")]
    for key in ("property_e", "weak_property_e", "classical_ds", "general_ds",
                "eulerian", "eulerian_sphere", "pure"):
        lines.append(f"{key:18s} {'yes' if payload[key] else 'no'}")
    if payload["witness"]:
        lines.append(f"witness: {payload['witness']}")
    return "\n".join(lines) + "\n"


def _ints(params: list[str], arity: int, what: str) -> list[int]:
    if len(params) != arity:
        raise _Usage(f"{what} takes {arity} integer parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise _Usage(f"{what} parameters must be integers: {params}") from None


def _cmd_make(args, stdin) -> str:
    kind = args.kind.replace("-", "_")
    if kind == "random":
        n, facet_count, max_size = _ints(args.params, 3, "random")
        c = complexes.random_complex(args.seed, n, facet_count, max_size)
        return c.to_facet_text()
    entry = complexes.GENERATORS.get(kind)
    if entry is None:
        known = ", ".join(sorted(complexes.GENERATORS)).replace("_", "-")
        raise _Usage(f"unknown kind {args.kind!r} (known: {known}, random)")
    fn, arity = entry
    values = _ints(args.params, arity, args.kind)
    return fn(*values).to_facet_text()


def _parse_face(text: str) -> list[str]:
    if not text:
        return []
    parts = [p.strip() for p in text.split(",")]
    if any(not p for p in parts):
        raise _Usage(f"malformed --face list {text!r}")
    return parts


def _cmd_link(args, stdin) -> str:
    c = _read_complex(args.input, stdin)
    return c.link(_parse_face(args.face)).to_facet_text()


def _cmd_join(args, stdin) -> str:
    if args.input1 == "-" and args.input2 == "-":
        raise _Usage("at most one join input may be '-'")
    c1 = _read_complex(args.input1, stdin)
    c2 = _read_complex(args.input2, stdin)
    return c1.join(c2).to_facet_text()


def _cmd_suspend(args, stdin) -> str:
    return _read_complex(args.input, stdin).suspension().to_facet_text()


def _cmd_oracle(args, stdin) -> str:
    c = _read_complex(args.input, stdin)
    k = args.max_entry
    if k < 0:
        raise _Usage("--max-entry must be >= 0")
    if (k + 1) ** max(c.n, 1) > 2_000_000:
        raise TooLarge(f"{(k + 1) ** c.n} multidegrees is too many to sweep")
    fine = hilbert.fine_e_polynomial(c)
    checked = 0
    for a in product(range(k + 1), repeat=c.n):
        if hilbert.taylor_coefficient(fine, a) != hilbert.graded_dimension(c, a):
            raise InternalInconsistency(
                f"multidegree {a}: series coefficient and graded dimension disagree")
        checked += 1
    if args.pretty:
        return f"ok: {checked} degrees checked\n"
    return _dump({"ok": True, "checked": checked})
