"""Command line front end.

Every command computes one result and writes one JSON document to stdout
(or an aligned text rendering with --pretty). Exit codes: 0 success, 1 usage
error (message on stderr), 2 domain error (structured JSON on stdout), 3 a
verification suite reported a violation. Output bytes depend only on argv and
seeds; LATTICE_ORBIT_THREADS caps the enumeration worker pool without
changing any output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import jsonio, oracle
from .dilatation import dilate, dilate_inverse
from .errors import LatticeError
from .lattices import builtin_names, determinant, is_even, is_unimodular, resolve, signature
from .orbits import (
    OrbitLabel,
    classify,
    even_witness,
    heegner_range,
    is_even_type,
    representative,
)
from .vectors import norm, vec

_LABELS = {
    "odd": OrbitLabel.ODD,
    "characteristic": OrbitLabel.EVEN_CHARACTERISTIC,
    "ordinary": OrbitLabel.EVEN_ORDINARY,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise _UsageError(message)


def _coords(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise _UsageError(f"bad coordinate list {text!r}") from None


def _workers() -> int:
    raw = os.environ.get("LATTICE_ORBIT_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"LATTICE_ORBIT_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise _UsageError(f"LATTICE_ORBIT_THREADS must be a positive integer, got {raw!r}")
    return value


def build_parser() -> _Parser:
    parser = _Parser(prog="lattice-orbits", description=__doc__)
    parser.add_argument("--pretty", action="store_true", help="aligned text instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def lattice_flag(p, default=None):
        p.add_argument("--lattice", default=default, required=default is None,
                       help=f"built-in lattice name, one of: {', '.join(builtin_names())}")

    p = sub.add_parser("info", help="gram matrix, signature, parity, determinant")
    lattice_flag(p)

    p = sub.add_parser("classify", help="orbit label of a primitive vector")
    lattice_flag(p, "Lminus")
    p.add_argument("--coords", help="comma separated integers")
    p.add_argument("--from-json", dest="from_json",
                   help="path to a vector or classification document ('-' for stdin)")

    p = sub.add_parser("rep", help="canonical representative for a norm and label")
    lattice_flag(p, "Lminus")
    p.add_argument("--norm", type=int)
    p.add_argument("--n", type=int, help="half the norm; alternative to --norm")
    p.add_argument("--class", dest="label", choices=sorted(_LABELS),
                   help="orbit label; inferred for odd n")

    p = sub.add_parser("phi", help="norm-halving image as doubled coordinates")
    lattice_flag(p, "Lminus")
    p.add_argument("--coords", required=True)

    p = sub.add_parser("phi-inv", help="preimage of a half vector")
    p.add_argument("--base", required=True, help="base + I_1_1 lattice name")
    p.add_argument("--doubled", required=True, help="comma separated doubled coordinates")

    p = sub.add_parser("even-type", help="even type test for norm divisible by 4")
    lattice_flag(p, "Lminus")
    p.add_argument("--coords", required=True)

    p = sub.add_parser("witness", help="invariant-partner witness search")
    lattice_flag(p, "Lminus")
    p.add_argument("--coords", required=True)
    p.add_argument("--bound", type=int, default=2)

    p = sub.add_parser("heegner", help="orbit components for a range of n")
    p.add_argument("--from", dest="n_min", type=int, required=True)
    p.add_argument("--to", dest="n_max", type=int, required=True)

    p = sub.add_parser("oracle-invariance", help="labels must survive random isometries")
    lattice_flag(p, "Lminus")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--word-length", dest="word_length", type=int, default=8)
    p.add_argument("--isometry-json", dest="isometry_json",
                   help="path to a matrix or list of matrices to certify and include")

    p = sub.add_parser("oracle-enumerate", help="primitive vectors in a coordinate box")
    lattice_flag(p)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--norm", type=int)

    p = sub.add_parser("oracle-connectivity", help="walk components never mix labels")
    lattice_flag(p, "U2U")
    p.add_argument("--norm", type=int, required=True)
    p.add_argument("--bound", type=int, default=5)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--walks", type=int, default=10000)
    p.add_argument("--word-length", dest="word_length", type=int, default=4)

    p = sub.add_parser("oracle-wall", help="mod-8 congruence over a diagonal lattice box")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--bound", type=int, default=3)

    p = sub.add_parser("oracle-e8", help="short vector count in definite E8")
    p.add_argument("--norm", type=int, default=-2)
    return parser


def _read_doc(path: str, stdin) -> dict:
    text = stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, (dict, list)):
        raise _UsageError("expected a JSON object")
    return doc


def _cmd_info(args, workers, stdin):
    lattice = resolve(args.lattice)
    sig = signature(lattice)
    doc = jsonio.lattice_to_json(lattice)
    doc["even"] = is_even(lattice)
    doc["unimodular"] = is_unimodular(lattice)
    doc["signature"] = {"positive": sig.positive, "negative": sig.negative, "zero": sig.zero}
    doc["determinant"] = determinant(lattice)
    return doc, 0


def _cmd_classify(args, workers, stdin):
    if (args.coords is None) == (args.from_json is None):
        raise _UsageError("classify needs exactly one of --coords or --from-json")
    if args.from_json is not None:
        doc = _read_doc(args.from_json, stdin)
        try:
            if "lattice" in doc:
                v = jsonio.vector_from_json(doc)
            else:
                v = vec(resolve(args.lattice), jsonio._int_list(doc["coords"], "coords"))
        except (KeyError, ValueError, TypeError) as exc:
            raise _UsageError(f"bad vector document: {exc}") from None
    else:
        v = vec(resolve(args.lattice), _coords(args.coords))
    return jsonio.classification_to_json(classify(v)), 0


def _cmd_rep(args, workers, stdin):
    if (args.norm is None) == (args.n is None):
        raise _UsageError("rep needs exactly one of --norm or --n")
    value = args.norm if args.norm is not None else 2 * args.n
    if args.label is None:
        if (value // 2) % 2 == 0:
            raise _UsageError("--class is required when n is even (two orbits exist)")
        label = OrbitLabel.ODD
    else:
        label = _LABELS[args.label]
    rep = representative(value, label, resolve(args.lattice))
    return jsonio.vector_to_json(rep), 0


def _cmd_phi(args, workers, stdin):
    v = vec(resolve(args.lattice), _coords(args.coords))
    return jsonio.half_to_json(dilate(v)), 0


def _cmd_phi_inv(args, workers, stdin):
    h = jsonio.half_from_json({"base": args.base, "doubled_coords": list(_coords(args.doubled))})
    return jsonio.vector_to_json(dilate_inverse(h)), 0


def _cmd_even_type(args, workers, stdin):
    v = vec(resolve(args.lattice), _coords(args.coords))
    value = norm(v)
    answer = is_even_type(v)
    return {
        "vector": jsonio.vector_to_json(v),
        "norm": value,
        "n": value // 2,
        "even_type": answer,
    }, 0


def _cmd_witness(args, workers, stdin):
    v = vec(resolve(args.lattice), _coords(args.coords))
    result = even_witness(v, args.bound)
    return jsonio.witness_to_json(v, result, norm(v)), 0


def _cmd_heegner(args, workers, stdin):
    if args.n_min > args.n_max:
        raise _UsageError("--from must not exceed --to")
    reports = heegner_range(args.n_min, args.n_max)
    return {
        "n_min": args.n_min,
        "n_max": args.n_max,
        "reports": [jsonio.heegner_to_json(r) for r in reports],
    }, 0


def _load_matrices(path: str, stdin):
    doc = _read_doc(path, stdin)
    if isinstance(doc, dict) and "matrix" in doc:
        doc = [doc["matrix"]]
    if not isinstance(doc, list):
        raise _UsageError("isometry file must hold a matrix or a list of matrices")
    if doc and doc[0] and isinstance(doc[0][0], (int, bool)):
        doc = [doc]  # a single bare matrix
    return doc


def _cmd_oracle_invariance(args, workers, stdin):
    matrices = _load_matrices(args.isometry_json, stdin) if args.isometry_json else None
    result = oracle.invariance_suite(
        resolve(args.lattice), args.samples, args.seed, args.bound, args.word_length, matrices
    )
    return jsonio.suite_to_json(result), (0 if result.status == "pass" else 3)


def _cmd_oracle_enumerate(args, workers, stdin):
    scan = oracle.enumerate_primitive(resolve(args.lattice), args.bound, args.norm, workers)
    return jsonio.scan_to_json(scan), 0


def _cmd_oracle_connectivity(args, workers, stdin):
    report = oracle.connectivity_experiment(
        resolve(args.lattice), args.norm, args.bound, args.seed, args.walks,
        args.word_length, workers,
    )
    result = jsonio.connectivity_to_suite(report, args.seed, args.walks, args.word_length)
    return jsonio.suite_to_json(result), (0 if result.status == "pass" else 3)


def _cmd_oracle_wall(args, workers, stdin):
    result = oracle.wall_scan(args.s, args.t, args.bound)
    return jsonio.suite_to_json(result), (0 if result.status == "pass" else 3)


def _cmd_oracle_e8(args, workers, stdin):
    count = oracle.e8_vector_count(args.norm)
    expected = oracle.EXPECTED_E8_COUNTS.get(args.norm)
    status = "pass" if expected is None or count == expected else "fail"
    result = oracle.SuiteResult(
        "e8-count",
        status,
        None if status == "pass" else {"count": count, "expected": expected},
        {"norm": args.norm, "count": count, "expected": expected},
    )
    return jsonio.suite_to_json(result), (0 if status == "pass" else 3)


_HANDLERS = {
    "info": _cmd_info,
    "classify": _cmd_classify,
    "rep": _cmd_rep,
    "phi": _cmd_phi,
    "phi-inv": _cmd_phi_inv,
    "even-type": _cmd_even_type,
    "witness": _cmd_witness,
    "heegner": _cmd_heegner,
    "oracle-invariance": _cmd_oracle_invariance,
    "oracle-enumerate": _cmd_oracle_enumerate,
    "oracle-connectivity": _cmd_oracle_connectivity,
    "oracle-wall": _cmd_oracle_wall,
    "oracle-e8": _cmd_oracle_e8,
}


def _render_pretty(doc, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for key, value in doc.items():
            if isinstance(value, dict) or _is_block_list(value):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_pretty(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_pretty(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(doc)}")
    return lines


def _is_block_list(value) -> bool:
    return isinstance(value, list) and any(isinstance(x, (dict, list)) for x in value)


def _scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(x) for x in value) + "]"
    return str(value)


def run(argv, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    stdin = stdin if stdin is not None else sys.stdin
    try:
        args = build_parser().parse_args(argv)
        workers = _workers()
        doc, code = _HANDLERS[args.command](args, workers, stdin)
    except _UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except LatticeError as exc:
        error_doc = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(error_doc), file=stdout)
        return 2
    if getattr(args, "pretty", False):
        print("\n".join(_render_pretty(doc)), file=stdout)
    else:
        print(json.dumps(doc), file=stdout)
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
