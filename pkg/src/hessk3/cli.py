"""JSON command line.

Every subcommand prints a single envelope

    {"command": ..., "inputs": ..., "outputs": ..., "status": ..., "diagnostics": [...]}

with sorted keys and no timestamps, so identical inputs give identical
bytes.  Numeric formats: rationals are "p/q" strings (plain integers
allowed on input), Eisenstein integers are [a, b] pairs, field elements
are 4-tuples of rational strings (coefficients of 1, sqrt3, i, sqrt3 i),
matrices are row-major nested lists.

Exit codes: 0 on success, 1 when a membership or verification check comes
back negative or an internal invariant trips, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import correspond, cubic, heegner, hermitian, lattice, verify
from .domain import psi, psi_inv
from .eisenstein import Eisenstein
from .errors import InvariantViolation
from .tower import Cyclo12

__all__ = ["main"]


# -- input parsing --------------------------------------------------------------


def _fail(field: str, reason: str):
    raise ValueError(f"{field}: {reason}")


def parse_rational(v, field: str) -> Fraction:
    if isinstance(v, bool):
        _fail(field, "expected a rational, got a boolean")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            _fail(field, f"bad rational {v!r} ({exc})")
    _fail(field, f"expected an integer or a 'p/q' string, got {type(v).__name__}")


def parse_int(v, field: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        _fail(field, f"expected an integer, got {type(v).__name__}")
    return v


def parse_eisenstein(v, field: str) -> Eisenstein:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        _fail(field, "expected a two-element integer array")
    return Eisenstein(parse_int(v[0], field + "[0]"), parse_int(v[1], field + "[1]"))


def parse_tower(v, field: str) -> Cyclo12:
    if not isinstance(v, (list, tuple)) or len(v) != 4:
        _fail(field, "expected a four-element array of rational strings")
    return Cyclo12(*(parse_rational(x, f"{field}[{i}]") for i, x in enumerate(v)))


def parse_int_matrix(v, field: str, n: int):
    if not isinstance(v, (list, tuple)) or len(v) != n:
        _fail(field, f"expected a {n}x{n} integer matrix")
    rows = []
    for i, row in enumerate(v):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            _fail(field, f"row {i} is not a list of {n} integers")
        rows.append(tuple(parse_int(x, f"{field}[{i}][{j}]") for j, x in enumerate(row)))
    return tuple(rows)


def parse_eis_matrix(v, field: str, n: int):
    if not isinstance(v, (list, tuple)) or len(v) != n:
        _fail(field, f"expected a {n}x{n} matrix of [a, b] pairs")
    rows = []
    for i, row in enumerate(v):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            _fail(field, f"row {i} is not a list of {n} entries")
        rows.append(tuple(parse_eisenstein(x, f"{field}[{i}][{j}]") for j, x in enumerate(row)))
    return tuple(rows)


def parse_tower_matrix(v, field: str, n: int):
    if not isinstance(v, (list, tuple)) or len(v) != n:
        _fail(field, f"expected a {n}x{n} matrix of field elements")
    rows = []
    for i, row in enumerate(v):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            _fail(field, f"row {i} is not a list of {n} entries")
        rows.append(tuple(parse_tower(x, f"{field}[{i}][{j}]") for j, x in enumerate(row)))
    return tuple(rows)


def parse_point(v, field: str):
    if not isinstance(v, (list, tuple)) or len(v) != 6:
        _fail(field, "expected six field elements")
    return tuple(parse_tower(x, f"{field}[{i}]") for i, x in enumerate(v))


def parse_herm_word(v, field: str):
    if not isinstance(v, (list, tuple)):
        _fail(field, "expected a list of tokens")
    word = []
    for i, tok in enumerate(v):
        where = f"{field}[{i}]"
        if not isinstance(tok, (list, tuple)) or len(tok) != 2:
            _fail(where, "expected [kind, payload]")
        kind = tok[0]
        if kind == "gA":
            word.append(("gA", parse_eis_matrix(tok[1], where + ".payload", 2)))
        elif kind in ("gBu", "gBl"):
            payload = tok[1]
            if not isinstance(payload, (list, tuple)) or len(payload) != 4:
                _fail(where, "translation payload must be four integers")
            word.append((kind, tuple(parse_int(x, f"{where}.payload[{j}]") for j, x in enumerate(payload))))
        else:
            _fail(where, f"unknown token kind {kind!r}")
    return word


def load_document(args) -> dict:
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"input document: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("input document: expected a JSON object")
    return doc


def field_of(doc: dict, name: str):
    if name not in doc:
        raise ValueError(f"{name}: missing from the input document")
    return doc[name]


# -- output formatting ---------------------------------------------------------


def fmt_rational(x) -> str:
    return str(Fraction(x))


def fmt_eisenstein(e: Eisenstein) -> list:
    return [e.a, e.b]


def fmt_tower(x: Cyclo12) -> list:
    return [str(x.a), str(x.b), str(x.c), str(x.d)]


def fmt_eis_matrix(m) -> list:
    return [[fmt_eisenstein(x) for x in row] for row in m]


def fmt_tower_matrix(m) -> list:
    return [[fmt_tower(x) for x in row] for row in m]


def fmt_herm_word(word) -> list:
    out = []
    for kind, payload in word:
        if kind == "gA":
            out.append([kind, fmt_eis_matrix(payload)])
        else:
            out.append([kind, list(payload)])
    return out


def emit(command: str, inputs, outputs, status: str = "ok", diagnostics=()) -> None:
    doc = {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "status": status,
        "diagnostics": list(diagnostics),
    }
    print(json.dumps(doc, sort_keys=True))


# -- subcommands ----------------------------------------------------------------


def cmd_invariants(args) -> int:
    parts = args.lam.split(",")
    if len(parts) != 5:
        raise ValueError("lambda: expected five comma-separated rationals")
    lam = tuple(parse_rational(p.strip(), f"lambda[{i}]") for i, p in enumerate(parts))
    rep = cubic.classify(lam)
    outputs = {
        "I8": fmt_rational(rep.invariants.i8),
        "I16": fmt_rational(rep.invariants.i16),
        "I24": fmt_rational(rep.invariants.i24),
        "I32": fmt_rational(rep.invariants.i32),
        "I40": fmt_rational(rep.invariants.i40),
        "I100": fmt_rational(rep.invariants.i100),
        "delta_sing": fmt_rational(rep.delta_sing),
        "delta_km": None if rep.delta_km is None else fmt_rational(rep.delta_km),
        "sylvester_degenerate": rep.sylvester_degenerate,
        "singular": rep.singular,
        "eckardt": rep.eckardt,
        "kummer": rep.kummer,
    }
    emit("invariants", {"lambda": [fmt_rational(x) for x in lam]}, outputs)
    return 0


def cmd_orth(args) -> int:
    doc = load_document(args)
    g = parse_int_matrix(field_of(doc, "matrix"), "matrix", 6)
    inputs = {"matrix": [list(r) for r in g]}
    cmd = f"orth.{args.action}"
    if args.action == "check":
        ok = lattice.is_orthogonal(g)
        outputs = {"is_isometry": ok}
        if ok:
            outputs["determinant"] = lattice.det_int(g)
            outputs["orientation"] = lattice.orientation(g)
            outputs["block_parity"] = lattice.block_parity(g)
            if outputs["orientation"] == "plus":
                outputs["in_k3_kernel"] = lattice.is_in_k3(g)
                outputs["in_enr_kernel"] = lattice.is_in_enr(g)
        emit(cmd, inputs, outputs)
        return 0 if ok else 1
    if args.action == "decompose":
        word = correspond.decompose_so0(g)
        emit(cmd, inputs, {"word": [[name, p] for name, p in word]})
        return 0
    if args.action == "disc-action":
        images = lattice.disc_action(g)
        emit(cmd, inputs, {"generator_images": [[fmt_rational(x) for x in img] for img in images]})
        return 0
    images = lattice.to_s5(g)
    emit(cmd, inputs, {"permutation": list(images)})
    return 0


def cmd_herm(args) -> int:
    doc = load_document(args)
    h = parse_eis_matrix(field_of(doc, "matrix"), "matrix", 4)
    inputs = {"matrix": fmt_eis_matrix(h)}
    cmd = f"herm.{args.action}"
    if args.action == "check":
        level = hermitian.membership(h)
        emit(cmd, inputs, {"membership": level})
        return 0 if level != "none" else 1
    if args.action == "decompose":
        word = hermitian.decompose_hgamma1(h)
        emit(cmd, inputs, {"word": fmt_herm_word(word)})
        return 0
    if args.action == "mod2":
        fm = hermitian.f_mod2(h)
        emit(cmd, inputs, {"matrix_f4": [[list(x) for x in row] for row in fm]})
        return 0
    coset = hermitian.coset_classify(h)
    emit(cmd, inputs, {"coset": coset})
    return 0


def cmd_map(args) -> int:
    doc = load_document(args)
    cmd = f"map.{args.action}"
    if args.action == "z-to-tau":
        z = parse_point(field_of(doc, "z"), "z")
        tau = psi(z)
        emit(cmd, {"z": [fmt_tower(x) for x in z]}, {"tau": fmt_tower_matrix(tau)})
        return 0
    tau = parse_tower_matrix(field_of(doc, "tau"), "tau", 2)
    z = psi_inv(tau)
    emit(cmd, {"tau": fmt_tower_matrix(tau)}, {"z": [fmt_tower(x) for x in z]})
    return 0


def cmd_correspond(args) -> int:
    doc = load_document(args)
    cmd = f"correspond.{args.action}"
    if args.action == "o2h":
        g = parse_int_matrix(field_of(doc, "matrix"), "matrix", 6)
        uses_t, uses_w, word = correspond.orth_to_herm(g)
        emit(
            cmd,
            {"matrix": [list(r) for r in g]},
            {"uses_t": uses_t, "uses_w": uses_w, "word": fmt_herm_word(word)},
        )
        return 0
    word = parse_herm_word(field_of(doc, "word"), "word")
    uses_t = bool(doc.get("uses_t", False))
    uses_w = bool(doc.get("uses_w", False))
    g = correspond.herm_to_orth(uses_t, uses_w, word)
    emit(
        cmd,
        {"uses_t": uses_t, "uses_w": uses_w, "word": fmt_herm_word(word)},
        {"matrix": [list(r) for r in g]},
    )
    return 0


def cmd_heegner(args) -> int:
    if args.tau is not None:
        try:
            raw = json.loads(args.tau)
        except json.JSONDecodeError as exc:
            raise ValueError(f"tau: {exc}") from None
    else:
        raw = field_of(load_document(args), "tau")
    tau = parse_tower_matrix(raw, "tau", 2)
    flags = heegner.heegner_membership(tau)
    emit(
        "heegner",
        {"tau": fmt_tower_matrix(tau)},
        {"node": flags.node, "eckardt": flags.eckardt, "ns": flags.ns, "km": flags.km},
    )
    return 0


def cmd_verify(args) -> int:
    if args.suite == "all":
        report = verify.run_all(args.seed)
    else:
        report = verify.run_suite(args.suite, args.seed)
    emit("verify", {"suite": args.suite, "seed": args.seed}, report)
    return 0 if report["passed"] else 1


# -- wiring ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hessk3", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="classical invariants and loci of a quintuple")
    p.add_argument("--lambda", dest="lam", required=True, metavar="R,R,R,R,R")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("orth", help="6x6 isometry tools")
    p.add_argument("action", choices=["check", "decompose", "disc-action", "to-s5"])
    p.add_argument("--input", help="JSON document path (default stdin)")
    p.set_defaults(func=cmd_orth)

    p = sub.add_parser("herm", help="4x4 Hermitian group tools")
    p.add_argument("action", choices=["check", "decompose", "mod2", "coset"])
    p.add_argument("--input", help="JSON document path (default stdin)")
    p.set_defaults(func=cmd_herm)

    p = sub.add_parser("map", help="chart point to half-space matrix and back")
    p.add_argument("action", choices=["z-to-tau", "tau-to-z"])
    p.add_argument("--input", help="JSON document path (default stdin)")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("correspond", help="transport between the two groups")
    p.add_argument("action", choices=["o2h", "h2o"])
    p.add_argument("--input", help="JSON document path (default stdin)")
    p.set_defaults(func=cmd_correspond)

    p = sub.add_parser("heegner", help="divisor membership of a half-space point")
    p.add_argument("--tau", help="inline JSON 2x2 matrix of field elements")
    p.add_argument("--input", help="JSON document path (default stdin)")
    p.set_defaults(func=cmd_heegner)

    p = sub.add_parser("verify", help="run a seeded verification suite")
    p.add_argument("--suite", default="all", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    if getattr(args, "action", None):
        command = f"{command}.{args.action}"
    try:
        return args.func(args)
    except InvariantViolation as exc:
        emit(command, {}, None, status="error", diagnostics=[str(exc)])
        return 1
    except ValueError as exc:
        emit(command, {}, None, status="error", diagnostics=[str(exc)])
        return 2
    except OSError as exc:
        emit(command, {}, None, status="error", diagnostics=[str(exc)])
        return 2


if __name__ == "__main__":
    sys.exit(main())
