"""Command-line entry point.

Exit codes: 0 success, 1 usage or parse error, 2 axiom failure, 3 validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import builders, characters, crossed, hochschild
from .bundle import ValidationError
from .field import Field
from .groups import GroupError, parse_group_spec
from .instance import ParseError, load_instance, serialize_instance
from .report import to_plain

EXIT_OK, EXIT_USAGE, EXIT_AXIOM, EXIT_VALIDATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser, file_arg: bool = True) -> None:
    if file_arg:
        p.add_argument("file", help="instance file (JSON)")
    p.add_argument("--field", default=None, help="q or gf:<p>; overrides the field named in the file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=characters.MODULAR_SEED, help="seed for random sampling")
    p.add_argument("--skip-validate", action="store_true", help="skip bundle validation (negative testing only)")
    p.add_argument("--timing", action="store_true", help="include per-check timings in JSON reports")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="crossedhh", description="Crossed G-algebras from twisted Frobenius algebra bundles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _common(sub.add_parser("validate", help="run every twisted-bundle check"))
    p = sub.add_parser("hh0", help="graded dimensions of HH0")
    _common(p)
    p.add_argument("--bases", action="store_true", help="also print a basis of each graded piece")
    _common(sub.add_parser("verify", help="check the weak crossed G-algebra axioms and separability"))
    p = sub.add_parser("characters", help="2-character table")
    _common(p)
    p.add_argument("--check", action="store_true", help="also verify 2-class and modular invariance")
    _common(sub.add_parser("structure", help="dump graded product, coproduct and counit"))

    p = sub.add_parser("build", help="write a builder instance to a file")
    _common(p, file_arg=False)
    p.add_argument(
        "family",
        choices=["group-algebra", "function-algebra", "projective-matrix", "truncated-polynomial", "shipped"],
    )
    p.add_argument("--group", default="cyclic:2", help="group spec for group-algebra (e.g. symmetric:3)")
    p.add_argument("--variant", default=None, help="shipped key (for function-algebra or shipped)")
    p.add_argument("--trivial-action", action="store_true", help="truncated-polynomial with trivial Z/2 action")
    p.add_argument("--out", required=True, help="output path ('-' for stdout)")
    return parser


def _field(args):
    if args.field is None:
        return None
    try:
        return Field.from_spec(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(args):
    return load_instance(args.file, _field(args), validate=not args.skip_validate)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(to_plain(payload), indent=1, sort_keys=False) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _reports_payload(args, reps) -> dict:
    return {"ok": all(r.ok for r in reps), "reports": [r.to_dict(args.timing) for r in reps]}


def cmd_validate(args) -> int:
    B = load_instance(args.file, _field(args), validate=False)
    reps = B.validation_reports()
    _emit(args, _reports_payload(args, reps), "\n".join(r.render() for r in reps))
    return EXIT_OK if all(r.ok for r in reps) else EXIT_VALIDATION


def cmd_hh0(args) -> int:
    B = _load(args)
    HB = hochschild.build_hh0(B)
    G = B.group
    grades = []
    for g in G.elements:
        entry = {"grade": G.name(g), "dim": HB.dims[g]}
        if args.bases:
            entry["basis"] = [HB.sections[g][:, i] for i in range(HB.dims[g])]
        grades.append(entry)
    lines = [f"HH0 of {B.name or args.file} over {B.field.spec}: total dim {HB.total_dim}"]
    for entry in grades:
        lines.append(f"  grade {entry['grade']}: dim {entry['dim']}")
        for v in entry.get("basis", []):
            lines.append("    [" + ", ".join(B.field.format(x) for x in v) + "]")
    _emit(args, {"field": B.field.spec, "total_dim": HB.total_dim, "grades": grades}, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    B = _load(args)
    HB = hochschild.build_hh0(B)
    CA = crossed.build_crossed(HB)
    reps = [hochschild.verify_prop_maps(HB), hochschild.verify_prop_repr(HB), crossed.verify_weak_crossed(CA)]
    sep = crossed.separability_unit(CA)
    reps.append(sep.report)
    payload = _reports_payload(args, reps)
    payload["unit"] = None if sep.unit is None else sep.unit
    payload["honest"] = sep.honest
    text = "\n".join(r.render() for r in reps)
    text += "\nunit: " + ("absent (" + sep.diagnostic + ")" if sep.unit is None else
                          "[" + ", ".join(B.field.format(x) for x in sep.unit) + "]")
    _emit(args, payload, text)
    return EXIT_OK if payload["ok"] else EXIT_AXIOM


def cmd_characters(args) -> int:
    B = _load(args)
    HB = hochschild.build_hh0(B)
    CT = characters.two_character(HB)
    G = B.group
    rows = [{"g": G.name(g), "h": G.name(h), "chi": v} for (g, h), v in CT.rows()]
    lines = [f"chi({r['g']}, {r['h']}) = {B.field.format(r['chi'])}" for r in rows]
    payload = {"field": B.field.spec, "table": rows}
    code = EXIT_OK
    if args.check:
        reps = [characters.verify_two_class(CT, G), characters.verify_modular(CT, G, args.seed)]
        payload.update(_reports_payload(args, reps))
        lines += [r.render() for r in reps]
        code = EXIT_OK if payload["ok"] else EXIT_AXIOM
    _emit(args, payload, "\n".join(lines))
    return code


def cmd_structure(args) -> int:
    B = _load(args)
    CA = crossed.build_crossed(hochschild.build_hh0(B))
    G = B.group
    prods, coprods = [], []
    for g in G.elements:
        for h in G.elements:
            prods.append({"g": G.name(g), "h": G.name(h), "tensor": CA.m[g, h]})
            coprods.append({"g": G.name(g), "h": G.name(h), "tensor": CA.delta[g, h]})
    payload = {
        "field": B.field.spec,
        "dims": [CA.dims[g] for g in G.elements],
        "product": prods,
        "coproduct": coprods,
        "counit": CA.counit_vector,
    }
    if args.json:
        _emit(args, payload, "")
    else:
        lines = [f"dims: {payload['dims']}", f"counit: {to_plain(CA.counit_vector)}"]
        for p in prods:
            lines.append(f"m[{p['g']},{p['h']}] = {to_plain(p['tensor'])}")
        for d in coprods:
            lines.append(f"delta[{d['g']},{d['h']}] = {to_plain(d['tensor'])}")
        _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _build(args):
    field = _field(args) or Field.from_spec("q")
    if args.family == "group-algebra":
        try:
            return builders.group_algebra_bundle(parse_group_spec(args.group), field)
        except (GroupError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    if args.family == "projective-matrix":
        return builders.shipped("proj-m2-klein", field)
    if args.family == "truncated-polynomial":
        return builders.truncated_polynomial_bundle(not args.trivial_action, field)
    keys = [s.key for s in builders.SHIPPED]
    if args.family == "function-algebra":
        keys = [s.key for s in builders.SHIPPED if s.family == "function-algebra"]
    if args.variant not in keys:
        raise UsageError(f"--variant must be one of {keys}")
    return builders.shipped(args.variant, field)


def cmd_build(args) -> int:
    text = serialize_instance(_build(args))
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "hh0": cmd_hh0,
    "verify": cmd_verify,
    "characters": cmd_characters,
    "structure": cmd_structure,
    "build": cmd_build,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except builders.BuilderError as exc:
        print(f"builder error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
