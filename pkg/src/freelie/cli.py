"""Command-line interface: ``freelie <subcommand> ...``.

Boolean checks exit 0 (true) or 1 (false); errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import eqn, interp
from .hall import generate_basis, witt_dimension
from .lie import FreeLieAlgebra, bracket
from .scalars import field_from_spec, parse_polynomial


def _algebra(args) -> FreeLieAlgebra:
    return FreeLieAlgebra(args.rank, field_from_spec(args.field))


def _poly(args, text):
    return parse_polynomial(text, field_from_spec(args.field))


def _bool(value: bool) -> int:
    print("true" if value else "false")
    return 0 if value else 1


def cmd_hall_basis(args):
    basis = generate_basis(args.rank, args.max_degree)
    for m in basis:
        print(m)
    print()
    _print_counts(args.rank, args.max_degree, basis)
    return 0


def _print_counts(rank, max_degree, basis):
    print("degree count witt")
    for n in range(1, max_degree + 1):
        count = sum(1 for m in basis if m.degree == n)
        print(f"{n} {count} {witt_dimension(rank, n)}")


def cmd_dims(args):
    _print_counts(args.rank, args.max_degree, generate_basis(args.rank, args.max_degree))
    return 0


def cmd_nf(args):
    print(_algebra(args).parse(args.expr))
    return 0


def cmd_bracket(args):
    L = _algebra(args)
    print(bracket(L.parse(args.u), L.parse(args.v)))
    return 0


def _witness(args, fn):
    L = _algebra(args)
    partner = L.parse(args.partner) if args.partner else None
    print(fn(L.parse(args.r), args.m, args.n, partner=partner))
    return 0


def cmd_witness_s(args):
    return _witness(args, interp.witness_s)


def cmd_witness_t(args):
    return _witness(args, interp.witness_t)


def cmd_encode(args):
    L = _algebra(args)
    print(interp.encode_poly(L, _poly(args, args.poly), L.field.parse(args.alpha)))
    return 0


def cmd_decode(args):
    f, alpha = interp.decode_poly(_algebra(args).parse(args.element))
    print(f"f = {f}")
    print(f"alpha = {alpha}")
    return 0


def cmd_psi_witness(args):
    L = _algebra(args)
    tup = interp.psi_witness(
        L, _poly(args, args.poly), L.field.parse(args.alpha), L.field.parse(args.beta), method=args.method
    )
    for name, u in zip(("x", "y", "z", "z1", "z2"), tup):
        print(f"{name} = {u}")
    return 0


def cmd_psi_check(args):
    L = _algebra(args)
    return _bool(interp.check_phi(*(L.parse(e) for e in (args.x, args.y, args.z, args.z1, args.z2))))


def cmd_oplus_check(args):
    L = _algebra(args)
    return _bool(interp.check_oplus(L.parse(args.u), L.parse(args.v), L.parse(args.w)))


def cmd_otimes_check(args):
    L = _algebra(args)
    texts = [args.f, args.g, args.h]
    if args.polys:
        if any(texts) or len(args.polys) != 3:
            raise ValueError("give f g h either positionally or with --f/--g/--h")
        texts = args.polys
    if not all(texts):
        raise ValueError("otimes-check needs three polynomials f, g, h")
    f, g, h = (_poly(args, t) for t in texts)
    return _bool(interp.otimes_check(L, f, g, h))


def _field_code(L, text):
    if ";" in text:
        return tuple(L.parse(part) for part in text.split(";"))
    return interp.encode_field(L, L.field.parse(text))


def cmd_field_check(args):
    L = _algebra(args)
    if args.op == "action":
        return _bool(interp.check_scalar_action(L.parse(args.x), _field_code(L, args.y), L.parse(args.z)))
    xs, ys, zs = (_field_code(L, t) for t in (args.x, args.y, args.z))
    check = interp.check_field_add if args.op == "add" else interp.check_field_mul
    return _bool(check(xs, ys, zs))


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def _write_json(doc, path):
    text = json.dumps(doc, indent=2)
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def cmd_compile(args):
    doc = _read_json(args.input)
    P = eqn.PolySystem.from_json(doc)
    compiled = eqn.compile_poly_system(P, FreeLieAlgebra(args.rank, P.field))
    _write_json(compiled.to_json(), args.out)
    return 0


def cmd_solve_truncated(args):
    doc = _read_json(args.system)
    S = eqn.EquationSystem.from_json(doc)
    fixed = {}
    if args.fixed:
        fixed = {k: S.algebra.parse(v) for k, v in _read_json(args.fixed).items()}
    particular, kernel = eqn.truncated_solutions(S, args.degree, fixed)
    if args.project:
        kernel = eqn.project(kernel, args.project.split(","))
    out = {
        "degree": args.degree,
        "variables": kernel.variables,
        "dimension": kernel.dim,
        "basis": [{k: str(v) for k, v in a.items()} for a in kernel.assignments()],
        "particular": None if particular is None else {k: str(v) for k, v in particular.items()},
    }
    _write_json(out, args.out)
    return 0


def cmd_verify(args):
    doc = _read_json(args.system)
    given = _read_json(args.assignment)
    if "poly" in given:
        compiled = eqn.CompiledSystem.from_json(doc)
        field = compiled.system.algebra.field
        sigma = compiled.map_solution(
            {k: parse_polynomial(v, field) for k, v in given["poly"].items()}
        )
        S = compiled.system
    else:
        S = eqn.EquationSystem.from_json(doc)
        sigma = {k: S.algebra.parse(v) for k, v in given.items()}
    report = eqn.check_system(S, sigma)
    for i, r in enumerate(report.residuals):
        status = "ok" if not r else f"FAIL residual {r}"
        print(f"equation {i}: {status}")
    return _bool(report.passed)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="freelie", description=__doc__)
    p.add_argument("--rank", type=int, default=3)
    p.add_argument("--field", default="q", help="'q' (rationals) or 'fp:P'")
    sub = p.add_subparsers(dest="command", required=True)
    # the global options are also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=argparse.SUPPRESS)
    common.add_argument("--field", default=argparse.SUPPRESS)

    def add(name, fn, *arguments):
        sp = sub.add_parser(name, parents=[common])
        for flags, kw in arguments:
            sp.add_argument(*flags, **kw)
        sp.set_defaults(func=fn)
        return sp

    deg = (("--max-degree",), {"type": int, "required": True})
    add("hall-basis", cmd_hall_basis, deg)
    add("dims", cmd_dims, deg)
    add("nf", cmd_nf, (("expr",), {}))
    add("bracket", cmd_bracket, (("u",), {}), (("v",), {}))
    for name, fn in (("witness-s", cmd_witness_s), ("witness-t", cmd_witness_t)):
        add(
            name,
            fn,
            (("--r",), {"required": True}),
            (("--m",), {"type": int, "required": True}),
            (("--n",), {"type": int, "required": True}),
            (("--partner",), {"default": None}),
        )
    add("encode", cmd_encode, (("--poly",), {"required": True}), (("--alpha",), {"default": "0"}))
    add("decode", cmd_decode, (("element",), {}))
    add(
        "psi-witness",
        cmd_psi_witness,
        (("--poly",), {"required": True}),
        (("--alpha",), {"default": "0"}),
        (("--beta",), {"default": "0"}),
        (("--method",), {"choices": ["recursion", "linear"], "default": "recursion"}),
    )
    add("psi-check", cmd_psi_check, *((((name,), {}) for name in ("x", "y", "z", "z1", "z2"))))
    add("oplus-check", cmd_oplus_check, (("u",), {}), (("v",), {}), (("w",), {}))
    add(
        "otimes-check",
        cmd_otimes_check,
        (("polys",), {"nargs": "*", "metavar": "f g h"}),
        (("--f",), {}),
        (("--g",), {}),
        (("--h",), {}),
    )
    add(
        "field-check",
        cmd_field_check,
        (("op",), {"choices": ["add", "mul", "action"]}),
        (("--x",), {"required": True}),
        (("--y",), {"required": True}),
        (("--z",), {"required": True}),
    )
    add("compile", cmd_compile, (("--in",), {"dest": "input", "required": True}), (("--out",), {"default": "-"}))
    add(
        "solve-truncated",
        cmd_solve_truncated,
        (("--system",), {"required": True}),
        (("--degree",), {"type": int, "required": True}),
        (("--project",), {"default": None, "help": "comma-separated variables"}),
        (("--fixed",), {"default": None, "help": "JSON file of fixed variable values"}),
        (("--out",), {"default": "-"}),
    )
    add(
        "verify",
        cmd_verify,
        (("--system",), {"required": True}),
        (("--assignment",), {"required": True}),
    )
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (ValueError, TypeError, KeyError, ArithmeticError, OSError, interp.WitnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
