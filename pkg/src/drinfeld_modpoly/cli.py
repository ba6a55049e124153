"""Command-line entry point: ``drinfeld-modpoly <command> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .drinfeld import DrinfeldModule, torsion_basis
from .fields import a_is_monic_prime, a_to_str, is_prime
from .invariants import IsomorphicPair, distinguishing_invariant, invariant_monoid_basis, separation_table
from .isogeny import enumerate_subspaces
from .modular import (
    CoefficientNotInB,
    InvarianceFailed,
    factor_evidence,
    format_in_invariants,
    full_modular_poly,
    kronecker_verify,
    modular_poly,
    special_poly_mod_p,
)
from .parsing import ParseError, parse_apoly, parse_element, parse_invariant, parse_upoly
from .polynomials import is_invariant, poly_ring
from .printing import format_upoly

OK, FAIL, BAD_INPUT, INTERNAL = 0, 1, 2, 3


class BadInput(ValueError):
    pass


@dataclass
class JobSpec:
    command: str
    q: int
    r: int
    P: tuple[int, ...] | None = None
    s: int | str | None = None
    J: object = None
    J_text: str = ""
    emit: str = "human"
    threads: int = 1


def _validate(args, need_P: bool = True, need_J: bool = False, s_range: tuple[int, int] | None = None,
              allow_full: bool = False) -> JobSpec:
    if not is_prime(args.q):
        raise BadInput(f"q = {args.q} is not supported (q must be prime)")
    if args.r < 2:
        raise BadInput("r must be at least 2")
    spec = JobSpec(args.command, args.q, args.r, emit=getattr(args, "emit", "human"),
                   threads=max(1, getattr(args, "threads", 1)))
    if need_P:
        spec.P = parse_apoly(args.P, args.q)
        if not a_is_monic_prime(spec.P, args.q):
            raise BadInput(f"P = {args.P} is not a monic prime of F_{args.q}[T]")
    if s_range is not None:
        if args.s == "full" and allow_full:
            spec.s = "full"
        else:
            try:
                spec.s = int(args.s)
            except ValueError:
                raise BadInput(f"s must be an integer{' or full' if allow_full else ''}") from None
            lo, hi = s_range
            if not lo <= spec.s <= hi:
                raise BadInput(f"s must satisfy {lo} <= s <= {hi}")
    if need_J:
        default = "j" if args.r == 2 else None
        text = args.J or default
        if text is None:
            raise BadInput("--J is required for r >= 3")
        spec.J_text = text
        spec.J = parse_invariant(text, args.q, args.r)
        if not is_invariant(spec.J):
            raise BadInput(f"J = {text} is not invariant under the lambda-action")
    return spec


def _emit_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# commands


def cmd_torsion(args) -> tuple[int, str]:
    spec = _validate(args)
    wb = torsion_basis(DrinfeldModule.generic(spec.q, spec.r), spec.P)
    if spec.emit == "json":
        return OK, _emit_json({
            "q": spec.q, "r": spec.r, "P": a_to_str(spec.P),
            "degree": wb.tower.degree,
            "levels": {n: format_upoly(wb.tower.minimal_polynomial(n), n) for n in wb.tower.gen_names},
            "generators": [str(w) for w in wb.gens],
            "reductions": [str(y) for y in wb.reduced_gens],
        })
    if spec.emit == "canonical":
        lines = [f"degree: {wb.tower.degree}"]
        lines += [f"{n}: {format_upoly(wb.tower.minimal_polynomial(n), n)}" for n in wb.tower.gen_names]
        return OK, "\n".join(lines)
    return OK, wb.describe()


def cmd_modpoly(args) -> tuple[int, str]:
    spec = _validate(args, need_J=True, s_range=(0, args.r), allow_full=True)
    phi = DrinfeldModule.generic(spec.q, spec.r)
    if spec.s == "full":
        mp = full_modular_poly(spec.J, spec.P, phi=phi, threads=spec.threads)
    else:
        mp = modular_poly(spec.J, spec.P, spec.s, phi=phi, threads=spec.threads, check_distinct=args.check_distinct)
    mp.J_label = spec.J_text
    basis = invariant_monoid_basis(spec.q, spec.r)
    if spec.emit == "canonical":
        return OK, mp.to_text()
    if spec.emit == "certificate":
        return OK, mp.certificate(basis if args.in_generators else None)
    if spec.emit == "json":
        return OK, _emit_json({
            "q": spec.q, "r": spec.r, "P": a_to_str(spec.P), "s": spec.s, "J": spec.J_text,
            "degree": mp.degree, "invariant": mp.invariant, "distinct_roots": mp.distinct_roots,
            "coefficients": [str(c) for c in mp.coeffs],
        })
    lines = [f"Phi(X) = {mp.to_text()}", f"degree: {mp.degree}"]
    if args.in_generators:
        lines.append(f"in generators: {format_in_invariants(mp.coeffs, basis)}")
    return OK, "\n".join(lines)


def cmd_kronecker(args) -> tuple[int, str]:
    spec = _validate(args, need_J=True, s_range=(1, args.r - 1))
    lhs = None
    if args.replay:
        text = Path(args.replay).read_text()
        for line in text.splitlines():
            if line.startswith("Phi(X) = "):
                text = line[len("Phi(X) = "):]
                break
        lhs = parse_upoly(text.strip(), spec.q, spec.r)
    report = kronecker_verify(spec.J, spec.P, spec.s, lhs=lhs, threads=spec.threads)
    report.J_label = spec.J_text
    code = OK if report.passed else FAIL
    if spec.emit == "json":
        return code, _emit_json({
            "q": spec.q, "r": spec.r, "P": a_to_str(spec.P), "s": spec.s, "J": spec.J_text,
            "first_form": report.first_holds, "second_form": report.second_holds,
            "residual_first": format_upoly(report.residual_first),
            "residual_second": format_upoly(report.residual_second),
        })
    return code, report.to_text()


def cmd_sep(args) -> tuple[int, str]:
    spec = _validate(args, need_J=True, s_range=(0, args.r - 1))
    try:
        coeffs = special_poly_mod_p(spec.J, spec.P, spec.s, threads=spec.threads)
    except CoefficientNotInB:
        raise BadInput("coefficients do not descend mod P for this J; pass a |P|-th power such as (J)^|P|") from None
    lines = [f"sep(X) mod P = {format_upoly(coeffs)}"]
    if args.in_generators:
        basis = invariant_monoid_basis(spec.q, spec.r)
        lines.append(f"in generators: {format_in_invariants(coeffs, basis)}")
    if args.evidence:
        lines.append("factor degrees at random specializations (evidence only):")
        lines += ["  " + e.to_text() for e in factor_evidence(coeffs, args.evidence, args.seed)]
    return OK, "\n".join(lines)


def cmd_invariants(args) -> tuple[int, str]:
    spec = _validate(args, need_P=False)
    basis = invariant_monoid_basis(spec.q, spec.r)
    B = poly_ring(spec.q, spec.r)
    gens = basis.generators(B)
    if spec.emit == "canonical":
        return OK, " ".join(basis.names) if spec.r > 2 else str(gens[0])
    if spec.emit == "json":
        return OK, _emit_json({n: str(g) for n, g in zip(basis.names, gens)})
    return OK, "\n".join(f"{n} = {g}" for n, g in zip(basis.names, gens))


def cmd_subspaces(args) -> tuple[int, str]:
    spec = _validate(args, s_range=(0, args.r))
    rows = [f"{m} {'special' if m.is_special() else ''}".rstrip()
            for m in enumerate_subspaces(spec.r, spec.s, spec.P, spec.q)]
    return OK, "\n".join(rows + [f"count: {len(rows)}"])


def read_modules(path: str, q: int, r: int) -> list[tuple]:
    """One module per line: r - 1 comma-separated coefficients in T (and u); '/' allowed; '#' starts a comment."""
    B = poly_ring(q, r)
    modules = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != r - 1:
            raise BadInput(f"line {lineno}: expected {r - 1} coefficients, got {len(parts)}")
        coeffs = []
        for p in parts:
            c = parse_element(p, B, allow_div=True)
            if any(n.startswith("g") for n in c.variables()):
                raise BadInput(f"line {lineno}: coefficients may not involve g-variables")
            coeffs.append(c)
        modules.append(tuple(coeffs))
    if not modules:
        raise BadInput("no modules given")
    return modules


def cmd_distinguish(args) -> tuple[int, str]:
    spec = _validate(args, need_P=False)
    modules = read_modules(args.file, spec.q, spec.r)
    try:
        J = distinguishing_invariant(modules)
    except IsomorphicPair as exc:
        raise BadInput(str(exc)) from None
    table = separation_table(J, modules)
    ok = all(sep for _, _, sep in table)
    lines = [f"J = {J}", f"J = {J.poly}", "separation:"]
    lines += [f"  {i + 1} vs {j + 1}: {'distinct' if sep else 'EQUAL'}" for i, j, sep in table]
    lines.append(f"result: {'PASS' if ok else 'FAIL'}")
    return (OK if ok else FAIL), "\n".join(lines)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drinfeld-modpoly",
                                     description="Modular polynomials of Drinfeld modules and their congruences mod P.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=2, help="size of the constant field (prime)")
    common.add_argument("--r", type=int, default=2, help="rank")
    common.add_argument("--emit", choices=["human", "canonical", "certificate", "json"], default="human")

    with_P = argparse.ArgumentParser(add_help=False)
    with_P.add_argument("--P", default="T", help="monic prime of F_q[T], e.g. 'T^2+T+1'")
    with_P.add_argument("--threads", type=int, default=1)

    with_J = argparse.ArgumentParser(add_help=False)
    with_J.add_argument("--J", help="invariant: generator names (j, J07, ...) or g-variables; default j for r = 2")
    with_J.add_argument("--in-generators", action="store_true", help="also print coefficients in the generators")

    p = sub.add_parser("torsion", parents=[common, with_P], help="P-torsion tower and generators")
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("modpoly", parents=[common, with_P, with_J], help="modular polynomial of type (A/PA)^s")
    p.add_argument("--s", default="1", help="subspace dimension, or 'full'")
    p.add_argument("--check-distinct", action="store_true", help="record whether all roots are distinct")
    p.set_defaults(func=cmd_modpoly)

    p = sub.add_parser("kronecker", parents=[common, with_P, with_J], help="verify both congruences mod P")
    p.add_argument("--s", default="1")
    p.add_argument("--replay", metavar="FILE", help="verify a stored polynomial in X instead of recomputing it")
    p.set_defaults(func=cmd_kronecker)

    p = sub.add_parser("sep", parents=[common, with_P, with_J], help="separable part mod P from the reduced module")
    p.add_argument("--s", default="1")
    p.add_argument("--evidence", type=int, default=0, metavar="N",
                   help="factor at N random specializations (deg P = 1 only)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sep)

    p = sub.add_parser("subspaces", parents=[common, with_P], help="RREF roster with special flags")
    p.add_argument("--s", default="1")
    p.set_defaults(func=cmd_subspaces)

    p = sub.add_parser("invariants", parents=[common], help="generators of the invariant monoid")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("distinguish", parents=[common], help="separating invariant for modules listed in FILE")
    p.add_argument("file")
    p.set_defaults(func=cmd_distinguish)
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (BAD_INPUT if exc.code else OK), ""
    try:
        return args.func(args)
    except (BadInput, ParseError, OSError) as exc:
        return BAD_INPUT, f"error: {exc}"
    except (AssertionError, CoefficientNotInB, InvarianceFailed) as exc:
        return INTERNAL, f"internal error: {exc}"


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    if text:
        print(text, file=sys.stdout if code in (OK, FAIL) else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
