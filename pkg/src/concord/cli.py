"""Command-line interface: ``concord <subcommand> ...``.

Exit status is 0 for a definitive answer, 2 for ``Inconclusive`` and 1 for
errors.  ``--output`` paths are resolved against ``$CONCORD_OUTPUT_DIR``
when that variable is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .ccomplex import CComplex, build_LK_ccomplex, torres_check, two_variable_alexander
from .certify import (
    Certificate,
    Conclusion,
    ReplayError,
    certify_family,
    certify_not_hopf,
    check_LK_alexander,
    render_markdown,
    render_table,
    replay,
    sqp_certificate,
)
from .floer import d_lens_all, d_one_over_n_surgery, tau
from .kirby import FramedChain, blow_down, double_branched_cover_genus1, genus1_bands, slam_dunk_reduce
from .knots import invariants, seifert_matrix
from .laurent import LaurentPoly1
from .parser import parse_knot_expression

OUTPUT_DIR_ENV = "CONCORD_OUTPUT_DIR"

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    path = Path(output)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _load_json(arg: str):
    """``arg`` is a file path, ``-`` for stdin, or a JSON literal."""
    if arg == "-":
        return json.load(sys.stdin)
    if arg.lstrip().startswith("{"):
        return json.loads(arg)
    return json.loads(Path(arg).read_text())


def _certificate_out(cert: Certificate, fmt: str, output: str | None) -> int:
    _emit(render_markdown(cert) if fmt == "md" else cert.dumps(), output)
    return EXIT_INCONCLUSIVE if cert.conclusion is Conclusion.INCONCLUSIVE else EXIT_OK


def cmd_invariants(a) -> int:
    _emit(_dump(invariants(parse_knot_expression(a.expr), upto=a.upto)), a.output)
    return EXIT_OK


def cmd_link_alexander(a) -> int:
    if a.ccomplex:
        c = CComplex.from_json(_load_json(a.ccomplex))
    else:
        c = build_LK_ccomplex(parse_knot_expression(a.LK))
    p = two_variable_alexander(c)
    result = {"alexander": str(p), "torres": torres_check(p, c.lk, LaurentPoly1.one())}
    _emit(_dump(result) if a.json else str(p), a.output)
    return EXIT_OK


def cmd_tau(a) -> int:
    r = tau(parse_knot_expression(a.expr))
    if a.json:
        _emit(_dump(r.to_json()), a.output)
    else:
        lines = [f"tau = {'unknown' if r.value is None else r.value}"]
        lines += [f"  {s.rule}: {s.expr} -> {s.value}" for s in r.derivation]
        _emit("\n".join(lines), a.output)
    return EXIT_OK if r.known else EXIT_INCONCLUSIVE


def cmd_dinv(a) -> int:
    coeff = Fraction(a.surgery)
    if coeff.numerator != 1:
        raise ValueError(f"surgery coefficient must be 1/n, got {a.surgery}")
    d = d_one_over_n_surgery(parse_knot_expression(a.expr), coeff.denominator)
    _emit(str(d.value), a.output)
    return EXIT_OK


def cmd_dlens(a) -> int:
    _emit("\n".join(f"{i}\t{v}" for i, v in enumerate(d_lens_all(a.p, a.q))), a.output)
    return EXIT_OK


def cmd_slamdunk(a) -> int:
    r = slam_dunk_reduce(FramedChain.from_json(_load_json(a.chain)))
    _emit(_dump(r.to_json()), a.output)
    return EXIT_OK


def cmd_blowdown(a) -> int:
    c = blow_down(FramedChain.from_json(_load_json(a.chain)), a.index)
    _emit(_dump(c.to_json()), a.output)
    return EXIT_OK


def cmd_cover2(a) -> int:
    e = parse_knot_expression(a.expr)
    c = double_branched_cover_genus1(seifert_matrix(e), genus1_bands(e))
    _emit(_dump(c.to_json()), a.output)
    return EXIT_OK


def cmd_certify(a) -> int:
    return _certificate_out(certify_not_hopf(parse_knot_expression(a.expr)), a.format, a.output)


def cmd_sqp(a) -> int:
    return _certificate_out(sqp_certificate(parse_knot_expression(a.expr)), a.format, a.output)


def cmd_table(a) -> int:
    _cert, rows = certify_family(a.n_max)
    _emit(render_table(rows, a.format), a.output)
    return EXIT_OK


def cmd_check_alexander(a) -> int:
    _emit("true" if check_LK_alexander(parse_knot_expression(a.expr)) else "false", a.output)
    return EXIT_OK


def cmd_replay(a) -> int:
    cert = replay(_load_json(a.certificate))
    _emit(f"valid: {cert.conclusion.value}", None)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which here means Inconclusive
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="concord", description="Exact link-concordance obstructions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=fn)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        return p

    p = add("invariants", cmd_invariants, "Alexander polynomial, signature, determinant, torsion coefficients")
    p.add_argument("expr")
    p.add_argument("--upto", type=int, default=None, help="number of torsion coefficients")

    p = add("link-alexander", cmd_link_alexander, "two-variable Alexander polynomial by Cooper's method")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--ccomplex", help="C-complex JSON file (or - for stdin)")
    g.add_argument("--LK", help="knot K; uses the C-complex of L(K)")
    p.add_argument("--json", action="store_true", help="also report the Torres check")

    p = add("tau", cmd_tau, "tau invariant with its derivation")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")

    p = add("dinv", cmd_dinv, "d-invariant of 1/n surgery on an alternating knot")
    p.add_argument("--surgery", required=True, help="coefficient 1/n")
    p.add_argument("expr")

    p = add("dlens", cmd_dlens, "d-invariants of the lens space L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = add("slamdunk", cmd_slamdunk, "fold a framed chain into a rational surgery")
    p.add_argument("chain", help="FramedChain JSON file, literal, or - for stdin")

    p = add("blowdown", cmd_blowdown, "blow down a ±1-framed unknot")
    p.add_argument("chain", help="FramedChain JSON file, literal, or - for stdin")
    p.add_argument("--index", type=int, required=True)

    p = add("cover2", cmd_cover2, "surgery chain for the branched double cover of a genus-1 knot")
    p.add_argument("expr")

    for name, fn, help in [
        ("certify", cmd_certify, "certificate that L(K) is not concordant to a (locally knotted) Hopf link"),
        ("sqp", cmd_sqp, "strong quasipositivity certificate for L(K)"),
    ]:
        p = add(name, fn, help)
        p.add_argument("expr")
        p.add_argument("--format", choices=("json", "md"), default="json")

    p = add("table", cmd_table, "d-invariant table for L(T(2,2n+1)), n = 1..N")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "md", "json"), default="md")

    p = add("check-alexander", cmd_check_alexander, "is the Alexander polynomial of L(K) equal to 1")
    p.add_argument("expr")

    p = sub.add_parser("replay", help="recompute and validate a certificate")
    p.set_defaults(func=cmd_replay)
    p.add_argument("certificate", help="certificate JSON file or - for stdin")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ReplayError as exc:
        print(f"invalid certificate: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, RuntimeError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
