"""Command-line front end: ``intvalg <command> ...``.

Every command prints a short text report, or with ``--json`` a single
object with keys op, inputs, verdict, certificate_poly, counterexample,
enum_count and wall_time_ms.

Exit codes: 0 success, 1 negative verdict, 2 input error, 3 enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .algebra import StructAlgebra, builtin
from .errors import DegreeTooLarge, EnumerationTooLarge, InputError, IntvalError, VerificationError
from .intval import (
    WitnessSpec,
    compare_null_ideals,
    hensel_split_quaternion,
    int_member,
    minimal_witness_exponent,
    nontriviality_check,
    null_ideal_field,
    split_obstruction,
    witness,
)
from .poly import RatPoly, format_poly, parse_poly, phi
from .rings import ZZ, enumeration_limit, factorize, make_fq

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

RESULT_SCHEMA = {
    "type": "object",
    "required": ["op", "inputs", "verdict", "certificate_poly", "counterexample", "enum_count", "wall_time_ms"],
    "additionalProperties": False,
    "properties": {
        "op": {"type": "string"},
        "inputs": {"type": "object"},
        "verdict": {"type": "string"},
        "certificate_poly": {"type": ["string", "null"]},
        "counterexample": {"type": ["string", "null"]},
        "enum_count": {"type": "integer", "minimum": 0},
        "wall_time_ms": {"type": "number", "minimum": 0},
    },
}


class Outcome:
    """What a command produced: a verdict plus the text lines to print."""

    def __init__(self, verdict, lines, *, ok=True, certificate=None, counterexample=None, enum_count=0):
        self.verdict = verdict
        self.lines = lines
        self.ok = ok
        self.certificate = certificate
        self.counterexample = counterexample
        self.enum_count = enum_count


# --- argument helpers -------------------------------------------------------

def _int_pair(text):
    try:
        a, b = (int(s) for s in text.split(","))
    except ValueError as exc:
        raise InputError(f"expected two integers 'a,b', got {text!r}") from exc
    return a, b


def _int_list(text):
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise InputError(f"expected a comma-separated integer list, got {text!r}") from exc


def _load_spec(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read algebra spec {path!r}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"algebra spec {path!r} is not valid JSON: {exc}") from exc
    return StructAlgebra.from_dict(data, name=os.path.basename(path))


def _resolve(name=None, spec=None, prime=None, ring=None) -> StructAlgebra:
    if (name is None) == (spec is None):
        raise InputError("give exactly one of --builtin or --spec")
    if spec is not None:
        A = _load_spec(spec)
        return A if ring is None else A.base_change(ring)
    return builtin(name, prime=prime, ring=ring)


def _resolve_ref(ref, prime):
    """--a/--b accept a builtin name or a path to an algebra-spec file."""
    if ref.endswith(".json") or os.path.exists(ref):
        return _resolve(spec=ref)
    return _resolve(name=ref, prime=prime)


def _prime_of(d):
    fac = factorize(d) if d >= 2 else {}
    return next(iter(fac)) if len(fac) == 1 else None


def _need_integral(A):
    if A.ring != ZZ:
        raise InputError(f"this command needs an algebra over Z, got one over {A.ring}")


# --- commands ---------------------------------------------------------------

def cmd_phi(args):
    f = phi(args.q, args.n)
    text = format_poly(f)
    return Outcome("OK", [text], certificate=text)


def cmd_nullideal(args):
    ring = None
    if args.fq is not None:
        p, e = _int_pair(args.fq)
        ring = make_fq(p, e)
    A = _resolve(args.builtin, args.spec, prime=ring.p if ring is not None else None, ring=ring)
    if A.ring == ZZ:
        raise InputError("an algebra over Z needs --fq p,e")
    res = null_ideal_field(A)
    text = format_poly(res.generator)
    lines = [text, f"lcm of {res.distinct_min_polys} distinct minimal polynomials over {res.enum_count} elements"]
    return Outcome("OK", lines, certificate=text, enum_count=res.enum_count)


def cmd_member(args):
    if (args.g is None) == (args.phi is None):
        raise InputError("give exactly one of --g or --phi")
    g = parse_poly(args.g) if args.g is not None else phi(*_int_pair(args.phi))
    A = _resolve(args.builtin, args.spec, prime=args.lift_prime or _prime_of(args.d))
    _need_integral(A)
    f = RatPoly(g, args.d)
    v = int_member(f, A)
    text = str(f)
    if v.member:
        lines = ["MEMBER", f"{text} maps A into A ({v.enum_count} elements of A/{v.modulus}A checked)"]
        return Outcome("MEMBER", lines, certificate=text, enum_count=v.enum_count)
    lines = ["NOT MEMBER", f"counterexample: {v.counterexample_text}",
             f"g(x) mod {v.modulus} = {v.value_text}"]
    return Outcome("NOT MEMBER", lines, ok=False, certificate=text,
                   counterexample=v.counterexample_text, enum_count=v.enum_count)


def cmd_witness(args):
    spec = WitnessSpec(args.p, args.e, args.n)
    f = witness(spec, verify=False)
    v = int_member(f, builtin(f"matrix:{args.n}"))
    text = str(f)
    if not v.member or f.is_integral():
        raise VerificationError(f"{text} does not verify on M_{args.n}(Z)")
    m = minimal_witness_exponent(spec)
    lines = [text, f"VERIFIED over {v.enum_count} elements",
             f"exponent t = {spec.t}; least verifying exponent {m}"]
    return Outcome("VERIFIED", lines, certificate=text, enum_count=v.enum_count)


def cmd_split(args):
    A = _resolve(args.builtin, args.spec, prime=args.p)
    _need_integral(A)
    why = split_obstruction(A, args.p)
    count = args.p**A.rank
    if why is None:
        return Outcome("SPLIT", ["SPLIT", f"A/{args.p}A is a product of copies of F_{args.p}"], enum_count=count)
    detail = f"{why['reason']} at {why['element']}" + (f" and {why['other']}" if "other" in why else "")
    return Outcome("NOT SPLIT", ["NOT SPLIT", detail], ok=False, counterexample=why["element"], enum_count=count)


def cmd_compare(args):
    ds = _int_list(args.ds)
    prime = args.lift_prime or (_prime_of(ds[0]) if ds else None)
    A = _resolve_ref(args.a, prime)
    B = _resolve_ref(args.b, prime)
    _need_integral(A)
    _need_integral(B)
    reports = compare_null_ideals(A, B, ds, args.degree_bound)
    lines = []
    sep = None
    count = 0
    for r in reports:
        count += r.d ** A.rank + r.d ** B.rank
        where = f"{r.method}, degree bound {r.bound}"
        if r.equal:
            lines.append(f"d={r.d}: EQUAL ({where})")
        else:
            s = format_poly(r.separator)
            lines.append(f"d={r.d}: UNEQUAL ({where}); separator {s} kills {r.kills} only")
            sep = sep or s
    equal = all(r.equal for r in reports)
    verdict = "EQUAL" if equal else "UNEQUAL"
    return Outcome(verdict, lines, ok=equal, counterexample=sep, enum_count=count)


def cmd_quatsplit(args):
    s = hensel_split_quaternion(args.p, args.k)
    lines = [f"a={s.a}, b={s.b}"]
    lines += [f"{name} -> {M}" for name, M in s.images.items()]
    lines.append("ISOMORPHISM VERIFIED")
    cert = "; ".join(f"{name}->{M}" for name, M in s.images.items())
    return Outcome("ISOMORPHISM VERIFIED", lines, certificate=cert, enum_count=16)


def cmd_nontrivial(args):
    A = _resolve(args.builtin, args.spec, prime=args.p)
    _need_integral(A)
    c = nontriviality_check(A, args.p)
    text = str(c.certificate)
    lines = ["NONTRIVIAL", f"certificate {text}", f"VERIFIED over {c.verdict.enum_count} elements"]
    return Outcome("NONTRIVIAL", lines, certificate=text, enum_count=c.verdict.enum_count)


# --- parser -----------------------------------------------------------------

def _common(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False), help="emit a JSON verdict")
    parser.add_argument("--max-enum", type=int, default=default(None), metavar="N",
                        help="exhaustive-enumeration bound (default 10^7)")
    parser.add_argument("--seed", type=int, default=default(0), help="seed recorded with the run")


def _algebra_args(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--builtin", help="builtin algebra name, e.g. matrix:2, zi, centralizer:2,2")
    g.add_argument("--spec", help="path to an algebra-spec JSON file")


def build_parser():
    parser = argparse.ArgumentParser(prog="intvalg", description="Integer-valued polynomials on Z-algebras.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _common(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("phi", cmd_phi, "expand phi_{q,n} over Z")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)

    p = add("nullideal", cmd_nullideal, "null ideal generator of a finite algebra over F_q")
    _algebra_args(p)
    p.add_argument("--fq", help="field F_q as 'p,e'")

    p = add("member", cmd_member, "is g/d integer-valued on A?")
    p.add_argument("--g", help="numerator polynomial")
    p.add_argument("--phi", help="use phi_{q,n} as numerator, given as 'q,n'")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lift-prime", type=int, help="residue prime for builtin centralizers over Z")
    _algebra_args(p)

    p = add("witness", cmd_witness, "witness phi_{p,n}^e / p^e for M_n(Z)")
    p.add_argument("p", type=int)
    p.add_argument("e", type=int)
    p.add_argument("n", type=int)

    p = add("split", cmd_split, "is A/pA a product of copies of F_p?")
    _algebra_args(p)
    p.add_argument("--p", type=int, required=True)

    p = add("compare", cmd_compare, "compare null ideals of A/dA and B/dB")
    p.add_argument("--a", required=True, help="builtin name or spec path")
    p.add_argument("--b", required=True, help="builtin name or spec path")
    p.add_argument("--ds", required=True, help="comma-separated moduli")
    p.add_argument("--degree-bound", type=int, help="degree bound for prime-power moduli")
    p.add_argument("--lift-prime", type=int, help="residue prime for builtin centralizers over Z")

    p = add("quatsplit", cmd_quatsplit, "explicit quaternion splitting mod p^k")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int)

    p = add("nontrivial", cmd_nontrivial, "nontriviality certificate at p")
    _algebra_args(p)
    p.add_argument("--p", type=int, required=True)
    return parser


def _inputs(args):
    skip = {"func", "json", "command"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def _emit(args, op, outcome, verdict, elapsed, out, err_text=None):
    if args.json:
        rec = {
            "op": op,
            "inputs": _inputs(args),
            "verdict": verdict,
            "certificate_poly": outcome.certificate if outcome else None,
            "counterexample": outcome.counterexample if outcome else None,
            "enum_count": outcome.enum_count if outcome else 0,
            "wall_time_ms": round(elapsed * 1000, 3),
        }
        print(json.dumps(rec), file=out)
    elif outcome is not None:
        for line in outcome.lines:
            print(line, file=out)
    if err_text is not None:
        print(f"error: {err_text}", file=sys.stderr)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.max_enum is not None and args.max_enum < 1:
        print("error: --max-enum must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    start = time.perf_counter()
    outcome, code, err = None, EXIT_OK, None
    try:
        with enumeration_limit(args.max_enum or 10**7):
            outcome = args.func(args)
        code = EXIT_OK if outcome.ok else EXIT_NEGATIVE
        verdict = outcome.verdict
    except (EnumerationTooLarge, DegreeTooLarge) as exc:
        code, verdict, err = EXIT_CAP, "ENUMERATION CAP", f"{type(exc).__name__}: {exc}"
    except VerificationError as exc:
        code, verdict, err = EXIT_NEGATIVE, "VERIFICATION FAILED", f"{type(exc).__name__}: {exc}"
    except (InputError, ValueError, ZeroDivisionError) as exc:
        code, verdict, err = EXIT_INPUT, "INPUT ERROR", f"{type(exc).__name__}: {exc}"
    except IntvalError as exc:
        code, verdict, err = EXIT_INPUT, "ERROR", f"{type(exc).__name__}: {exc}"
    _emit(args, args.command, outcome, verdict, time.perf_counter() - start, out, err)
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
