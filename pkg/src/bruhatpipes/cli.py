"""Command-line entry point: ``bruhatpipes {enum,schubert,map,verify} ...``.

Exit codes: 0 success, 1 input outside a map's domain or failed check,
2 malformed parameters or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from .bumpless import (
    BpdGrid, FlaggedTableau, analyze_bpd, chain_bpd, chain_bpd_inverse, enumerate_bpd, phi,
    psi, psi_inverse,
)
from .chains import (
    BruhatChain, ChainError, enumerate_compatible_chains, gamma_exponent, growth, flip, unflip,
)
from .hybrid import HpdGrid, chain_tau, chain_tau_inverse, enumerate_hpd
from .perm import format_perm, make_permutation, parse_perm
from .pipedreams import PdGrid, analyze_pd, chain_pd, chain_pd_inverse, enumerate_pd
from .poly import Polynomial, monomial, schubert, schubert_transition
from .verify import CHECKS, run_check


class UsageError(Exception):
    pass


def _perm_arg(text: str):
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _gamma_arg(text: str):
    try:
        parts = text.replace(",", " ").split() if ("," in text or " " in text) else list(text)
        return make_permutation(int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad gamma {text!r}: {exc}") from None


def _check_gamma(w, gamma):
    if gamma is None:
        raise UsageError("--gamma is required")
    if len(gamma) != len(w) - 1:
        raise UsageError(f"gamma must be a permutation of 1..{len(w) - 1}")


def _check_tau(w, tau):
    if tau is None:
        raise UsageError("--tau is required")
    if len(tau) != len(w) or set(tau.upper()) - {"P", "B"}:
        raise UsageError(f"tau must be a P/B word of length {len(w)}")


def _emit(obj, out):
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


# -- enum --------------------------------------------------------------------------

def _enum_objects(args) -> list:
    w = args.perm
    kind = args.kind
    if kind == "pd":
        return sorted(enumerate_pd(w), key=lambda P: sorted(P.crosses))
    if kind == "bpd":
        return sorted(enumerate_bpd(w), key=lambda D: D.rows)
    if kind == "hpd":
        _check_tau(w, args.tau)
        return sorted(enumerate_hpd(w, args.tau.upper()), key=lambda H: H.rows)
    if kind == "chains":
        _check_gamma(w, args.gamma)
        if len(w) < 2:
            return [BruhatChain((w,))]
        return sorted(enumerate_compatible_chains(w, args.gamma), key=lambda C: C.perms)
    if kind == "ft":
        return sorted((phi(D) for D in enumerate_bpd(w)), key=lambda T: repr(T.rows))
    raise UsageError(f"unknown kind {kind}")


def _describe(kind: str, obj, args) -> dict:
    if kind == "chains":
        return {"kind": "chain", "perms": obj.to_json(), "weight": list(gamma_exponent(obj, args.gamma))}
    d = obj.to_json()
    if kind == "pd":
        d["weight"] = list(analyze_pd(obj)[1])
    elif kind == "bpd":
        d["weight"] = list(analyze_bpd(obj)[1])
    elif kind == "ft":
        d["weight"] = list(obj.weight())
    return d


def _ascii(kind: str, obj) -> str:
    if kind == "chains":
        return "\n".join(format_perm(p) for p in obj.perms)
    return obj.ascii()


def cmd_enum(args, out) -> int:
    objs = _enum_objects(args)
    if args.format == "count":
        out.write(f"{len(objs)}\n")
    elif args.format == "ascii":
        out.write("\n\n".join(_ascii(args.kind, o) for o in objs) + ("\n" if objs else ""))
    else:
        for o in objs:
            _emit(_describe(args.kind, o, args), out)
    return 0


# -- schubert ----------------------------------------------------------------------

def cmd_schubert(args, out) -> int:
    w = args.perm
    method = args.method
    if method == "dd":
        p = schubert(w)
    elif method == "transition":
        p = schubert_transition(w)
    elif method == "pd":
        p = Polynomial()
        for P in enumerate_pd(w):
            p = p + monomial(analyze_pd(P)[1])
    elif method == "bpd":
        p = Polynomial()
        for D in enumerate_bpd(w):
            p = p + monomial(analyze_bpd(D)[1])
    else:
        _check_gamma(w, args.gamma)
        p = Polynomial()
        if len(w) < 2:
            p = Polynomial.const(1)
        for C in enumerate_compatible_chains(w, args.gamma) if len(w) >= 2 else ():
            p = p + monomial(gamma_exponent(C, args.gamma))
    if args.json:
        _emit({"perm": format_perm(w), "method": method, "polynomial": p.to_json()}, out)
    else:
        out.write(f"{p}\n")
    return 0


# -- map ---------------------------------------------------------------------------

def _chain_in(obj):
    return BruhatChain.from_json(obj)


def _chain_out(C: BruhatChain):
    return C.to_json()


def _growth_in(obj):
    if not isinstance(obj, dict):
        raise ValueError("growth input must be an object")
    return (int(obj["k1"]), int(obj["k2"]), BruhatChain.from_json(obj["c1"]), BruhatChain.from_json(obj["c2"]))


def _growth_fn(data):
    k1, k2, c1, c2 = data
    c2p, c1p = growth(k1, k2, c1, c2)
    return (k2, k1, c2p, c1p)


def _growth_out(data):
    k1, k2, c1, c2 = data
    return {"k1": k1, "k2": k2,
            "c1": [format_perm(p) for p in c1.perms], "c2": [format_perm(p) for p in c2.perms]}


# name -> (parse input, forward, serialize output, parse output, inverse)
MapSpec = tuple[Callable, Callable, Callable, Callable, Callable | None]


def _maps(tau: str | None) -> dict[str, MapSpec]:
    def need_tau():
        if tau is None:
            raise UsageError("--tau is required for the inverse of chain-tau")
        return tau.upper()

    return {
        "chain-pd": (PdGrid.from_json, chain_pd, _chain_out, _chain_in, chain_pd_inverse),
        "chain-bpd": (BpdGrid.from_json, chain_bpd, _chain_out, _chain_in, chain_bpd_inverse),
        "chain-tau": (HpdGrid.from_json, chain_tau, _chain_out, _chain_in,
                      lambda C: chain_tau_inverse(C, need_tau())),
        "flip": (_chain_in, flip, _chain_out, _chain_in, unflip),
        "unflip": (_chain_in, unflip, _chain_out, _chain_in, flip),
        "growth": (_growth_in, _growth_fn, _growth_out, _growth_in, _growth_fn),
        "phi": (BpdGrid.from_json, phi, lambda T: T.to_json(), FlaggedTableau.from_json,
                lambda T: chain_bpd_inverse(psi_inverse(T))),
        "psi": (_chain_in, psi, lambda T: T.to_json(), FlaggedTableau.from_json, psi_inverse),
    }


def _to_json(x) -> Any:
    if isinstance(x, tuple) and len(x) == 4 and isinstance(x[2], BruhatChain):
        return _growth_out(x)
    if isinstance(x, BruhatChain):
        return x.to_json()
    return x.to_json()


def _read_inputs(stream) -> list:
    text = stream.read()
    if not text.strip():
        raise ValueError("no input on stdin")
    try:
        return [json.loads(text)]
    except json.JSONDecodeError:
        return [json.loads(line) for line in text.splitlines() if line.strip()]


def cmd_map(args, inp, out) -> int:
    spec = _maps(args.tau)[args.name]
    parse_in, fwd, ser_out, parse_out, inv = spec
    if args.inverse:
        parse_in, fwd, parse_out, inv = parse_out, inv, parse_in, fwd
    try:
        docs = _read_inputs(inp)
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"bad JSON input: {exc}") from None
    status = 0
    for doc in docs:
        try:
            x = parse_in(doc)
        except (ValueError, KeyError, TypeError, AttributeError) as exc:
            raise UsageError(f"input does not match the schema of {args.name}: {exc}") from None
        try:
            y = fwd(x)
        except (ChainError, ValueError) as exc:
            sys.stderr.write(f"error: {exc}\n")
            return 1
        if args.roundtrip:
            try:
                back = inv(y)
            except (ChainError, ValueError) as exc:
                sys.stderr.write(f"error: round trip failed: {exc}\n")
                return 1
            ok = _to_json(back) == _to_json(x)
            _emit({"ok": ok, "image": _to_json(y)}, out)
            if not ok:
                status = 1
        else:
            _emit(_to_json(y), out)
    return status


# -- verify ------------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    if args.check not in CHECKS:
        raise UsageError(f"unknown check {args.check!r}; choose from {', '.join(CHECKS)}")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    try:
        report = run_check(args.check, args.n, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(report, out)
    return 0 if not report["failures"] and report["cases"] > 0 else 1


# -- parser ------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bruhatpipes", description="Schubert combinatorics via Bruhat chains.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enum", help="enumerate pipedreams, BPDs, HPDs, chains or flagged tableaux")
    e.add_argument("kind", choices=["pd", "bpd", "hpd", "chains", "ft"])
    e.add_argument("--perm", type=_perm_arg, required=True)
    e.add_argument("--tau")
    e.add_argument("--gamma", type=_gamma_arg)
    e.add_argument("--format", choices=["json", "ascii", "count"], default="json")

    s = sub.add_parser("schubert", help="compute a Schubert polynomial")
    s.add_argument("--perm", type=_perm_arg, required=True)
    s.add_argument("--method", choices=["dd", "transition", "pd", "bpd", "chain"], default="dd")
    s.add_argument("--gamma", type=_gamma_arg)
    s.add_argument("--json", action="store_true")

    m = sub.add_parser("map", help="apply a bijection to JSON read from stdin")
    m.add_argument("name", choices=["chain-pd", "chain-bpd", "chain-tau", "flip", "unflip", "growth", "phi", "psi"])
    m.add_argument("--inverse", action="store_true")
    m.add_argument("--roundtrip", action="store_true")
    m.add_argument("--tau")

    v = sub.add_parser("verify", help="run a named exhaustive check")
    v.add_argument("check")
    v.add_argument("--n", type=int)
    v.add_argument("--jobs", type=int, default=1)
    return p


def main(argv: list[str] | None = None, stdin=None, stdout=None) -> int:
    inp = stdin if stdin is not None else sys.stdin
    out = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "enum":
            return cmd_enum(args, out)
        if args.command == "schubert":
            return cmd_schubert(args, out)
        if args.command == "map":
            return cmd_map(args, inp, out)
        return cmd_verify(args, out)
    except UsageError as exc:
        sys.stderr.write(f"bruhatpipes: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
