"""Command-line interface.

Exit codes: 0 success, 1 mathematical domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .chute import build_chute_poset
from .exceptions import InvtabError
from .grassmann import (
    enumerate_reverse_ssyt, grassmannian_descent, inverse_grassmannian_to_flagged,
    inverse_shape, lambda_of, skew_schubert_G,
)
from .perm import Permutation, parse_permutation
from .pipedream import PipeDream, enumerate_RP, phi, phi_inverse
from .poly import schur_expand
from .schubert import schubert_dd, schubert_from_pipedreams, schubert_from_tableaux, stanley_truncated
from .tableau import InversionsTableau, enumerate_IT, enumerate_UIT
from .verify import SUITES, run_suite


def _perm(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _poly_out(f, as_json: bool) -> str:
    return _dump(f.to_json()) if as_json else str(f)


def cmd_schubert(args) -> str:
    method = {"dd": schubert_dd, "tableaux": schubert_from_tableaux,
              "pipedreams": schubert_from_pipedreams}[args.method]
    return _poly_out(method(args.w), args.json)


def cmd_enumerate(args) -> str:
    if args.what == "tableaux":
        items = enumerate_IT(args.w)
    elif args.what == "pipedreams":
        items = enumerate_RP(args.w)
    else:
        if args.max_entry is None:
            raise InvtabError("--max-entry is required for unbounded tableaux")
        items = enumerate_UIT(args.w, args.max_entry)
    return _dump([x.to_json() for x in items])


def cmd_bijection(args) -> str:
    try:
        data = json.loads(sys.stdin.read())
    except json.JSONDecodeError as exc:
        raise InvtabError(f"invalid JSON on stdin: {exc}")
    try:
        if args.dir == "pd2it":
            return _dump(phi(PipeDream.from_json(data)).to_json())
        T = InversionsTableau.from_json(data)
    except (KeyError, TypeError) as exc:
        raise InvtabError(f"malformed object: {exc}")
    if T not in enumerate_IT(T.permutation()):
        raise InvtabError("input is not an inversions tableau")
    return _dump(phi_inverse(T).to_json())


def cmd_stanley(args) -> str:
    return _poly_out(stanley_truncated(args.w, args.vars), args.json)


def cmd_grassmann(args) -> str:
    w = args.w
    k = grassmannian_descent(w)
    lam = lambda_of(w, k)
    shape, flags = inverse_shape(w, k)
    out = {
        "permutation": str(w),
        "k": k,
        "lambda": list(lam),
        "reverse_ssyt": [R.to_json() for R in enumerate_reverse_ssyt(lam, k)],
        "inverse": {
            "permutation": str(w.inverse()),
            "shape": list(shape),
            "flags": list(flags),
            "flagged_ssyt": sorted((inverse_grassmannian_to_flagged(T, w, k).to_json()
                                    for T in enumerate_IT(w.inverse())), key=_dump),
        },
    }
    return _dump(out)


def cmd_skew(args) -> str:
    G = skew_schubert_G(args.w, args.u, args.k)
    expansion = schur_expand(G, args.k)
    if args.json:
        return _dump({"polynomial": G.to_json(),
                      "schur_expansion": [[list(lam), c] for lam, c in expansion.items()]})
    parts = " + ".join(f"{c}*s{list(lam)}" if c != 1 else f"s{list(lam)}" for lam, c in expansion.items())
    return f"{G}\n= {parts or '0'}"


def cmd_poset(args) -> str:
    poset = build_chute_poset(args.w)
    return poset.to_dot() if args.format == "dot" else _dump(poset.to_json())


def cmd_verify(args) -> tuple:
    lines, failed = [], False
    for name, ok, detail in run_suite(args.n, args.suite):
        failed |= not ok
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail and not ok else ""))
    return "\n".join(lines), failed


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="invtab", description="Inversions tableaux and Schubert polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("schubert", help="Schubert polynomial of a permutation")
    s.add_argument("w", type=_perm)
    s.add_argument("--method", choices=["dd", "tableaux", "pipedreams"], default="dd")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_schubert)

    s = sub.add_parser("enumerate", help="list tableaux or pipe dreams as JSON")
    s.add_argument("w", type=_perm)
    s.add_argument("--what", choices=["tableaux", "pipedreams", "uit"], default="tableaux")
    s.add_argument("--max-entry", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("bijection", help="map a pipe dream or tableau read from stdin")
    s.add_argument("--dir", choices=["pd2it", "it2pd"], required=True)
    s.set_defaults(func=cmd_bijection)

    s = sub.add_parser("stanley", help="Stanley symmetric function in finitely many variables")
    s.add_argument("w", type=_perm)
    s.add_argument("--vars", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_stanley)

    s = sub.add_parser("grassmann", help="shape and tableaux of a Grassmannian permutation")
    s.add_argument("w", type=_perm)
    s.set_defaults(func=cmd_grassmann)

    s = sub.add_parser("skew", help="skew Schubert polynomial of two Grassmannian permutations")
    s.add_argument("w", type=_perm)
    s.add_argument("u", type=_perm)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_skew)

    s = sub.add_parser("poset", help="chute move poset")
    s.add_argument("w", type=_perm)
    s.add_argument("--format", choices=["dot", "json"], default="dot")
    s.set_defaults(func=cmd_poset)

    s = sub.add_parser("verify", help="run the property suites over S_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--suite", choices=["all"] + list(SUITES), default="all")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (InvtabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(result, tuple):
        text, failed = result
        print(text)
        return 1 if failed else 0
    print(result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
