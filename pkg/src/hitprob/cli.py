"""Command-line front end.

Results go to stdout, progress to stderr.  Exit codes: 0 success,
1 verification failure, 2 invalid input, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import List, Optional, Sequence

from hitprob.errors import CapacityError
from hitprob.filtration import (
    block_size,
    compute_block,
    dim_by_filtration,
    filtration_report,
    weight_dichotomy_check,
)
from hitprob.monomials import (
    format_monomial,
    format_weight,
    monomial_count,
    mu,
    omega_bar_kb,
    omega_kb,
    parse_monomial,
    parse_weight,
    weight_vector,
)
from hitprob.polynomials import Polynomial
from hitprob.quotient import (
    CACHE_ENV_VAR,
    DEFAULT_MAX_COLUMNS,
    compute_basis,
    normal_form_poly,
    split_basis,
    wood_filter,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_BAD_ARGS = 2
EXIT_CAPACITY = 3

# largest degree slice eliminated monolithically when --method auto;
# above this the blockwise path takes over (the hard cap --max-columns
# still bounds any single elimination)
AUTO_MONOLITHIC_COLUMNS = 50_000


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _choose_method(method: str, k: int, n: int) -> str:
    if method != "auto":
        return method
    if monomial_count(k, n) <= AUTO_MONOLITHIC_COLUMNS:
        return "monolithic"
    return "filtration"


def cmd_dim(args: argparse.Namespace) -> int:
    k, n = args.k, args.n
    method = _choose_method(args.method, k, n)
    if wood_filter(k, n):
        dim, method = 0, "wood"
    elif method == "monolithic":
        dim = compute_basis(k, n, max_columns=args.max_columns).dimension
    else:
        dim = dim_by_filtration(k, n, max_columns=args.max_columns)
    if args.format == "json":
        print(json.dumps({"k": k, "n": n, "dim": dim, "method": method}))
    else:
        print(dim)
    return EXIT_OK


def cmd_basis(args: argparse.Namespace) -> int:
    k, n = args.k, args.n
    if args.omega is not None:
        omega = parse_weight(args.omega)
        mons = compute_block(k, omega, max_columns=args.max_columns).admissibles
    else:
        mons = compute_basis(k, n, max_columns=args.max_columns).admissibles
    if args.zero:
        mons = [m for m in mons if 0 in m]
    elif args.plus:
        mons = [m for m in mons if 0 not in m]
    if args.format == "json":
        print(json.dumps({"k": k, "n": n, "count": len(mons),
                          "monomials": [list(m) for m in mons]}))
    else:
        for m in mons:
            print(format_monomial(m))
    _progress(f"{len(mons)} monomials")
    return EXIT_OK


def cmd_filtration(args: argparse.Namespace) -> int:
    reports = filtration_report(
        args.k, args.n, use_singer=not args.no_singer, max_columns=args.max_columns
    )
    if args.format == "json":
        print(json.dumps([
            {"omega": list(r.omega), "block_size": r.block_size,
             "rank": r.rank, "dim": r.dim, "method": r.method}
            for r in reports
        ]))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["omega", "block_size", "rank", "dim", "method"])
        for r in reports:
            rank = "" if r.rank is None else r.rank
            writer.writerow([format_weight(r.omega), r.block_size, rank,
                             r.dim, r.method])
    _progress(f"total dim {sum(r.dim for r in reports)}")
    return EXIT_OK


def cmd_normal_form(args: argparse.Namespace) -> int:
    text = open(args.input).read() if args.input else sys.stdin.read()
    f = Polynomial.from_text(text, args.k)
    if f.is_zero():
        print("0")
        return EXIT_OK
    basis = compute_basis(args.k, f.degree(), max_columns=args.max_columns)
    nf = normal_form_poly(basis, f)
    print(nf.to_text() if not nf.is_zero() else "0")
    return EXIT_OK


def cmd_kameko(args: argparse.Namespace) -> int:
    from hitprob.kameko import kameko_iso_check

    report = kameko_iso_check(args.k, args.m, max_columns=args.max_columns)
    print(json.dumps(report.to_dict()))
    return EXIT_OK


def cmd_morphism(args: argparse.Namespace) -> int:
    from hitprob.morphisms import IndexPair, p_monomial, phi, phi_sets

    if args.op in ("phi", "p"):
        if args.pair is None or args.monomial is None:
            _progress("phi/p need --pair and --monomial")
            return EXIT_BAD_ARGS
        pair = IndexPair.parse(args.pair)
        x = parse_monomial(args.monomial)
        if args.op == "phi":
            image = phi(pair, x)
            print("0" if image is None else format_monomial(image))
        else:
            out = p_monomial(pair, x)
            print(out.to_text() if not out.is_zero() else "0")
        return EXIT_OK
    # phi-sets over the admissible basis one variable down
    basis = compute_basis(args.k - 1, args.n, max_columns=args.max_columns)
    phi0, phiplus, both = phi_sets(basis.admissibles, args.k)
    print(json.dumps({
        "k": args.k, "n": args.n, "phi0": len(phi0), "phi_plus": len(phiplus),
        "phi": len(both),
    }))
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    basis = compute_basis(args.k, args.n, max_columns=args.max_columns)
    b0, bplus = split_basis(basis)
    payload = basis.to_dict()
    payload["zero_part"] = [list(m) for m in b0]
    payload["positive_part"] = [list(m) for m in bplus]
    blob = json.dumps(payload, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(blob + "\n")
        _progress(f"wrote {args.output}")
    else:
        print(blob)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _check(name: str, ok: bool, results: List[bool]) -> None:
    results.append(ok)
    print(f"{'PASS' if ok else 'FAIL'}  {name}")


def _verify_main(d_max: int, max_columns: int, results: List[bool]) -> None:
    from hitprob.tables import golden_bundle, load_golden

    table = load_golden()
    for d in range(1, min(d_max, 3) + 1):
        n = 4 * ((1 << d) - 1)
        t0 = time.time()
        basis = compute_basis(5, n, max_columns=max_columns)
        expected = golden_bundle(d, table)
        _progress(f"dim (QP_5)_{n} = {basis.dimension} in {time.time()-t0:.1f}s")
        _check(f"main d={d}: dim (QP_5)_{n} = {expected['total']}",
               basis.dimension == expected["total"], results)
        if d >= 2:
            top = sum(1 for m in basis.admissibles
                      if weight_vector(m) == omega_kb(5, d))
            bar = [m for m in basis.admissibles
                   if weight_vector(m) == omega_bar_kb(5, d)]
            bar0 = sum(1 for m in bar if 0 in m)
            ok = (top == expected["qp_omega"]
                  and bar0 == expected["qp0_bar"]
                  and len(bar) - bar0 == expected["b"])
            _check(f"main d={d}: split {expected['qp_omega']} + "
                   f"{expected['qp0_bar']} + {expected['b']}", ok, results)


def _verify_filtration(d_max: int, max_columns: int, results: List[bool]) -> None:
    from hitprob.tables import golden_bundle

    for d in range(2, d_max + 1):
        n = 4 * ((1 << d) - 1)
        expected = golden_bundle(d)
        t0 = time.time()
        dim = dim_by_filtration(5, n, max_columns=max_columns)
        _progress(f"filtration dim (QP_5)_{n} = {dim} in {time.time()-t0:.1f}s")
        _check(f"filtration d={d}: dim (QP_5)_{n} = {expected['total']}",
               dim == expected["total"], results)
        _check(f"filtration d={d}: weight dichotomy",
               weight_dichotomy_check(d), results)


def _verify_properties(results: List[bool]) -> None:
    import random

    from hitprob.kameko import kameko_down, kameko_up
    from hitprob.monomials import minimal_spike
    from hitprob.morphisms import IndexPair, f_i, p
    from hitprob.steenrod import sq

    rng = random.Random(7)

    def rand_poly(k: int, n: int, terms: int = 4) -> Polynomial:
        from hitprob.monomials import iter_compositions

        pool = list(iter_compositions(k, n))
        return Polynomial(k, rng.sample(pool, min(terms, len(pool))))

    ok = True
    for _ in range(25):
        f = rand_poly(3, rng.randrange(1, 9))
        g = rand_poly(3, rng.randrange(1, 9))
        i = rng.randrange(0, 7)
        total = Polynomial.zero(3)
        for a in range(i + 1):
            total = total + sq(a, f) * sq(i - a, g)
        ok &= sq(i, f * g) == total
    _check("Cartan formula on random products", ok, results)

    ok = all(sq(i, Polynomial.monomial((a,))).is_zero()
             for a in range(1, 12) for i in range(a + 1, a + 6))
    _check("instability: Sq^i vanishes above the degree", ok, results)

    def mu_brute(n: int) -> int:
        parts = [(1 << d) - 1 for d in range(1, n.bit_length() + 1)]
        best = {0: 0}
        for _ in range(n):
            nxt = dict(best)
            for v, c in best.items():
                for q in parts:
                    if v + q <= n and nxt.get(v + q, 99) > c + 1:
                        nxt[v + q] = c + 1
            if nxt == best:
                break
            best = nxt
        return best[n]

    ok = all(mu(n) == mu_brute(n) for n in range(1, 61))
    _check("mu recursion vs brute force (n <= 60)", ok, results)

    ok = True
    for _ in range(20):
        y = tuple(rng.randrange(0, 12) for _ in range(4))
        ok &= kameko_down(kameko_up(y)) == y
    _check("Kameko down-up round trip", ok, results)

    ok = True
    for pair in (IndexPair(1), IndexPair(2), IndexPair(1, (2,)), IndexPair(2, (3, 4))):
        for _ in range(10):
            f = rand_poly(3, rng.randrange(1, 8))
            ok &= p(pair, f_i(pair.i, f)) == f
    _check("p composed with f is the identity", ok, results)

    ok = True
    for n in (5, 11, 14, 20):
        z = minimal_spike(5, n)
        ok &= z is not None and sum(z) == n
    _check("minimal spikes exist where mu permits", ok, results)


def _verify_stretch(max_columns: int, results: List[bool]) -> None:
    from hitprob.tables import golden_bundle

    expected = golden_bundle(5)
    t0 = time.time()
    top = compute_block(5, omega_kb(5, 5), max_columns=max_columns).dimension
    bar = compute_block(5, omega_bar_kb(5, 5), max_columns=max_columns).dimension
    _progress(f"n=124 blocks in {time.time()-t0:.1f}s")
    _check(f"stretch d=5: top block dim {expected['qp_omega']}",
           top == expected["qp_omega"], results)
    _check("stretch d=5: bar block dim 620",
           bar == expected["qp0_bar"] + expected["b"], results)
    _check(f"stretch d=5: total {expected['total']}",
           top + bar == expected["total"], results)


def cmd_verify(args: argparse.Namespace) -> int:
    results: List[bool] = []
    suites = args.suite or ["main", "properties", "filtration"]
    for suite in suites:
        if suite == "main":
            _verify_main(args.d_max, args.max_columns, results)
        elif suite == "properties":
            _verify_properties(results)
        elif suite == "filtration":
            _verify_filtration(args.d_max, args.max_columns, results)
        elif suite == "stretch":
            _verify_stretch(args.max_columns, results)
        else:
            _progress(f"unknown suite {suite}")
            return EXIT_BAD_ARGS
    print(f"{sum(results)}/{len(results)} checks passed")
    return EXIT_OK if all(results) else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hitprob",
        description="Minimal generating sets of F2[x1..xk] over the Steenrod algebra",
        epilog=f"Set {CACHE_ENV_VAR} to checkpoint echelon bases on disk.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        p.add_argument("--k", type=int, required=True, help="number of variables")
        if need_n:
            p.add_argument("--n", type=int, required=True, help="degree")
        p.add_argument("--max-columns", type=int, default=DEFAULT_MAX_COLUMNS)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("dim", help="dimension of (QP_k)_n")
    common(p)
    p.add_argument("--method", choices=("auto", "monolithic", "filtration"),
                   default="auto")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("basis", help="admissible monomials of (QP_k)_n")
    common(p)
    p.add_argument("--omega", help="restrict to one weight block, e.g. 4,2,1")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--zero", action="store_true", help="only B0 (a zero exponent)")
    g.add_argument("--plus", action="store_true", help="only B+ (all positive)")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("filtration", help="per-weight-block dimensions")
    common(p)
    p.add_argument("--no-singer", action="store_true",
                   help="grade a full monolithic elimination instead")
    p.set_defaults(func=cmd_filtration)

    p = sub.add_parser("normal-form", help="admissible representative of [f]")
    common(p, need_n=False)
    p.add_argument("--input", help="polynomial file (default: stdin)")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("kameko", help="squaring-operation isomorphism report")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-columns", type=int, default=DEFAULT_MAX_COLUMNS)
    p.set_defaults(func=cmd_kameko)

    p = sub.add_parser("morphism", help="phi / p maps between variable counts")
    p.add_argument("--op", choices=("phi", "p", "phi-sets"), required=True)
    p.add_argument("--pair", help='index pair, e.g. "1;(2,3)"')
    p.add_argument("--monomial", help='exponents, e.g. "3 4 7"')
    p.add_argument("--k", type=int, help="ambient variables (phi-sets)")
    p.add_argument("--n", type=int, help="degree (phi-sets)")
    p.add_argument("--max-columns", type=int, default=DEFAULT_MAX_COLUMNS)
    p.set_defaults(func=cmd_morphism)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--suite", action="append",
                   choices=("main", "properties", "filtration", "stretch"),
                   help="repeatable; default: main, properties, filtration")
    p.add_argument("--d-max", type=int, default=3)
    p.add_argument("--max-columns", type=int, default=DEFAULT_MAX_COLUMNS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="dump a basis with its B0/B+ split as JSON")
    common(p)
    p.add_argument("--output", "-o", help="output file (default: stdout)")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        _progress(f"capacity: {exc}")
        return EXIT_CAPACITY
    except (ValueError, OSError) as exc:
        _progress(f"error: {exc}")
        return EXIT_BAD_ARGS


if __name__ == "__main__":
    sys.exit(main())
