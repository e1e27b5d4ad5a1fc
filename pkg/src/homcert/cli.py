"""Command-line driver.

Exit codes: 0 verified/solvable, 1 checked-and-false/unsolvable, 2 bad input,
3 free-action violation, 4 I/O failure. Every command ends with one
machine-readable line starting with ``#summary``.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

import numpy as np

from . import kernels
from .certificate import (
    build_A,
    build_B,
    build_K,
    certificate_vertices,
    check_lemma,
    check_theorem,
    odd_cycle_complex,
    pullback_dual_cochain,
    w1_power_representative,
)
from .cochains import OrbitCochain, orbit_rep, orbit_slice
from .errors import FreeActionError, InvalidArgumentError
from .gf2 import betti_mod2, coboundary_matrix, in_span_by_rank, indicator, rank, solve
from .graphs import (
    Involution,
    complete_graph,
    edge_graph,
    edge_swap_involution,
    format_edge_list,
    parse_graph_spec,
    reflection_involution,
)
from .hom import HomComplex

log = logging.getLogger("homcert")

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_NOT_FREE, EXIT_IO = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _require_rn(args, need_r: bool = True) -> None:
    if need_r and (args.r is None or args.r < 1):
        raise InvalidArgumentError("--r must be given and >= 1")
    if args.n is None or args.n < 3:
        raise InvalidArgumentError("--n must be given and >= 3")


def cmd_verify_lemma(args) -> int:
    _require_rn(args)
    r, n = args.r, args.n
    m = 2 * r + 1
    if args.v is not None and not 0 <= args.v < m:
        raise InvalidArgumentError(f"--v must lie in 0..{m - 1}")
    vertices = [args.v] if args.v is not None else list(range(m))
    ok_all = True
    for v in vertices:
        ok = check_lemma(v, r, n)
        ok_all &= ok
        print(
            f"v={v}: dB_v = A_(v-1) + A_(v+1) {'true' if ok else 'FALSE'}"
            f"  |B_v|={len(build_B(v, r, n))} |A_(v-1)|={len(build_A((v - 1) % m, r, n))}"
            f" |A_(v+1)|={len(build_A((v + 1) % m, r, n))}"
        )
    print(f"#summary r={r} n={n} vertices={len(vertices)} lemma={'ok' if ok_all else 'fail'}")
    return EXIT_OK if ok_all else EXIT_FALSE


def cmd_verify_theorem(args) -> int:
    _require_rn(args)
    report = check_theorem(args.r, args.n)
    print(report.to_text())
    print("#summary " + report.summary_line())
    return EXIT_OK if report.theorem_holds else EXIT_FALSE


def cmd_solve(args) -> int:
    n = args.n
    if args.edge_complex:
        _require_rn(args, need_r=False)
        hom, psi = HomComplex(edge_graph(), complete_graph(n)), edge_swap_involution()
        top = (1 << (n - 1)) - 1
        tau = (top, 1 << (n - 1))
        target = OrbitCochain(hom, psi, n - 2, frozenset([orbit_rep(hom, tau, psi)]))
        label = f"edge n={n}"
    else:
        _require_rn(args)
        hom, psi = odd_cycle_complex(args.r, n)
        target = w1_power_representative(args.r, n)
        label = f"r={args.r} n={n}"
    t0 = time.perf_counter()
    lower = orbit_slice(hom.slice(n - 3, jobs=args.jobs), psi)
    upper = orbit_slice(hom.slice(n - 2, jobs=args.jobs), psi)
    M = coboundary_matrix(lower, upper)
    b = indicator(target, upper)
    log.info("quotient coboundary %d x %d, nnz %d, built in %.2fs", M.rows, M.cols, M.nnz, time.perf_counter() - t0)
    x = solve(M, b, method=args.method)
    print(f"quotient coboundary {n - 3} -> {n - 2}: {M.rows} x {M.cols}, target has {int(b.sum())} orbits")
    fields = [label]
    if x is None:
        print("target is NOT a coboundary")
        fields.append("solvable=no")
    else:
        print(f"solver witness: {int(x.sum())} orbits (re-multiplied, matches target)")
        fields += ["solvable=yes", f"witness={int(x.sum())}"]
    if args.rank_check:
        member = in_span_by_rank(M, b, method=args.method)
        print(f"rank test: rank(M)={rank(M, args.method)}, membership {'confirmed' if member else 'refuted'}")
        fields.append(f"rank_member={'yes' if member else 'no'}")
    if not args.edge_complex:
        K = build_K(args.r, n)
        k_ok = bool(np.array_equal(M.matvec(indicator(K, lower)), b))
        print(f"explicit certificate K ({len(K)} orbits) satisfies dK = target: {k_ok}")
        fields.append(f"certificate={'ok' if k_ok else 'fail'}")
    print("#summary " + " ".join(fields))
    return EXIT_OK if x is not None else EXIT_FALSE


def _involution_for(spec: str, T, explicit: str | None) -> Involution:
    if explicit:
        try:
            perm = tuple(int(p) for p in explicit.split(","))
        except ValueError:
            raise InvalidArgumentError(f"bad --involution {explicit!r}") from None
        return Involution(perm)
    kind = spec.partition(":")[0]
    if kind == "edge":
        return edge_swap_involution()
    if kind == "cycle":
        return reflection_involution(T.vertex_count)
    raise InvalidArgumentError(f"no default involution for T={spec}; pass --involution")


def cmd_betti(args) -> int:
    T, G = parse_graph_spec(args.t), parse_graph_spec(args.g)
    psi = _involution_for(args.t, T, args.involution) if args.quotient else None
    betti = betti_mod2(T, G, psi, method=args.method, jobs=args.jobs)
    print(" ".join(map(str, betti)))
    print(f"#summary T={T} G={G} quotient={'yes' if psi else 'no'} betti={','.join(map(str, betti))}")
    return EXIT_OK


def cmd_fvector(args) -> int:
    T, G = parse_graph_spec(args.t), parse_graph_spec(args.g)
    fv = HomComplex(T, G).f_vector(jobs=args.jobs)
    print(" ".join(map(str, fv)))
    print(f"#summary T={T} G={G} fvector={','.join(map(str, fv))}")
    return EXIT_OK


def _export_payload(args) -> tuple[str, str]:
    if args.graph:
        g = parse_graph_spec(args.graph)
        return format_edge_list(g), f"graph={g}"
    if args.t or args.g:
        if not (args.t and args.g):
            raise InvalidArgumentError("--t and --g go together")
        hom = HomComplex(parse_graph_spec(args.t), parse_graph_spec(args.g))
        psi = None
    else:
        _require_rn(args)
        hom, psi = odd_cycle_complex(args.r, args.n)
    if args.cochain:
        if psi is None:
            raise InvalidArgumentError("--cochain needs --r/--n")
        r, n = args.r, args.n
        v = r if args.v is None else args.v
        builders = {
            "A": lambda: build_A(v, r, n),
            "B": lambda: build_B(v, r, n),
            "K": lambda: build_K(r, n),
            "w1": lambda: w1_power_representative(r, n),
            "pullback": lambda: pullback_dual_cochain(r, n),
        }
        c = builders[args.cochain]()
        return c.to_text(), f"cochain={args.cochain} dim={c.dimension} count={len(c)}"
    if not args.dim:
        raise InvalidArgumentError("--dim is required for slice or matrix export")
    if args.matrix:
        d = args.dim[0]
        lo, hi = hom.slice(d, jobs=args.jobs), hom.slice(d + 1, jobs=args.jobs)
        if args.quotient:
            if psi is None:
                raise InvalidArgumentError("--quotient export needs --r/--n")
            lo, hi = orbit_slice(lo, psi), orbit_slice(hi, psi)
        M = coboundary_matrix(lo, hi)
        return M.to_text(), f"matrix dim={d} rows={M.rows} cols={M.cols}"
    blocks, counts = [], []
    for d in args.dim:
        s = hom.slice(d, jobs=args.jobs)
        blocks.append(s.to_text())
        counts.append(f"{d}:{len(s)}")
    return "".join(blocks), "slices=" + ",".join(counts)


def cmd_export(args) -> int:
    text, what = _export_payload(args)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        dest = "-"
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            print(f"#summary export failed path={args.out}")
            return EXIT_IO
        dest = args.out
    print(f"#summary export {what} path={dest}", file=sys.stderr if dest == "-" else sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="homcert", description=__doc__.split("\n")[0])
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for cell enumeration")
    parser.add_argument("--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def rn(p, v=False):
        p.add_argument("--r", type=int)
        p.add_argument("--n", type=int)
        if v:
            p.add_argument("--v", type=int)

    p = sub.add_parser("verify-lemma", help="check dB_v = A_(v-1) + A_(v+1)")
    rn(p, v=True)
    p.set_defaults(func=cmd_verify_lemma)

    p = sub.add_parser("verify-theorem", help="check dK = q(A_r) on the quotient")
    rn(p)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("solve", help="find a coboundary preimage by GF(2) elimination")
    rn(p)
    p.add_argument("--edge-complex", action="store_true", help="use Hom(K_2, K_n)/Z_2 and the dual of tau")
    p.add_argument("--method", choices=["auto", "dense", "sparse"], default="auto")
    p.add_argument("--rank-check", action="store_true", help="also confirm by rank(M) == rank([M|b])")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("betti", help="mod-2 Betti numbers of Hom(T, G) or its quotient")
    p.add_argument("--t", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--quotient", action="store_true")
    p.add_argument("--involution", help="comma-separated vertex permutation of T")
    p.add_argument("--method", choices=["auto", "dense", "sparse"], default="auto")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("fvector", help="cell counts per dimension")
    p.add_argument("--t", required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("export", help="write slices, cochains, matrices or graphs as text")
    rn(p, v=True)
    p.add_argument("--t")
    p.add_argument("--g")
    p.add_argument("--dim", type=int, action="append")
    p.add_argument("--cochain", choices=["A", "B", "K", "w1", "pullback"])
    p.add_argument("--matrix", action="store_true", help="coboundary matrix from --dim to --dim + 1")
    p.add_argument("--quotient", action="store_true")
    p.add_argument("--graph", help="export a graph spec as an edge list")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    log.info("kernel backend: %s", kernels.BACKEND)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except InvalidArgumentError as exc:
        parser.print_usage(sys.stderr)
        print(f"homcert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FreeActionError as exc:
        print(f"homcert: free action violated: {exc}", file=sys.stderr)
        print("#summary free-action=violated")
        return EXIT_NOT_FREE


if __name__ == "__main__":
    sys.exit(main())
