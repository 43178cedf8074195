"""Command-line frontend.

Subcommands: semigroup, hstar, bounds, ghw, improved, curve, verify.
Exit codes: 0 success, 1 domain error (error class name on stderr), 2 usage.
Flags never change numeric results, only formatting.
"""

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import evalcode, oracle
from .errors import AgbError, SchemaError
from .generic_bound import CodeChain
from .hstar import HStar
from .semigroup import NumericalSemigroup


def _parse_gens(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad generator list: {text!r}")


def _emit(payload: dict, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines(payload):
            print(line)


def _resolve_hstar(parser: argparse.ArgumentParser, args) -> HStar:
    S = NumericalSemigroup.from_generators(args.gens)
    mode = args.mode
    if mode in ("equiv-divisor", "isometry-dual"):
        if args.n is None:
            parser.error(f"--n is required for mode {mode}")
        if mode == "equiv-divisor":
            return HStar.from_equiv_divisor(S, args.n)
        return HStar.from_isometry_dual(S, args.n)
    if args.file is None:
        parser.error(f"--file is required for mode {mode}")
    try:
        with open(args.file, encoding="utf-8") as fh:
            obj = json.load(fh)
        n = int(obj["n"])
        payload = ([int(m) for m in obj["members"]] if mode == "explicit"
                   else [int(x) for x in obj["ell"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed input file {args.file}: {exc}") from exc
    if args.n is not None and args.n != n:
        parser.error(f"--n {args.n} conflicts with n={n} from {args.file}")
    if mode == "explicit":
        return HStar.from_explicit(S, n, payload)
    return HStar.from_abundance(S, n, payload)


def _add_hstar_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--gens", type=_parse_gens, required=True,
                     help="comma-separated semigroup generators")
    sub.add_argument("--n", type=int, default=None, help="code length")
    sub.add_argument("--mode", required=True,
                     choices=["equiv-divisor", "isometry-dual", "explicit",
                              "abundance"])
    sub.add_argument("--file", default=None,
                     help="JSON input for explicit/abundance modes")
    sub.add_argument("--json", action="store_true")


# -- handlers -----------------------------------------------------------


def _cmd_semigroup(args) -> int:
    S = NumericalSemigroup.from_generators(args.gens)
    payload = {
        "generators": list(S.generators),
        "genus": S.genus,
        "gaps": list(S.gaps),
        "frobenius": S.frobenius,
        "symmetric": S.is_symmetric(),
    }
    if args.up_to is not None:
        payload["elements"] = S.elements_up_to(args.up_to)

    def text(p):
        yield f"generators: {','.join(str(g) for g in p['generators'])}"
        yield f"genus: {p['genus']}"
        yield f"gaps: {' '.join(str(l) for l in p['gaps']) or '-'}"
        yield f"frobenius: {p['frobenius']}"
        yield f"symmetric: {p['symmetric']}"
        if "elements" in p:
            yield f"elements: {' '.join(str(m) for m in p['elements'])}"

    _emit(payload, args.json, text)
    return 0


def _cmd_hstar(parser, args) -> int:
    hs = _resolve_hstar(parser, args)
    payload = {
        "n": hs.n,
        "mode": hs.mode.value,
        "members": list(hs.members),
        "isometry_dual": hs.is_isometry_dual(),
        "pi": hs.pi_value(),
    }

    def text(p):
        yield f"n: {p['n']}"
        yield f"mode: {p['mode']}"
        yield f"members: {' '.join(str(m) for m in p['members'])}"
        yield f"isometry_dual: {p['isometry_dual']}"
        yield f"pi: {p['pi']}"

    _emit(payload, args.json, text)
    return 0


def _cmd_bounds(parser, args) -> int:
    hs = _resolve_hstar(parser, args)
    table = bounds_mod.bound_table(hs)
    iso = hs.is_isometry_dual()
    rows = []
    for row in table.rows:
        item = {"i": row.i, "m_i": row.m, "lambda_count": row.lambda_count,
                "d_star": row.d_star, "goppa": row.goppa}
        if iso:
            item["d_ord"] = row.d_ord
        rows.append(item)
    payload = {"n": hs.n, "mode": hs.mode.value, "rows": rows}

    def text(p):
        head = f"{'i':>4} {'m_i':>5} {'lambda':>7} {'d_star':>7} {'goppa':>6}"
        if iso:
            head += f" {'d_ord':>6}"
        yield head
        for r in p["rows"]:
            line = (f"{r['i']:>4} {r['m_i']:>5} {r['lambda_count']:>7} "
                    f"{r['d_star']:>7} {r['goppa']:>6}")
            if iso:
                line += f" {r['d_ord']:>6}"
            yield line

    _emit(payload, args.json, text)
    return 0


def _cmd_ghw(parser, args) -> int:
    hs = _resolve_hstar(parser, args)
    value = bounds_mod.ghw_bound(hs, args.i, args.r, node_cap=args.node_cap)
    payload = {"r": args.r, "i": args.i, "bound": value}

    def text(p):
        yield f"r: {p['r']}"
        yield f"i: {p['i']}"
        yield f"bound: {p['bound']}"

    _emit(payload, args.json, text)
    return 0


def _cmd_improved(parser, args) -> int:
    hs = _resolve_hstar(parser, args)
    prof = bounds_mod.improved_profile(hs, args.delta)
    payload = {"delta": prof.delta, "dimension": prof.dimension,
               "monotone": prof.monotone, "indices": list(prof.indices)}

    def text(p):
        yield f"delta: {p['delta']}"
        yield f"dimension: {p['dimension']}"
        yield f"monotone: {p['monotone']}"
        yield f"indices: {' '.join(str(i) for i in p['indices'])}"

    _emit(payload, args.json, text)
    return 0


def _cmd_curve(parser, args) -> int:
    if args.emit_matrix and args.m is None:
        parser.error("--emit-matrix requires --m")
    table = evalcode.hermitian_table(args.q0)
    payload = {
        "curve": "hermitian",
        "q0": args.q0,
        "p": table.field.p,
        "k": table.field.k,
        "n": table.n,
        "genus": table.genus,
        "generators": list(table.semigroup.generators),
    }
    if args.emit_table:
        evalcode.save_table(table, args.emit_table)
        payload["table_file"] = args.emit_table
    if args.m is not None:
        c = evalcode.code(table, args.m)
        payload["m"] = args.m
        payload["dimension"] = c.dimension
        if args.emit_matrix:
            from .gf import save_matrix
            save_matrix(c.matrix, args.emit_matrix)
            payload["matrix_file"] = args.emit_matrix

    def text(p):
        for key in ("curve", "q0", "p", "k", "n", "genus"):
            yield f"{key}: {p[key]}"
        yield f"generators: {','.join(str(g) for g in p['generators'])}"
        for key in ("table_file", "m", "dimension", "matrix_file"):
            if key in p:
                yield f"{key}: {p[key]}"

    _emit(payload, args.json, text)
    return 0


def _cmd_verify(args) -> int:
    checks = run_verification(args.q0, max_dim=args.max_dim, ghw_r=args.ghw)
    all_ok = all(c["ok"] for c in checks)
    if args.json:
        print(json.dumps({"checks": checks, "all_ok": all_ok}, indent=2))
    else:
        for c in checks:
            mark = "ok  " if c["ok"] else "FAIL"
            print(f"{mark} {c['name']}: {c['detail']}")
        print(f"{'all checks passed' if all_ok else 'SOME CHECKS FAILED'}")
    return 0 if all_ok else 1


def run_verification(q0: int, max_dim: int | None = None,
                     ghw_r: int | None = None,
                     budget: oracle.SearchBudget | None = None) -> list[dict]:
    """Cross-check every bound against brute force on a built-in curve.

    Returns one record per inequality checked.  Used by ``agb verify`` and
    directly from the test suite.
    """
    budget = budget or oracle.SearchBudget.from_env()
    checks = []

    def record(name, ok, detail):
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    table = evalcode.hermitian_table(q0)
    hs = evalcode.empirical_hstar(table)
    ref = HStar.from_equiv_divisor(table.semigroup, table.n)
    record("hstar-matches-construction", hs == ref,
           f"measured jumps {list(hs.members)}")

    chain = CodeChain(table.field, evalcode.chain_matrix(table).data)
    profile = bounds_mod.lambda_profile(hs)
    q = table.field.q
    cap_dim = max_dim if max_dim is not None else table.n

    dims_checked = 0
    for m in range(table.top_order + 1):
        c = evalcode.code(table, m)
        dim = c.dimension
        if dim == 0 or dim > cap_dim or q ** dim > budget.max_codewords:
            continue
        d_true = oracle.min_distance(c.matrix, budget)
        ds = profile.d_star(dim)
        gb = chain.generic_bound(dim)
        record(f"dstar-m{m}", d_true >= ds,
               f"dim {dim}: true {d_true} >= bound {ds}")
        record(f"generic-m{m}", d_true >= gb,
               f"dim {dim}: true {d_true} >= bound {gb}")
        if m < table.n:
            record(f"goppa-m{m}", d_true >= table.n - m,
                   f"true {d_true} >= {table.n - m}")
        dims_checked += 1

    if ghw_r:
        for m in hs.members:
            c = evalcode.code(table, m)
            dim = c.dimension
            if dim == 0 or dim > cap_dim:
                continue
            for r in range(1, min(ghw_r, dim) + 1):
                if oracle.gaussian_binomial(dim, r, q) > budget.max_subspaces:
                    continue
                dr = oracle.weight_hierarchy(c.matrix, r, budget)
                bound = bounds_mod.ghw_bound(hs, dim, r)
                record(f"ghw-m{m}-r{r}", dr >= bound,
                       f"dim {dim}: true {dr} >= bound {bound}")

    for delta in range(1, hs.n + 1):
        mat = evalcode.improved_generators(table, delta)
        if mat.nrows == 0 or mat.nrows > cap_dim:
            continue
        if q ** mat.nrows > budget.max_codewords:
            continue
        d_true = oracle.min_distance(mat, budget)
        record(f"improved-delta{delta}", d_true >= delta,
               f"dim {mat.nrows}: true {d_true} >= designed {delta}")

    x = oracle.find_isometry_vector(chain)
    if hs.is_isometry_dual():
        ok = x is not None
        detail = f"witness {list(x)}" if ok else "no witness found"
        record("isometry-witness", ok, detail)
        if ok:
            try:
                evalcode.biorthogonal_adjust(table, x)
                record("biorthogonal-adjust", True,
                       "pairing pattern holds for all rows")
            except AgbError as exc:
                record("biorthogonal-adjust", False, str(exc))
    else:
        record("isometry-witness", x is None,
               "correctly absent" if x is None else f"unexpected witness {x}")
    return checks


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agb",
        description="Order-type bounds for one-point evaluation codes, "
                    "computed from numerical-semigroup data.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_sg = subs.add_parser("semigroup", help="semigroup invariants")
    p_sg.add_argument("--gens", type=_parse_gens, required=True)
    p_sg.add_argument("--up-to", type=int, default=None, dest="up_to")
    p_sg.add_argument("--json", action="store_true")

    p_hs = subs.add_parser("hstar", help="construct and validate a jump set")
    _add_hstar_flags(p_hs)

    p_b = subs.add_parser("bounds", help="per-index bound table")
    _add_hstar_flags(p_b)

    p_g = subs.add_parser("ghw", help="generalized-weight bound")
    _add_hstar_flags(p_g)
    p_g.add_argument("--r", type=int, required=True)
    p_g.add_argument("--i", type=int, required=True)
    p_g.add_argument("--node-cap", type=int, default=bounds_mod.DEFAULT_NODE_CAP,
                     dest="node_cap")

    p_i = subs.add_parser("improved", help="improved-code profile")
    _add_hstar_flags(p_i)
    p_i.add_argument("--delta", type=int, required=True)

    p_c = subs.add_parser("curve", help="built-in evaluation tables")
    p_c.add_argument("family", choices=["hermitian"])
    p_c.add_argument("--q0", type=int, required=True)
    p_c.add_argument("--emit-table", default=None, dest="emit_table")
    p_c.add_argument("--m", type=int, default=None)
    p_c.add_argument("--emit-matrix", default=None, dest="emit_matrix")
    p_c.add_argument("--json", action="store_true")

    p_v = subs.add_parser("verify", help="brute-force cross-validation report")
    p_v.add_argument("family", choices=["hermitian"])
    p_v.add_argument("--q0", type=int, required=True)
    p_v.add_argument("--max-dim", type=int, default=None, dest="max_dim")
    p_v.add_argument("--ghw", type=int, default=None)
    p_v.add_argument("--json", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "semigroup":
            return _cmd_semigroup(args)
        if args.command == "hstar":
            return _cmd_hstar(parser, args)
        if args.command == "bounds":
            return _cmd_bounds(parser, args)
        if args.command == "ghw":
            return _cmd_ghw(parser, args)
        if args.command == "improved":
            return _cmd_improved(parser, args)
        if args.command == "curve":
            return _cmd_curve(parser, args)
        if args.command == "verify":
            return _cmd_verify(args)
        parser.error(f"unknown command {args.command}")
    except AgbError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
