"""Command line: ``abmw reduce | mul | star | basis | verify | cell-form``.

Exit codes: 0 success, 1 a verification failed, 2 parse error,
3 rewriting budget exceeded (or a cycle), 4 unsupported size.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import affine_bmw as bmw
from . import affine_hecke as hecke
from .errors import BudgetExceeded, CycleDetected, ParseError, Unsupported
from .scalars import ScalarError
from .zbrauer import DiagramError

EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET, EXIT_UNSUPPORTED = 1, 2, 3, 4


def _field_arg(text: str):
    if text in ("exact", "generic"):
        return "exact", None
    if text in ("prime", "both"):
        return text, None
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("--field takes exact, prime, both or a prime number") from None
    if p < 5 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise argparse.ArgumentTypeError(f"{p} is not a usable prime")
    return "prime", p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, default=2, help="number of strands")
    common.add_argument("--budget", type=int, default=None, help="rewriting step budget per product")
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--algebra", choices=("bmw", "hecke"), default="bmw")

    ap = argparse.ArgumentParser(prog="abmw", description="Normal forms and cell data for affine BMW and Hecke algebras.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("reduce", parents=[common], help="normal form of a word")
    p.add_argument("word")

    p = sub.add_parser("mul", parents=[common], help="product of two elements")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("star", parents=[common], help="image under the involution")
    p.add_argument("elem")

    p = sub.add_parser("basis", parents=[common], help="list basis monomials T_D of rank s")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-L", type=int, default=0, help="label bound")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("target", choices=("bmw-cell", "hecke-cell", "props", "basis-count", "bootstrap"))
    p.add_argument("-s", type=int, default=None, help="rank for hecke-cell")
    p.add_argument("-L", type=int, default=1)
    p.add_argument("-M", type=int, default=1)
    p.add_argument("--axioms", default="abc")
    p.add_argument("--field", type=_field_arg, default=("both", None))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--random-b", type=int, default=20, help="random B-elements per cell")
    p.add_argument("--timing", action="store_true", help="include wall-clock times (output is no longer reproducible)")

    p = sub.add_parser("cell-form", parents=[common], help="bilinear form phi of one cell")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--cell", default=None, help="Hecke cell name (top, bot, ...; partitions accepted)")
    p.add_argument("-L", type=int, default=1)
    p.add_argument("-M", type=int, default=0)
    p.add_argument("--field", type=_field_arg, default=("exact", None))
    p.add_argument("--seed", type=int, default=0)
    return ap


def _set_budget(args) -> list:
    """Apply --budget; returns (engine, old budget) pairs to restore."""
    if args.budget is None:
        return []
    if args.budget <= 0:
        raise ParseError("--budget must be positive")
    engines = [hecke.HeckeEngine.get(args.n)]
    if args.algebra == "bmw" and 1 <= args.n <= bmw.MAX_N:
        engines.append(bmw.BmwEngine.get(args.n))
    saved = [(e, e.budget) for e in engines]
    for e in engines:
        e.budget = args.budget
    return saved


def _parse_elem(args, text: str):
    if args.algebra == "hecke":
        return hecke.parse_hecke(text, args.n)
    if args.n > bmw.MAX_N:
        raise Unsupported(f"the normal-form engine supports n <= {bmw.MAX_N}")
    return bmw.parse_element(text, args.n)


def _emit(args, x) -> None:
    if args.format == "json":
        print(json.dumps(x.to_json(), sort_keys=True))
    elif args.format == "latex":
        print(x.to_latex() if hasattr(x, "to_latex") else x.to_text())
    else:
        print(x.to_text())


def _cmd_reduce(args) -> int:
    _emit(args, _parse_elem(args, args.word))
    return 0


def _cmd_mul(args) -> int:
    a, b = _parse_elem(args, args.left), _parse_elem(args, args.right)
    _emit(args, a * b)
    return 0


def _cmd_star(args) -> int:
    a = _parse_elem(args, args.elem)
    _emit(args, hecke.h_star(a) if args.algebra == "hecke" else bmw.b_star(a))
    return 0


def _cmd_basis(args) -> int:
    if args.n > bmw.MAX_N:
        raise Unsupported(f"the normal-form engine supports n <= {bmw.MAX_N}")
    mons = bmw.enumerate_monomials(args.n, args.s, args.L)
    if args.format == "json":
        print(json.dumps([{"word": bmw.monomial_text(m), "diagram": bmw.diagram_of(m).to_json()} for m in mons]))
    else:
        for m in mons:
            w = bmw.monomial_latex(m) if args.format == "latex" else bmw.monomial_text(m)
            print(f"{w}\t{bmw.diagram_of(m).to_text()}")
        print(f"# {len(mons)} monomials", file=sys.stderr)
    return 0


def _print_reports(args, reports: List[dict]) -> None:
    if not args.timing:
        reports = [{k: v for k, v in r.items() if k not in ("timing", "seconds")} for r in reports]
    if args.format == "json":
        print(json.dumps(reports, indent=1, default=str))
        return
    for r in reports:
        name = r.get("check") or r.get("name")
        status = r.get("status") or ("pass" if r.get("ok") else "fail")
        where = f" cell={r['cell']}" if r.get("cell") else ""
        extra = f" ({r['reason']})" if r.get("reason") else ""
        secs = r.get("timing", r.get("seconds"))
        when = f" {secs}s" if secs is not None else ""
        print(f"{status.upper():7} {name}{where} [{r.get('field', '-')}]{when}{extra}")
        for cex in r.get("counterexamples", r.get("failures", []))[:5]:
            print(f"        {cex}")


def _cmd_verify(args) -> int:
    from . import cellular, props
    mode, p = args.field
    if args.target == "basis-count":
        if args.n > bmw.MAX_N:
            raise Unsupported(f"the normal-form engine supports n <= {bmw.MAX_N}")
        r = props.ordinary_closure(args.n)
        if args.format == "json":
            print(json.dumps(r))
        else:
            print(f"{r['count']} label-zero monomials, (2n-1)!! = {r['expected']}, closed: {r['ok']}")
        return 0 if r["ok"] else EXIT_FAIL
    if args.target == "props":
        if args.n > bmw.MAX_N:
            raise Unsupported(f"the normal-form engine supports n <= {bmw.MAX_N}")
        reports = props.suite(args.n, args.trials, args.seed)
        _print_reports(args, reports)
        return 0 if all(r["ok"] for r in reports) else EXIT_FAIL
    if args.target == "bootstrap":
        from .certificates import check_catalog
        res = check_catalog()
        reports = [{"name": r.name, "ok": r.ok, "seconds": round(r.seconds, 3),
                    "failures": [] if r.ok else [r.message]} for r in res]
        _print_reports(args, reports)
        return 0 if all(r.ok for r in res) else EXIT_FAIL
    window = cellular.Window(args.L, args.M)
    if args.target == "hecke-cell":
        ranks = [args.s] if args.s is not None else [0, 1, 2]
        reports = []
        for s in ranks:
            reports += cellular.verify("hecke", s, window, mode, args.seed, args.random_b, args.axioms, p=p)
    else:
        reports = cellular.verify("bmw", args.n, window, mode, args.seed, args.random_b, args.axioms, p=p)
    _print_reports(args, reports)
    return 0 if cellular.all_passed(reports) else EXIT_FAIL


_CELL_ALIASES = {"(2)": "top", "(1,1)": "bot", "()": "0", "(1)": "1", "empty": "0"}


def _cmd_cell_form(args) -> int:
    from . import cellular
    mode, p = args.field
    F = cellular.make_field("prime" if mode == "both" else mode, **({"p": p} if p else {}), seed=args.seed)
    layer = cellular.make_layer(args.algebra, args.n if args.algebra == "bmw" else args.s, F)
    cells = [c for c in layer.cells() if c[0] == args.s]
    if not cells:
        raise Unsupported(f"no cell of rank {args.s} for {layer.name}")
    name = _CELL_ALIASES.get(args.cell, args.cell) if args.cell else cells[0][1]
    cell = (args.s, name)
    if cell not in cells:
        raise ParseError(f"unknown cell {args.cell!r}; choose from {[c[1] for c in cells]}")
    form = cellular.cell_form(layer, cell, cellular.Window(args.L, args.M), seed=args.seed)
    rows = []
    for (i, j), val in sorted(form.values.items()):
        rows.append({"T": layer.index_text(cell, form.index[i]), "S": layer.index_text(cell, form.index[j]),
                     "phi": {layer.b_text(cell, m): F.text(c) for m, c in val.items()}})
    sym = cellular.form_symmetric(layer, form)
    if args.format == "json":
        print(json.dumps({"cell": list(cell), "entries": rows, "problems": form.problems, "symmetric": sym}, indent=1))
    else:
        for r in rows:
            print(f"phi({r['T']}, {r['S']}) = " + " + ".join(f"({v})*{k}" for k, v in r["phi"].items()))
        print(f"# {len(rows)} nonzero entries, symmetric: {sym}, problems: {len(form.problems)}")
    return 0 if not form.problems and sym else EXIT_FAIL


_COMMANDS = {"reduce": _cmd_reduce, "mul": _cmd_mul, "star": _cmd_star, "basis": _cmd_basis,
             "verify": _cmd_verify, "cell-form": _cmd_cell_form}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    saved = []
    try:
        saved = _set_budget(args)
        return _COMMANDS[args.cmd](args)
    except (ParseError, ScalarError, DiagramError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceeded, CycleDetected) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except Unsupported as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    finally:
        for eng, old in saved:
            eng.budget = old


if __name__ == "__main__":
    sys.exit(main())
