"""Command line front end.

Subcommands:

* poincare        polynomial of a subvariety (closed product form, cell
                  enumeration, or both with an equality verdict)
* verify          run identity and classification checks across subsets
* cells           list torus fixed points with their cell dimensions
* special         list or count the special subsets of [n-1]
* fixed-quadrics  basis and nondegeneracy of the fixed-quadric space of
                  one block size

Exit codes: 0 success, 1 a requested check or verdict failed, 2 invalid
input, 3 the S_n-enumeration cap was exceeded (raise it with --max-n).
Output is deterministic: the same invocation produces the same bytes
regardless of --jobs.
"""

from __future__ import annotations

import argparse
import json
import math
import multiprocessing
import os
import sys

from quadrics.cells import (
    NotMinimalRepError,
    SubsetViolationError,
    descent_characterization_check,
    fixed_points,
    fixed_points_full_variety,
    full_variety_orbit_sum,
    per_orbit_closed_form_check,
    per_orbit_sum,
    poincare_sum,
    verify_km,
)
from quadrics.nilfix import (
    fixed_quadric_space,
    fixed_system_rows,
    infinitesimal_fixed_condition,
    regular_nilpotent,
    regularity_classifier,
    row_echelon_rank,
)
from quadrics.parabolic import (
    NotSpecialError,
    SimpleSubset,
    enumerate_special,
    minimal_coset_rep_count,
)
from quadrics.qpoly import (
    InexactDivisionError,
    QPolynomial,
    height_identity_check,
    is_palindromic,
    product_formula,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_CAP = 3

ALL_CHECKS = (
    "km",
    "descent",
    "closed-form",
    "duality",
    "euler",
    "height",
    "regularity",
    "fixed-quadrics",
)
# checks that walk all of S_n and therefore respect the --max-n cap
ENUMERATING_CHECKS = {"km", "descent", "closed-form", "duality", "euler"}

FORMAT_ENV_VAR = "QUADRICS_FORMAT"


class CapExceededError(Exception):
    pass


def _check_cap(n: int, max_n: int) -> None:
    if n > max_n:
        raise CapExceededError(
            f"n={n} exceeds the enumeration cap max_n={max_n}; "
            f"pass --max-n {n} to acknowledge the cost"
        )


def _parse_subset(text: str, n: int) -> SimpleSubset:
    if text.strip().lower() == "none":
        return SimpleSubset(n, ())
    try:
        members = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse subset {text!r}; expected e.g. 1,3 or none")
    return SimpleSubset(n, members)


def _resolve_format(args: argparse.Namespace) -> str:
    if args.format:
        return args.format
    env = os.environ.get(FORMAT_ENV_VAR, "").strip().lower()
    if env in ("text", "json", "csv"):
        return env
    return "text"


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _pmap(fn, items, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(fn, items)


def _subset_str(members) -> str:
    return "{" + ",".join(str(i) for i in members) + "}"


# --- poincare ----------------------------------------------------------------

def _orbit_coeffs(task) -> list[int]:
    n, k_members, i_members = task
    k = SimpleSubset(n, k_members)
    if i_members is None:
        return list(full_variety_orbit_sum(k).coeffs)
    return list(per_orbit_sum(k, SimpleSubset(n, i_members)).coeffs)


def _cells_polynomial(n: int, subset, jobs: int) -> QPolynomial:
    if subset is None:
        tasks = [(n, k.members, None) for k in enumerate_special(n)]
    else:
        tasks = [(n, k.members, subset.members) for k in subset.subsets()]
    total = QPolynomial()
    for coeffs in _pmap(_orbit_coeffs, tasks, jobs):
        total = total + QPolynomial(coeffs)
    return total


def cmd_poincare(args: argparse.Namespace) -> int:
    n = args.n
    subset = _parse_subset(args.subset, n) if args.subset is not None else None
    method = args.method or ("both" if subset is not None else "cells")
    if subset is None and method != "cells":
        raise ValueError(
            "the full variety (no --subset) has no closed product form; use --method cells"
        )
    if subset is not None and not subset.is_special():
        raise NotSpecialError(f"{subset} contains consecutive members")
    if method in ("cells", "both"):
        _check_cap(n, args.max_n)

    product = product_formula(subset) if method in ("product", "both") else None
    cells_poly = (
        _cells_polynomial(n, subset, args.jobs) if method in ("cells", "both") else None
    )

    if method == "both":
        verdict = "ok" if product == cells_poly else "mismatch"
    else:
        verdict = "ok"
    shown = cells_poly if cells_poly is not None else product
    assert shown is not None

    fmt = _resolve_format(args)
    if fmt == "json":
        doc = {
            "n": n,
            "subset": list(subset.members) if subset is not None else None,
            "method": method,
            "coeffs": shown.coeff_strings(),
            "degree": shown.degree,
            "euler": str(shown.evaluate_at_one()),
            "verdict": verdict,
        }
        _emit(args, json.dumps(doc, indent=2))
    elif fmt == "csv":
        subset_field = ";".join(str(i) for i in subset.members) if subset is not None else "full"
        lines = [
            "n,subset,method,degree,euler,verdict,coeffs",
            ",".join(
                [
                    str(n),
                    subset_field,
                    method,
                    str(shown.degree),
                    str(shown.evaluate_at_one()),
                    verdict,
                    ";".join(shown.coeff_strings()),
                ]
            ),
        ]
        _emit(args, "\n".join(lines))
    else:
        lines = [f"n={n} subset={subset if subset is not None else 'full'}"]
        if product is not None:
            lines.append(f"product: {product}")
        if cells_poly is not None:
            lines.append(f"cells: {cells_poly}")
        lines.append(f"degree: {shown.degree}")
        lines.append(f"euler: {shown.evaluate_at_one()}")
        lines.append(f"verdict: {verdict}")
        _emit(args, "\n".join(lines))
    return EXIT_OK if verdict == "ok" else EXIT_CHECK_FAILED


# --- verify --------------------------------------------------------------------

def _verify_one(item) -> bool:
    check, n, payload = item
    if check == "km":
        return verify_km(SimpleSubset(n, payload))
    if check == "descent":
        i_set = SimpleSubset(n, payload)
        return all(descent_characterization_check(k, i_set) for k in i_set.subsets())
    if check == "closed-form":
        i_set = SimpleSubset(n, payload)
        return all(per_orbit_closed_form_check(k, i_set) for k in i_set.subsets())
    if check == "duality":
        i_set = SimpleSubset(n, payload)
        poly = poincare_sum(i_set)
        return is_palindromic(poly) and poly.degree == n * (n - 1) // 2 + len(i_set)
    if check == "euler":
        i_set = SimpleSubset(n, payload)
        size = len(i_set)
        numerator = math.factorial(n) * 3**size
        if numerator % 2**size:
            return False
        expected = numerator // 2**size
        count = sum(minimal_coset_rep_count(k) for k in i_set.subsets())
        return (
            product_formula(i_set).evaluate_at_one()
            == poincare_sum(i_set).evaluate_at_one()
            == count
            == expected
        )
    if check == "height":
        return height_identity_check(n)
    if check == "regularity":
        i_set = SimpleSubset(n, payload)
        return regularity_classifier(i_set).regular == i_set.is_special()
    if check == "fixed-quadrics":
        m = payload
        space = fixed_quadric_space(m)
        e = regular_nilpotent(m)
        if not all(
            infinitesimal_fixed_condition(e, b).is_zero() for b in space.basis
        ):
            return False
        rows = fixed_system_rows(m)
        ncols = m * (m + 1) // 2
        forward = row_echelon_rank(rows)
        backward = row_echelon_rank(rows, column_order=range(ncols - 1, -1, -1))
        return forward == backward and space.dimension == ncols - forward
    raise ValueError(f"unknown check {check!r}")


def _verify_items(n: int, checks, subset) -> list[tuple[str, int, object, str]]:
    items: list[tuple[str, int, object, str]] = []
    for check in checks:
        if check == "height":
            items.append((check, n, None, f"n={n}"))
        elif check == "fixed-quadrics":
            for m in range(1, n + 1):
                items.append((check, n, m, f"m={m}"))
        elif check == "regularity":
            if subset is not None:
                universe = [subset.members]
            else:
                everything = SimpleSubset(n, range(1, n))
                universe = [s.members for s in everything.subsets()]
            for members in universe:
                items.append((check, n, members, f"I={_subset_str(members)}"))
        else:
            if subset is not None:
                if not subset.is_special():
                    raise NotSpecialError(f"{subset} contains consecutive members")
                universe = [subset.members]
            else:
                universe = [s.members for s in enumerate_special(n)]
            for members in universe:
                items.append((check, n, members, f"I={_subset_str(members)}"))
    return items


def cmd_verify(args: argparse.Namespace) -> int:
    n = args.n
    if args.checks.strip().lower() == "all":
        checks = list(ALL_CHECKS)
    else:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        for c in checks:
            if c not in ALL_CHECKS:
                raise ValueError(f"unknown check {c!r}; choose from {', '.join(ALL_CHECKS)}")
    if any(c in ENUMERATING_CHECKS for c in checks):
        _check_cap(n, args.max_n)
    subset = _parse_subset(args.subset, n) if args.subset is not None else None

    items = _verify_items(n, checks, subset)
    results = _pmap(_verify_one, [item[:3] for item in items], args.jobs)
    passed = sum(1 for ok in results if ok)
    failed = len(results) - passed

    fmt = _resolve_format(args)
    if fmt == "json":
        doc = {
            "n": n,
            "checks": checks,
            "results": [
                {"check": item[0], "label": item[3], "ok": ok}
                for item, ok in zip(items, results)
            ],
            "passed": passed,
            "failed": failed,
            "verdict": "ok" if failed == 0 else "fail",
        }
        _emit(args, json.dumps(doc, indent=2))
    elif fmt == "csv":
        lines = ["check,label,ok"]
        for item, ok in zip(items, results):
            lines.append(f"{item[0]},{item[3]},{'pass' if ok else 'FAIL'}")
        _emit(args, "\n".join(lines))
    else:
        lines = [
            f"{item[0]} {item[3]}: {'pass' if ok else 'FAIL'}"
            for item, ok in zip(items, results)
        ]
        lines.append(f"result: {passed} passed, {failed} failed")
        _emit(args, "\n".join(lines))
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


# --- cells ---------------------------------------------------------------------

def cmd_cells(args: argparse.Namespace) -> int:
    n = args.n
    _check_cap(n, args.max_n)
    subset = _parse_subset(args.subset, n) if args.subset is not None else None
    if subset is not None:
        records = fixed_points(subset)
    else:
        records = fixed_points_full_variety(n)

    fmt = _resolve_format(args)
    if fmt == "json":
        doc = {
            "n": n,
            "subset": list(subset.members) if subset is not None else None,
            "records": [
                {
                    "K": list(rec.k.members),
                    "w": list(rec.w.images),
                    "R": list(rec.r),
                    "dim_X": rec.dim_x,
                    "dim_XI": rec.dim_xi,
                }
                for rec in records
            ],
        }
        _emit(args, json.dumps(doc, indent=2))
    elif fmt == "csv":
        lines = ["K,w,R,dim_X,dim_XI"]
        for rec in records:
            k_field = ";".join(str(i) for i in rec.k.members)
            r_field = ";".join(str(i) for i in rec.r)
            xi_field = "" if rec.dim_xi is None else str(rec.dim_xi)
            lines.append(f"{k_field},{rec.w},{r_field},{rec.dim_x},{xi_field}")
        _emit(args, "\n".join(lines))
    else:
        lines = []
        for rec in records:
            parts = [
                f"K={rec.k}",
                f"w={rec.w}",
                f"R={_subset_str(rec.r)}",
                f"dim_X={rec.dim_x}",
            ]
            if rec.dim_xi is not None:
                parts.append(f"dim_XI={rec.dim_xi}")
            lines.append(" ".join(parts))
        lines.append(f"total: {len(records)} fixed points")
        _emit(args, "\n".join(lines))
    return EXIT_OK


# --- special ---------------------------------------------------------------------

def cmd_special(args: argparse.Namespace) -> int:
    n = args.n
    subsets = enumerate_special(n)
    fmt = _resolve_format(args)
    if fmt == "json":
        doc: dict[str, object] = {"n": n, "count": len(subsets)}
        if not args.count:
            doc["subsets"] = [list(s.members) for s in subsets]
        _emit(args, json.dumps(doc, indent=2))
    elif fmt == "csv":
        if args.count:
            _emit(args, "count\n" + str(len(subsets)))
        else:
            lines = ["I"] + [";".join(str(i) for i in s.members) for s in subsets]
            _emit(args, "\n".join(lines))
    else:
        if args.count:
            _emit(args, str(len(subsets)))
        else:
            _emit(args, "\n".join(str(s) for s in subsets))
    return EXIT_OK


# --- fixed-quadrics -----------------------------------------------------------------

def cmd_fixed_quadrics(args: argparse.Namespace) -> int:
    m = args.block
    if m < 1:
        raise ValueError("block size must be at least 1")
    space = fixed_quadric_space(m)
    fmt = _resolve_format(args)
    if fmt == "json":
        doc = {
            "block": m,
            "dimension": space.dimension,
            "nondegenerate": space.has_nondegenerate,
            "basis": [
                [[str(x) for x in row] for row in mat.entries] for mat in space.basis
            ],
        }
        _emit(args, json.dumps(doc, indent=2))
    elif fmt == "csv":
        lines = [
            "block,dimension,nondegenerate",
            f"{m},{space.dimension},{'yes' if space.has_nondegenerate else 'no'}",
        ]
        _emit(args, "\n".join(lines))
    else:
        lines = [
            f"block size {m}: dimension {space.dimension}, "
            f"nondegenerate member: {'yes' if space.has_nondegenerate else 'no'}"
        ]
        for idx, mat in enumerate(space.basis):
            lines.append(f"basis[{idx}]:")
            lines.append(str(mat))
        _emit(args, "\n".join(lines))
    return EXIT_OK


# --- entry point -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadrics",
        description="Exact Poincare polynomials and regularity checks for the "
        "variety of complete quadrics and its special subvarieties.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default=None,
        help=f"output format (default: ${FORMAT_ENV_VAR} or text)",
    )
    common.add_argument("--out", metavar="PATH", help="write the report to a file")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument(
        "--max-n",
        type=int,
        default=9,
        dest="max_n",
        help="cap on n for commands that enumerate S_n (default 9)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poincare", parents=[common], help="compute a Poincare polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subset", help="comma-separated members, or none for the empty subset; omit for the full variety")
    p.add_argument("--method", choices=("product", "cells", "both"))
    p.set_defaults(func=cmd_poincare)

    v = sub.add_parser("verify", parents=[common], help="run identity and classification checks")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--subset", help="restrict per-subset checks to one subset")
    v.add_argument(
        "--checks",
        default="all",
        help="comma-separated list from: " + ", ".join(ALL_CHECKS) + " (default all)",
    )
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cells", parents=[common], help="list torus fixed points and cell dimensions")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--subset", help="target subvariety; omit for the full variety")
    c.set_defaults(func=cmd_cells)

    s = sub.add_parser("special", parents=[common], help="list or count special subsets of [n-1]")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--count", action="store_true", help="print only the count")
    s.set_defaults(func=cmd_special)

    f = sub.add_parser(
        "fixed-quadrics",
        parents=[common],
        help="fixed-quadric space of one block size",
    )
    f.add_argument("--block", type=int, required=True)
    f.set_defaults(func=cmd_fixed_quadrics)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (
        NotSpecialError,
        SubsetViolationError,
        NotMinimalRepError,
        InexactDivisionError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
