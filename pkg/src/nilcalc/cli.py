"""Command-line surface: deterministic JSON/table output over all modules.

Exit codes: 0 success, 1 domain error (one machine-readable line on stderr,
``code: message``), 2 usage error.  Identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import CalcError, ParseError
from .exactlin import (
    ExactMatrix,
    jordan_type,
    matrix_from_json,
    matrix_to_json,
    unipotent_log,
)
from .moduli import ModuliInstance, enumerate_pairs, orbit_count, sigma_stratify
from .monodromy import (
    direct_sum_type,
    induced_type,
    spec_from_json,
    tensor_type,
    total_type,
)
from .partitions import (
    Partition,
    conjugate,
    dominates,
    join,
    jordan_matrix,
    make_partition,
    meet,
    min_element,
)
from .reducedmodel import ProductRingElem, regular_complement
from .stratification import (
    closure_test,
    complex_from_json,
    complex_to_json,
    factors_from_json,
    minimal_lift,
    mu_of_point,
    product_complex,
    stratum,
    validate,
)

# -- input helpers -------------------------------------------------------------


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from exc


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _partition_arg(text: str) -> Partition:
    doc = _loads(text)
    if not isinstance(doc, list) or any(not isinstance(v, int) for v in doc):
        raise ParseError(f"expected a JSON array of integers, got {text!r}")
    return make_partition(doc)


def _doc_arg(args, inline_attr: str):
    inline = getattr(args, inline_attr)
    if inline is not None:
        return _loads(inline)
    return _loads(_read_input(args.input))


def _complex_arg(args):
    return complex_from_json(_loads(_read_input(args.complex)))


# -- output helpers ------------------------------------------------------------


def _emit_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _aligned(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    ncols = max(len(r) for r in rows)
    widths = [
        max((len(r[i]) for r in rows if i < len(r)), default=0) for i in range(ncols)
    ]
    lines = [
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(r)).rstrip()
        for r in rows
    ]
    return "\n".join(lines)


def _partition_out(args, mu: Partition) -> str:
    if args.format == "json":
        return _emit_json(list(mu.parts))
    return " ".join(str(v) for v in mu.parts)


def _bool_out(args, value: bool) -> str:
    return "true" if value else "false"


def _scalar_str(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _matrix_out(args, m: ExactMatrix) -> str:
    if args.format == "json":
        return _emit_json(matrix_to_json(m))
    cells = [[_scalar_str(v) for v in row] for row in m.entries]
    if not cells:
        return ""
    widths = [max(len(r[j]) for r in cells) for j in range(m.cols)]
    return "\n".join(
        " ".join(cell.rjust(widths[j]) for j, cell in enumerate(row)) for row in cells
    )


def _matrix_compact(m: ExactMatrix) -> str:
    return ";".join(",".join(_scalar_str(v) for v in row) for row in m.entries)


# -- partition commands --------------------------------------------------------


def _cmd_partition_conjugate(args) -> str:
    return _partition_out(args, conjugate(_partition_arg(args.mu)))


def _cmd_partition_dominates(args) -> str:
    return _bool_out(args, dominates(_partition_arg(args.mu), _partition_arg(args.nu)))


def _cmd_partition_meet(args) -> str:
    return _partition_out(args, meet(_partition_arg(args.mu), _partition_arg(args.nu)))


def _cmd_partition_join(args) -> str:
    return _partition_out(args, join(_partition_arg(args.mu), _partition_arg(args.nu)))


def _cmd_partition_min(args) -> str:
    doc = _doc_arg(args, "set")
    if not isinstance(doc, list):
        raise ParseError("expected a JSON array of partitions")
    elems = []
    for item in doc:
        if not isinstance(item, list) or any(not isinstance(v, int) for v in item):
            raise ParseError("each member must be a JSON array of integers")
        elems.append(make_partition(item))
    result = min_element(elems)
    if result is None:
        return "null" if args.format == "json" else "absent"
    return _partition_out(args, result)


# -- jordan commands -----------------------------------------------------------


def _cmd_jordan_matrix(args) -> str:
    return _matrix_out(args, jordan_matrix(_partition_arg(args.mu)))


def _cmd_jordan_type(args) -> str:
    m = matrix_from_json(_doc_arg(args, "matrix"))
    return _partition_out(args, jordan_type(m))


def _cmd_jordan_log(args) -> str:
    m = matrix_from_json(_doc_arg(args, "matrix"))
    return _matrix_out(args, unipotent_log(m))


# -- monodromy commands ----------------------------------------------------------


def _cmd_monodromy_tensor(args) -> str:
    return _partition_out(
        args, tensor_type(_partition_arg(args.alpha), _partition_arg(args.beta))
    )


def _cmd_monodromy_dsum(args) -> str:
    return _partition_out(
        args, direct_sum_type(_partition_arg(args.alpha), _partition_arg(args.beta))
    )


def _cmd_monodromy_induce(args) -> str:
    return _partition_out(args, induced_type(_partition_arg(args.alpha), args.mult))


def _cmd_monodromy_total(args) -> str:
    doc = _doc_arg(args, "blocks")
    if not isinstance(doc, list):
        raise ParseError("expected a JSON array of {spec, alpha} pairs")
    blocks = []
    for item in doc:
        if not isinstance(item, dict) or "spec" not in item or "alpha" not in item:
            raise ParseError("each block needs 'spec' and 'alpha' fields")
        alpha = item["alpha"]
        if not isinstance(alpha, list) or any(not isinstance(v, int) for v in alpha):
            raise ParseError("'alpha' must be a JSON array of integers")
        blocks.append((spec_from_json(item["spec"]), make_partition(alpha)))
    return _partition_out(args, total_type(blocks))


# -- strat commands --------------------------------------------------------------


def _cmd_strat_validate(args) -> str:
    bad = validate(_complex_arg(args))
    if args.format == "json":
        return _emit_json({"ok": not bad, "violations": bad})
    if not bad:
        return "ok"
    return _aligned([["violation", pid] for pid in bad])


def _cmd_strat_stratum(args) -> str:
    ids = sorted(stratum(_complex_arg(args), _partition_arg(args.mu)))
    if args.format == "json":
        return _emit_json(ids)
    return "\n".join(ids)


def _cmd_strat_mu(args) -> str:
    return _partition_out(args, mu_of_point(_complex_arg(args), args.point))


def _cmd_strat_minimal_lift(args) -> str:
    cid = minimal_lift(_complex_arg(args), args.point)
    if args.format == "json":
        return _emit_json(cid)
    return cid


def _cmd_strat_closure(args) -> str:
    return _bool_out(
        args, closure_test(_complex_arg(args), args.point, _partition_arg(args.mu))
    )


def _cmd_strat_product(args) -> str:
    factors = factors_from_json(_loads(_read_input(args.input)))
    result = product_complex(factors, cap=args.cap)
    if args.format == "json":
        return _emit_json(complex_to_json(result))
    rows = [["n", str(result.n)]]
    for cid in sorted(result.components):
        rows.append(
            ["component", cid, ",".join(str(v) for v in result.components[cid])]
        )
    for pid in sorted(result.points):
        rows.append(["point", pid, ",".join(sorted(result.points[pid]))])
    return _aligned(rows)


# -- moduli commands --------------------------------------------------------------


def _moduli_instance(args) -> ModuliInstance:
    return ModuliInstance(
        q=args.q, r=args.r, p=args.p, a=getattr(args, "a", None), cap=args.cap
    )


def _cmd_moduli_enumerate(args) -> str:
    pairs = enumerate_pairs(_moduli_instance(args))
    if args.format == "json":
        return _emit_json(
            {
                "count": len(pairs),
                "pairs": [
                    {
                        "phi": matrix_to_json(phi)["entries"],
                        "sigma": matrix_to_json(sigma)["entries"],
                    }
                    for phi, sigma in pairs
                ],
            }
        )
    rows = [["count", str(len(pairs))]]
    rows.extend(
        [_matrix_compact(phi), _matrix_compact(sigma)] for phi, sigma in pairs
    )
    return _aligned(rows)


def _cmd_moduli_stratify(args) -> str:
    result = sigma_stratify(_moduli_instance(args))
    keyed = {
        _emit_json(list(mu.parts)): count for mu, count in result.buckets.items()
    }
    if args.format == "json":
        return _emit_json(
            {"total": result.total, "buckets": keyed, "residual": result.residual}
        )
    rows = [["bucket", key, str(keyed[key])] for key in sorted(keyed)]
    rows.append(["residual", "", str(result.residual)])
    rows.append(["total", "", str(result.total)])
    return _aligned(rows)


def _cmd_moduli_orbits(args) -> str:
    return str(orbit_count(_moduli_instance(args)))


# -- reduced commands --------------------------------------------------------------


def _cmd_reduced_complement(args) -> str:
    doc = _loads(args.coords)
    if not isinstance(doc, list) or any(not isinstance(v, int) for v in doc):
        raise ParseError("expected a JSON array of integers")
    s = regular_complement(ProductRingElem(tuple(doc)))
    if args.format == "json":
        return _emit_json(list(s.coords))
    return " ".join(str(v) for v in s.coords)


# -- parser ------------------------------------------------------------------------


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format", choices=("json", "table"), default="json", help="output format"
    )


def _leaf(group, name: str, func, help_text: str) -> argparse.ArgumentParser:
    sub = group.add_parser(name, help=help_text)
    sub.set_defaults(func=func)
    _add_format(sub)
    return sub


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilcalc",
        description="Exact partition-dominance, Jordan-type and stratification calculator.",
    )
    parser.add_argument("--version", action="version", version=f"nilcalc {__version__}")
    top = parser.add_subparsers(dest="command", required=True)

    part = top.add_parser("partition", help="dominance lattice operations").add_subparsers(
        dest="subcommand", required=True
    )
    sub = _leaf(part, "conjugate", _cmd_partition_conjugate, "conjugate a partition")
    sub.add_argument("--mu", required=True, help='partition, e.g. "[3,1]"')
    for name, func, help_text in (
        ("dominates", _cmd_partition_dominates, "test mu <= nu in dominance"),
        ("meet", _cmd_partition_meet, "greatest lower bound"),
        ("join", _cmd_partition_join, "least upper bound"),
    ):
        sub = _leaf(part, name, func, help_text)
        sub.add_argument("--mu", required=True)
        sub.add_argument("--nu", required=True)
    sub = _leaf(part, "min", _cmd_partition_min, "minimum of a set, if attained")
    src = sub.add_mutually_exclusive_group(required=True)
    src.add_argument("--set", help='JSON array of partitions, e.g. "[[3],[2,1]]"')
    src.add_argument("--input", help="path to a JSON file ('-' for stdin)")

    jordan = top.add_parser("jordan", help="nilpotent matrix operations").add_subparsers(
        dest="subcommand", required=True
    )
    sub = _leaf(jordan, "matrix", _cmd_jordan_matrix, "Jordan matrix of a partition")
    sub.add_argument("--mu", required=True)
    for name, func, help_text in (
        ("type", _cmd_jordan_type, "Jordan type of a nilpotent matrix"),
        ("log", _cmd_jordan_log, "exact logarithm of a unipotent matrix"),
    ):
        sub = _leaf(jordan, name, func, help_text)
        src = sub.add_mutually_exclusive_group(required=True)
        src.add_argument("--matrix", help="inline matrix JSON")
        src.add_argument("--input", help="path to a matrix JSON file ('-' for stdin)")

    mono = top.add_parser("monodromy", help="Jordan-type calculus").add_subparsers(
        dest="subcommand", required=True
    )
    for name, func, help_text in (
        ("tensor", _cmd_monodromy_tensor, "tensor (Kronecker-sum) type"),
        ("dsum", _cmd_monodromy_dsum, "direct-sum type"),
    ):
        sub = _leaf(mono, name, func, help_text)
        sub.add_argument("--alpha", required=True)
        sub.add_argument("--beta", required=True)
    sub = _leaf(mono, "induce", _cmd_monodromy_induce, "replicated (induced) type")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--mult", type=int, required=True)
    sub = _leaf(mono, "total", _cmd_monodromy_total, "total type over tame blocks")
    src = sub.add_mutually_exclusive_group(required=True)
    src.add_argument("--blocks", help="inline JSON array of {spec, alpha} pairs")
    src.add_argument("--input", help="path to a JSON file ('-' for stdin)")

    strat = top.add_parser("strat", help="component complex queries").add_subparsers(
        dest="subcommand", required=True
    )
    sub = _leaf(strat, "validate", _cmd_strat_validate, "check the minimal-lift contract")
    sub.add_argument("--complex", required=True, help="complex JSON file ('-' for stdin)")
    sub = _leaf(strat, "stratum", _cmd_strat_stratum, "components with label <= mu")
    sub.add_argument("--complex", required=True)
    sub.add_argument("--mu", required=True)
    sub = _leaf(strat, "mu", _cmd_strat_mu, "minimal label of a point")
    sub.add_argument("--complex", required=True)
    sub.add_argument("--point", required=True)
    sub = _leaf(strat, "minimal-lift", _cmd_strat_minimal_lift, "component attaining the point's label")
    sub.add_argument("--complex", required=True)
    sub.add_argument("--point", required=True)
    sub = _leaf(strat, "closure", _cmd_strat_closure, "is the point in the closure stratum of mu")
    sub.add_argument("--complex", required=True)
    sub.add_argument("--point", required=True)
    sub.add_argument("--mu", required=True)
    sub = _leaf(strat, "product", _cmd_strat_product, "product of labeled complexes")
    sub.add_argument("--input", required=True, help="factors JSON file ('-' for stdin)")
    sub.add_argument("--cap", type=int, default=10_000)

    moduli = top.add_parser("moduli", help="finite-field pair enumeration").add_subparsers(
        dest="subcommand", required=True
    )
    for name, func, help_text, needs_a in (
        ("enumerate", _cmd_moduli_enumerate, "enumerate relation pairs", False),
        ("stratify", _cmd_moduli_stratify, "bucket pairs by unipotent type", True),
        ("orbits", _cmd_moduli_orbits, "count simultaneous-conjugacy orbits", False),
    ):
        sub = _leaf(moduli, name, func, help_text)
        sub.add_argument("--q", type=int, required=True)
        sub.add_argument("--r", type=int, required=True)
        sub.add_argument("--p", type=int, required=True)
        if needs_a:
            sub.add_argument("--a", type=int, required=True)
        sub.add_argument("--cap", type=int, default=2**24)

    reduced = top.add_parser("reduced", help="product-of-domains ring model").add_subparsers(
        dest="subcommand", required=True
    )
    sub = _leaf(reduced, "complement", _cmd_reduced_complement, "regular complement of an element")
    sub.add_argument("--coords", required=True, help='JSON array, e.g. "[2,0,-3]"')

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        output = args.func(args)
    except CalcError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io: {exc}", file=sys.stderr)
        return 1
    print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
