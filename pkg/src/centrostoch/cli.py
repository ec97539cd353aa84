"""Command-line interface.

Matrix-reading commands take SMX text from --input FILE or stdin and print
exact rational results; --json swaps the human layout for a JSON document.
Exit codes: 0 success, 1 domain error (bad matrix for the requested
operation), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from centrostoch.bases import (
    basis_centro_even,
    basis_centro_odd,
    basis_rect,
    basis_square,
)
from centrostoch.core import (
    DEFAULT_ENUMERATION_CAP,
    CentrostochError,
    Matrix,
    is_centrosymmetric,
    is_stochastic,
    rank_of_family,
    rotate_pi,
)
from centrostoch.decompose import decompose_centrosymmetric, decompose_stochastic
from centrostoch.extremes import (
    enumerate_extreme_centro,
    enumerate_extreme_stochastic,
    is_extreme_centro,
    is_extreme_stochastic,
)
from centrostoch.faces import (
    FacePattern,
    count_face_vertices_centro,
    count_face_vertices_stochastic,
    enumerate_face_vertices,
    has_row_support_centro,
    has_row_support_stochastic,
)
from centrostoch.graphs import BipartiteGraph, bipartite_of, fill
from centrostoch.smx import SmxError, format_matrix, parse_matrix

__all__ = ["build_parser", "run_command", "main"]


def _bool_word(value: bool) -> str:
    return "true" if value else "false"


def _matrix_lines(mat: Matrix) -> list[str]:
    # column-aligned entries; lines carry no trailing blanks
    cells = [[str(x) for x in row] for row in mat.entries]
    widths = [max(len(row[c]) for row in cells) for c in range(mat.ncols)]
    return [
        " ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
        for row in cells
    ]


def _matrix_json(mat: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in mat.entries]


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _read_matrix(ns) -> Matrix:
    if ns.input:
        with open(ns.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    return parse_matrix(text)


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _cmd_check(ns) -> int:
    mat = _read_matrix(ns)
    report = {
        "stochastic": is_stochastic(mat),
        "centrosymmetric": is_centrosymmetric(mat),
        "extreme_stochastic": is_extreme_stochastic(mat),
        "extreme_centrosymmetric": is_extreme_centro(mat),
    }
    if ns.json:
        _print_json(report)
    else:
        for key, value in report.items():
            print(f"{key}={_bool_word(value)}")
    return 0


def _cmd_decompose(ns) -> int:
    mat = _read_matrix(ns)
    comb = decompose_centrosymmetric(mat) if ns.centro else decompose_stochastic(mat)
    if ns.json:
        _print_json(
            {
                "terms": [
                    {"coefficient": str(c), "matrix": _matrix_json(term)}
                    for c, term in comb
                ]
            }
        )
        return 0
    for k, (coeff, term) in enumerate(comb, 1):
        if k > 1:
            print()
        print(f"[{k}] coefficient={coeff}")
        for line in _matrix_lines(term):
            print(line)
    return 0


def _cmd_enumerate(ns) -> int:
    if ns.centro:
        mats = list(enumerate_extreme_centro(ns.m, ns.n, cap=ns.cap))
    else:
        mats = [r.to_matrix() for r in enumerate_extreme_stochastic(ns.m, ns.n, cap=ns.cap)]
    if ns.json:
        _print_json({"count": len(mats), "matrices": [_matrix_json(m) for m in mats]})
        return 0
    for k, mat in enumerate(mats, 1):
        if k > 1:
            print()
        print(f"[{k}]")
        for line in _matrix_lines(mat):
            print(line)
    if mats:
        print()
    print(f"count={len(mats)}")
    return 0


def _cmd_basis(ns) -> int:
    if ns.set == "square":
        if ns.m is not None:
            return _usage_error("--m does not apply to the square family")
        family = basis_square(ns.n)
    else:
        if ns.m is None:
            return _usage_error(f"--m is required for the {ns.set} family")
        builder = {
            "rect": basis_rect,
            "centro-even": basis_centro_even,
            "centro-odd": basis_centro_odd,
        }[ns.set]
        family = builder(ns.m, ns.n)
    rank = independent = None
    if ns.verify:
        rank = rank_of_family(family)
        independent = rank == len(family)
    if ns.json:
        payload = {
            "count": len(family),
            "matrices": [_matrix_json(m) for m in family],
        }
        if ns.verify:
            payload["rank"] = rank
            payload["independent"] = independent
        _print_json(payload)
        return 0
    for k, mat in enumerate(family, 1):
        if k > 1:
            print()
        print(f"[{k}]")
        for line in _matrix_lines(mat):
            print(line)
    if ns.verify:
        print()
        print(f"rank={rank} independent={_bool_word(independent)}")
    return 0


def _dot_document(graph: BipartiteGraph) -> str:
    lines = ["graph zero_pattern {", "  rankdir=LR;"]
    row_names = "; ".join(f"r{i}" for i in range(1, graph.row_count + 1))
    col_names = "; ".join(f"s{j}" for j in range(1, graph.col_count + 1))
    lines.append(f"  {{ rank=same; {row_names}; }}")
    lines.append(f"  {{ rank=same; {col_names}; }}")
    for i, j in graph.sorted_edges():
        lines.append(f"  r{i} -- s{j};")
    lines.append("}")
    return "\n".join(lines)


def _cmd_graph(ns) -> int:
    mat = _read_matrix(ns)
    graph = bipartite_of(mat)
    if ns.json:
        payload = {
            "rows": graph.row_count,
            "cols": graph.col_count,
            "edges": [[i, j] for i, j in graph.sorted_edges()],
        }
        if ns.fill:
            payload["fill"] = str(fill(graph))
        if ns.dot:
            payload["dot"] = _dot_document(graph)
        _print_json(payload)
        return 0
    if ns.dot:
        print(_dot_document(graph))
        if ns.fill:
            print(f"fill={fill(graph)}")
        return 0
    print(f"rows={graph.row_count} cols={graph.col_count} edges={len(graph.edges)}")
    for i, j in graph.sorted_edges():
        print(f"r{i} -- s{j}")
    if ns.fill:
        print(f"fill={fill(graph)}")
    return 0


def _cmd_face(ns) -> int:
    pattern = FacePattern(_read_matrix(ns))
    if ns.action == "support":
        if ns.centro:
            supported = has_row_support_centro(pattern)
        else:
            supported = has_row_support_stochastic(pattern)
        if ns.json:
            _print_json({"row_support": supported})
        else:
            print(f"row_support={_bool_word(supported)}")
        return 0
    if ns.action == "count":
        if ns.centro:
            count = count_face_vertices_centro(pattern)
        else:
            count = count_face_vertices_stochastic(pattern)
        if ns.json:
            _print_json({"count": count})
        else:
            print(count)
        return 0
    mats = list(enumerate_face_vertices(pattern, centro=ns.centro, cap=ns.cap))
    if ns.json:
        _print_json({"count": len(mats), "matrices": [_matrix_json(m) for m in mats]})
        return 0
    for k, mat in enumerate(mats, 1):
        if k > 1:
            print()
        print(f"[{k}]")
        for line in _matrix_lines(mat):
            print(line)
    if mats:
        print()
    print(f"count={len(mats)}")
    return 0


def _cmd_normalize(ns) -> int:
    mat = _read_matrix(ns)
    result = mat.entrywise_min(rotate_pi(mat))
    if ns.json:
        _print_json({"matrix": _matrix_json(result)})
    else:
        print(format_matrix(result), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centrostoch",
        description="Exact computations in the stochastic and centrosymmetric "
        "stochastic matrix polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_io(p):
        p.add_argument("--input", metavar="FILE", help="read SMX text from FILE instead of stdin")
        p.add_argument("--json", action="store_true", help="emit JSON")

    def with_cap(p):
        p.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_ENUMERATION_CAP,
            metavar="N",
            help="refuse enumerations longer than N",
        )

    p_check = sub.add_parser("check", help="report the structural predicates of a matrix")
    with_io(p_check)
    p_check.set_defaults(handler=_cmd_check)

    p_dec = sub.add_parser("decompose", help="decompose into extreme points")
    with_io(p_dec)
    p_dec.add_argument("--centro", action="store_true", help="decompose in the centrosymmetric polytope")
    p_dec.set_defaults(handler=_cmd_decompose)

    p_enum = sub.add_parser("enumerate", help="enumerate extreme points")
    p_enum.add_argument("--extremes", action="store_true", required=True, help="enumerate extreme points")
    p_enum.add_argument("--centro", action="store_true", help="use the centrosymmetric polytope")
    p_enum.add_argument("--m", type=int, required=True, help="row count")
    p_enum.add_argument("--n", type=int, required=True, help="column count")
    p_enum.add_argument("--json", action="store_true", help="emit JSON")
    with_cap(p_enum)
    p_enum.set_defaults(handler=_cmd_enumerate)

    p_basis = sub.add_parser("basis", help="emit a basis family")
    p_basis.add_argument(
        "--set",
        required=True,
        choices=["square", "rect", "centro-even", "centro-odd"],
        help="which family to build",
    )
    p_basis.add_argument("--m", type=int, help="row count (not used by square)")
    p_basis.add_argument("--n", type=int, required=True, help="column count")
    p_basis.add_argument("--verify", action="store_true", help="append an exact rank check")
    p_basis.add_argument("--json", action="store_true", help="emit JSON")
    p_basis.set_defaults(handler=_cmd_basis)

    p_graph = sub.add_parser("graph", help="bipartite graph of the zero pattern")
    with_io(p_graph)
    p_graph.add_argument("--dot", action="store_true", help="emit a DOT document")
    p_graph.add_argument("--fill", action="store_true", help="include the fill ratio")
    p_graph.set_defaults(handler=_cmd_graph)

    p_face = sub.add_parser("face", help="faces cut out by a (0,1) pattern")
    p_face.add_argument("action", choices=["count", "vertices", "support"])
    with_io(p_face)
    p_face.add_argument("--centro", action="store_true", help="use the centrosymmetric polytope")
    with_cap(p_face)
    p_face.set_defaults(handler=_cmd_face)

    p_norm = sub.add_parser("normalize", help="normalize a pattern")
    with_io(p_norm)
    p_norm.add_argument(
        "--centro-and",
        dest="centro_and",
        action="store_true",
        required=True,
        help="entrywise minimum with the half-turn rotation",
    )
    p_norm.set_defaults(handler=_cmd_normalize)

    return parser


def run_command(argv) -> int:
    """Parse argv (no program name) and run the command; returns the exit code."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return ns.handler(ns)
    except SmxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CentrostochError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
