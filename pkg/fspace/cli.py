"""
Command-line front end: ``fspace <command> [options]``.

Text output is deterministic; ``--json`` output is byte-stable and carries a
``"schema"`` field. Exit codes: 0 success, 1 domain error (including an
invalid matrix under ``validate``), 2 usage, I/O or format error.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from fspace.actions import block_form, orbit_sum_check, validate_action, z2_det_factorization
from fspace.census import CSV_COLUMNS, run_census, write_census
from fspace.complexes import (
    char_poly_of_complex,
    det_of_complex,
    euler,
    face_poset,
    order_complex,
    rankbar_of_complex,
    reduced_euler,
)
from fspace.config import FspaceConfig
from fspace.digraph import (
    antichain_cliques,
    export_dot,
    export_hasse_dot,
    strongly_connected_components,
    to_digraph,
)
from fspace.enumeration import enumerate_posets, fence_charpoly_check
from fspace.errors import FormatError, FspaceError, UnsupportedFormat
from fspace.families import FAMILY_NAMES, FamilySpec, make_family
from fspace.homotopy import (
    core,
    find_beat_points,
    find_homeomorphism,
    find_homeomorphism_bruteforce,
    find_weak_beat_points,
    invariants_bundle,
    weak_reduce,
)
from fspace.linalg import char_poly
from fspace.loader import FspaceLoader
from fspace.models.complex import SimplicialComplex
from fspace.models.poset import Poset, ZeroOneMatrix
from fspace.order import (
    chain_cover,
    height,
    is_chain,
    matrix_from_poset,
    max_antichain,
    poset_from_matrix,
    validate_membership,
    width,
)
from fspace.parsers import ActionSpec
from fspace.subposets import det_plus_identity, gamma_table, verify_gamma_formulas
from fspace.utils.io_utils import dumps_json, with_schema

logger = logging.getLogger(__name__)


def _emit(args: argparse.Namespace, text: str, payload: dict[str, Any]) -> None:
    if args.format == "json":
        sys.stdout.write(dumps_json(with_schema(payload)))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _config(args: argparse.Namespace) -> FspaceConfig:
    if args.config is not None:
        return FspaceConfig.from_file(args.config)
    return FspaceConfig.from_env()


def _labels(p: Poset, indices: Sequence[int]) -> list[str]:
    return [p.labels[i] for i in indices]


def _load_complex(loader: FspaceLoader, path: Path) -> SimplicialComplex:
    """A ``.cplx`` file, or the order complex of a ``.poset``/``.pm`` file."""
    loaded = loader.load(path)
    if isinstance(loaded, SimplicialComplex):
        return loaded
    if isinstance(loaded, ZeroOneMatrix):
        loaded = poset_from_matrix(loaded)
    if isinstance(loaded, Poset):
        return order_complex(loaded)
    raise UnsupportedFormat(f"{path} does not describe a complex or a poset")


def cmd_validate(args: argparse.Namespace, loader: FspaceLoader) -> int:
    loaded = loader.load(args.file)
    if isinstance(loaded, Poset):
        _emit(args, f"valid poset (n={loaded.n})", {"ok": True, "n": loaded.n})
        return 0
    if not isinstance(loaded, ZeroOneMatrix):
        raise UnsupportedFormat(f"{args.file} is neither a poset nor a matrix")
    report = validate_membership(loaded)
    text = f"valid poset matrix (n={loaded.n})" if report else f"invalid: {report.describe()}"
    _emit(args, text, {"n": loaded.n, **report.to_dict()})
    return 0 if report else 1


def cmd_matrix(args: argparse.Namespace, loader: FspaceLoader) -> int:
    matrix = matrix_from_poset(loader.load_poset(args.file))
    _emit(args, loader.dump(matrix, "pm"), matrix.to_dict())
    return 0


def cmd_poset(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.file)
    _emit(args, loader.dump(p, "poset"), p.to_dict())
    return 0


def cmd_invariants(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.file)
    bundle = invariants_bundle(p)
    poly = char_poly(p)
    payload = {
        **bundle.to_dict(),
        "n": p.n,
        "width": width(p),
        "height": height(p),
        "charPoly": poly.to_list(),
    }
    profile = bundle.sum_profile
    text = "\n".join(
        [
            f"n: {p.n}",
            f"det: {bundle.det}",
            f"absDet: {bundle.abs_det}",
            f"rankBar: {bundle.rank_bar}",
            f"reducedEuler: {bundle.reduced_euler}",
            f"width: {payload['width']}",
            f"height: {payload['height']}",
            f"rowSums: {' '.join(map(str, profile.row_sums))}",
            f"colSums: {' '.join(map(str, profile.col_sums))}",
            f"total: {profile.total}",
            f"charPoly: {poly}",
            f"consistent: {'yes' if bundle.consistent else 'no'}",
        ]
    )
    _emit(args, text, payload)
    return 0


def _trace_text(trace_dict: dict[str, Any], remaining: Poset, loader: FspaceLoader) -> str:
    lines = []
    for step in trace_dict["steps"]:
        witness = f" via {step['witness']}" if "witness" in step else ""
        lines.append(f"remove {step['label']} ({step['move']}, {step['kind']}{witness})")
    lines.append(f"remaining: {remaining.n} point{'s' if remaining.n != 1 else ''}")
    return "\n".join(lines) + "\n" + loader.dump(remaining, "poset")


def cmd_core(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.file)
    result, trace = core(p)
    payload = {**trace.to_dict(), "contractible": result.n == 1}
    _emit(args, _trace_text(payload, result, loader), payload)
    return 0


def cmd_reduce(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.file)
    result, trace = weak_reduce(
        p, prefer_beat_points=args.prefer_beat_points, check_invariants=args.check
    )
    payload = trace.to_dict()
    _emit(args, _trace_text(payload, result, loader), payload)
    return 0


def cmd_beats(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.file)
    beats = [b.to_dict(p.labels) for b in find_beat_points(p)]
    payload: dict[str, Any] = {"beatPoints": beats}
    lines = [f"{b['label']} {b['kind']} (witness {b['witness']})" for b in beats]
    if args.weak:
        weak = [w.to_dict(p.labels) for w in find_weak_beat_points(p)]
        payload["weakBeatPoints"] = weak
        lines.extend(f"{w['label']} weak {w['kind']}" for w in weak)
    _emit(args, "\n".join(lines) if lines else "no beat points", payload)
    return 0


def cmd_homeo(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p, q = loader.load_poset(args.first), loader.load_poset(args.second)
    if args.bruteforce:
        tau = find_homeomorphism_bruteforce(p, q, _config(args).bruteforce_limit)
    else:
        tau = find_homeomorphism(p, q)
    payload: dict[str, Any] = {"homeomorphic": tau is not None}
    if tau is None:
        text = "non-homeomorphic"
    else:
        payload["map"] = [t + 1 for t in tau]
        text = "homeomorphic\n" + "\n".join(
            f"{p.labels[a]} -> {q.labels[b]}" for a, b in enumerate(tau)
        )
    _emit(args, text, payload)
    return 0


def cmd_order_complex(args: argparse.Namespace, loader: FspaceLoader) -> int:
    k = order_complex(loader.load_poset(args.file))
    _emit(args, loader.dump(k, "cplx"), k.to_dict())
    return 0


def cmd_face_poset(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = face_poset(_load_complex(loader, args.file))
    _emit(args, loader.dump(p, "poset"), p.to_dict())
    return 0


def cmd_euler(args: argparse.Namespace, loader: FspaceLoader) -> int:
    k = _load_complex(loader, args.file)
    payload = {"fVector": k.f_vector(), "euler": euler(k), "reducedEuler": reduced_euler(k)}
    text = (
        f"fVector: {' '.join(map(str, payload['fVector']))}\n"
        f"euler: {payload['euler']}\nreducedEuler: {payload['reducedEuler']}"
    )
    _emit(args, text, payload)
    return 0


def cmd_det_complex(args: argparse.Namespace, loader: FspaceLoader) -> int:
    k = _load_complex(loader, args.file)
    det = det_of_complex(k)
    poly = char_poly_of_complex(k)
    payload = {
        "det": det,
        "absDet": abs(det),
        "rankBar": rankbar_of_complex(k),
        "reducedEuler": reduced_euler(k),
        "charPoly": poly.to_list(),
    }
    text = "\n".join(
        [
            f"det: {det}",
            f"rankBar: {payload['rankBar']}",
            f"reducedEuler: {payload['reducedEuler']}",
            f"charPoly: {poly}",
        ]
    )
    _emit(args, text, payload)
    return 0


def cmd_gamma(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.file)
    limit = args.limit if args.limit is not None else _config(args).gamma_limit
    if args.verify:
        report = verify_gamma_formulas(p, limit)
        lines = [f"gamma: {' '.join(map(str, report.table.values))}"]
        lines.extend(
            f"{'ok  ' if c.passed else 'FAIL'} {c.name} ({c.actual})" for c in report.checks
        )
        _emit(args, "\n".join(lines), report.to_dict())
        return 0 if report.passed else 1
    table = gamma_table(p, limit)
    text = "\n".join(f"gamma^{i}: {v}" for i, v in enumerate(table.values))
    _emit(args, text + f"\ntotal: {table.total}", table.to_dict())
    return 0


def cmd_det_plus_i(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.file)
    value = det_plus_identity(p)
    chain = is_chain(p)
    _emit(
        args,
        f"det(M+I): {value}\nchain: {'yes' if chain else 'no'}",
        {"detPlusI": value, "chain": chain},
    )
    return 0


def cmd_action(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.poset)
    spec = loader.load(args.action_file)
    if not isinstance(spec, ActionSpec):
        raise UnsupportedFormat(f"{args.action_file} is not an action file")
    action = validate_action(p, spec.images, spec.names)
    if args.action_command == "validate":
        _emit(
            args,
            f"valid free action of a group of order {action.order} on {p.n} points",
            action.to_dict(),
        )
    elif args.action_command == "block":
        form = block_form(p, action)
        lines = [f"domain: {' '.join(_labels(p, form.domain))}"]
        for i in range(action.order):
            for j in range(action.order):
                rows = form.block(i, j).tolist()
                lines.append(f"A{i + 1},{j + 1}: " + " ".join("".join(map(str, r)) for r in rows))
        _emit(args, "\n".join(lines), form.to_dict(action.names))
    elif args.action_command == "z2":
        result = z2_det_factorization(p, action)
        text = (
            f"det(A11+A12): {result.plus_det}\ndet(A11-A12): {result.minus_det}\n"
            f"product: {result.product}\ndet: {result.det}"
        )
        _emit(args, text, result.to_dict())
    else:
        orbit = orbit_sum_check(p, action)
        text = (
            f"sum |U|: {orbit.down_total}\nsum |F|: {orbit.up_total}\n"
            f"divisible by {orbit.group_order}: {'yes' if orbit.divisible else 'no'}"
        )
        _emit(args, text, orbit.to_dict())
    return 0


def cmd_enumerate(args: argparse.Namespace, loader: FspaceLoader) -> int:
    limit = args.limit if args.limit is not None else _config(args).enumeration_limit
    posets = enumerate_posets(args.n, limit)
    report = run_census(posets)
    if args.emit is not None:
        written = write_census(report, posets, args.emit)
        logger.info("census written to %s (%d files)", args.emit, len(written))
    if args.format == "csv":
        rows = [",".join(CSV_COLUMNS)]
        rows.extend(",".join(map(str, row)) for row in report.to_csv_rows())
        sys.stdout.write("\n".join(rows) + "\n")
        return 0
    _emit(args, str(report), report.to_dict())
    return 0


def cmd_family(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = make_family(FamilySpec(args.name, args.size))
    _emit(args, loader.dump(p, "poset"), p.to_dict())
    return 0


def cmd_dot(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.file)
    text = export_hasse_dot(p) if args.view == "hasse" else export_dot(to_digraph(p))
    sys.stdout.write(text)
    return 0


def cmd_scc(args: argparse.Namespace, loader: FspaceLoader) -> int:
    loaded = loader.load(args.file)
    if not isinstance(loaded, (Poset, ZeroOneMatrix)):
        raise UnsupportedFormat(f"{args.file} is neither a poset nor a matrix")
    result = strongly_connected_components(to_digraph(loaded))
    lines = [f"count: {result.count}"]
    lines.extend(" ".join(str(v + 1) for v in c) for c in result.components)
    _emit(args, "\n".join(lines), result.to_dict())
    return 0


def cmd_width(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.file)
    antichain = max_antichain(p)
    cover = chain_cover(p)
    payload = {
        "width": len(antichain),
        "antichain": _labels(p, antichain),
        "chainCover": [_labels(p, c) for c in cover],
    }
    lines = [f"width: {len(antichain)}", f"antichain: {' '.join(payload['antichain'])}"]
    lines.extend(f"chain: {' < '.join(c)}" for c in payload["chainCover"])
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_antichains(args: argparse.Namespace, loader: FspaceLoader) -> int:
    p = loader.load_poset(args.file)
    found = [_labels(p, c) for c in antichain_cliques(to_digraph(p), args.k)]
    text = "\n".join(" ".join(c) for c in found) if found else f"no antichains of size {args.k}"
    _emit(args, text, {"k": args.k, "count": len(found), "antichains": found})
    return 0


def cmd_fence_check(args: argparse.Namespace, loader: FspaceLoader) -> int:
    last = args.to if args.to is not None else args.n
    results = {n: fence_charpoly_check(n) for n in range(args.n, last + 1)}
    lines = [f"fence({n}): {'ok' if ok else 'FAIL'}" for n, ok in results.items()]
    payload = {"results": [{"n": n, "ok": ok} for n, ok in results.items()]}
    _emit(args, "\n".join(lines), payload)
    return 0 if all(results.values()) else 1


Handler = Callable[[argparse.Namespace, FspaceLoader], int]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fspace",
        description="Finite T0-spaces as 0/1 matrices: exact invariants and reductions.",
    )
    parser.add_argument("--config", type=Path, help="YAML or JSON file with size limits")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="log to stderr (-vv for debug)"
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("text", "json"), default="text")
    output.add_argument("--json", dest="format", action="store_const", const="json")

    def add(name: str, handler: Handler, help_text: str, *files: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[output], help=help_text)
        for file_arg in files:
            sub.add_argument(file_arg, type=Path)
        sub.set_defaults(handler=handler)
        return sub

    add("validate", cmd_validate, "check a .pm or .poset file", "file")
    add("matrix", cmd_matrix, "print the 0/1 matrix of a poset", "file")
    add("poset", cmd_poset, "print a poset (from .poset or .pm) as cover relations", "file")
    add("invariants", cmd_invariants, "determinant, rank defect, Euler characteristic", "file")
    add("core", cmd_core, "remove beat points down to the core", "file")
    reduce = add("reduce", cmd_reduce, "remove weak beat points", "file")
    reduce.add_argument("--prefer-beat-points", action="store_true")
    reduce.add_argument("--check", action="store_true", help="verify invariants at every step")
    beats = add("beats", cmd_beats, "list beat points", "file")
    beats.add_argument("--weak", action="store_true", help="also list weak beat points")
    homeo = add(
        "homeo", cmd_homeo, "decide whether two posets are homeomorphic", "first", "second"
    )
    homeo.add_argument(
        "--bruteforce", action="store_true", help="search all bijections (bruteforce_limit)"
    )
    add("order-complex", cmd_order_complex, "order complex of a poset", "file")
    add("face-poset", cmd_face_poset, "face poset of a complex", "file")
    add("euler", cmd_euler, "Euler characteristic of a complex", "file")
    add("det-complex", cmd_det_complex, "determinant of a complex's face poset", "file")
    gamma = add("gamma", cmd_gamma, "subposet determinant sums", "file")
    gamma.add_argument("--limit", type=int)
    gamma.add_argument("--verify", action="store_true", help="check the closed forms")
    gamma.set_defaults(format="json")
    add("det-plus-i", cmd_det_plus_i, "det(M + I)", "file")

    action = subparsers.add_parser("action", help="free group actions")
    action_commands = action.add_subparsers(dest="action_command", required=True)
    for name in ("validate", "block", "z2", "orbit"):
        sub = action_commands.add_parser(name, parents=[output])
        sub.add_argument("poset", type=Path)
        sub.add_argument("action_file", type=Path)
    action.set_defaults(handler=cmd_action)

    enumerate_ = subparsers.add_parser("enumerate", help="all n-point posets up to isomorphism")
    enumerate_.add_argument("n", type=int)
    enumerate_.add_argument("--emit", type=Path, help="write .poset files and invariants.csv")
    enumerate_.add_argument("--limit", type=int)
    enumerate_.add_argument("--format", choices=("text", "json", "csv"), default="text")
    enumerate_.add_argument("--json", dest="format", action="store_const", const="json")
    enumerate_.set_defaults(handler=cmd_enumerate)

    family = add("family", cmd_family, "a named poset family")
    family.add_argument("name", choices=FAMILY_NAMES)
    family.add_argument("size", type=int, nargs="?")

    dot = subparsers.add_parser("dot", help="GraphViz output")
    dot.add_argument("file", type=Path)
    dot.add_argument("--view", choices=("gx", "hasse"), default="gx")
    dot.set_defaults(handler=cmd_dot)

    add("scc", cmd_scc, "strongly connected components of the digraph", "file")
    add("width", cmd_width, "width, a maximum antichain and a minimum chain cover", "file")
    antichains = add("antichains", cmd_antichains, "all antichains of a given size", "file")
    antichains.add_argument("-k", type=int, default=2)
    fence_check = add("fence-check", cmd_fence_check, "fence characteristic polynomials")
    fence_check.add_argument("n", type=int)
    fence_check.add_argument("--to", type=int, help="check every size from n to this one")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )

    try:
        return int(args.handler(args, FspaceLoader()))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FormatError.exit_code
    except FspaceError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
