"""Command-line interface.

Subcommands: ``signals``, ``frame``, ``components``, ``generate``,
``sweep``, ``verify``, ``export-dot``. All behavior is controlled by
flags (no environment variables); identical inputs, flags and seeds give
identical output. Exit codes: 0 success, 1 domain error (disconnected
input, infeasible parameters, failed verification), 2 I/O or format
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import DisconnectedError, DomainError, FormatError
from .experiments import DENSITY_MODES, SweepConfig, rows_to_csv, run_sweep
from .frames import fan, frame, frame_result_to_json, mountain_range
from .experiments import random_hypergraph
from .hypergraph import Hypergraph, components, dumps_hypergraph, load_hypergraph
from .signals import (
    LinearMap,
    centroid_map,
    component_count_via_C,
    constant_space,
    find_violation,
    is_engaged,
    load_linear_map,
    load_signal,
    signal_space,
    signal_to_json,
    universal_map,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_FORMAT = 2


def _resolve_map(choice: str, ell: int) -> LinearMap:
    if choice == "U":
        return universal_map(ell)
    if choice == "C":
        return centroid_map(ell)
    t = load_linear_map(choice)
    if t.ell != ell:
        raise DomainError(f"map arity {t.ell} does not match hypergraph arity {ell}")
    return t


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_signals(args: argparse.Namespace) -> int:
    h = load_hypergraph(args.infile)
    t = _resolve_map(args.map, h.ell)
    if not is_engaged(t):
        print(
            "warning: map is not engaged (it has a zero column); "
            "the corresponding axis is unconstrained",
            file=sys.stderr,
        )
    space = signal_space(h, t)
    const = constant_space(t, h.n_vertices)
    print(f"dim {space.dimension}, constant {const.dimension}")
    if args.out:
        docs = [signal_to_json(h, sig) for sig in space.signals()]
        Path(args.out).write_text(json.dumps(docs, indent=2) + "\n", encoding="utf-8")
    return EXIT_OK


def cmd_frame(args: argparse.Namespace) -> int:
    h = load_hypergraph(args.infile)
    try:
        result = frame(h)
    except DisconnectedError:
        print(
            "error: input hypergraph is disconnected; "
            "use the 'components' command to inspect it",
            file=sys.stderr,
        )
        return EXIT_DOMAIN
    if h.n_edges:
        print(f"reduction proportion: {Fraction(result.frame.n_edges, h.n_edges)}")
    frame_text = dumps_hypergraph(result.frame)
    classes_text = json.dumps(frame_result_to_json(result, h), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(frame_text, encoding="utf-8")
        classes_path = args.classes or _default_classes_path(args.out)
        Path(classes_path).write_text(classes_text, encoding="utf-8")
    else:
        sys.stdout.write(frame_text)
        if args.classes:
            Path(args.classes).write_text(classes_text, encoding="utf-8")
    return EXIT_OK


def _default_classes_path(out: str) -> str:
    p = Path(out)
    return str(p.with_name(p.stem + ".classes.json"))


def cmd_components(args: argparse.Namespace) -> int:
    h = load_hypergraph(args.infile)
    count = components(h).n_classes
    dim = component_count_via_C(h)
    print(f"components: {count}, centroid signal dimension: {dim}")
    if count != dim:
        print("internal error: component counts disagree", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "random":
        if args.m is None:
            raise DomainError("random generation requires --m")
        h = random_hypergraph(args.n, args.m, args.ell, args.seed)
    elif args.kind == "fan":
        h = fan(args.n)
    else:
        h = mountain_range(args.n)
    _write_or_print(dumps_hypergraph(h), args.out)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        vertex_counts=tuple(int(s) for s in args.sizes.split(",") if s),
        densities=tuple(Fraction(s) for s in args.densities.split(",") if s),
        runs_per_cell=args.runs,
        seed=args.seed,
        ell=args.ell,
        density_mode=args.density_mode,
    )
    rows = run_sweep(cfg)
    for row in rows:
        if row.error is not None:
            print(
                f"warning: cell n={row.n} density={row.density} infeasible: {row.error}",
                file=sys.stderr,
            )
    _write_or_print(rows_to_csv(rows), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    h = load_hypergraph(args.infile)
    vertices, ell, sig = load_signal(args.signal)
    if vertices != h.vertices or ell != h.ell:
        raise FormatError("signal file does not match the hypergraph's vertices")
    t = _resolve_map(args.map, h.ell)
    witness = find_violation(h, t, sig)
    if witness is None:
        print("pass")
        return EXIT_OK
    edge, arrangement, row = witness
    print(
        "fail: edge=({}) arrangement=({}) map_row={}".format(
            ",".join(h.edge_labels(edge)),
            ",".join(h.edge_labels(arrangement)),
            row,
        )
    )
    return EXIT_DOMAIN


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(h: Hypergraph) -> str:
    """Bipartite incidence rendering: one circle node per vertex, one box
    node per edge, an arc per incidence with a multiplicity label when a
    vertex repeats inside an edge."""
    lines = ["graph incidence {"]
    for i, label in enumerate(h.vertices):
        lines.append(f"  v{i} [shape=circle, label={_dot_quote(label)}];")
    for j, e in enumerate(h.edges):
        lines.append(f"  e{j} [shape=box, label={_dot_quote('e' + str(j))}];")
        counts: dict[int, int] = {}
        for v in e:
            counts[v] = counts.get(v, 0) + 1
        for v in sorted(counts):
            if counts[v] > 1:
                lines.append(f'  v{v} -- e{j} [label="{counts[v]}"];')
            else:
                lines.append(f"  v{v} -- e{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args: argparse.Namespace) -> int:
    h = load_hypergraph(args.infile)
    _write_or_print(to_dot(h), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersig",
        description="Exact signal invariants, fusion and frame quotients of "
        "uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_in(p: argparse.ArgumentParser) -> None:
        p.add_argument("--in", dest="infile", required=True, help="hypergraph JSON file")

    p = sub.add_parser("signals", help="dimension of the signal space of a map")
    add_in(p)
    p.add_argument("--map", default="U", help="U, C, or a path to a matrix JSON file")
    p.add_argument("--out", default=None, help="write basis signals (JSON array)")
    p.set_defaults(func=cmd_signals)

    p = sub.add_parser("frame", help="fusion classes and frame quotient")
    add_in(p)
    p.add_argument("--out", default=None, help="write the frame hypergraph JSON here")
    p.add_argument(
        "--classes",
        default=None,
        help="write the classes JSON here (default: derived from --out)",
    )
    p.set_defaults(func=cmd_frame)

    p = sub.add_parser("components", help="cross-checked component count")
    add_in(p)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("generate", help="write a generated hypergraph")
    p.add_argument("kind", choices=("random", "fan", "mountain"))
    p.add_argument("--n", type=int, required=True, help="vertices / segments / peaks")
    p.add_argument("--m", type=int, default=None, help="edge count (random only)")
    p.add_argument("--ell", type=int, default=3, help="arity (random only)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sweep", help="reduction-proportion sweep, CSV output")
    p.add_argument("--sizes", default="50,100,150,200", help="comma-separated vertex counts")
    p.add_argument(
        "--densities",
        default="2.3,2.4,2.5,2.6,2.7,2.8,2.9,3.0",
        help="comma-separated densities",
    )
    p.add_argument("--runs", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ell", type=int, default=3)
    p.add_argument("--density-mode", choices=DENSITY_MODES, default="edges-per-vertex")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="exact admissibility check of a signal file")
    add_in(p)
    p.add_argument("--signal", required=True, help="signal JSON file")
    p.add_argument("--map", default="U", help="U, C, or a path to a matrix JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="bipartite incidence graph in DOT format")
    add_in(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
