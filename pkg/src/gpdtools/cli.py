"""Command-line front end.

Subcommands: ``check`` (structural predicates of a table and optionally a
mapping), ``decide`` (is the table a twisted semilattice of groups, with
witness), ``build`` (construction data -> table + mapping), ``decompose``
(table + mapping -> construction data), ``sweep`` (property sweep), and
``examples`` (write the bundled fixtures to disk).

Exit codes: 0 success (for ``decide``: determined; for ``sweep``: no
counterexamples), 1 negative outcome (not determined / not decomposable /
counterexamples found), 2 malformed input or bad arguments, 3 internal
consistency alarm.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .clifford import decompose, build_determined, parse_cspec, serialize_cspec
from .determination import decide, is_semilattice_of_groups
from .enumeration import SweepConfig, run_sweep
from .errors import (
    GpdError,
    LimitsTooLarge,
    MalformedInput,
    InvalidSpec,
    NotDetermined,
    NotInverse,
    NotInvolution,
    OrderTooLarge,
    TheoremViolation,
)
from .fixtures import FIXTURES
from .groupoid import (
    VARIETIES,
    Groupoid,
    in_semigroup_class,
    parse_groupoid,
    satisfies_variety,
    serialize_groupoid,
)
from .inverses import (
    idempotents_form_semilattice,
    inverse_table,
    is_completely_inverse,
    is_right_bol,
    strongly_regular_witness,
)
from .mappings import (
    absorption_law,
    in_lt,
    in_rt,
    involutive_automorphisms,
    is_homomorphism,
    is_involution,
    parse_mapping,
    serialize_mapping,
    shifted_associativity,
)

_INPUT_ERRORS = (
    MalformedInput,
    InvalidSpec,
    NotInvolution,
    OrderTooLarge,
    LimitsTooLarge,
    OSError,
    ValueError,
)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _render_text(data, prefix: str = "") -> list[str]:
    """Flatten a report into sorted ``path: value`` lines."""
    lines: list[str] = []
    if isinstance(data, dict):
        for key in sorted(data):
            path = f"{prefix}.{key}" if prefix else str(key)
            lines.extend(_render_text(data[key], path))
    else:
        lines.append(f"{prefix}: {json.dumps(data, sort_keys=True)}")
    return lines


def _emit(report: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(_render_text(report)))


def _check_report(g: Groupoid, mapping) -> dict:
    try:
        inverse_table(g)
        has_inverses = True
    except NotInverse:
        has_inverses = False
    report: dict = {
        "schema": "check_report@1",
        "groupoid": {
            "order": g.order,
            "associative": g.is_associative(),
            "idempotents": sorted(g.idempotents()),
            "band": g.is_associative() and satisfies_variety(g, "B"),
            "idempotents_form_semilattice": idempotents_form_semilattice(g),
            "inverse": has_inverses,
            "completely_inverse": is_completely_inverse(g),
            "right_bol": is_right_bol(g),
            "strongly_regular": strongly_regular_witness(g) is not None,
            "semilattice_of_groups": is_semilattice_of_groups(g),
            "identity_classes": {t: satisfies_variety(g, t) for t in VARIETIES},
            "semigroup_classes": {t: in_semigroup_class(g, t) for t in VARIETIES},
            "involutive_automorphisms": [
                list(f) for f in involutive_automorphisms(g)
            ],
        },
        "mapping": None,
    }
    if mapping is not None:
        f = mapping
        endo = is_homomorphism(f, g, g)
        invol = is_involution(f)
        report["mapping"] = {
            "images": list(f),
            "involution": invol,
            "endomorphism": endo,
            "automorphism": endo and len(set(f)) == g.order,
            "involutive_automorphism": endo and invol,
            "idempotent_fixed": all(f[e] == e for e in g.idempotents()),
            "left_translation": in_lt(g, f),
            "right_translation": in_rt(g, f),
            "absorption": absorption_law(g, f),
            "shifted_associativity": shifted_associativity(g, f),
            "shift_both_forms": all(
                g.product(g.product(x, y), z)
                == g.product(f[x], g.product(y, z))
                == g.product(x, g.product(y, z))
                for x in g
                for y in g
                for z in g
            ),
        }
    return report


def cmd_check(args) -> int:
    try:
        g = parse_groupoid(Path(args.table).read_text())
        mapping = None
        if args.mapping is not None:
            mapping = parse_mapping(Path(args.mapping).read_text())
            if len(mapping) != g.order:
                return _fail(
                    f"mapping size {len(mapping)} does not match table order {g.order}"
                )
    except _INPUT_ERRORS as exc:
        return _fail(str(exc))
    _emit(_check_report(g, mapping), args.format)
    return 0


def cmd_decide(args) -> int:
    try:
        g = parse_groupoid(Path(args.table).read_text())
    except _INPUT_ERRORS as exc:
        return _fail(str(exc))
    try:
        report = decide(g)
    except TheoremViolation as exc:
        print(f"alarm: {exc}", file=sys.stderr)
        return 3
    _emit(report.to_dict(), args.format)
    return 0 if report.determined else 1


def cmd_build(args) -> int:
    try:
        spec = parse_cspec(Path(args.spec).read_text())
        g, alpha = build_determined(spec)
    except _INPUT_ERRORS as exc:
        return _fail(str(exc))
    table_text = serialize_groupoid(g)
    mapping_text = serialize_mapping(alpha)
    if args.out:
        Path(f"{args.out}.gpd").write_text(table_text)
        Path(f"{args.out}.map").write_text(mapping_text)
        print(f"{args.out}.gpd")
        print(f"{args.out}.map")
    else:
        sys.stdout.write("# table\n" + table_text)
        sys.stdout.write("# mapping\n" + mapping_text)
    return 0


def cmd_decompose(args) -> int:
    try:
        g = parse_groupoid(Path(args.table).read_text())
        alpha = None
        if args.mapping is not None:
            alpha = parse_mapping(Path(args.mapping).read_text())
            if len(alpha) != g.order:
                return _fail(
                    f"mapping size {len(alpha)} does not match table order {g.order}"
                )
    except _INPUT_ERRORS as exc:
        return _fail(str(exc))
    try:
        if alpha is None:
            report = decide(g)
            if not report.determined:
                print("not determined: no witness mapping exists", file=sys.stderr)
                return 1
            alpha = report.witness.alpha
        spec = decompose(g, alpha)
    except NotDetermined as exc:
        print(f"not determined: {exc}", file=sys.stderr)
        return 1
    except TheoremViolation as exc:
        print(f"alarm: {exc}", file=sys.stderr)
        return 3
    text = serialize_cspec(spec)
    if args.out:
        Path(f"{args.out}.cspec").write_text(text)
        print(f"{args.out}.cspec")
    else:
        print(text, end="")
    return 0


def cmd_sweep(args) -> int:
    try:
        suites = tuple(s for s in (args.suites or "").split(",") if s) or ()
        config = SweepConfig(
            max_exhaustive_order=args.max_order,
            sample_order=args.sample_order,
            sample_count=args.samples,
            seed=args.seed,
            max_semilattice_order=args.max_semilattice_order,
            max_group_order=args.max_group_order,
            suites=suites,
            allow_large_exhaustive=args.allow_large,
        )
        report = run_sweep(config, jobs=args.jobs)
    except _INPUT_ERRORS as exc:
        return _fail(str(exc))
    if args.out:
        Path(args.out).write_text(report.to_json())
        print(args.out)
    else:
        _emit(report.to_dict(), args.format)
    return 0 if report.passed else 1


def cmd_examples(args) -> int:
    try:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        written = []
        for name, (table, mapping, spec) in sorted(FIXTURES.items()):
            gpd = out / f"{name}.gpd"
            gpd.write_text(serialize_groupoid(table))
            written.append(gpd)
            mp = out / f"{name}.map"
            mp.write_text(serialize_mapping(mapping))
            written.append(mp)
            if spec is not None:
                cs = out / f"{name}.cspec"
                cs.write_text(serialize_cspec(spec))
                written.append(cs)
    except OSError as exc:
        return _fail(str(exc))
    for path in written:
        print(path)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpdtools",
        description=(
            "Verify, decide, construct, and sweep finite one-operation "
            "tables determined by twisted semilattices of groups."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="report format (default text)",
        )

    p = sub.add_parser("check", help="print structural predicates of a table")
    p.add_argument("table", help="path to a .gpd file")
    p.add_argument("mapping", nargs="?", help="optional path to a .map file")
    add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decide", help="decide whether a table is determined")
    p.add_argument("table", help="path to a .gpd file")
    add_format(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("build", help="build table + mapping from a .cspec")
    p.add_argument("spec", help="path to a .cspec file")
    p.add_argument("--out", help="output prefix (writes PREFIX.gpd and PREFIX.map)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("decompose", help="decompose a determined table into a .cspec")
    p.add_argument("table", help="path to a .gpd file")
    p.add_argument(
        "mapping", nargs="?",
        help="optional path to a .map file (default: the decision witness)",
    )
    p.add_argument("--out", help="output prefix (writes PREFIX.cspec)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("sweep", help="run property suites over the instance space")
    p.add_argument("--max-order", type=int, default=3,
                   help="largest exhaustively enumerated order (default 3)")
    p.add_argument("--sample-order", type=int, default=4,
                   help="order of randomly sampled tables (default 4)")
    p.add_argument("--samples", type=int, default=100_000,
                   help="number of sampled tables (default 100000)")
    p.add_argument("--seed", type=int, default=1, help="sample stream seed (default 1)")
    p.add_argument("--jobs", type=int, default=1, help="worker count (default 1)")
    p.add_argument("--suites", help="comma-separated suite names (default: all)")
    p.add_argument("--max-semilattice-order", type=int, default=3,
                   help="construction family: largest semilattice (default 3)")
    p.add_argument("--max-group-order", type=int, default=4,
                   help="construction family: largest block group (default 4)")
    p.add_argument("--allow-large", action="store_true",
                   help="permit exhaustive orders above 3")
    p.add_argument("--out", help="write the JSON report to this path")
    add_format(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("examples", help="write the bundled fixtures to a directory")
    p.add_argument("--out", default=".", help="target directory (default: .)")
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GpdError as exc:  # uncaught domain error: treat as alarm
        print(f"alarm: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
