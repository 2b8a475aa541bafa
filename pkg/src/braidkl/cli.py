"""Command-line front end.

Subcommands: `poly` (compute P/Q with a JSON file cache), `enum`
(enumerations with counts or full listings), `verify` (the verification
suites, one row per checked equation), and a hidden `oracle` subcommand
that reruns the brute-force oracles for provenance.

Exit codes: 0 success, 1 verification failure, 2 usage error (argparse's
own convention), 3 resource cap exceeded.  Output is deterministic:
identical configuration gives byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .cactus import (
    HusimiType,
    count_cacti_closed,
    count_des1_closed,
    count_husimi_closed,
    count_rdes_closed,
    des_convolution,
    enumerate_cacti,
    enumerate_deserts,
    enumerate_husimi,
    enumerate_rooted_deserts,
)
from .exact import IntPoly, ResourceCapError
from .identities import run_catalog
from .klcore import (
    KlTable,
    inv_kl_poly_braid,
    kl_poly_braid,
    leading_coeff_closed_form,
    verify_leading_relation,
    verify_parity_identity,
)
from .maps import fibers_of_phi, g_closed_form, verify_difference
from .spgen import (
    count_E,
    count_E_closed,
    count_S,
    enumerate_S,
    kl_coeffs_via_enumeration,
)

ENV_CACHE_DIR = "BRAIDKL_CACHE_DIR"

SUITES = (
    "thm1.1", "thm1.2", "thm1.3", "cor1.5", "thm1.6", "prop2.7",
    "lem2.4", "lem3.1", "prop3.2", "lem3.3", "parity", "lem4.1",
    "identities",
)


@dataclass
class RunConfig:
    fmt: str = "md"
    cache_dir: Path | None = None
    mode: str = "both"
    max_n: int | None = None
    use_cache: bool = True


# -- polynomial cache ------------------------------------------------------


def cache_path(cache_dir: Path, kind: str, n: int) -> Path:
    return cache_dir / f"{kind}_{n}.json"


def load_cached_poly(cache_dir: Path, kind: str, n: int) -> IntPoly | None:
    path = cache_path(cache_dir, kind, n)
    if not path.exists():
        return None
    entry = json.loads(path.read_text())
    if entry.get("kind") != kind or entry.get("n") != n:
        raise ValueError(f"cache entry {path} does not match its name")
    coeffs = [int(c) for c in entry["coeffs"]]
    if any(c < 0 for c in coeffs):
        raise ValueError(f"cache entry {path} has negative coefficients")
    poly = IntPoly(coeffs)
    if n >= 2 and not 2 * poly.degree() < n - 1:
        raise ValueError(f"cache entry {path} violates the degree bound")
    return poly


def store_cached_poly(cache_dir: Path, kind: str, n: int,
                      poly: IntPoly) -> None:
    cache_dir.mkdir(parents=True, exist_ok=True)
    entry = {
        "kind": kind,
        "n": n,
        "coeffs": [str(c) for c in poly.coeffs],
        "version": __version__,
    }
    cache_path(cache_dir, kind, n).write_text(
        json.dumps(entry, sort_keys=True) + "\n"
    )


def poly_with_cache(kind: str, n: int, config: RunConfig,
                    table: KlTable | None = None) -> IntPoly:
    if config.use_cache and config.cache_dir is not None:
        cached = load_cached_poly(config.cache_dir, kind, n)
        if cached is not None:
            if table is not None and not table.has(kind, n):
                table.set(kind, n, cached, "cache")
            return cached
    fn = kl_poly_braid if kind == "P" else inv_kl_poly_braid
    poly = fn(n, table)
    if config.use_cache and config.cache_dir is not None:
        store_cached_poly(config.cache_dir, kind, n, poly)
    return poly


# -- rendering -------------------------------------------------------------


def render_rows(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [
            ",".join(str(r[c]) for c in columns) for r in rows
        ]
        return "\n".join(lines) + "\n"
    if fmt == "md":
        head = "| " + " | ".join(columns) + " |"
        sep = "|" + "|".join(" --- " for _ in columns) + "|"
        body = [
            "| " + " | ".join(str(r[c]) for c in columns) + " |"
            for r in rows
        ]
        return "\n".join([head, sep, *body]) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# -- verify suites ---------------------------------------------------------


def _row(suite: str, parameter: str, lhs, rhs) -> dict:
    return {
        "suite": suite,
        "parameter": parameter,
        "lhs": str(lhs),
        "rhs": str(rhs),
        "pass": lhs == rhs,
    }


def suite_thm11(config: RunConfig) -> list[dict]:
    max_n = config.max_n or 7
    table = KlTable()
    rows = []
    for n in range(2, max_n + 1):
        rec = kl_poly_braid(n, table)
        enum = kl_coeffs_via_enumeration(n)
        for i in range(max(rec.degree(), enum.degree()) + 1):
            rows.append(
                _row("thm1.1", f"n={n},i={i}", rec.coeff(i), enum.coeff(i))
            )
    return rows


def suite_thm12(config: RunConfig) -> list[dict]:
    max_n = config.max_n or 7
    table = KlTable()
    rows = []
    if config.mode in ("closed-form", "both"):
        for n in range(2, max_n + 1):
            rows.append(_row(
                "thm1.2", f"n={n},recursion",
                kl_poly_braid(2 * n, table).coeff(n - 1),
                leading_coeff_closed_form("P_even", n),
            ))
    if config.mode in ("exhaustive", "both"):
        for n in range(2, min(max_n, 4) + 1):
            rows.append(_row(
                "thm1.2", f"n={n},cacti",
                len(enumerate_cacti(range(1, 2 * n))),
                leading_coeff_closed_form("P_even", n),
            ))
    return rows


def suite_thm13(config: RunConfig) -> list[dict]:
    max_n = config.max_n or 7
    table = KlTable()
    rows = []
    if config.mode in ("closed-form", "both"):
        for n in range(2, max_n + 1):
            rows.append(_row(
                "thm1.3", f"n={n},recursion",
                kl_poly_braid(2 * n - 1, table).coeff(n - 2),
                leading_coeff_closed_form("P_odd", n),
            ))
    if config.mode in ("exhaustive", "both"):
        for n in range(2, min(max_n, 4) + 1):
            rows.append(_row(
                "thm1.3", f"n={n},enumeration",
                count_S(2 * n - 2, n),
                leading_coeff_closed_form("P_odd", n),
            ))
    return rows


def suite_cor15(config: RunConfig) -> list[dict]:
    max_n = min(config.max_n or 4, 4)
    rows = []
    for n in range(2, max_n + 1):
        e_n = count_E(n)
        rows.append(_row("cor1.5", f"n={n},closed", e_n, count_E_closed(n)))
        # Theorem 1.4 consistency: E_n + |Des_1(n)| = |S(2n-2, n)|
        rows.append(_row(
            "cor1.5", f"n={n},thm1.4",
            e_n + len(enumerate_deserts(n, 1)),
            count_S(2 * n - 2, n),
        ))
    return rows


def suite_thm16(config: RunConfig) -> list[dict]:
    max_n = config.max_n or 6
    table = KlTable()
    rows = []
    for n in range(2, max_n + 1):
        rows.append(_row(
            "thm1.6", f"n={n},even",
            inv_kl_poly_braid(2 * n, table).coeff(n - 1),
            leading_coeff_closed_form("Q_even", n),
        ))
        rows.append(_row(
            "thm1.6", f"n={n},odd",
            inv_kl_poly_braid(2 * n - 1, table).coeff(n - 2),
            leading_coeff_closed_form("Q_odd", n),
        ))
    return rows


def suite_prop27(config: RunConfig) -> list[dict]:
    max_n = config.max_n or 20
    rows = []
    for n in range(3, max_n + 1):
        mode = config.mode if n <= 4 else "closed-form"
        report = verify_difference(n, mode)
        for check in report["checks"]:
            rows.append(_row(
                "prop2.7", f"n={n},{check['name']}",
                check["lhs"], check["rhs"],
            ))
    return rows


def suite_lem24(config: RunConfig) -> list[dict]:
    max_n = min(config.max_n or 4, 4)
    rows = []
    for n in range(2, max_n + 1):
        report = fibers_of_phi(n)
        rows.append(_row(
            "lem2.4", f"n={n},surjective", report.surjective, True
        ))
        rows.append(_row(
            "lem2.4", f"n={n},fibers-ok", not report.failures, True
        ))
        rows.append(_row(
            "lem2.4", f"n={n},total",
            sum(report.fiber_sizes.values()), report.source_count,
        ))
    return rows


def _feasible_types(p: int):
    """All Husimi types with 1 + sum (i-1) n_i = p, as HusimiType."""
    out = []

    def rec(remaining: int, max_part: int, acc: dict):
        if remaining == 0:
            size = max(acc) if acc else 2
            counts = [0] * (size - 1)
            for i, c in acc.items():
                counts[i - 2] = c
            out.append(HusimiType(counts))
            return
        for part in range(min(remaining, max_part), 0, -1):
            acc[part + 1] = acc.get(part + 1, 0) + 1
            rec(remaining - part, part, acc)
            acc[part + 1] -= 1
            if not acc[part + 1]:
                del acc[part + 1]

    rec(p - 1, p - 1, {})
    return out


def suite_lem31(config: RunConfig) -> list[dict]:
    max_p = min(config.max_n or 6, 6)
    rows = []
    for p in range(1, max_p + 1):
        for typ in _feasible_types(p):
            rows.append(_row(
                "lem3.1", f"p={p},type={list(typ.counts)}",
                len(enumerate_husimi(p, typ)),
                count_husimi_closed(p, typ),
            ))
    return rows


def suite_prop32(config: RunConfig) -> list[dict]:
    max_n = min(config.max_n or 4, 4)
    rows = []
    for n in range(2, max_n + 1):
        for m in range(1, n):
            rows.append(_row(
                "prop3.2", f"n={n},m={m}",
                len(enumerate_rooted_deserts(n, m)),
                count_rdes_closed(n, m),
            ))
    return rows


def suite_lem33(config: RunConfig) -> list[dict]:
    max_n = config.max_n or 20
    rows = []
    for n in range(2, max_n + 1):
        rows.append(_row(
            "lem3.3", f"n={n},convolution",
            des_convolution(n, 1), count_des1_closed(n),
        ))
        if n <= 4:
            rows.append(_row(
                "lem3.3", f"n={n},enumeration",
                len(enumerate_deserts(n, 1)), count_des1_closed(n),
            ))
    return rows


def suite_parity(config: RunConfig) -> list[dict]:
    max_n = config.max_n or 7
    table = KlTable()
    return [
        _row("parity", f"n={n}", verify_parity_identity(n, table), True)
        for n in range(1, max_n + 1)
    ]


def suite_lem41(config: RunConfig) -> list[dict]:
    max_n = config.max_n or 7
    table = KlTable()
    return [
        _row("lem4.1", f"n={n}", verify_leading_relation(n, table), True)
        for n in range(2, max_n + 1)
    ]


def suite_identities(config: RunConfig) -> list[dict]:
    cases = run_catalog(max_mn=config.max_n or 40)
    rows = []
    for c in cases:
        if c.skipped:
            continue
        rows.append(_row(
            "identities", f"{c.identity}{c.params}", c.lhs, c.rhs
        ))
    skipped = sum(1 for c in cases if c.skipped)
    rows.append(_row(
        "identities", f"skips={skipped}", "guarded", "guarded"
    ))
    return rows


SUITE_RUNNERS = {
    "thm1.1": suite_thm11,
    "thm1.2": suite_thm12,
    "thm1.3": suite_thm13,
    "cor1.5": suite_cor15,
    "thm1.6": suite_thm16,
    "prop2.7": suite_prop27,
    "lem2.4": suite_lem24,
    "lem3.1": suite_lem31,
    "prop3.2": suite_prop32,
    "lem3.3": suite_lem33,
    "parity": suite_parity,
    "lem4.1": suite_lem41,
    "identities": suite_identities,
}


# -- subcommand handlers ---------------------------------------------------


def cmd_poly(args: argparse.Namespace, config: RunConfig) -> int:
    poly = poly_with_cache(args.kind, args.n, config)
    rows = [
        {"kind": args.kind, "n": args.n, "i": i, "coeff": str(poly.coeff(i))}
        for i in range(poly.degree() + 1)
    ]
    sys.stdout.write(render_rows(rows, ["kind", "n", "i", "coeff"],
                                 config.fmt))
    return 0


def _parse_type(text: str) -> HusimiType:
    return HusimiType(int(t) for t in text.split(","))


def cmd_enum(args: argparse.Namespace, config: RunConfig) -> int:
    family = args.family
    objects: list | None = None
    if family == "s":
        if args.n is None or args.k is None:
            raise UsageError("enum s needs --n and --k")
        members = enumerate_S(args.n, args.k)
        count = len(members)
        if args.list:
            objects = [str(m.fingerprint()) for m in members]
    elif family == "cacti":
        if args.vertices is None:
            raise UsageError("enum cacti needs --vertices")
        cacti = enumerate_cacti(range(1, args.vertices + 1))
        count = len(cacti)
        if args.list:
            objects = [str(g.fingerprint()) for g in cacti]
    elif family in ("deserts", "rdeserts"):
        if args.n is None or args.m is None:
            raise UsageError(f"enum {family} needs --n and --m")
        fn = enumerate_deserts if family == "deserts" else enumerate_rooted_deserts
        items = fn(args.n, args.m)
        count = len(items)
        if args.list:
            objects = [str(d.fingerprint()) for d in items]
    elif family == "husimi":
        if args.vertices is None or args.type is None:
            raise UsageError("enum husimi needs --vertices and --type")
        typ = _parse_type(args.type)
        graphs = enumerate_husimi(args.vertices, typ)
        count = len(graphs)
        if args.list:
            objects = [str(g.fingerprint()) for g in graphs]
    else:
        raise UsageError(f"unknown family {family!r}")

    rows = [{"family": family, "count": count}]
    sys.stdout.write(render_rows(rows, ["family", "count"], config.fmt))
    if objects is not None:
        for obj in sorted(objects):
            sys.stdout.write(obj + "\n")
    return 0


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    rows = SUITE_RUNNERS[args.suite](config)
    sys.stdout.write(render_rows(
        rows, ["suite", "parameter", "lhs", "rhs", "pass"], config.fmt
    ))
    failures = [r for r in rows if not r["pass"]]
    total = len(rows)
    sys.stdout.write(
        f"# {args.suite}: {total - len(failures)}/{total} checks passed\n"
    )
    if failures:
        sys.stdout.write(render_rows(
            failures, ["suite", "parameter", "lhs", "rhs", "pass"], "md"
        ))
        return 1
    return 0


def cmd_oracle(args: argparse.Namespace, config: RunConfig) -> int:
    from . import oracles

    if args.which == "char":
        sys.stdout.write(str(oracles.mobius_char_poly(args.n)) + "\n")
    elif args.which == "qrel":
        sys.stdout.write(str(oracles.setpartition_Q_relation(args.n)) + "\n")
    elif args.which == "scan":
        if args.kind == "cactus":
            hits = oracles.graph_scan(oracles.naive_is_cactus, args.p)
        else:
            want = tuple(int(t) for t in args.type.split(",")) if args.type \
                else None
            hits = oracles.graph_scan(
                lambda v, e: (t := oracles.naive_husimi_type(v, e))
                is not None and (want is None or t == want),
                args.p,
            )
        sys.stdout.write(f"count {len(hits)}\n")
        if args.list:
            for h in hits:
                sys.stdout.write(str(h) + "\n")
    return 0


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"),
                        default="md", help="output format")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help=f"polynomial cache directory (or ${ENV_CACHE_DIR})")

    parser = argparse.ArgumentParser(
        prog="braidkl",
        description="Exact Kazhdan-Lusztig polynomials of braid matroids "
                    "and the combinatorics of their leading coefficients.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    # metavar hides the provenance-only `oracle` subcommand from help
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="{poly,enum,verify}")

    p_poly = sub.add_parser("poly", parents=[common],
                            help="compute P or Q for B_n")
    p_poly.add_argument("kind", choices=("P", "Q"))
    p_poly.add_argument("n", type=int)
    p_poly.add_argument("--no-cache", action="store_true")

    p_enum = sub.add_parser("enum", parents=[common],
                            help="enumerate combinatorial families")
    p_enum.add_argument("family",
                        choices=("s", "cacti", "deserts", "rdeserts",
                                 "husimi"))
    p_enum.add_argument("--n", type=int)
    p_enum.add_argument("--k", type=int)
    p_enum.add_argument("--m", type=int)
    p_enum.add_argument("--vertices", type=int)
    p_enum.add_argument("--type", type=str,
                        help="Husimi type as comma-separated n_2,n_3,...")
    p_enum.add_argument("--list", action="store_true",
                        help="print every object, not just the count")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--mode",
                          choices=("closed-form", "exhaustive", "both"),
                          default="both")

    p_oracle = sub.add_parser("oracle", parents=[common])  # hidden: no help
    p_oracle.add_argument("which", choices=("char", "qrel", "scan"))
    p_oracle.add_argument("--n", type=int, default=4)
    p_oracle.add_argument("--p", type=int, default=5)
    p_oracle.add_argument("--kind", choices=("cactus", "husimi"),
                          default="cactus")
    p_oracle.add_argument("--type", type=str, default=None)
    p_oracle.add_argument("--list", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    cache_dir = args.cache_dir
    if cache_dir is None and os.environ.get(ENV_CACHE_DIR):
        cache_dir = Path(os.environ[ENV_CACHE_DIR])
    config = RunConfig(
        fmt=args.format,
        cache_dir=cache_dir,
        mode=getattr(args, "mode", "both"),
        max_n=getattr(args, "max_n", None),
        use_cache=not getattr(args, "no_cache", False),
    )
    try:
        if args.command == "poly":
            return cmd_poly(args, config)
        if args.command == "enum":
            return cmd_enum(args, config)
        if args.command == "verify":
            return cmd_verify(args, config)
        if args.command == "oracle":
            return cmd_oracle(args, config)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except ResourceCapError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return 3
    except ValueError as exc:
        # bad parameter values (n/m/type out of domain, corrupt cache)
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
