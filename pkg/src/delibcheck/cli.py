"""Command-line front end.

Subcommands: extensions, check, shrink, probe-validities, random.

Exit codes are a stable contract: 0/1 carry check verdicts, 2 input parse
errors, 3 configuration errors (unknown semantics, bad universe), 4 oracle
mismatch, 5 fresh-pool exhaustion, 6 a validity counterexample, 64 usage.
Stdout is deterministic for identical inputs and seed; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .arguments import Arg, arg, is_reserved
from .basis import Basis, ROOT, format_basis_json, parse_basis, shrink, vicinity
from .checker import (
    CheckConfig,
    CheckStats,
    check_at_root,
    check_with_trace,
    oracle_check,
    quantifier_domain,
)
from .errors import (
    ApxFormatError,
    BasisFormatError,
    DomainError,
    FormulaSyntaxError,
    FreshPoolError,
)
from .formulas import (
    WhiteFormula,
    black_atoms,
    format_formula,
    update_box,
    white_box,
    white_iff,
    white_implies,
    white_depth,
)
from .formulas import ExistsDiamond, UpdateDiamond
from .framework import parse_apx
from .parser import parse_formula
from .randgen import random_basis, random_white_formula
from .semantics import SemanticsKind, extensions

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_CONFIG = 3
EXIT_ORACLE_MISMATCH = 4
EXIT_FRESH_POOL = 5
EXIT_COUNTEREXAMPLE = 6
EXIT_USAGE = 64


@dataclass
class RunReport:
    """What a subcommand produced: a verdict plus run statistics."""

    verdict: object
    elapsed_ms: float = 0.0
    stats: dict = field(default_factory=dict)

    def payload(self, command: str) -> dict:
        # elapsed_ms deliberately left out: stdout must be byte-identical
        # across runs with identical inputs and seed.
        return {"command": command, "verdict": self.verdict, "stats": self.stats}


class _UsageError(Exception):
    pass


class _ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _semantics(value: str) -> SemanticsKind:
    try:
        return SemanticsKind(value)
    except ValueError:
        known = ", ".join(s.value for s in SemanticsKind)
        raise _ConfigError(f"unknown semantics {value!r} (expected one of: {known})")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ApxFormatError(f"cannot read {path}: {exc.strerror}")


def _emit(report: RunReport, command: str, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report.payload(command), sort_keys=True))
    else:
        for line in text_lines:
            print(line)
    print(f"# elapsed_ms={report.elapsed_ms:.1f}", file=sys.stderr)


def _ext_sort_key(ext) -> tuple:
    return tuple(sorted(a.index for a in ext))


def _ext_text(ext) -> str:
    return "{" + ",".join(a.name for a in sorted(ext)) + "}"


def _cmd_extensions(ns) -> int:
    fw = parse_apx(_read(ns.af_file))
    sem = _semantics(ns.semantics)
    start = time.perf_counter()
    exts = sorted(extensions(fw, sem), key=_ext_sort_key)
    elapsed = (time.perf_counter() - start) * 1000
    report = RunReport(
        verdict=[sorted(a.name for a in ext) for ext in exts],
        elapsed_ms=elapsed,
        stats={
            "argument_count": len(fw.nodes),
            "attack_count": len(fw.edges),
            "extension_count": len(exts),
        },
    )
    _emit(report, "extensions", ns.json, [_ext_text(e) for e in exts])
    return EXIT_TRUE


def _parse_universe(spec: str) -> frozenset[Arg]:
    names = [n.strip() for n in spec.split(",") if n.strip()]
    if not names:
        raise _ConfigError("--universe must list at least one argument")
    for n in names:
        if is_reserved(n):
            raise _ConfigError(f"universe argument {n!r} is reserved")
    try:
        return frozenset(arg(n) for n in names)
    except ValueError as exc:
        raise _ConfigError(str(exc))


def _shrink_stats(b: Basis, phi: WhiteFormula) -> tuple[Basis, dict]:
    region = vicinity(b, black_atoms(phi), white_depth(phi))
    shrunk = shrink(b, phi)
    total = sum(len(v) for v in b.views.values())
    kept = sum(len(v) for v in shrunk.views.values())
    return shrunk, {
        "vicinity_size": len(region),
        "edges_kept": kept,
        "edges_dropped": total - kept,
    }


def _cmd_check(ns) -> int:
    b = parse_basis(_read(ns.basis_file))
    phi = parse_formula(ns.formula)
    sem = _semantics(ns.semantics)
    cfg = CheckConfig(
        semantics=sem, memoize=ns.memoize, fresh_pool_size=ns.fresh_pool_size
    )
    stats = CheckStats()
    start = time.perf_counter()
    shrunk, shrink_stats = _shrink_stats(b, phi)
    verdict = check_at_root(b, phi, cfg, stats)
    mismatch = False
    if ns.oracle:
        if ns.universe:
            universe = _parse_universe(ns.universe)
        else:
            universe = quantifier_domain(b, phi, cfg) | b.arguments
        try:
            oracle_verdict = oracle_check(b, phi, ROOT, universe, sem)
        except DomainError as exc:
            raise _ConfigError(str(exc))
        mismatch = oracle_verdict != verdict
        verdict = oracle_verdict
    elapsed = (time.perf_counter() - start) * 1000
    if ns.trace:
        ok, witness = check_with_trace(shrunk, phi, ROOT, cfg)
        Path(ns.trace).write_text(
            json.dumps(
                {"formula": ns.formula, "satisfied": ok, "witness": witness},
                indent=2,
                sort_keys=True,
            )
        )
    report = RunReport(
        verdict=verdict,
        elapsed_ms=elapsed,
        stats={
            "states_visited": stats.states_visited,
            "successors_enumerated": stats.successors_enumerated,
            **shrink_stats,
        },
    )
    if mismatch:
        print(
            "oracle mismatch: shrunk run disagrees with the explicit-universe oracle",
            file=sys.stderr,
        )
        return EXIT_ORACLE_MISMATCH
    _emit(report, "check", ns.json, ["true" if verdict else "false"])
    return EXIT_TRUE if verdict else EXIT_FALSE


def _cmd_shrink(ns) -> int:
    b = parse_basis(_read(ns.basis_file))
    phi = parse_formula(ns.formula)
    start = time.perf_counter()
    shrunk, shrink_stats = _shrink_stats(b, phi)
    elapsed = (time.perf_counter() - start) * 1000
    text = format_basis_json(shrunk)
    if ns.output:
        Path(ns.output).write_text(text + "\n")
        body = []
    else:
        body = [text]
    report = RunReport(verdict=json.loads(text), elapsed_ms=elapsed, stats=shrink_stats)
    _emit(report, "shrink", ns.json, body)
    return EXIT_TRUE


def _schemata(include_invalid: bool):
    """Schema builders: (name, f(p, q, body) -> formula)."""

    def commute(p, q, body):
        return white_iff(
            UpdateDiamond(p, UpdateDiamond(q, body)),
            UpdateDiamond(q, UpdateDiamond(p, body)),
        )

    def diamond_past_box(p, q, body):
        return white_implies(
            UpdateDiamond(p, update_box(q, body)),
            update_box(q, UpdateDiamond(p, body)),
        )

    def exists_past_forall(p, q, body):
        del p, q
        return white_implies(
            ExistsDiamond(white_box(body)), white_box(ExistsDiamond(body))
        )

    def idempotent(p, q, body):
        del q
        return white_implies(
            UpdateDiamond(p, UpdateDiamond(p, body)), UpdateDiamond(p, body)
        )

    out = [
        ("update-commute", commute),
        ("diamond-past-box", diamond_past_box),
        ("exists-past-forall", exists_past_forall),
        ("update-idempotent", idempotent),
    ]
    if include_invalid:
        # Known-invalid converse of diamond-past-box; exercises the
        # counterexample machinery end to end.
        def invalid_converse(p, q, body):
            return white_implies(
                update_box(q, UpdateDiamond(p, body)),
                UpdateDiamond(p, update_box(q, body)),
            )

        out.append(("box-past-diamond-converse", invalid_converse))
    return out


def _cmd_probe(ns) -> int:
    sem = _semantics(ns.semantics)
    cfg = CheckConfig(semantics=sem, memoize=True)
    rng = random.Random(ns.seed)
    schemata = _schemata(ns.include_invalid_schema)
    start = time.perf_counter()
    checked = 0
    for trial in range(ns.trials):
        b = random_basis(rng, ns.max_args, ns.max_agents)
        atoms = sorted(b.arguments)
        body = random_white_formula(rng, atoms, max_depth=1)
        p = rng.choice(atoms)
        q = rng.choice(atoms)
        for name, build in schemata:
            phi = build(p, q, body)
            checked += 1
            if not check_at_root(b, phi, cfg):
                witness = {
                    "schema": name,
                    "trial": trial,
                    "p": p.name,
                    "q": q.name,
                    "body": format_formula(body),
                    "formula": format_formula(phi),
                    "basis": json.loads(format_basis_json(b)),
                }
                print(json.dumps(witness, sort_keys=True))
                print(f"counterexample to {name} at trial {trial}", file=sys.stderr)
                return EXIT_COUNTEREXAMPLE
    elapsed = (time.perf_counter() - start) * 1000
    report = RunReport(
        verdict=True,
        elapsed_ms=elapsed,
        stats={"trials": ns.trials, "instances_checked": checked},
    )
    _emit(report, "probe-validities", ns.json, [f"ok: {checked} instances, no counterexample"])
    return EXIT_TRUE


def _cmd_random(ns) -> int:
    rng = random.Random(ns.seed)
    b = random_basis(rng, ns.max_args, ns.max_agents, ns.density)
    report = RunReport(
        verdict=json.loads(format_basis_json(b)),
        stats={
            "agents": len(b.agents),
            "arguments": len(b.arguments),
            "edges": sum(len(v) for v in b.views.values()),
        },
    )
    _emit(report, "random", ns.json, [format_basis_json(b)])
    return EXIT_TRUE


def _build_parser() -> _Parser:
    parser = _Parser(prog="delibcheck", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, default=0, help="RNG seed where randomness is used")
        p.add_argument(
            "--semantics",
            default="preferred",
            help="admissible|complete|grounded|preferred|stable (default preferred)",
        )

    p_ext = sub.add_parser("extensions", help="list the extensions of an APX framework")
    p_ext.add_argument("af_file")
    common(p_ext)
    p_ext.set_defaults(func=_cmd_extensions)

    p_chk = sub.add_parser("check", help="decide a formula at the empty state")
    p_chk.add_argument("basis_file")
    p_chk.add_argument("--formula", required=True)
    p_chk.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")
    p_chk.add_argument("--universe", help="comma-separated arguments for the oracle")
    p_chk.add_argument("--trace", help="write a JSON witness tree to this file")
    p_chk.add_argument("--memoize", action="store_true", help="cache (state, subformula) verdicts")
    p_chk.add_argument(
        "--fresh-pool-size",
        type=int,
        help="override the generic-witness pool (default: the formula's modal depth)",
    )
    common(p_chk)
    p_chk.set_defaults(func=_cmd_check)

    p_shr = sub.add_parser("shrink", help="restrict a basis to a formula's vicinity")
    p_shr.add_argument("basis_file")
    p_shr.add_argument("--formula", required=True)
    p_shr.add_argument("-o", "--output", help="write the shrunk basis here instead of stdout")
    common(p_shr)
    p_shr.set_defaults(func=_cmd_shrink)

    p_prb = sub.add_parser(
        "probe-validities", help="assert the validity schemata on random bases"
    )
    p_prb.add_argument("--seed", type=int, default=0)
    p_prb.add_argument("--trials", type=int, default=100)
    p_prb.add_argument("--max-args", type=int, default=4)
    p_prb.add_argument("--max-agents", type=int, default=3)
    p_prb.add_argument(
        "--include-invalid-schema",
        action="store_true",
        help=argparse.SUPPRESS,  # test hook: adds a schema that must fail
    )
    common(p_prb)
    p_prb.set_defaults(func=_cmd_probe)

    p_rnd = sub.add_parser("random", help="emit a random basis")
    p_rnd.add_argument("--seed", type=int, default=0)
    p_rnd.add_argument("--max-args", type=int, default=4)
    p_rnd.add_argument("--max-agents", type=int, default=3)
    p_rnd.add_argument("--density", type=float, default=0.4)
    common(p_rnd)
    p_rnd.set_defaults(func=_cmd_random)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        return ns.func(ns)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormulaSyntaxError, ApxFormatError, BasisFormatError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FreshPoolError as exc:
        print(f"fresh pool exhausted: {exc}", file=sys.stderr)
        return EXIT_FRESH_POOL
    except (_ConfigError, DomainError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def entry() -> None:  # console_scripts hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
