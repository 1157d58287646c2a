"""Command-line front end: guard sweeps, case presets, guard search, catalog.

Exit codes: 0 success, 2 invalid flags, 3 scenario validation failure,
4 I/O failure. CSV output is byte-identical for identical flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import (
    FLOOR_DB,
    IniReport,
    coupling_matrix,
    expected_ini,
    min_guard_search,
    run_monte_carlo,
    summarize,
)
from .errors import (
    InvalidGuard,
    InvalidScenario,
    TargetUnreachable,
    UnknownNumerology,
)
from .numerology import CATALOG, NORMAL_CP_RATIO, build_scenario

CSV_HEADER = "case_id,guard_khz,numerology,bin_index,abs_freq_khz,ini_db,trials"

# Fig-6-style presets: case id -> (k, guard list in kHz); CP ratio is 1/14.
CASE_PRESETS: dict[int, tuple[int, tuple[float, ...]]] = {
    1: (1, (0.0, 180.0, 360.0)),
    2: (1, (15.0, 195.0, 375.0)),
    3: (2, (0.0, 180.0, 360.0)),
    4: (2, (45.0, 225.0, 405.0)),
}


def _cp_ratio(text: str) -> float:
    """CP ratio flag value: a float, or a fraction like ``1/14``."""
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def _guard_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(g) for g in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad guard list {text!r}") from exc


def _format_db(value: float) -> str:
    if value <= FLOOR_DB:
        return "-200.000"
    return f"{value:.6g}"


def _csv_rows(case_id: int, report: IniReport) -> list[str]:
    guard = report.scenario.guard_khz
    rows = []
    for numerology, bin_index, freq_khz, db in report.entries():
        rows.append(
            f"{case_id},{guard:g},{numerology},{bin_index},{freq_khz:g},"
            f"{_format_db(db)},{report.trials}"
        )
    return rows


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def _sweep(case_id, n, k, cp_ratio, guards, trials, seed, oracle, workers):
    """Run one guard sweep; returns (csv rows, summary records)."""
    rows, summaries = [], []
    for guard in guards:
        sc = build_scenario(n, k, cp_ratio, guard, trials, seed)
        if oracle:
            report = expected_ini(coupling_matrix(sc), sc)
        else:
            report = run_monte_carlo(sc, workers=workers)
        rows.extend(_csv_rows(case_id, report))
        summaries.append(
            {"case_id": case_id, "guard_khz": guard, **summarize(report)}
        )
    return rows, summaries


def cmd_run(args) -> int:
    rows, summaries = _sweep(
        0, args.n, args.k, args.cp_ratio, args.guards,
        args.trials, args.seed, args.oracle, args.workers,
    )
    _write_text(args.out, "\n".join([CSV_HEADER] + rows) + "\n")
    if args.summary is not None:
        _write_text(args.summary, json.dumps(summaries, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_cases(args) -> int:
    import os

    os.makedirs(args.out_dir, exist_ok=True)
    all_summaries = []
    for case_id, (k, guards) in CASE_PRESETS.items():
        rows, summaries = _sweep(
            case_id, args.n, k, NORMAL_CP_RATIO, guards,
            args.trials, args.seed, False, args.workers,
        )
        path = os.path.join(args.out_dir, f"case{case_id}.csv")
        _write_text(path, "\n".join([CSV_HEADER] + rows) + "\n")
        all_summaries.extend(summaries)
    _write_text(
        os.path.join(args.out_dir, "summary.json"),
        json.dumps(all_summaries, indent=2, sort_keys=True) + "\n",
    )
    return 0


def cmd_min_guard(args) -> int:
    template = build_scenario(args.n, args.k, args.cp_ratio, 0.0)
    try:
        guard = min_guard_search(template, args.target_db)
    except TargetUnreachable as exc:
        print(f"unreachable best={exc.best_db:.3f}")
        return 0
    print(f"guard_khz={guard:g}")
    return 0


def cmd_catalog(args) -> int:
    print("FR   SCS_kHz  CP_us        Slot_ms  MaxBW_MHz")
    for entry in CATALOG:
        cp = f"{entry.cp_dur_us:.2f}"
        if entry.ext_cp_dur_us is not None:
            cp += f" | {entry.ext_cp_dur_us:.2f}"
        print(
            f"{entry.freq_range.value:<4} {entry.scs_khz:<8g} {cp:<12} "
            f"{entry.slot_ms:<8g} {entry.max_bw_mhz:g}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inisim",
        description="Mixed-numerology CP-OFDM inter-numerology interference simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="sweep guards for one (n, k) configuration")
    run.add_argument("--n", type=int, default=256, help="reference transform size")
    run.add_argument("--k", type=int, required=True, help="SCS scaling exponent (>=1)")
    run.add_argument("--cp-ratio", type=_cp_ratio, default=NORMAL_CP_RATIO,
                     help="CP fraction of the useful symbol; accepts e.g. 1/14")
    run.add_argument("--guards", type=_guard_list, default=(0.0,),
                     help="comma list of guard bands in kHz")
    run.add_argument("--trials", type=int, default=500)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--out", default=None, help="CSV path (default: stdout)")
    run.add_argument("--summary", default=None, help="summary JSON path")
    run.add_argument("--oracle", action="store_true",
                     help="use the deterministic coupling oracle instead of Monte Carlo")
    run.add_argument("--workers", type=int, default=1)
    run.set_defaults(func=cmd_run)

    cases = sub.add_parser("cases", help="run the four built-in guard-sweep cases")
    cases.add_argument("--out-dir", default=".")
    cases.add_argument("--trials", type=int, default=500)
    cases.add_argument("--seed", type=int, default=0)
    cases.add_argument("--n", type=int, default=256)
    cases.add_argument("--workers", type=int, default=1)
    cases.set_defaults(func=cmd_cases)

    ming = sub.add_parser("min-guard", help="smallest guard meeting an INI target")
    ming.add_argument("--k", type=int, required=True)
    ming.add_argument("--cp-ratio", type=_cp_ratio, default=NORMAL_CP_RATIO)
    ming.add_argument("--target-db", type=float, required=True)
    ming.add_argument("--n", type=int, default=256)
    ming.set_defaults(func=cmd_min_guard)

    cat = sub.add_parser("catalog", help="print the NR numerology table")
    cat.set_defaults(func=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InvalidGuard, InvalidScenario, UnknownNumerology) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
