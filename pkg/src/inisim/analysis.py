"""Per-subcarrier interference estimation and guard-band analysis.

Two routes to the same quantity:

* :func:`run_monte_carlo` transmits independent random BPSK frames and
  averages the squared receive error per subcarrier (the measurement);
* :func:`coupling_matrix` + :func:`expected_ini` probe the linear chain one
  interfering slot at a time and sum squared leakage gains (the
  deterministic oracle — exact because the chain is linear and the BPSK
  sources are independent, zero-mean, unit-power).

Interference is reported in dB relative to unit symbol power; means below
``POWER_FLOOR`` are clamped to ``FLOOR_DB`` so exact zeros stay finite.

Reproducibility contract: trial ``t`` of a scenario draws its bits from a
counter-based Philox stream keyed by ``(seed, t)``, in the order numerology-1
bins ascending, then numerology-2 symbols (q ascending, bins ascending
within each symbol). Per-trial powers land in a preallocated
``(trials, bins)`` array that is reduced in a fixed order, so the result is
bitwise identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import InvalidScenario, ScenarioMismatch, TargetUnreachable
from .numerology import MixedScenario, build_scenario
from .rxchain import error_vector, recv_num1, recv_num2
from .txchain import build_frame, map_bpsk

#: Reported level for interference powers below POWER_FLOOR.
FLOOR_DB = -200.0
POWER_FLOOR = 1e-20


def _power_db(mean_power: np.ndarray) -> np.ndarray:
    """10*log10 with the sub-floor values clamped to FLOOR_DB."""
    mean_power = np.asarray(mean_power, dtype=np.float64)
    out = np.full(mean_power.shape, FLOOR_DB)
    live = mean_power >= POWER_FLOOR
    out[live] = 10.0 * np.log10(mean_power[live])
    return out


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class IniReport:
    """Per-subcarrier mean interference power for one scenario.

    ``ini1_db[i]`` belongs to numerology-1 active bin ``i`` (ascending);
    ``ini2_db`` likewise for numerology 2, already averaged over its 2**k
    symbol positions. ``trials`` echoes the Monte Carlo trial count and is 0
    for oracle-derived reports.
    """

    scenario: MixedScenario
    ini1_db: np.ndarray
    ini2_db: np.ndarray
    trials: int

    def __post_init__(self):
        _freeze(self.ini1_db)
        _freeze(self.ini2_db)

    def entries(self):
        """Yield (numerology_id, bin_index, abs_freq_khz, ini_db) rows."""
        sc = self.scenario
        for b, db in zip(sc.num1.active_bins, self.ini1_db):
            yield 1, b, b * sc.num1.scs_khz, float(db)
        for b, db in zip(sc.num2.active_bins, self.ini2_db):
            yield 2, b, b * sc.num2.scs_khz, float(db)


@dataclass(frozen=True)
class CouplingMatrix:
    """Deterministic cross-numerology leakage gains of the linear chain.

    ``num2_to_num1[q, j, i]``: gain from numerology-2 slot (symbol q, active
    bin j) onto numerology-1 active bin i. ``num1_to_num2[j, q, i]``: gain
    from numerology-1 active bin j onto numerology-2 slot (q, i). Same-
    numerology coupling is identity by self-transparency and not stored.
    """

    scenario: MixedScenario
    num2_to_num1: np.ndarray
    num1_to_num2: np.ndarray

    def __post_init__(self):
        _freeze(self.num2_to_num1)
        _freeze(self.num1_to_num2)


def _trial_grids(scenario: MixedScenario, trial: int):
    """Independent BPSK grids for one trial, drawn in the documented order."""
    n1 = scenario.num1.n_active
    n2 = scenario.num2.n_active
    scale = scenario.scale
    rng = np.random.Generator(np.random.Philox(key=(scenario.seed, trial)))
    bits = rng.integers(0, 2, size=n1 + scale * n2)
    grid1 = map_bpsk(bits[:n1]).reshape(1, n1)
    grid2 = map_bpsk(bits[n1:]).reshape(scale, n2)
    return grid1, grid2


def run_monte_carlo(scenario: MixedScenario, workers: int | None = None) -> IniReport:
    """Estimate per-subcarrier interference over ``scenario.trials`` frames.

    Each trial draws fresh BPSK data for both numerologies, builds the
    composite frame, receives both sides, and records the squared error per
    active bin (numerology 2 averaged over its 2**k symbol positions).
    ``workers`` > 1 runs trials on a thread pool; the output is bitwise
    identical for any value.
    """
    n1 = scenario.num1.n_active
    n2 = scenario.num2.n_active
    p1 = np.zeros((scenario.trials, n1))
    p2 = np.zeros((scenario.trials, n2))

    def one_trial(t: int) -> None:
        grid1, grid2 = _trial_grids(scenario, t)
        frame = build_frame(scenario, grid1, grid2)
        e1 = error_vector(recv_num1(frame, scenario), grid1[0])
        e2 = error_vector(recv_num2(frame, scenario), grid2)
        p1[t] = np.abs(e1) ** 2
        if n2:
            p2[t] = np.mean(np.abs(e2) ** 2, axis=0)

    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(one_trial, range(scenario.trials)))
    else:
        for t in range(scenario.trials):
            one_trial(t)

    return IniReport(
        scenario=scenario,
        ini1_db=_power_db(p1.mean(axis=0)),
        ini2_db=_power_db(p2.mean(axis=0)),
        trials=scenario.trials,
    )


def coupling_matrix(scenario: MixedScenario) -> CouplingMatrix:
    """Probe every cross-numerology slot with a lone unit symbol.

    The victim's own grid is zero, so the received values on its bins are
    exactly the leakage gains of the linear chain.
    """
    n1 = scenario.num1.n_active
    n2 = scenario.num2.n_active
    scale = scenario.scale
    zeros1 = np.zeros((1, n1), dtype=np.complex128)
    zeros2 = np.zeros((scale, n2), dtype=np.complex128)

    c21 = np.zeros((scale, n2, n1), dtype=np.complex128)
    for q in range(scale):
        for j in range(n2):
            grid2 = zeros2.copy()
            grid2[q, j] = 1.0
            c21[q, j] = recv_num1(build_frame(scenario, zeros1, grid2), scenario)

    c12 = np.zeros((n1, scale, n2), dtype=np.complex128)
    for j in range(n1):
        grid1 = zeros1.copy()
        grid1[0, j] = 1.0
        c12[j] = recv_num2(build_frame(scenario, grid1, zeros2), scenario)

    return CouplingMatrix(scenario=scenario, num2_to_num1=c21, num1_to_num2=c12)


def expected_ini(matrix: CouplingMatrix, scenario: MixedScenario) -> IniReport:
    """Exact expected interference from the coupling gains.

    Independent zero-mean unit-power BPSK sources make cross terms vanish,
    so the expected squared error on a victim bin is the sum of squared
    leakage magnitudes over all interfering slots.
    """
    if matrix.scenario != scenario:
        raise ScenarioMismatch("coupling matrix was built from a different scenario")
    p1 = np.sum(np.abs(matrix.num2_to_num1) ** 2, axis=(0, 1))
    # per victim slot (q, i), then averaged over the 2**k symbol positions
    p2_slots = np.sum(np.abs(matrix.num1_to_num2) ** 2, axis=0)
    p2 = p2_slots.mean(axis=0) if p2_slots.size else np.zeros(scenario.num2.n_active)
    return IniReport(scenario=scenario, ini1_db=_power_db(p1), ini2_db=_power_db(p2), trials=0)


def _edge_inner(ini_db: np.ndarray, edge_index: int) -> tuple[float, float]:
    """Edge-bin level and median over the remaining (inner) bins."""
    edge = float(ini_db[edge_index])
    if len(ini_db) > 1:
        inner = np.delete(ini_db, edge_index)
    else:
        inner = ini_db
    return edge, float(np.median(inner))


def summarize(report: IniReport, scenario: MixedScenario | None = None) -> dict:
    """Condense a report into the statistics the interference analysis uses.

    All statistics are over per-bin dB values (floored entries enter at
    FLOOR_DB). Numerology 1's edge bin is its highest active bin, numerology
    2's its lowest — the bins nearest the central boundary. Residue-class
    means group numerology-1 bins by ``bin % 2**k``.
    """
    sc = report.scenario
    if scenario is not None and scenario != sc:
        raise ScenarioMismatch("summary requested for a different scenario")

    edge1, inner1 = _edge_inner(report.ini1_db, len(report.ini1_db) - 1)
    edge2, inner2 = _edge_inner(report.ini2_db, 0)

    bins1 = np.array(sc.num1.active_bins)
    residue = [
        float(np.mean(report.ini1_db[bins1 % sc.scale == r]))
        for r in range(sc.scale)
    ]
    mean1 = float(np.mean(report.ini1_db))
    mean2 = float(np.mean(report.ini2_db))
    return {
        "num1": {
            "mean_ini_db": mean1,
            "edge_ini_db": edge1,
            "inner_median_db": inner1,
            "residue_class_means": residue,
        },
        "num2": {
            "mean_ini_db": mean2,
            "edge_ini_db": edge2,
            "inner_median_db": inner2,
        },
        "num2_minus_num1_db": mean2 - mean1,
    }


def min_guard_search(scenario: MixedScenario, ini_target_db: float) -> float:
    """Smallest guard band meeting a worst-case interference target.

    Scans guards upward from zero in steps of the base SCS, evaluating the
    deterministic expected interference of the rebuilt scenario, until the
    worst active-bin level of both numerologies is at or below the target.
    Raises TargetUnreachable (with the best achieved worst case) once the
    guard exhausts the half-band.
    """
    best = np.inf
    guard = 0.0
    while True:
        try:
            candidate = build_scenario(
                scenario.n_ref,
                scenario.k,
                scenario.cp_ratio,
                guard,
                scenario.trials,
                scenario.seed,
                scenario.base_scs_khz,
            )
        except InvalidScenario:
            break
        report = expected_ini(coupling_matrix(candidate), candidate)
        worst = max(report.ini1_db.max(), report.ini2_db.max())
        if worst <= ini_target_db:
            return guard
        best = min(best, worst)
        guard += scenario.base_scs_khz
    raise TargetUnreachable(
        f"no guard reaches {ini_target_db:g} dB; best worst-case {best:.3f} dB",
        best_db=float(best),
    )
