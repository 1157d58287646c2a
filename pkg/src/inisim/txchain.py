"""Transmit chain: BPSK mapping, bin allocation, unitary IDFT, CP, composite sum.

Time signals are plain complex128 ndarrays at the composite sample rate
(``scenario.sample_rate_hz``). Both transform sizes use the unitary
convention, which makes the per-subcarrier transmit power equal to 1 for
every active bin of either numerology without extra gain factors.
"""

from __future__ import annotations

import numpy as np

from .errors import LengthMismatch
from .numerology import MixedScenario, Numerology


def map_bpsk(bits) -> np.ndarray:
    """Map bits to BPSK symbols: 0 -> +1, 1 -> -1 (zero imaginary part)."""
    bits = np.asarray(bits, dtype=np.float64)
    return (1.0 - 2.0 * bits).astype(np.complex128)


def allocate_bins(symbols, num: Numerology) -> np.ndarray:
    """Place symbols on the numerology's active bins of a zero spectrum.

    Symbols map to ``num.active_bins`` in ascending bin order; every other
    bin is exactly zero.
    """
    symbols = np.asarray(symbols, dtype=np.complex128)
    if symbols.shape != (num.n_active,):
        raise LengthMismatch(
            f"expected {num.n_active} symbols for {num.n_active} active bins, "
            f"got shape {symbols.shape}"
        )
    spectrum = np.zeros(num.nfft, dtype=np.complex128)
    if num.n_active:
        spectrum[np.array(num.active_bins)] = symbols
    return spectrum


def inverse_transform(spectrum) -> np.ndarray:
    """Unitary inverse DFT: x[n] = (1/sqrt(L)) * sum_m X[m] e^{+2pi i mn/L}."""
    return np.fft.ifft(np.asarray(spectrum, dtype=np.complex128), norm="ortho")


def forward_transform(samples) -> np.ndarray:
    """Unitary forward DFT; inverse of :func:`inverse_transform`."""
    return np.fft.fft(np.asarray(samples, dtype=np.complex128), norm="ortho")


def add_cp(segment, cp_len: int) -> np.ndarray:
    """Prepend the last ``cp_len`` samples of the segment to itself."""
    segment = np.asarray(segment)
    if not 0 <= cp_len < len(segment):
        raise LengthMismatch(
            f"cp_len must satisfy 0 <= cp_len < {len(segment)}, got {cp_len}"
        )
    if cp_len == 0:
        return segment.copy()
    return np.concatenate([segment[-cp_len:], segment])


def _as_grid(grid, n_symbols: int, num: Numerology, name: str) -> np.ndarray:
    grid = np.atleast_2d(np.asarray(grid, dtype=np.complex128))
    if grid.shape != (n_symbols, num.n_active):
        raise LengthMismatch(
            f"{name} must have shape ({n_symbols}, {num.n_active}), "
            f"got {grid.shape}"
        )
    return grid


def num1_branch(scenario: MixedScenario, grid1) -> np.ndarray:
    """Numerology-1 half of the composite: one CP-extended wide symbol."""
    grid1 = _as_grid(grid1, 1, scenario.num1, "grid1")
    sym = inverse_transform(allocate_bins(grid1[0], scenario.num1))
    return add_cp(sym, scenario.num1.cp_len)


def num2_branch(scenario: MixedScenario, grid2) -> np.ndarray:
    """Numerology-2 half: 2**k consecutive CP-extended short symbols."""
    num2 = scenario.num2
    grid2 = _as_grid(grid2, scenario.scale, num2, "grid2")
    parts = [
        add_cp(inverse_transform(allocate_bins(row, num2)), num2.cp_len)
        for row in grid2
    ]
    return np.concatenate(parts)


def build_frame(scenario: MixedScenario, grid1, grid2) -> np.ndarray:
    """Sample-wise sum of the two branches over one composite frame.

    ``grid1`` holds the single numerology-1 symbol, shape (1, n1 bins);
    ``grid2`` holds the 2**k numerology-2 symbols, shape (2**k, n2 bins).
    Both branches have length ``scenario.frame_len`` by construction.
    """
    return num1_branch(scenario, grid1) + num2_branch(scenario, grid2)
