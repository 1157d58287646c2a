"""NR numerology catalog and mixed-numerology scenario construction.

All frequency quantities are in kHz unless suffixed otherwise; transform and
CP lengths are in samples. A :class:`MixedScenario` pins two coexisting
CP-OFDM numerologies sharing one composite frame: numerology 1 is the
reference lattice (base SCS, transform size ``n_ref``) and numerology 2 has
its SCS scaled by ``2**k`` and its transform size divided by the same factor,
so one numerology-1 symbol spans exactly ``2**k`` numerology-2 symbols.

Layout rules live here so that downstream modules never recompute them:

* numerology 1 occupies bins ``0 .. n_ref/2 - 1 - g1`` of its grid (the upper
  half of the transform inputs stays empty, and the top ``g1`` bins are ceded
  to the guard band);
* numerology 2 occupies bins ``M/2 + g2 .. M - 1`` of its ``M = n_ref/2**k``
  grid (lower half empty, bottom ``g2`` bins ceded to the guard);
* the CP is quantized on the smaller transform (``cp2 = round(cp_ratio*M)``)
  and scaled to ``cp1 = 2**k * cp2`` so both branches have identical frame
  length ``n_ref + cp1`` in samples.

The guard band sits only at the central boundary between the two
allocations; the circular wrap-around edge is left unguarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidGuard, InvalidScenario, UnknownNumerology

#: CP overhead of a normal-CP symbol (4.76 us of a 66.67 us symbol at 15 kHz).
NORMAL_CP_RATIO = 1.0 / 14.0


class FreqRange(str, Enum):
    FR1 = "FR1"
    FR2 = "FR2"


@dataclass(frozen=True)
class NumerologyEntry:
    """One row of the NR numerology table for data channels.

    ``ext_cp_dur_us`` is the extended-CP alternative, present only for the
    60 kHz rows.
    """

    mu: int
    scs_khz: int
    cp_dur_us: float
    ext_cp_dur_us: float | None
    slot_ms: float
    max_bw_mhz: int
    freq_range: FreqRange


# SCS = 15 * 2**mu kHz, slot = 1 / 2**mu ms; max BW is per frequency range.
CATALOG: tuple[NumerologyEntry, ...] = (
    NumerologyEntry(0, 15, 4.76, None, 1.0, 50, FreqRange.FR1),
    NumerologyEntry(1, 30, 2.38, None, 0.5, 100, FreqRange.FR1),
    NumerologyEntry(2, 60, 1.19, 4.17, 0.25, 100, FreqRange.FR1),
    NumerologyEntry(2, 60, 1.19, 4.17, 0.25, 200, FreqRange.FR2),
    NumerologyEntry(3, 120, 0.60, None, 0.125, 400, FreqRange.FR2),
)


def catalog_lookup(scs_khz: int, freq_range: FreqRange | str) -> NumerologyEntry:
    """Return the catalog row for (SCS, frequency range).

    Raises UnknownNumerology for pairs absent from the table, e.g.
    120 kHz in FR1.
    """
    fr = FreqRange(freq_range)
    for entry in CATALOG:
        if entry.scs_khz == scs_khz and entry.freq_range == fr:
            return entry
    raise UnknownNumerology(f"no numerology with SCS {scs_khz} kHz in {fr.value}")


@dataclass(frozen=True)
class Numerology:
    """One OFDM parameter set: SCS, transform size, CP length, active bins."""

    scs_khz: float
    nfft: int
    cp_len: int
    active_bins: tuple[int, ...]

    def __post_init__(self):
        if self.nfft < 2 or self.nfft & (self.nfft - 1):
            raise InvalidScenario(f"nfft must be a power of two, got {self.nfft}")
        if not 0 <= self.cp_len < self.nfft:
            raise InvalidScenario(
                f"cp_len must satisfy 0 <= cp_len < nfft, got {self.cp_len}"
            )
        bins = self.active_bins
        if any(not 0 <= b < self.nfft for b in bins):
            raise InvalidScenario("active bins out of range")
        if any(b2 <= b1 for b1, b2 in zip(bins, bins[1:])):
            raise InvalidScenario("active bins must be strictly ascending")
        if len(bins) > self.nfft // 2:
            raise InvalidScenario(
                f"at most nfft/2 = {self.nfft // 2} usable bins, got {len(bins)}"
            )

    @property
    def n_active(self) -> int:
        return len(self.active_bins)

    @property
    def symbol_len(self) -> int:
        """Samples per CP-extended symbol."""
        return self.nfft + self.cp_len


def guard_split(guard_khz: float, scs1_khz: float, scs2_khz: float) -> tuple[int, int]:
    """Split a total guard band into whole subcarriers of each numerology.

    Numerology 2 cedes ``g2 = floor((guard/2) / scs2)`` whole subcarriers
    (half the guard, rounded down to its coarser spacing); numerology 1 cedes
    the exact remainder. The identity ``g1*scs1 + g2*scs2 == guard_khz``
    always holds, which requires the guard to be a non-negative integer
    multiple of ``scs1_khz``.
    """
    ratio = guard_khz / scs1_khz
    if guard_khz < 0 or abs(ratio - round(ratio)) > 1e-9:
        raise InvalidGuard(
            f"guard {guard_khz:g} kHz is not a non-negative multiple of "
            f"{scs1_khz:g} kHz"
        )
    g2 = int((guard_khz / 2) // scs2_khz)
    g1 = int(round((guard_khz - g2 * scs2_khz) / scs1_khz))
    return g1, g2


@dataclass(frozen=True)
class MixedScenario:
    """A validated two-numerology experiment. Build via :func:`build_scenario`."""

    n_ref: int
    k: int
    cp_ratio: float
    guard_khz: float
    base_scs_khz: float
    trials: int
    seed: int
    num1: Numerology
    num2: Numerology
    g1: int
    g2: int

    @property
    def scale(self) -> int:
        """SCS scaling factor 2**k; also numerology-2 symbols per frame."""
        return 1 << self.k

    @property
    def frame_len(self) -> int:
        """Composite frame length in samples: one CP-extended num1 symbol."""
        return self.n_ref + self.num1.cp_len

    @property
    def sample_rate_hz(self) -> float:
        return self.n_ref * self.base_scs_khz * 1e3

    def freqs1_khz(self):
        """Absolute frequencies of numerology-1 active bins."""
        return tuple(b * self.num1.scs_khz for b in self.num1.active_bins)

    def freqs2_khz(self):
        """Absolute frequencies of numerology-2 active bins."""
        return tuple(b * self.num2.scs_khz for b in self.num2.active_bins)


def build_scenario(
    n_ref: int,
    k: int,
    cp_ratio: float = NORMAL_CP_RATIO,
    guard_khz: float = 0.0,
    trials: int = 500,
    seed: int = 0,
    base_scs_khz: float = 15.0,
) -> MixedScenario:
    """Derive and validate all layout parameters of a two-numerology scenario.

    Parameters
    ----------
    n_ref : reference transform size N (power of two, at least 2**(k+2)).
    k : SCS scaling exponent, >= 1; numerology 2 uses SCS ``base*2**k`` and
        transform size ``n_ref / 2**k``.
    cp_ratio : CP length as a fraction of the useful symbol, in [0, 0.5).
    guard_khz : total guard band between the numerologies (multiple of the
        base SCS).
    trials, seed : Monte Carlo trial count and RNG seed carried by the
        scenario.
    """
    if k < 1:
        raise InvalidScenario(f"scaling exponent k must be >= 1, got {k}")
    if n_ref < 2 or n_ref & (n_ref - 1):
        raise InvalidScenario(f"n_ref must be a power of two, got {n_ref}")
    if n_ref < 1 << (k + 2):
        raise InvalidScenario(
            f"n_ref must be at least 2**(k+2) = {1 << (k + 2)}, got {n_ref}"
        )
    if not 0.0 <= cp_ratio < 0.5:
        raise InvalidScenario(f"cp_ratio must lie in [0, 0.5), got {cp_ratio}")
    if trials < 1:
        raise InvalidScenario(f"trials must be positive, got {trials}")
    if not 0 <= seed < 1 << 64:
        raise InvalidScenario("seed must fit in an unsigned 64-bit integer")

    scale = 1 << k
    m = n_ref // scale
    scs2 = base_scs_khz * scale
    g1, g2 = guard_split(guard_khz, base_scs_khz, scs2)

    n1_active = n_ref // 2 - g1
    n2_active = m // 2 - g2
    if n1_active < 1 or n2_active < 1:
        raise InvalidScenario(
            f"guard {guard_khz:g} kHz leaves no active bins "
            f"(num1 keeps {n1_active}, num2 keeps {n2_active})"
        )

    cp2 = round(cp_ratio * m)
    cp1 = scale * cp2
    num1 = Numerology(base_scs_khz, n_ref, cp1, tuple(range(n1_active)))
    num2 = Numerology(scs2, m, cp2, tuple(range(m // 2 + g2, m)))

    # integer frame identity: one num1 symbol == 2**k num2 symbols
    assert n_ref + cp1 == scale * (m + cp2)

    return MixedScenario(
        n_ref=n_ref,
        k=k,
        cp_ratio=cp_ratio,
        guard_khz=guard_khz,
        base_scs_khz=base_scs_khz,
        trials=trials,
        seed=seed,
        num1=num1,
        num2=num2,
        g1=g1,
        g2=g2,
    )
