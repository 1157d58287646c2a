"""Asymmetric receiver for the composite frame.

Numerology 1 strips its full CP and applies one n_ref-point transform over
the whole composite signal. Numerology 2 divides the raw composite frame
into 2**k subblocks of ``M + cp2`` samples aligned to its own framing, then
strips each subblock's CP before its M-point transform. With
``cp1 = 2**k * cp2`` the subblocks tile the frame exactly, which keeps each
numerology transparent to itself: with the other numerology silenced the
received symbols equal the transmitted ones to machine precision, so any
deviation measured on a composite frame is inter-numerology interference.

No channel, noise, timing or frequency offset is applied anywhere.
"""

from __future__ import annotations

import numpy as np

from .errors import LengthMismatch, ShapeMismatch
from .numerology import MixedScenario
from .txchain import forward_transform


def _check_frame(frame, scenario: MixedScenario) -> np.ndarray:
    frame = np.asarray(frame, dtype=np.complex128)
    if frame.shape != (scenario.frame_len,):
        raise LengthMismatch(
            f"frame must have {scenario.frame_len} samples, got {frame.shape}"
        )
    return frame


def recv_num1(frame, scenario: MixedScenario) -> np.ndarray:
    """Received symbols on numerology-1 active bins, ascending bin order."""
    frame = _check_frame(frame, scenario)
    num1 = scenario.num1
    spectrum = forward_transform(frame[num1.cp_len:])
    if not num1.n_active:
        return np.zeros(0, dtype=np.complex128)
    return spectrum[np.array(num1.active_bins)]


def recv_num2(frame, scenario: MixedScenario) -> np.ndarray:
    """Received symbol grid on numerology-2 active bins, shape (2**k, n2)."""
    frame = _check_frame(frame, scenario)
    num2 = scenario.num2
    blk = num2.symbol_len
    out = np.empty((scenario.scale, num2.n_active), dtype=np.complex128)
    if not num2.n_active:
        return out
    bins = np.array(num2.active_bins)
    for q in range(scenario.scale):
        sub = frame[q * blk + num2.cp_len : (q + 1) * blk]
        out[q] = forward_transform(sub)[bins]
    return out


def error_vector(received, transmitted) -> np.ndarray:
    """Per-bin complex deviation of the received symbols from the sent ones."""
    received = np.asarray(received)
    transmitted = np.asarray(transmitted)
    if received.shape != transmitted.shape:
        raise ShapeMismatch(
            f"received {received.shape} vs transmitted {transmitted.shape}"
        )
    return received - transmitted
