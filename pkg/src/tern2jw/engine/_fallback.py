"""Pure numpy batch conjugation, used when the compiled kernel is absent."""

from __future__ import annotations

import numpy as np

from .tables import (
    N_SINGLE,
    PAIR_LETTER_A,
    PAIR_LETTER_B,
    PAIR_PHASE,
    SINGLE_LETTER,
    SINGLE_PHASE,
)


def conjugate_inplace(letters: np.ndarray, phases: np.ndarray, ops: np.ndarray) -> None:
    """Apply encoded gates to a letter matrix (m rows, one column per string).

    letters: uint8 (m, n), phases: uint8 (n,) with exponents mod 4,
    ops: int32 (L, 3) rows (gate code, row a, row b); b is ignored for
    single-qubit codes. Gates act in listed order.
    """
    for code, a, b in ops:
        if code < N_SINGLE:
            row = letters[a]
            np.add(phases, SINGLE_PHASE[code][row], out=phases)
            letters[a] = SINGLE_LETTER[code][row]
        else:
            k = code - N_SINGLE
            idx = (letters[a] << 2) | letters[b]
            np.add(phases, PAIR_PHASE[k][idx], out=phases)
            letters[a] = PAIR_LETTER_A[k][idx]
            letters[b] = PAIR_LETTER_B[k][idx]
    phases &= 3
