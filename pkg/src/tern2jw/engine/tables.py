"""Frozen Clifford conjugation tables over Pauli letters.

Each rule gives the image of Ad_g(P) = g P g-dagger on the touched letters
together with the phase exponent it contributes (always 0 or 2: conjugation
preserves Hermiticity). The rules were derived once by exact integer matrix
conjugation and the test suite re-derives every entry from the oracle module,
so the literals below cannot drift silently.

Letter codes follow the pauli module: I=0, X=1, Y=2, Z=3. Two-qubit rules are
indexed by (first target letter, second target letter); for CX the first
target is the control.
"""

from __future__ import annotations

import numpy as np

SINGLE_GATES = ("H", "S", "SDG", "X", "Y", "Z")
PAIR_GATES = ("CZ", "CX", "SWAP")
GATE_NAMES = SINGLE_GATES + PAIR_GATES
GATE_CODES = {name: i for i, name in enumerate(GATE_NAMES)}
N_SINGLE = len(SINGLE_GATES)

# letter -> (letter, phase exponent)
SINGLE_RULES: dict[str, dict[str, tuple[str, int]]] = {
    "H": {"I": ("I", 0), "X": ("Z", 0), "Y": ("Y", 2), "Z": ("X", 0)},
    "S": {"I": ("I", 0), "X": ("Y", 0), "Y": ("X", 2), "Z": ("Z", 0)},
    "SDG": {"I": ("I", 0), "X": ("Y", 2), "Y": ("X", 0), "Z": ("Z", 0)},
    "X": {"I": ("I", 0), "X": ("X", 0), "Y": ("Y", 2), "Z": ("Z", 2)},
    "Y": {"I": ("I", 0), "X": ("X", 2), "Y": ("Y", 0), "Z": ("Z", 2)},
    "Z": {"I": ("I", 0), "X": ("X", 2), "Y": ("Y", 2), "Z": ("Z", 0)},
}

# (letter pair) -> (letter pair, phase exponent)
PAIR_RULES: dict[str, dict[str, tuple[str, int]]] = {
    # CZ is symmetric; the two -1 rows are forced by diag(1,1,1,-1) conjugation
    "CZ": {
        "II": ("II", 0), "IX": ("ZX", 0), "IY": ("ZY", 0), "IZ": ("IZ", 0),
        "XI": ("XZ", 0), "XX": ("YY", 0), "XY": ("YX", 2), "XZ": ("XI", 0),
        "YI": ("YZ", 0), "YX": ("XY", 2), "YY": ("XX", 0), "YZ": ("YI", 0),
        "ZI": ("ZI", 0), "ZX": ("IX", 0), "ZY": ("IY", 0), "ZZ": ("ZZ", 0),
    },
    # CX: first letter on the control, second on the target
    "CX": {
        "II": ("II", 0), "IX": ("IX", 0), "IY": ("ZY", 0), "IZ": ("ZZ", 0),
        "XI": ("XX", 0), "XX": ("XI", 0), "XY": ("YZ", 0), "XZ": ("YY", 2),
        "YI": ("YX", 0), "YX": ("YI", 0), "YY": ("XZ", 2), "YZ": ("XY", 0),
        "ZI": ("ZI", 0), "ZX": ("ZX", 0), "ZY": ("IY", 0), "ZZ": ("IZ", 0),
    },
    "SWAP": {
        a + b: (b + a, 0)
        for a in "IXYZ"
        for b in "IXYZ"
    },
}

_CODE = {"I": 0, "X": 1, "Y": 2, "Z": 3}


def _build_single() -> tuple[np.ndarray, np.ndarray]:
    let = np.zeros((N_SINGLE, 4), dtype=np.uint8)
    ph = np.zeros((N_SINGLE, 4), dtype=np.uint8)
    for g, rules in SINGLE_RULES.items():
        for src, (dst, p) in rules.items():
            let[GATE_CODES[g], _CODE[src]] = _CODE[dst]
            ph[GATE_CODES[g], _CODE[src]] = p
    return let, ph


def _build_pair() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = len(PAIR_GATES)
    la = np.zeros((n, 16), dtype=np.uint8)
    lb = np.zeros((n, 16), dtype=np.uint8)
    ph = np.zeros((n, 16), dtype=np.uint8)
    for g, rules in PAIR_RULES.items():
        k = GATE_CODES[g] - N_SINGLE
        for src, (dst, p) in rules.items():
            idx = (_CODE[src[0]] << 2) | _CODE[src[1]]
            la[k, idx] = _CODE[dst[0]]
            lb[k, idx] = _CODE[dst[1]]
            ph[k, idx] = p
    return la, lb, ph


SINGLE_LETTER, SINGLE_PHASE = _build_single()
PAIR_LETTER_A, PAIR_LETTER_B, PAIR_PHASE = _build_pair()
