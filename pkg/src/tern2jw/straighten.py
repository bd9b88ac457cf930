"""Reduction of any ternary tree to the z-chain by Clifford conjugation.

Two tree surgeries generate everything here. A relabel permutes the three
child slots of one node and costs a fixed single-qubit gate word (H swaps
x and z, S swaps x and y, three-letter words cover the rest). A fork move
conjugates by CZ(q1, q2), where q2 is the x-child of q1 with bare x and y
slots; it detaches q2 from the x-branch and splices it into the y-branch,
shortening x by one node. Draining a fork's x and z branches through fork
moves and flushing the grown y-branch onto z with the S, H tail turns the
fork into plain chain; doing that at every fork, deepest first, turns the
whole tree into the z-chain whose path products are the Jordan-Wigner set
up to qubit renaming and per-generator signs.

The emitted circuit acts on the original wire names. StraightenResult
carries the renaming as the permutation pi (chain position i holds
original qubit pi(i)); with swaps=True a SWAP network realizing pi is
appended instead and pi collapses to the identity. Signs are tracked
exactly by conjugating all 2m+1 generators through the circuit in one
batch; fix_signs appends a single-qubit Pauli layer that forces ranks
1..2m positive (rank 2m+1 is pinned by the conserved total product).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Mapping, Sequence

import numpy as np

from .clifford import Circuit, Gate, invert_circuit
from .engine import conjugate_inplace, encode_gates
from .pauli import PauliString
from .tree import (
    TERMINAL,
    XYZ,
    TernaryTree,
    jw_generator,
    tree_leaves,
)

_LABEL_CODE = {"x": 1, "y": 2, "z": 3}

# Gate words per slot permutation, keyed by (source of new x, of new y,
# of new z). Transpositions are the canonical one- and three-gate words;
# each 3-cycle is the composition of two transpositions, in gate order.
_RELABEL_GATES = {
    ("x", "y", "z"): (),
    ("z", "y", "x"): ("H",),
    ("y", "x", "z"): ("S",),
    ("x", "z", "y"): ("H", "S", "H"),
    ("z", "x", "y"): ("S", "H"),
    ("y", "z", "x"): ("H", "S"),
}

_SLOT = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class StraightenResult:
    """Certificate of one tree-to-chain reduction.

    circuit acts on the original wires, first-listed gate first. For every
    original leaf rank j, conjugating generator j through the circuit and
    renaming wire permutation[i] to i gives signs[j] times the JW generator
    at rank ranks[j]. signfix, when present, is the Pauli layer appended by
    fix_signs; signs describe the circuit with that layer included.
    """

    circuit: Circuit
    permutation: tuple[int, ...]
    signs: tuple[int, ...]
    ranks: tuple[int, ...]
    signfix: tuple[Gate, ...] | None = None

    @property
    def num_qubits(self) -> int:
        return self.circuit.num_qubits

    def full_circuit(self) -> Circuit:
        """The circuit with the sign-fix layer (if any) appended."""
        if not self.signfix:
            return self.circuit
        return Circuit(self.circuit.num_qubits, self.circuit.gates + self.signfix)


# ---------------------------------------------------------------------------
# the two surgeries, on mutable child tables


def _emit_relabel(kids, q, key, emit) -> None:
    row = kids[q - 1]
    kids[q - 1] = [row[_SLOT[key[0]]], row[_SLOT[key[1]]], row[_SLOT[key[2]]]]
    for name in _RELABEL_GATES[key]:
        emit(Gate(name, (q,)))


def _emit_fork_move(kids, q1, emit) -> None:
    x1, y1, z1 = kids[q1 - 1]
    if x1 == TERMINAL:
        raise ValueError(f"fork move at q{q1}: x slot is terminal")
    q2 = x1
    x2, y2, z2 = kids[q2 - 1]
    if x2 != TERMINAL:
        raise ValueError(f"fork move at q{q1}: x slot of q{q2} holds q{x2}")
    if y2 != TERMINAL:
        raise ValueError(f"fork move at q{q1}: y slot of q{q2} holds q{y2}")
    emit(Gate("CZ", (q1, q2)))
    kids[q1 - 1] = [z2, q2, z1]
    kids[q2 - 1] = [TERMINAL, TERMINAL, y1]


def _emit_straighten_fork(kids, q1, emit) -> None:
    x1, y1, _ = kids[q1 - 1]
    if x1 == TERMINAL and y1 == TERMINAL:
        return  # at most a bare z-chain already
    while True:
        x1, _, z1 = kids[q1 - 1]
        if x1 == TERMINAL and z1 == TERMINAL:
            break
        if x1 == TERMINAL:
            _emit_relabel(kids, q1, ("z", "y", "x"), emit)
        q2 = kids[q1 - 1][0]
        x2, y2, _ = kids[q2 - 1]
        # q2 sits on a chain, so it has at most one occupied slot; rotate
        # that occupant onto z before the move
        if x2 != TERMINAL:
            _emit_relabel(kids, q2, ("z", "y", "x"), emit)
        elif y2 != TERMINAL:
            _emit_relabel(kids, q2, ("x", "z", "y"), emit)
        _emit_fork_move(kids, q1, emit)
    _emit_relabel(kids, q1, ("z", "x", "y"), emit)


def _check_qubit(t: TernaryTree, q: int) -> None:
    if not 1 <= q <= t.num_qubits:
        raise ValueError(f"unknown qubit q{q} (tree has 1..{t.num_qubits})")


def _freeze(t: TernaryTree, kids) -> TernaryTree:
    return TernaryTree(t.num_qubits, t.root, tuple(tuple(row) for row in kids))


def relabel(
    t: TernaryTree, q: int, perm: Mapping[str, str]
) -> tuple[Circuit, TernaryTree]:
    """Permute the child slots of q; perm maps old label to new label.

    Omitted labels stay put, so {"x": "z", "z": "x"} is the x/z exchange.
    Returns the canonical gate word on q and the relabeled tree.
    """
    _check_qubit(t, q)
    full = {l: perm.get(l, l) for l in XYZ}
    if set(perm) - set(XYZ) or sorted(full.values()) != list(XYZ):
        raise ValueError(f"not a permutation of x, y, z: {perm!r}")
    source = {new: old for old, new in full.items()}
    key = (source["x"], source["y"], source["z"])
    kids = [list(row) for row in t.children]
    out: list[Gate] = []
    _emit_relabel(kids, q, key, out.append)
    return Circuit(t.num_qubits, tuple(out)), _freeze(t, kids)


def fork_move(t: TernaryTree, q1: int) -> tuple[Gate, TernaryTree]:
    """One CZ(q1, q2) move of q2 = q1's x-child onto the y-branch.

    Requires q2 to have bare x and y slots. Rewiring: q2's z-subtree takes
    q2's old place on x, q1's old y-subtree reattaches under q2's z, and
    q2 becomes the y-child of q1.
    """
    _check_qubit(t, q1)
    kids = [list(row) for row in t.children]
    out: list[Gate] = []
    _emit_fork_move(kids, q1, out.append)
    return out[0], _freeze(t, kids)


def straighten_fork(t: TernaryTree, q1: int) -> tuple[Circuit, TernaryTree]:
    """Collapse everything below q1 onto its z slot.

    Requires chains (no forks) strictly below q1. Emits the fork-move and
    relabel gates, ending with the S, H tail that swings the accumulated
    y-branch onto z; afterwards q1 carries a single z-chain.
    """
    _check_qubit(t, q1)
    stack = [c for c in t.children[q1 - 1] if c != TERMINAL]
    while stack:
        q = stack.pop()
        row = t.children[q - 1]
        occupied = [c for c in row if c != TERMINAL]
        if len(occupied) >= 2:
            raise ValueError(f"fork at q{q} below q{q1}")
        stack.extend(occupied)
    kids = [list(row) for row in t.children]
    out: list[Gate] = []
    _emit_straighten_fork(kids, q1, out.append)
    return Circuit(t.num_qubits, tuple(out)), _freeze(t, kids)


# ---------------------------------------------------------------------------
# full reduction


def _next_fork(kids, root) -> int | None:
    """Deepest fork with no fork below it; ties go to the smallest id."""
    order: list[tuple[int, int]] = []
    stack = [(root, 0)]
    while stack:
        q, d = stack.pop()
        order.append((q, d))
        for c in kids[q - 1]:
            if c != TERMINAL:
                stack.append((c, d + 1))
    fork_below = [False] * (len(kids) + 1)
    best: tuple[int, int] | None = None
    for q, d in reversed(order):  # children first: preorder reversed
        row = kids[q - 1]
        below = any(fork_below[c] for c in row if c != TERMINAL)
        is_fork = sum(1 for c in row if c != TERMINAL) >= 2
        fork_below[q] = below or is_fork
        if is_fork and not below and (best is None or (d, -q) > best):
            best = (d, -q)
    return -best[1] if best else None


def _letters_matrix(t: TernaryTree) -> np.ndarray:
    """(m, 2m+1) uint8 letter codes of the path products, one per column."""
    leaves = tree_leaves(t)
    letters = np.zeros((t.num_qubits, len(leaves)), dtype=np.uint8)
    for j, path in enumerate(leaves):
        for qid, label in path:
            letters[qid - 1, j] = _LABEL_CODE[label]
    return letters


def _decode_jw_batch(
    renamed: np.ndarray, phases: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Column-wise match against signed JW generators.

    Returns (ranks, signs, ok); columns failing the JW shape or carrying
    an imaginary phase get ok=False and an unspecified rank.
    """
    m, n = renamed.shape
    non_z = renamed != 3
    lead = non_z.argmax(axis=0)  # first non-Z row; 0 when all Z
    has_lead = non_z.any(axis=0)
    lead_letter = renamed[lead, np.arange(n)]
    support = (renamed != 0).sum(axis=0)
    # valid X/Y columns look like Z^lead, letter, I^(m-lead-1)
    xy_ok = has_lead & ((lead_letter == 1) | (lead_letter == 2)) & (support == lead + 1)
    ranks = np.where(
        ~has_lead, 2 * m + 1, 2 * (lead + 1) - (lead_letter == 1).astype(np.int64)
    )
    ok = (xy_ok | ~has_lead) & ((phases == 0) | (phases == 2))
    signs = np.where(phases == 0, 1, -1)
    return ranks, signs, ok


def _conjugated_images(
    t: TernaryTree, gates: Sequence[Gate], perm: Sequence[int]
) -> tuple[np.ndarray, np.ndarray]:
    letters = _letters_matrix(t)
    phases = np.zeros(letters.shape[1], dtype=np.uint8)
    if gates:
        ops = encode_gates([(g.kind, g.targets) for g in gates], t.num_qubits)
        conjugate_inplace(letters, phases, ops)
    perm_idx = np.asarray(perm, dtype=np.int64) - 1
    return letters[perm_idx, :], phases


def straighten(t: TernaryTree, swaps: bool = False) -> StraightenResult:
    """Reduce t to the z-chain and certify the reduction.

    Resolves forks deepest-first, then irons the leftover bends on the
    root-to-tip walk (a lone x-link costs an H, a lone y-link the S, H
    word). With swaps=False the chain lives on reordered wires and the
    reordering is reported as the permutation; with swaps=True a SWAP
    network realizing it is appended and the permutation is the identity.
    """
    m = t.num_qubits
    kids = [list(row) for row in t.children]
    gates: list[Gate] = []
    emit = gates.append
    while True:
        fork = _next_fork(kids, t.root)
        if fork is None:
            break
        _emit_straighten_fork(kids, fork, emit)
    # forks are gone; straighten the remaining single-branch bends
    chain: list[int] = []
    cur = t.root
    while cur != TERMINAL:
        chain.append(cur)
        x, y, _ = kids[cur - 1]
        if x != TERMINAL:
            _emit_relabel(kids, cur, ("z", "y", "x"), emit)
        elif y != TERMINAL:
            _emit_relabel(kids, cur, ("z", "x", "y"), emit)
        cur = kids[cur - 1][2]
    if len(chain) != m:
        raise RuntimeError(f"chain covers {len(chain)} of {m} qubits")

    if swaps:
        # realize the renaming as gates: wire q's letter must travel to
        # chain position dest[q]; walk each cycle back to front
        dest = {q: i for i, q in enumerate(chain, start=1)}
        done = set()
        for start in range(1, m + 1):
            if start in done or dest[start] == start:
                done.add(start)
                continue
            cycle = [start]
            nxt = dest[start]
            while nxt != start:
                cycle.append(nxt)
                nxt = dest[nxt]
            done.update(cycle)
            for a, b in zip(reversed(cycle[:-1]), reversed(cycle[1:])):
                emit(Gate("SWAP", (a, b)))
        chain = list(range(1, m + 1))

    renamed, phases = _conjugated_images(t, gates, chain)
    ranks, signs, ok = _decode_jw_batch(renamed, phases)
    if not ok.all() or sorted(ranks.tolist()) != list(range(1, 2 * m + 2)):
        raise RuntimeError("conjugated generators left the signed JW set")
    return StraightenResult(
        circuit=Circuit(m, tuple(gates)),
        permutation=tuple(chain),
        signs=tuple(int(s) for s in signs),
        ranks=tuple(int(r) for r in ranks),
    )


def fix_signs(r: StraightenResult) -> StraightenResult:
    """Append a Pauli layer making every rank up to 2m positive.

    The flipped ranks F (never including 2m+1) are cleared by conjugating
    with the product of the JW generators over F when |F| is even, or over
    the complement {1..2m} minus F when odd; the product is expressed in
    chain coordinates and emitted as one Pauli gate per non-identity
    letter, back on the original wires. Rank 2m+1 ends up flipped exactly
    when |F| is odd: the total product is conserved, so that sign is
    reported rather than forced. Already-positive results pass through
    unchanged.
    """
    m = r.num_qubits
    flipped = sorted(
        rank for rank, s in zip(r.ranks, r.signs) if s == -1 and rank <= 2 * m
    )
    if not flipped:
        return r
    if len(flipped) % 2 == 0:
        chosen = flipped
    else:
        out = set(flipped)
        chosen = [k for k in range(1, 2 * m + 1) if k not in out]
    correction = [0] * m
    for k in chosen:
        g = jw_generator(m, k)
        for i, letter in enumerate(g.letters):
            correction[i] ^= letter
    signfix = tuple(
        Gate("IXYZ"[letter], (r.permutation[i],))
        for i, letter in enumerate(correction)
        if letter
    )
    if not signfix:
        raise RuntimeError("sign correction collapsed to the identity")

    # recompute signs: generator at rank k flips iff the correction
    # anticommutes with the JW generator at k (one prefix count suffices)
    xy_prefix = [0]
    for letter in correction:
        xy_prefix.append(xy_prefix[-1] + (letter in (1, 2)))
    new_signs = []
    for rank, s in zip(r.ranks, r.signs):
        if rank == 2 * m + 1:
            clashes = xy_prefix[m]
        else:
            k = (rank + 1) // 2
            own = 1 if rank % 2 else 2  # X on odd ranks, Y on even
            here = correction[k - 1]
            clashes = xy_prefix[k - 1] + (1 if here and here != own else 0)
        new_signs.append(-s if clashes % 2 else s)
    if any(s != 1 for rank, s in zip(r.ranks, new_signs) if rank <= 2 * m):
        raise RuntimeError("sign correction failed to clear ranks 1..2m")
    return replace(r, signs=tuple(new_signs), signfix=signfix)


# ---------------------------------------------------------------------------
# composition of two reductions


@dataclass(frozen=True)
class MapResult:
    """Circuit turning tree a's generators into tree b's, plus both halves.

    rank_map[j-1] is the leaf rank of b whose generator is the image of
    a's generator j; signs[j-1] is the relative sign of that image.
    """

    circuit: Circuit
    result_a: StraightenResult
    result_b: StraightenResult

    @property
    def rank_map(self) -> tuple[int, ...]:
        back = {rank: j for j, rank in enumerate(self.result_b.ranks, start=1)}
        return tuple(back[rank] for rank in self.result_a.ranks)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(
            sa * self.result_b.signs[k - 1]
            for sa, k in zip(self.result_a.signs, self.rank_map)
        )


def map_between(a: TernaryTree, b: TernaryTree) -> MapResult:
    """Compose a's reduction with the inverse of b's.

    Both halves carry their SWAP networks, so the two meet in the common
    Jordan-Wigner frame on identically named wires and no renaming is left
    over. The circuit is returned uncancelled; mapping a tree to itself
    telescopes away entirely under peephole_cancel.
    """
    if a.num_qubits != b.num_qubits:
        raise ValueError(f"qubit counts differ: {a.num_qubits} vs {b.num_qubits}")
    ra = straighten(a, swaps=True)
    rb = straighten(b, swaps=True)
    gates = ra.circuit.gates + invert_circuit(rb.circuit).gates
    return MapResult(Circuit(a.num_qubits, gates), ra, rb)


# ---------------------------------------------------------------------------
# certificates: circuit text plus PERM and SIGNS directives


@dataclass(frozen=True)
class Certificate:
    circuit: Circuit
    permutation: tuple[int, ...]
    signs: tuple[int, ...]


def certificate_format(r: StraightenResult) -> str:
    """Full certificate text: gates (sign-fix layer included), PERM, SIGNS."""
    from .clifford import circuit_format

    perm = " ".join(str(q) for q in r.permutation)
    signs = " ".join("+" if s == 1 else "-" for s in r.signs)
    return f"{circuit_format(r.full_circuit())}PERM {perm}\nSIGNS {signs}\n"


def certificate_parse(text: str, num_qubits: int | None = None) -> Certificate:
    """Parse certificate text; PERM and SIGNS are required."""
    from .clifford import circuit_parse

    circuit, found = circuit_parse(text, num_qubits, directives=("PERM", "SIGNS"))
    for name in ("PERM", "SIGNS"):
        if name not in found:
            raise ValueError(f"certificate is missing its {name} line")
    try:
        perm = tuple(int(tok) for tok in found["PERM"])
    except ValueError:
        raise ValueError(f"bad PERM entries: {' '.join(found['PERM'])!r}") from None
    m = len(perm)
    if sorted(perm) != list(range(1, m + 1)):
        raise ValueError(f"PERM is not a permutation of 1..{m}")
    if circuit.num_qubits > m:
        raise ValueError(
            f"circuit touches qubit {circuit.num_qubits} but PERM lists only {m}"
        )
    if circuit.num_qubits != m:
        circuit = Circuit(m, circuit.gates)
    bad = [tok for tok in found["SIGNS"] if tok not in ("+", "-")]
    if bad:
        raise ValueError(f"bad SIGNS entries: {' '.join(bad)!r}")
    signs = tuple(1 if tok == "+" else -1 for tok in found["SIGNS"])
    if len(signs) != 2 * m + 1:
        raise ValueError(f"SIGNS lists {len(signs)} entries, need {2 * m + 1}")
    return Certificate(circuit, perm, signs)


@dataclass(frozen=True)
class TransformReport:
    """Rank-wise verdicts from re-deriving a certificate's generator map."""

    results: tuple[bool, ...]

    @property
    def ok(self) -> bool:
        return all(self.results)

    @property
    def failed_ranks(self) -> tuple[int, ...]:
        return tuple(j + 1 for j, good in enumerate(self.results) if not good)


def verify_transform(t: TernaryTree, cert: Certificate) -> TransformReport:
    """Engine-level check that the certificate maps t onto the JW chain.

    Every generator image (renamed through PERM) must decode as the
    declared sign times a JW generator, and the matched ranks must cover
    all of 1..2m+1.
    """
    if len(cert.permutation) != t.num_qubits:
        raise ValueError(
            f"tree has {t.num_qubits} qubits, certificate {len(cert.permutation)}"
        )
    renamed, phases = _conjugated_images(t, cert.circuit.gates, cert.permutation)
    ranks, signs, ok = _decode_jw_batch(renamed, phases)
    seen: set[int] = set()
    results = []
    for j in range(renamed.shape[1]):
        good = bool(ok[j]) and int(signs[j]) == cert.signs[j]
        if good:
            rank = int(ranks[j])
            good = rank not in seen
            seen.add(rank)
        results.append(good)
    return TransformReport(tuple(results))
