"""Ternary qubit trees and their anticommuting generator sets.

A tree has m qubit nodes, each carrying three child slots labeled x, y, z;
a slot holds another qubit node or a terminal. A complete tree has exactly
2m+1 terminals, and each root-to-terminal path defines one generator: the
product of one Pauli letter per node on the path, the letter being the slot
label the path leaves through. Any two distinct path products anticommute
(they first differ at their fork node, with different non-identity letters
there, and act on disjoint qubits below it).

Canonical leaf order is depth-first with x < y < z. Qubit ids must be
exactly 1..m; they double as tensor positions in the Pauli strings.

Text grammar (whitespace-insensitive):

    tree := "_" | "(" "q" INT [":x" tree] [":y" tree] [":z" tree] ")"

Omitted labels mean terminal; "_" is an explicit terminal. The canonical
formatter omits terminals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .pauli import PauliString, pauli_identity, pauli_mul

TERMINAL = 0
XYZ = ("x", "y", "z")
_LABEL_CODE = {"x": 1, "y": 2, "z": 3}

# Guard for constructors that could silently build absurd trees.
MAX_QUBITS = 1 << 20

LeafPath = tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class TernaryTree:
    """Immutable rooted ternary tree; children[q-1] = (x, y, z), 0 = terminal."""

    num_qubits: int
    root: int
    children: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        m = self.num_qubits
        if m < 1:
            raise ValueError(f"qubit count must be positive, got {m}")
        if len(self.children) != m:
            raise ValueError(f"need {m} child records, got {len(self.children)}")
        if not 1 <= self.root <= m:
            raise ValueError(f"root {self.root} out of range 1..{m}")
        seen_child: dict[int, int] = {}
        for qid, slots in enumerate(self.children, start=1):
            for c in slots:
                if c == TERMINAL:
                    continue
                if not 1 <= c <= m:
                    raise ValueError(f"qubit {qid} links to unknown qubit {c}")
                if c in seen_child:
                    raise ValueError(f"qubit {c} is a child of both {seen_child[c]} and {qid}")
                if c == self.root:
                    raise ValueError(f"root {self.root} cannot be a child (of {qid})")
                seen_child[c] = qid
        reached = {self.root}
        stack = [self.root]
        while stack:
            for c in self.children[stack.pop() - 1]:
                if c != TERMINAL and c not in reached:
                    reached.add(c)
                    stack.append(c)
        if len(reached) != m:
            missing = sorted(set(range(1, m + 1)) - reached)
            raise ValueError(f"unreachable qubit ids: {missing}")

    def child(self, qid: int, label: str) -> int:
        """Child (or TERMINAL) of qid at slot label."""
        return self.children[qid - 1][XYZ.index(label)]

    def __str__(self) -> str:
        return tree_format(self)


@dataclass(frozen=True)
class GeneratorSet:
    """The 2m+1 leaf path products of a complete tree, in canonical order."""

    num_qubits: int
    entries: tuple[tuple[LeafPath, PauliString], ...]

    @property
    def strings(self) -> tuple[PauliString, ...]:
        return tuple(p for _, p in self.entries)

    @property
    def paths(self) -> tuple[LeafPath, ...]:
        return tuple(path for path, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of check_generator_set; ok only when every check passed."""

    anticommuting: bool
    anticommute_failures: tuple[tuple[int, int], ...]
    unit_squares: bool
    square_failures: tuple[int, ...]
    product: PauliString
    product_is_identity: bool

    @property
    def ok(self) -> bool:
        return self.anticommuting and self.unit_squares and self.product_is_identity


# ---------------------------------------------------------------------------
# text codec


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == "#":
            # comment to end of line; positions of later tokens stay true
            while i < n and text[i] != "\n":
                i += 1
        elif ch in "()_":
            tokens.append((ch, ch, i))
            i += 1
        elif ch == ":":
            if i + 1 < n and text[i + 1] in "xyz":
                tokens.append((":", text[i + 1], i))
                i += 2
            else:
                raise ValueError(f"expected :x, :y or :z at position {i + 1}")
        elif ch == "q":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ValueError(f"expected digits after 'q' at position {i + 1}")
            tokens.append(("q", int(text[i + 1 : j]), i))
            i = j
        else:
            raise ValueError(f"unexpected character {ch!r} at position {i + 1}")
    return tokens


def tree_parse(text: str) -> TernaryTree:
    """Parse the tree grammar; errors carry 1-based character positions.

    `#` starts a comment running to the end of the line, as in circuit
    text. Whitespace between tokens is free.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty tree text")

    kids: dict[int, list[int]] = {}
    first_pos: dict[int, int] = {}
    used_labels: dict[int, set[str]] = {}
    stack: list[int] = []
    root = None
    attach: tuple[int, str] | None = None
    i = 0

    def fail(pos: int, msg: str) -> ValueError:
        return ValueError(f"{msg} at position {pos + 1}")

    while i < len(tokens):
        kind, value, pos = tokens[i]
        if kind == "(":
            if root is not None and not stack:
                raise fail(pos, "trailing content after the root tree")
            if stack and attach is None:
                raise fail(pos, "subtree needs a :x/:y/:z label")
            if i + 1 >= len(tokens) or tokens[i + 1][0] != "q":
                raise fail(pos, "expected qubit id after '('")
            qid = tokens[i + 1][1]
            if qid in kids:
                raise fail(tokens[i + 1][2], f"duplicate qubit id q{qid}")
            kids[qid] = [TERMINAL, TERMINAL, TERMINAL]
            first_pos[qid] = tokens[i + 1][2]
            used_labels[qid] = set()
            if attach is None:
                root = qid
            else:
                parent, label = attach
                kids[parent][XYZ.index(label)] = qid
                attach = None
            stack.append(qid)
            i += 2
        elif kind == "_":
            if attach is None:
                raise fail(pos, "terminal '_' needs a :x/:y/:z label")
            attach = None
            i += 1
        elif kind == ":":
            if attach is not None:
                raise fail(pos, "label is missing its subtree")
            if not stack:
                raise fail(pos, "label outside a node")
            parent = stack[-1]
            if value in used_labels[parent]:
                raise fail(pos, f"duplicate label :{value} on q{parent}")
            used_labels[parent].add(value)
            attach = (parent, value)
            i += 1
        else:  # ")"
            if attach is not None:
                raise fail(pos, "label is missing its subtree")
            if not stack:
                raise fail(pos, "unbalanced ')'")
            stack.pop()
            i += 1
    if stack:
        raise ValueError(f"unclosed '(' for q{stack[-1]}")
    if root is None:
        raise ValueError("tree must contain at least one qubit node")

    m = len(kids)
    bad = sorted(q for q in kids if not 1 <= q <= m)
    if bad:
        missing = sorted(set(range(1, m + 1)) - set(kids))
        raise ValueError(
            f"qubit ids must be exactly 1..{m}: unexpected {bad}, missing {missing}"
            + f" (first offender q{bad[0]} at position {first_pos[bad[0]] + 1})"
        )
    children = tuple(tuple(kids[q]) for q in range(1, m + 1))
    return TernaryTree(m, root, children)


def tree_format(t: TernaryTree) -> str:
    """Canonical text: labels in x, y, z order, terminals omitted."""
    out: list[str] = []
    # explicit stack; emit tokens on the way down, close brackets on the way up
    stack: list[tuple[int, int]] = [(t.root, 0)]
    while stack:
        qid, li = stack[-1]
        if li == 0:
            out.append(f"(q{qid}")
        if li == 3:
            out.append(")")
            stack.pop()
            continue
        stack[-1] = (qid, li + 1)
        child = t.children[qid - 1][li]
        if child != TERMINAL:
            out.append(f" :{XYZ[li]} ")
            stack.append((child, 0))
    return "".join(out)


# ---------------------------------------------------------------------------
# construction


def tree_augment(spec: "TernaryTree | Mapping[int, Mapping[str, int]]") -> TernaryTree:
    """Complete a partially-specified tree; unspecified slots become terminals.

    Accepts an existing TernaryTree (returned unchanged: its slots are
    already all filled) or a mapping {qubit id: {label: child id}}. Ids
    referenced only as children get three terminal slots.
    """
    if isinstance(spec, TernaryTree):
        return spec
    ids = set(spec)
    for links in spec.values():
        for label in links:
            if label not in XYZ:
                raise ValueError(f"unknown child label {label!r}")
        ids.update(links.values())
    if not ids:
        raise ValueError("tree must contain at least one qubit node")
    m = len(ids)
    if ids != set(range(1, m + 1)):
        raise ValueError(f"qubit ids must be exactly 1..{m}, got {sorted(ids)}")
    kids = {q: [TERMINAL, TERMINAL, TERMINAL] for q in ids}
    child_ids = set()
    for q, links in spec.items():
        for label, c in links.items():
            kids[q][XYZ.index(label)] = c
            child_ids.add(c)
    roots = ids - child_ids
    if len(roots) != 1:
        raise ValueError(f"tree must have exactly one root, candidates: {sorted(roots)}")
    children = tuple(tuple(kids[q]) for q in range(1, m + 1))
    return TernaryTree(m, roots.pop(), children)


def jw_chain(m: int) -> TernaryTree:
    """The degenerate z-linked chain: qubit k's z-child is k+1.

    Its canonical generators are the Jordan-Wigner set: rank 2k-1 carries
    Z^(k-1) X at qubit k, rank 2k carries Z^(k-1) Y, and the last rank is
    the all-z product.
    """
    if m < 1:
        raise ValueError(f"qubit count must be positive, got {m}")
    children = tuple(
        (TERMINAL, TERMINAL, k + 1 if k < m else TERMINAL) for k in range(1, m + 1)
    )
    return TernaryTree(m, 1, children)


def full_ternary(depth: int) -> TernaryTree:
    """Complete ternary tree with qubit nodes on levels 0..depth.

    Every node above the deepest level has three qubit children; ids are
    assigned breadth-first with the root as 1, so m = (3^(depth+1) - 1) / 2.
    """
    if depth < 1:
        raise ValueError(f"depth must be at least 1, got {depth}")
    m = (3 ** (depth + 1) - 1) // 2
    if m > MAX_QUBITS:
        raise ValueError(f"depth {depth} needs {m} qubits, over the {MAX_QUBITS} limit")
    internal = (3**depth - 1) // 2  # nodes on levels 0..depth-1
    children = []
    for q in range(1, m + 1):
        if q <= internal:
            children.append((3 * q - 1, 3 * q, 3 * q + 1))
        else:
            children.append((TERMINAL, TERMINAL, TERMINAL))
    return TernaryTree(m, 1, tuple(children))


def random_tree(m: int, seed: int) -> TernaryTree:
    """Random tree grown by attaching each new node to a uniformly chosen
    free slot of the existing ones; deterministic for a fixed seed."""
    if m < 1:
        raise ValueError(f"qubit count must be positive, got {m}")
    rng = random.Random(seed)
    kids = [[TERMINAL, TERMINAL, TERMINAL] for _ in range(m)]
    free: list[tuple[int, int]] = [(1, 0), (1, 1), (1, 2)]
    for q in range(2, m + 1):
        i = rng.randrange(len(free))
        parent, slot = free[i]
        # swap-pop keeps the choice O(1); the rng consumes one value per node
        free[i] = free[-1]
        free.pop()
        kids[parent - 1][slot] = q
        free.extend(((q, 0), (q, 1), (q, 2)))
    return TernaryTree(m, 1, tuple(tuple(row) for row in kids))


# ---------------------------------------------------------------------------
# leaves and generators


def tree_leaves(t: TernaryTree) -> tuple[LeafPath, ...]:
    """All root-to-terminal paths in canonical depth-first x < y < z order."""
    out: list[LeafPath] = []
    frames: list[tuple[int, int]] = [(t.root, 0)]
    path: list[tuple[int, str]] = []
    while frames:
        qid, li = frames[-1]
        if li == 3:
            frames.pop()
            if path:
                path.pop()
            continue
        frames[-1] = (qid, li + 1)
        child = t.children[qid - 1][li]
        pair = (qid, XYZ[li])
        if child == TERMINAL:
            path.append(pair)
            out.append(tuple(path))
            path.pop()
        else:
            path.append(pair)
            frames.append((child, 0))
    return tuple(out)


def path_product(t: TernaryTree, path: LeafPath) -> PauliString:
    """Product of one Pauli letter per path node; the path must be valid."""
    if not path:
        raise ValueError("empty leaf path")
    letters = [0] * t.num_qubits
    expect = t.root
    for step, (qid, label) in enumerate(path):
        if label not in _LABEL_CODE:
            raise ValueError(f"unknown label {label!r} in path step {step + 1}")
        if qid != expect:
            raise ValueError(f"path step {step + 1} visits q{qid}, expected q{expect}")
        letters[qid - 1] = _LABEL_CODE[label]
        expect = t.children[qid - 1][XYZ.index(label)]
    if expect != TERMINAL:
        raise ValueError(f"path stops at qubit node q{expect}, not a terminal")
    return PauliString(tuple(letters))


# Pairwise validation cost grows as (2m+1)^2 * m; above this size it only
# runs on request, keeping large straightenings inside their time budget.
VALIDATE_LIMIT = 64


def tree_generators(t: TernaryTree, validate: bool | None = None) -> GeneratorSet:
    """All 2m+1 path products in canonical leaf order.

    Validation (pairwise anticommutation, unit squares, total product a
    phase times identity) runs automatically for m <= VALIDATE_LIMIT; a
    failure is a library bug and raises RuntimeError.
    """
    leaves = tree_leaves(t)
    entries = tuple((path, path_product(t, path)) for path in leaves)
    gens = GeneratorSet(t.num_qubits, entries)
    if validate is None:
        validate = t.num_qubits <= VALIDATE_LIMIT
    if validate:
        report = check_generator_set(gens.strings)
        if not report.ok:
            raise RuntimeError(f"internal invariant violation: {report}")
    return gens


def check_generator_set(gens: "GeneratorSet | Iterable[PauliString]") -> ValidationReport:
    """Check the generator-set contract on any list of Pauli strings.

    Reports pairwise anticommutation, squares equal to +identity, and the
    total product in listed order (a complete tree set multiplies to a
    phase times identity; the phase is whatever it is and is reported).
    """
    strings: Sequence[PauliString] = (
        gens.strings if isinstance(gens, GeneratorSet) else tuple(gens)
    )
    if not strings:
        raise ValueError("empty generator list")
    m = strings[0].num_qubits

    anti_failures = []
    for i in range(len(strings)):
        for j in range(i + 1, len(strings)):
            clashes = sum(
                1
                for la, lb in zip(strings[i].letters, strings[j].letters)
                if la and lb and la != lb
            )
            if clashes % 2 == 0:
                anti_failures.append((i + 1, j + 1))

    square_failures = []
    identity = pauli_identity(m)
    for i, p in enumerate(strings):
        if pauli_mul(p, p) != identity:
            square_failures.append(i + 1)

    product = identity
    for p in strings:
        product = pauli_mul(product, p)

    return ValidationReport(
        anticommuting=not anti_failures,
        anticommute_failures=tuple(anti_failures),
        unit_squares=not square_failures,
        square_failures=tuple(square_failures),
        product=product,
        product_is_identity=all(l == 0 for l in product.letters),
    )


def jw_generator(m: int, rank: int) -> PauliString:
    """The Jordan-Wigner generator at a canonical leaf rank (1..2m+1)."""
    if not 1 <= rank <= 2 * m + 1:
        raise IndexError(f"rank {rank} out of range 1..{2 * m + 1}")
    if rank == 2 * m + 1:
        return PauliString((3,) * m)
    k = (rank + 1) // 2
    letters = [3] * (k - 1) + [1 if rank % 2 else 2] + [0] * (m - k)
    return PauliString(tuple(letters))


def jw_match(p: PauliString) -> tuple[int, int] | None:
    """Decode a string as sign * (JW generator): (rank, sign), or None.

    Matches Z^(k-1) X I... (rank 2k-1), Z^(k-1) Y I... (rank 2k) and the
    all-z product (rank 2m+1); the phase must be a plain sign.
    """
    if p.phase not in (0, 2):
        return None
    sign = 1 if p.phase == 0 else -1
    m = p.num_qubits
    for i, letter in enumerate(p.letters):
        if letter == 3:
            continue
        if letter == 0 or any(p.letters[i + 1 :]):
            return None
        return (2 * (i + 1) - 1, sign) if letter == 1 else (2 * (i + 1), sign)
    return (2 * m + 1, sign)
