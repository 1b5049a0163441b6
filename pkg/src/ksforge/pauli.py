"""Signed three-qubit Pauli words over {I, X, Z} and the Mermin pentagram.

Matrices are exact ``int64`` arrays. Qubit 1 is the most significant tensor
factor, so the joint eigenbasis of the Z-type line is the standard basis.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

_SINGLE = {
    "I": np.array([[1, 0], [0, 1]], dtype=np.int64),
    "X": np.array([[0, 1], [1, 0]], dtype=np.int64),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.int64),
}

IDENTITY8 = np.eye(8, dtype=np.int64)


@dataclass(frozen=True)
class PauliWord:
    letters: str
    sign: int = 1

    def __post_init__(self):
        if len(self.letters) != 3:
            raise ValueError(f"expected 3 letters, got {self.letters!r}")
        bad = set(self.letters) - set(_SINGLE)
        if bad:
            raise ValueError(f"letters must be I, X or Z; got {sorted(bad)}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __str__(self):
        return ("" if self.sign == 1 else "-") + self.letters

    @property
    def label(self) -> str:
        """Subscripted form, e.g. ``Z1 X2 X3`` (identity factors omitted)."""
        parts = [f"{c}{q}" for q, c in enumerate(self.letters, start=1) if c != "I"]
        body = " ".join(parts) if parts else "I"
        return body if self.sign == 1 else "-" + body


def tensor_matrix(word: PauliWord) -> np.ndarray:
    mats = [_SINGLE[c] for c in word.letters]
    return word.sign * reduce(np.kron, mats)


@dataclass(frozen=True)
class Observable:
    word: PauliWord
    matrix: np.ndarray = field(compare=False, repr=False)

    @classmethod
    def of(cls, letters: str, sign: int = 1) -> "Observable":
        word = PauliWord(letters, sign)
        m = tensor_matrix(word)
        m.setflags(write=False)
        return cls(word, m)

    def __str__(self):
        return str(self.word)


def commutes(a: Observable, b: Observable) -> bool:
    ab = a.matrix @ b.matrix
    ba = b.matrix @ a.matrix
    return bool(np.array_equal(ab, ba))


def commutes_symplectic(a: PauliWord, b: PauliWord) -> bool:
    """Commutation from letters alone: even number of clashing positions."""
    clashes = sum(1 for p, q in zip(a.letters, b.letters) if p != "I" and q != "I" and p != q)
    return clashes % 2 == 0


@dataclass(frozen=True)
class Context:
    observables: tuple[Observable, ...]
    line_sign: int

    @classmethod
    def from_observables(cls, observables) -> "Context":
        observables = tuple(observables)
        for i, a in enumerate(observables):
            for b in observables[i + 1:]:
                if not commutes(a, b):
                    raise ValueError(f"{a} and {b} do not commute")
        return cls(observables, line_sign(observables))


def line_sign(observables) -> int:
    """Sign s with prod(observables) == s * I; raises if the product is not +/-I."""
    prod = reduce(np.matmul, (o.matrix for o in observables), IDENTITY8)
    if np.array_equal(prod, IDENTITY8):
        return 1
    if np.array_equal(prod, -IDENTITY8):
        return -1
    raise ValueError("product of observables is not a multiple of the identity")


# Table-1 column order: the four single-line contexts, then the horizontal line.
_PENTAGRAM_LINES = (
    ("ZZZ", "ZII", "IZI", "IIZ"),
    ("ZXX", "ZII", "IXI", "IIX"),
    ("XZX", "XII", "IZI", "IIX"),
    ("XXZ", "XII", "IXI", "IIZ"),
    ("ZXX", "XZX", "XXZ", "ZZZ"),
)


def mermin_pentagram() -> list[Context]:
    return [Context.from_observables(Observable.of(w) for w in line) for line in _PENTAGRAM_LINES]


def pentagram_operator_contradiction(contexts) -> bool:
    """True iff every observable sits in exactly two contexts and the line signs multiply to -1.

    Under a noncontextual assignment of +/-1 values the product over all lines
    would be +1 (each value counted twice), so a -1 sign product is a contradiction.
    """
    contexts = list(contexts)
    if not contexts:
        return False
    occurrences = Counter(o.word for ctx in contexts for o in ctx.observables)
    if any(n != 2 for n in occurrences.values()):
        return False
    total = 1
    for ctx in contexts:
        total *= ctx.line_sign
    return total == -1
