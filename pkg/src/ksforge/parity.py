"""Parity-proof checks, multiplicity signatures and the backtracking coloring oracle."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .errors import NotParityProof
from .geometry import Geometry, bid_key, default_geometry


@dataclass(frozen=True, order=True)
class Signature:
    census: tuple[tuple[int, int], ...]  # (multiplicity, number of rays), ascending multiplicity
    basis_count: int

    def __str__(self):
        terms = " ".join(f"{count}_{m}" for m, count in self.census)
        return f"{terms} - {self.basis_count}_8"

    @property
    def ray_count(self) -> int:
        return sum(count for _, count in self.census)

    @classmethod
    def parse(cls, text: str) -> "Signature":
        m = re.fullmatch(r"\s*((?:\d+_\d+\s*)+)-\s*(\d+)_8\s*", text)
        if not m:
            raise ValueError(f"not a signature: {text!r}")
        census = []
        for term in m.group(1).split():
            count, mult = term.split("_")
            census.append((int(mult), int(count)))
        return cls(tuple(sorted(census)), int(m.group(2)))


def _bases(candidate, geom: Geometry) -> list[frozenset[int]]:
    return [geom[bid].rays for bid in candidate]


def ray_multiplicities(candidate, geom: Geometry | None = None) -> dict[int, int]:
    geom = geom or default_geometry()
    counts = Counter(r for rays in _bases(candidate, geom) for r in rays)
    return dict(sorted(counts.items()))


def is_parity_proof(candidate, geom: Geometry | None = None) -> bool:
    candidate = list(candidate)
    if len(candidate) % 2 == 0:
        return False
    return all(n % 2 == 0 for n in ray_multiplicities(candidate, geom).values())


def census_signature(candidate, geom: Geometry | None = None) -> Signature:
    """Signature of any basis collection, parity proof or not."""
    candidate = list(candidate)
    census = Counter(ray_multiplicities(candidate, geom).values())
    return Signature(tuple(sorted(census.items())), len(candidate))


def signature(candidate, geom: Geometry | None = None) -> Signature:
    candidate = list(candidate)
    if not is_parity_proof(candidate, geom):
        raise NotParityProof(f"{sorted(candidate, key=bid_key)} is not a parity proof")
    return census_signature(candidate, geom)


def find_coloring(candidate, geom: Geometry | None = None) -> dict[int, int] | None:
    """Search for a 0/1 ray assignment with exactly one 1 in every listed basis.

    Returns the assignment (every ray of the candidate mapped) or None when no
    such assignment exists.
    """
    geom = geom or default_geometry()
    bases = [tuple(sorted(rays)) for rays in _bases(candidate, geom)]
    return _search(bases, {})


def _propagate(bases, value) -> bool:
    changed = True
    while changed:
        changed = False
        for rays in bases:
            ones = [r for r in rays if value.get(r) == 1]
            free = [r for r in rays if r not in value]
            if len(ones) > 1:
                return False
            if ones:
                for r in free:
                    value[r] = 0
                changed |= bool(free)
            elif not free:
                return False
            elif len(free) == 1:
                value[free[0]] = 1
                changed = True
    return True


def _search(bases, value):
    value = dict(value)
    if not _propagate(bases, value):
        return None
    open_bases = [rays for rays in bases if not any(value.get(r) == 1 for r in rays)]
    if not open_bases:
        return dict(sorted(value.items()))
    rays = min(open_bases, key=lambda rs: (sum(1 for r in rs if r not in value), rs))
    for r in rays:
        if r in value:
            continue
        found = _search(bases, {**value, r: 1})
        if found is not None:
            return found
    return None


def is_valid_coloring(candidate, assignment, geom: Geometry | None = None) -> bool:
    """Exactly one ray valued 1 in every basis, all values in {0, 1}."""
    geom = geom or default_geometry()
    for rays in _bases(candidate, geom):
        values = [assignment.get(r) for r in rays]
        if any(v not in (0, 1) for v in values) or sum(values) != 1:
            return False
    return True


def is_ks_colorable(candidate, geom: Geometry | None = None) -> bool:
    return find_coloring(candidate, geom) is not None
