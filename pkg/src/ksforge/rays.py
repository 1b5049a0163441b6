"""The 40 Kernaghan-Peres rays, derived as joint eigenvectors of the pentagram lines."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from .errors import DegenerateContext, FixtureMismatch, NonUniformMagnitude
from .fixtures import fixture_dir, read_rows
from .pauli import IDENTITY8, Context, mermin_pentagram

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Ray:
    id: int
    components: Vector

    def __str__(self):
        return f"R{self.id}"


@dataclass(frozen=True)
class RayTable:
    rays: tuple[Ray, ...]
    column_of: dict[int, int]

    def __getitem__(self, ray_id: int) -> Ray:
        return self.rays[ray_id - 1]

    def __len__(self):
        return len(self.rays)

    def ids(self):
        return range(1, len(self.rays) + 1)

    def column(self, c: int) -> list[int]:
        return [r for r in self.ids() if self.column_of[r] == c]


def canonicalize(v) -> Vector:
    """Scale ``v`` to entries in {-1, 0, 1} with a leading +1."""
    v = [int(x) for x in v]
    nonzero = [abs(x) for x in v if x]
    if not nonzero:
        raise NonUniformMagnitude("zero vector has no canonical form")
    g = nonzero[0]
    if any(m != g for m in nonzero):
        raise NonUniformMagnitude(f"entries of {v} do not share one magnitude")
    out = [x // g for x in v]
    if next(x for x in out if x) < 0:
        out = [-x for x in out]
    return tuple(out)


def inner_product(a, b) -> int:
    a = a.components if isinstance(a, Ray) else a
    b = b.components if isinstance(b, Ray) else b
    return sum(x * y for x, y in zip(a, b))


def _is_rank_one(m: np.ndarray) -> bool:
    if not m.any():
        return False
    # every 2x2 minor m[i,j]m[k,l] - m[i,l]m[k,j] vanishes
    return bool(np.array_equal(np.einsum("ij,kl->ijkl", m, m), np.einsum("il,kj->ijkl", m, m)))


def eigenvalue_patterns(context: Context):
    """Yield the 8 consistent eigenvalue tuples, +1 before -1 on the last three observables."""
    for tail in itertools.product((1, -1), repeat=3):
        head = context.line_sign * tail[0] * tail[1] * tail[2]
        yield (head, *tail)


def scaled_projector(context: Context, pattern) -> np.ndarray:
    """16 times the projector onto the joint eigenspace with the given eigenvalues."""
    factors = (IDENTITY8 + lam * obs.matrix for lam, obs in zip(pattern, context.observables))
    return reduce(np.matmul, factors, IDENTITY8)


def joint_eigenrays(context: Context) -> list[Vector]:
    rays = []
    for pattern in eigenvalue_patterns(context):
        p = scaled_projector(context, pattern)
        if not _is_rank_one(p):
            raise DegenerateContext(f"eigenvalue pattern {pattern} is not a 1-dimensional eigenspace")
        col = next(j for j in range(8) if p[:, j].any())
        rays.append(canonicalize(p[:, col]))
    return rays


def load_table1() -> list[tuple[int, int, Vector]]:
    """(id, column, canonical components) for every fixture row."""
    out = []
    for row in read_rows("table1.txt"):
        ray_id, column, comps = row[0], row[1], row[2:]
        if len(comps) != 8:
            raise FixtureMismatch(f"ray {ray_id}: expected 8 components, got {len(comps)}")
        out.append((ray_id, column, canonicalize(comps)))
    return out


def build_ray_table() -> RayTable:
    return _build_ray_table(str(fixture_dir()))


@lru_cache(maxsize=None)
def _build_ray_table(_fixture_key: str) -> RayTable:
    fixture = load_table1()
    if [r[0] for r in fixture] != list(range(1, 41)):
        raise FixtureMismatch("Table 1 fixture must list ray ids 1..40 in order")
    for c, context in enumerate(mermin_pentagram(), start=1):
        derived = set(joint_eigenrays(context))
        expected = {comps for _, col, comps in fixture if col == c}
        if derived != expected:
            missing = sorted(expected - derived)
            extra = sorted(derived - expected)
            raise FixtureMismatch(f"column {c}: fixture-only {missing}, derived-only {extra}")
    rays = tuple(Ray(rid, comps) for rid, _, comps in fixture)
    return RayTable(rays=rays, column_of={rid: col for rid, col, _ in fixture})
