"""Bases of the 40-ray system: pure/hybrid classification, lines, partners and Gamma sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import GammaMismatch, NotHybrid, UnexpectedBasisCount
from .fixtures import fixture_dir, read_rows
from .rays import RayTable, build_ray_table, inner_product

PURE = "pure"
HYBRID = "hybrid"


def bid_key(bid: str) -> tuple[int, int]:
    """Sort key placing x1..x5 before y1..y20, numerically."""
    return (0 if bid[0] == "x" else 1, int(bid[1:]))


@dataclass(frozen=True)
class Basis:
    bid: str
    rays: frozenset[int]
    kind: str
    columns: tuple[int, ...]

    @property
    def is_pure(self) -> bool:
        return self.kind == PURE

    def sorted_rays(self) -> list[int]:
        return sorted(self.rays)


@dataclass(frozen=True)
class Line:
    pures: tuple[str, str]
    hybrids: tuple[str, str]

    @property
    def members(self) -> tuple[str, ...]:
        return self.pures + self.hybrids


@dataclass(frozen=True)
class GammaEntry:
    column: int
    row: int
    rays: tuple[int, int, int, int]

    @property
    def triples(self) -> list[tuple[int, int, int]]:
        return list(itertools.combinations(self.rays, 3))

    def __str__(self):
        return f"Gamma[{self.column},{self.row}]={{{','.join(map(str, self.rays))}}}"


class Geometry:
    def __init__(self, table: RayTable, bases, lines):
        self.table = table
        self.bases: dict[str, Basis] = {b.bid: b for b in sorted(bases, key=lambda b: bid_key(b.bid))}
        self.lines: tuple[Line, ...] = tuple(lines)
        self._partner = {}
        self._line_of = {}
        for line in self.lines:
            y, yp = line.hybrids
            self._partner[y], self._partner[yp] = yp, y
            for bid in line.hybrids:
                self._line_of[bid] = line
        self._containing = {r: tuple(b.bid for b in self.bases.values() if r in b.rays) for r in table.ids()}

    def __getitem__(self, bid: str) -> Basis:
        return self.bases[bid]

    def __contains__(self, bid) -> bool:
        return bid in self.bases

    @property
    def bids(self) -> list[str]:
        return list(self.bases)

    @property
    def pures(self) -> list[str]:
        return [b for b, basis in self.bases.items() if basis.is_pure]

    @property
    def hybrids(self) -> list[str]:
        return [b for b, basis in self.bases.items() if not basis.is_pure]

    def pure_of_column(self, column: int) -> str:
        return f"x{column}"

    def partner(self, bid: str) -> str:
        if bid not in self._partner:
            raise NotHybrid(f"{bid} is not a hybrid basis")
        return self._partner[bid]

    def line_of(self, bid: str) -> Line:
        if bid not in self._line_of:
            raise NotHybrid(f"{bid} is not a hybrid basis")
        return self._line_of[bid]

    def containing(self, ray_id: int) -> tuple[str, ...]:
        """Bids of every basis holding ``ray_id``, in bid order."""
        return self._containing[ray_id]

    def half(self, bid: str, column: int) -> frozenset[int]:
        """Rays of basis ``bid`` that belong to pure column ``column``."""
        return frozenset(r for r in self.bases[bid].rays if self.table.column_of[r] == column)


def _orthogonal_octads(table: RayTable) -> list[tuple[int, ...]]:
    ids = list(table.ids())
    adj = {a: {b for b in ids if b != a and inner_product(table[a], table[b]) == 0} for a in ids}
    found = []

    def extend(clique, candidates):
        if len(clique) == 8:
            found.append(tuple(clique))
            return
        if len(clique) + len(candidates) < 8:
            return
        for i, r in enumerate(candidates):
            extend(clique + [r], [s for s in candidates[i + 1:] if s in adj[r]])

    extend([], ids)
    return found


def enumerate_bases(table: RayTable | None = None) -> Geometry:
    table = table or build_ray_table()
    octads = _orthogonal_octads(table)
    if len(octads) != 25:
        raise UnexpectedBasisCount(f"found {len(octads)} orthogonal octads, expected 25")

    pures, hybrid_keys = [], []
    for octad in octads:
        columns = sorted({table.column_of[r] for r in octad})
        census = sorted(sum(1 for r in octad if table.column_of[r] == c) for c in columns)
        if census == [8]:
            pures.append(Basis(f"x{columns[0]}", frozenset(octad), PURE, tuple(columns)))
        elif census == [4, 4]:
            hybrid_keys.append((columns[0], columns[1], tuple(sorted(octad))))
        else:
            raise UnexpectedBasisCount(f"octad {octad} has column census {census}")
    if len(pures) != 5 or len(hybrid_keys) != 20:
        raise UnexpectedBasisCount(f"{len(pures)} pure and {len(hybrid_keys)} hybrid bases")

    hybrids = [
        Basis(f"y{n}", frozenset(rays), HYBRID, (a, b))
        for n, (a, b, rays) in enumerate(sorted(hybrid_keys), start=1)
    ]
    lines = []
    for a, b in itertools.combinations(range(1, 6), 2):
        on_line = [h.bid for h in hybrids if h.columns == (a, b)]
        if len(on_line) != 2:
            raise UnexpectedBasisCount(f"line (x{a}, x{b}) has {len(on_line)} hybrids")
        lines.append(Line((f"x{a}", f"x{b}"), tuple(on_line)))
    return Geometry(table, pures + hybrids, lines)


@lru_cache(maxsize=None)
def _default_geometry(_fixture_key: str) -> Geometry:
    return enumerate_bases(build_ray_table())


def default_geometry() -> Geometry:
    """The geometry of the shipped ray table (cached)."""
    return _default_geometry(str(fixture_dir()))


def hybrids_covering(triple, geom: Geometry) -> set[str]:
    triple = set(triple)
    return {bid for bid in geom.hybrids if triple <= geom[bid].rays}


def _gamma_candidates(geom: Geometry, column: int) -> list[tuple[int, ...]]:
    pure = geom[geom.pure_of_column(column)]
    halves = {bid: geom.half(bid, column) for bid in geom.hybrids if column in geom[bid].columns}
    half_sets = set(halves.values())
    keep = []
    for quad in itertools.combinations(pure.sorted_rays(), 4):
        if frozenset(quad) in half_sets:
            continue
        covering = []
        for triple in itertools.combinations(quad, 3):
            hits = [bid for bid, half in halves.items() if set(triple) <= half]
            if len(hits) != 1:
                break
            covering.append(hits[0])
        else:
            if len({geom.line_of(bid) for bid in covering}) == 4:
                keep.append(quad)
    return keep


def load_table2() -> dict[tuple[int, int], tuple[int, ...]]:
    return {(col, row): tuple(sorted(rays)) for row, col, *rays in read_rows("table2.txt")}


def derive_gamma_table(geom: Geometry | None = None) -> list[GammaEntry]:
    """Gamma sets found from the geometry, with row numbers adopted from the Table 2 fixture."""
    geom = geom or default_geometry()
    fixture = load_table2()
    entries = []
    for column in range(1, 6):
        derived = _gamma_candidates(geom, column)
        if len(derived) != 8:
            raise GammaMismatch(f"column {column}: derived {len(derived)} Gamma sets, expected 8")
        expected = {rays: row for (col, row), rays in fixture.items() if col == column}
        if set(derived) != set(expected):
            raise GammaMismatch(
                f"column {column}: derived {sorted(derived)} differs from fixture {sorted(expected)}"
            )
        entries.extend(GammaEntry(column, expected[q], q) for q in derived)
    entries.sort(key=lambda e: (e.column, e.row))
    return entries


@lru_cache(maxsize=None)
def _gamma_index(_fixture_key: str) -> dict[tuple[int, int], GammaEntry]:
    return {(e.column, e.row): e for e in derive_gamma_table(default_geometry())}


def gamma(column: int, row: int) -> GammaEntry:
    index = _gamma_index(str(fixture_dir()))
    if (column, row) not in index:
        raise KeyError(f"no Gamma set at column {column}, row {row}")
    return index[(column, row)]
