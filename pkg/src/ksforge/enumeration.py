"""Exhaustive enumeration of parity proofs over the 25 bases.

Subsets are 25-bit masks: bit ``i`` selects the ``i``-th basis in bid order
(x1..x5, y1..y20). Rays are 40-bit masks with bit ``r - 1`` for ray ``r``.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .construction import (
    construct_11,
    construct_13,
    construct_15,
    pick_sequences,
)
from .errors import ConstructionError
from .fixtures import fixture_dir
from .geometry import Geometry, default_geometry, derive_gamma_table
from .parity import Signature, census_signature

LOW_BITS = 13
GAMMA_COUNT = {11: 1, 13: 3, 15: 4}


@dataclass(frozen=True)
class IncidenceMatrix:
    bids: tuple[str, ...]
    rows: tuple[int, ...]

    def column_sums(self, width: int = 40) -> list[int]:
        return [sum(row >> r & 1 for row in self.rows) for r in range(width)]

    def xor(self, mask: int) -> int:
        acc = 0
        for i, row in enumerate(self.rows):
            if mask >> i & 1:
                acc ^= row
        return acc


def incidence_matrix(geom: Geometry | None = None) -> IncidenceMatrix:
    geom = geom or default_geometry()
    rows = tuple(sum(1 << (r - 1) for r in geom[bid].rays) for bid in geom.bids)
    return IncidenceMatrix(tuple(geom.bids), rows)


def mask_to_bids(mask: int, bids) -> list[str]:
    return [bid for i, bid in enumerate(bids) if mask >> i & 1]


def bids_to_mask(selected, bids) -> int:
    index = {bid: i for i, bid in enumerate(bids)}
    return sum(1 << index[b] for b in set(selected))


def _subset_xors(rows) -> np.ndarray:
    """XOR of rows over every subset, built in counter order one XOR per step."""
    out = np.zeros(1 << len(rows), dtype=np.uint64)
    for s in range(1, len(out)):
        low = s & -s
        out[s] = out[s ^ low] ^ np.uint64(rows[low.bit_length() - 1])
    return out


def _parities(n_bits: int) -> np.ndarray:
    par = np.zeros(1 << n_bits, dtype=np.uint8)
    for s in range(1, len(par)):
        par[s] = par[s & (s - 1)] ^ 1
    return par


def scan_even_subsets(m: IncidenceMatrix) -> list[int]:
    """Every odd-size subset of rows whose XOR vanishes, by testing all 2**n subsets.

    The subsets are split on the low ``LOW_BITS`` bits; for each setting of the
    high bits the whole low block is compared in one vectorized step.
    """
    n = len(m.rows)
    lo = min(LOW_BITS, n)
    low_xor = _subset_xors(m.rows[:lo])
    high_xor = _subset_xors(m.rows[lo:])
    low_par = _parities(lo)
    high_par = _parities(n - lo)
    found = []
    for h, hx in enumerate(high_xor):
        hits = np.flatnonzero((low_xor == hx) & (low_par != high_par[h]))
        found.extend((h << lo) | int(low) for low in hits)
    return sorted(found)


def gf2_kernel(m: IncidenceMatrix) -> list[int]:
    """Basis (as row-subset masks) of the subsets whose rows XOR to zero."""
    work = [(row, 1 << i) for i, row in enumerate(m.rows)]
    kernel = []
    pivots: list[tuple[int, int]] = []
    for row, combo in work:
        for prow, pcombo in pivots:
            if row & (prow & -prow):
                row ^= prow
                combo ^= pcombo
        if row:
            # keep pivots reduced against the new leading bit
            lead = row & -row
            pivots = [(p ^ row, c ^ combo) if p & lead else (p, c) for p, c in pivots]
            pivots.append((row, combo))
        else:
            kernel.append(combo)
    return kernel


def span(vectors) -> list[int]:
    out = [0]
    for v in vectors:
        out += [x ^ v for x in out]
    return sorted(out)


def kernel_odd_members(m: IncidenceMatrix) -> list[int]:
    return sorted(v for v in span(gf2_kernel(m)) if bin(v).count("1") % 2)


def minimal_masks(masks) -> list[int]:
    """Masks with no other listed mask as a proper subset."""
    masks = sorted(set(masks), key=lambda x: (bin(x).count("1"), x))
    keep = []
    for mask in masks:
        if not any(k & mask == k for k in keep):
            keep.append(mask)
    return sorted(keep)


@dataclass(frozen=True)
class ProofCatalog:
    bids: tuple[str, ...]
    proofs: tuple[tuple[int, Signature], ...]
    minimal: frozenset[int] = field(default_factory=frozenset)

    @property
    def masks(self) -> list[int]:
        return [m for m, _ in self.proofs]

    @property
    def counts(self) -> dict[str, int]:
        return _tally(sig for _, sig in self.proofs)

    @property
    def minimal_counts(self) -> dict[str, int]:
        return _tally(sig for m, sig in self.proofs if m in self.minimal)

    def __contains__(self, bases) -> bool:
        return bids_to_mask(bases, self.bids) in self._mask_set

    @property
    def _mask_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    def bases_of(self, mask: int) -> list[str]:
        return mask_to_bids(mask, self.bids)

    def to_json(self, minimal_only: bool = False) -> str:
        items = [
            {"bases": self.bases_of(m), "signature": str(sig), "minimal": m in self.minimal}
            for m, sig in self.proofs
            if not minimal_only or m in self.minimal
        ]
        doc = {
            "version": "1",
            "counts": self.minimal_counts if minimal_only else self.counts,
            "proofs": items,
        }
        return json.dumps(doc, indent=2) + "\n"


def _tally(sigs) -> dict[str, int]:
    counts = Counter(sigs)
    return {str(s): counts[s] for s in sorted(counts, key=lambda s: (s.basis_count, s.census))}


def _catalog(masks, geom: Geometry) -> ProofCatalog:
    bids = tuple(geom.bids)
    proofs = tuple((m, census_signature(mask_to_bids(m, bids), geom)) for m in sorted(masks))
    return ProofCatalog(bids, proofs, frozenset(minimal_masks(masks)))


def enumerate_parity_proofs(geom: Geometry | None = None) -> ProofCatalog:
    geom = geom or default_geometry()
    return _catalog(scan_even_subsets(incidence_matrix(geom)), geom)


def kernel_catalog(geom: Geometry | None = None) -> ProofCatalog:
    geom = geom or default_geometry()
    return _catalog(kernel_odd_members(incidence_matrix(geom)), geom)


def load_frozen_counts() -> dict:
    return json.loads((fixture_dir() / "catalog_counts.json").read_text(encoding="utf-8"))


def fixture_differences(catalog: ProofCatalog) -> list[str]:
    frozen = load_frozen_counts()
    problems = []
    for key, actual in (("all", catalog.counts), ("minimal", catalog.minimal_counts)):
        if frozen.get(key) != actual:
            problems.append(f"{key}: expected {frozen.get(key)}, got {actual}")
    return problems


@dataclass
class CrossCheckReport:
    outcomes: dict[int, Counter] = field(default_factory=dict)
    reached: dict[int, set] = field(default_factory=dict)
    outside_catalog: list[tuple[int, tuple[str, ...]]] = field(default_factory=list)
    class_sizes: dict[str, int] = field(default_factory=dict)

    @property
    def all_in_catalog(self) -> bool:
        return not self.outside_catalog

    def coverage(self) -> dict[str, tuple[int, int]]:
        """Signature -> (distinct sets reached by the procedures, sets in the catalog)."""
        distinct = set().union(*self.reached.values()) if self.reached else set()
        reached = Counter(sig for _, sig in distinct)
        return {sig: (reached.get(sig, 0), size) for sig, size in self.class_sizes.items()}

    def render(self) -> str:
        lines = []
        for kind in sorted(self.outcomes):
            tally = ", ".join(f"{k}={v}" for k, v in sorted(self.outcomes[kind].items()))
            lines.append(f"construct_{kind}: {tally}")
        for sig, (got, total) in self.coverage().items():
            lines.append(f"coverage {sig}: {got}/{total}")
        lines.append(f"outputs outside catalog: {len(self.outside_catalog)}")
        return "\n".join(lines) + "\n"


def cross_check_constructions(catalog: ProofCatalog, geom: Geometry | None = None) -> CrossCheckReport:
    """Run every construction choice and compare each output with the catalog.

    construct_11 is run for every Gamma set and every complete pick sequence;
    construct_13/15 for every Gamma tuple with strictly increasing columns.
    """
    geom = geom or default_geometry()
    gammas = derive_gamma_table(geom)
    by_column = {c: [g for g in gammas if g.column == c] for c in range(1, 6)}
    report = CrossCheckReport(class_sizes=catalog.counts)

    def record(kind, run):
        tally = report.outcomes.setdefault(kind, Counter())
        reached = report.reached.setdefault(kind, set())
        try:
            result = run()
        except ConstructionError as exc:
            tally[type(exc).__name__] += 1
            return
        tally["ok"] += 1
        reached.add((result.bases, str(result.signature)))
        if result.bases not in catalog:
            report.outside_catalog.append((kind, result.bases))

    for g in gammas:
        for seq in pick_sequences(g, geom):
            record(11, lambda: construct_11(g, seq, geom))
    for kind, builder in ((13, construct_13), (15, construct_15)):
        for columns in itertools.combinations(range(1, 6), GAMMA_COUNT[kind]):
            for combo in itertools.product(*(by_column[c] for c in columns)):
                record(kind, lambda: builder(*combo, geom=geom))
    return report
