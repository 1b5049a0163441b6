"""The three manual tick/cross procedures that build 11-, 13- and 15-basis KS sets.

Every procedure works on a private ``Tableau`` holding one mark per basis.
Ticking a hybrid always crosses its partner on the same line; ticking a
crossed basis or crossing a ticked one is a ``CrossedPairConflict``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import (
    AmbiguousFinalBasis,
    ConstructionError,
    CrossedPairConflict,
    InadmissiblePick,
    SameColumn,
    Stalled,
)
from .geometry import GammaEntry, Geometry, bid_key, default_geometry, gamma, hybrids_covering
from .parity import Signature, is_parity_proof, signature

UNMARKED, TICKED, CROSSED = "unmarked", "ticked", "crossed"

SIGNATURE_11 = "28_2 8_4 - 11_8"
SIGNATURE_13 = "24_2 14_4 - 13_8"
SIGNATURE_15 = "20_2 20_4 - 15_8"


@dataclass(frozen=True)
class TraceEntry:
    step: str
    action: str
    subject: str


@dataclass
class Tableau:
    geom: Geometry
    mark: dict[str, str] = field(default_factory=dict)
    trace: list[TraceEntry] = field(default_factory=list)

    def __post_init__(self):
        for bid in self.geom.bids:
            self.mark.setdefault(bid, UNMARKED)

    def log(self, step, action, subject):
        self.trace.append(TraceEntry(step, action, str(subject)))

    def tick(self, bid, step):
        state = self.mark[bid]
        if state == CROSSED:
            raise CrossedPairConflict(f"{step}: {bid} must be ticked but is already crossed out")
        if state == UNMARKED:
            self.mark[bid] = TICKED
            self.log(step, "tick", bid)

    def cross(self, bid, step):
        state = self.mark[bid]
        if state == TICKED:
            raise CrossedPairConflict(f"{step}: {bid} must be crossed out but is already ticked")
        if state == UNMARKED:
            self.mark[bid] = CROSSED
            self.log(step, "cross", bid)

    def tick_hybrid(self, bid, step):
        self.tick(bid, step)
        self.cross(self.geom.partner(bid), step)

    def with_mark(self, state, kind=None) -> list[str]:
        bids = self.geom.hybrids if kind == "hybrid" else self.geom.pures if kind == "pure" else self.geom.bids
        return [b for b in bids if self.mark[b] == state]

    def ticked_rays(self, kind="hybrid") -> set[int]:
        return {r for bid in self.with_mark(TICKED, kind) for r in self.geom[bid].rays}

    def in_crossed(self, ray_id) -> bool:
        return any(self.mark[bid] == CROSSED for bid in self.geom.containing(ray_id))


@dataclass(frozen=True)
class ConstructionResult:
    kind: int
    gammas: tuple[GammaEntry, ...]
    picks: tuple[int, ...]
    bases: tuple[str, ...]
    signature: Signature
    tableau: Tableau = field(compare=False, repr=False)

    @property
    def trace(self) -> list[TraceEntry]:
        return self.tableau.trace

    @property
    def selected_rays(self) -> set[int]:
        return {r for g in self.gammas for r in g.rays} | set(self.picks)


def _as_gamma(g) -> GammaEntry:
    return g if isinstance(g, GammaEntry) else gamma(*g)


def _apply_gamma(tab: Tableau, entry: GammaEntry, step_label: str) -> None:
    """S1-S3 for one Gamma set: tick its pure basis and the hybrids holding its triples."""
    tab.log(step_label, "choose", entry)
    tab.tick(tab.geom.pure_of_column(entry.column), step_label)
    for triple in entry.triples:
        for bid in sorted(hybrids_covering(triple, tab.geom), key=bid_key):
            tab.tick_hybrid(bid, step_label)


def _finish(kind, tab: Tableau, gammas, picks, pure_count: int) -> ConstructionResult:
    bases = tuple(tab.with_mark(TICKED))
    if not is_parity_proof(bases, tab.geom):
        raise ConstructionError(f"ticked bases {list(bases)} do not form a parity proof")
    pures = sum(1 for b in bases if tab.geom[b].is_pure)
    if pures != pure_count:
        raise ConstructionError(f"expected {pure_count} pure bases, got {pures}")
    return ConstructionResult(kind, tuple(gammas), tuple(picks), bases, signature(bases, tab.geom), tab)


def _require_distinct_columns(gammas) -> None:
    columns = [g.column for g in gammas]
    if len(set(columns)) != len(columns):
        raise SameColumn(f"Gamma sets share a column: {columns}")


def admissible_picks(tab: Tableau, entry: GammaEntry, examined) -> list[int]:
    """New rays: in a ticked hybrid, outside Gamma, not yet examined (ascending)."""
    return sorted(tab.ticked_rays() - set(entry.rays) - set(examined))


def _examine(tab: Tableau, ray_id: int, step: str) -> bool:
    """Tick every hybrid holding ``ray_id`` unless it sits in a crossed basis."""
    if tab.in_crossed(ray_id):
        tab.log(step, "skip", f"R{ray_id}")
        return False
    tab.log(step, "pick", f"R{ray_id}")
    for bid in tab.geom.containing(ray_id):
        if not tab.geom[bid].is_pure:
            tab.tick_hybrid(bid, step)
    return True


def construct_11(g, pick_order=None, geom: Geometry | None = None) -> ConstructionResult:
    """Build a 28_2 8_4 - 11_8 set from one Gamma set.

    ``pick_order`` lists the rays picked in S4/S5; each must be a new ray that
    does not lie in a crossed basis. Once the list runs out (or when it is
    None), the smallest admissible ray is examined next.
    """
    geom = geom or default_geometry()
    entry = _as_gamma(g)
    tab = Tableau(geom)
    _apply_gamma(tab, entry, "S1-S3")

    pending = list(pick_order or [])
    examined: list[int] = []
    picks: list[int] = []
    while tab.with_mark(UNMARKED, "hybrid"):
        step = "S5" if examined else "S4"
        candidates = admissible_picks(tab, entry, examined)
        if pending:
            ray_id = pending.pop(0)
            if ray_id not in candidates:
                raise InadmissiblePick(f"R{ray_id} is not a new ray in a ticked hybrid")
            if tab.in_crossed(ray_id):
                raise InadmissiblePick(f"R{ray_id} lies in a crossed-out basis")
        elif candidates:
            ray_id = candidates[0]
        else:
            raise Stalled(f"no new ray left, unmarked: {tab.with_mark(UNMARKED, 'hybrid')}")
        examined.append(ray_id)
        if _examine(tab, ray_id, step):
            picks.append(ray_id)
    if pending:
        raise InadmissiblePick(f"all hybrids are marked; unused picks {pending}")
    return _finish(11, tab, [entry], picks, pure_count=1)


def _final_13(tab: Tableau) -> str:
    remaining = tab.with_mark(UNMARKED, "hybrid")
    pairs = {tuple(sorted((b, tab.geom.partner(b)), key=bid_key)) for b in remaining}
    if len(pairs) != 1 or len(remaining) != 2:
        raise AmbiguousFinalBasis(f"expected one unmarked y-y' pair, found {remaining}")
    mult = Counter(r for bid in tab.with_mark(TICKED, "hybrid") for r in tab.geom[bid].rays)
    triple_rays = {r for r, n in mult.items() if n == 3}
    chosen = [b for b in remaining if len(tab.geom[b].rays & triple_rays) == 2]
    if len(chosen) != 1:
        raise AmbiguousFinalBasis(f"S6 rule selects {chosen or 'nothing'} from {remaining}")
    return chosen[0]


def construct_13(g1, g2, g3, geom: Geometry | None = None) -> ConstructionResult:
    """Build a 24_2 14_4 - 13_8 set from three Gamma sets in distinct columns."""
    geom = geom or default_geometry()
    gammas = [_as_gamma(g) for g in (g1, g2, g3)]
    _require_distinct_columns(gammas)
    tab = Tableau(geom)
    for label, entry in zip(("S1-S3", "S4", "S5"), gammas):
        _apply_gamma(tab, entry, label)
    final = _final_13(tab)
    tab.tick_hybrid(final, "S6")
    return _finish(13, tab, gammas, [], pure_count=3)


def construct_15(g1, g2, g3, g4, geom: Geometry | None = None) -> ConstructionResult:
    """Build a 20_2 20_4 - 15_8 set from four Gamma sets in distinct columns.

    The four Gamma steps tick four pure and ten hybrid bases, leaving the rays
    of the untouched pure basis with odd multiplicity; ticking that fifth pure
    basis completes the set.
    """
    geom = geom or default_geometry()
    gammas = [_as_gamma(g) for g in (g1, g2, g3, g4)]
    _require_distinct_columns(gammas)
    tab = Tableau(geom)
    for label, entry in zip(("S1-S3", "S4", "S5", "S6"), gammas):
        _apply_gamma(tab, entry, label)
    unmarked = tab.with_mark(UNMARKED, "hybrid")
    if unmarked:
        raise AmbiguousFinalBasis(f"hybrids left unmarked after S6: {unmarked}")
    (last_pure,) = tab.with_mark(UNMARKED, "pure")
    mult = Counter(r for bid in tab.with_mark(TICKED) for r in geom[bid].rays)
    odd = {r for r, n in mult.items() if n % 2}
    if odd != set(geom[last_pure].rays):
        raise AmbiguousFinalBasis(f"odd rays {sorted(odd)} are not the rays of {last_pure}")
    tab.tick(last_pure, "S7")
    return _finish(15, tab, gammas, [], pure_count=5)


def trace_render(source) -> str:
    """Plain-text tick/cross report; selected rays are shown as ``_n_``."""
    if isinstance(source, ConstructionResult):
        tab, selected = source.tableau, source.selected_rays
    else:
        tab, selected = source, set()
    lines = []
    if isinstance(source, ConstructionResult):
        lines.append(f"construction: {source.kind}-basis")
        lines.append("gamma: " + " ".join(str(g) for g in source.gammas))
        if source.kind == 11:
            lines.append("picks: " + (" ".join(f"R{r}" for r in source.picks) or "-"))
    lines.append("trace:")
    if not tab.trace:
        lines.append("  (empty)")
    for n, e in enumerate(tab.trace, start=1):
        lines.append(f"  {n:3d}  {e.step:<6} {e.action:<6} {e.subject}")
    lines.append("board:")
    symbol = {TICKED: "[v]", CROSSED: "[x]", UNMARKED: "[ ]"}
    for bid in tab.geom.bids:
        rays = " ".join(f"_{r}_" if r in selected else str(r) for r in tab.geom[bid].sorted_rays())
        lines.append(f"  {symbol[tab.mark[bid]]} {bid:<4} {rays}")
    if isinstance(source, ConstructionResult):
        lines.append("ks set: " + " ".join(source.bases))
        lines.append(f"signature: {source.signature}")
    return "\n".join(lines) + "\n"


def pick_sequences(g, geom: Geometry | None = None):
    """Yield every complete sequence of effective S4/S5 picks for one Gamma set.

    A ray lying in a crossed basis is skipped by S4 and never becomes
    admissible again, so only rays outside crossed bases branch the search.
    """
    geom = geom or default_geometry()
    entry = _as_gamma(g)
    root = Tableau(geom)
    _apply_gamma(root, entry, "S1-S3")

    def walk(tab, picks):
        if not tab.with_mark(UNMARKED, "hybrid"):
            yield tuple(picks)
            return
        options = [r for r in admissible_picks(tab, entry, picks) if not tab.in_crossed(r)]
        for r in options:
            child = Tableau(geom, dict(tab.mark), [])
            _examine(child, r, "S5")
            yield from walk(child, picks + [r])

    yield from walk(root, [])
