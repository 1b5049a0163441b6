import itertools

import pytest

from ksforge.construction import (
    CROSSED,
    SIGNATURE_11,
    SIGNATURE_13,
    SIGNATURE_15,
    TICKED,
    UNMARKED,
    Tableau,
    construct_11,
    construct_13,
    construct_15,
    pick_sequences,
    trace_render,
)
from ksforge.errors import ConstructionError, CrossedPairConflict, InadmissiblePick, SameColumn
from ksforge.parity import find_coloring, is_parity_proof

GOOD_13 = ((1, 1), (2, 4), (3, 7))
GOOD_15 = ((1, 1), (2, 4), (3, 7), (4, 8))


def test_worked_example(eq1_bids):
    result = construct_11((1, 1), [13, 23, 32])
    assert set(result.bases) == set(eq1_bids)
    assert str(result.signature) == SIGNATURE_11
    assert result.picks == (13, 23, 32)


def test_auto_policy_is_deterministic():
    a, b = construct_11((1, 1)), construct_11((1, 1))
    assert a.trace == b.trace
    assert str(a.signature) == SIGNATURE_11
    assert is_parity_proof(a.bases)


def test_auto_skips_rays_in_crossed_bases():
    result = construct_11((1, 1))
    skipped = [e.subject for e in result.trace if e.action == "skip"]
    assert "R4" in skipped


def test_other_pick_order_is_valid():
    seqs = list(pick_sequences((1, 1)))
    alt = next(s for s in seqs if s != (13, 23, 32))
    result = construct_11((1, 1), list(alt))
    assert str(result.signature) == SIGNATURE_11


@pytest.mark.parametrize("picks", [[1], [13, 13], [4], [99], [13, 23, 32, 40]])
def test_inadmissible_picks(picks):
    with pytest.raises(InadmissiblePick):
        construct_11((1, 1), picks)


def test_construct_11_shape_and_uncolorable():
    for column, row in itertools.product(range(1, 6), range(1, 9)):
        result = construct_11((column, row))
        pures = [b for b in result.bases if b.startswith("x")]
        assert pures == [f"x{column}"]
        assert len(result.bases) == 11
        marked = [b for b, m in result.tableau.mark.items() if b.startswith("y") and m != UNMARKED]
        assert len(marked) == 20
        assert find_coloring(result.bases) is None


def test_construct_13_example():
    result = construct_13(*GOOD_13)
    assert str(result.signature) == SIGNATURE_13
    assert sum(1 for b in result.bases if b.startswith("x")) == 3
    assert find_coloring(result.bases) is None
    assert result.trace[-2].step == "S6"


def test_construct_15_example():
    result = construct_15(*GOOD_15)
    assert str(result.signature) == SIGNATURE_15
    assert len(result.bases) == 15
    assert find_coloring(result.bases) is None


def test_same_column_rejected():
    with pytest.raises(SameColumn):
        construct_13((1, 1), (1, 2), (1, 3))
    with pytest.raises(SameColumn):
        construct_15((1, 1), (2, 1), (3, 1), (2, 2))


def test_conflict_reported():
    with pytest.raises(CrossedPairConflict):
        construct_13((1, 1), (2, 1), (3, 1))


def test_tableau_exclusivity(geom):
    tab = Tableau(geom)
    tab.tick_hybrid("y1", "t")
    assert tab.mark["y1"] == TICKED and tab.mark["y2"] == CROSSED
    tab.tick("y1", "t")
    assert len(tab.trace) == 2
    with pytest.raises(CrossedPairConflict):
        tab.tick("y2", "t")
    with pytest.raises(CrossedPairConflict):
        tab.cross("y1", "t")


def test_render_empty_tableau(geom):
    text = trace_render(Tableau(geom))
    assert text.count("[ ]") == 25
    assert "(empty)" in text


def test_render_eq1():
    result = construct_11((1, 1), [13, 23, 32])
    text = trace_render(result)
    assert text.count("[v]") == 11
    assert "_13_" in text and "_32_" in text
    assert len(result.trace) >= 5
    assert f"signature: {SIGNATURE_11}" in text


def test_only_declared_failures_in_sweeps():
    for k, builder in ((3, construct_13), (4, construct_15)):
        for columns in itertools.combinations(range(1, 6), k):
            for rows in itertools.product(range(1, 9), repeat=k):
                try:
                    result = builder(*zip(columns, rows))
                except CrossedPairConflict:
                    continue
                except ConstructionError as exc:  # pragma: no cover - would be a regression
                    pytest.fail(f"unexpected {type(exc).__name__} for {columns} {rows}")
                assert str(result.signature) == (SIGNATURE_13 if k == 3 else SIGNATURE_15)
