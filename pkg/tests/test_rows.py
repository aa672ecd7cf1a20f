import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kspace.errors import FormatError
from kspace.model import Domain, ItemSet
from kspace.rows import (
    E_MODE,
    FREE,
    N_MODE,
    ONE,
    ZERO,
    RowFamily,
    SymbolRow,
    complement_row,
    complement_rows,
    force_cell,
    parse_rows,
    restrict_rows,
    row_cardinality,
    row_contains,
    row_member_masks,
    rows_disjoint,
    serialize_rows,
    _GROUP_BASE,
)


def cells_strategy(w: int):
    # values 0,1,2 literal; 3,4 group ids (possibly singleton groups)
    return st.lists(st.integers(0, 4), min_size=w, max_size=w)


def brute_members(row: SymbolRow) -> set[int]:
    out = set()
    for mask in range(1 << row.w):
        ok = True
        pending = {}
        for i, c in enumerate(row.cells):
            bit = mask >> i & 1
            if c in (ZERO, ONE) and c != bit:
                ok = False
                break
            if c >= _GROUP_BASE:
                sat = 1 if row.mode == E_MODE else 0
                pending.setdefault(c, False)
                if bit == sat:
                    pending[c] = True
        if ok and all(pending.values()):
            out.add(mask)
    return out


def test_normal_form_renumbers_and_collapses_singletons():
    r = SymbolRow.make(E_MODE, [4, FREE, 4, 3, FREE])
    assert r.cells == (_GROUP_BASE, FREE, _GROUP_BASE, ONE, FREE)
    n = SymbolRow.make(N_MODE, [4, FREE, 4, 3, FREE])
    assert n.cells == (_GROUP_BASE, FREE, _GROUP_BASE, ZERO, FREE)
    assert str(r) == "e1 2 e1 1 2"


@settings(max_examples=150, deadline=None)
@given(cells_strategy(5), st.sampled_from([E_MODE, N_MODE]))
def test_row_cardinality_and_membership_match_enumeration(cells, mode):
    row = SymbolRow.make(mode, cells)
    members = brute_members(row)
    assert row_cardinality(row) == len(members)
    assert set(row_member_masks(row)) == members
    for mask in range(1 << row.w):
        assert row_contains(row, mask) == (mask in members)


@settings(max_examples=150, deadline=None)
@given(cells_strategy(5), cells_strategy(5), st.sampled_from([E_MODE, N_MODE]))
def test_rows_disjoint_matches_enumeration(c1, c2, mode):
    r1, r2 = SymbolRow.make(mode, c1), SymbolRow.make(mode, c2)
    assert rows_disjoint(r1, r2) == (not brute_members(r1) & brute_members(r2))


@settings(max_examples=150, deadline=None)
@given(cells_strategy(6), st.sampled_from([E_MODE, N_MODE]))
def test_complement_row_is_an_involution_preserving_cardinality(cells, mode):
    row = SymbolRow.make(mode, cells)
    comp = complement_row(row)
    assert complement_row(comp) == row
    assert row_cardinality(comp) == row_cardinality(row)
    full = (1 << row.w) - 1
    assert brute_members(comp) == {full ^ m for m in brute_members(row)}


@settings(max_examples=100, deadline=None)
@given(cells_strategy(5), st.integers(0, 4), st.integers(0, 1))
def test_force_cell_restricts_membership_exactly(cells, pos, bit):
    row = SymbolRow.make(E_MODE, cells)
    expected = {m for m in brute_members(row) if m >> pos & 1 == bit}
    work = list(row.cells)
    if force_cell(work, E_MODE, pos, bit):
        assert brute_members(SymbolRow.make(E_MODE, work)) == expected
    else:
        assert expected == set()


def test_powerset_family_counts_everything():
    domain = Domain(tuple("abcdef"))
    fam = RowFamily.powerset(domain)
    assert fam.count() == 64
    assert fam.contains(ItemSet.full(domain))


def test_restrict_rows_forces_membership(five_domain):
    fam = RowFamily.powerset(five_domain)
    contain = ItemSet.from_labels(five_domain, "ab")
    avoid = ItemSet.from_labels(five_domain, "e")
    got = restrict_rows(fam, contain, avoid)
    assert got.count() == 4
    assert all(contain.issubset(s) and s.isdisjoint(avoid) for s in got.enumerate_sets())
    with pytest.raises(ValueError):
        restrict_rows(fam, contain, contain)


def test_complement_rows_preserves_disjointness_and_count(five_domain):
    rows = (
        SymbolRow.make(E_MODE, [ZERO, FREE, ONE, _GROUP_BASE, _GROUP_BASE]),
        SymbolRow.make(E_MODE, [ONE, FREE, ONE, FREE, FREE]),
    )
    fam = RowFamily(five_domain, E_MODE, rows)
    assert fam.pairwise_disjoint()
    comp = complement_rows(fam)
    assert comp.mode == N_MODE
    assert comp.count() == fam.count()
    assert comp.pairwise_disjoint()


def test_rows_file_roundtrip(five_domain):
    text = "domain: a b c d e\nmode: e\n0 2 1 e1 e1\n1 2 1 2 2\n"
    fam = parse_rows(text)
    assert serialize_rows(fam) == text
    assert fam.count() == 2 * 3 + 8


def test_rows_file_errors():
    with pytest.raises(FormatError, match="mode"):
        parse_rows("domain: a b\n0 1\n")
    with pytest.raises(FormatError, match="2 tokens"):
        parse_rows("domain: a b\nmode: e\n0\n")
    with pytest.raises(FormatError, match="bad cell token"):
        parse_rows("domain: a b\nmode: e\nn1 0\n")
