"""012e / 012n wildcard rows and families of pairwise disjoint rows.

A row assigns each item position one of: fixed 0, fixed 1, free ("2"), or
membership in a wildcard group.  In e-mode a group demands at least one 1
among its cells; in n-mode at least one 0.  A row therefore denotes a set
of subsets, and a family of pairwise disjoint rows denotes their union,
with exact cardinality available without enumeration.

Cells are encoded as small ints: 0, 1, 2 literally, and group ``g`` as
``3 + g``.  Group ids are renumbered in first-occurrence order and
single-cell groups are collapsed (to 1 in e-mode, to 0 in n-mode), so two
rows denote identical constraints iff their normal forms are equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FormatError
from .fileio import parse_domain_line, serialize_domain_line, _logical_lines
from .model import Domain, ItemSet

ZERO = 0
ONE = 1
FREE = 2
_GROUP_BASE = 3

E_MODE = "e"
N_MODE = "n"


def is_group(cell: int) -> bool:
    return cell >= _GROUP_BASE


def sat_bit(mode: str) -> int:
    """Bit value that satisfies a group constraint in this mode."""
    return 1 if mode == E_MODE else 0


@dataclass(frozen=True)
class SymbolRow:
    mode: str
    cells: tuple[int, ...]

    @classmethod
    def make(cls, mode: str, cells: Iterable[int]) -> "SymbolRow":
        """Build a row in normal form; use this instead of the constructor."""
        if mode not in (E_MODE, N_MODE):
            raise ValueError(f"bad mode {mode!r}")
        cells = list(cells)
        normalize_cells(cells, mode)
        return cls(mode, tuple(cells))

    @classmethod
    def all_free(cls, mode: str, w: int) -> "SymbolRow":
        return cls.make(mode, [FREE] * w)

    @property
    def w(self) -> int:
        return len(self.cells)

    def group_positions(self) -> dict[int, list[int]]:
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(self.cells):
            if is_group(c):
                groups.setdefault(c, []).append(i)
        return groups

    def tokens(self) -> list[str]:
        out = []
        for c in self.cells:
            if is_group(c):
                out.append(f"{self.mode}{c - _GROUP_BASE + 1}")
            else:
                out.append(str(c))
        return out

    def __str__(self) -> str:
        return " ".join(self.tokens())


def normalize_cells(cells: list[int], mode: str) -> None:
    """Renumber groups densely and collapse single-cell groups, in place."""
    counts: dict[int, int] = {}
    for c in cells:
        if is_group(c):
            counts[c] = counts.get(c, 0) + 1
    lone = 1 if mode == E_MODE else 0
    renumber: dict[int, int] = {}
    for i, c in enumerate(cells):
        if not is_group(c):
            continue
        if counts[c] == 1:
            cells[i] = lone
        else:
            if c not in renumber:
                renumber[c] = _GROUP_BASE + len(renumber)
            cells[i] = renumber[c]


def force_cell(cells: list[int], mode: str, pos: int, bit: int) -> bool:
    """Constrain one position to a bit value, in place.

    Returns False when the row becomes empty (fixed-cell clash or a group
    left with no way to meet its constraint).  Forcing a group cell to the
    satisfying bit releases its siblings to free; forcing it the other way
    shrinks the group, with a one-cell remnant collapsing to a fixed cell.
    """
    sat = sat_bit(mode)
    c = cells[pos]
    if c == FREE:
        cells[pos] = bit
        return True
    if not is_group(c):
        return c == bit
    gid = c
    cells[pos] = bit
    if bit == sat:
        for i, x in enumerate(cells):
            if x == gid:
                cells[i] = FREE
        return True
    rest = [i for i, x in enumerate(cells) if x == gid]
    if not rest:
        return False
    if len(rest) == 1:
        cells[rest[0]] = sat
    return True


def row_cardinality(row: SymbolRow) -> int:
    n = 1 << sum(1 for c in row.cells if c == FREE)
    for positions in row.group_positions().values():
        n *= (1 << len(positions)) - 1
    return n


def row_contains(row: SymbolRow, mask: int) -> bool:
    pending: dict[int, bool] = {}
    for i, c in enumerate(row.cells):
        bit = mask >> i & 1
        if c == FREE:
            continue
        if not is_group(c):
            if c != bit:
                return False
        else:
            pending.setdefault(c, False)
            if bit == sat_bit(row.mode):
                pending[c] = True
    return all(pending.values())


def row_member_masks(row: SymbolRow) -> Iterator[int]:
    """Yield every member bitmask exactly once."""
    fixed = 0
    free_ps = []
    for i, c in enumerate(row.cells):
        if c == ONE:
            fixed |= 1 << i
        elif c == FREE:
            free_ps.append(i)
    units: list[list[int]] = [[0, 1 << p] for p in free_ps]
    sat = sat_bit(row.mode)
    for positions in row.group_positions().values():
        choices = []
        for pattern in range(1 << len(positions)):
            if sat == 1 and pattern == 0:
                continue
            if sat == 0 and pattern == (1 << len(positions)) - 1:
                continue
            choices.append(sum(1 << p for j, p in enumerate(positions) if pattern >> j & 1))
        units.append(choices)
    for combo in itertools.product(*units):
        yield fixed | sum(combo)


def rows_disjoint(r1: SymbolRow, r2: SymbolRow) -> bool:
    """True iff no bitstring lies in both rows.

    Two rows of the same mode intersect iff their fixed cells never clash
    and every group of either row keeps at least one cell the other row
    does not force against it: group constraints are monotone, so setting
    all unforced cells toward the satisfying bit is a joint witness.
    """
    if r1.mode != r2.mode or r1.w != r2.w:
        raise ValueError("rows must share mode and length")
    blocker = ZERO if r1.mode == E_MODE else ONE
    for a, b in zip(r1.cells, r2.cells):
        if {a, b} == {ZERO, ONE}:
            return True
    for row, other in ((r1, r2), (r2, r1)):
        for positions in row.group_positions().values():
            if all(other.cells[p] == blocker for p in positions):
                return True
    return False


def complement_row(row: SymbolRow) -> SymbolRow:
    swap = {ZERO: ONE, ONE: ZERO, FREE: FREE}
    mode = N_MODE if row.mode == E_MODE else E_MODE
    return SymbolRow.make(mode, [swap.get(c, c) for c in row.cells])


@dataclass(frozen=True)
class RowFamily:
    """A disjoint union of same-mode rows over a domain."""

    domain: Domain
    mode: str
    rows: tuple[SymbolRow, ...]

    def __post_init__(self):
        for r in self.rows:
            if r.mode != self.mode or r.w != self.domain.w:
                raise ValueError("row mode/length does not match the family")

    @classmethod
    def powerset(cls, domain: Domain, mode: str = E_MODE) -> "RowFamily":
        return cls(domain, mode, (SymbolRow.all_free(mode, domain.w),))

    def count(self) -> int:
        return sum(row_cardinality(r) for r in self.rows)

    def contains(self, s: ItemSet) -> bool:
        return any(row_contains(r, s.mask) for r in self.rows)

    def enumerate_sets(self) -> Iterator[ItemSet]:
        for r in self.rows:
            for mask in row_member_masks(r):
                yield ItemSet(self.domain, mask)

    def member_masks(self) -> Iterator[int]:
        for r in self.rows:
            yield from row_member_masks(r)

    def pairwise_disjoint(self) -> bool:
        return all(
            rows_disjoint(a, b) for a, b in itertools.combinations(self.rows, 2)
        )


def complement_rows(family: RowFamily) -> RowFamily:
    """The family {Q∖S : S ∈ family}, with the dual mode."""
    mode = N_MODE if family.mode == E_MODE else E_MODE
    return RowFamily(family.domain, mode, tuple(complement_row(r) for r in family.rows))


def restrict_rows(family: RowFamily, contain: ItemSet, avoid: ItemSet) -> RowFamily:
    """Keep exactly the members with contain ⊆ S and S ∩ avoid = ∅."""
    if not contain.isdisjoint(avoid):
        raise ValueError("contain and avoid overlap")
    kept = []
    for row in family.rows:
        cells = list(row.cells)
        ok = all(force_cell(cells, family.mode, p, 1) for p in contain.indices())
        ok = ok and all(force_cell(cells, family.mode, p, 0) for p in avoid.indices())
        if ok:
            kept.append(SymbolRow.make(family.mode, cells))
    return RowFamily(family.domain, family.mode, tuple(kept))


def parse_rows(text: str) -> RowFamily:
    lines = list(_logical_lines(text))
    if len(lines) < 2:
        raise FormatError("rows file needs a domain line and a mode line", 1)
    domain = parse_domain_line(lines[0][1], lines[0][0])
    lineno, mode_line = lines[1]
    if not mode_line.startswith("mode:"):
        raise FormatError("expected 'mode: e' or 'mode: n'", lineno)
    mode = mode_line[len("mode:"):].strip()
    if mode not in (E_MODE, N_MODE):
        raise FormatError(f"bad mode {mode!r}", lineno)
    rows = []
    for lineno, line in lines[2:]:
        tokens = line.split()
        if len(tokens) != domain.w:
            raise FormatError(f"expected {domain.w} tokens, got {len(tokens)}", lineno)
        cells = []
        for tok in tokens:
            if tok in ("0", "1", "2"):
                cells.append(int(tok))
            elif tok[0] == mode and tok[1:].isdigit() and int(tok[1:]) >= 1:
                cells.append(_GROUP_BASE + int(tok[1:]) - 1)
            else:
                raise FormatError(f"bad cell token {tok!r} for mode {mode}", lineno)
        rows.append(SymbolRow.make(mode, cells))
    return RowFamily(domain, mode, tuple(rows))


def serialize_rows(family: RowFamily) -> str:
    lines = [serialize_domain_line(family.domain), f"mode: {family.mode}"]
    lines.extend(str(r) for r in family.rows)
    return "\n".join(lines) + "\n"
