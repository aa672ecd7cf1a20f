"""Base-centric operations on union-closed families.

The base of a knowledge space is its family of union-irreducible states;
every state is a union of base sets.  This module generates the space from
a base, extracts atoms and the base from compressed rows, recognizes
learning spaces, and assigns colors to the base sets of one.
"""

from __future__ import annotations

import itertools
from dataclasses import InitVar, dataclass

from ._setops import minimal_masks
from .errors import NotALearningSpaceError, ResourceLimitError
from .model import Domain, ItemSet
from .rows import E_MODE, FREE, ONE, ZERO, RowFamily, SymbolRow, force_cell, is_group

DEFAULT_STATE_LIMIT = 10_000_000


@dataclass(frozen=True)
class BaseFamily:
    """A family of candidate union-irreducible sets covering the domain."""

    domain: Domain
    sets: tuple[ItemSet, ...]
    check_coverage: InitVar[bool] = True

    def __post_init__(self, check_coverage):
        seen = set()
        union = 0
        for s in self.sets:
            if s.domain != self.domain:
                raise ValueError("base set over a different domain")
            if not s:
                raise ValueError("base sets must be nonempty")
            if s.mask in seen:
                raise ValueError(f"duplicate base set {s}")
            seen.add(s.mask)
            union |= s.mask
        if check_coverage and union != (1 << self.domain.w) - 1:
            missing = ItemSet(self.domain, (1 << self.domain.w) - 1 & ~union)
            raise ValueError(f"base does not cover the domain; missing {missing}")

    def masks(self) -> set[int]:
        return {s.mask for s in self.sets}

    def shrunk_to_cover(self) -> "BaseFamily":
        """Restrict the domain to the union of the base sets."""
        union = 0
        for s in self.sets:
            union |= s.mask
        keep = [i for i in range(self.domain.w) if union >> i & 1]
        sub = Domain(tuple(self.domain.items[i] for i in keep))
        remap = {old: new for new, old in enumerate(keep)}
        sets = tuple(
            ItemSet.from_indices(sub, (remap[i] for i in s.indices())) for s in self.sets
        )
        return BaseFamily(sub, sets)


def dowling_generate(b: BaseFamily, limit: int = DEFAULT_STATE_LIMIT) -> list[ItemSet]:
    """All unions of base subfamilies, the empty union included, without duplicates.

    A deduplicating index over produced states replaces the classical
    marking scheme; the output is defined by its set, sorted by bit vector.
    """
    states = {0}
    for s in b.sets:
        states |= {m | s.mask for m in states}
        if len(states) > limit:
            raise ResourceLimitError(
                f"union closure exceeds the state-count limit {limit}"
            )
    return sorted(
        (ItemSet(b.domain, m) for m in states), key=lambda x: x.bitvector()
    )


def kernel(s: ItemSet, b: BaseFamily) -> ItemSet:
    """Largest state inside s: the union of the base sets contained in s."""
    mask = 0
    for p in b.sets:
        if p.mask & ~s.mask == 0:
            mask |= p.mask
    return ItemSet(s.domain, mask)


def _row_minimal_masks(row: SymbolRow, m: int) -> list[int]:
    """Row-minimal members containing item m (e-mode row, m-cell not 0)."""
    cells = list(row.cells)
    if not force_cell(cells, E_MODE, m, 1):
        return []
    fixed = 0
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(cells):
        if c == ONE:
            fixed |= 1 << i
        elif is_group(c):
            groups.setdefault(c, []).append(i)
    out = []
    for combo in itertools.product(*groups.values()):
        out.append(fixed | sum(1 << p for p in combo))
    return out


def atoms_from_rows(family: RowFamily, m: int) -> list[ItemSet]:
    """Minimal states containing item m, sieved from a compressed family.

    Candidate rows are those whose m-cell is not fixed 0; each contributes
    its row-minimal members containing m, and the inclusion-minimal sets
    of the union are the atoms.
    """
    if family.mode != E_MODE:
        raise ValueError("atoms_from_rows needs an e-mode family")
    candidates: list[int] = []
    for row in family.rows:
        if row.cells[m] != ZERO:
            candidates.extend(_row_minimal_masks(row, m))
    return sorted(
        (ItemSet(family.domain, mask) for mask in minimal_masks(candidates)),
        key=lambda x: x.bitvector(),
    )


def base_from_rows(family: RowFamily) -> BaseFamily:
    """Union of atoms_from_rows over all items, deduplicated."""
    seen: dict[int, ItemSet] = {}
    for m in range(family.domain.w):
        for atom in atoms_from_rows(family, m):
            seen[atom.mask] = atom
    sets = sorted(seen.values(), key=lambda x: (len(x), x.bitvector()))
    return BaseFamily(family.domain, tuple(sets))


def atoms_from_base(b: BaseFamily, m: int) -> list[ItemSet]:
    """Minimal states containing item m, from the base alone.

    Every state containing m includes a base set containing m, so the
    atoms at m are exactly the inclusion-minimal base sets containing m.
    """
    masks = [s.mask for s in b.sets if s.mask >> m & 1]
    return sorted(
        (ItemSet(b.domain, mask) for mask in minimal_masks(masks)),
        key=lambda x: x.bitvector(),
    )


def is_learning_space(b: BaseFamily) -> tuple[bool, ItemSet | None]:
    """Check that the atom families at distinct items never share a set.

    Returns (True, None) or (False, witness) with the witness belonging
    to two atom families.
    """
    owner: dict[int, int] = {}
    for m in range(b.domain.w):
        for atom in atoms_from_base(b, m):
            if atom.mask in owner and owner[atom.mask] != m:
                return False, atom
            owner[atom.mask] = m
    return True, None


@dataclass(frozen=True)
class ColoredBase:
    """A learning-space base with each set's color (its unique free element)."""

    base: BaseFamily
    colors: dict[ItemSet, int]

    def color_label(self, s: ItemSet) -> str:
        return self.base.domain.label(self.colors[s])


def color_base(b: BaseFamily) -> ColoredBase:
    """Color each base set by its unique element outside its lower covers.

    Fails when some set has zero or several such elements, which happens
    exactly when the base is not a learning-space base.
    """
    ok, witness = is_learning_space(b)
    if not ok:
        raise NotALearningSpaceError(f"atom families overlap at {witness}")
    colors: dict[ItemSet, int] = {}
    for p in b.sets:
        covered = 0
        for r in b.sets:
            if r.mask != p.mask and r.mask & ~p.mask == 0:
                covered |= r.mask
        free = p.mask & ~covered
        if free.bit_count() != 1:
            raise NotALearningSpaceError(
                f"{p} has {free.bit_count()} uncovered elements; expected exactly one"
            )
        colors[p] = free.bit_length() - 1
    return ColoredBase(b, colors)
