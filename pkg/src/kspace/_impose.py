"""Shared splitting kernel behind the e- and n-engines.

Both engines repeatedly carve a row into the part whose members carry the
group-satisfying bit somewhere on a set of positions and the part whose
members do not.  The first part is written as: one row bundling the free
positions into a fresh wildcard group, followed by a triangular split over
the positions that already sit in groups (the i-th row pins the i-th such
position to the satisfying bit and everything before it the other way).
All emitted rows are pairwise disjoint by construction.
"""

from __future__ import annotations

from .rows import (
    FREE,
    ONE,
    ZERO,
    _GROUP_BASE,
    RowFamily,
    SymbolRow,
    force_cell,
    is_group,
    sat_bit,
)


def always_meets(row: SymbolRow, positions: list[int]) -> bool:
    """True iff every member of the row has the satisfying bit on `positions`."""
    sat = sat_bit(row.mode)
    if any(row.cells[p] == sat for p in positions):
        return True
    pos_set = set(positions)
    for group_ps in row.group_positions().values():
        if all(p in pos_set for p in group_ps):
            return True
    return False


def meets_split(row: SymbolRow, positions: list[int]) -> list[SymbolRow]:
    """Disjoint rows covering {S ∈ row : S has the satisfying bit on positions}.

    Caller must have ruled out :func:`always_meets`.  Returns [] when no
    member qualifies (all listed positions pinned the other way).
    """
    mode = row.mode
    sat = sat_bit(mode)
    kill = 1 - sat
    free_ps = [p for p in positions if row.cells[p] == FREE]
    group_ps = [p for p in positions if is_group(row.cells[p])]
    out = []
    if free_ps:
        cells = list(row.cells)
        if len(free_ps) == 1:
            force_cell(cells, mode, free_ps[0], sat)
        else:
            fresh = _GROUP_BASE + max(row.cells) + 1
            for p in free_ps:
                cells[p] = fresh
        out.append(SymbolRow.make(mode, cells))
    for i, p in enumerate(group_ps):
        cells = list(row.cells)
        ok = all(force_cell(cells, mode, q, kill) for q in free_ps)
        ok = ok and all(force_cell(cells, mode, q, kill) for q in group_ps[:i])
        ok = ok and force_cell(cells, mode, p, sat)
        if ok:
            out.append(SymbolRow.make(mode, cells))
    return out


def compress(domain, constraints, impose, mode, trace=None, stats=None) -> RowFamily:
    """LIFO working-stack driver shared by both engines.

    `impose(row, constraint)` returns the disjoint refinement of one row.
    The topmost row's pending constraint is processed next; a row whose
    pending index passes the end is final.  `stats`, when given, receives
    the peak stack depth.
    """
    stack: list[tuple[SymbolRow, int]] = [(SymbolRow.all_free(mode, domain.w), 0)]
    final: list[SymbolRow] = []
    peak = 1
    while stack:
        row, k = stack.pop()
        if k == len(constraints):
            final.append(row)
            continue
        children = impose(row, constraints[k])
        if trace is not None:
            trace(row, k, children)
        for child in reversed(children):
            stack.append((child, k + 1))
        peak = max(peak, len(stack))
    if stats is not None:
        stats["peak_stack"] = peak
    return RowFamily(domain, mode, tuple(final))
