"""The n-engine: closure operator and 012n-row compression of C(Σ).

C(Σ) = {X : every A→B in Σ holds for X} is intersection-closed; it is the
complement-dual of a knowledge space, and the imposition rules are the
polarity swap of the e-engine's (0↔1, e-groups↔n-groups).
"""

from __future__ import annotations

from ._impose import always_meets, compress, meets_split
from .errors import DomainMismatchError
from .model import Domain, Implication, ItemSet
from .rows import N_MODE, RowFamily, SymbolRow, force_cell


def closure(s: ItemSet, sigma) -> ItemSet:
    """Least fixpoint of forward chaining over the implications."""
    mask = s.mask
    fired = [False] * len(sigma)
    changed = True
    while changed:
        changed = False
        for i, imp in enumerate(sigma):
            if fired[i]:
                continue
            if imp.premise.mask & ~mask == 0:
                fired[i] = True
                if imp.conclusion.mask & ~mask:
                    mask |= imp.conclusion.mask
                    changed = True
    return ItemSet(s.domain, mask)


def impose_implication(row: SymbolRow, imp: Implication) -> list[SymbolRow]:
    """Disjoint rows whose union is {X ∈ row : A⊆X ⇒ B⊆X}."""
    if row.mode != N_MODE:
        raise ValueError("impose_implication needs an n-mode row")
    premise = list(imp.premise.indices())
    # In n-mode the satisfying bit is 0, so "meets the premise positions"
    # reads: X misses some premise element, i.e. A ⊄ X.
    if always_meets(row, premise):
        return [row]
    out = []
    cells = list(row.cells)
    ok = all(force_cell(cells, N_MODE, p, 1) for p in premise)
    ok = ok and all(force_cell(cells, N_MODE, p, 1) for p in imp.conclusion.indices())
    if ok:
        out.append(SymbolRow.make(N_MODE, cells))
    out.extend(meets_split(row, premise))
    return out


def compress_closure(domain: Domain, sigma, trace=None, stats=None) -> RowFamily:
    """Represent C(Σ) as a disjoint union of 012n-rows."""
    for imp in sigma:
        if imp.domain != domain:
            raise DomainMismatchError("implication over a different domain")
    return compress(domain, list(sigma), impose_implication, N_MODE, trace, stats)
