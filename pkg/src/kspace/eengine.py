"""The e-engine: impose dimplications on 012e-rows.

Given a list of dimplications Θ over a domain, :func:`compress_space`
returns a disjoint family of 012e-rows denoting exactly the knowledge
space K(Θ) = {S : every A⇝B in Θ holds for S}.  :func:`remove_chunk`
is the row split used by the exploration loop: it deletes the chunk
{S : A∩S=∅ and q∈S} from a family.
"""

from __future__ import annotations

from ._impose import always_meets, compress, meets_split
from .errors import DomainMismatchError
from .model import Dimplication, Domain, ItemSet
from .rows import E_MODE, RowFamily, SymbolRow, force_cell


def impose_dimplication(row: SymbolRow, d: Dimplication) -> list[SymbolRow]:
    """Disjoint rows whose union is {S ∈ row : A∩S=∅ ⇒ B∩S=∅}."""
    if row.mode != E_MODE:
        raise ValueError("impose_dimplication needs an e-mode row")
    premise = list(d.premise.indices())
    if always_meets(row, premise):
        return [row]
    out = []
    cells = list(row.cells)
    ok = all(force_cell(cells, E_MODE, p, 0) for p in premise)
    ok = ok and all(force_cell(cells, E_MODE, p, 0) for p in d.conclusion.indices())
    if ok:
        out.append(SymbolRow.make(E_MODE, cells))
    out.extend(meets_split(row, premise))
    return out


def compress_space(domain: Domain, theta, trace=None, stats=None) -> RowFamily:
    """Represent K(Θ) as a disjoint union of 012e-rows."""
    for d in theta:
        if d.domain != domain:
            raise DomainMismatchError("dimplication over a different domain")
    return compress(domain, list(theta), impose_dimplication, E_MODE, trace, stats)


def remove_chunk(family: RowFamily, a: ItemSet, q: int) -> RowFamily:
    """Delete every member S with a∩S=∅ and q∈S from the family.

    Each row splits into the part avoiding q and the part containing q
    while meeting `a`; the latter reuses the engine's bundling split, so
    a plain 012-row yields at most two rows.
    """
    if family.mode != E_MODE:
        raise ValueError("remove_chunk needs an e-mode family")
    if not a:
        raise ValueError("chunk premise must be nonempty")
    if a.has_index(q):
        raise ValueError("chunk item must lie outside the premise")
    premise = list(a.indices())
    new_rows = []
    for row in family.rows:
        cells = list(row.cells)
        if force_cell(cells, E_MODE, q, 0):
            new_rows.append(SymbolRow.make(E_MODE, cells))
        cells = list(row.cells)
        if not force_cell(cells, E_MODE, q, 1):
            continue
        with_q = SymbolRow.make(E_MODE, cells)
        if always_meets(with_q, premise):
            new_rows.append(with_q)
        else:
            new_rows.extend(meets_split(with_q, premise))
    return RowFamily(family.domain, E_MODE, tuple(new_rows))
