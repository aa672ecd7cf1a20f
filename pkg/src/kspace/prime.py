"""Minimal transversals, prime dimplications, base reduction, rooted circuits.

A dimplication A⇝{q} valid in a space is prime when no proper subset of A
still works.  For a space given by its base, the premises of the prime
dimplications at q are exactly the minimal transversals of
{P∖{q} : q ∈ P ∈ base}, computed here by iterated distribution with
absorption pruning (Berge multiplication).
"""

from __future__ import annotations

from ._setops import is_antichain, minimal_masks
from .basetools import BaseFamily
from .model import Dimplication, Domain, Implication, ItemSet, RootedSet
from .nengine import closure
from dataclasses import dataclass


@dataclass(frozen=True)
class TransversalFamily:
    """An antichain of nonempty sets, each meeting every input set."""

    domain: Domain
    sets: tuple[ItemSet, ...]

    def __post_init__(self):
        if not is_antichain(s.mask for s in self.sets):
            raise ValueError("transversal family must be an antichain")
        if any(not s for s in self.sets):
            raise ValueError("transversals must be nonempty")


def berge_mintr(family: list[ItemSet]) -> TransversalFamily:
    """All inclusion-minimal sets meeting every member of the family.

    Sets are distributed in ascending size with absorption pruning after
    each step to cap the intermediate antichains.
    """
    if not family:
        raise ValueError("berge_mintr needs at least one set")
    domain = family[0].domain
    masks = sorted((s.mask for s in family), key=lambda m: (m.bit_count(), m))
    if masks[0] == 0:
        raise ValueError("the empty set has no transversal")
    trans = [0]
    for x in masks:
        new = []
        for t in trans:
            if t & x:
                new.append(t)
            else:
                m = x
                while m:
                    low = m & -m
                    new.append(t | low)
                    m ^= low
        trans = minimal_masks(new)
    sets = sorted((ItemSet(domain, m) for m in trans), key=lambda s: s.bitvector())
    return TransversalFamily(domain, tuple(sets))


def prime_dimps(b: BaseFamily) -> list[Dimplication]:
    """All prime dimplications of the space generated by the base.

    For each item q without the singleton {q} in the base, every minimal
    transversal A of {P∖{q} : q ∈ P} yields A⇝{q}.  Ordered by q, then
    lexicographically by premise.
    """
    domain = b.domain
    out = []
    for q in range(domain.w):
        if (1 << q) in b.masks():
            continue
        hitting = [
            ItemSet(domain, p.mask & ~(1 << q)) for p in b.sets if p.mask >> q & 1
        ]
        target = ItemSet.from_indices(domain, [q])
        for a in berge_mintr(hitting).sets:
            out.append(Dimplication(a, target))
    return out


def as_implications(theta) -> list[Implication]:
    """The same premise/conclusion pairs read as implications."""
    return [Implication(d.premise, d.conclusion) for d in theta]


def entails(theta, d: Dimplication) -> bool:
    """True iff d holds in K(Θ), via the complement-dual closure test."""
    others = as_implications(theta)
    return d.conclusion.issubset(closure(d.premise, others))


def reduce_dimp_base(theta, passes: int = 1) -> list[Dimplication]:
    """Drop dimplications entailed by the rest; the family K(Θ) is unchanged.

    Candidates are tried in descending premise size, then lexicographic
    order.  Extra passes re-sweep the survivors (rarely shrinks further).
    """
    current: list[Dimplication] = []
    for d in theta:
        if d not in current:
            current.append(d)
    order = sorted(
        current, key=lambda d: (-len(d.premise), d.premise.bitvector(), d.conclusion.bitvector())
    )
    for _ in range(max(1, passes)):
        removed = False
        for d in list(order):
            if d not in current:
                continue
            rest = [x for x in current if x != d]
            if rest and entails(rest, d):
                current = rest
                removed = True
        if not removed:
            break
    return current


def check_rooted_axioms(rc: list[RootedSet]):
    """Validate the two rooted-circuit axioms.

    (a) carriers sharing a root form an antichain; (b) whenever the root
    of one circuit lies in another circuit's carrier (and differs from its
    root), some circuit with the second root fits inside the union minus
    the intruding root.  Returns (True, None) or (False, violating pair).
    """
    by_root: dict[int, list[RootedSet]] = {}
    for r in rc:
        by_root.setdefault(r.root, []).append(r)
    for group in by_root.values():
        for i, c1 in enumerate(group):
            for c2 in group[i + 1:]:
                if c1.carrier.issubset(c2.carrier) or c2.carrier.issubset(c1.carrier):
                    if c1.carrier.mask != c2.carrier.mask:
                        return False, (c1, c2)
    for c1 in rc:
        for c2 in rc:
            if c2.root == c1.root or not c2.carrier.has_index(c1.root):
                continue
            allowed = (c1.carrier | c2.carrier).mask & ~(1 << c1.root)
            if not any(
                c3.carrier.mask & ~allowed == 0 for c3 in by_root.get(c2.root, [])
            ):
                return False, (c1, c2)
    return True, None


def dimps_as_rooted(theta) -> list[RootedSet]:
    """Singleton-conclusion dimplications as rooted sets (A∪{q}, q)."""
    out = []
    for d in theta:
        if len(d.conclusion) != 1:
            raise ValueError(f"{d} has a non-singleton conclusion")
        q = next(d.conclusion.indices())
        out.append(RootedSet(d.premise | d.conclusion, q))
    return out
