"""Exact counting over row families and seeded random instance generators."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .basetools import BaseFamily, is_learning_space
from .errors import KspaceError, ResourceLimitError
from .model import Dimplication, Domain, ItemSet
from .rows import RowFamily, restrict_rows


def count_states(family: RowFamily) -> int:
    """Sum of row cardinalities; exact because rows are disjoint."""
    return family.count()


def maximal_states(family: RowFamily, limit: int = 1_000_000) -> list[ItemSet]:
    """States with no proper superset in the family, by enumeration."""
    states = []
    for s in family.enumerate_sets():
        states.append(s)
        if len(states) > limit:
            raise ResourceLimitError(f"enumeration exceeds {limit} states")
    masks = {s.mask for s in states}
    return [
        s
        for s in states
        if not any(other != s.mask and s.mask & ~other == 0 for other in masks)
    ]


def conditional_probability(
    family: RowFamily,
    contain: ItemSet,
    avoid: ItemSet,
    given_contain: ItemSet,
    given_avoid: ItemSet,
    maximal_only: bool = False,
) -> Fraction:
    """P(contain ⊆ S, S∩avoid = ∅ | given…) under the uniform distribution.

    With `maximal_only` the sample space shrinks to the inclusion-maximal
    states, which requires enumeration and only suits small families.
    """
    want_in = contain | given_contain
    want_out = avoid | given_avoid
    if not want_in.isdisjoint(want_out):
        raise KspaceError("constraint sets conflict: an item is both required and avoided")
    if maximal_only:
        pool = maximal_states(family)
        denom = [
            s for s in pool
            if given_contain.issubset(s) and s.isdisjoint(given_avoid)
        ]
        numer = [s for s in denom if want_in.issubset(s) and s.isdisjoint(want_out)]
        if not denom:
            raise KspaceError("conditioning event has probability zero")
        return Fraction(len(numer), len(denom))
    denom = restrict_rows(family, given_contain, given_avoid).count()
    if denom == 0:
        raise KspaceError("conditioning event has probability zero")
    numer = restrict_rows(family, want_in, want_out).count()
    return Fraction(numer, denom)


def numbered_domain(w: int) -> Domain:
    return Domain(tuple(str(i + 1) for i in range(w)))


def gen_theta(w: int, h: int, a: int, b: int, seed: int) -> tuple[Domain, list[Dimplication]]:
    """h random dimplications with disjoint premise/conclusion of sizes a, b."""
    if a < 1 or b < 1 or a + b > w:
        raise KspaceError(f"infeasible sizes: a={a}, b={b}, w={w}")
    rng = random.Random(seed)
    domain = numbered_domain(w)
    out = []
    for _ in range(h):
        premise = rng.sample(range(w), a)
        rest = [i for i in range(w) if i not in premise]
        conclusion = rng.sample(rest, b)
        out.append(
            Dimplication(
                ItemSet.from_indices(domain, premise),
                ItemSet.from_indices(domain, conclusion),
            )
        )
    return domain, out


def gen_base(
    w: int, n: int, c: int, seed: int, ensure_coverage: bool = True
) -> BaseFamily:
    """n distinct random c-subsets of a w-item domain.

    With `ensure_coverage` (the default) singletons are appended for any
    uncovered item so the coverage invariant holds.
    """
    if c < 1 or c > w:
        raise KspaceError(f"infeasible subset size c={c} for w={w}")
    if n > math.comb(w, c):
        raise KspaceError(f"cannot draw {n} distinct {c}-subsets of [{w}]")
    rng = random.Random(seed)
    domain = numbered_domain(w)
    masks: set[int] = set()
    while len(masks) < n:
        masks.add(sum(1 << i for i in rng.sample(range(w), c)))
    ordered = sorted(masks)
    union = 0
    for m in ordered:
        union |= m
    if ensure_coverage:
        for i in range(w):
            if not union >> i & 1 and (1 << i) not in masks:
                ordered.append(1 << i)
    elif union != (1 << w) - 1:
        raise KspaceError("drawn family does not cover the domain")
    return BaseFamily(domain, tuple(ItemSet(domain, m) for m in ordered))


def gen_learning_space(
    mu: int,
    lam: int,
    kappa: int,
    nc: list[str],
    seed: int,
    max_retries: int = 200,
) -> BaseFamily:
    """Random learning-space base from a layered poset.

    The bottom layer contributes singleton base sets; every higher node
    unions kappa random sets from the layer below and adds one random new
    color.  Colors are resampled on duplicate sets, same-layer subsumed
    sets are discarded, and the draw is repeated until every color occurs
    and the result passes the learning-space test.
    """
    if kappa > mu:
        raise KspaceError(f"kappa={kappa} exceeds layer width mu={mu}")
    if lam < 2 or not nc:
        raise KspaceError("need at least two layers and one new color")
    if len(nc) > mu * (lam - 1):
        raise KspaceError(
            f"{len(nc)} new colors cannot all appear in {mu * (lam - 1)} upper nodes"
        )
    rng = random.Random(seed)
    items = tuple(str(i + 1) for i in range(mu)) + tuple(nc)
    domain = Domain(items)
    color_bits = {label: 1 << domain.index(label) for label in nc}

    for _ in range(max_retries):
        node_set: dict[int, int] = {t: 1 << t for t in range(mu)}
        node_layer = {t: 0 for t in range(mu)}
        taken = set(node_set.values())
        for layer in range(1, lam):
            lower = [t for t, l in node_layer.items() if l == layer - 1]
            for j in range(mu):
                t = layer * mu + j
                covers = rng.sample(lower, kappa)
                core = 0
                for s in covers:
                    core |= node_set[s]
                for label in rng.sample(nc, len(nc)):
                    candidate = core | color_bits[label]
                    if candidate not in taken:
                        break
                node_set[t] = candidate
                node_layer[t] = layer
                taken.add(candidate)
        kept: list[int] = [node_set[t] for t in range(mu)]
        for layer in range(1, lam):
            members = sorted(
                {node_set[t] for t, l in node_layer.items() if l == layer}
            )
            for m in members:
                if not any(o != m and m & ~o == 0 for o in members):
                    kept.append(m)
        distinct = sorted(set(kept), key=lambda m: m.bit_count())
        union = 0
        sets = []
        for m in distinct:
            # keep only union-irreducible members: a set equal to the union
            # of the other members inside it adds no state
            inner = 0
            for o in distinct:
                if o != m and o & ~m == 0:
                    inner |= o
            if inner != m:
                sets.append(ItemSet(domain, m))
                union |= m
        if union != (1 << domain.w) - 1:
            continue  # some color never survived; redraw
        base = BaseFamily(domain, tuple(sets))
        ok, _ = is_learning_space(base)
        if ok:
            return base
    raise KspaceError(
        f"gen_learning_space(mu={mu}, lam={lam}, kappa={kappa}, seed={seed}) "
        f"failed supervision after {max_retries} draws"
    )
