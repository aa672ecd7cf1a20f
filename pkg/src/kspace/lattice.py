"""From a colored learning-space base to an implication base over its
join irreducibles.

The base sets, ordered by inclusion, form the join-irreducible poset of
the state lattice.  Two kinds of implications over that poset describe
the lattice exactly: one per non-minimal node naming its lower covers,
and one per ordered pair of distinct same-colored nodes.  Closed sets of
this implication base expand back to knowledge states by replacing each
node with its base set.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .basetools import ColoredBase
from .errors import FormatError
from .model import Domain, Implication, ItemSet


@dataclass(frozen=True)
class JIPoset:
    """Join-irreducible poset of a learning space, with labels and colors.

    Nodes are the base sets; `label_domain` is the domain the emitted
    implications live over.  `lcov` maps each node index to the indices of
    the maximal base sets strictly contained in it; `cliques` are the
    color classes of size at least two.
    """

    domain: Domain
    label_domain: Domain
    sets: tuple[ItemSet, ...]
    lcov: tuple[tuple[int, ...], ...]
    colors: tuple[int, ...]
    cliques: tuple[tuple[int, ...], ...]

    def node_label(self, i: int) -> str:
        return self.label_domain.items[i]


def _fresh_labels(domain: Domain, count: int) -> list[str]:
    """Single-letter labels for non-singleton nodes, avoiding item labels."""
    out = []
    pool = (c for c in string.ascii_lowercase if c not in domain)
    for i in range(count):
        label = next(pool, None)
        if label is None:
            label = f"j{i + 1}"
        out.append(label)
    return out


def build_ji_poset(cb: ColoredBase) -> JIPoset:
    b = cb.base
    sets = tuple(sorted(b.sets, key=lambda s: (len(s), s.bitvector())))
    labels: list[str] = []
    fresh = iter(_fresh_labels(b.domain, sum(1 for s in sets if len(s) > 1)))
    for s in sets:
        labels.append(b.domain.label(next(s.indices())) if len(s) == 1 else next(fresh))
    lcov = []
    for p in sets:
        below = [i for i, r in enumerate(sets) if r.mask != p.mask and r.mask & ~p.mask == 0]
        maximal = [
            i
            for i in below
            if not any(j != i and sets[i].mask & ~sets[j].mask == 0 for j in below)
        ]
        lcov.append(tuple(maximal))
    colors = tuple(cb.colors[s] for s in sets)
    classes: dict[int, list[int]] = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    cliques = tuple(tuple(v) for v in classes.values() if len(v) >= 2)
    return JIPoset(b.domain, Domain(tuple(labels)), sets, tuple(lcov), colors, cliques)


def _node_set(p: JIPoset, indices) -> ItemSet:
    return ItemSet.from_indices(p.label_domain, indices)


def sigma_po(p: JIPoset) -> list[Implication]:
    """One implication {P} → lcov(P) per non-minimal node."""
    out = []
    for i, covers in enumerate(p.lcov):
        if covers:
            out.append(Implication(_node_set(p, [i]), _node_set(p, covers)))
    return out


def sigma_jn(p: JIPoset) -> list[Implication]:
    """{P} ∪ lcov(R) → {R} for every ordered same-color pair P ≠ R.

    Same color is exactly the clique relation here, so a k-clique emits
    k(k−1) implications.
    """
    out = []
    for clique in p.cliques:
        for i in clique:
            for j in clique:
                if i == j:
                    continue
                premise = _node_set(p, (i, *p.lcov[j]))
                out.append(Implication(premise, _node_set(p, [j])))
    return out


def sigma_l(cb: ColoredBase) -> tuple[JIPoset, list[Implication]]:
    """The full implication base over join irreducibles (at most k² long)."""
    p = build_ji_poset(cb)
    return p, sigma_po(p) + sigma_jn(p)


def expand_ji_state(x: ItemSet, p: JIPoset) -> ItemSet:
    """Union of the base sets named by a closed set of node labels."""
    if x.domain != p.label_domain:
        raise FormatError("expected a set over the join-irreducible labels")
    mask = 0
    for i in x.indices():
        mask |= p.sets[i].mask
    return ItemSet(p.domain, mask)


def ji_label_map(p: JIPoset) -> str:
    """Sidecar text mapping each node label to its base set's item labels."""
    lines = []
    for i, s in enumerate(p.sets):
        lines.append(f"{p.node_label(i)}: {' '.join(s.labels())}")
    return "\n".join(lines) + "\n"
