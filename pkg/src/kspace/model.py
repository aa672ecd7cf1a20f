"""Ground-set types and the satisfaction semantics of (d)implications.

Items are referenced by label in files and by dense integer index
internally; :class:`Domain` owns the bijection.  Subsets are immutable
bitmask wrappers so that all set algebra is integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import DomainMismatchError, FormatError


@dataclass(frozen=True)
class Domain:
    """Ordered ground set of distinct printable item labels."""

    items: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.items) < 1:
            raise FormatError("domain must contain at least one item")
        index = {}
        for i, label in enumerate(self.items):
            if not label or any(ch.isspace() for ch in label):
                raise FormatError(f"bad item label {label!r}")
            if label in index:
                raise FormatError(f"duplicate item label {label!r}")
            index[label] = i
        object.__setattr__(self, "_index", index)

    @property
    def w(self) -> int:
        return len(self.items)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise FormatError(f"unknown item label {label!r}") from None

    def label(self, i: int) -> str:
        return self.items[i]

    def __contains__(self, label: str) -> bool:
        return label in self._index


def _check_same_domain(a, b):
    if a.domain != b.domain:
        raise DomainMismatchError(f"domain mismatch: {a.domain.items} vs {b.domain.items}")


@dataclass(frozen=True, order=True)
class ItemSet:
    """A subset of a domain, stored as a bitmask (bit i = item i)."""

    domain: Domain = field(compare=False)
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.domain.w:
            raise ValueError(f"mask {self.mask:#x} out of range for w={self.domain.w}")

    @classmethod
    def from_labels(cls, domain: Domain, labels: Iterable[str]) -> "ItemSet":
        mask = 0
        for label in labels:
            mask |= 1 << domain.index(label)
        return cls(domain, mask)

    @classmethod
    def from_indices(cls, domain: Domain, indices: Iterable[int]) -> "ItemSet":
        mask = 0
        for i in indices:
            mask |= 1 << i
        return cls(domain, mask)

    @classmethod
    def empty(cls, domain: Domain) -> "ItemSet":
        return cls(domain, 0)

    @classmethod
    def full(cls, domain: Domain) -> "ItemSet":
        return cls(domain, (1 << domain.w) - 1)

    def indices(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def labels(self) -> tuple[str, ...]:
        return tuple(self.domain.items[i] for i in self.indices())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.domain.index(label) & 1)

    def has_index(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __or__(self, other: "ItemSet") -> "ItemSet":
        _check_same_domain(self, other)
        return ItemSet(self.domain, self.mask | other.mask)

    def __and__(self, other: "ItemSet") -> "ItemSet":
        _check_same_domain(self, other)
        return ItemSet(self.domain, self.mask & other.mask)

    def __sub__(self, other: "ItemSet") -> "ItemSet":
        _check_same_domain(self, other)
        return ItemSet(self.domain, self.mask & ~other.mask)

    def complement(self) -> "ItemSet":
        return ItemSet(self.domain, self.mask ^ (1 << self.domain.w) - 1)

    def issubset(self, other: "ItemSet") -> bool:
        _check_same_domain(self, other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "ItemSet") -> bool:
        _check_same_domain(self, other)
        return self.mask & other.mask == 0

    def bitvector(self) -> tuple[int, ...]:
        """Bits in item order; lexicographic sort key for deterministic output."""
        return tuple(self.mask >> i & 1 for i in range(self.domain.w))

    def __str__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def _validate_pair(premise: ItemSet, conclusion: ItemSet, premise_may_be_empty: bool):
    _check_same_domain(premise, conclusion)
    if not premise_may_be_empty and not premise:
        raise ValueError("premise must be nonempty")
    if not conclusion:
        raise ValueError("conclusion must be nonempty")
    if not premise.isdisjoint(conclusion):
        raise ValueError(
            f"premise {premise} and conclusion {conclusion} overlap"
        )


@dataclass(frozen=True, order=True)
class Dimplication:
    """A ⇝ B: every state disjoint from A is disjoint from B."""

    premise: ItemSet
    conclusion: ItemSet

    def __post_init__(self):
        _validate_pair(self.premise, self.conclusion, premise_may_be_empty=False)

    @property
    def domain(self) -> Domain:
        return self.premise.domain

    def __str__(self) -> str:
        return f"{' '.join(self.premise.labels())} ~> {' '.join(self.conclusion.labels())}"


@dataclass(frozen=True, order=True)
class Implication:
    """A → B: every closed set containing A contains B.

    An empty premise is allowed at the type level (it simply always fires);
    none of the bases produced here emit one.
    """

    premise: ItemSet
    conclusion: ItemSet

    def __post_init__(self):
        _validate_pair(self.premise, self.conclusion, premise_may_be_empty=True)

    @property
    def domain(self) -> Domain:
        return self.premise.domain

    def __str__(self) -> str:
        return f"{' '.join(self.premise.labels())} -> {' '.join(self.conclusion.labels())}"


@dataclass(frozen=True, order=True)
class RootedSet:
    """A carrier set together with a distinguished root element of it."""

    carrier: ItemSet
    root: int  # item index into the carrier's domain

    def __post_init__(self):
        if not self.carrier:
            raise ValueError("carrier must be nonempty")
        if not self.carrier.has_index(self.root):
            raise ValueError(
                f"root {self.carrier.domain.label(self.root)!r} not in carrier {self.carrier}"
            )

    @property
    def domain(self) -> Domain:
        return self.carrier.domain

    def __str__(self) -> str:
        return f"{' '.join(self.carrier.labels())} @ {self.domain.label(self.root)}"


def satisfies_dimp(s: ItemSet, d: Dimplication) -> bool:
    """A ∩ S = ∅ implies B ∩ S = ∅."""
    _check_same_domain(s, d.premise)
    return bool(s.mask & d.premise.mask) or not s.mask & d.conclusion.mask


def satisfies_imp(x: ItemSet, imp: Implication) -> bool:
    """A ⊆ X implies B ⊆ X."""
    _check_same_domain(x, imp.premise)
    return bool(imp.premise.mask & ~x.mask) or not imp.conclusion.mask & ~x.mask
