"""Compressed representation and interactive construction of knowledge spaces.

A knowledge space is a union-closed family of subsets ("states") of a finite
domain.  This package stores such families as disjoint unions of wildcard
rows, converts between the three standard descriptions (state family, base of
union-irreducible sets, dimplication/implication bases), and drives an
expert-query loop that carves a space out of the powerset one confirmed
query at a time.
"""

from .errors import FormatError, KspaceError, NotALearningSpaceError, ResourceLimitError
from .model import Dimplication, Domain, Implication, ItemSet, RootedSet, satisfies_dimp, satisfies_imp

__all__ = [
    "Dimplication",
    "Domain",
    "FormatError",
    "Implication",
    "ItemSet",
    "KspaceError",
    "NotALearningSpaceError",
    "ResourceLimitError",
    "RootedSet",
    "satisfies_dimp",
    "satisfies_imp",
]
