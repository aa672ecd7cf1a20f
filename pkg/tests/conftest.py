import pytest

from kspace.basetools import BaseFamily
from kspace.model import Dimplication, Domain, ItemSet


def dimp(domain: Domain, premise, conclusion) -> Dimplication:
    return Dimplication(
        ItemSet.from_labels(domain, premise),
        ItemSet.from_labels(domain, conclusion),
    )


@pytest.fixture
def five_domain() -> Domain:
    return Domain(("a", "b", "c", "d", "e"))


@pytest.fixture
def five_theta(five_domain):
    return [
        dimp(five_domain, "e", "a"),
        dimp(five_domain, "a", "b"),
        dimp(five_domain, "bd", "c"),
    ]


@pytest.fixture
def five_base(five_domain) -> BaseFamily:
    sets = ["d", "e", "ae", "cd", "abe", "abce"]
    return BaseFamily(
        five_domain, tuple(ItemSet.from_labels(five_domain, s) for s in sets)
    )


@pytest.fixture
def ten_domain() -> Domain:
    return Domain(tuple(str(i) for i in range(1, 11)))


@pytest.fixture
def ten_theta(ten_domain):
    pairs = [
        ([2, 3, 6], [4, 7]),
        ([5, 10], [4]),
        ([6, 9, 10], [7]),
        ([3], [4]),
        ([5, 7], [4]),
        ([7, 8], [4]),
        ([8, 10], [4]),
        ([1], [6]),
        ([1, 3], [4, 6, 7]),
        ([1, 10], [6, 7]),
        ([2, 6, 10], [7]),
        ([3, 6, 9], [4, 7]),
    ]
    return [
        dimp(ten_domain, [str(x) for x in a], [str(x) for x in b]) for a, b in pairs
    ]
