import random
from fractions import Fraction

import pytest

from kspace.analytics import (
    conditional_probability,
    count_states,
    gen_base,
    gen_learning_space,
    gen_theta,
    maximal_states,
    numbered_domain,
)
from kspace.basetools import is_learning_space
from kspace.eengine import compress_space
from kspace.errors import KspaceError
from kspace.model import ItemSet


def test_counting_matches_enumeration(ten_domain, ten_theta):
    fam = compress_space(ten_domain, ten_theta)
    assert count_states(fam) == len(set(fam.member_masks())) == 377


def test_conditional_probability_on_the_ten_item_space(ten_domain, ten_theta):
    fam = compress_space(ten_domain, ten_theta)
    empty = ItemSet.empty(ten_domain)
    p = conditional_probability(
        fam,
        empty,
        ItemSet.from_labels(ten_domain, ["9", "10"]),
        ItemSet.from_labels(ten_domain, ["3", "4"]),
        empty,
    )
    assert p == Fraction(8, 77)


def test_probability_input_validation(five_domain, five_theta):
    fam = compress_space(five_domain, five_theta)
    a = ItemSet.from_labels(five_domain, "a")
    empty = ItemSet.empty(five_domain)
    with pytest.raises(KspaceError, match="conflict"):
        conditional_probability(fam, a, empty, empty, a)
    with pytest.raises(KspaceError, match="probability zero"):
        conditional_probability(
            fam, empty, empty, ItemSet.from_labels(five_domain, "c"),
            ItemSet.from_labels(five_domain, "de"),
        )


def test_maximal_only_probability_uses_the_maximal_states(five_domain, five_theta):
    fam = compress_space(five_domain, five_theta)
    maxima = maximal_states(fam)
    assert [str(s) for s in maxima] == ["{a,b,c,d,e}"]
    p = conditional_probability(
        fam,
        ItemSet.from_labels(five_domain, "a"),
        ItemSet.empty(five_domain),
        ItemSet.empty(five_domain),
        ItemSet.empty(five_domain),
        maximal_only=True,
    )
    assert p == 1


def test_theta_generator_is_seed_deterministic():
    d1, t1 = gen_theta(12, 9, 2, 3, 99)
    d2, t2 = gen_theta(12, 9, 2, 3, 99)
    assert d1 == d2 and t1 == t2
    _, t3 = gen_theta(12, 9, 2, 3, 100)
    assert t3 != t1
    assert all(len(d.premise) == 2 and len(d.conclusion) == 3 for d in t1)
    with pytest.raises(KspaceError):
        gen_theta(4, 1, 3, 2, 0)


def test_base_generator_covers_the_domain():
    rng = random.Random(1)
    for _ in range(20):
        seed = rng.randrange(10**6)
        base = gen_base(9, 4, 3, seed)
        assert base == gen_base(9, 4, 3, seed)
        union = 0
        for s in base.sets:
            union |= s.mask
        assert union == (1 << 9) - 1
    with pytest.raises(KspaceError):
        gen_base(5, 20, 2, 0)


def test_learning_space_generator_properties():
    base = gen_learning_space(4, 3, 2, ["x", "y", "z"], 5)
    assert base == gen_learning_space(4, 3, 2, ["x", "y", "z"], 5)
    assert base.domain.w == 7
    assert len(base.sets) >= base.domain.w
    ok, _ = is_learning_space(base)
    assert ok
    with pytest.raises(KspaceError):
        gen_learning_space(2, 3, 3, ["x"], 0)


def test_numbered_domain_labels():
    assert numbered_domain(3).items == ("1", "2", "3")
