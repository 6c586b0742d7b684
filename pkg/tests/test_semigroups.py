import itertools

import numpy as np
import pytest

from polyring_lab.algebras import FiniteGroupoid
from polyring_lab.semigroups import (NotAssociative, canonical_form, find_idempotents, idempotent_power,
                                     ideal_structure, named_semigroup, semigroup_corpus, two_sided_kernel,
                                     weak_left_cancellativity)


def test_idempotent_power_examples():
    assert idempotent_power(named_semigroup("z6-mul"), 2) == 4
    assert idempotent_power(named_semigroup("z4-mul"), 2) == 0
    z5 = named_semigroup("z5-add")
    assert all(idempotent_power(z5, x) == 0 for x in range(5))


def test_idempotent_power_nonassociative():
    g = FiniteGroupoid(np.array([[1, 0], [0, 0]]))
    assert not g.is_associative()
    with pytest.raises(NotAssociative):
        idempotent_power(g, 0)


def test_find_idempotents_examples():
    assert find_idempotents(named_semigroup("z6-mul")) == {0, 1, 3, 4}
    assert find_idempotents(named_semigroup("left-zero:2")) == {0, 1}


def test_no_idempotents_warns():
    g = FiniteGroupoid(np.array([[1, 0], [1, 0]]))
    with pytest.warns(UserWarning, match="non-associative"):
        assert find_idempotents(g) == set()


def test_ideals_of_group():
    rep = ideal_structure(named_semigroup("z4-add"))
    assert rep.minimal_left_ideals == [[0, 1, 2, 3]] and rep.smallest_ideal == [0, 1, 2, 3]


def test_ideals_z6_mul():
    assert ideal_structure(named_semigroup("z6-mul")).smallest_ideal == [0]


def test_ideals_zero_semigroups():
    # S.x + {x} for x*y = y is {x}: singletons are the minimal left ideals
    rep = ideal_structure(named_semigroup("right-zero:2"))
    assert rep.minimal_left_ideals == [[0], [1]]
    # for x*y = x, S.x is all of S
    assert ideal_structure(named_semigroup("left-zero:2")).minimal_left_ideals == [[0, 1]]


def test_ideals_nonassociative():
    with pytest.raises(NotAssociative):
        ideal_structure(FiniteGroupoid(np.array([[1, 0], [0, 0]])))


def test_cancellativity_examples():
    z5 = weak_left_cancellativity(named_semigroup("z5-add"))
    assert z5["max_solutions"] == 1 and z5["left_cancellative"]
    z6 = weak_left_cancellativity(named_semigroup("z6-mul"))
    assert z6["max_solutions"] == 6 and not z6["left_cancellative"]
    one = weak_left_cancellativity(named_semigroup("null:1"))
    assert one["max_solutions"] == 1


def test_corpus_counts():
    assert [len(semigroup_corpus(n, up_to_isomorphism=False)) for n in (1, 2, 3)] == [1, 8, 113]
    assert [len(semigroup_corpus(n)) for n in (1, 2, 3)] == [1, 5, 24]


def test_corpus_tables_are_associative_and_canonical():
    for g in semigroup_corpus(3):
        assert g.is_associative()
        t = tuple(g.mul.ravel().tolist())
        assert canonical_form(t, 3) == t


def _left_ideal_ok(g, L):
    Ls = set(L)
    return all(g(s, x) in Ls for s in range(g.size) for x in Ls)


def test_corpus_invariants():
    for n in (1, 2, 3):
        for g in semigroup_corpus(n):
            idem = find_idempotents(g)
            assert idem
            for x in range(n):
                e = idempotent_power(g, x)
                assert e in idem and idempotent_power(g, e) == e
            rep = ideal_structure(g)
            assert set(rep.smallest_ideal) == two_sided_kernel(g)
            for L in rep.minimal_left_ideals:
                assert _left_ideal_ok(g, L)
                # no proper nonempty sub-left-ideal
                for k in range(1, len(L)):
                    for sub in itertools.combinations(L, k):
                        assert not _left_ideal_ok(g, sub)


def test_idempotent_is_a_power():
    g = named_semigroup("z12-mul")
    for x in range(12):
        e = idempotent_power(g, x)
        powers, p = {x}, x
        for _ in range(12):
            p = g(p, x)
            powers.add(p)
        assert e in powers and g(e, e) == e


def test_unknown_family():
    with pytest.raises(ValueError):
        named_semigroup("bogus:3")
