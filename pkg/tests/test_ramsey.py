import itertools
import operator

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polyring_lab.algebras import cyclic_group, cyclic_ring, groupoid_ring
from polyring_lab.ramsey import (BudgetExceeded, Coloring, GridColoring, folkman_search, fp_set, fs_set,
                                 hilbert_cube_search, key_lemma_campaign, product_fs_search, recheck_witness,
                                 schur_extension_counts, schur_number, schur_oracle_exhaustive, schur_search,
                                 simultaneous_fs_fp_search, verify_key_lemma)
from polyring_lab.semigroups import named_semigroup
from polyring_lab.terms import parse_term


# finite sums and products

def test_fs_examples():
    assert fs_set([1, 3, 5]) == {1, 3, 4, 5, 6, 8, 9}
    assert fs_set([7]) == {7}
    assert fs_set([1, 2, 4, 8]) == set(range(1, 16))


def test_fs_bound_and_empty():
    assert fs_set([1, 3, 5], bound=5) == {1, 3, 4, 5}
    with pytest.raises(ValueError):
        fs_set([])


@given(st.sets(st.integers(0, 40), min_size=1, max_size=10))
def test_fs_of_distinct_powers_of_two(exps):
    seq = [2 ** e for e in exps]
    assert len(fs_set(seq)) == 2 ** len(seq) - 1


@given(st.lists(st.integers(1, 50), min_size=1, max_size=8))
def test_fs_matches_subset_sums(seq):
    want = {sum(c) for k in range(1, len(seq) + 1) for c in itertools.combinations(seq, k)}
    assert fs_set(seq) == want


def test_fp_examples():
    assert fp_set([2, 3]) == {2, 3, 6}
    assert fp_set(["a", "b"], operator.add) == {"a", "b", "ab"}
    assert fp_set([2, 2, 2], lambda a, b: a * b % 7) == {1, 2, 4}


def test_fp_reversal_commutative_semigroups():
    from polyring_lab.semigroups import semigroup_corpus
    for g in semigroup_corpus(3):
        for x, y, z in itertools.permutations(range(3)):
            if all(g(a, b) == g(b, a) for a in range(3) for b in range(3)):
                assert fp_set([x, y, z], g) == fp_set([z, y, x], g)


@given(st.lists(st.sampled_from("abcdefgh"), min_size=2, max_size=5, unique=True))
def test_fp_reversal_distinct_letters(seq):
    # distinct letters never commute in the free monoid, and the two-letter words differ
    assert fp_set(seq, operator.add) != fp_set(seq[::-1], operator.add)


def test_fp_in_noncommutative_semigroup():
    g = named_semigroup("left-zero:2")
    assert fp_set([0, 1], g) == {0, 1}
    assert fp_set([1, 0], g) == {0, 1}
    # noncommutative, yet reversal keeps the set: the "changes" direction is not an iff
    g3 = named_semigroup("left-zero:3")
    assert fp_set([2, 0, 1], g3) == {0, 1, 2}
    words = fp_set(["x", "y", "z"], operator.add)
    assert "zy" not in words and "yz" in words


# Schur

def test_schur_search_examples():
    assert schur_search(Coloring.from_parts([[1, 4], [2, 3, 5]])) == (2, 3, 1)
    assert schur_search(Coloring.from_parts([[1, 4], [2, 3]])) is None
    assert schur_search(Coloring.constant(2)) == (1, 1, 0)


def test_schur_distinct_flag():
    c = Coloring.constant(2)
    assert schur_search(c, distinct=True) is None


def test_schur_numbers():
    assert schur_number(1).N == 1
    res = schur_number(2)
    assert res.N == 4 and schur_search(res.coloring) is None
    assert sorted(map(sorted, res.coloring.parts())) == [[1, 4], [2, 3]]
    assert schur_number(3).N == 13


def test_schur_oracles():
    assert schur_oracle_exhaustive(2, 4) and not schur_oracle_exhaustive(2, 5)
    assert schur_oracle_exhaustive(1, 1) and not schur_oracle_exhaustive(1, 2)
    counts = schur_extension_counts(3, 14)
    assert counts[13] > 0 and counts[14] == 0


def test_schur_budget():
    with pytest.raises(BudgetExceeded):
        schur_number(3, budget=10)


# witness searches

def test_folkman_constant_coloring():
    w = folkman_search(Coloring.constant(7), 3)
    assert w is not None and recheck_witness(w, Coloring.constant(7))
    assert sorted(fs_set(w.sequences[0])) == w.realized


def test_folkman_n2_is_schur():
    c = Coloring.from_parts([[1, 4], [2, 3, 5]])
    w = folkman_search(c, 2)
    assert w.sequences == [[2, 3]] and recheck_witness(w, c)


def test_folkman_parity_none():
    assert folkman_search(Coloring.parity(10), 3) is None


def test_folkman_repeats_mode():
    c = Coloring.constant(3)
    assert folkman_search(c, 2, distinct=False).sequences == [[1, 1]]


def test_hilbert_examples():
    c = Coloring.constant(8)
    w = hilbert_cube_search(c, 2, 2)
    assert recheck_witness(w, c)
    p = Coloring.parity(10)
    w = hilbert_cube_search(p, 1, 2)
    assert w is not None and len(w.extra["B"]) == 2 and recheck_witness(w, p)
    assert hilbert_cube_search(Coloring(()), 1, 1) is None


def test_simultaneous_examples():
    c = Coloring.parity(30)
    w = simultaneous_fs_fp_search(c, 2)
    assert w.sequences == [[2, 4], [2, 4]] and recheck_witness(w, c)
    assert set(w.extra["fs"]) == {2, 4, 6} and set(w.extra["fp"]) == {2, 4, 8}
    one = Coloring.constant(10)
    assert recheck_witness(simultaneous_fs_fp_search(one, 2), one)


def test_simultaneous_none_when_evens_isolated():
    c = Coloring.from_parts([[1, 3, 5, 7], [2], [4], [6], [8]])
    assert simultaneous_fs_fp_search(c, 2) is None


def test_product_fs_examples():
    gc = GridColoring.from_rule("sum-parity:4x4")
    w = product_fs_search(gc, 1, 1)
    assert w is not None and recheck_witness(w, gc)
    assert sum(w.realized[0]) % 2 == 0
    cb = GridColoring.from_rule("checkerboard:8x8")
    w = product_fs_search(cb, 2, 2)
    assert w is None or recheck_witness(w, cb)
    one = GridColoring.from_rule("const:6x6")
    w = product_fs_search(one, 2, 2)
    assert w.sequences == [[1, 2], [1, 2]] and recheck_witness(w, one)


def test_product_fs_budget():
    with pytest.raises(BudgetExceeded):
        product_fs_search(GridColoring.from_rule("random:3:8x8", seed=1), 2, 3, budget=5)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(2, 3))
def test_every_witness_rechecks(seed, r):
    c = Coloring.random(r, 30, seed)
    for w in (folkman_search(c, 2), hilbert_cube_search(c, 1, 2), simultaneous_fs_fp_search(c, 2)):
        if w is not None:
            assert recheck_witness(w, c)
    hit = schur_search(c)
    if hit:
        x, y, col = hit
        assert c(x) == c(y) == c(x + y) == col


def test_recheck_rejects_tampering():
    c = Coloring.parity(10)
    w = folkman_search(Coloring.constant(10), 2)
    assert not recheck_witness(w, c)


def test_coloring_rules_and_csv():
    assert Coloring.from_rule("mod:3:6").colors == (1, 2, 0, 1, 2, 0)
    assert Coloring.from_rule("parts:1,4/2,3").parts() == [[1, 4], [2, 3]]
    assert Coloring.from_csv("element,color\n1,0\n2,1\n3,1\n").colors == (0, 1, 1)
    with pytest.raises(ValueError):
        Coloring.from_csv("1,0\n3,1\n")
    assert Coloring.from_rule("random:3:20", seed=5).colors == Coloring.from_rule("random:3:20", seed=5).colors


# Key Lemma

def test_key_lemma_2x_over_z4():
    z4 = cyclic_group(4)
    rep = verify_key_lemma(z4, parse_term("(x1 + x1)"))
    assert rep.tuples == 16 and rep.counterexamples == 0 and rep.confirming > 0


def test_key_lemma_2x_plus_2_is_vacuous():
    z4 = cyclic_group(4)
    rep = verify_key_lemma(z4, parse_term("((x1 + x1) + #2)"))
    assert rep.tuples == 16 and rep.vacuous == 16 and rep.counterexamples == 0


def test_key_lemma_nonzero_constant():
    rep = verify_key_lemma(cyclic_group(5), parse_term("#3"), n=1)
    assert rep.degree == 0 and rep.vacuous == rep.tuples == 5


def test_key_lemma_exhaustive_small_rings():
    for inst in (cyclic_ring(4), groupoid_ring(named_semigroup("left-zero:2"), 2)):
        for text in ("m(x1,x1)", "(m(x1,x1) + x1)", "(m(x1,#1) + #1)", "(m(x1,x2) + #1)"):
            F = parse_term(text, inst.signature)
            assert verify_key_lemma(inst, F).counterexamples == 0


def test_key_lemma_budget():
    with pytest.raises(BudgetExceeded):
        verify_key_lemma(cyclic_ring(6), parse_term("m(x1,x2)", cyclic_ring(6).signature), max_tuples=100)


def test_key_lemma_random_is_seeded():
    inst = cyclic_ring(6)
    F = parse_term("(m(x1,x1) + #3)", inst.signature)
    a = verify_key_lemma(inst, F, "random", 500, seed=4)
    b = verify_key_lemma(inst, F, "random", 500, seed=4)
    assert a == b and a.tuples == 500


def test_campaign_small_is_deterministic():
    a = key_lemma_campaign(pairs=40, tuples_per_pair=5, seed=1)
    b = key_lemma_campaign(pairs=40, tuples_per_pair=5, seed=1)
    assert a == b and a.tuples == 200 and a.counterexamples == 0
