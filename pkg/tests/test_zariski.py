import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polyring_lab.algebras import (SymbolicPolyring, boolean_power, cyclic_group, cyclic_ring, evaluate,
                                   named_instance)
from polyring_lab.terms import parse_term
from polyring_lab.zariski import (Certificate, CertificateError, CoverViolation, FiniteSpace, FiniteValuedSet,
                                  NotFound, analyze, closed_base, compare_topologies, ind_dimension,
                                  linear_vanishing_terms, mask_members, nowhere_dense_certificate,
                                  product_space, root_set, term_clone, verify_cantor_example,
                                  verify_certificate, window_closure, zariski_closure)


# clones

def _tables(clone):
    return sorted(tuple(int(v) for v in f.table) for f in clone.functions)


def test_clone_z2_group():
    c = term_clone(cyclic_group(2), 1)
    assert c.complete and _tables(c) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_clone_z3_group_is_affine_maps():
    c = term_clone(cyclic_group(3), 1)
    affine = sorted(tuple((k * x + b) % 3 for x in range(3)) for k in range(3) for b in range(3))
    assert c.complete and _tables(c) == affine


def test_clone_f2_ring_is_everything():
    c = term_clone(boolean_power(1), 1)
    assert len(c) == 4


def test_clone_provenance_evaluates_to_table():
    inst = cyclic_ring(4)
    c = term_clone(inst, 2)
    for f in c.functions[:200]:
        vals = [evaluate(f.provenance, inst, p) for p in c.points]
        assert vals == f.table.tolist()


def test_clone_closed_under_ops():
    inst = cyclic_ring(3)
    c = term_clone(inst, 1)
    keys = {f.table.tobytes() for f in c.functions}
    for f, g in itertools.product(c.functions, repeat=2):
        assert inst.add[f.table, g.table].tobytes() in keys
        assert inst.ops["m"][f.table, g.table].tobytes() in keys
        assert inst.neg[f.table].tobytes() in keys


def test_clone_cap():
    c = term_clone(cyclic_ring(6), 2, cap=50)
    assert not c.complete and len(c) == 50
    assert closed_base(c).lower_approximation


def test_clone_needs_n():
    with pytest.raises(ValueError):
        term_clone(cyclic_group(2), 0)


# root sets and bases

def test_root_set_examples():
    assert root_set(np.zeros(5, dtype=int)) == 0b11111
    assert root_set(np.arange(5)) == 0b1
    K = boolean_power(3)
    a = 0b001  # the unit vector on coordinate 0
    vals = np.array([K.apply("m", (a, b)) for b in range(8)])
    assert mask_members(root_set(vals)) == [b for b in range(8) if not b & 1]


def test_closed_base_z2():
    space = closed_base(term_clone(cyclic_group(2), 1))
    assert space.base() == [0, 1, 2, 3]


def test_closed_base_degenerate():
    space = FiniteSpace([0, 1, 2], (0b111,))
    assert [s for s in space.base() if s] == [0b111]


def test_f2_squared_all_subsets_algebraic():
    space = closed_base(term_clone(boolean_power(2), 1))
    assert len(space.base()) == 16 and space.saturated


# closure operator

def _random_space(rng, size):
    subbase = tuple(int(v) for v in rng.integers(0, 1 << size, size=int(rng.integers(1, 6))))
    arity = [None, 1, 2][int(rng.integers(3))]
    return FiniteSpace(list(range(size)), subbase, arity)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_closure_is_closure_operator(seed):
    rng = np.random.default_rng(seed)
    size = int(rng.integers(1, 7))
    space = _random_space(rng, size)
    S = int(rng.integers(0, 1 << size))
    T = S | int(rng.integers(0, 1 << size))
    cS = space.closure(S)
    assert cS & S == S
    assert space.closure(cS) == cS
    assert space.closure(T) & cS == cS
    assert space.closure(0) == 0


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_closure_matches_bruteforce(seed):
    rng = np.random.default_rng(seed)
    size = int(rng.integers(1, 6))
    space = _random_space(rng, size)
    S = int(rng.integers(0, 1 << size))
    full = space.full
    arity = space.union_arity if space.union_arity is not None else len(space.subbase)
    unions = {0}
    for k in range(1, arity + 1):
        for combo in itertools.combinations(space.subbase, k):
            u = 0
            for s in combo:
                u |= s
            unions.add(u)
    want = full
    for u in unions:
        if S & ~u == 0:
            want &= u
    assert space.closure(S) == want


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_interior_and_closure_of_complement_partition(seed):
    rng = np.random.default_rng(seed)
    size = int(rng.integers(1, 7))
    space = _random_space(rng, size)
    S = space.closure(int(rng.integers(0, 1 << size)))
    interior = space.interior(S)
    outside = space.closure(space.full & ~S)
    assert interior & outside == 0 and interior | outside == space.full


def test_discrete_closure_is_identity():
    space = closed_base(term_clone(boolean_power(2), 1))
    for S in range(16):
        assert space.closure(S) == S


def test_zariski_closure_accepts_point_lists():
    space = closed_base(term_clone(cyclic_group(3), 2))
    assert zariski_closure([], space) == 0
    assert space.members(zariski_closure([(1, 2)], space)) == [(1, 2)]


# analysis

def test_finite_polyring_space_is_discrete():
    for inst, n in ((cyclic_ring(6), 1), (cyclic_group(3), 2), (boolean_power(2), 1)):
        rep = analyze(closed_base(term_clone(inst, n)))
        assert rep["discrete"] and rep["ind"] == 0 and rep["space_pseudocharacter"] == 1
        assert set(rep["pseudocharacter"].values()) == {1}


def test_indiscrete_two_points():
    rep = analyze(FiniteSpace.from_open_sets(["a", "b"], [[], ["a", "b"]]))
    assert rep["connected"] and not rep["isolated_points"]
    assert rep["pseudocharacter"] == {"a": "inf", "b": "inf"}


def test_single_point_subset_of_discrete_space():
    space = closed_base(term_clone(cyclic_group(2), 1))
    rep = analyze(space, [(1,)])
    assert rep["subset"]["closed"] and rep["subset"]["interior"] == [[1]]
    assert not rep["subset"]["nowhere_dense"]


def test_nowhere_dense_in_indiscrete_space():
    space = FiniteSpace.from_open_sets([0, 1, 2], [[0]])
    rep = analyze(space, [1])
    assert rep["subset"]["closure"] == [1, 2] and rep["subset"]["nowhere_dense"]


def test_ind_examples():
    assert ind_dimension(FiniteSpace([], ())) == -1
    assert ind_dimension(closed_base(term_clone(cyclic_group(3), 1))) == 0
    sierpinski = FiniteSpace.from_open_sets(["a", "b"], [[], ["a"], ["a", "b"]])
    assert ind_dimension(sierpinski) == 1


def test_ind_of_three_point_chain():
    # opens: {}, {a}, {a,b}, {a,b,c}
    chain = FiniteSpace.from_open_sets("abc", [[], ["a"], ["a", "b"], ["a", "b", "c"]])
    assert ind_dimension(chain) == 2


def test_product_topology_side_by_side():
    line = closed_base(term_clone(cyclic_group(3), 1))
    full = closed_base(term_clone(cyclic_group(3), 2))
    rep = compare_topologies(full, product_space(line, 2))
    assert rep["zariski_includes_product"] and not rep["strictly_finer"]
    # a strictly finer pair on the same points
    sier = FiniteSpace.from_open_sets([0, 1], [[0]])
    prod = product_space(sier, 2)
    discrete = FiniteSpace(prod.points, tuple(1 << i for i in range(4)) + (0b1111,))
    assert compare_topologies(discrete, prod)["strictly_finer"]


# the Cantor-set example

def test_cantor_unit_vectors_and_cylinders():
    for m in range(1, 9):
        rep = verify_cantor_example(m)
        assert rep["complement_identity_unit_vectors"]
        assert rep["cylinders_algebraic"] and rep["singletons_algebraic"]
        assert rep["algebraic_sets"] == 2 ** (2 ** m)


def test_cantor_complement_fails_off_unit_vectors():
    # S_{ax+a} = {b : b_i = 1 where a_i = 1}; it complements S_{ax} only for a = e_i
    rep = verify_cantor_example(3)
    assert rep["complement_failures"] == [0, 3, 5, 6, 7]


def test_cantor_m1_enumeration():
    rep = verify_cantor_example(1)
    assert rep["algebraic_sets_enumerated"] == 4
    assert verify_cantor_example(2)["algebraic_sets_enumerated"] == 16


def test_cantor_rejects_m0():
    with pytest.raises(ValueError):
        verify_cantor_example(0)


# parabola surrogate

def test_only_zero_line_through_parabola_points():
    assert linear_vanishing_terms([(0, 0), (1, 1), (2, 4)]) == []
    assert linear_vanishing_terms([(0, 0), (1, 1), (2, 2)]) == [(1, -1, 0)]


def test_parabola_window_closure_symbolic():
    z = named_instance("z-group")
    S = [((a,), (a * a,)) for a in range(3)]
    window = [((x,), (y,)) for x in range(-3, 4) for y in range(-3, 10)]
    terms = []
    for k, m_, c in itertools.product(range(-2, 3), repeat=3):
        # k x1 + m x2 + c as an explicit sum
        pieces = ["x1" if k > 0 else "-x1"] * abs(k) + ["x2" if m_ > 0 else "-x2"] * abs(m_) + \
                 ["#1" if c > 0 else "-#1"] * abs(c)
        if not pieces:
            continue
        t = pieces[0]
        for p in pieces[1:]:
            t = f"({t} + {p})"
        terms.append(parse_term(t))
    assert window_closure(z, terms, S, window) == set(window)


def test_parabola_closure_z7():
    inst = cyclic_group(7)
    space = closed_base(term_clone(inst, 2), union_arity=1)
    S = [(a, a * a % 7) for a in range(3)]
    assert space.closure(space.mask(S)) == space.full


# certificates

def _nilpotent():
    return SymbolicPolyring(2, ({"name": "N", "kind": "matrix", "params": {"matrix": [[0, 1], [0, 0]]}},))


def test_certificate_zero_term_roundtrip():
    z = named_instance("z-group")
    cert = nowhere_dense_certificate(z, [parse_term("0")], FiniteValuedSet(), 1)
    assert isinstance(cert, Certificate) and cert.zero_in_root_set
    ok, problems = verify_certificate(json.dumps(cert.to_json()))
    assert ok, problems
    for seq in cert.sequences:
        assert len(set(seq)) == len(seq)


def test_certificate_disguised_zero_with_graph():
    inst = _nilpotent()
    F = parse_term("N(N(x1))", inst.signature)
    A = FiniteValuedSet("graph", parse_term("x1"))
    cert = nowhere_dense_certificate(inst, [F], A, 1, dims=2)
    assert isinstance(cert, Certificate)
    assert not any(A.contains(inst, p) for p in cert.grid)
    assert verify_certificate(cert.to_json())[0]


def test_certificate_tamper_detected():
    z = named_instance("z-group")
    doc = nowhere_dense_certificate(z, [parse_term("0")], FiniteValuedSet(), 2).to_json()
    doc["values"][0] = [5]
    ok, problems = verify_certificate(doc)
    assert not ok and problems
    doc = nowhere_dense_certificate(z, [parse_term("0")], FiniteValuedSet(), 2).to_json()
    doc["sequences"][0][1] = doc["sequences"][0][0]
    assert not verify_certificate(doc)[0]


def test_certificate_malformed():
    z = named_instance("z-group")
    text = json.dumps(nowhere_dense_certificate(z, [parse_term("0")], FiniteValuedSet(), 1).to_json())
    with pytest.raises(CertificateError):
        verify_certificate(text[: len(text) // 2])
    with pytest.raises(CertificateError):
        verify_certificate({"kind": "nowhere-dense-certificate"})


def test_cover_violations():
    zg = named_instance("z-group")
    with pytest.raises(CoverViolation):
        nowhere_dense_certificate(zg, [parse_term("x2")], FiniteValuedSet(), 1)
    zr = named_instance("z-ring")
    parabola = FiniteValuedSet("graph", parse_term("m(x1,x1)", zr.signature))
    with pytest.raises(CoverViolation):
        nowhere_dense_certificate(zr, [parse_term("(x2 + -m(x1,x1))", zr.signature)], parabola, 2)


def test_certificate_budget_exhausted():
    z = named_instance("z-group")
    res = nowhere_dense_certificate(z, [parse_term("0")], FiniteValuedSet(), 1, budget=0)
    assert isinstance(res, NotFound) and res.examined == 0


def test_certificate_m_below_degree():
    zr = named_instance("z-ring")
    # cancels to the zero polynomial, so degree 0 and m = 0 is allowed
    res = nowhere_dense_certificate(zr, [parse_term("m(x1,(x1 + -x1))", zr.signature)], FiniteValuedSet(), 0)
    assert isinstance(res, Certificate)
    with pytest.raises(ValueError):
        nowhere_dense_certificate(zr, [parse_term("m(x1,x1)", zr.signature)], FiniteValuedSet(), 1)


def test_certificate_random_phase_is_seeded():
    inst = _nilpotent()
    F = parse_term("N(N(x1))", inst.signature)
    A = FiniteValuedSet("graph", parse_term("x1"))
    a = nowhere_dense_certificate(inst, [F], A, 1, dims=2, seed=3, random_fraction=1.0)
    b = nowhere_dense_certificate(inst, [F], A, 1, dims=2, seed=3, random_fraction=1.0)
    assert a.found_by == "random" and a.to_json() == b.to_json()
