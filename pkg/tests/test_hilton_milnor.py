import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import binomial

from lieshadow.errors import DomainError
from lieshadow.hall_words import Leaf, OrderPolicy, split_tower
from lieshadow.hilton_milnor import (
    Check,
    decompose,
    fundamental_split_checks,
    hm_series_checks,
    random_series,
    verify_fundamental_split,
    verify_half2,
    verify_hm_series,
    verify_james,
)
from lieshadow.homotopy_series import (
    FormalObject,
    MultiSeries,
    geom_sum,
    product_series,
    smash_word_series,
    word_connectivity,
)

seeds = st.integers(0, 10**9)


def spheres(conns, N=8, names="xyz"):
    n = len(conns)
    return [FormalObject.sphere_like(names[i], i + 1, n, c, N) for i, c in enumerate(conns)]


def random_objects(seed, n, N):
    rng = random.Random(seed)
    out = []
    for i in range(n):
        f = random_series(rng, n, N)
        out.append(FormalObject(f"x{i}", 0, f if f.order() else MultiSeries.gen(i + 1, n, N)))
    return out


# -- decompose ---------------------------------------------------------------


def test_single_object():
    for L in (1, 4, 9):
        d = decompose(spheres([2]), max_len=L)
        assert [f.word.word for f in d.factors] == [Leaf(1)]
        assert d.factors[0].conn_bound == 2


def test_two_connected_objects_length_five():
    d = decompose(spheres([0, 0]), max_len=5)
    assert [f.conn_bound for f in d.factors] == [0, 0, 1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 4]
    assert d.residual_conn == 5


def test_mixed_connectivity():
    d = decompose(spheres([1, 3]), max_len=3)
    got = {d.table.format(f.word.word): f.conn_bound for f in d.factors}
    assert got == {"x": 1, "y": 3, "[x,y]": 5, "[x,[x,y]]": 7, "[y,[x,y]]": 9}


def test_rejects_unconnected():
    bad = FormalObject.__new__(FormalObject)
    bad.name, bad.connectivity, bad.reduced_series = "X", -1, MultiSeries.gen(1, 1, 8)
    with pytest.raises(DomainError, match="connected"):
        decompose([bad], max_len=2)
    with pytest.raises(DomainError):
        decompose(spheres([0]), max_len=2, min_conn=3)
    with pytest.raises(DomainError):
        decompose(spheres([0]), max_len=0)


@pytest.mark.parametrize("conns", [(0, 0), (1, 1), (0, 2), (2, 0, 1)])
def test_factor_invariants(conns):
    d = decompose(spheres(conns), max_len=5)
    series = [o.reduced_series for o in d.inputs]
    for f in d.factors:
        assert f.conn_bound == word_connectivity(f.word.word, conns)
        smash = smash_word_series(f.word.word, series)
        assert f.factor_series == geom_sum(smash)
        assert f.factor_series.order() == smash.order()
        assert f.factor_series.order() in (None, f.conn_bound + 1)
    assert [f.word.serial for f in d.factors] == sorted(f.word.serial for f in d.factors)
    if len(set(conns)) == 1:
        bounds = [f.conn_bound for f in d.factors]
        assert bounds == sorted(bounds)


@pytest.mark.parametrize("conns", [(0, 0), (1, 2), (0, 3, 1)])
def test_residual_bounds_omitted_factors(conns):
    big = decompose(spheres(conns), max_len=7)
    prev = None
    for L in range(1, 6):
        d = decompose(spheres(conns), max_len=L)
        kept = {f.word.word for f in d.factors}
        omitted = [f for f in big.factors if f.word.word not in kept]
        assert all(f.conn_bound >= d.residual_conn for f in omitted)
        if prev is not None:
            assert d.residual_conn > prev
        prev = d.residual_conn


@pytest.mark.parametrize("conns", [(0, 0), (1, 1), (0, 2), (1, 0, 2)])
@pytest.mark.parametrize("C", [1, 3, 6, 9])
def test_min_conn_bound(conns, C):
    d = decompose(spheres(conns), min_conn=C)
    assert all(f.conn_bound < C for f in d.factors)
    assert d.residual_conn == C
    big = decompose(spheres(conns), max_len=10)
    expected = [f.word.word for f in big.factors if f.conn_bound < C]
    assert [f.word.word for f in d.factors] == expected


@pytest.mark.parametrize("conns", [(0, 0), (1, 1), (2, 0), (0, 1, 1)])
@pytest.mark.parametrize("L", [2, 3, 4])
def test_bound_consistency(conns, L):
    by_len = decompose(spheres(conns), max_len=L)
    C = L * (min(conns) + 1) - 1
    by_conn = decompose(spheres(conns), min_conn=C)
    a = {f.word.word: f for f in by_len.factors}
    b = {f.word.word: f for f in by_conn.factors}
    for w in a.keys() & b.keys():
        assert a[w] == b[w]


@pytest.mark.parametrize("policy", list(OrderPolicy))
@pytest.mark.parametrize("n,L", [(2, 5), (3, 4)])
def test_tower_reproduces_factor_words(n, L, policy):
    d = decompose(spheres([0] * n), max_len=L, policy=policy)
    words = [f.word.word for f in d.factors]
    for r in range(len(words) + 1):
        heads, _ = split_tower(n, L, r, policy, d.table.names)
        assert heads == words[:r]


def test_export_formats():
    d = decompose(spheres([0, 1]), max_len=3)
    text = d.to_text().splitlines()
    assert text[0] == "serial\tword\tmultidegree\tconn_bound"
    assert text[3] == "3\t[x,y]\t(1,1)\t2"
    data = d.to_dict()
    assert data["factors"][2]["word"] == "[x,y]"
    assert data["factors"][0]["factor_series"][0] == {"exponents": [0, 1, 0], "coefficient": 1}


# -- series identities ------------------------------------------------------


def test_hm_unit_two_generators():
    objs = spheres([0, 0])
    assert verify_hm_series(objs, 8)
    (check,) = hm_series_checks(objs, 8)
    for a in range(9):
        for b in range(9 - a):
            if a + b:
                assert check.lhs.coefficient((0, a, b)) == binomial(a, b)


def test_hm_single_object():
    objs = spheres([0])
    (check,) = hm_series_checks(objs, 8)
    assert check.ok and check.lhs == geom_sum(objs[0].reduced_series)


def test_hm_unit_three_generators():
    assert verify_hm_series(spheres([0, 0, 0], N=6), 6)


@pytest.mark.parametrize("conns", [(1, 0), (2, 1), (0, 1, 2)])
def test_hm_higher_connectivity(conns):
    assert verify_hm_series(spheres(conns), 8)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(2, 3))
def test_hm_random(seed, n):
    assert verify_hm_series(random_objects(seed, n, 6), 6)


def test_hm_detects_missing_factor():
    # negative control: dropping one Hall word breaks the identity
    objs = spheres([0, 0])
    (check,) = hm_series_checks(objs, 6)
    d = decompose(objs, max_len=6)
    rhs = MultiSeries.zero(2, 6)
    for f in d.factors[:-1]:
        rhs = product_series(rhs, f.factor_series.truncate(6))
    bad = Check("x", check.lhs, rhs)
    assert not bad.ok
    assert sum(bad.mismatch[0][1:]) == 6


def test_hm_product_order_irrelevant():
    objs = spheres([0, 0, 0], N=6)
    d = decompose(objs, max_len=6)
    series = [f.factor_series for f in d.factors]
    random.Random(3).shuffle(series)
    rhs = MultiSeries.zero(3, 6)
    for s in series:
        rhs = product_series(rhs, s)
    assert rhs == hm_series_checks(objs, 6)[0].lhs


t1, t2 = MultiSeries.gen(1, 2, 8), MultiSeries.gen(2, 2, 8)


def test_fundamental_unit():
    assert verify_fundamental_split(t1, t2, 8)
    for c in fundamental_split_checks(t1, t2, 8):
        assert c.lhs == geom_sum(t1 + t2)


def test_fundamental_zero_y():
    for c in fundamental_split_checks(t1, MultiSeries.zero(2, 8), 8):
        assert c.ok and c.rhs == geom_sum(t1)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_fundamental_random(seed):
    rng = random.Random(seed)
    assert verify_fundamental_split(random_series(rng, 2, 6), random_series(rng, 2, 6), 6)


def test_james():
    f = MultiSeries.gen(1, 1, 5)
    assert verify_james(f, 5)
    assert verify_james(MultiSeries.zero(1, 5), 5)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_james_random(seed):
    assert verify_james(random_series(random.Random(seed), 3, 8), 8)


def test_half2():
    assert verify_half2(t1, t2, 8)
    assert verify_half2(t1, MultiSeries.zero(2, 8), 8)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_half2_random(seed):
    rng = random.Random(seed)
    assert verify_half2(random_series(rng, 2, 8), random_series(rng, 2, 8), 8)
