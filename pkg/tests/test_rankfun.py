import random
from fractions import Fraction

import pytest

from qrank.constructions import convex_combination, paving, paving_spec, uniform
from qrank.errors import NotADenominator
from qrank.rankfun import (check_axioms, classify, closure, cyclic_flats,
                           cyclic_spaces, flats, independence_report,
                           is_strong_independent, mu_bases, point_from_json,
                           point_to_json, principal_denominator, rank_point)


def dims_set(lat, pred):
    return frozenset(i for i in range(lat.size) if pred(lat.dims[i]))


def test_axioms_on_paper_points(lat22):
    ok1 = rank_point(lat22, [0, 1, 1, 1, 2])
    ok2 = rank_point(lat22, [0, 1, 1, 1, 1])
    assert check_axioms(ok1).ok
    assert check_axioms(ok2).ok
    bad = rank_point(lat22, [0, 2, 0, 0, 1])
    rep = check_axioms(bad)
    assert not rep.ok
    assert any(tag == "R1" and w == (1,) for tag, w, _ in rep.violations)


def test_axiom_violation_witnesses(lat22):
    # break monotonicity on a cover
    rep = check_axioms(rank_point(lat22, [0, 1, 1, 1, Fraction(1, 2)]))
    assert any(tag == "R2" for tag, _, _ in rep.violations)
    # break submodularity: two lines full, join E full, but third line 0
    rep = check_axioms(rank_point(lat22, [0, 1, 1, 0, 2]))
    assert any(tag == "R3" for tag, _, _ in rep.violations)
    slacks = [s for tag, _, s in rep.violations if tag == "R3"]
    assert all(s > 0 for s in slacks)


def test_random_single_inequality_breakage(lat23):
    rng = random.Random(42)
    base = uniform(lat23, 2)
    for _ in range(30):
        i = rng.randrange(1, lat23.size)
        vals = list(base.values)
        vals[i] = vals[i] + Fraction(rng.randrange(1, 4), 1) + lat23.dims[i]
        rep = check_axioms(rank_point(lat23, vals))
        assert not rep.ok
        assert any(i in w for _, w, _ in rep.violations)


def test_principal_denominator(lat22):
    assert principal_denominator(uniform(lat22, 1)) == 1
    p = rank_point(lat22, [0, 1, 1, 1, Fraction(3, 2)])
    assert principal_denominator(p) == 2
    p = rank_point(lat22, [0, Fraction(1, 2), 1, 1, Fraction(8, 3) - 1])
    assert principal_denominator(p) == 6
    # mu * v integral for all, and mu-1 fails unless mu == 1
    for point in (uniform(lat22, 2), p):
        mu = principal_denominator(point)
        assert all((v * mu).denominator == 1 for v in point.values)
        if mu > 1:
            assert any((v * (mu - 1)).denominator != 1 for v in point.values)


def test_independence_uniform_rank1(lat22):
    u = uniform(lat22, 1)
    rep = independence_report(u, 1)
    assert rep.independent == frozenset(range(4))  # <0> and the three lines
    assert rep.circuits == frozenset({lat22.top})
    assert rep.loops == frozenset()


def test_independence_requires_denominator(lat22):
    p = rank_point(lat22, [0, 1, 1, 1, Fraction(3, 2)])
    with pytest.raises(NotADenominator):
        independence_report(p, 3)
    with pytest.raises(NotADenominator):
        classify(p, 3)


def test_independence_monotone_and_classical(lat23):
    rng = random.Random(7)
    s = frozenset({rng.choice([i for i in range(lat23.size) if lat23.dims[i] == 2])})
    points = [uniform(lat23, k) for k in range(4)] + [paving(paving_spec(lat23, 2, s))]
    for p in points:
        rep = independence_report(p, 1)
        # downward closed
        for i in rep.independent:
            assert all(j in rep.independent for j in lat23.below(i))
        # classical characterization rho(A) = dim A
        assert rep.independent == frozenset(
            i for i in range(lat23.size) if is_strong_independent(p, i))


def test_mu_bases(lat22, lat23):
    u = uniform(lat22, 1)
    assert mu_bases(u, 1, lat22.top) == frozenset(lat22.atom_range)
    u23 = uniform(lat23, 2)
    bases = mu_bases(u23, 1, lat23.top)
    assert bases == dims_set(lat23, lambda d: d == 2)
    # V independent => {V}
    a = next(iter(lat23.atom_range))
    assert mu_bases(u23, 1, a) == frozenset({a})
    # all bases carry the rank of V
    for v in range(lat23.size):
        for b in mu_bases(u23, 1, v):
            assert u23.values[b] == u23.values[v]


def test_closure(lat23):
    u = uniform(lat23, 2)
    assert closure(u, lat23.top).closure == lat23.top
    a = next(iter(lat23.atom_range))
    res = closure(u, a)
    assert res.closure == a  # dim < k: already a flat
    plane = next(i for i in range(lat23.size) if lat23.dims[i] == 2)
    assert closure(u, plane).closure == lat23.top  # dim >= k closes to E
    # cl(A) is always a flat; flats are their own closure
    fl = flats(u)
    for x in range(lat23.size):
        assert closure(u, x).closure in fl
    for f in fl:
        assert closure(u, f).closure == f


def test_flats_cyclic_uniform(lat23):
    for k in (1, 2):
        u = uniform(lat23, k)
        assert flats(u) == dims_set(lat23, lambda d: d < k) | {lat23.top}
        assert cyclic_spaces(u) == dims_set(lat23, lambda d: d > k) | {lat23.zero}
        assert cyclic_flats(u) == frozenset({lat23.zero, lat23.top})


def test_flats_cyclic_paving(lat23):
    planes = [i for i in range(lat23.size) if lat23.dims[i] == 2]
    s = frozenset({planes[0]})
    p = paving(paving_spec(lat23, 2, s))
    # F = (L_{<=k-1} \ I) u S u {E} with I the hyperplanes under S
    inside = frozenset(h for h in lat23.covers_down[planes[0]])
    expect_flats = (dims_set(lat23, lambda d: d <= 1) - inside) | s | {lat23.top}
    assert flats(p) == expect_flats
    # O = (L_{>=k+1} \ J) u S u {0} with J the spaces over S
    over = frozenset(u for u in lat23.covers_up[planes[0]])
    expect_cyc = (dims_set(lat23, lambda d: d >= 3) - over) | s | {lat23.zero}
    assert cyclic_spaces(p) == expect_cyc
    # here k = n-1, so E itself sits over S and drops out of the cyclic
    # set; the compact closed form S u {0} u {E} needs k < n-1
    assert cyclic_flats(p) == s | {lat23.zero}


def test_cyclic_flats_paving_small_rank(lat24):
    planes = [i for i in range(lat24.size) if lat24.dims[i] == 2]
    s = frozenset({planes[0]})
    p = paving(paving_spec(lat24, 2, s))
    assert cyclic_flats(p) == s | {lat24.zero, lat24.top}


def test_cyclic_condition_two_superfluous_for_qmatroids(lat23):
    # integer points: cyclic set must equal {X : rho(H) = rho(X) for all H}
    rng = random.Random(3)
    planes = [i for i in range(lat23.size) if lat23.dims[i] == 2]
    points = [uniform(lat23, k) for k in range(4)]
    points.append(paving(paving_spec(lat23, 2, frozenset(planes[:1]))))
    for p in points:
        simple = frozenset(
            x for x in range(lat23.size)
            if all(p.values[h] == p.values[x] for h in lat23.covers_down[x]))
        assert cyclic_spaces(p) == simple


def test_classify(lat22, lat23):
    u = uniform(lat23, 2)
    cls = classify(u, 1)
    assert cls.is_qmatroid and cls.is_full and cls.is_paving and cls.is_mu_paving
    assert cls.loop_space == lat23.zero
    # rank-1 q-matroid with a loop: (0,1,1,0,1) has loop space <11>
    p = rank_point(lat22, [0, 1, 1, 0, 1])
    cls = classify(p, 1)
    assert cls.loop_space == 3
    assert not cls.is_full  # <0> is not a flat (the loop keeps rank 0)
    the_loops = independence_report(p, 1).loops
    assert the_loops == frozenset({3})


def test_classify_mu_paving_vacuous(lat22):
    # U_{1,2} + U_{2,2} with lam=1/2: mu=2, no mu-circuit exists
    combo = convex_combination([(Fraction(1, 2), uniform(lat22, 1)),
                                (Fraction(1, 2), uniform(lat22, 2))])
    rep = independence_report(combo, 2)
    assert rep.circuits == frozenset()
    assert classify(combo, 2).is_mu_paving


def test_point_json_roundtrip(lat22):
    p = rank_point(lat22, [0, Fraction(1, 2), 1, 1, Fraction(3, 2)])
    obj = point_to_json(p)
    back = point_from_json(obj, lat22)
    assert back.values == p.values
    obj["order_digest"] = "0" * 16
    with pytest.raises(Exception):
        point_from_json(obj, lat22)


def test_mu_bases_equal_rank_fractional(lat23):
    # fractional combination: every mu-basis of V carries rho(V)
    combo = convex_combination([
        (Fraction(1, 3), uniform(lat23, 1)),
        (Fraction(2, 3), uniform(lat23, 2)),
    ])
    for v in range(lat23.size):
        bases = mu_bases(combo, 3, v)
        assert bases
        for b in bases:
            assert combo.values[b] == combo.values[v]
