import random

import pytest

from kleinepw import linalg
from kleinepw.epw import _wedge3_of_vectors
from kleinepw.groebner import (
    BudgetExhausted,
    FPoly,
    buchberger,
    decomposable_pullback_ideal,
    gm_threefold_ideal,
    grassmannian_relations_gr36,
    ideal_membership,
    jacobian_minors,
    normal_form,
    projective_empty,
    smoothness_check,
)

P = 32003


def fvars(p, n):
    return [FPoly.var(p, i, n) for i in range(n)]


def test_buchberger_basics():
    x, y = fvars(7, 2)
    assert [g.terms for g in buchberger([x, y])] == [g.terms for g in [y, x]] or len(
        buchberger([x, y])
    ) == 2
    one = FPoly.const(7, 1, 1)
    u = FPoly.var(7, 0, 1)
    gb = buchberger([u * u - one, u - one])
    assert len(gb) == 1 and gb[0].terms == (u - one).terms


def test_buchberger_zero_dimensional_cone():
    x, y = fvars(7, 2)
    gb = buchberger([x * x + y * y, x * y])
    leads = [g.lead()[0] for g in gb]
    assert any(e[1] == 0 for e in leads) and any(e[0] == 0 for e in leads)
    # hand-computed S-polynomial content: y^3 lands in the ideal
    assert ideal_membership(y * y * y, gb)


def test_idempotence_and_membership():
    x, y = fvars(13, 2)
    gens = [x * x - y, x * y + y * y]
    gb = buchberger(gens)
    again = buchberger(gb)
    assert [g.terms for g in again] == [g.terms for g in gb]
    for g in gens:
        assert ideal_membership(g, gb)


def test_normal_form_properties():
    x, y = fvars(11, 2)
    gb = buchberger([x * x - y])
    r = normal_form(x * x * x, gb)
    # x^3 reduces to x*y
    assert r.terms == (x * y).terms


def test_budget_exhaustion():
    x, y = fvars(7, 2)
    with pytest.raises(BudgetExhausted):
        buchberger([x * x * x - y * y, x * y * y - x], max_pairs=1)


def test_projective_empty():
    x, y, z = fvars(P, 3)
    assert projective_empty([x, y, z]) is True
    assert projective_empty([x * y]) is False
    # monotone: adding generators never flips true -> false
    assert projective_empty([x, y, z, x * y]) is True
    with pytest.raises(ValueError):
        projective_empty([x + FPoly.const(P, 3, 1)])


def test_smoothness_small_examples():
    x, y, z, w = fvars(P, 4)
    assert smoothness_check([x * x + y * y + z * z + w * w], 1)[0] is True
    u, v, t = fvars(P, 3)
    assert smoothness_check([u * v - t * t], 1)[0] is True  # smooth conic
    assert smoothness_check([u * u * v], 1)[0] is False


def test_grassmannian_relations():
    rel = grassmannian_relations_gr36(P)
    assert all(g.total_degree() == 2 for g in rel)
    assert all(g.is_homogeneous() for g in rel)
    # rank 35 over the prime field
    monos = sorted({e for g in rel for e in g.terms})
    mi = {e: i for i, e in enumerate(monos)}
    rows = []
    for g in rel:
        row = [0] * len(monos)
        for e, c in g.terms.items():
            row[mi[e]] = c
        rows.append(row)
    # small modular elimination
    r = 0
    cols = len(monos)
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % P), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], P - 2, P)
        rows[r] = [(v * inv) % P for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % P:
                f = rows[i][c]
                rows[i] = [(a - f * b) % P for a, b in zip(rows[i], rows[r])]
        r += 1
    assert r == 35
    # vanish on decomposables, not identically
    rng = random.Random(5)
    for _ in range(3):
        u = [rng.randint(0, P - 1) for _ in range(6)]
        v = [rng.randint(0, P - 1) for _ in range(6)]
        w = [rng.randint(0, P - 1) for _ in range(6)]
        t = [c % P for c in _wedge3_of_vectors(u, v, w)]
        for g in rel:
            assert g.evaluate(t) == 0
    some_nonzero = any(
        g.evaluate([1] + [0] * 18 + [1]) != 0 for g in rel
    )  # e_012 + e_345 is not decomposable
    assert some_nonzero


def test_decomposable_gate_two_primes():
    for p in (P, 65537):
        assert projective_empty(decomposable_pullback_ideal(p)) is True


def test_threefold_gate():
    ok, info = smoothness_check(gm_threefold_ideal(P), 4, minor_sample=None)
    assert ok is True


def test_threefold_negative_control():
    # deleting one quadric term forces a singular point: the degenerate
    # quadric's vertex plane meets the section
    gens = gm_threefold_ideal(P)
    quad = gens[-1]
    broken = dict(quad.terms)
    key = next(e for e in broken if e[6] == 1 and e[7] == 1)  # the x24*x34 term
    del broken[key]
    corrupted = FPoly(P, 8)
    corrupted.terms = broken
    ok, info = smoothness_check(gens[:-1] + [corrupted], 4, minor_sample=None)
    assert ok is False


def test_minor_subsampling_reports():
    gens = gm_threefold_ideal(P)
    minors, sampled = jacobian_minors(gens, 4, sample=10, seed=1)
    assert sampled is True and len(minors) <= 10
    full, not_sampled = jacobian_minors(gens, 4, sample=None)
    assert not_sampled is False and len(full) > 1000
