import random
from fractions import Fraction

import pytest

from kleinepw import epw, fixtures, group, linalg
from kleinepw.poly import MultiPoly, Poly1, squarefree_decomposition


def test_v_assignments():
    v = epw.build_v()
    col = epw.PAIR5_INDEX[(1, 2)]
    assert v[epw.TRIPLE5_INDEX[(2, 4, 5)]][col] == 1
    col = epw.PAIR5_INDEX[(1, 5)]
    assert v[epw.TRIPLE5_INDEX[(1, 3, 4)]][col] == -1
    # signed permutation: one nonzero entry per row and per column
    for row in v:
        assert sum(1 for x in row if x) == 1
    for j in range(10):
        assert sum(1 for i in range(10) if v[i][j]) == 1


def test_v_symmetry():
    # v(x) ^ y == x ^ v(y) on all basis pairs, as 5-forms
    forward, _ = epw._v_maps()

    def five_coeff(pair, triple):
        s, merged = epw.merge_indices(pair, triple)
        return s if merged == (1, 2, 3, 4, 5) else 0

    for p in epw.PAIRS5:
        for q in epw.PAIRS5:
            sp, tp = forward[p]
            sq, tq = forward[q]
            assert five_coeff(p, tq) * sq == five_coeff(q, tp) * sp


def test_lagrangian_matrix():
    a = epw.build_A()
    assert len(a) == 10 and all(len(r) == 20 for r in a)
    assert all(c in (-1, 0, 1) for r in a for c in r)
    assert linalg.rank(a) == 10
    for i in range(10):
        for j in range(10):
            assert epw.wedge_pairing(a[i], a[j]) == 0
    # first row is e_012 + e_245
    row = a[0]
    nz = {epw.TRIPLES6[i]: c for i, c in enumerate(row) if c}
    assert nz == {(0, 1, 2): 1, (2, 4, 5): 1}


def test_wedge_pairing_examples():
    e012 = epw.basis_trivector((0, 1, 2))
    e345 = epw.basis_trivector((3, 4, 5))
    e045 = epw.basis_trivector((0, 4, 5))
    assert epw.wedge_pairing(e012, e345) == 1
    assert epw.wedge_pairing(e012, e045) == 0
    assert epw.wedge_pairing(e345, e012) == -1


def test_chart_matrix_matches_transcription():
    derived = epw.chart_matrix_derived()
    fixture = fixtures.chart_matrix()
    for i in range(10):
        for j in range(10):
            assert derived[i][j] == fixture[i][j], (i, j)


def test_sextic_routes_and_fixture():
    f1 = epw.sextic_equation()
    assert f1 == fixtures.sextic_poly()
    assert len(f1.terms) == 37
    f2 = epw.sextic_via_interpolation()
    assert f2 == f1


def test_sextic_generic_route_matches():
    # the generic-Lagrangian code path on the canonical matrix
    a = epw.build_A()
    shuffled = list(reversed(a))  # same span, different basis order
    f = epw.sextic_equation(shuffled)
    assert f == fixtures.sextic_poly()


def test_sextic_transversality_error():
    coord = [epw.basis_trivector(t) for t in epw.TRIPLES5]  # the 3-vectors on 1..5
    with pytest.raises(epw.TransversalityError):
        epw.sextic_equation(coord)


def test_strata():
    a = epw.build_A()
    assert epw.stratum(a, [1, 0, 0, 0, 0, 0]) == 0
    for i in range(1, 6):
        x = [0] * 6
        x[i] = 1
        assert epw.stratum(a, x) == 2
    with pytest.raises(ValueError):
        epw.stratum(a, [0] * 6)
    # the 20-column certificate: [rows of A | basis of e1 ^ 2-vectors] has rank 18
    w_rows = [
        r
        for r in (epw.wedge_vector_pair([0, 1, 0, 0, 0, 0], p) for p in epw.PAIRS6)
        if any(r)
    ]
    assert linalg.rank(a + w_rows) == 18


def test_gm_dimensions():
    a = epw.build_A()
    assert epw.gm_dimension(a, [0, 0, 0, 0, 0, 1]) == 3
    assert epw.gm_dimension(a, [1, 0, 0, 0, 0, 0]) == 5
    dims = {epw.gm_dimension(a, [int(i == j) for i in range(6)]) for j in range(6)}
    assert dims == {3, 5}


def test_self_duality():
    a = epw.build_A()
    assert epw.self_duality_check(a) is True
    assert epw.self_duality_oracle(a) is True
    coord = [epw.basis_trivector((0,) + p) for p in epw.PAIRS5]
    assert epw.is_lagrangian(coord)
    assert epw.self_duality_check(coord) is False
    assert epw.self_duality_oracle(coord) is False


def test_random_lagrangians_against_oracle():
    rng = random.Random(7)
    for _ in range(5):
        lagr = epw.random_lagrangian(rng)
        assert epw.is_lagrangian(lagr)
        assert epw.self_duality_check(lagr) == epw.self_duality_oracle(lagr)


def test_dual_rebuild(generators):
    assert epw.dual_rebuild_check(list(generators))


def test_restrict_to_line_examples():
    f = fixtures.sextic_poly()
    g = epw.restrict_to_line(f, [1, 0, 0, 0, 0, 0], [0, 1, 1, 1, 1, 1])
    assert g == fixtures.order5_line_poly()
    pol, inf = epw.binary_form_to_poly1(g)
    assert inf == 0
    assert pol == Poly1([Fraction(c) for c in [5, -12, 0, 10, 0, 0, 1]])
    pattern = sorted(
        m for fac, m in squarefree_decomposition(pol) for _ in range(fac.degree())
    )
    assert pattern == [1, 1, 2, 2]
    with pytest.raises(ValueError):
        epw.restrict_to_line(f, [1, 0, 0, 0, 0, 0], [2, 0, 0, 0, 0, 0])
    # a line inside the sextic gives the zero form
    zero_line = epw.restrict_to_line(MultiPoly.zero(6), [1, 0] + [0] * 4, [0, 1] + [0] * 4)
    assert zero_line.is_zero()


def test_fixed_loci(table660, labeled_classes):
    tbl, lab = table660, labeled_classes
    c6 = group._v6_matrix(tbl.elements[lab["c"][0]])
    dims = sorted(len(kb[0]) for _, kb in epw.fixed_locus([list(r) for r in c6]))
    assert dims == [1] * 6
    a6 = group._v6_matrix(tbl.elements[lab["a"][0]])
    dims = sorted(len(kb[0]) for _, kb in epw.fixed_locus([list(r) for r in a6]))
    assert dims == [1, 1, 1, 1, 2]
    s6 = group._v6_matrix(tbl.elements[lab["b3"][0]])
    dims = sorted(len(kb[0]) for _, kb in epw.fixed_locus([list(r) for r in s6]))
    assert dims == [2, 4]


def test_fixed_point_counts_fast(table660, labeled_classes):
    a_rows = epw.build_A()
    f = fixtures.sextic_poly()
    for lab, order in (("c", 11), ("a", 5)):
        g6 = group._v6_matrix(table660.elements[labeled_classes[lab][0]])
        count, _ = epw.sextic_fixed_point_count([list(r) for r in g6], a_rows, f)
        assert count == fixtures.SEXTIC_FIXED_COUNTS[order]
    s6 = group._v6_matrix(table660.elements[labeled_classes["b3"][0]])
    count, _ = epw.sextic_fixed_point_count([list(r) for r in s6], a_rows, f)
    assert count is None


@pytest.mark.slow
def test_fixed_point_counts_slow(table660, labeled_classes):
    a_rows = epw.build_A()
    f = fixtures.sextic_poly()
    for lab, order in (("b", 6), ("b2", 3)):
        g6 = group._v6_matrix(table660.elements[labeled_classes[lab][0]])
        count, details = epw.sextic_fixed_point_count([list(r) for r in g6], a_rows, f)
        assert count == fixtures.SEXTIC_FIXED_COUNTS[order]
        for kind, pat in details:
            if kind == "line":
                assert pat == [1, 1, 1, 1, 2]


def test_order2_line_squarefree(table660, labeled_classes):
    s6 = group._v6_matrix(table660.elements[labeled_classes["b3"][0]])
    for _, kb in epw.fixed_locus([list(r) for r in s6]):
        if len(kb[0]) == 2:
            p = [kb[i][0] for i in range(6)]
            q = [kb[i][1] for i in range(6)]
            pattern = epw.line_intersection_pattern(fixtures.sextic_poly(), p, q)
            assert pattern == [1] * 6


def test_stratum_sextic_consistency_random():
    rng = random.Random(11)
    a_rows = epw.build_A()
    f = fixtures.sextic_poly()
    checked = 0
    while checked < 100:
        x = [Fraction(rng.randint(-3, 3)) for _ in range(6)]
        if not any(x):
            continue
        assert (epw.stratum(a_rows, x) >= 1) == (f.evaluate(x) == 0)
        checked += 1


def test_sextic_invariance(generators):
    f = fixtures.sextic_poly()
    for g in generators:
        g6 = group._v6_matrix(g)
        images = []
        for i in range(6):
            img = MultiPoly(6)
            for j in range(6):
                e = g6[i][j]
                if not e.is_zero():
                    img = img + MultiPoly.var(j, 6, e)
            images.append(img)
        assert f.substitute(images) == f


def test_quadric_invariance(generators):
    q = fixtures.invariant_quadric()
    b = [[Fraction(0)] * 10 for _ in range(10)]
    for e, coeff in q.terms.items():
        idx = [i for i, k in enumerate(e) if k]
        if len(idx) == 1:
            b[idx[0]][idx[0]] += Fraction(coeff)
        else:
            i, j = idx
            b[i][j] += Fraction(coeff, 2)
            b[j][i] += Fraction(coeff, 2)
    for g in generators:
        m = [list(r) for r in group._wedge2_matrix(g)]
        mt = [list(r) for r in zip(*m)]
        lhs = linalg.mat_mul(linalg.mat_mul(mt, b), m)
        assert linalg.mat_eq(lhs, [[Fraction(x) for x in row] for row in b])
