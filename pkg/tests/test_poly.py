import random
from fractions import Fraction

import pytest

from kleinepw.poly import MultiPoly, Poly1, squarefree_decomposition, squarefree_part
from kleinepw.textform import PolyParseError, emit_polynomial, parse_polynomial


def rand_poly(rng, nvars=3, terms=4, deg=3):
    p = MultiPoly.zero(nvars)
    for _ in range(terms):
        e = tuple(rng.randint(0, deg) for _ in range(nvars))
        p = p + MultiPoly(nvars, {e: rng.randint(-4, 4)})
    return p


def test_ring_axioms_random():
    rng = random.Random(0)
    for _ in range(40):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a + (-a) == MultiPoly.zero(3)


def test_substitution_commutes_with_evaluation():
    rng = random.Random(1)
    for _ in range(20):
        p = rand_poly(rng, nvars=2)
        q0 = rand_poly(rng, nvars=2)
        q1 = rand_poly(rng, nvars=2)
        point = [Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))]
        composed = p.substitute([q0, q1])
        assert composed.evaluate(point) == p.evaluate(
            [q0.evaluate(point), q1.evaluate(point)]
        )


def test_exact_division():
    rng = random.Random(2)
    for _ in range(20):
        a = rand_poly(rng)
        b = rand_poly(rng)
        if b.is_zero():
            continue
        prod = a * b
        if prod.is_zero():
            continue
        assert prod.exact_div(b) == a
    x = MultiPoly.var(0, 2)
    y = MultiPoly.var(1, 2)
    with pytest.raises(ValueError):
        (x * x + y).exact_div(x + y)


def test_homogenize():
    x = MultiPoly.var(0, 2)
    y = MultiPoly.var(1, 2)
    p = x * x + y + 1
    h = p.homogenize(3, 0, degree=2)
    assert h.is_homogeneous()
    assert h.total_degree() == 2
    assert h.coefficient((2, 0, 0)) == 1  # the inserted variable squared


def test_squarefree_examples():
    # u^2 -> [(u, 2)]
    dec = squarefree_decomposition(Poly1([0, 0, 1]))
    assert len(dec) == 1 and dec[0][1] == 2 and dec[0][0].degree() == 1

    # the order-5 line section: squarefree part degree 4, gcd u^2 + u - 1
    p = Poly1([5, -12, 0, 10, 0, 0, 1])
    part = squarefree_part(p)
    assert part.degree() == 4
    g = Poly1([Fraction(c) for c in p.coeffs]).gcd(
        Poly1([Fraction(c) for c in p.coeffs]).derivative()
    )
    assert g == Poly1([Fraction(-1), Fraction(1), Fraction(1)])

    # (u-1)(u+1) -> single squarefree factor of multiplicity 1
    dec = squarefree_decomposition(Poly1([-1, 0, 1]))
    assert len(dec) == 1 and dec[0][1] == 1 and dec[0][0].degree() == 2

    with pytest.raises(ValueError):
        squarefree_decomposition(Poly1([]))


def test_squarefree_reassembly():
    rng = random.Random(3)
    for _ in range(10):
        # random monic product with repeated factors
        f1 = Poly1([Fraction(rng.randint(-3, 3)), Fraction(1)])
        f2 = Poly1([Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-2, 2)), Fraction(1)])
        p = f1 * f1 * f2
        dec = squarefree_decomposition(p)
        prod = Poly1.from_const(Fraction(1))
        for fac, mult in dec:
            for _ in range(mult):
                prod = prod * fac
        assert prod == p.monic()
        for i, (fa, _) in enumerate(dec):
            for fb, _ in dec[i + 1 :]:
                assert fa.gcd(fb).degree() == 0


def test_parser_examples():
    p = parse_polynomial("x0^6", 6)
    assert p.terms == {(6, 0, 0, 0, 0, 0): 1}
    p = parse_polynomial("-12*x0*x1*x2*x3*x4*x5", 6)
    assert p.terms == {(1, 1, 1, 1, 1, 1): -12}
    with pytest.raises(PolyParseError) as err:
        parse_polynomial("x0 + + x1", 2)
    assert err.value.col == 6
    with pytest.raises(PolyParseError):
        parse_polynomial("x9", 2)
    with pytest.raises(PolyParseError):
        parse_polynomial("x0^999999", 2)


def test_emit_round_trip():
    from kleinepw import fixtures

    f = fixtures.sextic_poly()
    text = emit_polynomial(f)
    again = parse_polynomial(text, 6)
    assert again == f
    assert emit_polynomial(again) == text
    q = fixtures.invariant_quadric()
    text_q = emit_polynomial(q, fixtures.PAIR_VARS)
    assert parse_polynomial(text_q, fixtures.PAIR_VARS) == q
