"""Hermitian lattices over the order Z[w], w^2 = -w - 3.

The rank-5 positive definite unimodular Hermitian form with an order-11
symmetry is fixed as a transcription; the package recomputes the form it
induces on the wedge square (rank 10), compares entrywise against the
transcribed rank-10 matrix, and reads off polarization invariants from
characteristic polynomials.

Determinants over the order are computed two ways: a division-free
subset-expansion over the ring itself, and Gaussian elimination after
embedding into the conductor-11 cyclotomic field.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from . import fixtures, linalg
from .cyclo import CycloNum, QuadInt


def build_Hprime():
    """The rank-5 positive definite unimodular Hermitian Gram matrix."""
    return fixtures.hprime_matrix()


def is_hermitian_matrix(m) -> bool:
    n = len(m)
    for i in range(n):
        if not m[i][i].is_rational_integer():
            return False
        for j in range(n):
            if m[i][j] != m[j][i].conj():
                return False
    return True


def ring_det(m):
    """Division-free determinant over the order (column-subset dynamic
    programming); exact for any commutative-ring entries."""
    n = len(m)
    level = {(): QuadInt(1)}
    for row in range(n):
        nxt = {}
        for cols, val in level.items():
            for c in range(n):
                if c in cols:
                    continue
                entry = m[row][c]
                if entry.is_zero():
                    continue
                pos = sum(1 for x in cols if x < c)
                sign = 1 if (len(cols) - pos) % 2 == 0 else -1
                key = tuple(sorted(cols + (c,)))
                term = val * entry
                if sign < 0:
                    term = -term
                acc = nxt.get(key)
                nxt[key] = term if acc is None else acc + term
        level = nxt
    return level.get(tuple(range(n)), QuadInt(0))


def _embed(m):
    return [[e.to_cyclo() for e in row] for row in m]


def herm_det(m) -> int:
    """Exact determinant of a Hermitian matrix; must be a rational integer.

    Computed over the cyclotomic embedding and cross-checked against the
    division-free ring determinant."""
    field_det = linalg.det(_embed(m))
    ring = ring_det(m)
    if isinstance(field_det, CycloNum):
        if not field_det.is_rational():
            raise ArithmeticError("determinant not rational: input not Hermitian?")
        frac = field_det.to_fraction()
    else:
        frac = Fraction(field_det)
    if frac.denominator != 1:
        raise ArithmeticError("non-integer determinant")
    value = int(frac)
    if ring != QuadInt(value):
        raise ArithmeticError("ring and field determinants disagree")
    return value


def leading_minor_values(m):
    """Determinants of the leading principal submatrices, as integers."""
    out = []
    for k in range(1, len(m) + 1):
        sub = [row[:k] for row in m[:k]]
        out.append(herm_det(sub))
    return out


def is_positive_definite(m) -> bool:
    """All leading principal minors strictly positive (exact integers)."""
    if not is_hermitian_matrix(m):
        raise ValueError("positive definiteness is for Hermitian matrices")
    return all(v > 0 for v in leading_minor_values(m))


WEDGE_BASIS = tuple(combinations(range(5), 2))


def induced_wedge2(m):
    """The rank-10 Hermitian form induced on the wedge square:
    H(x1^x2, x3^x4) = H'(x1,x3) H'(x2,x4) - H'(x1,x4) H'(x2,x3),
    in the basis (e12, e13, e14, e15, e23, e24, e25, e34, e35, e45)."""
    out = []
    for (i, j) in WEDGE_BASIS:
        row = []
        for (k, l) in WEDGE_BASIS:
            row.append(m[i][k] * m[j][l] - m[i][l] * m[j][k])
        out.append(tuple(row))
    return tuple(out)


def matches_mat10(computed):
    """Entrywise comparison with the transcribed rank-10 matrix; returns
    (True, None) or (False, (i, j, computed, expected))."""
    expected = fixtures.mat10_matrix()
    for i in range(10):
        for j in range(10):
            if computed[i][j] != expected[i][j]:
                return False, (i, j, computed[i][j], expected[i][j])
    return True, None


def polarization_invariants(m):
    """Intersection-number invariants read off the characteristic
    polynomial: entry j is the coefficient pattern value for T^j with the
    alternating-sign convention, so entry n is 1 and entry 0 is det(m)."""
    if not is_positive_definite(m):
        raise ValueError("polarization invariants need a positive definite matrix")
    n = len(m)
    cp = linalg.char_poly(_embed(m))
    out = []
    for j in range(n + 1):
        c = cp[j]
        if isinstance(c, CycloNum):
            if not c.is_rational():
                raise ArithmeticError("characteristic polynomial not rational")
            c = c.to_fraction()
        val = Fraction(c) * (-1) ** (n - j)
        if val.denominator != 1:
            raise ArithmeticError("non-integer invariant")
        out.append(int(val))
    return out


def binomial_invariants(n):
    return [comb(n, j) for j in range(n + 1)]
