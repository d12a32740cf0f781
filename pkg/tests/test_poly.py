import random

import pytest
import sympy

from adreal.errors import DefectiveHint
from adreal.matrices import Matrix
from adreal.poly import candidate_roots, charpoly, deflate, evaluate, gaussian_divisors, gaussian_roots
from adreal.scalars import GaussianRational as G


def to_sympy(M):
    return sympy.Matrix([[sympy.Rational(x.re.numerator, x.re.denominator)
                          + sympy.I * sympy.Rational(x.im.numerator, x.im.denominator) for x in r]
                         for r in M.rows])


def test_charpoly_against_sympy():
    rng = random.Random(11)
    x = sympy.Symbol("x")
    for _ in range(15):
        n = rng.randint(1, 5)
        M = Matrix([[G(rng.randint(-3, 3), rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
        ours = charpoly(M)
        ref = sympy.Poly(to_sympy(M).charpoly(x).as_expr(), x).all_coeffs()[::-1]
        assert [sympy.nsimplify(sympy.Rational(c.re.numerator, c.re.denominator)
                                + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)) for c in ours] \
            == [sympy.expand(c) for c in ref]


def test_divisors():
    divs = gaussian_divisors((5, 0))
    assert len(divs) == 4  # 1, 2+i, 2-i, 5 up to units
    assert len(gaussian_divisors((2, 0))) == 3  # 1, 1+i, (1+i)^2 ~ 2
    assert len(gaussian_divisors((3, 0))) == 2


def test_roots_with_multiplicity():
    vals = [G(1, 1), G(1, 1), G(-2), G(0, -1), G(1, 2) / 3, G(0)]
    M = Matrix.diag(vals)
    roots, residual = gaussian_roots(charpoly(M))
    assert roots == {G(1, 1): 2, G(-2): 1, G(0, -1): 1, G(1, 2) / 3: 1, G(0): 1}
    assert residual == [G(1)]


def test_irreducible_residual():
    roots, residual = gaussian_roots([G(-2), G(0), G(1)])  # x^2 - 2
    assert roots == {} and len(residual) == 3
    roots, residual = gaussian_roots([G(2), G(0), G(-3), G(0), G(1)])  # (x^2-1)(x^2-2)
    assert roots == {G(1): 1, G(-1): 1} and len(residual) == 3


def test_hints():
    p = [G(1), G(0), G(1)]
    roots, _ = gaussian_roots(p, [G(0, 1)])
    assert roots == {G(0, 1): 1, G(0, -1): 1}
    with pytest.raises(DefectiveHint):
        gaussian_roots(p, [G(3)])


def test_deflate_and_evaluate():
    p = [G(-6), G(11), G(-6), G(1)]  # (x-1)(x-2)(x-3)
    assert evaluate(p, G(2)) == 0
    assert deflate(p, G(1)) == [G(6), G(-5), G(1)]
    assert G(3) in candidate_roots(p)
