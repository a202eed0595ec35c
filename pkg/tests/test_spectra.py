import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from specmult.errors import AmbiguousCluster, ParameterOutOfRange
from specmult.graphs import cycle_graph, path_graph, star_graph
from specmult.hermitian import (
    ExactComplex,
    HermitianMatrix,
    adjacency_matrix,
    random_in_S,
)
from specmult.spectra import (
    AlgebraicEigenvalue,
    IntPolynomial,
    char_poly_exact,
    cyclotomic,
    describe_eigenvalue,
    eigenvalues_numeric,
    exact_rank,
    irreducible_factors,
    min_poly_2cos,
    multiplicity,
    multiplicity_exact_rational,
    multiplicity_numeric,
    multiplicity_via_minpoly,
    path_spectrum_membership,
    poly_divmod,
    poly_primitive_int,
    scale_minpoly,
    scaled_char_poly,
    squarefree_decomposition,
)

X = sympy.symbols("x")


def _sympy_matrix(b: HermitianMatrix) -> sympy.Matrix:
    rows = []
    for row in b.entries:
        out = []
        for e in row:
            out.append(sympy.Rational(e.re) + sympy.I * sympy.Rational(e.im))
        rows.append(out)
    return sympy.Matrix(rows)


def test_poly_divmod_exact_and_fractional():
    # (x^2 - 1) = (x - 1)(x + 1)
    q, r = poly_divmod((-1, 0, 1), (-1, 1))
    assert q == (1, 1) and r == ()
    # non-monic divisor lifts to rationals: x^2 / (2x) = x/2
    q, r = poly_divmod((0, 0, 1), (0, 2))
    assert q == (0, Fraction(1, 2)) and r == ()


def test_poly_primitive_int():
    assert poly_primitive_int([Fraction(1, 2), Fraction(3, 2)]) == (1, 3)
    assert poly_primitive_int([-4, -8]) == (1, 2)  # positive leading coefficient
    assert poly_primitive_int([0, Fraction(0)]) == ()


def test_int_polynomial_normalization():
    p = IntPolynomial((1, 2, 1))
    assert p.degree == 2 and p.is_monic
    assert IntPolynomial((1, 0)).coeffs == (1,)  # trailing zeros trimmed
    assert IntPolynomial(()).coeffs == ()
    assert str(IntPolynomial((-1, 0, 4))) == "4x^2 - 1"


def test_squarefree_decomposition_matches_sympy():
    rng = random.Random(5)
    for _ in range(25):
        roots = [rng.randint(-3, 3) for _ in range(rng.randint(1, 6))]
        poly = sympy.Poly(sympy.prod([(X - r) for r in roots]), X)
        coeffs = tuple(reversed([int(c) for c in poly.all_coeffs()]))
        ours = {
            m: f.coeffs
            for f, m in squarefree_decomposition(IntPolynomial(coeffs))
            if f.degree > 0
        }
        ref = {}
        for fac, m in sympy.factor_list(poly.as_expr())[1]:
            fp = sympy.Poly(fac, X)
            key = m
            cs = tuple(reversed([int(c) for c in fp.all_coeffs()]))
            if key in ref:
                ref[key] = tuple(
                    int(c)
                    for c in reversed(
                        sympy.Poly(
                            sympy.Poly(list(reversed(ref[key])), X)
                            * sympy.Poly(list(reversed(cs)), X),
                            X,
                        ).all_coeffs()
                    )
                )
            else:
                ref[key] = cs
        assert set(ours) == set(ref)
        for m in ours:
            assert ours[m] == ref[m]


def test_irreducible_factors_match_sympy():
    rng = random.Random(11)
    for _ in range(15):
        coeffs = [rng.randint(-4, 4) for _ in range(rng.randint(2, 6))] + [1]
        p = IntPolynomial(tuple(coeffs))
        ours = sorted((f.coeffs, m) for f, m in irreducible_factors(p))
        ref = []
        for fac, m in sympy.factor_list(sympy.Poly(list(reversed(coeffs)), X).as_expr())[1]:
            fp = sympy.Poly(fac, X)
            ref.append((tuple(reversed([int(c) for c in fp.all_coeffs()])), m))
        assert ours == sorted(ref)


def test_cyclotomic_against_sympy():
    for m in range(1, 25):
        ours = cyclotomic(m)
        ref = tuple(
            reversed([int(c) for c in sympy.Poly(sympy.cyclotomic_poly(m, X), X).all_coeffs()])
        )
        assert ours == ref


def test_min_poly_2cos_against_sympy():
    for n in range(3, 13):
        for k in range(1, (n + 1) // 2):
            mu = min_poly_2cos(n, k)
            val = 2 * sympy.cos(2 * sympy.pi * k / n)
            ref = sympy.minimal_polynomial(val, X)
            ref_coeffs = tuple(reversed([int(c) for c in sympy.Poly(ref, X).all_coeffs()]))
            assert mu.coeffs == ref_coeffs
            # the numeric locator lands on the intended root
            assert abs(float(val) - AlgebraicEigenvalue.from_2cos(n, k).approx) < 1e-12


def test_scale_minpoly():
    # minpoly of 2cos(2pi/5) is x^2 + x - 1; minpoly of 3x is x^2 + 3x - 9
    mu = min_poly_2cos(5, 1)
    assert mu.coeffs == (-1, 1, 1)
    nu = scale_minpoly(mu, 3)
    assert nu.coeffs == (-9, 3, 1)


def test_multiplicity_via_minpoly_handles_non_monic():
    # p = (2x - 1)^2 (x + 1) = 4x^3 - 3x + 1, mu = 2x - 1
    p = IntPolynomial((1, -3, 0, 4))
    mu = IntPolynomial((-1, 2))
    assert multiplicity_via_minpoly(p, mu) == 2
    with pytest.raises(ParameterOutOfRange):
        multiplicity_via_minpoly(p, IntPolynomial((5,)))


def test_scaled_char_poly_against_sympy():
    rng = random.Random(3)
    for _ in range(12):
        n = rng.randint(1, 5)
        from specmult.graphs import Graph

        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6
        ]
        g = Graph(n, edges)
        b = random_in_S(g, seed=rng.randrange(1 << 20))
        p, d = scaled_char_poly(b)
        m = _sympy_matrix(b)
        ref = sympy.Poly((d * m).charpoly(X).as_expr(), X)
        ref_coeffs = tuple(reversed([int(sympy.nsimplify(c)) for c in ref.all_coeffs()]))
        assert p.coeffs == ref_coeffs
        assert p.is_monic


def test_char_poly_exact_rational_case():
    b = adjacency_matrix(cycle_graph(4))
    p = char_poly_exact(b)
    # x^4 - 4x^2
    assert tuple(p.coeffs) == (0, 0, -4, 0, 1)


def test_exact_rank_against_sympy():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(1, 6)
        rows = [
            [
                ExactComplex(
                    Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                    Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                )
                for _ in range(n)
            ]
            for _ in range(n)
        ]
        ours = exact_rank(rows)
        m = sympy.Matrix(
            [
                [sympy.Rational(e.re) + sympy.I * sympy.Rational(e.im) for e in row]
                for row in rows
            ]
        )
        assert ours == m.rank()


def test_multiplicity_exact_rational_fixture():
    b = adjacency_matrix(cycle_graph(4))
    res = multiplicity_exact_rational(b, Fraction(0))
    assert res.multiplicity == 2 and res.method == "ExactRank"
    assert multiplicity_exact_rational(b, Fraction(2)).multiplicity == 1
    assert multiplicity_exact_rational(b, Fraction(5)).multiplicity == 0


def test_multiplicity_algebraic_vs_numeric():
    rng = random.Random(23)
    for n, k in [(5, 1), (8, 1), (8, 3), (12, 5)]:
        b = adjacency_matrix(cycle_graph(n))
        lam = AlgebraicEigenvalue.from_2cos(n, k)
        exact = multiplicity(b, lam).multiplicity
        numeric = multiplicity_numeric(b, lam.approx, 1e-8).multiplicity
        assert exact == numeric == 2


def test_multiplicity_algebraic_non_monic_minpoly():
    # lambda = 1/2 + cos(2pi/5): primitive minpoly is non-monic
    half = Fraction(1, 2)
    mu = min_poly_2cos(5, 1)
    assert mu.coeffs == (-1, 1, 1)  # x^2 + x - 1, root 2cos(2pi/5)
    # minpoly of 1/2 + t/2 where t = 2cos(2pi/5): substitute t = 2x - 1
    # into t^2 + t - 1 to get 4x^2 - 2x - 1
    val = 0.5 + math.cos(2 * math.pi / 5)
    lam = AlgebraicEigenvalue(IntPolynomial((-1, -2, 4)), val)
    # diagonal-shifted path realizes this eigenvalue: B = A(P_2)/2 + I/2 has
    # eigenvalues 1/2 +- 1/2; instead verify against a matrix with entry 1/2
    rows = [
        [ExactComplex(half), ExactComplex(half)],
        [ExactComplex(half), ExactComplex(half)],
    ]
    b = HermitianMatrix.from_rows(rows)
    # eigenvalues are 0 and 1; lam not among them
    assert multiplicity(b, lam).multiplicity == 0
    # and a matrix that genuinely has it: C_5 adjacency scaled by 1/2, shifted
    c5 = adjacency_matrix(cycle_graph(5))
    rows = [
        [
            ExactComplex(half if i == j else 0) + e * ExactComplex(half)
            for j, e in enumerate(row)
        ]
        for i, row in enumerate(c5.entries)
    ]
    b2 = HermitianMatrix.from_rows(rows, pattern=c5.pattern)
    res = multiplicity(b2, lam)
    assert res.multiplicity == 2 and res.method == "CharPolyDivision"


def test_eigenvalues_numeric_residual():
    b = adjacency_matrix(star_graph(3))
    spec = eigenvalues_numeric(b)
    assert len(spec.values) == 4
    assert abs(spec.values[-1] - math.sqrt(3)) < 1e-9
    assert spec.residual_bound < 1e-10


def test_multiplicity_numeric_tolerance_guards():
    b = adjacency_matrix(path_graph(3))
    with pytest.raises(ParameterOutOfRange):
        multiplicity_numeric(b, 0.0, 1e-17)
    # C_5 has a doubled pair split by ~0: huge tol merges distinct clusters
    c = adjacency_matrix(cycle_graph(5))
    with pytest.raises(AmbiguousCluster):
        multiplicity_numeric(c, 0.6, 1.3)


def test_multiplicity_dispatcher_routes():
    b = adjacency_matrix(cycle_graph(5))
    assert multiplicity(b, Fraction(2)).method == "ExactRank"
    lam = AlgebraicEigenvalue.from_2cos(5, 1)
    assert multiplicity(b, lam).method == "CharPolyDivision"
    assert multiplicity(b, 0.25).method == "NumericCluster"
    approx = adjacency_matrix(cycle_graph(5), scalar="approx")
    assert multiplicity(approx, Fraction(2)).method == "NumericCluster"


def test_path_spectrum_membership():
    p3 = adjacency_matrix(path_graph(3))  # eigenvalues -sqrt2, 0, sqrt2
    assert path_spectrum_membership(p3, Fraction(0))
    assert not path_spectrum_membership(p3, Fraction(1))
    lam = AlgebraicEigenvalue(IntPolynomial((-2, 0, 1)), math.sqrt(2))
    assert path_spectrum_membership(p3, lam)
    b = random_in_S(path_graph(4), seed=77)
    spec = eigenvalues_numeric(b)
    for v in spec.values:
        assert path_spectrum_membership(b, float(v), tol=1e-7)


def test_describe_eigenvalue_shapes():
    assert describe_eigenvalue(Fraction(-3, 2)) == {"kind": "rational", "value": "-3/2"}
    d = describe_eigenvalue(AlgebraicEigenvalue.from_2cos(5, 1))
    assert d["kind"] == "algebraic" and d["minpoly"] == [-1, 1, 1]
    assert describe_eigenvalue(1.5) == {"kind": "float", "value": 1.5}
