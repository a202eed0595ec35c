"""Eigenvalue multiplicity machinery.

Exact route: Gaussian elimination over Gaussian rationals for rank
(multiplicity of a rational eigenvalue is n - rank(B - lambda*I)), and
integer characteristic polynomials via Faddeev-LeVerrier for algebraic
eigenvalues described by their monic integer minimal polynomial.

Numeric route: Hermitian eigendecomposition with a residual bound of
10 * n * eps * ||B||  (c = 10; ||B|| is the spectral norm read off the
computed spectrum). Cluster counting refuses to guess: if an excluded
eigenvalue sits within 2*tol of the included cluster the call raises
instead of returning a number.

Polynomials are coefficient tuples, lowest degree first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, Union

from .errors import (
    AmbiguousCluster,
    ConvergenceFailure,
    NotAPath,
    ParameterOutOfRange,
    TimeBudgetExceeded,
)
from .hermitian import ExactComplex, HermitianMatrix
from .structure import is_path_graph, path_order

StopCheck = Union[Callable[[], bool], None]


def _maybe_stop(should_stop: StopCheck) -> None:
    if should_stop is not None and should_stop():
        raise TimeBudgetExceeded("computation cancelled by caller")


# ---------------------------------------------------------------------------
# Polynomials (coefficient tuples, lowest degree first)


def _trim(coeffs: Sequence) -> tuple:
    k = len(coeffs)
    while k > 0 and coeffs[k - 1] == 0:
        k -= 1
    return tuple(coeffs[:k])


def poly_degree(c: Sequence) -> int:
    return len(_trim(c)) - 1


def poly_add(a: Sequence, b: Sequence) -> tuple:
    n = max(len(a), len(b))
    return _trim([
        (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)
    ])


def poly_sub(a: Sequence, b: Sequence) -> tuple:
    n = max(len(a), len(b))
    return _trim([
        (a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)
    ])


def poly_mul(a: Sequence, b: Sequence) -> tuple:
    a, b = _trim(a), _trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_scale(a: Sequence, s) -> tuple:
    return _trim([s * x for x in a])


def poly_divmod(a: Sequence, b: Sequence) -> tuple[tuple, tuple]:
    """Division with remainder; exact in the coefficient ring when b is monic,
    otherwise performed over the rationals."""
    a, b = list(_trim(a)), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    db = len(b) - 1
    if lead != 1:
        a = [Fraction(x) for x in a]
        b = tuple(Fraction(x) for x in b)
    q = [0] * max(len(a) - db, 0)
    while len(_trim(a)) - 1 >= db:
        a = list(_trim(a))
        da = len(a) - 1
        c = a[-1] if lead == 1 else a[-1] / lead
        q[da - db] = c
        for k in range(db + 1):
            a[da - db + k] -= c * b[k]
    return _trim(q), _trim(a)


def poly_derivative(a: Sequence) -> tuple:
    return _trim([k * a[k] for k in range(1, len(a))])


def poly_eval(a: Sequence, x):
    acc = 0
    for c in reversed(_trim(a)):
        acc = acc * x + c
    return acc


def _poly_monic(a: Sequence) -> tuple:
    a = _trim(a)
    if not a:
        return ()
    lead = Fraction(a[-1])
    return tuple(Fraction(x) / lead for x in a)


def poly_gcd(a: Sequence, b: Sequence) -> tuple:
    """Monic gcd over the rationals."""
    a, b = _poly_monic(a), _poly_monic(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, _poly_monic(r)
    return a


def poly_primitive_int(a: Sequence) -> tuple[int, ...]:
    """Clear denominators and divide by the content; positive leading coeff."""
    a = _trim(a)
    if not a:
        return ()
    fr = [Fraction(x) for x in a]
    den = math.lcm(*[f.denominator for f in fr])
    ints = [int(f * den) for f in fr]
    g = math.gcd(*[abs(v) for v in ints])
    ints = [v // g for v in ints]
    if ints[-1] < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial, lowest degree first, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence):
        cs = _trim([int(c) for c in coeffs])
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def eval(self, x):
        return poly_eval(self.coeffs, x)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                term = xs if mag == 1 else f"{mag}{xs}"
            parts.append(("-" if c < 0 else "+", term))
        sign0, t0 = parts[0]
        out = ("-" if sign0 == "-" else "") + t0
        for sign, t in parts[1:]:
            out += f" {sign} {t}"
        return out


@dataclass(frozen=True)
class RationalPolynomial:
    """Rational-coefficient polynomial for matrices with fractional entries."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence):
        cs = _trim([Fraction(c) for c in coeffs])
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, x):
        return poly_eval(self.coeffs, x)


AnyPolynomial = Union[IntPolynomial, RationalPolynomial]


def squarefree_decomposition(p: AnyPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun decomposition p = prod a_i^i with the a_i squarefree and coprime.

    Returns primitive integer factors with their multiplicities i, constant
    content dropped.
    """
    f = _poly_monic(p.coeffs)
    if len(f) <= 1:
        return []
    df = poly_derivative(f)
    g = poly_gcd(f, df)
    w, _ = poly_divmod(f, g)
    y, _ = poly_divmod(df, g)
    z = poly_sub(y, poly_derivative(w))
    out = []
    i = 1
    while len(w) > 1:
        a = poly_gcd(w, z)
        if len(a) > 1:
            out.append((IntPolynomial(poly_primitive_int(a)), i))
        w, _ = poly_divmod(w, a)
        y, _ = poly_divmod(z, a)
        z = poly_sub(y, poly_derivative(w))
        i += 1
    return out


def irreducible_factors(p: AnyPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Irreducible integer factors with multiplicities (constants dropped)."""
    import sympy

    x = sympy.Symbol("x")
    expr = sympy.Poly(list(reversed([Fraction(c) for c in p.coeffs])), x, domain="QQ")
    _, factors = expr.factor_list()
    out = []
    for fac, mult in factors:
        cs = [Fraction(c) for c in reversed(fac.all_coeffs())]
        if len(_trim(cs)) <= 1:
            continue
        out.append((IntPolynomial(poly_primitive_int(cs)), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def poly_is_irreducible(p: IntPolynomial) -> bool:
    if p.degree < 1:
        return False
    facs = irreducible_factors(p)
    return len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree == p.degree


# ---------------------------------------------------------------------------
# Cyclotomic polynomials and minimal polynomials of 2cos(2k*pi/n)


def _divisors(m: int) -> list[int]:
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
        d += 1
    return sorted(out)


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, lowest degree first."""
    if m < 1:
        raise ParameterOutOfRange("cyclotomic index must be >= 1")
    p: tuple = tuple([-1] + [0] * (m - 1) + [1])
    for d in _divisors(m):
        if d == m:
            continue
        p, r = poly_divmod(p, cyclotomic(d))
        if r:
            raise AssertionError("cyclotomic division left a remainder")
    return tuple(int(c) for c in p)


def min_poly_2cos(n: int, k: int) -> IntPolynomial:
    """Monic integer minimal polynomial of 2cos(2k*pi/n).

    Valid for n >= 3 and 1 <= k <= ceil(n/2) - 1, which keeps the angle
    strictly inside (0, pi).
    """
    if n < 3:
        raise ParameterOutOfRange(f"need n >= 3, got {n}")
    if not (1 <= k <= (n + 1) // 2 - 1):
        raise ParameterOutOfRange(f"k={k} outside 1..{(n + 1) // 2 - 1} for n={n}")
    m = n // math.gcd(n, k)
    phi = cyclotomic(m)
    d2 = len(phi) - 1
    if d2 % 2 != 0:
        raise AssertionError("cyclotomic degree must be even for m >= 3")
    big_d = d2 // 2
    # strip psi out of  z^D * psi(z + 1/z) = Phi_m(z), top degree down
    residue = list(phi)
    psi = [0] * (big_d + 1)
    for j in range(big_d, -1, -1):
        c = residue[big_d + j] if big_d + j < len(residue) else 0
        psi[j] = c
        if c != 0:
            term = poly_scale(
                poly_mul([0] * (big_d - j) + [1], _binomial_z2_plus_1(j)), c
            )
            for idx, val in enumerate(term):
                residue[idx] -= val
    if any(residue):
        raise AssertionError("coefficient matching left a nonzero residue")
    return IntPolynomial(psi)


def _binomial_z2_plus_1(j: int) -> tuple[int, ...]:
    """(z^2 + 1)^j as a coefficient tuple."""
    out: tuple = (1,)
    for _ in range(j):
        out = poly_mul(out, (1, 0, 1))
    return out


def scale_minpoly(mu: IntPolynomial, d: int) -> IntPolynomial:
    """Monic integer minimal polynomial of d*x given the one of x."""
    if d == 1:
        return mu
    deg = mu.degree
    return IntPolynomial([mu.coeffs[j] * d ** (deg - j) for j in range(deg + 1)])


def multiplicity_via_minpoly(p: AnyPolynomial, mu: IntPolynomial) -> int:
    """Largest m >= 0 with mu^m dividing p exactly (over the rationals).

    A non-monic divisor is fine; the division then runs over Fractions.
    """
    if mu.degree < 1:
        raise ParameterOutOfRange("divisor must be nonconstant")
    rem = tuple(p.coeffs)
    count = 0
    while len(rem) > 1:
        q, r = poly_divmod(rem, mu.coeffs)
        if r:
            break
        rem = q
        count += 1
    return count


# ---------------------------------------------------------------------------
# Exact characteristic polynomial (Faddeev-LeVerrier over Gaussian integers)


def _entry_den_lcm(b: HermitianMatrix) -> int:
    d = 1
    for row in b.entries:
        for e in row:
            d = math.lcm(d, e.re.denominator, e.im.denominator)
    return d


def scaled_char_poly(b: HermitianMatrix, should_stop: StopCheck = None) -> tuple[IntPolynomial, int]:
    """Integer charpoly of d*B together with the denominator-clearing d.

    Roots correspond by lambda <-> d*lambda; d = 1 when the entries are
    Gaussian integers.
    """
    if not b.is_exact:
        raise ParameterOutOfRange("exact characteristic polynomial needs exact entries")
    n = b.n
    d = _entry_den_lcm(b)
    cre = [[int(e.re * d) for e in row] for row in b.entries]
    cim = [[int(e.im * d) for e in row] for row in b.entries]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mre = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    mim = [[0] * n for _ in range(n)]
    rng = range(n)
    for k in range(1, n + 1):
        _maybe_stop(should_stop)
        nre = [[0] * n for _ in rng]
        nim = [[0] * n for _ in rng]
        for i in rng:
            cri, cii = cre[i], cim[i]
            nri, nii = nre[i], nim[i]
            for t in rng:
                ar, ai = cri[t], cii[t]
                if ar == 0 and ai == 0:
                    continue
                mrt, mit = mre[t], mim[t]
                for j in rng:
                    br, bi = mrt[j], mit[j]
                    nri[j] += ar * br - ai * bi
                    nii[j] += ar * bi + ai * br
        tr_re = sum(nre[i][i] for i in rng)
        tr_im = sum(nim[i][i] for i in rng)
        if tr_im != 0:
            raise AssertionError("Hermitian trace came out non-real")
        if tr_re % k != 0:
            raise AssertionError("trace not divisible in exact recursion")
        c = -(tr_re // k)
        coeffs[n - k] = c
        for i in rng:
            nre[i][i] += c
        mre, mim = nre, nim
    return IntPolynomial(coeffs), d


@lru_cache(maxsize=4096)
def _scaled_char_poly_cached(b: HermitianMatrix) -> tuple[IntPolynomial, int]:
    # exhaustive sweeps hit the same small principal submatrices constantly
    return scaled_char_poly(b)


def char_poly_exact(b: HermitianMatrix, should_stop: StopCheck = None) -> AnyPolynomial:
    """det(xI - B), exact. Integer coefficients whenever the entries are
    Gaussian integers, rational coefficients otherwise."""
    scaled, d = scaled_char_poly(b, should_stop)
    if d == 1:
        return scaled
    n = b.n
    coeffs = [Fraction(scaled.coeffs[k], d ** (n - k)) for k in range(n + 1)]
    if all(c.denominator == 1 for c in coeffs):
        return IntPolynomial([int(c) for c in coeffs])
    return RationalPolynomial(coeffs)


# ---------------------------------------------------------------------------
# Exact rank / multiplicity


def exact_rank(rows: Sequence[Sequence[ExactComplex]], should_stop: StopCheck = None) -> int:
    """Rank over the Gaussian rationals by fraction-exact elimination."""
    work = [list(r) for r in rows]
    nr = len(work)
    nc = len(work[0]) if nr else 0
    rank = 0
    for col in range(nc):
        if rank == nr:
            break
        _maybe_stop(should_stop)
        piv = None
        for r in range(rank, nr):
            if not work[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        pv = work[rank][col]
        prow = work[rank]
        for r in range(rank + 1, nr):
            lead = work[r][col]
            if lead.is_zero():
                continue
            f = lead / pv
            row = work[r]
            for c in range(col, nc):
                row[c] = row[c] - f * prow[c]
        rank += 1
    return rank


@dataclass(frozen=True)
class AlgebraicEigenvalue:
    """Real algebraic number described by its primitive integer minimal
    polynomial (monic exactly when the number is an algebraic integer) plus
    a floating locator for reporting."""

    minpoly: IntPolynomial
    approx: float

    @classmethod
    def from_2cos(cls, n: int, k: int) -> "AlgebraicEigenvalue":
        return cls(min_poly_2cos(n, k), 2.0 * math.cos(2.0 * math.pi * k / n))


EigenvalueLike = Union[int, Fraction, float, AlgebraicEigenvalue]


def describe_eigenvalue(lam: EigenvalueLike):
    """JSON-friendly descriptor for an eigenvalue."""
    if isinstance(lam, AlgebraicEigenvalue):
        return {
            "kind": "algebraic",
            "minpoly": list(lam.minpoly.coeffs),
            "approx": lam.approx,
        }
    if isinstance(lam, (int, Fraction)) and not isinstance(lam, bool):
        return {"kind": "rational", "value": str(Fraction(lam))}
    return {"kind": "float", "value": float(lam)}


def eigenvalue_float(lam: EigenvalueLike) -> float:
    if isinstance(lam, AlgebraicEigenvalue):
        return lam.approx
    return float(lam)


@dataclass(frozen=True)
class MultiplicityResult:
    lam: EigenvalueLike
    multiplicity: int
    method: str  # ExactRank | CharPolyDivision | NumericCluster
    tolerance: float

    def as_json(self) -> dict:
        return {
            "lambda": describe_eigenvalue(self.lam),
            "multiplicity": self.multiplicity,
            "method": self.method,
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class SpectrumNumeric:
    values: tuple[float, ...]
    residual_bound: float


def multiplicity_exact_rational(
    b: HermitianMatrix, lam, should_stop: StopCheck = None
) -> MultiplicityResult:
    """n - rank(B - lambda*I) over the Gaussian rationals."""
    if not b.is_exact:
        raise ParameterOutOfRange("exact multiplicity needs exact entries")
    lam = Fraction(lam)
    rows = [
        [
            b.entries[i][j] - ExactComplex(lam, 0) if i == j else b.entries[i][j]
            for j in range(b.n)
        ]
        for i in range(b.n)
    ]
    rank = exact_rank(rows, should_stop)
    return MultiplicityResult(lam, b.n - rank, "ExactRank", 0.0)


def multiplicity_exact_algebraic(
    b: HermitianMatrix, lam: AlgebraicEigenvalue, should_stop: StopCheck = None
) -> MultiplicityResult:
    """Multiplicity of an algebraic eigenvalue by charpoly / minpoly division."""
    if should_stop is None:
        scaled, d = _scaled_char_poly_cached(b)
    else:
        scaled, d = scaled_char_poly(b, should_stop)
    nu = scale_minpoly(lam.minpoly, d)
    if not nu.is_monic:
        # the minimal polynomial of d*lambda, normalized primitive
        nu = IntPolynomial(poly_primitive_int(nu.coeffs))
    m = multiplicity_via_minpoly(scaled, nu)
    return MultiplicityResult(lam, m, "CharPolyDivision", 0.0)


def eigenvalues_numeric(b: HermitianMatrix) -> SpectrumNumeric:
    """All eigenvalues, ascending, with the documented residual bound."""
    import numpy as np

    mat = b.to_numpy()
    if not np.all(np.isfinite(mat)):
        raise ParameterOutOfRange("matrix entries must be finite")
    try:
        vals = np.linalg.eigvalsh(mat)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigendecomposition failed: {exc}") from exc
    vals = [float(v) for v in vals]
    norm = max((abs(v) for v in vals), default=0.0)
    eps = float(np.finfo(np.float64).eps)
    bound = 10.0 * max(b.n, 1) * eps * norm
    return SpectrumNumeric(tuple(sorted(vals)), bound)


def multiplicity_numeric(b: HermitianMatrix, lam, tol: float = 1e-8) -> MultiplicityResult:
    """Count eigenvalues within tol of lambda, refusing ambiguous clusters."""
    lam_f = eigenvalue_float(lam)
    spec = eigenvalues_numeric(b)
    if not tol > spec.residual_bound:
        raise ParameterOutOfRange(
            f"tol {tol} must exceed the residual bound {spec.residual_bound}"
        )
    included = [v for v in spec.values if abs(v - lam_f) <= tol]
    excluded = [v for v in spec.values if abs(v - lam_f) > tol]
    if included and excluded:
        gap = min(abs(e - i) for e in excluded for i in included)
        if gap < 2.0 * tol:
            raise AmbiguousCluster(
                f"eigenvalue at distance {gap} from the cluster around {lam_f}",
                gap=gap,
                tol=tol,
            )
    elif not included and excluded:
        near = min(abs(e - lam_f) for e in excluded)
        if near < 2.0 * tol:
            raise AmbiguousCluster(
                f"no eigenvalue within tol but one within {near} of {lam_f}",
                gap=near,
                tol=tol,
            )
    return MultiplicityResult(lam, len(included), "NumericCluster", tol)


def multiplicity(
    b: HermitianMatrix, lam: EigenvalueLike, tol: float = 1e-8, should_stop: StopCheck = None
) -> MultiplicityResult:
    """Dispatch to the strongest applicable method for this matrix/eigenvalue."""
    if b.is_exact:
        if isinstance(lam, AlgebraicEigenvalue):
            return multiplicity_exact_algebraic(b, lam, should_stop)
        if isinstance(lam, (int, Fraction)) and not isinstance(lam, bool):
            return multiplicity_exact_rational(b, lam, should_stop)
        return multiplicity_numeric(b, float(lam), tol)
    return multiplicity_numeric(b, lam, tol)


# ---------------------------------------------------------------------------
# Path spectra


def path_spectrum_membership(b_p: HermitianMatrix, lam: EigenvalueLike, tol: float = 1e-8) -> bool:
    """Is lambda an eigenvalue of a path-patterned matrix?

    Exact matrix + rational lambda: three-term recurrence on the leading
    principal minors of B - lambda*I, exact. Exact matrix + algebraic
    lambda: minimal-polynomial divisibility of the charpoly. Floating
    inputs fall back to the numeric cluster at tol (not certified).
    """
    g = b_p.pattern
    if not is_path_graph(g):
        raise NotAPath("pattern must be a path")
    if b_p.is_exact and isinstance(lam, (int, Fraction)) and not isinstance(lam, bool):
        lam = Fraction(lam)
        order = path_order(g)
        prev2, prev1 = Fraction(1), Fraction(1)
        for idx, v in enumerate(order):
            diag = b_p.entries[v][v].re - lam
            if idx == 0:
                cur = diag
            else:
                u = order[idx - 1]
                off2 = b_p.entries[v][u].norm2()
                cur = diag * prev1 - off2 * prev2
            prev2, prev1 = prev1, cur
        return prev1 == 0
    if b_p.is_exact and isinstance(lam, AlgebraicEigenvalue):
        scaled, d = _scaled_char_poly_cached(b_p)
        nu = scale_minpoly(lam.minpoly, d)
        if not nu.is_monic:
            nu = IntPolynomial(poly_primitive_int(nu.coeffs))
        return multiplicity_via_minpoly(scaled, nu) >= 1
    try:
        res = multiplicity_numeric(b_p, eigenvalue_float(lam), tol)
    except AmbiguousCluster:
        return True
    return res.multiplicity >= 1
