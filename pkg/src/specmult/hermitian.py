"""Pattern-constrained Hermitian matrices over exact and floating scalars.

The exact scalar is a Gaussian rational (pair of arbitrary-precision
rationals); the floating scalar is the built-in complex. A matrix carries
its pattern graph: off-diagonal entry (i, j) is nonzero exactly when
{i, j} is an edge, and the diagonal is unconstrained (real).

Matrix file format: first line "n", then n rows of n whitespace-separated
entries. An exact entry looks like "3/4" or "1/2+2/3 i"; a floating entry
like "0.25" or "1.5-2.0 i". The imaginary unit is a separate "i" token
glued to the preceding coefficient during parsing.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    AlphaOutOfRange,
    DimensionMismatch,
    IndexOutOfRange,
    NotACycle,
    ParameterOutOfRange,
    ParseError,
    PatternMismatch,
)
from .graphs import Graph, SubgraphMap, VertexSet, induced_subgraph
from .structure import cycle_order, is_cycle_graph

_APPROX_HERMITIAN_TOL = 1e-12


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise ParameterOutOfRange(f"cannot coerce {x!r} to an exact rational")


@dataclass(frozen=True)
class ExactComplex:
    """Gaussian rational a + b*i with exact arithmetic."""

    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other) -> "ExactComplex":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ExactComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def __sub__(self, other) -> "ExactComplex":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ExactComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "ExactComplex":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "ExactComplex":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ExactComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ExactComplex":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = other.norm2()
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return ExactComplex(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other) -> "ExactComplex":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)} i"


def _coerce(x) -> ExactComplex | None:
    if isinstance(x, ExactComplex):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactComplex(x, 0)
    return None


EC_ZERO = ExactComplex(0, 0)
EC_ONE = ExactComplex(1, 0)

# The floating scalar is just the built-in complex.
ApproxComplex = complex

Scalar = Union[ExactComplex, complex]


def _is_finite_complex(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


@dataclass(frozen=True)
class HermitianMatrix:
    """n x n Hermitian matrix with a graph pattern.

    scalar is "exact" (ExactComplex entries) or "approx" (complex entries).
    Use from_rows for validated construction.
    """

    n: int
    entries: tuple[tuple[Scalar, ...], ...]
    pattern: Graph
    scalar: str

    @property
    def is_exact(self) -> bool:
        return self.scalar == "exact"

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i][j]

    def to_numpy(self):
        import numpy as np

        if self.is_exact:
            return np.array(
                [[e.to_complex() for e in row] for row in self.entries],
                dtype=complex,
            )
        return np.array(self.entries, dtype=complex)

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence],
        pattern: Graph | None = None,
        scalar: str | None = None,
    ) -> "HermitianMatrix":
        """Validated constructor; infers the pattern from the support if absent.

        Integers and Fractions coerce to exact scalars; floats and complex
        to approx. Mixed input upgrades everything to approx unless
        scalar="exact" is forced (decimal strings convert exactly).
        """
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square")
        if scalar is None:
            has_float = any(
                isinstance(x, (float, complex)) and not isinstance(x, bool)
                for r in rows
                for x in r
            )
            scalar = "approx" if has_float else "exact"
        if scalar not in ("exact", "approx"):
            raise ParameterOutOfRange("scalar must be 'exact' or 'approx'")
        if scalar == "exact":
            conv = []
            for r in rows:
                cr = []
                for x in r:
                    if isinstance(x, ExactComplex):
                        cr.append(x)
                    elif isinstance(x, complex):
                        raise ParameterOutOfRange(
                            "complex floats cannot be coerced to exact entries"
                        )
                    else:
                        cr.append(ExactComplex(_frac(x), 0))
                conv.append(tuple(cr))
            ents = tuple(conv)
            for i in range(n):
                if ents[i][i].im != 0:
                    raise PatternMismatch(f"diagonal entry {i} not real")
                for j in range(i + 1, n):
                    if ents[i][j] != ents[j][i].conjugate():
                        raise PatternMismatch(f"entries ({i},{j}) and ({j},{i}) not conjugate")
        else:
            ents = tuple(
                tuple(complex(x.to_complex() if isinstance(x, ExactComplex) else x) for x in r)
                for r in rows
            )
            for i in range(n):
                for j in range(n):
                    if not _is_finite_complex(ents[i][j]):
                        raise ParameterOutOfRange(f"entry ({i},{j}) is not finite")
            for i in range(n):
                if abs(ents[i][i].imag) > _APPROX_HERMITIAN_TOL:
                    raise PatternMismatch(f"diagonal entry {i} not real")
                for j in range(i + 1, n):
                    if abs(ents[i][j] - ents[j][i].conjugate()) > _APPROX_HERMITIAN_TOL:
                        raise PatternMismatch(f"entries ({i},{j}) and ({j},{i}) not conjugate")
        if pattern is None:
            edges = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if _entry_nonzero(ents[i][j])
            ]
            pattern = Graph(n, edges)
        mat = cls(n, ents, pattern, scalar)
        if not validate_pattern(mat, pattern):
            raise PatternMismatch("matrix support does not match the supplied graph")
        return mat


def _entry_nonzero(x: Scalar) -> bool:
    if isinstance(x, ExactComplex):
        return not x.is_zero()
    return x != 0


def validate_pattern(b: HermitianMatrix, g: Graph) -> bool:
    """True iff b is Hermitian, has a real diagonal, and its off-diagonal
    support is exactly the edge set of g."""
    if b.n != g.n:
        raise DimensionMismatch(f"matrix order {b.n} vs graph order {g.n}")
    for i in range(b.n):
        di = b.entries[i][i]
        if isinstance(di, ExactComplex):
            if di.im != 0:
                return False
        elif abs(di.imag) > _APPROX_HERMITIAN_TOL:
            return False
        for j in range(i + 1, b.n):
            x, y = b.entries[i][j], b.entries[j][i]
            if isinstance(x, ExactComplex):
                if x != y.conjugate():
                    return False
            elif abs(x - y.conjugate()) > _APPROX_HERMITIAN_TOL:
                return False
            if _entry_nonzero(x) != g.has_edge(i, j):
                return False
    return True


def adjacency_matrix(g: Graph, scalar: str = "exact") -> HermitianMatrix:
    """0/1 symmetric matrix of the graph with zero diagonal."""
    if scalar == "exact":
        one: Scalar = EC_ONE
        zero: Scalar = EC_ZERO
    elif scalar == "approx":
        one, zero = complex(1), complex(0)
    else:
        raise ParameterOutOfRange("scalar must be 'exact' or 'approx'")
    rows = [
        tuple(one if g.has_edge(i, j) else zero for j in range(g.n))
        for i in range(g.n)
    ]
    return HermitianMatrix(g.n, tuple(rows), g, scalar)


@dataclass(frozen=True)
class GainGraph:
    """Unit-modulus edge weights; the reverse orientation is the conjugate.

    gains holds one value per stored edge (u, v) with u < v, in the edge
    order of the base graph. Typical exact values are 1, -1, i, -i.
    """

    base: Graph
    gains: tuple[Scalar, ...]

    def gain(self, u: int, v: int) -> Scalar:
        flip = u > v
        if flip:
            u, v = v, u
        try:
            idx = self.base.edges.index((u, v))
        except ValueError:
            raise IndexOutOfRange(f"({u}, {v}) is not an edge") from None
        val = self.gains[idx]
        if flip:
            return val.conjugate()
        return val


def gain_graph(base: Graph, assignments) -> GainGraph:
    """Build a gain graph from {edge: unit value} (missing edges get gain 1).

    Exact values must have squared modulus exactly 1; floating values
    within 1e-12 of modulus 1.
    """
    table = {}
    for e, val in dict(assignments).items():
        u, v = int(e[0]), int(e[1])
        flip = u > v
        if flip:
            u, v = v, u
        if not base.has_edge(u, v):
            raise IndexOutOfRange(f"({u}, {v}) is not an edge")
        if isinstance(val, (int, Fraction)):
            val = ExactComplex(val, 0)
        if flip:
            val = val.conjugate() if isinstance(val, ExactComplex) else complex(val).conjugate()
        table[(u, v)] = val
    gains = []
    for e in base.edges:
        val = table.get(e, EC_ONE)
        if isinstance(val, ExactComplex):
            if val.norm2() != 1:
                raise ParameterOutOfRange(f"gain on {e} has squared modulus {val.norm2()}, not 1")
        else:
            val = complex(val)
            if abs(abs(val) - 1.0) > _APPROX_HERMITIAN_TOL:
                raise ParameterOutOfRange(f"gain on {e} has modulus {abs(val)}, not 1")
        gains.append(val)
    return GainGraph(base, tuple(gains))


@dataclass(frozen=True)
class CycleGain:
    """Product of gains around a fixed cycle orientation; unit modulus."""

    value: Scalar


def cycle_gain(phi: GainGraph) -> CycleGain:
    """Gain of the cycle, taken around the orientation starting at vertex 0."""
    if not is_cycle_graph(phi.base):
        raise NotACycle("gain product needs a cycle base graph")
    order = cycle_order(phi.base)
    total: Scalar = EC_ONE
    exact = all(isinstance(x, ExactComplex) for x in phi.gains)
    if not exact:
        total = complex(1)
    for k in range(len(order)):
        u, v = order[k], order[(k + 1) % len(order)]
        gval = phi.gain(u, v)
        if not exact and isinstance(gval, ExactComplex):
            gval = gval.to_complex()
        total = total * gval
    return CycleGain(total)


def a_alpha_gain(phi: GainGraph, alpha, scalar: str = "approx") -> HermitianMatrix:
    """alpha * (degree diagonal) + (1 - alpha) * gain adjacency.

    The default floating build accepts any real alpha in [0, 1); the exact
    build needs a rational alpha and exact gains.
    """
    alpha_f = float(alpha)
    if not (0 <= alpha_f < 1):
        raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {alpha}")
    g = phi.base
    if scalar == "exact":
        a = _frac(alpha) if not isinstance(alpha, float) else Fraction(alpha)
        rows = []
        for i in range(g.n):
            row: list[Scalar] = []
            for j in range(g.n):
                if i == j:
                    row.append(ExactComplex(a * g.degree(i), 0))
                elif g.has_edge(i, j):
                    gv = phi.gain(i, j)
                    if not isinstance(gv, ExactComplex):
                        raise ParameterOutOfRange("exact build needs exact gains")
                    row.append(ExactComplex(1 - a, 0) * gv)
                else:
                    row.append(EC_ZERO)
            rows.append(tuple(row))
        return HermitianMatrix(g.n, tuple(rows), g, "exact")
    if scalar != "approx":
        raise ParameterOutOfRange("scalar must be 'exact' or 'approx'")
    rows_c = []
    for i in range(g.n):
        row_c: list[complex] = []
        for j in range(g.n):
            if i == j:
                row_c.append(complex(alpha_f * g.degree(i)))
            elif g.has_edge(i, j):
                gv = phi.gain(i, j)
                gc = gv.to_complex() if isinstance(gv, ExactComplex) else complex(gv)
                row_c.append((1.0 - alpha_f) * gc)
            else:
                row_c.append(complex(0))
        rows_c.append(tuple(row_c))
    return HermitianMatrix(g.n, tuple(rows_c), g, "approx")


@dataclass(frozen=True)
class RandomWeightConfig:
    """Ranges for the exact sampler: numerators, denominators, diagonal."""

    num_lo: int = -10
    num_hi: int = 10
    den_hi: int = 4
    diag_lo: int = -10
    diag_hi: int = 10


def random_in_S(g: Graph, seed: int, config: RandomWeightConfig | None = None) -> HermitianMatrix:
    """Deterministic random exact Hermitian matrix with pattern g.

    Every edge weight is a nonzero Gaussian rational (zero draws are
    resampled); the diagonal is real rational.
    """
    cfg = config or RandomWeightConfig()
    rng = random.Random(seed)

    def draw_frac(lo: int, hi: int) -> Fraction:
        return Fraction(rng.randint(lo, hi), rng.randint(1, cfg.den_hi))

    ents: list[list[Scalar]] = [[EC_ZERO] * g.n for _ in range(g.n)]
    for i in range(g.n):
        ents[i][i] = ExactComplex(draw_frac(cfg.diag_lo, cfg.diag_hi), 0)
    for u, v in g.edges:
        while True:
            w = ExactComplex(
                draw_frac(cfg.num_lo, cfg.num_hi), draw_frac(cfg.num_lo, cfg.num_hi)
            )
            if not w.is_zero():
                break
        ents[u][v] = w
        ents[v][u] = w.conjugate()
    return HermitianMatrix(g.n, tuple(tuple(r) for r in ents), g, "exact")


def principal_submatrix(b: HermitianMatrix, keep: Iterable[int]) -> tuple[HermitianMatrix, SubgraphMap]:
    """Rows and columns restricted to keep, aligned with the induced subgraph."""
    sub = induced_subgraph(b.pattern, keep)
    ids = sub.to_parent
    rows = tuple(tuple(b.entries[i][j] for j in ids) for i in ids)
    return HermitianMatrix(len(ids), rows, sub.child, b.scalar), sub


# ---------------------------------------------------------------------------
# Matrix file format


def _format_entry(x: Scalar) -> str:
    if isinstance(x, ExactComplex):
        if x.im == 0:
            return str(x.re)
        sign = "+" if x.im > 0 else "-"
        return f"{x.re}{sign}{abs(x.im)} i"
    z = complex(x)
    if z.imag == 0:
        return repr(z.real)
    sign = "+" if z.imag > 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r} i"


def serialize_matrix(b: HermitianMatrix) -> str:
    lines = [str(b.n)]
    for row in b.entries:
        lines.append(" ".join(_format_entry(x) for x in row))
    return "\n".join(lines) + "\n"


def _split_real_imag(tok: str, line_no: int) -> tuple[str, str | None]:
    has_i = tok.endswith("i")
    if has_i:
        tok = tok[:-1]
    split_at = -1
    for k in range(1, len(tok)):
        if tok[k] in "+-" and tok[k - 1] not in "eE":
            split_at = k  # keep the last such sign: exponents are guarded above
    if has_i:
        if split_at < 0:
            return "0", tok or "1"
        return tok[:split_at], tok[split_at:]
    if split_at >= 0:
        raise ParseError(line_no, f"real entry {tok!r} has an embedded sign")
    return tok, None


def _parse_part(text: str, line_no: int):
    """One real coefficient: Fraction for p/q or integers, float for decimals."""
    if text in ("+", "-"):
        text += "1"
    try:
        if "." in text or "e" in text or "E" in text:
            return float(text)
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line_no, f"bad numeric literal {text!r}") from None


def parse_matrix(text: str, scalar: str | None = None) -> HermitianMatrix:
    """Parse the matrix file format; detects exact vs floating entries.

    scalar="exact" converts decimal literals to exact rationals;
    scalar="approx" lowers everything to floating complex.
    """
    lines = [
        (no, ln.strip())
        for no, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ParseError(0, "empty matrix file")
    head_no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(head_no, "first line must be the matrix order") from None
    if n < 0:
        raise ParseError(head_no, "matrix order must be nonnegative")
    if len(lines) - 1 != n:
        raise ParseError(head_no, f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    saw_float = False
    for no, ln in lines[1:]:
        raw = ln.split()
        merged: list[str] = []
        for tok in raw:
            if tok == "i" and merged:
                merged[-1] += "i"
            else:
                merged.append(tok)
        if len(merged) != n:
            raise ParseError(no, f"expected {n} entries, found {len(merged)}")
        row = []
        for tok in merged:
            re_s, im_s = _split_real_imag(tok, no)
            re_v = _parse_part(re_s, no)
            im_v = _parse_part(im_s, no) if im_s is not None else Fraction(0)
            if isinstance(re_v, float) or isinstance(im_v, float):
                saw_float = True
            row.append((re_v, im_v))
        rows.append(row)
    if scalar is None:
        scalar = "approx" if saw_float else "exact"
    if scalar == "exact":
        ents = [
            [ExactComplex(Fraction(str(re)) if isinstance(re, float) else re,
                          Fraction(str(im)) if isinstance(im, float) else im)
             for re, im in row]
            for row in rows
        ]
    else:
        ents = [[complex(float(re), float(im)) for re, im in row] for row in rows]
    return HermitianMatrix.from_rows(ents, scalar=scalar)
