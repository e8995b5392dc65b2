"""Exact dense linear algebra over the rationals plus the numeric kernels:
characteristic polynomials, determinant point evaluation, a cyclic-Jacobi
symmetric eigensolver, Kronecker algebra, coronals, and real root extraction
for monic quadratics and cubics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = int | Fraction


class NotSquareError(ValueError):
    pass


class NotSymmetricError(ValueError):
    pass


class ComplexRootsError(ArithmeticError):
    """Real roots were expected but the discriminant is significantly negative."""


class Matrix:
    """Immutable dense matrix with exact integer or rational entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        data = tuple(tuple(row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("all rows must have the same length")
        self._rows = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, rows: int, cols: int) -> "Matrix":
        return cls([[1] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def require_square(self, op: str) -> None:
        if not self.is_square:
            raise NotSquareError(f"{op} needs a square matrix, got {self.rows}x{self.cols}")

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self._rows[i]

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return Matrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return Matrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __mul__(self, k: Scalar) -> "Matrix":
        return Matrix([x * k for x in row] for row in self._rows)

    __rmul__ = __mul__

    def __neg__(self) -> "Matrix":
        return self * -1

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.cols
        bt = list(zip(*other._rows)) if other._rows else [()] * cols
        return Matrix(
            [sum(a * b for a, b in zip(row, bt[j])) for j in range(cols)]
            for row in self._rows
        )

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._rows)) if self._rows else Matrix([])

    def trace(self) -> Scalar:
        self.require_square("trace")
        return sum(self._rows[i][i] for i in range(self.rows))

    def is_symmetric(self) -> bool:
        return self.is_square and self._rows == self.transpose()._rows

    def to_float(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self._rows]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self._rows)

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self._rows]!r})"


def block_matrix(blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a matrix from a 2-D grid of conforming blocks."""
    rows: list[list[Scalar]] = []
    for band in blocks:
        height = band[0].rows
        if any(b.rows != height for b in band):
            raise ValueError("blocks in a band must share their row count")
        for i in range(height):
            row: list[Scalar] = []
            for b in band:
                row.extend(b.row(i))
            rows.append(row)
    return Matrix(rows)


def permuted(m: Matrix, perm: Sequence[int]) -> Matrix:
    """Symmetric relabelling: entry (i, j) of the result is m[perm[i], perm[j]]."""
    m.require_square("permuted")
    return Matrix([[m[perm[i], perm[j]] for j in range(m.cols)] for i in range(m.rows)])


class Polynomial:
    """Univariate polynomial with exact rational coefficients, stored in
    ascending order with no trailing zeros."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def __call__(self, x):
        out = 0 if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self._coeffs):
            out = out * x + (c if isinstance(x, (int, Fraction)) else float(c))
        return out

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) - self

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self._coeffs)
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Polynomial([])
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other._coeffs) + 1, 0)
        d = other.degree
        lead = other.leading
        while len(rem) - 1 >= d and any(rem):
            k = len(rem) - 1
            if rem[k] == 0:
                rem.pop()
                continue
            f = rem[k] / lead
            quo[k - d] = f
            for j, b in enumerate(other._coeffs):
                rem[k - d + j] -= f * b
            rem.pop()
        return Polynomial(quo), Polynomial(rem)

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self * (1 / self.leading)

    @staticmethod
    def gcd(a: "Polynomial", b: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor by the Euclidean algorithm."""
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        return isinstance(other, Polynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k, c in enumerate(self._coeffs):
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{k}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]!r})"


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to Polynomial")


class RationalFunction:
    """Quotient of two polynomials, kept GCD-reduced with a monic denominator
    so that equal functions have equal representations."""

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = Polynomial([]), Polynomial([1])
        else:
            g = Polynomial.gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            num = num * (1 / lead)
            den = den * (1 / lead)
        self._num = num
        self._den = den

    @property
    def numerator(self) -> Polynomial:
        return self._num

    @property
    def denominator(self) -> Polynomial:
        return self._den

    def __add__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        return RationalFunction(
            self._num * other._den + other._num * self._den, self._den * other._den
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        return RationalFunction(
            self._num * other._den - other._num * self._den, self._den * other._den
        )

    def __rsub__(self, other) -> "RationalFunction":
        return _as_ratfunc(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        return RationalFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_ratfunc(other)
        return RationalFunction(self._num * other._den, self._den * other._num)

    def __call__(self, t0) -> Fraction:
        t0 = Fraction(t0)
        d = self._den(t0)
        if d == 0:
            raise ZeroDivisionError(f"pole at t = {t0}")
        return self._num(t0) / d

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other)
        return (
            isinstance(other, RationalFunction)
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __str__(self) -> str:
        return f"({self._num})/({self._den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self._num!r}, {self._den!r})"


def _as_ratfunc(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(_as_poly(x))


def char_poly_exact(m: Matrix) -> Polynomial:
    """det(tI - M) via the Faddeev-LeVerrier recurrence in exact arithmetic.

    For integer matrices the recurrence stays in integers; each division is
    checked to be exact.
    """
    m.require_square("char_poly_exact")
    n = m.rows
    if n == 0:
        return Polynomial([1])
    integral = all(
        isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
        for row in m._rows
        for x in row
    )
    if integral:
        a = [[int(x) for x in row] for row in m._rows]
    else:
        a = [[Fraction(x) for x in row] for row in m._rows]
    work = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs: list[Scalar] = [0] * (n + 1)
    coeffs[n] = 1
    for k in range(1, n + 1):
        prod = [
            [sum(a[i][l] * work[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(prod[i][i] for i in range(n))
        if integral:
            q, r = divmod(tr, k)
            if r:
                raise ArithmeticError(
                    "non-exact division in the characteristic polynomial recurrence"
                )
            ck = -q
        else:
            ck = -tr / k
        coeffs[n - k] = ck
        for i in range(n):
            prod[i][i] += ck
        work = prod
    return Polynomial(coeffs)


def _bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (destroys its argument)."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_exact_at(m: Matrix, t0) -> Fraction:
    """Exact evaluation of det(t0*I - M) by fraction-free elimination."""
    m.require_square("det_exact_at")
    t0 = Fraction(t0)
    n = m.rows
    if n == 0:
        return Fraction(1)
    rows: list[list[int]] = []
    scale = 1
    for i in range(n):
        row = [
            (t0 - Fraction(m[i, j])) if i == j else -Fraction(m[i, j])
            for j in range(n)
        ]
        lcm = math.lcm(*(x.denominator for x in row))
        rows.append([int(x * lcm) for x in row])
        scale *= lcm
    return Fraction(_bareiss_det(rows), scale)


def kronecker_product(a: Matrix, b: Matrix) -> Matrix:
    p, q = b.rows, b.cols
    out = [
        [a[i, j] * b[r, c] for j in range(a.cols) for c in range(q)]
        for i in range(a.rows)
        for r in range(p)
    ]
    if not out:
        return Matrix([[] for _ in range(a.rows * p)])
    return Matrix(out)


def kronecker_sum(d: Matrix, c: Matrix) -> Matrix:
    """Kronecker sum of square matrices: C (x) I + I (x) D, whose eigenvalues
    are all pairwise sums of the factors' eigenvalues."""
    d.require_square("kronecker_sum")
    c.require_square("kronecker_sum")
    return kronecker_product(c, Matrix.identity(d.rows)) + kronecker_product(
        Matrix.identity(c.rows), d
    )


def coronal(m: Matrix) -> RationalFunction:
    """Sum of the entries of (tI - M)^-1, as a reduced rational function.

    Computed without matrix inversion through the rank-one determinant
    identity: det(tI - M + J) / det(tI - M) - 1, with J the all-ones matrix.
    """
    m.require_square("coronal")
    psi = char_poly_exact(m)
    psi_shift = char_poly_exact(m - Matrix.ones(m.rows, m.rows))
    return RationalFunction(psi_shift, psi) - 1


def coronal_constant_row_sum(n: int, k) -> RationalFunction:
    """Coronal n/(t - k) of any order-n matrix whose rows all sum to k."""
    if n < 1:
        raise ValueError("order must be at least 1")
    return RationalFunction(Polynomial([n]), Polynomial([-Fraction(k), 1]))


@dataclass(frozen=True)
class SpectrumMultiset:
    """Sorted eigenvalue/multiplicity pairs with tolerance-aware equality."""

    pairs: tuple[tuple[float, int], ...]

    @classmethod
    def from_values(cls, values: Iterable[float], tol: float = 1e-6) -> "SpectrumMultiset":
        vals = sorted(float(v) for v in values)
        if not vals:
            return cls(())
        gap = tol * (1.0 + max(abs(vals[0]), abs(vals[-1])))
        clusters: list[list[float]] = [[vals[0]]]
        for v in vals[1:]:
            if v - clusters[-1][-1] <= gap:
                clusters[-1].append(v)
            else:
                clusters.append([v])
        return cls(tuple((sum(c) / len(c), len(c)) for c in clusters))

    @property
    def total(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def distinct_count(self) -> int:
        return len(self.pairs)

    def values(self) -> list[float]:
        out: list[float] = []
        for v, m in self.pairs:
            out.extend([v] * m)
        return out

    def nearest(self, target: float) -> tuple[float, int]:
        if not self.pairs:
            raise ValueError("empty spectrum")
        return min(self.pairs, key=lambda p: abs(p[0] - target))

    def to_json(self) -> list[dict]:
        return [{"value": v, "multiplicity": m} for v, m in self.pairs]

    def __str__(self) -> str:
        return ", ".join(f"{_fmt(v)} x{m}" for v, m in self.pairs)


def _fmt(v: float) -> str:
    s = f"{v:.5f}"
    return "0.00000" if s == "-0.00000" else s


def spectra_equal(a: SpectrumMultiset, b: SpectrumMultiset, tol: float) -> bool:
    """Multiset equality after expansion: totals agree and sorted entries
    differ pairwise by less than tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if a.total != b.total:
        return False
    return all(abs(x - y) < tol for x, y in zip(a.values(), b.values()))


def sym_eigenvalues(m, cluster_tol: float = 1e-6) -> SpectrumMultiset:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm falls below
    1e-12 * (1 + ||M||_F); the sorted diagonal is then clustered into
    multiplicities with an absolute tolerance scaled by the spectral radius.
    """
    if isinstance(m, Matrix):
        m.require_square("sym_eigenvalues")
        a = m.to_float()
    else:
        a = [[float(x) for x in row] for row in m]
        if any(len(row) != len(a) for row in a):
            raise NotSquareError("sym_eigenvalues needs a square matrix")
    n = len(a)
    if n == 0:
        raise ValueError("sym_eigenvalues needs order >= 1")
    scale = max(max(abs(x) for x in row) for row in a) if n else 0.0
    sym_tol = 1e-12 * (1.0 + scale)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i][j] - a[j][i]) > sym_tol:
                raise NotSymmetricError(
                    f"entries ({i},{j}) and ({j},{i}) differ by {abs(a[i][j] - a[j][i]):.3e}"
                )
            avg = 0.5 * (a[i][j] + a[j][i])
            a[i][j] = a[j][i] = avg
    trace0 = sum(a[i][i] for i in range(n))
    frob = math.sqrt(sum(x * x for row in a for x in row))
    thresh = 1e-12 * (1.0 + frob)
    for _ in range(100):
        off = math.sqrt(2.0 * sum(a[p][q] ** 2 for p in range(n) for q in range(p + 1, n)))
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p][p] -= t * apq
                a[q][q] += t * apq
                a[p][q] = a[q][p] = 0.0
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp, arq = a[r][p], a[r][q]
                    a[r][p] = a[p][r] = arp - s * (arq + tau * arp)
                    a[r][q] = a[q][r] = arq + s * (arp - tau * arq)
    else:
        raise ArithmeticError("Jacobi iteration failed to converge")
    eigs = sorted(a[i][i] for i in range(n))
    if abs(sum(eigs) - trace0) > 1e-8 * (1.0 + abs(trace0)):
        raise ArithmeticError("eigenvalue sum drifted away from the trace")
    return SpectrumMultiset.from_values(eigs, cluster_tol)


def real_roots_quadratic(b: float, c: float) -> tuple[float, float]:
    """Both real roots of t^2 + b*t + c, sorted, with a cancellation-safe
    evaluation of the smaller-magnitude root."""
    b = float(b)
    c = float(c)
    disc = b * b - 4.0 * c
    scale = b * b + 4.0 * abs(c) + 1.0
    if disc < 0.0:
        if disc < -1e-9 * scale:
            raise ComplexRootsError(f"quadratic discriminant {disc:.3e} is negative")
        disc = 0.0
    s = math.sqrt(disc)
    q = -(b + s) / 2.0 if b >= 0.0 else (-b + s) / 2.0
    if q == 0.0:
        r1 = r2 = -b / 2.0
    else:
        r1, r2 = q, c / q
    return (r1, r2) if r1 <= r2 else (r2, r1)


def _polish_cubic_root(r: float, a2: float, a1: float, a0: float) -> float:
    for _ in range(3):
        f = ((r + a2) * r + a1) * r + a0
        df = (3.0 * r + 2.0 * a2) * r + a1
        if df == 0.0:
            break
        step = f / df
        candidate = r - step
        fc = ((candidate + a2) * candidate + a1) * candidate + a0
        if abs(fc) >= abs(f):
            break
        r = candidate
    return r


def real_roots_cubic(a2: float, a1: float, a0: float) -> tuple[float, float, float]:
    """All three real roots of t^3 + a2*t^2 + a1*t + a0, sorted.

    Uses the trigonometric form when the discriminant is safely non-negative;
    a numerically borderline discriminant falls back to one Cardano root plus
    deflation to a quadratic.  A significantly negative discriminant raises
    ComplexRootsError.
    """
    a2, a1, a0 = float(a2), float(a1), float(a0)
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2 ** 3 / 27.0 - a2 * a1 / 3.0 + a0
    disc = -4.0 * p ** 3 - 27.0 * q * q
    scale = 4.0 * abs(p) ** 3 + 27.0 * q * q + 1.0
    shift = a2 / 3.0
    if disc >= 0.0:
        if p >= 0.0:
            # disc >= 0 with p >= 0 forces p ~ q ~ 0: a (near-)triple root.
            y = math.copysign(abs(q) ** (1.0 / 3.0), -q)
            ys = [y, y, y]
        else:
            m = 2.0 * math.sqrt(-p / 3.0)
            arg = 3.0 * q / (p * m)
            arg = max(-1.0, min(1.0, arg))
            phi = math.acos(arg) / 3.0
            ys = [m * math.cos(phi - 2.0 * math.pi * k / 3.0) for k in range(3)]
        roots = [y - shift for y in ys]
    elif disc >= -1e-9 * scale:
        half_q = q / 2.0
        rad = math.sqrt(max(half_q * half_q + p ** 3 / 27.0, 0.0))
        u = math.copysign(abs(-half_q + rad) ** (1.0 / 3.0), -half_q + rad)
        v = math.copysign(abs(-half_q - rad) ** (1.0 / 3.0), -half_q - rad)
        t1 = _polish_cubic_root(u + v - shift, a2, a1, a0)
        b1 = a2 + t1
        c1 = a1 + t1 * b1
        r2, r3 = real_roots_quadratic(b1, c1)
        roots = [t1, r2, r3]
    else:
        raise ComplexRootsError(f"cubic discriminant {disc:.3e} is negative")
    roots = [_polish_cubic_root(r, a2, a1, a0) for r in roots]
    roots.sort()
    return (roots[0], roots[1], roots[2])
