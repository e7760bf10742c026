"""Exact linear algebra over the rationals and integer normal forms.

Everything here works on :class:`fractions.Fraction` and plain Python
integers; no floating point is involved anywhere.  Subspaces are stored
in reduced row-echelon form, so two subspaces are equal exactly when
their stored bases are equal.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Rational",
    "to_rational",
    "format_rational",
    "RationalMatrix",
    "IntegerMatrix",
    "Subspace",
    "rref",
    "subspace_sum",
    "subspace_intersect",
    "solve_linear",
    "smith_normal_form",
    "elementary_divisors",
    "cone_combination",
]

Rational = Fraction


def to_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(q) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is one."""
    return str(Fraction(q))


def _to_int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("booleans are not integers")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, str):
        q = Fraction(x.strip())
        if q.denominator == 1:
            return q.numerator
    raise TypeError(f"cannot interpret {x!r} as an integer")


class _Matrix:
    __slots__ = ("_rows", "nrows", "ncols")
    _coerce = staticmethod(to_rational)

    def __init__(self, rows: Iterable[Iterable] = (), ncols: int | None = None):
        data = tuple(tuple(self._coerce(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged matrix: every row must have %d entries" % ncols)
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def zeros(cls, nrows: int, ncols: int):
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]

    def transpose(self):
        return type(self)(
            [[r[j] for r in self._rows] for j in range(self.ncols)], ncols=self.nrows
        )

    @property
    def T(self):
        return self.transpose()

    def __matmul__(self, other):
        if not isinstance(other, _Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.transpose().rows
        out_type = type(self) if type(self) is type(other) else RationalMatrix
        return out_type(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows],
            ncols=other.ncols,
        )

    def apply(self, vector: Sequence) -> tuple:
        """Matrix times a column vector, returned as a tuple."""
        if len(vector) != self.ncols:
            raise ValueError("vector length does not match matrix columns")
        v = [to_rational(x) for x in vector]
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._rows)

    def __eq__(self, other):
        if not isinstance(other, _Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.ncols, self._rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"{type(self).__name__}([{body}])"

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        m = [[Fraction(x) for x in r] for r in self._rows]
        n = len(m)
        d = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d *= m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                if f:
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return d


class RationalMatrix(_Matrix):
    """Immutable dense matrix of exact rationals."""

    __slots__ = ()

    def rank(self) -> int:
        return len(rref(self._rows, self.ncols)[0])

    def kernel(self) -> "Subspace":
        return solve_linear(self)

    def inverse(self) -> "RationalMatrix":
        if not self.is_square():
            raise ValueError("only square matrices are invertible")
        n = self.nrows
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self._rows)]
        red, piv = rref(aug, 2 * n)
        if piv[:n] != list(range(n)) or len(red) < n:
            raise ZeroDivisionError("matrix is singular")
        return RationalMatrix([r[n:] for r in red], ncols=n)

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [[a * b for a in ra for b in rb] for ra in self._rows for rb in other.rows],
            ncols=self.ncols * other.ncols,
        )


class IntegerMatrix(_Matrix):
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ()
    _coerce = staticmethod(_to_int)

    def det(self) -> int:
        d = super().det()
        return d.numerator

    def to_rational(self) -> RationalMatrix:
        return RationalMatrix(self._rows, ncols=self.ncols)


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    m = [[to_rational(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


class Subspace:
    """A linear subspace of Q^n, canonically presented.

    The stored ``basis`` is the reduced row-echelon basis, which is unique
    for a given subspace; equality and hashing use it directly.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        red, piv = rref(vectors, ambient_dim)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in red))
        object.__setattr__(self, "_pivots", tuple(piv))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> RationalMatrix:
        return RationalMatrix(self.basis, ncols=self.ambient_dim)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def __contains__(self, vector) -> bool:
        v = [to_rational(x) for x in vector]
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        # reduce against the echelon basis
        for row, c in zip(self.basis, self._pivots):
            if v[c]:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def __le__(self, other: "Subspace") -> bool:
        _check_same_ambient(self, other)
        return all(v in other for v in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.dim < other.dim

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def __gt__(self, other: "Subspace") -> bool:
        return other < self

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis)
        return f"Subspace({self.ambient_dim}, [{vecs}])"

    def annihilator(self) -> "Subspace":
        """Vectors pairing to zero with every vector of this subspace."""
        return solve_linear(RationalMatrix(self.basis, ncols=self.ambient_dim))

    def image(self, matrix: _Matrix) -> "Subspace":
        """Image under ``v -> matrix @ v``."""
        if matrix.ncols != self.ambient_dim:
            raise ValueError("matrix does not act on this ambient space")
        return Subspace(matrix.nrows, [matrix.apply(v) for v in self.basis])

    def complement_basis(self, sub: "Subspace") -> list[tuple]:
        """Vectors extending ``sub`` to a basis of ``self``.

        Greedy over our own echelon rows, so the answer is the
        lexicographically first extension and fully deterministic.
        """
        if not sub <= self:
            raise ValueError("sub is not contained in this subspace")
        chosen: list[tuple] = []
        current = sub
        for row in self.basis:
            if current.dim == self.dim:
                break
            if row not in current:
                chosen.append(row)
                current = Subspace(self.ambient_dim, current.basis + (row,))
        return chosen


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return Subspace(a.ambient_dim, a.basis + b.basis)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    n = a.ambient_dim
    if a.is_full():
        return b
    if b.is_full():
        return a
    # (a ∩ b)^perp = a^perp + b^perp
    constraints = a.annihilator().basis + b.annihilator().basis
    return solve_linear(RationalMatrix(constraints, ncols=n))


def solve_linear(constraints: RationalMatrix) -> Subspace:
    """Kernel ``{x : constraints @ x = 0}`` as a canonical Subspace."""
    n = constraints.ncols
    red, piv = rref(constraints.rows, n)
    pivset = set(piv)
    vectors = []
    for f in range(n):
        if f in pivset:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        vectors.append(v)
    return Subspace(n, vectors)


def smith_normal_form(a: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return ``(U, D, V)`` with ``a = U @ D @ V``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with non-negative
    entries ``d1 | d2 | ...``.

    >>> U, D, V = smith_normal_form(IntegerMatrix([[2, 4], [6, 8]]))
    >>> D
    IntegerMatrix([[2, 0], [0, 4]])
    """
    m, n = a.shape
    d = [list(r) for r in a.rows]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    # Invariant a = u d v.  A row operation E on d is undone by u <- u E^-1,
    # a column operation F on d by v <- F^-1 v.
    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        v[i], v[j] = v[j], v[i]

    def add_row(src, dst, c):  # row_dst += c * row_src
        d[dst] = [x + c * y for x, y in zip(d[dst], d[src])]
        for r in u:
            r[src] -= c * r[dst]

    def add_col(src, dst, c):  # col_dst += c * col_src
        for r in d:
            r[dst] += c * r[src]
        v[src] = [x - c * y for x, y in zip(v[src], v[dst])]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // p))
                    dirty = dirty or d[i][t] != 0
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // p))
                    dirty = dirty or d[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if t < m and t < n and d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            for r in u:
                r[t] = -r[t]
    return IntegerMatrix(u, ncols=m), IntegerMatrix(d, ncols=n), IntegerMatrix(v, ncols=n)


def elementary_divisors(a: IntegerMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    _, d, _ = smith_normal_form(a)
    return [d[i, i] for i in range(min(d.shape)) if d[i, i]]


def cone_combination(vector: Sequence, generators: Sequence[Sequence]) -> list[Fraction] | None:
    """Non-negative rational coefficients writing ``vector`` in terms of
    ``generators``, or None when the vector is outside their cone.

    Carathéodory: if a solution exists, one exists supported on a
    linearly independent subset, so enumerating those is exhaustive.
    """
    gens = [tuple(to_rational(x) for x in g) for g in generators]
    target = [to_rational(x) for x in vector]
    dim = len(target)
    if not any(target):
        return [Fraction(0)] * len(gens)
    for k in range(1, min(dim, len(gens)) + 1):
        for subset in combinations(range(len(gens)), k):
            cols = [gens[i] for i in subset]
            aug = [[cols[c][r] for c in range(k)] + [target[r]] for r in range(dim)]
            red, piv = rref(aug, k + 1)
            if k in piv or len(piv) < k:
                continue
            coeffs = [red[i][k] for i in range(k)]
            if all(c >= 0 for c in coeffs):
                out = [Fraction(0)] * len(gens)
                for i, c in zip(subset, coeffs):
                    out[i] = c
                return out
    return None
