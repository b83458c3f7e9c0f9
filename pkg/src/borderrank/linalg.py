"""Exact dense linear algebra used by every certificate.

Matrices are dense lists of row lists. Over the rationals, rank and
kernel computations clear denominators row by row and run fraction-free
(Bareiss) elimination on integers, which keeps intermediate entries as
minors of the input and avoids gcd churn; over a prime field they use
ordinary row reduction with modular inverses. Subspaces store a reduced
row echelon basis, so equal subspaces compare equal and membership tests
are a single back-reduction.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm

from .fields import PrimeField


# ---------------------------------------------------------------------------
# deterministic seeding

def derive_seed(seed: int, *parts) -> int:
    """Stable 64-bit child seed from a root seed and a tag path.

    Uses sha256 rather than hash() so results do not depend on
    PYTHONHASHSEED or the platform.
    """
    text = "|".join([str(seed)] + [str(p) for p in parts])
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def seeded_rng(seed: int, *parts) -> random.Random:
    return random.Random(derive_seed(seed, *parts))


# ---------------------------------------------------------------------------
# core containers

@dataclass
class LinMap:
    """Dense exact matrix with named row and column spaces."""

    rows: int
    cols: int
    entries: list
    field: object
    row_space_label: str = dc_field(default="", compare=False)
    col_space_label: str = dc_field(default="", compare=False)

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, entries, field, row_label="", col_label=""):
        conv = field.convert
        data = [[conv(x) for x in row] for row in entries]
        return cls(len(data), len(data[0]) if data else 0, data, field,
                   row_label, col_label)

    @classmethod
    def identity(cls, n, field):
        one, zero = field.one, field.zero
        data = [[one if i == j else zero for j in range(n)] for i in range(n)]
        return cls(n, n, data, field)

    @classmethod
    def zeros(cls, rows, cols, field):
        zero = field.zero
        return cls(rows, cols, [[zero] * cols for _ in range(rows)], field)

    def copy_entries(self) -> list:
        return [row[:] for row in self.entries]

    def transpose(self) -> "LinMap":
        data = [[self.entries[i][j] for i in range(self.rows)]
                for j in range(self.cols)]
        return LinMap(self.cols, self.rows, data, self.field,
                      self.col_space_label, self.row_space_label)

    def matmul(self, other: "LinMap") -> "LinMap":
        if self.cols != other.rows or self.field != other.field:
            raise ValueError("incompatible matrix product")
        f = self.field
        if isinstance(f, PrimeField):
            p = f.p
            bt = list(zip(*other.entries))
            data = [[sum(x * y for x, y in zip(row, col)) % p for col in bt]
                    for row in self.entries]
        else:
            bt = list(zip(*other.entries))
            data = [[sum(x * y for x, y in zip(row, col)) for col in bt]
                    for row in self.entries]
        return LinMap(self.rows, other.cols, data, f,
                      self.row_space_label, other.col_space_label)

    def add(self, other: "LinMap") -> "LinMap":
        self._check_same_shape(other)
        add = self.field.add
        data = [[add(x, y) for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)]
        return LinMap(self.rows, self.cols, data, self.field)

    def sub(self, other: "LinMap") -> "LinMap":
        self._check_same_shape(other)
        sub = self.field.sub
        data = [[sub(x, y) for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)]
        return LinMap(self.rows, self.cols, data, self.field)

    def scale(self, s) -> "LinMap":
        mul = self.field.mul
        data = [[mul(s, x) for x in row] for row in self.entries]
        return LinMap(self.rows, self.cols, data, self.field)

    def is_zero(self) -> bool:
        z = self.field.is_zero
        return all(z(x) for row in self.entries for x in row)

    def flatten(self) -> list:
        return [x for row in self.entries for x in row]

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols) \
                or self.field != other.field:
            raise ValueError("shape or field mismatch")


@dataclass
class Subspace:
    """Linear subspace of F^n stored as a reduced row echelon basis."""

    ambient_dim: int
    basis: list
    field: object
    label: str = dc_field(default="", compare=False)

    def __post_init__(self):
        for v in self.basis:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector has wrong length")
        reduced, _ = _rows_rref([list(v) for v in self.basis], self.field)
        self.basis = reduced

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector) -> bool:
        if len(vector) != self.ambient_dim:
            raise ValueError("vector length mismatch")
        return _reduces_to_zero(vector, self.basis, self.field)

    def __repr__(self):
        lab = f" {self.label!r}" if self.label else ""
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}{lab})"


def _pivot_cols_of_rref(rows, field):
    is_zero = field.is_zero
    pivots = []
    for row in rows:
        for c, x in enumerate(row):
            if not is_zero(x):
                pivots.append(c)
                break
    return pivots


def _reduces_to_zero(vector, rref_rows, field) -> bool:
    """Reduce a vector against an RREF basis; True when remainder is 0."""
    is_zero = field.is_zero
    v = list(vector)
    if isinstance(field, PrimeField):
        p = field.p
        for row, c in zip(rref_rows, _pivot_cols_of_rref(rref_rows, field)):
            f = v[c] % p
            if f:
                v = [(x - f * y) % p for x, y in zip(v, row)]
    else:
        for row, c in zip(rref_rows, _pivot_cols_of_rref(rref_rows, field)):
            f = v[c]
            if f != 0:
                v = [x - f * y for x, y in zip(v, row)]
    return all(is_zero(x) for x in v)


# ---------------------------------------------------------------------------
# elimination engines (raw row lists)

def _prime_rref(rows, p):
    """Gauss-Jordan over GF(p). Returns (rref rows without zero rows, pivots)."""
    rows = [r[:] for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c] % p, -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        pr = rows[r]
        for i in range(m):
            if i != r:
                f = rows[i][c] % p
                if f:
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _prime_rank(rows, p) -> int:
    """Forward elimination only; cheaper than full RREF for rank queries."""
    rows = [r[:] for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c] % p, -1, p)
        pr = rows[r]
        for i in range(r + 1, m):
            f = rows[i][c] % p
            if f:
                f = f * inv % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        r += 1
    return r


def _clear_denominators(row):
    """Scale a rational row to integers. Scaling rows changes neither the
    rank nor the kernel of the system."""
    mult = lcm(*(x.denominator for x in row)) if row else 1
    return [int(x * mult) for x in row]


def _int_echelon_bareiss(rows):
    """Fraction-free forward elimination on integer rows.

    Returns (echelon rows trimmed to the rank, pivot columns). All
    divisions are exact by the Sylvester identity, so entries stay
    integers of controlled size.
    """
    rows = [r[:] for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        d = pr[c]
        for i in range(r + 1, m):
            f = rows[i][c]
            ri = rows[i]
            rows[i] = [(d * x - f * y) // prev for x, y in zip(ri, pr)]
        pivots.append(c)
        prev = d
        r += 1
    return rows[:r], pivots


def _fraction_rref(rows):
    """Plain Gauss-Jordan with Fractions; used for small canonical bases."""
    rows = [[Fraction(x) for x in r] for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        pr = rows[r]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _rows_rref(rows, field):
    if not rows:
        return [], []
    if isinstance(field, PrimeField):
        return _prime_rref(rows, field.p)
    return _fraction_rref(rows)


def _rows_rank(rows, field) -> int:
    if not rows:
        return 0
    if isinstance(field, PrimeField):
        return _prime_rank(rows, field.p)
    int_rows = [_clear_denominators([Fraction(x) for x in r]) for r in rows]
    _, pivots = _int_echelon_bareiss(int_rows)
    return len(pivots)


def _rows_kernel(rows, ncols, field):
    """Basis of {x : rows . x = 0} as a list of vectors of length ncols."""
    if not rows or ncols == 0:
        one, zero = field.one, field.zero
        return [[one if i == j else zero for j in range(ncols)]
                for i in range(ncols)]
    if isinstance(field, PrimeField):
        p = field.p
        rref, pivots = _prime_rref(rows, p)
        pivot_set = set(pivots)
        free = [c for c in range(ncols) if c not in pivot_set]
        basis = []
        for fcol in free:
            v = [0] * ncols
            v[fcol] = 1
            for row, pc in zip(rref, pivots):
                v[pc] = -row[fcol] % p
            basis.append(v)
        return basis
    # Rational path: Bareiss echelon on cleared rows, then exact
    # back-substitution with Fractions for each free column.
    int_rows = [_clear_denominators([Fraction(x) for x in r]) for r in rows]
    ech, pivots = _int_echelon_bareiss(int_rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pc in zip(reversed(ech), reversed(pivots)):
            s = sum((row[j] * v[j] for j in range(pc + 1, ncols)
                     if row[j] and v[j]), Fraction(0))
            v[pc] = Fraction(-s, row[pc])
        basis.append(v)
    return basis


def _det_rows(rows, field):
    """Exact determinant of a square row list."""
    n = len(rows)
    if n == 0:
        return field.one
    if isinstance(field, PrimeField):
        p = field.p
        rows = [r[:] for r in rows]
        det = 1
        for c in range(n):
            piv = None
            for i in range(c, n):
                if rows[i][c] % p:
                    piv = i
                    break
            if piv is None:
                return 0
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = -det
            inv = pow(rows[c][c], -1, p)
            det = det * rows[c][c] % p
            pr = rows[c]
            for i in range(c + 1, n):
                f = rows[i][c] % p
                if f:
                    f = f * inv % p
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        return det % p
    # Rational: clear denominators per row, integer Bareiss, divide back.
    scale = Fraction(1)
    int_rows = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        mult = lcm(*(x.denominator for x in fr)) if fr else 1
        scale *= mult
        int_rows.append([int(x * mult) for x in fr])
    sign = 1
    prev = 1
    det = None
    for c in range(n):
        piv = None
        for i in range(c, n):
            if int_rows[i][c]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            int_rows[c], int_rows[piv] = int_rows[piv], int_rows[c]
            sign = -sign
        pr = int_rows[c]
        d = pr[c]
        for i in range(c + 1, n):
            f = int_rows[i][c]
            int_rows[i] = [(d * x - f * y) // prev
                           for x, y in zip(int_rows[i], pr)]
        prev = d
        det = d
    return Fraction(sign * det, 1) / scale


# ---------------------------------------------------------------------------
# public operations

def rank(M: LinMap) -> int:
    """Exact rank of a LinMap over its field."""
    return _rows_rank(M.entries, M.field)


def kernel_basis(M: LinMap) -> Subspace:
    """Basis of {x : Mx = 0}; dimension is cols - rank."""
    vectors = _rows_kernel(M.entries, M.cols, M.field)
    return Subspace(M.cols, vectors, M.field,
                    label=f"ker({M.row_space_label or 'M'})")


def det(M: LinMap):
    if M.rows != M.cols:
        raise ValueError("determinant requires a square matrix")
    return _det_rows(M.entries, M.field)


def adjugate(M: LinMap) -> LinMap:
    """Adjugate (transposed cofactor matrix): M . adj(M) = det(M) . Id."""
    if M.rows != M.cols:
        raise ValueError("adjugate requires a square matrix")
    n = M.rows
    f = M.field
    if n == 0:
        return LinMap(0, 0, [], f)
    if n == 1:
        return LinMap(1, 1, [[f.one]], f)
    ent = M.entries
    out = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[ent[r][c] for c in range(n) if c != i]
                     for r in range(n) if r != j]
            cof = _det_rows(minor, f)
            if (i + j) % 2:
                cof = f.neg(cof)
            out[i][j] = cof
    return LinMap(n, n, out, f, M.col_space_label, M.row_space_label)


def inverse(M: LinMap) -> LinMap:
    """Exact inverse; raises ValueError when singular."""
    if M.rows != M.cols:
        raise ValueError("inverse requires a square matrix")
    n = M.rows
    f = M.field
    aug = [row[:] + [f.one if i == j else f.zero for j in range(n)]
           for i, row in enumerate(M.entries)]
    rref, pivots = _rows_rref(aug, f)
    if pivots[:n] != list(range(n)) or len(rref) < n:
        raise ValueError("matrix is singular")
    data = [row[n:] for row in rref[:n]]
    return LinMap(n, n, data, f, M.col_space_label, M.row_space_label)


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    """Span of the union of two subspaces of the same ambient space."""
    if U.ambient_dim != V.ambient_dim or U.field != V.field:
        raise ValueError("ambient space mismatch")
    return Subspace(U.ambient_dim, U.basis + V.basis, U.field,
                    label=f"span({U.label},{V.label})")


def subspace_intersect(spaces) -> Subspace:
    """Intersection of two or more subspaces of a common ambient space.

    Solved as one stacked kernel system: the candidate vector is written
    in the basis of the first space and constrained by the annihilators
    of the remaining ones. Pairwise inclusion-exclusion is not used; it
    fails for three or more spaces.
    """
    spaces = list(spaces)
    if len(spaces) < 2:
        raise ValueError("need at least two subspaces")
    n = spaces[0].ambient_dim
    f = spaces[0].field
    for s in spaces[1:]:
        if s.ambient_dim != n or s.field != f:
            raise ValueError("ambient space mismatch")
    base = min(spaces, key=lambda s: s.dim)
    others = [s for s in spaces if s is not base]
    if base.dim == 0:
        return Subspace(n, [], f, label="intersection")
    B = base.basis
    d = len(B)
    constraints = []
    if isinstance(f, PrimeField):
        p = f.p
        for other in others:
            for y in _rows_kernel(other.basis, n, f):
                constraints.append(
                    [sum(a * b for a, b in zip(y, bt)) % p for bt in B])
    else:
        for other in others:
            for y in _rows_kernel(other.basis, n, f):
                constraints.append(
                    [sum(a * b for a, b in zip(y, bt)) for bt in B])
    coeffs = _rows_kernel(constraints, d, f)
    vectors = []
    for cvec in coeffs:
        v = [f.zero] * n
        for t, c in enumerate(cvec):
            if not f.is_zero(c):
                row = B[t]
                v = [f.add(x, f.mul(c, y)) for x, y in zip(v, row)]
        vectors.append(v)
    return Subspace(n, vectors, f, label="intersection")


def seeded_random_vector(dim: int, seed: int, field) -> list:
    """Deterministic pseudo-random vector for Schwartz-Zippel sampling.

    Entries are drawn from a range of size at least 2^30; the result
    depends only on (seed, dim, field).
    """
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    rng = seeded_rng(seed, "vec", dim, field.tag)
    return [field.random(rng) for _ in range(dim)]


def seeded_random_matrix(rows: int, cols: int, seed: int, field) -> LinMap:
    rng = seeded_rng(seed, "mat", rows, cols, field.tag)
    data = [[field.random(rng) for _ in range(cols)] for _ in range(rows)]
    return LinMap(rows, cols, data, field)


def random_invertible(n: int, seed: int, field) -> LinMap:
    """Seeded random invertible matrix (redraws on the null-probability
    singular draw, keeping determinism)."""
    for attempt in range(64):
        M = seeded_random_matrix(n, n, derive_seed(seed, "inv", attempt), field)
        if _rows_rank(M.entries, field) == n:
            return M
    raise RuntimeError("failed to draw an invertible matrix")


def random_full_rank(rows: int, cols: int, seed: int, field) -> LinMap:
    """Seeded random matrix of full rank min(rows, cols)."""
    target = min(rows, cols)
    for attempt in range(64):
        M = seeded_random_matrix(rows, cols, derive_seed(seed, "fr", attempt),
                                 field)
        if _rows_rank(M.entries, field) == target:
            return M
    raise RuntimeError("failed to draw a full-rank matrix")
