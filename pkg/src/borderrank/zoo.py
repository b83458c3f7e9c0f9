"""Benchmark tensors and structure tensors of finite-dimensional algebras."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import permutations

from .fields import QQ
from .tensor import Tensor3, polarize_cubic


@dataclass
class AlgebraTable:
    """Multiplication table of a finite-dimensional algebra in a fixed
    basis: ``table[i][j]`` is the coefficient vector of the product of
    basis elements i and j."""

    m: int
    labels: list
    table: list
    unit_index: int | None = None
    field: object = dc_field(default_factory=lambda: QQ)

    def __post_init__(self):
        conv = self.field.convert
        if len(self.labels) != self.m or len(self.table) != self.m:
            raise ValueError("table size does not match dimension")
        self.table = [[[conv(x) for x in cell] for cell in row]
                      for row in self.table]
        for row in self.table:
            if len(row) != self.m or any(len(cell) != self.m for cell in row):
                raise ValueError("malformed multiplication table")
        if self.unit_index is not None:
            u = self.unit_index
            f = self.field
            for j in range(self.m):
                unit_row = [f.one if t == j else f.zero for t in range(self.m)]
                if self.table[u][j] != unit_row or self.table[j][u] != unit_row:
                    raise ValueError("declared unit does not act as identity")

    @property
    def is_commutative(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.m) for j in range(self.m))


def structure_tensor(alg: AlgebraTable) -> Tensor3:
    """Tensor of the multiplication map: entry (i, j, k) is the k-th
    coordinate of the product of basis elements i and j."""
    m = alg.m
    entries = [[list(alg.table[i][j]) for j in range(m)] for i in range(m)]
    return Tensor3((m, m, m), entries, alg.field)


def matmul(l: int, m: int, n: int, field=QQ) -> Tensor3:
    """Matrix multiplication tensor for (l x m) times (m x n).

    Lives in F^(lm) x F^(mn) x F^(nl) with ones exactly at the matching
    index triples ((i,j), (j,k), (k,i)); pair indices flatten with the
    left index major, so the third factor is indexed by (k, i) -> k*l + i.
    """
    if min(l, m, n) < 1:
        raise ValueError("matrix sizes must be positive")
    T = Tensor3.zeros((l * m, m * n, n * l), field)
    one = field.one
    for i in range(l):
        for j in range(m):
            for k in range(n):
                T.entries[i * m + j][j * n + k][k * l + i] = one
    return T


def unit_tensor(m: int, field=QQ) -> Tensor3:
    """Diagonal rank-m tensor: the direct sum of m copies of the 1x1x1
    tensor."""
    if m < 1:
        raise ValueError("m must be positive")
    T = Tensor3.zeros((m, m, m), field)
    for i in range(m):
        T.entries[i][i][i] = field.one
    return T


def w_state(field=QQ) -> Tensor3:
    """e0 x e0 x e1 + e1 x e0 x e0 + e0 x e1 x e0 in dimension 2."""
    T = Tensor3.zeros((2, 2, 2), field)
    one = field.one
    T.entries[0][0][1] = one
    T.entries[1][0][0] = one
    T.entries[0][1][0] = one
    return T


def big_cw(q: int, field=QQ) -> Tensor3:
    """Big Coppersmith-Winograd tensor in dimension q+2:
    e0 x e0 x e_{q+1} + sum_i (e0 x ei x ei + ei x e0 x ei + ei x ei x e0)
    + e0 x e_{q+1} x e0 + e_{q+1} x e0 x e0."""
    if q < 1:
        raise ValueError("q must be positive")
    n = q + 2
    T = Tensor3.zeros((n, n, n), field)
    one = field.one
    last = q + 1
    T.entries[0][0][last] = one
    T.entries[0][last][0] = one
    T.entries[last][0][0] = one
    for i in range(1, q + 1):
        T.entries[0][i][i] = one
        T.entries[i][0][i] = one
        T.entries[i][i][0] = one
    return T


def small_cw(q: int, field=QQ) -> Tensor3:
    """Small Coppersmith-Winograd tensor in dimension q+1:
    sum_i (e0 x ei x ei + ei x e0 x ei + ei x ei x e0). Equals the big
    tensor with the three corner terms deleted and the last coordinate
    dropped."""
    if q < 1:
        raise ValueError("q must be positive")
    n = q + 1
    T = Tensor3.zeros((n, n, n), field)
    one = field.one
    for i in range(1, q + 1):
        T.entries[0][i][i] = one
        T.entries[i][0][i] = one
        T.entries[i][i][0] = one
    return T


def split_algebra(m: int, field=QQ) -> AlgebraTable:
    """F^m with pointwise multiplication (m distinct points)."""
    zero, one = field.zero, field.one
    table = [[[one if (i == j == t) else zero for t in range(m)]
              for j in range(m)] for i in range(m)]
    return AlgebraTable(m, [f"e{i}" for i in range(m)], table,
                        unit_index=None, field=field)


def truncated_power_algebra(k: int, field=QQ) -> AlgebraTable:
    """F[x] modulo x^k with basis 1, x, ..., x^(k-1)."""
    if k < 1:
        raise ValueError("k must be positive")
    zero, one = field.zero, field.one
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            cell = [zero] * k
            if i + j < k:
                cell[i + j] = one
            row.append(cell)
        table.append(row)
    labels = ["1"] + [f"x^{t}" if t > 1 else "x" for t in range(1, k)]
    return AlgebraTable(k, labels, table, unit_index=0, field=field)


def cw_algebra(q: int, field=QQ) -> AlgebraTable:
    """F[x1..xq] modulo (xi xj for i != j, xi^2 - xj^2, xi^3), with basis
    1, x1, ..., xq, [x1^2]. Its structure tensor relabels to the big
    Coppersmith-Winograd tensor."""
    if q < 1:
        raise ValueError("q must be positive")
    m = q + 2
    zero, one = field.zero, field.one
    last = q + 1

    def cell(t=None):
        v = [zero] * m
        if t is not None:
            v[t] = one
        return v

    table = [[cell() for _ in range(m)] for _ in range(m)]
    for j in range(m):
        table[0][j] = cell(j)
        table[j][0] = cell(j)
    for i in range(1, q + 1):
        table[i][i] = cell(last)
    # x_i x_j (i != j), x_i [x1^2] and [x1^2]^2 are all zero.
    labels = ["1"] + [f"x{i}" for i in range(1, q + 1)] + ["x1^2"]
    return AlgebraTable(m, labels, table, unit_index=0, field=field)


def det3_coeffs():
    """Coefficient dict of the 3x3 determinant as a cubic in 9 variables
    x[r][c] -> index 3r + c; keys are sorted index triples."""
    coeffs = {}
    for sigma in permutations(range(3)):
        sign = _perm_sign(sigma)
        key = tuple(sorted(3 * r + sigma[r] for r in range(3)))
        coeffs[key] = coeffs.get(key, 0) + sign
    return coeffs


def perm3_coeffs():
    """Coefficient dict of the 3x3 permanent as a cubic in 9 variables."""
    coeffs = {}
    for sigma in permutations(range(3)):
        key = tuple(sorted(3 * r + sigma[r] for r in range(3)))
        coeffs[key] = coeffs.get(key, 0) + 1
    return coeffs


def _perm_sign(sigma) -> int:
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


def det3_tensor(field=QQ) -> Tensor3:
    """The 3x3 determinant polynomial as a symmetric 9x9x9 tensor."""
    return polarize_cubic(9, det3_coeffs(), field)


def perm3_tensor(field=QQ) -> Tensor3:
    """The 3x3 permanent polynomial as a symmetric 9x9x9 tensor."""
    return polarize_cubic(9, perm3_coeffs(), field)
