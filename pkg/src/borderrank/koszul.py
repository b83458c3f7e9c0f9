"""Exterior-algebra flattenings and the wedge lower bound.

Sign convention: basis elements of the degree-p exterior power are the
size-p subsets of {0..n-1} in lexicographic order, written with strictly
increasing indices. Inserting index a into a sorted subset S (a not in
S) contributes the sign (-1)^(number of elements of S below a). This is
the sorted-insertion parity and is used consistently in every degree, so
inserting the same vector twice gives the zero map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .fields import QQ
from .linalg import LinMap, derive_seed, random_full_rank, rank
from .tensor import FACTORS, Tensor3, permute_factors, rank_one_tensor


@dataclass
class WedgeBasis:
    """Lexicographic basis of the degree-p exterior power of F^n."""

    n: int
    p: int
    subsets: list
    index: dict

    @classmethod
    def build(cls, n: int, p: int) -> "WedgeBasis":
        if not (0 <= p <= n):
            raise ValueError("wedge degree out of range")
        subsets = list(combinations(range(n), p))
        return cls(n, p, subsets, {s: i for i, s in enumerate(subsets)})

    def __len__(self):
        return len(self.subsets)

    @staticmethod
    def insertion(subset, a):
        """Sign and result of inserting a into a sorted subset, or None."""
        if a in subset:
            return None
        below = 0
        for s in subset:
            if s < a:
                below += 1
            else:
                break
        sign = -1 if below % 2 else 1
        merged = tuple(sorted(subset + (a,)))
        return sign, merged


def wedge_insertion_matrix(n: int, p: int, u, field) -> LinMap:
    """Matrix of wedging with the vector u, from degree p to degree p+1."""
    dom = WedgeBasis.build(n, p)
    cod = WedgeBasis.build(n, p + 1)
    data = [[field.zero] * len(dom) for _ in range(len(cod))]
    for col, S in enumerate(dom.subsets):
        for a, coef in enumerate(u):
            if field.is_zero(coef):
                continue
            ins = WedgeBasis.insertion(S, a)
            if ins is None:
                continue
            sign, merged = ins
            row = cod.index[merged]
            val = coef if sign > 0 else field.neg(coef)
            data[row][col] = field.add(data[row][col], val)
    return LinMap(len(cod), len(dom), data, field,
                  f"wedge^{p + 1}", f"wedge^{p}")


def build_koszul(T: Tensor3, p: int) -> LinMap:
    """Matrix of the wedge flattening from (wedge^p A) x B* to
    (wedge^{p+1} A) x C.

    Column (S, j) and row (S', k) are flattened as index(S)*b + j and
    index(S')*c + k. For p >= 1 the A factor must already have dimension
    2p+1 (restrict first); p = 0 is the plain B* -> A x C flattening and
    is defined for any A dimension.
    """
    a, b, c = T.dims
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p >= 1 and a != 2 * p + 1:
        raise ValueError(f"A dimension must be {2 * p + 1} for p={p}; "
                         "restrict first")
    f = T.field
    dom = WedgeBasis.build(a, p)
    cod = WedgeBasis.build(a, p + 1)
    rows = len(cod) * c
    cols = len(dom) * b
    data = [[f.zero] * cols for _ in range(rows)]
    nonzero = T.nonzero_entries()
    for col_s, S in enumerate(dom.subsets):
        ins_cache = {}
        for i in range(a):
            ins_cache[i] = WedgeBasis.insertion(S, i)
        for i, j, k, v in nonzero:
            ins = ins_cache[i]
            if ins is None:
                continue
            sign, merged = ins
            row = cod.index[merged] * c + k
            col = col_s * b + j
            val = v if sign > 0 else f.neg(v)
            data[row][col] = f.add(data[row][col], val)
    return LinMap(rows, cols, data, f,
                  f"wedge^{p + 1}(A)xC", f"wedge^{p}(A)xB*")


def restrict_a(T: Tensor3, target_dim: int, seed: int = 0) -> Tensor3:
    """Compose T with a seeded random surjection of A* onto a space of
    the given dimension. target_dim equal to the A dimension is a plain
    change of coordinates."""
    a, b, c = T.dims
    if target_dim > a:
        raise ValueError("target dimension exceeds the A dimension")
    if target_dim < 1:
        raise ValueError("target dimension must be positive")
    R = random_full_rank(target_dim, a, derive_seed(seed, "restrict"), T.field)
    f = T.field
    out = Tensor3.zeros((target_dim, b, c), f)
    for i, j, k, v in T.nonzero_entries():
        for s in range(target_dim):
            coef = R.entries[s][i]
            if not f.is_zero(coef):
                out.entries[s][j][k] = f.add(out.entries[s][j][k],
                                             f.mul(coef, v))
    return out


_RANK_ONE_CONSTANT_CACHE = {}


def koszul_rank_one_constant(p: int) -> int:
    """Rank of the degree-p wedge flattening of a rank-one tensor in
    dimension 2p+1, computed by direct construction and memoized.

    This normalization constant is derived rather than taken on faith:
    dividing the flattening rank by it gives the border rank bound.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p in _RANK_ONE_CONSTANT_CACHE:
        return _RANK_ONE_CONSTANT_CACHE[p]
    n = 2 * p + 1
    u = [QQ.convert(t + 1) for t in range(n)]
    T = rank_one_tensor(u, [1, 2], [1, 3], QQ)
    value = rank(build_koszul(T, p))
    _RANK_ONE_CONSTANT_CACHE[p] = value
    return value


def koszul_bound(T: Tensor3, p: int, side: str = "A", seed: int = 0,
                 retries: int = 3) -> int:
    """Certified border-rank lower bound from the degree-p wedge
    flattening on the chosen side.

    For p >= 1 the working factor is restricted to dimension 2p+1 by
    seeded random surjections when larger; the best bound over the given
    number of restrictions is returned. Restriction never increases
    border rank, so any draw yields a valid bound and a degenerate draw
    only weakens it.
    """
    if side not in FACTORS:
        raise ValueError(f"unknown side {side!r}")
    if side == "A":
        Tp = T
    else:
        order = {"B": ("B", "A", "C"), "C": ("C", "B", "A")}[side]
        Tp = permute_factors(T, order)
    a = Tp.dims[0]
    if p == 0:
        return rank(build_koszul(Tp, 0))
    need = 2 * p + 1
    if need > a:
        raise ValueError(f"p={p} needs a {need}-dimensional factor, "
                         f"have {a}")
    k = koszul_rank_one_constant(p)
    if a == need:
        candidates = [Tp]
    else:
        candidates = [restrict_a(Tp, need, derive_seed(seed, "koszul", t))
                      for t in range(max(1, retries))]
    best = 0
    for cand in candidates:
        r = rank(build_koszul(cand, p))
        best = max(best, -(-r // k))
    return best


def koszul_matrix_shape(a: int, b: int, c: int, p: int) -> tuple:
    """Shape of the flattening matrix without building it."""
    return (comb(a, p + 1) * c, comb(a, p) * b)
