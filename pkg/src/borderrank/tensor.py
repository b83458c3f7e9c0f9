"""Order-3 dense tensors over an exact field.

Index conventions, fixed once and used everywhere:

* ``entries[i][j][k]`` with i over factor A, j over B, k over C.
* pair flattening is lexicographic with the left index major:
  a B x C slice flattens as ``(j, k) -> j*c + k`` and the full space
  A x B x C as ``(i, j, k) -> (i*b + j)*c + k``.
* Kronecker products pair indices the same way: the A index of
  ``kronecker(T, U)`` is ``i*a' + i'``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import PrimeField
from .linalg import (
    LinMap,
    Subspace,
    derive_seed,
    det,
    inverse,
    seeded_random_vector,
    _rows_rank,
)

FACTORS = ("A", "B", "C")


@dataclass
class Tensor3:
    """Dense order-3 tensor. Treated as immutable after construction."""

    dims: tuple
    entries: list
    field: object
    labels: tuple = dc_field(default=FACTORS, compare=False)

    def __post_init__(self):
        a, b, c = self.dims
        if a < 1 or b < 1 or c < 1:
            raise ValueError("factor dimensions must be positive")
        if len(self.entries) != a or any(len(pl) != b for pl in self.entries) \
                or any(len(row) != c for pl in self.entries for row in pl):
            raise ValueError("entry grid does not match dims")

    @classmethod
    def zeros(cls, dims, field):
        a, b, c = dims
        z = field.zero
        return cls((a, b, c),
                   [[[z] * c for _ in range(b)] for _ in range(a)], field)

    @classmethod
    def from_entries(cls, dims, triples, field):
        """Build from sparse ``(i, j, k, value)`` tuples."""
        T = cls.zeros(dims, field)
        for i, j, k, v in triples:
            T.entries[i][j][k] = field.add(T.entries[i][j][k],
                                           field.convert(v))
        return T

    def nonzero_entries(self):
        isz = self.field.is_zero
        a, b, c = self.dims
        return [(i, j, k, self.entries[i][j][k])
                for i in range(a) for j in range(b) for k in range(c)
                if not isz(self.entries[i][j][k])]

    def __repr__(self):
        return f"Tensor3(dims={self.dims}, field={self.field.tag})"


@dataclass
class GenericityResult:
    """Outcome of sampled slice-rank maximisation on one factor."""

    factor: str
    max_rank: int
    witness: list
    generic: bool
    trials: int
    seed: int


# ---------------------------------------------------------------------------
# contractions and slice spaces

def contract_a(T: Tensor3, alpha) -> LinMap:
    """Slice T(alpha) in B x C: entry (j, k) = sum_i alpha_i T[i][j][k]."""
    a, b, c = T.dims
    if len(alpha) != a:
        raise ValueError("contraction vector length mismatch")
    f = T.field
    out = [[f.zero] * c for _ in range(b)]
    for i, coef in enumerate(alpha):
        if f.is_zero(coef):
            continue
        plane = T.entries[i]
        for j in range(b):
            row = plane[j]
            orow = out[j]
            for k in range(c):
                if not f.is_zero(row[k]):
                    orow[k] = f.add(orow[k], f.mul(coef, row[k]))
    return LinMap(b, c, out, f, T.labels[1], T.labels[2])


def contract_b(T: Tensor3, beta) -> LinMap:
    """Slice T(beta) in A x C."""
    a, b, c = T.dims
    if len(beta) != b:
        raise ValueError("contraction vector length mismatch")
    f = T.field
    out = [[f.zero] * c for _ in range(a)]
    for j, coef in enumerate(beta):
        if f.is_zero(coef):
            continue
        for i in range(a):
            row = T.entries[i][j]
            orow = out[i]
            for k in range(c):
                if not f.is_zero(row[k]):
                    orow[k] = f.add(orow[k], f.mul(coef, row[k]))
    return LinMap(a, c, out, f, T.labels[0], T.labels[2])


def contract_c(T: Tensor3, gamma) -> LinMap:
    """Slice T(gamma) in A x B."""
    a, b, c = T.dims
    if len(gamma) != c:
        raise ValueError("contraction vector length mismatch")
    f = T.field
    out = [[f.zero] * b for _ in range(a)]
    for k, coef in enumerate(gamma):
        if f.is_zero(coef):
            continue
        for i in range(a):
            plane = T.entries[i]
            orow = out[i]
            for j in range(b):
                if not f.is_zero(plane[j][k]):
                    orow[j] = f.add(orow[j], f.mul(coef, plane[j][k]))
    return LinMap(a, b, out, f, T.labels[0], T.labels[1])


_CONTRACT = {"A": contract_a, "B": contract_b, "C": contract_c}


def contract(T: Tensor3, factor: str, vector) -> LinMap:
    return _CONTRACT[factor](T, vector)


def _coordinate_slices(T: Tensor3, factor: str):
    """Flattened coordinate slices of one factor, as vectors."""
    a, b, c = T.dims
    if factor == "A":
        return [[x for row in plane for x in row] for plane in T.entries]
    if factor == "B":
        return [[T.entries[i][j][k] for i in range(a) for k in range(c)]
                for j in range(b)]
    if factor == "C":
        return [[T.entries[i][j][k] for i in range(a) for j in range(b)]
                for k in range(c)]
    raise ValueError(f"unknown factor {factor!r}")


def slice_space(T: Tensor3, factor: str) -> Subspace:
    """Span of the coordinate slices T(alpha_i) of one factor."""
    a, b, c = T.dims
    ambient = {"A": b * c, "B": a * c, "C": a * b}[factor]
    return Subspace(ambient, _coordinate_slices(T, factor), T.field,
                    label=f"T({factor}*)")


def is_concise(T: Tensor3):
    """True when all three flattening maps are injective.

    Returns ``(concise, (dim T(A*), dim T(B*), dim T(C*)))``.
    """
    dims = tuple(_rows_rank(_coordinate_slices(T, f), T.field)
                 for f in FACTORS)
    return dims == T.dims, dims


def genericity_rank(T: Tensor3, factor: str = "A", trials: int = 8,
                    seed: int = 0, witness=None) -> GenericityResult:
    """Maximum slice rank over sampled contraction vectors.

    Maximal slice rank is an open condition, so random draws achieve it
    with overwhelming probability; a supplied witness bypasses sampling.
    The factor is reported generic when the maximum equals min of the
    other two dimensions.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    a, b, c = T.dims
    dim = {"A": a, "B": b, "C": c}[factor]
    target = {"A": min(b, c), "B": min(a, c), "C": min(a, b)}[factor]
    best_rank, best_vec = -1, None
    if witness is not None:
        candidates = [list(witness)]
    else:
        candidates = [
            seeded_random_vector(dim, derive_seed(seed, "genericity", factor, t),
                                 T.field)
            for t in range(trials)
        ]
    for vec in candidates:
        r = _rows_rank(contract(T, factor, vec).entries, T.field)
        if r > best_rank:
            best_rank, best_vec = r, vec
        if best_rank == target:
            break
    return GenericityResult(factor, best_rank, best_vec,
                            best_rank == target, trials, seed)


# ---------------------------------------------------------------------------
# constructions

def kronecker(T: Tensor3, U: Tensor3) -> Tensor3:
    """Kronecker product on pairwise factor products, indices paired
    lexicographically: (i, i') -> i*a' + i'."""
    if T.field != U.field:
        raise ValueError("field mismatch")
    a, b, c = T.dims
    a2, b2, c2 = U.dims
    f = T.field
    out = Tensor3.zeros((a * a2, b * b2, c * c2), f)
    for i, j, k, v in T.nonzero_entries():
        for i2, j2, k2, w in U.nonzero_entries():
            out.entries[i * a2 + i2][j * b2 + j2][k * c2 + k2] = f.mul(v, w)
    return out


def direct_sum(T: Tensor3, U: Tensor3) -> Tensor3:
    """Block-diagonal direct sum; dimensions add."""
    if T.field != U.field:
        raise ValueError("field mismatch")
    a, b, c = T.dims
    a2, b2, c2 = U.dims
    out = Tensor3.zeros((a + a2, b + b2, c + c2), T.field)
    for i, j, k, v in T.nonzero_entries():
        out.entries[i][j][k] = v
    for i, j, k, v in U.nonzero_entries():
        out.entries[a + i][b + j][c + k] = v
    return out


def apply_gl(T: Tensor3, g: LinMap, h: LinMap, k: LinMap) -> Tensor3:
    """Left action of GL(A) x GL(B) x GL(C):
    (g.T)[i'][j'][k'] = sum g[i',i] h[j',j] k[k',k] T[i][j][k]."""
    a, b, c = T.dims
    f = T.field
    for M, n, name in ((g, a, "A"), (h, b, "B"), (k, c, "C")):
        if M.rows != n or M.cols != n or M.field != f:
            raise ValueError(f"factor {name} matrix has wrong shape or field")
        if f.is_zero(det(M)):
            raise ValueError(f"factor {name} matrix is singular")
    # Contract one factor at a time.
    t1 = [[[_dot_col(g.entries[i2], T.entries, j, kk, a, f)
            for kk in range(c)] for j in range(b)] for i2 in range(a)]
    t2 = [[[_sum_mul(h.entries[j2], [t1[i][j][kk] for j in range(b)], f)
            for kk in range(c)] for j2 in range(b)] for i in range(a)]
    t3 = [[[_sum_mul(k.entries[k2], t2[i][j], f)
            for k2 in range(c)] for j in range(b)] for i in range(a)]
    return Tensor3((a, b, c), t3, f)


def _dot_col(coeffs, entries, j, k, a, f):
    if isinstance(f, PrimeField):
        return sum(coeffs[i] * entries[i][j][k] for i in range(a)) % f.p
    return sum((coeffs[i] * entries[i][j][k] for i in range(a)), f.zero)


def _sum_mul(coeffs, values, f):
    if isinstance(f, PrimeField):
        return sum(x * y for x, y in zip(coeffs, values)) % f.p
    return sum((x * y for x, y in zip(coeffs, values)), f.zero)


def permute_factors(T: Tensor3, perm) -> Tensor3:
    """Reorder factors. ``perm`` names the old factor placed in each new
    slot, for example ("B", "A", "C") swaps the first two factors."""
    perm = tuple(perm)
    if sorted(perm) != ["A", "B", "C"]:
        raise ValueError("perm must be a permutation of A, B, C")
    pos = {f: i for i, f in enumerate(FACTORS)}
    src = [pos[p] for p in perm]
    new_dims = tuple(T.dims[s] for s in src)
    out = Tensor3.zeros(new_dims, T.field)
    for i, j, k, v in T.nonzero_entries():
        old = (i, j, k)
        out.entries[old[src[0]]][old[src[1]]][old[src[2]]] = v
    return out


def polarize_cubic(n_vars: int, coeffs, field) -> Tensor3:
    """Symmetric tensor of a homogeneous cubic form.

    ``coeffs`` maps sorted variable index triples (i, j, k), i <= j <= k,
    to coefficients, so f(x) = sum coeffs[t] x_t0 x_t1 x_t2. The result
    satisfies T(x, x, x) = f(x) and is invariant under all six factor
    permutations. Requires characteristic other than 2 and 3.
    """
    if field.characteristic in (2, 3):
        raise ValueError("polarization needs 1/6: characteristic 2 and 3 "
                         "are not supported")
    table = {}
    for key, val in coeffs.items():
        key = tuple(key)
        if len(key) != 3 or tuple(sorted(key)) != key \
                or not all(0 <= t < n_vars for t in key):
            raise ValueError(f"bad monomial key {key!r}")
        table[key] = field.convert(val)

    def evaluate(x):
        acc = field.zero
        for (t0, t1, t2), cval in table.items():
            prod = field.mul(field.mul(x[t0], x[t1]), x[t2])
            acc = field.add(acc, field.mul(cval, prod))
        return acc

    one, zero = field.one, field.zero
    inv6 = field.inv(field.convert(6))
    out = Tensor3.zeros((n_vars, n_vars, n_vars), field)

    def basis_sum(*idx):
        x = [zero] * n_vars
        for t in idx:
            x[t] = field.add(x[t], one)
        return x

    for i in range(n_vars):
        for j in range(n_vars):
            for k in range(n_vars):
                s = evaluate(basis_sum(i, j, k))
                s = field.sub(s, evaluate(basis_sum(i, j)))
                s = field.sub(s, evaluate(basis_sum(i, k)))
                s = field.sub(s, evaluate(basis_sum(j, k)))
                s = field.add(s, evaluate(basis_sum(i)))
                s = field.add(s, evaluate(basis_sum(j)))
                s = field.add(s, evaluate(basis_sum(k)))
                out.entries[i][j][k] = field.mul(inv6, s)
    return out


def symmetrize_binding(T: Tensor3, alpha0, beta0) -> Tensor3:
    """Transport a binding tensor into C* x C* x C coordinates.

    Uses the full-rank slices T_A(alpha0) and T_B(beta0) to identify both
    dual factors with C. The result is isomorphic to T; when T satisfies
    the A-side commuting-slice equations it is symmetric in its first
    two factors.
    """
    a, b, c = T.dims
    if not (a == b == c):
        raise ValueError("binding symmetrization needs cubic dimensions")
    P = contract_a(T, alpha0)   # B* -> C as a b x c grid
    Q = contract_b(T, beta0)    # A* -> C as an a x c grid
    try:
        Pinv = inverse(P)
        Qinv = inverse(Q)
    except ValueError:
        raise ValueError("binding witness slice is singular") from None
    f = T.field
    m = c
    out = Tensor3.zeros((m, m, m), f)
    # S[u][v][k] = sum_{i,j} Qinv[u][i] Pinv[v][j] T[i][j][k]
    for u in range(m):
        qrow = Qinv.entries[u]
        mid = [[f.zero] * m for _ in range(m)]   # (j, k) partial sums
        for i in range(m):
            coef = qrow[i]
            if f.is_zero(coef):
                continue
            plane = T.entries[i]
            for j in range(m):
                row = plane[j]
                mrow = mid[j]
                for k in range(m):
                    if not f.is_zero(row[k]):
                        mrow[k] = f.add(mrow[k], f.mul(coef, row[k]))
        for v in range(m):
            prow = Pinv.entries[v]
            orow = out.entries[u][v]
            for k in range(m):
                acc = f.zero
                for j in range(m):
                    if not f.is_zero(prow[j]) and not f.is_zero(mid[j][k]):
                        acc = f.add(acc, f.mul(prow[j], mid[j][k]))
                orow[k] = acc
    return out


# ---------------------------------------------------------------------------
# random tensors (test and sampling plumbing)

def random_tensor(dims, field, seed: int) -> Tensor3:
    """Dense tensor with seeded uniform random entries."""
    a, b, c = dims
    rng_vec = seeded_random_vector(a * b * c, derive_seed(seed, "tensor"), field)
    it = iter(rng_vec)
    entries = [[[next(it) for _ in range(c)] for _ in range(b)]
               for _ in range(a)]
    return Tensor3((a, b, c), entries, field)


def random_low_rank_tensor(dims, r: int, field, seed: int) -> Tensor3:
    """Sum of r seeded random rank-one tensors (so rank at most r)."""
    a, b, c = dims
    out = Tensor3.zeros(dims, field)
    f = field
    for t in range(r):
        u = seeded_random_vector(a, derive_seed(seed, "lr", t, "u"), field)
        v = seeded_random_vector(b, derive_seed(seed, "lr", t, "v"), field)
        w = seeded_random_vector(c, derive_seed(seed, "lr", t, "w"), field)
        for i in range(a):
            if f.is_zero(u[i]):
                continue
            for j in range(b):
                uv = f.mul(u[i], v[j])
                if f.is_zero(uv):
                    continue
                row = out.entries[i][j]
                for k in range(c):
                    row[k] = f.add(row[k], f.mul(uv, w[k]))
    return out


def rank_one_tensor(u, v, w, field) -> Tensor3:
    f = field
    u = [f.convert(x) for x in u]
    v = [f.convert(x) for x in v]
    w = [f.convert(x) for x in w]
    out = Tensor3.zeros((len(u), len(v), len(w)), f)
    for i, ui in enumerate(u):
        for j, vj in enumerate(v):
            uv = f.mul(ui, vj)
            for k, wk in enumerate(w):
                out.entries[i][j][k] = f.mul(uv, wk)
    return out
