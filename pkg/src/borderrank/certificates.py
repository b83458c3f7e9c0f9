"""Equation-based obstructions to minimal border rank, plus the battery
that aggregates them into a certified lower bound.

Every check here is exact: memberships and commutators are decided by
rank computation over the tensor's field, never by thresholds. Sampled
quantities (witness slices, random triples) are derived from an explicit
seed, so verdicts are reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from .errors import ConsistencyError, NotApplicable
from .koszul import koszul_bound, koszul_matrix_shape
from .linalg import (
    LinMap,
    Subspace,
    adjugate,
    derive_seed,
    inverse,
    rank,
    seeded_random_vector,
    _rows_kernel,
    _rows_rank,
)
from .tensor import (
    Tensor3,
    contract_a,
    genericity_rank,
    is_concise,
    slice_space,
)

STRASSEN = "STRASSEN"
COMMUTATOR = "COMMUTATOR"
END_CLOSED = "END_CLOSED"
T111_TRIPLE = "T111_TRIPLE"
T111_TWOFACTOR = "T111_TWOFACTOR"
SYMLIE = "SYMLIE"
KOSZUL = "KOSZUL"
ALG111_ABUNDANCE = "ALG111_ABUNDANCE"

OBSTRUCTION_NAMES = (STRASSEN, COMMUTATOR, END_CLOSED, T111_TRIPLE,
                     T111_TWOFACTOR, SYMLIE, KOSZUL, ALG111_ABUNDANCE)

PASS = "PASS"
FAIL = "FAIL"
INAPPLICABLE = "INAPPLICABLE"

#: Obstructions whose FAIL on a concise m x m x m tensor certifies that
#: the border rank is at least m + 1.
MINIMAL_OBSTRUCTIONS = frozenset({
    STRASSEN, END_CLOSED, T111_TRIPLE, T111_TWOFACTOR, SYMLIE,
    ALG111_ABUNDANCE, KOSZUL, COMMUTATOR,
})


@dataclass
class Obstruction:
    """Verdict of one certificate method."""

    name: str
    verdict: str
    bound: int | None = None
    payload: dict = dc_field(default_factory=dict)
    seed: int | None = None
    field_tag: str = ""
    wall_ms: float | None = dc_field(default=None, compare=False)


@dataclass
class TripleEndo:
    """Endomorphism triple acting compatibly on the three factors."""

    x: LinMap
    y: LinMap
    z: LinMap


def _slice_matrix_basis(T: Tensor3, factor: str = "A"):
    """Basis of the slice space of one factor, reshaped to matrices."""
    space = slice_space(T, factor)
    r, c = {
        "A": (T.dims[1], T.dims[2]),
        "B": (T.dims[0], T.dims[2]),
        "C": (T.dims[0], T.dims[1]),
    }[factor]
    mats = []
    for vec in space.basis:
        mats.append(LinMap(r, c, [list(vec[t * c:(t + 1) * c])
                                  for t in range(r)], T.field))
    return mats, space


def _random_combo(mats, seed, field):
    coeffs = seeded_random_vector(len(mats), seed, field)
    acc = mats[0].scale(coeffs[0])
    for coef, M in zip(coeffs[1:], mats[1:]):
        acc = acc.add(M.scale(coef))
    return acc


# ---------------------------------------------------------------------------
# commuting-slice equations

def strassen_test(T: Tensor3, seed: int = 0, samples: int = 50,
                  trials: int = 8) -> Obstruction:
    """Degree m+1 commuting-slice equations on the A side.

    Checks X adj(Y) Z = Z adj(Y) X over all triples from a basis of the
    slice space (the relation is antisymmetric in X and Z, so unordered
    pairs decide those) plus `samples` random triples; the expression is
    linear in X and Z but not in Y, so the random Y draws supply the
    Schwartz-Zippel coverage. When a full-rank slice exists the verdict
    is cross-checked through commutativity of the normalized slices,
    which is exact.
    """
    a, b, c = T.dims
    if b != c:
        raise ValueError("square slices required (B and C dimensions differ)")
    m = b
    f = T.field
    mats, space = _slice_matrix_basis(T, "A")
    d = len(mats)
    payload = {"slice_dim": d, "samples": samples}
    if d == 0:
        return Obstruction(STRASSEN, PASS, payload=payload, seed=seed,
                           field_tag=f.tag)
    witness = None

    def residual_is_zero(X, adjY, Z):
        left = X.matmul(adjY).matmul(Z)
        right = Z.matmul(adjY).matmul(X)
        return left.sub(right).is_zero()

    for yi, Y in enumerate(mats):
        adjY = adjugate(Y)
        products = [M.matmul(adjY) for M in mats]
        for xi in range(d):
            for zi in range(xi + 1, d):
                res = products[xi].matmul(mats[zi]).sub(
                    products[zi].matmul(mats[xi]))
                if not res.is_zero():
                    witness = {"kind": "basis", "triple": (xi, yi, zi)}
                    break
            if witness:
                break
        if witness:
            break

    if witness is None:
        for t in range(samples):
            X = _random_combo(mats, derive_seed(seed, "strassen", t, "x"), f)
            Y = _random_combo(mats, derive_seed(seed, "strassen", t, "y"), f)
            Z = _random_combo(mats, derive_seed(seed, "strassen", t, "z"), f)
            if not residual_is_zero(X, adjugate(Y), Z):
                witness = {"kind": "sampled", "sample": t}
                break

    poly_pass = witness is None

    gen = genericity_rank(T, "A", trials=trials,
                          seed=derive_seed(seed, "strassen-gen"))
    payload["max_slice_rank"] = gen.max_rank
    if gen.generic and gen.max_rank == m:
        inv0 = inverse(contract_a(T, gen.witness))
        normalized = [M.matmul(inv0) for M in mats]
        commutes = True
        for i in range(d):
            for j in range(i + 1, d):
                lhs = normalized[i].matmul(normalized[j])
                rhs = normalized[j].matmul(normalized[i])
                if not lhs.sub(rhs).is_zero():
                    commutes = False
                    witness = witness or {"kind": "commutator", "pair": (i, j)}
                    break
            if not commutes:
                break
        payload["one_a_generic"] = True
        payload["commuting_slices"] = commutes
        if poly_pass and not commutes:
            # The sampled polynomial sweep missed a violation that the
            # exact commutativity form caught; the exact form decides.
            poly_pass = False
        elif commutes and not poly_pass:
            raise ConsistencyError(
                "polynomial and commutativity forms of the slice equations "
                "disagree; this indicates a bug")
    else:
        payload["one_a_generic"] = False

    if witness is not None:
        payload["witness"] = witness
    return Obstruction(STRASSEN, PASS if poly_pass else FAIL,
                       payload=payload, seed=seed, field_tag=f.tag)


def commutator_bound(T: Tensor3, seed: int = 0, samples: int = 12,
                     trials: int = 8) -> int:
    """Lower bound m + ceil(max commutator rank / 2) over sampled pairs
    of normalized slices, each pair living in a three-dimensional
    subspace spanned with the full-rank witness."""
    a, b, c = T.dims
    if b != c:
        raise ValueError("square slices required (B and C dimensions differ)")
    m = b
    f = T.field
    gen = genericity_rank(T, "A", trials=trials,
                          seed=derive_seed(seed, "commutator-gen"))
    if gen.max_rank < m:
        raise NotApplicable("no full-rank slice found; the commutator "
                            "refinement needs a 1_A-generic tensor")
    inv0 = inverse(contract_a(T, gen.witness))
    best = 0
    for t in range(samples):
        a1 = seeded_random_vector(a, derive_seed(seed, "commutator", t, 1), f)
        a2 = seeded_random_vector(a, derive_seed(seed, "commutator", t, 2), f)
        n1 = contract_a(T, a1).matmul(inv0)
        n2 = contract_a(T, a2).matmul(inv0)
        commutator = n1.matmul(n2).sub(n2.matmul(n1))
        best = max(best, rank(commutator))
        if best == m:
            break
    return m + (best + 1) // 2


def end_closed_test(T: Tensor3, seed: int = 0, trials: int = 8) -> Obstruction:
    """Closure of the normalized slice space under composition.

    With a slice of maximal rank fixed, checks that X adj(A1) Z stays in
    the span of the slices for all basis pairs (X, Z). The expression is
    linear in X and Z, so basis pairs decide it exactly. When the slices
    do not span m independent directions the degree 2m+1 wedge equations
    vanish identically and the verdict is a vacuous PASS.
    """
    a, b, c = T.dims
    if b != c:
        raise ValueError("square slices required (B and C dimensions differ)")
    m = b
    f = T.field
    mats, space = _slice_matrix_basis(T, "A")
    d = len(mats)
    payload = {"slice_dim": d}
    if d < m:
        payload["vacuous"] = True
        return Obstruction(END_CLOSED, PASS, payload=payload, seed=seed,
                           field_tag=f.tag)
    gen = genericity_rank(T, "A", trials=trials,
                          seed=derive_seed(seed, "endclosed-gen"))
    payload["max_slice_rank"] = gen.max_rank
    adj1 = adjugate(contract_a(T, gen.witness))
    witness = None
    for i in range(d):
        left = mats[i].matmul(adj1)
        for j in range(d):
            product = left.matmul(mats[j])
            if not space.contains(product.flatten()):
                witness = (i, j)
                break
        if witness:
            break
    if witness is not None:
        payload["witness_pair"] = witness
    return Obstruction(END_CLOSED, PASS if witness is None else FAIL,
                       payload=payload, seed=seed, field_tag=f.tag)


# ---------------------------------------------------------------------------
# multidegree (1,1,1) tests

def _compat_space(T: Tensor3, factor: str) -> Subspace:
    """The slice space of one factor tensored back onto that factor, as
    a subspace of the full space A x B x C."""
    a, b, c = T.dims
    f = T.field
    space = slice_space(T, factor)
    vectors = []
    if factor == "A":
        for w in space.basis:          # w lives in B x C
            for s in range(a):
                v = [f.zero] * (a * b * c)
                base = s * b * c
                v[base:base + b * c] = list(w)
                vectors.append(v)
    elif factor == "B":
        for w in space.basis:          # w lives in A x C, w[i*c + k]
            for s in range(b):
                v = [f.zero] * (a * b * c)
                for i in range(a):
                    row = w[i * c:(i + 1) * c]
                    base = (i * b + s) * c
                    v[base:base + c] = list(row)
                vectors.append(v)
    else:
        for w in space.basis:          # w lives in A x B, w[i*b + j]
            for s in range(c):
                v = [f.zero] * (a * b * c)
                for i in range(a):
                    for j in range(b):
                        v[(i * b + j) * c + s] = w[i * b + j]
                vectors.append(v)
    return Subspace(a * b * c, vectors, f, label=f"T({factor}*)x{factor}")


def test_111_minimal(T: Tensor3) -> Obstruction:
    """Dimension of the triple intersection of the three compatibility
    spaces inside A x B x C; minimal border rank needs at least m.

    Computed by one stacked kernel system; pairwise inclusion-exclusion
    is not valid for three spaces.
    """
    from .linalg import subspace_intersect

    a, b, c = T.dims
    concise, sdims = is_concise(T)
    if not (a == b == c) or not concise:
        return Obstruction(T111_TRIPLE, INAPPLICABLE,
                           payload={"reason": "needs a concise cubic tensor",
                                    "slice_dims": sdims},
                           field_tag=T.field.tag)
    m = a
    inter = subspace_intersect([_compat_space(T, fct) for fct in "ABC"])
    dim = inter.dim
    return Obstruction(T111_TRIPLE, PASS if dim >= m else FAIL,
                       payload={"dimension": dim, "required": m},
                       field_tag=T.field.tag)


def test_111_twofactor(T: Tensor3) -> Obstruction:
    """Two-factor variant: for each pair of factors the span of the two
    compatibility spaces may not exceed 2m^2 - m, equivalently the
    pairwise intersection has dimension at least m."""
    from .linalg import subspace_sum

    a, b, c = T.dims
    concise, sdims = is_concise(T)
    if not (a == b == c) or not concise:
        return Obstruction(T111_TWOFACTOR, INAPPLICABLE,
                           payload={"reason": "needs a concise cubic tensor",
                                    "slice_dims": sdims},
                           field_tag=T.field.tag)
    m = a
    spaces = {fct: _compat_space(T, fct) for fct in "ABC"}
    span_dims = {}
    inter_dims = {}
    failed = False
    for pair in ("AB", "AC", "BC"):
        u, v = spaces[pair[0]], spaces[pair[1]]
        sdim = subspace_sum(u, v).dim
        span_dims[pair] = sdim
        inter_dims[pair] = u.dim + v.dim - sdim
        if sdim >= 2 * m * m - m + 1:
            failed = True
    return Obstruction(T111_TWOFACTOR, FAIL if failed else PASS,
                       payload={"span_dims": span_dims,
                                "intersection_dims": inter_dims,
                                "max_allowed_span": 2 * m * m - m},
                       field_tag=T.field.tag)


# ---------------------------------------------------------------------------
# symmetry Lie algebra

def _action_rows(T: Tensor3, factor: str):
    """Rows of the linearized factor action: one row per elementary
    endomorphism e_{i,s}, flattened over A x B x C."""
    a, b, c = T.dims
    rows = []
    if factor == "A":
        for i in range(a):
            for s in range(a):
                v = [T.field.zero] * (a * b * c)
                plane = T.entries[s]
                base = i * b * c
                for j in range(b):
                    row = plane[j]
                    off = base + j * c
                    for k in range(c):
                        v[off + k] = row[k]
                rows.append(v)
    elif factor == "B":
        for j in range(b):
            for s in range(b):
                v = [T.field.zero] * (a * b * c)
                for i in range(a):
                    row = T.entries[i][s]
                    off = (i * b + j) * c
                    for k in range(c):
                        v[off + k] = row[k]
                rows.append(v)
    else:
        for k in range(c):
            for s in range(c):
                v = [T.field.zero] * (a * b * c)
                for i in range(a):
                    plane = T.entries[i]
                    for j in range(b):
                        v[(i * b + j) * c + k] = plane[j][s]
                rows.append(v)
    return rows


def symmetry_lie_dims(T: Tensor3):
    """Dimensions of the symmetry Lie algebra and its two-factor pieces.

    Returns ``((g, g_AB, g_AC, g_BC), obstruction)`` where g is the
    kernel dimension of (X, Y, Z) -> X.T + Y.T + Z.T. Minimal border
    rank forces g >= 2m and every pairwise dimension >= m.
    """
    a, b, c = T.dims
    if not (a == b == c):
        obs = Obstruction(SYMLIE, INAPPLICABLE,
                          payload={"reason": "needs cubic dimensions"},
                          field_tag=T.field.tag)
        return (None, None, None, None), obs
    m = a
    f = T.field
    rows_a = _action_rows(T, "A")
    rows_b = _action_rows(T, "B")
    rows_c = _action_rows(T, "C")
    g_full = 3 * m * m - _rows_rank(rows_a + rows_b + rows_c, f)
    g_ab = 2 * m * m - _rows_rank(rows_a + rows_b, f)
    g_ac = 2 * m * m - _rows_rank(rows_a + rows_c, f)
    g_bc = 2 * m * m - _rows_rank(rows_b + rows_c, f)
    ok = g_full >= 2 * m and min(g_ab, g_ac, g_bc) >= m
    obs = Obstruction(SYMLIE, PASS if ok else FAIL,
                      payload={"dim_g": g_full, "dim_g_AB": g_ab,
                               "dim_g_AC": g_ac, "dim_g_BC": g_bc,
                               "required": (2 * m, m)},
                      field_tag=f.tag)
    return (g_full, g_ab, g_ac, g_bc), obs


# ---------------------------------------------------------------------------
# the 111-algebra

def compute_111_algebra(T: Tensor3, check_structure: bool = True):
    """Basis of all endomorphism triples acting identically on T through
    the three factors, together with the abundance verdict.

    For concise T the solution set is a commutative unital algebra whose
    projection to each factor is injective; those structural facts are
    verified and a violation raises ConsistencyError.
    """
    a, b, c = T.dims
    f = T.field
    concise, sdims = is_concise(T)
    if not concise:
        obs = Obstruction(ALG111_ABUNDANCE, INAPPLICABLE,
                          payload={"reason": "needs a concise tensor",
                                   "slice_dims": sdims},
                          field_tag=f.tag)
        return [], obs
    na, nb, nc = a * a, b * b, c * c
    ncols = na + nb + nc
    rows = []
    ent = T.entries
    zero = f.zero
    for i in range(a):
        for j in range(b):
            for k in range(c):
                r1 = [zero] * ncols
                for s in range(a):
                    r1[i * a + s] = ent[s][j][k]
                for s in range(b):
                    r1[na + j * b + s] = f.neg(ent[i][s][k])
                rows.append(r1)
                r2 = [zero] * ncols
                for s in range(b):
                    r2[na + j * b + s] = ent[i][s][k]
                for s in range(c):
                    r2[na + nb + k * c + s] = f.neg(ent[i][j][s])
                rows.append(r2)
    kernel = _rows_kernel(rows, ncols, f)
    solution_space = Subspace(ncols, kernel, f, label="111-algebra")
    dim = solution_space.dim

    def unpack(vec):
        X = LinMap(a, a, [list(vec[i * a:(i + 1) * a]) for i in range(a)], f)
        Y = LinMap(b, b, [list(vec[na + j * b:na + (j + 1) * b])
                          for j in range(b)], f)
        Z = LinMap(c, c, [list(vec[na + nb + k * c:na + nb + (k + 1) * c])
                          for k in range(c)], f)
        return TripleEndo(X, Y, Z)

    triples = [unpack(v) for v in solution_space.basis]

    payload = {"dimension": dim}
    if check_structure:
        id_vec = (LinMap.identity(a, f).flatten()
                  + LinMap.identity(b, f).flatten()
                  + LinMap.identity(c, f).flatten())
        unital = solution_space.contains(id_vec)
        closed = True
        commutative = True
        for s in range(dim):
            for t in range(dim):
                ts_, tt = triples[s], triples[t]
                px = ts_.x.matmul(tt.x)
                py = ts_.y.matmul(tt.y)
                pz = ts_.z.matmul(tt.z)
                prod_vec = px.flatten() + py.flatten() + pz.flatten()
                if closed and not solution_space.contains(prod_vec):
                    closed = False
                if t > s and commutative:
                    if not px.sub(tt.x.matmul(ts_.x)).is_zero() \
                            or not py.sub(tt.y.matmul(ts_.y)).is_zero() \
                            or not pz.sub(tt.z.matmul(ts_.z)).is_zero():
                        commutative = False
        proj_ok = all(
            _rows_rank([tr_part.flatten() for tr_part in parts], f) == dim
            for parts in (
                [tr.x for tr in triples],
                [tr.y for tr in triples],
                [tr.z for tr in triples],
            )
        ) if dim else True
        payload.update({"unital": unital, "closed": closed,
                        "commutative": commutative,
                        "projections_injective": proj_ok})
        if not (unital and closed and commutative and proj_ok):
            raise ConsistencyError(
                "structural guarantees of the compatible-triple algebra "
                f"failed on a concise tensor: {payload}")

    if a == b == c:
        verdict = PASS if dim >= a else FAIL
        payload["required"] = a
    else:
        verdict = INAPPLICABLE
        payload["reason"] = "abundance threshold needs cubic dimensions"
    obs = Obstruction(ALG111_ABUNDANCE, verdict, payload=payload,
                      field_tag=f.tag)
    return triples, obs


# ---------------------------------------------------------------------------
# the aggregated battery

@dataclass
class BatteryResult:
    """Everything the battery learned about one tensor."""

    dims: tuple
    field_tag: str
    seed: int
    concise: bool
    slice_dims: tuple
    genericity: dict
    records: list
    aggregate_lower_bound: int
    minimal_border_rank: str   # "candidate" | "refuted" | "not_applicable"

    def record(self, name: str) -> Obstruction | None:
        for rec in self.records:
            if rec.name == name:
                return rec
        return None


def _timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, (time.perf_counter() - t0) * 1000.0


_KOSZUL_CELL_CAP = 40000


def minimal_br_battery(T: Tensor3, seed: int = 0, p_max: int = 3,
                       methods=None, strassen_samples: int = 50,
                       commutator_samples: int = 12,
                       genericity_trials: int = 8) -> BatteryResult:
    """Run every applicable obstruction and aggregate the certified
    lower bound (the maximum of the numeric bounds, plus m + 1 whenever
    a minimal-rank obstruction fails on a concise cubic tensor)."""
    all_methods = {"koszul", "strassen", "commutator", "end_closed",
                   "t111", "t111_twofactor", "symlie", "alg111"}
    if methods is None:
        selected = all_methods
    else:
        selected = {m.lower() for m in methods}
        unknown = selected - all_methods
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")

    a, b, c = T.dims
    f = T.field
    concise, sdims = is_concise(T)
    cubic = a == b == c
    m = a if cubic else None

    genericity = {}
    for factor in "ABC":
        gen = genericity_rank(T, factor, trials=genericity_trials,
                              seed=derive_seed(seed, "battery-gen", factor))
        genericity[factor] = {"max_rank": gen.max_rank,
                              "generic": gen.generic}

    records = []
    bounds = [1 if T.nonzero_entries() else 0]

    if "koszul" in selected:
        t0 = time.perf_counter()
        per = {}
        best = 0
        for sidx, side in enumerate("ABC"):
            side_dim = T.dims[sidx]
            other = [T.dims[t] for t in range(3) if t != sidx]
            val = koszul_bound(T, 0, side)
            per[f"{side}:p0"] = val
            best = max(best, val)
            p = 1
            while p <= p_max and 2 * p + 1 <= side_dim:
                shape = koszul_matrix_shape(min(side_dim, 2 * p + 1),
                                            other[0], other[1], p)
                if shape[0] * shape[1] > _KOSZUL_CELL_CAP:
                    break
                val = koszul_bound(T, p, side,
                                   seed=derive_seed(seed, "battery-koszul",
                                                    side, p))
                per[f"{side}:p{p}"] = val
                best = max(best, val)
                p += 1
        bounds.append(best)
        verdict = PASS
        if concise and cubic and best > m:
            verdict = FAIL
        elif not cubic:
            verdict = INAPPLICABLE
        records.append(Obstruction(
            KOSZUL, verdict, bound=best,
            payload={"bounds": per},
            seed=seed, field_tag=f.tag,
            wall_ms=(time.perf_counter() - t0) * 1000.0))

    if "strassen" in selected:
        if b == c:
            obs, ms = _timed(strassen_test, T,
                             seed=derive_seed(seed, "battery-strassen"),
                             samples=strassen_samples,
                             trials=genericity_trials)
            obs.wall_ms = ms
        else:
            obs = Obstruction(STRASSEN, INAPPLICABLE,
                              payload={"reason": "slices are not square"},
                              field_tag=f.tag)
        records.append(obs)

    if "commutator" in selected:
        if b == c:
            try:
                val, ms = _timed(commutator_bound, T,
                                 seed=derive_seed(seed, "battery-commutator"),
                                 samples=commutator_samples,
                                 trials=genericity_trials)
                bounds.append(val)
                verdict = PASS
                if concise and cubic and val > m:
                    verdict = FAIL
                obs = Obstruction(COMMUTATOR, verdict, bound=val,
                                  payload={}, seed=seed, field_tag=f.tag,
                                  wall_ms=ms)
            except NotApplicable as exc:
                obs = Obstruction(COMMUTATOR, INAPPLICABLE,
                                  payload={"reason": str(exc)},
                                  field_tag=f.tag)
        else:
            obs = Obstruction(COMMUTATOR, INAPPLICABLE,
                              payload={"reason": "slices are not square"},
                              field_tag=f.tag)
        records.append(obs)

    if "end_closed" in selected:
        if b == c:
            obs, ms = _timed(end_closed_test, T,
                             seed=derive_seed(seed, "battery-endclosed"),
                             trials=genericity_trials)
            obs.wall_ms = ms
        else:
            obs = Obstruction(END_CLOSED, INAPPLICABLE,
                              payload={"reason": "slices are not square"},
                              field_tag=f.tag)
        records.append(obs)

    if "t111" in selected:
        obs, ms = _timed(test_111_minimal, T)
        obs.wall_ms = ms
        records.append(obs)

    if "t111_twofactor" in selected:
        obs, ms = _timed(test_111_twofactor, T)
        obs.wall_ms = ms
        records.append(obs)

    if "symlie" in selected:
        (dims_tuple, obs), ms = _timed(symmetry_lie_dims, T)
        obs.wall_ms = ms
        records.append(obs)

    if "alg111" in selected:
        (_, obs), ms = _timed(compute_111_algebra, T)
        obs.wall_ms = ms
        records.append(obs)

    refuted = False
    if concise and cubic:
        for rec in records:
            if rec.name in MINIMAL_OBSTRUCTIONS and rec.verdict == FAIL:
                refuted = True
        if refuted:
            bounds.append(m + 1)
        status = "refuted" if refuted else "candidate"
    else:
        status = "not_applicable"

    aggregate = max(bounds)
    return BatteryResult(dims=T.dims, field_tag=f.tag, seed=seed,
                         concise=concise, slice_dims=sdims,
                         genericity=genericity, records=records,
                         aggregate_lower_bound=aggregate,
                         minimal_border_rank=status)
