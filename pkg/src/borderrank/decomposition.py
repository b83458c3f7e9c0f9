"""Border-rank upper-bound certificates as explicit epsilon families.

A certificate lists r rank-one terms whose vectors have polynomial
entries in a formal parameter. It is accepted when the sum equals
``eps^h * T`` plus terms of order above h, checked exactly in the
truncated polynomial ring. Certificates are normalized to nonnegative
powers with leading order h, which is equivalent to allowing Laurent
terms after clearing denominators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tensor import Tensor3


@dataclass
class EpsDecomposition:
    """r rank-one terms; each vector entry is a coefficient list in eps."""

    r: int
    h: int
    terms: list   # list of (a_vecs, b_vecs, c_vecs); vec = list of coeff lists

    def __post_init__(self):
        if self.r != len(self.terms):
            raise ValueError("r does not match the number of terms")
        if self.h < 0:
            raise ValueError("leading order h must be nonnegative")


def _as_poly(entry):
    if isinstance(entry, list):
        return entry
    return [entry]


def _poly_mul_trunc(p, q, cap, f):
    out = [f.zero] * (cap + 1)
    for i, x in enumerate(p):
        if i > cap or f.is_zero(x):
            continue
        for j, y in enumerate(q):
            if i + j > cap:
                break
            if not f.is_zero(y):
                out[i + j] = f.add(out[i + j], f.mul(x, y))
    return out


def verify_eps_decomposition(T: Tensor3, D: EpsDecomposition) -> bool:
    """True iff the terms sum to eps^h * T modulo higher order terms."""
    a, b, c = T.dims
    f = T.field
    cap = D.h
    acc = [[[[f.zero] * (cap + 1) for _ in range(c)] for _ in range(b)]
           for _ in range(a)]
    for av, bv, cv in D.terms:
        if len(av) != a or len(bv) != b or len(cv) != c:
            raise ValueError("certificate vector length does not match dims")
        apolys = [[f.convert(x) for x in _as_poly(e)] for e in av]
        bpolys = [[f.convert(x) for x in _as_poly(e)] for e in bv]
        cpolys = [[f.convert(x) for x in _as_poly(e)] for e in cv]
        for i, pa in enumerate(apolys):
            if all(f.is_zero(x) for x in pa):
                continue
            for j, pb in enumerate(bpolys):
                if all(f.is_zero(x) for x in pb):
                    continue
                pab = _poly_mul_trunc(pa, pb, cap, f)
                if all(f.is_zero(x) for x in pab):
                    continue
                for k, pc in enumerate(cpolys):
                    if all(f.is_zero(x) for x in pc):
                        continue
                    prod = _poly_mul_trunc(pab, pc, cap, f)
                    slot = acc[i][j][k]
                    for d, x in enumerate(prod):
                        if not f.is_zero(x):
                            slot[d] = f.add(slot[d], x)
    for i in range(a):
        for j in range(b):
            for k in range(c):
                slot = acc[i][j][k]
                for d in range(cap):
                    if not f.is_zero(slot[d]):
                        return False
                if slot[cap] != T.entries[i][j][k]:
                    return False
    return True
