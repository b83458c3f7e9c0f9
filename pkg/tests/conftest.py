import pytest

from borderrank.decomposition import EpsDecomposition
from borderrank.fields import GF_DEFAULT, QQ


@pytest.fixture(scope="session")
def gf():
    """Default 61-bit prime field (the fast path)."""
    return GF_DEFAULT


@pytest.fixture(scope="session")
def qq():
    return QQ


def w_state_certificate():
    """(e0 + eps e1)^x3 - e0^x3 = eps * W + higher order; r=2, h=1."""
    return EpsDecomposition(r=2, h=1, terms=[
        ([[1], [0, 1]], [[1], [0, 1]], [[1], [0, 1]]),
        ([[-1], [0]], [[1], [0]], [[1], [0]]),
    ])


def small_cw_certificate(q):
    """Border-rank q+2 family for the small CW tensor, leading order 3.

    q terms (eps e0 + eps^2 ei) x (e0 + eps ei)^x2, one term
    -(e0 + eps^2 s)^x3 with s the sum of e1..eq, and (1 - q eps) e0^x3.
    """
    n = q + 1
    terms = []
    for i in range(1, q + 1):
        a = [[0, 1] if t == 0 else ([0, 0, 1] if t == i else [0])
             for t in range(n)]
        b = [[1] if t == 0 else ([0, 1] if t == i else [0]) for t in range(n)]
        terms.append((a, b, [list(x) for x in b]))
    a3 = [[-1] if t == 0 else [0, 0, -1] for t in range(n)]
    b3 = [[1] if t == 0 else [0, 0, 1] for t in range(n)]
    terms.append((a3, b3, [list(x) for x in b3]))
    a4 = [[1, -q] if t == 0 else [0] for t in range(n)]
    e0 = [[1] if t == 0 else [0] for t in range(n)]
    terms.append((a4, e0, [list(x) for x in e0]))
    return EpsDecomposition(r=q + 2, h=3, terms=terms)


def strassen_m2_certificate():
    """The classical seven-product decomposition of 2x2 matrix
    multiplication as an exact (h=0) rank certificate.

    Vector conventions match the matmul constructor: A indexed by (i,j),
    B by (j,k), C by (k,i), each flattened left-index major.
    """
    terms = [
        ([1, 0, 0, 1], [1, 0, 0, 1], [1, 0, 0, 1]),
        ([0, 0, 1, 1], [1, 0, 0, 0], [0, 1, 0, -1]),
        ([1, 0, 0, 0], [0, 1, 0, -1], [0, 0, 1, 1]),
        ([0, 0, 0, 1], [-1, 0, 1, 0], [1, 1, 0, 0]),
        ([1, 1, 0, 0], [0, 0, 0, 1], [-1, 0, 1, 0]),
        ([-1, 0, 1, 0], [1, 1, 0, 0], [0, 0, 0, 1]),
        ([0, 1, 0, -1], [0, 0, 1, 1], [1, 0, 0, 0]),
    ]
    wrapped = [([[x] for x in a], [[x] for x in b], [[x] for x in c])
               for a, b, c in terms]
    return EpsDecomposition(r=7, h=0, terms=wrapped)
