from math import comb

import pytest

from borderrank.koszul import (
    WedgeBasis,
    build_koszul,
    koszul_bound,
    koszul_rank_one_constant,
    restrict_a,
    wedge_insertion_matrix,
)
from borderrank.linalg import derive_seed, rank, seeded_random_vector
from borderrank.tensor import (
    Tensor3,
    is_concise,
    permute_factors,
    random_tensor,
    rank_one_tensor,
    slice_space,
)
from borderrank.zoo import big_cw, matmul, small_cw, unit_tensor, w_state

from conftest import small_cw_certificate, w_state_certificate


# ---------------------------------------------------------------------------
# wedge basis and signs

def test_wedge_basis_counts():
    for n, p in ((3, 1), (5, 2), (7, 3)):
        assert len(WedgeBasis.build(n, p)) == comb(n, p)


def test_insertion_sign_is_sorted_position_parity():
    assert WedgeBasis.insertion((1, 3), 0) == (1, (0, 1, 3))
    assert WedgeBasis.insertion((1, 3), 2) == (-1, (1, 2, 3))
    assert WedgeBasis.insertion((1, 3), 4) == (1, (1, 3, 4))
    assert WedgeBasis.insertion((1, 3), 3) is None


def test_double_insertion_is_zero(gf):
    # d(u) . d(u) = 0: wedging twice with the same vector kills everything
    for p in (0, 1, 2):
        n = 2 * p + 3
        u = seeded_random_vector(n, derive_seed(5, "ddz", p), gf)
        first = wedge_insertion_matrix(n, p, u, gf)
        second = wedge_insertion_matrix(n, p + 1, u, gf)
        assert second.matmul(first).is_zero()


# ---------------------------------------------------------------------------
# building flattenings

def test_p0_is_the_b_flattening(gf):
    T = random_tensor((3, 4, 5), gf, seed=2)
    M = build_koszul(T, 0)
    assert (M.rows, M.cols) == (3 * 5, 4)
    assert rank(M) == slice_space(T, "B").dim


def test_rank_one_p1_has_rank_two(qq):
    T = rank_one_tensor([1, 2, 3], [1, 1], [2, 1], qq)
    M = build_koszul(T, 1)
    assert (M.rows, M.cols) == (comb(3, 2) * 2, comb(3, 1) * 2)
    assert rank(M) == 2


def test_unit3_p1_has_rank_six(qq):
    assert rank(build_koszul(unit_tensor(3, qq), 1)) == 6


def test_build_requires_matching_dimension(qq):
    with pytest.raises(ValueError):
        build_koszul(unit_tensor(4, qq), 1)


def test_matrix_shape_matches_contract(gf):
    T = random_tensor((5, 3, 4), gf, seed=9)
    M = build_koszul(T, 2)
    assert (M.rows, M.cols) == (comb(5, 3) * 4, comb(5, 2) * 3)


# ---------------------------------------------------------------------------
# the rank-one normalization constant

def test_rank_one_constant_small_values():
    assert koszul_rank_one_constant(0) == 1
    assert koszul_rank_one_constant(1) == 2


def test_rank_one_constant_p2_matches_central_binomial():
    # the two candidate closed forms disagree at p=2: C(4,1)=4 versus
    # C(4,2)=6; the directly computed rank picks the central binomial
    value = koszul_rank_one_constant(2)
    assert value != comb(4, 1)
    assert value == comb(4, 2) == 6


def test_rank_one_constant_matches_central_binomial_up_to_p3():
    for p in range(4):
        assert koszul_rank_one_constant(p) == comb(2 * p, p)


# ---------------------------------------------------------------------------
# restriction

def test_restrict_full_dimension_keeps_koszul_rank(gf):
    T = random_tensor((3, 3, 3), gf, seed=4)
    R = restrict_a(T, 3, seed=8)
    assert rank(build_koszul(R, 1)) == rank(build_koszul(T, 1))


def test_restrict_matmul3_is_concise(gf):
    R = restrict_a(matmul(3, 3, 3, gf), 5, seed=3)
    assert R.dims == (5, 9, 9)
    assert is_concise(R)[0]


def test_restrict_to_single_slice(gf):
    T = random_tensor((4, 3, 3), gf, seed=5)
    R = restrict_a(T, 1, seed=6)
    assert R.dims == (1, 3, 3)


def test_restrict_rejects_growth(gf):
    with pytest.raises(ValueError):
        restrict_a(unit_tensor(2, gf), 3)


# ---------------------------------------------------------------------------
# the bound

def test_koszul_bound_matmul2(gf):
    assert koszul_bound(matmul(2, 2, 2, gf), 1, seed=0) == 6


def test_koszul_bound_unit_tensors(gf):
    # block additivity: rank 2m over constant 2
    for m in (3, 4, 5):
        assert koszul_bound(unit_tensor(m, gf), 1, seed=1) == m


def test_koszul_bound_p0_equals_slice_dimension(gf):
    for T in (unit_tensor(4, gf), w_state(gf), matmul(2, 2, 2, gf),
              random_tensor((3, 4, 4), gf, seed=30)):
        assert koszul_bound(T, 0, "A") == slice_space(T, "B").dim


def test_koszul_bound_sides_agree_with_permutation(gf):
    T = random_tensor((3, 4, 4), gf, seed=31)
    swapped = permute_factors(T, ("B", "A", "C"))
    assert koszul_bound(T, 1, "B", seed=2) == \
        koszul_bound(swapped, 1, "A", seed=2)


def test_koszul_bound_p_too_large(gf):
    with pytest.raises(ValueError):
        koszul_bound(w_state(gf), 1)


def test_bc_block_sum_additivity(gf):
    # for a shared 3-dimensional A factor, the flattening matrix of a
    # B,C-block sum is block diagonal, so ranks add exactly
    def bc_block_sum(T, U):
        a, b, c = T.dims
        a2, b2, c2 = U.dims
        assert a == a2
        out = Tensor3.zeros((a, b + b2, c + c2), gf)
        for i, j, k, v in T.nonzero_entries():
            out.entries[i][j][k] = v
        for i, j, k, v in U.nonzero_entries():
            out.entries[i][b + j][c + k] = v
        return out

    for trial in range(4):
        T = random_tensor((3, 2, 3), gf, seed=100 + trial)
        U = random_tensor((3, 3, 2), gf, seed=200 + trial)
        S = bc_block_sum(T, U)
        assert rank(build_koszul(S, 1)) == \
            rank(build_koszul(T, 1)) + rank(build_koszul(U, 1))


# ---------------------------------------------------------------------------
# sanity properties on the zoo

def _zoo_concise_cubic(gf):
    from borderrank.zoo import det3_tensor, perm3_tensor

    return [
        ("unit3", unit_tensor(3, gf), 3),
        ("unit5", unit_tensor(5, gf), 5),
        ("wstate", w_state(gf), 2),
        ("big_cw2", big_cw(2, gf), 4),
        ("big_cw3", big_cw(3, gf), 5),
        ("small_cw2", small_cw(2, gf), 3),
        ("small_cw3", small_cw(3, gf), 4),
        ("matmul2", matmul(2, 2, 2, gf), 4),
        ("det3", det3_tensor(gf), 9),
        ("perm3", perm3_tensor(gf), 9),
    ]


def test_koszul_bound_below_absolute_method_limit(gf):
    # nothing determinantal beats 2m - 1 on an m x m x m tensor
    for name, T, m in _zoo_concise_cubic(gf):
        p = 1
        while 2 * p + 1 <= T.dims[0] and p <= 2:
            bound = koszul_bound(T, p, seed=11)
            assert bound <= 2 * m - 1, name
            p += 1


def test_koszul_bound_consistent_with_verified_upper_bounds(gf, qq):
    from borderrank.decomposition import verify_eps_decomposition

    cases = [
        (w_state(qq), w_state_certificate(), 2, 0),
        (small_cw(2, qq), small_cw_certificate(2), 4, 1),
    ]
    for T, cert, r, p in cases:
        assert verify_eps_decomposition(T, cert)
        assert koszul_bound(T, p, seed=12) <= r
