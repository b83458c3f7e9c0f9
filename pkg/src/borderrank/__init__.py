"""Exact border-rank lower-bound certificates for 3-way tensors."""

from .fields import DEFAULT_PRIME, GF_DEFAULT, PrimeField, QQ, RationalField, field_from_tag
from .linalg import (
    LinMap,
    Subspace,
    adjugate,
    derive_seed,
    det,
    inverse,
    kernel_basis,
    rank,
    seeded_random_vector,
    subspace_intersect,
    subspace_sum,
)
from .tensor import (
    Tensor3,
    apply_gl,
    contract_a,
    contract_b,
    contract_c,
    direct_sum,
    genericity_rank,
    is_concise,
    kronecker,
    permute_factors,
    polarize_cubic,
    random_low_rank_tensor,
    random_tensor,
    rank_one_tensor,
    slice_space,
    symmetrize_binding,
)
from .decomposition import EpsDecomposition, verify_eps_decomposition
from .koszul import (
    WedgeBasis,
    build_koszul,
    koszul_bound,
    koszul_rank_one_constant,
    restrict_a,
    wedge_insertion_matrix,
)
from .certificates import (
    BatteryResult,
    Obstruction,
    TripleEndo,
    commutator_bound,
    compute_111_algebra,
    end_closed_test,
    minimal_br_battery,
    strassen_test,
    symmetry_lie_dims,
    test_111_minimal,
    test_111_twofactor,
)
from .zoo import (
    AlgebraTable,
    big_cw,
    cw_algebra,
    det3_tensor,
    matmul,
    perm3_tensor,
    small_cw,
    split_algebra,
    structure_tensor,
    truncated_power_algebra,
    unit_tensor,
    w_state,
)
from .exponent import BrFact, OmegaBound, bini_bound, cw_omega_bound, kron_ledger_update
from .errors import BorderRankError, ConsistencyError, InputFormatError, NotApplicable

__version__ = "0.1.0"
