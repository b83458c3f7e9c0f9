"""The minimal border rank battery across benchmark tensors.

A concise m x m x m tensor of minimal border rank m has to pass every
obstruction here: commuting slices, End-closure, the multidegree (1,1,1)
intersection tests, symmetry Lie algebra dimensions, abundance of the
compatible-triple algebra, and all wedge bounds at most m. Structure
tensors of commutative algebras and the big Coppersmith-Winograd family
pass everything; matrix multiplication and generic tensors are refuted.
"""

from borderrank import (
    big_cw,
    matmul,
    minimal_br_battery,
    random_tensor,
    structure_tensor,
    truncated_power_algebra,
    unit_tensor,
    w_state,
)
from borderrank.fields import GF_DEFAULT as F

zoo = [
    ("unit_4", unit_tensor(4, F)),
    ("w_state", w_state(F)),
    ("big_cw_2", big_cw(2, F)),
    ("big_cw_3", big_cw(3, F)),
    ("C[x]/(x^4)", structure_tensor(truncated_power_algebra(4, F))),
    ("matmul_2", matmul(2, 2, 2, F)),
    ("generic_4", random_tensor((4, 4, 4), F, seed=2024)),
]

names = None
print(f"{'tensor':<12} {'m':>2} {'bound':>5}  {'status':<10} per-method verdicts")
for name, T in zoo:
    res = minimal_br_battery(T, seed=7)
    if names is None:
        names = [rec.name for rec in res.records]
    verdicts = " ".join(
        {"PASS": ".", "FAIL": "F", "INAPPLICABLE": "-"}[rec.verdict]
        for rec in res.records)
    print(f"{name:<12} {T.dims[0]:>2} {res.aggregate_lower_bound:>5}  "
          f"{res.minimal_border_rank:<10} {verdicts}")

print()
print("methods, in column order:", " ".join(names))
print("'.' = PASS, 'F' = FAIL, '-' = not applicable")
