"""From border-rank facts to matrix multiplication exponent bounds.

Two conversions: the direct relation omega <= log_n r from an upper
bound r on the n x n multiplication tensor, and the laser-method formula
omega <= log_q((4/27) r^(3/k)) from an upper bound on the k-th Kronecker
power of the small Coppersmith-Winograd tensor.
"""

from borderrank import bini_bound, cw_omega_bound

print("direct relation:")
for n, r, note in [(2, 8, "classical algorithm"),
                   (2, 7, "seven products"),
                   (4, 49, "the same bound, squared")]:
    print(f"  omega <= log_{n}({r}) = {bini_bound(n, r).value}   ({note})")

print()
print("laser method on the small CW tensor:")
cases = [
    (8, 1, 10, "q=8 with the generic q+2 estimate"),
    (2, 1, 4, "q=2, true border rank 4"),
    (2, 1, 3, "q=2 if the value were 3: the exponent would be 2"),
    (2, 2, 16, "q=2 square, proven value 16 (worse than using k=1)"),
]
for q, k, r, note in cases:
    b = cw_omega_bound(q, k, r)
    flag = "  [not an improvement]" if b.value > 3 else ""
    print(f"  q={q}, k={k}, r={r:>2}: omega <= {b.value}{flag}   ({note})")

print()
print("the skew variant shares the formula shape; tag it for provenance:")
b = cw_omega_bound(2, 2, 17, formula="skewcw")
print(f"  skew q=2 square at its proven value 17: omega <= {b.value}")
