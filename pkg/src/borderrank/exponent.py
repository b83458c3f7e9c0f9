"""Matrix-multiplication exponent bounds from border-rank facts.

Logarithms are the only inexact computation in the package. They are
evaluated with 50 decimal digits of working precision and rounded
half-even to four places, which leaves ample headroom over the two
decimal places usually quoted.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext

from .errors import ConsistencyError

_PRECISION = 50
_QUANT = Decimal("0.0001")

LOWER = "LOWER"
UPPER = "UPPER"


@dataclass
class BrFact:
    """One recorded border-rank fact about a named tensor."""

    tensor_id: str
    kind: str          # LOWER or UPPER
    value: int
    provenance: str = ""

    def __post_init__(self):
        if self.kind not in (LOWER, UPPER):
            raise ValueError(f"kind must be LOWER or UPPER, got {self.kind!r}")
        if self.value < 0:
            raise ValueError("border rank facts must be nonnegative")


@dataclass
class OmegaBound:
    """An upper bound on the exponent, held as a 4-decimal Decimal."""

    value: Decimal
    formula: str
    inputs: dict = dc_field(default_factory=dict)

    @property
    def value_float(self) -> float:
        return float(self.value)


def _exact_integer_log(base: int, value: int) -> int | None:
    power, e = 1, 0
    while power < value:
        power *= base
        e += 1
    return e if power == value else None


def bini_bound(n: int, r_upper: int) -> OmegaBound:
    """omega <= log_n(r) from a border-rank upper bound r for the n x n
    multiplication tensor."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if r_upper < n * n:
        raise ValueError(f"r_upper={r_upper} is below the conciseness "
                         f"floor n^2={n * n}")
    exact = _exact_integer_log(n, r_upper)
    if exact is not None:
        value = Decimal(exact).quantize(_QUANT)
    else:
        with localcontext() as ctx:
            ctx.prec = _PRECISION
            raw = Decimal(r_upper).ln() / Decimal(n).ln()
        value = raw.quantize(_QUANT, rounding=ROUND_HALF_EVEN)
    return OmegaBound(value, "bini", {"n": n, "r_upper": r_upper})


def cw_omega_bound(q: int, k: int, r_upper: int,
                   formula: str = "cw") -> OmegaBound:
    """omega <= log_q((4/27) * r^(3/k)) from a border-rank upper bound r
    on the k-th Kronecker power of the small q-parameter tensor.

    The skew cousin obeys the identical formula shape; pass
    formula="skewcw" to tag the provenance.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    if r_upper < q + 1:
        raise ValueError(f"r_upper={r_upper} is below the conciseness "
                         f"floor q+1={q + 1}")
    if formula not in ("cw", "skewcw"):
        raise ValueError(f"unknown formula tag {formula!r}")
    with localcontext() as ctx:
        ctx.prec = _PRECISION
        raw = (Decimal(4).ln() - Decimal(27).ln()
               + Decimal(3) / Decimal(k) * Decimal(r_upper).ln()) \
            / Decimal(q).ln()
    value = raw.quantize(_QUANT, rounding=ROUND_HALF_EVEN)
    if value < 2:
        raise ConsistencyError(
            f"exponent bound {value} fell below 2; inputs are inconsistent")
    return OmegaBound(value, formula,
                      {"q": q, "k": k, "r_upper": r_upper})


# ---------------------------------------------------------------------------
# Kronecker-power ledger

def parse_power_id(tensor_id: str):
    """Split "base^k" into (base, k); plain ids are power 1."""
    base, sep, suffix = tensor_id.rpartition("^")
    if sep and base and suffix.isdigit() and int(suffix) >= 1:
        return base, int(suffix)
    return tensor_id, 1


def power_id(base: str, k: int) -> str:
    return base if k == 1 else f"{base}^{k}"


def kron_ledger_update(facts) -> list:
    """Close UPPER facts under submultiplicativity of the Kronecker
    product for the powers already registered in the ledger.

    Upper bounds multiply: an upper of u on base^i and v on base^j gives
    u*v on base^(i+j). Lower bounds are never propagated this way (the
    product inequality can be strict in both directions). Facts are
    consolidated to one LOWER (the max) and one UPPER (the min) per
    tensor id; a LOWER above an UPPER raises ConsistencyError.
    """
    groups: dict = {}
    for fact in facts:
        base, k = parse_power_id(fact.tensor_id)
        entry = groups.setdefault(base, {})
        slot = entry.setdefault(k, {LOWER: None, UPPER: None})
        cur = slot[fact.kind]
        if fact.kind == LOWER:
            if cur is None or fact.value > cur.value:
                slot[LOWER] = fact
        else:
            if cur is None or fact.value < cur.value:
                slot[UPPER] = fact

    for base, entry in groups.items():
        registered = sorted(entry)
        changed = True
        while changed:
            changed = False
            for k in registered:
                for i in registered:
                    j = k - i
                    if j < i or j not in entry:
                        continue
                    ui = entry[i][UPPER]
                    uj = entry[j][UPPER]
                    if ui is None or uj is None:
                        continue
                    cand = ui.value * uj.value
                    cur = entry[k][UPPER]
                    if cur is None or cand < cur.value:
                        entry[k][UPPER] = BrFact(
                            power_id(base, k), UPPER, cand,
                            provenance=f"submultiplicative: "
                                       f"{power_id(base, i)} * "
                                       f"{power_id(base, j)}")
                        changed = True

    out = []
    for base in sorted(groups):
        for k in sorted(groups[base]):
            slot = groups[base][k]
            low, up = slot[LOWER], slot[UPPER]
            if low is not None and up is not None and low.value > up.value:
                raise ConsistencyError(
                    f"{power_id(base, k)}: lower bound {low.value} exceeds "
                    f"upper bound {up.value}")
            if low is not None:
                out.append(low)
            if up is not None:
                out.append(up)
    return out
