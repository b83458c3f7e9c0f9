"""Acceptance criteria, one test per criterion, each printing a verdict
line (run pytest with -s to see them).

Criterion 4 note: the quoted published bound is reproduced as computed
from the formula with exact rational intermediates (2.4036, within the
published "at most 2.41"). The separate literal figure 2.4041 stated for
this case is not attainable from the formula; it is kept as a strict
xfail with the analysis recorded alongside the build notes.
"""

import json
import time
from decimal import Decimal

import pytest

from borderrank import certificates as certs
from borderrank import cli
from borderrank.exponent import BrFact, cw_omega_bound, kron_ledger_update
from borderrank.fields import GF_DEFAULT, QQ
from borderrank.io import load_ledger, save_tensor
from borderrank.koszul import koszul_bound
from borderrank.linalg import LinMap
from borderrank.tensor import (
    apply_gl,
    kronecker,
    random_low_rank_tensor,
    random_tensor,
)
from borderrank.zoo import (
    big_cw,
    cw_algebra,
    matmul,
    small_cw,
    structure_tensor,
    truncated_power_algebra,
    unit_tensor,
    w_state,
)

from conftest import small_cw_certificate

gf = GF_DEFAULT


def _verdict(number, ok, detail):
    print(f"ACCEPTANCE {number:02d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_01_koszul_matmul_theorem():
    t0 = time.perf_counter()
    b2 = koszul_bound(matmul(2, 2, 2, gf), 1, seed=0)
    t2 = time.perf_counter() - t0
    t0 = time.perf_counter()
    b3 = koszul_bound(matmul(3, 3, 3, gf), 2, seed=0)
    t3 = time.perf_counter() - t0
    ok = b2 == 6 and b3 >= 15 and t2 < 1.0 and t3 < 60.0
    _verdict(1, ok, f"wedge bounds: M<2> p=1 -> {b2} (={6}, {t2:.2f}s), "
                    f"M<3> p=2 -> {b3} (>=15, {t3:.2f}s)")


def test_criterion_02_commutator_bounds():
    c2 = certs.commutator_bound(matmul(2, 2, 2, gf), seed=0)
    c3 = certs.commutator_bound(matmul(3, 3, 3, gf), seed=0)
    _verdict(2, c2 == 6 and c3 >= 14,
             f"commutator bounds: M<2> -> {c2} (=6), M<3> -> {c3} (>=14)")


def test_criterion_03_small_cw_pinned(tmp_path):
    bound = koszul_bound(small_cw(2, gf), 1, seed=0)
    # machine-check the user-supplied r=4 family through the CLI and pin
    # the value in a ledger: lower 4 from the wedge bound, upper 4 from
    # the verified certificate
    tpath = tmp_path / "cw2.json"
    save_tensor(small_cw(2, QQ), str(tpath), name="cw_q2")
    cert = small_cw_certificate(2)
    cpath = tmp_path / "cert.json"
    cpath.write_text(json.dumps({
        "r": cert.r, "h": cert.h,
        "terms": [{"a": [[str(c) for c in poly] for poly in av],
                   "b": [[str(c) for c in poly] for poly in bv],
                   "c": [[str(c) for c in poly] for poly in cv]}
                  for av, bv, cv in cert.terms]}))
    ledger = tmp_path / "ledger.json"
    rc_verify = cli.main(["verify-decomposition", str(tpath), str(cpath),
                          "--ledger", str(ledger)])
    rc_analyze = cli.main(["analyze", str(tpath), "--methods", "koszul",
                           "--ledger", str(ledger),
                           "--out", str(tmp_path / "r.json")])
    facts = load_ledger(str(ledger))
    lowers = [f.value for f in facts
              if f.tensor_id == "cw_q2" and f.kind == "LOWER"]
    uppers = [f.value for f in facts
              if f.tensor_id == "cw_q2" and f.kind == "UPPER"]
    pinned = max(lowers) == min(uppers) == 4
    ok = bound == 4 and rc_verify == 0 and rc_analyze == 0 and pinned
    _verdict(3, ok, f"small CW q=2: wedge bound {bound} (=4), certificate "
                    f"r=4 verified, ledger pins border rank "
                    f"{max(lowers)}..{min(uppers)}")


def test_criterion_04_exponent_formulas():
    warm = cw_omega_bound(8, 1, 10)
    exact_two = cw_omega_bound(2, 1, 3)
    # the formula value, computed independently here with Decimal
    # arithmetic: log_8(4000/27) = 2.40363...
    ok = (abs(warm.value - Decimal("2.4036")) <= Decimal("0.0001")
          and warm.value <= Decimal("2.41")
          and exact_two.value == Decimal("2.0000"))
    _verdict(4, ok, f"exponent formulas: (8,1,10) -> {warm.value} "
                    f"(formula value 2.4036, within the published 2.41), "
                    f"(2,1,3) -> {exact_two.value} (=2.0000)")


@pytest.mark.xfail(strict=True,
                   reason="the stated figure 2.4041 does not equal the "
                          "formula value log_8(4/27*10^3) = 2.4036; see "
                          "the build notes")
def test_criterion_04_literal_figure():
    got = cw_omega_bound(8, 1, 10).value
    assert abs(got - Decimal("2.4041")) <= Decimal("0.0001")


def test_criterion_05_battery_sound_on_minimal_zoo():
    tensors = [(f"unit_{m}", unit_tensor(m, gf)) for m in range(1, 7)]
    tensors.append(("wstate", w_state(gf)))
    tensors += [(f"big_cw_{q}", big_cw(q, gf)) for q in range(1, 5)]
    tensors += [(f"poly_x{k}", structure_tensor(truncated_power_algebra(k, gf)))
                for k in range(1, 6)]
    failures = []
    for name, T in tensors:
        res = certs.minimal_br_battery(T, seed=42)
        bad = [rec.name for rec in res.records if rec.verdict == "FAIL"]
        if bad or res.minimal_border_rank == "refuted":
            failures.append((name, bad))
    _verdict(5, not failures,
             f"battery soundness on {len(tensors)} minimal-rank tensors: "
             f"failures={failures or 'none'}")


def test_criterion_06_battery_discriminates_generic_m4():
    # documented seed list: 600000 + i for i in range(500)
    seeds = [600000 + i for i in range(500)]
    refuted = 0
    for s in seeds:
        T = random_tensor((4, 4, 4), gf, seed=s)
        res = certs.minimal_br_battery(T, seed=s)
        if any(rec.verdict == "FAIL" for rec in res.records):
            refuted += 1
    rate = refuted / len(seeds)
    _verdict(6, rate >= 0.95,
             f"{refuted}/500 generic 4x4x4 tensors fail an obstruction "
             f"({100 * rate:.1f}% >= 95%)")


def test_criterion_07_111_implies_strassen_and_end_closed():
    # documented pools: generic seeds 700000+i / 720000+i and rank-m
    # sums 710000+i / 730000+i, 250 each, m in {4, 5}
    pools = []
    for m, gen_base, low_base in ((4, 700000, 710000), (5, 720000, 730000)):
        pools += [random_tensor((m, m, m), gf, seed=gen_base + i)
                  for i in range(250)]
        pools += [random_low_rank_tensor((m, m, m), m, gf, seed=low_base + i)
                  for i in range(250)]
    violations = 0
    pass_count = 0
    for idx, T in enumerate(pools):
        t111 = certs.test_111_minimal(T)
        if t111.verdict != "PASS":
            continue
        pass_count += 1
        strassen = certs.strassen_test(T, seed=idx)
        end = certs.end_closed_test(T, seed=idx)
        if strassen.verdict == "FAIL" or end.verdict == "FAIL":
            violations += 1
    _verdict(7, violations == 0 and pass_count >= 400,
             f"implication on 1000 tensors: {pass_count} triple-111 passes, "
             f"{violations} Strassen/End-closed violations (need 0)")


def test_criterion_08_relabeling_isomorphisms():
    ident2 = LinMap.identity(2, QQ)
    swap = LinMap.from_rows([[0, 1], [1, 0]], QQ)
    dual = structure_tensor(truncated_power_algebra(2, QQ))
    w_ok = apply_gl(dual, ident2, ident2, swap) == w_state(QQ)
    cw_ok = True
    for q in (2, 3):
        T = structure_tensor(cw_algebra(q, QQ))
        n = q + 2
        perm = [[0] * n for _ in range(n)]
        for t in range(n):
            src = n - 1 if t == 0 else (0 if t == n - 1 else t)
            perm[t][src] = 1
        K = LinMap.from_rows(perm, QQ)
        cw_ok = cw_ok and apply_gl(T, LinMap.identity(n, QQ),
                                   LinMap.identity(n, QQ), K) == big_cw(q, QQ)
    _verdict(8, w_ok and cw_ok,
             f"relabelings: dual numbers -> W state ({w_ok}), "
             f"CW algebra -> big CW for q=2,3 ({cw_ok})")


def test_criterion_09_unit_symmetry_dimensions():
    results = {}
    ok = True
    for m in range(1, 7):
        dims, obs = certs.symmetry_lie_dims(unit_tensor(m, gf))
        results[m] = dims
        ok = ok and dims == (2 * m, m, m, m) and obs.verdict == "PASS"
    _verdict(9, ok, f"unit tensor symmetry dims equal (2m, m, m, m) "
                    f"for m <= 6: {results}")


def test_criterion_10_kronecker_square_gap_documented():
    # ledger side: the verified upper 4 for the base tensor gives 16 for
    # the square by submultiplicativity; the wedge bound on the actual
    # 9x9x9 square certifies at least conciseness; the 9..16 gap is
    # reported, never silently closed
    facts = kron_ledger_update([
        BrFact("cw_q2", "UPPER", 4, "verified epsilon decomposition"),
        BrFact("cw_q2^2", "LOWER", 9, "wedge flattening p=0"),
    ])
    uppers = {f.tensor_id: f.value for f in facts if f.kind == "UPPER"}
    lowers = {f.tensor_id: f.value for f in facts if f.kind == "LOWER"}
    square = kronecker(small_cw(2, gf), small_cw(2, gf))
    p0 = koszul_bound(square, 0, "A")
    p1 = koszul_bound(square, 1, "A", seed=0)
    certified_lower = max(p0, p1)
    ok = (uppers.get("cw_q2^2") == 16 and p0 == 9 and certified_lower >= 9
          and lowers.get("cw_q2^2", 0) < uppers.get("cw_q2^2"))
    _verdict(10, ok,
             f"Kronecker square of small CW q=2: ledger upper 16 from "
             f"submultiplicativity, wedge lower bounds p0={p0}, p1={p1}; "
             f"gap {certified_lower}..16 documented (true value 16 needs "
             f"methods beyond this tool)")
