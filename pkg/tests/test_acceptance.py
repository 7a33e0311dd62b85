"""Acceptance criteria, one test per criterion, tolerance zero throughout.

Each test prints a single PASS/FAIL line (visible with ``pytest -s`` or
in the captured output) in addition to the usual pytest verdict.
"""

import random
import time
from fractions import Fraction

import pytest

from ruleddt.geometry import Polarization, RuledSurface
from ruleddt.graded import adams, plethystic_exp, plethystic_log
from ruleddt.hseries import H_suitable
from ruleddt.identity import _random_graded, _random_series
from ruleddt.omega import (h_from_H, omega_from_h, omega_inverse_check,
                           omega_results, _h_decomposition_sum, _h_log_route)
from ruleddt.hseries import HSeries
from ruleddt.laurent import LaurentPoly
from ruleddt.ratfunc import RatFunc
from ruleddt.tables import load_golden, omega_table, verify_rows
from ruleddt.wallcross import (joyce_wallcross_general, wallcross_H2,
                               wallcross_H3)


def _report(n, desc, ok):
    print(f"\nACCEPTANCE {n} ({desc}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {n} failed: {desc}"


def test_criterion_1_golden_tables():
    """All fourteen published tables reproduce bit-exactly within 60 s."""
    t0 = time.time()
    rows = load_golden()
    mismatches = verify_rows(rows)
    elapsed = time.time() - t0
    for mm in mismatches:
        print(" ", mm)
    ok = not mismatches and len(rows) == 51 and elapsed < 60.0
    _report(1, f"golden tables, {len(rows)} rows in {elapsed:.1f}s", ok)


def test_criterion_2_two_route_equality():
    """Decomposition sum and formal-log route agree for r<=3, g<=2, K<=6."""
    ok = True
    K = 6
    for g in (0, 1, 2):
        S = RuledSurface(g, 0)
        cache = {}
        Hs = {r: H_suitable(S, r, (0, 0), K, boundary_cache=cache)
              for r in (1, 2, 3)}
        for r in (1, 2, 3):
            inputs = {j: Hs[j] for j in range(1, r + 1)}
            direct = _h_decomposition_sum(inputs, r, 0, 0)
            via_log = _h_log_route(inputs, r, 0, 0)
            ok = ok and direct == via_log
    _report(2, "two-route h-series equality", ok)


def test_criterion_3_wallcross_oracle_equivalence():
    """Joyce enumeration equals the resummed forms, 3 polarizations per rank."""
    ok = True
    S = RuledSurface(1, 0)
    for (m, n) in ((6, 5), (1, 1), (3, 2)):
        a = wallcross_H2(S, (0, 0), m, n, 4)
        b = joyce_wallcross_general(S, 2, (0, 0), Polarization.mixed(m, n), 4)
        ok = ok and a.series == b.series
    for (m, n, K) in ((6, 5, 3), (1, 1, 3), (2, 1, 2)):
        a = wallcross_H3(S, (0, 0), m, n, K)
        b = joyce_wallcross_general(S, 3, (0, 0), Polarization.mixed(m, n), K)
        ok = ok and a.series == b.series
    _report(3, "wall-crossing routes coincide", ok)


def _sample_results():
    cases = [
        (RuledSurface(0, 0), 2, Polarization.suitable(), 5),
        (RuledSurface(0, 1), 3, Polarization.suitable(), 4),
        (RuledSurface(1, 0), 2, Polarization.mixed(6, 5), 3),
        (RuledSurface(2, 0), 2, Polarization.suitable(), 3),
        (RuledSurface(0, 0), 2, Polarization.anticanonical(), 5),
        (RuledSurface(0, 1), 3, Polarization.anticanonical(), 4),
    ]
    for S, r, pol, K in cases:
        yield S, omega_table(S, r, (0, 0), pol, K)


def test_criterion_4_structural_invariants():
    """Laurent exactness, palindromicity, nonnegativity, parity, divisibility.

    Extraction enforces these and raises otherwise; re-assert them on the
    produced data so the criterion is checked directly, not by absence of
    alarms alone.
    """
    ok = True
    count = 0
    for S, results in _sample_results():
        ok = ok and bool(results)
        for res in results.values():
            count += 1
            b = res.betti
            ok = ok and b[0] == 1 and all(v >= 0 for v in b)
            ok = ok and all(b[i] == b[2 * res.dim - i] for i in range(len(b)))
            if S.g == 0:
                ok = ok and not any(b[1::2])
            else:
                bp = res.betti_prime
                ok = ok and bp is not None and all(v >= 0 for v in bp)
                # reconstruct: (1-y)^(2g) * b'-polynomial == b-polynomial
                poly_b = LaurentPoly({n: v * (-1) ** n for n, v in enumerate(b)})
                poly_bp = LaurentPoly({n: v * (-1) ** n for n, v in enumerate(bp)})
                factor = LaurentPoly({0: 1, 1: -1}) ** (2 * S.g)
                ok = ok and poly_bp * factor == poly_b
    _report(4, f"structural invariants on {count} classes", ok)


def test_criterion_5_d_independence():
    """Suitable-chamber invariants are identical for d = 0, 1, 2, 3."""
    K = 6
    snapshots = []
    for d in (0, 1, 2, 3):
        S = RuledSurface(0, d)
        snap = {}
        for r in (1, 2, 3):
            res = omega_table(S, r, (0, 0), Polarization.suitable(), K)
            snap[r] = {c2: (v.dim, v.betti, v.omega) for c2, v in res.items()}
        snapshots.append(snap)
    ok = all(s == snapshots[0] for s in snapshots[1:])
    _report(5, "d-independence at the suitable polarization", ok)


def test_criterion_6_cross_polarization_consistency():
    """On S(1,2) the J(6,5) chamber agrees with the suitable chamber,
    computed through the wall-crossing code path."""
    S = RuledSurface(1, 2)
    ok = True
    for r, K in ((2, 3), (3, 2)):
        crossed = omega_table(S, r, (0, 0), Polarization.mixed(6, 5), K)
        chamber = omega_table(S, r, (0, 0), Polarization.suitable(), K)
        ok = ok and set(crossed) == set(chamber)
        for c2 in crossed:
            a, b = crossed[c2], chamber[c2]
            ok = ok and (a.betti, a.betti_prime, a.omega) == \
                (b.betti, b.betti_prime, b.omega)
        golden = {row.c2: row for row in load_golden()
                  if row.table == (5 if r == 2 else 12)}
        for c2, row in golden.items():
            got = crossed[Fraction(c2)]
            ok = ok and got.listed_betti_prime()[: len(row.values)] == list(row.values)
    _report(6, "wall-crossed chamber matches the suitable chamber", ok)


def test_criterion_7_algebraic_property_suite():
    """Exp/Log, Adams composition, multiplicativity, Moebius inversion and
    the scaled-discriminant identity: 100+ random cases each, under 10 s."""
    rng = random.Random(424242)
    t0 = time.time()
    ok = True
    for _ in range(100):
        f = _random_graded(rng, 3, 3)
        ok = ok and plethystic_log(plethystic_exp(f)) == f
    for _ in range(100):
        s = _random_series(rng, 4)
        ok = ok and adams(adams(s, 2), 3) == adams(s, 6)
        ok = ok and adams(adams(s, 2), 2) == adams(s, 4)
        ok = ok and adams(s, 1) == s
    for _ in range(100):
        f = _random_graded(rng, 2, 2)
        g = _random_graded(rng, 2, 2)
        ok = ok and plethystic_exp(f + g) == plethystic_exp(f) * plethystic_exp(g)
    S = RuledSurface(0, 0)
    pol = Polarization.suitable()
    for _ in range(100):
        hs = {r: HSeries(S, r, 0, 0, pol, _random_series(rng, 2))
              for r in (1, 2, 3)}
        om = {r: omega_from_h(hs, r, (0, 0), 2) for r in (1, 2, 3)}
        ok = ok and all(omega_inverse_check(om, hs, r, (0, 0)) for r in (1, 2, 3))
    from ruleddt.identity import check_scaled_discriminant
    ok = ok and check_scaled_discriminant(rng, 100) is None
    elapsed = time.time() - t0
    ok = ok and elapsed < 10.0
    _report(7, f"algebraic property suite in {elapsed:.1f}s", ok)
