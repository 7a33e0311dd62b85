"""Golden tables and the computations that reproduce them.

The shipped data file carries one record per published table row:
integers only, space separated, stable field order

    table g d r beta alpha c2 polkind polm poln btype count v1..vk has_omega omega

with polkind 1 = suitable, 2 = mixed J(m,n), 3 = anticanonical, and
btype 0 = even-degree Betti prefix, 1 = b'-prefix.  The verifier
recomputes every row from scratch and diffs cell by cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .geometry import Polarization, RuledSurface
from .hseries import H_boundary, H_suitable, HSeries
from .omega import h_anticanonical, h_from_H, omega_from_h, omega_results
from .wallcross import wallcross_H2, wallcross_H3

TABLE_LABELS = {
    1: "rank 2, suitable, genus 0",
    2: "rank 2, suitable, genus 1",
    3: "rank 2, suitable, genus 2",
    4: "rank 2, J(6,5), S(1,0)",
    5: "rank 2, J(6,5), S(1,2)",
    6: "rank 2, anticanonical, S(0,0)",
    7: "rank 2, anticanonical, S(0,1)",
    8: "rank 3, suitable, genus 0",
    9: "rank 3, suitable, genus 1",
    10: "rank 3, suitable, genus 2",
    11: "rank 3, J(6,5), S(1,0)",
    12: "rank 3, J(6,5), S(1,2)",
    13: "rank 3, anticanonical, S(0,0)",
    14: "rank 3, anticanonical, S(0,1)",
}

POL_KINDS = {1: "suitable", 2: "mixed", 3: "anticanonical"}
POL_CODES = {v: k for k, v in POL_KINDS.items()}


@dataclass(frozen=True)
class GoldenRow:
    table: int
    g: int
    d: int
    r: int
    beta: int
    alpha: int
    c2: int
    polarization: Polarization
    btype: int  # 0 = Betti prefix, 1 = b' prefix
    values: tuple
    omega: int | None

    def polarization_code(self):
        kind = POL_CODES[self.polarization.kind]
        if self.polarization.kind == "mixed":
            return kind, int(self.polarization.m), int(self.polarization.n)
        return kind, 0, 0


def format_row(row):
    kind, m, n = row.polarization_code()
    fields = [row.table, row.g, row.d, row.r, row.beta, row.alpha, row.c2,
              kind, m, n, row.btype, len(row.values), *row.values]
    if row.omega is None:
        fields += [0, 0]
    else:
        fields += [1, row.omega]
    return " ".join(str(x) for x in fields)


def parse_row(line):
    parts = [int(x) for x in line.split()]
    if len(parts) < 14:
        raise ValueError(f"malformed golden row: {line!r}")
    (table, g, d, r, beta, alpha, c2, polkind, polm, poln, btype, count) = parts[:12]
    rest = parts[12:]
    if len(rest) != count + 2:
        raise ValueError(f"golden row length mismatch: {line!r}")
    values = tuple(rest[:count])
    has_omega, omega = rest[count], rest[count + 1]
    if polkind == 2:
        pol = Polarization.mixed(polm, poln)
    else:
        pol = Polarization(POL_KINDS[polkind])
    return GoldenRow(table, g, d, r, beta, alpha, c2, pol, btype, values,
                     omega if has_omega else None)


def load_golden(path=None):
    """Parse the golden data file into rows (FileNotFoundError if absent)."""
    if path is None:
        ref = resources.files("ruleddt.data").joinpath("golden_tables.txt")
        text = ref.read_text()
    else:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(parse_row(line))
    if not rows:
        raise ValueError("golden data file contains no rows")
    return rows


def h_series_for(S, r, gamma1, pol, K, cache=None):
    """The rational-invariant series h for one class at one polarization.

    Assembles the chamber/wall-crossed stack series for all ranks on the
    slope ray and pushes them through the decomposition formula; the
    anticanonical case uses the non-generic variant with its theta sums.
    Returns {rank: HSeries of h} for every rank needed downstream.
    """
    beta, alpha = gamma1
    cache = cache if cache is not None else {}
    if pol.kind == "boundary":
        raise ValueError("no invariants at the boundary polarization; use suitable")
    if pol.kind == "anticanonical":
        if (beta, alpha) != (0, 0):
            raise ValueError("anticanonical tables are for gamma_1 = 0")
        q = 1 if r == 2 else 2
        out = {1: HSeries(S, 1, 0, 0, pol, H_boundary(S, 1, (0, 0), K, q).series)}
        if r >= 2:
            out[r] = h_anticanonical(S, r, K, boundary_cache=cache)
        return out
    if pol.kind == "suitable":
        Hs = {}
        for rp in range(1, r + 1):
            g1p = _ray_gamma1(r, beta, alpha, rp)
            if g1p is not None:
                Hs[rp] = H_suitable(S, rp, g1p, K, boundary_cache=cache)
    else:
        m, n = pol.m, pol.n
        q = _grid_for(S, r, beta, alpha)
        Hs = {1: HSeries(S, 1, 0, 0, pol, H_boundary(S, 1, (0, 0), K, q).series)}
        if r == 2:
            Hs[2] = wallcross_H2(S, (beta, alpha), m, n, K, q, boundary_cache=cache)
        elif r == 3:
            if _ray_gamma1(r, beta, alpha, 2) is not None:
                Hs[2] = wallcross_H2(S, (2 * beta // 3, 2 * alpha // 3), m, n, K, q,
                                     boundary_cache=cache)
            Hs[3] = wallcross_H3(S, (beta, alpha), m, n, K, q, boundary_cache=cache)
    hs = {}
    for rp in _divisor_ranks(r, beta, alpha):
        g1p = _ray_gamma1(r, beta, alpha, rp)
        hs[rp] = h_from_H({j: s for j, s in Hs.items() if j <= rp}, rp, g1p, K)
    return hs


def _ray_gamma1(r, beta, alpha, rp):
    b = Fraction(beta * rp, r)
    a = Fraction(alpha * rp, r)
    if b.denominator != 1 or a.denominator != 1:
        return None
    return int(b), int(a)


def _divisor_ranks(r, beta, alpha):
    return [rp for rp in range(1, r + 1)
            if r % rp == 0 and _ray_gamma1(r, beta, alpha, rp) is not None]


def _grid_for(S, r, beta, alpha):
    """Grid denominator accommodating r*Delta for the class and its walls."""
    if r == 1:
        return 1
    if beta % r == 0 and alpha % r == 0:
        return 1
    return 4 if r == 2 else 12


def omega_table(S, r, gamma1, pol, K, cache=None):
    """Full pipeline: {c2: OmegaResult} for one class family."""
    pol.validate_for(S)
    hs = h_series_for(S, r, gamma1, pol, K, cache=cache)
    om = omega_from_h(hs, r, gamma1, K)
    return omega_results(om)


def computed_cells(row, results):
    """The (values, omega) the pipeline produced for a golden row's cells."""
    res = results.get(Fraction(row.c2))
    if res is None:
        return None, None
    if row.btype == 0:
        values = res.listed_betti()
    else:
        values = res.listed_betti_prime()
    return values, res.omega


@dataclass
class Mismatch:
    table: int
    c2: int
    column: str
    expected: object
    got: object

    def __str__(self):
        label = TABLE_LABELS.get(self.table, "?")
        return (f"table {self.table} ({label}), c2={self.c2}, {self.column}: "
                f"expected {self.expected}, got {self.got}")


def verify_rows(rows, jobs=1):
    """Recompute every golden row; returns a list of Mismatch objects.

    Rows are grouped by (surface, rank, class, polarization) so each
    series pipeline runs once at the largest truncation the group needs.
    """
    groups = {}
    for row in rows:
        key = (row.g, row.d, row.r, row.beta, row.alpha,
               row.polarization.kind, row.polarization.m, row.polarization.n)
        groups.setdefault(key, []).append(row)
    work = sorted(groups.items(), key=lambda kv: kv[0][:5] + (str(kv[0][5:]),))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_verify_group, work))
    else:
        outcomes = [_verify_group(item) for item in work]
    mismatches = []
    for out in outcomes:
        mismatches.extend(out)
    mismatches.sort(key=lambda mm: (mm.table, mm.c2, mm.column))
    return mismatches


def _verify_group(item):
    key, rows = item
    g, d, r, beta, alpha, kind, m, n = key
    S = RuledSurface(g, d)
    pol = Polarization.mixed(m, n) if kind == "mixed" else Polarization(kind)
    K = max(row.c2 for row in rows)
    results = omega_table(S, r, (beta, alpha), pol, K)
    mismatches = []
    for row in rows:
        values, omega = computed_cells(row, results)
        if values is None:
            mismatches.append(Mismatch(row.table, row.c2, "row", list(row.values),
                                       "no invariant computed"))
            continue
        expected = list(row.values)
        got = values[: len(expected)]
        if got != expected:
            for i, (e, v) in enumerate(zip(expected, got)):
                if e != v:
                    col = f"b{'~' if row.btype else ''}_{i if row.btype else 2 * i}"
                    mismatches.append(Mismatch(row.table, row.c2, col, e, v))
            if len(got) != len(expected):
                mismatches.append(Mismatch(row.table, row.c2, "length",
                                           len(expected), len(got)))
        if len(values) < len(expected):
            mismatches.append(Mismatch(row.table, row.c2, "length",
                                       len(expected), len(values)))
        if row.omega is not None and omega != row.omega:
            mismatches.append(Mismatch(row.table, row.c2, "omega", row.omega, omega))
    return mismatches
