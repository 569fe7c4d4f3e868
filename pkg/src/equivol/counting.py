"""Exact isotypic dimensions of section spaces.

Two independent routes are implemented:

* the production route counts weight multiplicities by per-coordinate
  convolution of weight generating functions (exact integer DP), with
  SU(2) isotypic multiplicities extracted as m(mu) - m(mu+2) from torus
  weight counts;
* :func:`brute_force_oracle` re-derives the same numbers by enumerating
  every monomial basis element, and for SU(2) by computing the kernel
  dimension of the raising operator on each weight space by exact sparse
  Gaussian elimination.

The two must agree everywhere the oracle runs; the verification suites
assert this.

Vocabulary: for a dominant weight mu, ``full_weight_distribution`` maps mu
to the *multiplicity* N(mu) of the irreducible V_mu, while
``section_dimension`` returns the *isotypic dimension* N(mu)*dim(V_mu).
The two coincide for circle powers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, gcd

from .model import ProjectiveFactor, Scenario, ScenarioError

# Cap on DP grid cells (degree x weight-range x coordinates); raise for
# deliberately huge runs.
DEFAULT_CELL_BUDGET = 60_000_000

ORACLE_BUDGET = 10**6


class EngineLimit(RuntimeError):
    """A configurable safety bound was exceeded; raise it and retry."""


def total_dimension(s: Scenario, k: int) -> int:
    """dim H^0(M, L^k) = prod_j C(n_j + k d_j, n_j)."""
    return _prod(comb(f.dim + k * d, f.dim) for f, d in zip(s.factors, s.bundle.degrees))


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


# ---------------------------------------------------------------------------
# per-factor weight distributions


@lru_cache(maxsize=None)
def _dist_1d(ws: tuple[int, ...], m: int, cell_budget: int) -> tuple[int, tuple[int, ...]]:
    """Distribution of sum(alpha_i * w_i) over degree-m monomials in
    coordinates of integer weights `ws`.

    Returns (offset, counts) with counts[x - offset] = #monomials of
    weight x.
    """
    ws = list(ws)
    lo, hi = m * min(ws + [0]), m * max(ws + [0])
    size = hi - lo + 1
    if (m + 1) * size * len(ws) > cell_budget:
        raise EngineLimit(
            f"weight DP needs {(m + 1) * size * len(ws)} cells > budget {cell_budget}"
        )
    grid = [[0] * size for _ in range(m + 1)]
    grid[0][-lo] = 1
    for w in ws:
        for deg in range(1, m + 1):
            row, prev = grid[deg], grid[deg - 1]
            if w >= 0:
                row[w:] = [a + b for a, b in zip(row[w:], prev[: size - w])]
            else:
                row[:w] = [a + b for a, b in zip(row[:w], prev[-w:])]
    counts = grid[m]
    return lo, tuple(counts)


def _factor_dist_1d(factor: ProjectiveFactor, m: int, cell_budget: int):
    return _dist_1d(tuple(w[0] for w in factor.torus_weights()), m, cell_budget)


@lru_cache(maxsize=None)
def _dist_nd(ws: tuple[tuple[int, ...], ...], m: int) -> dict:
    """Dict-backed DP over genuinely multi-dimensional weights."""
    r = len(ws[0])
    zero = (0,) * r
    grid = [dict() for _ in range(m + 1)]
    grid[0][zero] = 1
    for w in ws:
        for deg in range(1, m + 1):
            row, prev = grid[deg], grid[deg - 1]
            for x, c in prev.items():
                y = tuple(a + b for a, b in zip(x, w))
                row[y] = row.get(y, 0) + c
    return grid[m]


@lru_cache(maxsize=None)
def _factor_dist_nd(factor: ProjectiveFactor, m: int) -> dict:
    """Rank >= 2 factor distribution; coordinates where all weights agree
    contribute the constant m * w and are split off so the DP runs in the
    genuinely varying dimensions only."""
    ws = factor.torus_weights()
    r = len(ws[0])
    varying = [i for i in range(r) if len({w[i] for w in ws}) > 1]
    base = [m * ws[0][i] for i in range(r)]
    if not varying:
        return {tuple(base): 1}
    if len(varying) == 1:
        i = varying[0]
        off, counts = _dist_1d(tuple(w[i] for w in ws), m, DEFAULT_CELL_BUDGET)
        out = {}
        for idx, c in enumerate(counts):
            if c:
                key = list(base)
                key[i] = off + idx
                out[tuple(key)] = c
        return out
    proj = tuple(tuple(w[i] for i in varying) for w in ws)
    out = {}
    for x, c in _dist_nd(proj, m).items():
        key = list(base)
        for i, xi in zip(varying, x):
            key[i] = xi
        out[tuple(key)] = c
    return out


@lru_cache(maxsize=None)
def _product_dist_1d(
    factors: tuple[ProjectiveFactor, ...], levels: tuple[int, ...], cell_budget: int
) -> tuple[int, tuple[int, ...]]:
    """Convolution over factors of rank-1 distributions (no twist applied)."""
    off, counts = _factor_dist_1d(factors[0], levels[0], cell_budget)
    counts = list(counts)
    for f, m in zip(factors[1:], levels[1:]):
        off2, c2 = _factor_dist_1d(f, m, cell_budget)
        out = [0] * (len(counts) + len(c2) - 1)
        for i, a in enumerate(counts):
            if a:
                for j, b in enumerate(c2):
                    if b:
                        out[i + j] += a * b
        off += off2
        counts = out
    return off, tuple(counts)


@lru_cache(maxsize=None)
def _product_dist_nd(factors: tuple[ProjectiveFactor, ...], levels: tuple[int, ...]) -> dict:
    dist = _factor_dist_nd(factors[0], levels[0])
    for f, m in zip(factors[1:], levels[1:]):
        d2 = _factor_dist_nd(f, m)
        out: dict = {}
        for x, a in dist.items():
            for y, b in d2.items():
                z = tuple(p + q for p, q in zip(x, y))
                out[z] = out.get(z, 0) + a * b
        dist = out
    return dist


def torus_weight_counts(s: Scenario, k: int, cell_budget: int = DEFAULT_CELL_BUDGET):
    """Torus-weight multiplicity function of H^0(M, L^k), twist included.

    Rank 1 returns (offset, counts tuple); rank >= 2 returns a dict keyed
    by weight vectors.
    """
    levels = tuple(k * d for d in s.bundle.degrees)
    shift = tuple(k * c for c in s.bundle.twist) if s.bundle.twist else None
    if s.group.torus_rank == 1:
        off, counts = _product_dist_1d(s.factors, levels, cell_budget)
        if shift:
            off += shift[0]
        return off, counts
    dist = _product_dist_nd(s.factors, levels)
    if shift and any(shift):
        dist = {tuple(a + b for a, b in zip(x, shift)): c for x, c in dist.items()}
    return dist


def _weight_count(s: Scenario, k: int, mu_vec: tuple[int, ...], cell_budget: int) -> int:
    if s.group.torus_rank == 1:
        off, counts = torus_weight_counts(s, k, cell_budget)
        i = mu_vec[0] - off
        return counts[i] if 0 <= i < len(counts) else 0
    return torus_weight_counts(s, k, cell_budget).get(mu_vec, 0)


def dim_irrep(s: Scenario, mu) -> int:
    """dim V_mu: 1 for circle powers, mu+1 for su2."""
    if s.group.is_su2:
        v = s.weight_vec(mu)[0]
        if v < 0:
            raise ScenarioError("su2 highest weights must be >= 0")
        return v + 1
    return 1


def isotypic_multiplicity(s: Scenario, k: int, mu, cell_budget: int = DEFAULT_CELL_BUDGET) -> int:
    """Multiplicity N(mu) of V_mu inside H^0(M, L^k)."""
    if k < 0:
        raise ScenarioError("tensor power must be >= 0")
    mu_vec = s.weight_vec(mu)
    if not s.group.is_su2:
        return _weight_count(s, k, mu_vec, cell_budget)
    v = mu_vec[0]
    if v < 0:
        raise ScenarioError("su2 highest weights must be >= 0")
    n = _weight_count(s, k, (v,), cell_budget) - _weight_count(s, k, (v + 2,), cell_budget)
    assert n >= 0, f"su2 weight distribution not unimodal at mu={v}, k={k}: engine bug"
    return n


def section_dimension(s: Scenario, k: int, mu, cell_budget: int = DEFAULT_CELL_BUDGET) -> int:
    """Isotypic dimension dim H^0(M, L^k)_mu = N(mu) * dim V_mu."""
    return isotypic_multiplicity(s, k, mu, cell_budget) * dim_irrep(s, mu)


def full_weight_distribution(s: Scenario, k: int, cell_budget: int = DEFAULT_CELL_BUDGET) -> dict:
    """Complete isotypic decomposition at level k: mu -> multiplicity N(mu).

    Conservation: sum over mu of dim(V_mu) * N(mu) equals
    :func:`total_dimension`.
    """
    if not s.group.is_su2:
        if s.group.torus_rank == 1:
            off, counts = torus_weight_counts(s, k, cell_budget)
            return {off + i: c for i, c in enumerate(counts) if c}
        return {s.weight_key(x): c for x, c in torus_weight_counts(s, k, cell_budget).items() if c}
    off, counts = torus_weight_counts(s, k, cell_budget)

    def m_of(w: int) -> int:
        i = w - off
        return counts[i] if 0 <= i < len(counts) else 0

    out = {}
    top = off + len(counts) - 1
    for mu in range(0, top + 1):
        n = m_of(mu) - m_of(mu + 2)
        assert n >= 0, f"su2 weight distribution not unimodal at mu={mu}, k={k}: engine bug"
        if n:
            out[mu] = n
    return out


@dataclass
class IsotypicTable:
    """Exact map (k, mu) -> isotypic dimension, for k = 0..k_max.

    Entries cover the support only; absent pairs have dimension 0.
    Treat instances as immutable once built.
    """

    scenario: Scenario
    k_max: int
    entries: dict = field(default_factory=dict)

    def sorted_items(self):
        s = self.scenario
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], s.weight_vec(kv[0][1])))


def isotypic_table(s: Scenario, k_max: int, cell_budget: int = DEFAULT_CELL_BUDGET) -> IsotypicTable:
    entries = {}
    for k in range(0, k_max + 1):
        for mu, n in full_weight_distribution(s, k, cell_budget).items():
            entries[(k, mu)] = n * dim_irrep(s, mu)
    return IsotypicTable(s, k_max, entries)


# ---------------------------------------------------------------------------
# brute-force oracle


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def brute_force_oracle(s: Scenario, k: int, budget: int = ORACLE_BUDGET) -> dict:
    """Recompute :func:`full_weight_distribution` by explicit enumeration.

    Circle powers: every monomial is listed and its weight summed directly.
    SU(2): the raising-operator matrix is built on each torus weight space
    and the multiplicity of V_mu is the exact kernel dimension
    dim W_mu - rank(E|_{W_mu}).

    Only feasible for small total dimension (default bound 10^6 basis
    monomials); meant as an independent check of the convolution engine.
    """
    total = total_dimension(s, k)
    if total > budget:
        raise EngineLimit(f"oracle enumeration needs {total} monomials > budget {budget}")
    if s.group.is_su2:
        return _su2_oracle(s, k)

    r = s.group.torus_rank
    shift = tuple(k * c for c in s.bundle.twist)
    factor_weight_lists = []
    for f, d in zip(s.factors, s.bundle.degrees):
        ws = f.torus_weights()
        lst = []
        for alpha in _compositions(k * d, f.dim + 1):
            lst.append(tuple(sum(a * w[i] for a, w in zip(alpha, ws)) for i in range(r)))
        factor_weight_lists.append(lst)

    counts: dict = {}
    stack = [shift]
    for lst in factor_weight_lists:
        stack = [tuple(a + b for a, b in zip(x, w)) for x in stack for w in lst]
    for x in stack:
        counts[x] = counts.get(x, 0) + 1
    return {s.weight_key(x): c for x, c in counts.items()}


def _su2_oracle(s: Scenario, k: int) -> dict:
    # basis of W per factor: coordinate (block i, a) = e+^a e-^(m_i - a),
    # torus weight 2a - m_i; the raising operator acts as the derivation
    # E . (i, a) = (m_i - a) * (i, a+1).
    factor_coords = []
    for f in s.factors:
        coords = []
        for i, m in enumerate(f.sym_powers):
            coords.extend((i, a, m) for a in range(m + 1))
        factor_coords.append(coords)

    monos = [()]
    for coords, d in zip(factor_coords, s.bundle.degrees):
        block = list(_compositions(k * d, len(coords)))
        monos = [m + b for m in monos for b in block]

    all_coords = [c for coords in factor_coords for c in coords]
    weight_of = [2 * a - m for (_, a, m) in all_coords]
    raise_to = {}
    for idx, (i, a, m) in enumerate(all_coords):
        if a < m:
            raise_to[idx] = (idx + 1, m - a)  # (i, a+1) sits next in the listing

    by_weight: dict[int, list] = {}
    index_in_space: dict = {}
    for mono in monos:
        w = sum(b * weight_of[i] for i, b in enumerate(mono))
        sp = by_weight.setdefault(w, [])
        index_in_space[mono] = len(sp)
        sp.append(mono)

    out = {}
    top = max(by_weight) if by_weight else 0
    for mu in range(0, top + 1):
        dim_mu = len(by_weight.get(mu, []))
        if dim_mu == 0:
            continue
        rows: dict[int, dict[int, int]] = {}
        for col, mono in enumerate(by_weight[mu]):
            for idx, b in enumerate(mono):
                if b and idx in raise_to:
                    tgt, coeff = raise_to[idx]
                    image = list(mono)
                    image[idx] -= 1
                    image[tgt] += 1
                    row = index_in_space[tuple(image)]
                    r = rows.setdefault(row, {})
                    r[col] = r.get(col, 0) + b * coeff
        n = dim_mu - _sparse_rank(list(rows.values()))
        assert n >= 0
        if n:
            out[mu] = n
    return out


def _sparse_rank(rows: list[dict[int, int]]) -> int:
    """Exact rank over Q of a sparse integer matrix given as row dicts."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {j: v // g for j, v in row.items()}
                pivots[c] = row
                rank += 1
                break
            p = pivots[c]
            a, b = row[c], p[c]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            new = {}
            for j, v in row.items():
                new[j] = fa * v
            for j, v in p.items():
                new[j] = new.get(j, 0) - fb * v
            row = {j: v for j, v in new.items() if v}
    return rank


def check_conservation(s: Scenario, k: int) -> None:
    """Assert total-dimension conservation of the isotypic decomposition."""
    dist = full_weight_distribution(s, k)
    lhs = sum(dim_irrep(s, mu) * n for mu, n in dist.items())
    rhs = total_dimension(s, k)
    if lhs != rhs:
        raise AssertionError(f"conservation violated at k={k}: {lhs} != {rhs}")
