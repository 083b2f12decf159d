r"""Exact tiny-n expectation thresholds.

At n <= 5 the ground set X (all pairs) has at most 10 elements, so the
F-free down-set can be handled exhaustively:

* the coverage universe shrinks to the edge-maximal F-free graphs (every
  F-free graph is a subgraph of one, and down-closure membership is
  inherited by subgraphs);
* certificate sets may be restricted to unions of the maximal graphs they
  cover: shrinking any S to that union preserves coverage and raises
  |X \ S|, so the weight (1-p)^{|X \ S|} can only drop;
* the expectation threshold q comes from branch-and-bound set cover over
  those candidates, the fractional threshold q_f from a covering LP solved
  by a dense two-phase simplex with Bland's anti-cycling rule;
* both optima are non-increasing in p (each weight is), so bisection on p
  against the 1/2 budget is valid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import LabeledGraph, PatternGraph, parse_pattern
from .subiso import contains_copy

N_CAP = 5
SIMPLEX_TOL = 1e-9
DEFAULT_P_TOL = 1e-4


class ScaleError(ValueError):
    pass


def _check_cap(n: int):
    if n > N_CAP:
        raise ScaleError(f"exact computation capped at n <= {N_CAP}, got {n}")
    if n < 2:
        raise ValueError("need n >= 2")


@lru_cache(maxsize=None)
def _maximal_ffree_bits(n: int, pattern_text: str) -> tuple[int, ...]:
    f = parse_pattern(pattern_text)
    m = n * (n - 1) // 2
    ffree = [g for g in range(1 << m)
             if not contains_copy(LabeledGraph(n, g), f)]
    ffree_set = set(ffree)
    out = []
    for g in ffree:
        absent = ((1 << m) - 1) ^ g
        maximal = True
        while absent:
            low = absent & -absent
            if (g | low) in ffree_set:
                maximal = False
                break
            absent ^= low
        if maximal:
            out.append(g)
    return tuple(sorted(out))


def enumerate_maximal_ffree(n: int, f: PatternGraph) -> list[LabeledGraph]:
    """All edge-maximal F-free graphs on [n] (brute force over 2^{n(n-1)/2})."""
    _check_cap(n)
    return [LabeledGraph(n, b) for b in _maximal_ffree_bits(n, f.to_text())]


@dataclass(frozen=True)
class Certificate:
    members: tuple[LabeledGraph, ...]
    p: float

    @property
    def total_weight(self) -> float:
        if not self.members:
            return 0.0
        m = self.members[0].pair_count
        return sum((1.0 - self.p) ** (m - g.edge_count) for g in self.members)


def verify_certificate(cert: Certificate, f: PatternGraph, n: int) -> bool:
    """Weight budget <= 1/2 and every maximal F-free graph lies under a member."""
    for g in cert.members:
        if g.n != n:
            raise ValueError("certificate member on wrong vertex count")
    if cert.total_weight > 0.5:
        return False
    member_bits = [g.bits for g in cert.members]
    for mb in _maximal_ffree_bits(n, f.to_text()):
        if not any(mb & ~s == 0 for s in member_bits):
            return False
    return True


def _candidates(n: int, f: PatternGraph) -> tuple[list[int], list[int]]:
    """(elements, candidates): maximal F-free bitmasks and their union closure.

    Each candidate also records nothing about which subset generated it; the
    coverage relation M subset-of S is recomputed bitwise where needed.
    """
    elements = list(_maximal_ffree_bits(n, f.to_text()))
    closure = set(elements)
    frontier = set(elements)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in elements:
                u = a | b
                if u not in closure:
                    fresh.add(u)
        closure |= fresh
        frontier = fresh
    return elements, sorted(closure)


def _coverage_and_weights(elements, candidates, m, p):
    cover = [sum(1 << i for i, e in enumerate(elements) if e & ~c == 0)
             for c in candidates]
    weights = [(1.0 - p) ** (m - c.bit_count()) for c in candidates]
    return cover, weights


def _prune_dominated(candidates, cover, weights):
    keep = []
    for i in range(len(candidates)):
        dominated = False
        for j in range(len(candidates)):
            if i == j:
                continue
            if cover[j] & cover[i] == cover[i] and weights[j] <= weights[i]:
                if cover[j] != cover[i] or weights[j] < weights[i] or j < i:
                    dominated = True
                    break
        if not dominated:
            keep.append(i)
    return ([candidates[i] for i in keep], [cover[i] for i in keep],
            [weights[i] for i in keep])


def min_cover_cost(n: int, p: float, f: PatternGraph,
                   return_cover: bool = False):
    """Exact minimum certificate weight covering all maximal F-free graphs.

    Branch and bound: branch on the uncovered element with fewest covering
    candidates; a greedy solution seeds the incumbent; branches are cut by
    partial cost plus a per-element lower bound.
    """
    _check_cap(n)
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"p={p} outside [0, 1]")
    elements, candidates = _candidates(n, f)
    m = n * (n - 1) // 2
    k = len(elements)
    cover, weights = _coverage_and_weights(elements, candidates, m, p)
    candidates, cover, weights = _prune_dominated(candidates, cover, weights)
    full = (1 << k) - 1
    nc = len(candidates)
    covers_by_elem = [[c for c in range(nc) if cover[c] >> i & 1]
                      for i in range(k)]
    if any(not lst for lst in covers_by_elem):
        raise RuntimeError("some maximal graph has no covering candidate")

    def greedy() -> tuple[float, list[int]]:
        covered, cost, picked = 0, 0.0, []
        while covered != full:
            best_i, best_ratio = None, None
            for i in range(nc):
                new = (cover[i] & ~covered).bit_count()
                if new == 0:
                    continue
                ratio = weights[i] / new
                if best_ratio is None or ratio < best_ratio:
                    best_i, best_ratio = i, ratio
            covered |= cover[best_i]
            cost += weights[best_i]
            picked.append(best_i)
        return cost, picked

    best_cost, best_pick = greedy()

    def lower_bound(uncovered: int) -> float:
        # amortized: a set of weight w covering c live elements pays >= w/c each
        per_cand = [None] * nc
        for c in range(nc):
            cu = (cover[c] & uncovered).bit_count()
            if cu:
                per_cand[c] = weights[c] / cu
        lb = 0.0
        u = uncovered
        while u:
            low = u & -u
            i = low.bit_length() - 1
            lb += min(per_cand[c] for c in covers_by_elem[i]
                      if per_cand[c] is not None)
            u ^= low
        return lb

    seen: dict[int, float] = {}

    def branch(uncovered: int, cost: float, picked: list[int]):
        nonlocal best_cost, best_pick
        if uncovered == 0:
            if cost < best_cost:
                best_cost, best_pick = cost, list(picked)
            return
        prev = seen.get(uncovered)
        if prev is not None and cost >= prev:
            return
        seen[uncovered] = cost
        if cost + lower_bound(uncovered) >= best_cost - 1e-15:
            return
        # branch on the uncovered element with fewest covering candidates
        target, fewest = None, None
        u = uncovered
        while u:
            low = u & -u
            i = low.bit_length() - 1
            if fewest is None or len(covers_by_elem[i]) < fewest:
                target, fewest = i, len(covers_by_elem[i])
            u ^= low
        for c in sorted(covers_by_elem[target], key=lambda c: weights[c]):
            picked.append(c)
            branch(uncovered & ~cover[c], cost + weights[c], picked)
            picked.pop()

    branch(full, 0.0, [])
    if return_cover:
        return best_cost, [LabeledGraph(n, candidates[i]) for i in best_pick]
    return best_cost


@dataclass(frozen=True)
class ThresholdValue:
    value: float
    degenerate: bool   # no p < 1 admits a cost <= 1/2 certificate
    tolerance: float


def _bisect_budget(cost_at, tolerance: float) -> ThresholdValue:
    if cost_at(1.0) > 0.5:
        return ThresholdValue(1.0, True, tolerance)
    if cost_at(0.0) <= 0.5:
        return ThresholdValue(0.0, False, tolerance)
    lo, hi = 0.0, 1.0
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if cost_at(mid) <= 0.5:
            hi = mid
        else:
            lo = mid
    return ThresholdValue(0.5 * (lo + hi), False, tolerance)


def q_exact(n: int, f: PatternGraph, tolerance: float = DEFAULT_P_TOL) -> ThresholdValue:
    """Smallest p whose optimal integral certificate costs <= 1/2."""
    _check_cap(n)
    return _bisect_budget(lambda p: min_cover_cost(n, p, f), tolerance)


# ---------------------------------------------------------------------------
# covering LP: min sum w(S) lambda(S)  s.t.  sum_{S >= M} lambda(S) >= 1
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FractionalCertificate:
    support: tuple[tuple[LabeledGraph, float], ...]
    p: float
    total_cost: float


def _simplex(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> tuple[float, np.ndarray]:
    """min c.x s.t. a x = b, x >= 0; two-phase tableau, Bland's rule.

    Assumes b >= 0.  Returns (optimum, x).
    """
    m, nvar = a.shape
    # phase 1: artificials
    tab = np.zeros((m + 1, nvar + m + 1))
    tab[:m, :nvar] = a
    tab[:m, nvar:nvar + m] = np.eye(m)
    tab[:m, -1] = b
    basis = list(range(nvar, nvar + m))
    tab[m, :nvar + m] = 0.0
    # phase-1 objective row: minimize sum of artificials
    tab[m, :] = -tab[:m, :].sum(axis=0)
    tab[m, nvar:nvar + m] = 0.0

    def pivot(row: int, col: int):
        tab[row] /= tab[row, col]
        for r in range(m + 1):
            if r != row and abs(tab[r, col]) > 0:
                tab[r] -= tab[r, col] * tab[row]
        basis[row] = col

    def iterate(allowed: int):
        while True:
            col = -1
            for jcol in range(allowed):
                if tab[m, jcol] < -SIMPLEX_TOL:
                    col = jcol
                    break
            if col < 0:
                return
            row, best = -1, None
            for r in range(m):
                if tab[r, col] > SIMPLEX_TOL:
                    ratio = tab[r, -1] / tab[r, col]
                    if best is None or ratio < best - SIMPLEX_TOL or (
                            abs(ratio - best) <= SIMPLEX_TOL and basis[r] < basis[row]):
                        row, best = r, ratio
            if row < 0:
                raise RuntimeError("LP unbounded")
            pivot(row, col)

    iterate(nvar + m)
    if tab[m, -1] < -1e-7:
        raise RuntimeError("LP infeasible")
    # drive artificials out of the basis where possible
    for r in range(m):
        if basis[r] >= nvar:
            for jcol in range(nvar):
                if abs(tab[r, jcol]) > SIMPLEX_TOL:
                    pivot(r, jcol)
                    break
    # phase 2
    tab[m, :] = 0.0
    tab[m, :nvar] = c
    for r in range(m):
        if basis[r] < nvar:
            tab[m] -= c[basis[r]] * tab[r]
    tab[:, nvar:nvar + m] = 0.0  # forbid artificials
    iterate(nvar)
    x = np.zeros(nvar)
    for r in range(m):
        if basis[r] < nvar:
            x[basis[r]] = tab[r, -1]
    return float(c @ x), x


def lp_min_cost(n: int, p: float, f: PatternGraph) -> tuple[float, FractionalCertificate]:
    """Exact covering-LP optimum with an optimal fractional certificate.

    Constraints only for edge-maximal F-free graphs M: any F-free graph is a
    subgraph of some M, and S >= M implies S >= F for every F <= M, so the
    remaining constraints are implied.
    """
    _check_cap(n)
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"p={p} outside [0, 1]")
    elements, candidates = _candidates(n, f)
    m_pairs = n * (n - 1) // 2
    cover, weights = _coverage_and_weights(elements, candidates, m_pairs, p)
    candidates, cover, weights = _prune_dominated(candidates, cover, weights)
    k = len(elements)
    nv = len(candidates)
    # A lambda - s = 1
    a = np.zeros((k, nv + k))
    for j in range(nv):
        for i in range(k):
            if cover[j] >> i & 1:
                a[i, j] = 1.0
    a[:, nv:] = -np.eye(k)
    b = np.ones(k)
    c = np.concatenate([np.array(weights, dtype=float), np.zeros(k)])
    opt, x = _simplex(a, b, c)
    support = tuple(
        (LabeledGraph(n, candidates[j]), float(x[j]))
        for j in range(nv) if x[j] > SIMPLEX_TOL
    )
    return opt, FractionalCertificate(support, p, opt)


def qf_exact(n: int, f: PatternGraph, tolerance: float = DEFAULT_P_TOL) -> ThresholdValue:
    """Smallest p whose optimal fractional certificate costs <= 1/2."""
    _check_cap(n)
    return _bisect_budget(lambda p: lp_min_cost(n, p, f)[0], tolerance)


# ---------------------------------------------------------------------------
# exact threshold p_c at tiny n, and the chain report
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _ffree_edge_profile(n: int, pattern_text: str) -> tuple[int, ...]:
    f = parse_pattern(pattern_text)
    m = n * (n - 1) // 2
    counts = [0] * (m + 1)
    for g in range(1 << m):
        if not contains_copy(LabeledGraph(n, g), f):
            counts[g.bit_count()] += 1
    return tuple(counts)


def mu_exact(n: int, p: float, f: PatternGraph) -> float:
    """Exact mu_p of the F-free down-set by summing the product measure."""
    _check_cap(n)
    m = n * (n - 1) // 2
    counts = _ffree_edge_profile(n, f.to_text())
    return sum(counts[e] * p ** e * (1.0 - p) ** (m - e) for e in range(m + 1))


def pc_exact(n: int, f: PatternGraph, tolerance: float = 1e-12) -> float:
    """Unique p with mu_p = 1/2, by bisection on the exact polynomial."""
    _check_cap(n)
    if mu_exact(n, 1.0, f) >= 0.5:
        raise ValueError("mu_p never drops below 1/2: threshold undefined at this n")
    lo, hi = 0.0, 1.0
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if mu_exact(n, mid, f) >= 0.5:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class GapReport:
    n: int
    pattern: str
    pc: float
    qf: float
    q: float
    q_degenerate: bool
    qf_degenerate: bool
    chain_holds: bool
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern,
            "pc": self.pc,
            "qf": self.qf,
            "q": self.q,
            "q_degenerate": self.q_degenerate,
            "qf_degenerate": self.qf_degenerate,
            "ratio_q_pc": self.q / self.pc if self.pc > 0 else None,
            "ratio_qf_pc": self.qf / self.pc if self.pc > 0 else None,
            "chain_holds": self.chain_holds,
            "tolerance": self.tolerance,
        }


def gap_report(n: int, f: PatternGraph, tolerance: float = DEFAULT_P_TOL) -> GapReport:
    """Assemble p_c <= q_f <= q with exact tiny-n values."""
    _check_cap(n)
    pc = pc_exact(n, f)
    qf = qf_exact(n, f, tolerance)
    q = q_exact(n, f, tolerance)
    slack = 1e-6 + tolerance
    chain = pc <= qf.value + slack and qf.value <= q.value + slack
    return GapReport(n, f.to_text(), pc, qf.value, q.value,
                     q.degenerate, qf.degenerate, chain, tolerance)
