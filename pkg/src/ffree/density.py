"""Exact rational graph densities.

For a pattern F:

* m(F)  = max over subgraphs J with v_J >= 1 of e_J / v_J
* m2(F) = max over subgraphs J with v_J >= 3 of (e_J - 1) / (v_J - 2)

Both maxima are attained by induced subgraphs (at a fixed vertex set, adding
every available edge only increases the ratio), so enumeration runs over the
2^{v_F} vertex subsets.  All arithmetic is exact via fractions.Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import PatternGraph

MAX_PATTERN_VERTICES = 16


class UndefinedDensityError(ValueError):
    pass


def _check_size(f: PatternGraph):
    if f.vertex_count > MAX_PATTERN_VERTICES:
        raise ValueError(f"pattern too large: {f.vertex_count} > {MAX_PATTERN_VERTICES} vertices")


def _induced_edge_count(f: PatternGraph, subset_mask: int) -> int:
    return sum(1 for u, v in f.edges if subset_mask >> u & 1 and subset_mask >> v & 1)


def _subset_vertices(mask: int, n: int) -> list[int]:
    return [v for v in range(n) if mask >> v & 1]


def _best_subset(f: PatternGraph, min_vertices: int, shift: int):
    """Max of (e - [shift>0]) / (|S| - shift) over |S| >= min_vertices.

    shift = 0 gives m, shift = 2 gives m2.  Ties broken toward smaller
    subsets, then lexicographically smaller vertex sets, so witnesses are
    deterministic.
    """
    nv = f.vertex_count
    best: Fraction | None = None
    best_mask = None
    # iterate by cardinality so the smallest achieving subset wins ties
    for size in range(min_vertices, nv + 1):
        for combo in combinations(range(nv), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            e = _induced_edge_count(f, mask)
            val = Fraction(e - (1 if shift else 0), size - shift)
            if best is None or val > best:
                best, best_mask = val, mask
    return best, best_mask


def m_density(f: PatternGraph) -> Fraction:
    """Exact m(F) = max e_J / v_J over nonempty subgraphs."""
    if f.vertex_count < 1:
        raise UndefinedDensityError("m(F) undefined for empty vertex set")
    _check_size(f)
    best, _ = _best_subset(f, 1, 0)
    return best


def m_witness(f: PatternGraph) -> PatternGraph:
    if f.vertex_count < 1:
        raise UndefinedDensityError("m(F) undefined for empty vertex set")
    _check_size(f)
    _, mask = _best_subset(f, 1, 0)
    return f.induced(_subset_vertices(mask, f.vertex_count))


def m2_density(f: PatternGraph) -> Fraction:
    """Exact m2(F) = max (e_J - 1) / (v_J - 2) over subgraphs with v_J >= 3."""
    if f.vertex_count < 3:
        raise UndefinedDensityError("m2(F) undefined: no subgraph on >= 3 vertices")
    _check_size(f)
    best, _ = _best_subset(f, 3, 2)
    return best


def minimal_m2_subgraph(f: PatternGraph) -> PatternGraph:
    """Smallest induced subgraph J (isolated vertices dropped) with m2(J) = m2(F).

    Requires a vertex of degree >= 2, which guarantees e_J >= 2 for the
    witness.  Among ties the minimum-cardinality, lexicographically smallest
    vertex subset wins.
    """
    if f.vertex_count < 3 or f.max_degree() < 2:
        raise UndefinedDensityError("minimal m2 subgraph needs v_F >= 3 and max degree >= 2")
    _check_size(f)
    _, mask = _best_subset(f, 3, 2)
    return f.induced(_subset_vertices(mask, f.vertex_count)).drop_isolated()


@dataclass(frozen=True)
class DensityReport:
    m: Fraction
    m2: Fraction | None
    witness_m: PatternGraph
    witness_m2: PatternGraph | None
    gap_holds: bool

    def to_dict(self) -> dict:
        return {
            "m": f"{self.m.numerator}/{self.m.denominator}",
            "m2": None if self.m2 is None
                  else f"{self.m2.numerator}/{self.m2.denominator}",
            "witness_m": self.witness_m.to_text(),
            "witness_m2": None if self.witness_m2 is None else self.witness_m2.to_text(),
            "gap_holds": self.gap_holds,
        }


def density_gap_check(f: PatternGraph) -> DensityReport:
    """Report m, m2 (if defined), their witnesses, and whether m2 > m."""
    m = m_density(f)
    wm = m_witness(f)
    if f.vertex_count < 3:
        return DensityReport(m, None, wm, None, False)
    m2 = m2_density(f)
    _, mask = _best_subset(f, 3, 2)
    wm2 = f.induced(_subset_vertices(mask, f.vertex_count))
    return DensityReport(m, m2, wm, wm2, m2 > m)
