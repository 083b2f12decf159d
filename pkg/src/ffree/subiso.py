"""Subgraph-copy detection and enumeration.

A copy of pattern J in G is a subgraph of G isomorphic to J, identified by
its edge set (one Copy per distinct edge set; automorphisms of J do not
multiply-count).  Copies are not required to be induced.

The search is plain backtracking over the non-isolated pattern vertices in a
connected-first, descending-degree order, pruning candidate images through
neighbor bitmasks.  Fast enough for the sparse graphs this project samples
(n up to a few hundred, patterns up to ~10 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import LabeledGraph, PatternGraph, pair_index


@dataclass(frozen=True)
class Copy:
    vertex_image: tuple[int, ...]   # images of the pattern's non-isolated vertices
    edge_ids: tuple[int, ...]       # sorted pair indices covered by the copy

    @property
    def edge_mask(self) -> int:
        m = 0
        for k in self.edge_ids:
            m |= 1 << k
        return m


def _search_order(pattern: PatternGraph) -> tuple[list[int], list[list[int]]]:
    """Order non-isolated pattern vertices connected-first by degree.

    Returns (order, prior_neighbors) where prior_neighbors[i] lists the
    positions j < i whose vertex is adjacent to order[i].
    """
    deg = pattern.degrees()
    verts = [v for v in range(pattern.vertex_count) if deg[v] > 0]
    adj = {v: set() for v in verts}
    for u, v in pattern.edges:
        adj[u].add(v)
        adj[v].add(u)
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < len(verts):
        candidates = [v for v in verts if v not in placed]
        # prefer vertices attached to the partial order, then high degree
        candidates.sort(key=lambda v: (-len(adj[v] & placed), -deg[v], v))
        order.append(candidates[0])
        placed.add(candidates[0])
    pos = {v: i for i, v in enumerate(order)}
    prior = [[pos[w] for w in adj[v] if pos[w] < i] for i, v in enumerate(order)]
    return order, prior


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _embeddings(g: LabeledGraph, pattern: PatternGraph):
    """Yield injective maps (as tuples of images per search position)."""
    order, prior = _search_order(pattern)
    k = len(order)
    if k == 0:
        yield ()
        return
    adj = g.adjacency_masks()
    gdeg = [m.bit_count() for m in adj]
    pdeg = pattern.degrees()
    all_mask = (1 << g.n) - 1
    images = [0] * k
    used = 0

    def extend(i: int):
        nonlocal used
        if i == k:
            yield tuple(images)
            return
        if prior[i]:
            dom = all_mask
            for j in prior[i]:
                dom &= adj[images[j]]
            dom &= ~used
        else:
            dom = all_mask & ~used
        need = pdeg[order[i]]
        for v in _iter_bits(dom):
            if gdeg[v] < need:
                continue
            images[i] = v
            used |= 1 << v
            yield from extend(i + 1)
            used ^= 1 << v

    yield from extend(0)


def contains_copy(g: LabeledGraph, f: PatternGraph) -> bool:
    """True iff G has a subgraph isomorphic to F (G is F-free iff False)."""
    if f.vertex_count < 1:
        raise ValueError("pattern must have at least one vertex")
    if g.n < f.vertex_count:
        # isolated pattern vertices still need distinct host vertices
        return False
    if f.edge_count == 0:
        return True
    for _ in _embeddings(g, f):
        return True
    return False


def enumerate_copies(g: LabeledGraph, j: PatternGraph) -> list[Copy]:
    """All copies of J in G, deduplicated by edge set, lexicographic order."""
    if j.edge_count < 1:
        raise ValueError("pattern must have at least one edge")
    if g.n < j.vertex_count:
        return []
    order, _ = _search_order(j)
    pos = {v: i for i, v in enumerate(order)}
    pat_edges = [(pos[u], pos[v]) for u, v in j.edges]
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for images in _embeddings(g, j):
        ids = tuple(sorted(
            pair_index(min(images[a], images[b]), max(images[a], images[b]), g.n)
            for a, b in pat_edges
        ))
        if ids not in seen:
            seen[ids] = images
    return [Copy(seen[ids], ids) for ids in sorted(seen)]


def copies_sharing_edge(g: LabeledGraph, j: PatternGraph, h: LabeledGraph) -> int:
    """Number of edge-set-distinct J-copies in G touching an edge of H."""
    if g.n != h.n:
        raise ValueError(f"dimension mismatch: G on {g.n} vertices, H on {h.n}")
    return sum(1 for c in enumerate_copies(g, j) if c.edge_mask & h.bits)
