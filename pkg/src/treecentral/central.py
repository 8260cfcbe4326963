"""The three central parts of a tree and the edge side tests relating them.

Center: minimum eccentricity. Centroid: minimum weight, where the weight of
v is the largest edge count over branches at v. Subtree core: maximum number
of containing subtrees. Each part is one vertex or two adjacent vertices;
results are ascending id tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import BigCount, side_subtree_count, subtree_profile
from .trees import Tree, bfs_order, eccentricities, set_distance, strip_center


@dataclass(frozen=True)
class CentralParts:
    """The three parts plus their pairwise set distances."""

    center: tuple[int, ...]
    centroid: tuple[int, ...]
    subtree_core: tuple[int, ...]
    d_c_cd: int
    d_c_sc: int
    d_cd_sc: int


@dataclass(frozen=True)
class EdgeSideReport:
    """Per-side component sizes and root subtree counts for one edge.

    The centroid sits on the side with more vertices (either side when
    equal); the subtree core sits on the side whose count is larger.
    """

    u: int
    v: int
    size_u: int
    size_v: int
    count_u: BigCount
    count_v: BigCount


def center(t: Tree) -> tuple[int, ...]:
    """Vertices of minimum eccentricity; equals the leaf-stripping center."""
    ecc = eccentricities(t)
    radius = min(ecc)
    return tuple(v for v in range(t.n) if ecc[v] == radius)


def center_by_stripping(t: Tree) -> tuple[int, ...]:
    """Center via iterative leaf removal; agrees with center() on every tree."""
    return strip_center(t)


def branch_weights(t: Tree) -> list[int]:
    """weight[v] = most edges in any branch at v, from one rooted size pass."""
    if t.n == 1:
        return [0]
    order, parent = bfs_order(t, 0)
    size = [1] * t.n
    for v in reversed(order):
        p = parent[v]
        if p is not None:
            size[p] += size[v]
    weight = [0] * t.n
    for v in range(t.n):
        best = 0
        for w in t.adj[v]:
            # the branch through w has size[w] edges seen from the root side,
            # n - size[v] when w is v's parent
            branch = t.n - size[v] if w == parent[v] else size[w]
            if branch > best:
                best = branch
        weight[v] = best
    return weight


def centroid(t: Tree) -> tuple[int, ...]:
    """Vertices of minimum weight."""
    weight = branch_weights(t)
    least = min(weight)
    return tuple(v for v in range(t.n) if weight[v] == least)


def subtree_core(t: Tree) -> tuple[int, ...]:
    """Vertices contained in the most subtrees."""
    return subtree_profile(t).core


def central_parts(t: Tree) -> CentralParts:
    """All three parts and their pairwise set distances."""
    c = center(t)
    cd = centroid(t)
    sc = subtree_core(t)
    return CentralParts(
        c,
        cd,
        sc,
        set_distance(t, c, cd),
        set_distance(t, c, sc),
        set_distance(t, cd, sc),
    )


def edge_side_report(t: Tree, e: tuple[int, int]) -> EdgeSideReport:
    """Sizes and root counts of the two components of t minus the edge e."""
    u, v = e
    if not t.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    size_u = _component_size(t, u, v)
    return EdgeSideReport(
        u,
        v,
        size_u,
        t.n - size_u,
        side_subtree_count(t, u, v),
        side_subtree_count(t, v, u),
    )


def _component_size(t: Tree, keep: int, cut: int) -> int:
    stack = [keep]
    seen = {keep, cut}
    count = 1
    while stack:
        x = stack.pop()
        for y in t.adj[x]:
            if y not in seen:
                seen.add(y)
                count += 1
                stack.append(y)
    return count
