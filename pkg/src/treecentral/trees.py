"""Tree representation, metric queries, validity checks and canonical codes.

Vertex ids are dense 0-based integers. Adjacency lists are kept sorted and
traversals visit neighbors in id order, so every derived quantity is a pure
deterministic function of the labeled tree. All types are immutable after
construction and safe to share across worker processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

# Canonical codes are balanced-parenthesis strings; lexicographic comparison
# on them is the tie-break everywhere a choice between codes is needed.
CanonicalCode = str


class EdgeListError(ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Tree:
    """Immutable simple tree on vertices 0..n-1 with sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, ascending."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield u, v

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if len(self.adj[v]) == 1)


@dataclass(frozen=True)
class RootedView:
    """A tree together with a distinguished root and derived orientation.

    `parent[root]` is None; `children[v]` lists the non-parent neighbors of v
    in id order, which for the generated families is construction order.
    """

    tree: Tree
    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    level: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.tree.n

    @property
    def height(self) -> int:
        return max(self.level)


@dataclass(frozen=True)
class BinaryCheck:
    """Outcome of a degree-condition check; falsy iff some vertex fails."""

    ok: bool
    vertex: int | None = None
    degree: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def tree_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Tree:
    """Build a Tree from an edge list, verifying it really is a tree on n vertices.

    Raises ValueError on out-of-range ids, self-loops, duplicate edges,
    wrong edge count, or a disconnected/cyclic input.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    count = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if v in neighbor_sets[u]:
            raise ValueError(f"duplicate edge ({u}, {v})")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
        count += 1
    if count != n - 1:
        raise ValueError(f"a tree on {n} vertices needs {n - 1} edges, got {count}")
    adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
    # n-1 edges + connectivity <=> tree
    seen = bytearray(n)
    seen[0] = 1
    queue = deque([0])
    reached = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = 1
                reached += 1
                queue.append(y)
    if reached != n:
        raise ValueError(f"edge list is disconnected: reached {reached} of {n} vertices")
    return Tree(n, adj)


def bfs_order(t: Tree, root: int) -> tuple[list[int], list[int | None]]:
    """Breadth-first visit order from root and the parent of each vertex."""
    if not 0 <= root < t.n:
        raise ValueError(f"root {root} out of range for n={t.n}")
    parent: list[int | None] = [None] * t.n
    order = [root]
    seen = bytearray(t.n)
    seen[root] = 1
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y in t.adj[x]:
            if not seen[y]:
                seen[y] = 1
                parent[y] = x
                order.append(y)
    return order, parent


def root_at(t: Tree, root: int) -> RootedView:
    """Orient t away from root."""
    order, parent = bfs_order(t, root)
    children: list[tuple[int, ...]] = [()] * t.n
    level = [0] * t.n
    for v in order:
        p = parent[v]
        if p is not None:
            level[v] = level[p] + 1
        children[v] = tuple(w for w in t.adj[v] if w != p)
    return RootedView(t, root, tuple(parent), tuple(children), tuple(level))


def validate_binary(t: Tree) -> BinaryCheck:
    """True iff every vertex has degree 1 or 3."""
    for v in range(t.n):
        d = len(t.adj[v])
        if d not in (1, 3):
            return BinaryCheck(False, v, d)
    return BinaryCheck(True)


def validate_rooted_binary(rv: RootedView) -> BinaryCheck:
    """True iff the root has degree 2 and every other vertex degree 1 or 3.

    The single-vertex tree passes: it is the smallest rooted binary tree.
    """
    t = rv.tree
    if t.n == 1:
        return BinaryCheck(True)
    droot = t.degree(rv.root)
    if droot != 2:
        return BinaryCheck(False, rv.root, droot)
    for v in range(t.n):
        if v == rv.root:
            continue
        d = t.degree(v)
        if d not in (1, 3):
            return BinaryCheck(False, v, d)
    return BinaryCheck(True)


def distances_from(t: Tree, src: int) -> list[int]:
    """BFS distances from src to every vertex."""
    if not 0 <= src < t.n:
        raise ValueError(f"source {src} out of range for n={t.n}")
    dist = [-1] * t.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in t.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def eccentricities(t: Tree) -> list[int]:
    """Eccentricity of every vertex (max distance to any other vertex)."""
    return [max(distances_from(t, v)) for v in range(t.n)]


def set_distance(t: Tree, xs: Iterable[int], ys: Iterable[int]) -> int:
    """min over x in xs, y in ys of d(x, y), via one multi-source BFS."""
    xset = sorted(set(xs))
    yset = set(ys)
    if not xset or not yset:
        raise ValueError("set_distance requires nonempty vertex sets")
    for v in xset + sorted(yset):
        if not 0 <= v < t.n:
            raise ValueError(f"vertex {v} out of range for n={t.n}")
    dist = [-1] * t.n
    queue = deque()
    for x in xset:
        dist[x] = 0
        queue.append(x)
    while queue:
        x = queue.popleft()
        if x in yset:
            return dist[x]
        for y in t.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    raise AssertionError("unreachable: trees are connected")


def strip_center(t: Tree) -> tuple[int, ...]:
    """Center by iterative leaf removal; 1 or 2 vertices, ascending."""
    if t.n <= 2:
        return tuple(range(t.n))
    deg = [len(t.adj[v]) for v in range(t.n)]
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    removed = bytearray(t.n)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed[v] = 1
            for w in t.adj[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_code(t: Tree, root: int) -> CanonicalCode:
    order, parent = bfs_order(t, root)
    code: list[str] = [""] * t.n
    for v in reversed(order):
        kids = sorted(code[w] for w in t.adj[v] if w != parent[v])
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_code(t: Tree) -> CanonicalCode:
    """Isomorphism-invariant code: root at the center, smaller of the two
    rooted codes when the center has two vertices."""
    return min(_rooted_code(t, c) for c in strip_center(t))


def rooted_code(rv: RootedView) -> CanonicalCode:
    """Rooted-isomorphism-invariant code (children unordered)."""
    return _rooted_code(rv.tree, rv.root)


def parse_edge_list(text: str) -> Tree:
    """Parse the edge-list format: first line n, then n-1 lines "u v" (0-based).

    Rejects anything that is not a tree, reporting the offending line.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise EdgeListError(1, "expected vertex count")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise EdgeListError(1, f"expected vertex count, got {lines[0].strip()!r}") from None
    if n < 1:
        raise EdgeListError(1, f"vertex count must be positive, got {n}")
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    # union-find to catch cycles on the exact line that closes them
    uf = list(range(n))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    count = 0
    for idx, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(idx, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(idx, f"expected integer ids, got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(idx, f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise EdgeListError(idx, f"self-loop at vertex {u}")
        if v in neighbor_sets[u]:
            raise EdgeListError(idx, f"duplicate edge ({u}, {v})")
        count += 1
        if count > n - 1:
            raise EdgeListError(idx, f"too many edges: a tree on {n} vertices has {n - 1}")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise EdgeListError(idx, f"edge ({u}, {v}) closes a cycle")
        uf[ru] = rv
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    if count < n - 1:
        raise EdgeListError(len(lines), f"expected {n - 1} edges, got {count}")
    return Tree(n, tuple(tuple(sorted(s)) for s in neighbor_sets))


def format_edge_list(t: Tree) -> str:
    """Inverse of parse_edge_list; edges ascending, trailing newline."""
    out = [str(t.n)]
    out.extend(f"{u} {v}" for u, v in t.edges())
    return "\n".join(out) + "\n"
