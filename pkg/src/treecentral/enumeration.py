"""Exhaustive enumeration of rooted and free binary trees up to isomorphism.

Rooted binary trees are built as unordered pairs of smaller rooted binary
trees; free binary trees come from joining two rooted ones at their roots by
an edge and deduplicating on canonical codes. Streams are restartable
iterators with a deterministic order, sized for desk-scale exhaustive scans
and guarded by caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .trees import CanonicalCode, RootedView, Tree, canonical_code, root_at, tree_from_edges

ROOTED_CAP = 25
FREE_CAP = 26

# A shape is () for a single vertex or a sorted pair of child shapes.
Shape = tuple


@dataclass(frozen=True)
class EnumerationStream:
    """Restartable stream of all trees of one kind on n vertices.

    Iterating yields RootedView (mode "rooted-binary") or Tree (mode
    "free-binary"); every pass reproduces the same order.
    """

    n: int
    mode: str

    def __post_init__(self) -> None:
        if self.mode not in ("rooted-binary", "free-binary"):
            raise ValueError(f"unknown enumeration mode {self.mode!r}")
        want_odd = self.mode == "rooted-binary"
        if self.n < 1 or self.n % 2 != want_odd:
            kind = "odd" if want_odd else "even"
            raise ValueError(f"mode {self.mode!r} needs {kind} n >= 1, got {self.n}")

    def __iter__(self) -> Iterator:
        if self.mode == "rooted-binary":
            return (_shape_to_rooted(s) for s in _rooted_shapes(self.n))
        return _free_trees(self.n)

    def __len__(self) -> int:
        if self.mode == "rooted-binary":
            return count_rooted_binary(self.n)
        return sum(1 for _ in _free_trees(self.n))


@lru_cache(maxsize=None)
def _rooted_shapes(n: int) -> tuple[Shape, ...]:
    if n == 1:
        return ((),)
    shapes = []
    for a in range(1, (n - 1) // 2 + 1, 2):
        b = n - 1 - a
        left = _rooted_shapes(a)
        if a < b:
            for x in left:
                for y in _rooted_shapes(b):
                    shapes.append((x, y) if x <= y else (y, x))
        else:
            for i, x in enumerate(left):
                for y in left[i:]:
                    shapes.append((x, y))
    shapes.sort()
    return tuple(shapes)


@lru_cache(maxsize=None)
def count_rooted_binary(n: int) -> int:
    """Rooted binary trees on n vertices up to isomorphism, by arithmetic
    recurrence alone; certifies the generated streams."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"rooted binary trees need odd n >= 1, got {n}")
    if n == 1:
        return 1
    total = 0
    for a in range(1, (n - 1) // 2 + 1, 2):
        b = n - 1 - a
        ca = count_rooted_binary(a)
        if a < b:
            total += ca * count_rooted_binary(b)
        else:
            total += ca * (ca + 1) // 2
    return total


def _shape_to_rooted(shape: Shape) -> RootedView:
    edges: list[tuple[int, int]] = []
    queue: list[tuple[int, Shape]] = [(0, shape)]
    next_id = 1
    head = 0
    while head < len(queue):
        vid, s = queue[head]
        head += 1
        for child in s:
            edges.append((vid, next_id))
            queue.append((next_id, child))
            next_id += 1
    return root_at(tree_from_edges(next_id, edges), 0)


def _join_shapes(sa: Shape, sb: Shape, a: int) -> Tree:
    """Free tree made of shape sa on ids 0.., shape sb on ids a.., plus the
    root-to-root edge (0, a)."""
    edges: list[tuple[int, int]] = [(0, a)]
    next_id = 1
    queue: list[tuple[int, Shape]] = [(0, sa)]
    head = 0
    while head < len(queue):
        vid, s = queue[head]
        head += 1
        for child in s:
            edges.append((vid, next_id))
            queue.append((next_id, child))
            next_id += 1
    queue = [(a, sb)]
    next_id = a + 1
    head = 0
    while head < len(queue):
        vid, s = queue[head]
        head += 1
        for child in s:
            edges.append((vid, next_id))
            queue.append((next_id, child))
            next_id += 1
    return tree_from_edges(next_id, edges)


def _free_trees(n: int) -> Iterator[Tree]:
    seen: set[CanonicalCode] = set()
    for a in range(1, n // 2 + 1, 2):
        b = n - a
        for sa in _rooted_shapes(a):
            for sb in _rooted_shapes(b):
                t = _join_shapes(sa, sb, a)
                code = canonical_code(t)
                if code not in seen:
                    seen.add(code)
                    yield t


def enumerate_rooted_binary(n: int, cap: int | None = None) -> EnumerationStream:
    """All rooted binary trees on n vertices (n odd), one per isomorphism
    class, as a restartable stream of RootedViews."""
    limit = ROOTED_CAP if cap is None else cap
    if n < 1 or n % 2 == 0:
        raise ValueError(f"rooted binary trees need odd n >= 1, got {n}")
    if n > limit:
        raise ValueError(f"n={n} exceeds enumeration cap {limit}; raise cap to override")
    return EnumerationStream(n, "rooted-binary")


def enumerate_free_binary(n: int, cap: int | None = None) -> EnumerationStream:
    """All free binary trees on n vertices (n even), one per isomorphism
    class, as a restartable stream of Trees.

    Every free binary tree splits at any edge into two root-joined rooted
    binary trees, so joining all rooted pairs and deduplicating on canonical
    codes is exhaustive.
    """
    limit = FREE_CAP if cap is None else cap
    if n < 2 or n % 2:
        raise ValueError(f"free binary trees need even n >= 2, got {n}")
    if n > limit:
        raise ValueError(f"n={n} exceeds enumeration cap {limit}; raise cap to override")
    return EnumerationStream(n, "free-binary")
