"""Constructors for the extremal tree families.

Four generators: rgood trees (minimum height), two-per-level trees (minimum
root subtree count), binary caterpillars (maximum diameter), and crg trees,
which graft an rgood tree onto the far end of a caterpillar spine. Ids are
dense and 0-based; each generator documents its labeling.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .trees import RootedView, Tree, root_at, tree_from_edges


@dataclass(frozen=True)
class CrgSpec:
    """Parameters of a crg tree: n even >= 4, l odd with 3 <= l < n."""

    n: int
    l: int

    def __post_init__(self) -> None:
        if self.n < 4 or self.n % 2:
            raise ValueError(f"crg vertex count must be even and >= 4, got n={self.n}")
        if self.l < 3 or self.l % 2 == 0 or self.l >= self.n:
            raise ValueError(
                f"rgood part size must be odd with 3 <= l < n, got l={self.l} for n={self.n}"
            )


@dataclass(frozen=True)
class LabeledFamilyTree:
    """A generated tree plus the labels its family is described with.

    `label_map` sends spine labels 1..v to vertex ids, where v is the last
    spine label; `v_prime` is the id of the neighbor of v inside a heaviest
    branch of the rgood part (ties go to the first-constructed child), None
    for plain caterpillars. `rgood_ids` lists the rgood part including the
    shared root, empty for plain caterpillars.
    """

    tree: Tree
    family: str
    label_map: dict[int, int] = field(compare=False)
    v_prime: int | None = None
    l: int | None = None
    rgood_ids: tuple[int, ...] = ()


def _rgood_levels(n: int) -> list[list[int]]:
    """Level-by-level local ids 0..n-1 of the rgood tree on n vertices."""
    h = 0
    while 2 ** (h + 1) - 1 < n:
        h += 1
    levels = [[0]]
    next_id = 1
    for i in range(1, h):
        levels.append(list(range(next_id, next_id + 2**i)))
        next_id += 2**i
    if h >= 1:
        levels.append(list(range(next_id, n)))
    return levels


def _rgood_edges(levels: list[list[int]]) -> list[tuple[int, int]]:
    """Parent edges for rgood levels: full levels pair children left to
    right; the partial last level hangs under a final segment of parents."""
    edges: list[tuple[int, int]] = []
    for i in range(1, len(levels)):
        above = levels[i - 1]
        here = levels[i]
        first_parent = len(above) - len(here) // 2
        for j, v in enumerate(here):
            edges.append((above[first_parent + j // 2], v))
    return edges


def make_rgood(n: int) -> RootedView:
    """The rgood tree on n vertices (n odd >= 1), rooted at id 0.

    Ids are assigned level by level; pendant depths differ by at most one
    and the parents of the deepest pendants close out the next-to-deepest
    level. Unique up to isomorphism, and of minimum height among rooted
    binary trees on n vertices.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"rgood trees need odd n >= 1, got {n}")
    levels = _rgood_levels(n)
    return root_at(tree_from_edges(n, _rgood_edges(levels)), 0)


def make_two_per_level(n: int) -> RootedView:
    """The rooted binary tree on n vertices (n odd) with exactly two vertices
    on every positive level, rooted at id 0.

    Level i holds ids 2i-1 and 2i; the odd id is the one that branches.
    Height (n-1)/2; minimizes the number of subtrees containing the root.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"two-per-level trees need odd n >= 1, got {n}")
    edges = []
    if n > 1:
        edges = [(0, 1), (0, 2)]
        for i in range(2, (n - 1) // 2 + 1):
            edges.append((2 * i - 3, 2 * i - 1))
            edges.append((2 * i - 3, 2 * i))
    return root_at(tree_from_edges(n, edges), 0)


def _caterpillar_edges(n: int) -> list[tuple[int, int]]:
    """Spine ids 0..n//2, one pendant per interior spine vertex."""
    spine = n // 2 + 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    for j, s in enumerate(range(1, spine - 1)):
        edges.append((s, spine + j))
    return edges


def make_caterpillar(n: int) -> LabeledFamilyTree:
    """The binary caterpillar on n vertices (n even >= 4).

    Spine ids 0..n/2 carry labels 1..n/2+1; interior spine vertices get one
    pendant each (ids n/2+1 ..). Maximum diameter n/2 among binary trees.
    """
    if n < 4 or n % 2:
        raise ValueError(f"binary caterpillars need even n >= 4, got {n}")
    t = tree_from_edges(n, _caterpillar_edges(n))
    labels = {i + 1: i for i in range(n // 2 + 1)}
    return LabeledFamilyTree(t, "caterpillar", labels)


def make_crg(spec: CrgSpec) -> LabeledFamilyTree:
    """The crg tree: the rgood tree on l vertices with its root identified
    with a maximum-eccentricity spine end of the caterpillar on n-l+1 vertices.

    Spine ids 0..v-1 carry labels 1..v with v = (n-l+3)/2; caterpillar
    pendants follow, then the rest of the rgood part in level order starting
    at id n-l+1. Label 1 is a spine end of maximum eccentricity.
    """
    n, l = spec.n, spec.l
    m = n - l + 1  # caterpillar part; a bare edge when l = n - 1
    spine = m // 2 + 1
    v_id = spine - 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    for j, s in enumerate(range(1, spine - 1)):
        edges.append((s, spine + j))

    levels = _rgood_levels(l)
    to_global = [v_id] + list(range(m, n))
    for a, b in _rgood_edges(levels):
        edges.append((to_global[a], to_global[b]))

    size = [1] * l
    parent_of = [0] * l
    for a, b in _rgood_edges(levels):
        parent_of[b] = a
    for b in range(l - 1, 0, -1):
        size[parent_of[b]] += size[b]
    root_kids = levels[1]  # l >= 3, so the rgood root has two children
    v_prime_local = max(root_kids, key=lambda c: (size[c], -c))

    t = tree_from_edges(n, edges)
    labels = {i + 1: i for i in range(spine)}
    return LabeledFamilyTree(
        t,
        "crg",
        labels,
        v_prime=to_global[v_prime_local],
        l=l,
        rgood_ids=tuple(to_global),
    )


def crg_family(n: int) -> list[LabeledFamilyTree]:
    """All crg trees on n vertices, by ascending l; may contain isomorphic
    duplicates (l = 3 and l = 5 are both caterpillars)."""
    if n < 4 or n % 2:
        raise ValueError(f"crg families need even n >= 4, got {n}")
    return [make_crg(CrgSpec(n, l)) for l in range(3, n, 2)]
