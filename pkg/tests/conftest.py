from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from oracles import random_free_binary, random_rooted_binary, random_tree
from treecentral import Tree, enumerate_free_binary, tree_from_edges


@st.composite
def labeled_trees(draw, min_n: int = 2, max_n: int = 24) -> Tree:
    """Arbitrary labeled tree: vertex i hangs off a uniform earlier vertex."""
    n = draw(st.integers(min_n, max_n))
    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    return tree_from_edges(n, edges)


@st.composite
def seeded_free_binary(draw, min_n: int = 4, max_n: int = 20) -> Tree:
    half = draw(st.integers(min_n // 2, max_n // 2))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_free_binary(random.Random(seed), 2 * half)


@st.composite
def seeded_rooted_binary(draw, min_n: int = 3, max_n: int = 21) -> Tree:
    half = draw(st.integers((min_n - 1) // 2, (max_n - 1) // 2))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_rooted_binary(random.Random(seed), 2 * half + 1)


@st.composite
def permutations_of(draw, n: int) -> list[int]:
    return draw(st.permutations(range(n)))


@pytest.fixture(scope="session")
def all_free_binary_upto_14() -> list[Tree]:
    trees: list[Tree] = []
    for n in range(2, 15, 2):
        trees.extend(enumerate_free_binary(n))
    return trees


@pytest.fixture(scope="session")
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
