"""Exact subtree counting and the growth constant of complete rgood trees.

Counts are plain Python ints, so they stay exact at any size. The profile
of all per-vertex counts is computed by one down pass and one rerooting up
pass using prefix/suffix products; no divisions, so zero values can never
poison a quotient. The constant estimator works on scaled-integer interval
endpoints with directed rounding, not on library floats.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import make_rgood
from .trees import RootedView, Tree, bfs_order

# Counts routinely exceed machine range; the alias marks where that matters.
BigCount = int

K_DIGITS_CAP = 200


@dataclass(frozen=True)
class SubtreeProfile:
    """Per-vertex subtree counts and the argmax set (the subtree core)."""

    f: tuple[BigCount, ...]
    core: tuple[int, ...]


@dataclass(frozen=True)
class KEstimate:
    """Decimal estimate of the constant k with a rigorous enclosure.

    `value` holds `precision` correct significant digits (truncated, not
    rounded); lo/2**bits <= k <= hi/2**bits is the proven enclosure behind
    them. `terms_used` is the number of series terms taken.
    """

    value: str
    precision: int
    terms_used: int
    lo: BigCount
    hi: BigCount
    bits: int


def rooted_subtree_count(rv: RootedView) -> BigCount:
    """Number of subtrees of rv.tree that contain the root."""
    down = _down_counts(rv.tree, rv.root)
    return down[rv.root]


def _down_counts(t: Tree, root: int) -> list[BigCount]:
    """down[v] = subtrees containing v inside v's own rooted subtree."""
    order, parent = bfs_order(t, root)
    down = [1] * t.n
    for v in reversed(order):
        acc = 1
        for w in t.adj[v]:
            if w != parent[v]:
                acc *= 1 + down[w]
        down[v] = acc
    return down


def subtree_profile(t: Tree) -> SubtreeProfile:
    """f[v] = number of subtrees containing v, for every vertex.

    One rooted pass gives the down counts; rerooting distributes the
    parent-side counts with prefix/suffix products over each child list.
    """
    n = t.n
    if n == 1:
        return SubtreeProfile((1,), (0,))
    order, parent = bfs_order(t, 0)
    down = [1] * n
    kids: list[tuple[int, ...]] = [()] * n
    for v in reversed(order):
        cs = tuple(w for w in t.adj[v] if w != parent[v])
        kids[v] = cs
        acc = 1
        for w in cs:
            acc *= 1 + down[w]
        down[v] = acc
    # up[v] = subtrees containing parent(v) on the far side of the edge to it
    up: list[BigCount] = [0] * n
    for v in order:
        cs = kids[v]
        if not cs:
            continue
        k = len(cs)
        pref = [1] * (k + 1)
        for i, w in enumerate(cs):
            pref[i + 1] = pref[i] * (1 + down[w])
        suff = [1] * (k + 1)
        for i in range(k - 1, -1, -1):
            suff[i] = suff[i + 1] * (1 + down[cs[i]])
        parent_factor = 1 + up[v] if parent[v] is not None else 1
        for i, w in enumerate(cs):
            up[w] = parent_factor * pref[i] * suff[i + 1]
    f = [0] * n
    for v in range(n):
        acc = 1 + up[v] if parent[v] is not None else 1
        for w in kids[v]:
            acc *= 1 + down[w]
        f[v] = acc
    best = max(f)
    core = tuple(v for v in range(n) if f[v] == best)
    return SubtreeProfile(tuple(f), core)


def side_subtree_count(t: Tree, u: int, v: int) -> BigCount:
    """Subtrees containing u inside u's component of t minus the edge {u, v}."""
    if not t.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    parent = {u: v}
    order = [u]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y in t.adj[x]:
            if y != parent[x]:
                parent[y] = x
                order.append(y)
    count: dict[int, BigCount] = {}
    for x in reversed(order):
        acc = 1
        for y in t.adj[x]:
            if y != parent[x]:
                acc *= 1 + count[y]
        count[x] = acc
    return count[u]


def pair_subtree_count(t: Tree, u: int, v: int) -> BigCount:
    """Number of subtrees containing both u and v (f(u) itself when u == v).

    Every such subtree contains the u-v path; off-path branches contribute
    independent factors along it.
    """
    order, parent = bfs_order(t, u)
    if not 0 <= v < t.n:
        raise ValueError(f"vertex {v} out of range for n={t.n}")
    down = [1] * t.n
    for x in reversed(order):
        acc = 1
        for y in t.adj[x]:
            if y != parent[x]:
                acc *= 1 + down[y]
        down[x] = acc
    path = {v}
    x = v
    while x != u:
        x = parent[x]  # type: ignore[assignment]
        path.add(x)
    total = 1
    for p in path:
        for w in t.adj[p]:
            if w != parent[p] and w not in path:
                total *= 1 + down[w]
    return total


def two_per_level_closed_form(n: int) -> BigCount:
    """Root subtree count of the two-per-level tree: 3 * 2**((n-1)/2) - 2."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"two-per-level trees need odd n >= 1, got {n}")
    return 3 * 2 ** ((n - 1) // 2) - 2


def complete_rgood_recurrence(h: int) -> BigCount:
    """Root subtree count A_h of the complete rgood tree of height h.

    A_0 = 1 and A_h = (A_{h-1} + 1)**2, run as iterated squaring of
    Y_h = A_h + 1.
    """
    if h < 0:
        raise ValueError(f"height must be nonnegative, got {h}")
    y = 2
    for _ in range(h):
        y = y * y + 1
    return y - 1


def rgood_root_count_bounds(n: int) -> tuple[BigCount, BigCount]:
    """(A_{h-1}, A_h) bracketing the rgood root count for odd n >= 3,
    where h is minimal with n <= 2**(h+1) - 1; the count lies in
    (A_{h-1}, A_h], hitting A_h exactly when the tree is complete."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3, got {n}")
    h = 0
    while 2 ** (h + 1) - 1 < n:
        h += 1
    return complete_rgood_recurrence(h - 1), complete_rgood_recurrence(h)


def r_threshold(n: int) -> int:
    """Least odd l >= 3 whose rgood root count beats the two-per-level
    closed form on n - l vertices; the size where a grafted rgood part
    starts to dominate. 7, 9, 11 for n = 12, 16, 20."""
    if n < 12 or n % 2:
        raise ValueError(f"threshold is defined for even n >= 12, got {n}")
    l = 3
    while l < n:
        if rooted_subtree_count(make_rgood(l)) > two_per_level_closed_form(n - l):
            return l
        l += 2
    raise AssertionError(f"no threshold below n={n}")


def _ln1p_inv_interval(q: BigCount, bits: int) -> tuple[BigCount, BigCount]:
    """Enclosure of ln(1 + 1/q), scaled by 2**bits, for integer q >= 2.

    Alternating series with floor/ceil directed rounding; the final open
    term is absorbed into the matching endpoint.
    """
    one = 1 << bits
    lo = 0
    hi = 0
    j = 1
    qj = q
    while True:
        den = j * qj
        t_lo = one // den
        t_hi = t_lo + (1 if one % den else 0)
        if t_lo == 0:
            if j % 2 == 1:
                hi += 1  # dropped positive term below one ulp
            else:
                lo -= 1
            break
        if j % 2 == 1:
            lo += t_lo
            hi += t_hi
        else:
            lo -= t_hi
            hi -= t_lo
        j += 1
        qj *= q
    return max(lo, 0), hi


def _exp_interval(x_lo: BigCount, x_hi: BigCount, bits: int) -> tuple[BigCount, BigCount]:
    """Enclosure of exp(x) for x in [x_lo, x_hi]/2**bits with 0 <= x < 1/2."""
    if not 0 <= x_lo <= x_hi < 1 << (bits - 1):
        raise ValueError("exp interval argument out of the supported range")
    one = 1 << bits
    lo = one
    term = one
    j = 1
    while term:
        term = (term * x_lo) // (one * j)
        lo += term
        j += 1
    hi = one
    term = one
    j = 1
    while True:
        num = term * x_hi
        den = one * j
        if num <= den:
            # every remaining term is under one ulp; geometric tail with
            # ratio x <= 1/2 stays under two ulp in total
            hi += 2
            break
        term = -(-num // den)
        hi += term
        j += 1
    return lo, hi


def estimate_k(digits: int) -> KEstimate:
    """The constant k with A_h = floor(k**(2**h)) - 1: k = 2.25851845...

    k = 2 * exp(sum over i of ln(1 + 1/Y_i**2) / 2**(i+1)) with Y_0 = 2 and
    Y_{i+1} = Y_i**2 + 1. Everything runs on scaled-integer interval
    endpoints; the returned digits are certified by the enclosure.
    """
    if digits < 1:
        raise ValueError(f"need at least one digit, got {digits}")
    if digits > K_DIGITS_CAP:
        raise ValueError(f"digit request {digits} exceeds cap {K_DIGITS_CAP}")
    bits = 7 * digits // 2 + 64
    while True:
        s_lo = 0
        s_hi = 0
        y = 2
        i = 0
        while True:
            a_lo, a_hi = _ln1p_inv_interval(y * y, bits)
            shift = i + 1
            s_lo += a_lo >> shift
            s_hi += -((-a_hi) >> shift)
            y = y * y + 1
            i += 1
            # tail over i', i' > i: bounded by the next alpha times 2**-i
            next_hi = _ln1p_inv_interval(y * y, bits)[1]
            tail = -((-next_hi) >> i)
            if tail <= 1:
                s_hi += tail + 1
                break
        e_lo, e_hi = _exp_interval(s_lo, s_hi, bits)
        k_lo, k_hi = 2 * e_lo, 2 * e_hi
        scale = 10 ** (digits - 1)
        d_lo = (k_lo * scale) >> bits
        d_hi = (k_hi * scale) >> bits
        if d_lo == d_hi:
            digits_str = str(d_lo)
            value = digits_str[0] + "." + digits_str[1:] if digits > 1 else digits_str
            return KEstimate(value, digits, i, k_lo, k_hi, bits)
        bits *= 2


def k_floor_power(est: KEstimate, h: int) -> BigCount:
    """floor(k**(2**h)) from the enclosure; raises if the digits on hand
    cannot pin the floor down."""
    if h < 0:
        raise ValueError(f"height must be nonnegative, got {h}")
    p = 2**h
    f_lo = est.lo**p >> (est.bits * p)
    f_hi = est.hi**p >> (est.bits * p)
    if f_lo != f_hi:
        raise ValueError(f"precision {est.precision} cannot resolve floor(k**{p})")
    return f_lo
