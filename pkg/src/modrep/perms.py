"""Minimal permutation plumbing.

A permutation of {1..n} is stored as a tuple of 0-based images: perm[i] is
the image of letter i.  Compose left-to-right as group elements acting on
the left: (s*t)(i) = s(t(i)).
"""

from __future__ import annotations

from itertools import product

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def from_cycles(n: int, cycles: list[tuple[int, ...]]) -> Perm:
    """Build a permutation of {1..n} from 1-based cycles."""
    images = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def compose(s: Perm, t: Perm) -> Perm:
    """(s*t)(i) = s(t(i))."""
    return tuple(s[t[i]] for i in range(len(s)))


def inverse(s: Perm) -> Perm:
    inv = [0] * len(s)
    for i, j in enumerate(s):
        inv[j] = i
    return tuple(inv)


def order(s: Perm) -> int:
    n = 1
    cur = s
    ident = identity_perm(len(s))
    while cur != ident:
        cur = compose(cur, s)
        n += 1
    return n


def one_based(s: Perm) -> list[int]:
    return [i + 1 for i in s]


def cycle_type(s: Perm) -> list[int]:
    seen = [False] * len(s)
    sizes = []
    for i in range(len(s)):
        if not seen[i]:
            j, size = i, 0
            while not seen[j]:
                seen[j] = True
                j = s[j]
                size += 1
            sizes.append(size)
    return sorted(sizes, reverse=True)


def generated_elements(gens: list[Perm], limit: int = 100_000) -> list[Perm]:
    """All elements of the group generated by gens (small groups only)."""
    if not gens:
        return []
    n = len(gens[0])
    seen = {identity_perm(n)}
    frontier = [identity_perm(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                e = compose(h, g)
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
                    if len(seen) > limit:
                        raise ValueError("group too large to enumerate")
        frontier = nxt
    return sorted(seen)


def abelian_group_elements(gens: list[Perm], p: int) -> list[Perm]:
    """Elements of an elementary abelian group as words in the generators."""
    if not gens:
        return []
    n = len(gens[0])
    out = []
    for exps in product(range(p), repeat=len(gens)):
        e = identity_perm(n)
        for g, k in zip(gens, exps):
            for _ in range(k):
                e = compose(g, e)
        out.append(e)
    return out
