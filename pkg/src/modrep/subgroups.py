"""Elementary abelian p-subgroups of symmetric groups.

Covers the standard product-of-p-cycles subgroups, the p=2 mixed
(double-transposition x transposition) subgroups, regular blocks, the
enumeration of maximal-class representatives, orbit statistics, and the
fixed-tabloid count that controls stable Jordan types of permutation
modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from itertools import product

from .partitions import Partition, _check_prime
from .perms import Perm, compose, from_cycles, identity_perm, order


@dataclass(frozen=True)
class ElabSubgroup:
    n: int
    p: int
    gens: tuple[Perm, ...]
    class_tag: str

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.n:
                raise ValueError("generator degree mismatch")
            if order(g) != self.p:
                raise ValueError(f"generator does not have order {self.p}")
        for i, g in enumerate(self.gens):
            for h in self.gens[i + 1:]:
                if compose(g, h) != compose(h, g):
                    raise ValueError("generators do not commute")
        # full independence check only while the group is small enough to list
        if self.gens and self.p ** len(self.gens) <= 4096:
            if len(_span(self.gens, self.p)) != self.p ** len(self.gens):
                raise ValueError("generators are not independent")

    @property
    def rank(self) -> int:
        return len(self.gens)


def _span(gens: tuple[Perm, ...], p: int) -> set[Perm]:
    if not gens:
        return set()
    out = set()
    for exps in product(range(p), repeat=len(gens)):
        e = identity_perm(len(gens[0]))
        for g, k in zip(gens, exps):
            for _ in range(k):
                e = compose(g, e)
        out.add(e)
    return out


@dataclass(frozen=True)
class OrbitStats:
    a0: int  # fixed points
    a1: int  # orbits of size exactly p
    orbit_sizes: tuple[int, ...]  # all orbit sizes, descending


def standard_E(a: int, p: int, n: int) -> ElabSubgroup:
    """a disjoint p-cycles on the first ap letters; E_0 is trivial."""
    _check_prime(p)
    if not 0 <= a * p <= n:
        raise ValueError(f"need 0 <= ap <= n, got a={a}, p={p}, n={n}")
    gens = tuple(
        from_cycles(n, [tuple(range((i - 1) * p + 1, i * p + 1))]) for i in range(1, a + 1)
    )
    return ElabSubgroup(n, p, gens, f"E:{a}")


def k_f_subgroup(ell: int, n: int) -> ElabSubgroup:
    """K_ell x F_ell for p=2: ell regular C2xC2 blocks then transpositions."""
    if n % 2 != 0:
        raise ValueError("n must be even")
    if not 0 <= 4 * ell <= n:
        raise ValueError(f"need 0 <= 4*ell <= n, got ell={ell}, n={n}")
    gens = []
    for i in range(1, ell + 1):
        gens.append(from_cycles(n, [(4 * i - 3, 4 * i - 2), (4 * i - 1, 4 * i)]))
        gens.append(from_cycles(n, [(4 * i - 3, 4 * i - 1), (4 * i - 2, 4 * i)]))
    m = (n - 4 * ell) // 2
    for i in range(1, m + 1):
        gens.append(from_cycles(n, [(4 * ell + 2 * i - 1, 4 * ell + 2 * i)]))
    return ElabSubgroup(n, 2, tuple(gens), f"KF:{ell}")


def regular_block(m: int, p: int, n: int, offset: int = 0) -> list[Perm]:
    """Generators of the regular action of (C_p)^m on p^m consecutive letters.

    Letters offset+1 .. offset+p^m carry tuples of m base-p digits in
    lexicographic order; generator i adds 1 to digit i.
    """
    size = p**m
    if offset + size > n:
        raise ValueError("regular block does not fit")
    gens = []
    for i in range(m):
        images = list(range(n))
        for idx in range(size):
            digits = []
            t = idx
            for _ in range(m):
                t, d = divmod(t, p)
                digits.append(d)
            digits[i] = (digits[i] + 1) % p
            new = 0
            for d in reversed(digits):
                new = new * p + d
            images[offset + idx] = offset + new
        gens.append(tuple(images))
    return gens


def r_subgroup(m: int, p: int, n: int) -> ElabSubgroup:
    _check_prime(p)
    return ElabSubgroup(n, p, tuple(regular_block(m, p, n)), f"R:{m}")


def _tuples_for(n: int, p: int) -> list[tuple[int, ...]]:
    """All (t_0, t_1, ..., t_ell) with n = sum p^i t_i and 0 <= t_0 < p."""
    results = []

    # choose t_i for i >= 1; whatever is left over must be t_0 < p
    def rec(remaining: int, i: int, acc: list[int]):
        size = p**i
        if size > remaining:
            if remaining < p:
                results.append(tuple([remaining] + acc))
            return
        for t in range(remaining // size, -1, -1):
            rec(remaining - t * size, i + 1, acc + [t])

    rec(n, 1, [])
    # normalize: strip trailing zero multiplicities beyond the largest block
    out = set()
    for tup in results:
        lst = list(tup)
        while len(lst) > 1 and lst[-1] == 0:
            lst.pop()
        out.add(tuple(lst))
    return sorted(out)


def maximal_elab_classes(n: int, p: int) -> list[ElabSubgroup]:
    """One representative per solution tuple of the maximal-class theorem.

    Blocks are laid out on consecutive letters, smallest first, fixed
    letters last; rank is sum(i * t_i).
    """
    _check_prime(p)
    reps = []
    for tup in _tuples_for(n, p):
        if len(tup) == 1:
            continue  # no nontrivial blocks: only for n < p, the trivial group
        gens: list[Perm] = []
        offset = 0
        for i, t in enumerate(tup):
            if i == 0:
                continue
            for _ in range(t):
                gens.extend(regular_block(i, p, n, offset))
                offset += p**i
        tag = "x".join(f"R{i}^{t}" for i, t in enumerate(tup) if i >= 1 and t > 0) or "trivial"
        reps.append(ElabSubgroup(n, p, tuple(gens), f"max:{tag}:t0={tup[0]}"))
    if not reps:  # n < p: the trivial group is the only representative
        reps.append(ElabSubgroup(n, p, (), f"max:trivial:t0={n}"))
    reps.sort(key=lambda e: (-e.rank, e.class_tag))
    return reps


def orbit_stats(group: ElabSubgroup) -> OrbitStats:
    n, p = group.n, group.p
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in group.gens:
        for i in range(n):
            ri, rj = find(i), find(g[i])
            if ri != rj:
                parent[ri] = rj
    sizes_map: dict[int, int] = {}
    for i in range(n):
        r = find(i)
        sizes_map[r] = sizes_map.get(r, 0) + 1
    sizes = sorted(sizes_map.values(), reverse=True)
    a0 = sum(1 for s in sizes if s == 1)
    a1 = sum(1 for s in sizes if s == p)
    return OrbitStats(a0, a1, tuple(sizes))


@lru_cache(maxsize=None)
def _fill_ways(row_sizes: tuple[int, ...], orbit_counts: tuple[tuple[int, int], ...]) -> int:
    """Ways to assign whole orbits to rows so each row is exactly filled.

    orbit_counts is ((size, count), ...); orbits of equal size are distinct
    objects, so a row taking k of them contributes C(available, k).
    """
    if not row_sizes:
        return 1 if all(c == 0 for _, c in orbit_counts) else 0
    target = row_sizes[0]
    rest = row_sizes[1:]
    total = 0

    def rec(idx: int, remaining: int, ways: int, counts: list[int]):
        nonlocal total
        if remaining == 0:
            total += ways * _fill_ways(rest, tuple((s, c) for (s, _), c in zip(orbit_counts, counts)))
            return
        if idx == len(orbit_counts):
            return
        size, _ = orbit_counts[idx]
        avail = counts[idx]
        for k in range(min(avail, remaining // size) + 1):
            counts[idx] = avail - k
            rec(idx + 1, remaining - k * size, ways * comb(avail, k), counts)
        counts[idx] = avail

    rec(0, target, 1, [c for _, c in orbit_counts])
    return total


def count_fixed_tabloids(lam: Partition, stats: OrbitStats) -> int:
    """Number of tabloids of shape lam fixed by the group behind stats."""
    if lam.n != sum(stats.orbit_sizes):
        raise ValueError(f"|lam|={lam.n} != number of letters {sum(stats.orbit_sizes)}")
    counts: dict[int, int] = {}
    for s in stats.orbit_sizes:
        counts[s] = counts.get(s, 0) + 1
    return _fill_ways(tuple(lam.parts), tuple(sorted(counts.items())))
