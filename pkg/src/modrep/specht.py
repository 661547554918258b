"""Explicit symmetric-group modules over the prime field: Young permutation
modules on tabloids, Specht modules on standard polytabloids, Gram forms,
simple quotients, the sum-zero submodule, duals, and restriction.

Action matrices act on column coordinate vectors, so mat(s*t) = mat(s) @
mat(t).  Everything is built for an explicit, small list of permutations
(subgroup generators); matrices for further permutations are materialized
on demand straight from the combinatorial action.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

import numpy as np

from .linalg import inv_modp, kernel_modp, rank_array, rref_modp, field_ctx
from .partitions import Partition, is_p_regular, _check_prime
from .perms import Perm

Tabloid = tuple[tuple[int, ...], ...]  # rows, each sorted, 0-based letters


@dataclass
class ModuleRep:
    """A matrix representation of selected permutations on a named basis."""

    dim: int
    p: int
    basis_labels: tuple
    provenance: str
    action: dict[Perm, np.ndarray] = field(default_factory=dict)
    materializer: object = None  # callable Perm -> ndarray, optional
    meta: dict = field(default_factory=dict)

    def matrix(self, perm: Perm) -> np.ndarray:
        if perm not in self.action:
            if self.materializer is None:
                raise KeyError(f"no stored matrix for {perm} and no materializer")
            mat = np.asarray(self.materializer(perm), dtype=np.int64) % self.p
            if self.provenance != "YoungPerm" and rank_array(mat, field_ctx(self.p)) != self.dim:
                raise ValueError("action matrix is singular")
            self.action[perm] = mat
        return self.action[perm]

    def matrices(self, perms) -> list[np.ndarray]:
        return [self.matrix(s) for s in perms]


def restrict(module: ModuleRep, perms: list[Perm]) -> ModuleRep:
    """Re-key the module to a new permutation list (e.g. subgroup generators)."""
    out = ModuleRep(module.dim, module.p, module.basis_labels, module.provenance,
                    materializer=module.materializer, meta=dict(module.meta))
    for s in perms:
        out.action[s] = module.matrix(s)
    return out


def dual(module: ModuleRep) -> ModuleRep:
    """Replace each action matrix by its inverse transpose."""
    def mat(perm: Perm) -> np.ndarray:
        return inv_modp(module.matrix(perm), module.p).T

    out = ModuleRep(module.dim, module.p, module.basis_labels, "Dual",
                    materializer=mat, meta={"parent": module})
    for s in module.action:
        out.matrix(s)
    return out


def direct_sum(a: ModuleRep, b: ModuleRep) -> ModuleRep:
    if a.p != b.p:
        raise ValueError("characteristic mismatch")

    def mat(perm: Perm) -> np.ndarray:
        out = np.zeros((a.dim + b.dim, a.dim + b.dim), dtype=np.int64)
        out[: a.dim, : a.dim] = a.matrix(perm)
        out[a.dim:, a.dim:] = b.matrix(perm)
        return out

    labels = tuple(("L", x) for x in a.basis_labels) + tuple(("R", x) for x in b.basis_labels)
    out = ModuleRep(a.dim + b.dim, a.p, labels, "DirectSum", materializer=mat)
    for s in set(a.action) & set(b.action):
        out.matrix(s)
    return out


# ---------------------------------------------------------------------------
# tabloids and tableaux


@lru_cache(maxsize=None)
def tabloids(parts: tuple[int, ...], n: int) -> tuple[Tabloid, ...]:
    """All tabloids of the given shape on letters 0..n-1, rows ordered."""
    if not parts:
        return ((),)
    out = []

    def rec(remaining: tuple[int, ...], shape: tuple[int, ...], acc: list):
        if not shape:
            out.append(tuple(acc))
            return
        for row in combinations(remaining, shape[0]):
            rest = tuple(x for x in remaining if x not in row)
            rec(rest, shape[1:], acc + [row])

    rec(tuple(range(n)), parts, [])
    return tuple(out)


def apply_to_tabloid(perm: Perm, tab: Tabloid) -> Tabloid:
    return tuple(tuple(sorted(perm[x] for x in row)) for row in tab)


@lru_cache(maxsize=None)
def standard_tableaux(parts: tuple[int, ...]) -> tuple[Tabloid, ...]:
    """Standard Young tableaux of the given shape, letters 0..n-1."""
    n = sum(parts)
    out = []
    rows = [[] for _ in parts]

    def rec(k: int):
        if k == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, part in enumerate(parts):
            if len(rows[i]) < part and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(k + 1)
                rows[i].pop()

    rec(0)
    return tuple(out)


def hook_count(lam: Partition) -> int:
    """Number of standard tableaux by the hook length formula."""
    prod = 1
    for h in lam.hook_lengths():
        prod *= h
    return factorial(lam.n) // prod


def _perm_sign(arr: list[int]) -> int:
    sgn = 1
    visited = [False] * len(arr)
    for start in range(len(arr)):
        if not visited[start]:
            length = 0
            j = start
            while not visited[j]:
                visited[j] = True
                j = arr[j]
                length += 1
            if length % 2 == 0:
                sgn = -sgn
    return sgn


def _column_group(tableau: Tabloid) -> list[tuple[dict, int]]:
    """Elements of the column stabilizer with signs, as letter maps."""
    ncols = max((len(r) for r in tableau), default=0)
    cols = [tuple(row[j] for row in tableau if len(row) > j) for j in range(ncols)]
    elements: list[tuple[dict, int]] = [({}, 1)]
    for col in cols:
        new = []
        for perm_map, sgn in elements:
            for img in permutations(col):
                sgn2 = _perm_sign([col.index(x) for x in img])
                m = dict(perm_map)
                m.update(zip(col, img))
                new.append((m, sgn * sgn2))
        elements = new
    return elements


# ---------------------------------------------------------------------------
# module constructions


def _check_perms(perms: list[Perm], n: int) -> None:
    for s in perms:
        if sorted(s) != list(range(n)):
            raise ValueError(f"invalid permutation of {n} letters: {s}")


def young_permutation_module(lam: Partition, perms: list[Perm], p: int) -> ModuleRep:
    """M^lam on the tabloid basis; action matrices are 0/1."""
    _check_prime(p)
    n = lam.n
    _check_perms(perms, n)
    tabs = tabloids(lam.parts, n)
    index = {t: i for i, t in enumerate(tabs)}

    def mat(perm: Perm) -> np.ndarray:
        out = np.zeros((len(tabs), len(tabs)), dtype=np.int64)
        for j, t in enumerate(tabs):
            out[index[apply_to_tabloid(perm, t)], j] = 1
        return out

    rep = ModuleRep(len(tabs), p, tabs, "YoungPerm", materializer=mat,
                    meta={"shape": lam})
    for s in perms:
        rep.matrix(s)
    return rep


@lru_cache(maxsize=64)
def _specht_data(lam: Partition, p: int):
    """Shared Specht scaffolding: treat the returned arrays as read-only."""
    n = lam.n
    tabs = tabloids(lam.parts, n)
    index = {t: i for i, t in enumerate(tabs)}
    stds = standard_tableaux(lam.parts)
    if len(stds) != hook_count(lam):
        raise AssertionError("standard tableau count disagrees with hook formula")
    B = np.zeros((len(tabs), len(stds)), dtype=np.int64)
    for j, t in enumerate(stds):
        for perm_map, sgn in _column_group(t):
            img = tuple(tuple(sorted(perm_map.get(x, x) for x in row)) for row in t)
            B[index[img], j] = (B[index[img], j] + sgn) % p
    pivot_rows = [index[tuple(tuple(sorted(r)) for r in t)] for t in stds]
    Binv = inv_modp(B[pivot_rows, :], p)
    return tabs, index, stds, B, pivot_rows, Binv


def specht_module(lam: Partition, perms: list[Perm], p: int) -> ModuleRep:
    """S^lam on the standard polytabloid basis, with its tabloid embedding.

    meta carries the embedding matrix (tabloids x standard tableaux) and the
    tabloid list of the ambient permutation module.
    """
    _check_prime(p)
    n = lam.n
    _check_perms(perms, n)
    tabs, index, stds, B, pivot_rows, Binv = _specht_data(lam, p)

    def mat(perm: Perm) -> np.ndarray:
        # (P_s B)[i] = B[preimage of tabloid i]
        image = np.empty(len(tabs), dtype=np.int64)
        for j, t in enumerate(tabs):
            image[j] = index[apply_to_tabloid(perm, t)]
        pre = np.argsort(image)
        PB = B[pre[pivot_rows], :]
        return Binv @ PB % p

    rep = ModuleRep(len(stds), p, stds, "Specht", materializer=mat,
                    meta={"shape": lam, "embedding": B, "tabloids": tabs})
    for s in perms:
        rep.matrix(s)
    return rep


@dataclass(frozen=True)
class GramData:
    gram: np.ndarray
    rank: int


def gram_data(lam: Partition, p: int) -> GramData:
    """Gram matrix of the standard polytabloid basis, tabloids orthonormal."""
    B = _specht_data(lam, p)[3]
    G = B.T @ B % p
    return GramData(G, rank_array(G, field_ctx(p)))


def gram_and_simple(lam: Partition, perms: list[Perm], p: int) -> tuple[GramData, ModuleRep]:
    """Gram data of S^lam and the simple quotient D^lam.

    The quotient is realized on the first rank-many pivot coordinates of the
    echelonized Gram matrix; all downstream uses are rank data, which does
    not depend on this choice.
    """
    _check_prime(p)
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam} is not {p}-regular; the simple quotient is zero")
    n = lam.n
    _check_perms(perms, n)
    specht = specht_module(lam, [], p)
    B = specht.meta["embedding"]
    G = B.T @ B % p
    _, pivots = rref_modp(G, p)
    r = len(pivots)
    gram = GramData(G, r)
    K = kernel_modp(G, p)  # rows span the radical
    dim_s = specht.dim
    T = np.zeros((dim_s, dim_s), dtype=np.int64)
    for col, j in enumerate(pivots):
        T[j, col] = 1
    T[:, r:] = K.T % p
    Tinv = inv_modp(T, p)

    def mat(perm: Perm) -> np.ndarray:
        S = specht.matrix(perm)
        return Tinv[:r] @ S[:, pivots] % p

    rep = ModuleRep(r, p, tuple(specht.basis_labels[j] for j in pivots), "Simple",
                    materializer=mat,
                    meta={"shape": lam, "specht": specht, "pivots": pivots, "proj": Tinv[:r]})
    for s in perms:
        rep.matrix(s)
    return gram, rep


def radical_submodule(lam: Partition, perms: list[Perm], p: int) -> ModuleRep:
    """Rad(S^lam) = kernel of the Gram form, as a module in its own right."""
    _check_prime(p)
    specht = specht_module(lam, [], p)
    B = specht.meta["embedding"]
    G = B.T @ B % p
    K = kernel_modp(G, p)
    _, Gpivots = rref_modp(G, p)
    free = [c for c in range(specht.dim) if c not in Gpivots]

    def mat(perm: Perm) -> np.ndarray:
        S = specht.matrix(perm)
        return (S @ K.T % p)[free, :]

    rep = ModuleRep(K.shape[0], p, tuple(range(K.shape[0])), "Radical",
                    materializer=mat, meta={"shape": lam, "specht": specht, "kernel": K})
    for s in perms:
        rep.matrix(s)
    return rep


def sum_zero_submodule(lam: Partition, perms: list[Perm], p: int) -> ModuleRep:
    """Kernel of the augmentation on M^lam, basis {tabloid - reference}.

    Supported for shapes (n-1,1) and (n-2,2); the reference tabloid puts the
    smallest letters in the second row.
    """
    _check_prime(p)
    n = lam.n
    if len(lam.parts) != 2 or lam.parts[1] not in (1, 2):
        raise ValueError("sum-zero submodule expects shape (n-1,1) or (n-2,2)")
    _check_perms(perms, n)
    tabs = tabloids(lam.parts, n)
    index = {t: i for i, t in enumerate(tabs)}
    b = lam.parts[1]
    ref = (tuple(range(b, n)), tuple(range(b)))  # smallest letters in row two
    ref_idx = index[ref]
    rows = [i for i in range(len(tabs)) if i != ref_idx]
    pos = {t_i: r for r, t_i in enumerate(rows)}

    def mat(perm: Perm) -> np.ndarray:
        out = np.zeros((len(rows), len(rows)), dtype=np.int64)
        img_ref = index[apply_to_tabloid(perm, ref)]
        for col, t_i in enumerate(rows):
            img = index[apply_to_tabloid(perm, tabs[t_i])]
            if img != ref_idx:
                out[pos[img], col] += 1
            if img_ref != ref_idx:
                out[pos[img_ref], col] -= 1
        return out % p

    labels = tuple((tabs[i], "minus", ref) for i in rows)
    rep = ModuleRep(len(rows), p, labels, "SumZero", materializer=mat,
                    meta={"shape": lam, "reference": ref})
    for s in perms:
        rep.matrix(s)
    return rep


def trivial_module(n: int, perms: list[Perm], p: int) -> ModuleRep:
    def mat(perm: Perm) -> np.ndarray:
        return np.ones((1, 1), dtype=np.int64)

    rep = ModuleRep(1, p, ("1",), "Trivial", materializer=mat)
    for s in perms:
        rep.matrix(s)
    return rep
