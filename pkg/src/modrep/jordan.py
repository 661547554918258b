"""Jordan types of modules over a cyclic group of prime order, generic
Jordan types over elementary abelian groups, and the short-exact-sequence
insertion rule with an independent brute-force oracle.

A Jordan type is a multiset of block sizes 1..p recorded as a counts
vector.  Generic types are assembled from generic ranks of the powers of
u(alpha)-1, each certified by a Schwartz-Zippel bound.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .linalg import (GenericRankResult, PolyMatrix, ResourceGuardError, field_ctx,
                     generic_rank, matmul_array, rank_array)
from .partitions import _check_prime
from .specht import ModuleRep
from .subgroups import ElabSubgroup


@dataclass(frozen=True)
class JordanType:
    """Counts n_1..n_p of Jordan blocks of each size for F C_p-modules."""

    counts: tuple[int, ...]
    p: int

    def __post_init__(self):
        if len(self.counts) != self.p:
            raise ValueError(f"need exactly p={self.p} block counts")
        if any(c < 0 for c in self.counts):
            raise ValueError("block counts must be non-negative")

    @property
    def dim(self) -> int:
        return sum((i + 1) * c for i, c in enumerate(self.counts))

    def stable(self) -> "JordanType":
        return JordanType(self.counts[:-1] + (0,), self.p)

    def complement(self) -> "JordanType":
        body = tuple(self.counts[self.p - 2 - i] for i in range(self.p - 1))
        return JordanType(body + (0,), self.p)

    def is_generically_free(self) -> bool:
        return all(c == 0 for c in self.counts[:-1])

    def __str__(self) -> str:
        parts = [f"{i + 1}^{c}" for i, c in enumerate(self.counts) if c]
        return " ".join(parts) if parts else "0"

    @staticmethod
    def parse(text: str, p: int) -> "JordanType":
        counts = [0] * p
        text = text.strip()
        if text in ("0", ""):
            return JordanType(tuple(counts), p)
        for token in text.split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", token)
            if not m:
                raise ValueError(f"bad Jordan type token {token!r}")
            size = int(m.group(1))
            mult = int(m.group(2)) if m.group(2) else 1
            if not 1 <= size <= p:
                raise ValueError(f"block size {size} out of range 1..{p}")
            counts[size - 1] += mult
        return JordanType(tuple(counts), p)


def jtype(p: int, **blocks: int) -> JordanType:
    """Keyword constructor: jtype(3, b1=2, b3=1) is [1]^2 [3]^1."""
    counts = [0] * p
    for name, mult in blocks.items():
        counts[int(name[1:]) - 1] = mult
    return JordanType(tuple(counts), p)


def stable(t: JordanType) -> JordanType:
    return t.stable()


def complement(t: JordanType) -> JordanType:
    return t.complement()


def is_generically_free(t: JordanType) -> bool:
    return t.is_generically_free()


def type_from_ranks(ranks: list[int], p: int) -> JordanType:
    """Block counts from ranks of N^0..N^p via second differences."""
    r = list(ranks) + [0]
    counts = tuple(r[i - 1] - 2 * r[i] + r[i + 1] for i in range(1, p + 1))
    jt = JordanType(counts, p)
    if jt.dim != ranks[0]:
        raise ValueError(f"inconsistent rank sequence {ranks}")
    return jt


def jordan_type_from_nilpotent(n_mat: np.ndarray, p: int, field=None) -> JordanType:
    """Jordan type of a nilpotent matrix with N^p = 0 over F_{p^k}."""
    _check_prime(p)
    ctx = field if field is not None else field_ctx(p)
    d = n_mat.shape[0]
    ranks = [d]
    power = np.asarray(n_mat, dtype=np.uint16)
    for _ in range(p):
        ranks.append(rank_array(power, ctx))
        power = matmul_array(power, np.asarray(n_mat, dtype=np.uint16), ctx)
    if ranks[-1] != 0:
        raise ValueError("matrix is not nilpotent of exponent <= p")
    return type_from_ranks(ranks, p)


# ---------------------------------------------------------------------------
# generic Jordan types


@dataclass
class GenericTypeCertificate:
    jordan_type: JordanType
    power_ranks: dict[int, GenericRankResult]
    log2_failure_bound: float
    status: str  # "ok" | "field_small"


def u_minus_one(module: ModuleRep, group: ElabSubgroup) -> PolyMatrix:
    """The polynomial matrix sum_i alpha_i (g_i - 1) on the module."""
    mats = [(module.matrix(g) - np.eye(module.dim, dtype=np.int64)) % module.p
            for g in group.gens]
    return PolyMatrix.from_linear(mats, module.p)


def generic_jordan_type(module: ModuleRep, group: ElabSubgroup,
                        samples: int | None = None, extension: int | None = None,
                        seed: int = 0) -> GenericTypeCertificate:
    """Generic Jordan type of the module restricted to the subgroup.

    Ranks of the powers of u(alpha)-1 are maximized over random points; the
    certificate carries the per-power Schwartz-Zippel failure bounds.
    """
    p = module.p
    if group.p != p:
        raise ValueError("characteristic mismatch between module and subgroup")
    if group.rank == 0:
        raise ValueError("generic Jordan type needs at least one generator")
    u = u_minus_one(module, group)
    ranks = [module.dim]
    results: dict[int, GenericRankResult] = {}
    power = u
    for j in range(1, p):
        res = generic_rank(power, samples=samples, extension=extension, seed=seed + j)
        results[j] = res
        ranks.append(res.rank)
        if j + 1 < p:
            power = power @ u
    ranks.append(0)  # (u-1)^p = 0 in characteristic p
    jt = type_from_ranks(ranks, p)
    bound = sum(2.0 ** r.log2_failure_bound for r in results.values())
    status = "ok" if all(r.status == "ok" for r in results.values()) else "field_small"
    return GenericTypeCertificate(jt, results, np.log2(bound) if bound > 0 else -1024.0, status)


# ---------------------------------------------------------------------------
# the insertion rule


@dataclass(frozen=True)
class InsertionPlan:
    """A target block size c and the chain of (i_u, q_u, ell_u) tuples."""

    c: int
    tuples: tuple[tuple[int, int, int], ...]


def _chains(m_counts: tuple[int, ...], a: int, c: int):
    """All valid sequences of (q, i-q) pairs for case (ii) of the rule.

    The chain conditions require both q and i-q to be non-increasing along
    the sequence, so every valid multiset of pairs is totally ordered under
    the product order and enumerated exactly once in sorted form.  Tuples
    carry a third index ranging over the blocks of size i, so each distinct
    (q, i-q) pair may repeat at most m_i times.
    """
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(chain: list[tuple[int, int]], used: dict[tuple[int, int], int],
            q_max: int, iq_max: int):
        out.append(tuple(chain))
        for q in range(q_max, 0, -1):
            for iq in range(iq_max, -1, -1):
                i = q + iq
                if not 1 <= i < c:
                    continue
                pair = (q, iq)
                if used.get(pair, 0) >= m_counts[i - 1]:
                    continue
                used[pair] = used.get(pair, 0) + 1
                rec(chain + [pair], used, q, iq)
                used[pair] -= 1

    rec([], {}, a - 1, c - a)
    return out


def insertion_quotients(a: int, v: JordanType) -> set[JordanType]:
    """Jordan types of V/U over all embeddings of a single block [a] into V."""
    p = v.p
    if not 1 <= a <= p:
        raise ValueError(f"block size a={a} out of range 1..{p}")
    if v.dim < a:
        return set()
    m = v.counts
    out: set[JordanType] = set()
    if m[a - 1] > 0:
        counts = list(m)
        counts[a - 1] -= 1
        out.add(JordanType(tuple(counts), p))
    for c in range(a + 1, p + 1):
        if m[c - 1] == 0:
            continue
        for chain in _chains(m, a, c):
            counts = list(m)
            counts[c - 1] -= 1
            if chain:
                q1 = chain[0][0]
                counts[c - a + q1 - 1] += 1
                for (q_u, iq_u), (q_next, _) in zip(chain, chain[1:]):
                    i_u = q_u + iq_u
                    counts[i_u - 1] -= 1
                    counts[i_u - q_u + q_next - 1] += 1
                q_t, iq_t = chain[-1]
                i_t = q_t + iq_t
                counts[i_t - 1] -= 1
                if i_t - q_t >= 1:
                    counts[i_t - q_t - 1] += 1
            else:
                counts[c - a - 1] += 1
            if all(x >= 0 for x in counts):
                out.add(JordanType(tuple(counts), p))
    return out


def insertion_quotients_general(u: JordanType, v: JordanType) -> set[JordanType]:
    """Iterate the one-block rule over the blocks of U in every order."""
    if u.p != v.p:
        raise ValueError("characteristic mismatch")
    if u.dim > v.dim:
        return set()

    @lru_cache(maxsize=None)
    def rec(remaining: tuple[int, ...], current: tuple[int, ...]) -> frozenset:
        if all(c == 0 for c in remaining):
            return frozenset({current})
        acc = set()
        for idx in range(len(remaining)):
            if remaining[idx] == 0:
                continue
            rem2 = remaining[:idx] + (remaining[idx] - 1,) + remaining[idx + 1:]
            for w in insertion_quotients(idx + 1, JordanType(current, u.p)):
                acc |= rec(rem2, w.counts)
        return frozenset(acc)

    return {JordanType(c, u.p) for c in rec(u.counts, v.counts)}


# ---------------------------------------------------------------------------
# brute-force oracle: enumerate invariant subspaces


def _nilpotent_of_type(t: JordanType) -> np.ndarray:
    d = t.dim
    n_mat = np.zeros((d, d), dtype=np.int64)
    pos = 0
    for size_idx, count in enumerate(t.counts):
        size = size_idx + 1
        for _ in range(count):
            for i in range(size - 1):
                n_mat[pos + i, pos + i + 1] = 1
            pos += size
    return n_mat


def _all_rref(d: int, k: int, p: int):
    """All reduced row echelon forms of rank k in F_p^d."""
    from itertools import combinations

    for pivots in combinations(range(d), k):
        pivset = set(pivots)
        free_positions = [(r, c) for r, pc in enumerate(pivots)
                          for c in range(pc + 1, d) if c not in pivset]
        base = np.zeros((k, d), dtype=np.int64)
        for r, pc in enumerate(pivots):
            base[r, pc] = 1
        for vals in product(range(p), repeat=len(free_positions)):
            mat = base.copy()
            for (r, c), val in zip(free_positions, vals):
                mat[r, c] = val
            yield mat


@lru_cache(maxsize=32)
def _submodule_classification(v_counts: tuple[int, ...], p: int):
    """Map sub-type -> set of quotient-types over all invariant subspaces."""
    v = JordanType(v_counts, p)
    d = v.dim
    n_mat = _nilpotent_of_type(v)
    ctx = field_ctx(p)
    result: dict[tuple[int, ...], set[tuple[int, ...]]] = {}

    npow = [np.eye(d, dtype=np.int64)]
    for _ in range(p):
        npow.append(npow[-1] @ n_mat % p)

    for k in range(d + 1):
        for w in _all_rref(d, k, p):
            if k:
                wn = w @ n_mat % p
                a_mat = wn[:, _pivot_cols(w)]  # N in W-coordinates, if invariant
                if not np.array_equal(a_mat @ w % p, wn):
                    continue  # not N-invariant
                sub_ranks = [k]
                powa = a_mat
                for _ in range(p):
                    sub_ranks.append(rank_array(powa % p, ctx))
                    powa = powa @ a_mat % p
                sub_t = type_from_ranks(sub_ranks[:p] + [0], p)
            else:
                sub_t = JordanType((0,) * p, p)
            # quotient type from ranks of the induced maps on V/W
            quo_ranks = [d - k]
            for j in range(1, p + 1):
                stacked = np.vstack([w, npow[j]]) if k else npow[j]
                quo_ranks.append(rank_array(stacked % p, ctx) - k)
            quo_t = type_from_ranks(quo_ranks[:p] + [0], p)
            result.setdefault(sub_t.counts, set()).add(quo_t.counts)
    return result


def _pivot_cols(w: np.ndarray) -> list[int]:
    cols = []
    for r in range(w.shape[0]):
        nz = np.nonzero(w[r])[0]
        cols.append(int(nz[0]))
    return cols


def ses_quotients_oracle(u: JordanType, v: JordanType) -> set[JordanType]:
    """Quotient types of V by explicit submodules built block-by-block from U.

    Every N-invariant subspace of an explicit model of the current module is
    enumerated via reduced echelon bases; single blocks of U are split off
    one at a time in every order (quotients of quotients realize the
    iterated short exact sequences).  For a single-block U this is exactly
    the set of quotients by embedded copies of U.  Guarded to p in {2,3}
    and dim V <= 6.
    """
    p = u.p
    if p not in (2, 3):
        raise ResourceGuardError("oracle guard: p must be 2 or 3")
    if v.dim > 6:
        raise ResourceGuardError("oracle guard: dim V <= 6")
    if u.p != v.p:
        raise ValueError("characteristic mismatch")
    if u.dim > v.dim:
        return set()

    @lru_cache(maxsize=None)
    def rec(remaining: tuple[int, ...], current: tuple[int, ...]) -> frozenset:
        if all(c == 0 for c in remaining):
            return frozenset({current})
        acc = set()
        table = _submodule_classification(current, p)
        for idx in range(len(remaining)):
            if remaining[idx] == 0:
                continue
            rem2 = remaining[:idx] + (remaining[idx] - 1,) + remaining[idx + 1:]
            block = tuple(1 if i == idx else 0 for i in range(p))
            for quotient in table.get(block, set()):
                acc |= rec(rem2, quotient)
        return frozenset(acc)

    return {JordanType(c, p) for c in rec(u.counts, v.counts)}
