"""Rank varieties: membership tests, exhaustive point counts over small
extensions, dimension estimates, and the closed-form fixtures for the
natural simple module at p=2.

The matrix of u(alpha)-1 is linear in alpha, so the variety is a cone and
point counts can be taken over projective representatives exactly:
N = 1 + (q-1) * #{projective points in V}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import FieldCtx, field_ctx, ResourceGuardError
from .jordan import u_minus_one
from .specht import ModuleRep
from .subgroups import ElabSubgroup


@dataclass
class VarietyReport:
    module: str
    class_tag: str
    rank: int  # rank of the elementary abelian group
    point_counts: dict[int, int]  # extension degree k -> |V(F_{p^k})|
    dim_estimate: int
    consistent: bool
    full_space: bool
    p: int
    seed: int
    moduli: dict[int, tuple[int, ...]] = field(default_factory=dict)
    status: str = "ok"


def _free_rank_target(dim: int, p: int) -> int:
    return dim * (p - 1) // p


def in_variety(module: ModuleRep, group: ElabSubgroup, point: tuple[int, ...],
               ctx: FieldCtx | None = None) -> bool:
    """Is the module non-free over the cyclic shifted subgroup at the point?

    The zero point always belongs to the variety; when p does not divide the
    dimension no restriction can be free, so membership is automatic.
    """
    p = module.p
    if all(x == 0 for x in point):
        return True
    if module.dim % p != 0:
        return True
    ctx = ctx or field_ctx(p)
    u = u_minus_one(module, group)
    return u.evaluate(point, ctx).rank() < _free_rank_target(module.dim, p)


def _projective_points(m: int, q: int):
    """One representative per punctured line: first nonzero coordinate is 1."""
    for lead in range(m):
        tail = m - lead - 1
        idx = np.zeros(m, dtype=np.int64)
        idx[lead] = 1
        if tail == 0:
            yield tuple(idx)
            continue
        for rest in range(q**tail):
            t = rest
            for j in range(tail):
                t, d = divmod(t, q)
                idx[lead + 1 + j] = d
            yield tuple(idx)


def default_extensions(p: int) -> tuple[int, ...]:
    """Divisibility-nested extension chains (components of the cone may only
    be rational over a proper extension, so counts must be taken along a
    chain of subfields)."""
    return (1, 2) if p == 3 else (1, 2, 4)


def _growth_estimate(counts: dict[int, int], a: int, b: int, p: int) -> int:
    """Dimension from count growth between nested extensions: counts behave
    like c * q^d, so d = log(N_b / N_a) / ((b - a) log p) with c cancelled."""
    if counts[b] <= 1:
        return 0
    return max(0, round(math.log(counts[b] / counts[a]) / ((b - a) * math.log(p))))


def variety_dimension(module: ModuleRep, group: ElabSubgroup,
                      extensions: tuple[int, ...] | None = None,
                      seed: int = 0, module_id: str = "") -> VarietyReport:
    """Exhaustive point counts of the rank variety and a dimension estimate.

    The estimate comes from the growth ratio of the two largest extension
    counts (robust to the number of components); the absolute count over
    the largest extension cross-checks it, and disagreement is flagged as
    inconsistent rather than silently trusted.
    """
    p = module.p
    m = group.rank
    if m > 6:
        raise ResourceGuardError(f"variety guard: rank(E)={m} exceeds 6")
    if extensions is None:
        extensions = default_extensions(p)
    extensions = tuple(sorted(set(extensions)))
    counts: dict[int, int] = {}
    moduli: dict[int, tuple[int, ...]] = {}
    full_space = module.dim % p != 0
    if m == 0:
        return VarietyReport(module_id, group.class_tag, 0, {k: 1 for k in extensions},
                             0, True, full_space, p, seed)
    if full_space:
        # never free: V is the whole affine space, no counting needed
        counts = {k: p ** (k * m) for k in extensions}
        return VarietyReport(module_id, group.class_tag, m, counts, m, True, True, p, seed)
    u = u_minus_one(module, group)
    target = _free_rank_target(module.dim, p)
    for k in extensions:
        ctx = field_ctx(p, k)
        moduli[k] = ctx.modulus
        hits = 0
        for point in _projective_points(m, ctx.q):
            if u.evaluate(point, ctx).rank() < target:
                hits += 1
        counts[k] = 1 + (ctx.q - 1) * hits
    k_max = extensions[-1]
    if len(extensions) == 1:
        dim_estimate = 0 if counts[k_max] <= 1 else round(math.log(counts[k_max]) /
                                                          (k_max * math.log(p)))
        consistent = True
    else:
        dim_estimate = _growth_estimate(counts, extensions[-2], k_max, p)
        absolute = 0 if counts[k_max] <= 1 else round(math.log(counts[k_max]) /
                                                      (k_max * math.log(p)))
        consistent = dim_estimate == absolute
    dim_estimate = min(dim_estimate, m)
    status = "ok" if consistent else "inconsistent"
    return VarietyReport(module_id, group.class_tag, m, counts, dim_estimate,
                         consistent, False, p, seed, moduli, status)


# ---------------------------------------------------------------------------
# closed-form fixtures for D^{(n-1,1)} at p=2, n = 2 mod 4


@dataclass(frozen=True)
class D1VarietyFixture:
    n: int
    ell: int
    case: int  # 1, 2, or 3
    expected_dim: int

    def contains(self, point: tuple[int, ...], ctx: FieldCtx) -> bool:
        m = self.n // 2
        if len(point) != m:
            raise ValueError(f"point must have {m} coordinates")
        if all(x == 0 for x in point):
            return True
        if self.case == 1:
            return _sum_of_coproducts(point, 0, ctx)
        if self.case == 2:
            return _coordinate_plane_union(point)
        return _coordinate_plane_union(point) or _sum_of_coproducts(point, 2 * self.ell, ctx)


def _sum_of_coproducts(point: tuple[int, ...], start: int, ctx: FieldCtx) -> bool:
    """sum over i >= start of prod_{j != i, j >= start} gamma_j == 0."""
    coords = point[start:]
    total = 0
    for i in range(len(coords)):
        prod = 1
        for j, x in enumerate(coords):
            if j != i:
                prod = ctx.mul(prod, int(x))
        total = ctx.add(total, prod)
    return total == 0


def _coordinate_plane_union(point: tuple[int, ...]) -> bool:
    """gamma_s = gamma_{s+1} = 0 for some odd s <= n/2 - 2 (1-based)."""
    m = len(point)
    for s in range(1, m - 1, 2):
        if point[s - 1] == 0 and point[s] == 0:
            return True
    return False


def paper_variety_D1(n: int, ell: int) -> D1VarietyFixture:
    """The closed-form variety of the natural simple module over K_ell x F_ell.

    Only p=2 and n = 2 (mod 4) are covered; the case is selected by ell.
    """
    if n % 4 != 2:
        raise ValueError(f"fixture requires n = 2 (mod 4), got n={n}")
    if not 0 <= ell <= (n - 2) // 4:
        raise ValueError(f"need 0 <= ell <= (n-2)/4, got ell={ell}")
    if ell == 0:
        return D1VarietyFixture(n, ell, 1, n // 2 - 1)
    if ell == (n - 2) // 4:
        return D1VarietyFixture(n, ell, 2, n // 2 - 2)
    return D1VarietyFixture(n, ell, 3, n // 2 - 1)
