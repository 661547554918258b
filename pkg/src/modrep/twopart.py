"""Closed-form tables for two-part partitions: decomposition numbers,
p-Kostka numbers, Specht/simple dimensions, the odd-p branching excerpt,
and the complexity values predicted by the two headline theorems.

Everything here is combinatorial; the matrix constructions that
independently confirm these numbers live in specht.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .modp import digitwise_le, digitwise_zero_or_eq
from .partitions import Partition, CoreWeight, is_p_regular, p_core_two_part, _check_prime

NOT_COVERED = "not covered"


@dataclass(frozen=True)
class TwoPartLabel:
    """The two-part partition (n - second, second)."""

    n: int
    second: int
    p: int

    def __post_init__(self):
        if not 0 <= 2 * self.second <= self.n:
            raise ValueError(f"not a two-part partition: ({self.n - self.second},{self.second})")
        _check_prime(self.p)

    @property
    def partition(self) -> Partition:
        return Partition(tuple(x for x in (self.n - self.second, self.second) if x > 0))

    def core_weight(self) -> CoreWeight:
        return p_core_two_part(self.n, self.second, self.p)


@dataclass(frozen=True)
class PredictedComplexity:
    """A predicted complexity value with the rule that produced it."""

    value: int | str  # int, or NOT_COVERED
    rule: str  # ThmA_i | ThmA_ii | ThmC_i | ThmC_ii | dim_shortcut | not_covered
    weight: int


def _require_regular(n: int, s: int, p: int) -> None:
    lam = Partition(tuple(x for x in (n - s, s) if x > 0))
    if not is_p_regular(lam, p):
        raise ValueError(f"({n - s},{s}) is not {p}-regular")


def decomposition_number(n: int, k: int, s: int, p: int) -> int:
    """Multiplicity of the simple labelled (n-s,s) in the Specht (n-k,k).

    Zero or one, decided by a digitwise test on k-s against n-2s+1.
    """
    if not 0 <= 2 * s <= 2 * k <= n:
        raise ValueError(f"need 0 <= 2s <= 2k <= n, got n={n}, k={k}, s={s}")
    _require_regular(n, s, p)
    return 1 if digitwise_zero_or_eq(k - s, n - 2 * s + 1, p) else 0


def p_kostka_number(n: int, k: int, s: int, p: int) -> int:
    """Multiplicity of the Young module (n-s,s) in the permutation module (n-k,k)."""
    if not 0 <= 2 * s <= 2 * k <= n:
        raise ValueError(f"need 0 <= 2s <= 2k <= n, got n={n}, k={k}, s={s}")
    _check_prime(p)
    return 1 if digitwise_le(k - s, n - 2 * s, p) else 0


def specht_dim(n: int, m: int) -> int:
    """Dimension of the two-part Specht module (n-m,m), char-free."""
    if not 0 <= 2 * m <= n:
        raise ValueError(f"need 0 <= 2m <= n, got n={n}, m={m}")
    return comb(n, m) - (comb(n, m - 1) if m >= 1 else 0)


@lru_cache(maxsize=None)
def simple_dim(n: int, s: int, p: int) -> int:
    """Dimension of the simple module (n-s,s), by unitriangular solve."""
    _require_regular(n, s, p)
    return specht_dim(n, s) - sum(
        decomposition_number(n, s, t, p) * simple_dim(n, t, p)
        for t in range(s)
        if is_p_regular(Partition(tuple(x for x in (n - t, t) if x > 0)), p)
    )


def specht_decomposition(n: int, s: int, p: int) -> list[TwoPartLabel]:
    """All composition factors of the Specht module (n-s,s), multiplicity-free."""
    if not 0 <= 2 * s <= n:
        raise ValueError(f"need 0 <= 2s <= n, got n={n}, s={s}")
    _check_prime(p)
    out = []
    for t in range(s + 1):
        lam_t = Partition(tuple(x for x in (n - t, t) if x > 0))
        if not is_p_regular(lam_t, p):
            continue
        if decomposition_number(n, s, t, p):
            out.append(TwoPartLabel(n, t, p))
    return out


def mbr_restrict(a: int, b: int, p: int) -> list[tuple[int, int]]:
    """Restriction of the simple (a,b) to the point stabilizer, odd p.

    Returns the labels of the summands.  The congruence class
    b-2 = a-1 (mod p) is outside the excerpt this implements and raises.
    """
    _check_prime(p)
    if p == 2:
        raise ValueError("restriction rule implemented for odd p only")
    if not 0 < b < a:
        raise ValueError(f"need 0 < b < a, got a={a}, b={b}")
    if (b - 2) % p == a % p:
        return [(a - 1, b)]
    if (b - 2) % p == (a - 1) % p:
        raise ValueError(f"branch not covered: b-2 = a-1 (mod {p}) for (a,b)=({a},{b})")
    return [(a - 1, b), (a, b - 1)]


def predicted_complexity(n: int, second: int, p: int) -> PredictedComplexity:
    """Predicted complexity of the simple module (n-second, second).

    The two theorems' coverage comes first; outside it, the block-theoretic
    shortcut still pins the value to the weight whenever p does not divide
    the module dimension.  Anything else is reported as not covered.
    """
    _require_regular(n, second, p)
    w = p_core_two_part(n, second, p).weight
    m, s = divmod(second, p)

    if second == 1:
        value = w - 1 if (p == 2 and n % 4 == 2) else w
        return PredictedComplexity(value, "ThmA_i", w)
    if second == 2:
        value = w - 1 if (p == 2 and n in (5, 6)) else w
        return PredictedComplexity(value, "ThmA_ii", w)
    if p > 2 and m <= 1:
        return PredictedComplexity(w, "ThmC_i", w)
    if p > 3 and m == 2 and s == 0:
        return PredictedComplexity(w, "ThmC_ii", w)
    if second == 0 or simple_dim(n, second, p) % p != 0:
        return PredictedComplexity(w, "dim_shortcut", w)
    return PredictedComplexity(NOT_COVERED, "not_covered", w)
