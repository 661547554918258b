"""Integer partition combinatorics: cores, weights, expansions, dominance.

Partitions are kept as tuples of weakly decreasing positive parts; the empty
tuple is the partition of 0.  Core/weight extraction goes through beta-sets
(the abacus), which makes independence of the hook-removal order structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for part in self.parts:
            for j in range(part):
                cols[j] += 1
        return Partition(tuple(cols))

    def hook_lengths(self) -> list[int]:
        """All hook lengths of the Young diagram, row by row."""
        conj = self.conjugate().parts
        hooks = []
        for i, part in enumerate(self.parts):
            for j in range(part):
                hooks.append(part - j + conj[j] - i - 1)
        return hooks

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts) if self.parts else "-"

    @staticmethod
    def parse(text: str) -> "Partition":
        """Parse "4,2" syntax; "-" (or empty) denotes the partition of 0."""
        text = text.strip()
        if text in ("-", ""):
            return Partition(())
        return Partition(tuple(int(x) for x in text.split(",")))


def partition(*parts: int) -> Partition:
    """Convenience constructor that drops trailing zero parts."""
    return Partition(tuple(x for x in parts if x != 0))


EMPTY = Partition(())


@dataclass(frozen=True)
class CoreWeight:
    """A p-core together with the number of removed rim p-hooks."""

    core: Partition
    weight: int


def _beta_set(lam: Partition, beads: int) -> list[int]:
    # first-column hook lengths, padded with zero parts up to `beads`
    parts = list(lam.parts) + [0] * (beads - len(lam.parts))
    return [parts[i] + (beads - 1 - i) for i in range(beads)]


def _partition_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    b = len(beta)
    parts = [beta[i] - (b - 1 - i) for i in range(b)]
    return Partition(tuple(x for x in parts if x > 0))


def p_core(lam: Partition, p: int) -> CoreWeight:
    """Remove all rim p-hooks; return the core and the p-weight.

    On the abacus every bead slides down its runner, so the result does not
    depend on the order in which hooks are removed.
    """
    _check_prime(p)
    beads = len(lam.parts)
    beads += (-beads) % p or p  # pad to a positive multiple of p
    beta = _beta_set(lam, beads)
    runners: dict[int, int] = {}
    for pos in beta:
        runners[pos % p] = runners.get(pos % p, 0) + 1
    slid = []
    for r, count in runners.items():
        slid.extend(r + p * i for i in range(count))
    core = _partition_from_beta(slid)
    weight = (lam.n - core.n) // p
    return CoreWeight(core, weight)


def p_core_two_part(n: int, second: int, p: int) -> CoreWeight:
    """Closed-form p-core of (n - second, second) by case analysis.

    Independent of the abacus route in p_core; the two are cross-checked
    exhaustively in the test suite.
    """
    _check_prime(p)
    if not 0 <= 2 * second <= n:
        raise ValueError(f"(n-second, second)=({n - second},{second}) is not a partition")
    s = second % p
    r = n % p
    if s == 0:
        core = partition(r)
    elif p == 2:
        # s == 1
        core = EMPTY if r == 0 else partition(2, 1)
    elif 0 < s <= (p - 1) // 2:
        if r < s - 1:
            core = partition(p + r - s, s)
        elif r < 2 * s - 1:
            core = partition(s - 1, r - s + 1)
        elif r == 2 * s - 1:
            core = partition(p + s - 1, s)
        else:
            core = partition(r - s, s)
    elif s == (p + 1) // 2:
        if r == 0:
            core = partition((3 * p - 1) // 2, (p + 1) // 2)
        elif r < (p - 1) // 2:
            core = partition((p - 1) // 2 + r, (p + 1) // 2)
        else:
            core = partition((p - 1) // 2, r - (p - 1) // 2)
    else:
        # p > 3 and (p+1)/2 < s < p
        if r < 2 * s - p - 1:
            core = partition(s - 1, p + r - s + 1)
        elif r == 2 * s - p - 1:
            core = partition(p + s - 1, s)
        elif r < s - 1:
            core = partition(p + r - s, s)
        else:
            core = partition(s - 1, r - s + 1)
    return CoreWeight(core, (n - core.n) // p)


def is_p_regular(lam: Partition, p: int) -> bool:
    """No p consecutive equal parts."""
    run = 1
    for i in range(1, len(lam.parts)):
        run = run + 1 if lam.parts[i] == lam.parts[i - 1] else 1
        if run >= p:
            return False
    return True


def is_p_restricted(lam: Partition, p: int) -> bool:
    return is_p_regular(lam.conjugate(), p)


def classify(lam: Partition, p: int) -> dict[str, bool]:
    _check_prime(p)
    return {"p_regular": is_p_regular(lam, p), "p_restricted": is_p_restricted(lam, p)}


def p_adic_expansion(lam: Partition, p: int) -> list[Partition]:
    """Write lam = sum_i p^i * lam(i) with every lam(i) p-restricted.

    Computed from the part-difference vector: d_j := lam_j - lam_{j+1} equals
    the multiplicity of j as a part of the conjugate; splitting each d_j into
    base-p digits and re-accumulating gives the unique expansion.
    """
    _check_prime(p)
    ell = len(lam.parts)
    if ell == 0:
        return [EMPTY]
    diffs = [lam.parts[j] - (lam.parts[j + 1] if j + 1 < ell else 0) for j in range(ell)]
    ndig = 1
    for d in diffs:
        while d >= p**ndig:
            ndig += 1
    layers = []
    for i in range(ndig):
        digit = [(d // p**i) % p for d in diffs]
        parts = []
        acc = 0
        for j in reversed(range(ell)):
            acc += digit[j]
            parts.append(acc)
        parts.reverse()
        layers.append(Partition(tuple(x for x in parts if x > 0)))
    while len(layers) > 1 and not layers[-1].parts:
        layers.pop()
    # reassembly check: the expansion must reproduce lam component-wise
    maxlen = max(len(mu.parts) for mu in layers)
    for j in range(max(maxlen, ell)):
        total = sum(p**i * (mu.parts[j] if j < len(mu.parts) else 0) for i, mu in enumerate(layers))
        assert total == (lam.parts[j] if j < ell else 0), "p-adic expansion failed to reassemble"
    assert all(is_p_restricted(mu, p) for mu in layers)
    return layers


def o_lambda(lam: Partition, p: int) -> Partition:
    """Vertex label of the Young module: p^i repeated |lam(i)| times."""
    layers = p_adic_expansion(lam, p)
    out: list[int] = []
    for i in reversed(range(len(layers))):
        out.extend([p**i] * layers[i].n)
    return Partition(tuple(x for x in out if x > 0))


def dominates(mu: Partition, lam: Partition) -> bool:
    """True iff mu dominance-dominates lam (partial sums of mu are >=)."""
    if mu.n != lam.n:
        raise ValueError(f"|mu|={mu.n} != |lam|={lam.n}")
    acc_mu = acc_lam = 0
    for j in range(max(len(mu.parts), len(lam.parts))):
        acc_mu += mu.parts[j] if j < len(mu.parts) else 0
        acc_lam += lam.parts[j] if j < len(lam.parts) else 0
        if acc_mu < acc_lam:
            return False
    return True


@lru_cache(maxsize=None)
def _small_primes() -> set[int]:
    sieve = [True] * 1000
    sieve[0] = sieve[1] = False
    for i in range(2, 32):
        if sieve[i]:
            for j in range(i * i, 1000, i):
                sieve[j] = False
    return {i for i, ok in enumerate(sieve) if ok}


def _check_prime(p: int) -> None:
    if p < 2 or (p < 1000 and p not in _small_primes()):
        raise ValueError(f"p={p} is not prime")
    if p >= 1000:
        for d in range(2, int(p**0.5) + 1):
            if p % d == 0:
                raise ValueError(f"p={p} is not prime")
