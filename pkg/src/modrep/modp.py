"""Base-p digit arithmetic: Lucas binomials and the digitwise containment
relations that drive the two-part decomposition and Kostka formulas."""

from __future__ import annotations

from .partitions import _check_prime


def digits_base_p(a: int, p: int) -> list[int]:
    """Base-p digits of a, least significant first; [] for a = 0."""
    if a < 0:
        raise ValueError("a must be non-negative")
    out = []
    while a:
        a, d = divmod(a, p)
        out.append(d)
    return out


def binomial_mod_p(a: int, b: int, p: int) -> int:
    """C(a, b) mod p via the digitwise product; 0 when b > a or b < 0."""
    _check_prime(p)
    if b < 0 or b > a:
        return 0
    result = 1
    while a or b:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        if db > da:
            return 0
        num = den = 1
        for i in range(db):
            num = num * (da - i) % p
            den = den * (i + 1) % p
        result = result * num * pow(den, p - 2, p) % p
    return result


def digitwise_le(a: int, b: int, p: int) -> bool:
    """a_i <= b_i for every base-p digit (the Kostka containment)."""
    _check_prime(p)
    if a < 0 or b < 0:
        raise ValueError("arguments must be non-negative")
    while a or b:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        if da > db:
            return False
    return True


def digitwise_zero_or_eq(a: int, b: int, p: int) -> bool:
    """a_i = b_i or a_i = 0 for every base-p digit (the decomposition test)."""
    _check_prime(p)
    if a < 0 or b < 0:
        raise ValueError("arguments must be non-negative")
    while a or b:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        if da != 0 and da != db:
            return False
    return True
