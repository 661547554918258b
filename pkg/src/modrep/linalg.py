"""Exact linear algebra over F_{p^k} and polynomial matrices over F_p.

Field elements are encoded as integers in [0, p^k) via base-p digits of the
polynomial representative.  For fields up to TABLE_CAP elements the
arithmetic is table-driven (built from log/antilog of a primitive element),
which lets Gaussian elimination run as vectorized numpy gathers; a numba
kernel accelerates the same tables when numba is importable.  F_2 gets a
bit-packed elimination path.

PolyMatrix holds a matrix of multivariate polynomials over F_p as a sparse
dict monomial -> coefficient matrix, which keeps powers of linear matrices
(the only large instances) cheap to form and to evaluate.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False

TABLE_CAP = 4096


class ResourceGuardError(ValueError):
    """Raised when an exact routine is asked to exceed its guarded size."""


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (dense coefficient lists, for moduli only)


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # reduce by monic mod
    k = len(mod) - 1
    while len(prod) > k:
        lead = prod[-1]
        if lead:
            off = len(prod) - 1 - k
            for i in range(k + 1):
                prod[off + i] = (prod[off + i] - lead * mod[i]) % p
        prod.pop()
    return _poly_trim(prod)


def _poly_powmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while _poly_trim(b):
        # a mod b
        binv = pow(b[-1], p - 2, p)
        while len(a) >= len(b) and _poly_trim(a):
            coef = a[-1] * binv % p
            off = len(a) - len(b)
            for i in range(len(b)):
                a[off + i] = (a[off + i] - coef * b[i]) % p
            _poly_trim(a)
        a, b = b, a
    return a


def _is_irreducible(mod: list[int], p: int) -> bool:
    k = len(mod) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    x = [0, 1]
    # x^(p^k) == x mod f
    xq = _poly_powmod(x, p**k, mod, p)
    if _poly_trim(list(xq)) != [0, 1]:
        return False
    for ell in {d for d in range(2, k + 1) if k % d == 0 and _is_prime(d)}:
        xq = _poly_powmod(x, p ** (k // ell), mod, p)
        diff = [(a - b) % p for a, b in zip(xq + [0] * 4, [0, 1] + [0] * len(xq))]
        g = _poly_gcd(list(mod), _poly_trim(diff), p)
        if len(g) != 1:
            return False
    return True


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            return False
    return True


def find_irreducible(p: int, k: int, seed: int = 0) -> tuple[int, ...]:
    """Monic irreducible of degree k over F_p by seeded random search."""
    if k == 1:
        return (0, 1)
    rng = random.Random((p, k, seed))
    while True:
        cand = [rng.randrange(p) for _ in range(k)] + [1]
        if cand[0] == 0:
            cand[0] = 1 + rng.randrange(p - 1)
        if _is_irreducible(cand, p):
            return tuple(cand)


# ---------------------------------------------------------------------------
# field contexts


class FieldCtx:
    """Arithmetic context for F_{p^k}; immutable after construction."""

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None, seed: int = 0):
        if not _is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if k * math.log2(p) > 62:
            raise ValueError(f"p^k too large for machine-word encoding (p={p}, k={k})")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus) if modulus is not None else find_irreducible(p, k, seed)
        if len(self.modulus) != k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _is_irreducible(list(self.modulus), p):
            raise ValueError(f"modulus {self.modulus} is not irreducible over F_{p}")
        self._tables = None

    def __repr__(self):
        return f"FieldCtx(p={self.p}, k={self.k}, modulus={self.modulus})"

    # scalar arithmetic on encoded elements ---------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def _encode(self, digits: list[int]) -> int:
        out = 0
        for d in reversed(digits):
            out = out * self.p + d
        return out

    def add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self._encode([(-x) % self.p for x in self._digits(a)])

    def mul(self, a: int, b: int) -> int:
        prod = _poly_mulmod(_poly_trim(self._digits(a)), _poly_trim(self._digits(b)),
                            list(self.modulus), self.p)
        return self._encode(prod + [0] * (self.k - len(prod)))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.pow(a, self.q - 2)

    # table-driven arithmetic ------------------------------------------------

    @property
    def tables(self):
        """(MUL, ADD, NEG, INV) as numpy uint16 arrays; q <= TABLE_CAP only."""
        if self._tables is None:
            if self.q > TABLE_CAP:
                raise ResourceGuardError(f"field of size {self.q} exceeds table cap {TABLE_CAP}")
            self._tables = self._build_tables()
        return self._tables

    def _primitive_element(self) -> int:
        factors = set()
        m = self.q - 1
        d = 2
        while d * d <= m:
            if m % d == 0:
                factors.add(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            factors.add(m)
        for g in range(2, self.q):
            if all(self.pow(g, (self.q - 1) // ell) != 1 for ell in factors):
                return g
        raise AssertionError("no primitive element found")

    def _build_tables(self):
        q, p, k = self.q, self.p, self.k
        g = self._primitive_element() if q > 2 else 1
        antilog = np.zeros(q - 1, dtype=np.int64)
        cur = 1
        for i in range(q - 1):
            antilog[i] = cur
            cur = self.mul(cur, g)
        log = np.zeros(q, dtype=np.int64)
        log[antilog] = np.arange(q - 1)
        mul = np.zeros((q, q), dtype=np.uint16)
        nz = antilog  # all nonzero elements
        idx = (log[nz][:, None] + log[nz][None, :]) % (q - 1)
        mul[np.ix_(nz, nz)] = antilog[idx].astype(np.uint16)
        # addition is digitwise mod p
        dig = np.zeros((q, k), dtype=np.int64)
        a = np.arange(q)
        for i in range(k):
            dig[:, i] = a % p
            a = a // p
        powers = p ** np.arange(k)
        add = (((dig[:, None, :] + dig[None, :, :]) % p) * powers).sum(axis=2).astype(np.uint16)
        neg = (((-dig) % p) * powers).sum(axis=1).astype(np.uint16)
        inv = np.zeros(q, dtype=np.uint16)
        inv[antilog] = antilog[(-log[antilog]) % (q - 1)]
        return mul, add, neg.astype(np.uint16), inv

    def embed_prime(self, arr: np.ndarray) -> np.ndarray:
        """Entries in [0, p) are valid encodings in any extension."""
        return arr.astype(np.uint16)


_CTX_CACHE: dict[tuple, FieldCtx] = {}


def field_ctx(p: int, k: int = 1, seed: int = 0) -> FieldCtx:
    key = (p, k, seed)
    if key not in _CTX_CACHE:
        _CTX_CACHE[key] = FieldCtx(p, k, seed=seed)
    return _CTX_CACHE[key]


# ---------------------------------------------------------------------------
# dense matrices over a field context


@dataclass
class Matrix:
    ctx: FieldCtx
    data: np.ndarray  # uint16, entries encoded in ctx

    def __post_init__(self):
        self.data = np.ascontiguousarray(self.data, dtype=np.uint16)
        if self.data.ndim != 2:
            raise ValueError("matrix data must be 2-dimensional")

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def rank(self) -> int:
        return rank_array(self.data, self.ctx)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.ctx, matmul_array(self.data, other.data, self.ctx))


def rank(m: Matrix) -> int:
    return m.rank()


# -- GF(2) bit-packed path ---------------------------------------------------


def _rank_gf2_bits(arr: np.ndarray) -> int:
    packed = np.packbits((np.asarray(arr) & 1).astype(np.uint8), axis=1, bitorder="little")
    pivots: dict[int, int] = {}
    rk = 0
    for row in packed:
        bits = int.from_bytes(row.tobytes(), "little")
        while bits:
            msb = bits.bit_length() - 1
            if msb in pivots:
                bits ^= pivots[msb]
            else:
                pivots[msb] = bits
                rk += 1
                break
    return rk


# -- table-driven elimination ------------------------------------------------


def _rank_table_np(arr: np.ndarray, ctx: FieldCtx) -> int:
    mul, add, neg, inv = ctx.tables
    E = arr.astype(np.uint16).copy()
    rows, cols = E.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = E[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            E[[r, piv]] = E[[piv, r]]
        E[r] = mul[E[r], inv[E[r, c]]]
        f = E[r + 1:, c]
        hot = np.nonzero(f)[0]
        if hot.size:
            prod = mul[f[hot][:, None], E[r][None, :]]
            E[r + 1 + hot] = add[E[r + 1 + hot], neg[prod]]
        r += 1
    return r


if _HAVE_NUMBA:

    @numba.njit(cache=True)
    def _rank_table_nb(E, mul, add, neg, inv):  # pragma: no cover - jitted
        rows, cols = E.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if E[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(cols):
                    t = E[r, j]
                    E[r, j] = E[piv, j]
                    E[piv, j] = t
            s = inv[E[r, c]]
            for j in range(cols):
                E[r, j] = mul[E[r, j], s]
            for i in range(r + 1, rows):
                fi = E[i, c]
                if fi != 0:
                    for j in range(c, cols):
                        E[i, j] = add[E[i, j], neg[mul[fi, E[r, j]]]]
            r += 1
        return r

    @numba.njit(cache=True)
    def _matmul_table_nb(A, B, mul, add):  # pragma: no cover - jitted
        n, m = A.shape
        m2, r = B.shape
        C = np.zeros((n, r), dtype=np.uint16)
        for i in range(n):
            for k in range(m):
                a = A[i, k]
                if a != 0:
                    for j in range(r):
                        C[i, j] = add[C[i, j], mul[a, B[k, j]]]
        return C


def rank_array(arr: np.ndarray, ctx: FieldCtx) -> int:
    """Row rank of an encoded matrix over ctx."""
    if arr.size == 0:
        return 0
    if ctx.q == 2:
        return _rank_gf2_bits(np.asarray(arr))
    if _HAVE_NUMBA:
        mul, add, neg, inv = ctx.tables
        return int(_rank_table_nb(arr.astype(np.uint16).copy(), mul, add, neg, inv))
    return _rank_table_np(np.asarray(arr), ctx)


def matmul_array(a: np.ndarray, b: np.ndarray, ctx: FieldCtx) -> np.ndarray:
    if ctx.k == 1:
        return (a.astype(np.int64) @ b.astype(np.int64) % ctx.p).astype(np.uint16)
    if _HAVE_NUMBA:
        mul, add, _, _ = ctx.tables
        return _matmul_table_nb(a.astype(np.uint16), b.astype(np.uint16), mul, add)
    mul, add, _, _ = ctx.tables
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint16)
    for k in range(a.shape[1]):
        col = a[:, k]
        hot = np.nonzero(col)[0]
        if hot.size:
            prod = mul[col[hot][:, None], b[k][None, :]]
            out[hot] = add[out[hot], prod]
    return out


# -- prime-field utilities (k = 1, plain integer arithmetic) ------------------


def rref_modp(arr: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p; returns (R, pivot columns)."""
    E = arr.astype(np.int64) % p
    rows, cols = E.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(E[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            E[[r, piv]] = E[[piv, r]]
        E[r] = E[r] * pow(int(E[r, c]), p - 2, p) % p
        hot = np.nonzero(E[:, c])[0]
        hot = hot[hot != r]
        if hot.size:
            E[hot] = (E[hot] - np.outer(E[hot, c], E[r])) % p
        pivots.append(c)
        r += 1
    return E, pivots


def kernel_modp(arr: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right kernel over F_p, one vector per row."""
    R, pivots = rref_modp(arr, p)
    cols = arr.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-R[r, fc]) % p
    return basis


def inv_modp(arr: np.ndarray, p: int) -> np.ndarray:
    n = arr.shape[0]
    aug = np.concatenate([arr.astype(np.int64) % p, np.eye(n, dtype=np.int64)], axis=1)
    R, pivots = rref_modp(aug, p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return R[:, n:]


def solve_modp(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Solve a @ x = b over F_p for invertible a."""
    return inv_modp(a, p) @ (b.astype(np.int64) % p) % p


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over F_p (symbolic fallback path)

Mono = tuple[int, ...]


@dataclass
class Poly:
    """Multivariate polynomial over F_p as {exponent tuple: coefficient}."""

    p: int
    nvars: int
    terms: dict[Mono, int] = field(default_factory=dict)

    @staticmethod
    def const(c: int, p: int, nvars: int) -> "Poly":
        c %= p
        return Poly(p, nvars, {(0,) * nvars: c} if c else {})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % self.p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(self.p, self.nvars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "Poly":
        c %= self.p
        if c == 0:
            return Poly(self.p, self.nvars, {})
        return Poly(self.p, self.nvars, {m: (v * c) % self.p for m, v in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = (out.get(m, 0) + c1 * c2) % self.p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Poly(self.p, self.nvars, out)

    def _lead(self) -> tuple[Mono, int]:
        m = max(self.terms)  # lex order on exponent tuples
        return m, self.terms[m]

    def exact_div(self, other: "Poly") -> "Poly":
        """Exact division; raises if the division leaves a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = Poly(self.p, self.nvars, dict(self.terms))
        quo: dict[Mono, int] = {}
        lm, lc = other._lead()
        lc_inv = pow(lc, self.p - 2, self.p)
        while not rem.is_zero():
            rm, rc = rem._lead()
            qm = tuple(a - b for a, b in zip(rm, lm))
            if any(e < 0 for e in qm):
                raise ArithmeticError("inexact polynomial division")
            qc = rc * lc_inv % self.p
            quo[qm] = qc
            rem = rem - Poly(self.p, self.nvars, {qm: qc}) * other
        return Poly(self.p, self.nvars, quo)

    def evaluate(self, point: tuple[int, ...], ctx: FieldCtx) -> int:
        acc = 0
        for m, c in self.terms.items():
            val = c % ctx.p
            for x, e in zip(point, m):
                if e:
                    val = ctx.mul(val, ctx.pow(x, e))
            acc = ctx.add(acc, val)
        return acc


# ---------------------------------------------------------------------------
# polynomial matrices


class PolyMatrix:
    """Matrix of multivariate polynomials over F_p.

    Stored as {monomial: coefficient matrix over F_p}; well suited to the
    u(alpha)-1 matrices, which are linear, and to their powers.
    """

    def __init__(self, p: int, nvars: int, shape: tuple[int, int],
                 coeffs: dict[Mono, np.ndarray] | None = None):
        self.p = p
        self.nvars = nvars
        self.shape = shape
        self.coeffs: dict[Mono, np.ndarray] = {}
        if coeffs:
            for m, mat in coeffs.items():
                mat = np.asarray(mat, dtype=np.int64) % p
                if mat.any():
                    self.coeffs[m] = mat

    @staticmethod
    def from_linear(mats: list[np.ndarray], p: int) -> "PolyMatrix":
        """sum_i alpha_i * mats[i], one variable per matrix."""
        nvars = len(mats)
        shape = mats[0].shape
        coeffs = {}
        for i, mat in enumerate(mats):
            mono = tuple(1 if j == i else 0 for j in range(nvars))
            coeffs[mono] = mat
        return PolyMatrix(p, nvars, shape, coeffs)

    @staticmethod
    def constant(mat: np.ndarray, p: int, nvars: int) -> "PolyMatrix":
        return PolyMatrix(p, nvars, mat.shape, {(0,) * nvars: mat})

    def max_entry_degree(self) -> int:
        return max((sum(m) for m in self.coeffs), default=0)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        out = {m: mat.copy() for m, mat in self.coeffs.items()}
        for m, mat in other.coeffs.items():
            out[m] = (out.get(m, 0) + mat) % self.p
        return PolyMatrix(self.p, self.nvars, self.shape, out)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        out: dict[Mono, np.ndarray] = {}
        for m1, a in self.coeffs.items():
            for m2, b in other.coeffs.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                prod = a @ b % self.p
                if m in out:
                    out[m] = (out[m] + prod) % self.p
                else:
                    out[m] = prod
        return PolyMatrix(self.p, self.nvars, (self.shape[0], other.shape[1]), out)

    def matpow(self, e: int) -> "PolyMatrix":
        if e == 0:
            return PolyMatrix.constant(np.eye(self.shape[0], dtype=np.int64), self.p, self.nvars)
        result = self
        for _ in range(e - 1):
            result = result @ self
        return result

    def entry(self, i: int, j: int) -> Poly:
        terms = {}
        for m, mat in self.coeffs.items():
            c = int(mat[i, j])
            if c:
                terms[m] = c
        return Poly(self.p, self.nvars, terms)

    def evaluate(self, point: tuple[int, ...], ctx: FieldCtx) -> Matrix:
        """Entrywise evaluation at a point of F_{p^k}^nvars."""
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        if ctx.p != self.p:
            raise ValueError("field characteristic mismatch")
        mul, add, neg, inv = ctx.tables
        acc = np.zeros(self.shape, dtype=np.uint16)
        for m, mat in self.coeffs.items():
            val = 1
            for x, e in zip(point, m):
                if e:
                    val = ctx.mul(val, ctx.pow(int(x), e))
            if val == 0:
                continue
            acc = add[acc, mul[val, ctx.embed_prime(mat)]]
        return Matrix(ctx, acc)


def evaluate(pm: PolyMatrix, point: tuple[int, ...], ctx: FieldCtx) -> Matrix:
    return pm.evaluate(point, ctx)


# ---------------------------------------------------------------------------
# randomized generic rank with a Schwartz-Zippel certificate


@dataclass
class GenericRankResult:
    rank: int
    samples: int
    extension: int
    modulus: tuple[int, ...]
    seed: int
    log2_failure_bound: float
    status: str  # "ok" | "field_small"


def _auto_extension(p: int, minor_degree: int, requested: int | None) -> int:
    if requested is not None:
        return requested
    k = 1
    while p**k <= TABLE_CAP and p**k < 8 * max(minor_degree, 1):
        k += 1
    if p**k > TABLE_CAP:
        k -= 1
    return max(k, 1)


def generic_rank(pm: PolyMatrix, samples: int | None = None, extension: int | None = None,
                 seed: int = 0, target_log2_bound: float = -40.0) -> GenericRankResult:
    """Generic rank of a polynomial matrix by evaluation at random points.

    The rank at any point lower-bounds the generic rank, so the max over
    samples is certified up to the probability that every sample missed a
    fixed nonzero maximal minor; that failure probability is bounded by
    (minor degree / field size) per sample.
    """
    minor_degree = pm.max_entry_degree() * min(pm.shape)
    k = _auto_extension(pm.p, minor_degree, extension)
    ctx = field_ctx(pm.p, k)
    ratio = minor_degree / ctx.q
    status = "ok"
    if ratio >= 1.0:
        status = "field_small"
        n_samples = samples if samples is not None else 20
        bound = 0.0
    else:
        per_sample = math.log2(ratio) if ratio > 0 else -64.0
        n_samples = samples if samples is not None else max(1, math.ceil(target_log2_bound / per_sample) + 1)
        bound = n_samples * per_sample
    rng = np.random.default_rng(seed)
    best = 0
    for _ in range(n_samples):
        point = tuple(int(x) for x in rng.integers(0, ctx.q, size=pm.nvars))
        best = max(best, pm.evaluate(point, ctx).rank())
        if best == min(pm.shape):
            break
    return GenericRankResult(best, n_samples, k, ctx.modulus, seed, bound, status)


def symbolic_rank(pm: PolyMatrix) -> int:
    """Exact rank over the rational function field by fraction-free elimination.

    Guarded: at most 64x64 and 6 variables.  Must agree with generic_rank
    whenever both run.
    """
    rows, cols = pm.shape
    if max(rows, cols) > 64 or pm.nvars > 6:
        raise ResourceGuardError(f"symbolic_rank guard exceeded: shape={pm.shape}, nvars={pm.nvars}")
    M = [[pm.entry(i, j) for j in range(cols)] for i in range(rows)]
    prev = Poly.const(1, pm.p, pm.nvars)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        cand = [i for i in range(r, rows) if not M[i][c].is_zero()]
        if not cand:
            continue
        piv = min(cand, key=lambda i: (M[i][c].degree(), len(M[i][c].terms)))
        if piv != r:
            M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            for j in range(cols - 1, c - 1, -1):
                num = M[r][c] * M[i][j] - M[i][c] * M[r][j]
                M[i][j] = num.exact_div(prev)
        prev = M[r][c]
        r += 1
    return r
