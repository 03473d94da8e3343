"""Explicit finite fields F_{p^e} with dense exponent/log tables.

A field element is stored as an integer *code* in ``[0, q)``: the residue
polynomial ``c_0 + c_1*x + ... + c_{e-1}*x^{e-1}`` (coefficients in
``[0, p)``) is encoded as ``c_0 + c_1*p + ... + c_{e-1}*p^{e-1}``.  For a
prime field (``e = 1``) the code is simply the residue, so ordinary modular
intuition carries over.

Construction is deterministic: the modulus is the first monic irreducible
of degree ``e`` in ascending code order (higher-degree coefficients most
significant), and the generator is the first element in ascending code
order whose multiplicative order is ``q - 1``.  Identical inputs therefore
always produce identical tables.

All tables are built eagerly: ``exp_table[i] = g**i``, its inverse
``log_table``, the F_p-valued trace of every element, and the discrete log
of ``1 - g**i`` (used by Jacobi-sum kernels).  A :class:`FieldCtx` is
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import sympy

from .errors import (
    LogOfZero,
    NoIrreducibleFound,
    NotPrime,
    TableBudgetExceeded,
)

#: Default cap on q; fields larger than this refuse to build.
DEFAULT_TABLE_BUDGET = 2**20

# --------------------------------------------------------------------------
# Polynomial arithmetic over F_p.  Coefficient lists are low-to-high degree
# with no trailing zeros (the zero polynomial is the empty list).
# --------------------------------------------------------------------------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while len(a) - 1 >= dm and a:
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(mod):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        _poly_trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    return _poly_mod(_poly_mul(a, b, p), mod, p)


def _poly_powmod(base: list[int], n: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    acc = _poly_mod(list(base), mod, p)
    while n:
        if n & 1:
            result = _poly_mulmod(result, acc, mod, p)
        acc = _poly_mulmod(acc, acc, mod, p)
        n >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _poly_trim(out)


def _is_irreducible(f: list[int], p: int) -> bool:
    """Test a monic degree-e polynomial for irreducibility over F_p.

    Uses the standard criterion: x^(p^e) = x (mod f), and for every prime
    divisor r of e, gcd(x^(p^(e/r)) - x, f) = 1.
    """
    e = len(f) - 1
    x = [0, 1]
    xq = _poly_powmod(x, p**e, f, p)
    if _poly_sub(xq, x, p):
        return False
    for r in sympy.primefactors(e):
        xpr = _poly_powmod(x, p ** (e // r), f, p)
        g = _poly_gcd(f, _poly_sub(xpr, x, p), p)
        if len(g) - 1 > 0:
            return False
    return True


# --------------------------------------------------------------------------
# FieldCtx
# --------------------------------------------------------------------------


class FieldCtx:
    """A realized finite field F_{p^e}; see the module docstring.

    Attributes:
        p, e, q: characteristic, extension degree, and q = p**e.
        modulus: monic irreducible coefficient tuple, low-to-high degree.
        g: code of the fixed multiplicative generator.
        exp_table: ``exp_table[i]`` is the code of ``g**i``, length q-1.
        log_table: inverse of ``exp_table``; entry 0 holds the sentinel -1.
        trace_table: F_p-valued trace of every element, indexed by code.
        one_minus_log: ``one_minus_log[i] = dlog(1 - g**i)`` with sentinel
            -1 at i = 0 (where 1 - g**0 = 0).
    """

    __slots__ = (
        "p", "e", "q", "modulus", "g",
        "exp_table", "log_table", "trace_table", "one_minus_log",
        "_digits", "_pows", "__weakref__",
    )

    def __init__(self, p: int, e: int, modulus: tuple[int, ...], g: int,
                 exp_table: np.ndarray, trace_table: np.ndarray):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self.g = g
        self.exp_table = exp_table
        log_table = np.full(self.q, -1, dtype=np.int64)
        log_table[exp_table] = np.arange(self.q - 1, dtype=np.int64)
        self.log_table = log_table
        self.trace_table = trace_table
        if e > 1:
            pows = p ** np.arange(e, dtype=np.int64)
            codes = np.arange(self.q, dtype=np.int64)
            self._digits = (codes[:, None] // pows[None, :]) % p
            self._pows = pows
        else:
            self._digits = None
            self._pows = None
        one = self.sub(np.int64(1), exp_table)
        self.one_minus_log = log_table[one]

    # -- arithmetic on codes (accept and return ints or numpy arrays) ------

    def add(self, u, v):
        if self.e == 1:
            return (u + v) % self.p
        digits = (self._digits[u] + self._digits[v]) % self.p
        return digits @ self._pows

    def neg(self, u):
        if self.e == 1:
            return (-u) % self.p
        return ((self.p - self._digits[u]) % self.p) @ self._pows

    def sub(self, u, v):
        return self.add(u, self.neg(v))

    def mul(self, u, v):
        if np.isscalar(u) and np.isscalar(v):
            if u == 0 or v == 0:
                return 0
            idx = (self.log_table[u] + self.log_table[v]) % (self.q - 1)
            return int(self.exp_table[idx])
        u = np.asarray(u)
        v = np.asarray(v)
        idx = (self.log_table[u] + self.log_table[v]) % (self.q - 1)
        out = self.exp_table[idx]
        return np.where((u == 0) | (v == 0), 0, out)

    def inv(self, u: int) -> int:
        if u == 0:
            raise LogOfZero()
        return int(self.exp_table[(-self.log_table[u]) % (self.q - 1)])

    def pow_elem(self, u, n: int):
        """u raised to an integer power n (with 0**0 = 1)."""
        if np.isscalar(u):
            if u == 0:
                return 1 if n == 0 else 0
            return int(self.exp_table[(n * int(self.log_table[u])) % (self.q - 1)])
        u = np.asarray(u)
        idx = (n * self.log_table[u].astype(np.int64)) % (self.q - 1)
        return np.where(u == 0, 1 if n == 0 else 0, self.exp_table[idx])

    def from_int(self, n: int) -> int:
        """Embed a rational integer via the prime subfield."""
        return n % self.p

    def coeffs(self, u: int) -> tuple[int, ...]:
        """Coefficient vector (low-to-high degree) of an element code."""
        return tuple((u // self.p**i) % self.p for i in range(self.e))

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FieldCtx(q={self.q}={self.p}^{self.e}, g={self.g})"


# --------------------------------------------------------------------------
# Construction
# --------------------------------------------------------------------------


def _find_modulus(p: int, e: int) -> tuple[int, ...]:
    """First monic irreducible of degree e in ascending code order."""
    for code in range(p**e):
        f = [(code // p**i) % p for i in range(e)] + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise NoIrreducibleFound(p, e)


def _find_generator_prime(p: int) -> int:
    factors = sympy.primefactors(p - 1)
    for cand in range(2, p):
        if all(pow(cand, (p - 1) // r, p) != 1 for r in factors):
            return cand
    raise NoIrreducibleFound(p, 1)  # unreachable for prime p > 2


def _find_generator_ext(p: int, e: int, modulus: list[int]) -> list[int]:
    q = p**e
    factors = sympy.primefactors(q - 1)
    for code in range(2, q):
        cand = [(code // p**i) % p for i in range(e)]
        cand = _poly_trim(cand)
        if all(_poly_powmod(cand, (q - 1) // r, modulus, p) != [1]
               for r in factors):
            return cand
    raise NoIrreducibleFound(p, e)  # unreachable


def _encode(poly: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(poly))


@lru_cache(maxsize=None)
def _build_field_cached(p: int, e: int) -> FieldCtx:
    q = p**e
    if e == 1:
        g = _find_generator_prime(p)
        modulus = ((-g) % p, 1)
        exp_table = np.empty(q - 1, dtype=np.int64)
        acc = 1
        for i in range(q - 1):
            exp_table[i] = acc
            acc = (acc * g) % p
        trace_table = np.arange(q, dtype=np.int64)
        return FieldCtx(p, e, modulus, g, exp_table, trace_table)

    modulus = list(_find_modulus(p, e))
    gen = _find_generator_ext(p, e, modulus)
    g = _encode(gen, p)

    exp_table = np.empty(q - 1, dtype=np.int64)
    acc = [1]
    for i in range(q - 1):
        exp_table[i] = _encode(acc, p)
        acc = _poly_mulmod(acc, gen, modulus, p)

    # Trace of the basis monomials: tr(x^j) = sum_i (x^(p^i))^j.  Each
    # summand is a genuine polynomial but the sum over i lands in F_p, so
    # accumulate full coefficient vectors and keep the constant term.
    acc_vecs = [[0] * e for _ in range(e)]
    for i in range(e):
        frob = _poly_powmod([0, 1], p**i, modulus, p)
        cur = [1]
        for j in range(e):
            for k, c in enumerate(cur):
                acc_vecs[j][k] = (acc_vecs[j][k] + c) % p
            cur = _poly_mulmod(cur, frob, modulus, p)
    basis_traces = [0] * e
    for j in range(e):
        assert all(c == 0 for c in acc_vecs[j][1:]), "trace must land in F_p"
        basis_traces[j] = acc_vecs[j][0]

    pows = p ** np.arange(e, dtype=np.int64)
    codes = np.arange(q, dtype=np.int64)
    digits = (codes[:, None] // pows[None, :]) % p
    trace_table = (digits @ np.array(basis_traces, dtype=np.int64)) % p

    return FieldCtx(p, e, tuple(modulus), g, exp_table, trace_table)


def build_field(p: int, e: int = 1,
                table_budget: int = DEFAULT_TABLE_BUDGET) -> FieldCtx:
    """Construct F_{p^e} with all lookup tables.

    Raises:
        NotPrime: if p is not an odd prime.
        TableBudgetExceeded: if p**e exceeds ``table_budget``.
        ValueError: if e < 1.
    """
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    if p == 2 or not sympy.isprime(p):
        raise NotPrime(p)
    q = p**e
    if q > table_budget:
        raise TableBudgetExceeded(q, table_budget)
    return _build_field_cached(p, e)


# --------------------------------------------------------------------------
# Module-level operations
# --------------------------------------------------------------------------


def dlog(ctx: FieldCtx, x: int) -> int:
    """Discrete log base g of a nonzero element code."""
    if x == 0:
        raise LogOfZero()
    return int(ctx.log_table[x])


def trace_map(ctx: FieldCtx, alpha: int) -> int:
    """F_p-valued field trace of an element code, as an int in [0, p)."""
    return int(ctx.trace_table[alpha])
