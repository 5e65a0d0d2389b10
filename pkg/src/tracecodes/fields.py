"""Exact arithmetic in F_p and its extensions F_{p^m}, p an odd prime.

Elements are plain integers in ``[0, r)`` with ``r = p^m``: the base-p
digits of the index are the coefficients of the polynomial-basis
representative, low degree first.  Index 0 is the additive identity,
index 1 the multiplicative identity, and the indices below p are exactly
the prime subfield.

A :class:`FieldContext` fixes the modulus polynomial and a primitive
element and precomputes power, discrete-log and trace tables, so that
multiplication, inversion, the absolute trace and the quadratic
character are all O(1) lookups.  Construction is deterministic: the
default modulus is the lexicographically first monic irreducible
polynomial (tail coefficients read low-degree-first as a base-p
integer) and the primitive element is the smallest index of full
multiplicative order.  Contexts are immutable after construction and
safe to share between threads or worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import (
    DegreeTooSmallError,
    EvenCharacteristicError,
    NotPrimeError,
    SizeCapExceededError,
)

DEFAULT_SIZE_CAP = 10**7


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test; fine at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def legendre(a: int, p: int) -> int:
    """Quadratic character of F_p on integers: 0 on multiples of p, else +/-1."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


# ----------------------------------------------------------------------
# Dense polynomial helpers over F_p (coefficient lists, low degree first)
# ----------------------------------------------------------------------

def _poly_trim(a: Sequence[int]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _poly_mul_mod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    """(a * b) mod f for monic f of degree m; result has fixed length m."""
    m = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1 if a and b else 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            off = d - m
            for j in range(m):
                prod[off + j] = (prod[off + j] - c * f[j]) % p
    if len(prod) < m:
        prod = list(prod) + [0] * (m - len(prod))
    return list(prod[:m])


def _poly_powmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    m = len(f) - 1
    result = [1] + [0] * (m - 1)
    b = _poly_mul_mod(base, [1], f, p)
    while e:
        if e & 1:
            result = _poly_mul_mod(result, b, f, p)
        e >>= 1
        if e:
            b = _poly_mul_mod(b, b, f, p)
    return result


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of a mod b; b need not be monic."""
    a = list(_poly_trim(a))
    b = _poly_trim(b)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        c = (a[-1] * inv_lead) % p
        off = len(a) - 1 - db
        for j in range(db + 1):
            a[off + j] = (a[off + j] - c * b[j]) % p
        a = list(_poly_trim(a))
    return tuple(a)


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    Uses the Frobenius criterion: f of degree m is irreducible iff
    x^(p^m) = x mod f and gcd(x^(p^(m/q)) - x, f) = 1 for every prime
    q dividing m.
    """
    f = [c % p for c in coeffs]
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        raise ValueError("modulus must be monic of degree >= 1")
    if m == 1:
        return True
    x = [0, 1]
    frob = {}
    g = list(x)
    for k in range(1, m + 1):
        g = _poly_powmod(g, p, f, p)
        frob[k] = g
    x_red = _poly_trim([0, 1])
    if _poly_trim(frob[m]) != x_red:
        return False
    for q in prime_factors(m):
        h = list(frob[m // q])
        h[1] = (h[1] - 1) % p
        h = _poly_trim(h)
        if not h:
            return False
        if len(_poly_gcd(h, f, p)) != 1:
            return False
    return True


def irreducible_polynomials(p: int, m: int) -> Iterator[tuple[int, ...]]:
    """Monic irreducible degree-m polynomials over F_p, in lexicographic
    order of the tail coefficients (read low-degree-first as a base-p
    integer).  Coefficient tuples are low degree first, length m+1."""
    for tail in range(p**m):
        coeffs = []
        t = tail
        for _ in range(m):
            t, c = divmod(t, p)
            coeffs.append(c)
        coeffs.append(1)
        if is_irreducible(coeffs, p):
            yield tuple(coeffs)


# ----------------------------------------------------------------------
# Field context
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FieldParams:
    """Shape parameters of F_{p^m}; m_p is m reduced mod p."""

    p: int
    m: int
    r: int
    m_p: int


class FieldContext:
    """A fully constructed F_{p^m} with dense lookup tables.

    Attributes
    ----------
    params : FieldParams
    modulus : tuple[int, ...]
        Monic irreducible modulus, coefficients low degree first.
    alpha : int
        Index of the primitive element.
    exp, log : list[int]
        Power and discrete-log tables for alpha (log[0] is -1).
    trace_table : list[int]
        Absolute trace of every element, as a prime-field value.
    """

    def __init__(self, p: int, m: int, modulus: Optional[Sequence[int]] = None,
                 size_cap: int = DEFAULT_SIZE_CAP):
        if not is_prime(p):
            raise NotPrimeError(f"p={p} is not prime")
        if p == 2:
            raise EvenCharacteristicError("p must be an odd prime")
        if m < 1:
            raise DegreeTooSmallError(f"extension degree m={m} must be >= 1")
        r = p**m
        if r > size_cap:
            raise SizeCapExceededError(f"p^m = {r} exceeds size cap {size_cap}")
        self.p = p
        self.m = m
        self.r = r
        self.m_p = m % p
        self.params = FieldParams(p, m, r, self.m_p)

        if modulus is None:
            modulus = next(irreducible_polynomials(p, m))
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = tuple(modulus)

        self.alpha = self._find_primitive()
        self._build_power_tables()
        self._build_trace_table()

    # -- construction internals ----------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        """Table-free multiply, used only while the tables are being built."""
        p, m, f = self.p, self.m, self.modulus
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = _poly_mul_mod(ca, cb, f, p)
        return self.index(prod)

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        b = a
        while e:
            if e & 1:
                result = self._mul_raw(result, b)
            e >>= 1
            if e:
                b = self._mul_raw(b, b)
        return result

    def _find_primitive(self) -> int:
        rm1 = self.r - 1
        cofactors = [rm1 // q for q in prime_factors(rm1)]
        for cand in range(2, self.r):
            if all(self._pow_raw(cand, cf) != 1 for cf in cofactors):
                return cand
        raise AssertionError("no primitive element found")  # unreachable

    def _build_power_tables(self) -> None:
        rm1 = self.r - 1
        exp = [0] * rm1
        log = [-1] * self.r
        cur = 1
        for k in range(rm1):
            exp[k] = cur
            log[cur] = k
            cur = self._mul_raw(cur, self.alpha)
        if cur != 1:
            raise AssertionError("primitive element order check failed")
        self.exp = exp
        self.log = log

    def _build_trace_table(self) -> None:
        p, m, r = self.p, self.m, self.r
        # traces of the polynomial basis 1, x, ..., x^{m-1}
        basis_traces = []
        for j in range(m):
            e = p**j
            acc = e
            frob = e
            for _ in range(m - 1):
                frob = self._pow_raw(frob, p)
                acc = self.add(acc, frob)
            if acc >= p:
                raise AssertionError("trace left the prime subfield")
            basis_traces.append(acc)
        table = [0] * r
        for idx in range(r):
            v = idx
            s = 0
            j = 0
            while v:
                v, c = divmod(v, p)
                if c:
                    s += c * basis_traces[j]
                j += 1
            table[idx] = s % p
        self.trace_table = table

    # -- element encoding ----------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Base-p digits of the index = polynomial-basis coefficients."""
        out = []
        for _ in range(self.m):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def index(self, coeffs: Sequence[int]) -> int:
        s = 0
        for c in reversed(coeffs):
            s = s * self.p + (c % self.p)
        return s

    def element(self, c: int) -> int:
        """Embed a prime-field value as a field element (a constant)."""
        return c % self.p

    # -- arithmetic ------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        p = self.p
        s = 0
        mult = 1
        while x or y:
            s += ((x % p + y % p) % p) * mult
            x //= p
            y //= p
            mult *= p
        return s

    def neg(self, x: int) -> int:
        p = self.p
        s = 0
        mult = 1
        while x:
            x, c = divmod(x, p)
            if c:
                s += (p - c) * mult
            mult *= p
        return s

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        rm1 = self.r - 1
        t = self.log[x] + self.log[y]
        if t >= rm1:
            t -= rm1
        return self.exp[t]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        rm1 = self.r - 1
        return self.exp[(rm1 - self.log[x]) % rm1]

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        rm1 = self.r - 1
        return self.exp[(self.log[x] * e) % rm1]

    # -- trace and quadratic character -----------------------------------

    def trace(self, x: int) -> int:
        """Absolute trace down to F_p, as an integer in [0, p)."""
        return self.trace_table[x]

    def quadratic_character(self, x: int) -> int:
        """0 at zero, +1 on nonzero squares, -1 on non-squares."""
        if x == 0:
            return 0
        return 1 if self.log[x] % 2 == 0 else -1

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p}, m={self.m}, modulus={self.modulus})"


def make_field(p: int, m: int, modulus: Optional[Sequence[int]] = None,
               size_cap: int = DEFAULT_SIZE_CAP) -> FieldContext:
    """Construct F_{p^m} deterministically.

    Without an explicit modulus this picks the lexicographically first
    monic irreducible polynomial, so two calls with the same arguments
    produce identical element encodings.
    """
    return FieldContext(p, m, modulus=modulus, size_cap=size_cap)
