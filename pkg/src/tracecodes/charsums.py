"""Quadratic Gauss sums, quadratic exponential sums and order-2
cyclotomic numbers, each with a direct-summation oracle and a closed
form.

All direct evaluations are exact in Z[zeta_p].  The closed forms use a
compact unit/half-power representation (:class:`GaussSumExact`) whose
even-power products are ordinary integers; those are the only
combinations that ever reach the code-level formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CyclotomicInteger
from .errors import ZeroLeadingCoefficientError
from .fields import FieldContext, legendre

PRINCIPAL = "principal"
QUARTIC = "quartic"


@dataclass(frozen=True)
class GaussSumExact:
    """The value i**unit * p**(half_power / 2), stored exactly.

    Quadratic Gauss sums and their pairwise products all have this
    shape.  With an even half power and a real unit the value is a
    rational integer; with an odd half power it lives in Z[zeta_p] and
    can be materialized there via :meth:`to_cyclotomic`.
    """

    p: int
    unit: int
    half_power: int

    def __mul__(self, other: "GaussSumExact") -> "GaussSumExact":
        if self.p != other.p:
            raise ValueError("cannot multiply Gauss sums over different primes")
        return GaussSumExact(self.p, (self.unit + other.unit) % 4,
                             self.half_power + other.half_power)

    def as_int(self) -> int:
        if self.half_power % 2 or self.unit % 2:
            raise ValueError(f"{self!r} is not a rational integer")
        return (-1) ** (self.unit // 2) * self.p ** (self.half_power // 2)

    def embed(self) -> complex:
        return 1j**self.unit * self.p ** (self.half_power / 2)

    def to_cyclotomic(self) -> CyclotomicInteger:
        """Exact image in Z[zeta_p].

        An odd half power contributes one factor of sqrt(p), realized as
        the quadratic Gauss sum over F_p (whose embedding is sqrt(p) for
        p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4).
        """
        if self.half_power % 2 == 0:
            return CyclotomicInteger.from_int(self.p, self.as_int())
        root_turns = 0 if self.p % 4 == 1 else 1
        k = (self.unit - root_turns) % 4
        if k % 2:
            raise ValueError(f"{self!r} does not lie in Z[zeta_p]")
        sign = -1 if k == 2 else 1
        scale = sign * self.p ** ((self.half_power - 1) // 2)
        return quadratic_gauss_sum_fp(self.p) * scale


@lru_cache(maxsize=None)
def quadratic_gauss_sum_fp(p: int) -> CyclotomicInteger:
    """sum of legendre(t) * zeta^t over t in F_p^*, exactly."""
    counts = [0] * p
    for t in range(1, p):
        counts[t] = legendre(t, p)
    return CyclotomicInteger.from_exponent_counts(p, counts)


def quadratic_gauss_sum(p: int, m: int, convention: str = PRINCIPAL) -> GaussSumExact:
    """Closed form of the quadratic Gauss sum over F_{p^m}.

    The "principal" convention is the one confirmed by direct
    summation: (-1)**(m-1) * eps**m * p**(m/2) with eps = 1 for
    p = 1 mod 4 and eps = i for p = 3 mod 4.  The "quartic" convention
    instead evaluates the sign factor (-1)**((p-1)*m/4) literally,
    reading (-1)**(1/2) as i; it differs from the principal value by
    (-1)**m exactly when p = 5 or 7 mod 8 and m is odd, and agrees
    everywhere else.  Even-power combinations are identical under both.
    """
    if convention == PRINCIPAL:
        eps_turns = 0 if p % 4 == 1 else 1
        unit = (2 * (m - 1) + eps_turns * m) % 4
    elif convention == QUARTIC:
        unit = (2 * (m - 1) + (p - 1) * m // 2) % 4
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return GaussSumExact(p, unit, m)


def gauss_sum_closed_cyclotomic(p: int, m: int) -> CyclotomicInteger:
    """The principal closed form materialized in Z[zeta_p], directly
    comparable with :func:`gauss_sum_direct`."""
    return quadratic_gauss_sum(p, m, PRINCIPAL).to_cyclotomic()


def gauss_sum_direct(ctx: FieldContext) -> CyclotomicInteger:
    """sum of eta(x) * zeta^Tr(x) over x in F_r^*, by direct summation."""
    p = ctx.p
    tr = ctx.trace_table
    counts = [0] * p
    for k, x in enumerate(ctx.exp):
        if k % 2 == 0:
            counts[tr[x]] += 1
        else:
            counts[tr[x]] -= 1
    return CyclotomicInteger.from_exponent_counts(p, counts)


def quadratic_exponential_sum(ctx: FieldContext, a2: int, a1: int, a0: int) -> CyclotomicInteger:
    """sum of zeta^Tr(a2*x^2 + a1*x + a0) over all x, by direct summation."""
    if a2 == 0:
        raise ZeroLeadingCoefficientError("a2 must be nonzero")
    p = ctx.p
    tr = ctx.trace_table
    counts = [0] * p
    for x in range(ctx.r):
        y = ctx.add(ctx.mul(a2, ctx.mul(x, x)), ctx.add(ctx.mul(a1, x), a0))
        counts[tr[y]] += 1
    return CyclotomicInteger.from_exponent_counts(p, counts)


def quadratic_exponential_sum_closed(ctx: FieldContext, a2: int, a1: int, a0: int,
                                     gauss: CyclotomicInteger | None = None) -> CyclotomicInteger:
    """Completed-square form: zeta^Tr(a0 - a1^2/(4*a2)) * eta(a2) * G,
    with G the quadratic Gauss sum of the same field (direct value by
    default, so the identity test stays a genuine cross-check)."""
    if a2 == 0:
        raise ZeroLeadingCoefficientError("a2 must be nonzero")
    if gauss is None:
        gauss = gauss_sum_direct(ctx)
    four = ctx.element(4)
    shift = ctx.sub(a0, ctx.mul(ctx.mul(a1, a1), ctx.inv(ctx.mul(four, a2))))
    out = gauss * CyclotomicInteger.zeta_power(ctx.p, ctx.trace(shift))
    if ctx.quadratic_character(a2) < 0:
        out = -out
    return out


# ----------------------------------------------------------------------
# Order-2 cyclotomic numbers
# ----------------------------------------------------------------------

def cyclotomic_number_direct(ctx: FieldContext, i: int, j: int) -> int:
    """Number of x in class i with x + 1 in class j, where class 0 holds
    the nonzero squares and class 1 the non-squares.  Exhaustive scan."""
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError("class indices must be 0 or 1")
    count = 0
    for x in range(1, ctx.r):
        if (0 if ctx.quadratic_character(x) == 1 else 1) != i:
            continue
        y = ctx.add(x, 1)
        if y == 0:
            continue
        if (0 if ctx.quadratic_character(y) == 1 else 1) == j:
            count += 1
    return count


def cyclotomic_numbers_order2(r: int) -> dict[tuple[int, int], int]:
    """Closed form of the four order-2 cyclotomic numbers of a field
    with r elements (r odd), keyed by (i, j)."""
    if r % 2 == 0:
        raise ValueError("r must be odd")
    h = (r - 1) // 2
    if h % 2 == 0:
        return {(0, 0): (h - 2) // 2, (0, 1): h // 2, (1, 0): h // 2, (1, 1): h // 2}
    return {(0, 0): (h - 1) // 2, (0, 1): (h + 1) // 2,
            (1, 0): (h - 1) // 2, (1, 1): (h - 1) // 2}
