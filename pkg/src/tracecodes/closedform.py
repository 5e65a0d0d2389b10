"""Closed-form predictions for the trace-defined codes, as exact integers.

Everything here is a pure function of (p, m) and small prime-field
data.  The quadratic Gauss sum over F_{p^m} enters alone only when m is
even (an integer +/- p^(m/2)) and always paired with the prime-field
Gauss sum when m is odd (an integer +/- p^((m+1)/2)), so no irrational
value ever materializes.

The four parameter regimes are indexed by the parity of m and by
whether p divides m; regime tags carry both bits plus a 1-4 index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .charsums import quadratic_gauss_sum
from .codes import CompleteWeightEnumerator, WeightDistribution, griesmer_lower_bound
from .errors import DegreeTooSmallError, FrequencyMismatchError, RhoZeroError
from .fields import FieldContext, legendre


# ----------------------------------------------------------------------
# Regimes and exact Gauss-sum integers
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Regime:
    """Which of the four closed-form regimes (p, m) falls into."""

    m_even: bool
    m_p_zero: bool

    @property
    def index(self) -> int:
        if self.m_even:
            return 1 if self.m_p_zero else 2
        return 3 if self.m_p_zero else 4


def parameter_regime(p: int, m: int) -> Regime:
    if m <= 2:
        raise DegreeTooSmallError("closed forms need extension degree m > 2")
    return Regime(m_even=(m % 2 == 0), m_p_zero=(m % p == 0))


def _sign_quarter(numer: int) -> int:
    """(-1) ** (numer / 4); the exponent must be an integer in every
    branch that reaches this, so a remainder signals a bug."""
    if numer % 4:
        raise ArithmeticError(f"sign exponent {numer}/4 is not an integer")
    return -1 if (numer // 4) % 2 else 1


def gauss_int(p: int, m: int) -> int:
    """The quadratic Gauss sum over F_{p^m} as an integer (even m only)."""
    return quadratic_gauss_sum(p, m).as_int()


def gauss_pair_int(p: int, m: int) -> int:
    """Product of the quadratic Gauss sums over F_{p^m} and F_p as an
    integer (odd m only)."""
    return (quadratic_gauss_sum(p, m) * quadratic_gauss_sum(p, 1)).as_int()


def _exact_div(a: int, b: int) -> int:
    if a % b:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return a // b


# ----------------------------------------------------------------------
# Counting x by the pair (Tr(x^2), Tr(x))
# ----------------------------------------------------------------------

def trace_pair_count_closed(p: int, m: int, sq_value: int, trace_value: int) -> int:
    """Closed-form count of x in F_{p^m} with Tr(x^2) = sq_value and
    Tr(x) = trace_value."""
    if m < 2:
        raise DegreeTooSmallError("trace-pair counts need m >= 2")
    A = sq_value % p
    B = trace_value % p
    mp = m % p
    base = p ** (m - 2)
    even = (m % 2 == 0)
    if A == 0:
        if even:
            if mp == 0:
                return base + _exact_div((p - 1) * gauss_int(p, m), p) if B == 0 else base
            return base if B == 0 else base + _exact_div(gauss_int(p, m), p)
        if mp == 0:
            return base
        gg = gauss_pair_int(p, m)
        eta = legendre(-mp, p)
        if B == 0:
            return base + _exact_div(eta * (p - 1) * gg, p * p)
        return base - _exact_div(eta * gg, p * p)
    if even:
        if mp == 0:
            return base - _exact_div(gauss_int(p, m), p) if B == 0 else base
        delta = (B * B - mp * A) % p
        if delta == 0:
            return base
        return base + _exact_div(legendre(delta, p) * gauss_int(p, m), p)
    if mp == 0:
        if B == 0:
            return base + _exact_div(legendre(-A, p) * gauss_pair_int(p, m), p)
        return base
    gg = gauss_pair_int(p, m)
    eta = legendre(-mp, p)
    delta = (B * B - mp * A) % p
    if delta == 0:
        return base + _exact_div(eta * (p - 1) * gg, p * p)
    return base - _exact_div(eta * gg, p * p)


def predicted_length(p: int, m: int) -> int:
    """Length of the code on {x : Tr(x) = 1, Tr(x^2) = 0}."""
    if m <= 2:
        raise DegreeTooSmallError("code construction needs extension degree m > 2")
    return trace_pair_count_closed(p, m, 0, 1)


# ----------------------------------------------------------------------
# Symbol-count decomposition for a single codeword
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class TraceProfile:
    """Trace data of a nonzero codeword index a: tr_sq = Tr(a^2) and
    tr = Tr(a); prime_value is a itself when a lies in the prime
    subfield (needed because the decomposition treats those separately)."""

    p: int
    m_p: int
    tr_sq: int
    tr: int
    prime_value: Optional[int] = None

    @classmethod
    def from_element(cls, ctx: FieldContext, a: int) -> "TraceProfile":
        if a == 0:
            raise ValueError("the zero element has no symbol-count profile")
        return cls(p=ctx.p, m_p=ctx.m_p,
                   tr_sq=ctx.trace(ctx.mul(a, a)), tr=ctx.trace(a),
                   prime_value=a if a < ctx.p else None)

    @property
    def discriminant(self) -> int:
        return (self.tr * self.tr - self.m_p * self.tr_sq) % self.p

    def quadratic(self, rho: int) -> int:
        """-m_p*rho^2 + 2*B*rho - A reduced mod p."""
        return (-self.m_p * rho * rho + 2 * self.tr * rho - self.tr_sq) % self.p


def correction_sums(p: int, m: int, prof: TraceProfile, rho: int) -> tuple[int, int, int]:
    """The three exact integer corrections in the decomposition

        N_rho = n/p + (S_lin + S_sq + S_mix) / p^3        (rho != 0)

    of the number of codeword coordinates equal to rho, where S_lin
    couples only the defining trace constraint, S_sq only the
    trace-square constraint, and S_mix all three (character
    orthogonality kills the fourth term).
    """
    rho %= p
    if rho == 0:
        raise RhoZeroError("use correction_sums_at_zero for the zero symbol")
    if prof.p != p or prof.m_p != m % p:
        raise ValueError("profile does not match (p, m)")
    r = p**m
    mp = m % p
    even = (m % 2 == 0)
    A, B = prof.tr_sq, prof.tr

    if prof.prime_value is not None:
        s_lin = (p - 1) * r if rho == prof.prime_value else -r
    else:
        s_lin = 0

    if even:
        gm = gauss_int(p, m)
        s_sq = -(p - 1) * gm if A == 0 else gm
    else:
        gg = gauss_pair_int(p, m)
        s_sq = 0 if A == 0 else -legendre(-A, p) * gg

    if even and mp == 0:
        if A == 0 and B == 0:
            s_mix = (p - 1) * gm
        elif A == 0 or B == 0:
            s_mix = -gm
        elif A == (2 * rho * B) % p:
            s_mix = (p * p - p - 1) * gm
        else:
            s_mix = -(p + 1) * gm
    elif even:
        if A == 0:
            if B == 0:
                s_mix = -gm
            elif (rho * mp) % p == (2 * B) % p:
                s_mix = (p * p - p - 1) * gm
            else:
                s_mix = -(p + 1) * gm
        else:
            delta = prof.discriminant
            if delta == 0:
                if (rho * B) % p == A:
                    s_mix = (p * p - p - 1) * gm
                else:
                    s_mix = -(p + 1) * gm
            elif legendre(delta, p) == 1:
                if prof.quadratic(rho) == 0:
                    s_mix = (p * p - 2 * p - 1) * gm
                else:
                    s_mix = -(2 * p + 1) * gm
            else:
                s_mix = -gm
    elif mp == 0:
        if A == 0 and B == 0:
            s_mix = 0
        elif A == 0:
            half = (rho * B * pow(2, -1, p)) % p
            s_mix = legendre(half, p) * p * gg
        elif B == 0:
            s_mix = legendre(-A, p) * gg
        elif A == (2 * rho * B) % p:
            s_mix = legendre(-A, p) * gg
        else:
            s_mix = (legendre(2 * rho * B - A, p) * p + legendre(-A, p)) * gg
    else:
        eta_mp = legendre(-mp, p)
        if A == 0:
            if B == 0:
                s_mix = eta_mp * gg
            elif (rho * mp) % p == (2 * B) % p:
                s_mix = eta_mp * gg
            else:
                s_mix = (legendre(2 * B * rho - mp * rho * rho, p) * p + eta_mp) * gg
        else:
            delta = prof.discriminant
            if delta == 0:
                if (rho * B) % p == A:
                    s_mix = -(p - 2) * eta_mp * gg
                else:
                    s_mix = 2 * eta_mp * gg
            else:
                f_rho = prof.quadratic(rho)
                if f_rho == 0:
                    s_mix = (legendre(-A, p) + eta_mp) * gg
                else:
                    s_mix = (p * legendre(f_rho, p) + legendre(-A, p) + eta_mp) * gg

    return s_lin, s_sq, s_mix


def correction_sums_at_zero(p: int, m: int, prof: TraceProfile) -> tuple[int, int, int]:
    """Same decomposition for the zero symbol (the rho = 0 analogue of
    :func:`correction_sums`; only the regime with odd m and p not
    dividing m is needed for the weight tables, but all four are
    evaluated so the identity can be checked everywhere)."""
    if prof.p != p or prof.m_p != m % p:
        raise ValueError("profile does not match (p, m)")
    r = p**m
    mp = m % p
    even = (m % 2 == 0)
    A, B = prof.tr_sq, prof.tr

    s_lin = -r if prof.prime_value is not None else 0

    if even:
        gm = gauss_int(p, m)
        s_sq = (p - 1) * (p - 1) * gm if A == 0 else -(p - 1) * gm
    else:
        gg = gauss_pair_int(p, m)
        s_sq = 0 if A == 0 else (p - 1) * legendre(-A, p) * gg

    if even and mp == 0:
        if A == 0 and B == 0:
            s_mix = -(p - 1) * (p - 1) * gm
        elif A == 0 or B == 0:
            s_mix = (p - 1) * gm
        else:
            s_mix = -gm
    elif even:
        if A == 0:
            s_mix = (p - 1) * gm if B == 0 else -gm
        else:
            delta = prof.discriminant
            if delta == 0:
                s_mix = -gm
            else:
                s_mix = -(p * legendre(delta, p) + 1) * gm
    elif mp == 0:
        if A == 0:
            s_mix = 0
        elif B == 0:
            s_mix = -(p - 1) * legendre(-A, p) * gg
        else:
            s_mix = legendre(-A, p) * gg
    else:
        eta_mp = legendre(-mp, p)
        if A == 0:
            s_mix = -(p - 1) * eta_mp * gg if B == 0 else eta_mp * gg
        else:
            delta = prof.discriminant
            if delta == 0:
                s_mix = -(p - 2) * eta_mp * gg
            else:
                s_mix = (legendre(-A, p) + eta_mp) * gg

    return s_lin, s_sq, s_mix


def symbol_count_closed(p: int, m: int, prof: TraceProfile, rho: int) -> int:
    """Exact closed-form count of coordinates equal to rho in the
    codeword of any nonzero a with the given trace profile."""
    n = predicted_length(p, m)
    rho %= p
    if rho == 0:
        terms = correction_sums_at_zero(p, m, prof)
    else:
        terms = correction_sums(p, m, prof, rho)
    return _exact_div(n * p * p + sum(terms), p**3)


# ----------------------------------------------------------------------
# Counting (A, B) pairs by discriminant and by the character of A
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PairCounts:
    """Counts over pairs (A, B) with A in F_p^*, B in F_p and
    discriminant D = B^2 - m_p*A."""

    disc_square: int      # pairs with D a nonzero square
    disc_nonsquare: int   # pairs with D a non-square
    disc_zero: int        # pairs with D = 0
    a_square: int         # pairs with D != 0 and A a square
    a_nonsquare: int      # pairs with D != 0 and A a non-square


def discriminant_pair_counts(p: int, m_p: int) -> PairCounts:
    if m_p % p == 0:
        raise ValueError("the discriminant split requires p not dividing m")
    t_plus = (p - 1) * (p - 2) // 2
    t_minus = (p - 1) * p // 2
    if legendre(m_p, p) == 1:
        a_sq, a_non = t_plus, t_minus
    else:
        a_sq, a_non = t_minus, t_plus
    return PairCounts(disc_square=t_plus, disc_nonsquare=t_minus,
                      disc_zero=p - 1, a_square=a_sq, a_nonsquare=a_non)


# ----------------------------------------------------------------------
# Full complete-weight-enumerator prediction
# ----------------------------------------------------------------------

class _Accumulator:
    """Collects (composition, frequency) terms from value patterns."""

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        self.terms: dict[tuple[int, ...], int] = {}

    def add(self, freq: int, value_fn) -> None:
        if freq < 0:
            raise FrequencyMismatchError(f"negative pattern frequency {freq}")
        if freq == 0:
            return
        comp = [0] * self.p
        total = 0
        for rho in range(1, self.p):
            v = value_fn(rho)
            if v < 0:
                raise FrequencyMismatchError(f"negative symbol count {v}")
            comp[rho] = v
            total += v
        comp[0] = self.n - total
        if comp[0] < 0:
            raise FrequencyMismatchError("symbol counts exceed the length")
        key = tuple(comp)
        self.terms[key] = self.terms.get(key, 0) + freq

    def add_const(self, freq: int, v: int) -> None:
        self.add(freq, lambda rho: v)


def _pairs(p: int, ordered: bool):
    if ordered:
        return itertools.permutations(range(1, p), 2)
    return itertools.combinations(range(1, p), 2)


def _expand_terms(p: int, m: int, ordered_pairs: bool) -> tuple[int, dict]:
    mp = m % p
    regime = parameter_regime(p, m)
    n = predicted_length(p, m)
    q3 = p ** (m - 3)
    acc = _Accumulator(p, n)

    if regime.index == 1:
        eps = _sign_quarter((p - 1) * m)
        t = p ** ((m - 4) // 2)
        acc.add_const(1, 0)
        acc.add_const(p ** (m - 1) - p, q3)
        acc.add_const((p - 1) * p ** (m - 2), q3 + eps * t)
        for rho0 in range(1, p):
            acc.add(1, lambda rho, r0=rho0: n if rho == r0 else 0)
            acc.add((p - 1) * p ** (m - 2),
                    lambda rho, r0=rho0: q3 - (p - 1) * eps * t if rho == r0 else q3 + eps * t)

    elif regime.index == 2:
        eps = _sign_quarter((p - 1) * m)
        u = eps * p ** ((m - 4) // 2)
        big = eps * p ** ((m - 2) // 2)
        acc.add_const(1, 0)
        acc.add_const(p ** (m - 2) - 1, q3)
        acc.add_const((p - 1) * (p ** (m - 1) + eps * p ** (m // 2)) // 2, q3 - u)
        for rho0 in range(1, p):
            acc.add(1, lambda rho, r0=rho0: n if rho == r0 else 0)
            acc.add(p ** (m - 2) - 1,
                    lambda rho, r0=rho0: q3 - big if rho == r0 else q3)
            acc.add(n, lambda rho, r0=rho0: q3 - (p - 1) * u if rho == r0 else q3 + u)
        for rho0, rho1 in _pairs(p, ordered_pairs):
            acc.add(n, lambda rho, r0=rho0, r1=rho1:
                    q3 - (p - 1) * u if rho in (r0, r1) else q3 + u)

    elif regime.index == 3:
        eps1 = _sign_quarter((p - 1) * (m + 1))
        s = eps1 * p ** ((m - 3) // 2)
        half = (p - 1) * p ** (m - 2) // 2
        acc.add_const(1, 0)
        acc.add_const(p ** (m - 1) - p, q3)
        acc.add(half, lambda rho: q3 + legendre(rho, p) * s)
        acc.add(half, lambda rho: q3 - legendre(rho, p) * s)
        for rho0 in range(1, p):
            acc.add(1, lambda rho, r0=rho0: n if rho == r0 else 0)
            acc.add(half, lambda rho, r0=rho0:
                    q3 if rho == r0 else q3 + legendre(rho - r0, p) * s)
            acc.add(half, lambda rho, r0=rho0:
                    q3 if rho == r0 else q3 - legendre(rho - r0, p) * s)

    else:
        eps1 = _sign_quarter((p - 1) * (m + 1))
        theta = legendre(-mp, p) * eps1
        step = p ** ((m - 3) // 2)
        freq2 = n + theta * p ** ((m - 1) // 2) - 1
        nonsquares = [d for d in range(1, p) if legendre(d, p) == -1]
        acc.add_const(1, 0)
        acc.add_const(freq2, q3)
        for rho0 in range(1, p):
            acc.add(1, lambda rho, r0=rho0: n if rho == r0 else 0)
            acc.add(n, lambda rho, r0=rho0:
                    q3 if rho == r0
                    else q3 + theta * legendre(rho * rho - rho * r0, p) * step)
            acc.add(freq2, lambda rho, r0=rho0:
                    q3 - theta * step if rho == r0 else q3)
        for rho0, rho1 in _pairs(p, ordered_pairs):
            acc.add(n, lambda rho, r0=rho0, r1=rho1:
                    q3 if rho in (r0, r1)
                    else q3 + theta * legendre((rho - r0) * (rho - r1), p) * step)
        for delta in nonsquares:
            acc.add(n, lambda rho, d=delta:
                    q3 + theta * legendre(mp * mp * rho * rho - d, p) * step)
        for rho0 in range(1, p):
            for delta in nonsquares:
                acc.add(n, lambda rho, r0=rho0, d=delta:
                        q3 - legendre(mp, p) * eps1 * step if rho == r0
                        else q3 + theta * legendre(mp * mp * (rho - r0) ** 2 - d, p) * step)

    return n, acc.terms


def predict_cwe(p: int, m: int) -> CompleteWeightEnumerator:
    """Closed-form complete weight enumerator of the code on
    {x : Tr(x) = 1, Tr(x^2) = 0}, expanded into explicit terms.

    Value patterns indexed by unordered symbol pairs are the reading
    whose total frequency is p^m; the ordered reading is attempted as a
    fallback and a mismatch in both raises FrequencyMismatchError.
    """
    cwe, _ = predict_cwe_with_reading(p, m)
    return cwe


def predict_cwe_with_reading(p: int, m: int) -> tuple[CompleteWeightEnumerator, str]:
    target = p**m
    readings = []
    for ordered in (False, True):
        n, terms = _expand_terms(p, m, ordered)
        total = sum(terms.values())
        readings.append((ordered, total))
        if total == target:
            cwe = CompleteWeightEnumerator(p=p, n=n, terms=terms)
            return cwe, "ordered" if ordered else "unordered"
    raise FrequencyMismatchError(
        f"no pair reading reaches total {target}: got {readings}")


def predict_weight_distribution(p: int, m: int) -> WeightDistribution:
    """Closed-form weight distribution (the per-regime frequency tables)."""
    regime = parameter_regime(p, m)
    mp = m % p
    n = predicted_length(p, m)
    q3 = p ** (m - 3)
    rows: list[tuple[int, int]] = [(0, 1)]

    if regime.index == 1:
        eps = _sign_quarter((p - 1) * m)
        t = p ** ((m - 4) // 2)
        rows += [
            (p ** (m - 2), p - 1),
            ((p - 1) * q3, p ** (m - 1) - p),
            ((p - 1) * (q3 + eps * t), (p - 1) * p ** (m - 2)),
            ((p - 1) * q3 - eps * t, (p - 1) ** 2 * p ** (m - 2)),
        ]
    elif regime.index == 2:
        eps = _sign_quarter((p - 1) * m)
        u = eps * p ** ((m - 4) // 2)
        rows += [
            ((p - 1) * q3, p ** (m - 2) - 1),
            ((p - 1) * (q3 - u), (p - 1) * (p ** (m - 1) + eps * p ** (m // 2)) // 2),
            (n, p - 1),
            (n - q3, (p - 1) * (p ** (m - 2) - 1)),
            ((p - 1) * q3 - u, (p - 1) * n),
            ((p - 1) * q3 - (p + 1) * u, (p - 1) * (p - 2) * n // 2),
        ]
    elif regime.index == 3:
        step = p ** ((m - 3) // 2)
        rows += [
            (p ** (m - 2), p - 1),
            ((p - 1) * q3, 2 * p ** (m - 1) - p ** (m - 2) - p),
            ((p - 1) * q3 - step, (p - 1) ** 2 * p ** (m - 2) // 2),
            ((p - 1) * q3 + step, (p - 1) ** 2 * p ** (m - 2) // 2),
        ]
    else:
        eps1 = _sign_quarter((p - 1) * (m + 1))
        eps2 = _sign_quarter((p - 1) * (m - 1))
        theta = legendre(-mp, p) * eps1
        step = p ** ((m - 3) // 2)
        big = theta * p ** ((m - 1) // 2)
        if legendre(mp, p) == 1:
            f4 = (p - 1) * (p - 2) * n // 2
            f5 = (p - 1) * p * n // 2
        else:
            f4 = (p - 1) * p * n // 2
            f5 = (p - 1) * (p - 2) * n // 2
        rows += [
            ((p - 1) * q3, n + big - 1),
            (n, p - 1),
            (n - q3, (p - 1) * (2 * n + big - 1)),
            (n - q3 - eps2 * step, f4),
            (n - q3 + eps2 * step, f5),
        ]

    counts: dict[int, int] = {}
    for w, freq in rows:
        if freq < 0:
            raise FrequencyMismatchError(f"negative table frequency {freq} at weight {w}")
        if freq:
            counts[w] = counts.get(w, 0) + freq
    if sum(counts.values()) != p**m:
        raise FrequencyMismatchError("table frequencies do not sum to p^m")
    return WeightDistribution(n=n, k=m, counts=counts)


# ----------------------------------------------------------------------
# Optimality classification
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class OptimalityReport:
    n: int
    k: int
    d: int
    griesmer_sum: int
    griesmer_optimal: bool
    mds: bool


def classify_optimality(p: int, m: int) -> OptimalityReport:
    """Predicted [n, k, d] with Griesmer and MDS classification; the
    minimum distance is the smallest positive-frequency table weight."""
    wd = predict_weight_distribution(p, m)
    d = wd.minimum_distance()
    gsum = griesmer_lower_bound(wd.k, d, p)
    return OptimalityReport(n=wd.n, k=wd.k, d=d, griesmer_sum=gsum,
                            griesmer_optimal=(gsum == wd.n), mds=(d == wd.n - wd.k + 1))


@dataclass
class CwePrediction:
    """Everything the closed forms say about the code for one (p, m)."""

    p: int
    m: int
    regime: Regime
    n: int
    k: int
    cwe: CompleteWeightEnumerator
    wd: WeightDistribution
    summary: OptimalityReport
    pair_reading: str


def prediction(p: int, m: int) -> CwePrediction:
    """Bundle the closed-form CWE, weight table and classification,
    enforcing their mutual consistency."""
    regime = parameter_regime(p, m)
    cwe, reading = predict_cwe_with_reading(p, m)
    wd = predict_weight_distribution(p, m)
    derived = cwe.weight_distribution()
    if derived.counts != wd.counts:
        raise FrequencyMismatchError(
            "weight table disagrees with the expanded enumerator")
    summary = classify_optimality(p, m)
    return CwePrediction(p=p, m=m, regime=regime, n=cwe.n, k=m, cwe=cwe,
                         wd=wd, summary=summary, pair_reading=reading)
