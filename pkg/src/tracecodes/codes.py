"""Defining sets, codewords and the exhaustive-enumeration oracle.

The code attached to a defining set D is the image of a |-> (Tr(a*x)
for x in D) over all a in F_r.  Enumeration streams codewords and folds
them into a composition-count mapping, never materializing the full
codeword matrix; the dimension falls out of the zero-composition
frequency (the kernel of the linear map a |-> codeword), so no codeword
hashing is needed.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    BudgetExceededError,
    DegreeTooSmallError,
    EmptyConstraintError,
    MixedContextError,
    NonPowerCodewordCountError,
)
from .fields import FieldContext, make_field

DEFAULT_BUDGET = 10**8


# ----------------------------------------------------------------------
# Defining sets
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class DefiningSet:
    """An ordered defining set; elements ascend by index so coordinate
    order is reproducible."""

    ctx: FieldContext = field(repr=False)
    elements: tuple[int, ...] = field(repr=False)
    trace_value: Optional[int]
    trace_square_value: Optional[int]
    exclude_zero: bool
    in_closed_form_scope: bool

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def label(self) -> str:
        parts = []
        if self.trace_value is not None:
            parts.append(f"Tr(x)={self.trace_value}")
        if self.trace_square_value is not None:
            parts.append(f"Tr(x^2)={self.trace_square_value}")
        if self.exclude_zero:
            parts.append("x!=0")
        return ", ".join(parts)


def build_defining_set_general(ctx: FieldContext, trace_value: Optional[int] = None,
                               trace_square_value: Optional[int] = None,
                               exclude_zero: bool = False) -> DefiningSet:
    """All x satisfying the conjunction of the present constraints."""
    if trace_value is None and trace_square_value is None:
        raise EmptyConstraintError("at least one trace constraint is required")
    tr = ctx.trace_table
    if trace_value is not None:
        trace_value %= ctx.p
    if trace_square_value is not None:
        trace_square_value %= ctx.p
    elems = []
    for x in range(ctx.r):
        if exclude_zero and x == 0:
            continue
        if trace_value is not None and tr[x] != trace_value:
            continue
        if trace_square_value is not None and tr[ctx.mul(x, x)] != trace_square_value:
            continue
        elems.append(x)
    return DefiningSet(ctx=ctx, elements=tuple(elems), trace_value=trace_value,
                       trace_square_value=trace_square_value, exclude_zero=exclude_zero,
                       in_closed_form_scope=False)


def build_defining_set(ctx: FieldContext, b: int = 1) -> DefiningSet:
    """The main defining set {x : Tr(x) = b, Tr(x^2) = 0}.

    Requires m > 2.  b = 0 is allowed but is flagged as outside the
    scope of the closed-form predictions, which cover b in F_p^* only.
    """
    if ctx.m <= 2:
        raise DegreeTooSmallError("code construction needs extension degree m > 2")
    b %= ctx.p
    dset = build_defining_set_general(ctx, trace_value=b, trace_square_value=0)
    return DefiningSet(ctx=ctx, elements=dset.elements, trace_value=b,
                       trace_square_value=0, exclude_zero=False,
                       in_closed_form_scope=(b != 0))


def codeword(ctx: FieldContext, dset: DefiningSet, a: int) -> tuple[int, ...]:
    """(Tr(a*x) for x in D), in D's fixed coordinate order."""
    if dset.ctx is not ctx:
        raise MixedContextError("defining set belongs to a different field context")
    tr = ctx.trace_table
    return tuple(tr[ctx.mul(a, x)] for x in dset.elements)


# ----------------------------------------------------------------------
# Complete weight enumerator and weight distribution
# ----------------------------------------------------------------------

@dataclass
class CompleteWeightEnumerator:
    """Composition -> frequency multiset for one code; compositions are
    tuples (k_0, ..., k_{p-1}) summing to the length n."""

    p: int
    n: int
    terms: dict[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.terms.values())

    def zero_composition(self) -> tuple[int, ...]:
        return tuple([self.n] + [0] * (self.p - 1))

    def distinct_codewords(self) -> int:
        zero_freq = self.terms.get(self.zero_composition(), 0)
        if zero_freq <= 0:
            raise NonPowerCodewordCountError("zero codeword missing from enumeration")
        total = self.total()
        if total % zero_freq:
            raise NonPowerCodewordCountError(
                f"total {total} not divisible by zero-codeword fiber {zero_freq}")
        return total // zero_freq

    def dimension(self) -> int:
        distinct = self.distinct_codewords()
        k = 0
        v = distinct
        while v % self.p == 0:
            v //= self.p
            k += 1
        if v != 1:
            raise NonPowerCodewordCountError(f"{distinct} distinct codewords is not a power of {self.p}")
        return k

    def weight_distribution(self) -> "WeightDistribution":
        counts: dict[int, int] = {}
        for comp, freq in self.terms.items():
            w = self.n - comp[0]
            counts[w] = counts.get(w, 0) + freq
        return WeightDistribution(n=self.n, k=self.dimension(), counts=counts)


@dataclass
class WeightDistribution:
    n: int
    k: int
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def minimum_distance(self) -> int:
        return min(w for w, c in self.counts.items() if w > 0 and c > 0)


# ----------------------------------------------------------------------
# Exhaustive enumeration
# ----------------------------------------------------------------------

def _accumulate_range(ctx: FieldContext, dset: DefiningSet, lo: int, hi: int) -> dict:
    """Fold codewords for exponents lo <= log(a) < hi into a term map."""
    p = ctx.p
    rm1 = ctx.r - 1
    tr = ctx.trace_table
    tr_exp = [tr[e] for e in ctx.exp]
    zero_in = 1 if 0 in dset.elements else 0
    d_logs = [ctx.log[x] for x in dset.elements if x != 0]
    terms: dict[tuple[int, ...], int] = {}
    for la in range(lo, hi):
        counts = [0] * p
        counts[0] = zero_in
        for dl in d_logs:
            t = la + dl
            if t >= rm1:
                t -= rm1
            counts[tr_exp[t]] += 1
        key = tuple(counts)
        terms[key] = terms.get(key, 0) + 1
    return terms


def _cwe_chunk(args) -> dict:
    p, m, modulus, ds_args, lo, hi = args
    ctx = make_field(p, m, modulus=modulus)
    tv, tsv, excl = ds_args
    dset = build_defining_set_general(ctx, trace_value=tv, trace_square_value=tsv,
                                      exclude_zero=excl)
    return _accumulate_range(ctx, dset, lo, hi)


def exhaustive_cwe(ctx: FieldContext, dset: DefiningSet, budget: int = DEFAULT_BUDGET,
                   workers: int = 1) -> CompleteWeightEnumerator:
    """Exact complete weight enumerator over all p^m codeword indices.

    The index space partitions across workers; per-worker term maps
    merge by frequency addition, so the result is identical for every
    worker count.
    """
    if dset.ctx is not ctx:
        raise MixedContextError("defining set belongs to a different field context")
    n = len(dset.elements)
    cost = ctx.r * n
    if cost > budget:
        raise BudgetExceededError(
            f"{cost} symbol evaluations exceed the budget of {budget}")
    rm1 = ctx.r - 1
    if workers <= 1 or rm1 < 2 * workers:
        terms = _accumulate_range(ctx, dset, 0, rm1)
    else:
        bounds = [rm1 * i // workers for i in range(workers + 1)]
        ds_args = (dset.trace_value, dset.trace_square_value, dset.exclude_zero)
        jobs = [(ctx.p, ctx.m, ctx.modulus, ds_args, bounds[i], bounds[i + 1])
                for i in range(workers)]
        terms = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_cwe_chunk, jobs):
                for key, freq in chunk.items():
                    terms[key] = terms.get(key, 0) + freq
    zero_comp = tuple([n] + [0] * (ctx.p - 1))
    terms[zero_comp] = terms.get(zero_comp, 0) + 1  # a = 0
    return CompleteWeightEnumerator(p=ctx.p, n=n, terms=terms)


# ----------------------------------------------------------------------
# Counts
# ----------------------------------------------------------------------

def count_symbol(ctx: FieldContext, dset: DefiningSet, a: int, value: int) -> int:
    """Number of coordinates of the codeword of a that equal the given
    prime-field value."""
    if dset.ctx is not ctx:
        raise MixedContextError("defining set belongs to a different field context")
    value %= ctx.p
    tr = ctx.trace_table
    return sum(1 for x in dset.elements if tr[ctx.mul(a, x)] == value)


def trace_pair_table(ctx: FieldContext) -> dict[tuple[int, int], int]:
    """Counts of x with (Tr(x^2), Tr(x)) = (A, B), for every pair."""
    tr = ctx.trace_table
    table: dict[tuple[int, int], int] = {}
    for a_val in range(ctx.p):
        for b_val in range(ctx.p):
            table[(a_val, b_val)] = 0
    for x in range(ctx.r):
        key = (tr[ctx.mul(x, x)], tr[x])
        table[key] += 1
    return table


def count_trace_pair(ctx: FieldContext, sq_value: int, trace_value: int) -> int:
    """Exhaustive count of x with Tr(x^2) = sq_value and Tr(x) = trace_value."""
    sq_value %= ctx.p
    trace_value %= ctx.p
    tr = ctx.trace_table
    return sum(1 for x in range(ctx.r)
               if tr[ctx.mul(x, x)] == sq_value and tr[x] == trace_value)


# ----------------------------------------------------------------------
# Summary and classification
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CodeSummary:
    n: int
    k: int
    d: int
    griesmer_sum: int
    griesmer_optimal: bool
    mds: bool


def griesmer_lower_bound(k: int, d: int, p: int) -> int:
    """sum of ceil(d / p^i) for i < k; a length lower bound for [n,k,d]."""
    total = 0
    q = 1
    for _ in range(k):
        total += -(-d // q)
        q *= p
    return total


def summarize(cwe: CompleteWeightEnumerator, p: int) -> CodeSummary:
    wd = cwe.weight_distribution()
    n, k = wd.n, wd.k
    d = wd.minimum_distance()
    gsum = griesmer_lower_bound(k, d, p)
    return CodeSummary(n=n, k=k, d=d, griesmer_sum=gsum,
                       griesmer_optimal=(gsum == n), mds=(d == n - k + 1))


def code_summary(ctx: FieldContext, dset: DefiningSet,
                 cwe: Optional[CompleteWeightEnumerator] = None,
                 budget: int = DEFAULT_BUDGET, workers: int = 1) -> CodeSummary:
    """[n, k, d] plus Griesmer/MDS classification from exhaustive data."""
    if cwe is None:
        cwe = exhaustive_cwe(ctx, dset, budget=budget, workers=workers)
    return summarize(cwe, ctx.p)


def scaled_defining_set_equivalent(ctx: FieldContext, b: int) -> bool:
    """Whether the code built on {x : Tr(x) = b, Tr(x^2) = 0} has exactly
    the same codewords as the one built on the b = 1 set, after the
    coordinate reordering induced by x |-> b*x."""
    b %= ctx.p
    if b == 0:
        raise ValueError("b must be a nonzero prime-field value")
    if ctx.m <= 2:
        raise DegreeTooSmallError("code construction needs extension degree m > 2")
    base = build_defining_set(ctx, 1)
    scaled_coords = tuple(ctx.mul(b, x) for x in base.elements)
    tr = ctx.trace_table
    words_base = set()
    words_scaled = set()
    for a in range(ctx.r):
        words_base.add(tuple(tr[ctx.mul(a, x)] for x in base.elements))
        words_scaled.add(tuple(tr[ctx.mul(a, y)] for y in scaled_coords))
    return words_base == words_scaled
