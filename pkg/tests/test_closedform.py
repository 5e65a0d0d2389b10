import pytest

from tracecodes import (
    CyclotomicInteger,
    TraceProfile,
    build_defining_set,
    classify_optimality,
    correction_sums,
    correction_sums_at_zero,
    count_symbol,
    discriminant_pair_counts,
    exhaustive_cwe,
    gauss_int,
    gauss_pair_int,
    legendre,
    parameter_regime,
    predict_cwe,
    predict_weight_distribution,
    predicted_length,
    prediction,
    symbol_count_closed,
    trace_pair_count_closed,
    trace_pair_table,
)
from tracecodes.errors import DegreeTooSmallError, RhoZeroError
from tracecodes.verification import correction_sums_direct

from expected_enumerators import CWE_3_6, CWE_5_3, CWE_5_4


def test_parameter_regimes():
    assert parameter_regime(3, 6).index == 1
    assert parameter_regime(5, 4).index == 2
    assert parameter_regime(3, 4).index == 2
    assert parameter_regime(3, 3).index == 3
    assert parameter_regime(5, 5).index == 3
    assert parameter_regime(5, 3).index == 4
    assert parameter_regime(3, 5).index == 4
    with pytest.raises(DegreeTooSmallError):
        parameter_regime(3, 2)


def test_predicted_lengths(fields):
    assert predicted_length(3, 6) == 81
    assert predicted_length(5, 4) == 20
    assert predicted_length(5, 3) == 6
    for p, m in [(3, 3), (3, 4), (3, 5), (5, 5), (7, 3), (7, 4), (11, 3)]:
        ctx = fields(p, m)
        assert predicted_length(p, m) == len(build_defining_set(ctx, 1)), (p, m)


def test_trace_pair_closed_examples():
    assert trace_pair_count_closed(3, 6, 0, 0) == 99
    assert trace_pair_count_closed(5, 4, 0, 1) == 20
    # even m with p not dividing m: nonzero discriminant shifts by the
    # character of the discriminant times G/p = -5
    for a_val in range(1, 5):
        for b_val in range(5):
            delta = (b_val * b_val - 4 * a_val) % 5
            if delta:
                want = 25 + legendre(delta, 5) * (-5)
                assert trace_pair_count_closed(5, 4, a_val, b_val) == want


def test_trace_pair_closed_vs_brute(fields):
    for p, m in [(3, 3), (3, 4), (3, 5), (3, 6), (5, 3), (5, 4), (7, 3)]:
        ctx = fields(p, m)
        table = trace_pair_table(ctx)
        for (a_val, b_val), got in table.items():
            assert trace_pair_count_closed(p, m, a_val, b_val) == got, (p, m, a_val, b_val)


def test_gauss_integers_used_by_formulas():
    assert gauss_int(3, 6) == 27
    assert gauss_int(5, 4) == -25
    assert gauss_pair_int(5, 3) == 25
    assert gauss_pair_int(3, 3) == 9
    assert gauss_pair_int(7, 3) == 49
    # degree 1 gives the squared prime-field sum, eta(-1) * p
    assert gauss_pair_int(7, 1) == -7
    assert gauss_pair_int(5, 1) == 5
    with pytest.raises(ValueError):
        gauss_int(5, 3)  # odd degree alone is irrational


def test_correction_sums_vs_direct(fields):
    # every branch of the decomposition, on one field per regime
    for p, m in [(3, 4), (3, 3), (5, 3)]:
        ctx = fields(p, m)
        for a in range(1, ctx.r):
            prof = TraceProfile.from_element(ctx, a)
            for rho in range(1, p):
                assert correction_sums(p, m, prof, rho) == \
                    correction_sums_direct(ctx, a, rho), (p, m, a, rho)
            assert correction_sums_at_zero(p, m, prof) == \
                correction_sums_direct(ctx, a, 0), (p, m, a)


def test_correction_sums_regime1(fields):
    ctx = fields(3, 6)
    for a in range(1, ctx.r):
        prof = TraceProfile.from_element(ctx, a)
        for rho in range(3):
            got = correction_sums(3, 6, prof, rho) if rho else \
                correction_sums_at_zero(3, 6, prof)
            assert got == correction_sums_direct(ctx, a, rho), (a, rho)


def test_correction_sums_spot_values(fields):
    p, m = 5, 4
    ctx = fields(p, m)
    gm = gauss_int(p, m)
    r = p**m
    a = 2  # prime-subfield element
    prof = TraceProfile.from_element(ctx, a)
    s_lin, s_sq, s_mix = correction_sums(p, m, prof, 2)
    assert s_lin == (p - 1) * r
    s_lin, _, _ = correction_sums(p, m, prof, 3)
    assert s_lin == -r
    # a outside the prime subfield with Tr(a^2) = 0 contributes
    # -(p-1)*G_m through the square-constraint term
    for a in range(p, r):
        prof = TraceProfile.from_element(ctx, a)
        if prof.tr_sq == 0:
            _, s_sq, _ = correction_sums(p, m, prof, 1)
            assert s_sq == -(p - 1) * gm
            break


def test_correction_sums_against_root_of_unity_sums(fields):
    # the integer collapse used by the direct oracle agrees with honest
    # quadruple sums in the cyclotomic ring
    ctx = fields(3, 3)
    p = 3
    for a in (1, 4, 10):
        for rho in (0, 1, 2):
            s_lin = CyclotomicInteger.zero(p)
            s_sq = CyclotomicInteger.zero(p)
            s_mix = CyclotomicInteger.zero(p)
            zeta = CyclotomicInteger.zeta_power
            for x in range(ctx.r):
                tx = ctx.trace(x)
                tx2 = ctx.trace(ctx.mul(x, x))
                tax = ctx.trace(ctx.mul(a, x))
                for d in range(1, p):
                    sym = zeta(p, d * (tax - rho))
                    for y in range(1, p):
                        s_lin = s_lin + zeta(p, y * (tx - 1)) * sym
                        for z in range(1, p):
                            s_mix = s_mix + zeta(p, y * (tx - 1) + z * tx2) * sym
                    for z in range(1, p):
                        s_sq = s_sq + zeta(p, z * tx2) * sym
            want = correction_sums_direct(ctx, a, rho)
            assert (s_lin.as_int(), s_sq.as_int(), s_mix.as_int()) == want, (a, rho)


def test_symbol_count_closed_vs_brute(fields):
    for p, m in [(3, 4), (5, 3)]:
        ctx = fields(p, m)
        dset = build_defining_set(ctx, 1)
        for a in range(1, ctx.r):
            prof = TraceProfile.from_element(ctx, a)
            for rho in range(p):
                assert symbol_count_closed(p, m, prof, rho) == \
                    count_symbol(ctx, dset, a, rho), (p, m, a, rho)


def test_rho_zero_guard(fields):
    prof = TraceProfile.from_element(fields(5, 3), 7)
    with pytest.raises(RhoZeroError):
        correction_sums(5, 3, prof, 0)


def test_profile_requires_nonzero():
    import tracecodes
    with pytest.raises(ValueError):
        TraceProfile.from_element(tracecodes.make_field(5, 3), 0)


def test_discriminant_pair_counts_closed():
    pc = discriminant_pair_counts(5, 3)
    assert (pc.disc_square, pc.disc_nonsquare) == (6, 10)
    assert (pc.a_square, pc.a_nonsquare) == (10, 6)  # eta(3) = -1 mod 5
    assert pc.disc_zero == 4
    pc = discriminant_pair_counts(7, 1)
    assert (pc.disc_square, pc.disc_nonsquare) == (15, 21)


def test_discriminant_pair_counts_vs_exhaustive():
    for p in (3, 5, 7, 11, 13):
        residue = 1
        nonresidue = next(d for d in range(2, p) if legendre(d, p) == -1)
        for mp in (residue, nonresidue):
            t_plus = t_minus = t_zero = a_sq = a_non = 0
            for a_val in range(1, p):
                for b_val in range(p):
                    delta = (b_val * b_val - mp * a_val) % p
                    if delta == 0:
                        t_zero += 1
                        continue
                    if legendre(delta, p) == 1:
                        t_plus += 1
                    else:
                        t_minus += 1
                    if legendre(a_val, p) == 1:
                        a_sq += 1
                    else:
                        a_non += 1
            pc = discriminant_pair_counts(p, mp)
            assert (pc.disc_square, pc.disc_nonsquare, pc.disc_zero) == \
                (t_plus, t_minus, t_zero), (p, mp)
            assert (pc.a_square, pc.a_nonsquare) == (a_sq, a_non), (p, mp)


def test_predict_cwe_reference_codes():
    assert predict_cwe(3, 6).terms == CWE_3_6
    assert predict_cwe(5, 4).terms == CWE_5_4
    assert predict_cwe(5, 3).terms == CWE_5_3


def test_predict_cwe_matches_enumeration(fields):
    for p, m in [(3, 3), (3, 4), (3, 5), (7, 3), (11, 3)]:
        ctx = fields(p, m)
        brute = exhaustive_cwe(ctx, build_defining_set(ctx, 1))
        assert predict_cwe(p, m).terms == brute.terms, (p, m)


def test_predicted_weight_tables():
    assert predict_weight_distribution(3, 6).counts == \
        {0: 1, 48: 162, 54: 240, 57: 324, 81: 2}
    assert predict_weight_distribution(5, 4).counts == \
        {0: 1, 14: 120, 15: 96, 16: 300, 19: 80, 20: 28}
    assert predict_weight_distribution(5, 3).counts == \
        {0: 1, 4: 60, 5: 24, 6: 40}


def test_weight_table_split_by_character_of_mp():
    # eta(3) = -1 mod 5: the (p-1)p*n/2 family lands on the lower weight
    wd = predict_weight_distribution(5, 3)
    assert wd.counts[4] == 60   # (p-1)*p*n/2
    assert wd.counts[6] == 40   # (p-1)*(p-2)*n/2 + (p-1)
    # eta(3) = +1 mod 11: the two family sizes swap
    wd = predict_weight_distribution(11, 3)
    assert wd.n == 12
    assert wd.counts[10] == 660  # (p-1)*p*n/2
    assert wd.counts[11] == 120
    assert wd.counts[12] == 550  # (p-1)*(p-2)*n/2 + (p-1)


def test_weight_tables_vs_enumeration(fields):
    for p, m in [(3, 4), (3, 5), (5, 5), (7, 3), (7, 4), (11, 3)]:
        ctx = fields(p, m)
        brute = exhaustive_cwe(ctx, build_defining_set(ctx, 1)).weight_distribution()
        assert predict_weight_distribution(p, m).counts == brute.counts, (p, m)


def test_closed_form_smoke_grid():
    # pure closed forms stay consistent (non-negative, total p^m, table
    # equals the expanded enumerator) well beyond the enumeration range
    primes = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    for p in primes:
        for m in range(3, 10):
            pred = prediction(p, m)
            assert pred.cwe.total() == p**m
            assert sum(pred.wd.counts.values()) == p**m
            assert all(f > 0 for f in pred.cwe.terms.values())


def test_prediction_bundle(fields):
    pred = prediction(5, 4)
    assert pred.pair_reading == "unordered"
    assert pred.k == 4
    assert pred.regime.index == 2
    brute = exhaustive_cwe(fields(5, 4), build_defining_set(fields(5, 4), 1))
    assert pred.cwe.terms == brute.terms
    assert brute.dimension() == pred.k


def test_classify_optimality():
    rep = classify_optimality(3, 3)
    assert (rep.n, rep.k, rep.d) == (3, 3, 1) and rep.mds and rep.griesmer_optimal
    rep = classify_optimality(5, 3)
    assert (rep.n, rep.k, rep.d) == (6, 3, 4) and rep.mds and rep.griesmer_optimal
    rep = classify_optimality(7, 3)
    assert (rep.n, rep.k, rep.d) == (6, 3, 4) and rep.mds and rep.griesmer_optimal
    rep = classify_optimality(11, 3)
    assert (rep.n, rep.k, rep.d) == (12, 3, 10) and rep.mds and rep.griesmer_optimal
    for p, m in [(3, 4), (5, 4), (3, 6)]:
        rep = classify_optimality(p, m)
        assert not rep.griesmer_optimal
        assert rep.griesmer_sum < rep.n
