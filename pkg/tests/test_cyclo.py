import cmath

import pytest

from luspec import cyclo, ff, gr9
from luspec.cyclo import CycInt, cyc_spec, embed, exp_sum_field, exp_sum_gr, zeta


def test_arith_examples():
    c5 = cyc_spec(5)
    s = zeta(c5, 1) + zeta(c5, 2) + zeta(c5, 3) + zeta(c5, 4)
    assert s == -1
    assert cyclo.cyc_arith(zeta(c5, 1), None, "conj") == zeta(c5, 4)
    c9 = cyc_spec(9)
    assert zeta(c9, 1) * zeta(c9, 8) == 1


def test_embed_examples():
    c3 = cyc_spec(3)
    assert abs(embed(CycInt.integer(c3, 1) + zeta(c3, 1) + zeta(c3, 2))) < 1e-12
    c5 = cyc_spec(5)
    golden = embed(zeta(c5, 1) + zeta(c5, 4)).real
    assert golden == pytest.approx(0.618034, abs=1e-6)


def test_conductor_restricted():
    with pytest.raises(ValueError):
        cyc_spec(4)
    with pytest.raises(ValueError):
        cyc_spec(15)


def test_mixed_conductors_rejected():
    with pytest.raises(ValueError):
        zeta(cyc_spec(5)) + zeta(cyc_spec(7))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9, 13])
def test_linear_sums_closed_form(q):
    # eps_{bt+c} = 0 for b != 0, else q * zeta^tr(c)
    spec = ff.field_for(q)
    cs = cyc_spec(spec.p)
    for b in range(q):
        for c in range(q):
            got = exp_sum_field([c, b], spec)
            if b:
                assert got == CycInt.integer(cs, 0)
            else:
                assert got == q * zeta(cs, spec.trace_i(c))


def test_cubic_examples_f5():
    F5 = ff.ff_make(5, 1)
    c5 = cyc_spec(5)
    assert exp_sum_field([1, 2], F5) == 0          # 2t + 1
    assert exp_sum_field([0, 0, 0, 1], F5) == 0    # t^3 permutes F_5
    got = exp_sum_field([0, 1, 0, 1], F5)          # t^3 + t
    assert got == CycInt.integer(c5, 3) + zeta(c5, 2) + zeta(c5, 3)
    assert embed(got).real == pytest.approx((5 - 5 ** 0.5) / 2)
    got2 = exp_sum_field([0, 2, 0, 1], F5)         # t^3 + 2t = -sqrt(5)
    assert got2 == CycInt.integer(c5, 1) + 2 * zeta(c5, 2) + 2 * zeta(c5, 3)
    assert embed(got2).real == pytest.approx(-2.23607, abs=1e-5)
    assert exp_sum_field([0, 3, 0, 1], F5) == -got2   # t^3 + 3t = +sqrt(5)


def test_f13_weil_margin():
    F13 = ff.ff_make(13, 1)
    eps = exp_sum_field([0, 0, 0, 4], F13)
    assert embed(eps).real == pytest.approx(-6.9533, abs=1e-4)
    wc = cyclo.weil_check(eps, 13, 3)
    assert wc.ok
    assert wc.margin == pytest.approx(2 * 13 ** 0.5 - 6.9533, abs=1e-4)


def test_weil_check_errors_and_trivial():
    c5 = cyc_spec(5)
    wc = cyclo.weil_check(CycInt.integer(c5, 0), 5, 3)
    assert wc.ok and wc.margin == pytest.approx(2 * 5 ** 0.5)
    with pytest.raises(ValueError):
        cyclo.weil_check(CycInt.integer(c5, 5), 5, 1)


@pytest.mark.parametrize("q", [5, 7, 11, 13, 25, 49])
def test_cubic_sums_real_and_weil_bounded(q):
    # all f = a*t^3 + c*t with a != 0: conj-invariant and within 2*sqrt(q)
    spec = ff.field_for(q)
    bound = 2 * q ** 0.5 + 1e-9
    for a in range(1, q):
        for c in range(q):
            eps = exp_sum_field([0, c, 0, a], spec)
            assert eps.conj() == eps
            assert abs(embed(eps)) <= bound


@pytest.mark.parametrize("e", [1, 2, 3])
def test_gr_sums_weil_bounded(e):
    R = gr9.gr9_make(e)
    q = R.q
    bound = 2 * q ** 0.5 + 1e-9
    three = R.element(3)
    for c in R.teich:
        eps = exp_sum_gr([R.zero, three * c, R.zero, R.one], R)
        assert eps.conj() == eps
        assert abs(embed(eps)) <= bound


def test_gr_sums_q3_values():
    R = gr9.gr9_make(1)
    c9 = cyc_spec(9)
    one = CycInt.integer(c9, 1)
    table = {0: one + zeta(c9, 1) + zeta(c9, 8),
             3: one + zeta(c9, 4) + zeta(c9, 5),
             6: one + zeta(c9, 2) + zeta(c9, 7)}
    for threec, want in table.items():
        eps = exp_sum_gr([R.zero, R.element(threec), R.zero, R.one], R)
        assert eps == want


@pytest.mark.parametrize("q,f", [
    (5, [0, 1, 0, 1]), (5, [2, 3, 1, 4]), (9, [0, 4, 0, 1]),
    (13, [0, 0, 0, 4]), (13, [1, 2, 3, 4, 5]),
])
def test_exact_sum_matches_complex_summation(q, f):
    spec = ff.field_for(q)
    exact = embed(exp_sum_field(f, spec))
    direct = 0j
    for a in range(q):
        t = spec.trace_i(spec.eval_poly_i(f, a))
        direct += cmath.exp(2j * cmath.pi * t / spec.p)
    assert abs(exact - direct) < 1e-10


def test_histogram_reduction_n9():
    # zeta9^6 = -1 - zeta9^3 and friends
    c9 = cyc_spec(9)
    for k in range(3):
        lhs = zeta(c9, 6 + k)
        rhs = -CycInt.integer(c9, 1) * zeta(c9, k) - zeta(c9, 3 + k)
        assert lhs == rhs


def test_conductor9_embedding_cubes_to_zeta3():
    xi = embed(zeta(cyc_spec(9), 1))
    z3 = embed(zeta(cyc_spec(3), 1))
    assert abs(xi ** 3 - z3) < 1e-14
