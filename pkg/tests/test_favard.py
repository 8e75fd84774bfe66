import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from circleorth import measure as M
from circleorth.errors import AdmissibilityError
from circleorth.favard import (CLOSED, SevenSeq, TripleSeq, alpha_roundtrip, bernstein_szego_otp_form,
                               bs_measure_check, kappa_from_triple, kappa_ratio, read_coefficients,
                               strong_favard, validate, weak_favard)
from circleorth.opuc import build_opuc
from circleorth.otp import build_otp


def test_weak_with_supplied_phases():
    m = M.bernstein_szego([0.4, 0.3, 0.2, 0.1])
    t = TripleSeq.from_otp(build_otp(m, 2))
    true = build_opuc(m, 4).alpha
    res = weak_favard(t, phase_policy=list(true[::2]))
    assert np.max(np.abs(res.alphas - true)) < 1e-9


def test_weak_positive_real_recovers_real_even_alphas(geometric):
    t = TripleSeq.from_otp(build_otp(geometric, 4))
    res = weak_favard(t)
    assert np.max(np.abs(res.alphas - build_opuc(geometric, 8).alpha)) < 1e-9


def test_odd_alphas_do_not_depend_on_phases(asym):
    t = TripleSeq.from_otp(build_otp(asym, 4))
    a = weak_favard(t).alphas
    b = weak_favard(t, phase_policy=("fixed-angle", 1.3)).alphas
    assert np.array_equal(a[1::2], b[1::2])
    assert np.allclose(np.abs(a[::2]), np.abs(b[::2]))
    assert np.allclose(np.angle(b[::2]), 1.3)


def test_even_modulus_matches_kappa_ratio(asym):
    t = TripleSeq.from_otp(build_otp(asym, 4))
    res = weak_favard(t)
    k = kappa_from_triple(t)
    for n in range(1, 4):
        assert np.isclose(abs(res.alphas[2 * n]), np.sqrt(1 - k[2 * n] ** 2 / k[2 * n + 1] ** 2), atol=1e-14)
    # level 0 uses kappa_0 = 1
    assert np.isclose(abs(res.alphas[0]) ** 2, 1 - kappa_ratio(t, 0))


def test_lebesgue_rejected_strict_recovered_closed():
    t = TripleSeq.from_otp(build_otp(M.uniform(), 4))
    rep = validate(t)
    assert {v["n"] for v in rep.violations} == {0, 1, 2, 3}
    assert all(v["clause"] == "kappa-ratio-below-one" for v in rep.violations)
    with pytest.raises(AdmissibilityError) as e:
        weak_favard(t)
    assert e.value.index == 0 and e.value.clause == "kappa-ratio-below-one"
    assert np.all(weak_favard(t, mode=CLOSED).alphas == 0)
    assert np.all(strong_favard(SevenSeq.from_measure(M.uniform(), 4), mode=CLOSED).alphas == 0)


def test_strong_round_trip_geometric(geometric):
    s = SevenSeq.from_measure(geometric, 6)
    res = strong_favard(s)
    assert np.max(np.abs(res.alphas - build_opuc(geometric, 12).alpha)) < 1e-9
    assert res.report[0].passed and res.report[0].max_residual < 1e-8
    assert validate(s).violations == []


def test_strong_complex_example():
    m = M.bernstein_szego([0.4 + 0.1j, 0.3, 0.2 - 0.05j])
    # alpha_3 = 0 violates the odd-alpha condition at n = 2 in strict mode
    with pytest.raises(AdmissibilityError):
        strong_favard(SevenSeq.from_measure(m, 3))
    res = strong_favard(SevenSeq.from_measure(m, 3), mode=CLOSED)
    assert np.max(np.abs(res.alphas - build_opuc(m, 6).alpha)) < 1e-9
    res = strong_favard(SevenSeq.from_measure(m, 1))
    assert np.max(np.abs(res.alphas - [0.4 + 0.1j, 0.3])) < 1e-9


def test_odd_alpha_condition_reported_with_index(geometric):
    s = SevenSeq.from_measure(geometric, 4)
    t = s.triple
    a = t.a.copy()
    b = t.b.copy()
    beta = t.beta.copy()
    beta[2] = 0.0
    a[2] = b[2]  # a^2/b^2 + beta^2 = 1, so alpha_3 = 0
    bad = SevenSeq(TripleSeq(a, b, beta), s.iota, s.jmath, s.varsigma, s.zeta)
    names = {(v["n"], v["clause"]) for v in validate(bad).violations}
    assert (2, "odd-alpha-nonzero") in names
    with pytest.raises(AdmissibilityError) as e:
        strong_favard(bad)
    assert e.value.index is not None


def test_broken_upper_bound_flagged(geometric):
    s = SevenSeq.from_measure(geometric, 3)
    bad = SevenSeq(s.triple, s.iota * 5, s.jmath, s.varsigma, s.zeta)
    v = [x for x in validate(bad).violations if x["clause"] == "even-alpha-in-disc"]
    assert v and v[0]["value"] >= 1


def test_enabled_solves(two_atom_measure=None):
    m = M.acceptance_suite()[6]
    rep = validate(SevenSeq.from_measure(m, 3))
    assert rep.enabled_solves[1] == "ABCDEF"
    rep = validate(SevenSeq.from_measure(M.geometric(0.5), 3))
    assert rep.enabled_solves[1] == "ABCDE"
    assert set(rep.kappa_ratio) == {0, 1, 2}


@pytest.mark.parametrize("idx", [1, 2, 3, 4, 5, 6])
def test_alpha_round_trip_suite(suite, idx):
    m = suite[idx]
    try:
        r = alpha_roundtrip(m, 5)
    except AdmissibilityError:
        r = alpha_roundtrip(m, 5, mode=CLOSED)
    assert r.max_residual < 1e-8


def test_bernstein_szego_density_paths(bs05):
    o, s = build_otp(bs05, 2), build_opuc(bs05, 4)
    for n in (1, 2):
        d = bernstein_szego_otp_form(o, s, n)
        assert len(d.theta) == 512
        assert np.max(np.abs(d.otp - d.opuc)) < 1e-10
    d = bernstein_szego_otp_form(build_otp(M.uniform(), 2), build_opuc(M.uniform(), 4), 2)
    assert np.allclose(d.otp, 1) and np.allclose(d.opuc, 1)


def test_printed_even_prefactor_is_off(bs05):
    rs = {r.id: r for r in bs_measure_check(build_otp(bs05, 3), build_opuc(bs05, 6))}
    assert rs["BS-MEASURE-ODD"].passed and rs["BS-MEASURE-EVEN-CORR"].passed
    assert not rs["BS-MEASURE-EVEN"].passed


def test_density_reproduces_measure_beyond_support():
    m = M.bernstein_szego([0.3 + 0.1j, -0.2, 0.15j])
    d = bernstein_szego_otp_form(build_otp(m, 2), build_opuc(m, 4), 3)
    assert np.allclose(d.otp, m.weight(d.theta), atol=1e-12)


def test_read_coefficients(tmp_path, geometric):
    o = build_otp(geometric, 3)
    rows = ["# schema_version: 1", "n,a,b,beta"] + [f"{n},{float(o.a[n])!r},{float(o.b[n])!r},{float(o.beta[n])!r}" for n in range(1, 4)]
    p = tmp_path / "c.csv"
    p.write_text("\n".join(rows))
    t = read_coefficients(p)
    assert isinstance(t, TripleSeq) and t.N == 3 and t.a[0] == 1
    q = tmp_path / "c.json"
    q.write_text('{"a": [1, 0.7], "b": [1, 0.7], "beta": [0, 0], "iota": [0, 0.1], "jmath": [0, 0],'
                 ' "varsigma": [0, 0], "zeta": [0, 0]}')
    assert isinstance(read_coefficients(q), SevenSeq)


# Four coefficients with |alpha| <= 0.5 keep the BS weight smooth enough for
# the 4096-point trapezoid rule to reproduce its own alphas to ~1e-14.
@settings(max_examples=25, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=0.5, allow_nan=False, allow_infinity=False).filter(
    lambda a: abs(a) > 0.05), min_size=4, max_size=4))
def test_strong_favard_inverts_random_measures(alphas):
    m = M.bernstein_szego(alphas, quadrature_points=4096)
    s = SevenSeq.from_measure(m, 2)
    res = strong_favard(s, quadrature_points=4096)
    assert np.max(np.abs(res.alphas[:4] - np.asarray(alphas))) < 1e-8
    assert res.report[0].max_residual < 1e-7
