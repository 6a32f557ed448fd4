import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohsys.classify import classify
from cohsys.core import CSType, CurveClass, DomainError
from cohsys.dims import c12, c21
from cohsys.witness import (
    certificate_hyp1,
    certificate_hyp2,
    certificate_hyp3,
    certificate_hyp4,
    dual_span_type,
    example_d_gt_2n,
    hyperelliptic_a,
)


def test_dual_span_examples():
    assert dual_span_type(CSType(1, 8, 5)) == CSType(4, 8, 5)
    assert dual_span_type(CSType(1, 2, 2)) == CSType(1, 2, 2)
    for a in range(1, 9):
        assert dual_span_type(CSType(1, 2 * a, a + 1)) == CSType(a, 2 * a, a + 1)
    with pytest.raises(DomainError):
        dual_span_type(CSType(2, 4, 2))


@given(
    st.integers(min_value=1, max_value=50),
    st.integers(min_value=-100, max_value=100),
    st.integers(min_value=1, max_value=100),
)
def test_dual_span_involution(n, d, k):
    if k <= n:
        return
    t = CSType(n, d, k)
    assert dual_span_type(dual_span_type(t)) == t


def test_hyperelliptic_a_examples():
    assert hyperelliptic_a(6, 9) == 2
    assert hyperelliptic_a(2, 3) == 2
    assert hyperelliptic_a(4, 8) == 1
    with pytest.raises(DomainError):
        hyperelliptic_a(4, 4)
    with pytest.raises(DomainError):
        hyperelliptic_a(4, 9)


@given(st.integers(min_value=1, max_value=200), st.integers(min_value=1, max_value=400))
def test_hyperelliptic_a_defining_inequalities(n, k):
    if not n < k <= 2 * n:
        return
    a = hyperelliptic_a(n, k)
    assert a >= 1
    assert n * (a + 1) >= k * a  # n(1 + 1/a) >= k
    assert k * (a + 1) > n * (a + 2)  # k > n(1 + 1/(a+1))


def test_hyp1_trivial_certificate():
    cert = certificate_hyp1(3, 4)
    assert cert.passed and cert.hypotheses_ok
    assert cert.target == CSType(4, 8, 5)
    assert cert.subtypes == ()
    bad = certificate_hyp1(1, 4)
    assert not bad.hypotheses_ok and not bad.passed


def test_hyp2_examples():
    cert = certificate_hyp2(2, 6, 2)
    assert cert.passed
    assert cert.wall == Fraction(3)
    assert cert.subtypes == (CSType(5, 9, 7), CSType(1, 3, 1))
    assert cert.target == CSType(6, 12, 8)
    by_label = {c.label: c for c in cert.checks}
    assert by_label["extension count matches closed form 2n-2-r"].lhs == 8
    assert by_label["hom-corrected ceiling is slack: (n-2)/g - r < C21"].lhs == 0

    cert = certificate_hyp2(2, 8, 3)
    assert cert.passed
    assert any(c.lhs == 11 and c.rel == "==" for c in cert.checks)

    cert = certificate_hyp2(3, 7, 2)
    assert not cert.hypotheses_ok
    assert not cert.passed
    assert cert.subtypes == ()


def test_hyp2_wall_is_candidate():
    cert = certificate_hyp2(2, 10, 3)
    wall_check = next(c for c in cert.checks if c.rel == "in")
    assert wall_check.ok
    assert cert.wall == Fraction(10, 3)


def test_hyp3_examples():
    cert = certificate_hyp3(3, 2)
    assert cert.passed
    assert cert.subtypes == (CSType(5, 10, 6), CSType(2, 4, 3))
    labels = [c.label for c in cert.checks]
    assert "destabilizing count at r1'=0 matches closed form" in labels

    cert = certificate_hyp3(3, 3)
    assert cert.passed
    by_label = {c.label: c for c in cert.checks}
    check = by_label["destabilizing count at r1'=1 matches closed form"]
    assert check.lhs == check.rhs == 7

    assert certificate_hyp3(2, 4).passed


def test_hyp4_examples():
    cert = certificate_hyp4(3, 2)
    assert cert.passed
    by_label = {c.label: c for c in cert.checks}
    assert by_label["extension count equals 1"].lhs == 1
    assert by_label["destabilizing count at r1'=0 matches closed form"].rhs == 2
    assert certificate_hyp4(2, 3).passed
    assert certificate_hyp4(4, 2).passed


def test_ex7_examples():
    cert = example_d_gt_2n(4, 3)
    assert cert.passed
    assert cert.target == CSType(10, 21, 13)
    by_label = {c.label: c for c in cert.checks}
    assert by_label["window lower endpoint below k"].lhs == Fraction(51, 4)
    assert by_label["k below window upper endpoint"].rhs == Fraction(40, 3)

    cert = example_d_gt_2n(5, 3)
    assert cert.passed
    assert cert.target == CSType(13, 27, 16)

    cert = example_d_gt_2n(4, 4)
    assert not cert.hypotheses_ok


def test_certificate_closed_forms_match_generic_counts():
    for g in range(2, 8):
        for r in range(2, 6):
            cert3 = certificate_hyp3(g, r)
            cert4 = certificate_hyp4(g, r)
            assert cert3.passed and cert4.passed
            t1, t2 = cert3.subtypes
            assert c21(g, t1, t2) == 2
            t1, t2 = cert4.subtypes
            assert c21(g, t1, t2) == 1
            for r1p in range((r - 1) // 2 + 1):
                sub = CSType(r1p * g + 1, 2 * r1p * g + 2, r1p * (g + 1) + 1)
                t1 = cert3.subtypes[0]
                quot = CSType(t1.n - sub.n, t1.d - sub.d, t1.k - sub.k)
                assert c12(g, sub, quot) == (r - 1 - r1p) * (g - 1) * (r1p + 1) + 2 * r1p + 1


def test_certificate_subtypes_sum_to_target():
    certs = [
        certificate_hyp2(2, 8, 2),
        certificate_hyp3(4, 3),
        certificate_hyp4(5, 4),
    ]
    for cert in certs:
        t1, t2 = cert.subtypes
        assert t1 + t2 == cert.target


def test_certificate_targets_classify_nonempty():
    for g, n, r in [(2, 6, 2), (3, 8, 2), (2, 8, 3)]:
        cert = certificate_hyp2(g, n, r)
        assert cert.passed
        v = classify(CurveClass(g, True), cert.target)
        assert v.us_nonempty
    for g, r in [(2, 2), (3, 3), (4, 2)]:
        for factory in (certificate_hyp3, certificate_hyp4):
            cert = factory(g, r)
            v = classify(CurveClass(g, True), cert.target)
            assert v.us_nonempty
    for n in range(1, 7):
        cert = certificate_hyp1(4, n)
        v = classify(CurveClass(4, True), cert.target)
        assert v.us_nonempty
    cert = example_d_gt_2n(4, 3)
    with pytest.raises(DomainError):
        classify(CurveClass(4, False), cert.target)


def test_certificate_json_shape():
    cert = certificate_hyp2(2, 6, 2)
    doc = cert.to_json_dict()
    assert sorted(doc) == ["checks", "name", "params", "passed", "subtypes", "wall"]
    assert doc["name"] == "hyp2"
    assert doc["params"] == {"g": 2, "n": 6, "r": 2}
    assert doc["subtypes"] == ["5,9,7", "1,3,1"]
    assert doc["wall"] == "3/1"
    assert doc["passed"] is True
    for check in doc["checks"]:
        assert sorted(check) == ["label", "lhs", "ok", "rel", "rhs"]
    json.dumps(doc)  # must be serializable as-is
