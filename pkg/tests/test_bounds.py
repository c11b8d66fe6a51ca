import math
import zlib

import numpy as np
import pytest

from posetcount.bounds import (EXPRESSIONS, certify_bound, corner_bound, evaluate_bound, jn_base,
                               large_matching_base, read_certificate, recheck_certificate,
                               resolve_target, route_base)
from posetcount.errors import DepthExceeded, DomainError
from posetcount.matching import PackingStats

SIXTH = 1 / 6
CUBE_ROOT_6 = 6 ** (1 / 3)


def test_evaluate_examples():
    assert evaluate_bound("TAU_LE", (SIXTH,) * 3) == pytest.approx(CUBE_ROOT_6, abs=1e-9)
    assert evaluate_bound("PI_LE", (SIXTH,) * 3) == pytest.approx(CUBE_ROOT_6, abs=1e-9)
    assert evaluate_bound("LARGE_MATCHING", (1 / 3,)) == pytest.approx(CUBE_ROOT_6, abs=1e-12)
    assert evaluate_bound("GAMMA_ZERO", (1 / 3, 1 / 3)) == pytest.approx(3 ** 0 * 5 ** (1 / 3))
    assert evaluate_bound("CANONICAL_BOUND", (0.25,)) == pytest.approx(3 ** 0.25 * 2 ** 0.5)
    assert evaluate_bound("LEMMA1_BOUND", (SIXTH,)) == pytest.approx(3 ** SIXTH * 2 ** (2 / 3))


def test_boundary_limit_conventions():
    assert evaluate_bound("CANONICAL_BOUND", (0.0,)) == 1.0
    assert evaluate_bound("LEMMA1_BOUND", (0.0,)) == 1.0
    assert evaluate_bound("TAU_JN_ENTROPY", (0.0, 0.0)) == 1.0
    assert math.isfinite(evaluate_bound("TAU_JN_SIMPLE", (1 / 3, 1 / 3)))


def test_domain_errors():
    with pytest.raises(DomainError):
        evaluate_bound("TAU_LE", (0.1, 0.2, 0.0))  # beta > alpha
    with pytest.raises(DomainError):
        evaluate_bound("LARGE_MATCHING", (0.6,))
    with pytest.raises(DomainError):
        evaluate_bound("TAU_JN_ENTROPY", (0.3, 0.3))  # 2a + 3b > 1
    with pytest.raises(DomainError):
        evaluate_bound("TAU_LE", (0.1, 0.1))


@pytest.mark.parametrize("name", sorted(EXPRESSIONS))
def test_corner_bound_dominates_samples(name):
    expr = EXPRESSIONS[name]
    rng = np.random.default_rng(zlib.crc32(name.encode()))
    lo_dom, hi_dom = np.asarray(expr.lower), np.asarray(expr.upper)
    checked = 0
    while checked < 10_000:
        a = lo_dom + (hi_dom - lo_dom) * rng.random(expr.arity)
        b = lo_dom + (hi_dom - lo_dom) * rng.random(expr.arity)
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        width = rng.choice([1e-3, 0.05, 1.0])
        hi = np.minimum(hi, lo + width * (hi_dom - lo_dom))
        pts = lo + (hi - lo) * rng.random((50, expr.arity))
        pts = pts[[expr.contains(p) for p in pts]]
        if not len(pts):
            continue
        bound = corner_bound(expr, lo, hi)
        assert np.all(expr.value(pts) <= bound * (1 + 1e-12))
        checked += len(pts)


@pytest.mark.parametrize("target,threshold", [
    ("TAU_LE", 1.8172), ("PI_LE", 1.8172), ("GAMMA_ZERO", 1.71), ("LEMMA1_BOUND", 1.9064),
    ("CANONICAL_BOUND", 1.8613), ("TAU_JN_ENTROPY", 1.824), ("TAU_JN_SIMPLE", 1.8206),
    ("TAU_JN_ENTROPY+SIMPLE", 1.824), ("LE_ALL", 1.8172),
])
def test_certified_constants(target, threshold):
    cert = certify_bound(target, threshold)
    assert cert.certified and cert.max_corner_bound < threshold


@pytest.mark.parametrize("target,threshold", [
    ("TAU_LE", 1.8171), ("TAU_LE", 1.5), ("CANONICAL_BOUND", 1.86), ("TAU_JN_SIMPLE", 1.82),
])
def test_failed_below_supremum(target, threshold):
    cert = certify_bound(target, threshold)
    assert cert.status == "Failed" and cert.offending is not None


def test_depth_cap_raises_with_certificate():
    with pytest.raises(DepthExceeded) as info:
        certify_bound("TAU_LE", 1.81713, max_depth=8)
    assert info.value.certificate.status == "Failed"


def test_threshold_must_be_positive():
    with pytest.raises(ValueError):
        certify_bound("TAU_LE", 0.0)


def test_unknown_target():
    with pytest.raises(KeyError):
        resolve_target("NOPE")


def test_threshold_monotonicity():
    for name, sup in [("TAU_LE", CUBE_ROOT_6), ("GAMMA_ZERO", 5 ** (1 / 3)),
                      ("CANONICAL_BOUND", 1.8613)]:
        results = []
        for t in np.linspace(sup - 0.05, sup + 0.05, 11):
            try:
                results.append(certify_bound(name, float(t), max_depth=40).certified)
            except DepthExceeded:
                results.append(False)
        assert results == sorted(results)  # once True, stays True


def test_certificate_round_trip_and_recheck(tmp_path):
    cert = certify_bound("TAU_LE", 1.8172)
    path = tmp_path / "tau.cert"
    path.write_text(cert.to_text())
    back = read_certificate(path.read_text())
    assert (back.expr, back.threshold, back.status, back.boxes_processed) == \
        (cert.expr, cert.threshold, cert.status, cert.boxes_processed)
    assert back.leaves == cert.leaves
    assert recheck_certificate(back)
    back.threshold = 1.8171
    assert not recheck_certificate(back)


def test_failed_certificate_round_trip():
    cert = certify_bound("TAU_LE", 1.8171)
    back = read_certificate(cert.to_text())
    assert back.offending == cert.offending and back.reason == cert.reason
    assert not recheck_certificate(back)


def test_instance_bases():
    assert large_matching_base(PackingStats(3, 1)) == pytest.approx(2 * 0.75 ** (1 / 3))
    assert jn_base(PackingStats(6, 0)) == 1.0
    assert jn_base(PackingStats(6, 1)) == pytest.approx(3 ** (1 / 6))
    stats = PackingStats(6, 1, 1, 1)
    assert route_base(stats, "transformed") == pytest.approx(evaluate_bound("TAU_LE", (SIXTH,) * 3))
    assert route_base(stats, "original") == pytest.approx(evaluate_bound("PI_LE", (SIXTH,) * 3))
    with pytest.raises(ValueError):
        route_base(stats, "sideways")
