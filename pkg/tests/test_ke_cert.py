import itertools
import math
import random
from fractions import Fraction

import pytest

from selinks import (
    CaseClass,
    UsageError,
    WeightSystem,
    bp_data,
    bp_sufficient_ke,
    branched_cover,
    certify_cover,
    classify_case,
    euclidean_k_threshold,
    hyperbolic_k_window,
    is_fano,
    necessary_klt,
    spherical_never_klt,
)


def test_is_fano():
    base = WeightSystem((1, 1, 1), 3)
    assert all(is_fano(k, base) for k in range(1, 50))  # Euclidean: every k
    base = WeightSystem((1, 1, 1), 4)
    assert is_fano(3, base)
    assert not is_fano(4, base)  # k < l/(l-m) = 4
    assert is_fano(5, WeightSystem((1, 1, 1, 1, 1), 5))  # Calabi-Yau quintic base
    with pytest.raises(UsageError):
        is_fano(0, base)


def test_necessary_klt_examples():
    assert necessary_klt(13, WeightSystem((1, 1, 1, 1), 4))
    assert not necessary_klt(2, WeightSystem((1, 1, 1), 2))  # left 4, right 3
    assert not necessary_klt(1, WeightSystem((1, 2, 3), 6))  # left 6, right 3/2


def test_necessary_klt_matches_euclidean_threshold():
    for base in (
        WeightSystem((1, 1, 1), 3),
        WeightSystem((1, 1, 2), 4),
        WeightSystem((1, 2, 3), 6),
    ):
        threshold = euclidean_k_threshold(base)
        for k in range(1, 40):
            assert necessary_klt(k, base) == (k >= threshold), (base, k)


def test_euclidean_k_threshold():
    assert euclidean_k_threshold(WeightSystem((1, 1, 1), 3)) == 3
    assert euclidean_k_threshold(WeightSystem((1, 2, 3), 6)) == 5
    assert euclidean_k_threshold(WeightSystem((1, 1, 2), 4)) == 3
    with pytest.raises(UsageError):
        euclidean_k_threshold(WeightSystem((1, 1, 1), 4))


def test_spherical_never_klt_examples():
    for ws in (
        WeightSystem((1, 1, 1), 2),
        WeightSystem((1, 1, 2), 3),
        WeightSystem((2, 3, 5), 9),
    ):
        assert spherical_never_klt(ws)
        assert not any(necessary_klt(k, ws) for k in range(1, 1001))
    with pytest.raises(UsageError):
        spherical_never_klt(WeightSystem((1, 2, 3), 6))


def test_spherical_never_klt_random_sweep():
    # the contradiction argument behind the proposition needs
    # min(w) <= (|w| - d)(m - 1); sample spherical systems from that regime
    rng = random.Random(20260809)
    seen = set()
    while len(seen) < 100:
        m = rng.choice((3, 4))
        w = tuple(sorted(rng.randint(1, 12) for _ in range(m)))
        d = rng.randint(1, sum(w) - 1)
        ws = WeightSystem(w, d)
        if classify_case(ws) is not CaseClass.SPHERICAL or (w, d) in seen:
            continue
        if min(w) > (sum(w) - d) * (m - 1):
            continue
        seen.add((w, d))
        assert spherical_never_klt(ws)
        assert not any(necessary_klt(k, ws) for k in range(1, 1001)), (w, d)


def test_necessary_klt_spherical_boundary_case():
    # outside that regime the literal inequality can hold on a spherical
    # base: (3,4,6;12) is quasi-smooth, spherical, and passes at k in {4,5}
    ws = WeightSystem((3, 4, 6), 12)
    assert classify_case(ws) is CaseClass.SPHERICAL
    assert [k for k in range(1, 100) if necessary_klt(k, ws)] == [4, 5]
    assert spherical_never_klt(ws)  # the proposition itself is unconditional


def test_bp_data_fields():
    data = bp_data((3, 4, 4, 4))
    assert data.cofactor_lcms == (4, 12, 12, 12)
    assert data.gcds == (1, 4, 4, 4)
    assert data.reciprocal_sum == Fraction(13, 12)


def test_bp_sufficient_examples():
    res = bp_sufficient_ke((3, 4, 4, 4))
    assert res.verdict
    assert res.data.reciprocal_sum == Fraction(13, 12)
    assert res.bound == Fraction(35, 32)

    assert bp_sufficient_ke((13, 4, 4, 4, 4)).verdict
    assert bp_sufficient_ke((5, 6, 6, 2)).verdict

    res = bp_sufficient_ke((2, 4, 4, 4))
    assert not res.verdict
    assert res.data.reciprocal_sum == Fraction(5, 4)
    assert res.bound == Fraction(35, 32)


def test_bp_sufficient_validation():
    with pytest.raises(UsageError):
        bp_sufficient_ke((3, 4))
    with pytest.raises(UsageError):
        bp_sufficient_ke((3, 4, 1))


def test_bp_verdict_permutation_invariant():
    for a in ((3, 4, 4, 4), (5, 6, 6, 2), (2, 4, 4, 4)):
        verdicts = {bp_sufficient_ke(p).verdict for p in itertools.permutations(a)}
        assert len(verdicts) == 1


def test_hyperbolic_k_window_examples():
    win = hyperbolic_k_window(3, 4)
    assert (win.lower, win.upper) == (Fraction(32, 11), Fraction(4))
    assert win.solutions == (3,)
    assert hyperbolic_k_window(4, 5).solutions == (4,)
    win = hyperbolic_k_window(3, 5)
    assert (win.lower, win.upper) == (Fraction(50, 23), Fraction(5, 2))
    assert win.solutions == ()
    with pytest.raises(UsageError, match="m\\+1 <= l <= 2m-1"):
        hyperbolic_k_window(3, 7)
    with pytest.raises(UsageError):
        hyperbolic_k_window(3, 2)


def test_window_matches_literal_verdicts():
    # the window is the algebraic reduction of the sufficiency inequality
    # on the family (k, l, ..., l)
    for m in range(3, 7):
        for l in range(m + 1, 2 * m):
            solutions = set(hyperbolic_k_window(m, l).solutions)
            for k in range(2, 61):
                verdict = bp_sufficient_ke((k,) + (l,) * m).verdict
                assert verdict == (k in solutions), (m, l, k)


def test_verdict_single_window_in_k():
    for m in range(3, 7):
        for l in range(m + 1, 2 * m):
            seq = [bp_sufficient_ke((k,) + (l,) * m).verdict for k in range(2, 61)]
            # no True may follow a False that follows a True
            pattern = "".join("T" if v else "F" for v in seq)
            assert "TFT" not in pattern.replace("FF", "F").replace("TT", "T")


def test_fermat_cy_threshold():
    for m in range(3, 7):
        for k in range(2, 61):
            if math.gcd(k, m) != 1:
                continue
            verdict = bp_sufficient_ke((k,) + (m,) * m).verdict
            assert verdict == (k > m * (m - 1)), (m, k)


def test_certify_cover_bp_route():
    cert = certify_cover(3, WeightSystem((1, 1, 1), 4))
    assert cert.bp_applicable
    assert cert.bp_sufficient
    assert cert.fano and cert.necessary_klt and cert.gc_assumed
    assert cert.left_value == Fraction(13, 12)
    assert cert.right_bound == Fraction(35, 32)


def test_certify_cover_non_bp_route():
    # base with a weight not dividing d: no Brieskorn-Pham presentation
    base = WeightSystem((1, 1, 2), 5)
    assert branched_cover(3, base).bp_exponents is None
    cert = certify_cover(3, base)
    assert not cert.bp_applicable
    assert not cert.bp_sufficient
    assert cert.left_value == Fraction(3 * (4 - 5) + 5)


def test_certified_implies_fano():
    for k in range(2, 30):
        for base in (
            WeightSystem((1, 1, 1), 3),
            WeightSystem((1, 1, 1), 4),
            WeightSystem((1, 1, 2), 4),
        ):
            cert = certify_cover(k, base)
            assert not cert.bp_sufficient or cert.fano
