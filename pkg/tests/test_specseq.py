import pytest

from qhlag.specseq import (
    SpectralError, Verdict, classify_homology_sphere, collapse_forced, e1_page, rank_bound_qh_n,
)


def test_sphere_page():
    page = e1_page([1, 0, 1], 2, 2)
    assert page.total(2) == 2 and page.total(1) == 0
    assert page.dim(0, 0) == 1 and page.dim(1, 1) == 1 and page.dim(1, 2) == 0


def test_product_of_spheres():
    m = 3
    betti = [0] * (2 * m + 1)
    betti[0], betti[m], betti[2 * m] = 1, 2, 1
    assert e1_page(betti, 2 * m, 2 * m).total(2 * m) == 2


@pytest.mark.parametrize("betti,maslov,bound", [
    ([1, 0, 1], 2, 2), ([1, 0, 0, 0, 1], 2, 2), ([1, 0, 0, 0, 1], 4, 2), ([1, 0, 0], 2, 1),
    ([1, 0, 0, 0], 2, 0), ([1, 0, 0, 0, 0], 6, 0), ([1, 0, 1, 0, 1], 2, 3),
])
def test_rank_bound_closed_form(betti, maslov, bound):
    n = len(betti) - 1
    closed = sum(betti[n - p * maslov] for p in range(-n, n + 1) if 0 <= n - p * maslov <= n)
    assert rank_bound_qh_n(betti, maslov, n) == closed == bound


def test_periodicity():
    page = e1_page([1, 2, 0, 1], 2, 3)
    for p in range(-3, 4):
        for q in range(-8, 8):
            assert page.dim(p, q) == page.dim(p + 1, q + 1)


@pytest.mark.parametrize("n,maslov,nonzero,verdict", [
    (2, 2, False, Verdict.ISOMORPHIC), (4, 2, True, Verdict.ISOMORPHIC),
    (3, 6, False, Verdict.ISOMORPHIC), (3, 4, True, Verdict.ISOMORPHIC),
    (3, 4, False, Verdict.AMBIGUOUS), (5, 2, False, Verdict.AMBIGUOUS),
])
def test_classification(n, maslov, nonzero, verdict):
    assert classify_homology_sphere(n, maslov, nonzero).verdict is verdict


def test_classification_consistent_with_collapse():
    for n in range(1, 9):
        for maslov in range(2, 12, 2):
            betti = [1] + [0] * (n - 1) + [1]
            if collapse_forced(betti, maslov, n):
                for nonzero in (False, True):
                    assert classify_homology_sphere(n, maslov, nonzero).verdict is Verdict.ISOMORPHIC


@pytest.mark.parametrize("betti,maslov,expected", [
    ([1, 0, 1], 2, True), ([1, 0, 0, 0, 1], 4, True), ([1, 0, 0, 1], 4, False),
    ([1, 0, 0, 1], 2, False), ([1, 0, 0], 2, True), ([1, 0, 0, 1], 6, True),
])
def test_collapse(betti, maslov, expected):
    assert collapse_forced(betti, maslov, len(betti) - 1) is expected


def test_errors():
    with pytest.raises(SpectralError):
        classify_homology_sphere(3, 3, True)
    with pytest.raises(SpectralError):
        e1_page([1, 0, 1], 3, 2)
    with pytest.raises(SpectralError):
        e1_page([1, 0], 2, 2)
