import math

import pytest

import mft

Q4 = [(0.0, 0.0), (2.0, 5.0), (6.0, 4.0), (5.0, 0.0)]


def q4():
    return mft.Polygon(Q4)


def test_q4_linear():
    report = mft.solve(q4())
    assert tuple(report.edges) == (0, 1, 3)
    assert report.area == pytest.approx(55.0)


@pytest.mark.parametrize("algo", ["linear", "logn", "quadratic", "brute"])
def test_algorithms_agree_on_q4(algo):
    assert mft.solve(q4(), algo).area == pytest.approx(55.0)


def test_square_is_rejected():
    with pytest.raises(mft.MftError):
        mft.Polygon([(0, 0), (0, 1), (1, 1), (1, 0)])


def test_generator_is_deterministic():
    a = mft.generate_random(40, 7)
    b = mft.generate_random(40, 7)
    assert a.vertices == b.vertices
    assert a.vertices != mft.generate_random(40, 8).vertices


def test_brute_force_matches_linear():
    for seed in range(1, 21):
        poly = mft.generate_random(12 + seed, seed)
        edges, area, stable = mft.brute_force(poly)
        report = mft.solve(poly)
        assert math.isclose(report.area, area, rel_tol=1e-9)
        assert tuple(edges) in stable


def test_is_3stable():
    poly = q4()
    assert mft.is_3stable(poly, 0, 1, 3)
    assert mft.area_of(poly, 0, 1, 3) == pytest.approx(55.0)
