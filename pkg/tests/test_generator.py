from fractions import Fraction

import numpy as np
import pytest

from haefliger.diagram import LiftId
from haefliger.errors import InvalidParams
from haefliger.generator import (
    DEFAULT_PARAMS,
    HOPF_PAIRS,
    BorromeanParams,
    generator_diagram,
    generator_double_point_curves,
    verify_generator,
)


def test_params_validation():
    BorromeanParams(alpha=4, beta=1)
    with pytest.raises(InvalidParams):
        BorromeanParams(alpha=2, beta=1)  # needs 2*beta < alpha
    with pytest.raises(InvalidParams):
        BorromeanParams(alpha=4, beta=0)
    with pytest.raises(InvalidParams):
        BorromeanParams(alpha=-4, beta=1)


def test_generator_diagram_combinatorics():
    for k in (1, 2, 3):
        d = generator_diagram(k)
        assert d.k == k and d.m == 6
        assert len(d.lk) == 6
        assert set(d.lk.values()) == {1}
        for a, b, _ in HOPF_PAIRS:
            assert d.lk_value(a, b) == 1
    assert generator_diagram(1).lk == generator_diagram(3).lk
    with pytest.raises(InvalidParams):
        generator_diagram(0)


def test_hopf_pairs_cover_all_crossings():
    lifts = [lift for a, b, _ in HOPF_PAIRS for lift in (a, b)]
    assert len(lifts) == len(set(lifts)) == 12
    spheres = [s for _, _, s in HOPF_PAIRS]
    assert sorted(spheres) == ["X", "X", "Y", "Y", "Z", "Z"]


def test_curves_only_for_k1():
    with pytest.raises(InvalidParams):
        generator_double_point_curves(BorromeanParams(alpha=4, beta=1, k=2))


def test_curve_geometry():
    params = DEFAULT_PARAMS
    alpha, beta = float(params.alpha), float(params.beta)
    diagonal = beta / np.sqrt(2.0)
    offsets = {"X": 0.0, "Y": 8.0 * alpha, "Z": 16.0 * alpha}
    labeled = generator_double_point_curves(params, n=48)
    assert len(labeled) == 12
    assert sorted(c.lift for c in labeled) == sorted(
        LiftId(i, e) for i in range(1, 7) for e in (0, 1)
    )
    for entry in labeled:
        pts = entry.curve.as_array()
        assert len(pts) == 48
        pts = pts - np.array([offsets[entry.sphere], 0.0, 0.0])
        # Face coordinates of the solid torus: angle, then disc point
        # (radial distance minus ring radius, height).
        radial = np.hypot(pts[:, 0], pts[:, 1]) - 2.0 * alpha
        height = pts[:, 2]
        disc = np.stack([radial, height], axis=1)
        if disc.std(axis=0).max() < 1e-9:
            # Fiber: fixed disc point at +-(diagonal, diagonal).
            assert np.allclose(np.abs(disc[0]), [diagonal, diagonal])
        else:
            # Cross-section: a radius-beta circle about +-(diagonal,
            # diagonal) in one disc slice, so the angle is constant.
            theta = np.arctan2(pts[:, 1], pts[:, 0])
            assert np.allclose(theta, theta[0], atol=1e-9)
            center = disc.mean(axis=0)
            assert np.allclose(np.abs(center), [diagonal, diagonal], atol=1e-9)
            assert np.allclose(
                np.hypot(*(disc - center).T), beta, atol=1e-9
            )


def test_verify_generator_end_to_end():
    report = verify_generator(DEFAULT_PARAMS, n=64)
    assert report.matches_diagram
    assert report.h_value == 1
    assert set(report.singleton_deltas.values()) == {Fraction(1)}
    assert len(report.linking_matrix) == 6
    assert set(report.linking_matrix.values()) == {1}


def test_verify_generator_resolution_independent():
    coarse = verify_generator(DEFAULT_PARAMS, n=32)
    fine = verify_generator(DEFAULT_PARAMS, n=64)
    assert coarse.matches_diagram and fine.matches_diagram
    normalize = lambda mat: {frozenset(k): v for k, v in mat.items()}
    assert normalize(coarse.linking_matrix) == normalize(fine.linking_matrix)
    assert coarse.h_value == fine.h_value == 1


def test_verify_generator_other_radii():
    report = verify_generator(BorromeanParams(alpha=3, beta=1), n=48)
    assert report.matches_diagram
    assert report.h_value == 1
