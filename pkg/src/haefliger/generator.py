"""Construction of the order-one generator's crossing data.

The generator of the isotopy classes is a connected sum of three
bidisc-boundary spheres arranged as a Borromean ring.  Its projection
has six crossings whose double point sets pair up into six Hopf links,
two inside each sphere.  ``generator_diagram`` returns that shadow for
any dimension parameter k (the combinatorics is k-independent);
``generator_double_point_curves`` realizes the twelve double point
circles as explicit polylines for k = 1, with each sphere's relevant
solid-torus face embedded standardly in R^3 at three separated sites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import pi, sqrt

import numpy as np

from .diagram import CrossingDiagram, LiftId, make_diagram
from .errors import InvalidParams, NonGenericProjection
from .linking import PolyCurve, ProjectionAxis, EZ, linking_number_pl
from .calculus import delta_h_reduced

# The six Hopf-linked pairs of double point components, grouped by the
# sphere containing them.
HOPF_PAIRS: tuple[tuple[LiftId, LiftId, str], ...] = (
    (LiftId(1, 1), LiftId(6, 1), "X"),
    (LiftId(2, 0), LiftId(5, 0), "X"),
    (LiftId(1, 0), LiftId(4, 0), "Y"),
    (LiftId(2, 1), LiftId(3, 1), "Y"),
    (LiftId(3, 0), LiftId(6, 0), "Z"),
    (LiftId(4, 1), LiftId(5, 1), "Z"),
)


@dataclass(frozen=True)
class BorromeanParams:
    """Radii of the Borromean bidisc spheres; requires 2*beta < alpha."""

    alpha: Fraction
    beta: Fraction
    k: int = 1

    def __post_init__(self) -> None:
        alpha, beta = Fraction(self.alpha), Fraction(self.beta)
        if alpha <= 0 or beta <= 0 or 2 * beta >= alpha:
            raise InvalidParams(
                f"need 0 < 2*beta < alpha, got alpha={alpha}, beta={beta}"
            )
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)


DEFAULT_PARAMS = BorromeanParams(alpha=4, beta=1, k=1)


def generator_diagram(k: int) -> CrossingDiagram:
    """Six-crossing diagram with the six unit Hopf entries (all +1)."""
    if k < 1:
        raise InvalidParams("k must be a positive integer")
    return make_diagram(
        k=k, m=6, lk=[(a, b, 1) for a, b, _ in HOPF_PAIRS]
    )


@dataclass(frozen=True)
class LabeledCurve:
    """A double point circle with its lift label and ambient sphere."""

    lift: LiftId
    sphere: str
    curve: PolyCurve


def _torus_embed(
    theta: np.ndarray, disc: np.ndarray, ring_radius: float, offset: np.ndarray
) -> PolyCurve:
    """Embed face coordinates (angle, disc point) as a solid torus in R^3."""
    x = (ring_radius + disc[:, 0]) * np.cos(theta)
    y = (ring_radius + disc[:, 0]) * np.sin(theta)
    z = disc[:, 1]
    pts = np.stack([x, y, z], axis=1) + offset
    return PolyCurve([tuple(p) for p in pts])


def _fiber(d0, ring_radius, offset, n, reverse=False) -> PolyCurve:
    theta = 2.0 * pi * (np.arange(n) + 0.31) / n
    if reverse:
        theta = theta[::-1]
    disc = np.repeat(np.asarray(d0, dtype=float)[None, :], n, axis=0)
    return _torus_embed(theta, disc, ring_radius, offset)


def _cross_section(
    theta0, center, radius, ring_radius, offset, n, reverse=False
) -> PolyCurve:
    psi = 2.0 * pi * (np.arange(n) + 0.17) / n
    if reverse:
        psi = psi[::-1]
    disc = np.asarray(center, dtype=float)[None, :] + radius * np.stack(
        [np.cos(psi), np.sin(psi)], axis=1
    )
    theta = np.full(n, float(theta0))
    return _torus_embed(theta, disc, ring_radius, offset)


def generator_double_point_curves(
    params: BorromeanParams = DEFAULT_PARAMS, n: int = 64
) -> list[LabeledCurve]:
    """Twelve labeled polyline circles realizing the double point sets.

    Each circle is either a fiber of its sphere's solid-torus face
    (angle coordinate runs around the torus) or a cross-section circle
    in one disc slice.  Orientations are pinned so every Hopf pair
    carries linking number +1.
    """
    if params.k != 1:
        raise InvalidParams("explicit curves are only constructed for k = 1")
    alpha = float(params.alpha)
    beta = float(params.beta)
    bp = beta / sqrt(2.0)  # offset magnitude along the diagonal direction
    plus = np.array([bp, bp])
    ring = 2.0 * alpha
    offsets = {
        "X": np.array([0.0, 0.0, 0.0]),
        "Y": np.array([8.0 * alpha, 0.0, 0.0]),
        "Z": np.array([16.0 * alpha, 0.0, 0.0]),
    }
    quarter = pi / 4.0

    # (lift, sphere, kind, placement); fibers sit at a disc point, cross
    # sections at an angle with a disc-circle center.
    spec: list[tuple[LiftId, str, str, np.ndarray, float]] = [
        (LiftId(1, 1), "X", "fiber", plus, 0.0),
        (LiftId(2, 0), "X", "fiber", -plus, 0.0),
        (LiftId(6, 1), "X", "section", plus, quarter),
        (LiftId(5, 0), "X", "section", -plus, quarter + pi),
        (LiftId(3, 1), "Y", "fiber", plus, 0.0),
        (LiftId(4, 0), "Y", "fiber", -plus, 0.0),
        (LiftId(2, 1), "Y", "section", plus, quarter),
        (LiftId(1, 0), "Y", "section", -plus, quarter + pi),
        (LiftId(5, 1), "Z", "fiber", plus, 0.0),
        (LiftId(6, 0), "Z", "fiber", -plus, 0.0),
        (LiftId(4, 1), "Z", "section", plus, quarter),
        (LiftId(3, 0), "Z", "section", -plus, quarter + pi),
    ]
    out = []
    for lift, sphere, kind, place, angle in spec:
        if kind == "fiber":
            curve = _fiber(place, ring, offsets[sphere], n)
        else:
            # Reversed so every Hopf pair computes to +1, pinning the
            # global sign convention.
            curve = _cross_section(
                angle, place, beta, ring, offsets[sphere], n, reverse=True
            )
        out.append(LabeledCurve(lift=lift, sphere=sphere, curve=curve))
    return out


def _robust_lk(
    m: PolyCurve, n: PolyCurve, axis: ProjectionAxis = EZ, seed: int = 7
) -> int:
    """Linking number with random-axis fallback on degenerate projections."""
    rng = np.random.default_rng(seed)
    for attempt in range(8):
        try:
            return linking_number_pl(m, n, axis)
        except NonGenericProjection:
            direction = rng.normal(size=3)
            direction /= np.linalg.norm(direction)
            axis = ProjectionAxis(tuple(direction))
    raise NonGenericProjection("no generic axis found after 8 attempts")


@dataclass(frozen=True)
class GeneratorReport:
    """End-to-end verification of the generator's linking data."""

    linking_matrix: dict[tuple[LiftId, LiftId], int]
    hopf_pairs: tuple[tuple[LiftId, LiftId], ...]
    matches_diagram: bool
    h_value: Fraction
    singleton_deltas: dict[int, Fraction]


def verify_generator(
    params: BorromeanParams = DEFAULT_PARAMS, n: int = 64
) -> GeneratorReport:
    """Compute all pairwise linking numbers of the k=1 circles and check them.

    Asserts that exactly the six listed pairs have |lk| = 1 (all other
    pairs vanish), that the matrix matches ``generator_diagram(1)`` up
    to a global sign, and evaluates the invariant of the generator via
    the crossing change at the first crossing.
    """
    curves = generator_double_point_curves(params, n)
    matrix: dict[tuple[LiftId, LiftId], int] = {}
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            a, b = curves[i], curves[j]
            value = _robust_lk(a.curve, b.curve)
            if value:
                matrix[(a.lift, b.lift)] = value

    expected = {}
    for a, b, _ in HOPF_PAIRS:
        expected[(a, b)] = 1
    found = {}
    for (a, b), v in matrix.items():
        key = (a, b) if (a, b) in expected or (b, a) not in expected else (b, a)
        found[key] = v
    same_support = set(found) == set(expected)
    values = set(found.values())
    matches = same_support and (values == {1} or values == {-1})

    diagram = generator_diagram(1)
    deltas = {i: delta_h_reduced(diagram, {i}) for i in range(1, 7)}
    return GeneratorReport(
        linking_matrix=matrix,
        hopf_pairs=tuple((a, b) for a, b, _ in HOPF_PAIRS),
        matches_diagram=matches,
        h_value=deltas[1],
        singleton_deltas=deltas,
    )
