"""Exact evaluation of the crossing-change calculus on diagrams.

Everything here is exact rational arithmetic (quarter-integers
throughout); floating point never enters.  The two difference formulas
(`delta_h_full` over all lift pairs of both diagrams, `delta_h_reduced`
over pairs touching the switched set exactly once) agree identically,
which the test suite asserts on random diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Literal, Sequence

from .diagram import CrossingDiagram, LiftId, crossing_change, validate_diagram
from .errors import (
    DuplicateIndex,
    InconsistentEvent,
    IndexOutOfRange,
)
from .linking import PolyCurve, ProjectionAxis, EZ, linking_number_pl


def _signed_pair_sum(d: CrossingDiagram) -> int:
    """Sum of (-1)^(e+e') lk over canonically ordered lift pairs."""
    total = 0
    for (a, b), value in d.lk.items():
        total += (-1) ** (a.level + b.level) * value
    return total


def delta_h_full(d: CrossingDiagram, switched: Iterable[int]) -> Fraction:
    """Invariant difference H(f) - H(f_S) from both diagrams' linking sums.

    Equals (1/4) (signed pair sum of d minus signed pair sum of the
    switched diagram).
    """
    d = validate_diagram(d)
    s = set(switched)
    changed = crossing_change(d, s)
    return Fraction(_signed_pair_sum(d) - _signed_pair_sum(changed), 4)


def delta_h_reduced(d: CrossingDiagram, switched: Iterable[int]) -> Fraction:
    """Same difference via the reduced sum over pairs straddling the set.

    Only pairs with exactly one crossing index in the switched set
    contribute, each with weight 1/2.
    """
    d = validate_diagram(d)
    s = set(switched)
    for i in s:
        if not 1 <= i <= d.m:
            raise IndexOutOfRange(f"crossing {i} outside 1..{d.m}")
    total = 0
    for (a, b), value in d.lk.items():
        if (a.crossing in s) != (b.crossing in s):
            total += (-1) ** (a.level + b.level) * value
    return Fraction(total, 2)


def i_x_dirac(d: CrossingDiagram) -> Fraction:
    """Dirac-limit value of the crossing-count integral I(X).

    (1/2) signed pair sum + (1/4) total writhe.
    """
    d = validate_diagram(d)
    w = sum(d.writhe.values())
    return Fraction(_signed_pair_sum(d), 2) + Fraction(w, 4)


def v_alternating(
    h0: Fraction | int, d: CrossingDiagram, indices: Sequence[int]
) -> Fraction:
    """Alternating subset sum testing finite-type behaviour.

    Sums (-1)^|S| u(f_S) over all subsets S of the given crossings,
    where u(f_S) = h0 - delta_h(d, S).  The base value h0 cancels as
    soon as the index list is nonempty; vanishing for 3 indices is the
    order-2 property.
    """
    idx = list(indices)
    if len(set(idx)) != len(idx):
        raise DuplicateIndex(f"repeated crossing index in {idx}")
    for i in idx:
        if not 1 <= i <= d.m:
            raise IndexOutOfRange(f"crossing {i} outside 1..{d.m}")
    h0 = Fraction(h0)
    total = Fraction(0)
    for r in range(len(idx) + 1):
        for subset in combinations(idx, r):
            total += (-1) ** r * (h0 - delta_h_full(d, subset))
    return total


def e_invariant(h_of_f: Fraction | int, d: CrossingDiagram) -> Fraction:
    """Immersion invariant: lift value minus a quarter of the pair sum.

    Independent of which lift supplied ``h_of_f``: replacing (h, d) by
    (h - delta_h(d, S), crossing_change(d, S)) gives the same value.
    """
    d = validate_diagram(d)
    return Fraction(h_of_f) - Fraction(_signed_pair_sum(d), 4)


TangencyKind = Literal["definite", "indefinite"]
TriplePattern = Literal["all_distinct", "i_eq_j", "p_eq_i", "j_eq_p", "all_equal"]


@dataclass(frozen=True)
class HomotopyEvent:
    """A codimension-1 event of a regular homotopy of immersions.

    ``kind`` is one of "definite_tangency", "indefinite_tangency",
    "triple_point".  For indefinite tangencies: ``index`` is the index
    of the local quadratic form (1..2k-1), ``joins_components`` tells
    whether the deformation merges two components of the
    self-intersection, and lk00/lk11 are the same-level linking numbers
    of the merging pair.  For triple points: ``pattern`` records which
    of the three double-point components coincide.  ``sign`` is the
    direction of travel through the stratum, supplied by the caller.
    """

    kind: str
    sign: int = 1
    index: int | None = None
    joins_components: bool = False
    lk00: int = 0
    lk11: int = 0
    pattern: TriplePattern | None = None

    def __post_init__(self) -> None:
        if self.kind not in (
            "definite_tangency",
            "indefinite_tangency",
            "triple_point",
        ):
            raise InconsistentEvent(f"unknown event kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise InconsistentEvent("event sign must be +1 or -1")
        if self.kind == "indefinite_tangency" and self.index is None:
            raise InconsistentEvent("indefinite tangency needs a quadratic index")
        if self.kind == "triple_point" and self.pattern not in (
            "all_distinct",
            "i_eq_j",
            "p_eq_i",
            "j_eq_p",
            "all_equal",
        ):
            raise InconsistentEvent(f"bad triple-point pattern {self.pattern!r}")


def e_jump(event: HomotopyEvent, k: int) -> Fraction:
    """Jump of the immersion invariant across a codimension-1 event.

    Definite tangencies never jump.  Indefinite tangencies jump by
    (lk00 + lk11)/4 only when the quadratic index is extremal (1 or
    2k-1) and the deformation joins two components.  Triple points jump
    by 1/4 except in the two coincidence patterns that cancel.
    """
    if event.kind == "definite_tangency":
        return Fraction(0)
    if event.kind == "indefinite_tangency":
        if not 1 <= event.index <= 2 * k - 1:
            raise InconsistentEvent(
                f"quadratic index {event.index} outside 1..{2 * k - 1}"
            )
        if event.index in (1, 2 * k - 1) and event.joins_components:
            return event.sign * Fraction(event.lk00 + event.lk11, 4)
        return Fraction(0)
    if event.pattern in ("i_eq_j", "j_eq_p"):
        return Fraction(0)
    return event.sign * Fraction(1, 4)


def smale_from_h(h: Fraction | int) -> Fraction:
    """Smale invariant of an embedding factoring through codimension 2."""
    return -12 * Fraction(h)


def murai_ohba_certificate(
    l0: PolyCurve, l1: PolyCurve, axis: ProjectionAxis = EZ
) -> tuple[CrossingDiagram, set[int], Fraction]:
    """Single-crossing-change unknotting certificate from a 2-component link.

    Builds the two-crossing diagram whose double point sets are two
    separated copies of the input link (same-level linking numbers equal
    to lk(l0, l1), mixed levels split) and returns it together with the
    switch set {1} and the resulting invariant difference, which equals
    the linking number of the input link.
    """
    n = linking_number_pl(l0, l1, axis)
    from .diagram import make_diagram  # local import to avoid cycle at import time

    d = make_diagram(
        k=1,
        m=2,
        lk=[
            (LiftId(1, 0), LiftId(2, 0), n),
            (LiftId(1, 1), LiftId(2, 1), n),
        ],
    )
    switched = {1}
    delta = delta_h_reduced(d, switched)
    assert delta == n, "certificate diagram must reproduce the linking number"
    return d, switched, delta


def _jacobian_matrix(k: int) -> list[list[int]]:
    """The (16k-4) x (16k-4) integer block matrix of the Gauss-map Jacobian.

    Row blocks follow the tangent factors of the two big spheres and the
    small sphere; the row order inside the middle sphere block is pinned
    so the basis orientation matches the stated determinant.
    """
    rw = [2 * k - 1, 2 * k, 2 * k, 2 * k - 1, 2 * k - 1, 2 * k + 1, 2 * k - 1, 2 * k - 1]
    cw = [2 * k - 1, 2 * k, 2 * k - 1, 2 * k, 2 * k - 1, 2 * k, 2 * k - 1, 2 * k]
    n = 16 * k - 4
    assert sum(rw) == sum(cw) == n
    ro = [sum(rw[:i]) for i in range(8)]
    co = [sum(cw[:i]) for i in range(8)]
    mat = [[0] * n for _ in range(n)]

    def put_identity(rb: int, cb: int, sign: int, size: int) -> None:
        for t in range(size):
            mat[ro[rb] + t][co[cb] + t] = sign

    put_identity(0, 0, 1, 2 * k - 1)
    put_identity(0, 2, -1, 2 * k - 1)
    put_identity(1, 1, 1, 2 * k)
    put_identity(2, 3, -1, 2 * k)
    put_identity(3, 6, -1, 2 * k - 1)
    put_identity(4, 4, 1, 2 * k - 1)
    # Middle-sphere mixed block, height 2k+1: an identity against the
    # first 2k-1 coordinates of column blocks 5 and 7, plus one +1 row
    # (col block 5) and one -1 row (col block 7).
    for t in range(2 * k - 1):
        mat[ro[5] + t][co[5] + t] = 1
        mat[ro[5] + t][co[7] + t] = -1
    mat[ro[5] + 2 * k - 1][co[7] + 2 * k - 1] = -1
    mat[ro[5] + 2 * k][co[5] + 2 * k - 1] = 1
    put_identity(6, 2, 1, 2 * k - 1)
    put_identity(6, 4, -1, 2 * k - 1)
    put_identity(7, 3, 1, 2 * k - 1)
    put_identity(7, 5, -1, 2 * k - 1)
    return [[-x for x in row] for row in mat]


def _det_exact(mat: list[list[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination over the integers."""
    m = [row[:] for row in mat]
    n = len(m)
    sign = 1
    prev = 1
    for c in range(n):
        pivot_row = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) // prev
            m[r][c] = 0
        prev = m[c][c]
    return sign * m[n - 1][n - 1]


def jacobian_det(k: int) -> int:
    """Determinant of the crossing-count Jacobian; -1 for every k >= 1."""
    if k < 1:
        raise IndexOutOfRange("k must be a positive integer")
    return _det_exact(_jacobian_matrix(k))
