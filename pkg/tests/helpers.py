"""Shared builders for the test suite: knot codes and explicit curves.

Everything here is an independent construction path from the library
code under test: Gauss codes come from braid closures, curves from
direct parametrizations.
"""

import numpy as np

from haefliger.linking import PolyCurve, circle


def braid_closure_code(word, strands):
    """Extended Gauss code of the closure of a braid word.

    ``word`` is a list of nonzero ints: ``+i`` is the positive generator
    (strand at position i crosses over position i+1), ``-i`` its
    inverse.  The closure must be a knot (single component).
    """
    position = list(range(strands))  # strand id occupying each position
    per_strand = {s: [] for s in range(strands)}
    for label, gen in enumerate(word, start=1):
        i = abs(gen) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {gen} out of range for {strands} strands")
        a, b = position[i], position[i + 1]
        if gen > 0:
            per_strand[a].append(("O", label, 1))
            per_strand[b].append(("U", label, 1))
        else:
            per_strand[a].append(("U", label, -1))
            per_strand[b].append(("O", label, -1))
        position[i], position[i + 1] = b, a
    # Closure: strand ending at bottom position p continues from top position p.
    next_strand = {position[p]: p for p in range(strands)}
    tokens = []
    strand = 0
    for _ in range(strands):
        tokens.extend(per_strand[strand])
        strand = next_strand[strand]
        if strand == 0:
            break
    else:
        raise ValueError("closure has more than one component")
    if sum(len(v) for v in per_strand.values()) != len(tokens):
        raise ValueError("closure has more than one component")
    return "".join(
        f"{kind}{label}{'+' if sign > 0 else '-'}" for kind, label, sign in tokens
    )


def torus_knot_code(n):
    """Alternating extended Gauss code of the (2, n) torus knot, n odd."""
    return "".join(
        f"{'O' if t % 2 == 0 else 'U'}{(t % n) + 1}+" for t in range(2 * n)
    )


def connect_sum_code(code1, code2):
    """Connected sum at the basepoints: concatenation with fresh labels."""
    import re

    relabeled = re.sub(
        r"([OUou])([A-Za-z0-9]+?)([+-])", r"\1s\2\3", code2
    )
    return code1 + relabeled


FIGURE_EIGHT = "O1+U2-O4-U1+O3+U4-O2-U3+"


def hopf_link(n_vertices=48):
    """The positively oriented Hopf link as two polygonal circles."""
    c1 = circle((0, 0, 0), 2.0, (0, 0, 1), n=n_vertices, phase=0.13)
    c2 = circle((2, 0, 0), 2.0, (0, 1, 0.2), n=n_vertices, phase=0.29)
    return c1, c2


def torus_link_curves(n, samples=96):
    """(2, 2n) torus link: a core circle and an n-times winding companion."""
    core = circle((0, 0, 0), 3.0, (0, 0, -1), n=samples, phase=0.07)
    t = 2.0 * np.pi * (np.arange(samples) + 0.21) / samples
    w = n * t + 0.4
    pts = np.stack(
        [
            (3.0 + np.cos(w)) * np.cos(t),
            (3.0 + np.cos(w)) * np.sin(t),
            np.sin(w),
        ],
        axis=1,
    )
    companion = PolyCurve([tuple(p) for p in pts])
    return core, companion


def trefoil_curve(samples=60):
    """Polygonal trefoil from the standard trigonometric parametrization."""
    t = 2.0 * np.pi * (np.arange(samples) + 0.11) / samples
    pts = np.stack(
        [
            np.sin(t) + 2.0 * np.sin(2.0 * t),
            np.cos(t) - 2.0 * np.cos(2.0 * t),
            -np.sin(3.0 * t),
        ],
        axis=1,
    )
    return PolyCurve([tuple(p) for p in pts])


def random_loop(rng, n_vertices=36):
    """Closed trigonometric-polynomial loop with decaying harmonics."""
    t = 2.0 * np.pi * np.arange(n_vertices) / n_vertices
    a1, b1 = rng.normal(size=3), rng.normal(size=3)
    a1 *= 2.0 / np.linalg.norm(a1)
    b1 *= 2.0 / np.linalg.norm(b1)
    pts = np.outer(np.cos(t), a1) + np.outer(np.sin(t), b1)
    for k in (2, 3):
        pts += np.outer(np.cos(k * t), rng.normal(size=3)) / k**2.5
        pts += np.outer(np.sin(k * t), rng.normal(size=3)) / k**2.5
    return pts


def random_link(rng, min_separation=0.1, max_tries=200):
    """Two disjoint random loops with relative separation >= the given
    fraction of the configuration diameter."""
    for _ in range(max_tries):
        a = random_loop(rng)
        b = random_loop(rng) + rng.normal(scale=0.8, size=3)
        both = np.concatenate([a, b])
        diameter = float(np.linalg.norm(both.max(axis=0) - both.min(axis=0)))
        gap = np.sqrt(
            ((a[:, None, :] - b[None, :, :]) ** 2).sum(axis=2)
        ).min()
        if gap >= min_separation * diameter:
            return (
                PolyCurve([tuple(p) for p in a]),
                PolyCurve([tuple(p) for p in b]),
            )
    raise RuntimeError("could not sample a separated link")
