import os

import numpy as np
import pytest

from haefliger.diagram import LiftId, make_diagram


def base_seed() -> int:
    return int(os.environ.get("HAEFLIGER_SEED", "7"))


@pytest.fixture
def rng():
    return np.random.default_rng(base_seed())


def random_diagram(rng, m_max=6, max_abs=5, with_writhe=False, m_min=0):
    """Random sparse diagram with entries in [-max_abs, max_abs]."""
    m = int(rng.integers(m_min, m_max + 1))
    lifts = [LiftId(i, e) for i in range(1, m + 1) for e in (0, 1)]
    entries = []
    for a in range(len(lifts)):
        for b in range(a + 1, len(lifts)):
            if rng.random() < 0.4:
                value = int(rng.integers(-max_abs, max_abs + 1))
                entries.append((lifts[a], lifts[b], value))
    writhes = []
    if with_writhe:
        for lift in lifts:
            if rng.random() < 0.3:
                writhes.append((lift, int(rng.integers(-max_abs, max_abs + 1))))
    return make_diagram(k=1, m=m, lk=entries, writhe=writhes)


def random_subset(rng, m):
    return {int(i) for i in range(1, m + 1) if rng.random() < 0.5}
