"""
Shared fixtures: catalog lookups, point-data builders and a small run config.
"""

import pytest

from catalog import get_entry
from config import RunConfig
from curvature import build_point_data

# fractions of each domain interval; unequal so no coordinate sits at a symmetric point
INTERIOR_FRACTIONS = (0.37, 0.61, 0.29, 0.73, 0.45, 0.58, 0.33, 0.67)


def interior_point(spec, shift: int = 0):
    return tuple(lo + INTERIOR_FRACTIONS[(i + shift) % len(INTERIOR_FRACTIONS)] * (hi - lo)
                 for i, (lo, hi) in enumerate(spec.domain))


def entry_data(name, point=None, order=4, k_depth=2):
    spec = get_entry(name)
    return build_point_data(spec, point if point is not None else interior_point(spec), order, k_depth)


@pytest.fixture
def catalog_data():
    """Factory: curvature bundle of a catalog entry at an interior point."""
    return entry_data


@pytest.fixture
def small_run():
    """Few points on one worker, enough for aggregate-level checks."""
    return RunConfig(points=4, seed=7, workers=1)
