import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import drumspec as d
from drumspec import perturbation as pert
from drumspec import powermethod as pm

# exact unit-disk levels (squared Bessel zeros), used all over the suite
EXACT_CIRCLE = (5.7831859629, 14.681970642, 26.374616427)


@pytest.fixture(scope="session")
def circle():
    return d.domain_from_descriptor({"kind": "square_to_disk"})


@pytest.fixture(scope="session")
def deformed_square():
    return d.domain_from_descriptor({"kind": "polynomial", "coeffs": [0, 1, 0.05]})


@pytest.fixture(scope="session")
def circle_sigma20(circle):
    return pert.sigma_elements_square(circle, 20)


@pytest.fixture(scope="session")
def circle_ops20(circle):
    return pm.BasisOperators(circle, 20)
