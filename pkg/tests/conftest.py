import itertools
from typing import Iterator

import numpy as np
import pytest

from eckardt.models import CubicForm3, FamilyTag, SylvesterPoint
from eckardt.pentahedron import family_representative, to_cubic_p3


def is_smooth_sylvester(s: SylvesterPoint) -> bool:
    """A nondegenerate Sylvester form is singular exactly when some signed sum of the :math:`1/\\sqrt{a_i}`
    vanishes."""
    roots = [1 / np.sqrt(complex(a)) for a in s.coeffs]
    scale = max(abs(r) for r in roots)
    for signs in itertools.product((1, -1), repeat=4):
        total = roots[0] + sum(e * r for e, r in zip(signs, roots[1:]))
        if abs(total) < 1e-9 * scale:
            return False
    return True


def smooth_representatives(tag: FamilyTag, seed: int) -> Iterator[SylvesterPoint]:
    rng = np.random.default_rng(seed)
    while True:
        s = family_representative(tag, rng, bound=12)
        if is_smooth_sylvester(s):
            yield s


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20220314)


@pytest.fixture
def fermat() -> CubicForm3:
    return CubicForm3.fermat()


@pytest.fixture
def clebsch() -> CubicForm3:
    return to_cubic_p3(SylvesterPoint([1, 1, 1, 1, 1]))
