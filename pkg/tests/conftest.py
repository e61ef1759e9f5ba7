import numpy as np
import pytest
from hypothesis import strategies as st

from hopfsmooth.exactla import Field

FIELDS = [Field(2), Field(3), Field(5), Field(0)]


def field_id(F):
    return F.name


@pytest.fixture(params=FIELDS, ids=field_id)
def field(request):
    return request.param


def random_matrix(F, rng, rows, cols, density=0.7):
    """Deterministic random matrix over F with entries in a small range."""
    if F.is_rational:
        num = rng.integers(-3, 4, size=(rows, cols))
        den = rng.integers(1, 4, size=(rows, cols))
        keep = rng.random((rows, cols)) < density
        data = [[f"{int(n) * int(k)}/{int(d)}" for n, d, k in zip(rn, rd, rk)] for rn, rd, rk in zip(num, den, keep)]
        return F.array(data) if rows and cols else F.zeros((rows, cols))
    vals = rng.integers(0, F.p, size=(rows, cols)) * (rng.random((rows, cols)) < density)
    return F.array(vals) if rows and cols else F.zeros((rows, cols))


def matrices(F, max_rows=6, max_cols=6):
    """Hypothesis strategy for small matrices over F."""
    if F.is_rational:
        elem = st.fractions(min_value=-4, max_value=4, max_denominator=5)
    else:
        elem = st.integers(0, F.p - 1)

    @st.composite
    def build(draw):
        r = draw(st.integers(1, max_rows))
        c = draw(st.integers(1, max_cols))
        rows = draw(st.lists(st.lists(elem, min_size=c, max_size=c), min_size=r, max_size=r))
        return F.array(rows)

    return build()


def rng(seed=0):
    return np.random.default_rng(seed)
