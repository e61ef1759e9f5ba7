import numpy as np
import pytest

from hopfsmooth.decompose import (
    NotLocalError,
    TruncatedPolyDecomposition,
    decompose_local_hopf,
    frobenius_exponents,
    is_local,
    verify_decomposition,
)
from hopfsmooth.exactla import Field
from hopfsmooth.hopf import (
    GroupData,
    etale_functions_hopf,
    group_hopf,
    sample1_hopf,
    tensor_hopf,
    trivial_hopf,
    truncated_primitive_hopf,
)

F2, F3, F5, Q = Field(2), Field(3), Field(5), Field(0)


def desc(t):
    return sorted(t, reverse=True)


@pytest.mark.parametrize(
    "exps, p",
    [([1], 2), ([2], 2), ([3], 2), ([2, 1], 2), ([1, 1], 2), ([1, 1, 1], 2), ([1], 3), ([2], 3), ([1, 1], 3), ([1], 5)],
)
def test_truncated_exponents_recovered(exps, p):
    h = truncated_primitive_hopf(exps, p)
    d = decompose_local_hopf(h)
    assert desc(d.exponents) == desc(exps)
    assert verify_decomposition(h, d)
    assert desc(frobenius_exponents(h)) == desc(exps)


@pytest.mark.parametrize(
    "orders, p, expect",
    [((2,), 2, [1]), ((4,), 2, [2]), ((2, 2), 2, [1, 1]), ((4, 2), 2, [2, 1]), ((8, 2), 2, [3, 1]),
     ((3,), 3, [1]), ((9,), 3, [2]), ((9, 3), 3, [2, 1]), ((5,), 5, [1])],
)
def test_group_algebras_of_p_groups(orders, p, expect):
    h = group_hopf(GroupData(orders), Field(p))
    d = decompose_local_hopf(h)
    assert desc(d.exponents) == expect
    assert verify_decomposition(h, d)
    assert desc(frobenius_exponents(h)) == expect


@pytest.mark.parametrize("n, M, p, expect", [(1, 1, 2, [1]), (2, 1, 2, [2, 1]), (2, 2, 2, [3, 1]), (2, 1, 3, [2, 1])])
def test_sample1(n, M, p, expect):
    h = sample1_hopf(n, M, p)
    d = decompose_local_hopf(h)
    assert desc(d.exponents) == expect and verify_decomposition(h, d)


def test_trivial_and_tensor():
    d = decompose_local_hopf(trivial_hopf(F2))
    assert d.exponents == () and verify_decomposition(trivial_hopf(F2), d)
    h = tensor_hopf(truncated_primitive_hopf([1], 2), group_hopf(GroupData((4,)), F2))
    assert desc(decompose_local_hopf(h).exponents) == [2, 1]


def _tamper(d, **kw):
    fields = dict(exponents=d.exponents, generators=d.generators, iso=d.iso)
    fields.update(kw)
    return TruncatedPolyDecomposition(**fields)


def test_tampered_decompositions_rejected():
    h = group_hopf(GroupData((4, 2)), F2)
    d = decompose_local_hopf(h)
    assert verify_decomposition(h, d)
    # wrong exponents
    assert not verify_decomposition(h, _tamper(d, exponents=tuple(reversed(d.exponents))))
    assert not verify_decomposition(h, _tamper(d, exponents=(1, 1, 1)))
    # a generator replaced by a non-nilpotent element
    gens = np.array(d.generators)
    gens[0] = F2.normalize(gens[0] + h.alg.unit)
    assert not verify_decomposition(h, _tamper(d, generators=gens))
    # wrong iso matrix
    iso = np.array(d.iso)
    iso[:, [0, 1]] = iso[:, [1, 0]]
    assert not verify_decomposition(h, _tamper(d, iso=iso))


def test_not_local_raises():
    for h in (
        group_hopf(GroupData((3,)), F2),
        group_hopf(GroupData((6,)), F2),
        etale_functions_hopf(GroupData((2,)), F2),
        group_hopf(GroupData((2,)), F5),
    ):
        assert not is_local(h)
        with pytest.raises(NotLocalError):
            decompose_local_hopf(h)
    with pytest.raises(NotLocalError):
        decompose_local_hopf(group_hopf(GroupData((2,)), Q))


def test_locality_examples():
    assert is_local(group_hopf(GroupData((4, 2)), F2))
    assert is_local(sample1_hopf(2, 1, 2))
    assert is_local(trivial_hopf(F3))
