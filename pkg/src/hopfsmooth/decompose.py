"""Truncated-polynomial decomposition of local Hopf algebras over F_p.

The induction runs through the subalgebras ``H >= H^p >= H^{p^2} >= ... >= k``:
generators of ``S^p`` are lifted to p-th roots in ``S``, and the family is
completed by elements ``z`` with ``z^p = 0`` spanning a complement modulo
``(S+)^2``. The result is certified by :func:`verify_decomposition`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import AlgebraTable, frobenius_matrix, ideal_product, is_nilpotent_subspace
from .exactla import Field, Subspace, extend_basis, matmul, rank, solve, span
from .hopf import HopfTable, truncated_primitive_hopf

__all__ = [
    "NotLocalError",
    "DecompositionError",
    "TruncatedPolyDecomposition",
    "is_local",
    "decompose_local_hopf",
    "verify_decomposition",
    "frobenius_exponents",
]


class NotLocalError(ValueError):
    """The augmentation ideal is not nilpotent."""


class DecompositionError(ArithmeticError):
    """The constructed generators fail verification."""


@dataclass(frozen=True, eq=False)
class TruncatedPolyDecomposition:
    exponents: tuple
    generators: np.ndarray  # rows: images of T_i in H
    iso: np.ndarray  # dim H x dim H, canonical monomial basis -> H

    def to_json(self, F: Field) -> dict:
        return {
            "exponents": list(self.exponents),
            "generators": [[F.format_scalar(x) for x in g] for g in self.generators],
        }


def is_local(h: HopfTable) -> bool:
    """``H+`` is nilpotent."""
    aug = span(h.field, h.augmentation.inclusion.T, h.dim)
    return is_nilpotent_subspace(h.alg, aug)


def _plus_part(F: Field, S: Subspace, counit: np.ndarray, n: int) -> Subspace:
    """``S ∩ H+`` for a subalgebra ``S`` containing 1."""
    vals = matmul(F, S.basis, counit)
    # kernel of the counit restricted to S, in S's coordinates
    from .exactla import kernel_basis

    K = kernel_basis(F, vals.reshape(1, -1))
    if K.dim == 0:
        return span(F, F.zeros((0, n)), n)
    return span(F, matmul(F, K.basis, S.basis), n)


def _decompose(alg: AlgebraTable, counit: np.ndarray, Fr: np.ndarray, S: Subspace) -> list:
    """``[(generator, exponent), ...]`` for the subalgebra ``S``."""
    F = alg.field
    n = alg.dim
    if S.dim == 1:
        return []
    Sp = span(F, matmul(F, S.basis, Fr.T), n)  # image of x -> x^p on S
    if Sp.dim >= S.dim:
        raise NotLocalError("Frobenius is injective on a subalgebra of dim > 1: not local")
    inner = _decompose(alg, counit, Fr, Sp)
    FrS = matmul(F, Fr, S.basis.T)  # columns: (basis of S)^p
    ys, exps = [], []
    for w, e in inner:
        c = solve(F, FrS, w)
        if c is None:
            raise DecompositionError("a generator of S^p has no p-th root in S")
        ys.append(matmul(F, c, S.basis))
        exps.append(e + 1)
    Splus = _plus_part(F, S, counit, n)
    sq = ideal_product(alg, Splus, Splus)
    U0 = np.concatenate([np.array(ys, dtype=F.dtype).reshape(-1, n), sq.basis], axis=0)
    chosen = extend_basis(F, U0, Splus.basis)
    zs = []
    if chosen:
        U0sp = span(F, U0, n)
        FrU = matmul(F, Fr, U0sp.basis.T) if U0sp.dim else F.zeros((n, 0))
        for idx in chosen:
            v = Splus.basis[idx]
            target = F.normalize(-matmul(F, Fr, v))
            if U0sp.dim:
                c = solve(F, FrU, target)
                if c is None:
                    raise DecompositionError("no p-nilpotent representative in a coset")
                z = F.normalize(v + matmul(F, c, U0sp.basis))
            else:
                if not F.is_zero(target):
                    raise DecompositionError("no p-nilpotent representative in a coset")
                z = v
            zs.append(z)
    return list(zip(ys, exps)) + [(z, 1) for z in zs]


def _monomial_images(alg: AlgebraTable, gens: Sequence[np.ndarray], bounds: Sequence[int]) -> np.ndarray:
    """Columns ``prod g_i^{m_i}`` in product order (first generator slowest)."""
    F = alg.field
    powers = []
    for g, b in zip(gens, bounds):
        col = [alg.unit.copy()]
        for _ in range(1, b):
            col.append(alg.mul(col[-1], g))
        powers.append(col)
    cols = []
    for ms in itertools.product(*[range(b) for b in bounds]):
        v = alg.unit.copy()
        for pw, m in zip(powers, ms):
            if m:
                v = alg.mul(v, pw[m])
        cols.append(v)
    if not cols:
        return F.zeros((alg.dim, 0))
    return np.array(cols, dtype=F.dtype).T.copy()


def decompose_local_hopf(h: HopfTable) -> TruncatedPolyDecomposition:
    """``H ≅ k[T_1..T_n]/(T_i^{p^{e_i}})`` as algebras, for local ``H`` over F_p."""
    F = h.field
    if F.is_rational:
        raise NotLocalError("decomposition needs a field of positive characteristic")
    if not is_local(h):
        raise NotLocalError(f"{h.name or 'the Hopf algebra'} is not local")
    Fr = frobenius_matrix(h.alg)
    whole = span(F, F.eye(h.dim), h.dim)
    parts = _decompose(h.alg, h.counit, Fr, whole)
    gens = np.array([g for g, _ in parts], dtype=F.dtype).reshape(len(parts), h.dim)
    exps = tuple(int(e) for _, e in parts)
    iso = _monomial_images(h.alg, list(gens), [F.p**e for e in exps])
    d = TruncatedPolyDecomposition(exps, gens, iso)
    if not verify_decomposition(h, d):
        raise DecompositionError("constructed generators fail verification")
    return d


def verify_decomposition(h: HopfTable, d: TruncatedPolyDecomposition) -> bool:
    """Monomials in the generators form a basis and the induced map is an algebra map."""
    F = h.field
    p = F.p
    bounds = [p**e for e in d.exponents]
    size = 1
    for b in bounds:
        size *= b
    if size != h.dim or len(d.generators) != len(bounds):
        return False
    gens = list(d.generators)
    for g, b in zip(gens, bounds):
        if not F.is_zero(h.alg.power(g, b)):
            return False
    iso = _monomial_images(h.alg, gens, bounds)
    if not F.equal(iso, d.iso) or rank(F, iso) != h.dim:
        return False
    if not d.exponents:
        return F.equal(iso[:, 0], h.alg.unit)
    model = truncated_primitive_hopf(list(d.exponents), p).alg
    lhs = h.alg.products(iso, iso)  # [a, b, :] = iso(m_a) iso(m_b)
    rhs = np.tensordot(model.mult, iso, axes=(2, 1))  # iso(m_a m_b)
    if not F.equal(lhs, rhs):
        return False
    return F.equal(matmul(F, iso, model.unit), h.alg.unit)


def frobenius_exponents(h: HopfTable) -> tuple:
    """Exponent multiset read off from ranks of iterated Frobenius.

    ``rank F^m = prod_{e_i > m} p^{e_i - m}``, so ``d_m = log_p rank F^m`` gives
    ``#{e_i > m} = d_m - d_{m+1}``.
    """
    F = h.field
    p = F.p
    Fr = frobenius_matrix(h.alg)
    ds = []
    P = F.eye(h.dim)
    while True:
        r = rank(F, P)
        m = 0
        while p**m < r:
            m += 1
        if p**m != r:
            raise DecompositionError(f"rank {r} of an iterated Frobenius is not a power of {p}")
        ds.append(m)
        if r == 1:
            break
        P = matmul(F, Fr, P)
    ds.append(0)
    greater = [ds[m] - ds[m + 1] for m in range(len(ds) - 1)]  # #{e_i > m}
    counts = Counter()
    for m in range(len(greater)):
        nxt = greater[m + 1] if m + 1 < len(greater) else 0
        if greater[m] - nxt:
            counts[m + 1] = greater[m] - nxt
    return tuple(sorted(itertools.chain.from_iterable([e] * c for e, c in counts.items())))
