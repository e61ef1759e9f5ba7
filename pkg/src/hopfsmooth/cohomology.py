"""Second Hochschild cohomology with trivial coefficients and the smoothness conditions.

Cochains live on the augmentation ideal ``H+`` (normalized complex):

* ``C^1 = Hom(H+, k)``, vectors of length ``d``;
* ``C^2`` is ``Hom(S^2(H+), k)`` (symmetric flavor, indexed by pairs ``i <= j``)
  or ``Hom(H+ (x) H+, k)`` (full flavor, index ``u*d + v``);
* ``C^3 = Hom((H+)^{(x)3}, k)``, index ``(a*d + b)*d + c``.

With trivial coefficients the differentials reduce to
``(d1 f)(a, b) = -f(ab)`` and ``(d2 g)(a, b, c) = g(a, bc) - g(ab, c)``.

Two independent routes compute the symmetric group: the cochain complex
(vectorized, streamed block by block) and the homology ``Ker d_1 / Im d_2`` of
the chain-level maps around ``S^2(H+)`` (built by explicit sparse loops).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional

import numpy as np

from .algebra import UnsupportedOperation, frobenius_matrix, nilradical
from .exactla import (
    Field,
    Subspace,
    echelon_from_chunks,
    extend_basis,
    kernel_basis,
    kernel_from_chunks,
    matmul,
    rank,
    solve,
    span,
)
from .hopf import HopfEmbedding, HopfTable, augmentation_product

__all__ = [
    "MAX_AUG_DIM",
    "SizeError",
    "FLAVORS",
    "CochainComplexSegment",
    "CohomologyResult",
    "MuData",
    "SmoothnessReport",
    "RestrictionResult",
    "cochain_segment",
    "second_cohomology",
    "sym_second_cohomology",
    "full_second_cohomology",
    "build_mu_data",
    "condition_d",
    "condition_e",
    "condition_f",
    "smoothness_report",
    "restriction_map",
    "pair_index",
    "pairs",
    "sym_to_table",
    "table_to_sym",
]

MAX_AUG_DIM = 40
FLAVORS = ("symmetric", "full")


class SizeError(ValueError):
    """The augmentation ideal is too large for the dense degree-3 cochain space."""


def pairs(d: int) -> list:
    return [(i, j) for i in range(d) for j in range(i, d)]


def pair_index(i: int, j: int, d: int) -> int:
    if i > j:
        i, j = j, i
    return i * d - i * (i - 1) // 2 + (j - i)


def sym_to_table(F: Field, vec, d: int) -> np.ndarray:
    """Symmetric cochain (pairs ``i <= j``) to its ``d x d`` table."""
    vec = np.asarray(vec, dtype=F.dtype).reshape(-1)
    T = F.zeros((d, d))
    for k, (i, j) in enumerate(pairs(d)):
        T[i, j] = vec[k]
        T[j, i] = vec[k]
    return T


def table_to_sym(F: Field, table: np.ndarray) -> np.ndarray:
    d = table.shape[0]
    return F.array([table[i, j] for i, j in pairs(d)]) if d else F.zeros(0)


def _check_size(d: int) -> None:
    if d > MAX_AUG_DIM:
        raise SizeError(f"dim H+ = {d} exceeds the supported bound {MAX_AUG_DIM}")


# -- cochain side -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CochainComplexSegment:
    """Degrees 1..3 of the normalized complex; ``d2`` is produced in row blocks."""

    field: Field
    flavor: str
    aug_product: np.ndarray  # [a, b, k] structure constants of H+

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        _check_size(self.d)

    @property
    def d(self) -> int:
        return self.aug_product.shape[0]

    @property
    def c1_dim(self) -> int:
        return self.d

    @property
    def c2_dim(self) -> int:
        d = self.d
        return d * (d + 1) // 2 if self.flavor == "symmetric" else d * d

    @property
    def c3_dim(self) -> int:
        return self.d**3

    @cached_property
    def d1(self) -> np.ndarray:
        """``C^1 -> C^2``, shape ``(c2_dim, c1_dim)``."""
        F, d, Mp = self.field, self.d, self.aug_product
        if self.flavor == "full":
            out = F.normalize(-Mp.reshape(d * d, d))
        else:
            idx = [i * d + j for i, j in pairs(d)]
            out = F.normalize(-Mp.reshape(d * d, d)[idx]) if idx else F.zeros((0, d))
        out.setflags(write=False)
        return out

    @cached_property
    def _sym_columns(self) -> tuple:
        d = self.d
        ps = pairs(d)
        first = np.array([i * d + j for i, j in ps], dtype=np.int64)
        second = np.array([j * d + i for i, j in ps], dtype=np.int64)
        offdiag = np.array([i != j for i, j in ps], dtype=bool)
        return first, second, offdiag

    def d2_block(self, a: int) -> np.ndarray:
        """Rows ``(a, b, c)`` of ``d2`` for fixed ``a``; shape ``(d*d, c2_dim)``."""
        F, d, Mp = self.field, self.d, self.aug_product
        blk = F.zeros((d, d, d, d))  # [b, c, u, v]
        blk[:, :, a, :] += Mp
        idx = np.arange(d)
        # rows (b, c) with v == c receive -M+[a, b, u]
        blk[:, idx, :, idx] -= np.broadcast_to(Mp[a], (d, d, d))
        full = blk.reshape(d * d, d * d)
        if self.flavor == "full":
            return F.normalize(full)
        first, second, offdiag = self._sym_columns
        sym = full[:, first].copy()
        sym[:, offdiag] = sym[:, offdiag] + full[:, second[offdiag]]
        return F.normalize(sym)

    def d2_blocks(self) -> Iterator[np.ndarray]:
        for a in range(self.d):
            yield self.d2_block(a)

    @property
    def d2(self) -> np.ndarray:
        """Dense ``C^2 -> C^3`` matrix, shape ``(c3_dim, c2_dim)``."""
        if self.d == 0:
            return self.field.zeros((0, self.c2_dim))
        return np.concatenate(list(self.d2_blocks()), axis=0)

    def is_complex(self) -> bool:
        """``d2 . d1 == 0``, checked block by block."""
        F = self.field
        return all(F.is_zero(matmul(F, blk, self.d1)) for blk in self.d2_blocks())


def cochain_segment(h: HopfTable, flavor: str = "symmetric") -> CochainComplexSegment:
    _check_size(h.augmentation.dim)
    return CochainComplexSegment(h.field, flavor, augmentation_product(h))


@dataclass(frozen=True, eq=False)
class CohomologyResult:
    flavor: str
    dim: int
    representatives: np.ndarray  # rows are C^2 vectors
    coboundary_space: Subspace
    cocycle_space: Subspace

    def tables(self) -> list:
        """Representatives as ``d x d`` bilinear tables on the H+ basis."""
        F = self.cocycle_space.field
        n = self.cocycle_space.ambient_dim
        if self.flavor == "full":
            d = int(round(n**0.5))
            return [np.asarray(r).reshape(d, d) for r in self.representatives]
        d = _sym_dim_to_d(n)
        return [sym_to_table(F, r, d) for r in self.representatives]

    def coordinates(self, cochain) -> Optional[np.ndarray]:
        """Coordinates of a cocycle's class on the representatives (``None`` if not a cocycle)."""
        F = self.cocycle_space.field
        v = F.normalize(np.asarray(cochain, dtype=F.dtype).reshape(-1))
        if not self.cocycle_space.contains(v):
            return None
        cols = [self.representatives, self.coboundary_space.basis]
        A = np.concatenate([c.reshape(-1, self.cocycle_space.ambient_dim) for c in cols], axis=0).T
        if A.shape[1] == 0:
            return F.zeros(0)
        x = solve(F, A, v)
        return x[: self.dim]

    def is_coboundary(self, cochain) -> bool:
        return self.coboundary_space.contains(cochain)


def _sym_dim_to_d(n: int) -> int:
    d = 0
    while d * (d + 1) // 2 < n:
        d += 1
    return d


def _cohomology_of(seg: CochainComplexSegment) -> CohomologyResult:
    F = seg.field
    n = seg.c2_dim
    if seg.d == 0:
        z = span(F, F.zeros((0, n)), n)
        return CohomologyResult(seg.flavor, 0, F.zeros((0, n)), z, z)
    cocycles, _ = kernel_from_chunks(F, n, seg.d2_blocks())
    cobound = span(F, seg.d1.T, n)
    chosen = extend_basis(F, cobound.basis, cocycles.basis)
    reps = np.array(cocycles.basis[chosen], dtype=F.dtype).reshape(len(chosen), n)
    reps.setflags(write=False)
    return CohomologyResult(seg.flavor, len(chosen), reps, cobound, cocycles)


def second_cohomology(h: HopfTable, flavor: str = "symmetric") -> CohomologyResult:
    return _cohomology_of(cochain_segment(h, flavor))


def sym_second_cohomology(h: HopfTable) -> CohomologyResult:
    """``H^2_s(H, k)``: symmetric normalized 2-cocycles modulo coboundaries."""
    return second_cohomology(h, "symmetric")


def full_second_cohomology(h: HopfTable) -> CohomologyResult:
    """``H^2(H, k)`` from all (not necessarily symmetric) normalized 2-cochains."""
    return second_cohomology(h, "full")


# -- chain side: S^2(H+) and mu ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class MuData:
    field: Field
    s2_basis: tuple  # unordered pairs (i <= j)
    delta1: np.ndarray  # d x s2
    delta2: np.ndarray  # s2 x d^3
    ker_delta1: Subspace
    image_delta2: Subspace
    ker_mu: np.ndarray  # rows: lifts in S^2(H+) of a basis of Ker mu

    @property
    def ker_mu_dim(self) -> int:
        return self.ker_mu.shape[0]

    def is_complex(self) -> bool:
        return self.field.is_zero(matmul(self.field, self.delta1, self.delta2))


def build_mu_data(h: HopfTable) -> MuData:
    """Chain-level maps ``(H+)^{(x)3} -> S^2(H+) -> H+`` and ``Ker mu`` as their homology.

    ``delta1`` sends the class of ``a.b`` to ``ab``; ``delta2`` sends ``a (x) b (x) c``
    to ``[a.(bc)] - [(ab).c]``. Squares ``x.x`` are independent basis vectors in
    every characteristic.
    """
    F = h.field
    Mp = augmentation_product(h)
    d = Mp.shape[0]
    _check_size(d)
    ps = tuple(pairs(d))
    s2 = len(ps)
    pidx = {pq: k for k, pq in enumerate(ps)}

    def pi(i, j):
        return pidx[(i, j) if i <= j else (j, i)]

    nz = {}
    for a in range(d):
        for b in range(d):
            nz[a, b] = [(k, Mp[a, b, k]) for k in range(d) if Mp[a, b, k] != 0]

    delta1 = F.zeros((d, s2))
    for col, (i, j) in enumerate(ps):
        for k, v in nz[i, j]:
            delta1[k, col] = v

    delta2 = F.zeros((s2, d**3))
    col = 0
    for a in range(d):
        for b in range(d):
            for c in range(d):
                for k, v in nz[b, c]:
                    delta2[pi(a, k), col] += v
                for k, v in nz[a, b]:
                    delta2[pi(k, c), col] -= v
                col += 1
    delta2 = F.normalize(delta2)

    ker1 = kernel_basis(F, delta1) if s2 else span(F, F.zeros((0, 0)), 0)
    R, piv = echelon_from_chunks(F, s2, _column_chunks(delta2, 4096))
    im2 = span(F, R, s2) if piv else span(F, F.zeros((0, s2)), s2)
    chosen = extend_basis(F, im2.basis, ker1.basis) if ker1.dim else []
    lifts = np.array(ker1.basis[chosen], dtype=F.dtype).reshape(len(chosen), s2)
    for arr in (delta1, delta2, lifts):
        arr.setflags(write=False)
    return MuData(F, ps, delta1, delta2, ker1, im2, lifts)


def _column_chunks(A: np.ndarray, size: int) -> Iterator[np.ndarray]:
    for start in range(0, A.shape[1], size):
        yield A[:, start : start + size].T


# -- conditions ---------------------------------------------------------------------

def condition_d(h: HopfTable, mu: Optional[MuData] = None) -> bool:
    """``mu_H : S^2_H(H+) -> H+`` is injective."""
    mu = mu if mu is not None else build_mu_data(h)
    return mu.ker_mu_dim == 0


def condition_e(h: HopfTable) -> bool:
    """Reducedness (geometric, since prime fields are perfect): ``Nil H = 0``."""
    return nilradical(h.alg).space.dim == 0


def condition_f(h: HopfTable) -> bool:
    """The Frobenius ``h -> h^p`` is injective. Only defined in characteristic p."""
    if h.field.is_rational:
        raise UnsupportedOperation("condition (f) needs positive characteristic")
    return rank(h.field, frobenius_matrix(h.alg)) == h.dim


@dataclass(frozen=True)
class SmoothnessReport:
    condition_d: bool
    condition_e: bool
    condition_f: Optional[bool]
    h2s_dim: int
    h2_full_dim: int
    ker_mu_dim: int
    derived_abc: Optional[bool]
    consistent: bool

    def to_json(self) -> dict:
        return {
            "condition_d": self.condition_d,
            "condition_e": self.condition_e,
            "condition_f": self.condition_f,
            "h2s_dim": self.h2s_dim,
            "h2_full_dim": self.h2_full_dim,
            "ker_mu_dim": self.ker_mu_dim,
            "consistent": self.consistent,
            "derived_abc": self.derived_abc,
        }


def smoothness_report(h: HopfTable, mu: Optional[MuData] = None) -> SmoothnessReport:
    """Decide (d), (e), (f) and (b'') and test that they agree.

    In characteristic p all four verdicts must coincide; over Q every verdict
    must be "smooth". The duality ``dim H^2_s = dim Ker mu`` is part of
    consistency, since the two numbers come from independent code paths.
    """
    mu = mu if mu is not None else build_mu_data(h)
    h2s = sym_second_cohomology(h).dim
    h2f = full_second_cohomology(h).dim
    d = mu.ker_mu_dim == 0
    e = condition_e(h)
    f = None if h.field.is_rational else condition_f(h)
    verdicts = [d, e, h2s == 0] + ([] if f is None else [f])
    consistent = len(set(verdicts)) == 1 and h2s == mu.ker_mu_dim
    if h.field.is_rational:
        consistent = consistent and all(verdicts)
    return SmoothnessReport(d, e, f, h2s, h2f, mu.ker_mu_dim, d if consistent else None, consistent)


# -- restriction ------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RestrictionResult:
    flavor: str
    matrix: np.ndarray  # dim H^2(sub) x dim H^2(ambient)
    rank: int
    source_dim: int
    target_dim: int
    aug_injection: np.ndarray  # sub H+ coordinates -> ambient H+ coordinates

    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dim


def _pullback(F: Field, vec, inj: np.ndarray, flavor: str) -> np.ndarray:
    dH, dJ = inj.shape
    if flavor == "full":
        T = np.asarray(vec, dtype=F.dtype).reshape(dH, dH)
    else:
        T = sym_to_table(F, vec, dH)
    P = matmul(F, matmul(F, inj.T, T), inj)
    return P.reshape(-1) if flavor == "full" else table_to_sym(F, P)


def aug_injection(e: HopfEmbedding) -> np.ndarray:
    """The injection restricted to augmentation ideals, in their chosen bases."""
    F = e.ambient.field
    return matmul(F, e.ambient.augmentation.projection, matmul(F, e.injection, e.sub.augmentation.inclusion))


def restriction_map(
    e: HopfEmbedding,
    flavor: str = "symmetric",
    source: Optional[CohomologyResult] = None,
    target: Optional[CohomologyResult] = None,
) -> RestrictionResult:
    """Matrix of ``res : H^2(H, k) -> H^2(J, k)`` on the representative bases."""
    F = e.ambient.field
    source = source if source is not None else second_cohomology(e.ambient, flavor)
    target = target if target is not None else second_cohomology(e.sub, flavor)
    inj = aug_injection(e)
    cols = []
    for rep in source.representatives:
        pulled = _pullback(F, rep, inj, flavor)
        coords = target.coordinates(pulled)
        if coords is None:
            raise ArithmeticError("restricted cochain is not a cocycle")
        cols.append(coords)
    Mx = np.array(cols, dtype=F.dtype).reshape(source.dim, target.dim).T if cols else F.zeros((target.dim, 0))
    Mx = F.normalize(Mx)
    r = rank(F, Mx) if Mx.size else 0
    return RestrictionResult(flavor, Mx, r, source.dim, target.dim, inj)
