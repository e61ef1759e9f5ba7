"""Commutative Hopf algebras on top of :class:`~hopfsmooth.algebra.AlgebraTable`.

The coproduct is stored as a dense array ``coproduct[i, a, b]`` giving
``Delta(e_i) = sum coproduct[i, a, b] e_a (x) e_b``; the antipode as a matrix
whose column ``i`` is ``S(e_i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import comb, prod
from typing import Sequence

import numpy as np

from .algebra import (
    AlgebraTable,
    AxiomCheck,
    MonomialPresentation,
    _first_nonzero,
    build_from_presentation,
    tensor_product,
    trivial_algebra,
)
from .exactla import Field, inverse, matmul

__all__ = [
    "HopfTable",
    "AugmentationIdeal",
    "HopfEmbedding",
    "GroupData",
    "SubgroupData",
    "group_hopf",
    "truncated_primitive_hopf",
    "sample1_hopf",
    "etale_functions_hopf",
    "trivial_hopf",
    "tensor_hopf",
    "verify_hopf_axioms",
    "hopf_subalgebra_from_subgroup",
    "element_order",
]


@dataclass(frozen=True, eq=False)
class HopfTable:
    alg: AlgebraTable
    coproduct: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    name: str = ""

    def __post_init__(self):
        F = self.alg.field
        n = self.alg.dim
        D = F.normalize(np.array(self.coproduct, dtype=F.dtype))
        eps = F.normalize(np.array(self.counit, dtype=F.dtype).reshape(-1))
        S = F.normalize(np.array(self.antipode, dtype=F.dtype))
        if D.shape != (n, n, n) or eps.shape != (n,) or S.shape != (n, n):
            raise ValueError("coproduct/counit/antipode shapes do not match the algebra")
        for a in (D, eps, S):
            a.setflags(write=False)
        object.__setattr__(self, "coproduct", D)
        object.__setattr__(self, "counit", eps)
        object.__setattr__(self, "antipode", S)

    @property
    def field(self) -> Field:
        return self.alg.field

    @property
    def dim(self) -> int:
        return self.alg.dim

    def comultiply(self, x) -> np.ndarray:
        F = self.field
        return F.normalize(np.tensordot(np.asarray(x, dtype=F.dtype), self.coproduct, axes=(0, 0)))

    @cached_property
    def augmentation(self) -> "AugmentationIdeal":
        return AugmentationIdeal.of(self)


@dataclass(frozen=True, eq=False)
class AugmentationIdeal:
    """``H+ = ker(counit)`` with an inclusion and the splitting projection.

    The basis is ``e_i - counit(e_i) 1`` for every ``i`` except the first index
    where the unit has a nonzero coordinate.
    """

    inclusion: np.ndarray  # dim H x d
    projection: np.ndarray  # d x dim H
    skipped: int

    @classmethod
    def of(cls, h: HopfTable) -> "AugmentationIdeal":
        F = h.field
        n = h.dim
        u = h.alg.unit
        i0 = next(i for i in range(n) if u[i] != 0)
        cols = []
        for i in range(n):
            if i == i0:
                continue
            v = h.alg.basis_vector(i)
            cols.append(F.normalize(v - h.counit[i] * u))
        inc = np.array(cols, dtype=F.dtype).T.reshape(n, n - 1) if cols else F.zeros((n, 0))
        full = np.concatenate([inc, u.reshape(n, 1)], axis=1)
        proj = inverse(F, full)[: n - 1]
        inc.setflags(write=False)
        proj.setflags(write=False)
        return cls(inc, proj, i0)

    @property
    def dim(self) -> int:
        return self.inclusion.shape[1]


def augmentation_product(h: HopfTable) -> np.ndarray:
    """Structure constants of ``H+`` in its own basis, ``[a, b, k]``."""
    aug = h.augmentation
    F = h.field
    prods = h.alg.products(aug.inclusion, aug.inclusion)
    return F.normalize(np.tensordot(prods, aug.projection, axes=(2, 1)))


# -- constructors --------------------------------------------------------------

@dataclass(frozen=True)
class GroupData:
    """Finite abelian group ``Z/o_1 + ... + Z/o_q`` given by cyclic orders."""

    orders: tuple

    def __post_init__(self):
        o = tuple(int(x) for x in self.orders)
        if not o or any(x < 2 for x in o):
            raise ValueError("cyclic orders must be integers > 1")
        object.__setattr__(self, "orders", o)

    @property
    def q(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        return prod(self.orders)

    def elements(self) -> list:
        return list(itertools.product(*[range(o) for o in self.orders]))

    def index(self, g: Sequence[int]) -> int:
        i = 0
        for x, o in zip(g, self.orders):
            i = i * o + (int(x) % o)
        return i

    def reduce(self, g) -> tuple:
        return tuple(int(x) % o for x, o in zip(g, self.orders))


@dataclass(frozen=True)
class SubgroupData:
    """Rows ``y_i = sum_j c[i][j] x_j`` with ``0 <= c[i][j] < o_j``."""

    rows: tuple

    def __post_init__(self):
        r = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", r)

    @classmethod
    def parse(cls, text: str) -> "SubgroupData":
        rows = [[int(x) for x in part.split(",") if x.strip()] for part in text.split(";") if part.strip()]
        return cls(tuple(tuple(r) for r in rows))

    @property
    def r(self) -> int:
        return len(self.rows)


def element_order(g: Sequence[int], orders: Sequence[int]) -> int:
    """Order of ``g`` in ``Z/o_1 + ... + Z/o_q``."""
    from math import gcd

    result = 1
    for x, o in zip(g, orders):
        x %= o
        k = o // gcd(x, o)
        result = result * k // gcd(result, k)
    return result


def group_hopf(g: GroupData, F: Field) -> HopfTable:
    """Group algebra ``kG``: group-likes, ``S(g) = g^{-1}``."""
    if not isinstance(g, GroupData):
        g = GroupData(tuple(g))
    alg = build_from_presentation(MonomialPresentation("group_algebra", F, {"orders": list(g.orders)}))
    n = alg.dim
    D = F.zeros((n, n, n))
    S = F.zeros((n, n))
    one = F.scalar(1)
    for i, el in enumerate(g.elements()):
        D[i, i, i] = one
        S[g.index([-x for x in el]), i] = one
    eps = F.array([1] * n)
    name = f"k[{'+'.join(f'Z{o}' for o in g.orders)}]/{F.name}"
    return HopfTable(alg, D, eps, S, name)


def _primitive_monomial_hopf(alg: AlgebraTable, bounds: Sequence[int], F: Field, name: str) -> HopfTable:
    """Hopf structure with every generator primitive on a monomial basis.

    ``Delta(y^e) = sum_{k <= e} binom(e, k) y^k (x) y^{e-k}``, which stays inside
    the normal forms because ``k, e - k <= e`` componentwise.
    """
    basis = list(itertools.product(*[range(b) for b in bounds]))
    index = {m: i for i, m in enumerate(basis)}
    n = len(basis)
    D = F.zeros((n, n, n))
    S = F.zeros((n, n))
    eps = F.zeros(n)
    for i, e in enumerate(basis):
        for k in itertools.product(*[range(x + 1) for x in e]):
            c = prod(comb(x, y) for x, y in zip(e, k))
            rest = tuple(x - y for x, y in zip(e, k))
            D[i, index[k], index[rest]] = F.scalar(c)
        S[i, i] = F.scalar((-1) ** sum(e))
    eps[index[tuple([0] * len(bounds))]] = F.scalar(1)
    return HopfTable(alg, D, eps, S, name)


def truncated_primitive_hopf(exponents: Sequence[int], p: int) -> HopfTable:
    """``k[x_1..x_n]/(x_i^{p^{e_i}})`` with primitive generators."""
    F = Field(p)
    pres = MonomialPresentation("truncated_primitive", F, {"exponents": list(exponents)})
    alg = build_from_presentation(pres)
    return _primitive_monomial_hopf(alg, [p**e for e in exponents], F, f"trunc{list(exponents)}/F{p}")


def sample1_hopf(n: int, M: int, p: int) -> HopfTable:
    """Finite quotient ``k[y_1..y_n]/(y_i^{p^i} - y_1^p, y_1^{p^M})`` of the sample-1 algebra."""
    F = Field(p)
    pres = MonomialPresentation("sample1_truncated", F, {"n": n, "M": M})
    alg = build_from_presentation(pres)
    bounds = [p**M] + [p ** (i + 1) for i in range(1, n)]
    return _primitive_monomial_hopf(alg, bounds, F, f"sample1(n={n},M={M})/F{p}")


def etale_functions_hopf(g: GroupData, F: Field) -> HopfTable:
    """Function algebra ``k^G`` on idempotents ``e_g``; coproduct dual to the group law."""
    if not isinstance(g, GroupData):
        g = GroupData(tuple(g))
    els = g.elements()
    n = len(els)
    one = F.scalar(1)
    mult = F.zeros((n, n, n))
    for i in range(n):
        mult[i, i, i] = one
    unit = F.array([1] * n)
    labels = tuple("e(" + ",".join(map(str, el)) + ")" for el in els)
    alg = AlgebraTable(F, mult, unit, labels)
    D = F.zeros((n, n, n))
    S = F.zeros((n, n))
    eps = F.zeros(n)
    for a, x in enumerate(els):
        for b, y in enumerate(els):
            D[g.index([u + v for u, v in zip(x, y)]), a, b] = one
        S[g.index([-u for u in x]), a] = one
    eps[g.index([0] * g.q)] = one
    name = f"k^({'+'.join(f'Z{o}' for o in g.orders)})/{F.name}"
    return HopfTable(alg, D, eps, S, name)


def trivial_hopf(F: Field) -> HopfTable:
    alg = trivial_algebra(F)
    return HopfTable(alg, F.array([[[1]]]), F.array([1]), F.array([[1]]), f"k/{F.name}")


def tensor_hopf(h1: HopfTable, h2: HopfTable) -> HopfTable:
    if h1.field != h2.field:
        raise ValueError("tensor product of Hopf algebras over different fields")
    F = h1.field
    alg = tensor_product(h1.alg, h2.alg)
    n1, n2 = h1.dim, h2.dim
    D = np.multiply.outer(h1.coproduct, h2.coproduct)  # (i,a,c, j,b,d)
    D = np.transpose(D, (0, 3, 1, 4, 2, 5)).reshape(n1 * n2, n1 * n2, n1 * n2)
    eps = np.multiply.outer(h1.counit, h2.counit).reshape(-1)
    S = np.transpose(np.multiply.outer(h1.antipode, h2.antipode), (0, 2, 1, 3)).reshape(n1 * n2, n1 * n2)
    return HopfTable(alg, F.normalize(D), F.normalize(eps), F.normalize(S), f"{h1.name}(x){h2.name}")


# -- axioms ----------------------------------------------------------------------

def _kron(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return np.kron(A, B) if not F.is_rational else np.kron(A.astype(object), B.astype(object))


def verify_hopf_axioms(h: HopfTable) -> list:
    """One :class:`AxiomCheck` per axiom, each with the first failing basis tuple."""
    F = h.field
    n = h.dim
    M = h.alg.mult
    D = h.coproduct
    eps = h.counit
    S = h.antipode
    checks = list(h.alg.check_axioms())

    # (Delta (x) id) Delta  vs  (id (x) Delta) Delta, indexed [i, x, y, z]
    left = np.tensordot(D, D, axes=(1, 0))  # [i, b, x, y]
    left = np.transpose(left, (0, 2, 3, 1))
    right = np.tensordot(D, D, axes=(2, 0))  # [i, a, y, z]
    checks.append(AxiomCheck("coassociativity", *_first_nonzero(F, F.normalize(left - right), 1)))

    one = F.eye(n)
    lc = F.normalize(np.tensordot(D, eps, axes=(1, 0)) - one)  # (eps (x) id)
    rc = F.normalize(np.tensordot(D, eps, axes=(2, 0)) - one)
    ok1, w1 = _first_nonzero(F, lc, 1)
    ok2, w2 = _first_nonzero(F, rc, 1)
    checks.append(AxiomCheck("counit", ok1 and ok2, w1 if not ok1 else w2))

    # counit multiplicative
    lhs = np.tensordot(M, eps, axes=(2, 0))
    ok, w = _first_nonzero(F, F.normalize(lhs - np.multiply.outer(eps, eps)), 2)
    if ok and not F.equal(np.array([np.dot(eps, h.alg.unit)], dtype=F.dtype), F.array([1])):
        ok, w = False, ("unit",)
    checks.append(AxiomCheck("counit_multiplicative", ok, w))

    checks.append(AxiomCheck("bialgebra", *_check_coproduct_multiplicative(h)))

    # m (S (x) id) Delta = u eps = m (id (x) S) Delta
    target = F.normalize(np.multiply.outer(eps, h.alg.unit))  # [i, :]
    SD = np.tensordot(D, S, axes=(1, 1))  # [i, b, a'] : coefficient of S(e_a) expanded
    lhs = np.tensordot(SD, M, axes=([1, 2], [1, 0]))
    DS = np.tensordot(D, S, axes=(2, 1))  # [i, a, b']
    rhs = np.tensordot(DS, M, axes=([1, 2], [0, 1]))
    ok1, w1 = _first_nonzero(F, F.normalize(lhs - target), 1)
    ok2, w2 = _first_nonzero(F, F.normalize(rhs - target), 1)
    checks.append(AxiomCheck("antipode", ok1 and ok2, w1 if not ok1 else w2))
    return checks


def _check_coproduct_multiplicative(h: HopfTable) -> tuple:
    """``Delta(e_i e_j) = Delta(e_i) Delta(e_j)`` for all pairs, and ``Delta(1) = 1 (x) 1``."""
    F = h.field
    n = h.dim
    M = h.alg.mult
    D = h.coproduct
    Dflat = D.reshape(n, n * n)
    L = [M[a].T for a in range(n)]  # L[a][e, c] = M[a, c, e]
    unit_d = F.normalize(np.tensordot(h.alg.unit, D, axes=(0, 0)))
    if not F.equal(unit_d, np.multiply.outer(h.alg.unit, h.alg.unit)):
        return False, ("unit",)
    lhs_all = F.normalize(np.tensordot(M, Dflat, axes=(2, 0)))  # [i, j, (e f)]
    for i in range(n):
        X = D[i]
        op = F.zeros((n * n, n * n))
        nz = [(a, b) for a in range(n) for b in range(n) if X[a, b] != 0]
        for a, b in nz:
            op = op + X[a, b] * _kron(F, L[a], L[b])
        op = F.normalize(op)
        rhs = matmul(F, op, Dflat.T).T  # [j, (e f)]
        diff = F.normalize(lhs_all[i] - rhs)
        ok, w = _first_nonzero(F, diff, 1)
        if not ok:
            return False, (i, w[0])
    return True, None


def hopf_is_valid(h: HopfTable) -> bool:
    return all(c.ok for c in verify_hopf_axioms(h))


# -- subgroup embeddings ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HopfEmbedding:
    ambient: HopfTable
    sub: HopfTable
    injection: np.ndarray  # dim ambient x dim sub

    def check(self) -> list:
        """Exact identities ``i m = m (i (x) i)``, ``i u = u``, ``(i (x) i) Delta = Delta i``,
        ``eps i = eps`` and ``S i = i S``."""
        F = self.ambient.field
        A, B, J = self.ambient, self.sub, self.injection
        checks = []
        prodA = A.alg.products(J, J)  # [i, j, :]
        prodB = F.normalize(np.tensordot(B.alg.mult, J, axes=(2, 1)))
        checks.append(AxiomCheck("product", *_first_nonzero(F, F.normalize(prodA - prodB), 2)))
        checks.append(AxiomCheck("unit", F.equal(matmul(F, J, B.alg.unit), A.alg.unit)))
        dA = F.normalize(np.tensordot(J, A.coproduct, axes=(0, 0)))  # [j, a, b]
        dB = np.tensordot(B.coproduct, J, axes=(1, 1))  # [j, b', a]
        dB = F.normalize(np.tensordot(dB, J, axes=(1, 1)))  # [j, a, b]
        checks.append(AxiomCheck("coproduct", *_first_nonzero(F, F.normalize(dA - dB), 1)))
        checks.append(AxiomCheck("counit", F.equal(matmul(F, A.counit, J), B.counit)))
        checks.append(AxiomCheck("antipode", F.equal(matmul(F, A.antipode, J), matmul(F, J, B.antipode))))
        from .exactla import rank

        checks.append(AxiomCheck("injective", rank(F, J) == B.dim))
        return checks


def hopf_subalgebra_from_subgroup(g: GroupData, F: Field, s: SubgroupData) -> HopfEmbedding:
    """Group algebra of ``F = <y_1> + ... + <y_r>`` embedded in ``kG``.

    The rows must form independent cyclic generators; this is validated via
    :func:`hopfsmooth.cleft.normalize_subgroup_generators`.
    """
    from .cleft import normalize_subgroup_generators

    if not isinstance(g, GroupData):
        g = GroupData(tuple(g))
    normalize_subgroup_generators(g, s)  # raises on dependent rows
    ambient = group_hopf(g, F)
    rows = [g.reduce(r) for r in s.rows]
    sub_orders = GroupData(tuple(element_order(r, g.orders) for r in rows))
    sub = group_hopf(sub_orders, F)
    J = F.zeros((ambient.dim, sub.dim))
    for j, n in enumerate(sub_orders.elements()):
        el = [0] * g.q
        for coeff, row in zip(n, rows):
            for t in range(g.q):
                el[t] += coeff * row[t]
        J[g.index(el), j] = F.scalar(1)
    return HopfEmbedding(ambient, sub, J)


def identity_embedding(h: HopfTable) -> HopfEmbedding:
    return HopfEmbedding(h, h, h.field.eye(h.dim))


def compose_embeddings(outer: HopfEmbedding, inner: HopfEmbedding) -> HopfEmbedding:
    F = outer.ambient.field
    return HopfEmbedding(outer.ambient, inner.sub, matmul(F, outer.injection, inner.injection))
