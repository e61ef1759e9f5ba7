"""Cleft extensions over the dual numbers ``k[tau]`` and their 2-cocycles.

Carriers are flattened to ``k``-algebras of dimension ``2 dim H`` with basis
index ``t * dim H + h`` for ``tau^t (x) e_h`` (``t in {0, 1}``). For the
presented families ``A_a`` and ``A_c`` the same indexing arises because
``tau`` is the first (slowest) variable of the monomial basis.

A symmetric cocycle is stored as a table ``s`` on the ``H+`` basis; its
normalized extension to ``H`` is ``s~(u, v) = s(u - eps(u) 1, v - eps(v) 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .algebra import (
    AlgebraTable,
    AugmentedAlgebra,
    AxiomCheck,
    MonomialPresentation,
    _first_nonzero,
    build_from_presentation,
)
from .cohomology import cochain_segment, sym_to_table, table_to_sym

if TYPE_CHECKING:
    from .cohomology import RestrictionResult
from .exactla import Field, echelon, inverse, kernel_basis, matmul, rank, solve
from .hopf import (
    GroupData,
    HopfTable,
    SubgroupData,
    augmentation_product,
    element_order,
    group_hopf,
    sample1_hopf,
)

__all__ = [
    "CocycleError",
    "SubgroupError",
    "DualNumbers",
    "SymmetricCocycle",
    "CleftExtension",
    "NormalizedSubgroup",
    "RestrictionMatrixT",
    "crossed_product_table",
    "crossed_product_from_cocycle",
    "extract_cocycle",
    "cohomologous",
    "coboundary",
    "coboundary_isomorphism",
    "build_A_a",
    "build_A_c_truncated",
    "normalize_subgroup_generators",
    "restriction_matrix_T",
    "group_cocycle_parameters",
    "sample1_cocycle_parameters",
    "subgroup_order",
    "GroupRestrictionComparison",
    "compare_group_restriction",
]


class CocycleError(ValueError):
    """A table violates the symmetric 2-cocycle conditions."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SubgroupError(ValueError):
    """Subgroup rows do not form independent cyclic generators."""


@dataclass(frozen=True)
class DualNumbers:
    """``k[tau] = k[T]/(T^2)`` augmented by ``tau -> 0``."""

    field: Field

    @property
    def algebra(self) -> AlgebraTable:
        F = self.field
        mult = F.zeros((2, 2, 2))
        mult[0, 0, 0] = mult[0, 1, 1] = mult[1, 0, 1] = F.scalar(1)
        return AlgebraTable(F, mult, F.array([1, 0]), ("1", "tau"))

    @property
    def augmented(self) -> AugmentedAlgebra:
        return AugmentedAlgebra(self.algebra, self.field.array([1, 0]))


# -- cocycles -------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SymmetricCocycle:
    hopf: HopfTable
    table: np.ndarray  # d x d on the H+ basis

    def __post_init__(self):
        F = self.hopf.field
        d = self.hopf.augmentation.dim
        T = F.normalize(np.array(self.table, dtype=F.dtype).reshape(d, d))
        T.setflags(write=False)
        object.__setattr__(self, "table", T)

    @classmethod
    def from_vector(cls, h: HopfTable, vec) -> "SymmetricCocycle":
        return cls(h, sym_to_table(h.field, vec, h.augmentation.dim))

    @property
    def vector(self) -> np.ndarray:
        return table_to_sym(self.hopf.field, self.table)

    @property
    def extended(self) -> np.ndarray:
        """``s~`` on the full basis of ``H`` (``n x n``)."""
        F = self.hopf.field
        P = self.hopf.augmentation.projection
        return matmul(F, matmul(F, P.T, self.table), P)

    def evaluate(self, x, y):
        F = self.hopf.field
        P = self.hopf.augmentation.projection
        u = matmul(F, P, np.asarray(x, dtype=F.dtype))
        v = matmul(F, P, np.asarray(y, dtype=F.dtype))
        return F.scalar(matmul(F, u, matmul(F, self.table, v)))

    def check(self) -> list:
        """Symmetry and ``s(ab, c) = s(a, bc)`` on H+ basis triples, with witnesses."""
        F = self.hopf.field
        S = self.table
        checks = [AxiomCheck("symmetric", *_first_nonzero(F, F.normalize(S - S.T), 2))]
        Mp = augmentation_product(self.hopf)
        left = np.tensordot(Mp, S, axes=(2, 0))  # s(ab, c)  [a, b, c]
        right = np.tensordot(S, Mp, axes=(1, 2))  # s(a, bc)  [a, b, c]
        checks.append(AxiomCheck("cocycle", *_first_nonzero(F, F.normalize(left - right), 3)))
        return checks

    def is_valid(self) -> bool:
        return all(c.ok for c in self.check())

    def __add__(self, other: "SymmetricCocycle") -> "SymmetricCocycle":
        return SymmetricCocycle(self.hopf, self.hopf.field.normalize(self.table + other.table))

    def scale(self, lam) -> "SymmetricCocycle":
        F = self.hopf.field
        return SymmetricCocycle(self.hopf, F.normalize(self.table * F.scalar(lam)))

    def equals(self, other: "SymmetricCocycle") -> bool:
        return self.hopf.field.equal(self.table, other.table)


def coboundary(h: HopfTable, f) -> SymmetricCocycle:
    """``d^1 f`` for a functional ``f`` on H+: ``(a, b) -> -f(ab)``."""
    F = h.field
    Mp = augmentation_product(h)
    return SymmetricCocycle(h, F.normalize(-np.tensordot(Mp, np.asarray(f, dtype=F.dtype), axes=(2, 0))))


def cohomologous(h: HopfTable, s1: SymmetricCocycle, s2: SymmetricCocycle) -> tuple:
    """``(True, f)`` with ``s1 - s2 = d^1 f`` when solvable, else ``(False, None)``."""
    F = h.field
    seg = cochain_segment(h, "symmetric")
    diff = F.normalize(s1.vector - s2.vector)
    if seg.d == 0:
        return True, F.zeros(0)
    f = solve(F, seg.d1, diff)
    if f is None:
        return False, None
    return True, f


# -- cleft extensions ------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CleftExtension:
    hopf: HopfTable
    carrier: AugmentedAlgebra
    coaction: np.ndarray  # [X, Y, b]: rho(e_X) = sum coaction[X, Y, b] e_Y (x) e_b
    section: np.ndarray  # 2n x n, column h = phi(e_h)
    tau_action: np.ndarray  # 2n x 2n, multiplication by tau
    name: str = ""

    @property
    def dim(self) -> int:
        return self.carrier.alg.dim

    def verify(self) -> list:
        """Every structural requirement of an augmented cleft extension over ``k[tau]``."""
        h = self.hopf
        F = h.field
        A = self.carrier.alg
        n = h.dim
        N = A.dim
        R = self.coaction
        phi = self.section
        checks = list(A.check_axioms())
        checks.append(self.carrier.check())
        checks.append(AxiomCheck("dimension", N == 2 * n))
        # coaction: algebra map
        ok, w = _coaction_multiplicative(F, A, h.alg, R)
        unit_ok = F.equal(np.tensordot(A.unit, R, axes=(0, 0)), np.multiply.outer(A.unit, h.alg.unit))
        checks.append(AxiomCheck("coaction_multiplicative", ok and unit_ok, w if not ok else (None if unit_ok else ("unit",))))
        counital = F.normalize(np.tensordot(R, h.counit, axes=(2, 0)) - F.eye(N))
        checks.append(AxiomCheck("coaction_counital", *_first_nonzero(F, counital, 1)))
        left = np.tensordot(R, R, axes=(1, 0))  # [X, b, Y, b2] : (rho (x) id) rho
        left = np.transpose(left, (0, 2, 3, 1))  # [X, Y, b2, b]
        right = np.tensordot(R, h.coproduct, axes=(2, 0))  # [X, Y, b2, b]
        checks.append(AxiomCheck("coaction_coassociative", *_first_nonzero(F, F.normalize(left - right), 1)))
        # section
        rphi = np.tensordot(phi, R, axes=(0, 0))  # [h, Y, b]
        phid = np.tensordot(h.coproduct, phi, axes=(1, 1))  # [h, b, Y]
        phid = np.transpose(phid, (0, 2, 1))
        checks.append(AxiomCheck("section_colinear", *_first_nonzero(F, F.normalize(rphi - phid), 1)))
        checks.append(AxiomCheck("section_unit", F.equal(matmul(F, phi, h.alg.unit), A.unit)))
        checks.append(AxiomCheck("section_counit", F.equal(matmul(F, self.carrier.counit, phi), h.counit)))
        # tau
        tau = matmul(F, self.tau_action, A.unit)
        checks.append(AxiomCheck("tau_action", F.equal(A.left_mult_matrix(tau), self.tau_action)
                                 and F.is_zero(matmul(F, self.tau_action, self.tau_action))
                                 and F.scalar(np.dot(self.carrier.counit, tau)) == 0))
        # coinvariants = k[tau]
        co = F.normalize(R - np.multiply.outer(F.eye(N), h.alg.unit)).reshape(N, N * n).T
        coinv = kernel_basis(F, co)
        ktau = np.stack([A.unit, tau])
        same = coinv.dim == 2 and rank(F, np.concatenate([coinv.basis, ktau])) == 2
        checks.append(AxiomCheck("coinvariants", same, None if same else (coinv.dim,)))
        # x (x) h -> x phi(h) bijective
        images = [matmul(F, A.left_mult_matrix(x), phi) for x in (A.unit, tau)]
        gal = np.concatenate(images, axis=1)
        checks.append(AxiomCheck("normal_basis", rank(F, gal) == N))
        return checks

    def is_valid(self) -> bool:
        return all(c.ok for c in self.verify())


def _coaction_multiplicative(F: Field, A: AlgebraTable, H: AlgebraTable, R: np.ndarray) -> tuple:
    """``rho(e_X e_Y) = rho(e_X) rho(e_Y)`` on all basis pairs.

    For fixed ``X`` the right side is the operator
    ``sum R[X, a, b] L_a (x) L_b`` applied to every ``rho(e_Y)``.
    """
    N, n = A.dim, H.dim
    Rflat = R.reshape(N, N * n)
    lhs = F.normalize(np.tensordot(A.mult, Rflat, axes=(2, 0)))  # [X, Y, (a b)]
    LA = [A.mult[a].T for a in range(N)]
    LH = [H.mult[b].T for b in range(n)]
    for X in range(N):
        op = F.zeros((N * n, N * n))
        for a, b in zip(*np.nonzero(R[X] != 0)):
            op = op + R[X, a, b] * np.kron(LA[a], LH[b])
        rhs = matmul(F, F.normalize(op), Rflat.T).T
        ok, w = _first_nonzero(F, F.normalize(lhs[X] - rhs), 1)
        if not ok:
            return False, (X, w[0])
    return True, None


def _coaction_from_coproduct(h: HopfTable) -> np.ndarray:
    """``rho(tau^t (x) h) = (tau^t (x) h_1) (x) h_2``."""
    F = h.field
    n = h.dim
    R = F.zeros((2 * n, 2 * n, n))
    R[:n, :n, :] = h.coproduct
    R[n:, n:, :] = h.coproduct
    return R


def _cleft_from_carrier(h: HopfTable, carrier: AlgebraTable, name: str) -> CleftExtension:
    F = h.field
    n = h.dim
    eps = F.zeros(2 * n)
    eps[:n] = h.counit
    phi = F.zeros((2 * n, n))
    phi[:n, :n] = F.eye(n)
    tau = F.zeros(2 * n)
    tau[n:] = h.alg.unit
    return CleftExtension(
        h,
        AugmentedAlgebra(carrier, eps),
        _coaction_from_coproduct(h),
        phi,
        carrier.left_mult_matrix(tau),
        name,
    )


def crossed_product_table(h: HopfTable, s: SymmetricCocycle) -> AlgebraTable:
    """Carrier ``k[tau] (x) H`` with product
    ``(x (x) h)(y (x) l) = xy (x) hl + xy s~(h_1, l_1) tau (x) h_2 l_2``.

    No axioms are checked here; see :func:`crossed_product_from_cocycle`.
    """
    F = h.field
    n = h.dim
    D = h.coproduct
    St = s.extended
    M = h.alg.mult
    A1 = np.tensordot(D, St, axes=(1, 0))  # [i, b, c]
    A2 = np.tensordot(A1, D, axes=(2, 1))  # [i, b, j, d]
    Q = F.normalize(np.tensordot(A2, M, axes=([1, 3], [0, 1])))  # [i, j, k]
    mult = F.zeros((2 * n, 2 * n, 2 * n))
    mult[:n, :n, :n] = M
    mult[:n, :n, n:] = Q
    mult[:n, n:, n:] = M
    mult[n:, :n, n:] = M
    unit = F.zeros(2 * n)
    unit[:n] = h.alg.unit
    labels = tuple(h.alg.labels) + tuple(
        "tau" if l == "1" else f"tau*{l}" for l in h.alg.labels
    )
    return AlgebraTable(F, mult, unit, labels)


def crossed_product_from_cocycle(h: HopfTable, s: SymmetricCocycle) -> CleftExtension:
    """The cleft extension classified by ``s``; rejects non-cocycles with a witness."""
    for c in s.check():
        if not c.ok:
            raise CocycleError(f"table is not a symmetric 2-cocycle: {c.name} fails at {c.witness}", c.witness)
    carrier = crossed_product_table(h, s)
    for c in carrier.check_axioms():
        if not c.ok:
            raise CocycleError(f"crossed product fails {c.name} at {c.witness}", c.witness)
    return _cleft_from_carrier(h, carrier, f"crossed product over {h.name}")


def extract_cocycle(e: CleftExtension) -> SymmetricCocycle:
    """The unique ``s`` with ``phi(h) phi(l) = phi(hl) + s(h_1, l_1) tau phi(h_2 l_2)``.

    With ``u_hl = (tau phi)^{-1}(phi(h) phi(l) - phi(hl))`` one has
    ``s~(h, l) = eps(u_hl)``; the full identity is then checked on every pair.
    """
    h = e.hopf
    F = h.field
    n = h.dim
    A = e.carrier.alg
    phi = e.section
    tphi = matmul(F, e.tau_action, phi)  # 2n x n
    _, rows = echelon(F, tphi.T)
    if len(rows) != n:
        raise CocycleError("tau * phi is not injective; the carrier is not cleft over k[tau]")
    Tinv = inverse(F, tphi[rows])
    prods = A.products(phi, phi)  # [i, j, :]
    phim = np.tensordot(h.alg.mult, phi, axes=(2, 1))  # [i, j, :] phi(e_i e_j)
    W = F.normalize(prods - phim)
    U = F.normalize(np.tensordot(W[:, :, rows], Tinv, axes=(2, 1)))  # [i, j, :] in H
    recon = F.normalize(np.tensordot(U, tphi, axes=(2, 1)))
    ok, w = _first_nonzero(F, F.normalize(recon - W), 2)
    if not ok:
        raise CocycleError(f"phi(h)phi(l) - phi(hl) is not in tau*A for basis pair {w}", w)
    St = F.normalize(np.tensordot(U, h.counit, axes=(2, 0)))  # s~ on the basis of H
    inc = h.augmentation.inclusion
    s = SymmetricCocycle(h, matmul(F, matmul(F, inc.T, St), inc))
    # full identity with the normalized s
    D = h.coproduct
    A1 = np.tensordot(D, s.extended, axes=(1, 0))
    A2 = np.tensordot(A1, D, axes=(2, 1))
    expect = F.normalize(np.tensordot(A2, h.alg.mult, axes=([1, 3], [0, 1])))
    ok, w = _first_nonzero(F, F.normalize(expect - U), 2)
    if not ok:
        raise CocycleError(f"no cocycle solves the section identity; first failing pair {w}", w)
    return s


def coboundary_isomorphism(h: HopfTable, f) -> np.ndarray:
    """Matrix of ``x (x) h -> x (1 - f(h_1) tau) (x) h_2`` from the trivial
    crossed product onto the one built from ``d^1 f``."""
    F = h.field
    n = h.dim
    ft = matmul(F, np.asarray(f, dtype=F.dtype), h.augmentation.projection)  # f~ on H
    corr = F.normalize(-np.tensordot(h.coproduct, ft, axes=(1, 0)))  # [h, b]
    Psi = F.eye(2 * n)
    Psi[n:, :n] = F.normalize(Psi[n:, :n] + corr.T)
    return Psi


# -- the presented families ----------------------------------------------------------------------

def build_A_a(g: GroupData, a: Sequence, p: int) -> CleftExtension:
    """``A_a = k[tau][z_1..z_q]/(z_i^{o(x_i)} - 1 - a_i tau)`` with ``rho(z_i) = z_i (x) x_i``."""
    if not isinstance(g, GroupData):
        g = GroupData(tuple(g))
    F = Field(p)
    h = group_hopf(g, F)
    base = MonomialPresentation("group_algebra", F, {"orders": list(g.orders)})
    pres = MonomialPresentation("dual_number_extension", F, {"base": base, "a": [F.scalar(x) for x in a]})
    carrier = build_from_presentation(pres)
    return _cleft_from_carrier(h, carrier, f"A_a{tuple(int(x) for x in a)} over {h.name}")


def build_A_c_truncated(n: int, M: int, p: int, c: Sequence) -> CleftExtension:
    """Truncated ``A_c``: ``z_i^{p^i} = z_{i+1}^{p^{i+1}} + c_i tau`` and ``z_1^{p^M} = 0``,
    with ``rho(z_i) = z_i (x) 1 + 1 (x) y_i``."""
    F = Field(p)
    h = sample1_hopf(n, M, p)
    base = MonomialPresentation("sample1_truncated", F, {"n": n, "M": M})
    pres = MonomialPresentation("dual_number_extension", F, {"base": base, "c": [F.scalar(x) for x in c]})
    carrier = build_from_presentation(pres)
    return _cleft_from_carrier(h, carrier, f"A_c{tuple(int(x) for x in c)} over {h.name}")


def group_cocycle_parameters(h: HopfTable, g: GroupData, s: SymmetricCocycle, generators=None) -> np.ndarray:
    """``b_i = sum_{t=1}^{o-1} s~(y_i, y_i^t)`` for group elements ``y_i``.

    For ``A_a`` this reads off ``z_i^{o} = 1 + b_i tau``; it depends only on the
    class of ``s`` because ``o(y_i)`` is divisible by ``p``. ``generators``
    defaults to the standard cyclic generators ``x_i``.
    """
    F = h.field
    St = s.extended
    if generators is None:
        generators = [tuple(int(i == j) for j in range(g.q)) for i in range(g.q)]
    out = []
    for y in generators:
        y = g.reduce(y)
        o = element_order(y, g.orders)
        iy = g.index(y)
        acc = F.scalar(0)
        for t in range(1, o):
            acc = acc + St[iy, g.index([t * v for v in y])]
        out.append(F.scalar(acc))
    return F.array(out) if out else F.zeros(0)


def sample1_cocycle_parameters(h: HopfTable, s: SymmetricCocycle, n: int) -> tuple:
    """Read ``c`` off a cocycle on the sample-1 truncation ``H(n, M)``.

    Returns ``(c, violations)`` with ``c_i = s(y_i, y_i^{p^i-1}) - s(y_{i+1}, y_{i+1}^{p^{i+1}-1})``
    and ``violations`` listing the pairs ``(i, r)``, ``r < p^i - 1``, where
    ``s(y_i, y_i^r)`` is non-zero.
    """
    F = h.field
    p = F.p
    gens = []
    for i in range(1, n + 1):
        try:
            gens.append(h.alg.basis_vector(h.alg.labels.index(f"y{i}")))
        except ValueError as exc:
            raise ValueError(f"no generator y{i} in {h.name or 'the Hopf algebra'}") from exc
    tops, violations = [], []
    for i, y in enumerate(gens, start=1):
        for r in range(1, p**i - 1):
            if s.evaluate(y, h.alg.power(y, r)) != 0:
                violations.append((i, r))
        tops.append(s.evaluate(y, h.alg.power(y, p**i - 1)))
    c = [F.scalar(tops[i] - tops[i + 1]) for i in range(n - 1)]
    return (F.array(c) if c else F.zeros(0)), violations


# -- subgroup normalization ----------------------------------------------------------------------

def subgroup_order(g: GroupData, rows) -> int:
    """Order of the subgroup generated by ``rows`` (breadth-first closure)."""
    gens = [g.reduce(r) for r in rows]
    zero = tuple(0 for _ in g.orders)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for y in gens:
                z = g.reduce([u + v for u, v in zip(x, y)])
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return len(seen)


def _prime_of(orders) -> int:
    ps = set()
    for o in orders:
        q = 2
        while o > 1:
            if o % q == 0:
                ps.add(q)
                o //= q
            else:
                q += 1
    if len(ps) != 1:
        raise SubgroupError("normalization needs a p-group: all orders must be powers of one prime")
    return ps.pop()


@dataclass(frozen=True)
class NormalizedSubgroup:
    """Normalized rows in permuted coordinates: column ``k`` is ``x_{perm[k]}``."""

    group: GroupData  # orders permuted
    sub: SubgroupData
    perm: tuple

    @property
    def orders_y(self) -> tuple:
        return tuple(element_order(r, self.group.orders) for r in self.sub.rows)


def normalize_subgroup_generators(g: GroupData, s: SubgroupData) -> NormalizedSubgroup:
    """Re-choose generators so that ``c_ij = 0`` for ``i > j``, ``o(y_i) = o(c_ii x_i)``,
    ``o(y_1) >= ... >= o(y_r)`` and ``c_ii = o(x_i)/o(y_i)``."""
    if not isinstance(g, GroupData):
        g = GroupData(tuple(g))
    orders = list(g.orders)
    q = len(orders)
    if any(len(r) != q for r in s.rows):
        raise SubgroupError(f"each subgroup row needs {q} entries")
    if s.r == 0:
        raise SubgroupError("the subgroup needs at least one generator")
    for r in s.rows:
        if any(not (0 <= c < o) for c, o in zip(r, orders)):
            raise SubgroupError(f"row {list(r)} has entries outside 0 <= c_ij < o(x_j)")
    rows = [list(g.reduce(r)) for r in s.rows]
    if any(all(v == 0 for v in r) for r in rows):
        raise SubgroupError("generators must be non-zero")
    ords = [element_order(r, orders) for r in rows]
    size = subgroup_order(g, rows)
    if size != prod(ords):
        raise SubgroupError(
            f"rows are not independent cyclic generators: they generate {size} elements, "
            f"but the orders multiply to {prod(ords)}"
        )
    _prime_of(orders)

    done_rows = []
    perm = []
    free_cols = list(range(q))
    active = rows
    while active:
        ords = [element_order(r, orders) for r in active]
        m = max(ords)
        ip = ords.index(m)
        piv = active[ip]
        j = next(c for c in free_cols if orders[c] // gcd(piv[c], orders[c]) == m)
        step = orders[j] // m
        m1 = piv[j] // step
        ell = pow(m1, -1, orders[j])
        piv = [(ell * v) % o for v, o in zip(piv, orders)]
        rest = []
        for k, r in enumerate(active):
            if k == ip:
                continue
            if r[j] % step:
                raise SubgroupError("unexpected order pattern while normalizing")
            lam = r[j] // step
            r = [(v - lam * w) % o for v, w, o in zip(r, piv, orders)]
            if any(r):
                rest.append(r)
        done_rows.append(piv)
        perm.append(j)
        free_cols.remove(j)
        active = rest
    if len(done_rows) != s.r:
        raise SubgroupError("rows are not independent cyclic generators")
    perm_full = tuple(perm + free_cols)
    new_orders = tuple(orders[c] for c in perm_full)
    new_rows = tuple(tuple(r[c] for c in perm_full) for r in done_rows)
    out = NormalizedSubgroup(GroupData(new_orders), SubgroupData(new_rows), perm_full)
    if prod(out.orders_y) != size:
        raise SubgroupError("normalization changed the subgroup")
    return out


@dataclass(frozen=True)
class RestrictionMatrixT:
    t: tuple  # r x q integer rows
    normalized: NormalizedSubgroup

    def mod(self, p: int) -> np.ndarray:
        return np.array(self.t, dtype=np.int64).reshape(len(self.t), -1) % p


def restriction_matrix_T(norm: NormalizedSubgroup) -> RestrictionMatrixT:
    """``t_ij = c_ij o(y_i) / o(x_j)`` for ``i <= j``, else 0."""
    orders = norm.group.orders
    rows = norm.sub.rows
    r, q = len(rows), len(orders)
    oy = norm.orders_y
    for i in range(r):
        if any(rows[i][j] for j in range(min(i, q))):
            raise SubgroupError("input is not normalized: nonzero entry below the diagonal")
        if rows[i][i] * oy[i] != orders[i]:
            raise SubgroupError("input is not normalized: c_ii != o(x_i)/o(y_i)")
    t = []
    for i in range(r):
        row = []
        for j in range(q):
            if i <= j:
                num = rows[i][j] * oy[i]
                if num % orders[j]:
                    raise SubgroupError("non-integral T entry")
                row.append(num // orders[j])
            else:
                row.append(0)
        t.append(tuple(row))
    return RestrictionMatrixT(tuple(t), norm)


@dataclass(frozen=True, eq=False)
class GroupRestrictionComparison:
    """Cohomological restriction ``H^2_s(kG) -> H^2_s(kF)`` next to the matrix ``T``.

    ``a`` holds the parameters ``a_k`` (at ``x_{perm[k]}``) of each source
    representative as columns; ``b`` the parameters of the restricted classes at
    the normalized generators ``y_i``. The two routes agree when ``b = T a``.
    """

    normalized: NormalizedSubgroup
    T: RestrictionMatrixT
    restriction: "RestrictionResult"
    a: np.ndarray  # q x source_dim
    b: np.ndarray  # r x source_dim
    p: int

    @property
    def T_rank(self) -> int:
        M = self.T.mod(self.p)
        return rank(Field(self.p), M) if M.size else 0

    @property
    def agree(self) -> bool:
        F = Field(self.p)
        return F.equal(self.b, matmul(F, self.T.mod(self.p), self.a))


def _sub_coordinates(g: GroupData, rows: Sequence, sub_group: GroupData, target) -> tuple:
    """Coordinates of ``target`` in the cyclic decomposition given by ``rows``."""
    target = g.reduce(target)
    for n in sub_group.elements():
        el = [sum(c * r[t] for c, r in zip(n, rows)) for t in range(g.q)]
        if g.reduce(el) == target:
            return tuple(n)
    raise SubgroupError(f"{list(target)} is not in the subgroup")


def compare_group_restriction(g: GroupData, F: Field, s: SubgroupData) -> GroupRestrictionComparison:
    """Restriction on ``H^2_s`` computed from the cochain complex and from ``T``."""
    from .cohomology import restriction_map, second_cohomology
    from .hopf import hopf_subalgebra_from_subgroup

    if not isinstance(g, GroupData):
        g = GroupData(tuple(g))
    if F.is_rational:
        raise SubgroupError("the matrix T compares parameters over F_p; use a prime field")
    norm = normalize_subgroup_generators(g, s)
    T = restriction_matrix_T(norm)
    emb = hopf_subalgebra_from_subgroup(g, F, s)
    source = second_cohomology(emb.ambient, "symmetric")
    target = second_cohomology(emb.sub, "symmetric")
    res = restriction_map(emb, "symmetric", source, target)

    x_gens = [tuple(int(t == norm.perm[k]) for t in range(g.q)) for k in range(g.q)]
    rows = [g.reduce(r) for r in s.rows]
    sub_group = GroupData(tuple(element_order(r, g.orders) for r in rows))
    inv = [0] * g.q
    for k, c in enumerate(norm.perm):
        inv[c] = k
    y_gens = []
    for yr in norm.sub.rows:
        orig = [yr[inv[c]] for c in range(g.q)]  # back to the original coordinates
        y_gens.append(_sub_coordinates(g, rows, sub_group, orig))

    a_cols, b_cols = [], []
    for k, rep in enumerate(source.representatives):
        a_cols.append(group_cocycle_parameters(emb.ambient, g, SymmetricCocycle.from_vector(emb.ambient, rep), x_gens))
        image = F.zeros(target.representatives.shape[1])
        for ell in range(target.dim):
            image = F.normalize(image + res.matrix[ell, k] * target.representatives[ell])
        sb = SymmetricCocycle.from_vector(emb.sub, image)
        b_cols.append(group_cocycle_parameters(emb.sub, sub_group, sb, y_gens))
    a = np.array(a_cols, dtype=F.dtype).reshape(source.dim, g.q).T.copy()
    b = np.array(b_cols, dtype=F.dtype).reshape(source.dim, len(y_gens)).T.copy()
    return GroupRestrictionComparison(norm, T, res, a, b, F.p)
