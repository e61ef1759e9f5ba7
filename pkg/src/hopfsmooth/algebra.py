"""Finite-dimensional commutative algebras as structure-constant tables.

An :class:`AlgebraTable` stores ``mult[i, j, k]``, the coefficient of ``e_k`` in
``e_i e_j``.  Tables are built from monomial presentations by normal-form
rewriting (:func:`build_from_presentation`); the resulting table is then
checked exhaustively for associativity, which is how a bad rule set gets
caught.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .exactla import Field, Subspace, kernel_basis, matmul, span

__all__ = [
    "AlgebraTable",
    "AugmentedAlgebra",
    "Ideal",
    "MonomialPresentation",
    "RewriteSystem",
    "PresentationError",
    "UnsupportedOperation",
    "build_from_presentation",
    "nilradical",
    "frobenius_matrix",
    "power_map_matrix",
    "quotient_by_ideal",
    "tensor_product",
    "ideal_power",
    "ideal_product",
]


class PresentationError(ValueError):
    """A presentation is malformed, non-terminating or non-confluent."""


class UnsupportedOperation(ValueError):
    """The operation is not defined over the given field."""


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class AxiomCheck:
    name: str
    ok: bool
    witness: Optional[tuple] = None


@dataclass(frozen=True, eq=False)
class AlgebraTable:
    """Commutative unital algebra on the basis ``e_0 .. e_{dim-1}``."""

    field: Field
    mult: np.ndarray
    unit: np.ndarray
    labels: tuple = ()

    def __post_init__(self):
        F = self.field
        mult = F.normalize(np.array(self.mult, dtype=F.dtype))
        n = mult.shape[0]
        if mult.shape != (n, n, n) or n == 0:
            raise ValueError(f"structure constants must have shape (n, n, n), got {mult.shape}")
        unit = F.normalize(np.array(self.unit, dtype=F.dtype).reshape(-1))
        if unit.shape != (n,):
            raise ValueError("unit vector has the wrong length")
        labels = tuple(self.labels) if self.labels else tuple(f"e{i}" for i in range(n))
        if len(labels) != n:
            raise ValueError("need one label per basis element")
        object.__setattr__(self, "mult", _freeze(mult))
        object.__setattr__(self, "unit", _freeze(unit))
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = self.field.scalar(1)
        return v

    def vector(self, coords) -> np.ndarray:
        return self.field.array(coords).reshape(self.dim)

    def mul(self, x, y) -> np.ndarray:
        F = self.field
        x = np.asarray(x, dtype=F.dtype)
        y = np.asarray(y, dtype=F.dtype)
        # (x_i y_j mult[i, j, :])
        t = np.tensordot(x, self.mult, axes=(0, 0))
        return F.normalize(np.tensordot(y, t, axes=(0, 0)))

    def power(self, x, k: int) -> np.ndarray:
        result = self.unit.copy()
        base = np.asarray(x, dtype=self.field.dtype)
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def left_mult_matrix(self, x) -> np.ndarray:
        """Matrix of ``y -> x y`` (column j is ``x e_j``)."""
        F = self.field
        t = np.tensordot(np.asarray(x, dtype=F.dtype), self.mult, axes=(0, 0))
        return F.normalize(t.T.copy())

    def products(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """All products ``X[:, i] * Y[:, j]`` as an array indexed ``[i, j, :]``."""
        F = self.field
        t = np.tensordot(np.asarray(X, dtype=F.dtype), self.mult, axes=(0, 0))  # (i, b, k)
        t = np.tensordot(t, np.asarray(Y, dtype=F.dtype), axes=(1, 0))  # (i, k, j)
        return F.normalize(np.transpose(t, (0, 2, 1)))

    # -- axioms ------------------------------------------------------------
    def check_axioms(self) -> list:
        F = self.field
        M = self.mult
        n = self.dim
        checks = []
        diff = F.normalize(M - np.transpose(M, (1, 0, 2)))
        checks.append(AxiomCheck("commutativity", *_first_nonzero(F, diff, 2)))
        left = F.normalize(np.tensordot(M, M, axes=(2, 0)))  # (e_i e_j) e_k -> [i,j,k,:]
        right = F.normalize(np.transpose(np.tensordot(M, M, axes=(2, 1)), (2, 0, 1, 3)))
        # right[i, j, k, :] = e_i (e_j e_k)
        checks.append(AxiomCheck("associativity", *_first_nonzero(F, F.normalize(left - right), 3)))
        U = self.left_mult_matrix(self.unit)
        checks.append(AxiomCheck("unitality", *_first_nonzero(F, F.normalize(U - F.eye(n)).T, 1)))
        return checks

    def is_valid(self) -> bool:
        return all(c.ok for c in self.check_axioms())


def _first_nonzero(F: Field, arr: np.ndarray, nidx: int) -> tuple:
    """``(ok, witness)`` where ``witness`` indexes the first nonzero slice."""
    a = np.asarray(arr)
    if F.is_rational:
        flat = [i for i, v in enumerate(a.reshape(-1)) if v != 0]
        if not flat:
            return True, None
        idx = np.unravel_index(flat[0], a.shape)
    else:
        nz = np.argwhere(a != 0)
        if nz.size == 0:
            return True, None
        idx = nz[0]
    return False, tuple(int(i) for i in idx[:nidx])


@dataclass(frozen=True, eq=False)
class AugmentedAlgebra:
    """An algebra together with an algebra map to the base field."""

    alg: AlgebraTable
    counit: np.ndarray

    def __post_init__(self):
        F = self.alg.field
        c = F.normalize(np.array(self.counit, dtype=F.dtype).reshape(-1))
        object.__setattr__(self, "counit", _freeze(c))

    def check(self) -> AxiomCheck:
        F = self.alg.field
        eps = self.counit
        if not F.equal(np.array([np.dot(eps, self.alg.unit)], dtype=F.dtype), np.array([F.scalar(1)], dtype=F.dtype)):
            return AxiomCheck("counit", False, ("unit",))
        lhs = F.normalize(np.tensordot(self.alg.mult, eps, axes=(2, 0)))
        rhs = F.normalize(np.multiply.outer(eps, eps))
        ok, w = _first_nonzero(F, F.normalize(lhs - rhs), 2)
        return AxiomCheck("counit", ok, w)


@dataclass(frozen=True, eq=False)
class Ideal:
    alg: AlgebraTable
    space: Subspace

    def check(self) -> AxiomCheck:
        A = self.alg
        F = A.field
        if self.space.dim == 0:
            return AxiomCheck("ideal", True)
        prods = A.products(F.eye(A.dim), self.space.basis.T)
        for i in range(A.dim):
            for j in range(self.space.dim):
                if not self.space.contains(prods[i, j]):
                    return AxiomCheck("ideal", False, (i, j))
        return AxiomCheck("ideal", True)

    @property
    def dim(self) -> int:
        return self.space.dim


# -- monomial presentations ---------------------------------------------------

Poly = dict  # exponent tuple -> scalar


class RewriteSystem:
    """Commutative monomial rewriting with one rule per variable.

    Each variable ``v`` carries a rule ``x_v^bound[v] -> replacement[v]``.  The
    normal forms are the monomials with every exponent below its bound.
    """

    def __init__(self, F: Field, names: Sequence[str], bounds: Sequence[int], replacements: Sequence[Poly]):
        if not (len(names) == len(bounds) == len(replacements)):
            raise PresentationError("one bound and one rule per variable required")
        if any(b < 1 for b in bounds):
            raise PresentationError("rule exponents must be positive")
        self.field = F
        self.names = tuple(names)
        self.bounds = tuple(int(b) for b in bounds)
        self.rules = [
            {tuple(m): F.scalar(c) for m, c in rep.items() if F.scalar(c) != 0} for rep in replacements
        ]
        self.budget = 10 * sum(self.bounds)

    @property
    def nvars(self) -> int:
        return len(self.bounds)

    def basis(self) -> list:
        return list(itertools.product(*[range(b) for b in self.bounds]))

    def label(self, mono) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def normal_form(self, poly: Poly) -> Poly:
        F = self.field
        out: dict = {}
        stack = list(poly.items())
        steps = 0
        while stack:
            mono, c = stack.pop()
            if c == 0:
                continue
            v = next((i for i, e in enumerate(mono) if e >= self.bounds[i]), None)
            if v is None:
                out[mono] = F.scalar(out.get(mono, 0) + c)
                continue
            steps += 1
            if steps > self.budget:
                raise PresentationError(f"rewriting exceeded {self.budget} steps")
            rest = list(mono)
            rest[v] -= self.bounds[v]
            for rmono, rc in self.rules[v].items():
                new = tuple(a + b for a, b in zip(rest, rmono))
                stack.append((new, F.scalar(c * rc)))
        return {m: c for m, c in out.items() if c != 0}

    def table(self, check: bool = True) -> AlgebraTable:
        F = self.field
        basis = self.basis()
        index = {m: i for i, m in enumerate(basis)}
        n = len(basis)
        mult = F.zeros((n, n, n))
        for i, a in enumerate(basis):
            for j in range(i, n):
                b = basis[j]
                prod = tuple(x + y for x, y in zip(a, b))
                for m, c in self.normal_form({prod: F.scalar(1)}).items():
                    mult[i, j, index[m]] = c
                    mult[j, i, index[m]] = c
        unit = F.zeros(n)
        unit[index[tuple([0] * self.nvars)]] = F.scalar(1)
        alg = AlgebraTable(F, mult, unit, tuple(self.label(m) for m in basis))
        if check:
            for c in alg.check_axioms():
                if not c.ok:
                    raise PresentationError(f"rules are not confluent: {c.name} fails at {c.witness}")
        return alg


def _unit_mono(nvars: int) -> tuple:
    return tuple([0] * nvars)


def _var_power(nvars: int, v: int, e: int) -> tuple:
    m = [0] * nvars
    m[v] = e
    return tuple(m)


@dataclass(frozen=True)
class MonomialPresentation:
    """Constructor data for the supported algebra families.

    ``kind`` is one of ``group_algebra`` (``orders``), ``truncated_primitive``
    (``exponents``), ``sample1_truncated`` (``n``, ``M``) or
    ``dual_number_extension`` (``base`` plus ``a`` for group bases or ``c``
    for sample-1 bases).
    """

    kind: str
    field: Field
    params: dict = field(default_factory=dict)

    KINDS = ("group_algebra", "truncated_primitive", "sample1_truncated", "dual_number_extension")

    def validate(self) -> None:
        F = self.field
        k = self.kind
        P = self.params
        if k not in self.KINDS:
            raise PresentationError(f"unknown presentation kind {k!r}")
        if k == "group_algebra":
            orders = list(P.get("orders", []))
            if not orders or any(int(o) < 2 for o in orders):
                raise PresentationError("group orders must be integers > 1")
        elif k == "truncated_primitive":
            if F.is_rational:
                raise PresentationError("truncated primitive algebras need a prime field")
            ex = list(P.get("exponents", []))
            if not ex or any(int(e) < 1 for e in ex):
                raise PresentationError("exponents must be >= 1")
        elif k == "sample1_truncated":
            if F.is_rational:
                raise PresentationError("sample-1 algebras need a prime field")
            if int(P.get("n", 0)) < 1 or int(P.get("M", 0)) < 1:
                raise PresentationError("need n >= 1 and M >= 1")
        else:
            base = P.get("base")
            if not isinstance(base, MonomialPresentation) or base.kind not in ("group_algebra", "sample1_truncated"):
                raise PresentationError("dual-number extensions need a group_algebra or sample1_truncated base")
            if base.field != F:
                raise PresentationError("base presentation over a different field")
            base.validate()
            if base.kind == "group_algebra":
                if len(P.get("a", [])) != len(base.params["orders"]):
                    raise PresentationError("parameter vector a must have one entry per cyclic factor")
            else:
                n = int(base.params["n"])
                if n < 2 or len(P.get("c", [])) != n - 1:
                    raise PresentationError("parameter vector c must have length n - 1 with n >= 2")

    def rewrite_system(self) -> RewriteSystem:
        self.validate()
        F = self.field
        P = self.params
        one = F.scalar(1)
        if self.kind == "group_algebra":
            orders = [int(o) for o in P["orders"]]
            q = len(orders)
            names = [f"g{i + 1}" for i in range(q)] if q > 1 else ["g"]
            return RewriteSystem(F, names, orders, [{_unit_mono(q): one} for _ in orders])
        if self.kind == "truncated_primitive":
            p = F.p
            ex = [int(e) for e in P["exponents"]]
            n = len(ex)
            names = [f"x{i + 1}" for i in range(n)] if n > 1 else ["x"]
            return RewriteSystem(F, names, [p**e for e in ex], [{} for _ in ex])
        if self.kind == "sample1_truncated":
            return _sample1_system(F, int(P["n"]), int(P["M"]), None)
        base = P["base"]
        if base.kind == "group_algebra":
            orders = [int(o) for o in base.params["orders"]]
            a = [F.scalar(x) if not isinstance(x, str) else F.parse_scalar(x) for x in P["a"]]
            q = len(orders)
            nv = q + 1
            names = ["tau"] + ([f"z{i + 1}" for i in range(q)] if q > 1 else ["z"])
            reps = [{}]  # tau^2 -> 0
            for i in range(q):
                rep = {_unit_mono(nv): one}
                if a[i] != 0:
                    rep[_var_power(nv, 0, 1)] = a[i]
                reps.append(rep)
            return RewriteSystem(F, names, [2] + orders, reps)
        c = [F.scalar(x) if not isinstance(x, str) else F.parse_scalar(x) for x in P["c"]]
        return _sample1_system(F, int(base.params["n"]), int(base.params["M"]), c)


def _sample1_system(F: Field, n: int, M: int, c: Optional[list]) -> RewriteSystem:
    """``y_i^{p^i} -> y_1^p`` (i >= 2) and ``y_1^{p^M} -> 0``.

    With ``c`` given, builds the dual-number extension instead: a leading
    variable ``tau`` with ``tau^2 -> 0`` and
    ``z_i^{p^i} -> z_1^p - (c_1 + ... + c_{i-1}) tau``.
    """
    p = F.p
    ext = c is not None
    off = 1 if ext else 0
    nv = n + off
    gen = "z" if ext else "y"
    names = (["tau"] if ext else []) + [f"{gen}{i + 1}" for i in range(n)]
    bounds = ([2] if ext else []) + [p**M] + [p ** (i + 1) for i in range(1, n)]
    reps: list = [{}] if ext else []
    reps.append({})  # y_1^{p^M} -> 0
    acc = F.scalar(0)
    for i in range(1, n):
        rep = {_var_power(nv, off, p): F.scalar(1)}
        if ext:
            acc = F.scalar(acc + c[i - 1])
            if acc != 0:
                rep[_var_power(nv, 0, 1)] = F.scalar(-acc)
        reps.append(rep)
    return RewriteSystem(F, names, bounds, reps)


def build_from_presentation(pres: MonomialPresentation) -> AlgebraTable:
    """Structure constants of the algebra presented by ``pres``.

    Raises :class:`PresentationError` when rewriting does not terminate within
    budget or the resulting table is not associative.
    """
    return pres.rewrite_system().table(check=True)


# -- ideals, nilradical, Frobenius ------------------------------------------------

def power_map_matrix(a: AlgebraTable, k: int) -> np.ndarray:
    """Column ``i`` is ``e_i^k`` (only linear when ``k`` is a power of the characteristic)."""
    F = a.field
    cols = [a.power(a.basis_vector(i), k) for i in range(a.dim)]
    return np.array(cols, dtype=F.dtype).T.copy()


def frobenius_matrix(a: AlgebraTable) -> np.ndarray:
    """Matrix of the F_p-linear map ``h -> h^p``."""
    if a.field.is_rational:
        raise UnsupportedOperation("the Frobenius map needs a field of positive characteristic")
    return power_map_matrix(a, a.field.p)


def nilradical(a: AlgebraTable) -> Ideal:
    """The ideal of nilpotent elements.

    Over F_p this is the kernel of the m-fold Frobenius with ``p^m >= dim``;
    over Q it is the radical of the trace form ``(x, y) -> tr(L_{xy})``.
    """
    F = a.field
    n = a.dim
    if F.is_rational:
        L = np.array([a.left_mult_matrix(a.basis_vector(k)) for k in range(n)], dtype=object)
        traces = np.array([sum(L[k][i, i] for i in range(n)) for k in range(n)], dtype=object)
        T = np.tensordot(a.mult, traces, axes=(2, 0))
        return Ideal(a, kernel_basis(F, T))
    p = F.p
    m = 1
    while p**m < n:
        m += 1
    Fr = frobenius_matrix(a)
    Fm = F.eye(n)
    for _ in range(m):
        Fm = matmul(F, Fr, Fm)
    return Ideal(a, kernel_basis(F, Fm))


def ideal_product(a: AlgebraTable, I: Subspace, J: Subspace) -> Subspace:
    F = a.field
    if I.dim == 0 or J.dim == 0:
        return span(F, F.zeros((0, a.dim)), a.dim)
    prods = a.products(I.basis.T, J.basis.T).reshape(-1, a.dim)
    return span(F, prods, a.dim)


def ideal_power(a: AlgebraTable, I: Subspace, k: int) -> Subspace:
    P = I
    for _ in range(k - 1):
        P = ideal_product(a, P, I)
    return P


def is_nilpotent_subspace(a: AlgebraTable, I: Subspace) -> bool:
    P = I
    for _ in range(a.dim + 1):
        if P.dim == 0:
            return True
        P = ideal_product(a, P, I)
    return P.dim == 0


def quotient_by_ideal(a: AlgebraTable, ideal: Ideal) -> tuple[AlgebraTable, np.ndarray]:
    """Quotient algebra on the complement of the ideal's pivot columns.

    Returns the quotient table and the projection matrix ``A -> A/I``.
    """
    chk = ideal.check()
    if not chk.ok:
        raise ValueError(f"subspace is not an ideal (witness {chk.witness})")
    F = a.field
    sub = ideal.space
    n = a.dim
    keep = [j for j in range(n) if j not in set(sub.pivots)]
    if not keep:
        raise ValueError("quotient by the whole algebra")
    # reduce each e_j modulo the ideal, then read off the kept coordinates
    proj = F.eye(n)
    if sub.dim:
        proj = F.normalize(proj - matmul(F, sub.basis.T, proj[list(sub.pivots)]))
    proj = proj[keep]
    lift = F.zeros((n, len(keep)))
    for c, j in enumerate(keep):
        lift[j, c] = F.scalar(1)
    prods = a.products(lift, lift)
    mult = F.normalize(np.tensordot(prods, proj, axes=(2, 1)))
    unit = matmul(F, proj, a.unit)
    q = AlgebraTable(F, mult, unit, tuple(a.labels[j] for j in keep))
    return q, proj


def tensor_product(a: AlgebraTable, b: AlgebraTable) -> AlgebraTable:
    """``a (x) b`` on the basis ``e_i (x) f_j`` indexed ``i * dim(b) + j``."""
    if a.field != b.field:
        raise ValueError("tensor product of algebras over different fields")
    F = a.field
    na, nb = a.dim, b.dim
    m = np.multiply.outer(a.mult, b.mult)  # (i,j,k, i',j',k')
    m = np.transpose(m, (0, 3, 1, 4, 2, 5)).reshape(na * nb, na * nb, na * nb)
    unit = np.multiply.outer(a.unit, b.unit).reshape(-1)
    labels = tuple(f"{x}|{y}" for x in a.labels for y in b.labels)
    return AlgebraTable(F, F.normalize(m), F.normalize(unit), labels)


def trivial_algebra(F: Field) -> AlgebraTable:
    return AlgebraTable(F, F.array([[[1]]]), F.array([1]), ("1",))
