"""Exact dense linear algebra over F_p and Q.

Matrices are plain numpy arrays.  Over F_p they are ``int64`` arrays holding
residues in ``[0, p)``; over Q they are ``object`` arrays of
:class:`fractions.Fraction`.  Every routine takes the :class:`Field` first and
never mutates its inputs.

Linear maps follow the column convention: the image of the i-th basis vector
is column ``i``.  Subspaces are stored by the rows of their canonical reduced
row echelon form, so equal subspaces compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

__all__ = [
    "Field",
    "Subspace",
    "rref",
    "echelon",
    "echelon_from_chunks",
    "rank",
    "kernel_basis",
    "span",
    "solve",
    "solve_membership",
    "inverse",
    "extend_basis",
    "matmul",
]

# rows per block when echelonizing tall matrices incrementally
_CHUNK = 512


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """A prime field F_p (``characteristic == p``) or Q (``characteristic == 0``)."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, (int, np.integer)) or c < 0 or (c != 0 and not _is_prime(int(c))):
            raise ValueError(f"characteristic must be 0 or a prime, got {c!r}")
        object.__setattr__(self, "characteristic", int(c))

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def dtype(self):
        return object if self.is_rational else np.int64

    @property
    def name(self) -> str:
        return "Q" if self.is_rational else f"F{self.p}"

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``"Q"``, ``"F5"`` or a bare integer characteristic."""
        t = str(text).strip()
        if t.upper() in ("Q", "QQ", "0"):
            return cls(0)
        if t[:1] in ("F", "f"):
            t = t[1:]
        try:
            return cls(int(t))
        except ValueError as exc:
            raise ValueError(f"unrecognised field {text!r}") from exc

    # -- scalars -----------------------------------------------------------
    def scalar(self, x):
        if self.is_rational:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def inv(self, x):
        if self.is_rational:
            if x == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1) / Fraction(x)
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def parse_scalar(self, text) -> object:
        """Read a scalar written as ``"a"`` or ``"a/b"`` (or a bare int)."""
        if isinstance(text, (int, np.integer)):
            return self.scalar(int(text))
        s = str(text).strip()
        if "/" in s:
            num, den = s.split("/")
            return self.scalar(Fraction(int(num), int(den)))
        return self.scalar(int(s))

    def format_scalar(self, x) -> str:
        if self.is_rational:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(int(x) % self.p)

    # -- arrays ------------------------------------------------------------
    def array(self, data) -> np.ndarray:
        """Coerce nested data (ints, Fractions, strings) into a field array."""
        if self.is_rational:
            a = np.array(data, dtype=object)
            flat = a.reshape(-1)
            for i, v in enumerate(flat):
                flat[i] = self.parse_scalar(v) if isinstance(v, str) else Fraction(v)
            return flat.reshape(a.shape)
        a = np.array(data, dtype=object)
        if a.size and any(isinstance(v, (str, Fraction)) for v in a.reshape(-1)):
            flat = a.reshape(-1)
            for i, v in enumerate(flat):
                flat[i] = self.parse_scalar(v)
            a = flat.reshape(a.shape)
        return np.asarray(a, dtype=np.int64) % self.p

    def normalize(self, a: np.ndarray) -> np.ndarray:
        if self.is_rational:
            return a
        return np.mod(a, self.p)

    def zeros(self, shape) -> np.ndarray:
        if self.is_rational:
            z = np.empty(shape, dtype=object)
            z.fill(Fraction(0))
            return z
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        z = self.zeros((n, n))
        for i in range(n):
            z[i, i] = self.scalar(1)
        return z

    def is_zero(self, a: np.ndarray) -> bool:
        if self.is_rational:
            return all(v == 0 for v in np.asarray(a).reshape(-1))
        return not np.any(np.mod(a, self.p))

    def equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        a = np.asarray(a)
        b = np.asarray(b)
        return a.shape == b.shape and self.is_zero(self.normalize(a - b))


_FLOAT_EXACT = 2**52


def matmul(F: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact matrix product.

    Over F_p with reduced operands every partial sum is bounded by
    ``k (p-1)^2``; when that stays below 2^52 the product is computed in
    float64 (BLAS) and is still exact.
    """
    if F.is_rational:
        return np.dot(a, b)
    a = np.asarray(a)
    b = np.asarray(b)
    k = a.shape[-1] if a.ndim else 1
    if a.ndim >= 1 and b.ndim >= 1 and k * (F.p - 1) ** 2 < _FLOAT_EXACT and a.size and b.size:
        prod = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return np.asarray(prod, dtype=np.int64) % F.p
    return (a @ b) % F.p


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of F^n stored by its canonical RREF basis rows."""

    field: Field
    ambient_dim: int
    basis: np.ndarray
    pivots: tuple

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and self.field.equal(self.basis, other.basis)
        )

    __hash__ = None

    def contains(self, v) -> bool:
        return solve_membership(self, v) is not None

    def __contains__(self, v) -> bool:
        return self.contains(v)


def _subspace(F: Field, n: int, rows: np.ndarray, pivots) -> Subspace:
    rows = np.array(rows, dtype=F.dtype).reshape(len(pivots), n)
    rows.setflags(write=False)
    return Subspace(F, n, rows, tuple(int(p) for p in pivots))


def _rref_inplace(F: Field, A: np.ndarray) -> list:
    """Gauss-Jordan elimination on ``A`` in place; returns pivot columns."""
    rows, cols = A.shape
    pivots = []
    r = 0
    rational = F.is_rational
    p = F.p
    for c in range(cols):
        if r == rows:
            break
        col = A[r:, c]
        nz = [i for i, v in enumerate(col) if v != 0] if rational else np.flatnonzero(col)
        if len(nz) == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = F.inv(A[r, c])
        if rational:
            A[r] = A[r] * inv
        else:
            A[r] = (A[r] * inv) % p
        colv = A[:, c].copy()
        colv[r] = 0
        if rational:
            others = [i for i, v in enumerate(colv) if v != 0]
        else:
            others = np.flatnonzero(colv)
        if len(others):
            others = np.asarray(others)
            upd = np.multiply.outer(colv[others], A[r])
            A[others] = A[others] - upd
            if not rational:
                A[others] %= p
        pivots.append(c)
        r += 1
    return pivots


def rref(F: Field, m) -> np.ndarray:
    """Reduced row echelon form, same shape as ``m`` (zero rows at the bottom)."""
    A = F.array(m) if not isinstance(m, np.ndarray) else F.normalize(np.array(m, dtype=F.dtype))
    if A.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    rows, cols = A.shape
    R, pivots = echelon(F, A)
    out = F.zeros((rows, cols))
    out[: len(pivots)] = R
    return out


def echelon(F: Field, m: np.ndarray) -> tuple[np.ndarray, list]:
    """Nonzero rows of the RREF of ``m`` and its pivot columns."""
    A = np.array(m, dtype=F.dtype)
    if A.ndim != 2:
        raise ValueError("echelon expects a 2-d matrix")
    rows, cols = A.shape
    if rows > 2 * max(cols, 1) and rows > _CHUNK:
        return echelon_from_chunks(F, cols, (A[i : i + _CHUNK] for i in range(0, rows, _CHUNK)))
    A = F.normalize(A)
    pivots = _rref_inplace(F, A)
    return A[: len(pivots)].copy(), pivots


def echelon_from_chunks(F: Field, ncols: int, chunks: Iterable[np.ndarray]) -> tuple[np.ndarray, list]:
    """Row echelon basis of the row space spanned by a stream of row blocks.

    Each block is reduced against the basis found so far with one matrix
    product, so blocks lying in the current span cost almost nothing.
    """
    R = F.zeros((0, ncols))
    pivots: list = []
    for X in chunks:
        X = F.normalize(np.array(X, dtype=F.dtype).reshape(-1, ncols))
        if X.shape[0] == 0:
            continue
        if pivots:
            X = F.normalize(X - matmul(F, X[:, pivots], R))
        if F.is_rational:
            keep = [i for i in range(X.shape[0]) if any(v != 0 for v in X[i])]
        else:
            keep = np.flatnonzero(X.any(axis=1))
        if len(keep) == 0:
            continue
        X = X[np.asarray(keep)]
        newp = _rref_inplace(F, X)
        if not newp:
            continue
        X = X[: len(newp)]
        if pivots:
            R = F.normalize(R - matmul(F, R[:, newp], X))
        allp = pivots + newp
        order = np.argsort(allp, kind="stable")
        R = np.concatenate([R, X], axis=0)[order]
        pivots = [allp[i] for i in order]
        if len(pivots) == ncols:
            break
    return R, pivots


def rank(F: Field, m: np.ndarray) -> int:
    A = np.asarray(m)
    if A.ndim != 2 or A.size == 0:
        return 0
    if A.shape[1] > A.shape[0]:
        A = A.T
    return len(echelon(F, A)[1])


def span(F: Field, vectors, ambient_dim: Optional[int] = None) -> Subspace:
    """Subspace spanned by the rows of ``vectors``."""
    V = np.array(vectors, dtype=F.dtype)
    if V.ndim == 1:
        V = V.reshape(-1, ambient_dim if ambient_dim is not None else V.shape[0])
    n = V.shape[1] if ambient_dim is None else ambient_dim
    if V.size == 0:
        return _subspace(F, n, F.zeros((0, n)), [])
    R, piv = echelon(F, V)
    return _subspace(F, n, R, piv)


def _kernel_from_echelon(F: Field, R: np.ndarray, pivots: Sequence[int], n: int) -> np.ndarray:
    pset = set(pivots)
    free = [c for c in range(n) if c not in pset]
    K = F.zeros((len(free), n))
    for k, f in enumerate(free):
        K[k, f] = F.scalar(1)
    if free and pivots:
        K[:, list(pivots)] = F.normalize(-np.asarray(R)[:, free].T)
    return K


def kernel_basis(F: Field, m: np.ndarray) -> Subspace:
    """Canonical basis of the right null space ``{v : m v = 0}``."""
    A = np.asarray(m)
    n = A.shape[1]
    if A.shape[0] == 0:
        return _subspace(F, n, F.eye(n), range(n))
    R, piv = echelon(F, A)
    return span(F, _kernel_from_echelon(F, R, piv, n), n)


def kernel_from_chunks(F: Field, ncols: int, chunks: Iterable[np.ndarray]) -> tuple[Subspace, int]:
    """Null space of a row-streamed matrix together with its rank."""
    R, piv = echelon_from_chunks(F, ncols, chunks)
    return span(F, _kernel_from_echelon(F, R, piv, ncols), ncols), len(piv)


def solve_membership(sub: Subspace, v) -> Optional[np.ndarray]:
    """Coordinates of ``v`` in ``sub.basis``, or ``None`` if ``v`` is not in ``sub``."""
    F = sub.field
    v = F.normalize(np.array(v, dtype=F.dtype)).reshape(-1)
    if v.shape[0] != sub.ambient_dim:
        raise ValueError(f"vector has length {v.shape[0]}, expected {sub.ambient_dim}")
    coords = v[list(sub.pivots)] if sub.pivots else F.zeros(0)
    back = matmul(F, coords, sub.basis) if sub.dim else F.zeros(sub.ambient_dim)
    if not F.equal(back, v):
        return None
    return coords


def solve(F: Field, A: np.ndarray, b) -> Optional[np.ndarray]:
    """A solution of ``A x = b`` (free variables set to zero), or ``None``."""
    A = np.asarray(A, dtype=F.dtype)
    b = np.asarray(b, dtype=F.dtype).reshape(-1, 1)
    rows, cols = A.shape
    aug = np.concatenate([A, b], axis=1)
    R, piv = echelon(F, aug)
    if piv and piv[-1] == cols:
        return None
    x = F.zeros(cols)
    for i, pc in enumerate(piv):
        x[pc] = R[i, cols]
    return x


def inverse(F: Field, A: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=F.dtype)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    aug = np.concatenate([A, F.eye(n)], axis=1)
    R, piv = echelon(F, aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise np.linalg.LinAlgError("matrix is singular")
    return R[:n, n:].copy()


def extend_basis(F: Field, base: np.ndarray, candidates: np.ndarray) -> list:
    """Indices of candidate rows that, taken greedily in order, extend ``base``.

    The greedy choice equals the pivot columns of the RREF of the matrix whose
    columns are the base rows followed by the candidates.
    """
    cand = np.asarray(candidates, dtype=F.dtype)
    if cand.size == 0:
        return []
    n = cand.shape[1]
    base = np.asarray(base, dtype=F.dtype).reshape(-1, n)
    if base.shape[0]:
        R, _ = echelon(F, base)
    else:
        R = F.zeros((0, n))
    stacked = np.concatenate([R, cand], axis=0).T
    _, piv = echelon(F, stacked)
    b = R.shape[0]
    return [c - b for c in piv if c >= b]


def iter_rows(F: Field, m: np.ndarray) -> Iterator[np.ndarray]:
    for row in np.asarray(m, dtype=F.dtype):
        yield row
