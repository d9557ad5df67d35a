"""Exact arithmetic on signed permutation matrices and dense sign matrices.

A :class:`MonomialMatrix` keeps one nonzero per row: row ``i`` holds
``signs[i]`` in column ``perm[i]``.  Products, transposes and Kronecker
products stay in that representation, so they cost O(N) integer work and
are exact at any order.  Dense {-1,+1} matrices are thin wrappers over
int64 numpy arrays; products of verified objects have entries bounded by
the order, far inside int64 range.

The Kronecker convention is row-major blocks throughout the package:
``(X.tensor(Y))[i1*Ny + i2, j1*Ny + j2] == X[i1,j1] * Y[i2,j2]``,
matching ``numpy.kron``.
"""

from __future__ import annotations

from typing import Literal, Optional, Sequence, Union

import numpy as np

from .errors import VerificationError


class MonomialMatrix:
    """Signed permutation matrix: row ``i`` has ``signs[i]`` at ``perm[i]``."""

    __slots__ = ("perm", "signs")

    def __init__(self, perm: Sequence[int], signs: Sequence[int]):
        perm_arr = np.asarray(perm, dtype=np.int64)
        signs_arr = np.asarray(signs, dtype=np.int64)
        if perm_arr.ndim != 1 or signs_arr.shape != perm_arr.shape:
            raise ValueError("perm and signs must be 1-d arrays of equal length")
        n = perm_arr.shape[0]
        if n == 0:
            raise ValueError("empty matrix")
        counts = np.zeros(n, dtype=np.int64)
        if perm_arr.min() < 0 or perm_arr.max() >= n:
            raise ValueError("perm entries out of range")
        np.add.at(counts, perm_arr, 1)
        if not np.all(counts == 1):
            raise ValueError("perm is not a permutation")
        if not np.all(np.abs(signs_arr) == 1):
            raise ValueError("signs must be +1 or -1")
        perm_arr.setflags(write=False)
        signs_arr.setflags(write=False)
        self.perm = perm_arr
        self.signs = signs_arr

    @property
    def order(self) -> int:
        return int(self.perm.shape[0])

    @classmethod
    def identity(cls, n: int) -> "MonomialMatrix":
        return cls(np.arange(n), np.ones(n, dtype=np.int64))

    @classmethod
    def scalar(cls, n: int, sign: int) -> "MonomialMatrix":
        return cls(np.arange(n), np.full(n, sign, dtype=np.int64))

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return MonomialMatrix(other.perm[self.perm], self.signs * other.signs[self.perm])

    def transpose(self) -> "MonomialMatrix":
        inv = np.empty(self.order, dtype=np.int64)
        inv[self.perm] = np.arange(self.order)
        return MonomialMatrix(inv, self.signs[inv])

    @property
    def T(self) -> "MonomialMatrix":
        return self.transpose()

    def __neg__(self) -> "MonomialMatrix":
        return MonomialMatrix(self.perm, -self.signs)

    def __mul__(self, scalar: int) -> "MonomialMatrix":
        if scalar == 1:
            return self
        if scalar == -1:
            return -self
        raise ValueError("monomial matrices only scale by +1 or -1")

    __rmul__ = __mul__

    def tensor(self, other: "MonomialMatrix") -> "MonomialMatrix":
        n2 = other.order
        perm = (self.perm[:, None] * n2 + other.perm[None, :]).reshape(-1)
        signs = (self.signs[:, None] * other.signs[None, :]).reshape(-1)
        return MonomialMatrix(perm, signs)

    def mul_dense(self, dense: np.ndarray) -> np.ndarray:
        """Exact product self @ dense without forming the dense self."""
        if dense.shape[0] != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {dense.shape[0]}")
        return self.signs[:, None] * dense[self.perm]

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.order, self.order), dtype=np.int64)
        out[np.arange(self.order), self.perm] = self.signs
        return out

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_skew(self) -> bool:
        return self == -self.transpose()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return bool(
            np.array_equal(self.perm, other.perm) and np.array_equal(self.signs, other.signs)
        )

    def __hash__(self) -> int:
        return hash((self.perm.tobytes(), self.signs.tobytes()))

    def __repr__(self) -> str:
        return f"MonomialMatrix(perm={self.perm.tolist()}, signs={self.signs.tolist()})"


class DenseSignMatrix:
    """Square matrix with every entry +1 or -1, stored exactly as int64."""

    __slots__ = ("array",)

    def __init__(self, array: Union[np.ndarray, Sequence[Sequence[int]]]):
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if not np.all(np.abs(arr) == 1):
            raise ValueError("entries must be +1 or -1")
        arr = arr.copy()
        arr.setflags(write=False)
        self.array = arr

    @property
    def order(self) -> int:
        return int(self.array.shape[0])

    def transpose(self) -> "DenseSignMatrix":
        return DenseSignMatrix(self.array.T)

    @property
    def T(self) -> "DenseSignMatrix":
        return self.transpose()

    def __neg__(self) -> "DenseSignMatrix":
        return DenseSignMatrix(-self.array)

    def tensor(self, other: "DenseSignMatrix") -> "DenseSignMatrix":
        return DenseSignMatrix(np.kron(self.array, other.array))

    def __matmul__(self, other: "DenseSignMatrix") -> np.ndarray:
        if not isinstance(other, DenseSignMatrix):
            return NotImplemented
        return self.array @ other.array

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseSignMatrix):
            return NotImplemented
        return bool(np.array_equal(self.array, other.array))

    def __hash__(self) -> int:
        return hash(self.array.tobytes())

    def __repr__(self) -> str:
        return f"DenseSignMatrix(order={self.order})"


MatrixLike = Union[MonomialMatrix, DenseSignMatrix, np.ndarray]


def as_dense(x: MatrixLike) -> np.ndarray:
    if isinstance(x, MonomialMatrix):
        return x.to_dense()
    if isinstance(x, DenseSignMatrix):
        return x.array
    return np.asarray(x, dtype=np.int64)


def star(x: MatrixLike, y: MatrixLike) -> np.ndarray:
    """Entrywise (Hadamard) product; zero exactly where supports miss."""
    a, b = as_dense(x), as_dense(y)
    if a.shape != b.shape:
        raise ValueError(f"order mismatch: {a.shape} vs {b.shape}")
    return a * b


def supports_disjoint(x: MonomialMatrix, y: MonomialMatrix) -> bool:
    if x.order != y.order:
        raise ValueError(f"order mismatch: {x.order} vs {y.order}")
    return bool(np.all(x.perm != y.perm))


Side = Literal["A", "B"]


def lambda_of_pair(x: MatrixLike, y: MatrixLike, side: Side) -> Optional[int]:
    """Amicability sign of a matrix pair, or None when neither sign fits.

    Side "B" returns lam with ``x @ y.T == lam * (y @ x.T)``.  Side "A"
    returns lam with ``x @ y.T + lam * (y @ x.T) == 0``, i.e. the
    negative of the "B" value.  The two conventions exist because the
    plug-in conditions carry opposite signs on the two matrix families;
    callers must say which side they are on.
    """
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    if isinstance(x, MonomialMatrix) and isinstance(y, MonomialMatrix):
        p = (x @ y.transpose()).to_dense()
        q = (y @ x.transpose()).to_dense()
    else:
        a, b = as_dense(x), as_dense(y)
        if a.shape != b.shape:
            raise ValueError(f"order mismatch: {a.shape} vs {b.shape}")
        p = a @ b.T
        q = b @ a.T
    if np.array_equal(p, q):
        return -1 if side == "A" else 1
    if np.array_equal(p, -q):
        return 1 if side == "A" else -1
    return None


def sylvester(b: int) -> DenseSignMatrix:
    """The doubling-recursion Hadamard matrix of power-of-two order ``b``."""
    if b < 1 or b & (b - 1):
        raise ValueError(f"order must be a power of two, got {b}")
    s = np.array([[1]], dtype=np.int64)
    while s.shape[0] < b:
        s = np.block([[s, s], [s, -s]])
    return DenseSignMatrix(s)


def check_orthogonal(mat: DenseSignMatrix) -> None:
    """Exact check that ``mat @ mat.T`` is ``order * I``."""
    g = mat.array @ mat.array.T
    n = mat.order
    if not np.array_equal(g, n * np.eye(n, dtype=np.int64)):
        raise VerificationError(f"matrix of order {n} is not Hadamard")


# Fixed order-2 building blocks.  Z and X are symmetric with squares +I
# and J and Y are skew with squares -I; J is the rotation [[0,-1],[1,0]]
# and Y = Z @ X = -J.
def ident2() -> MonomialMatrix:
    return MonomialMatrix.identity(2)


def z2() -> MonomialMatrix:
    return MonomialMatrix([0, 1], [1, -1])


def x2() -> MonomialMatrix:
    return MonomialMatrix([1, 0], [1, 1])


def j2() -> MonomialMatrix:
    return MonomialMatrix([1, 0], [-1, 1])


def y2() -> MonomialMatrix:
    return MonomialMatrix([1, 0], [1, -1])
