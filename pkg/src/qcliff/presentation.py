"""Finitely presented real algebras on sign-squared generators.

An :class:`AlgebraPresentation` fixes ``m`` generators ``a1 .. am`` with
``ai^2 = kappa_i`` (``kappa_i = +1`` or ``-1``) and a commute/anticommute
bit for every unordered pair of generators.  Products of generators reduce
to *signed monomials*: a sign together with a GF(2) exponent vector, the
generators kept in increasing index order.  All arithmetic here is exact
integer arithmetic on those pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded

DEFAULT_BASIS_CAP = 20


def _mask(exps: Sequence[int]) -> int:
    bits = 0
    for i, e in enumerate(exps):
        if e:
            bits |= 1 << i
    return bits


def _unmask(bits: int, m: int) -> tuple[int, ...]:
    return tuple((bits >> i) & 1 for i in range(m))


@dataclass(frozen=True)
class SignedMonomial:
    """A sign in {-1,+1} and a GF(2) exponent vector of length ``m``.

    ``SignedMonomial(1, (1, 0, 1))`` stands for the product ``a1*a3``;
    the identity element is ``SignedMonomial(1, (0,)*m)``.
    """

    sign: int
    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if not isinstance(self.exps, tuple):
            object.__setattr__(self, "exps", tuple(self.exps))
        if any(e not in (0, 1) for e in self.exps):
            raise ValueError(f"exponents must be 0/1 bits, got {self.exps!r}")

    @property
    def mask(self) -> int:
        return _mask(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __neg__(self) -> "SignedMonomial":
        return SignedMonomial(-self.sign, self.exps)

    def __str__(self) -> str:
        word = "".join(f"a{i + 1}" for i, e in enumerate(self.exps) if e) or "1"
        return ("+" if self.sign > 0 else "-") + word


class AlgebraPresentation:
    """Generators with squares ``kappa`` and a pairwise anticommutation table.

    Parameters
    ----------
    kappa:
        Sequence of +1/-1 generator squares; its length fixes ``m``.
    anticommuting:
        Pairs ``(i, j)`` of 0-based generator indices that anticommute.
        Unlisted pairs commute.  Order inside a pair does not matter.
    """

    __slots__ = ("m", "kappa", "_delta_gt", "_kneg")

    def __init__(self, kappa: Sequence[int], anticommuting: Iterable[tuple[int, int]] = ()):
        kappa = tuple(kappa)
        if not kappa:
            raise ValueError("presentation needs at least one generator")
        if any(k not in (-1, 1) for k in kappa):
            raise ValueError(f"kappa entries must be +1 or -1, got {kappa!r}")
        m = len(kappa)
        rows = [0] * m
        for i, j in anticommuting:
            if i == j:
                raise ValueError(f"anticommutation pair ({i}, {j}) has equal indices")
            lo, hi = (i, j) if i < j else (j, i)
            if lo < 0 or hi >= m:
                raise ValueError(f"pair ({i}, {j}) out of range for m={m}")
            rows[lo] |= 1 << hi
        self.m = m
        self.kappa = kappa
        # row i holds the anticommuting partners of i with larger index
        self._delta_gt = tuple(rows)
        self._kneg = _mask(1 if k < 0 else 0 for k in kappa)

    # -- presentation table -------------------------------------------------

    def delta(self, i: int, j: int) -> int:
        """Anticommutation bit for the (unordered) generator pair ``i, j``."""
        if not (0 <= i < self.m and 0 <= j < self.m):
            raise ValueError(f"generator index out of range for m={self.m}: ({i}, {j})")
        if i == j:
            raise ValueError("delta is undefined on the diagonal")
        lo, hi = (i, j) if i < j else (j, i)
        return (self._delta_gt[lo] >> hi) & 1

    def anticommuting_pairs(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.m)
            for j in range(i + 1, self.m)
            if (self._delta_gt[i] >> j) & 1
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraPresentation):
            return NotImplemented
        return self.kappa == other.kappa and self._delta_gt == other._delta_gt

    def __hash__(self) -> int:
        return hash((self.kappa, self._delta_gt))

    def __repr__(self) -> str:
        return (
            f"AlgebraPresentation(kappa={self.kappa}, "
            f"anticommuting={self.anticommuting_pairs()})"
        )

    # -- element construction ------------------------------------------------

    def identity(self) -> SignedMonomial:
        return SignedMonomial(1, (0,) * self.m)

    def generator(self, i: int) -> SignedMonomial:
        if not 0 <= i < self.m:
            raise ValueError(f"generator index {i} out of range for m={self.m}")
        return SignedMonomial(1, tuple(1 if k == i else 0 for k in range(self.m)))

    def monomial(self, exps: Sequence[int], sign: int = 1) -> SignedMonomial:
        x = SignedMonomial(sign, tuple(exps))
        self._check(x)
        return x

    def _check(self, x: SignedMonomial) -> None:
        if len(x.exps) != self.m:
            raise ValueError(
                f"monomial has {len(x.exps)} exponent bits, presentation has m={self.m}"
            )

    # -- mask-level sign kernels (shared with the solver hot path) -----------

    def mul_sign_masks(self, xm: int, ym: int) -> int:
        """Reordering-and-squaring sign of ``(+1, xm) * (+1, ym)``.

        Moving each generator of ``ym`` left past the higher-index
        generators of ``xm`` contributes one anticommutation bit per
        crossing; coinciding generators then square to ``kappa``.
        """
        swaps = 0
        rows = self._delta_gt
        t = ym
        while t:
            i = (t & -t).bit_length() - 1
            swaps ^= (rows[i] & xm).bit_count()
            t &= t - 1
        sign = -1 if swaps & 1 else 1
        if (xm & ym & self._kneg).bit_count() & 1:
            sign = -sign
        return sign

    def square_sign_mask(self, xm: int) -> int:
        swaps = 0
        rows = self._delta_gt
        t = xm
        while t:
            i = (t & -t).bit_length() - 1
            swaps ^= (rows[i] & xm).bit_count()
            t &= t - 1
        sign = -1 if swaps & 1 else 1
        if (xm & self._kneg).bit_count() & 1:
            sign = -sign
        return sign

    def commute_sign_masks(self, xm: int, ym: int) -> int:
        """+1 if the monomials commute, -1 if they anticommute."""
        par = 0
        rows = self._delta_gt
        t = ym
        while t:
            i = (t & -t).bit_length() - 1
            par ^= (rows[i] & xm).bit_count()
            t &= t - 1
        t = xm
        while t:
            i = (t & -t).bit_length() - 1
            par ^= (rows[i] & ym).bit_count()
            t &= t - 1
        return -1 if par & 1 else 1

    # -- monomial arithmetic --------------------------------------------------

    def mul(self, x: SignedMonomial, y: SignedMonomial) -> SignedMonomial:
        """Exact product of two signed monomials in this presentation."""
        self._check(x)
        self._check(y)
        xm, ym = x.mask, y.mask
        sign = x.sign * y.sign * self.mul_sign_masks(xm, ym)
        return SignedMonomial(sign, _unmask(xm ^ ym, self.m))

    def square_sign(self, x: SignedMonomial) -> int:
        """Sign of ``x * x``; independent of the sign of ``x``."""
        self._check(x)
        return self.square_sign_mask(x.mask)

    def commutation_sign(self, x: SignedMonomial, y: SignedMonomial) -> int:
        """+1 if ``x`` and ``y`` commute, -1 if they anticommute.

        Satisfies ``mul(x, y) == commutation_sign(x, y) * mul(y, x)``.
        """
        self._check(x)
        self._check(y)
        return self.commute_sign_masks(x.mask, y.mask)

    def product(self, factors: Iterable[SignedMonomial]) -> SignedMonomial:
        out = self.identity()
        for f in factors:
            out = self.mul(out, f)
        return out

    def basis(self, cap: int = DEFAULT_BASIS_CAP) -> list[SignedMonomial]:
        """All ``2^m`` positive monomials in lexicographic exponent order.

        The exponent of ``a1`` is the least significant bit, so the order
        for m=2 is ``1, a1, a2, a1a2``.  Refuses ``m > cap`` since the
        enumeration is the one exponential step in this module.
        """
        if self.m > cap:
            raise CapExceeded(
                f"basis enumeration needs 2^{self.m} elements, cap is m <= {cap}"
            )
        return [
            SignedMonomial(1, _unmask(bits, self.m)) for bits in range(1 << self.m)
        ]

    def iter_exponent_masks(self) -> Iterator[int]:
        return iter(range(1 << self.m))


def quaternion_presentation() -> AlgebraPresentation:
    """Two anticommuting generators squaring to -1 (the quaternions)."""
    return AlgebraPresentation((-1, -1), [(0, 1)])


def clifford_presentation(p: int, q: int) -> AlgebraPresentation:
    """``p + q`` pairwise anticommuting generators, ``p`` squaring to +1."""
    if p < 0 or q < 0 or p + q == 0:
        raise ValueError("need p, q >= 0 with p + q >= 1")
    m = p + q
    kappa = (1,) * p + (-1,) * q
    return AlgebraPresentation(kappa, [(i, j) for i in range(m) for j in range(i + 1, m)])
