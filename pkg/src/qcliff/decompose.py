"""Splitting a presentation into central generators and hyperbolic pairs.

The anticommutation table of a presentation is an alternating bilinear
form over GF(2).  Symplectic Gram-Schmidt on that form rewrites the
generator set as ``r`` monomials that commute with everything (spanning
the radical of the form, hence the centre of the algebra) plus ``s``
pairs that anticommute within the pair and commute with all the rest,
with ``r + 2s = m``.  The tensor factorization of the algebra into
single-generator and pair subalgebras reads off directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .gf2 import Gf2Matrix
from .presentation import AlgebraPresentation, SignedMonomial, _unmask


class Central(NamedTuple):
    element: SignedMonomial
    square: int


class HyperbolicPair(NamedTuple):
    first: SignedMonomial
    first_square: int
    second: SignedMonomial
    second_square: int


@dataclass(frozen=True)
class Decomposition:
    """Result of the symplectic reduction of a presentation.

    ``basis_change`` stacks the exponent vectors of the new generators as
    rows, centrals first, then the pairs interleaved
    ``(first_1, second_1, first_2, ...)``.  It is invertible over GF(2),
    so the new monomials generate the whole algebra.
    """

    presentation: AlgebraPresentation
    centrals: tuple[Central, ...]
    pairs: tuple[HyperbolicPair, ...]
    basis_change: Gf2Matrix

    @property
    def r(self) -> int:
        return len(self.centrals)

    @property
    def s(self) -> int:
        return len(self.pairs)

    @property
    def new_generators(self) -> tuple[SignedMonomial, ...]:
        """New generators in basis_change row order."""
        out: list[SignedMonomial] = [c.element for c in self.centrals]
        for p in self.pairs:
            out.append(p.first)
            out.append(p.second)
        return tuple(out)

    @property
    def new_generator_squares(self) -> tuple[int, ...]:
        out: list[int] = [c.square for c in self.centrals]
        for p in self.pairs:
            out.append(p.first_square)
            out.append(p.second_square)
        return tuple(out)

    def normal_presentation(self) -> AlgebraPresentation:
        """The presentation satisfied by the new generators.

        All pairs commute except the two members of each hyperbolic pair:
        the anticommutation table is zero apart from
        ``(r + 2i, r + 2i + 1)``.
        """
        anti = [(self.r + 2 * i, self.r + 2 * i + 1) for i in range(self.s)]
        return AlgebraPresentation(self.new_generator_squares, anti)

    def validate(self) -> None:
        """Re-check every structural invariant; raises ``ValueError``."""
        P = self.presentation
        if self.r + 2 * self.s != P.m:
            raise ValueError(f"r + 2s = {self.r + 2 * self.s} differs from m = {P.m}")
        if self.basis_change.rows != P.m or self.basis_change.cols != P.m:
            raise ValueError("basis_change has the wrong shape")
        if not self.basis_change.is_invertible():
            raise ValueError("basis_change is singular over GF(2)")
        gens = self.new_generators
        squares = self.new_generator_squares
        for row, g in enumerate(gens):
            if self.basis_change.row_mask(row) != g.mask:
                raise ValueError(f"basis_change row {row} does not match generator")
            if g.sign != 1:
                raise ValueError("new generators must carry sign +1")
            if P.square_sign(g) != squares[row]:
                raise ValueError(f"recorded square of generator {row} is wrong")
        normal = self.normal_presentation()
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                want = -1 if normal.delta(i, j) else 1
                if P.commutation_sign(gens[i], gens[j]) != want:
                    raise ValueError(
                        f"generators {i}, {j} have commutation sign "
                        f"{P.commutation_sign(gens[i], gens[j])}, expected {want}"
                    )


def form_matrix(P: AlgebraPresentation) -> Gf2Matrix:
    """Symmetric zero-diagonal GF(2) matrix of the anticommutation form."""
    rows = []
    for i in range(P.m):
        mask = P._delta_gt[i]
        for lo in range(i):
            mask |= ((P._delta_gt[lo] >> i) & 1) << lo
        rows.append(mask)
    return Gf2Matrix(P.m, P.m, tuple(rows))


def radical_dimension(P: AlgebraPresentation) -> int:
    """Dimension of the kernel of the anticommutation form.

    Equals the number of central generators produced by :func:`decompose`;
    the centre of the algebra has dimension ``2**radical_dimension(P)``.
    """
    return form_matrix(P).nullity()


def _bform(frows: tuple[int, ...], u: int, v: int) -> int:
    par = 0
    t = u
    while t:
        i = (t & -t).bit_length() - 1
        par ^= (frows[i] & v).bit_count()
        t &= t - 1
    return par & 1


def symplectic_reduce(frows: tuple[int, ...], m: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Core Gram-Schmidt pass over exponent-vector bitmasks.

    Pivots are always the lowest-index remaining vector, and its partner
    the lowest-index remaining vector pairing with it, so the output is
    deterministic.  After extracting a pair ``(u, v)`` every remaining
    ``w`` is replaced by ``w + B(w,v)u + B(w,u)v``, which removes its
    components against the pair and keeps the span intact.
    """
    remaining = [1 << i for i in range(m)]
    centrals: list[int] = []
    pairs: list[tuple[int, int]] = []
    while remaining:
        u = remaining.pop(0)
        partner = None
        for idx, v in enumerate(remaining):
            if _bform(frows, u, v):
                partner = idx
                break
        if partner is None:
            centrals.append(u)
            continue
        v = remaining.pop(partner)
        pairs.append((u, v))
        fixed = []
        for w in remaining:
            if _bform(frows, w, v):
                w ^= u
            if _bform(frows, w, u):
                w ^= v
            fixed.append(w)
        remaining = fixed
    return centrals, pairs


def decompose(P: AlgebraPresentation) -> Decomposition:
    """Symplectic Gram-Schmidt decomposition of a presentation.

    Total and deterministic; the returned value passes
    :meth:`Decomposition.validate`.
    """
    frows = tuple(form_matrix(P).bits)
    central_masks, pair_masks = symplectic_reduce(frows, P.m)
    centrals = tuple(
        Central(SignedMonomial(1, _unmask(c, P.m)), P.square_sign_mask(c))
        for c in central_masks
    )
    pairs = tuple(
        HyperbolicPair(
            SignedMonomial(1, _unmask(g, P.m)),
            P.square_sign_mask(g),
            SignedMonomial(1, _unmask(d, P.m)),
            P.square_sign_mask(d),
        )
        for g, d in pair_masks
    )
    row_masks = list(central_masks)
    for g, d in pair_masks:
        row_masks.append(g)
        row_masks.append(d)
    out = Decomposition(P, centrals, pairs, Gf2Matrix.from_row_masks(row_masks, P.m))
    out.validate()
    return out
