"""Minimal monomial representations of a decomposed presentation.

Every factor of the decomposition gets a fixed block of signed
permutation matrices: scalar signs for centrals squaring +1, a rotation
for the first central squaring -1, 2x2 blocks for non-quaternionic
pairs, and 4x4 quaternion multiplication operators for the rest.  Two
quaternionic pairs share one 4x4 block (one acting by left, the other by
right multiplication on the quaternion carrier), and a leftover
quaternionic pair shares its block with a complex central the same way.
That fusion is exactly what keeps the assembled Kronecker product at the
minimal order; a matching block structure exists for every Wedderburn
case.

Generator images are then pushed from the decomposition generators back
to the original ones by solving the basis change over GF(2) and
correcting the sign with exact monomial arithmetic.  Every constructed
representation re-verifies its defining relations before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Iterator, Optional, Sequence

from .decompose import Decomposition
from .errors import VerificationError
from .matrices import MonomialMatrix, j2, x2, z2
from .presentation import AlgebraPresentation
from .structure import classify


# Left and right multiplication by the quaternion units i and j on the
# carrier basis (1, i, j, k).  Left operators commute with right ones.
def quat_left_i() -> MonomialMatrix:
    return MonomialMatrix([1, 0, 3, 2], [-1, 1, -1, 1])


def quat_left_j() -> MonomialMatrix:
    return MonomialMatrix([2, 3, 0, 1], [-1, 1, 1, -1])


def quat_right_i() -> MonomialMatrix:
    return MonomialMatrix([1, 0, 3, 2], [-1, 1, 1, -1])


def quat_right_j() -> MonomialMatrix:
    return MonomialMatrix([2, 3, 0, 1], [-1, -1, 1, 1])


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise VerificationError(msg)


def _check_block(images: Sequence[MonomialMatrix], squares: Sequence[int],
                 anticommuting: Sequence[tuple[int, int]]) -> None:
    n = images[0].order
    ident = MonomialMatrix.identity(n)
    anti = set(anticommuting)
    for a, img in enumerate(images):
        _expect(img @ img == squares[a] * ident, f"block image {a} has the wrong square")
    for a in range(len(images)):
        for b in range(a + 1, len(images)):
            lhs = images[a] @ images[b]
            rhs = images[b] @ images[a]
            if (a, b) in anti:
                _expect(lhs == -rhs, f"block images {a},{b} should anticommute")
            else:
                _expect(lhs == rhs, f"block images {a},{b} should commute")


def factor_block(kind: str, sign: int = 1,
                 squares: Optional[tuple[int, int]] = None) -> list[MonomialMatrix]:
    """Generator images for one tensor factor.

    Kinds: ``"C_plus"`` (scalar block, needs ``sign``), ``"C_minus"``
    (one rotation), ``"Q"`` (one pair, needs ``squares``), ``"HH"`` (two
    fused quaternionic pairs) and ``"CH"`` (complex central fused with a
    quaternionic pair, central image first).  Each block is re-verified
    against its defining relations before being returned.
    """
    if kind == "C_plus":
        if sign not in (-1, 1):
            raise ValueError("C_plus needs sign +1 or -1")
        return [MonomialMatrix([0], [sign])]
    if kind == "C_minus":
        out = [j2()]
        _check_block(out, [-1], [])
        return out
    if kind == "Q":
        if squares is None or squares[0] not in (-1, 1) or squares[1] not in (-1, 1):
            raise ValueError("Q needs squares (c, d) in {-1,+1}^2")
        table = {
            (1, 1): [z2(), x2()],
            (-1, 1): [j2(), x2()],
            (1, -1): [z2(), j2()],
            (-1, -1): [quat_left_i(), quat_left_j()],
        }
        out = table[squares]
        _check_block(out, list(squares), [(0, 1)])
        return out
    if kind == "HH":
        out = [quat_left_i(), quat_left_j(), quat_right_i(), quat_right_j()]
        _check_block(out, [-1] * 4, [(0, 1), (2, 3)])
        return out
    if kind == "CH":
        out = [quat_right_i(), quat_left_i(), quat_left_j()]
        _check_block(out, [-1] * 3, [(1, 2)])
        return out
    raise ValueError(f"unknown block kind {kind!r}")


@dataclass(frozen=True)
class Representation:
    """Monomial generator images satisfying ``presentation`` exactly.

    ``generator_images[i]`` is the image of generator ``i`` of
    ``presentation`` -- the decomposition's new generators for the output
    of :func:`build_irrep`, the original generators after
    :func:`pushforward`.  ``character`` records the sign choices made for
    the central generators.
    """

    order: int
    generator_images: tuple[MonomialMatrix, ...]
    character: tuple[int, ...]
    decomposition: Decomposition
    presentation: AlgebraPresentation

    def verify(self) -> None:
        """Exact re-check of all relations and the transpose law."""
        P = self.presentation
        imgs = self.generator_images
        if len(imgs) != P.m:
            raise VerificationError("wrong number of generator images")
        ident = MonomialMatrix.identity(self.order)
        for i, img in enumerate(imgs):
            if img.order != self.order:
                raise VerificationError(f"image {i} has order {img.order} != {self.order}")
            _expect(img @ img == P.kappa[i] * ident, f"image {i} has the wrong square")
            _expect(
                img.transpose() == P.kappa[i] * img,
                f"image {i} breaks the transpose law",
            )
        for i in range(P.m):
            for j in range(i + 1, P.m):
                lhs = imgs[j] @ imgs[i]
                rhs = imgs[i] @ imgs[j]
                want = -rhs if P.delta(i, j) else rhs
                _expect(lhs == want, f"images {i},{j} break the commutation relation")


def character_length(D: Decomposition) -> int:
    """Number of free central sign choices for irreps of ``D``."""
    has_complex = any(c.square == -1 for c in D.centrals)
    return D.r - 1 if has_complex else D.r


def zero_character(D: Decomposition) -> tuple[int, ...]:
    return (0,) * character_length(D)


def all_characters(D: Decomposition) -> Iterator[tuple[int, ...]]:
    return iter_product((0, 1), repeat=character_length(D))


class _Block:
    __slots__ = ("order", "images", "min_index")

    def __init__(self, images: dict[int, MonomialMatrix], min_index: int):
        self.images = images
        self.order = next(iter(images.values())).order
        self.min_index = min_index


def build_irrep(D: Decomposition, character: Sequence[int]) -> Representation:
    """Irreducible monomial images of the decomposition generators.

    The images satisfy ``D.normal_presentation()`` and have order exactly
    ``classify(D).irrep_order``.  ``character`` must supply one bit per
    free central sign choice (see :func:`character_length`); bit 1 flips
    the sign of the corresponding central image.
    """
    character = tuple(int(b) for b in character)
    if any(b not in (0, 1) for b in character):
        raise ValueError("character must consist of 0/1 bits")
    if len(character) != character_length(D):
        raise ValueError(
            f"character has length {len(character)}, expected {character_length(D)}"
        )
    wt = classify(D)
    r = D.r
    neg_centrals = [i for i, c in enumerate(D.centrals) if c.square == -1]
    first_neg = neg_centrals[0] if neg_centrals else None

    quat_ids = [
        t for t, p in enumerate(D.pairs)
        if p.first_square == -1 and p.second_square == -1
    ]
    other_ids = [t for t in range(D.s) if t not in quat_ids]

    def pair_indices(t: int) -> tuple[int, int]:
        return r + 2 * t, r + 2 * t + 1

    blocks: list[_Block] = []
    for u in range(len(quat_ids) // 2):
        first, second = quat_ids[2 * u], quat_ids[2 * u + 1]
        li, lj, ri, rj = factor_block("HH")
        g1, d1 = pair_indices(first)
        g2, d2 = pair_indices(second)
        blocks.append(_Block({g1: li, d1: lj, g2: ri, d2: rj}, g1))
    leftover = quat_ids[-1] if len(quat_ids) % 2 else None
    consumed_central = None
    if leftover is not None:
        g, d = pair_indices(leftover)
        if first_neg is not None:
            ri, li, lj = factor_block("CH")
            blocks.append(_Block({first_neg: ri, g: li, d: lj}, first_neg))
            consumed_central = first_neg
        else:
            li, lj = factor_block("Q", squares=(-1, -1))
            blocks.append(_Block({g: li, d: lj}, g))
    for t in other_ids:
        g, d = pair_indices(t)
        pair = D.pairs[t]
        gi, di = factor_block("Q", squares=(pair.first_square, pair.second_square))
        blocks.append(_Block({g: gi, d: di}, g))
    if first_neg is not None and consumed_central is None:
        (jimg,) = factor_block("C_minus")
        blocks.append(_Block({first_neg: jimg}, first_neg))
    blocks.sort(key=lambda b: b.min_index)

    total = 1
    for b in blocks:
        total *= b.order
    if total != wt.irrep_order:
        raise VerificationError(
            f"assembled order {total} differs from irreducible order {wt.irrep_order}"
        )

    def assemble(gen: int) -> MonomialMatrix:
        acc: Optional[MonomialMatrix] = None
        for b in blocks:
            factor = b.images.get(gen, MonomialMatrix.identity(b.order))
            acc = factor if acc is None else acc.tensor(factor)
        return acc if acc is not None else MonomialMatrix.identity(1)

    # Character slots: every central except the reference complex one.
    slots = [i for i in range(r) if i != first_neg]
    slot_sign = {
        idx: (-1 if character[k] else 1) for k, idx in enumerate(slots)
    }

    images: list[Optional[MonomialMatrix]] = [None] * D.presentation.m
    covered = set()
    for b in blocks:
        covered.update(b.images)
    for gen in covered:
        images[gen] = assemble(gen)
    for i in range(r):
        if i in covered:
            continue
        if D.centrals[i].square == 1:
            images[i] = MonomialMatrix.scalar(total, slot_sign[i])
        else:
            # Remaining complex centrals reuse the reference image up to
            # the character sign; the pair relations force nothing more.
            images[i] = slot_sign[i] * images[first_neg]

    rep = Representation(
        order=total,
        generator_images=tuple(images),
        character=character,
        decomposition=D,
        presentation=D.normal_presentation(),
    )
    rep.verify()
    return rep


def pushforward(R: Representation) -> Representation:
    """Images of the original generators of ``R.decomposition``.

    Each original generator is a signed product of the decomposition
    generators; the exponents come from inverting the basis change over
    GF(2) and the sign from evaluating that product with exact monomial
    arithmetic.
    """
    D = R.decomposition
    P = D.presentation
    if R.presentation != D.normal_presentation():
        raise ValueError("pushforward expects images of the decomposition generators")
    inv = D.basis_change.inverse()
    new_gens = D.new_generators
    images = []
    for i in range(P.m):
        coeffs = inv.row_mask(i)
        factors = [k for k in range(P.m) if (coeffs >> k) & 1]
        word = P.product(new_gens[k] for k in factors)
        if word.mask != 1 << i:
            raise VerificationError(f"basis change inversion failed for generator {i}")
        img = MonomialMatrix.scalar(R.order, word.sign)
        for k in factors:
            img = img @ R.generator_images[k]
        images.append(img)
    out = Representation(
        order=R.order,
        generator_images=tuple(images),
        character=R.character,
        decomposition=D,
        presentation=P,
    )
    out.verify()
    return out


def minimal_images(P: AlgebraPresentation,
                   character: Optional[Sequence[int]] = None) -> Representation:
    """Decompose, build the irrep and push forward in one call."""
    from .decompose import decompose

    D = decompose(P)
    if character is None:
        character = zero_character(D)
    return pushforward(build_irrep(D, character))


def tensor_with_identity(R: Representation, copies: int) -> Representation:
    """Non-minimal representation: every image tensored with ``I(copies)``."""
    if copies < 1:
        raise ValueError("copies must be >= 1")
    if copies == 1:
        return R
    ident = MonomialMatrix.identity(copies)
    return Representation(
        order=R.order * copies,
        generator_images=tuple(img.tensor(ident) for img in R.generator_images),
        character=R.character,
        decomposition=R.decomposition,
        presentation=R.presentation,
    )
