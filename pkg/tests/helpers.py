"""Shared test utilities: independent oracles and enumeration helpers.

The word-rewriting oracle multiplies generator words by literally
applying the defining relations one adjacent step at a time, so it
exercises none of the closed-form sign machinery in the package.
"""

from __future__ import annotations

import itertools

import numpy as np

from qcliff import AlgebraPresentation, MonomialMatrix, SignedMonomial


def word_mul(P: AlgebraPresentation, *words: list[int]) -> tuple[int, tuple[int, ...]]:
    """Multiply generator-index words by stepwise rewriting.

    Swaps adjacent out-of-order generators one at a time (flipping the
    sign when the pair anticommutes) and collapses adjacent equal
    generators to their square.  Returns the sign and the sorted reduced
    word.
    """
    word = [g for w in words for g in w]
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i] > word[i + 1]:
                if P.delta(word[i], word[i + 1]):
                    sign = -sign
                word[i], word[i + 1] = word[i + 1], word[i]
                changed = True
            elif word[i] == word[i + 1]:
                sign *= P.kappa[word[i]]
                del word[i:i + 2]
                changed = True
            else:
                i += 1
    return sign, tuple(word)


def word_of(x: SignedMonomial) -> list[int]:
    return [i for i, e in enumerate(x.exps) if e]


def monomial_of_word(P: AlgebraPresentation, sign: int, word: tuple[int, ...]) -> SignedMonomial:
    exps = [0] * P.m
    for g in word:
        exps[g] = 1
    return P.monomial(exps, sign)


def all_presentations(m: int):
    """Every presentation on m generators: all squares, all pair tables."""
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    for kappa in itertools.product((1, -1), repeat=m):
        for bits in range(1 << len(pairs)):
            anti = [pairs[t] for t in range(len(pairs)) if (bits >> t) & 1]
            yield AlgebraPresentation(kappa, anti)


def random_presentation(rng: np.random.Generator, m: int) -> AlgebraPresentation:
    kappa = [int(k) for k in rng.choice([-1, 1], size=m)]
    anti = [
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if rng.integers(2)
    ]
    return AlgebraPresentation(kappa, anti)


def random_monomial(rng: np.random.Generator, P: AlgebraPresentation) -> SignedMonomial:
    return P.monomial([int(b) for b in rng.integers(0, 2, size=P.m)],
                      int(rng.choice([-1, 1])))


def random_monomial_matrix(rng: np.random.Generator, n: int) -> MonomialMatrix:
    return MonomialMatrix(rng.permutation(n), rng.choice([-1, 1], size=n))


def random_sym_or_skew_monomial(rng: np.random.Generator, n: int) -> MonomialMatrix:
    """Random signed involution: symmetric, or (for even n) skew."""
    idx = list(rng.permutation(n))
    perm = list(range(n))
    signs = [0] * n
    skew = n % 2 == 0 and bool(rng.integers(2))
    pairs = []
    if skew:
        pairs = [(idx[t], idx[t + 1]) for t in range(0, n - 1, 2)]
    else:
        t = 0
        while t < n:
            if t + 1 < n and rng.integers(2):
                pairs.append((idx[t], idx[t + 1]))
                t += 2
            else:
                signs[idx[t]] = int(rng.choice([-1, 1]))
                t += 1
    for i, j in pairs:
        s = int(rng.choice([-1, 1]))
        perm[i], perm[j] = j, i
        signs[i] = s
        signs[j] = -s if skew else s
    return MonomialMatrix(perm, signs)


def random_block_word(rng: np.random.Generator, n: int) -> MonomialMatrix:
    """Random Kronecker word of 2x2 blocks (n must be a power of two).

    Members of this family are always symmetric or skew and pairwise
    commute or anticommute, so greedy anti-amicable growth can reach the
    Hurwitz-Radon bound.
    """
    from qcliff.matrices import ident2, j2, x2, y2, z2

    blocks = [ident2, z2, x2, j2, y2]
    acc = None
    for _ in range(n.bit_length() - 1):
        factor = blocks[rng.integers(5)]()
        acc = factor if acc is None else acc.tensor(factor)
    return acc if acc is not None else MonomialMatrix([0], [int(rng.choice([-1, 1]))])


def grow_anti_amicable_family(rng: np.random.Generator, n: int, sampler, patience: int = 40):
    """Greedy growth: keep sampling, add when anti-amicable with all members."""
    from qcliff import lambda_of_pair

    family = [sampler(rng, n)]
    misses = 0
    while misses < patience:
        candidate = sampler(rng, n)
        if all(lambda_of_pair(candidate, member, side="B") == -1 for member in family):
            family.append(candidate)
            misses = 0
        else:
            misses += 1
    return family
