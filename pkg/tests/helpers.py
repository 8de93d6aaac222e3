"""Seeded generators and shared fixtures for the test suite."""
from __future__ import annotations

import random
from functools import lru_cache
from typing import List, Tuple

from lqlie import Alphabet, NcPoly, basis_lq, basis_ls, rho
from lqlie.spaces import Limits, cell_words, lyndon_basis

WIDE = Limits(max_weight=10, max_depth=10)

NONZERO = [c for c in range(-3, 4) if c]


def random_words_poly(
    rng: random.Random, alphabet: Alphabet, max_weight: int, nterms: int = 3, admissible: bool = False
) -> NcPoly:
    """A sum of ``nterms`` random words of weight at most ``max_weight``."""
    terms = {}
    while len(terms) < nterms:
        k = rng.randint(1, max_weight)
        d = rng.randint(0 if alphabet is Alphabet.B else 1, k)
        words = [w for w in _cell(alphabet, k, d) if not (admissible and w[-1] == 0)]
        if words:
            terms[rng.choice(words)] = rng.choice(NONZERO)
    return NcPoly(alphabet, terms)


@lru_cache(maxsize=None)
def _cell(alphabet: Alphabet, k: int, d: int) -> Tuple:
    return tuple(cell_words(alphabet, k, d))


@lru_cache(maxsize=None)
def _lie_cell(alphabet: Alphabet, k: int, d: int) -> Tuple[NcPoly, ...]:
    return tuple(lyndon_basis(alphabet, k, d))


def random_lie(rng: random.Random, alphabet: Alphabet, max_weight: int, nterms: int = 2) -> NcPoly:
    """A nonzero combination of bracketed Lyndon words of weight at most ``max_weight``."""
    out = NcPoly.zero(alphabet)
    while not out:
        for _ in range(nterms):
            k = rng.randint(1, max_weight)
            d = rng.randint(1, k) if alphabet is not Alphabet.X else rng.randint(1, max(1, k - 1))
            gens = _lie_cell(alphabet, k, d)
            if gens:
                out = out + rng.choice(NONZERO) * rng.choice(gens)
    return out


def symmetrize_rho(v: NcPoly) -> NcPoly:
    """Sum over the (finite) rho-orbit of ``v``; the result is rho-invariant."""
    out, q = v, rho(v)
    while q != v:
        out = out + q
        q = rho(q)
    return out


@lru_cache(maxsize=None)
def lq_cells(max_weight: int) -> List[Tuple[int, int, Tuple[NcPoly, ...]]]:
    """Nonzero lq cells of weight at most ``max_weight`` as ``(k, d, basis)``."""
    out = []
    for k in range(1, max_weight + 1):
        for d in range(1, k + 1):
            b = basis_lq(k, d, WIDE).basis
            if b:
                out.append((k, d, b))
    return out


@lru_cache(maxsize=None)
def ls_cells(max_weight: int) -> List[Tuple[int, int, Tuple[NcPoly, ...]]]:
    out = []
    for k in range(1, max_weight + 1):
        for d in range(1, k + 1):
            b = basis_ls(k, d, WIDE).basis
            if b:
                out.append((k, d, b))
    return out
