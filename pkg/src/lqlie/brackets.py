"""Derivations and Lie brackets on the B, Dbi and X alphabets.

``der_A(w, side, target)`` is the concatenation derivation attached to ``w``:
it kills ``b0`` and sends ``b_i`` (i >= 1) to

    sum (-1)^l prod_s C(k_s - 1, l_s - 1) * X(b_{i+l}, block)

over ``l_1 + ... + l_d + l = k_1 + ... + k_d`` with ``l_s >= 1``, where ``w``
has blocks ``(m_s, k_s)`` and trailing ``b0^t`` and
``block = b0^{m_1} b_{l_1} ... b0^{m_d} b_{l_d} b0^t``.  ``X`` is
``b_{i+l} block`` for the right side, ``block b_{i+l}`` for the left side and
their difference for both.
"""
from __future__ import annotations

import enum
from itertools import product
from typing import Callable, Dict, List, Tuple

from .combinat import binom, compositions, multinomial
from .errors import AlphabetError
from .hopfmaps import (
    _admissible_blocks,
    from_dbi,
    join_blocks,
    pi0,
    sec,
    split_blocks,
    to_dbi,
)
from .ncpoly import Alphabet, NcPoly, RawWord, Terms, add_into, add_terms, commutator, concat


class SideTag(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    BOTH = "both"


def _same(p: NcPoly, q: NcPoly, alphabet: Alphabet, operation: str) -> None:
    for r in (p, q):
        if r.alphabet is not alphabet:
            raise AlphabetError(f"{operation} expects {alphabet} polynomials, got {r.alphabet}")


def _derive(target: NcPoly, image: Callable[[object], Terms]) -> NcPoly:
    """Apply the concatenation derivation whose letter images are ``image(letter)``."""
    cache: Dict[object, Terms] = {}
    acc: Terms = {}
    for w, c in target.terms.items():
        for i, a in enumerate(w):
            img = cache.get(a)
            if img is None:
                img = cache[a] = image(a)
            if not img:
                continue
            left, right = w[:i], w[i + 1:]
            for u, e in img.items():
                add_into(acc, left + u + right, c * e)
    return NcPoly._wrap(target.alphabet, acc)


# --------------------------------------------------------------------------
# the derivation d^w on the B alphabet


def _kernel(word: RawWord) -> List[Tuple[int, int, RawWord]]:
    """``(l, coefficient, block)`` triples describing ``d^word``."""
    blocks, trailing = split_blocks(word)
    out = []
    for ls in product(*(range(1, k + 1) for _, k in blocks)):
        c = 1
        for (_, k), l_s in zip(blocks, ls):
            c *= binom(k - 1, l_s - 1)
        l = sum(k for _, k in blocks) - sum(ls)
        block = join_blocks([(m, l_s) for (m, _), l_s in zip(blocks, ls)], trailing)
        out.append((l, c * (-1) ** l, block))
    return out


def _letter_image(w: NcPoly, side: SideTag) -> Callable[[int], Terms]:
    kernels = [(_kernel(word), c) for word, c in w.terms.items()]

    def image(i: int) -> Terms:
        if i == 0:
            return {}
        out: Terms = {}
        for kern, cw in kernels:
            for l, c, block in kern:
                coef = c * cw
                if side is not SideTag.LEFT:
                    add_into(out, (i + l,) + block, coef)
                if side is not SideTag.RIGHT:
                    add_into(out, block + (i + l,), -coef if side is SideTag.BOTH else coef)
        return out

    return image


def der_A(w: NcPoly, side: SideTag, target: NcPoly) -> NcPoly:
    """The derivation ``d^w`` (or its right/left part) applied to ``target``."""
    _same(w, target, Alphabet.B, "der_A")
    return _derive(target, _letter_image(w, SideTag(side)))


def bracket_A(f: NcPoly, g: NcPoly) -> NcPoly:
    """``{f, g}_A = d^f(g) - d^g(f) + [f, g]`` on the B or Dbi alphabet.

    Dbi operands are expanded into the B alphabet and the result is rewritten
    in Dbi letters.
    """
    if f.alphabet is Alphabet.DBI and g.alphabet is Alphabet.DBI:
        return to_dbi(bracket_A(from_dbi(f), from_dbi(g)), check=False)
    _same(f, g, Alphabet.B, "bracket_A")
    both = SideTag.BOTH
    return der_A(f, both, g) - der_A(g, both, f) + commutator(f, g)


# --------------------------------------------------------------------------
# direct Dbi formula (independent check of the round trip)


def der_A_dbi_closed(w: NcPoly, target: NcPoly) -> NcPoly:
    """``d^w`` on Dbi words computed with the multinomial letter formula."""
    _same(w, target, Alphabet.DBI, "der_A")
    parts = []
    for word, cw in w.terms.items():
        ks = [k for k, _ in word]
        ms = [m for _, m in word]
        for ls in product(*(range(1, k + 1) for k in ks)):
            c = cw
            for k, l_s in zip(ks, ls):
                c *= binom(k - 1, l_s - 1)
            l = sum(ks) - sum(ls)
            parts.append((l, c * (-1) ** l, ls, ms))

    def image(letter) -> Terms:
        i, n = letter
        out: Terms = {}
        for l, c, ls, ms in parts:
            d = len(ls)
            for ps in compositions(n, d + 1):
                coef = c * multinomial(n, ps)
                head = (i + l, ps[-1])
                block = tuple((l_s, m + p) for l_s, m, p in zip(ls, ms, ps))
                add_into(out, (head,) + block, coef)
                add_into(out, block + (head,), -coef)
        return out

    return _derive(target, image)


def bracket_A_dbi_closed(f: NcPoly, g: NcPoly) -> NcPoly:
    """``{f, g}_A`` on Dbi computed without leaving the Dbi alphabet."""
    return der_A_dbi_closed(f, g) - der_A_dbi_closed(g, f) + commutator(f, g)


# --------------------------------------------------------------------------
# zero-projected family on words not ending in b0


def _check_admissible(p: NcPoly, operation: str) -> None:
    if p.alphabet is not Alphabet.B:
        raise AlphabetError(f"{operation} expects B polynomials, got {p.alphabet}")
    for word in p.terms:
        _admissible_blocks(word, operation)


def zero_projected_der(w: NcPoly, side: SideTag, v: NcPoly) -> NcPoly:
    """``pi0 ∘ d^{sec(w)} ∘ sec`` (right, left or both parts)."""
    _check_admissible(w, "zero_projected_der")
    _check_admissible(v, "zero_projected_der")
    return pi0(der_A(sec(w), SideTag(side), sec(v)))


def zero_projected_der_closed(w: NcPoly, side: SideTag, v: NcPoly) -> NcPoly:
    """Explicit insertion sums for the zero-projected derivations."""
    _check_admissible(w, "zero_projected_der")
    _check_admissible(v, "zero_projected_der")
    side = SideTag(side)
    if side is SideTag.BOTH:
        return zero_projected_der_closed(w, SideTag.RIGHT, v) - zero_projected_der_closed(
            w, SideTag.LEFT, v
        )
    # (l, coefficient, n, inner block) for every word of w
    pieces = []
    for word, cw in w.terms.items():
        blocks, _ = split_blocks(word)
        ks = [k for _, k in blocks]
        ms = [m for m, _ in blocks]
        for ls in product(*(range(1, k + 1) for k in ks)):
            for ns in product(*(range(m + 1) for m in ms)):
                c = cw
                for k, l_s, m, n_s in zip(ks, ls, ms, ns):
                    c *= binom(k - 1, l_s - 1) * binom(m, n_s)
                l = sum(ks) - sum(ls)
                n = sum(ms) - sum(ns)
                block = join_blocks(list(zip(ns, ls)))
                pieces.append((l, n, c * (-1) ** (l + n), block))
    acc: Terms = {}
    for word, cv in v.terms.items():
        positions = [i for i, s in enumerate(word) if s != 0]
        for i in positions:
            last = i == positions[-1]
            s_i = word[i]
            left, right = word[:i], word[i + 1:]
            for l, n, c, block in pieces:
                if side is SideTag.RIGHT:
                    if last and n:
                        continue
                    middle = (s_i + l,) + block + (0,) * n
                else:
                    middle = block + (0,) * n + (s_i + l,)
                add_into(acc, left + middle + right, c * cv)
    return NcPoly._wrap(Alphabet.B, acc)


def mul0(v: NcPoly, w: NcPoly) -> NcPoly:
    """``v ·0 w = pi0(sec(v) sec(w))``."""
    return pi0(concat(sec(v), sec(w)))


def bracket_A0(v: NcPoly, w: NcPoly) -> NcPoly:
    """``{v, w}_{A,0} = pi0({sec v, sec w}_A)``."""
    return pi0(bracket_A(sec(v), sec(w)))


def bracket_A0_expanded(v: NcPoly, w: NcPoly) -> NcPoly:
    """``d0_v(w) - d0_w(v) + v ·0 w - w ·0 v``, the expanded form of :func:`bracket_A0`."""
    both = SideTag.BOTH
    return (
        zero_projected_der(v, both, w)
        - zero_projected_der(w, both, v)
        + mul0(v, w)
        - mul0(w, v)
    )


# --------------------------------------------------------------------------
# Ihara bracket on the X alphabet


def ihara_der(w: NcPoly, target: NcPoly) -> NcPoly:
    """The derivation ``d_w`` with ``x0 -> 0`` and ``x1 -> [x1, w]``."""
    _same(w, target, Alphabet.X, "ihara_der")
    x1 = NcPoly._wrap(Alphabet.X, {(1,): 1})
    img = commutator(x1, w).terms
    return _derive(target, lambda a: img if a == 1 else {})


def ihara_bracket(f: NcPoly, g: NcPoly) -> NcPoly:
    """``{f, g} = d_f(g) - d_g(f) + [f, g]``."""
    return ihara_der(f, g) - ihara_der(g, f) + commutator(f, g)


# --------------------------------------------------------------------------
# the weight-raising derivation


def delta(p: NcPoly) -> NcPoly:
    """The derivation ``D_{k,m} -> D_{k+1,m+1}`` on the Dbi alphabet."""
    if p.alphabet is not Alphabet.DBI:
        raise AlphabetError(f"delta expects a Dbi polynomial, got {p.alphabet}")
    return _derive(p, lambda a: {((a[0] + 1, a[1] + 1),): 1})
