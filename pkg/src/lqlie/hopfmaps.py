"""Primitivity, the antipode family and the involution/projection maps.

The B-alphabet words handled here are decomposed into *blocks*: a word
``b0^{m1} b_{k1} ... b0^{md} b_{kd} b0^{t}`` is represented by the list
``[(m1, k1), ..., (md, kd)]`` and the trailing exponent ``t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .combinat import binom, compositions, multinomial
from .errors import AlphabetError, NotInDbiError, TrailingB0Error
from .ncpoly import (
    Alphabet,
    Coeff,
    NcPoly,
    RawWord,
    Terms,
    Word,
    add_into,
    add_terms,
    format_word,
    raw_bigrade,
)

Blocks = List[Tuple[int, int]]


def _require(p: NcPoly, alphabet: Alphabet, operation: str) -> None:
    if p.alphabet is not alphabet:
        raise AlphabetError(f"{operation} expects a {alphabet} polynomial, got {p.alphabet}")


def split_blocks(word: RawWord) -> Tuple[Blocks, int]:
    """Decompose a B-word into ``[(m_s, k_s)]`` blocks and the trailing b0 count."""
    blocks: Blocks = []
    zeros = 0
    for s in word:
        if s == 0:
            zeros += 1
        else:
            blocks.append((zeros, s))
            zeros = 0
    return blocks, zeros


def join_blocks(blocks: Sequence[Tuple[int, int]], trailing: int = 0) -> RawWord:
    out: list = []
    for m, k in blocks:
        out.extend([0] * m)
        out.append(k)
    out.extend([0] * trailing)
    return tuple(out)


def _admissible_blocks(word: RawWord, operation: str) -> Blocks:
    blocks, trailing = split_blocks(word)
    if trailing:
        raise TrailingB0Error(format_word(Alphabet.B, word), operation)
    return blocks


# --------------------------------------------------------------------------
# primitivity


@dataclass(frozen=True)
class PrimitivityReport:
    """Outcome of :func:`is_primitive`.

    When the input is not primitive, ``witness`` holds nonempty words
    ``(u, v)`` and ``value`` the nonzero pairing ``(p | u ⧢ v)``.
    """

    is_primitive: bool
    witness: Optional[Tuple[Word, Word]] = None
    value: Coeff = 0

    def __bool__(self) -> bool:
        return self.is_primitive


def reduced_coproduct(p: NcPoly) -> Dict[Tuple[RawWord, RawWord], Coeff]:
    """Nonzero entries ``(u, v) -> (p | u ⧢ v)`` over nonempty ``u, v``.

    This is the reduced deshuffle coproduct: each word is split into the
    subword on a proper nonempty set of positions and its complement.
    """
    acc: Dict[Tuple[RawWord, RawWord], Coeff] = {}
    for w, c in p.terms.items():
        n = len(w)
        idx = range(n)
        for r in range(1, n):
            for chosen in combinations(idx, r):
                mask = set(chosen)
                u = tuple(w[i] for i in chosen)
                v = tuple(w[i] for i in idx if i not in mask)
                add_into(acc, (u, v), c)
    return acc


def is_primitive(p: NcPoly) -> PrimitivityReport:
    """Decide whether ``p`` is primitive for the deshuffle coproduct.

    A nonzero constant term also breaks primitivity; it is reported with the
    witness ``(1, 1)`` since ``Δ(1) = 1 ⊗ 1``.
    """
    const = p.coefficient(())
    if const:
        empty = Word(p.alphabet, ())
        return PrimitivityReport(False, (empty, empty), const)
    entries = reduced_coproduct(p)
    if not entries:
        return PrimitivityReport(True)
    key = lambda uv: (len(uv[0]) + len(uv[1]), raw_bigrade(p.alphabet, uv[0] + uv[1]), uv)
    u, v = min(entries, key=key)
    return PrimitivityReport(False, (Word(p.alphabet, u), Word(p.alphabet, v)), entries[(u, v)])


# --------------------------------------------------------------------------
# simple linear maps


def antipode_S(p: NcPoly) -> NcPoly:
    """Antipode of the shuffle Hopf algebra: ``w -> (-1)^len(w) reversed(w)``."""
    return p.map_words(lambda w: {w[::-1]: -1 if len(w) % 2 else 1})


def pi0(p: NcPoly) -> NcPoly:
    """Drop every word ending in b0."""
    _require(p, Alphabet.B, "pi0")
    return NcPoly._wrap(Alphabet.B, {w: c for w, c in p.terms.items() if not w or w[-1] != 0})


def partial0(p: NcPoly) -> NcPoly:
    """The concatenation derivation with ``b0 -> 1`` and ``b_i -> 0``."""
    _require(p, Alphabet.B, "partial0")

    def word(w: RawWord) -> Terms:
        out: Terms = {}
        for i, s in enumerate(w):
            if s == 0:
                add_into(out, w[:i] + w[i + 1:], 1)
        return out

    return p.map_words(word)


def tau(p: NcPoly) -> NcPoly:
    """The involution ``b0^{m1} b_{k1} ... b0^{md} b_{kd} -> b0^{kd-1} b_{md+1} ... b0^{k1-1} b_{m1+1}``."""
    _require(p, Alphabet.B, "tau")

    def word(w: RawWord) -> Terms:
        blocks = _admissible_blocks(w, "tau")
        return {join_blocks([(k - 1, m + 1) for m, k in reversed(blocks)]): 1}

    return p.map_words(word)


# --------------------------------------------------------------------------
# sec and its closed form


def _ad_b0_word(n: int, w: RawWord) -> Terms:
    """``ad(b0)^n`` applied to a single word."""
    out: Terms = {}
    for j in range(n + 1):
        c = binom(n, j) * (-1) ** (n - j)
        add_into(out, (0,) * j + w + (0,) * (n - j), c)
    return out


def _sec_blocks(blocks: Tuple[Tuple[int, int], ...], memo: dict) -> Terms:
    if not blocks:
        return {(): 1}
    hit = memo.get(blocks)
    if hit is not None:
        return hit
    (m, k), rest = blocks[0], blocks[1:]
    out: Terms = {}
    for w, c in _sec_blocks(rest, memo).items():
        add_terms(out, _ad_b0_word(m, (k,) + w), c)
    memo[blocks] = out
    return out


def sec(p: NcPoly) -> NcPoly:
    """Section of ``pi0``: nested ``ad(b0)^{m1}(b_{k1} ad(b0)^{m2}(b_{k2} ...))``."""
    _require(p, Alphabet.B, "sec")
    memo: dict = {}
    return p.map_words(lambda w: _sec_blocks(tuple(_admissible_blocks(w, "sec")), memo))


def sec_closed(p: NcPoly) -> NcPoly:
    """Closed binomial expansion of :func:`sec`, kept as an independent check."""
    _require(p, Alphabet.B, "sec")

    def word(w: RawWord) -> Terms:
        blocks = _admissible_blocks(w, "sec")
        ms = [m for m, _ in blocks]
        out: Terms = {}
        for ns in product(*(range(m + 1) for m in ms)):
            n = sum(ms) - sum(ns)
            c = (-1) ** n
            for m, ni in zip(ms, ns):
                c *= binom(m, ni)
            body = join_blocks([(ni, k) for ni, (_, k) in zip(ns, blocks)], n)
            add_into(out, body, c)
        return out

    return p.map_words(word)


def sec_via_partial0(p: NcPoly) -> NcPoly:
    """``sum_n (-1)^n / n! * partial0^n(p) b0^n``, a third route to :func:`sec`."""
    _require(p, Alphabet.B, "sec")
    for w in p.terms:
        _admissible_blocks(w, "sec")
    acc: Terms = {}
    cur = p
    n = 0
    while cur:
        scale = Fraction((-1) ** n, factorial(n))
        for w, c in cur.terms.items():
            add_into(acc, w + (0,) * n, c * scale)
        cur = partial0(cur)
        n += 1
    return NcPoly(Alphabet.B, acc)


# --------------------------------------------------------------------------
# rho and S0


def rho(p: NcPoly) -> NcPoly:
    """The block-rotating map whose fixed points include ``pi0`` of every lq element.

    The empty word is sent to itself.
    """
    _require(p, Alphabet.B, "rho")

    def word(w: RawWord) -> Terms:
        blocks = _admissible_blocks(w, "rho")
        if not blocks:
            return {(): 1}
        d = len(blocks)
        K = sum(k for _, k in blocks)
        M = sum(m for m, _ in blocks)
        head = blocks[:-1]
        out: Terms = {}
        ranges = [range(1, k + 1) for _, k in head] + [range(m + 1) for m, _ in head]
        for choice in product(*ranges):
            ls, ns = choice[: d - 1], choice[d - 1:]
            ld, nd = K - sum(ls), M - sum(ns)
            c = (-1) ** (ld + nd - 1)
            for (m, k), l, n in zip(head, ls, ns):
                c *= binom(k - 1, l - 1) * binom(m, n)
            body = [(nd, ld)] + list(zip(ns, ls))
            add_into(out, join_blocks(body), c)
        return out

    return p.map_words(word)


def S0(p: NcPoly) -> NcPoly:
    """``pi0 ∘ S ∘ sec``."""
    return pi0(antipode_S(sec(p)))


def S0_closed(p: NcPoly) -> NcPoly:
    """Closed binomial form of :func:`S0`, kept as an independent check."""
    _require(p, Alphabet.B, "S0")

    def word(w: RawWord) -> Terms:
        blocks = _admissible_blocks(w, "S0")
        d = len(blocks)
        if d == 0:
            return {(): 1}
        M = sum(m for m, _ in blocks)
        tail = blocks[1:]
        out: Terms = {}
        for ns in product(*(range(m + 1) for m, _ in tail)):
            n1 = M - sum(ns)
            c = (-1) ** d
            for (m, _), n in zip(tail, ns):
                c *= (-1) ** n * binom(m, n)
            # b0^{n1} b_{kd} b0^{nd} b_{k_{d-1}} ... b0^{n2} b_{k1}
            ks = [k for _, k in reversed(blocks)]
            zs = [n1] + list(reversed(ns))
            add_into(out, join_blocks(list(zip(zs, ks))), c)
        return out

    return p.map_words(word)


# --------------------------------------------------------------------------
# the Dbi alphabet


def from_dbi(p: NcPoly) -> NcPoly:
    """Expand every letter ``D_{k,m}`` as ``ad(b0)^m(b_k)``."""
    _require(p, Alphabet.DBI, "from_dbi")
    letter_cache: Dict[Tuple[int, int], Terms] = {}

    def letter(km: Tuple[int, int]) -> Terms:
        hit = letter_cache.get(km)
        if hit is None:
            hit = letter_cache[km] = _ad_b0_word(km[1], (km[0],))
        return hit

    def word(w: RawWord) -> Terms:
        acc: Terms = {(): 1}
        for km in w:
            nxt: Terms = {}
            for u, a in acc.items():
                for v, b in letter(km).items():
                    add_into(nxt, u + v, a * b)
            acc = nxt
        return acc

    return p.map_words(word, Alphabet.B)


def _ad_dbi_word(n: int, w: RawWord) -> Terms:
    """``ad(b0)^n`` on a Dbi word, where ``ad(b0)`` raises one ``m`` index by 1."""
    if n == 0:
        return {w: 1}
    if not w:
        return {}
    out: Terms = {}
    for ps in compositions(n, len(w)):
        c = multinomial(n, ps)
        add_into(out, tuple((k, m + p) for (k, m), p in zip(w, ps)), c)
    return out


def _sec_dbi_blocks(blocks: Tuple[Tuple[int, int], ...], memo: dict) -> Terms:
    if not blocks:
        return {(): 1}
    hit = memo.get(blocks)
    if hit is not None:
        return hit
    (m, k), rest = blocks[0], blocks[1:]
    inner = _sec_dbi_blocks(rest, memo)
    out: Terms = {}
    for j in range(m + 1):
        c = binom(m, j)
        for w, a in inner.items():
            for v, b in _ad_dbi_word(m - j, w).items():
                add_into(out, ((k, j),) + v, c * a * b)
    memo[blocks] = out
    return out


def sec_to_dbi(p: NcPoly) -> NcPoly:
    """:func:`sec` with its result written in the Dbi alphabet."""
    _require(p, Alphabet.B, "sec")
    memo: dict = {}
    return p.map_words(
        lambda w: _sec_dbi_blocks(tuple(_admissible_blocks(w, "sec")), memo), Alphabet.DBI
    )


def to_dbi(p: NcPoly, check: bool = True) -> NcPoly:
    """Rewrite a B-polynomial lying in the span of D-words in the Dbi alphabet.

    Membership is tested through ``partial0(p) == 0``; with ``check`` the
    expansion of the result is also compared against ``p``.
    """
    _require(p, Alphabet.B, "to_dbi")
    if partial0(p):
        raise NotInDbiError("polynomial is not in the span of D-words (partial0 does not vanish)")
    out = sec_to_dbi(pi0(p))
    if check and from_dbi(out) != p:
        raise NotInDbiError("polynomial is not in the span of D-words (reassembly mismatch)")
    return out


def tau_dbi(p: NcPoly) -> NcPoly:
    """``sec ∘ tau ∘ pi0`` on the Dbi alphabet."""
    _require(p, Alphabet.DBI, "tau_dbi")
    return sec_to_dbi(tau(pi0(from_dbi(p))))


def tau_dbi_closed(p: NcPoly) -> NcPoly:
    """Closed multinomial form of :func:`tau_dbi`, kept as an independent check."""
    _require(p, Alphabet.DBI, "tau_dbi")

    def word(w: RawWord) -> Terms:
        d = len(w)
        if d == 0:
            return {(): 1}
        ks = [k for k, _ in w]
        ms = [m for _, m in w]
        out: Terms = {}
        l_choices = [list(compositions(ks[s] - 1, s + 1)) for s in range(d)]
        n_choices = [range(ms[s] + 1) for s in range(d - 1)]
        for ls in product(*l_choices):
            lc = 1
            for s in range(d):
                lc *= multinomial(ks[s] - 1, ls[s])
            for ns_head in product(*n_choices):
                ns = list(ns_head) + [ms[-1]]
                c = lc
                for s in range(d):
                    c *= binom(ms[s], ns[s]) * (-1) ** (ms[s] + ns[s])
                letters = []
                for t in range(d, 0, -1):  # t counts from the right end
                    prev_m = ms[t - 2] if t >= 2 else 0
                    prev_n = ns[t - 2] if t >= 2 else 0
                    first = ns[t - 1] + prev_m - prev_n + 1
                    second = sum(ls[s][t - 1] for s in range(t - 1, d))
                    letters.append((first, second))
                add_into(out, tuple(letters), c)
        return out

    return p.map_words(word)
