"""Words over tagged alphabets and sparse non-commutative polynomials.

Four alphabets are supported:

* ``B``   letters ``b_s`` (s >= 0), weight ``s + [s == 0]``, depth ``[s != 0]``
* ``X``   letters ``x_0, x_1``, weight 1, depth ``[index == 1]``
* ``Y``   letters ``y_k`` (k >= 1), weight k, depth 1
* ``Dbi`` letters ``D_{k,m} = ad(b_0)^m(b_k)`` (k >= 1, m >= 0), weight k + m, depth 1

Internally a word is a plain tuple of letter payloads (``int`` for B, X, Y and
``(k, m)`` for Dbi) and an :class:`NcPoly` is a dict from such tuples to exact
rationals.  Coefficients are Python ``int`` when integral and
:class:`fractions.Fraction` otherwise; both compare and combine exactly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple, Union

from .errors import AlphabetError

Coeff = Union[int, Fraction]
RawWord = Tuple
Terms = Dict[RawWord, Coeff]


class Alphabet(str, enum.Enum):
    B = "B"
    X = "X"
    Y = "Y"
    DBI = "Dbi"

    def __str__(self) -> str:
        return self.value


def normalize(c) -> Coeff:
    """Return ``c`` as an int when integral, otherwise as a reduced Fraction."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return normalize(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return normalize(Fraction(c))
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


# --------------------------------------------------------------------------
# letters


def check_letter(alphabet: Alphabet, payload) -> None:
    if alphabet is Alphabet.B:
        ok = isinstance(payload, int) and payload >= 0
    elif alphabet is Alphabet.X:
        ok = payload in (0, 1) and isinstance(payload, int)
    elif alphabet is Alphabet.Y:
        ok = isinstance(payload, int) and payload >= 1
    elif alphabet is Alphabet.DBI:
        ok = (
            isinstance(payload, tuple)
            and len(payload) == 2
            and all(isinstance(v, int) for v in payload)
            and payload[0] >= 1
            and payload[1] >= 0
        )
    else:  # pragma: no cover
        ok = False
    if not ok:
        raise AlphabetError(f"invalid {alphabet} letter payload {payload!r}")


def letter_bigrade(alphabet: Alphabet, payload) -> Tuple[int, int]:
    if alphabet is Alphabet.B:
        return (1, 0) if payload == 0 else (payload, 1)
    if alphabet is Alphabet.X:
        return (1, payload)
    if alphabet is Alphabet.Y:
        return (payload, 1)
    return (payload[0] + payload[1], 1)


@dataclass(frozen=True)
class Letter:
    alphabet: Alphabet
    payload: object

    def __post_init__(self):
        object.__setattr__(self, "alphabet", Alphabet(self.alphabet))
        check_letter(self.alphabet, self.payload)

    @property
    def weight(self) -> int:
        return letter_bigrade(self.alphabet, self.payload)[0]

    @property
    def depth(self) -> int:
        return letter_bigrade(self.alphabet, self.payload)[1]

    def __str__(self) -> str:
        return format_letter(self.alphabet, self.payload)


def raw_bigrade(alphabet: Alphabet, word: RawWord) -> Tuple[int, int]:
    """Weight and depth of a raw word."""
    if alphabet is Alphabet.B:
        zeros = word.count(0)
        return sum(word) + zeros, len(word) - zeros
    if alphabet is Alphabet.X:
        return len(word), sum(word)
    if alphabet is Alphabet.Y:
        return sum(word), len(word)
    return sum(k + m for k, m in word), len(word)


@dataclass(frozen=True)
class Word:
    """An immutable word: a sequence of letter payloads over one alphabet."""

    alphabet: Alphabet
    letters: RawWord = ()

    def __post_init__(self):
        object.__setattr__(self, "alphabet", Alphabet(self.alphabet))
        letters = tuple(tuple(a) if isinstance(a, list) else a for a in self.letters)
        for a in letters:
            check_letter(self.alphabet, a)
        object.__setattr__(self, "letters", letters)

    @property
    def weight(self) -> int:
        return raw_bigrade(self.alphabet, self.letters)[0]

    @property
    def depth(self) -> int:
        return raw_bigrade(self.alphabet, self.letters)[1]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(self.alphabet, a) for a in self.letters)

    def __add__(self, other: "Word") -> "Word":
        if other.alphabet is not self.alphabet:
            raise AlphabetError(f"cannot concatenate {self.alphabet} and {other.alphabet} words")
        return Word(self.alphabet, self.letters + other.letters)

    def __str__(self) -> str:
        return format_word(self.alphabet, self.letters)


def wt_dep(w: Word) -> Tuple[int, int]:
    """Return ``(weight, depth)`` of a word."""
    return raw_bigrade(w.alphabet, w.letters)


# --------------------------------------------------------------------------
# polynomials


def add_into(acc: Terms, word: RawWord, c: Coeff) -> None:
    v = acc.get(word, 0) + c
    if v:
        acc[word] = v
    else:
        acc.pop(word, None)


def add_terms(acc: Terms, terms: Mapping[RawWord, Coeff], scale: Coeff = 1) -> None:
    for w, c in terms.items():
        add_into(acc, w, c * scale)


class NcPoly:
    """A finite linear combination of words over one alphabet.

    Instances are immutable: arithmetic returns new objects and the term map is
    never exposed for mutation.
    """

    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, alphabet, terms: Mapping | Iterable = (), *, _trusted: bool = False):
        self.alphabet = Alphabet(alphabet)
        self._hash = None
        if _trusted:
            self._terms = terms
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Terms = {}
        for w, c in items:
            if isinstance(w, Word):
                if w.alphabet is not self.alphabet:
                    raise AlphabetError(f"{w.alphabet} word in a {self.alphabet} polynomial")
                w = w.letters
            else:
                w = tuple(tuple(a) if isinstance(a, list) else a for a in w)
                for a in w:
                    check_letter(self.alphabet, a)
            add_into(clean, w, normalize(c))
        self._terms = clean

    @classmethod
    def _wrap(cls, alphabet: Alphabet, terms: Terms) -> "NcPoly":
        return cls(alphabet, terms, _trusted=True)

    @classmethod
    def zero(cls, alphabet) -> "NcPoly":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet) -> "NcPoly":
        return cls._wrap(Alphabet(alphabet), {(): 1})

    @classmethod
    def from_word(cls, alphabet, letters: Iterable, coeff=1) -> "NcPoly":
        return cls(alphabet, [(tuple(letters), coeff)])

    # -- container protocol -------------------------------------------------

    @property
    def terms(self) -> Mapping[RawWord, Coeff]:
        """Read-only view of the raw term map (do not mutate)."""
        return self._terms

    def items(self):
        return self._terms.items()

    def words(self) -> Iterator[Word]:
        return (Word(self.alphabet, w) for w in self._terms)

    def __iter__(self) -> Iterator[Tuple[Word, Coeff]]:
        for w in sorted(self._terms, key=self._sort_key):
            yield Word(self.alphabet, w), self._terms[w]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, w) -> Coeff:
        if isinstance(w, Word):
            if w.alphabet is not self.alphabet:
                raise AlphabetError(f"{w.alphabet} word queried in a {self.alphabet} polynomial")
            w = w.letters
        return self._terms.get(tuple(w), 0)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, NcPoly):
            if not self._terms and not other._terms:
                return True
            return self.alphabet is other.alphabet and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.alphabet, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "NcPoly") -> None:
        if other.alphabet is not self.alphabet:
            raise AlphabetError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def _coerce(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return NcPoly._wrap(self.alphabet, {(): normalize(other)} if other else {})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        add_terms(acc, other._terms)
        return NcPoly._wrap(self.alphabet, acc)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._wrap(self.alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        add_terms(acc, other._terms, -1)
        return NcPoly._wrap(self.alphabet, acc)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return concat(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "NcPoly":
        c = normalize(c)
        if not c:
            return NcPoly.zero(self.alphabet)
        return NcPoly._wrap(self.alphabet, {w: normalize(v * c) for w, v in self._terms.items()})

    def __truediv__(self, c):
        return self.scale(Fraction(1) / normalize(c))

    # -- gradings -----------------------------------------------------------

    def bigradings(self) -> set:
        return {raw_bigrade(self.alphabet, w) for w in self._terms}

    def components(self) -> Dict[Tuple[int, int], "NcPoly"]:
        """Split into bihomogeneous (weight, depth) components."""
        out: Dict[Tuple[int, int], Terms] = {}
        for w, c in self._terms.items():
            out.setdefault(raw_bigrade(self.alphabet, w), {})[w] = c
        return {k: NcPoly._wrap(self.alphabet, t) for k, t in sorted(out.items())}

    def is_homogeneous(self) -> bool:
        return len(self.bigradings()) <= 1

    def map_words(self, fn: Callable[[RawWord], Mapping[RawWord, Coeff]], alphabet=None) -> "NcPoly":
        """Extend a word -> polynomial map linearly."""
        target = Alphabet(alphabet) if alphabet is not None else self.alphabet
        acc: Terms = {}
        for w, c in self._terms.items():
            add_terms(acc, fn(w), c)
        return NcPoly._wrap(target, acc)

    # -- display ------------------------------------------------------------

    def _sort_key(self, w: RawWord):
        return raw_bigrade(self.alphabet, w) + (w,)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"NcPoly({self.alphabet.value!r}, {format_poly(self)!r})"


# --------------------------------------------------------------------------
# constructors


def bword(*indices: int, coeff=1) -> NcPoly:
    """``bword(3, 0, 2)`` is the word b_3 b_0 b_2."""
    return NcPoly.from_word(Alphabet.B, indices, coeff)


def xword(*indices: int, coeff=1) -> NcPoly:
    return NcPoly.from_word(Alphabet.X, indices, coeff)


def yword(*indices: int, coeff=1) -> NcPoly:
    return NcPoly.from_word(Alphabet.Y, indices, coeff)


def dword(*pairs, coeff=1) -> NcPoly:
    """``dword((2, 1), (1, 0))`` is the word D_{2,1} D_{1,0}."""
    return NcPoly.from_word(Alphabet.DBI, [tuple(p) for p in pairs], coeff)


# --------------------------------------------------------------------------
# products


def concat(p: NcPoly, q: NcPoly) -> NcPoly:
    """Bilinear concatenation product."""
    p._check(q)
    acc: Terms = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            add_into(acc, u + v, a * b)
    return NcPoly._wrap(p.alphabet, acc)


def commutator(p: NcPoly, q: NcPoly) -> NcPoly:
    return concat(p, q) - concat(q, p)


def _shuffle_words(u: RawWord, v: RawWord, memo: dict, stuffle: bool) -> Terms:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    key = (u, v)
    hit = memo.get(key)
    if hit is not None:
        return hit
    a, b = u[0], v[0]
    out: Terms = {}
    for w, c in _shuffle_words(u[1:], v, memo, stuffle).items():
        add_into(out, (a,) + w, c)
    for w, c in _shuffle_words(u, v[1:], memo, stuffle).items():
        add_into(out, (b,) + w, c)
    if stuffle and a > 0 and b > 0:
        for w, c in _shuffle_words(u[1:], v[1:], memo, stuffle).items():
            add_into(out, (a + b,) + w, c)
    memo[key] = out
    return out


def _bilinear(p: NcPoly, q: NcPoly, stuffle: bool) -> NcPoly:
    p._check(q)
    memo: dict = {}
    acc: Terms = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            add_terms(acc, _shuffle_words(u, v, memo, stuffle), a * b)
    return NcPoly._wrap(p.alphabet, acc)


def shuffle(p: NcPoly, q: NcPoly) -> NcPoly:
    """Shuffle product; defined over every alphabet."""
    return _bilinear(p, q, stuffle=False)


def shuffle_words(u: RawWord, v: RawWord) -> Terms:
    return _shuffle_words(tuple(u), tuple(v), {}, False)


def balanced_quasi_shuffle(p: NcPoly, q: NcPoly) -> NcPoly:
    """The balanced quasi-shuffle product on the B alphabet.

    ``b_i v * b_j w = b_i(v * b_j w) + b_j(b_i v * w) + [ij > 0] b_{i+j}(v * w)``
    """
    if p.alphabet is not Alphabet.B or q.alphabet is not Alphabet.B:
        raise AlphabetError("balanced quasi-shuffle is defined on the B alphabet only")
    return _bilinear(p, q, stuffle=True)


def gr_D(p: NcPoly) -> NcPoly:
    """Projection onto the maximal-depth homogeneous component."""
    if not p:
        return p
    depths = {w: raw_bigrade(p.alphabet, w)[1] for w in p._terms}
    top = max(depths.values())
    return NcPoly._wrap(p.alphabet, {w: c for w, c in p._terms.items() if depths[w] == top})


def coeff(p: NcPoly, w) -> Coeff:
    """Coefficient ``(p | w)``; zero when ``w`` is absent."""
    if isinstance(w, NcPoly):
        p._check(w)
        if len(w) != 1 or next(iter(w._terms.values())) != 1:
            raise ValueError("coeff expects a single word")
        w = next(iter(w._terms))
    return p.coefficient(w)


# --------------------------------------------------------------------------
# formatting


def format_letter(alphabet: Alphabet, a) -> str:
    if alphabet is Alphabet.B:
        return f"b{a}"
    if alphabet is Alphabet.X:
        return f"x{a}"
    if alphabet is Alphabet.Y:
        return f"y{a}"
    return f"D({a[0]},{a[1]})"


def format_word(alphabet: Alphabet, word: RawWord) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        atom = format_letter(alphabet, word[i])
        parts.append(atom if j - i == 1 else f"{atom}^{j - i}")
        i = j
    return " ".join(parts)


def format_coeff(c: Coeff) -> str:
    c = normalize(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_poly(p: NcPoly) -> str:
    """Render in canonical (weight, depth, letters) order, e.g. ``b0^2 b1 - 2*b0 b1 b0``."""
    if not p:
        return "0"
    out = []
    for k, w in enumerate(sorted(p.terms, key=p._sort_key)):
        c = p.terms[w]
        neg = c < 0
        mag = -c if neg else c
        if not w:
            body = format_coeff(mag)
        elif mag == 1:
            body = format_word(p.alphabet, w)
        else:
            body = f"{format_coeff(mag)}*{format_word(p.alphabet, w)}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def ad_power(a: NcPoly, n: int, p: NcPoly) -> NcPoly:
    """``ad(a)^n (p)`` for the commutator ``ad(a)(p) = a p - p a``."""
    for _ in range(n):
        p = commutator(a, p)
    return p
