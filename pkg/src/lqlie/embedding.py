"""The projection X -> Y and the maps of X- and Y-words into the B alphabet."""
from __future__ import annotations

from .errors import AlphabetError
from .ncpoly import Alphabet, NcPoly, RawWord, Terms


def _require(p: NcPoly, alphabet: Alphabet, operation: str) -> None:
    if p.alphabet is not alphabet:
        raise AlphabetError(f"{operation} expects a {alphabet} polynomial, got {p.alphabet}")


def piY(p: NcPoly) -> NcPoly:
    """``x0^{k1-1} x1 ... x0^{kd-1} x1 -> y_{k1} ... y_{kd}``; words ending in x0 vanish."""
    _require(p, Alphabet.X, "piY")

    def word(w: RawWord) -> Terms:
        if w and w[-1] == 0:
            return {}
        out = []
        run = 0
        for a in w:
            if a == 0:
                run += 1
            else:
                out.append(run + 1)
                run = 0
        return {tuple(out): 1}

    return p.map_words(word, Alphabet.Y)


def thetaX(p: NcPoly) -> NcPoly:
    """Relabel ``x_i -> b_i``."""
    _require(p, Alphabet.X, "thetaX")
    return NcPoly._wrap(Alphabet.B, dict(p.terms))


def thetaY(p: NcPoly) -> NcPoly:
    """``y_{k1} ... y_{kd} -> b_{kd} ... b_{k1}``."""
    _require(p, Alphabet.Y, "thetaY")
    return NcPoly._wrap(Alphabet.B, {w[::-1]: c for w, c in p.terms.items()})


def theta(p: NcPoly) -> NcPoly:
    """``thetaX(p) + thetaY(piY(p))``; a Lie morphism on the linearized double shuffle algebra."""
    return thetaX(p) + thetaY(piY(p))
