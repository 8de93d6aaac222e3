import random

from hypothesis import given, settings
from hypothesis import strategies as st

from lqlie import (
    Alphabet,
    NcPoly,
    bracket_A,
    bword,
    ihara_bracket,
    parse,
    pi0,
    piY,
    tau,
    theta,
    thetaX,
    thetaY,
    xword,
    yword,
)

from helpers import random_words_poly

B = bword


def test_piY_examples():
    assert piY(xword(0, 1)) == yword(2)
    assert piY(xword(1, 0)) == 0
    assert piY(parse("x0 x0 x1 - 2*x0 x1 x0 + x1 x0 x0")) == yword(3)


def test_theta_examples():
    assert thetaX(xword(0, 1)) == B(0, 1)
    assert thetaX(NcPoly.one(Alphabet.X)) == NcPoly.one(Alphabet.B)
    assert thetaX(xword(1) - xword(0)) == B(1) - B(0)
    assert thetaY(yword(2, 3)) == B(3, 2)
    assert thetaY(yword(5)) == B(5)
    assert thetaY(yword(1, 1)) == B(1, 1)
    assert theta(NcPoly.zero(Alphabet.X)) == 0
    assert theta(parse("ad0^2(x1)")) == B(0, 0, 1) - 2 * B(0, 1, 0) + B(1, 0, 0) + B(3)


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_projections_of_the_two_embeddings_agree(seed):
    p = random_words_poly(random.Random(seed), Alphabet.X, 6, nterms=4)
    assert tau(pi0(thetaX(p))) == thetaY(piY(p))
    assert pi0(thetaX(p)) == tau(thetaY(piY(p)))


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_thetaX_intertwines_brackets(seed):
    rng = random.Random(seed)
    v = random_words_poly(rng, Alphabet.X, 4)
    w = random_words_poly(rng, Alphabet.X, 4)
    assert bracket_A(thetaX(v), thetaX(w)) == thetaX(ihara_bracket(v, w))
