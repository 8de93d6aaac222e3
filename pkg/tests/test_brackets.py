import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lqlie import (
    Alphabet,
    NcPoly,
    SideTag,
    TrailingB0Error,
    bracket_A,
    bracket_A0,
    bword,
    commutator,
    delta,
    der_A,
    dword,
    ihara_bracket,
    ihara_der,
    mul0,
    parse,
    pi0,
    rho,
    tau,
    tau_dbi,
    xword,
    zero_projected_der,
)
from lqlie.brackets import (
    bracket_A0_expanded,
    bracket_A_dbi_closed,
    zero_projected_der_closed,
)
from lqlie.spaces import cell_words

from helpers import random_lie, random_words_poly, symmetrize_rho

B = bword
RIGHT, LEFT, BOTH = SideTag.RIGHT, SideTag.LEFT, SideTag.BOTH
seeds = st.integers(0, 10**6)


def test_der_A_examples():
    assert der_A(B(1), BOTH, B(2)) == B(2, 1) - B(1, 2)
    assert der_A(B(2), BOTH, B(1)) == commutator(B(1), B(2)) - commutator(B(2), B(1))
    for w in (B(1), B(0, 2) - B(3, 0), B(2, 0, 1)):
        assert der_A(w, BOTH, B(0)) == 0


def test_bracket_A_examples():
    assert bracket_A(B(1), B(1)) == 0
    assert bracket_A(B(1), B(2)) == 2 * (B(2, 1) - B(1, 2))


def test_zero_projected_examples():
    assert zero_projected_der(B(1), RIGHT, B(2)) == pi0(der_A(B(1), RIGHT, B(2)))
    for side in (RIGHT, LEFT, BOTH):
        assert zero_projected_der(B(1), side, B(1)) == zero_projected_der_closed(B(1), side, B(1))
    with pytest.raises(TrailingB0Error):
        zero_projected_der(B(1, 0), RIGHT, B(1))


def test_mul0_examples():
    assert mul0(B(1), B(2)) == B(1, 2)
    assert mul0(B(0, 1), B(1)) == B(0, 1, 1) - B(1, 0, 1)
    assert mul0(NcPoly.one(Alphabet.B), B(2, 1)) == B(2, 1)
    assert bracket_A0(B(1), B(1)) == 0


def test_ihara_examples():
    x1 = xword(1)
    f = parse("ad0^2(x1)")
    assert ihara_bracket(x1, x1) == 0
    assert ihara_der(f, xword(0)) == 0
    assert ihara_bracket(f, x1) == 0


def test_delta_examples():
    assert delta(dword((1, 0))) == dword((2, 1))
    assert delta(dword((1, 0), (1, 0))) == dword((2, 1), (1, 0)) + dword((1, 0), (2, 1))
    assert delta(NcPoly.zero(Alphabet.DBI)) == 0


@settings(max_examples=40)
@given(seeds)
def test_derivation_splits_into_right_and_left(seed):
    rng = random.Random(seed)
    w = random_words_poly(rng, Alphabet.B, 4)
    v = random_words_poly(rng, Alphabet.B, 4)
    assert der_A(w, BOTH, v) == der_A(w, RIGHT, v) - der_A(w, LEFT, v)


@settings(max_examples=30)
@given(seeds)
def test_bracket_A_jacobi_and_antisymmetry(seed):
    rng = random.Random(seed)
    f, g, h = (random_lie(rng, Alphabet.B, 4) for _ in range(3))
    assert bracket_A(f, g) == -bracket_A(g, f)
    jacobi = (
        bracket_A(f, bracket_A(g, h))
        + bracket_A(g, bracket_A(h, f))
        + bracket_A(h, bracket_A(f, g))
    )
    assert jacobi == 0


@settings(max_examples=30)
@given(seeds)
def test_ihara_jacobi_and_antisymmetry(seed):
    rng = random.Random(seed)
    f, g, h = (random_lie(rng, Alphabet.X, 5) for _ in range(3))
    assert ihara_bracket(f, g) == -ihara_bracket(g, f)
    jacobi = (
        ihara_bracket(f, ihara_bracket(g, h))
        + ihara_bracket(g, ihara_bracket(h, f))
        + ihara_bracket(h, ihara_bracket(f, g))
    )
    assert jacobi == 0


@settings(max_examples=40)
@given(seeds)
def test_dbi_bracket_matches_direct_formula(seed):
    rng = random.Random(seed)
    f = random_words_poly(rng, Alphabet.DBI, 4)
    g = random_words_poly(rng, Alphabet.DBI, 4)
    assert bracket_A(f, g) == bracket_A_dbi_closed(f, g)


@settings(max_examples=40)
@given(seeds)
def test_delta_is_a_derivation_of_the_bracket(seed):
    rng = random.Random(seed)
    f = random_words_poly(rng, Alphabet.DBI, 4)
    g = random_words_poly(rng, Alphabet.DBI, 4)
    assert delta(bracket_A(f, g)) == bracket_A(delta(f), g) + bracket_A(f, delta(g))


def test_tau_dbi_commutes_with_delta_exhaustive():
    for k in range(1, 8):
        for d in range(1, k + 1):
            for w in cell_words(Alphabet.DBI, k, d):
                p = NcPoly(Alphabet.DBI, {w: 1})
                assert tau_dbi(delta(p)) == delta(tau_dbi(p))


@settings(max_examples=40)
@given(seeds)
def test_zero_projected_forms_agree(seed):
    rng = random.Random(seed)
    w = random_words_poly(rng, Alphabet.B, 4, admissible=True)
    v = random_words_poly(rng, Alphabet.B, 4, admissible=True)
    for side in (RIGHT, LEFT, BOTH):
        assert zero_projected_der(w, side, v) == zero_projected_der_closed(w, side, v)
    assert bracket_A0(w, v) == bracket_A0_expanded(w, v)


@settings(max_examples=40)
@given(seeds)
def test_tau_conjugates_zero_projected_derivations(seed):
    rng = random.Random(seed)
    w = random_words_poly(rng, Alphabet.B, 4, admissible=True)
    v = random_words_poly(rng, Alphabet.B, 4, admissible=True)
    right = tau(zero_projected_der(tau(w), RIGHT, tau(v)))
    assert right == zero_projected_der(w, RIGHT, v) + mul0(w, v) - tau(mul0(tau(w), tau(v)))
    assert tau(zero_projected_der(tau(w), LEFT, tau(v))) == zero_projected_der(rho(w), LEFT, v)


@settings(max_examples=20)
@given(seeds)
def test_tau_conjugates_bracket_on_rho_invariants(seed):
    rng = random.Random(seed)
    v = symmetrize_rho(random_words_poly(rng, Alphabet.B, 4, admissible=True))
    w = symmetrize_rho(random_words_poly(rng, Alphabet.B, 4, admissible=True))
    assert rho(v) == v and rho(w) == w
    assert tau(bracket_A0(tau(v), tau(w))) == bracket_A0(v, w)
