import random

from hypothesis import given, settings
from hypothesis import strategies as st

from lqlie import (
    Alphabet,
    Bimould,
    CommPoly,
    ari,
    beta,
    beta_inverse,
    bracket_A,
    commutator,
    delta,
    delta_bimould,
    dword,
    is_alternal,
    is_even,
    is_swap_invariant,
    mu,
    swap,
    tau_dbi,
)
from lqlie.bimould import X, Y

from helpers import lq_cells, random_lie, random_words_poly

seeds = st.integers(0, 10**6)


def mono(depth, **powers):
    e = [0] * (2 * depth)
    for name, p in powers.items():
        e[(X if name[0] == "X" else Y)(int(name[1:]))] = p
    return CommPoly(depth, {tuple(e): 1})


def test_beta_examples():
    assert beta(dword((2, 1))) == Bimould([mono(1, X1=1, Y1=1)])
    assert beta(dword((1, 0))) == Bimould([CommPoly.constant(1)])
    assert beta(dword((1, 0), (2, 3))) == Bimould([mono(2, X2=1, Y2=3)])
    p = dword((2, 1)) - 3 * dword((1, 0), (2, 3))
    assert beta_inverse(beta(p)) == p


def test_alternality_examples():
    d10, d20 = dword((1, 0)), dword((2, 0))
    report = is_alternal(beta(d10 * d10))
    assert not report
    (u, v), value = report.witness
    assert u.letters == ((1, 0),) and v.letters == ((1, 0),) and value == 2
    assert is_alternal(beta(commutator(d10, d20)))


def test_swap_examples():
    assert is_swap_invariant(beta(dword((2, 1))))
    report = is_swap_invariant(beta(dword((3, 0))))
    assert not report and report.witness == 1
    assert swap(beta(dword((3, 0)))) == Bimould([mono(1, Y1=2)])
    assert is_swap_invariant(beta(dword((3, 0)) + dword((1, 2))))


def test_mu_concatenates_slots():
    A = beta(dword((2, 0)))
    Bm = beta(dword((1, 1)))
    assert mu(A, Bm) == beta(dword((2, 0), (1, 1)))


def test_ari_small_case():
    A, Bm = beta(dword((1, 0))), beta(dword((2, 0)))
    assert ari(A, Bm) == beta(bracket_A(dword((1, 0)), dword((2, 0))))


@settings(max_examples=30)
@given(seeds)
def test_beta_carries_bracket_to_ari(seed):
    rng = random.Random(seed)
    f = random_lie(rng, Alphabet.DBI, 4)
    g = random_lie(rng, Alphabet.DBI, 4)
    assert beta(bracket_A(f, g)) == ari(beta(f), beta(g))


@settings(max_examples=60)
@given(seeds)
def test_beta_carries_tau_dbi_to_swap(seed):
    f = random_words_poly(random.Random(seed), Alphabet.DBI, 6, nterms=4)
    assert beta(tau_dbi(f)) == swap(beta(f))
    assert swap(swap(beta(f))) == beta(f)


@settings(max_examples=60)
@given(seeds)
def test_beta_carries_delta(seed):
    f = random_words_poly(random.Random(seed), Alphabet.DBI, 6, nterms=4)
    assert beta(delta(f)) == delta_bimould(beta(f))


def test_lq_basis_images_are_alternal_swap_invariant_and_even():
    for _, _, basis in lq_cells(8):
        for phi in basis:
            A = beta(phi)
            assert is_alternal(A) and is_swap_invariant(A) and is_even(A)


def test_ari_preserves_the_basis_image_properties():
    elems = [beta(phi) for k, _, basis in lq_cells(6) for phi in basis]
    for i, A in enumerate(elems):
        for Bm in elems[i + 1:]:
            C = ari(A, Bm)
            assert is_alternal(C) and is_swap_invariant(C)
