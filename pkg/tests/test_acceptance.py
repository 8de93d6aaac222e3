"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line (shown in the terminal summary) before
asserting, so a failing criterion is reported without hiding the others.
"""
import random
import time

from lqlie import (
    Alphabet,
    NcPoly,
    S0,
    ari,
    basis_ls,
    beta,
    bracket_A,
    bracket_A0,
    delta,
    dim_table,
    from_dbi,
    ihara_bracket,
    is_even,
    is_in_lq,
    parse,
    pi0,
    piY,
    rho,
    sec,
    tau,
    tau_dbi,
    theta,
    thetaX,
    thetaY,
)
from lqlie.brackets import SideTag, mul0, zero_projected_der
from lqlie.hopfmaps import S0_closed, sec_via_partial0, tau_dbi_closed
from lqlie.identities import collapse_kl, collapse_mn, full_identity, identity_box, k_side_params, m_side_params
from lqlie.linalg import sparse_rank
from lqlie.spaces import Limits, basis_lq, cell_words

from acceptance_log import record
from helpers import lq_cells, ls_cells, random_lie, random_words_poly, symmetrize_rho

TWELVE_WORD_ELEMENT = (
    "b3 b0 b2 b0 b0 - b2 b0 b3 b0 b0 + b2 b0 b0 b3 b0 - b3 b0 b0 b2 b0"
    " - b0 b0 b2 b3 b0 + b0 b0 b3 b2 b0 + b0 b2 b3 b0 b0 - b0 b3 b2 b0 b0"
    " - b0 b0 b3 b0 b2 + b0 b0 b2 b0 b3 - b0 b2 b0 b0 b3 + b0 b3 b0 b0 b2"
)


def _words(alphabet, max_weight, admissible=False):
    for k in range(1, max_weight + 1):
        for d in range(0, k + 1):
            for w in cell_words(alphabet, k, d):
                if not (admissible and w[-1] == 0):
                    yield NcPoly(alphabet, {w: 1})


def test_criterion_01_twelve_word_element():
    start = time.perf_counter()
    p = parse(TWELVE_WORD_ELEMENT)
    report = is_in_lq(p)
    elapsed = time.perf_counter() - start
    ok = bool(report) and p.bigradings() == {(8, 2)} and len(p) == 12 and elapsed < 1
    record(1, "12-word weight-8 depth-2 element lies in lq", ok, f"{elapsed:.3f}s")
    assert ok, report


def test_criterion_02_parity_sweep():
    start = time.perf_counter()
    bad = []
    for space in ("lq", "ls"):
        for k, d, dim in dim_table(space, 9, 5):
            if (k - d) % 2 and dim:
                bad.append((space, k, d, dim))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    record(2, "dim is 0 whenever weight and depth differ in parity (k<=9, d<=5)", ok, f"{elapsed:.1f}s, violations {bad}")
    assert ok


def _depth_one_orbit_count(k):
    """Count tau_Dbi orbits on the letters D_{k-m,m} that survive the parity condition."""
    letters = [NcPoly(Alphabet.DBI, {((k - m, m),): 1}) for m in range(k)]
    # the depth-1 parity condition removes every letter when k is even
    if k % 2 == 0:
        return 0
    seen, orbits = set(), 0
    for letter in letters:
        if letter in seen:
            continue
        image = tau_dbi(letter)
        assert image in letters, "tau_Dbi must permute the letters of one weight"
        seen.update({letter, image})
        orbits += 1
    return orbits


def test_criterion_03_depth_one_dimensions():
    rows = []
    for k in range(1, 10):
        formula = (k + 1) // 2 if k % 2 else 0
        rows.append((k, basis_lq(k, 1).dim, _depth_one_orbit_count(k), formula))
    ok = all(a == b == c for _, a, b, c in rows)
    record(3, "dim lq_{k,1} = (k+1)/2 for odd k, 0 for even k (k<=9), orbit oracle agrees", ok, str(rows))
    assert ok


def test_criterion_04_closure():
    cells = lq_cells(8)
    elems = [(k, phi, from_dbi(phi)) for k, _, basis in cells for phi in basis]
    failures, pairs = [], 0
    for i, (k1, _, f) in enumerate(elems):
        for k2, _, g in elems[i:]:
            if k1 + k2 <= 8:
                pairs += 1
                if not is_in_lq(bracket_A(f, g)):
                    failures.append((str(f), str(g)))
    deltas = 0
    for _, phi, _ in elems:
        deltas += 1
        if not is_in_lq(delta(phi)):
            failures.append(("delta", str(phi)))
    ok = not failures
    record(4, "lq closed under {,}_A and delta (weight <= 8)", ok, f"{pairs} brackets, {deltas} deltas, {len(failures)} failures")
    assert ok


def test_criterion_05_bracket_correspondence():
    rng = random.Random(20240505)
    failures = 0
    for _ in range(50):
        f = random_lie(rng, Alphabet.DBI, 7)
        g = random_lie(rng, Alphabet.DBI, 7)
        if beta(bracket_A(f, g)) != ari(beta(f), beta(g)):
            failures += 1
    ok = failures == 0
    record(5, "beta({f,g}_A) = ari(beta f, beta g) on 50 seeded Lie pairs (each weight <= 7)", ok, f"{failures} failures")
    assert ok


def test_criterion_06_map_identities():
    failures = {}

    def check(name, cond):
        if not cond:
            failures[name] = failures.get(name, 0) + 1

    count = 0
    for p in _words(Alphabet.B, 7, admissible=True):
        count += 1
        k, d = next(iter(p.bigradings()))
        s = sec(p)
        check("pi0 sec", pi0(s) == p)
        check("sec series", s == sec_via_partial0(p))
        check("tau involution", tau(tau(p)) == p)
        check("(S0 tau)^2", S0(tau(S0(tau(p)))) == (-1) ** (k + d) * rho(p))
        check("S0 closed", S0(p) == S0_closed(p))
    for q in _words(Alphabet.DBI, 7):
        count += 1
        b = from_dbi(q)
        check("sec pi0 on Dbi", sec(pi0(b)) == b)
        check("tau_Dbi delta", tau_dbi(delta(q)) == delta(tau_dbi(q)))
        check("tau_Dbi closed", tau_dbi(q) == tau_dbi_closed(q))
    ok = not failures
    record(6, "map identities on all words of weight <= 7", ok, f"{count} words, failures {failures}")
    assert ok


def test_criterion_07_tau_conjugation():
    rng = random.Random(7)
    right = left = cor = 0
    for _ in range(100):
        w = random_words_poly(rng, Alphabet.B, 6, nterms=3, admissible=True)
        v = random_words_poly(rng, Alphabet.B, 6, nterms=3, admissible=True)
        lhs = tau(zero_projected_der(tau(w), SideTag.RIGHT, tau(v)))
        rhs = zero_projected_der(w, SideTag.RIGHT, v) + mul0(w, v) - tau(mul0(tau(w), tau(v)))
        right += lhs != rhs
        left += tau(zero_projected_der(tau(w), SideTag.LEFT, tau(v))) != zero_projected_der(rho(w), SideTag.LEFT, v)
        sv, sw = symmetrize_rho(v), symmetrize_rho(w)
        assert rho(sv) == sv and rho(sw) == sw
        cor += tau(bracket_A0(tau(sv), tau(sw))) != bracket_A0(sv, sw)
    ok = right == left == cor == 0
    record(7, "tau conjugation of zero-projected derivations and of {,}_{A,0} (100 seeded pairs, weight <= 6)", ok,
           f"failures right {right}, left {left}, rho-invariant bracket {cor}")
    assert ok


def test_criterion_08_theta():
    rng = random.Random(8)
    proj = 0
    for _ in range(100):
        p = random_words_poly(rng, Alphabet.X, 7, nterms=4)
        proj += tau(pi0(thetaX(p))) != thetaY(piY(p))
        proj += pi0(thetaX(p)) != tau(thetaY(piY(p)))
    elems = [(k, phi) for k, _, basis in ls_cells(8) for phi in basis]
    props = 0
    pairs = 0
    for k1, phi in elems:
        for k2, psi in elems:
            if k1 + k2 > 8:
                continue
            pairs += 1
            br = ihara_bracket(phi, psi)
            props += bracket_A(thetaX(phi), thetaX(psi)) != thetaX(br)
            props += bracket_A(thetaY(piY(phi)), thetaY(piY(psi))) != thetaY(piY(br))
            props += bool(bracket_A(thetaX(phi), thetaY(piY(psi))))
            props += theta(br) != bracket_A(theta(phi), theta(psi))
    ranks = []
    for k in range(1, 10):
        for d in range(1, k + 1):
            basis = basis_ls(k, d, Limits(10, 10)).basis
            images = [theta(phi) for phi in basis]
            index = {}
            rows = [{index.setdefault(w, len(index)): c for w, c in img.terms.items()} for img in images]
            ranks.append(sparse_rank(rows) == len(basis))
    ok = proj == 0 and props == 0 and all(ranks)
    record(8, "theta embedding: projection identities, bracket compatibilities, injectivity", ok,
           f"projection failures {proj}, {pairs} basis pairs with {props} failures, {len(ranks)} rank checks")
    assert ok


def test_criterion_09_binomial_identity():
    start = time.perf_counter()
    full = sum(not full_identity(*case) for case in identity_box(3, 6, 4))
    kl = sum(not collapse_kl(*case) for case in k_side_params(3, 6))
    mn = sum(not collapse_mn(*case) for d in range(1, 4) for case in m_side_params(d, 4))
    elapsed = time.perf_counter() - start
    ok = full == kl == mn == 0 and elapsed < 60
    record(9, "binomial identity and both collapses on d<=3, sum k<=6, sum m<=4", ok, f"{elapsed:.1f}s, failures {full}/{kl}/{mn}")
    assert ok


def test_criterion_10_evenness():
    failures = [str(phi) for _, _, basis in lq_cells(8) for phi in basis if not is_even(beta(phi))]
    ok = not failures
    record(10, "beta of every lq basis element (weight <= 8) is even", ok, f"{len(failures)} failures")
    assert ok


def test_criterion_11_jacobi():
    rng = random.Random(11)
    fails = {"A": 0, "ihara": 0}
    for _ in range(50):
        for name, alphabet, br in (("A", Alphabet.B, bracket_A), ("ihara", Alphabet.X, ihara_bracket)):
            f, g, h = (random_lie(rng, alphabet, 6) for _ in range(3))
            anti = br(f, g) + br(g, f)
            jac = br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))
            fails[name] += bool(anti) or bool(jac)
    ok = not any(fails.values())
    record(11, "antisymmetry and Jacobi for {,}_A and the Ihara bracket (50 seeded triples, weight <= 6)", ok, f"failures {fails}")
    assert ok
