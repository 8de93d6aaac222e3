"""Membership tests and bigraded bases of the Lie algebras lq and ls.

A cell ``(k, d)`` is computed by writing a general element as a combination
of bracketed Lyndon words of weight ``k`` and depth ``d`` (which spans the
free Lie algebra cell) and solving the remaining linear conditions exactly.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .embedding import piY
from .errors import AlphabetError, ResourceLimitError
from .hopfmaps import from_dbi, is_primitive, pi0, reduced_coproduct, tau, tau_dbi
from .linalg import canonical_basis, sparse_kernel
from .ncpoly import (
    Alphabet,
    Coeff,
    NcPoly,
    RawWord,
    Terms,
    add_into,
    commutator,
    format_word,
    letter_bigrade,
)

DEFAULT_MAX_WEIGHT = 10
DEFAULT_MAX_DEPTH = 6


@dataclass(frozen=True)
class Limits:
    max_weight: int = DEFAULT_MAX_WEIGHT
    max_depth: int = DEFAULT_MAX_DEPTH

    @classmethod
    def from_env(cls) -> "Limits":
        """Ceilings from ``LQ_MAX_WEIGHT`` / ``LQ_MAX_DEPTH`` when set."""
        w = os.environ.get("LQ_MAX_WEIGHT")
        d = os.environ.get("LQ_MAX_DEPTH")
        return cls(
            int(w) if w else DEFAULT_MAX_WEIGHT,
            int(d) if d else DEFAULT_MAX_DEPTH,
        )

    def check(self, weight: int, depth: int) -> None:
        if weight > self.max_weight or depth > self.max_depth:
            raise ResourceLimitError(
                f"cell (weight {weight}, depth {depth}) exceeds the configured ceiling "
                f"(weight {self.max_weight}, depth {self.max_depth})"
            )


# --------------------------------------------------------------------------
# Lyndon words


def cell_letters(alphabet: Alphabet, weight: int) -> List:
    """Letters of weight at most ``weight`` in increasing order."""
    alphabet = Alphabet(alphabet)
    if alphabet is Alphabet.X:
        return [0, 1] if weight >= 1 else []
    if alphabet is Alphabet.B:
        return list(range(0, weight + 1)) if weight >= 1 else []
    if alphabet is Alphabet.Y:
        return list(range(1, weight + 1))
    return [(k, m) for k in range(1, weight + 1) for m in range(0, weight - k + 1)]


def cell_words(alphabet: Alphabet, weight: int, depth: int) -> Iterator[RawWord]:
    """All words of the given weight and depth, in lexicographic order."""
    alphabet = Alphabet(alphabet)
    letters = [(a, letter_bigrade(alphabet, a)) for a in cell_letters(alphabet, weight)]

    def rec(w: int, d: int) -> Iterator[RawWord]:
        if w == 0:
            if d == 0:
                yield ()
            return
        for a, (lw, ld) in letters:
            if lw <= w and ld <= d:
                for rest in rec(w - lw, d - ld):
                    yield (a,) + rest

    if weight > 0:
        yield from rec(weight, depth)


def is_lyndon(w: RawWord) -> bool:
    """Strictly smaller than each of its proper rotations."""
    n = len(w)
    return n > 0 and all(w < w[i:] + w[:i] for i in range(1, n))


def lyndon_words(alphabet: Alphabet, weight: int, depth: int) -> List[RawWord]:
    return [w for w in cell_words(alphabet, weight, depth) if is_lyndon(w)]


def _bracketing(w: RawWord, alphabet: Alphabet, memo: Dict[RawWord, NcPoly]) -> NcPoly:
    hit = memo.get(w)
    if hit is not None:
        return hit
    if len(w) == 1:
        out = NcPoly._wrap(alphabet, {w: 1})
    else:
        # standard factorization: v is the longest proper Lyndon suffix
        for i in range(1, len(w)):
            if is_lyndon(w[i:]):
                break
        out = commutator(_bracketing(w[:i], alphabet, memo), _bracketing(w[i:], alphabet, memo))
    memo[w] = out
    return out


def lyndon_basis(alphabet: Alphabet, weight: int, depth: int) -> List[NcPoly]:
    """Bracketed Lyndon words spanning the ``(weight, depth)`` cell of the free Lie algebra."""
    alphabet = Alphabet(alphabet)
    memo: Dict[RawWord, NcPoly] = {}
    return [_bracketing(w, alphabet, memo) for w in lyndon_words(alphabet, weight, depth)]


# --------------------------------------------------------------------------
# membership


@dataclass(frozen=True)
class MembershipReport:
    """``member`` plus, on failure, the first violated condition and a detail line."""

    member: bool
    condition: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.member

    def __str__(self) -> str:
        if self.member:
            return "true"
        return f"false\ncondition ({self.condition}) fails: {self.detail}"


def _primitivity_detail(report, alphabet: Alphabet) -> str:
    u, v = report.witness
    return (
        f"pairing with {format_word(alphabet, u.letters)} ⧢ "
        f"{format_word(alphabet, v.letters)} is {report.value}"
    )


def is_in_lq(p: NcPoly) -> MembershipReport:
    """Membership in lq; Dbi input is expanded into the B alphabet first."""
    if p.alphabet is Alphabet.DBI:
        p = from_dbi(p)
    if p.alphabet is not Alphabet.B:
        raise AlphabetError(f"lq membership expects a B or Dbi polynomial, got {p.alphabet}")
    c = p.coefficient((0,))
    if c:
        return MembershipReport(False, "i", f"coefficient of b0 is {c}")
    for w, c in sorted(p.terms.items()):
        if w and w[-1] != 0 and all(s == 0 for s in w[:-1]):
            k, m = w[-1], len(w) - 1
            if (k + m) % 2 == 0:
                return MembershipReport(
                    False, "ii", f"coefficient of {format_word(Alphabet.B, w)} is {c} (k+m even)"
                )
    prim = is_primitive(p)
    if not prim:
        return MembershipReport(False, "iii", "not primitive; " + _primitivity_detail(prim, Alphabet.B))
    head = pi0(p)
    diff = tau(head) - head
    if diff:
        return MembershipReport(False, "iv", f"tau(pi0(p)) - pi0(p) = {diff}")
    return MembershipReport(True)


def is_in_ls(p: NcPoly) -> MembershipReport:
    """Membership in the linearized double shuffle Lie algebra."""
    if p.alphabet is not Alphabet.X:
        raise AlphabetError(f"ls membership expects an X polynomial, got {p.alphabet}")
    for a in (0, 1):
        c = p.coefficient((a,))
        if c:
            return MembershipReport(False, "i", f"coefficient of x{a} is {c}")
    for w, c in sorted(p.terms.items()):
        if w and w[-1] == 1 and all(s == 0 for s in w[:-1]) and len(w) % 2 == 0:
            return MembershipReport(
                False, "ii", f"coefficient of {format_word(Alphabet.X, w)} is {c} (m even)"
            )
    prim = is_primitive(p)
    if not prim:
        return MembershipReport(False, "iii", "not primitive; " + _primitivity_detail(prim, Alphabet.X))
    proj = piY(p)
    prim = is_primitive(proj)
    if not prim:
        return MembershipReport(
            False, "iv", "piY(p) not primitive; " + _primitivity_detail(prim, Alphabet.Y)
        )
    return MembershipReport(True)


# --------------------------------------------------------------------------
# bases


@dataclass(frozen=True)
class GradedBasis:
    space: str
    weight: int
    depth: int
    basis: Tuple[NcPoly, ...] = field(default_factory=tuple)

    @property
    def dim(self) -> int:
        return len(self.basis)


def _solve(gens: Sequence[NcPoly], conditions: List[Dict[object, Coeff]], alphabet) -> List[NcPoly]:
    """Combinations of ``gens`` killed by every linear condition.

    ``conditions[j]`` maps a row key to the value of the conditions on
    ``gens[j]``; the kernel is returned in canonical form.
    """
    row_index: Dict[object, int] = {}
    rows: List[Dict[int, Coeff]] = []
    for j, cond in enumerate(conditions):
        for key, v in cond.items():
            r = row_index.get(key)
            if r is None:
                r = row_index[key] = len(rows)
                rows.append({})
            rows[r][j] = v
    vectors = canonical_basis(sparse_kernel(rows, len(gens)))
    out = []
    for vec in vectors:
        acc: Terms = {}
        for g, c in zip(gens, vec):
            if c:
                for w, a in g.terms.items():
                    add_into(acc, w, a * c)
        out.append(NcPoly._wrap(Alphabet(alphabet), acc))
    return out


def basis_lq(weight: int, depth: int, limits: Optional[Limits] = None) -> GradedBasis:
    """Basis of ``lq_{weight, depth}`` written in the Dbi alphabet."""
    (limits or Limits.from_env()).check(weight, depth)
    gens = lyndon_basis(Alphabet.DBI, weight, depth)
    tau_cache: Dict[RawWord, Terms] = {}

    def tau_word(w: RawWord) -> Terms:
        hit = tau_cache.get(w)
        if hit is None:
            hit = tau_cache[w] = dict(tau_dbi(NcPoly._wrap(Alphabet.DBI, {w: 1})).terms)
        return hit

    conditions = []
    for g in gens:
        cond: Dict[object, Coeff] = {}
        for w, c in g.terms.items():
            add_into(cond, ("tau", w), -c)
            for u, a in tau_word(w).items():
                add_into(cond, ("tau", u), a * c)
            if len(w) == 1 and sum(w[0]) % 2 == 0:
                add_into(cond, ("parity", w), c)
        conditions.append(cond)
    return GradedBasis("lq", weight, depth, tuple(_solve(gens, conditions, Alphabet.DBI)))


def basis_ls(weight: int, depth: int, limits: Optional[Limits] = None) -> GradedBasis:
    """Basis of ``ls_{weight, depth}`` in the X alphabet."""
    (limits or Limits.from_env()).check(weight, depth)
    gens = lyndon_basis(Alphabet.X, weight, depth)
    conditions = []
    for g in gens:
        cond: Dict[object, Coeff] = {}
        for w, c in g.terms.items():
            if len(w) == 1:
                add_into(cond, ("letter", w), c)
            elif w[-1] == 1 and all(s == 0 for s in w[:-1]) and len(w) % 2 == 0:
                add_into(cond, ("parity", w), c)
        for key, v in reduced_coproduct(piY(g)).items():
            add_into(cond, ("piY", key), v)
        conditions.append(cond)
    return GradedBasis("ls", weight, depth, tuple(_solve(gens, conditions, Alphabet.X)))


def basis(space: str, weight: int, depth: int, limits: Optional[Limits] = None) -> GradedBasis:
    if space == "lq":
        return basis_lq(weight, depth, limits)
    if space == "ls":
        return basis_ls(weight, depth, limits)
    raise ValueError(f"unknown space {space!r}; expected 'lq' or 'ls'")


def dim_table(
    space: str, max_weight: int, max_depth: int, limits: Optional[Limits] = None
) -> List[Tuple[int, int, int]]:
    """``(k, d, dim)`` for every ``0 <= k <= max_weight``, ``0 <= d <= max_depth``."""
    if max_weight < 0 or max_depth < 0:
        raise ValueError("bounds must be nonnegative")
    limits = limits or Limits.from_env()
    limits.check(max_weight, max_depth)
    return [
        (k, d, basis(space, k, d, limits).dim)
        for k in range(max_weight + 1)
        for d in range(max_depth + 1)
    ]
