"""Bimoulds: depth-indexed commutative polynomials in X_1, Y_1, ..., X_d, Y_d.

A depth-d component is a :class:`CommPoly` whose monomials are exponent
tuples ``(e_1, f_1, ..., e_d, f_d)`` for ``X_1^{e_1} Y_1^{f_1} ...``.
Variable slot ``2(i-1)`` is ``X_i`` and slot ``2i-1`` is ``Y_i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .combinat import compositions, multinomial
from .errors import AlphabetError
from .hopfmaps import is_primitive
from .ncpoly import Alphabet, Coeff, NcPoly, add_into, format_coeff, normalize

Exps = Tuple[int, ...]
LinearForm = Dict[int, Coeff]


def X(i: int) -> int:
    """Slot index of ``X_i`` (1-based i)."""
    return 2 * (i - 1)


def Y(i: int) -> int:
    """Slot index of ``Y_i`` (1-based i)."""
    return 2 * i - 1


class CommPoly:
    """Exact commutative polynomial in the ``2 * depth`` variables of one depth."""

    __slots__ = ("depth", "_terms")

    def __init__(self, depth: int, terms: Mapping[Exps, Coeff] | Iterable = ()):
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        self.depth = depth
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Dict[Exps, Coeff] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != 2 * depth or any(x < 0 for x in e):
                raise ValueError(f"exponent vector {e} does not fit depth {depth}")
            add_into(clean, e, normalize(c))
        self._terms = clean

    @classmethod
    def _wrap(cls, depth: int, terms: Dict[Exps, Coeff]) -> "CommPoly":
        obj = cls.__new__(cls)
        obj.depth = depth
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, depth: int, c: Coeff = 1) -> "CommPoly":
        return cls(depth, {(0,) * (2 * depth): c})

    @classmethod
    def variable(cls, depth: int, slot: int) -> "CommPoly":
        e = [0] * (2 * depth)
        e[slot] = 1
        return cls(depth, {tuple(e): 1})

    @property
    def terms(self) -> Mapping[Exps, Coeff]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CommPoly):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.depth == other.depth and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.depth, frozenset(self._terms.items())))

    def _check(self, other: "CommPoly") -> None:
        if other.depth != self.depth:
            raise ValueError(f"depth mismatch: {self.depth} vs {other.depth}")

    def __add__(self, other: "CommPoly") -> "CommPoly":
        self._check(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            add_into(acc, e, c)
        return CommPoly._wrap(self.depth, acc)

    def __neg__(self) -> "CommPoly":
        return CommPoly._wrap(self.depth, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "CommPoly") -> "CommPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = normalize(other)
            if not c:
                return CommPoly(self.depth)
            return CommPoly._wrap(self.depth, {e: normalize(v * c) for e, v in self._terms.items()})
        if isinstance(other, CommPoly):
            self._check(other)
            acc: Dict[Exps, Coeff] = {}
            for e, a in self._terms.items():
                for f, b in other._terms.items():
                    add_into(acc, tuple(x + y for x, y in zip(e, f)), a * b)
            return CommPoly._wrap(self.depth, acc)
        return NotImplemented

    __rmul__ = __mul__

    def is_even(self) -> bool:
        """Every monomial has even total degree."""
        return all(sum(e) % 2 == 0 for e in self._terms)

    def substitute(self, forms: Sequence[LinearForm], depth: int) -> "CommPoly":
        """Replace variable slot ``j`` by the linear form ``forms[j]`` in a depth-``depth`` ring."""
        if len(forms) != 2 * self.depth:
            raise ValueError("one linear form per variable slot is required")
        width = 2 * depth
        power_cache: Dict[Tuple[int, int], Dict[Exps, Coeff]] = {}

        def power(j: int, n: int) -> Dict[Exps, Coeff]:
            key = (j, n)
            hit = power_cache.get(key)
            if hit is not None:
                return hit
            items = sorted(forms[j].items())
            out: Dict[Exps, Coeff] = {}
            for ps in compositions(n, len(items)):
                c = multinomial(n, ps)
                e = [0] * width
                for (slot, a), p in zip(items, ps):
                    c *= a ** p
                    e[slot] += p
                add_into(out, tuple(e), c)
            power_cache[key] = out
            return out

        acc: Dict[Exps, Coeff] = {}
        for e, c in self._terms.items():
            cur: Dict[Exps, Coeff] = {(0,) * width: c}
            for j, n in enumerate(e):
                if n == 0:
                    continue
                nxt: Dict[Exps, Coeff] = {}
                for f, a in cur.items():
                    for g, b in power(j, n).items():
                        add_into(nxt, tuple(x + y for x, y in zip(f, g)), a * b)
                cur = nxt
            for f, a in cur.items():
                add_into(acc, f, a)
        return CommPoly._wrap(depth, {e: normalize(c) for e, c in acc.items()})

    def __str__(self) -> str:
        return format_commpoly(self)

    def __repr__(self) -> str:
        return f"CommPoly({self.depth}, {format_commpoly(self)!r})"


def _format_monomial(e: Exps) -> str:
    parts = []
    for slot, n in enumerate(e):
        if n:
            name = f"{'X' if slot % 2 == 0 else 'Y'}{slot // 2 + 1}"
            parts.append(name if n == 1 else f"{name}^{n}")
    return "*".join(parts)


def format_commpoly(p: CommPoly) -> str:
    if not p:
        return "0"
    key = lambda e: (sum(e), tuple(-x for x in e))
    out = []
    for idx, e in enumerate(sorted(p.terms, key=key)):
        c = p.terms[e]
        neg = c < 0
        mag = -c if neg else c
        mono = _format_monomial(e)
        if not mono:
            body = format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coeff(mag)}*{mono}"
        sign = ("-" if neg else "") if idx == 0 else (" - " if neg else " + ")
        out.append(sign + body)
    return "".join(out)


class Bimould:
    """Finitely supported family ``depth -> CommPoly``; absent depths are zero."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Mapping[int, CommPoly] | Iterable[CommPoly] = ()):
        items = parts.values() if isinstance(parts, Mapping) else parts
        acc: Dict[int, CommPoly] = {}
        for comp in items:
            if comp.depth in acc:
                comp = acc[comp.depth] + comp
            acc[comp.depth] = comp
        self._parts = {d: c for d, c in sorted(acc.items()) if c}

    def __getitem__(self, depth: int) -> CommPoly:
        return self._parts.get(depth, CommPoly(depth))

    def depths(self) -> List[int]:
        return list(self._parts)

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Bimould):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(frozenset(self._parts.items()))

    def __add__(self, other: "Bimould") -> "Bimould":
        return Bimould(list(self._parts.values()) + list(other._parts.values()))

    def __neg__(self) -> "Bimould":
        return Bimould([-c for c in self._parts.values()])

    def __sub__(self, other: "Bimould") -> "Bimould":
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return Bimould([p * c for p in self._parts.values()])
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._parts:
            return "0"
        return "\n".join(f"depth {d}: {format_commpoly(c)}" for d, c in self._parts.items())

    def __repr__(self) -> str:
        return f"Bimould({str(self)!r})"


# --------------------------------------------------------------------------
# translation from the Dbi alphabet


def beta(p: NcPoly) -> Bimould:
    """``D_{k1,m1} ... D_{kd,md} -> X_1^{k1-1} Y_1^{m1} ... X_d^{kd-1} Y_d^{md}``; depth 0 is dropped."""
    if p.alphabet is not Alphabet.DBI:
        raise AlphabetError(f"beta expects a Dbi polynomial, got {p.alphabet}")
    by_depth: Dict[int, Dict[Exps, Coeff]] = {}
    for w, c in p.terms.items():
        if not w:
            continue
        e = tuple(x for k, m in w for x in (k - 1, m))
        by_depth.setdefault(len(w), {})[e] = c
    return Bimould(CommPoly._wrap(d, t) for d, t in by_depth.items())


def beta_inverse(A: Bimould) -> NcPoly:
    """Inverse of :func:`beta` on components of depth >= 1."""
    terms = {}
    for d in A.depths():
        if d == 0:
            continue
        for e, c in A[d].terms.items():
            terms[tuple((e[2 * i] + 1, e[2 * i + 1]) for i in range(d))] = c
    return NcPoly(Alphabet.DBI, terms)


# --------------------------------------------------------------------------
# operations


def mu(A: Bimould, B: Bimould) -> Bimould:
    """Deconcatenation product: ``mu(A, B)_d = sum_i A_i(first i slots) B_{d-i}(remaining slots)``."""
    out: List[CommPoly] = []
    for i in A.depths():
        for j in B.depths():
            acc: Dict[Exps, Coeff] = {}
            for e, a in A[i].terms.items():
                for f, b in B[j].terms.items():
                    add_into(acc, e + f, a * b)
            out.append(CommPoly._wrap(i + j, acc))
    return Bimould(out)


def _swap_forms(d: int) -> List[LinearForm]:
    forms: List[LinearForm] = []
    for a in range(1, d + 1):
        forms.append({Y(i): 1 for i in range(d - a + 1, d + 1)})
        ys: LinearForm = {X(d - a + 1): 1}
        if d - a >= 1:
            ys[X(d - a)] = -1
        forms.append(ys)
    return forms


def swap(A: Bimould) -> Bimould:
    """``A_d(Y_d, Y_{d-1}+Y_d, ..., Y_1+...+Y_d ; X_d-X_{d-1}, ..., X_2-X_1, X_1)``."""
    return Bimould(A[d].substitute(_swap_forms(d), d) for d in A.depths())


def arit(B: Bimould, A: Bimould) -> Bimould:
    """``arit_B(A)``: insert ``B_j`` into the ``i``-th slot of ``A_{D-j}`` to the right and to the left."""
    out: List[CommPoly] = []
    for j in B.depths():
        if j == 0:
            continue
        for r in A.depths():
            D = r + j
            for i in range(1, r + 1):
                ysum = {Y(t): 1 for t in range(i, i + j + 1)}
                head: List[LinearForm] = []
                for a in range(1, i):
                    head += [{X(a): 1}, {Y(a): 1}]
                tail: List[LinearForm] = []
                for a in range(i + 1, r + 1):
                    tail += [{X(a + j): 1}, {Y(a + j): 1}]
                # right insertion
                a_forms = head + [{X(i): 1}, ysum] + tail
                b_forms: List[LinearForm] = []
                for t in range(i + 1, i + j + 1):
                    b_forms += [{X(t): 1, X(i): -1}, {Y(t): 1}]
                right = A[r].substitute(a_forms, D) * B[j].substitute(b_forms, D)
                # left insertion
                a_forms = head + [{X(i + j): 1}, ysum] + tail
                b_forms = []
                for t in range(i, i + j):
                    b_forms += [{X(t): 1, X(i + j): -1}, {Y(t): 1}]
                left = A[r].substitute(a_forms, D) * B[j].substitute(b_forms, D)
                out.append(right - left)
    return Bimould(out)


def ari(A: Bimould, B: Bimould) -> Bimould:
    """``arit_A(B) - arit_B(A) + mu(A, B) - mu(B, A)``."""
    return arit(A, B) - arit(B, A) + mu(A, B) - mu(B, A)


def delta_bimould(A: Bimould) -> Bimould:
    """Multiply the depth-d component by ``X_1 Y_1 + ... + X_d Y_d``."""
    out = []
    for d in A.depths():
        e = [0] * (2 * d)
        factor: Dict[Exps, Coeff] = {}
        for i in range(1, d + 1):
            mono = list(e)
            mono[X(i)] = mono[Y(i)] = 1
            factor[tuple(mono)] = 1
        out.append(A[d] * CommPoly._wrap(d, factor))
    return Bimould(out)


# --------------------------------------------------------------------------
# predicates


@dataclass(frozen=True)
class PredicateReport:
    """Boolean outcome plus an optional counterexample description."""

    holds: bool
    witness: Optional[object] = None

    def __bool__(self) -> bool:
        return self.holds


def is_alternal(A: Bimould) -> PredicateReport:
    """The coefficient map kills every proper shuffle (depth 0 is ignored).

    The witness is the shuffle pair of Dbi words and the nonzero pairing.
    """
    report = is_primitive(beta_inverse(A))
    if report:
        return PredicateReport(True)
    return PredicateReport(False, (report.witness, report.value))


def is_swap_invariant(A: Bimould) -> PredicateReport:
    """``A_d == swap(A)_d`` for every ``d >= 1``; the witness is the first failing depth."""
    S = swap(A)
    for d in sorted(set(A.depths()) | set(S.depths())):
        if d >= 1 and A[d] != S[d]:
            return PredicateReport(False, d)
    return PredicateReport(True)


def is_even(A: Bimould) -> PredicateReport:
    """Every component of depth >= 1 has only even-degree monomials."""
    for d in A.depths():
        if d >= 1 and not A[d].is_even():
            return PredicateReport(False, d)
    return PredicateReport(True)
