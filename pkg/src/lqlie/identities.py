"""Binomial identities behind the rho-twisted left derivation, as integer predicates.

Parameters: ``ks`` and ``ms`` are the block data ``(k_1..k_d)``, ``(m_1..m_d)``;
``lams`` / ``mus`` hold ``lambda_1..lambda_{d-1}`` / ``mu_1..mu_{d-1}``, and
``lam, lam_bar`` / ``mu, mu_bar`` complete them so that
``sum(lams) + lam + lam_bar == sum(ks)`` and ``sum(mus) + mu + mu_bar == sum(ms)``.
"""
from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence, Tuple

from .combinat import binom, compositions


def _l_range(ks: Sequence[int], lams: Sequence[int]):
    """All ``(l_1..l_d)`` with ``l_s >= 1`` summing to ``sum(ks)``, restricted to nonzero terms."""
    K = sum(ks)
    for head in product(*(range(lam_s, k + 1) for k, lam_s in zip(ks, lams))):
        l_d = K - sum(head)
        if l_d >= 1:
            yield head, l_d


def _n_range(ms: Sequence[int], mus: Sequence[int]):
    M = sum(ms)
    for head in product(*(range(mu_s, m + 1) for m, mu_s in zip(ms, mus))):
        n_d = M - sum(head)
        if n_d >= 0:
            yield head, n_d


def collapse_kl_sides(ks, lams, lam, lam_bar) -> Tuple[int, int]:
    """Both sides of the l-collapse: the alternating sum and ``(-1)^lam C(k_d - 1, lam_bar)``."""
    total = 0
    for head, l_d in _l_range(ks, lams):
        term = (-1) ** l_d * binom(l_d - 1, lam - 1)
        for k, lam_s, l_s in zip(ks, lams, head):
            term *= binom(k - lam_s, l_s - lam_s)
        total += term
    return (-1) ** lam_bar * total, (-1) ** lam * binom(ks[-1] - 1, lam_bar)


def collapse_mn_sides(ms, mus, mu, mu_bar) -> Tuple[int, int]:
    """Both sides of the n-collapse: the alternating sum and ``(-1)^mu C(m_d, mu_bar)``."""
    total = 0
    for head, n_d in _n_range(ms, mus):
        term = (-1) ** n_d * binom(n_d, mu)
        for m, mu_s, n_s in zip(ms, mus, head):
            term *= binom(m - mu_s, n_s - mu_s)
        total += term
    return (-1) ** mu_bar * total, (-1) ** mu * binom(ms[-1], mu_bar)


def full_identity_sides(ks, ms, lams, mus, lam, lam_bar, mu, mu_bar) -> Tuple[int, int]:
    """Both sides of the combined identity, with the double sum expanded jointly."""
    lhs = (-1) ** (lam + mu) * binom(ms[-1], mu_bar) * binom(ks[-1] - 1, lam_bar)
    total = 0
    n_terms = list(_n_range(ms, mus))
    for lhead, l_d in _l_range(ks, lams):
        for nhead, n_d in n_terms:
            term = (-1) ** (l_d + n_d) * binom(l_d - 1, lam - 1) * binom(n_d, mu)
            for k, lam_s, l_s in zip(ks, lams, lhead):
                term *= binom(k - lam_s, l_s - lam_s)
            for m, mu_s, n_s in zip(ms, mus, nhead):
                term *= binom(m - mu_s, n_s - mu_s)
            total += term
    return lhs, (-1) ** (lam_bar + mu_bar) * total


def collapse_kl(ks, lams, lam, lam_bar) -> bool:
    a, b = collapse_kl_sides(ks, lams, lam, lam_bar)
    return a == b


def collapse_mn(ms, mus, mu, mu_bar) -> bool:
    a, b = collapse_mn_sides(ms, mus, mu, mu_bar)
    return a == b


def full_identity(ks, ms, lams, mus, lam, lam_bar, mu, mu_bar) -> bool:
    a, b = full_identity_sides(ks, ms, lams, mus, lam, lam_bar, mu, mu_bar)
    return a == b


def k_side_params(max_depth: int, max_k: int) -> Iterator[Tuple]:
    """Every ``(ks, lams, lam, lam_bar)`` in the box ``d <= max_depth``, ``sum(ks) <= max_k``.

    ``1 <= lambda_s <= k_s``, ``lam >= 1`` and ``lam_bar >= 0``.
    """
    for d in range(1, max_depth + 1):
        for K in range(d, max_k + 1):
            for ks in compositions(K, d, lower=1):
                for lams in product(*(range(1, k + 1) for k in ks[:-1])):
                    rest = K - sum(lams)
                    for lam in range(1, rest + 1):
                        yield ks, lams, lam, rest - lam


def m_side_params(depth: int, max_m: int) -> Iterator[Tuple]:
    """Every ``(ms, mus, mu, mu_bar)`` with ``len(ms) == depth`` and ``sum(ms) <= max_m``."""
    for M in range(max_m + 1):
        for ms in compositions(M, depth):
            for mus in product(*(range(m + 1) for m in ms[:-1])):
                rest = M - sum(mus)
                for mu in range(rest + 1):
                    yield ms, mus, mu, rest - mu


def identity_box(max_depth: int = 3, max_k: int = 6, max_m: int = 4) -> Iterator[Tuple]:
    """Full parameter tuples ``(ks, ms, lams, mus, lam, lam_bar, mu, mu_bar)``."""
    for ks, lams, lam, lam_bar in k_side_params(max_depth, max_k):
        d = len(ks)
        for ms, mus, mu, mu_bar in m_side_params(d, max_m):
            yield ks, ms, lams, mus, lam, lam_bar, mu, mu_bar
