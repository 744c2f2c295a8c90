"""Wreath products Sigma_n acting on n copies of a finite group H.

Elements are pairs (sigma images, alpha indices); the product twists the
second alpha string by the first permutation:
(sigma, a) (sigma', a') = (sigma sigma', (a_i a'_{sigma(i)})_i).
"""

from __future__ import annotations

import itertools
import math

from .groups import FiniteGroupTable
from .symgroup import Perm

__all__ = ["wreath_group", "wreath_mul", "wreath_inv", "wreath_identity",
           "wreath_embed_sym", "wreath_base_subgroup"]


def wreath_mul(H: FiniteGroupTable, x, y):
    (sig, alphas), (sig2, alphas2) = x, y
    n = len(alphas)
    # the permutation part composes left-to-right: (s s')(i) = s'(s(i)),
    # which is what makes the alpha twist below associative
    prod_sig = tuple(sig2[sig[i] - 1] for i in range(n))
    prod_alphas = tuple(H.mul(alphas[i], alphas2[sig[i] - 1])
                        for i in range(n))
    return (prod_sig, prod_alphas)


def wreath_inv(H: FiniteGroupTable, x):
    sig, alphas = x
    n = len(alphas)
    inv_sig = [0] * n
    for i, v in enumerate(sig, start=1):
        inv_sig[v - 1] = i
    inv_alphas = tuple(H.inv(alphas[inv_sig[i] - 1]) for i in range(n))
    return (tuple(inv_sig), inv_alphas)


def wreath_identity(H: FiniteGroupTable, n: int):
    return (tuple(range(1, n + 1)), (H.identity_idx,) * n)


_CACHE: dict = {}


def wreath_group(H: FiniteGroupTable, n: int,
                 bound: int = 10000) -> FiniteGroupTable:
    """Sigma_n wr H as an explicit FiniteGroupTable."""
    key = (H.name, n)
    if key in _CACHE:
        return _CACHE[key]
    order = math.factorial(n) * H.order ** n
    if order > bound:
        raise ResourceWarning(f"wreath order {order} exceeds bound {bound}")
    elements = []
    for sig in itertools.permutations(range(1, n + 1)):
        for alphas in itertools.product(range(H.order), repeat=n):
            elements.append((sig, alphas))
    G = FiniteGroupTable(f"Wreath({n},{H.name})", elements,
                         lambda a, b: wreath_mul(H, a, b),
                         lambda a: wreath_inv(H, a),
                         wreath_identity(H, n))
    G.base = H
    G.n = n
    _CACHE[key] = G
    return G


def wreath_embed_sym(H: FiniteGroupTable, n: int, sigma: Perm):
    """The permutation sigma as a wreath element with trivial alphas."""
    return (sigma.images, (H.identity_idx,) * n)


def wreath_base_subgroup(G: FiniteGroupTable):
    """Indices of the normal subgroup H^n (trivial permutation part)."""
    n = G.n
    ident = tuple(range(1, n + 1))
    return [i for i, (sig, _) in enumerate(G.elements) if sig == ident]
