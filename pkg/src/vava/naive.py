"""Deliberately naive ideal arithmetic, used only as a cross-validation oracle.

Everything here works on Monomial objects with plain Python loops, never on
exponent matrices, and never interreduces intermediate results: products and
powers expand completely and minimize exactly once at the end.  The fast path
in :mod:`vava.ideals` must agree with these functions on the nose; the CLI
``--brute-force`` flag and the oracle-equivalence tests enforce that.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .ideals import Monomial, MonomialIdeal, RingContext, lcm


def naive_minimize(gens, ctx: RingContext) -> MonomialIdeal:
    """Quadratic antichain filter over Monomial values."""
    distinct = sorted(set(gens), key=lambda m: m.sort_key())
    kept: list[Monomial] = []
    for m in distinct:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    out = MonomialIdeal(ctx, kept)
    # paranoia: the constructor must not have changed the generator list
    assert tuple(out.gens) == tuple(kept)
    return out


def naive_contains(I: MonomialIdeal, m: Monomial) -> bool:
    return any(g.divides(m) for g in I.gens)


def naive_product(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    cands = [f * g for f in A.gens for g in B.gens]
    return naive_minimize(cands, A.ctx)


def naive_power(A: MonomialIdeal, t: int) -> MonomialIdeal:
    """A^t by expanding all t-fold products, minimizing only at the end."""
    if t < 0:
        raise ValueError("negative ideal power")
    if t == 0:
        return MonomialIdeal.unit(A.ctx)
    if A.is_zero():
        return MonomialIdeal.zero(A.ctx)
    cands = []
    for combo in combinations_with_replacement(A.gens, t):
        prod = combo[0]
        for g in combo[1:]:
            prod = prod * g
        cands.append(prod)
    return naive_minimize(cands, A.ctx)


def naive_intersect(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    cands = [lcm(f, g) for f in A.gens for g in B.gens]
    return naive_minimize(cands, A.ctx)
