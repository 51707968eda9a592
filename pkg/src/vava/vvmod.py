"""Graded components, vanishing certificates and bounded invariants of the
Valabrega-Valla module VV(J in I) = sum over t of (J cap I^t)/(J I^{t-1}).

The vanishing decision searches degrees 1..t0(J) only: a nonzero module has a
nonzero component in some degree at most t0(J) (and at most the Artin-Rees
number), so an empty sweep of that window is a complete certificate.
Witnesses are the minimal generators of J cap I^t that are not members of
J*I^{t-1}; the component is zero precisely when there are none.

Artin-Rees and reduction numbers are verified on an explicit bounded horizon;
no claim is made beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import naive as _naive
from .errors import NotContained, TheoremViolation
from .ideals import (
    Monomial,
    MonomialIdeal,
    gens_outside,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_subset,
    indeg_ideal,
    power_maximal,
    t0,
)


@dataclass(frozen=True)
class VVReport:
    """Outcome of a vanishing sweep.

    ``vanishes`` is True iff no degree in the checked window has a witness and
    the window covers 1..t0(J).  ``indeg`` is the least degree with a witness
    (None when the module vanishes).  ``bound_used`` records whether the
    window was the automatic t0(J) bound or a user extension.
    """

    vanishes: bool
    indeg: int | None
    witnesses: dict[int, tuple[Monomial, ...]]
    degrees_checked: tuple[int, int]
    bound_used: str
    t0_J: int

    def to_obj(self) -> dict:
        return {
            "vanishes": self.vanishes,
            "indeg": self.indeg,
            "witnesses": {
                str(t): [[int(e) for e in w.exps] for w in ws]
                for t, ws in sorted(self.witnesses.items())
            },
            "witnesses_pretty": {
                str(t): [str(w) for w in ws] for t, ws in sorted(self.witnesses.items())
            },
            "degrees_checked": list(self.degrees_checked),
            "bound_used": self.bound_used,
            "t0": self.t0_J,
        }


def _check_pair(J: MonomialIdeal, I: MonomialIdeal) -> None:
    if not ideal_subset(J, I):
        raise NotContained("J is not contained in I")


def vv_component(
    J: MonomialIdeal, I: MonomialIdeal, t: int, naive: bool = False
) -> tuple[Monomial, ...]:
    """Minimal generators of J cap I^t lying outside J*I^{t-1}.

    An empty result certifies that the degree-t component vanishes: the
    containment J*I^{t-1} <= J cap I^t makes the component zero exactly when
    every generator of the intersection drops into the product.
    """
    if t < 1:
        raise ValueError("component degree must be >= 1")
    _check_pair(J, I)
    if naive:
        inter = _naive.naive_intersect(J, _naive.naive_power(I, t))
        lower = _naive.naive_product(J, _naive.naive_power(I, t - 1))
        return tuple(
            g for g in inter.gens if not _naive.naive_contains(lower, g)
        )
    inter = ideal_intersect(J, ideal_power(I, t))
    lower = ideal_product(J, ideal_power(I, t - 1))
    return gens_outside(inter, lower)


def vv_vanishes(
    J: MonomialIdeal,
    I: MonomialIdeal,
    max_degree: int | None = None,
    naive: bool = False,
) -> VVReport:
    """Decide vanishing of the whole module by sweeping degrees 1..t0(J).

    ``max_degree`` can only extend the window (for exploration); the
    certificate never shrinks below t0(J).
    """
    if J.is_zero():
        raise ValueError("vanishing is undefined for the zero ideal J")
    _check_pair(J, I)
    bound = t0(J)
    top = bound
    bound_used = "t0"
    if max_degree is not None and max_degree > bound:
        top = max_degree
        bound_used = "user"
    witnesses: dict[int, tuple[Monomial, ...]] = {}
    for t in range(1, top + 1):
        ws = vv_component(J, I, t, naive=naive)
        if ws:
            witnesses[t] = ws
    vanishes = not witnesses
    indeg = min(witnesses) if witnesses else None
    if witnesses and min(witnesses) > bound:
        # impossible per the t0 bound theorem; a witness here is a bug
        raise TheoremViolation(
            "component vanished through t0(J)=%d yet degree %d is nonzero"
            % (bound, min(witnesses))
        )
    return VVReport(
        vanishes=vanishes,
        indeg=indeg,
        witnesses=witnesses,
        degrees_checked=(1, top),
        bound_used=bound_used,
        t0_J=bound,
    )


def vv_indeg(
    J: MonomialIdeal, I: MonomialIdeal, naive: bool = False
) -> int | None:
    """Least degree with a nonzero component; None when the module vanishes."""
    return vv_vanishes(J, I, naive=naive).indeg


def artin_rees_verify(
    J: MonomialIdeal,
    I: MonomialIdeal,
    k: int,
    horizon: int,
    naive: bool = False,
) -> bool:
    """Check J cap I^t = (J cap I^k) * I^{t-k} for k <= t <= k+horizon.

    Bounded verification only: a True result says the Artin-Rees identity
    holds on the window, not that k is the Artin-Rees number.
    """
    if k < 0 or horizon < 1:
        raise ValueError("need k >= 0 and horizon >= 1")
    _check_pair(J, I)
    if naive:
        core = _naive.naive_intersect(J, _naive.naive_power(I, k))
        for t in range(k, k + horizon + 1):
            lhs = _naive.naive_intersect(J, _naive.naive_power(I, t))
            rhs = _naive.naive_product(core, _naive.naive_power(I, t - k))
            if lhs != rhs:
                return False
        return True
    core = ideal_intersect(J, ideal_power(I, k))
    for t in range(k, k + horizon + 1):
        lhs = ideal_intersect(J, ideal_power(I, t))
        rhs = ideal_product(core, ideal_power(I, t - k))
        if not ideal_equal(lhs, rhs):
            return False
    return True


def reduction_number_bounded(
    J: MonomialIdeal, I: MonomialIdeal, horizon: int
) -> int | None:
    """Least t <= horizon with J*I^n = I^{n+1} for all t <= n <= horizon.

    None when no such t exists within the horizon.  Stabilization beyond the
    horizon is not certified.
    """
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    _check_pair(J, I)
    ok = [
        ideal_equal(ideal_product(J, ideal_power(I, n)), ideal_power(I, n + 1))
        for n in range(horizon + 1)
    ]
    last_bad = -1
    for n, good in enumerate(ok):
        if not good:
            last_bad = n
    t = last_bad + 1
    return t if t <= horizon else None


@dataclass(frozen=True)
class DPowerReport:
    vanishes: bool
    indeg_J: int
    consistent: bool

    def to_obj(self) -> dict:
        return {
            "vanishes": self.vanishes,
            "indeg_J": self.indeg_J,
            "consistent": self.consistent,
        }


def dpower_check(J: MonomialIdeal, r: int) -> DPowerReport:
    """Evaluate VV of J inside the r-th power of the maximal ideal.

    Consistency asserted: vanishing forces indeg(J) = r.  When J is generated
    purely in degree r the module must vanish; a failure of that implication
    is an internal bug and raises TheoremViolation.
    """
    if r < 1:
        raise ValueError("power must be >= 1")
    if J.is_zero():
        raise ValueError("J must be nonzero")
    mr = power_maximal(J.ctx.n, r, J.ctx)
    if not ideal_subset(J, mr):
        raise NotContained("J is not contained in the %d-th maximal-ideal power" % r)
    rep = vv_vanishes(J, mr)
    ideg = indeg_ideal(J)
    consistent = (not rep.vanishes) or (ideg == r)
    if ideg == r and t0(J) == r and not rep.vanishes:
        raise TheoremViolation(
            "ideal generated in degree %d has nonvanishing module inside m^%d" % (r, r)
        )
    return DPowerReport(vanishes=rep.vanishes, indeg_J=ideg, consistent=consistent)
