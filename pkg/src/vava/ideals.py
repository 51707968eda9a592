"""Exact arithmetic on monomials and monomial ideals over a fixed variable context.

Monomials are exponent vectors (checked nonnegative int64); ideals are kept
as their unique minimal generating set, stored canonically as a read-only
matrix with one exponent row per generator.  Canonical order is graded-lex:
sort by total degree, ties broken by the exponent vector lexicographically.
Equality of ideals is therefore structural.

The zero ideal (no generators) and the unit ideal (single generator 1) are
first-class values and every operation below accepts them.

All values are immutable after construction and all operations are pure, so
values can be shared freely across threads and results never depend on
evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from ._kernels import antichain_keep, any_divisor_batch
from .errors import ContextMismatch, ExponentOverflow, ResourceExceeded

# checked exponent range: far beyond desk scale, far below int64 wrap
EXP_LIMIT = 1 << 40

# candidate-matrix guard for pairwise products/intersections
_MAX_CANDIDATE_ROWS = 30_000_000


@dataclass(frozen=True)
class RingContext:
    """A polynomial ring fixed by its number of variables and their names."""

    n: int
    names: tuple[str, ...]

    def __init__(self, n, names=None):
        if n < 1:
            raise ValueError("need at least one variable")
        if names is None:
            names = tuple("x%d" % (i + 1) for i in range(n))
        else:
            names = tuple(names)
        if len(names) != n:
            raise ValueError("expected %d variable names, got %d" % (n, len(names)))
        if len(set(names)) != n:
            raise ValueError("variable names must be pairwise distinct")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "names", names)

    def monomial(self, exps) -> "Monomial":
        return Monomial(self, exps)

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.n)

    def variable(self, i) -> "Monomial":
        """The monomial x_i (1-based index)."""
        if not 1 <= i <= self.n:
            raise ValueError("variable index %d out of range 1..%d" % (i, self.n))
        e = [0] * self.n
        e[i - 1] = 1
        return Monomial(self, e)


def _check_same_context(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatch("operands use different ring contexts")


class Monomial:
    """An exponent vector over a fixed context; the atom of all computation."""

    __slots__ = ("ctx", "exps", "_hash")

    def __init__(self, ctx: RingContext, exps):
        exps = tuple(int(e) for e in exps)
        if len(exps) != ctx.n:
            raise ValueError("expected %d exponents, got %d" % (ctx.n, len(exps)))
        for e in exps:
            if e < 0:
                raise ValueError("negative exponent %d" % e)
            if e > EXP_LIMIT:
                raise ExponentOverflow("exponent %d exceeds checked range" % e)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "_hash", hash((ctx, exps)))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    # -- basic queries ----------------------------------------------------

    def degree(self) -> int:
        return sum(self.exps)

    def support(self) -> frozenset[int]:
        """1-based indices of the variables that occur."""
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e > 0)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exps)

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same_context(self, other)
        out = tuple(a + b for a, b in zip(self.exps, other.exps))
        if any(e > EXP_LIMIT for e in out):
            raise ExponentOverflow("product exponent exceeds checked range")
        return Monomial(self.ctx, out)

    def __pow__(self, t: int) -> "Monomial":
        if t < 0:
            raise ValueError("negative power")
        out = tuple(e * t for e in self.exps)
        if any(e > EXP_LIMIT for e in out):
            raise ExponentOverflow("power exponent exceeds checked range")
        return Monomial(self.ctx, out)

    def divides(self, other: "Monomial") -> bool:
        _check_same_context(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __floordiv__(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if ``other`` does not divide ``self``."""
        _check_same_context(self, other)
        out = tuple(a - b for a, b in zip(self.exps, other.exps))
        if any(e < 0 for e in out):
            raise ValueError("%s does not divide %s" % (other, self))
        return Monomial(self.ctx, out)

    # -- ordering / identity ------------------------------------------------

    def sort_key(self):
        """Graded-lex key: degree first, ties by descending exponent lex.

        Within one degree this is plain lex order with x1 > x2 > ... , so an
        equigenerated ideal lists its generators the way a person would
        (x1^2, x1*x2, x2^2).
        """
        return (self.degree(), tuple(-e for e in self.exps))

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self.ctx == other.ctx
            and self.exps == other.exps
        )

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        _check_same_context(self, other)
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "Monomial(%s)" % str(self)

    def __str__(self):
        if self.is_one():
            return "1"
        parts = []
        for name, e in zip(self.ctx.names, self.exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts)


# -- monomial helpers (spec-level operations) -------------------------------


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same_context(a, b)
    return Monomial(a.ctx, tuple(max(x, y) for x, y in zip(a.exps, b.exps)))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_same_context(a, b)
    return Monomial(a.ctx, tuple(min(x, y) for x, y in zip(a.exps, b.exps)))


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def degree(a: Monomial) -> int:
    return a.degree()


def support(a: Monomial) -> frozenset[int]:
    return a.support()


# -- ideals ------------------------------------------------------------------


def _canonicalize(mat: np.ndarray) -> np.ndarray:
    """Dedupe, sort graded-lex (ties: descending exponent lex, matching
    Monomial.sort_key), drop rows divisible by an earlier row."""
    if mat.shape[0] == 0:
        return mat
    mat = np.unique(mat, axis=0)
    degs = mat.sum(axis=1)
    keys = tuple(-mat[:, c] for c in range(mat.shape[1] - 1, -1, -1)) + (degs,)
    order = np.lexsort(keys)
    mat = mat[order]
    degs = degs[order]
    keep = antichain_keep(mat, degs)
    return mat[keep]


class MonomialIdeal:
    """A monomial ideal held as its minimal generating antichain.

    Construction minimizes: divisibility-redundant generators are dropped and
    the rest stored in canonical graded-lex order, so ``==`` is structural.
    """

    __slots__ = ("ctx", "_mat", "_degs", "_hash")

    def __init__(self, ctx: RingContext, gens=()):
        rows = []
        for g in gens:
            if isinstance(g, Monomial):
                if g.ctx != ctx:
                    raise ContextMismatch("generator from a different context")
                rows.append(g.exps)
            else:
                rows.append(tuple(int(e) for e in g))
        mat = np.asarray(rows, dtype=np.int64).reshape(len(rows), ctx.n)
        if mat.size and (mat < 0).any():
            raise ValueError("negative exponent in generator")
        if mat.size and mat.max() > EXP_LIMIT:
            raise ExponentOverflow("generator exponent exceeds checked range")
        self._init_from_mat(ctx, _canonicalize(mat))

    def _init_from_mat(self, ctx, mat):
        mat.setflags(write=False)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "_mat", mat)
        degs = mat.sum(axis=1)
        degs.setflags(write=False)
        object.__setattr__(self, "_degs", degs)
        object.__setattr__(self, "_hash", hash((ctx, mat.shape, mat.tobytes())))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def _from_canonical(cls, ctx, mat):
        self = object.__new__(cls)
        self._init_from_mat(ctx, mat)
        return self

    @classmethod
    def zero(cls, ctx: RingContext) -> "MonomialIdeal":
        return cls(ctx, ())

    @classmethod
    def unit(cls, ctx: RingContext) -> "MonomialIdeal":
        return cls(ctx, ((0,) * ctx.n,))

    # -- views ---------------------------------------------------------------

    @property
    def exponent_matrix(self) -> np.ndarray:
        """Read-only (num_gens, n) matrix of generator exponents."""
        return self._mat

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.ctx, row) for row in self._mat)

    @property
    def num_gens(self) -> int:
        return self._mat.shape[0]

    def is_zero(self) -> bool:
        return self._mat.shape[0] == 0

    def is_unit(self) -> bool:
        return self._mat.shape[0] == 1 and self._degs[0] == 0

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ctx == other.ctx
            and self._mat.shape == other._mat.shape
            and bool((self._mat == other._mat).all())
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.is_zero():
            return "MonomialIdeal(0)"
        return "MonomialIdeal(%s)" % ", ".join(str(g) for g in self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)


def minimize(gens, ctx: RingContext | None = None) -> MonomialIdeal:
    """Minimal generating antichain of the ideal generated by ``gens``.

    ``ctx`` is only needed when ``gens`` is empty (the zero ideal).
    """
    gens = tuple(gens)
    if not gens:
        if ctx is None:
            raise ValueError("empty generator set needs an explicit context")
        return MonomialIdeal.zero(ctx)
    first = gens[0]
    if not isinstance(first, Monomial):
        raise TypeError("minimize expects Monomial values")
    return MonomialIdeal(first.ctx, gens)


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    """Monomial membership: some generator divides ``m``."""
    if I.ctx != m.ctx:
        raise ContextMismatch("monomial from a different context")
    if I.is_zero():
        return False
    q = np.asarray([m.exps], dtype=np.int64)
    return bool(
        any_divisor_batch(I._mat, I._degs, q, q.sum(axis=1))[0]
    )


def contains_all(I: MonomialIdeal, mat: np.ndarray) -> np.ndarray:
    """Vectorized membership for a matrix of exponent rows."""
    if mat.shape[0] == 0:
        return np.zeros(0, dtype=np.bool_)
    return any_divisor_batch(I._mat, I._degs, mat, mat.sum(axis=1))


def gens_outside(A: MonomialIdeal, B: MonomialIdeal) -> tuple[Monomial, ...]:
    """Minimal generators of A that are not members of B."""
    _check_same_context(A, B)
    if A.is_zero():
        return ()
    inside = contains_all(B, A._mat)
    return tuple(Monomial(A.ctx, row) for row in A._mat[~inside])


def ideal_sum(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    _check_same_context(A, B)
    mat = np.vstack([A._mat, B._mat])
    return MonomialIdeal._from_canonical(A.ctx, _canonicalize(mat))


def _pairwise(A: MonomialIdeal, B: MonomialIdeal, op) -> np.ndarray:
    ka, kb = A._mat.shape[0], B._mat.shape[0]
    if ka * kb > _MAX_CANDIDATE_ROWS:
        raise ResourceExceeded(
            "pairwise candidate matrix too large (%d rows)" % (ka * kb),
            units=ka * kb,
        )
    cand = op(A._mat[:, None, :], B._mat[None, :, :]).reshape(ka * kb, A.ctx.n)
    return cand


def ideal_product(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    _check_same_context(A, B)
    if A.is_zero() or B.is_zero():
        return MonomialIdeal.zero(A.ctx)
    cand = _pairwise(A, B, np.add)
    if cand.size and cand.max() > EXP_LIMIT:
        raise ExponentOverflow("product exponent exceeds checked range")
    return MonomialIdeal._from_canonical(A.ctx, _canonicalize(cand))


@lru_cache(maxsize=512)
def ideal_power(A: MonomialIdeal, t: int) -> MonomialIdeal:
    """A^t, interreducing after every multiplication.

    Interreduction per step keeps the generator count flat; the naive
    minimize-once-at-the-end route lives in :mod:`vava.naive` as an oracle.
    ``A^0`` is the unit ideal.
    """
    if t < 0:
        raise ValueError("negative ideal power")
    if t == 0:
        return MonomialIdeal.unit(A.ctx)
    if t == 1:
        return A
    return ideal_product(ideal_power(A, t - 1), A)


def ideal_intersect(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms of the two generating antichains."""
    _check_same_context(A, B)
    if A.is_zero() or B.is_zero():
        return MonomialIdeal.zero(A.ctx)
    cand = _pairwise(A, B, np.maximum)
    return MonomialIdeal._from_canonical(A.ctx, _canonicalize(cand))


def ideal_equal(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    return A == B


def ideal_subset(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    """A is a subset of B iff every generator of A is a member of B."""
    _check_same_context(A, B)
    if A.is_zero():
        return True
    return bool(contains_all(B, A._mat).all())


def t0(J: MonomialIdeal) -> int:
    """Maximum degree among the minimal generators."""
    if J.is_zero():
        raise ValueError("t0 of the zero ideal is undefined")
    return int(J._degs.max())


def indeg_ideal(J: MonomialIdeal) -> int:
    """Minimum degree among the minimal generators (initial degree)."""
    if J.is_zero():
        raise ValueError("initial degree of the zero ideal is undefined")
    return int(J._degs.min())


def power_maximal(n: int, d: int, ctx: RingContext | None = None) -> MonomialIdeal:
    """All degree-d monomials in n variables: the d-th power of (x_1..x_n)."""
    if ctx is None:
        ctx = RingContext(n)
    elif ctx.n != n:
        raise ValueError("context has %d variables, expected %d" % (ctx.n, n))
    if d < 0:
        raise ValueError("negative degree")
    if d == 0:
        return MonomialIdeal.unit(ctx)

    rows = []

    def rec(prefix, remaining, pos):
        if pos == n - 1:
            rows.append(prefix + [remaining])
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, pos + 1)

    rec([], d, 0)
    mat = np.asarray(rows, dtype=np.int64)
    return MonomialIdeal._from_canonical(ctx, _canonicalize(mat))


def squarefree_power(n: int, d: int, ctx: RingContext | None = None) -> MonomialIdeal:
    """All squarefree degree-d monomials in n variables."""
    if ctx is None:
        ctx = RingContext(n)
    elif ctx.n != n:
        raise ValueError("context has %d variables, expected %d" % (ctx.n, n))
    if not 1 <= d <= n:
        raise ValueError("squarefree degree %d out of range 1..%d" % (d, n))
    combos = list(combinations(range(n), d))
    rows = np.zeros((len(combos), n), dtype=np.int64)
    for i, c in enumerate(combos):
        rows[i, list(c)] = 1
    return MonomialIdeal._from_canonical(ctx, _canonicalize(rows))


def height(J: MonomialIdeal) -> int:
    """Height of a nonzero proper monomial ideal.

    Equals the minimum size of a set of variables meeting the support of
    every minimal generator (height of the radical); found by exhaustive
    hitting-set search with branch-and-bound pruning.
    """
    if J.is_zero():
        raise ValueError("height of the zero ideal is undefined")
    if J.is_unit():
        raise ValueError("height of the unit ideal is undefined")
    supports = sorted(
        {frozenset(np.flatnonzero(row).tolist()) for row in J._mat}, key=sorted
    )
    # keep only inclusion-minimal supports; a hitter of those hits everything
    minimal = [
        s for s in supports if not any(t < s for t in supports)
    ]
    best = [J.ctx.n]

    def bb(uncovered, chosen):
        if not uncovered:
            best[0] = min(best[0], chosen)
            return
        if chosen + 1 >= best[0]:
            return
        branch = min(uncovered, key=lambda s: (len(s), sorted(s)))
        for v in sorted(branch):
            rest = [s for s in uncovered if v not in s]
            bb(rest, chosen + 1)

    bb(minimal, 0)
    return best[0]
