"""Uniform clutters: facet ideals, complete d-partite structure, squarefree
pair criteria, and the neighborhood machinery behind the torsion witness
search for the pair (J, Jacobian ideal of J).

Combinatorial notions used throughout:

* submaximal circuit: a (d-1)-subset contained in some circuit;
* N(e): vertices completing the submaximal circuit e to a circuit;
* alpha(A): size of the union of N(e) over all submaximal circuits inside A
  (unions only grow, so the single full family realizes the maximum over
  nonempty families; ``alpha_bruteforce`` keeps the literal definition as an
  oracle);
* independent set: contains no circuit.

A torsion witness (head vertices on a circuit, an independent tail with
alpha one less than the minor size) certifies a nonzero degree-t component
of the Valabrega-Valla module of the facet ideal; every witness found is
re-verified algebraically before being reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import NotContained, TheoremViolation
from .graphs import Graph, edge_ideal
from .ideals import Monomial, MonomialIdeal, RingContext, height, ideal_sum
from .vvmod import vv_component, vv_vanishes


class Clutter:
    """A d-uniform clutter: circuits are d-subsets of 1..n, pairwise
    incomparable (automatic for uniform size)."""

    __slots__ = ("n", "d", "circuits")

    def __init__(self, n: int, d: int, circuits=()):
        if n < 1:
            raise ValueError("need at least one vertex")
        if d < 1:
            raise ValueError("uniformity must be >= 1")
        norm = set()
        for c in circuits:
            fs = frozenset(int(v) for v in c)
            if len(fs) != d:
                raise ValueError("circuit %r does not have exactly %d vertices" % (sorted(fs), d))
            if not all(1 <= v <= n for v in fs):
                raise ValueError("circuit vertex out of range 1..%d" % n)
            norm.add(fs)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "circuits", frozenset(norm))

    def __setattr__(self, name, value):
        raise AttributeError("Clutter is immutable")

    @classmethod
    def from_graph(cls, G: Graph) -> "Clutter":
        return cls(G.n, 2, [set(e) for e in G.edges])

    @classmethod
    def from_squarefree_ideal(cls, J: MonomialIdeal) -> "Clutter":
        """Circuits are the supports of a squarefree equigenerated ideal."""
        if J.is_zero():
            raise ValueError("zero ideal has no circuits")
        gens = J.gens
        degs = {g.degree() for g in gens}
        if len(degs) != 1:
            raise ValueError("generators are not equigenerated")
        if J.exponent_matrix.max() > 1:
            raise ValueError("generators are not squarefree")
        return cls(J.ctx.n, degs.pop(), [g.support() for g in gens])

    def vertices(self) -> frozenset[int]:
        out = frozenset()
        for c in self.circuits:
            out |= c
        return out

    def sorted_circuits(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(c)) for c in self.circuits)

    def is_subclutter_of(self, other: "Clutter") -> bool:
        return self.d == other.d and self.circuits <= other.circuits

    def __eq__(self, other):
        return (
            isinstance(other, Clutter)
            and (self.n, self.d, self.circuits) == (other.n, other.d, other.circuits)
        )

    def __hash__(self):
        return hash((self.n, self.d, self.circuits))

    def __repr__(self):
        return "Clutter(n=%d, d=%d, circuits=%s)" % (self.n, self.d, self.sorted_circuits())


def facet_ideal(C: Clutter, ctx: RingContext | None = None) -> MonomialIdeal:
    """Squarefree ideal of circuit monomials; the empty clutter gives zero."""
    if ctx is None:
        ctx = RingContext(C.n)
    elif ctx.n != C.n:
        raise ValueError("context size differs from vertex count")
    rows = []
    for c in C.sorted_circuits():
        e = [0] * C.n
        for v in c:
            e[v - 1] = 1
        rows.append(e)
    return MonomialIdeal(ctx, rows)


def complete_d_partite(classes) -> Clutter:
    """All transversal d-subsets of a partition (one vertex per class)."""
    cls = [tuple(sorted(int(v) for v in c)) for c in classes]
    if not cls or any(not c for c in cls):
        raise ValueError("classes must be nonempty")
    seen = set()
    for c in cls:
        for v in c:
            if v in seen:
                raise ValueError("classes overlap at vertex %d" % v)
            seen.add(v)
    n = max(seen)
    circuits = [frozenset(t) for t in product(*cls)]
    return Clutter(n, len(cls), circuits)


def find_d_partition(C: Clutter):
    """Recover the partition of a complete d-partite clutter, else None.

    Two vertices share a class iff no circuit contains both; the clutter is
    complete d-partite iff that relation partitions the vertices into d
    classes whose transversals are exactly the circuit set.
    """
    verts = sorted(C.vertices())
    if not verts:
        return None
    together = {v: set() for v in verts}
    for c in C.circuits:
        for u, v in combinations(sorted(c), 2):
            together[u].add(v)
            together[v].add(u)
    unassigned = set(verts)
    classes = []
    for v in verts:
        if v not in unassigned:
            continue
        cl = frozenset(u for u in unassigned if u not in together[v] or u == v)
        classes.append(cl)
        unassigned -= cl
    if len(classes) != C.d:
        return None
    # same-class vertices must never co-occur in a circuit
    for cl in classes:
        for u, v in combinations(sorted(cl), 2):
            if v in together[u]:
                return None
    count = 1
    for cl in classes:
        count *= len(cl)
    if count != len(C.circuits):
        return None
    for c in C.circuits:
        if any(len(c & cl) != 1 for cl in classes):
            return None
    return tuple(classes)


def dpartite_vanishing_check(C: Clutter, Cp: Clutter) -> bool:
    """Vanishing for a subclutter of a complete d-partite clutter.

    The result is guaranteed True; a False computation indicates a bug in the
    ideal arithmetic and raises TheoremViolation instead of returning.
    """
    if find_d_partition(C) is None:
        raise ValueError("outer clutter is not complete d-partite")
    if not Cp.is_subclutter_of(C) or Cp.n != C.n:
        raise NotContained("second clutter is not a subclutter of the first")
    if not Cp.circuits:
        raise ValueError("subclutter must be nonempty")
    ctx = RingContext(C.n)
    rep = vv_vanishes(facet_ideal(Cp, ctx), facet_ideal(C, ctx))
    if not rep.vanishes:
        raise TheoremViolation(
            "complete d-partite pair with nonvanishing module: %r inside %r" % (Cp, C)
        )
    return True


def squarefree_pair_condition(J: MonomialIdeal, d: int):
    """Neighbor-replacement condition for J against the squarefree power.

    For every generator x_{i_1}...x_{i_d} and every (d-1)-subset G of the
    variables, some x_{G+{i_r}} must again lie in J.  Returns (True, None) or
    (False, (generator, G)) with a violating pair.
    """
    if J.is_zero():
        raise ValueError("J must be nonzero")
    C = Clutter.from_squarefree_ideal(J)
    if C.d != d:
        raise ValueError("generators have degree %d, expected %d" % (C.d, d))
    n = J.ctx.n
    circuits = C.circuits
    for gen in J.gens:
        sup = sorted(gen.support())
        for G in combinations(range(1, n + 1), d - 1):
            Gs = frozenset(G)
            if any(i not in Gs and (Gs | {i}) in circuits for i in sup):
                continue
            return False, (gen, Gs)
    return True, None


def squarefree_pair_vanishing_d3(J: MonomialIdeal) -> bool:
    """Degree-3 case where the replacement condition is a full criterion:
    it holds iff the module of J inside the squarefree cube vanishes."""
    ok, _ = squarefree_pair_condition(J, 3)
    return ok


def submaximal_circuits(C: Clutter) -> frozenset[frozenset[int]]:
    out = set()
    for c in C.circuits:
        for e in combinations(sorted(c), C.d - 1):
            out.add(frozenset(e))
    return frozenset(out)


def neighborhood(C: Clutter, e) -> frozenset[int]:
    """Vertices v with {v} + e a circuit; e must have d-1 vertices."""
    e = frozenset(e)
    if len(e) != C.d - 1:
        raise ValueError("expected a set of %d vertices" % (C.d - 1))
    return frozenset(v for v in C.vertices() if v not in e and (e | {v}) in C.circuits)


def neighborhood_union(C: Clutter, es) -> frozenset[int]:
    out = frozenset()
    for e in es:
        out |= neighborhood(C, e)
    return out


def alpha(C: Clutter, A) -> int:
    """Largest neighborhood-union size over families of submaximal circuits
    inside A; equals the union over the full family by monotonicity."""
    A = frozenset(A)
    inside = [e for e in submaximal_circuits(C) if e <= A]
    if not inside:
        return 0
    return len(neighborhood_union(C, inside))


def alpha_bruteforce(C: Clutter, A) -> int:
    """Literal maximum over all nonempty families; oracle for ``alpha``."""
    A = frozenset(A)
    inside = sorted((e for e in submaximal_circuits(C) if e <= A), key=sorted)
    best = 0
    for k in range(1, len(inside) + 1):
        for fam in combinations(inside, k):
            best = max(best, len(neighborhood_union(C, fam)))
    return best


def is_independent(C: Clutter, A) -> bool:
    A = frozenset(A)
    return not any(c <= A for c in C.circuits)


@dataclass(frozen=True)
class TorsionWitness:
    """Vertices certifying a nonzero degree-t component for the pair
    (facet ideal J, (J, size-r minors of its Jacobian))."""

    y: tuple[int, ...]
    circuit: tuple[int, ...]
    t: int
    r: int
    submaximal_family: tuple[tuple[int, ...], ...]
    confirmed: bool

    def to_obj(self) -> dict:
        return {
            "y": list(self.y),
            "circuit": list(self.circuit),
            "t": self.t,
            "r": self.r,
            "submaximal_family": [list(e) for e in self.submaximal_family],
            "confirmed": self.confirmed,
        }


def _jacobian_pair(J: MonomialIdeal, r: int) -> MonomialIdeal:
    from .jacobian import jacobian_matrix, minors_ideal

    rep = minors_ideal(jacobian_matrix(J), r)
    return ideal_sum(J, rep.term_minors)


def confirm_torsion_witness(C: Clutter, t: int, r: int) -> bool:
    """Nonvanishing of the degree-t component of (J, (J, I_r(Jacobian)))."""
    ctx = RingContext(C.n)
    J = facet_ideal(C, ctx)
    I = _jacobian_pair(J, r)
    return bool(vv_component(J, I, t))


def ttorsion_search(
    C: Clutter, t: int, r: int, m_max: int, verify: bool = True
) -> TorsionWitness | None:
    """Bounded exhaustive search for a torsion witness.

    Looks for distinct vertices y_1..y_m (d <= m <= m_max) with
      (i)   {y_1..y_d} a circuit,
      (ii)  B + {y_{t+1}..y_m} independent for every (t-1)-subset B of the
            head {y_1..y_t},
      (iii) alpha({y_{t+1}..y_m}) = r - 1.

    Enumeration iterates circuits first (the scarcest resource), then head
    choices, then tail extensions, in canonical sorted order; the first hit
    wins, so the result is deterministic.  A failed search proves nothing:
    the criterion is one-directional.
    """
    if not 1 < t <= C.d:
        raise ValueError("need 1 < t <= d")
    if r < 1:
        raise ValueError("minor size must be >= 1")
    if m_max < C.d:
        raise ValueError("m_max must be at least d")
    verts = sorted(C.vertices())
    for m in range(C.d, m_max + 1):
        extras = m - C.d
        for circ in C.sorted_circuits():
            fset = set(circ)
            outside = [v for v in verts if v not in fset]
            if extras > len(outside):
                continue
            for head in combinations(circ, t):
                rest = tuple(v for v in circ if v not in head)
                for ext in combinations(outside, extras):
                    tail = frozenset(rest) | frozenset(ext)
                    if not all(
                        is_independent(C, frozenset(B) | tail)
                        for B in combinations(head, t - 1)
                    ):
                        continue
                    if alpha(C, tail) != r - 1:
                        continue
                    fam = sorted(
                        (e for e in submaximal_circuits(C) if e <= tail), key=sorted
                    )
                    confirmed = False
                    if verify:
                        if not confirm_torsion_witness(C, t, r):
                            raise TheoremViolation(
                                "torsion witness %r failed algebraic confirmation"
                                % (head + rest + ext,)
                            )
                        confirmed = True
                    return TorsionWitness(
                        y=head + rest + ext,
                        circuit=circ,
                        t=t,
                        r=r,
                        submaximal_family=tuple(tuple(sorted(e)) for e in fam),
                        confirmed=confirmed,
                    )
    return None


@dataclass(frozen=True)
class EdgeTorsionWitness:
    """Adjacent pair plus an independent attachment set for the graph case."""

    x1: int
    x2: int
    others: tuple[int, ...]
    r: int

    def to_obj(self) -> dict:
        return {"x1": self.x1, "x2": self.x2, "others": list(self.others), "r": self.r}


def ar_theorem_graph(G: Graph) -> EdgeTorsionWitness | None:
    """Degree-2 torsion criterion for an edge ideal with height r > 1.

    Searches for adjacent x1, x2 and vertices x_{i_1}..x_{i_s} (s >= 1) with
    both {x1, x_i*} and {x2, x_i*} independent and the neighborhood union of
    the x_i* of size exactly r - 1.  A witness exists iff the degree-2
    component of the module of the edge ideal inside its Jacobian ideal is
    nonzero (both directions hold in this case).
    """
    J = edge_ideal(G)
    if J.is_zero():
        raise ValueError("graph has no edges")
    r = height(J)
    if r <= 1:
        raise ValueError("edge ideal must have height > 1")

    def independent(vs) -> bool:
        return not any(G.has_edge(u, v) for u, v in combinations(sorted(vs), 2))

    for x1, x2 in G.sorted_edges():
        others = [v for v in range(1, G.n + 1) if v not in (x1, x2)]
        for s in range(1, len(others) + 1):
            for S in combinations(others, s):
                if not independent(S + (x1,)):
                    continue
                if not independent(S + (x2,)):
                    continue
                nb = frozenset()
                for v in S:
                    nb |= G.neighbors(v)
                if len(nb) == r - 1:
                    return EdgeTorsionWitness(x1=x1, x2=x2, others=S, r=r)
    return None
