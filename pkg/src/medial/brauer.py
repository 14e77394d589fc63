"""Lifting strand diagrams to permutations of binary addresses.

A k-strand permutation diagram lifts to a bijection on the 2^k words over
{0, 1}: a top word u is joined to the bottom word v exactly when every
strand runs between equal letters of u and v.  Addresses are ordered
lexicographically (0 is "left"), which identifies the address ``bin(k-1)``
with letter position ``k`` of the balanced formula p^k.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import SizeMismatch
from .semantics import Permutation, compose_perm, identity_perm


def addresses(k):
    return ["".join(bits) for bits in itertools.product("01", repeat=k)]


def address_index(word):
    """1-based lexicographic position of a 0-1 word."""
    return int(word, 2) + 1 if word else 1


@dataclass(frozen=True)
class StrandDiagram:
    """Top strand s ends at bottom position ``wiring(s)``."""

    wiring: Permutation

    @property
    def strands(self):
        return self.wiring.size

    @classmethod
    def of(cls, *images):
        return cls(Permutation(tuple(images)))

    def then(self, other):
        """``self . other``: other on top, self below."""
        return StrandDiagram(compose_perm(self.wiring, other.wiring))


@dataclass(frozen=True)
class LiftedGraph:
    bits: int
    map: Permutation

    def __post_init__(self):
        if self.map.size != 2**self.bits:
            raise SizeMismatch(f"{self.bits}-bit graph needs {2**self.bits} points, got {self.map.size}")

    def image(self, word):
        return addresses(self.bits)[self.map(address_index(word)) - 1]

    def as_dict(self):
        return {u: self.image(u) for u in addresses(self.bits)}

    def to_json(self):
        return json.dumps(self.as_dict())

    @classmethod
    def from_dict(cls, table):
        bits = len(next(iter(table)))
        return cls(bits, Permutation(tuple(address_index(table[u]) for u in addresses(bits))))


def crossing():
    """The two-strand crossing X."""
    return StrandDiagram.of(2, 1)


def cross_at(k, s):
    """k strands, with strands s and s+1 crossed."""
    w = list(range(1, k + 1))
    w[s - 1], w[s] = w[s], w[s - 1]
    return StrandDiagram.of(*w)


def fits(d, top, bottom):
    """Whether diagram ``d`` joins only equal letters of ``top`` and ``bottom``."""
    return all(top[s - 1] == bottom[d.wiring(s) - 1] for s in range(1, d.strands + 1))


def lift(d):
    words = addresses(d.strands)
    wiring = d.wiring.map
    images = []
    for u in words:
        v = [None] * d.strands
        for s, t in enumerate(wiring):
            v[t - 1] = u[s]
        images.append(address_index("".join(v)))
    return LiftedGraph(d.strands, Permutation(tuple(images)))


def lift_by_fitting(d):
    """The lift read directly off the fitting relation, by trying every pair of words."""
    words = addresses(d.strands)
    images = []
    for u in words:
        hits = [v for v in words if fits(d, u, v)]
        assert len(hits) == 1
        images.append(address_index(hits[0]))
    return LiftedGraph(d.strands, Permutation(tuple(images)))


def compose_lift(g1, g2):
    """``g1 . g2``: apply g2 first, as for permutations."""
    if g1.bits != g2.bits:
        raise SizeMismatch(f"cannot compose {g1.bits}-bit and {g2.bits}-bit graphs")
    return LiftedGraph(g1.bits, compose_perm(g1.map, g2.map))


def identity_lift(k):
    return LiftedGraph(k, identity_perm(2**k))


def support_by_ones(g):
    """Moved addresses of ``g`` grouped by their number of 1s."""
    out = {}
    for u in addresses(g.bits):
        if g.image(u) != u:
            out.setdefault(u.count("1"), []).append(u)
    return out


def preserves_popcount(g):
    return all(u.count("1") == g.image(u).count("1") for u in addresses(g.bits))


def yang_baxter_sides(k=3):
    """Lifted graphs of X1 X2 X1 and X2 X1 X2 on k strands, in that order."""
    x1, x2 = lift(cross_at(k, 1)), lift(cross_at(k, 2))
    return compose_lift(x1, compose_lift(x2, x1)), compose_lift(x2, compose_lift(x1, x2))


def psi_cm_correspondence(letters=None):
    """Compare both sides of the psi-cm equation with the lifted braid composites.

    Position k of the eight letters is identified with the 3-bit address of
    k - 1.  Returns a list of (check name, passed) pairs.
    """
    from .equations import fresh_bindings, instantiate
    from .semantics import eval_perm
    from .syntax import factors

    eq = instantiate("psi-cm", fresh_bindings("psi-cm", letters))
    x1, x2 = lift(cross_at(3, 1)), lift(cross_at(3, 2))
    lhs_graph, rhs_graph = yang_baxter_sides(3)
    by_perm = {x1.map: "X1", x2.map: "X2"}
    return [
        ("lhs", eval_perm(eq.lhs) == lhs_graph.map),
        ("rhs", eval_perm(eq.rhs) == rhs_graph.map),
        ("lhs-factors", [by_perm.get(eval_perm(f)) for f in factors(eq.lhs)] == ["X1", "X2", "X1"]),
        ("rhs-factors", [by_perm.get(eval_perm(f)) for f in factors(eq.rhs)] == ["X2", "X1", "X2"]),
    ]


def all_diagrams(k):
    return [StrandDiagram(Permutation(p)) for p in itertools.permutations(range(1, k + 1))]


def yang_baxter_suite(max_strands=4):
    """Every check of the lift: fitting table, YB, psi-cm and properties over S_1..S_max."""
    checks = [
        ("fitting-table", lift(crossing()).as_dict() == {"00": "00", "01": "10", "10": "01", "11": "11"}),
        ("yang-baxter", yang_baxter_sides(3)[0] == yang_baxter_sides(3)[1]),
    ]
    checks += [(f"psi-cm-{name}", ok) for name, ok in psi_cm_correspondence()]
    for k in range(1, max_strands + 1):
        ds = all_diagrams(k)
        lifts = {d: lift(d) for d in ds}
        checks.append((f"fitting-rule-S{k}", all(lifts[d] == lift_by_fitting(d) for d in ds)))
        checks.append((f"popcount-S{k}", all(preserves_popcount(g) for g in lifts.values())))
        checks.append((f"injective-S{k}", len(set(lifts.values())) == len(ds)))
        checks.append((f"homomorphism-S{k}", all(
            lift(d1.then(d2)) == compose_lift(lifts[d1], lifts[d2]) for d1 in ds for d2 in ds)))
    return checks
