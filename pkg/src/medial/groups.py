"""The one-object categories on the balanced formulae p^n.

Arrows p^n -> p^n form a group generated by neighbour transpositions
``i^n_{j,j+1}``, one family per class ``i`` (the number of 1-bits in a
letter's binary address).  This module builds those generators as medial
arrow terms, labels letter positions by (class, index), and checks the
direct-product structure by brute-force closure.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded, IndexOutOfRange
from .semantics import eval_perm
from .syntax import Cm, Comp, Conj, Id, Letter, Tensor, compose

P = Letter("p")
DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class GeneratorRef:
    """``i^n_{j,j+1}``: swap the j-th and (j+1)-th class-i labels of p^n."""

    n: int
    i: int
    j: int

    def __post_init__(self):
        if self.n < 2 or not 1 <= self.i <= self.n - 1 or not 1 <= self.j <= math.comb(self.n, self.i) - 1:
            raise IndexOutOfRange(f"no generator {self.i}^{self.n}_{{{self.j},{self.j + 1}}}")

    def __str__(self):
        return f"{self.i}^{self.n}_{self.j},{self.j + 1}"


@lru_cache(maxsize=None)
def balanced(n):
    """p^0 = p, p^(n+1) = p^n ^ p^n."""
    if n < 0:
        raise IndexOutOfRange(f"negative height {n}")
    if n == 0:
        return P
    half = balanced(n - 1)
    return Conj(half, half)


def medial_at(n):
    """cm on four copies of p^(n-2); an arrow p^n -> p^n."""
    q = balanced(n - 2)
    return Cm(q, q, q, q)


def generators(n):
    """All GeneratorRefs of level n, ordered by class then index."""
    return [GeneratorRef(n, i, j) for i in range(1, n) for j in range(1, math.comb(n, i))]


def generator(ref):
    if not isinstance(ref, GeneratorRef):
        ref = GeneratorRef(*ref)
    return _generator(ref.n, ref.i, ref.j)


@lru_cache(maxsize=None)
def _generator(m, i, j):
    if m == 2:
        return medial_at(2)
    n = m - 1
    below = math.comb(n, i)
    rest = Id(balanced(n))
    if j < below:
        return Tensor(_generator(n, i, j), rest)
    if j > below:
        return Tensor(rest, _generator(n, i - 1, j - below))
    # boundary between the two halves
    gamma = medial_at(m)
    if i == n:
        mid = _generator(m, n, 2)
        return compose(mid, gamma, mid, gamma, mid)
    alpha = _generator(m, i, math.comb(n - 1, i))
    if i == 1:
        return compose(alpha, gamma, alpha, gamma, alpha)
    beta = transposition(m, i, math.comb(n - 1, i) + 1, below)
    return compose(beta, alpha, gamma, alpha, gamma, alpha, beta)


def transposition(n, i, j, k):
    """``i^n_{j,k}`` as a conjugate of neighbour transpositions."""
    if not 1 <= j < k <= math.comb(n, i):
        raise IndexOutOfRange(f"no transposition {i}^{n}_{{{j},{k}}}")
    up = [_checked(n, i, t) for t in range(j, k - 1)]
    return compose(*up, _checked(n, i, k - 1), *reversed(up))


def _checked(n, i, j):
    return generator(GeneratorRef(n, i, j))


def def_cm_expansion(n):
    """Generator word equal to cm on four copies of p^(n-1), at level n + 1."""
    if n < 2:
        raise IndexOutOfRange(f"the expansion starts at n = 2, got {n}")
    m = n + 1
    word = []
    for i in range(1, n + 1):
        d = math.comb(n - 1, i - 1)
        for j in range(math.comb(n - 1, i) + 1, math.comb(n, i) + 1):
            word.append(transposition(m, i, j, j + d))
    return compose(*word)


# ---------------------------------------------------------------- labels


@lru_cache(maxsize=None)
def nseq(n):
    """Labels (class, index) of the 2^n letter positions of p^n, left to right."""
    if n == 0:
        return ((0, 1),)
    prev = nseq(n - 1)
    return prev + tuple((i + 1, j + math.comb(n - 1, i + 1)) for i, j in prev)


def format_nseq(n):
    return " ".join(f"{i}_{j}" for i, j in nseq(n))


def label_positions(n):
    """Map (class, index) -> 1-based position in p^n."""
    return {lab: k for k, lab in enumerate(nseq(n), 1)}


def expected_order(n):
    return math.prod(math.factorial(math.comb(n, i)) for i in range(n + 1))


# --------------------------------------------------------------- closure


def group_order(n, budget=DEFAULT_BUDGET):
    """Order of the group generated by the level-n generators, by BFS closure."""
    if expected_order(n) > budget:
        raise BudgetExceeded(budget, expected_order(n))
    gens = [tuple(v - 1 for v in eval_perm(generator(g)).map) for g in generators(n)]
    return _closure_size(gens, 2**n, budget)


def _closure_size(gens, degree, budget):
    start = tuple(range(degree))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(map(x.__getitem__, g))
            if y not in seen:
                seen.add(y)
                if len(seen) > budget:
                    raise BudgetExceeded(budget)
                queue.append(y)
    return len(seen)


# ------------------------------------------------------- product oracle
#
# Elements of S_{C(n,0)} x ... x S_{C(n,n)} as tuples of 0-based one-line
# permutations, computed without going through letter positions.


def product_identity(n):
    return tuple(tuple(range(math.comb(n, i))) for i in range(n + 1))


def product_mul(x, y):
    """x . y: apply y first."""
    return tuple(tuple(a[b] for b in bs) for a, bs in zip(x, y))


def product_transposition(n, i, j, k):
    e = [list(c) for c in product_identity(n)]
    e[i][j - 1], e[i][k - 1] = k - 1, j - 1
    return tuple(tuple(c) for c in e)


def product_word(n, refs):
    """Product element of a word of generators, leftmost applied last."""
    out = product_identity(n)
    for r in refs:
        out = product_mul(out, product_transposition(n, r.i, r.j, r.j + 1))
    return out


def _embed(x, n, right):
    # level n-1 element into level n: the left half keeps labels, the right
    # half moves class i index j to class i+1 index j + C(n-1, i+1)
    out = [list(range(math.comb(n, i))) for i in range(n + 1)]
    for i, comp in enumerate(x):
        cls, shift = (i + 1, math.comb(n - 1, i + 1)) if right else (i, 0)
        for a, b in enumerate(comp):
            out[cls][a + shift] = b + shift
    return tuple(tuple(c) for c in out)


def product_of_medial(level):
    """cm on four copies of p^(level-2), as a product element."""
    n = level - 1
    out = product_identity(level)
    for i in range(1, n + 1):
        d = math.comb(n - 1, i - 1)
        for j in range(math.comb(n - 1, i) + 1, math.comb(n, i) + 1):
            out = product_mul(out, product_transposition(level, i, j, j + d))
    return out


def product_element(f, n):
    """Product element of an arrow term of type p^n -> p^n built from Id, Cm, Tensor, Comp."""
    if isinstance(f, Id):
        return product_identity(n)
    if isinstance(f, Cm):
        return product_of_medial(n)
    if isinstance(f, Tensor):
        return product_mul(_embed(product_element(f.f, n - 1), n, False),
                           _embed(product_element(f.g, n - 1), n, True))
    if isinstance(f, Comp):
        return product_mul(product_element(f.g, n), product_element(f.f, n))
    raise TypeError(f"{f!r} is not an arrow of the balanced category")


# ----------------------------------------------------------- verification


def _support_ok(n, ref, perm):
    where = label_positions(n)
    labels = nseq(n)
    a, b = where[(ref.i, ref.j)], where[(ref.i, ref.j + 1)]
    for k, v in enumerate(perm.map, 1):
        want = b if k == a else a if k == b else k
        if v != want:
            return False
    return all(lab[0] == ref.i or perm(k) == k for k, lab in enumerate(labels, 1))


def _same(n, lhs_refs, rhs_refs):
    lhs = compose(*(generator(r) for r in lhs_refs))
    rhs = compose(*(generator(r) for r in rhs_refs))
    return eval_perm(lhs) == eval_perm(rhs)


def relation_instances(n):
    """Every instance of the commuting, braid and far-commuting relations at level n."""
    gens = generators(n)
    norm = [((x, y), (y, x)) for x in gens for y in gens if x.i < y.i]
    yb = []
    far = []
    for x in gens:
        for y in gens:
            if x.i != y.i:
                continue
            if y.j == x.j + 1:
                yb.append(((x, y, x), (y, x, y)))
            elif y.j >= x.j + 2:
                far.append(((x, y), (y, x)))
    return {"norm": norm, "YB": yb, "perm": far}


def verify_direct_product(n, budget=DEFAULT_BUDGET):
    """Check the direct-product structure at level n; returns a JSON-ready report."""
    checks = []
    perms = {g: eval_perm(generator(g)) for g in generators(n)}
    checks.append(("label-support", all(_support_ok(n, g, p) for g, p in perms.items())))
    checks.append(("involution", all(
        eval_perm(compose(generator(g), generator(g))).is_identity() for g in perms)))
    for name, pairs in relation_instances(n).items():
        checks.append((name, all(_same(n, l, r) for l, r in pairs)))
    if n >= 3:
        exp = eval_perm(def_cm_expansion(n - 1))
        checks.append(("def-cm", exp == eval_perm(medial_at(n))))
    order = group_order(n, budget)
    want = expected_order(n)
    checks.append(("order", order == want))
    return {
        "n": n,
        "order": order,
        "expectedOrder": want,
        "checks": [{"name": k, "pass": bool(v)} for k, v in checks],
    }


def report_passed(report):
    return all(c["pass"] for c in report["checks"])


def report_json(report):
    return json.dumps(report)
