"""Named equations between arrow terms.

The catalog maps an ASCII label to the metavariables it needs and a builder
producing both sides from a binding of those metavariables to formulae.
Adding an equation means adding a row to ``CATALOG``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .constructions import _chain, b_bw, b_fw, c_comm, psi_shape
from .errors import MissingBinding, UnsatisfiableIndices
from .syntax import (
    HOLE,
    TOP,
    Cm,
    Conj,
    DeltaBw,
    DeltaFw,
    Id,
    Letter,
    SigmaBw,
    SigmaFw,
    Tensor,
    compose,
)


@dataclass(frozen=True)
class EquationInstance:
    name: str
    lhs: object
    rhs: object
    bindings: dict = field(default_factory=dict)

    @property
    def type(self):
        return self.lhs.source, self.lhs.target

    def well_typed(self):
        return (self.lhs.source, self.lhs.target) == (self.rhs.source, self.rhs.target)


@dataclass(frozen=True)
class Entry:
    metavars: tuple
    build: Callable


# ---------------------------------------------------------- solved indices


def mirror(a):
    if isinstance(a, Conj):
        return Conj(mirror(a.right), mirror(a.left))
    return a


def _step(token, x):
    if token == "cm":
        if isinstance(x, Conj) and isinstance(x.left, Conj) and isinstance(x.right, Conj):
            return Cm(x.left.left, x.left.right, x.right.left, x.right.right)
        raise UnsatisfiableIndices(f"cm cannot start at {x}")
    if not isinstance(x, Conj):
        raise UnsatisfiableIndices(f"{token} cannot start at {x}")
    if token == "cm^1":
        return Tensor(_step("cm", x.left), Id(x.right))
    if token == "1^cm":
        return Tensor(Id(x.left), _step("cm", x.right))
    raise ValueError(f"unknown word token {token!r}")


def solve_indices(word, source, target):
    """Assign indices to an index-free word so it runs from ``source`` to ``target``.

    ``word`` lists the factors in composition order (the last one applies
    first); each is ``"cm"``, ``"cm^1"`` or ``"1^cm"``.  The source fixes
    every index of the first factor, whose target fixes the next, and so
    on, so the assignment is the most general one available.
    """
    steps = []
    x = source
    for token in reversed(word):
        f = _step(token, x)
        steps.append(f)
        x = f.target
    if x != target:
        raise UnsatisfiableIndices(f"word ends at {x}, expected {target}")
    return compose(*reversed(steps))


# ---------------------------------------------------------------- builders


def psi_cm(v):
    a1, a2, a3, a4 = v["A1"], v["A2"], v["A3"], v["A4"]
    p1, p2, p3, p4 = v["A1'"], v["A2'"], v["A3'"], v["A4'"]
    lhs = compose(
        Cm(Conj(a1, a3), Conj(p1, p3), Conj(a2, a4), Conj(p2, p4)),
        Tensor(Cm(a1, p1, a3, p3), Cm(a2, p2, a4, p4)),
        Cm(Conj(a1, p1), Conj(a2, p2), Conj(a3, p3), Conj(a4, p4)),
    )
    rhs = compose(
        Tensor(Cm(a1, a2, a3, a4), Cm(p1, p2, p3, p4)),
        Cm(Conj(a1, a2), Conj(p1, p2), Conj(a3, a4), Conj(p3, p4)),
        Tensor(Cm(a1, p1, a2, p2), Cm(a3, p3, a4, p4)),
    )
    return lhs, rhs


def psi_delta(v):
    a, p = v["A"], v["A'"]
    lhs = DeltaFw(Conj(a, p))
    rhs = compose(Tensor(DeltaFw(a), DeltaFw(p)), Cm(a, p, TOP, TOP), Tensor(Id(Conj(a, p)), DeltaBw(TOP)))
    return lhs, rhs


def psi_sigma(v):
    a, p = v["A"], v["A'"]
    lhs = SigmaFw(Conj(a, p))
    rhs = compose(Tensor(SigmaFw(a), SigmaFw(p)), Cm(TOP, TOP, a, p), Tensor(DeltaBw(TOP), Id(Conj(a, p))))
    return lhs, rhs


def unit_law(v):
    return DeltaFw(TOP), SigmaFw(TOP)


def cm34(v):
    a1, a2 = v["A1"], v["A2"]
    rhs = compose(Tensor(DeltaBw(a1), DeltaBw(a2)), DeltaFw(Conj(a1, a2)), Tensor(Id(Conj(a1, a2)), DeltaFw(TOP)))
    return Cm(a1, a2, TOP, TOP), rhs


def cm234(v):
    a = v["A"]
    return Cm(a, TOP, TOP, TOP), Id(Conj(Conj(a, TOP), Conj(TOP, TOP)))


def cm24(v):
    a1, a3 = v["A1"], v["A3"]
    rhs = compose(Tensor(Id(Conj(a1, a3)), DeltaBw(TOP)), DeltaBw(Conj(a1, a3)), Tensor(DeltaFw(a1), DeltaFw(a3)))
    return Cm(a1, TOP, a3, TOP), rhs


def cm12(v):
    a3, a4 = v["A3"], v["A4"]
    rhs = compose(Tensor(SigmaBw(a3), SigmaBw(a4)), SigmaFw(Conj(a3, a4)), Tensor(SigmaFw(TOP), Id(Conj(a3, a4))))
    return Cm(TOP, TOP, a3, a4), rhs


def cm123(v):
    a = v["A"]
    return Cm(TOP, TOP, TOP, a), Id(Conj(Conj(TOP, TOP), Conj(TOP, a)))


def cm13(v):
    a2, a4 = v["A2"], v["A4"]
    rhs = compose(Tensor(SigmaBw(TOP), Id(Conj(a2, a4))), SigmaBw(Conj(a2, a4)), Tensor(SigmaFw(a2), SigmaFw(a4)))
    return Cm(TOP, a2, TOP, a4), rhs


def cm23(v):
    a1, a4 = v["A1"], v["A4"]
    return Cm(a1, TOP, TOP, a4), Id(Conj(Conj(a1, TOP), Conj(TOP, a4)))


def pentagon(v):
    a, b, c, d = v["A"], v["B"], v["C"], v["D"]
    lhs = compose(b_fw(Conj(a, b), c, d), b_fw(a, b, Conj(c, d)))
    rhs = compose(Tensor(b_fw(a, b, c), Id(d)), b_fw(a, Conj(b, c), d), Tensor(Id(a), b_fw(b, c, d)))
    return lhs, rhs


def hexagon(v):
    a, b, c = v["A"], v["B"], v["C"]
    lhs = compose(
        b_bw(c, a, b),
        Tensor(c_comm(a, c), Id(b)),
        b_fw(a, c, b),
        Tensor(Id(a), c_comm(b, c)),
        b_bw(a, b, c),
    )
    return lhs, c_comm(Conj(a, b), c)


def cm_from_bc(v):
    a, b, c, d = v["A"], v["B"], v["C"], v["D"]
    inner = compose(b_bw(c, b, d), Tensor(c_comm(b, c), Id(d)), b_fw(b, c, d))
    rhs = compose(b_fw(a, c, Conj(b, d)), Tensor(Id(a), inner), b_bw(a, b, Conj(c, d)))
    return Cm(a, b, c, d), rhs


def b_delta_sigma(v):
    a, c = v["A"], v["C"]
    return b_fw(a, TOP, c), Tensor(DeltaBw(a), SigmaFw(c))


def _cm_i_type(v):
    a1, a2, a3, a4 = v["A1"], v["A2"], v["A3"], v["A4"]
    p1, p3, p4 = v["A1'"], v["A3'"], v["A4'"]
    source = Conj(Conj(Conj(a1, p1), a2), Conj(Conj(a3, p3), Conj(a4, p4)))
    target = Conj(Conj(Conj(a1, a3), a2), Conj(Conj(p1, a4), Conj(p3, p4)))
    return source, target


def cm_i(v):
    source, target = _cm_i_type(v)
    lhs = solve_indices(["cm", "cm^1", "cm", "1^cm"], source, target)
    rhs = solve_indices(["1^cm", "cm", "cm^1", "cm"], source, target)
    return lhs, rhs


CM_II_LHS = ["cm", "cm^1", "cm", "cm^1", "cm", "cm^1"]
CM_II_RHS = ["cm^1", "cm", "cm^1", "cm", "cm^1", "cm"]


def _cm_ii_type(v):
    a1, a2, a3, a4 = v["A1"], v["A2"], v["A3"], v["A4"]
    p1, p2, p3 = v["A1'"], v["A2'"], v["A3'"]
    source = Conj(Conj(Conj(a1, p1), Conj(a2, p2)), Conj(Conj(a3, p3), a4))
    target = Conj(Conj(Conj(a1, p1), Conj(a2, p3)), Conj(Conj(a3, p2), a4))
    return source, target


def cm_ii(v):
    source, target = _cm_ii_type(v)
    return solve_indices(CM_II_LHS, source, target), solve_indices(CM_II_RHS, source, target)


def cm_ii_mirror(v):
    # cm is its own mirror image while cm ^ 1 mirrors to 1 ^ cm
    source, target = (mirror(x) for x in _cm_ii_type(v))
    swap = {"cm": "cm", "cm^1": "1^cm"}
    lhs = solve_indices([swap[t] for t in CM_II_LHS], source, target)
    rhs = solve_indices([swap[t] for t in CM_II_RHS], source, target)
    return lhs, rhs


def cm_involution(v):
    a1, a2, a3, a4 = v["A1"], v["A2"], v["A3"], v["A4"]
    return compose(Cm(a1, a3, a2, a4), Cm(a1, a2, a3, a4)), Id(Conj(Conj(a1, a2), Conj(a3, a4)))


def cm_nat(f, g, h, j):
    """Both sides of naturality of cm for arrows f, g, h, j."""
    lhs = compose(Tensor(Tensor(f, h), Tensor(g, j)), Cm(f.source, g.source, h.source, j.source))
    rhs = compose(Cm(f.target, g.target, h.target, j.target), Tensor(Tensor(f, g), Tensor(h, j)))
    return lhs, rhs


def cm_naturality(v):
    # each naturality arrow is a symmetry x1 ^ x2 -> x2 ^ x1, so G sees it
    f, g, h, j = (c_comm(v[f"{x}1"], v[f"{x}2"]) for x in "ABCD")
    return cm_nat(f, g, h, j)


_A4 = ("A1", "A1'", "A2", "A2'", "A3", "A3'", "A4", "A4'")

CATALOG = {
    "psi-cm": Entry(_A4, psi_cm),
    "psi-delta": Entry(("A", "A'"), psi_delta),
    "psi-sigma": Entry(("A", "A'"), psi_sigma),
    "VII": Entry((), unit_law),
    "cm34": Entry(("A1", "A2"), cm34),
    "cm234": Entry(("A",), cm234),
    "cm24": Entry(("A1", "A3"), cm24),
    "cm12": Entry(("A3", "A4"), cm12),
    "cm123": Entry(("A",), cm123),
    "cm13": Entry(("A2", "A4"), cm13),
    "cm23": Entry(("A1", "A4"), cm23),
    "b5": Entry(("A", "B", "C", "D"), pentagon),
    "bc": Entry(("A", "B", "C"), hexagon),
    "cmbc": Entry(("A", "B", "C", "D"), cm_from_bc),
    "b-delta-sigma": Entry(("A", "C"), b_delta_sigma),
    "cmI": Entry(("A1", "A1'", "A2", "A3", "A3'", "A4", "A4'"), cm_i),
    "cmII": Entry(("A1", "A1'", "A2", "A2'", "A3", "A3'", "A4"), cm_ii),
    "cmII-mirror": Entry(("A1", "A1'", "A2", "A2'", "A3", "A3'", "A4"), cm_ii_mirror),
    "cmcm": Entry(("A1", "A2", "A3", "A4"), cm_involution),
    "cm-nat": Entry(("A1", "A2", "B1", "B2", "C1", "C2", "D1", "D2"), cm_naturality),
}

LABELS = tuple(CATALOG)


def fresh_bindings(name, letters=None):
    """Bind the label's metavariables, in order, to distinct letters a1, a2, ..."""
    metavars = CATALOG[name].metavars
    if letters is None:
        letters = [f"a{k}" for k in range(1, len(metavars) + 1)]
    if len(letters) < len(metavars):
        raise MissingBinding(f"{name} needs {len(metavars)} letters, got {len(letters)}")
    return {m: Letter(x) if isinstance(x, str) else x for m, x in zip(metavars, letters)}


def instantiate(name, bindings=None):
    if name not in CATALOG:
        raise KeyError(f"unknown equation label {name!r}")
    entry = CATALOG[name]
    if bindings is None:
        bindings = fresh_bindings(name)
    missing = [m for m in entry.metavars if m not in bindings]
    if missing:
        raise MissingBinding(f"{name} needs bindings for {', '.join(missing)}")
    used = {m: bindings[m] for m in entry.metavars}
    lhs, rhs = entry.build(used)
    return EquationInstance(name, lhs, rhs, used)


# ------------------------------------------------------ upward preservation


def upward_square(m1, m2, perm, alpha, xs, ys):
    """Both sides of the square saying ``alpha`` is upward preserved by the tensor.

    ``alpha(args)`` is the component of a transformation from shape ``m1``
    to shape ``m2`` with arguments reordered by ``perm`` (1-based, one-line).
    Returns (psi^{m2} . alpha, (alpha ^ alpha) . psi^{m1}).
    """
    xs, ys = list(xs), list(ys)
    pxs = [xs[k - 1] for k in perm]
    pys = [ys[k - 1] for k in perm]
    pairs = [Conj(x, y) for x, y in zip(xs, ys)]
    lhs = _chain(psi_shape(m2, pxs, pys), alpha(pairs))
    rhs = _chain(Tensor(alpha(xs), alpha(ys)), psi_shape(m1, xs, ys))
    return lhs, rhs


MEDIAL_SHAPE = Conj(Conj(HOLE, HOLE), Conj(HOLE, HOLE))
UPWARD = {
    "cm": (MEDIAL_SHAPE, MEDIAL_SHAPE, (1, 3, 2, 4), lambda a: Cm(*a)),
    "delta": (Conj(HOLE, TOP), HOLE, (1,), lambda a: DeltaFw(a[0])),
    "sigma": (Conj(TOP, HOLE), HOLE, (1,), lambda a: SigmaFw(a[0])),
}
