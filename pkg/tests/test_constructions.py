import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import formulas
from medial.constructions import (
    b_bw,
    b_fw,
    c_comm,
    lifting_square,
    pentagon_square,
    psi_lift,
    psi_shape,
    split,
    subst_shape,
)
from medial.decision import arrows_equal
from medial.equations import UPWARD, instantiate, upward_square
from medial.errors import ArityMismatch, IndexOutOfRange, UnitNotAllowed
from medial.semantics import Permutation, eval_perm
from medial.syntax import (
    HOLE,
    TOP,
    Cm,
    Comp,
    Conj,
    DeltaBw,
    DeltaFw,
    Id,
    Letter,
    SigmaBw,
    SigmaFw,
    Tensor,
    arity,
    fill,
    subterms,
)

a, b, c, d = (Letter(x) for x in "abcd")
a2, b2 = Letter("a_"), Letter("b_")
PAIR = Conj(HOLE, HOLE)


def test_associators():
    assert b_fw(a, b, c).type == (Conj(a, Conj(b, c)), Conj(Conj(a, b), c))
    assert eval_perm(b_fw(a, b, c)).is_identity()
    assert arrows_equal(Comp(b_bw(a, b, c), b_fw(a, b, c)), Id(Conj(a, Conj(b, c))))
    assert arrows_equal(Comp(b_fw(a, b, c), b_bw(a, b, c)), Id(Conj(Conj(a, b), c)))


def test_associator_is_the_displayed_composite():
    f = b_fw(a, b, c)
    assert f == Comp(Tensor(Id(Conj(a, b)), SigmaFw(c)),
                     Comp(Cm(a, TOP, b, c), Tensor(DeltaBw(a), Id(Conj(b, c)))))


def test_symmetry():
    assert c_comm(a, b).type == (Conj(a, b), Conj(b, a))
    assert eval_perm(c_comm(a, b)) == Permutation((2, 1))
    assert arrows_equal(Comp(c_comm(b, a), c_comm(a, b)), Id(Conj(a, b)))


def test_psi_shape_examples():
    assert psi_shape(HOLE, [a], [a2]) == Id(Conj(a, a2))
    assert psi_shape(PAIR, [a, b], [a2, b2]) == Cm(a, a2, b, b2)
    assert psi_shape(TOP, [], []) == DeltaBw(TOP)
    with pytest.raises(ArityMismatch):
        psi_shape(PAIR, [a], [a2])


shapes = st.recursive(st.sampled_from([HOLE, TOP]), lambda s: st.builds(Conj, s, s), max_leaves=6)
unit_free_shapes = st.recursive(st.just(HOLE), lambda s: st.builds(Conj, s, s), max_leaves=6)


def _names(prefix, n):
    return [Letter(f"{prefix}{k}") for k in range(1, n + 1)]


@settings(max_examples=100)
@given(shapes)
def test_psi_shape_type(m):
    n = arity(m)
    xs, ys = _names("x", n), _names("y", n)
    f = psi_shape(m, xs, ys)
    pairs = [Conj(x, y) for x, y in zip(xs, ys)]
    assert f.type == (fill(m, pairs), Conj(fill(m, xs), fill(m, ys)))


@settings(max_examples=100)
@given(unit_free_shapes)
def test_psi_shape_unit_free_has_no_unit_arrows(m):
    n = arity(m)
    f = psi_shape(m, _names("x", n), _names("y", n))
    assert not any(isinstance(t, (DeltaFw, DeltaBw, SigmaFw, SigmaBw)) for t in subterms(f))


def test_subst_examples():
    m = Conj(HOLE, Conj(HOLE, HOLE))
    assert subst_shape(HOLE, 1, m) == m
    assert subst_shape(PAIR, 2, PAIR) == Conj(HOLE, PAIR)
    assert subst_shape(Conj(PAIR, HOLE), 2, PAIR) == Conj(Conj(HOLE, PAIR), HOLE)


def test_split_examples():
    m = Conj(PAIR, HOLE)
    assert split(HOLE, 1, m) == (m, m)
    assert split(PAIR, 1, HOLE) == (HOLE, PAIR)
    assert split(PAIR, 2, HOLE) == (PAIR, HOLE)


def test_subst_errors():
    with pytest.raises(IndexOutOfRange):
        subst_shape(PAIR, 3, HOLE)
    with pytest.raises(UnitNotAllowed):
        subst_shape(Conj(HOLE, TOP), 1, HOLE)
    with pytest.raises(UnitNotAllowed):
        split(PAIR, 1, Conj(TOP, HOLE))


@settings(max_examples=100)
@given(unit_free_shapes, unit_free_shapes, st.data())
def test_subst_and_split_arities(n_shape, m_shape, data):
    i = data.draw(st.integers(1, arity(n_shape)))
    assert arity(subst_shape(n_shape, i, m_shape)) == arity(n_shape) + arity(m_shape) - 1
    left, right = split(n_shape, i, m_shape)
    assert arity(left) + arity(right) == arity(n_shape) + 2 * arity(m_shape) - 1


def test_psi_lift_base_cases():
    assert psi_lift(PAIR, 1, HOLE, [], [a], [a2], [c]) == b_bw(a, a2, c)
    assert psi_lift(PAIR, 2, HOLE, [b], [a], [a2], []) == b_fw(b, a, a2)
    assert psi_lift(HOLE, 1, PAIR, [], [a, b], [a2, b2], []) == Cm(a, a2, b, b2)


def test_psi_lift_arity_errors():
    with pytest.raises(ArityMismatch):
        psi_lift(PAIR, 1, HOLE, [b], [a], [a2], [c])
    with pytest.raises(UnitNotAllowed):
        psi_lift(Conj(HOLE, TOP), 1, HOLE, [], [a], [a2], [])


@settings(max_examples=100)
@given(unit_free_shapes, unit_free_shapes, st.data())
def test_psi_lift_type(n_shape, m_shape, data):
    n, m = arity(n_shape), arity(m_shape)
    i = data.draw(st.integers(1, n))
    bs, cs = _names("b", i - 1), _names("c", n - i)
    xs, ys = _names("x", m), _names("y", m)
    f = psi_lift(n_shape, i, m_shape, bs, xs, ys, cs)
    left, right = split(n_shape, i, m_shape)
    pairs = [Conj(x, y) for x, y in zip(xs, ys)]
    assert f.source == fill(subst_shape(n_shape, i, m_shape), bs + pairs + cs)
    assert f.target == Conj(fill(left, bs + xs), fill(right, ys + cs))
    if m_shape == HOLE:
        assert _only_in_associators(f)


def _only_in_associators(f):
    # Cm with a T argument is how the associators are spelled; a bare medial map has none
    return all(TOP in (t.a, t.b, t.c, t.d) for t in subterms(f) if isinstance(t, Cm))


def test_pentagon_square_is_b5():
    lhs, rhs = pentagon_square(a, b, c, d)
    inst = instantiate("b5", {"A": a, "B": b, "C": c, "D": d})
    assert (lhs, rhs) == (inst.lhs, inst.rhs)


def test_one_lifting_of_backward_associator():
    left3 = Conj(PAIR, HOLE)
    right3 = Conj(HOLE, PAIR)
    lhs, rhs = lifting_square(
        left3, right3, 1, HOLE, HOLE,
        alpha=lambda args: b_bw(*args),
        alpha_l=lambda args: Id(args[0]),
        alpha_r=lambda args: b_bw(*args),
        bs=[], xs=[a], ys=[a2], cs=[b, c],
    )
    assert lhs.type == rhs.type
    assert arrows_equal(lhs, rhs)


@settings(max_examples=50)
@given(formulas(max_leaves=3), formulas(max_leaves=3), formulas(max_leaves=3), formulas(max_leaves=3),
       formulas(max_leaves=3), formulas(max_leaves=3), formulas(max_leaves=3), formulas(max_leaves=3))
def test_upward_squares(x1, x2, x3, x4, y1, y2, y3, y4):
    xs, ys = [x1, x2, x3, x4], [y1, y2, y3, y4]
    for m1, m2, perm, alpha in UPWARD.values():
        k = arity(m1)
        lhs, rhs = upward_square(m1, m2, perm, alpha, xs[:k], ys[:k])
        assert lhs.type == rhs.type
        assert eval_perm(lhs) == eval_perm(rhs)
