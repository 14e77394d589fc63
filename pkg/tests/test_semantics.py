import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import arrow_pairs, arrows, arrows_from, formulas, traced_perm
from medial.equations import cm_nat
from medial.errors import SizeMismatch
from medial.semantics import (
    Permutation,
    block_interchange,
    compose_perm,
    eval_perm,
    identity_perm,
    tensor_perm,
)
from medial.syntax import Cm, Comp, Conj, Id, Letter, Tensor, letter_count, parse_arrow

a, b, c, d, e = (Letter(x) for x in "abcde")


def P(*xs):
    return Permutation(xs)


def test_eval_examples():
    assert eval_perm(Cm(a, b, c, d)) == P(1, 3, 2, 4)
    assert eval_perm(Id(Conj(Conj(a, b), c))) == P(1, 2, 3)
    assert eval_perm(Cm(Conj(a, b), c, d, e)) == P(1, 2, 4, 3, 5)


def test_eval_matches_tracing_on_examples():
    for text in ["cm[a ^ b,c,d,e]", "cm[a,b ^ c,d ^ e,a]", "b>[a,b,c]", "c[a ^ b,c]"]:
        f = parse_arrow(text)
        assert eval_perm(f).map == traced_perm(f)


def test_compose_examples():
    q = P(1, 3, 2, 4)
    assert compose_perm(q, q) == identity_perm(4)
    assert compose_perm(q, identity_perm(4)) == q
    assert compose_perm(P(2, 3, 1), P(2, 3, 1)) == P(3, 1, 2)


def test_compose_applies_right_argument_first():
    p, q = P(2, 1, 3), P(1, 3, 2)
    # 1 -q-> 1 -p-> 2
    assert compose_perm(p, q)(1) == 2
    assert (p * q)(3) == p(q(3))


def test_compose_size_mismatch():
    with pytest.raises(SizeMismatch):
        compose_perm(identity_perm(2), identity_perm(3))


def test_permutation_validation_and_json():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    p = P(1, 3, 2, 4)
    assert p.to_json() == "[1,3,2,4]"
    assert Permutation.from_json("[1,3,2,4]") == p
    assert p.inverse() == p
    assert p.moved() == [2, 3]


def test_tensor_and_blocks():
    assert tensor_perm(P(2, 1), P(1)) == P(2, 1, 3)
    assert block_interchange(1, 2, 1, 0) == P(1, 3, 4, 2)


@settings(max_examples=300)
@given(arrows())
def test_eval_agrees_with_tracing(f):
    p = eval_perm(f)
    assert p.size == letter_count(f.source)
    assert p.map == traced_perm(f)


@settings(max_examples=200)
@given(st.data())
def test_category_laws(data):
    f = data.draw(arrows())
    g = data.draw(arrows_from(f.target))
    h = data.draw(arrows_from(g.target))
    left, right = Comp(h, Comp(g, f)), Comp(Comp(h, g), f)
    assert left.type == right.type
    assert eval_perm(left) == eval_perm(right)
    assert eval_perm(Comp(Id(f.target), f)) == eval_perm(f) == eval_perm(Comp(f, Id(f.source)))


@settings(max_examples=200)
@given(st.data())
def test_bifunctor_laws(data):
    f1, f2 = data.draw(arrows()), data.draw(arrows())
    g1, g2 = data.draw(arrows_from(f1.target)), data.draw(arrows_from(f2.target))
    lhs = Tensor(Comp(g1, f1), Comp(g2, f2))
    rhs = Comp(Tensor(g1, g2), Tensor(f1, f2))
    assert lhs.type == rhs.type
    assert eval_perm(lhs) == eval_perm(rhs)
    x, y = data.draw(formulas()), data.draw(formulas())
    assert eval_perm(Tensor(Id(x), Id(y))) == eval_perm(Id(Conj(x, y)))


@settings(max_examples=200)
@given(arrows(depth=2), arrows(depth=2), arrows(depth=2), arrows(depth=2))
def test_cm_naturality(f, g, h, j):
    lhs, rhs = cm_nat(f, g, h, j)
    assert lhs.type == rhs.type
    assert eval_perm(lhs) == eval_perm(rhs)


@given(formulas(), formulas(), formulas(), formulas())
def test_cm_squares_to_identity(w, x, y, z):
    assert (eval_perm(Cm(w, y, x, z)) * eval_perm(Cm(w, x, y, z))).is_identity()


@settings(max_examples=100)
@given(arrow_pairs())
def test_images_are_bijections(pair):
    for f in pair:
        p = eval_perm(f)
        assert sorted(p.map) == list(range(1, p.size + 1))
