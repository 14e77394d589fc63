import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import formulas
from medial.equations import (
    CATALOG,
    LABELS,
    fresh_bindings,
    instantiate,
    mirror,
    solve_indices,
)
from medial.errors import MissingBinding, UnsatisfiableIndices
from medial.semantics import eval_perm
from medial.syntax import TOP, Cm, Conj, DeltaFw, Id, Letter, SigmaFw, parse_formula

a, b, c, d = (Letter(x) for x in "abcd")

EXPECTED_LABELS = (
    "psi-cm psi-delta psi-sigma VII cm34 cm234 cm24 cm12 cm123 cm13 cm23 "
    "b5 bc cmbc b-delta-sigma cmI cmII cmII-mirror cmcm cm-nat"
).split()


def test_labels():
    assert list(LABELS) == EXPECTED_LABELS


@pytest.mark.parametrize("label", EXPECTED_LABELS)
def test_catalog_entry_holds(label):
    inst = instantiate(label)
    assert inst.well_typed()
    assert eval_perm(inst.lhs) == eval_perm(inst.rhs)


def test_unit_law_instance():
    inst = instantiate("VII", {})
    assert (inst.lhs, inst.rhs) == (DeltaFw(TOP), SigmaFw(TOP))


def test_cm234_instance():
    inst = instantiate("cm234", {"A": a})
    assert inst.lhs == Cm(a, TOP, TOP, TOP)
    assert inst.rhs == Id(Conj(Conj(a, TOP), Conj(TOP, TOP)))


def test_pentagon_type():
    inst = instantiate("b5", {"A": a, "B": b, "C": c, "D": d})
    assert inst.type == (parse_formula("a ^ (b ^ (c ^ d))"), parse_formula("((a ^ b) ^ c) ^ d"))


def test_missing_binding():
    with pytest.raises(MissingBinding):
        instantiate("b5", {"A": a})
    with pytest.raises(MissingBinding):
        fresh_bindings("b5", ["a", "b"])


def test_fresh_bindings_are_distinct():
    for label in LABELS:
        vals = list(fresh_bindings(label).values())
        assert len(set(vals)) == len(vals)


def test_solve_indices_unsatisfiable():
    with pytest.raises(UnsatisfiableIndices):
        solve_indices(["cm"], parse_formula("a ^ b"), parse_formula("a ^ b"))


def test_solve_indices_single_step():
    f = solve_indices(["cm"], parse_formula("(a ^ b) ^ (c ^ d)"), parse_formula("(a ^ c) ^ (b ^ d)"))
    assert f == Cm(a, b, c, d)


def test_mirror():
    assert mirror(parse_formula("(a ^ b) ^ c")) == parse_formula("c ^ (b ^ a)")


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(EXPECTED_LABELS), st.data())
def test_catalog_with_random_formulas(label, data):
    metavars = CATALOG[label].metavars
    bindings = {m: data.draw(formulas(max_leaves=3)) for m in metavars}
    inst = instantiate(label, bindings)
    assert inst.well_typed()
    assert eval_perm(inst.lhs) == eval_perm(inst.rhs)
