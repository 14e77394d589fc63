"""Deciding equality of arrow terms, and the functor onto balanced formulae.

Equality is decided by comparing permutation images, which the coherence
results make sound and complete; no rewriting is involved.
"""

from __future__ import annotations

from .errors import DialectMismatch
from .groups import balanced
from .semantics import eval_perm
from .syntax import Cm, Comp, Conj, Id, Letter, Tensor, dialect, height


def _check_dialect(f, wanted):
    if wanted == "cm" and dialect(f) != "cm":
        raise DialectMismatch(f"{f} uses T, delta or sigma but the cm dialect was requested")


def arrows_equal(f, g, dialect=None):
    """Whether ``f`` and ``g`` denote the same arrow.

    ``dialect="cm"`` insists that both terms avoid the unit; by default the
    unit-free terms are treated as a fragment of the full language.
    """
    if dialect not in (None, "cm", "full"):
        raise ValueError(f"unknown dialect {dialect!r}")
    _check_dialect(f, dialect)
    _check_dialect(g, dialect)
    return f.type == g.type and eval_perm(f) == eval_perm(g)


def functor_f(f):
    """Image of a unit-free term in the category on p^h, h the height of its source."""
    if dialect(f) != "cm":
        raise DialectMismatch(f"{f} is outside the unit-free fragment")
    return _apply_f(f, height(f.source), 0)


def _balance(a, h, depth):
    if isinstance(a, Letter):
        return balanced(h - depth)
    return Conj(_balance(a.left, h, depth + 1), _balance(a.right, h, depth + 1))


def _apply_f(f, h, depth):
    # depth is the number of tensors above f
    if isinstance(f, Id):
        return Id(_balance(f.obj, h, depth))
    if isinstance(f, Cm):
        return Cm(*(_balance(x, h, depth + 2) for x in (f.a, f.b, f.c, f.d)))
    if isinstance(f, Tensor):
        return Tensor(_apply_f(f.f, h, depth + 1), _apply_f(f.g, h, depth + 1))
    if isinstance(f, Comp):
        return Comp(_apply_f(f.g, h, depth), _apply_f(f.f, h, depth))
    raise TypeError(f"not an arrow term: {f!r}")
