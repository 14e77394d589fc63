"""Formulae, shapes and arrow terms, with a small textual DSL.

Formulae are binary trees over letters and the unit ``T``.  Arrow terms are
built from eight primitive constructors and carry their (source, target)
type, computed once at construction; an ill-typed composition raises
:class:`~medial.errors.TypeMismatch` immediately, so every live term is
well typed.

Concrete syntax::

    formula := atom | "(" formula "^" formula ")"      atom := letter | "T"
    arrow   := "1[" F "]" | "cm[" F "," F "," F "," F "]"
             | "dl>[" F "]" | "dl<[" F "]" | "sg>[" F "]" | "sg<[" F "]"
             | "b>[" F "," F "," F "]" | "b<[" F "," F "," F "]" | "c[" F "," F "]"
             | arrow "." arrow | arrow "/\\" arrow | "(" arrow ")"

Outermost parentheses of a formula may be omitted; everything nested must
be parenthesized.  ``.`` associates to the right and binds looser than
``/\\``, which does not associate at all.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import ParseError, TypeMismatch

LETTER_RE = re.compile(r"[a-z][a-z0-9_]*")


# ---------------------------------------------------------------- formulae


@dataclass(frozen=True)
class Letter:
    name: str

    def __post_init__(self):
        if not LETTER_RE.fullmatch(self.name):
            raise ValueError(f"bad letter name {self.name!r}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Unit:
    def __str__(self):
        return "T"


@dataclass(frozen=True)
class Conj:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Hole:
    """The placeholder of a shape."""

    def __str__(self):
        return "[]"


Formula = Union[Letter, Unit, Conj]
Shape = Union[Hole, Unit, Conj]

TOP = Unit()
HOLE = Hole()


def conj(*parts):
    """Left-to-right right-nested conjunction helper: conj(a, b, c) = a ^ (b ^ c)."""
    if len(parts) == 1:
        return parts[0]
    return Conj(parts[0], conj(*parts[1:]))


def format_formula(a, top=True):
    if isinstance(a, Conj):
        body = f"{format_formula(a.left, False)} ^ {format_formula(a.right, False)}"
        return body if top else f"({body})"
    return str(a)


def letter_positions(a):
    """In-order letter occurrences of ``a`` as (name, depth) pairs; ``T`` is skipped."""
    out = []

    def walk(x, depth):
        if isinstance(x, Letter):
            out.append((x.name, depth))
        elif isinstance(x, Conj):
            walk(x.left, depth + 1)
            walk(x.right, depth + 1)

    walk(a, 0)
    return out


def letter_count(a):
    if isinstance(a, Conj):
        return letter_count(a.left) + letter_count(a.right)
    return 1 if isinstance(a, Letter) else 0


def height(a):
    if isinstance(a, Conj):
        return 1 + max(height(a.left), height(a.right))
    return 0


def has_unit(a):
    if isinstance(a, Conj):
        return has_unit(a.left) or has_unit(a.right)
    return isinstance(a, Unit)


# ------------------------------------------------------------------ shapes


def arity(shape):
    if isinstance(shape, Hole):
        return 1
    if isinstance(shape, Conj):
        return arity(shape.left) + arity(shape.right)
    if isinstance(shape, Unit):
        return 0
    raise TypeError(f"not a shape: {shape!r}")


def unit_free(shape):
    return not has_unit(shape)


def fill(shape, args):
    """M(A_1, ..., A_m): put the i-th argument in the i-th hole from the left."""
    args = list(args)
    if len(args) != arity(shape):
        from .errors import ArityMismatch

        raise ArityMismatch(f"shape of arity {arity(shape)} given {len(args)} arguments")
    it = iter(args)

    def go(s):
        if isinstance(s, Hole):
            return next(it)
        if isinstance(s, Conj):
            left = go(s.left)
            return Conj(left, go(s.right))
        return s

    return go(shape)


# ------------------------------------------------------------- arrow terms


class Arrow:
    """Common behaviour of arrow terms; ``source`` and ``target`` are set on construction."""

    __slots__ = ()

    def __str__(self):
        return format_arrow(self)

    @property
    def type(self):
        return self.source, self.target


def _typed(cls):
    cls = dataclass(frozen=True)(cls)
    return cls


def _set_type(obj, source, target):
    object.__setattr__(obj, "source", source)
    object.__setattr__(obj, "target", target)


@_typed
class Id(Arrow):
    obj: Formula
    source: Formula = field(init=False, repr=False, compare=False)
    target: Formula = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _set_type(self, self.obj, self.obj)


@_typed
class Cm(Arrow):
    a: Formula
    b: Formula
    c: Formula
    d: Formula
    source: Formula = field(init=False, repr=False, compare=False)
    target: Formula = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _set_type(
            self,
            Conj(Conj(self.a, self.b), Conj(self.c, self.d)),
            Conj(Conj(self.a, self.c), Conj(self.b, self.d)),
        )


@_typed
class DeltaFw(Arrow):
    obj: Formula
    source: Formula = field(init=False, repr=False, compare=False)
    target: Formula = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _set_type(self, Conj(self.obj, TOP), self.obj)


@_typed
class DeltaBw(Arrow):
    obj: Formula
    source: Formula = field(init=False, repr=False, compare=False)
    target: Formula = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _set_type(self, self.obj, Conj(self.obj, TOP))


@_typed
class SigmaFw(Arrow):
    obj: Formula
    source: Formula = field(init=False, repr=False, compare=False)
    target: Formula = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _set_type(self, Conj(TOP, self.obj), self.obj)


@_typed
class SigmaBw(Arrow):
    obj: Formula
    source: Formula = field(init=False, repr=False, compare=False)
    target: Formula = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _set_type(self, self.obj, Conj(TOP, self.obj))


@_typed
class Comp(Arrow):
    """``g . f``: first f, then g."""

    g: Arrow
    f: Arrow
    source: Formula = field(init=False, repr=False, compare=False)
    target: Formula = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.f.target != self.g.source:
            raise TypeMismatch(self.g.source, self.f.target)
        _set_type(self, self.f.source, self.g.target)


@_typed
class Tensor(Arrow):
    f: Arrow
    g: Arrow
    source: Formula = field(init=False, repr=False, compare=False)
    target: Formula = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _set_type(self, Conj(self.f.source, self.g.source), Conj(self.f.target, self.g.target))


PRIMITIVES = (Id, Cm, DeltaFw, DeltaBw, SigmaFw, SigmaBw)
UNIT_ARROWS = (DeltaFw, DeltaBw, SigmaFw, SigmaBw)


def infer_type(f):
    """(source, target) of a term.  Terms are checked when built, so this never fails."""
    return f.source, f.target


def subterms(f):
    stack = [f]
    while stack:
        t = stack.pop()
        yield t
        if isinstance(t, Comp):
            stack.extend((t.g, t.f))
        elif isinstance(t, Tensor):
            stack.extend((t.f, t.g))


def is_cm_only(f):
    """True for arrow terms of the unit-free category: no T, no delta/sigma."""
    for t in subterms(f):
        if isinstance(t, UNIT_ARROWS):
            return False
        if isinstance(t, Id) and has_unit(t.obj):
            return False
        if isinstance(t, Cm) and any(has_unit(x) for x in (t.a, t.b, t.c, t.d)):
            return False
    return True


def dialect(f):
    return "cm" if is_cm_only(f) else "full"


def compose(*arrows):
    """Composite of ``arrows`` read right to left, flattened and right-nested.

    Nested compositions among the arguments are spliced into one chain, so
    two composites that agree up to associativity come out identical.
    """
    chain = []
    for a in arrows:
        _flatten_into(a, chain)
    if not chain:
        raise ValueError("compose() needs at least one arrow")
    out = chain[-1]
    for g in reversed(chain[:-1]):
        out = Comp(g, out)
    return out


def _flatten_into(a, chain):
    while isinstance(a, Comp):
        _flatten_into(a.g, chain)
        a = a.f
    chain.append(a)


def factors(f):
    """The maximal composition chain of ``f``, leftmost (last applied) first."""
    chain = []
    _flatten_into(f, chain)
    return chain


# ---------------------------------------------------------------- printing

_NAMES = {Id: "1", DeltaFw: "dl>", DeltaBw: "dl<", SigmaFw: "sg>", SigmaBw: "sg<"}


def format_arrow(f):
    if isinstance(f, Cm):
        return "cm[" + ",".join(format_formula(x) for x in (f.a, f.b, f.c, f.d)) + "]"
    if type(f) in _NAMES:
        return f"{_NAMES[type(f)]}[{format_formula(f.obj)}]"
    if isinstance(f, Tensor):
        return f"{_tensor_operand(f.f)} /\\ {_tensor_operand(f.g)}"
    if isinstance(f, Comp):
        left = format_arrow(f.g)
        if isinstance(f.g, Comp):
            left = f"({left})"
        return f"{left} . {format_arrow(f.f)}"
    raise TypeError(f"not an arrow term: {f!r}")


def _tensor_operand(f):
    s = format_arrow(f)
    return f"({s})" if isinstance(f, (Comp, Tensor)) else s


# ----------------------------------------------------------------- parsing

_ARROW_HEADS = ("1[", "cm[", "dl>[", "dl<[", "sg>[", "sg<[", "b>[", "b<[", "c[")
_ARITY = {"1[": 1, "cm[": 4, "dl>[": 1, "dl<[": 1, "sg>[": 1, "sg<[": 1, "b>[": 3, "b<[": 3, "c[": 2}


class _Parser:
    def __init__(self, text):
        self.text = text
        self.i = 0

    # offsets are reported in UTF-8 bytes
    def offset(self, i=None):
        i = self.i if i is None else i
        return len(self.text[:i].encode("utf-8"))

    def fail(self, message, i=None):
        raise ParseError(message, self.offset(i))

    def ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self, s):
        self.ws()
        return self.text.startswith(s, self.i)

    def expect(self, s):
        if not self.peek(s):
            found = self.text[self.i:self.i + 1] or "end of input"
            self.fail(f"expected {s!r}, found {found!r}")
        self.i += len(s)

    def end(self):
        self.ws()
        if self.i != len(self.text):
            self.fail(f"unexpected {self.text[self.i]!r}")

    # formula := atom | "(" formula "^" formula ")"
    def formula(self):
        self.ws()
        if self.peek("("):
            self.i += 1
            left = self.formula()
            self.expect("^")
            right = self.formula()
            self.expect(")")
            return Conj(left, right)
        return self.atom()

    def atom(self):
        self.ws()
        if self.text.startswith("T", self.i):
            self.i += 1
            return TOP
        m = LETTER_RE.match(self.text, self.i)
        if not m:
            found = self.text[self.i:self.i + 1] or "end of input"
            self.fail(f"expected a letter, 'T' or '(', found {found!r}")
        self.i = m.end()
        return Letter(m.group())

    def top_formula(self):
        left = self.formula()
        if self.peek("^"):
            self.i += 1
            left = Conj(left, self.formula())
            if self.peek("^"):
                self.fail("nested '^' must be parenthesized")
        return left

    # arrow := tensor ("." arrow)?
    def arrow(self):
        left = self.tensor()
        if self.peek("."):
            dot = self.i
            self.i += 1
            right = self.arrow()
            try:
                return Comp(left, right)
            except TypeMismatch as e:
                raise TypeMismatch(e.expected, e.found, self.offset(dot)) from None
        return left

    def tensor(self):
        left = self.primary()
        if self.peek("/\\"):
            self.i += 2
            left = Tensor(left, self.primary())
            if self.peek("/\\"):
                self.fail("nested '/\\' must be parenthesized")
        return left

    def primary(self):
        self.ws()
        if self.peek("("):
            self.i += 1
            inner = self.arrow()
            self.expect(")")
            return inner
        for head in _ARROW_HEADS:
            if self.text.startswith(head, self.i):
                self.i += len(head)
                args = [self.top_formula()]
                for _ in range(_ARITY[head] - 1):
                    self.expect(",")
                    args.append(self.top_formula())
                self.expect("]")
                return _build(head, args)
        found = self.text[self.i:self.i + 1] or "end of input"
        self.fail(f"expected an arrow term, found {found!r}")


def _build(head, args):
    if head == "cm[":
        return Cm(*args)
    if head in ("b>[", "b<[", "c["):
        from . import constructions

        return {"b>[": constructions.b_fw, "b<[": constructions.b_bw, "c[": constructions.c_comm}[head](*args)
    return {"1[": Id, "dl>[": DeltaFw, "dl<[": DeltaBw, "sg>[": SigmaFw, "sg<[": SigmaBw}[head](args[0])


def parse_formula(text):
    p = _Parser(text)
    out = p.top_formula()
    p.end()
    return out


def parse_arrow(text):
    p = _Parser(text)
    out = p.arrow()
    p.end()
    return out
