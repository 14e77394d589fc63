"""Permutation semantics of arrow terms.

Every term denotes a bijection on the letter occurrences of its source.
``Permutation.map[k-1]`` is the target position of the letter at source
position ``k`` (positions are 1-based), so a term is read top to bottom with
the source drawn above the target.  Unit objects carry no strands; the
delta/sigma arrows denote identities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import SizeMismatch
from .syntax import (
    Cm,
    Comp,
    DeltaBw,
    DeltaFw,
    Id,
    SigmaBw,
    SigmaFw,
    Tensor,
    letter_count,
)


@dataclass(frozen=True)
class Permutation:
    map: tuple

    def __post_init__(self):
        m = tuple(self.map)
        object.__setattr__(self, "map", m)
        if sorted(m) != list(range(1, len(m) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {list(m)}")

    @property
    def size(self):
        return len(self.map)

    def __len__(self):
        return len(self.map)

    def __call__(self, k):
        return self.map[k - 1]

    def __mul__(self, other):
        return compose_perm(self, other)

    def inverse(self):
        inv = [0] * len(self.map)
        for k, v in enumerate(self.map, 1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self):
        return all(v == k for k, v in enumerate(self.map, 1))

    def moved(self):
        return [k for k, v in enumerate(self.map, 1) if v != k]

    def to_json(self):
        return json.dumps(list(self.map), separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        return cls(tuple(json.loads(text)))

    def __str__(self):
        return self.to_json()


def identity_perm(n):
    return Permutation(tuple(range(1, n + 1)))


def compose_perm(p, q):
    """``p . q``: apply q first, then p."""
    if p.size != q.size:
        raise SizeMismatch(f"cannot compose permutations of sizes {p.size} and {q.size}")
    pm = p.map
    return Permutation(tuple(pm[v - 1] for v in q.map))


def tensor_perm(p, q):
    """Juxtapose ``q`` to the right of ``p``."""
    shift = p.size
    return Permutation(p.map + tuple(v + shift for v in q.map))


def block_interchange(a, b, c, d):
    """Image of the medial map on blocks of sizes a, b, c, d: ABCD goes to ACBD."""
    out = list(range(1, a + 1))
    out += [k + c for k in range(a + 1, a + b + 1)]
    out += [k - b for k in range(a + b + 1, a + b + c + 1)]
    out += list(range(a + b + c + 1, a + b + c + d + 1))
    return Permutation(tuple(out))


def eval_perm(f):
    """The permutation denoted by the arrow term ``f``."""
    memo = {}

    def ev(t):
        key = id(t)
        hit = memo.get(key)
        if hit is not None:
            return hit[1]
        if isinstance(t, (Id, DeltaFw, DeltaBw, SigmaFw, SigmaBw)):
            out = identity_perm(letter_count(t.source))
        elif isinstance(t, Cm):
            out = block_interchange(*(letter_count(x) for x in (t.a, t.b, t.c, t.d)))
        elif isinstance(t, Tensor):
            out = tensor_perm(ev(t.f), ev(t.g))
        elif isinstance(t, Comp):
            out = compose_perm(ev(t.g), ev(t.f))
        else:
            raise TypeError(f"not an arrow term: {t!r}")
        # keep t alive so id() stays unique for the duration of the call
        memo[key] = (t, out)
        return out

    return ev(f)
