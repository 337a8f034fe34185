"""Exact stability conditions on the A_k quiver category.

Conditions, charges and loops are plain JSON-style values: rationals are
strings "p/q" (ints are accepted), complex charges are [re, im] pairs.
"""

import json as _json

from . import _akstab
from ._akstab import AkstabError, acceptance_seed, free_reduce, is_trivial

__all__ = [
    "AkstabError",
    "acceptance_seed",
    "algebra",
    "axioms",
    "braid_of_loop",
    "condition",
    "cross",
    "ext",
    "free_reduce",
    "generator_loop",
    "hn",
    "homs",
    "is_trivial",
    "monodromy",
    "run_criterion",
    "svg_condition",
    "twist_word",
    "walls",
]


def _dump(value):
    return value if isinstance(value, str) else _json.dumps(value)


def _dims(d):
    return {int(deg): n for deg, n in d.items()}


def condition(k, Z, N=2, windings=None):
    """A standard condition as a dict, ready for the other calls."""
    out = {"k": k, "N": N, "Z": Z}
    if windings is not None:
        out["windings"] = windings
    return out


def algebra(k, N=2):
    return _json.loads(_akstab.algebra(k, N))


def homs(a, b, N=2, k=None):
    """Graded Hom dimensions {degree: dim}.

    a and b are intervals [i, j] / [i, j, m], or expressions in the text
    syntax (then k is required).
    """
    if isinstance(a, str) or isinstance(b, str):
        if k is None:
            raise ValueError("k is required for expression arguments")
        to_text = lambda x: x if isinstance(x, str) else "P({},{})[{}]".format(x[0], x[1], x[2] if len(x) > 2 else 0)
        return _dims(_json.loads(_akstab.expr_homs(k, N, to_text(a), to_text(b))))
    return _dims(_json.loads(_akstab.homs(list(a), list(b), N)))


def ext(k, a, b, N=2):
    return _akstab.ext(k, N, a, b)


def twist_word(k, word, obj, N=2):
    return _akstab.twist_word(k, N, list(word), obj)


def hn(cond, obj, strategy="leftmost", seed=0):
    return _json.loads(_akstab.hn(_dump(cond), obj, strategy, seed))


def axioms(cond, leaves=2):
    return _json.loads(_akstab.axioms(_dump(cond), leaves))


def walls(cond, target):
    return _json.loads(_akstab.walls(_dump(cond), _dump(target)))


def cross(cond, target, pedantic=False):
    return _json.loads(_akstab.cross(_dump(cond), _dump(target), pedantic))


def generator_loop(cond, i, sides=8, half_turns=2):
    return _json.loads(_akstab.generator_loop(_dump(cond), i, sides, half_turns))


def monodromy(cond, vertices):
    return _json.loads(_akstab.monodromy(_dump(cond), _dump(vertices)))


def braid_of_loop(configurations):
    return _akstab.braid_of_loop(_dump(configurations))


def svg_condition(cond):
    return _akstab.svg_condition(_dump(cond))


def run_criterion(criterion, seed=None):
    return _json.loads(_akstab.run_criterion(criterion, acceptance_seed() if seed is None else seed))
