"""Separating contexts witnessing that non-theorems collapse the theory.

For any two terms of the same type whose values differ, a small context
(pre, post) makes the difference visible at a fixed tiny type: composing
either term with the context and evaluating yields two distinct values
of type 1 -> 1 (when the differing pair crosses from source to target)
or 2 -> 0 / 0 -> 2 (when it stays on one side).  Adding the equation
v = w as an axiom therefore forces an equation between those small
values, and from there every parallel pair of arrows collapses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .dsl import print_term
from .relations import SRC
from .semantics import SemValue, eval_term
from .terms import (
    ArrowTerm,
    Category,
    Id,
    TermTypeError,
    compose_chain,
    counit_power,
    pad,
    plus,
    type_of,
    unit_power,
)

__all__ = [
    "SeparationWitness",
    "separate",
    "separate_ef",
    "separate_pf",
    "separate_rb",
]


@dataclass(frozen=True)
class SeparationWitness:
    """A context whose composites with two given terms differ in value.

    `results` holds the values of post . v . pre and post . w . pre, in
    that order; `pivot` is the least semantic pair on which the two
    term values disagree.
    """

    category: Category
    pivot: tuple
    pre: ArrowTerm
    post: ArrowTerm
    results: tuple[SemValue, SemValue]

    @property
    def context(self) -> tuple[ArrowTerm, ArrowTerm]:
        return self.pre, self.post

    def to_json_obj(self) -> dict:
        if self.category is Category.RB:
            pivot = list(self.pivot)
        else:
            pivot = [list(node) for node in self.pivot]
        return {
            "category": self.category.name,
            "pivot": pivot,
            "pre": print_term(self.pre),
            "post": print_term(self.post),
            "results": [value.to_json_obj() for value in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def _values(
    v: ArrowTerm, w: ArrowTerm, category: Category
) -> tuple[SemValue, SemValue]:
    tv, tw = type_of(v), type_of(w)
    if tv != tw:
        raise TermTypeError(
            f"cannot separate terms of different types {tv.src}->{tv.tgt} "
            f"and {tw.src}->{tw.tgt}"
        )
    gv = eval_term(v, category)
    gw = eval_term(w, category)
    if gv == gw:
        raise ValueError("the terms are equal; there is nothing to separate")
    return gv, gw


def _apply(
    pre: ArrowTerm,
    term: ArrowTerm,
    post: ArrowTerm,
    category: Category,
) -> SemValue:
    composite = compose_chain([pre, term, post], type_of(pre).src)
    return eval_term(composite, category)


def _witness(
    category: Category,
    pivot: tuple,
    pre: ArrowTerm,
    post: ArrowTerm,
    v: ArrowTerm,
    w: ArrowTerm,
) -> SeparationWitness:
    results = (_apply(pre, v, post, category), _apply(pre, w, post, category))
    return SeparationWitness(category, pivot, pre, post, results)


def _route_in(i: int, n: int, category: Category) -> ArrowTerm:
    """1 -> n: land on strand i, all other strands fresh."""
    return plus(
        plus(unit_power(i, category), Id(1)),
        unit_power(n - i - 1, category),
    )


def _route_out(j: int, m: int, category: Category) -> ArrowTerm:
    """m -> 1: keep strand j, delete the rest."""
    return plus(
        plus(counit_power(j, category), Id(1)),
        counit_power(m - j - 1, category),
    )


def _route_in_two(a: int, b: int, n: int, category: Category) -> ArrowTerm:
    """2 -> n: land on strands a < b, all other strands fresh."""
    middle = pad(1, unit_power(b - a - 1, category), 1)
    return plus(
        plus(unit_power(a, category), middle),
        unit_power(n - b - 1, category),
    )


def _route_out_two(a: int, b: int, m: int, category: Category) -> ArrowTerm:
    """m -> 2: keep strands a < b, delete the rest."""
    middle = pad(1, counit_power(b - a - 1, category), 1)
    return plus(
        plus(counit_power(a, category), middle),
        counit_power(m - b - 1, category),
    )


def separate_rb(v: ArrowTerm, w: ArrowTerm) -> SeparationWitness:
    """Witness for two relational terms of the same type with Gv != Gw.

    The two results are always the identity relation on 1 and the empty
    relation on 1, in the order induced by which term holds the pivot.
    """
    gv, gw = _values(v, w, Category.RB)
    i, j = min(gv.pairs ^ gw.pairs)
    n, m = type_of(v)
    pre = _route_in(i, n, Category.RB)
    post = _route_out(j, m, Category.RB)
    return _witness(Category.RB, (i, j), pre, post, v, w)


def _separate_split(
    v: ArrowTerm, w: ArrowTerm, category: Category
) -> SeparationWitness:
    gv, gw = _values(v, w, category)
    pivot = min(gv.pairs ^ gw.pairs)
    x, y = pivot
    n, m = type_of(v)
    if x.tag != y.tag:
        i = x.pos if x.tag == SRC else y.pos
        j = y.pos if x.tag == SRC else x.pos
        pre = _route_in(i, n, category)
        post = _route_out(j, m, category)
    elif x.tag == SRC:
        a, b = sorted((x.pos, y.pos))
        pre = _route_in_two(a, b, n, category)
        post = counit_power(m, category)
    else:
        a, b = sorted((x.pos, y.pos))
        pre = unit_power(n, category)
        post = _route_out_two(a, b, m, category)
    return _witness(category, pivot, pre, post, v, w)


def separate_ef(v: ArrowTerm, w: ArrowTerm) -> SeparationWitness:
    """Witness for two equivalence-style terms with different values.

    A source/target pivot gives 1 -> 1 results differing in the cross
    link; a same-side pivot gives 2 -> 0 (or 0 -> 2) results, one of
    which merges the two routed points while the other keeps them
    apart.
    """
    return _separate_split(v, w, Category.EF)


def separate_pf(v: ArrowTerm, w: ArrowTerm) -> SeparationWitness:
    """Witness for two preorder-style terms with different values.

    The pivot pair is ordered, so a cross pivot distinguishes the
    downward from the upward link; the 1 -> 1 results land in the four
    element family (discrete, down only, up only, both).
    """
    return _separate_split(v, w, Category.PF)


def separate(
    v: ArrowTerm, w: ArrowTerm, category: Category
) -> SeparationWitness:
    """Dispatch to the separation construction of the given category."""
    if category is Category.RB:
        return separate_rb(v, w)
    if category is Category.EF:
        return separate_ef(v, w)
    return separate_pf(v, w)
