"""Evaluation of terms into split preorders, split equivalences, relations.

PF and EF terms evaluate to `SplitRelation` values (split preorders;
for EF always split equivalences), reading each picture line as a
double link.  RB terms evaluate to `BinRel`, reading lines as single
downward pairs.  Composition is closure-then-deletion on the split
side and plain relational composition on the RB side.

Equality of two same-type terms is decided by comparing values; for
these three models that coincides with derivability from the
presentations.
"""
from __future__ import annotations

from splitrel.relations import (
    BinRel,
    Node,
    SplitRelation,
    compose_rel,
    compose_split,
    identity_split,
    src,
    strict_part,
    tgt,
)
from splitrel.terms import (
    ArrowTerm,
    Category,
    Comp,
    Counit,
    CounitK,
    DeltaK,
    H,
    HBar,
    Id,
    NablaK,
    Pad,
    Swap,
    TermTypeError,
    Unit,
    UnitK,
    category_of,
    forced_category,
    type_of,
)

SemValue = SplitRelation | BinRel


def resolve_category(
    *terms: ArrowTerm, category: Category | None = None
) -> Category:
    """Join the categories forced by `terms` with an optional override.

    Neutral terms adopt the joined category; conflicting forced
    categories (or a forced category contradicting `category`) raise.
    """
    joined: Category | None = None
    for t in terms:
        forced = forced_category(t)
        if forced is None:
            continue
        if joined is None:
            joined = forced
        elif joined is not forced:
            raise TermTypeError(
                f"category mismatch: {joined.value} vs {forced.value}"
            )
    if category is not None and joined is not None and joined is not category:
        raise TermTypeError(
            f"term is {joined.value} but {category.value} was requested"
        )
    resolved = category or joined or Category.PF
    for t in terms:
        category_of(t, default=resolved)
    return resolved


def _strand_pairs(i: int, j: int) -> set:
    # full double link between source position i and target position j
    return {(src(i), tgt(j)), (tgt(j), src(i))}


def _split_value(n: int, m: int, extra: set) -> SplitRelation:
    loops = {(src(i), src(i)) for i in range(n)}
    loops |= {(tgt(j), tgt(j)) for j in range(m)}
    return SplitRelation(n, m, loops | extra)


def _pad_split(value: SplitRelation, left: int, right: int) -> SplitRelation:
    n, m = value.n, value.m
    pairs = {
        (Node(x.tag, x.pos + left), Node(y.tag, y.pos + left))
        for x, y in value.pairs
    }
    for k in range(left):
        pairs |= _strand_pairs(k, k)
    for k in range(right):
        pairs |= _strand_pairs(left + n + k, left + m + k)
    return _split_value(left + n + right, left + m + right, pairs)


def _eval_split(t: ArrowTerm) -> SplitRelation:
    match t:
        case Id(n):
            return identity_split(n)
        case Unit():
            return _split_value(0, 1, set())
        case Counit():
            return _split_value(1, 0, set())
        case Swap():
            return _split_value(2, 2, _strand_pairs(0, 1) | _strand_pairs(1, 0))
        case H():
            cross = {
                (src(0), src(1)),
                (src(0), tgt(1)),
                (tgt(0), src(1)),
                (tgt(0), tgt(1)),
            }
            return _split_value(
                2, 2, _strand_pairs(0, 0) | _strand_pairs(1, 1) | cross
            )
        case HBar():
            nodes = [src(0), src(1), tgt(0), tgt(1)]
            return SplitRelation(2, 2, {(x, y) for x in nodes for y in nodes})
        case Pad(left, body, right):
            return _pad_split(_eval_split(body), left, right)
        case Comp(after, before):
            return compose_split(_eval_split(before), _eval_split(after))
        case _:
            raise TermTypeError(f"not a split-preorder generator: {t!r}")


def _pad_rel(value: BinRel, left: int, right: int) -> BinRel:
    pairs = {(i + left, j + left) for i, j in value.pairs}
    pairs |= {(k, k) for k in range(left)}
    pairs |= {(left + value.n + k, left + value.m + k) for k in range(right)}
    return BinRel(left + value.n + right, left + value.m + right, pairs)


def _eval_rel(t: ArrowTerm) -> BinRel:
    match t:
        case Id(n):
            return BinRel(n, n, {(i, i) for i in range(n)})
        case NablaK(k):
            pairs = {(i, i) for i in range(k)} | {(k + i, i) for i in range(k)}
            return BinRel(2 * k, k, pairs)
        case DeltaK(k):
            pairs = {(i, i) for i in range(k)} | {(i, k + i) for i in range(k)}
            return BinRel(k, 2 * k, pairs)
        case UnitK(k):
            return BinRel(0, k, set())
        case CounitK(k):
            return BinRel(k, 0, set())
        case Pad(left, body, right):
            return _pad_rel(_eval_rel(body), left, right)
        case Comp(after, before):
            return compose_rel(_eval_rel(before), _eval_rel(after))
        case _:
            raise TermTypeError(f"not a relational generator: {t!r}")


def eval_term(t: ArrowTerm, category: Category | None = None) -> SemValue:
    """The value of a term in its model.

    Neutral terms evaluate in `category` (default PF); the PF and EF
    readings of shared generators agree, so the value is the same.
    """
    resolved = resolve_category(t, category=category)
    type_of(t)
    if resolved is Category.RB:
        return _eval_rel(t)
    return _eval_split(t)


def equal(
    f: ArrowTerm, g: ArrowTerm, category: Category | None = None
) -> bool:
    """Decide derivable equality of two parallel same-category terms."""
    resolved = resolve_category(f, g, category=category)
    f_type = type_of(f)
    g_type = type_of(g)
    if f_type != g_type:
        raise TermTypeError(f"type mismatch: {f_type} vs {g_type}")
    return eval_term(f, resolved) == eval_term(g, resolved)


def eval_strict(t: ArrowTerm, category: Category | None = None) -> SplitRelation:
    """The strict (loop-free) part of a PF or EF value."""
    resolved = resolve_category(t, category=category)
    if resolved is Category.RB:
        raise TermTypeError("relational values have no strict part")
    return strict_part(_eval_split(t))


def eval_strict_unordered(
    t: ArrowTerm, category: Category | None = None
) -> frozenset[frozenset[Node]]:
    """EF view of the strict part: unordered pairs of distinct nodes."""
    strict = eval_strict(t, category=category or Category.EF)
    return frozenset(frozenset((x, y)) for x, y in strict.pairs)
