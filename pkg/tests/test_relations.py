"""Core split-relation tests, checked against independent oracles.

The oracles here deliberately share no code with the implementation:
chain closure by repeated set-comprehension joins, composition through
an explicitly tagged three-layer universe, and a boolean matrix product
for plain relations.
"""
from __future__ import annotations

import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitrel.relations import (
    SRC,
    TGT,
    BinRel,
    Node,
    SplitRelation,
    bar_union,
    compose_rel,
    compose_split,
    domain_of,
    embed_function,
    embed_relation,
    identity_split,
    restrict_away,
    semi_embed_M,
    src,
    strict_part,
    tgt,
    transitive_closure,
)

# --------------------------------------------------------------------
# oracles


def closure_oracle(pairs):
    """Chain closure by repeated pairwise joins until fixpoint."""
    cur = frozenset(pairs)
    while True:
        nxt = cur | frozenset(
            (x, w) for (x, y) in cur for (z, w) in cur if y == z
        )
        if nxt == cur:
            return cur
        cur = nxt


def compose_oracle(P: SplitRelation, Q: SplitRelation) -> SplitRelation:
    """Composition via an explicit three-layer universe and chain closure."""
    assert P.m == Q.n

    def from_p(x: Node):
        return ("a", x.pos) if x.tag == SRC else ("b", x.pos)

    def from_q(x: Node):
        return ("b", x.pos) if x.tag == SRC else ("c", x.pos)

    union = frozenset((from_p(x), from_p(y)) for (x, y) in P.pairs) | frozenset(
        (from_q(x), from_q(y)) for (x, y) in Q.pairs
    )
    closed = closure_oracle(union)

    def back(v):
        layer, i = v
        return src(i) if layer == "a" else tgt(i)

    kept = frozenset(
        (back(x), back(y))
        for (x, y) in closed
        if x[0] != "b" and y[0] != "b"
    )
    return SplitRelation(P.n, Q.m, kept)


def matrix_compose_oracle(R: BinRel, S: BinRel) -> BinRel:
    """Boolean matrix product."""
    assert R.m == S.n
    a = [[False] * R.m for _ in range(R.n)]
    for i, j in R.pairs:
        a[i][j] = True
    b = [[False] * S.m for _ in range(S.n)]
    for i, j in S.pairs:
        b[i][j] = True
    out = frozenset(
        (i, k)
        for i in range(R.n)
        for k in range(S.m)
        if any(a[i][j] and b[j][k] for j in range(R.m))
    )
    return BinRel(R.n, S.m, out)


# --------------------------------------------------------------------
# generators


def all_nodes(n: int, m: int) -> list[Node]:
    return [src(i) for i in range(n)] + [tgt(j) for j in range(m)]


def loops(n: int, m: int):
    return frozenset((x, x) for x in all_nodes(n, m))


def random_relation(rng: random.Random, n: int, m: int, density=0.3) -> SplitRelation:
    nodes = all_nodes(n, m)
    pairs = frozenset(
        (x, y) for x in nodes for y in nodes if rng.random() < density
    )
    return SplitRelation(n, m, pairs)


def random_preorder(rng: random.Random, n: int, m: int, density=0.2) -> SplitRelation:
    base = random_relation(rng, n, m, density)
    return SplitRelation(n, m, closure_oracle(base.pairs | loops(n, m)))


def random_equivalence(rng: random.Random, n: int, m: int, density=0.2) -> SplitRelation:
    base = random_relation(rng, n, m, density)
    sym = base.pairs | frozenset((y, x) for (x, y) in base.pairs)
    return SplitRelation(n, m, closure_oracle(sym | loops(n, m)))


@st.composite
def split_relations(draw, max_size=3):
    n = draw(st.integers(0, max_size))
    m = draw(st.integers(0, max_size))
    nodes = all_nodes(n, m)
    if not nodes:
        return SplitRelation(n, m, frozenset())
    pair = st.tuples(st.sampled_from(nodes), st.sampled_from(nodes))
    return SplitRelation(n, m, draw(st.frozensets(pair)))


@st.composite
def split_preorders(draw, max_size=3):
    r = draw(split_relations(max_size))
    return SplitRelation(r.n, r.m, closure_oracle(r.pairs | loops(r.n, r.m)))


# --------------------------------------------------------------------
# domain, closure, union, restriction


def test_domain_of_covers_both_components():
    r = SplitRelation(1, 2, {(src(0), tgt(1))})
    assert domain_of(r) == {src(0), tgt(1)}


def test_domain_of_empty():
    assert domain_of(SplitRelation(2, 2, frozenset())) == frozenset()


def test_domain_of_full_square_is_the_square_base():
    x = {src(0), tgt(0)}
    r = SplitRelation(1, 1, {(a, b) for a in x for b in x})
    assert domain_of(r) == x


def test_transitive_closure_fixpoint_on_transitive_input():
    rng = random.Random(7)
    for _ in range(50):
        p = random_preorder(rng, 2, 2)
        assert transitive_closure(p) == p


def test_transitive_closure_adds_single_chain_step():
    base = loops(2, 1) | {(src(0), src(1)), (src(1), tgt(0))}
    closed = transitive_closure(SplitRelation(2, 1, base))
    assert closed.pairs == base | {(src(0), tgt(0))}


def test_transitive_closure_matches_chain_oracle():
    rng = random.Random(11)
    for _ in range(200):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        r = random_relation(rng, n, m)
        reflexive = SplitRelation(n, m, r.pairs | loops(n, m))
        assert transitive_closure(reflexive).pairs == closure_oracle(
            reflexive.pairs
        )


def test_transitive_closure_laws():
    # containment, idempotence, monotonicity
    rng = random.Random(13)
    for _ in range(100):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        p = random_relation(rng, n, m)
        q = SplitRelation(n, m, p.pairs | random_relation(rng, n, m).pairs)
        tp = transitive_closure(p)
        assert p.pairs <= tp.pairs
        assert transitive_closure(tp).pairs <= tp.pairs
        assert tp.pairs <= transitive_closure(q).pairs


def test_bar_union_self_is_closure():
    rng = random.Random(17)
    for _ in range(50):
        p = random_preorder(rng, 2, 2)
        assert bar_union(p, p) == transitive_closure(p)


def test_bar_union_absorbs_inner_closure():
    rng = random.Random(19)
    for _ in range(100):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        p = random_relation(rng, n, m)
        q = random_relation(rng, n, m)
        assert bar_union(p, transitive_closure(q)) == bar_union(p, q)


def test_bar_union_associative():
    rng = random.Random(23)
    for _ in range(100):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        p, q, s = (random_relation(rng, n, m) for _ in range(3))
        assert bar_union(p, bar_union(q, s)) == bar_union(bar_union(p, q), s)


def test_restrict_away_nothing_is_identity():
    rng = random.Random(29)
    r = random_relation(rng, 3, 2)
    assert restrict_away(r, frozenset()) == r


def test_restrict_away_drops_touching_pairs():
    r = SplitRelation(1, 2, {(src(0), tgt(1)), (tgt(1), tgt(1))})
    assert restrict_away(r, {tgt(1)}).pairs == frozenset()


def test_restrict_away_nested_equals_union():
    rng = random.Random(31)
    for _ in range(100):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        r = random_relation(rng, n, m)
        nodes = all_nodes(n, m)
        x = frozenset(v for v in nodes if rng.random() < 0.4)
        y = frozenset(v for v in nodes if rng.random() < 0.4)
        assert restrict_away(restrict_away(r, x), y) == restrict_away(r, x | y)


def test_restriction_lemma_on_closed_left_part():
    # if P is closed and Q avoids X then restricting commutes with closing
    rng = random.Random(37)
    for _ in range(200):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        p = SplitRelation(n, m, closure_oracle(random_relation(rng, n, m).pairs))
        nodes = all_nodes(n, m)
        x = frozenset(v for v in nodes if rng.random() < 0.4)
        q = restrict_away(random_relation(rng, n, m), x)
        union = SplitRelation(n, m, p.pairs | q.pairs)
        lhs = restrict_away(transitive_closure(union), x)
        rhs = transitive_closure(restrict_away(union, x))
        assert lhs == rhs


def test_restriction_distributes_over_plain_union():
    # if R2 avoids X then R1^{-X} ∪ R2 = (R1 ∪ R2)^{-X}
    rng = random.Random(41)
    for _ in range(200):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        r1 = random_relation(rng, n, m)
        nodes = all_nodes(n, m)
        x = frozenset(v for v in nodes if rng.random() < 0.4)
        r2 = restrict_away(random_relation(rng, n, m), x)
        lhs = restrict_away(r1, x).pairs | r2.pairs
        rhs = restrict_away(SplitRelation(n, m, r1.pairs | r2.pairs), x).pairs
        assert lhs == rhs


# --------------------------------------------------------------------
# composition


def test_compose_matches_three_layer_oracle():
    rng = random.Random(43)
    for _ in range(200):
        a, b, c = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        p = random_preorder(rng, a, b)
        q = random_preorder(rng, b, c)
        assert compose_split(p, q) == compose_oracle(p, q)


def test_compose_example_shape_2_3_2():
    rng = random.Random(47)
    for _ in range(50):
        p = random_preorder(rng, 2, 3)
        q = random_preorder(rng, 3, 2)
        assert compose_split(p, q) == compose_oracle(p, q)


def test_compose_identity_laws():
    rng = random.Random(53)
    for _ in range(50):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        p = random_preorder(rng, n, m)
        assert compose_split(identity_split(n), p) == p
        assert compose_split(p, identity_split(m)) == p


def test_compose_size_mismatch_raises():
    with pytest.raises(ValueError):
        compose_split(identity_split(2), identity_split(3))


@settings(max_examples=60, deadline=None)
@given(split_preorders(2), st.data())
def test_compose_associative(p, data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    q = random_preorder(rng, p.m, rng.randint(0, 2))
    s = random_preorder(rng, q.m, rng.randint(0, 2))
    lhs = compose_split(compose_split(p, q), s)
    rhs = compose_split(p, compose_split(q, s))
    assert lhs == rhs


def test_compose_preserves_preorder_and_equivalence():
    rng = random.Random(59)
    for _ in range(100):
        a, b, c = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        p = random_preorder(rng, a, b)
        q = random_preorder(rng, b, c)
        r = compose_split(p, q)
        assert r.is_preorder()
        e1 = random_equivalence(rng, a, b)
        e2 = random_equivalence(rng, b, c)
        assert compose_split(e1, e2).is_equivalence()


def test_identity_split_values():
    assert identity_split(0) == SplitRelation(0, 0, frozenset())
    assert identity_split(1).pairs == frozenset(
        {
            (src(0), src(0)),
            (tgt(0), tgt(0)),
            (src(0), tgt(0)),
            (tgt(0), src(0)),
        }
    )
    i2 = identity_split(2)
    assert compose_split(i2, i2) == i2


# --------------------------------------------------------------------
# embeddings


def test_embed_relation_worked_example():
    r = BinRel(3, 3, {(0, 0), (0, 1), (1, 1), (1, 2)})
    e = embed_relation(r)
    assert strict_part(e).pairs == frozenset(
        {
            (src(0), tgt(0)),
            (src(0), tgt(1)),
            (src(1), tgt(1)),
            (src(1), tgt(2)),
        }
    )


def test_embed_relation_empty_gives_loops_only():
    e = embed_relation(BinRel(2, 1, frozenset()))
    assert e.pairs == loops(2, 1)


def test_embed_relation_preserves_composition():
    rng = random.Random(61)
    for _ in range(200):
        a, b, c = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        r = BinRel(
            a, b, frozenset((i, j) for i in range(a) for j in range(b) if rng.random() < 0.4)
        )
        s = BinRel(
            b, c, frozenset((i, j) for i in range(b) for j in range(c) if rng.random() < 0.4)
        )
        assert embed_relation(compose_rel(r, s)) == compose_split(
            embed_relation(r), embed_relation(s)
        )


def test_embed_relation_is_only_a_semi_functor():
    for n in range(1, 5):
        ident = BinRel(n, n, frozenset((i, i) for i in range(n)))
        e = embed_relation(ident)
        assert e != identity_split(n)
        assert compose_split(e, e) == e


def test_embed_function_identity_hits_identity():
    for n in range(0, 4):
        f = BinRel(n, n, frozenset((i, i) for i in range(n)))
        assert embed_function(f) == identity_split(n)


def test_embed_function_constant_merges_sources_with_value():
    f = BinRel(2, 1, {(0, 0), (1, 0)})
    e = embed_function(f)
    cls = {src(0), src(1), tgt(0)}
    assert e.pairs == frozenset((a, b) for a in cls for b in cls)


def test_embed_function_preserves_composition_exhaustively():
    size = 2
    functions = [
        BinRel(size, size, frozenset(enumerate(img)))
        for img in itertools.product(range(size), repeat=size)
    ]
    for f in functions:
        for g in functions:
            assert embed_function(compose_rel(f, g)) == compose_split(
                embed_function(f), embed_function(g)
            )


def test_embed_function_rejects_non_functions():
    with pytest.raises(ValueError):
        embed_function(BinRel(2, 2, {(0, 0), (0, 1), (1, 0)}))
    with pytest.raises(ValueError):
        embed_function(BinRel(2, 2, {(0, 0)}))


def test_compose_rel_matches_matrix_oracle():
    rng = random.Random(67)
    for _ in range(200):
        a, b, c = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        r = BinRel(
            a, b, frozenset((i, j) for i in range(a) for j in range(b) if rng.random() < 0.4)
        )
        s = BinRel(
            b, c, frozenset((i, j) for i in range(b) for j in range(c) if rng.random() < 0.4)
        )
        assert compose_rel(r, s) == matrix_compose_oracle(r, s)


def test_compose_rel_small_cases():
    ident = BinRel(2, 2, {(0, 0), (1, 1)})
    r = BinRel(2, 2, {(0, 1)})
    s = BinRel(2, 2, {(1, 0)})
    assert compose_rel(r, ident) == r
    assert compose_rel(r, s) == BinRel(2, 2, {(0, 0)})


def test_compose_rel_size_mismatch_raises():
    with pytest.raises(ValueError):
        compose_rel(BinRel(1, 2, frozenset()), BinRel(3, 1, frozenset()))


# --------------------------------------------------------------------
# strict part and the down-strand embedding


def test_strict_part_of_identity():
    assert strict_part(identity_split(2)).pairs == frozenset(
        {
            (src(0), tgt(0)),
            (tgt(0), src(0)),
            (src(1), tgt(1)),
            (tgt(1), src(1)),
        }
    )


def test_strict_part_of_loops_only_is_empty():
    assert strict_part(embed_relation(BinRel(2, 2, frozenset()))).pairs == frozenset()


def test_strict_part_round_trips_with_loops():
    rng = random.Random(71)
    for _ in range(100):
        p = random_preorder(rng, 2, 2)
        s = strict_part(p)
        assert SplitRelation(p.n, p.m, s.pairs | loops(p.n, p.m)) == p


def test_strict_part_strictly_transitive():
    rng = random.Random(73)
    for _ in range(100):
        p = random_preorder(rng, 3, 2)
        s = strict_part(p).pairs
        for (x, y) in s:
            for (y2, z) in s:
                if y == y2 and x != z:
                    assert (x, z) in s


def test_semi_embed_adds_fresh_down_strand_in_front():
    e = semi_embed_M(embed_relation(BinRel(1, 1, {(0, 0)})))
    assert e.n == 2 and e.m == 2
    assert strict_part(e).pairs == frozenset(
        {(src(0), tgt(0)), (src(1), tgt(1))}
    )


def test_semi_embed_image_of_identity_is_idempotent_not_identity():
    down = semi_embed_M(embed_relation(BinRel(0, 0, frozenset())))
    assert down.n == 1 and down.m == 1
    assert strict_part(down).pairs == {(src(0), tgt(0))}
    assert down != identity_split(1)
    assert compose_split(down, down) == down


def test_semi_embed_rejects_values_outside_the_relation_image():
    with pytest.raises(ValueError):
        semi_embed_M(identity_split(1))  # has an upward pair
    with pytest.raises(ValueError):
        semi_embed_M(SplitRelation(1, 1, {(src(0), tgt(0))}))  # no loops


def test_semi_embed_commutes_with_composition():
    rng = random.Random(79)
    for _ in range(100):
        a, b, c = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
        r = BinRel(
            a, b, frozenset((i, j) for i in range(a) for j in range(b) if rng.random() < 0.4)
        )
        s = BinRel(
            b, c, frozenset((i, j) for i in range(b) for j in range(c) if rng.random() < 0.4)
        )
        lhs = semi_embed_M(embed_relation(compose_rel(r, s)))
        rhs = compose_split(
            semi_embed_M(embed_relation(r)), semi_embed_M(embed_relation(s))
        )
        assert lhs == rhs


# --------------------------------------------------------------------
# representation details


def test_pairs_are_coerced_to_node_tuples():
    r = SplitRelation(1, 1, {(("s", 0), ("t", 0))})
    ((x, y),) = r.pairs
    assert x.tag == SRC and y.tag == TGT


def test_out_of_bounds_nodes_rejected():
    with pytest.raises(ValueError):
        SplitRelation(1, 1, {(src(1), tgt(0))})
    with pytest.raises(ValueError):
        BinRel(1, 1, {(0, 1)})


@given(split_relations())
def test_split_relation_json_round_trip(r):
    assert SplitRelation.from_json(r.to_json()) == r


def test_split_relation_json_exact_form():
    r = embed_relation(BinRel(1, 2, {(0, 1)}))
    assert r.to_json() == (
        '{"n":1,"m":2,"pairs":'
        '[[["s",0],["s",0]],[["s",0],["t",1]],'
        '[["t",0],["t",0]],[["t",1],["t",1]]]}'
    )


def test_binrel_json_exact_form_and_round_trip():
    r = BinRel(2, 2, {(1, 0), (0, 0)})
    assert r.to_json() == '{"n":2,"m":2,"pairs":[[0,0],[1,0]]}'
    assert BinRel.from_json(r.to_json()) == r


def test_json_is_valid_and_sorted():
    rng = random.Random(83)
    for _ in range(50):
        p = random_preorder(rng, 3, 3)
        obj = json.loads(p.to_json())
        assert obj["pairs"] == sorted(obj["pairs"])
