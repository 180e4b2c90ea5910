import pytest

from braidscope.config_space import enumerate_complex, homology_h1
from braidscope.errors import InvalidInput, NotConnected
from braidscope.graph import Graph, make_cycle, make_path, make_star, make_sun, subdivide_for
from braidscope.presentation import (PresHom, Presentation, abelian_invariants, apply_hom,
                                     cyclic_reduce, free_group, free_reduce,
                                     fundamental_presentation, inverse, spanning_tree,
                                     square_walk)
from braidscope.tietze import certify_free


def test_free_reduce():
    a, b = 1, 2
    assert free_reduce((a, -a)) == ()
    assert free_reduce((a, b, -b, a)) == (a, a)
    assert free_reduce(()) == ()
    assert free_reduce((a, b, -b, -a, b)) == (b,)


def test_cyclic_reduce_and_inverse():
    assert cyclic_reduce((1, 2, 3, -1)) == (2, 3)
    assert cyclic_reduce((1, -1)) == ()
    assert inverse((1, -2, 3)) == (-3, 2, -1)


def test_relators_are_normalized():
    p = Presentation(("a", "b"), ((1, 2, -2, 1), (2, 1, -2)))
    assert p.relators == ((1, 1), (1,))


def test_bad_presentations():
    with pytest.raises(InvalidInput):
        Presentation(("a",), ((2,),))
    with pytest.raises(InvalidInput):
        Presentation(("a", "a"))
    with pytest.raises(InvalidInput):
        Presentation(("a b",))


def test_text_format_round_trip():
    p = Presentation(("a", "b", "e[0-1.3]"), ((1, 2, -1, -2), (3, 3), ()))
    text = p.to_text()
    assert text.splitlines()[0] == "gens: a,b,e[0-1.3]"
    assert "a b a^-1 b^-1" in text
    assert Presentation.from_text(text) == p
    assert Presentation.from_text("gens: x\nx^3\n").relators == ((1, 1, 1),)
    assert Presentation.from_dict(p.to_dict()) == p
    assert Presentation.from_text("gens:\n") == Presentation(())


def test_word_parse_errors():
    with pytest.raises(InvalidInput):
        Presentation.from_text("gens: a\nb\n")
    with pytest.raises(InvalidInput):
        Presentation.from_text("a\n")


@pytest.mark.parametrize("p, expected", [
    (Presentation.from_text("gens: a\na^2"), (0, [2])),
    (Presentation.from_text("gens: a,b\na b a^-1 b^-1"), (2, [])),
    (free_group("a", "b", "c"), (3, [])),
    (Presentation.from_text("gens: a,b\na^2 b^4\na^2 b^-2"), (0, [2, 6])),
])
def test_abelian_invariants(p, expected):
    assert abelian_invariants(p) == expected


def test_apply_hom():
    p = free_group("a", "b", "c")
    assert apply_hom(PresHom.identity(p), (1, -2, 3)) == (1, -2, 3)
    h = PresHom.by_names(free_group("a"), free_group("b", "c"), {"a": "b c"})
    assert apply_hom(h, (-1,)) == (-2, -1)
    src = free_group("gamma_1_1_2")
    h = PresHom.by_names(src, free_group("beta_1_1_3"), {"gamma_1_1_2": "beta_1_1_3"})
    assert h((1, 1)) == (1, 1)
    with pytest.raises(InvalidInput):
        apply_hom(h, (2,))


def test_preshom_abelian_check():
    z2 = Presentation.from_text("gens: a\na^2")
    z = free_group("b")
    with pytest.raises(InvalidInput):
        PresHom.by_names(z2, z, {"a": "b"})
    # a -> b^3 into Z/6 kills a^2? 6 | 6, yes
    z6 = Presentation.from_text("gens: b\nb^6")
    PresHom.by_names(z2, z6, {"a": "b^3"})
    with pytest.raises(InvalidInput):
        PresHom.by_names(z2, z6, {"a": "b^2"})
    with pytest.raises(InvalidInput):
        PresHom(z, z, ((1,), (1,)))


@pytest.mark.parametrize("g, n, tree", [
    (make_path(5), 2, 9),
    (make_cycle(6), 2, 14),
    (subdivide_for(make_sun(1), 2), 2, 9),
])
def test_spanning_tree_sizes(g, n, tree):
    cx = enumerate_complex(g, n)
    t = spanning_tree(cx)
    assert len(t) == tree == len(cx.zero_cells) - 1


def test_spanning_tree_disconnected():
    cx = enumerate_complex(Graph(4, ((0, 1), (2, 3))), 2)
    with pytest.raises(NotConnected):
        spanning_tree(cx)
    with pytest.raises(NotConnected):
        fundamental_presentation(cx)


@pytest.mark.parametrize("g, n, gens, rels, rank", [
    (make_path(5), 2, 3, 3, 0),
    (make_cycle(6), 2, 10, 9, 1),
    (subdivide_for(make_star(3), 2), 2, None, None, 1),
])
def test_fundamental_presentation_examples(g, n, gens, rels, rank):
    cx = enumerate_complex(g, n)
    p = fundamental_presentation(cx)
    if gens is not None:
        assert (p.rank, len(p.relators)) == (gens, rels)
    assert p.rank == len(cx.one_cells) - len(cx.zero_cells) + 1
    assert len(p.relators) == len(cx.two_cells)
    assert certify_free(p) == rank


def test_sun1_abelianization():
    cx = enumerate_complex(subdivide_for(make_sun(1), 2), 2)
    assert abelian_invariants(fundamental_presentation(cx)) == (2, [])


def test_square_walk_is_closed_and_canonical():
    cx = enumerate_complex(subdivide_for(make_sun(2), 2), 2)
    for s in range(len(cx.two_cells)):
        steps = square_walk(cx, s)
        corners = []
        for e, sign in steps:
            t, h = cx.one_cells[e][1:]
            corners.append(t if sign > 0 else h)
        assert corners[0] == min(corners)
        first_two = [e for e, _ in steps if corners[0] in cx.one_cells[e][1:]]
        assert steps[0][0] == min(first_two)
        # consecutive steps share corners, closing up after four
        for (e1, s1), (e2, s2) in zip(steps, steps[1:] + steps[:1]):
            end = cx.one_cells[e1][2] if s1 > 0 else cx.one_cells[e1][1]
            start = cx.one_cells[e2][1] if s2 > 0 else cx.one_cells[e2][2]
            assert end == start


@pytest.mark.parametrize("g, n", [
    (subdivide_for(make_sun(2), 2), 2),
    (subdivide_for(make_star(3), 3), 3),
    (make_cycle(5), 2),
])
def test_betti_matches_chain_complex(g, n):
    cx = enumerate_complex(g, n)
    assert abelian_invariants(fundamental_presentation(cx))[0] == homology_h1(cx)[0]


def test_base_point_does_not_change_rank():
    g = subdivide_for(make_sun(1), 3)
    for base in ([0, 1, 2], [3, 5, 6], [1, 4, 6]):
        cx = enumerate_complex(g, 3, base=base)
        assert certify_free(fundamental_presentation(cx)) == 3
