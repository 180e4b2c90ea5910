from math import comb

import pytest

from braidscope.errors import InvalidInput, InvalidParameter
from braidscope.presentation import PresHom, Presentation, abelian_invariants, free_group
from braidscope.tietze import certify_free, tietze_simplify
from braidscope.van_kampen import (Component, GvkInput, gvk_pushout, sun1_symbolic,
                                   two_arcs_example, wedge_example)


def test_wedge_of_circles():
    p = gvk_pushout(wedge_example())
    assert p.generator_names == ("a", "b") and p.relators == ()
    assert certify_free(p) == 2


def test_two_arcs_make_a_circle():
    p = gvk_pushout(two_arcs_example())
    assert p.generator_names == ("t_1",) and p.relators == ()
    assert certify_free(p) == 1


def test_amalgamation_over_a_circle():
    # two solid tori glued along a longitude-ish circle: <a, b | a^2 = b^3>
    a, b, c = free_group("a"), free_group("b"), free_group("c")
    comp = Component(c, PresHom.by_names(c, a, {"c": "a^2"}), PresHom.by_names(c, b, {"c": "b^3"}))
    p = gvk_pushout(GvkInput(a, b, (comp,)))
    assert p.to_text() == "gens: a,b\na a b^-1 b^-1 b^-1\n"
    assert abelian_invariants(p) == (1, [])
    assert certify_free(p) is None


def test_relator_shape_for_extra_component():
    a, b, c = free_group("x"), free_group("y"), free_group("z")
    c0 = Component(Presentation(()), PresHom(Presentation(()), a, ()), PresHom(Presentation(()), b, ()))
    c1 = Component(c, PresHom.by_names(c, a, {"z": "x"}), PresHom.by_names(c, b, {"z": "y"}))
    p = gvk_pushout(GvkInput(a, b, (c0, c1)))
    assert p.generator_names == ("x", "y", "t_1")
    assert p.to_text().splitlines()[1] == "x t_1 y^-1 t_1^-1"


def test_structural_counts():
    a = Presentation.from_text("gens: a1,a2\na1^2")
    b = Presentation.from_text("gens: b1\nb1^5")
    c0, c1, c2 = free_group("u"), free_group("v", "w"), Presentation(())
    comps = (
        Component(c0, PresHom.by_names(c0, a, {"u": "a2"}), PresHom.by_names(c0, b, {"u": "b1"})),
        Component(c1, PresHom.by_names(c1, a, {"v": "a1", "w": "a2"}), PresHom.by_names(c1, b, {})),
        Component(c2, PresHom(c2, a, ()), PresHom(c2, b, ())),
    )
    p = gvk_pushout(GvkInput(a, b, comps))
    assert p.rank == a.rank + b.rank + 2
    assert len(p.relators) == len(a.relators) + len(b.relators) + 1 + 2 + 0


def test_single_trivial_component_is_free_product():
    a = Presentation.from_text("gens: a\na^3")
    b = Presentation.from_text("gens: b\nb^2")
    c = Presentation(())
    p = gvk_pushout(GvkInput(a, b, (Component(c, PresHom(c, a, ()), PresHom(c, b, ())),)))
    assert p.relators == ((1, 1, 1), (2, 2))


def test_input_validation():
    a, b, c = free_group("a"), free_group("b"), free_group("c")
    with pytest.raises(InvalidInput):
        GvkInput(a, b, ())
    wrong = Component(c, PresHom.by_names(c, b, {"c": "b"}), PresHom.by_names(c, b, {"c": "b"}))
    with pytest.raises(InvalidInput):
        GvkInput(a, b, (wrong,))
    other = free_group("d")
    mismatched = Component(c, PresHom.by_names(other, a, {"d": "a"}), PresHom.by_names(c, b, {}))
    with pytest.raises(InvalidInput):
        GvkInput(a, b, (mismatched,))
    clash = Component(Presentation(()), PresHom(Presentation(()), a, ()), PresHom(Presentation(()), a, ()))
    with pytest.raises(InvalidInput):
        gvk_pushout(GvkInput(a, a, (clash,)))


def test_json_round_trip():
    inp = wedge_example()
    assert GvkInput.from_json(inp.to_json()) == inp
    with pytest.raises(InvalidInput):
        GvkInput.from_dict({"A": {"generators": []}})


def test_sun1_symbolic_small_cases():
    p = sun1_symbolic(2)
    assert p.generator_names == ("beta_1_1_2", "t") and p.relators == ()
    p = sun1_symbolic(3)
    names = p.generator_names
    assert sum(n.startswith("alpha") for n in names) == comb(2, 2) == 1
    assert sum(n.startswith("beta") for n in names) == comb(3, 2) == 3
    assert names[-1] == "t" and len(p.relators) == 2
    assert certify_free(p) == 3
    with pytest.raises(InvalidParameter):
        sun1_symbolic(1)


def test_sun1_symbolic_relators_match_the_elimination_scheme():
    p = sun1_symbolic(4)
    text = p.to_text().splitlines()[1:]
    assert "alpha_1_1_3 beta_1_1_4^-1" in text
    assert "alpha_1_1_3 t beta_1_2_3^-1 t^-1" in text


@pytest.mark.parametrize("n", range(2, 9))
def test_sun1_symbolic_rank_and_basis(n):
    p = sun1_symbolic(n)
    assert abelian_invariants(p) == (n, [])
    r = tietze_simplify(p)
    assert r.free_rank == n
    assert set(r.presentation.generator_names) == {f"beta_{i}_{n - i}_2" for i in range(1, n)} | {"t"}
    assert len(p.relators) == 2 * comb(n - 1, 2)
