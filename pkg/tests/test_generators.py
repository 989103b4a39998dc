import pytest

from burling.errors import ValidationError
from burling.generators import (
    FIGURES,
    K4_PAIRS,
    gen_chandelier,
    gen_figure,
    gen_flower,
    gen_k4_subdivision,
    gen_luxury_chandelier,
    gen_theta,
    gen_wheel,
)
from burling.graphs import Graph, OrientedGraph, serialize_graph, underlying
from burling.trees import Derivation, derive, serialize_derivation


def test_chandelier_shape():
    g = gen_chandelier([("a", "c"), ("b", "c")])
    assert g.vertex_set == frozenset("abcp")
    assert g.arcs == {("a", "c"), ("b", "c"), ("a", "p"), ("b", "p")}
    q = gen_chandelier([("a", "c"), ("b", "c")], pivot="q")
    assert "q" in q.vertex_set


def test_chandelier_errors():
    with pytest.raises(ValidationError, match="in-tree"):
        gen_chandelier([("a", "b"), ("b", "a")])
    with pytest.raises(ValidationError, match="in-tree"):
        gen_chandelier([("a", "b"), ("c", "d")])
    with pytest.raises(ValidationError, match="collides"):
        gen_chandelier([("a", "c"), ("b", "c")], pivot="a")
    with pytest.raises(ValidationError, match="2 leaves"):
        gen_chandelier([("a", "b"), ("b", "c")])


def test_luxury_chandelier_shape():
    g = gen_luxury_chandelier([("a1", "a2"), ("a2", "c"), ("b1", "b2"), ("b2", "c")])
    assert isinstance(g, Graph) and not isinstance(g, OrientedGraph)
    assert g.vertex_set == frozenset({"a1", "a2", "b1", "b2", "c", "p"})
    assert g.degree("p") == 2


def test_luxury_chandelier_errors():
    with pytest.raises(ValidationError, match=">= 2 children"):
        gen_luxury_chandelier([("a", "b"), ("d", "b"), ("b", "c")])
    with pytest.raises(ValidationError, match="tree degree 2"):
        gen_luxury_chandelier([("a", "b"), ("c", "b"), ("b", "d"), ("e", "d")])


def test_wheel_shape():
    g = gen_wheel(6, {0, 2, 4})
    assert g.vertex_set == frozenset({f"c{i}" for i in range(6)} | {"h"})
    assert len(g.edges) == 9
    assert g.neighbors("h") == frozenset({"c0", "c2", "c4"})
    assert gen_wheel(6, [0, 2, 4, 4]) == g


def test_wheel_errors():
    with pytest.raises(ValidationError, match="rim length"):
        gen_wheel(3, {0, 1, 2})
    with pytest.raises(ValidationError, match=">= 3 spokes"):
        gen_wheel(6, {0, 3})
    with pytest.raises(ValidationError, match="adjacent"):
        gen_wheel(6, {0, 1, 3})
    with pytest.raises(ValidationError, match="adjacent"):
        gen_wheel(6, {0, 2, 5})
    with pytest.raises(ValidationError, match="index the rim"):
        gen_wheel(6, {0, 2, 6})


def test_theta_shape():
    g = gen_theta(3, 3, 3)
    assert len(g.vertices) == 8 and len(g.edges) == 9
    assert g.degree("u") == 3 and g.degree("v") == 3
    small = gen_theta(2, 2, 2)
    assert len(small.vertices) == 5 and len(small.edges) == 6
    with pytest.raises(ValidationError, match=">= 2"):
        gen_theta(1, 3, 3)


def test_flower_shape():
    g = gen_flower(4, (4, 4, 4, 4))
    assert len(g.vertices) == 12
    assert len(g.edges) == 4 + 4 * 3
    with pytest.raises(ValidationError, match="core length"):
        gen_flower(3, (4, 4, 4))
    with pytest.raises(ValidationError, match="one petal length per core edge"):
        gen_flower(4, (4, 4, 4))
    with pytest.raises(ValidationError, match="petal length must be >= 4"):
        gen_flower(4, (4, 4, 4, 3))


def test_k4_subdivision_shape():
    k4 = gen_k4_subdivision((1,) * 6)
    assert len(k4.vertices) == 4 and len(k4.edges) == 6
    big = gen_k4_subdivision((2,) * 6)
    assert len(big.vertices) == 10 and len(big.edges) == 12
    assert K4_PAIRS[0] == ("a", "b")
    with pytest.raises(ValidationError, match="six path lengths"):
        gen_k4_subdivision((2, 2, 2, 2, 2))
    with pytest.raises(ValidationError, match=">= 1"):
        gen_k4_subdivision((0, 2, 2, 2, 2, 2))


def test_figure_catalogue_names():
    assert set(FIGURES) == {
        "square-c4",
        "k33",
        "c6",
        "nobility4",
        "wheel6",
        "flower12",
        "k4-all-subdivided",
        "k4-one-edge",
        "k4-matching",
        "feedback",
    }
    with pytest.raises(ValidationError, match="known:"):
        gen_figure("bogus")


def test_figures_deterministic():
    for name in FIGURES:
        first, second = gen_figure(name), gen_figure(name)
        if isinstance(first, Derivation):
            assert serialize_derivation(first) == serialize_derivation(second)
        else:
            assert serialize_graph(first) == serialize_graph(second)


def test_square_figure():
    d = gen_figure("square-c4")
    assert derive(d).arcs == {("u", "x"), ("u", "y"), ("v", "x"), ("v", "y")}


def test_c6_figure():
    d = gen_figure("c6")
    g = derive(d)
    assert g.arcs == {
        ("u", "w2"),
        ("u", "x"),
        ("v", "x"),
        ("v", "y"),
        ("w1", "y"),
        ("w2", "w1"),
    }
    shadowless = underlying(g)
    assert all(shadowless.degree(v) == 2 for v in shadowless.vertices)


def test_nobility4_figure():
    g = gen_figure("nobility4")
    assert len(g.vertices) == 8
    assert g.out_neighbors("a") == frozenset("123")
    assert g.out_neighbors("b") == frozenset("234")
    assert g.out_neighbors("c") == frozenset("345")
    assert max(len(g.out_neighbors(v)) for v in g.vertices) == 3


def test_feedback_figure():
    g = gen_figure("feedback")
    assert len(g.vertices) == 8 and len(g.edges) == 10
    assert g.neighbors("y") == frozenset({"x", "u1", "u2", "u3"})
    assert g.neighbors("x") == frozenset({"y", "v1", "v2", "v3"})
