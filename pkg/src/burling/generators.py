"""Deterministic constructors for the graph families used in tests and
the command line: chandeliers, wheels, thetas, flowers, subdivisions of
K4, and a small catalogue of named instances.
"""

from __future__ import annotations

from .errors import ParseError, ValidationError
from .graphs import Graph, OrientedGraph
from .structure import in_tree_leaves, is_in_tree
from .transforms import ExpandStep, expand_arcs
from .trees import BurlingTree, Derivation, check_derivation_valid


def _in_tree_from_arcs(arcs) -> OrientedGraph:
    arcs = [tuple(a) for a in arcs]
    vertices = sorted({x for a in arcs for x in a})
    try:
        g = OrientedGraph(vertices, arcs)
    except ParseError as exc:
        raise ValidationError(f"arcs do not describe an in-tree: {exc}") from exc
    if not is_in_tree(g):
        raise ValidationError("arcs do not describe an in-tree")
    return g


def gen_chandelier(arcs, pivot: str = "p") -> OrientedGraph:
    """In-tree given as (child, parent) arcs, plus a pivot receiving an
    arc from every leaf."""
    tree = _in_tree_from_arcs(arcs)
    if pivot in tree.vertex_set:
        raise ValidationError(f"pivot label {pivot!r} collides with the tree")
    leaves = in_tree_leaves(tree)
    if len(leaves) < 2:
        raise ValidationError("an in-tree with at least 2 leaves is required")
    return OrientedGraph(
        sorted(tree.vertex_set | {pivot}),
        sorted(tree.arcs | {(leaf, pivot) for leaf in leaves}),
    )


def gen_luxury_chandelier(arcs, pivot: str = "p") -> Graph:
    """Underlying graph of a chandelier whose every leaf hangs from a
    tree vertex of degree two; the sink must have at least two
    children so the pivot serves every tree leaf."""
    tree = _in_tree_from_arcs(arcs)
    oriented = gen_chandelier(arcs, pivot)
    (sink,) = [v for v in tree.vertices if not tree.out_neighbors(v)]
    if len(tree.in_neighbors(sink)) < 2:
        raise ValidationError("the sink of the in-tree must have >= 2 children")
    for leaf in in_tree_leaves(tree):
        (support,) = tree.out_neighbors(leaf)
        degree = len(tree.in_neighbors(support)) + (0 if support == sink else 1)
        if degree != 2:
            raise ValidationError(
                f"leaf {leaf}: its tree neighbor {support} must have tree degree 2"
            )
    return oriented.underlying()


def gen_wheel(rim_length: int, spokes) -> Graph:
    """Cycle of the given length plus a hub adjacent to the rim at the
    given positions; positions must be >= 3 and pairwise non-adjacent
    on the rim so the result stays triangle-free."""
    if rim_length < 4:
        raise ValidationError("rim length must be >= 4")
    spokes = sorted(set(int(s) for s in spokes))
    if len(spokes) < 3:
        raise ValidationError("a wheel needs >= 3 spokes")
    if any(s < 0 or s >= rim_length for s in spokes):
        raise ValidationError("spoke positions must index the rim")
    for a in spokes:
        for b in spokes:
            if a < b and (b - a == 1 or (a == 0 and b == rim_length - 1)):
                raise ValidationError(
                    f"spokes {a} and {b} are adjacent on the rim (triangle)"
                )
    rim = [f"c{i}" for i in range(rim_length)]
    edges = [(rim[i], rim[(i + 1) % rim_length]) for i in range(rim_length)]
    edges += [("h", rim[s]) for s in spokes]
    return Graph(rim + ["h"], edges)


def gen_theta(l1: int, l2: int, l3: int) -> Graph:
    """Two apexes joined by three internally disjoint paths of the given
    lengths (each >= 2, keeping the graph simple and triangle-free)."""
    lengths = (l1, l2, l3)
    if any(l < 2 for l in lengths):
        raise ValidationError("every path length must be >= 2")
    vertices = ["u", "v"]
    edges = []
    for name, length in zip("abc", lengths):
        prev = "u"
        for i in range(length - 1):
            m = f"{name}{i + 1}"
            vertices.append(m)
            edges.append((prev, m))
            prev = m
        edges.append((prev, "v"))
    return Graph(vertices, edges)


def gen_flower(core_length: int, petal_lengths) -> Graph:
    """Core hole plus one petal hole per core edge, each sharing exactly
    that edge with the core."""
    if core_length < 4:
        raise ValidationError("core length must be >= 4")
    petal_lengths = tuple(int(p) for p in petal_lengths)
    if len(petal_lengths) != core_length:
        raise ValidationError("need exactly one petal length per core edge")
    if any(p < 4 for p in petal_lengths):
        raise ValidationError("every petal length must be >= 4")
    core = [f"c{i}" for i in range(core_length)]
    vertices = list(core)
    edges = [(core[i], core[(i + 1) % core_length]) for i in range(core_length)]
    for i, length in enumerate(petal_lengths):
        u, w = core[i], core[(i + 1) % core_length]
        prev = u
        for k in range(length - 2):
            m = f"p{i}_{k}"
            vertices.append(m)
            edges.append((prev, m))
            prev = m
        edges.append((prev, w))
    return Graph(vertices, edges)


K4_PAIRS = (("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d"))


def gen_k4_subdivision(lengths) -> Graph:
    """Subdivision of K4 with the six path lengths given in the order
    ab, ac, ad, bc, bd, cd (each >= 1)."""
    lengths = tuple(int(l) for l in lengths)
    if len(lengths) != 6:
        raise ValidationError("need six path lengths (ab, ac, ad, bc, bd, cd)")
    if any(l < 1 for l in lengths):
        raise ValidationError("every path length must be >= 1")
    vertices = ["a", "b", "c", "d"]
    edges = []
    for (u, w), length in zip(K4_PAIRS, lengths):
        prev = u
        for i in range(length - 1):
            m = f"{u}{w}{i}"
            vertices.append(m)
            edges.append((prev, m))
            prev = m
        edges.append((prev, w))
    return Graph(vertices, edges)


def _square_c4() -> Derivation:
    tree = BurlingTree(
        "r",
        {"u": "r", "v": "r", "x": "r", "y": "x"},
        {"r": "x", "x": "y"},
        {"u": ("x", "y"), "v": ("x", "y")},
    )
    return check_derivation_valid(Derivation(tree, frozenset("uvxy")))


def _k33() -> Derivation:
    tree = BurlingTree(
        "r",
        {"u1": "r", "u2": "r", "u3": "r", "x1": "r", "x2": "x1", "x3": "x2"},
        {"r": "x1", "x1": "x2", "x2": "x3"},
        {u: ("x1", "x2", "x3") for u in ("u1", "u2", "u3")},
    )
    return check_derivation_valid(
        Derivation(tree, frozenset({"u1", "u2", "u3", "x1", "x2", "x3"}))
    )


def _c6() -> Derivation:
    # lengthening one bottom arc of the square turns the 4-cycle into a
    # 6-cycle; documented as a reconstruction in docs/figures.md
    return expand_arcs(_square_c4(), [ExpandStep("u", "y", "bottom", 3)])


def _nobility4() -> OrientedGraph:
    arcs = (
        [("a", t) for t in "123"]
        + [("b", t) for t in "234"]
        + [("c", t) for t in "345"]
    )
    return OrientedGraph(["a", "b", "c", "1", "2", "3", "4", "5"], arcs)


def _feedback() -> Graph:
    vertices = ["x", "y", "u1", "u2", "u3", "v1", "v2", "v3"]
    edges = [("x", "y")]
    for i in "123":
        edges += [("y", f"u{i}"), (f"u{i}", f"v{i}"), (f"v{i}", "x")]
    return Graph(vertices, edges)


FIGURES = {
    "square-c4": _square_c4,
    "k33": _k33,
    "c6": _c6,
    "nobility4": _nobility4,
    "wheel6": lambda: gen_wheel(6, {0, 2, 4}),
    "flower12": lambda: gen_flower(4, (4, 4, 4, 4)),
    "k4-all-subdivided": lambda: gen_k4_subdivision((2, 2, 2, 2, 2, 2)),
    "k4-one-edge": lambda: gen_k4_subdivision((1, 2, 2, 2, 2, 2)),
    "k4-matching": lambda: gen_k4_subdivision((1, 2, 2, 2, 2, 1)),
    "feedback": _feedback,
}


def gen_figure(name: str):
    """Named instance from the documented catalogue (docs/figures.md)."""
    try:
        builder = FIGURES[name]
    except KeyError:
        known = ", ".join(sorted(FIGURES))
        raise ValidationError(f"unknown figure {name!r}; known: {known}")
    return builder()
