"""Burling trees and the graphs they derive.

A Burling tree is a rooted tree T with two extra pieces of data:

* ``last_born``: for every internal vertex, one distinguished child.
* ``choose``: for every vertex v, a branch of T (a possibly empty downward
  path whose consecutive entries are parent and child).  The branch of a
  non-root, non-last-born v must start at the last born of v's parent.
  Roots and last-borns choose nothing.

The fully derived graph has all tree vertices and an arc u -> v whenever
v is in choose(u).  A derivation additionally names the kept vertices; the
derived graph is the induced subgraph on them.  Tree vertices outside the
kept set are called shadow vertices.

Arc classes: an arc uv of a derived graph is a top arc when v is the kept
out-neighbor of u nearest the root, a bottom arc when it is the one
furthest from the root, both when u has a single kept out-neighbor, and a
middle arc otherwise.

Tree file format (one derivation per document)::

    root r
    edges
    r u
    r x
    last_born
    r x
    choose
    u: x y
    kept
    u
    x

Field order is fixed.  ``choose`` lines keep branch order (top to bottom);
every other list is sorted.  Vertices with an empty choose are omitted.
'#' comment lines are allowed anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import ParseError, ValidationError
from .graphs import Graph, OrientedGraph, check_token


class ArcClass(enum.Enum):
    TOP = "top"
    BOTTOM = "bottom"
    TOP_AND_BOTTOM = "top_and_bottom"
    MIDDLE = "middle"


@dataclass(frozen=True)
class BurlingTree:
    root: str
    parent: dict = field(default_factory=dict)  # vertex -> its parent
    last_born: dict = field(default_factory=dict)  # internal vertex -> child
    choose: dict = field(default_factory=dict)  # vertex -> tuple of branch vertices

    def __post_init__(self):
        object.__setattr__(self, "parent", dict(self.parent))
        object.__setattr__(self, "last_born", dict(self.last_born))
        choose = {v: tuple(ws) for v, ws in self.choose.items() if ws}
        object.__setattr__(self, "choose", choose)

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.parent) | {self.root}

    def children(self, v) -> list:
        return sorted(c for c, p in self.parent.items() if p == v)

    def choose_of(self, v) -> tuple:
        return self.choose.get(v, ())

    def is_last_born(self, v) -> bool:
        p = self.parent.get(v)
        return p is not None and self.last_born.get(p) == v

    def ancestors(self, v) -> list:
        """Strict ancestors of v, nearest first."""
        out = []
        while v != self.root:
            v = self.parent[v]
            out.append(v)
        return out

    def is_ancestor(self, a, v) -> bool:
        """True when a is an ancestor of v (strictly or a == v)."""
        while True:
            if a == v:
                return True
            if v == self.root:
                return False
            v = self.parent[v]

    def depth(self, v) -> int:
        return len(self.ancestors(v))

    def __eq__(self, other):
        return (
            isinstance(other, BurlingTree)
            and self.root == other.root
            and self.parent == other.parent
            and self.last_born == other.last_born
            and self.choose == other.choose
        )

    def __hash__(self):
        return hash(
            (
                self.root,
                frozenset(self.parent.items()),
                frozenset(self.last_born.items()),
                frozenset(self.choose.items()),
            )
        )


@dataclass(frozen=True)
class Derivation:
    tree: BurlingTree
    kept: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "kept", frozenset(self.kept))


def validate_tree(t: BurlingTree) -> list:
    """All invariant violations, as human-readable strings.  Empty when valid."""
    problems = []
    check_token(t.root)
    if t.root in t.parent:
        problems.append(f"root {t.root!r} has a parent")
    verts = t.vertices
    for v, p in t.parent.items():
        check_token(v)
        if p not in verts:
            problems.append(f"parent of {v!r} is unknown vertex {p!r}")
    # every vertex must reach the root without a cycle
    for v in sorted(verts):
        seen = set()
        w = v
        while w != t.root and w in t.parent:
            if w in seen:
                problems.append(f"parent cycle through {w!r}")
                break
            seen.add(w)
            w = t.parent[w]
        else:
            if w != t.root:
                problems.append(f"{v!r} does not reach the root")
    if problems:
        return problems  # ancestry is broken; later checks assume a tree

    children = {v: [] for v in verts}
    for v, p in t.parent.items():
        children[p].append(v)
    for v in sorted(verts):
        lb = t.last_born.get(v)
        if children[v]:
            if lb is None:
                problems.append(f"internal vertex {v!r} has no last born")
            elif lb not in children[v]:
                problems.append(f"last born {lb!r} is not a child of {v!r}")
        elif lb is not None:
            problems.append(f"leaf {v!r} has a last born")
    for v in sorted(t.last_born):
        if v not in verts:
            problems.append(f"last_born entry for unknown vertex {v!r}")

    for v in sorted(t.choose):
        ws = t.choose_of(v)
        if v not in verts:
            problems.append(f"choose entry for unknown vertex {v!r}")
            continue
        if v == t.root:
            problems.append(f"root {v!r} has a non-empty choose")
            continue
        if t.is_last_born(v):
            problems.append(f"last born {v!r} has a non-empty choose")
            continue
        bad = [w for w in ws if w not in verts]
        if bad:
            problems.append(f"choose of {v!r} mentions unknown vertices {bad}")
            continue
        start = t.last_born.get(t.parent[v])
        if ws[0] != start:
            problems.append(
                f"choose of {v!r} starts at {ws[0]!r}, not at the last born "
                f"{start!r} of its parent"
            )
        for a, b in zip(ws, ws[1:]):
            if t.parent.get(b) != a:
                problems.append(f"choose of {v!r} is not a branch at {a!r} {b!r}")
                break
    return problems


def check_tree(t: BurlingTree) -> BurlingTree:
    problems = validate_tree(t)
    if problems:
        raise ValidationError("; ".join(problems))
    return t


def validate_derivation(d: Derivation) -> list:
    problems = validate_tree(d.tree)
    extra = d.kept - d.tree.vertices
    if extra:
        problems.append(f"kept vertices {sorted(extra)} are not in the tree")
    return problems


def check_derivation_valid(d: Derivation) -> Derivation:
    problems = validate_derivation(d)
    if problems:
        raise ValidationError("; ".join(problems))
    return d


def fully_derive(t: BurlingTree) -> OrientedGraph:
    """The fully derived oriented graph: all tree vertices are kept."""
    arcs = [(u, w) for u in sorted(t.vertices) for w in t.choose_of(u)]
    return OrientedGraph(sorted(t.vertices), arcs)


def derive(d: Derivation) -> OrientedGraph:
    return fully_derive(d.tree).induced_subgraph(d.kept)


def classify_arcs(d: Derivation) -> dict:
    """Arc class of every arc of the derived graph.

    The kept out-neighbors of a vertex lie on one branch, so choose order
    (top of the branch first) orders them by distance to the root.
    """
    t = d.tree
    out = {}
    for u in sorted(d.kept):
        kept_out = [w for w in t.choose_of(u) if w in d.kept]
        if not kept_out:
            continue
        if len(kept_out) == 1:
            out[(u, kept_out[0])] = ArcClass.TOP_AND_BOTTOM
            continue
        out[(u, kept_out[0])] = ArcClass.TOP
        out[(u, kept_out[-1])] = ArcClass.BOTTOM
        for w in kept_out[1:-1]:
            out[(u, w)] = ArcClass.MIDDLE
    return out


def check_derivation(g, d: Derivation) -> bool:
    """True when the derivation yields exactly `g`.

    Oriented targets must match arcs and labels; undirected targets are
    compared against the underlying graph of the derivation.
    """
    if validate_derivation(d):
        return False
    got = derive(d)
    if isinstance(g, OrientedGraph):
        return got == g
    return got.underlying() == g


_FIELDS = ("edges", "last_born", "choose", "kept")


def parse_derivation(text: str) -> Derivation:
    root = None
    section = None
    edges = []
    last_born = {}
    choose = {}
    kept = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if root is None:
            if tokens[0] != "root" or len(tokens) != 2:
                raise ParseError("expected 'root <vertex>'", lineno)
            root = tokens[1]
            continue
        if len(tokens) == 1 and tokens[0] in _FIELDS:
            expected = _FIELDS[0 if section is None else _FIELDS.index(section) + 1 :]
            if tokens[0] not in expected:
                raise ParseError(f"section {tokens[0]!r} out of order", lineno)
            section = tokens[0]
            continue
        if section == "edges":
            if len(tokens) != 2:
                raise ParseError("edge lines are 'parent child'", lineno)
            edges.append((tokens[0], tokens[1]))
        elif section == "last_born":
            if len(tokens) != 2:
                raise ParseError("last_born lines are 'parent child'", lineno)
            if tokens[0] in last_born:
                raise ParseError(f"second last born for {tokens[0]!r}", lineno)
            last_born[tokens[0]] = tokens[1]
        elif section == "choose":
            if not tokens[0].endswith(":") or len(tokens) < 2:
                raise ParseError("choose lines are 'v: w1 w2 ...'", lineno)
            v = tokens[0][:-1]
            if not v:
                raise ParseError("choose line with empty vertex", lineno)
            if v in choose:
                raise ParseError(f"second choose line for {v!r}", lineno)
            choose[v] = tuple(tokens[1:])
        elif section == "kept":
            if len(tokens) != 1:
                raise ParseError("kept lines hold one vertex", lineno)
            kept.append(tokens[0])
        else:
            raise ParseError(f"unexpected line {line!r}", lineno)
    if root is None:
        raise ParseError("missing 'root' line")
    parent = {}
    for p, c in edges:
        if c in parent:
            raise ParseError(f"two parents for {c!r}")
        parent[c] = p
    tree = BurlingTree(root, parent, last_born, choose)
    return check_derivation_valid(Derivation(tree, frozenset(kept)))


def serialize_derivation(d: Derivation) -> str:
    t = d.tree
    lines = [f"root {t.root}", "edges"]
    lines += [f"{p} {c}" for c, p in sorted(t.parent.items(), key=lambda cp: (cp[1], cp[0]))]
    lines.append("last_born")
    lines += [f"{p} {c}" for p, c in sorted(t.last_born.items())]
    lines.append("choose")
    for v in sorted(t.choose):
        lines.append(f"{v}: " + " ".join(t.choose_of(v)))
    lines.append("kept")
    lines += sorted(d.kept)
    return "\n".join(lines) + "\n"
