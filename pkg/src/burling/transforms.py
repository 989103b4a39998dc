"""Rewrites of derivations that normalize, subdivide or contract arcs.

All rewrites return fresh Derivation values; inputs are never mutated.
Shadow vertices created here are labeled ``_s<n>`` with a counter that
skips labels already present, so user labels should not start with '_'.

``normalize`` rewrites a derivation so that the kept vertices are exactly
the non-root, non-last-born tree vertices, without changing the derived
graph or the order of kept vertices along branches (hence arc classes).
The subdivision rewrites assume that shape and normalize first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .graphs import check_token
from .trees import (
    ArcClass,
    BurlingTree,
    Derivation,
    check_derivation_valid,
    classify_arcs,
    derive,
)


class _Work:
    """Mutable scratch copy of a derivation."""

    def __init__(self, d: Derivation):
        t = d.tree
        self.root = t.root
        self.parent = dict(t.parent)
        self.last_born = dict(t.last_born)
        self.choose = {v: list(ws) for v, ws in t.choose.items()}
        self.kept = set(d.kept)
        self._counter = 0

    def vertices(self):
        return set(self.parent) | {self.root}

    def children(self, v):
        return sorted(c for c, p in self.parent.items() if p == v)

    def fresh(self) -> str:
        verts = self.vertices()
        while True:
            self._counter += 1
            label = f"_s{self._counter}"
            if label not in verts:
                return label

    def splice_above(self, anchors, new, exclude=()):
        """Insert `new` immediately before an anchor in every choose list.

        A branch passes through at most one anchor (anchors are siblings),
        so each list is touched at most once.
        """
        for owner, ws in self.choose.items():
            if owner in exclude:
                continue
            for anchor in anchors:
                if anchor in ws:
                    ws.insert(ws.index(anchor), new)
                    break

    def freeze(self) -> Derivation:
        choose = {v: tuple(ws) for v, ws in self.choose.items() if ws}
        tree = BurlingTree(self.root, self.parent, self.last_born, choose)
        return check_derivation_valid(Derivation(tree, frozenset(self.kept)))


def _is_last_born(w: _Work, v) -> bool:
    p = w.parent.get(v)
    return p is not None and w.last_born.get(p) == v


def normalize(d: Derivation) -> Derivation:
    """Equivalent derivation whose kept set is exactly the non-root,
    non-last-born vertices of the tree."""
    check_derivation_valid(d)
    w = _Work(d)

    if w.root in w.kept:
        new_root = w.fresh()
        w.parent[w.root] = new_root
        w.last_born[new_root] = w.root
        w.root = new_root

    while True:
        bad = sorted(v for v in w.kept if _is_last_born(w, v))
        if not bad:
            break
        v = bad[0]
        u = w.parent[v]
        mid = w.fresh()
        w.splice_above([v], mid)
        w.parent[v] = mid
        w.parent[mid] = u
        w.last_born[u] = mid
        leaf = w.fresh()
        w.parent[leaf] = mid
        w.last_born[mid] = leaf

    while True:
        bad = sorted(
            v
            for v in w.vertices()
            if v not in w.kept and v != w.root and not _is_last_born(w, v)
        )
        if not bad:
            break
        v = bad[0]
        w.choose.pop(v, None)  # v turns shadow last-born (or goes away)
        if not w.children(v):
            # v can only sit at the end of a choose list; drop it everywhere
            del w.parent[v]
            for ws in w.choose.values():
                if v in ws:
                    assert ws[-1] == v
                    ws.pop()
        else:
            # re-hang the last born of v's parent below v; v becomes the
            # last born, and branches through the old one now pass v first
            u = w.parent[v]
            lb = w.last_born[u]
            w.splice_above([lb], v)
            w.parent[lb] = v
            w.last_born[u] = v
            w.last_born[v] = lb

    return w.freeze()


def _require_arc_class(d, u, v, allowed, op):
    cls = classify_arcs(d).get((u, v))
    if cls is None:
        raise ValidationError(f"{op}: {u!r} {v!r} is not an arc of the derived graph")
    if cls not in allowed:
        names = "/".join(a.value for a in allowed)
        raise ValidationError(f"{op}: arc {u} {v} is a {cls.value} arc, needs {names}")


def _require_fresh(work: _Work, label):
    check_token(label)
    if label.startswith("_"):
        raise ValidationError(f"label {label!r} is reserved for shadow vertices")
    if label in work.vertices():
        raise ValidationError(f"label {label!r} already names a tree vertex")


def subdivide_bottom(d: Derivation, u, v, new_label) -> Derivation:
    """Replace a bottom arc uv by arcs u -> w -> v, w a new kept vertex.

    Afterwards uw is a bottom arc, wv is both top and bottom, and every
    other arc keeps its class.
    """
    d = normalize(d)
    _require_arc_class(
        d, u, v, (ArcClass.BOTTOM, ArcClass.TOP_AND_BOTTOM), "subdivide_bottom"
    )
    work = _Work(d)
    _require_fresh(work, new_label)

    x = work.parent[v]
    old_lb = work.last_born[x]
    cu = work.choose[u]
    # v is u's deepest kept out-neighbor, so everything after it is shadow
    cu[:] = cu[: cu.index(v) + 1]
    cu[-1:] = [new_label]

    # a new shadow level above v and the old last born; v's own choose
    # still starts at old_lb, which stays the last born it sees
    mid = work.fresh()
    work.splice_above([old_lb, v], mid, exclude={u, v})
    work.parent[mid] = x
    work.last_born[x] = mid
    work.parent[old_lb] = mid
    work.last_born[mid] = old_lb
    work.parent[v] = mid

    work.parent[new_label] = x
    work.kept.add(new_label)
    work.choose[new_label] = [mid, v]
    return work.freeze()


def top_subdivide(d: Derivation, u, v, new_label) -> Derivation:
    """Replace a top arc uv, u a source, by arcs w -> u and w -> v.

    Afterwards wv is a top arc and wu a bottom arc; every other arc keeps
    its class.
    """
    d = normalize(d)
    _require_arc_class(d, u, v, (ArcClass.TOP, ArcClass.TOP_AND_BOTTOM), "top_subdivide")
    g = derive(d)
    if g.in_neighbors(u):
        raise ValidationError(f"top_subdivide: {u!r} is not a source")
    work = _Work(d)
    _require_fresh(work, new_label)

    x = work.parent[u]
    if work.children(v):
        y = work.last_born[v]
    else:
        y = work.fresh()
        work.parent[y] = v
        work.last_born[v] = y
    cu = work.choose[u]
    pos = cu.index(v)
    if pos == len(cu) - 1:
        cu.append(y)
    after = cu[pos + 1]  # the child of v on u's branch; kept unless it is y
    path_to_v = cu[: pos + 1]
    tail = cu[pos + 1 :]

    # a new shadow level below v; `after` is re-hung under it, so its own
    # choose still starts at y and must not be touched
    hook = work.fresh()
    work.splice_above([y, after], hook, exclude={u, after})
    work.parent[hook] = v
    work.parent[y] = hook
    work.last_born[hook] = y
    if after != y:
        work.parent[after] = hook
    work.last_born[v] = hook

    work.parent[u] = v
    work.choose[u] = [hook] + tail

    work.parent[new_label] = x
    work.kept.add(new_label)
    work.choose[new_label] = path_to_v + [u]
    return work.freeze()


def contract(d: Derivation, u, v) -> Derivation:
    """Contract an arc uv where v is u's only kept out-neighbor and u is
    v's only kept in-neighbor: v becomes a shadow vertex and u inherits
    v's out-neighborhood."""
    check_derivation_valid(d)
    g = derive(d)
    if not g.has_arc(u, v):
        raise ValidationError(f"contract: {u!r} {v!r} is not an arc")
    if g.out_neighbors(u) != {v}:
        raise ValidationError(f"contract: {u!r} has kept out-neighbors besides {v!r}")
    if g.in_neighbors(v) != {u}:
        raise ValidationError(f"contract: {v!r} has kept in-neighbors besides {u!r}")
    work = _Work(d)
    cu = work.choose[u]
    prefix = cu[: cu.index(v)]
    work.choose[u] = prefix + list(d.tree.choose_of(v))
    if not work.choose[u]:
        del work.choose[u]
    work.kept.discard(v)
    return work.freeze()


@dataclass(frozen=True)
class ExpandStep:
    u: str
    v: str
    mode: str  # 'bottom' or 'top'
    length: int


def _fresh_kept_labels(existing, count):
    out = []
    n = 0
    existing = set(existing)
    while len(out) < count:
        n += 1
        label = f"w{n}"
        if label not in existing:
            out.append(label)
            existing.add(label)
    return out


def expand_arcs(d: Derivation, plan) -> Derivation:
    """Apply a list of ExpandStep rewrites.

    mode 'bottom' replaces a bottom arc uv by a directed path from u to v
    of the given length; mode 'top' replaces a top arc uv (u a source) by
    an arc w -> v plus a directed path from w to u of the given length.
    """
    for i, step in enumerate(plan):
        if step.mode not in ("bottom", "top"):
            raise ValidationError(f"step {i}: unknown mode {step.mode!r}")
        if step.length < 1:
            raise ValidationError(f"step {i}: length must be >= 1")
        try:
            d = _expand_one(d, step)
        except ValidationError as exc:
            raise ValidationError(f"step {i}: {exc}") from exc
    return d


def _expand_one(d: Derivation, step: ExpandStep) -> Derivation:
    if step.mode == "bottom":
        # u -> w_{L-1} -> ... -> w_1 -> v, subdividing the u-side arc each time
        labels = _fresh_kept_labels(d.tree.vertices, step.length - 1)
        tail = step.v
        for label in labels:
            d = subdivide_bottom(d, step.u, tail, label)
            tail = label
        return d
    # top: w -> v plus a path w -> ... -> u, grown by subdividing w -> u
    labels = _fresh_kept_labels(d.tree.vertices, step.length)
    first, rest = labels[0], labels[1:]
    d = top_subdivide(d, step.u, step.v, first)
    tail = step.u
    for label in rest:
        d = subdivide_bottom(d, first, tail, label)
        tail = label
    return d
