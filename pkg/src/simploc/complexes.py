"""Flag simplicial complexes stored as graphs.

A flag complex is determined by its 1-skeleton: the simplices are exactly
the cliques of the graph.  Everything here treats a complex as an immutable
undirected simple graph and answers induced-subgraph questions about it:
links, fullness, induced (chordless) cycles, wheels and dwheels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator


class ComplexError(ValueError):
    """Malformed complex data, or a query about a vertex that is not there."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class FlagComplex:
    """Immutable flag complex on integer vertex ids.

    Only the 1-skeleton is stored; flagness is by construction and never
    checked at runtime.  All operations are pure queries, so instances may
    be shared freely.
    """

    __slots__ = ("_adj", "_labels")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int]],
        labels: dict[int, str] | None = None,
    ):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ComplexError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ComplexError(f"edge ({u}, {v}) uses an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[int, frozenset[int]] = {
            v: frozenset(nbrs) for v, nbrs in adj.items()
        }
        self._labels = dict(labels) if labels else None

    # -- basic queries ----------------------------------------------------

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def n_vertices(self) -> int:
        return len(self._adj)

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = {_norm_edge(u, v) for u, nbrs in self._adj.items() for v in nbrs}
        return tuple(sorted(out))

    @property
    def n_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._adj))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        if v not in self._adj:
            raise ComplexError(f"unknown vertex {v}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def label(self, v: int) -> str:
        if self._labels and v in self._labels:
            return self._labels[v]
        return str(v)

    def labels(self) -> dict[int, str]:
        return {v: self.label(v) for v in self._adj}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FlagComplex):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset((v, n) for v, n in self._adj.items()))

    def __repr__(self) -> str:
        return f"FlagComplex({self.n_vertices} vertices, {self.n_edges} edges)"

    # -- derived complexes -------------------------------------------------

    def subcomplex(self, verts: Iterable[int]) -> "FlagComplex":
        """Induced subcomplex on ``verts`` (vertex ids are preserved)."""
        keep = set(verts)
        unknown = keep - set(self._adj)
        if unknown:
            raise ComplexError(f"unknown vertices {sorted(unknown)}")
        edges = [
            (u, v) for u in keep for v in self._adj[u] if v in keep and u < v
        ]
        labels = (
            {v: self._labels[v] for v in keep if v in self._labels}
            if self._labels
            else None
        )
        return FlagComplex(keep, edges, labels)

    def induced_edges(self, verts: Iterable[int]) -> frozenset[tuple[int, int]]:
        keep = set(verts)
        return frozenset(
            _norm_edge(u, v)
            for u in keep
            for v in self._adj.get(u, frozenset())
            if v in keep and u < v
        )


def link_graph(X: FlagComplex, v: int) -> FlagComplex:
    """The link of ``v``: the induced subcomplex on the neighbours of ``v``.

    For flag complexes the link is itself flag and is determined by this
    graph.
    """
    return X.subcomplex(X.neighbors(v))


def is_full(
    X: FlagComplex, verts: Iterable[int], edges: Iterable[tuple[int, int]]
) -> bool:
    """Whether the subcomplex (``verts``, ``edges``) is full in ``X``.

    Flagness reduces fullness to induced-subgraph equality: the subcomplex
    is full iff ``edges`` is exactly the set of edges of ``X`` inside
    ``verts``.
    """
    vset = set(verts)
    eset = set()
    for u, v in edges:
        if u not in vset or v not in vset:
            raise ComplexError(f"edge ({u}, {v}) not inside the vertex set")
        eset.add(_norm_edge(u, v))
    return eset == set(X.induced_edges(vset))


# -- cycles ----------------------------------------------------------------


def canonical_cycle(verts: Iterable[int]) -> tuple[int, ...]:
    """Lexicographically least rotation/reflection of a cyclic vertex list."""
    t = tuple(verts)
    if not t:
        return t
    best = None
    for seq in (t, t[::-1]):
        for i in range(len(seq)):
            cand = seq[i:] + seq[:i]
            if best is None or cand < best:
                best = cand
    return best


def is_cycle(X: FlagComplex, verts: tuple[int, ...]) -> bool:
    """True iff ``verts`` lists a simple cycle of length >= 3 in ``X``."""
    if len(verts) < 3 or len(set(verts)) != len(verts):
        return False
    return all(
        X.has_edge(verts[i], verts[(i + 1) % len(verts)])
        for i in range(len(verts))
    )


def require_cycle(X: FlagComplex, verts: Iterable[int]) -> tuple[int, ...]:
    t = tuple(int(v) for v in verts)
    if not is_cycle(X, t):
        raise ComplexError(f"{t} is not a cycle of the complex")
    return t


def enumerate_induced_cycles(
    X: FlagComplex, jmin: int, jmax: int
) -> list[tuple[int, ...]]:
    """All full (chordless) cycles with length in ``[jmin, jmax]``.

    Each cycle is reported once, in canonical rotation/reflection.  Cycles
    are grown as induced paths from their least vertex; an interior path
    vertex adjacent to the start would create a chord, so extension stops
    at neighbours of the start.
    """
    if not 3 <= jmin <= jmax:
        raise ComplexError("need 3 <= jmin <= jmax")
    out: list[tuple[int, ...]] = []

    def extend(s: int, path: list[int]) -> None:
        tail = path[-1]
        interior = path[1:-1]
        for y in sorted(X.neighbors(tail)):
            if y <= s or y in path:
                continue
            if any(X.has_edge(y, p) for p in interior):
                continue
            if X.has_edge(y, s):
                if len(path) + 1 >= jmin and path[1] < y:
                    out.append(tuple(path) + (y,))
            elif len(path) + 2 <= jmax:
                path.append(y)
                extend(s, path)
                path.pop()

    for s in X:
        for x in sorted(X.neighbors(s)):
            if x > s:
                extend(s, [s, x])
    return sorted(out)


def enumerate_cycles(
    X: FlagComplex, jmin: int, jmax: int
) -> list[tuple[int, ...]]:
    """All simple cycles (chords allowed) with length in ``[jmin, jmax]``."""
    if not 3 <= jmin <= jmax:
        raise ComplexError("need 3 <= jmin <= jmax")
    out: list[tuple[int, ...]] = []

    def extend(s: int, path: list[int]) -> None:
        tail = path[-1]
        for y in sorted(X.neighbors(tail)):
            if y <= s or y in path:
                continue
            if X.has_edge(y, s) and len(path) + 1 >= jmin and path[1] < y:
                out.append(tuple(path) + (y,))
            if len(path) + 2 <= jmax:
                path.append(y)
                extend(s, path)
                path.pop()

    for s in X:
        for x in sorted(X.neighbors(s)):
            if x > s:
                extend(s, [s, x])
    return sorted(out)


# -- wheels ------------------------------------------------------------------


@dataclass(frozen=True)
class WheelWitness:
    """A k-wheel: a cone over its boundary cycle.

    ``is_full`` records whether the induced subgraph on the wheel's vertex
    set is exactly the wheel graph, i.e. whether the boundary cycle is
    chordless in the ambient complex.
    """

    center: int
    boundary: tuple[int, ...]
    is_full: bool

    @property
    def k(self) -> int:
        return len(self.boundary)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.boundary) | {self.center}

    def sort_key(self) -> tuple:
        return (self.k, canonical_cycle(self.boundary), self.center)


def wheel_witness(X: FlagComplex, center: int, boundary: Iterable[int]) -> WheelWitness:
    """Validate and build a wheel witness, computing its fullness flag."""
    cyc = require_cycle(X, boundary)
    if center in cyc:
        raise ComplexError("wheel center lies on its boundary")
    if not all(X.has_edge(center, v) for v in cyc):
        raise ComplexError("wheel center is not adjacent to the whole boundary")
    cycle_edges = {_norm_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
    full = X.induced_edges(cyc) == frozenset(cycle_edges)
    return WheelWitness(center, canonical_cycle(cyc), full)


def enumerate_full_wheels(X: FlagComplex, kmax: int) -> list[WheelWitness]:
    """All full k-wheels with 4 <= k <= kmax.

    A full wheel centered at ``v`` is the same thing as an induced cycle in
    the link of ``v``: the link graph is the induced subgraph on N(v), so
    cycles induced there are induced in the whole complex.
    """
    if kmax < 4:
        raise ComplexError("kmax must be >= 4")
    wheels = []
    for v in X:
        link = link_graph(X, v)
        for cyc in enumerate_induced_cycles(link, 4, kmax):
            wheels.append(WheelWitness(v, cyc, True))
    return sorted(wheels, key=WheelWitness.sort_key)


# -- dwheels -----------------------------------------------------------------


@dataclass(frozen=True)
class DwheelWitness:
    """Two full wheels glued per the dwheel incidence pattern.

    Each wheel's center lies on the other wheel's boundary; the wheels
    share one boundary vertex next to both centers, and on the other side
    either share a second boundary vertex (planar) or carry an edge between
    the two remaining neighbours (nonplanar).  The dwheel boundary is the
    cycle induced on the vertices minus the two centers; its length is
    k+l-4 when planar and k+l-3 when nonplanar.
    """

    wheel1: WheelWitness
    wheel2: WheelWitness
    planar: bool
    boundary: tuple[int, ...]

    def vertex_set(self) -> frozenset[int]:
        return self.wheel1.vertex_set() | self.wheel2.vertex_set()

    def centers(self) -> tuple[int, int]:
        return (self.wheel1.center, self.wheel2.center)

    def sort_key(self) -> tuple:
        return (
            len(self.boundary),
            canonical_cycle(self.boundary),
            sorted(self.centers()),
        )


def _cycle_neighbors(cyc: tuple[int, ...], v: int) -> tuple[int, int]:
    i = cyc.index(v)
    return cyc[i - 1], cyc[(i + 1) % len(cyc)]


def _cycle_arc(
    cyc: tuple[int, ...], start: int, stop: int, avoid: int
) -> list[int]:
    """Walk ``cyc`` from ``start`` to ``stop`` along the side avoiding ``avoid``."""
    n = len(cyc)
    i = cyc.index(start)
    for step in (1, -1):
        arc = [start]
        j = i
        while arc[-1] != stop:
            j = (j + step) % n
            if cyc[j] == avoid:
                break
            arc.append(cyc[j])
        else:
            return arc
    raise ComplexError("no arc avoiding the forbidden vertex")


def enumerate_dwheels(X: FlagComplex, max_boundary: int) -> list[DwheelWitness]:
    """All dwheels with both wheels full and boundary length <= max_boundary.

    Wheels of size beyond ``max_boundary`` cannot participate: the boundary
    length formulas give |bd W| >= k + 4 - 4 = k for the smaller partner
    size 4.
    """
    if max_boundary < 4:
        raise ComplexError("max_boundary must be >= 4")
    wheels = enumerate_full_wheels(X, kmax=max_boundary)
    out: dict[frozenset, DwheelWitness] = {}
    for w1, w2 in combinations(wheels, 2):
        for a, b in ((w1, w2), (w2, w1)):
            dw = _match_dwheel(X, a, b, max_boundary)
            if dw is None:
                continue
            key = frozenset(
                [(a.center, a.boundary), (b.center, b.boundary)]
            )
            out.setdefault(key, dw)
    return sorted(out.values(), key=DwheelWitness.sort_key)


def _match_dwheel(
    X: FlagComplex, w1: WheelWitness, w2: WheelWitness, max_boundary: int
) -> DwheelWitness | None:
    c1, c2 = w1.center, w2.center
    if c1 == c2 or c1 not in w2.boundary or c2 not in w1.boundary:
        return None
    nb1 = _cycle_neighbors(w1.boundary, c2)
    nb2 = _cycle_neighbors(w2.boundary, c1)
    for x in set(nb1) & set(nb2):
        y = nb1[0] if nb1[1] == x else nb1[1]
        z = nb2[0] if nb2[1] == x else nb2[1]
        if y == z:
            planar = True
        elif X.has_edge(y, z):
            planar = False
        else:
            continue
        shared = {c1, c2, x} | ({y} if planar else set())
        if w1.vertex_set() & w2.vertex_set() != shared:
            continue
        # boundary: arc of bd(w2) from z to x away from c1, then arc of
        # bd(w1) from x to y away from c2 (dropping the shared endpoint x)
        arc2 = _cycle_arc(w2.boundary, z, x, avoid=c1)
        arc1 = _cycle_arc(w1.boundary, x, y, avoid=c2)
        boundary = tuple(arc2 + arc1[1:-1] + ([y] if not planar else []))
        expected = w1.k + w2.k - (4 if planar else 3)
        if len(boundary) != expected:
            raise ComplexError("dwheel boundary length does not match pattern")
        if len(boundary) > max_boundary:
            continue
        return DwheelWitness(w1, w2, planar, canonical_cycle(boundary))
    return None


# -- file format ---------------------------------------------------------------


def complex_from_dict(data: dict) -> FlagComplex:
    """Build a complex from the JSON wire format.

    ``{"vertices": ["a", ...], "edges": [["a", "b"], ...]}``.  Labels may be
    arbitrary strings; they are mapped to dense ids in file order.  Duplicate
    vertices, duplicate edges and self-loops are rejected with a diagnostic
    naming the offending item.
    """
    try:
        raw_vertices = list(data["vertices"])
        raw_edges = list(data["edges"])
    except (KeyError, TypeError) as exc:
        raise ComplexError(f"missing or malformed field: {exc}") from exc
    ids: dict[str, int] = {}
    for name in raw_vertices:
        name = str(name)
        if name in ids:
            raise ComplexError(f"duplicate vertex {name!r}")
        ids[name] = len(ids)
    edges = []
    seen = set()
    for pair in raw_edges:
        if len(pair) != 2:
            raise ComplexError(f"edge {pair!r} does not have two endpoints")
        a, b = (str(x) for x in pair)
        if a == b:
            raise ComplexError(f"self-loop at vertex {a!r}")
        if a not in ids or b not in ids:
            raise ComplexError(f"edge ({a!r}, {b!r}) uses an unknown vertex")
        key = _norm_edge(ids[a], ids[b])
        if key in seen:
            raise ComplexError(f"duplicate edge ({a!r}, {b!r})")
        seen.add(key)
        edges.append(key)
    labels = {i: name for name, i in ids.items()}
    return FlagComplex(range(len(ids)), edges, labels)


def complex_to_dict(X: FlagComplex) -> dict:
    return {
        "vertices": [X.label(v) for v in X],
        "edges": [[X.label(u), X.label(v)] for u, v in X.edges()],
    }


def load_complex(path: str | Path) -> FlagComplex:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ComplexError(f"{path}: invalid JSON at line {exc.lineno}") from exc
    return complex_from_dict(data)


def save_complex(X: FlagComplex, path: str | Path) -> None:
    Path(path).write_text(json.dumps(complex_to_dict(X), indent=1) + "\n")
