"""Fixture and random-input generators.

Named fixtures reproduce the labelled incidence structures used throughout
the checks (wheels, planar/nonplanar dwheels, extended 5-wheels, cones,
hexagonal grid discs).  Random generators are deterministic per seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .complexes import ComplexError, FlagComplex
from .discs import DiscError, SimplicialDisc, check_disc_7_located


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for ``generate``.  Unused fields stay None."""

    kind: str
    k: int | None = None
    l: int | None = None
    planar: bool | None = None
    radius: int | None = None
    size: int | None = None
    n: int | None = None
    p: float | None = None
    seed: int | None = None


KINDS = (
    "WHEEL",
    "DWHEEL",
    "EXTENDED_5WHEEL",
    "CONE",
    "HEX_DISC",
    "RANDOM_DISC",
    "RANDOM_FLAG",
)


def generate(spec: GeneratorSpec) -> FlagComplex | SimplicialDisc:
    """Produce the fixture or random input described by ``spec``."""
    if spec.kind == "WHEEL":
        if spec.k is None:
            raise ComplexError("WHEEL needs k")
        return wheel_complex(spec.k)
    if spec.kind == "DWHEEL":
        if spec.k is None or spec.l is None or spec.planar is None:
            raise ComplexError("DWHEEL needs k, l and planar")
        return dwheel_complex(spec.k, spec.l, spec.planar)
    if spec.kind == "EXTENDED_5WHEEL":
        return extended_five_wheel_complex()
    if spec.kind == "CONE":
        raise ComplexError("CONE takes an existing complex; use cone(X)")
    if spec.kind == "HEX_DISC":
        if spec.radius is None:
            raise ComplexError("HEX_DISC needs radius")
        return hex_disc(spec.radius)
    if spec.kind == "RANDOM_DISC":
        if spec.size is None or spec.seed is None:
            raise ComplexError("RANDOM_DISC needs size and seed")
        return random_7_located_disc(spec.size, spec.seed)
    if spec.kind == "RANDOM_FLAG":
        if spec.n is None or spec.p is None or spec.seed is None:
            raise ComplexError("RANDOM_FLAG needs n, p and seed")
        return random_flag_complex(spec.n, spec.p, spec.seed)
    raise ComplexError(f"unknown generator kind {spec.kind!r}")


# -- named fixtures -----------------------------------------------------------


def wheel_complex(k: int) -> FlagComplex:
    """Full k-wheel: center 0 over the cycle 1..k."""
    if k < 4:
        raise ComplexError("wheel size must be >= 4")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    labels = {0: "c"} | {i: f"v{i}" for i in range(1, k + 1)}
    return FlagComplex(range(k + 1), edges, labels)


def dwheel_complex(k: int, l: int, planar: bool = True) -> FlagComplex:
    """A (k,l)-dwheel: wheels (w_l; v_1..v_k) and (v_2; w_1..w_l).

    Identifications follow the defining figures: v_3 = w_{l-1} always and
    v_1 = w_1 in the planar case; in the nonplanar case v_1 ~ w_1 instead.
    """
    if k < 4 or l < 4:
        raise ComplexError("dwheel wheel sizes must be >= 4")
    names = [f"v{i}" for i in range(1, k + 1)]
    wnames = [f"w{j}" for j in range(1, l + 1)]
    merge = {f"w{l - 1}": "v3"}
    if planar:
        merge["w1"] = "v1"

    def node(name: str) -> str:
        return merge.get(name, name)

    order: list[str] = []
    for name in names + wnames:
        name = node(name)
        if name not in order:
            order.append(name)
    ids = {name: i for i, name in enumerate(order)}
    edges = set()

    def add(a: str, b: str) -> None:
        x, y = ids[node(a)], ids[node(b)]
        if x != y:
            edges.add((min(x, y), max(x, y)))

    for i in range(1, k + 1):
        add(f"w{l}", f"v{i}")
        add(f"v{i}", f"v{i % k + 1}")
    for j in range(1, l + 1):
        add("v2", f"w{j}")
        add(f"w{j}", f"w{j % l + 1}")
    if not planar:
        add("v1", "w1")
    labels = {i: name for name, i in ids.items()}
    return FlagComplex(range(len(order)), sorted(edges), labels)


def extended_five_wheel_complex() -> FlagComplex:
    """Full 5-wheel plus an apex spanning a triangle with v1, v2."""
    X = wheel_complex(5)
    a = 6
    edges = list(X.edges()) + [(1, a), (2, a)]
    labels = X.labels() | {a: "a"}
    return FlagComplex(range(7), edges, labels)


def octahedron() -> FlagComplex:
    """Boundary of the octahedron: K_{2,2,2} with parts {0,5}, {1,4}, {2,3}."""
    parts = [(0, 5), (1, 4), (2, 3)]
    edges = [
        (u, v)
        for (p, q) in combinations(parts, 2)
        for u in p
        for v in q
    ]
    return FlagComplex(range(6), sorted(tuple(sorted(e)) for e in edges))


def cone(X: FlagComplex) -> FlagComplex:
    """Add one vertex adjacent to everything."""
    verts = X.vertices()
    apex = max(verts) + 1 if verts else 0
    edges = list(X.edges()) + [(v, apex) for v in verts]
    labels = X.labels() | {apex: "apex"}
    return FlagComplex(list(verts) + [apex], edges, labels)


# -- hexagonal grid discs ------------------------------------------------------

_HEX_DIRS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))


def _hex_dist(q: int, r: int) -> int:
    return (abs(q) + abs(r) + abs(q + r)) // 2


def hex_disc(radius: int) -> SimplicialDisc:
    """The radius-r ball in the equilateral triangulation of the plane.

    1 + 3r(r+1) vertices, 6r^2 triangles; all interior degrees are 6.
    """
    if radius < 1:
        raise ComplexError("radius must be >= 1")
    pts = sorted(
        (q, r)
        for q in range(-radius, radius + 1)
        for r in range(-radius, radius + 1)
        if _hex_dist(q, r) <= radius
    )
    ids = {p: i for i, p in enumerate(pts)}
    tris = []
    for q in range(-radius - 1, radius + 1):
        for r in range(-radius - 1, radius + 1):
            up = ((q, r), (q + 1, r), (q, r + 1))
            down = ((q + 1, r), (q, r + 1), (q + 1, r + 1))
            for t in (up, down):
                if all(p in ids for p in t):
                    tris.append(tuple(ids[p] for p in t))
    ring = []
    cur = (-radius, radius)
    for d in _HEX_DIRS:
        for _ in range(radius):
            ring.append(cur)
            cur = (cur[0] + d[0], cur[1] + d[1])
    boundary = [ids[p] for p in ring]
    return SimplicialDisc(tris, boundary)


# -- random inputs -------------------------------------------------------------


def random_flag_complex(n: int, p: float, seed: int) -> FlagComplex:
    """Erdos-Renyi graph viewed as a flag complex."""
    if n < 1 or not 0.0 <= p <= 1.0:
        raise ComplexError("need n >= 1 and p in [0, 1]")
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return FlagComplex(range(n), edges)


class _GrowingDisc:
    """Mutable disc state for the rejection-sampling generator.

    Tracks the boundary cycle, adjacency and the triangle set.  Moves keep
    the complex flag and every adjacent interior degree pair at sum >= 12,
    which for flag discs is exactly 7-location.
    """

    def __init__(self) -> None:
        self.tris = {(0, 1, 2)}
        self.bd = [0, 1, 2]
        self.adj: dict[int, set[int]] = {
            0: {1, 2},
            1: {0, 2},
            2: {0, 1},
        }
        self.next_id = 3

    def interior(self, v: int) -> bool:
        return v not in self.bd

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def _pair_ok(self, u: int, w: int) -> bool:
        return self.degree(u) + self.degree(w) >= 12

    def _interior_sums_ok(self, v: int) -> bool:
        if self.degree(v) < 4:
            return False
        return all(
            self._pair_ok(v, x) for x in self.adj[v] if self.interior(x)
        )

    def move_edge(self, i: int) -> bool:
        """New vertex over the boundary edge at position i."""
        u, v = self.bd[i], self.bd[(i + 1) % len(self.bd)]
        z = self.next_id
        self.next_id += 1
        self.tris.add(tuple(sorted((u, v, z))))
        self.adj[z] = {u, v}
        self.adj[u].add(z)
        self.adj[v].add(z)
        self.bd.insert(i + 1, z)
        return True

    def move_ear(self, i: int) -> bool:
        """Close the corner at boundary position i, making bd[i] interior."""
        if len(self.bd) < 4:
            return False
        m = self.bd[i]
        u = self.bd[i - 1]
        w = self.bd[(i + 1) % len(self.bd)]
        if w in self.adj[u]:
            return False
        if self.adj[u] & self.adj[w] != {m}:
            return False
        self.adj[u].add(w)
        self.adj[w].add(u)
        self.tris.add(tuple(sorted((u, m, w))))
        del self.bd[i]
        if not self._interior_sums_ok(m):
            self.tris.discard(tuple(sorted((u, m, w))))
            self.adj[u].discard(w)
            self.adj[w].discard(u)
            self.bd.insert(i, m)
            return False
        return True

    def move_cap(self, i: int) -> bool:
        """New vertex over two consecutive boundary edges at bd[i]."""
        m = self.bd[i]
        u = self.bd[i - 1]
        w = self.bd[(i + 1) % len(self.bd)]
        if u == w or w in self.adj[u]:
            return False
        z = self.next_id
        self.adj[z] = {u, m, w}
        for x in (u, m, w):
            self.adj[x].add(z)
        self.tris.add(tuple(sorted((u, m, z))))
        self.tris.add(tuple(sorted((m, w, z))))
        self.bd[i] = z
        if not self._interior_sums_ok(m):
            self.bd[i] = m
            self.tris.discard(tuple(sorted((u, m, z))))
            self.tris.discard(tuple(sorted((m, w, z))))
            for x in (u, m, w):
                self.adj[x].discard(z)
            del self.adj[z]
            return False
        self.next_id += 1
        return True

    def build(self) -> SimplicialDisc:
        return SimplicialDisc(sorted(self.tris), self.bd)


def random_7_located_disc(size: int, seed: int) -> SimplicialDisc:
    """Grow a flag 7-located disc by ``size`` accepted boundary moves.

    Moves that would break flagness or the interior degree-sum bound are
    rejected and retried; the generator may return a smaller disc if it
    runs out of acceptable moves.  Deterministic per (size, seed).
    """
    if size < 1:
        raise ComplexError("size must be >= 1")
    rng = random.Random(seed)
    state = _GrowingDisc()
    accepted = 0
    stale = 0
    while accepted < size and stale < 300:
        i = rng.randrange(len(state.bd))
        kind = rng.random()
        if kind < 0.45:
            ok = state.move_edge(i)
        elif kind < 0.75:
            ok = state.move_ear(i)
        else:
            ok = state.move_cap(i)
        if ok:
            accepted += 1
            stale = 0
        else:
            stale += 1
    disc = state.build()
    report = check_disc_7_located(disc)
    if not report.verdict:
        raise DiscError("generator produced a non-7-located disc")
    return disc
