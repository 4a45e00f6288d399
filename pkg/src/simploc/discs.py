"""Combinatorial triangulated discs.

A SimplicialDisc is a triangle list plus a distinguished boundary cycle.
Construction validates the full disc structure: edge-triangle incidences,
vertex links (cycles inside, fans on the boundary), the Euler relation and
dual connectivity.  The rotation system is a by-product of the link walk.
"""

from __future__ import annotations

import json
from collections import defaultdict
from pathlib import Path
from typing import Iterable, Iterator

from .complexes import FlagComplex, canonical_cycle
from .conditions import LocationReport, is_m_located


class DiscError(ValueError):
    """The data does not describe a triangulated disc."""


def _tri(t: Iterable[int]) -> tuple[int, int, int]:
    a, b, c = sorted(int(v) for v in t)
    if a == b or b == c:
        raise DiscError(f"degenerate triangle {(a, b, c)}")
    return (a, b, c)


def _tri_edges(t: tuple[int, int, int]) -> tuple[tuple[int, int], ...]:
    a, b, c = t
    return ((a, b), (a, c), (b, c))


class SimplicialDisc:
    """A triangulated disc with a distinguished boundary cycle."""

    __slots__ = (
        "triangles",
        "boundary",
        "_adj",
        "_edge_tris",
        "_rotation",
        "_interior",
    )

    def __init__(
        self,
        triangles: Iterable[Iterable[int]],
        boundary: Iterable[int],
        require_flag: bool = False,
    ):
        tris = tuple(sorted(_tri(t) for t in triangles))
        if len(set(tris)) != len(tris):
            dup = next(t for t in tris if tris.count(t) > 1)
            raise DiscError(f"duplicate triangle {dup}")
        if not tris:
            raise DiscError("a disc has at least one triangle")
        bd = tuple(int(v) for v in boundary)
        if len(bd) < 3 or len(set(bd)) != len(bd):
            raise DiscError("boundary must be a simple cycle of length >= 3")

        edge_tris: dict[tuple[int, int], list[tuple[int, int, int]]] = defaultdict(list)
        adj: dict[int, set[int]] = defaultdict(set)
        for t in tris:
            for u, v in _tri_edges(t):
                edge_tris[(u, v)].append(t)
                adj[u].add(v)
                adj[v].add(u)
        bd_edges = {
            tuple(sorted((bd[i], bd[(i + 1) % len(bd)]))) for i in range(len(bd))
        }
        for e in bd_edges:
            if e not in edge_tris:
                raise DiscError(f"boundary edge {e} is not an edge of any triangle")
        for e, ts in edge_tris.items():
            want = 1 if e in bd_edges else 2
            if len(ts) != want:
                raise DiscError(
                    f"edge {e} lies in {len(ts)} triangles, expected {want}"
                )
        rim = {e for e, ts in edge_tris.items() if len(ts) == 1}
        if rim != bd_edges:
            raise DiscError("boundary cycle does not match the rim of the surface")
        if not set(bd) <= set(adj):
            raise DiscError("boundary vertex missing from the triangles")

        n_v, n_e, n_f = len(adj), len(edge_tris), len(tris)
        if n_v - n_e + n_f != 1:
            raise DiscError(
                f"Euler relation fails: V-E+F = {n_v - n_e + n_f}, expected 1"
            )

        interior = frozenset(adj) - set(bd)
        rotation = {}
        bd_pos = {v: i for i, v in enumerate(bd)}
        for v, nbrs in adj.items():
            rotation[v] = self._walk_link(
                v, nbrs, tris, bd_pos, bd, v in interior
            )

        self._check_dual_connected(tris, edge_tris, bd_edges)

        self.triangles = tris
        self.boundary = bd
        self._adj = {v: frozenset(n) for v, n in adj.items()}
        self._edge_tris = {e: tuple(ts) for e, ts in edge_tris.items()}
        self._rotation = rotation
        self._interior = interior
        if require_flag:
            self.require_flag()

    @staticmethod
    def _walk_link(v, nbrs, tris, bd_pos, bd, is_interior):
        link: dict[int, list[int]] = defaultdict(list)
        for t in tris:
            if v in t:
                x, y = (w for w in t if w != v)
                link[x].append(y)
                link[y].append(x)
        if set(link) != set(nbrs):
            raise DiscError(f"vertex {v} has a neighbour with no shared triangle")
        degs = sorted(len(ws) for ws in link.values())
        if is_interior:
            if any(d != 2 for d in degs):
                raise DiscError(f"interior vertex {v} has a non-cycle link")
            start = min(link)
            walk = [start, min(link[start])]
        else:
            i = bd_pos[v]
            prev_b, next_b = bd[i - 1], bd[(i + 1) % len(bd)]
            ends = sorted(x for x, ws in link.items() if len(ws) == 1)
            if ends != sorted((prev_b, next_b)) or any(d > 2 for d in degs):
                raise DiscError(f"boundary vertex {v} has a non-fan link")
            walk = [ends[0]]
        while True:
            cur = walk[-1]
            prev = walk[-2] if len(walk) > 1 else None
            nxt = [w for w in link[cur] if w != prev]
            if not nxt:
                break
            if is_interior and nxt[0] == walk[0]:
                break
            walk.append(nxt[0])
        if len(walk) != len(link):
            raise DiscError(f"link of vertex {v} is not connected")
        return tuple(walk)

    @staticmethod
    def _check_dual_connected(tris, edge_tris, bd_edges):
        if len(tris) == 1:
            return
        seen = {tris[0]}
        stack = [tris[0]]
        while stack:
            t = stack.pop()
            for e in _tri_edges(t):
                for t2 in edge_tris[e]:
                    if t2 not in seen:
                        seen.add(t2)
                        stack.append(t2)
        if len(seen) != len(tris):
            raise DiscError("triangles are not edge-connected")

    # -- queries ---------------------------------------------------------

    @property
    def area(self) -> int:
        return len(self.triangles)

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def n_vertices(self) -> int:
        return len(self._adj)

    def interior_vertices(self) -> frozenset[int]:
        return self._interior

    def boundary_set(self) -> frozenset[int]:
        return frozenset(self.boundary)

    def boundary_edges(self) -> frozenset[tuple[int, int]]:
        n = len(self.boundary)
        return frozenset(
            tuple(sorted((self.boundary[i], self.boundary[(i + 1) % n])))
            for i in range(n)
        )

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._edge_tris))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        if v not in self._adj:
            raise DiscError(f"unknown vertex {v}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def rotation(self, v: int) -> tuple[int, ...]:
        """Cyclic neighbour order at an interior vertex, fan order on the boundary."""
        return self._rotation[v]

    def triangles_at(self, v: int) -> tuple[tuple[int, int, int], ...]:
        return tuple(t for t in self.triangles if v in t)

    def edge_triangles(self, u: int, v: int) -> tuple[tuple[int, int, int], ...]:
        return self._edge_tris.get(tuple(sorted((u, v))), ())

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialDisc):
            return NotImplemented
        return self.triangles == other.triangles and canonical_cycle(
            self.boundary
        ) == canonical_cycle(other.boundary)

    def __hash__(self) -> int:
        return hash((self.triangles, canonical_cycle(self.boundary)))

    def __repr__(self) -> str:
        return f"SimplicialDisc({self.area} triangles, boundary {len(self.boundary)})"

    def graph_distance(self, u: int, v: int) -> int:
        """Edge distance in the 1-skeleton."""
        if u == v:
            return 0
        seen = {u: 0}
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self._adj[x]:
                    if y not in seen:
                        seen[y] = seen[x] + 1
                        if y == v:
                            return seen[y]
                        nxt.append(y)
            frontier = nxt
        raise DiscError(f"vertices {u}, {v} are not connected")

    # -- flagness and the skeleton ----------------------------------------

    def is_flag(self) -> bool:
        """Every 3-clique of the 1-skeleton is a face."""
        faces = set(self.triangles)
        for u, v in self._edge_tris:
            for w in self._adj[u] & self._adj[v]:
                if tuple(sorted((u, v, w))) not in faces:
                    return False
        return True

    def require_flag(self) -> None:
        if not self.is_flag():
            raise DiscError("disc is not flag: a hollow 3-clique exists")

    def skeleton(self) -> FlagComplex:
        return FlagComplex(self.vertices(), self.edges())


# -- subdiscs -------------------------------------------------------------------


def subdisc_bounded_by(D: SimplicialDisc, cycle: Iterable[int]) -> SimplicialDisc:
    """The subdisc of ``D`` bounded by an embedded cycle.

    The returned object is a valid disc whose boundary is ``cycle``: the
    side of the cycle whose triangles carry no boundary edge of ``D``
    outside the cycle itself.
    """
    cyc = tuple(int(v) for v in cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise DiscError("cutting cycle must be simple of length >= 3")
    n = len(cyc)
    cyc_edges = {tuple(sorted((cyc[i], cyc[(i + 1) % n]))) for i in range(n)}
    if not all(e in D._edge_tris for e in cyc_edges):
        raise DiscError("cutting cycle is not embedded in the disc")
    if canonical_cycle(cyc) == canonical_cycle(D.boundary):
        return D

    index = {t: i for i, t in enumerate(D.triangles)}
    comp = [-1] * len(D.triangles)
    cid = 0
    for t in D.triangles:
        if comp[index[t]] != -1:
            continue
        stack = [t]
        comp[index[t]] = cid
        while stack:
            cur = stack.pop()
            for e in _tri_edges(cur):
                if e in cyc_edges:
                    continue
                for t2 in D._edge_tris[e]:
                    if comp[index[t2]] == -1:
                        comp[index[t2]] = cid
                        stack.append(t2)
        cid += 1

    outer_bd = D.boundary_edges() - cyc_edges
    outside = set()
    for t in D.triangles:
        if any(e in outer_bd for e in _tri_edges(t)):
            outside.add(comp[index[t]])
    inside = [c for c in range(cid) if c not in outside]
    if len(inside) != 1:
        raise DiscError("cycle does not bound a unique subdisc")
    tris = [t for t in D.triangles if comp[index[t]] == inside[0]]
    return SimplicialDisc(tris, cyc)


# -- disc-level condition checks ---------------------------------------------


def check_degree_sums(D: SimplicialDisc) -> list[tuple[int, int]]:
    """Interior edges whose endpoint degrees sum below 12.

    Empty for 7-located discs: adjacent interior vertices are the centers
    of a planar dwheel of boundary length deg(v) + deg(w) - 4, which no
    vertex of a disc can dominate.
    """
    interior = D.interior_vertices()
    out = []
    for u, v in D.edges():
        if u in interior and v in interior and D.degree(u) + D.degree(v) < 12:
            out.append((u, v))
    return out


def check_disc_7_located(D: SimplicialDisc) -> LocationReport:
    """7-location of the disc's 1-skeleton, which must be flag."""
    D.require_flag()
    report = is_m_located(D.skeleton(), 7)
    assert all(dw.planar for dw, _ in report.witnesses), (
        "a disc produced a nonplanar dwheel"
    )
    return report


# -- file format ---------------------------------------------------------------


def disc_from_dict(data: dict) -> SimplicialDisc:
    try:
        return SimplicialDisc(data["triangles"], data["boundary"])
    except (KeyError, TypeError) as exc:
        raise DiscError(f"missing or malformed field: {exc}") from exc


def disc_to_dict(D: SimplicialDisc) -> dict:
    return {
        "triangles": [list(t) for t in D.triangles],
        "boundary": list(D.boundary),
    }


def load_disc(path: str | Path) -> SimplicialDisc:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DiscError(f"{path}: invalid JSON at line {exc.lineno}") from exc
    return disc_from_dict(data)


def save_disc(D: SimplicialDisc, path: str | Path) -> None:
    Path(path).write_text(json.dumps(disc_to_dict(D), indent=1) + "\n")
