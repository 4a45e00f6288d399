"""Local curvature conditions for flag complexes.

Deciders for k-largeness, local k-largeness, m-location, the extended
5-wheel condition and local weak systolicity.  Checkers that quantify over
configurations return a LocationReport listing every qualifying
configuration together with its dominating vertex, so failures come with
complete witness sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    ComplexError,
    DwheelWitness,
    FlagComplex,
    WheelWitness,
    canonical_cycle,
    enumerate_cycles,
    enumerate_dwheels,
    enumerate_induced_cycles,
    link_graph,
)


@dataclass(frozen=True)
class ExtendedFiveWheelWitness:
    """A 5-wheel plus an apex spanning a triangle with one boundary edge.

    The apex is adjacent to the first two boundary vertices of the wheel and
    to no other wheel vertex.  The wheel need not be full: the condition is
    applied to arbitrary 5-wheel subcomplexes.
    """

    wheel: WheelWitness
    apex: int

    def vertex_set(self) -> frozenset[int]:
        return self.wheel.vertex_set() | {self.apex}

    def sort_key(self) -> tuple:
        return (self.wheel.center, self.wheel.boundary, self.apex)


@dataclass(frozen=True)
class LocationReport:
    """Outcome of a domination search over a family of configurations.

    ``witnesses`` pairs every qualifying configuration with its least
    dominating vertex, or None when no vertex dominates it.  The verdict is
    false exactly when some witness has no dominator.
    """

    verdict: bool
    witnesses: tuple[tuple[object, int | None], ...]

    def failing(self) -> tuple[object, ...]:
        return tuple(w for w, dom in self.witnesses if dom is None)


def is_k_large(X: FlagComplex, k: int) -> bool:
    """No full j-cycles for 4 <= j <= k-1.  Vacuously true at k = 4."""
    if k < 4:
        raise ComplexError("k must be >= 4")
    if k == 4:
        return True
    return not enumerate_induced_cycles(X, 4, k - 1)


def is_locally_k_large(X: FlagComplex, k: int) -> bool:
    """All links are k-large."""
    return all(is_k_large(link_graph(X, v), k) for v in X)


def _dominator(X: FlagComplex, verts: frozenset[int]) -> int | None:
    """Least vertex adjacent to every vertex of ``verts``, if any.

    Such a vertex cannot lie in ``verts`` (adjacency is irreflexive), so for
    a flag complex this is exactly containment of the subcomplex in a link.
    """
    for v in X:
        if v not in verts and verts <= X.neighbors(v):
            return v
    return None


def is_m_located(X: FlagComplex, m: int) -> LocationReport:
    """Every dwheel with full wheels and boundary length <= m is dominated.

    The link form of the definition is checked directly: a dominating
    vertex adjacent to all dwheel vertices contains the dwheel subcomplex
    in its link by flagness.  A complex with no qualifying dwheels is
    m-located for every m.
    """
    if m < 4:
        raise ComplexError("m must be >= 4")
    witnesses = []
    for dw in enumerate_dwheels(X, max_boundary=m):
        witnesses.append((dw, _dominator(X, dw.vertex_set())))
    verdict = all(dom is not None for _, dom in witnesses)
    return LocationReport(verdict, tuple(witnesses))


def enumerate_extended_five_wheels(X: FlagComplex) -> list[ExtendedFiveWheelWitness]:
    """All extended 5-wheels, over arbitrary (not only full) 5-wheels.

    5-wheels centred at v correspond to 5-cycles in the link of v, chords
    allowed.  For each boundary edge of each wheel, any vertex adjacent to
    exactly that edge's endpoints among the six wheel vertices is an apex.
    """
    out = set()
    for c in X:
        link = link_graph(X, c)
        for cyc in enumerate_cycles(link, 5, 5):
            wheel_verts = set(cyc) | {c}
            cycle_edges = {frozenset((cyc[i], cyc[(i + 1) % 5])) for i in range(5)}
            full = X.induced_edges(cyc) == frozenset(
                tuple(sorted(e)) for e in cycle_edges
            )
            for i in range(5):
                v1, v2 = cyc[i], cyc[(i + 1) % 5]
                others = wheel_verts - {v1, v2}
                for a in sorted(X.neighbors(v1) & X.neighbors(v2)):
                    if a in wheel_verts:
                        continue
                    if any(X.has_edge(a, w) for w in others):
                        continue
                    rot = cyc[i:] + cyc[:i]
                    rev = tuple(reversed(rot[1:] + rot[:1]))
                    boundary = min(rot, rev)
                    out.add(
                        ExtendedFiveWheelWitness(
                            WheelWitness(c, boundary, full), a
                        )
                    )
    return sorted(out, key=ExtendedFiveWheelWitness.sort_key)


def check_w5hat(X: FlagComplex) -> LocationReport:
    """Every extended 5-wheel is contained in the link of a vertex."""
    witnesses = []
    for ew in enumerate_extended_five_wheels(X):
        witnesses.append((ew, _dominator(X, ew.vertex_set())))
    verdict = all(dom is not None for _, dom in witnesses)
    return LocationReport(verdict, tuple(witnesses))


def is_locally_weakly_systolic(X: FlagComplex) -> bool:
    """5-large and satisfying the extended 5-wheel condition."""
    return is_k_large(X, 5) and check_w5hat(X).verdict


# -- witness replay ------------------------------------------------------------


def validate_dwheel_witness(X: FlagComplex, dw: DwheelWitness) -> None:
    """Re-check a dwheel witness from raw adjacency queries.

    Raises ComplexError if anything fails; used to audit reports.
    """
    from .complexes import is_full, require_cycle, _cycle_neighbors

    for w in (dw.wheel1, dw.wheel2):
        require_cycle(X, w.boundary)
        if not all(X.has_edge(w.center, v) for v in w.boundary):
            raise ComplexError("wheel center not adjacent to boundary")
        wheel_edges = [(w.center, v) for v in w.boundary] + [
            (w.boundary[i], w.boundary[(i + 1) % w.k]) for i in range(w.k)
        ]
        if not is_full(X, w.vertex_set(), wheel_edges):
            raise ComplexError("dwheel wheel is not full")
    c1, c2 = dw.centers()
    if c1 not in dw.wheel2.boundary or c2 not in dw.wheel1.boundary:
        raise ComplexError("centers do not lie on opposite boundaries")
    nb1 = set(_cycle_neighbors(dw.wheel1.boundary, c2))
    nb2 = set(_cycle_neighbors(dw.wheel2.boundary, c1))
    shared_side = nb1 & nb2
    if not shared_side:
        raise ComplexError("wheels share no boundary vertex next to both centers")
    x = min(shared_side)
    y = (nb1 - {x}).pop()
    z = (nb2 - {x}).pop()
    if dw.planar:
        if y != z:
            raise ComplexError("planar dwheel without the shared vertex")
    else:
        if y == z or not X.has_edge(y, z):
            raise ComplexError("nonplanar dwheel without the joining edge")
    expected = dw.wheel1.k + dw.wheel2.k - (4 if dw.planar else 3)
    if len(dw.boundary) != expected:
        raise ComplexError("dwheel boundary length violates the formula")
    require_cycle(X, dw.boundary)
    if set(dw.boundary) != dw.vertex_set() - set(dw.centers()):
        raise ComplexError("dwheel boundary is not the vertex set minus centers")


def validate_report(X: FlagComplex, report: LocationReport) -> None:
    """Replay every witness of a report through adjacency queries."""
    for witness, dom in report.witnesses:
        if isinstance(witness, DwheelWitness):
            validate_dwheel_witness(X, witness)
        elif isinstance(witness, ExtendedFiveWheelWitness):
            w = witness.wheel
            if not all(X.has_edge(w.center, v) for v in w.boundary):
                raise ComplexError("extended wheel center not adjacent to boundary")
            v1, v2 = w.boundary[0], w.boundary[1]
            if not (X.has_edge(witness.apex, v1) and X.has_edge(witness.apex, v2)):
                raise ComplexError("apex does not span a triangle with the edge")
            for other in w.vertex_set() - {v1, v2}:
                if witness.apex == other or X.has_edge(witness.apex, other):
                    raise ComplexError("apex adjacent to a forbidden wheel vertex")
        if dom is not None:
            verts = (
                witness.vertex_set()
                if hasattr(witness, "vertex_set")
                else frozenset(witness)
            )
            if dom in verts or not verts <= X.neighbors(dom):
                raise ComplexError("recorded dominator does not dominate")
