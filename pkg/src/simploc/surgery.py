"""Disc diagrams and area-reducing surgeries.

A DiscDiagram is a nondegenerate simplicial map from a triangulated disc to
a flag complex whose boundary restriction is an isomorphism onto a target
loop.  The four surgeries each cut out a subdisc and reglue with fewer
triangles; every output is revalidated from scratch, and a move that would
pinch the disc or touch its boundary is rejected without mutating anything.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .complexes import FlagComplex, canonical_cycle, complex_to_dict, complex_from_dict
from .discs import DiscError, SimplicialDisc, subdisc_bounded_by

FOUR_CYCLE = "FOUR_CYCLE"
FIVE_CYCLE = "FIVE_CYCLE"
SIX_CYCLE = "SIX_CYCLE"
FOUR_WHEEL = "FOUR_WHEEL"
_KINDS = (FOUR_CYCLE, FIVE_CYCLE, SIX_CYCLE, FOUR_WHEEL)


class SurgeryError(Exception):
    """Base class for surgery failures."""


class PreconditionError(SurgeryError):
    """The arguments do not describe a legal surgery site."""


class NotApplicableError(SurgeryError):
    """The site is real but the move would break the diagram; nothing mutated."""


class MissingDiagonalError(SurgeryError):
    """No antipodal pair of a 4-wheel has adjacent or equal images.

    Signals that the target is not locally 5-large around the wheel image.
    """


class DiagramError(ValueError):
    """The data does not describe a valid disc diagram."""


@dataclass(frozen=True)
class SurgeryCertificate:
    kind: str
    locus: tuple[int, ...]
    area_before: int
    area_after: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown surgery kind {self.kind!r}")
        if not self.area_after < self.area_before:
            raise ValueError("surgery certificate must record an area drop")
        if self.kind != FOUR_WHEEL and self.area_before - self.area_after < 2:
            raise ValueError(f"{self.kind} must drop area by at least 2")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "locus": list(self.locus),
            "area_before": self.area_before,
            "area_after": self.area_after,
        }


class DiscDiagram:
    """A disc plus a vertex map into a flag complex over a fixed loop."""

    __slots__ = ("disc", "target", "vertex_map", "target_loop")

    def __init__(
        self,
        disc: SimplicialDisc,
        target: FlagComplex,
        vertex_map: dict[int, int],
        target_loop: tuple[int, ...],
    ):
        fmap = {int(k): int(v) for k, v in vertex_map.items()}
        loop = tuple(int(v) for v in target_loop)
        if set(fmap) != set(disc.vertices()):
            raise DiagramError("vertex map does not cover the disc vertices")
        for v in loop:
            if v not in target:
                raise DiagramError(f"loop vertex {v} not in the target")
        if len(loop) < 3 or len(set(loop)) != len(loop):
            raise DiagramError("target loop must be a simple cycle")
        for i in range(len(loop)):
            if not target.has_edge(loop[i], loop[(i + 1) % len(loop)]):
                raise DiagramError("target loop is not a cycle in the target")
        for u, v in disc.edges():
            fu, fv = fmap[u], fmap[v]
            if fu == fv or not target.has_edge(fu, fv):
                raise DiagramError(
                    f"edge ({u}, {v}) maps to a non-edge ({fu}, {fv})"
                )
        image = tuple(fmap[v] for v in disc.boundary)
        if len(set(image)) != len(image):
            raise DiagramError("boundary restriction is not injective")
        if canonical_cycle(image) != canonical_cycle(loop):
            raise DiagramError("boundary does not map onto the target loop")
        self.disc = disc
        self.target = target
        self.vertex_map = dict(sorted(fmap.items()))
        self.target_loop = loop

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiscDiagram):
            return NotImplemented
        return (
            self.disc == other.disc
            and self.target == other.target
            and self.vertex_map == other.vertex_map
            and canonical_cycle(self.target_loop)
            == canonical_cycle(other.target_loop)
        )

    def __repr__(self) -> str:
        return f"DiscDiagram({self.disc.area} triangles -> {self.target!r})"


def area(d: DiscDiagram) -> int:
    """Number of triangles of the diagram's disc."""
    return d.disc.area


# -- shared surgery plumbing -----------------------------------------------


def _require_cycle_in_disc(D: SimplicialDisc, verts: tuple[int, ...]) -> None:
    if len(set(verts)) != len(verts):
        raise PreconditionError(f"cycle {verts} repeats a vertex")
    for i in range(len(verts)):
        if not D.has_edge(verts[i], verts[(i + 1) % len(verts)]):
            raise PreconditionError(f"{verts} is not a cycle of the disc")


def _pick_survivor(d: DiscDiagram, u: int, v: int) -> tuple[int, int]:
    """Keep the boundary vertex if there is one, else the smaller id."""
    on_bd = d.disc.boundary_set()
    if u in on_bd and v in on_bd:
        raise PreconditionError(
            "both glued vertices lie on the boundary; the diagram was invalid"
        )
    if v in on_bd:
        return v, u
    if u in on_bd:
        return u, v
    return (u, v) if u < v else (v, u)


def _cut_and_reglue(
    d: DiscDiagram,
    cycle: tuple[int, ...],
    merge: dict[int, int],
    new_triangles: list[tuple[int, int, int]],
    kind: str,
) -> tuple[DiscDiagram, SurgeryCertificate]:
    D = d.disc
    sub = subdisc_bounded_by(D, cycle)
    sub_edges = {e for t in sub.triangles for e in _edges_of(t)}
    touching = sub_edges & D.boundary_edges()
    if touching:
        raise NotApplicableError(
            f"subdisc to delete contains boundary edges {sorted(touching)}"
        )
    removed = set(sub.triangles)
    inner = set(sub.vertices()) - set(sub.boundary)
    tris = []
    for t in D.triangles:
        if t in removed:
            continue
        tris.append(tuple(sorted(merge.get(x, x) for x in t)))
    tris.extend(tuple(sorted(t)) for t in new_triangles)
    fmap = {
        merge.get(v, v): img
        for v, img in d.vertex_map.items()
        if v not in inner and v not in merge
    }
    for v, img in d.vertex_map.items():
        if v in merge:
            fmap.setdefault(merge[v], img)
    try:
        new_disc = SimplicialDisc(tris, D.boundary)
        new_diag = DiscDiagram(new_disc, d.target, fmap, d.target_loop)
    except (DiscError, DiagramError) as exc:
        raise NotApplicableError(f"gluing would not produce a disc: {exc}") from exc
    cert = SurgeryCertificate(kind, cycle, D.area, new_disc.area)
    return new_diag, cert


def _edges_of(t: tuple[int, int, int]) -> tuple[tuple[int, int], ...]:
    a, b, c = t
    return ((a, b), (a, c), (b, c))


def _require_clique_image(d: DiscDiagram, tri: tuple[int, int, int]) -> None:
    imgs = [d.vertex_map[v] for v in tri]
    for x, y in combinations(imgs, 2):
        if x == y or not d.target.has_edge(x, y):
            raise PreconditionError(
                f"image {imgs} of glued triangle is not a clique; diagram corrupt"
            )


# -- the four moves -----------------------------------------------------------


def surgery_4cycle(
    d: DiscDiagram, u: int, a: int, v: int, b: int
) -> tuple[DiscDiagram, SurgeryCertificate]:
    """Delete the subdisc bounded by the 4-cycle (u,a,v,b) and glue u to v.

    Requires f(u) = f(v).  The edges (a,u)/(a,v) and (b,u)/(b,v) are
    identified; the interior of the subdisc disappears, dropping the area
    by at least 2.
    """
    cycle = (u, a, v, b)
    _require_cycle_in_disc(d.disc, cycle)
    if d.vertex_map[u] != d.vertex_map[v]:
        raise PreconditionError(f"map values differ: f({u}) != f({v})")
    keep, die = _pick_survivor(d, u, v)
    return _cut_and_reglue(d, cycle, {die: keep}, [], FOUR_CYCLE)


def surgery_5cycle(
    d: DiscDiagram, a: int, v: int, b: int, c: int, u: int
) -> tuple[DiscDiagram, SurgeryCertificate]:
    """Collapse the 5-cycle (a,v,b,c,u) with f(u) = f(v).

    The subdisc is deleted, u is glued to v identifying (a,u) with (a,v),
    and one triangle (u,b,c) is glued in; its image is a clique by
    flagness.  Area drops by at least 2.
    """
    cycle = (a, v, b, c, u)
    _require_cycle_in_disc(d.disc, cycle)
    if d.vertex_map[u] != d.vertex_map[v]:
        raise PreconditionError(f"map values differ: f({u}) != f({v})")
    keep, die = _pick_survivor(d, u, v)
    _require_clique_image(d, (u, b, c))
    return _cut_and_reglue(d, cycle, {die: keep}, [(keep, b, c)], FIVE_CYCLE)


def surgery_6cycle(
    d: DiscDiagram, u: int, a: int, b: int, v: int, c: int, dd: int
) -> tuple[DiscDiagram, SurgeryCertificate]:
    """Collapse the 6-cycle (u,a,b,v,c,dd) with d(u,v) = 3 and f(u) = f(v).

    The subdisc is deleted, u is glued to v and two triangles (a,b,u) and
    (u,c,dd) are glued in.  The distance condition keeps the gluing free of
    doubled edges.  Area drops by at least 2.
    """
    cycle = (u, a, b, v, c, dd)
    _require_cycle_in_disc(d.disc, cycle)
    dist = d.disc.graph_distance(u, v)
    if dist != 3:
        raise PreconditionError(f"need d(u,v) = 3 in the disc, found {dist}")
    if d.vertex_map[u] != d.vertex_map[v]:
        raise PreconditionError(f"map values differ: f({u}) != f({v})")
    keep, die = _pick_survivor(d, u, v)
    _require_clique_image(d, (u, a, b))
    _require_clique_image(d, (u, c, dd))
    return _cut_and_reglue(
        d, cycle, {die: keep}, [(a, b, keep), (keep, c, dd)], SIX_CYCLE
    )


def replace_4wheel(d, wheel) -> tuple[DiscDiagram, SurgeryCertificate]:
    """Remove a 4-wheel: center deleted, one diagonal and two triangles added.

    If an antipodal boundary pair has equal images the move defers to
    surgery_4cycle.  Otherwise a pair with adjacent images is spanned by a
    diagonal edge, which exists in the image by local 5-largeness of the
    target; the four wheel triangles become two, dropping the area by
    exactly 2.
    """
    D = d.disc
    z = wheel.center
    bd = wheel.boundary
    if len(bd) != 4:
        raise PreconditionError("replace_4wheel needs a 4-wheel")
    if z in D.boundary_set() or D.degree(z) != 4:
        raise PreconditionError(f"vertex {z} is not interior of degree 4")
    if canonical_cycle(D.rotation(z)) != canonical_cycle(bd):
        raise PreconditionError("wheel boundary does not match the link of its center")
    p0, p1, p2, p3 = bd
    f = d.vertex_map
    failures = []
    for (p, q, x, y) in ((p0, p2, p1, p3), (p1, p3, p2, p0)):
        if f[p] == f[q]:
            try:
                return surgery_4cycle(d, p, x, q, y)
            except NotApplicableError as exc:
                failures.append(exc)
    for (p, q, x, y) in ((p0, p2, p1, p3), (p1, p3, p2, p0)):
        if f[p] != f[q] and d.target.has_edge(f[p], f[q]):
            removed = set(D.triangles_at(z))
            tris = [t for t in D.triangles if t not in removed]
            tris.append(tuple(sorted((p, x, q))))
            tris.append(tuple(sorted((p, y, q))))
            fmap = {v: img for v, img in f.items() if v != z}
            try:
                new_disc = SimplicialDisc(tris, D.boundary)
                new_diag = DiscDiagram(new_disc, d.target, fmap, d.target_loop)
            except (DiscError, DiagramError) as exc:
                failures.append(exc)
                continue
            cert = SurgeryCertificate(
                FOUR_WHEEL, (z,) + bd, D.area, new_disc.area
            )
            return new_diag, cert
    if failures:
        raise NotApplicableError(
            f"no 4-wheel move applies cleanly at {z}: {failures[0]}"
        )
    raise MissingDiagonalError(
        f"no antipodal pair of the 4-wheel at {z} has adjacent or equal "
        "images; the target is not locally 5-large there"
    )


# -- greedy reduction driver ----------------------------------------------------


def _image_pairs(d: DiscDiagram) -> list[tuple[int, int]]:
    by_image: dict[int, list[int]] = {}
    for v, img in d.vertex_map.items():
        by_image.setdefault(img, []).append(v)
    pairs = []
    for verts in by_image.values():
        pairs.extend(combinations(sorted(verts), 2))
    return sorted(pairs)


def _try_4cycles(d: DiscDiagram):
    D = d.disc
    for u, v in _image_pairs(d):
        common = sorted(D.neighbors(u) & D.neighbors(v))
        for a, b in combinations(common, 2):
            yield (surgery_4cycle, (d, u, a, v, b))


def _try_4wheels(d: DiscDiagram):
    from .complexes import WheelWitness

    D = d.disc
    for z in sorted(D.interior_vertices()):
        if D.degree(z) == 4:
            wheel = WheelWitness(z, canonical_cycle(D.rotation(z)), True)
            yield (replace_4wheel, (d, wheel))


def _try_5cycles(d: DiscDiagram):
    D = d.disc
    for u, v in _image_pairs(d):
        for a in sorted(D.neighbors(u) & D.neighbors(v)):
            for b in sorted(D.neighbors(v) - {u, a}):
                for c in sorted((D.neighbors(b) & D.neighbors(u)) - {u, v, a}):
                    if len({a, v, b, c, u}) == 5:
                        yield (surgery_5cycle, (d, a, v, b, c, u))


def _try_6cycles(d: DiscDiagram):
    D = d.disc
    for u, v in _image_pairs(d):
        if D.graph_distance(u, v) != 3:
            continue
        for a in sorted(D.neighbors(u) - {v}):
            for b in sorted((D.neighbors(a) & D.neighbors(v)) - {u}):
                for c in sorted(D.neighbors(v) - {u, a, b}):
                    for dd in sorted((D.neighbors(c) & D.neighbors(u)) - {v, a, b}):
                        if len({u, a, b, v, c, dd}) == 6:
                            yield (surgery_6cycle, (d, u, a, b, v, c, dd))


def reduce(d: DiscDiagram) -> tuple[DiscDiagram, list[SurgeryCertificate]]:
    """Apply surgeries greedily until none applies.

    Sites are tried in canonical order with priority 4-cycle, 4-wheel,
    5-cycle, 6-cycle.  Sites whose move would pinch the disc are skipped;
    the area strictly decreases at every applied move, so this terminates.
    Greedy reduction makes no minimality claim.
    """
    certs: list[SurgeryCertificate] = []
    current = d
    while True:
        applied = None
        for finder in (_try_4cycles, _try_4wheels, _try_5cycles, _try_6cycles):
            for fn, args in finder(current):
                try:
                    applied = fn(*args)
                except NotApplicableError:
                    continue
                break
            if applied:
                break
        if not applied:
            break
        current, cert = applied
        certs.append(cert)
    return current, certs


# -- file format ---------------------------------------------------------------


def diagram_to_dict(d: DiscDiagram) -> dict:
    return {
        "triangles": [list(t) for t in d.disc.triangles],
        "boundary": list(d.disc.boundary),
        "target": complex_to_dict(d.target),
        "map": {str(v): d.target.label(img) for v, img in d.vertex_map.items()},
        "loop": [d.target.label(v) for v in d.target_loop],
    }


def diagram_from_dict(data: dict) -> DiscDiagram:
    try:
        disc = SimplicialDisc(data["triangles"], data["boundary"])
        target = complex_from_dict(data["target"])
        by_label = {target.label(v): v for v in target}
        fmap = {int(k): by_label[str(lbl)] for k, lbl in data["map"].items()}
        loop = tuple(by_label[str(lbl)] for lbl in data["loop"])
    except (KeyError, TypeError) as exc:
        raise DiagramError(f"missing or malformed field: {exc}") from exc
    return DiscDiagram(disc, target, fmap, loop)


def load_diagram(path: str | Path) -> DiscDiagram:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"{path}: invalid JSON at line {exc.lineno}") from exc
    return diagram_from_dict(data)


def save_diagram(d: DiscDiagram, path: str | Path) -> None:
    Path(path).write_text(json.dumps(diagram_to_dict(d), indent=1) + "\n")
