"""Exhaustive minimal disc diagram search.

The search peels the filling problem boundary-first: every triangulated
filling of a loop contains exactly one triangle on a fixed hole edge, so
branching over that triangle's apex (an existing hole vertex, splitting the
hole in two, or a fresh interior vertex with any image adjacent to both
edge endpoints) enumerates every filling exactly once.  Branch and bound on
the area cap keeps it desk-scale; every complete candidate is replayed
through the full diagram validator before it counts.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations, product

from .complexes import ComplexError, FlagComplex, require_cycle
from .discs import DiscError, SimplicialDisc
from .surgery import DiagramError, DiscDiagram

DEFAULT_LOOP_GUARD = 10
DEFAULT_AREA_GUARD = 12


@dataclass(frozen=True)
class OracleResult:
    """All minimal diagrams for a loop, or a certified/capped absence.

    ``minimal_area`` is None when no filling was found; ``capped`` then
    distinguishes a search cut off by the area cap from a proven absence.
    """

    minimal_area: int | None
    diagrams: tuple[DiscDiagram, ...]
    explored: int
    capped: bool

    @property
    def is_unsat(self) -> bool:
        return self.minimal_area is None


def _guards() -> tuple[int, int]:
    env = os.environ.get("SIMPLOC_MAX_CAP")
    if env is not None:
        lifted = int(env)
        return lifted, lifted
    return DEFAULT_LOOP_GUARD, DEFAULT_AREA_GUARD


def brute_force_min_diagram(
    X: FlagComplex,
    loop,
    area_cap: int = DEFAULT_AREA_GUARD,
    *,
    unguarded: bool = False,
) -> OracleResult:
    """Search every disc filling of ``loop`` with at most ``area_cap`` triangles.

    Returns all area-minimal valid diagrams up to interior relabelling.
    Guards (|loop| <= 10, cap <= 12) protect against accidental blowups and
    can be lifted with ``unguarded`` or the SIMPLOC_MAX_CAP environment
    variable.
    """
    loop = require_cycle(X, loop)
    if not unguarded:
        loop_guard, cap_guard = _guards()
        if len(loop) > loop_guard or area_cap > cap_guard:
            raise ComplexError(
                f"oracle guard: |loop| <= {loop_guard} and cap <= {cap_guard} "
                "(set SIMPLOC_MAX_CAP or pass unguarded=True to lift)"
            )
    n = len(loop)
    fmap: dict[int, int] = {i: loop[i] for i in range(n)}
    triangles: list[tuple[int, int, int]] = []
    holes: list[tuple[int, ...]] = [tuple(range(n))]
    state = {
        "best": area_cap,
        "explored": 0,
        "pruned": False,
        "found": [],  # (area, key, diagram)
        "next_id": n,
    }

    def lower_bound() -> int:
        return len(triangles) + sum(len(h) - 2 for h in holes)

    def finish() -> None:
        tris = tuple(triangles)
        try:
            disc = SimplicialDisc(tris, tuple(range(n)))
            diag = DiscDiagram(disc, X, dict(fmap), loop)
        except (DiscError, DiagramError):
            return
        area = len(tris)
        if area > state["best"]:
            return
        key = _canonical_key(tris, fmap, n)
        if area < state["best"]:
            state["best"] = area
            state["found"] = [f for f in state["found"] if f[0] <= area]
        state["found"].append((area, key, diag))

    def search() -> None:
        state["explored"] += 1
        if lower_bound() > state["best"]:
            state["pruned"] = True
            return
        if not holes:
            finish()
            return
        hole = holes.pop()
        try:
            h0, h1 = hole[0], hole[1]
            if len(hole) == 3:
                triangles.append(tuple(sorted(hole)))
                search()
                triangles.pop()
                return
            # apex at an existing hole vertex: split the hole
            for j in range(2, len(hole)):
                w = hole[j]
                if not (
                    X.has_edge(fmap[w], fmap[h0]) and X.has_edge(fmap[w], fmap[h1])
                ):
                    continue
                triangles.append(tuple(sorted((h0, h1, w))))
                pushed = 0
                sub_a = hole[1 : j + 1]
                sub_b = hole[j:] + (h0,)
                for sub in (sub_a, sub_b):
                    if len(sub) >= 3:
                        holes.append(sub)
                        pushed += 1
                search()
                for _ in range(pushed):
                    holes.pop()
                triangles.pop()
            # fresh interior vertex adjacent to both edge endpoints
            common = sorted(X.neighbors(fmap[h0]) & X.neighbors(fmap[h1]))
            for t in common:
                m = state["next_id"]
                state["next_id"] += 1
                fmap[m] = t
                triangles.append(tuple(sorted((h0, h1, m))))
                holes.append((h0, m) + hole[1:])
                search()
                holes.pop()
                triangles.pop()
                del fmap[m]
                state["next_id"] -= 1
        finally:
            holes.append(hole)

    search()
    holes.pop()

    if not state["found"]:
        return OracleResult(None, (), state["explored"], state["pruned"])
    best = state["best"]
    by_key = {}
    for area, key, diag in state["found"]:
        if area == best:
            by_key.setdefault(key, diag)
    diagrams = tuple(diag for _, diag in sorted(by_key.items()))
    return OracleResult(best, diagrams, state["explored"], False)


# -- canonical labelling of interior vertices -----------------------------------


def _canonical_key(tris, fmap, n_boundary):
    """Relabel interior vertices canonically so isomorphic fillings collide.

    Boundary ids are fixed anchors.  Interior vertices are refined by their
    image and neighbour signatures; remaining ties are broken by trying the
    few permutations within each signature class.
    """
    interior = sorted({v for t in tris for v in t if v >= n_boundary})
    if not interior:
        return (tuple(sorted(tris)), ())
    adj = defaultdict(set)
    for t in tris:
        a, b, c = t
        adj[a] |= {b, c}
        adj[b] |= {a, c}
        adj[c] |= {a, b}
    sig = {v: (fmap[v],) for v in interior}
    for _ in range(len(interior)):
        nxt = {}
        for v in interior:
            nb = tuple(
                sorted(
                    ("b", w) if w < n_boundary else ("i",) + sig[w]
                    for w in adj[v]
                )
            )
            nxt[v] = (fmap[v], nb)
        if len(set(nxt.values())) == len(set(sig.values())) and all(
            (sig[u] == sig[v]) == (nxt[u] == nxt[v])
            for u in interior
            for v in interior
        ):
            break
        sig = nxt
    classes: dict[tuple, list[int]] = defaultdict(list)
    for v in interior:
        classes[sig[v]].append(v)
    ordered_classes = [sorted(vs) for _, vs in sorted(classes.items())]
    best_key = None
    for perm_combo in product(*(permutations(vs) for vs in ordered_classes)):
        relabel = {}
        counter = n_boundary
        for group in perm_combo:
            for v in group:
                relabel[v] = counter
                counter += 1
        new_tris = tuple(
            sorted(tuple(sorted(relabel.get(x, x) for x in t)) for t in tris)
        )
        new_imgs = tuple(
            sorted((relabel[v], fmap[v]) for v in interior)
        )
        key = (new_tris, new_imgs)
        if best_key is None or key < best_key:
            best_key = key
    return best_key
