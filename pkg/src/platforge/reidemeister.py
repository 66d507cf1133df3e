"""
Reidemeister simplification of PD diagrams and unknot certificates.

``simplify`` first applies R1 and R2 reductions until none is left, then runs
a breadth-first search over R3 moves (each followed by the same reductions),
restarting from any strictly smaller diagram it finds. The search visits at
most ``budget`` states and is deterministic.
"""

from __future__ import annotations

import os
from collections import deque
from typing import Iterator

from .diagrams import (
    Crossing,
    LinkDiagram,
    component_count,
    crossing_from_roles,
    faces,
    graph_components,
)
from .errors import DomainError

DEFAULT_BUDGET = 100_000

CERTIFIED = "certified_unknot"
INCONCLUSIVE = "inconclusive"


def default_budget() -> int:
    raw = os.environ.get("PLATFORGE_BUDGET")
    if raw is None or raw == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"PLATFORGE_BUDGET must be a nonnegative integer, got {raw!r}")
    if value < 0:
        raise DomainError(f"PLATFORGE_BUDGET must be a nonnegative integer, got {raw!r}")
    return value


# --- crossing removal --------------------------------------------------------


def remove_crossings(d: LinkDiagram, drop: set[int]) -> LinkDiagram:
    """Delete crossings, letting both strands pass straight through each one.

    Valid exactly when the deleted crossings form an R1 kink or an R2 bigon.
    Edge classes that no longer touch any crossing become free loops.
    """
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    touched = set()
    for i in drop:
        c = d.crossings[i]
        union(c.a, c.c)
        union(c.b, c.d)
        touched.update(c.labels)
    keep = [c.relabel(find) for i, c in enumerate(d.crossings) if i not in drop]
    alive = {x for c in keep for x in c.labels}
    new_loops = {find(x) for x in touched} - alive
    return LinkDiagram(tuple(keep), d.free_loops + len(new_loops))


def find_r1(d: LinkDiagram) -> int | None:
    for i, c in enumerate(d.crossings):
        if len(set(c.labels)) < 4:
            return i
    return None


def find_r2(d: LinkDiagram) -> tuple[int, int] | None:
    for face in faces(d):
        if len(face) != 2:
            continue
        (x, s), (y, t) = face
        if x == y:
            continue
        # Slots 1 and 3 carry the over strand, 0 and 2 the under strand.
        # Around a bigon the edge leaving x through s enters y through t + 1.
        if s % 2 == (t + 1) % 2:
            return (x, y)
    return None


def reduce_monotone(d: LinkDiagram) -> LinkDiagram:
    """Apply R1 (preferred) and R2 reductions until neither applies."""
    while True:
        i = find_r1(d)
        if i is not None:
            d = remove_crossings(d, {i})
            continue
        pair = find_r2(d)
        if pair is not None:
            d = remove_crossings(d, set(pair))
            continue
        return d


# --- R3 ----------------------------------------------------------------------


def r3_moves(d: LinkDiagram) -> list[tuple[tuple[int, int], ...]]:
    """Triangular faces admitting an R3 move, ordered by their edge labels."""
    moves = []
    for face in faces(d):
        if len(face) != 3:
            continue
        xs = {i for i, _ in face}
        if len(xs) != 3:
            continue
        labels = [d.crossings[i].labels[s] for i, s in face]
        if len(set(labels)) != 3:
            continue
        ok = False
        for i, s in face:
            j, t = _other(d, i, s)
            if s % 2 == t % 2:
                ok = True
                break
        if ok:
            moves.append((tuple(sorted(labels)), tuple(face)))
    moves.sort()
    return [m for _, m in moves]


def _other(d: LinkDiagram, i: int, s: int) -> tuple[int, int]:
    p, q = d.positions()[d.crossings[i].labels[s]]
    return q if p == (i, s) else p


def apply_r3(d: LinkDiagram, face: tuple[tuple[int, int], ...]) -> LinkDiagram:
    """Slide one strand of a triangular face across the opposite crossing.

    Each of the three strands meets the other two in the reverse order
    afterwards; every pair keeps its over/under relation and its sign.
    """
    tri = {i for i, _ in face}
    roles = {}  # crossing -> dict of role -> label, rebuilt below
    new_roles = {i: {} for i in tri}
    for i, s in face:
        side = d.crossings[i].labels[s]
        (p, ps), (q, qs) = d.positions()[side]
        cp, cq = d.crossings[p], d.crossings[q]
        # orient the side: tail is where it is an outgoing label
        if side in (cp.under_out, cp.over_out) and p != q:
            tail, tslot, head, hslot = p, ps, q, qs
        else:
            tail, tslot, head, hslot = q, qs, p, ps
        ext_in = d.crossings[tail].labels[(tslot + 2) % 4]
        ext_out = d.crossings[head].labels[(hslot + 2) % 4]
        t_over = tslot % 2 == 1
        h_over = hslot % 2 == 1
        # after the move the strand meets `head`'s partner first, then `tail`'s
        new_roles[head][("over" if h_over else "under", "in")] = ext_in
        new_roles[head][("over" if h_over else "under", "out")] = side
        new_roles[tail][("over" if t_over else "under", "in")] = side
        new_roles[tail][("over" if t_over else "under", "out")] = ext_out
    del roles
    out = []
    for i, c in enumerate(d.crossings):
        if i not in tri:
            out.append(c)
            continue
        r = new_roles[i]
        out.append(
            crossing_from_roles(
                r[("under", "in")], r[("under", "out")], r[("over", "in")], r[("over", "out")], c.sign
            )
        )
    return LinkDiagram(tuple(out), d.free_loops)


# --- canonical keys ----------------------------------------------------------


def canonical_key(d: LinkDiagram) -> tuple:
    """A relabelling-invariant key for connected diagrams (used for dedup)."""
    nxt = d.successor()
    if not nxt:
        return ((), d.free_loops)
    at = {}
    for c in d.crossings:
        at[c.under_in] = c
        at[c.over_in] = c
    best = None
    for start in nxt:
        mapping = {}
        queue = deque([start])
        while queue:
            s = queue.popleft()
            if s in mapping:
                continue
            x = s
            while x not in mapping:
                mapping[x] = len(mapping) + 1
                x = nxt[x]
            x = s
            while True:
                c = at[x]
                other = c.over_in if x == c.under_in else c.under_in
                if other not in mapping:
                    queue.append(other)
                x = nxt[x]
                if x == s:
                    break
        for x in sorted(nxt):
            if x not in mapping:
                mapping[x] = len(mapping) + 1
        key = tuple(sorted(c.relabel(mapping.__getitem__) for c in d.crossings))
        if best is None or key < best:
            best = key
    return (best, d.free_loops)


# --- search ------------------------------------------------------------------


def _neighbours(d: LinkDiagram) -> Iterator[LinkDiagram]:
    for face in r3_moves(d):
        yield reduce_monotone(apply_r3(d, face))


def simplify(d: LinkDiagram, budget: int | None = None) -> LinkDiagram:
    """Smallest diagram reachable by R1/R2 reductions and up to ``budget`` R3 states."""
    if budget is None:
        budget = default_budget()
    if budget < 0:
        raise DomainError("budget must be nonnegative")
    best = reduce_monotone(d)
    if budget == 0 or len(best) == 0:
        return best
    explored = 0
    start = best
    while explored < budget:
        queue = deque([start])
        seen = {canonical_key(start)}
        improved = None
        while queue and explored < budget:
            s = queue.popleft()
            explored += 1
            for t in _neighbours(s):
                if len(t) < len(best):
                    improved = t
                    break
                k = canonical_key(t)
                if k not in seen:
                    seen.add(k)
                    queue.append(t)
            if improved is not None:
                break
        if improved is None:
            break
        best = start = improved
        if len(best) == 0:
            break
    return best


def certify_unknot(d: LinkDiagram, budget: int | None = None) -> str:
    """``certified_unknot`` when simplification reaches a crossingless loop."""
    if component_count(d) != 1:
        raise DomainError(
            f"unknot certification needs a knot diagram, got {component_count(d)} components"
        )
    s = simplify(d, budget)
    if len(s) == 0 and s.free_loops == 1:
        return CERTIFIED
    return INCONCLUSIVE


def is_split_diagram(d: LinkDiagram) -> bool:
    return len(graph_components(d)) + d.free_loops > 1
