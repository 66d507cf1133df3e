"""
Planar link diagrams in PD form.

A crossing is stored as ``(a, b, c, d, sign)``: the four edge labels listed
counterclockwise starting from the incoming under-edge, so ``a -> c`` is the
under strand. For a positive crossing the over strand runs ``d -> b``, for a
negative one ``b -> d``. Every edge label occurs in exactly two crossing
slots, once as an incoming end and once as an outgoing end. Components with
no crossings at all are kept as a bare count in ``free_loops``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .braids import BraidWord, underlying_permutation
from .errors import DomainError, InconsistencyError, MalformedInputError


class Crossing(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def under_in(self) -> int:
        return self.a

    @property
    def under_out(self) -> int:
        return self.c

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d

    def incoming_slots(self) -> tuple[int, int]:
        return (0, 3) if self.sign > 0 else (0, 1)

    def relabel(self, f) -> Crossing:
        return Crossing(f(self.a), f(self.b), f(self.c), f(self.d), self.sign)


def crossing_from_roles(under_in, under_out, over_in, over_out, sign) -> Crossing:
    if sign > 0:
        return Crossing(under_in, over_out, under_out, over_in, 1)
    return Crossing(under_in, over_in, under_out, over_out, -1)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(Crossing(*c) for c in self.crossings))

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def labels(self) -> set[int]:
        return {x for c in self.crossings for x in c.labels}

    def positions(self) -> dict[int, list[tuple[int, int]]]:
        """label -> the two (crossing index, slot) places it occupies."""
        if "positions" not in self._cache:
            pos = defaultdict(list)
            for i, c in enumerate(self.crossings):
                for s, x in enumerate(c.labels):
                    pos[x].append((i, s))
            self._cache["positions"] = dict(pos)
        return self._cache["positions"]

    def successor(self) -> dict[int, int]:
        """Edge -> the edge following it along the link orientation."""
        nxt = {}
        for c in self.crossings:
            nxt[c.under_in] = c.under_out
            nxt[c.over_in] = c.over_out
        return nxt

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def validate(self) -> None:
        """Check label multiplicity, orientation consistency and planarity."""
        pos = self.positions()
        heads, tails = defaultdict(int), defaultdict(int)
        for c in self.crossings:
            if c.sign not in (1, -1):
                raise MalformedInputError(f"crossing sign must be +1 or -1: {c}")
            heads[c.under_in] += 1
            heads[c.over_in] += 1
            tails[c.under_out] += 1
            tails[c.over_out] += 1
        for x, places in pos.items():
            if len(places) != 2:
                raise MalformedInputError(f"edge label {x} appears {len(places)} times, expected 2")
            if heads[x] != 1 or tails[x] != 1:
                raise MalformedInputError(f"edge label {x} is not oriented consistently")
        if self.free_loops < 0:
            raise MalformedInputError("negative free loop count")
        for comp in graph_components(self):
            nf = len({f for f in face_of_dart(self).values() if f in _faces_touching(self, comp)})
            if nf != len(comp) + 2:
                raise MalformedInputError("diagram is not planar (Euler characteristic check failed)")


def _faces_touching(d: LinkDiagram, comp: set[int]) -> set[int]:
    fod = face_of_dart(d)
    return {fod[(i, s)] for i in comp for s in range(4)}


# --- faces -------------------------------------------------------------------


def other_end(d: LinkDiagram, i: int, s: int) -> tuple[int, int]:
    p, q = d.positions()[d.crossings[i].labels[s]]
    return q if p == (i, s) else p


def faces(d: LinkDiagram) -> list[list[tuple[int, int]]]:
    """Faces as cycles of darts ``(crossing, slot)``.

    Leaving crossing i through slot s and arriving at slot t of crossing j, the
    walk continues through slot t-1 of j; the corner between slots t-1 and t
    lies in the face. So dart (j, m) also names the corner between slots m and
    m+1 of crossing j.
    """
    if "faces" in d._cache:
        return d._cache["faces"]
    seen = set()
    out = []
    for i in range(len(d.crossings)):
        for s in range(4):
            if (i, s) in seen:
                continue
            face = []
            cur = (i, s)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                j, t = other_end(d, *cur)
                cur = (j, (t - 1) % 4)
            out.append(face)
    d._cache["faces"] = out
    return out


def face_of_dart(d: LinkDiagram) -> dict[tuple[int, int], int]:
    if "face_of_dart" not in d._cache:
        d._cache["face_of_dart"] = {dart: k for k, f in enumerate(faces(d)) for dart in f}
    return d._cache["face_of_dart"]


def graph_components(d: LinkDiagram) -> list[set[int]]:
    """Connected components of the crossing graph (free loops excluded)."""
    if "graph_components" in d._cache:
        return d._cache["graph_components"]
    pos = d.positions()
    parent = list(range(len(d.crossings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for places in pos.values():
        (i, _), (j, _) = places
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups = defaultdict(set)
    for i in range(len(d.crossings)):
        groups[find(i)].add(i)
    out = [groups[k] for k in sorted(groups)]
    d._cache["graph_components"] = out
    return out


def split_piece_count(d: LinkDiagram) -> int:
    """Number of disjoint pieces of the diagram, free loops included."""
    return len(graph_components(d)) + d.free_loops


def component_cycles(d: LinkDiagram) -> list[list[int]]:
    """Link components as edge cycles, each started at its smallest label."""
    nxt = d.successor()
    seen = set()
    out = []
    for start in sorted(nxt):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = nxt[x]
        out.append(cyc)
    return out


def component_count(d: LinkDiagram) -> int:
    return len(component_cycles(d)) + d.free_loops


def canonical_relabel(d: LinkDiagram) -> LinkDiagram:
    """Renumber edges 1, 2, ... along each component in traversal order."""
    mapping = {}
    for cyc in component_cycles(d):
        for x in cyc:
            mapping[x] = len(mapping) + 1
    crossings = sorted(c.relabel(mapping.__getitem__) for c in d.crossings)
    return LinkDiagram(tuple(crossings), d.free_loops)


# --- building diagrams from braids -------------------------------------------

# Geometric slots around a braid crossing, counterclockwise.
_SE, _NE, _NW, _SW = 0, 1, 2, 3
_SLOT_VEC = {_SE: (1, -1), _NE: (1, 1), _NW: (-1, 1), _SW: (-1, -1)}


def _braid_diagram(b: BraidWord, closing: Iterable[tuple[tuple, tuple]]) -> LinkDiagram:
    """Diagram of ``b`` drawn bottom to top, with terminals joined by ``closing``.

    Nodes are crossing slots ``("x", k, slot)`` and endpoints ``("l", p)`` /
    ``("u", p)``. Each component is oriented upward along the braid column it
    meets at its lowest-index bottom endpoint.
    """
    adj = defaultdict(list)  # node -> [(segment id, other node)]
    seg = 0

    def join(u, v):
        nonlocal seg
        adj[u].append((seg, v))
        adj[v].append((seg, u))
        seg += 1

    current = {p: ("l", p) for p in range(1, b.n + 1)}
    over = []
    for k, x in enumerate(b.letters):
        i = abs(x)
        join(current[i], ("x", k, _SW))
        join(current[i + 1], ("x", k, _SE))
        current[i], current[i + 1] = ("x", k, _NW), ("x", k, _NE)
        over.append((_SW, _NE) if x > 0 else (_SE, _NW))
    for p in range(1, b.n + 1):
        join(current[p], ("u", p))
    for u, v in closing:
        join(u, v)

    def walk(node, via):
        """Follow segments from ``node`` (leaving along ``via``) to the next slot."""
        seen_terms = []
        sid, nxt = via
        while nxt[0] != "x":
            seen_terms.append(nxt)
            a, c = adj[nxt]
            sid, nxt = c if a[0] == sid else a
            if nxt == node and nxt[0] != "x":
                return None, seen_terms
        return nxt, seen_terms

    partner = {}
    for k in range(len(b.letters)):
        for s in range(4):
            node = ("x", k, s)
            if node not in partner:
                other, _ = walk(node, adj[node][0])
                partner[node] = other
                partner[other] = node

    label_of, incoming = {}, {}
    label = 0
    free = 0
    free_seen = set()
    for p in range(1, b.n + 1):
        start = ("l", p)
        if start in free_seen:
            continue
        head, terms = walk(start, adj[start][0])
        if head is None:
            free += 1
            free_seen.update(terms)
            free_seen.add(start)
            continue
        cur = head
        while cur not in label_of:
            label += 1
            label_of[partner[cur]] = label
            incoming[partner[cur]] = False
            label_of[cur] = label
            incoming[cur] = True
            cur = partner[("x", cur[1], (cur[2] + 2) % 4)]

    crossings = []
    for k in range(len(b.letters)):
        o_pair = over[k]
        u_pair = tuple(s for s in range(4) if s not in o_pair)
        o_in = next(s for s in o_pair if incoming[("x", k, s)])
        u_in = next(s for s in u_pair if incoming[("x", k, s)])
        o_out, u_out = (o_in + 2) % 4, (u_in + 2) % 4
        ov = [q - r for q, r in zip(_SLOT_VEC[o_out], _SLOT_VEC[o_in])]
        uv = [q - r for q, r in zip(_SLOT_VEC[u_out], _SLOT_VEC[u_in])]
        sign = 1 if ov[0] * uv[1] - ov[1] * uv[0] > 0 else -1
        labs = tuple(label_of[("x", k, (u_in + j) % 4)] for j in range(4))
        crossings.append(Crossing(*labs, sign))
    return LinkDiagram(tuple(crossings), free)


def closure_diagram(beta: BraidWord) -> LinkDiagram:
    """Standard closure: top endpoint u_i joined to bottom endpoint l_i."""
    return _braid_diagram(beta, [(("u", p), ("l", p)) for p in range(1, beta.n + 1)])


def circular_plat_diagram(b: BraidWord) -> LinkDiagram:
    """Circular plat closure: nested caps u_i--u_{n+1-i} and l_i--l_{n+1-i}."""
    n = b.n
    if n % 2:
        raise DomainError(f"circular plat closure needs an even strand count, got {n}")
    caps = []
    for p in range(1, n // 2 + 1):
        caps.append((("u", p), ("u", n + 1 - p)))
        caps.append((("l", p), ("l", n + 1 - p)))
    return _braid_diagram(b, caps)


def embed_for_plat(beta: BraidWord) -> BraidWord:
    """Same letters on strands 1..g+1 of B_{2g+2}; C of the result is cl(beta)."""
    if beta.n < 2:
        raise DomainError("embed_for_plat needs at least 2 strands (g >= 1)")
    return BraidWord(2 * beta.n, beta.letters)


def closure_component_count(beta: BraidWord) -> int:
    """Components of cl(beta), read off the permutation alone."""
    return underlying_permutation(beta).cycle_count()


# --- PD text -----------------------------------------------------------------

_PD_LINE = re.compile(r"^X([+\-\u2212])\[(\d+),(\d+),(\d+),(\d+)\]$")


def to_pd_text(d: LinkDiagram) -> str:
    d = canonical_relabel(d)
    lines = [f"X{'+' if c.sign > 0 else '-'}[{c.a},{c.b},{c.c},{c.d}]" for c in d.crossings]
    lines += ["O"] * d.free_loops
    return "".join(line + "\n" for line in lines)


def from_pd_text(text: str) -> LinkDiagram:
    crossings = []
    free = 0
    for raw in text.splitlines():
        line = raw.strip().replace(" ", "")
        if not line or line.startswith("#"):
            continue
        if line == "O":
            free += 1
            continue
        m = _PD_LINE.match(line)
        if m is None:
            raise MalformedInputError(f"cannot parse PD line {raw!r}")
        sign = 1 if m.group(1) == "+" else -1
        labs = [int(m.group(k)) for k in range(2, 6)]
        if min(labs) < 1:
            raise MalformedInputError(f"arc labels must be positive: {raw!r}")
        crossings.append(Crossing(*labs, sign))
    if not crossings and not free:
        raise MalformedInputError("PD text describes an empty diagram")
    d = LinkDiagram(tuple(crossings), free)
    d.validate()
    return d


def check_planar(d: LinkDiagram) -> None:
    try:
        d.validate()
    except MalformedInputError as exc:
        raise InconsistencyError(str(exc)) from exc
