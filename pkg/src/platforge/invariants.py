"""
Exact invariants of PD diagrams.

Two independent routes to the determinant are kept on purpose: the Alexander
polynomial at t = -1 (Wirtinger presentation, Fox calculus) and the Goeritz
matrix of a checkerboard colouring, whose Smith form also presents H_1 of the
double branched cover.
"""

from __future__ import annotations

from collections import defaultdict, deque
from typing import Optional

from .diagrams import LinkDiagram, component_count, face_of_dart, graph_components
from .errors import DomainError, InconsistencyError, ResourceLimitError
from .laurent import ONE, ZERO, LaurentPoly
from .linalg import AbelianGroupPresentation, bareiss_det, rational_solve_interpolation
from .reidemeister import certify_unknot, default_budget, is_split_diagram

BRACKET_CROSSING_LIMIT = 14


def _union_find(labels):
    parent = {x: x for x in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    return find, union


# --- Alexander polynomial ----------------------------------------------------


def alexander_matrix_rows(d: LinkDiagram) -> tuple[list[dict[int, tuple[int, int]]], list[int]]:
    """Fox-calculus rows of the Wirtinger presentation, one per crossing.

    Each row maps an over-arc index to (constant, t-coefficient). Returns the
    rows and the over-arc representatives.
    """
    find, union = _union_find(d.labels())
    for c in d.crossings:
        union(c.over_in, c.over_out)
    arcs = sorted({find(x) for x in d.labels()})
    index = {a: k for k, a in enumerate(arcs)}
    rows = []
    for c in d.crossings:
        row: dict[int, list[int]] = defaultdict(lambda: [0, 0])
        k, i, j = index[find(c.over_in)], index[find(c.under_in)], index[find(c.under_out)]
        row[k][0] += 1
        row[k][1] -= 1
        if c.sign > 0:
            row[i][1] += 1
            row[j][0] -= 1
        else:
            row[i][0] -= 1
            row[j][1] += 1
        rows.append({key: tuple(v) for key, v in row.items()})
    return rows, arcs


def alexander_polynomial(d: LinkDiagram) -> LaurentPoly:
    """Normalised one-variable Alexander polynomial; 0 for split diagrams."""
    if is_split_diagram(d):
        return ZERO
    c = len(d)
    if c == 0:
        return ONE if d.free_loops == 1 else ZERO
    rows, arcs = alexander_matrix_rows(d)
    if len(arcs) != c:
        # some component never passes under: it lifts off, the link is split
        return ZERO
    # drop the last relation and the first generator
    minor_rows = rows[:-1]
    size = c - 1

    def det_at(t: int) -> int:
        m = [[0] * size for _ in range(size)]
        for r, row in enumerate(minor_rows):
            for k, (a0, a1) in row.items():
                if k >= 1:
                    m[r][k - 1] += a0 + a1 * t
        return bareiss_det(m)

    xs = list(range(c))
    ys = [det_at(x) for x in xs]
    coeffs = rational_solve_interpolation(xs, ys)
    if any(q.denominator != 1 for q in coeffs):
        raise InconsistencyError("Alexander interpolation produced non-integer coefficients")
    return LaurentPoly.from_list([int(q) for q in coeffs]).normalized()


# --- Goeritz matrix / double branched cover ----------------------------------


def checkerboard(d: LinkDiagram) -> dict[int, int]:
    """Face index -> colour in {0, 1}; adjacent faces get different colours."""
    fod = face_of_dart(d)
    pos = d.positions()
    adj = defaultdict(set)
    for (i, s), f in fod.items():
        p, q = pos[d.crossings[i].labels[s]]
        other = q if p == (i, s) else p
        adj[f].add(fod[other])
    colour = {}
    for comp in graph_components(d):
        seed = fod[(min(comp), 0)]
        colour[seed] = 0
        queue = deque([seed])
        while queue:
            f = queue.popleft()
            for g in sorted(adj[f]):
                if g not in colour:
                    colour[g] = 1 - colour[f]
                    queue.append(g)
                elif colour[g] == colour[f]:
                    raise InconsistencyError("checkerboard colouring failed: diagram is not planar")
    return colour


def goeritz_matrices(d: LinkDiagram) -> list[list[list[int]]]:
    """One reduced Goeritz matrix per connected piece of the crossing graph.

    Shaded faces are those coloured like the face at corner 0 of the piece's
    first crossing. At a crossing whose shaded corners are 0 and 2 the type is
    +1, otherwise -1.
    """
    fod = face_of_dart(d)
    colour = checkerboard(d)
    out = []
    for comp in graph_components(d):
        comp_faces = {fod[(i, s)] for i in comp for s in range(4)}
        if len(comp_faces) != len(comp) + 2:
            raise InconsistencyError("Euler characteristic check failed for a diagram piece")
        shaded = sorted(f for f in comp_faces if colour[f] == 0)
        index = {f: k for k, f in enumerate(shaded)}
        m = len(shaded)
        g = [[0] * m for _ in range(m)]
        for i in sorted(comp):
            if colour[fod[(i, 0)]] == 0:
                f1, f2, eta = fod[(i, 0)], fod[(i, 2)], 1
            else:
                f1, f2, eta = fod[(i, 1)], fod[(i, 3)], -1
            if f1 == f2:
                continue
            a, b = index[f1], index[f2]
            g[a][b] -= eta
            g[b][a] -= eta
            g[a][a] += eta
            g[b][b] += eta
        out.append([row[1:] for row in g[1:]])
    return out


def double_cover_homology(d: LinkDiagram) -> AbelianGroupPresentation:
    """H_1 of the double branched cover, presented by Goeritz matrices.

    Disjoint pieces of the diagram contribute a connected sum, plus one free
    summand per extra piece.
    """
    pieces = [AbelianGroupPresentation.from_relations(g, len(g)) for g in goeritz_matrices(d)]
    extra = max(len(graph_components(d)) + d.free_loops - 1, 0)
    return AbelianGroupPresentation.direct_sum(pieces, free_rank=extra)


def goeritz_determinant(d: LinkDiagram) -> int:
    if is_split_diagram(d):
        return 0
    mats = goeritz_matrices(d)
    if not mats:
        return 1
    return abs(bareiss_det(mats[0]))


def determinant(d: LinkDiagram) -> int:
    """|Delta(-1)|, checked against |det G| and the order of the cover's H_1."""
    delta = alexander_polynomial(d)
    via_alexander = abs(delta(-1)) if not delta.is_zero() else 0
    via_goeritz = goeritz_determinant(d)
    order = double_cover_homology(d).order()
    if not via_alexander == via_goeritz == order:
        raise InconsistencyError(
            f"determinant routes disagree: Alexander {via_alexander}, Goeritz {via_goeritz}, "
            f"|H_1| {order}"
        )
    return via_alexander


# --- Kauffman bracket --------------------------------------------------------


def kauffman_bracket(d: LinkDiagram, limit: int = BRACKET_CROSSING_LIMIT) -> LaurentPoly:
    """State sum <D> in the variable A, with <O> = 1 and loop value -A^2 - A^-2."""
    c = len(d)
    if c > limit:
        raise ResourceLimitError(
            f"Kauffman bracket limited to {limit} crossings (got {c}); use the Alexander route"
        )
    labels = sorted(d.labels())
    idx = {x: k for k, x in enumerate(labels)}
    pairs_a = [((idx[x.a], idx[x.b]), (idx[x.c], idx[x.d])) for x in d.crossings]
    pairs_b = [((idx[x.a], idx[x.d]), (idx[x.b], idx[x.c])) for x in d.crossings]
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for state in range(1 << c):
        parent = list(range(len(labels)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        n_a = 0
        for k in range(c):
            if state >> k & 1:
                n_a += 1
                joins = pairs_a[k]
            else:
                joins = pairs_b[k]
            for u, v in joins:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        loops = sum(1 for x in range(len(labels)) if find(x) == x) + d.free_loops
        counts[(2 * n_a - c, loops)] += 1
    loop_value = LaurentPoly({2: -1, -2: -1})
    total = ZERO
    powers = {}
    for (exp, loops), mult in counts.items():
        if loops - 1 not in powers:
            powers[loops - 1] = loop_value ** (loops - 1)
        total = total + LaurentPoly({exp: mult}) * powers[loops - 1]
    return total


def normalized_bracket(d: LinkDiagram, limit: int = BRACKET_CROSSING_LIMIT) -> LaurentPoly:
    """(-A^3)^(-writhe) <D>: an isotopy invariant, 1 on the unknot."""
    w = d.writhe()
    return kauffman_bracket(d, limit) * LaurentPoly({-3 * w: (-1) ** (w % 2)})


# --- report ------------------------------------------------------------------


def invariant_report(
    d: LinkDiagram, certify: bool = False, budget: Optional[int] = None
) -> dict:
    if len(d) == 0 and d.free_loops == 0:
        raise DomainError("the empty diagram has no invariants to report")
    delta = alexander_polynomial(d)
    report = {
        "components": component_count(d),
        "crossings": len(d),
        "alexander": delta.format("t"),
        "determinant": determinant(d),
        "double_cover_h1": double_cover_homology(d).invariant_factors(),
        "unknot_certificate": None,
    }
    if certify:
        if report["components"] == 1:
            report["unknot_certificate"] = certify_unknot(
                d, default_budget() if budget is None else budget
            )
        else:
            report["unknot_certificate"] = "inconclusive"
    return report


__all__ = [
    "alexander_polynomial",
    "determinant",
    "double_cover_homology",
    "goeritz_matrices",
    "invariant_report",
    "is_split_diagram",
    "kauffman_bracket",
    "normalized_bracket",
]
