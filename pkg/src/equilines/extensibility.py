"""Regularity analysis of candidate base graphs: the parameter triple
(t, s, sbar), complement duality, strongly regular parameters, and the
one-point extension.

A graph on Y qualifies (is "extensible") when, seen from every vertex y:
the graph has diameter at most 2 (exactly 2 unless nothing lies at distance
2), y has exactly 2s neighbors and 2*sbar vertices at distance 2, each
neighbor of y meets the distance-2 set in sbar points and the neighbor set
in t points, each distance-2 vertex meets both sets in s points, and every
edge lies in exactly t = 2s - sbar - 1 triangles.  Such a graph is strongly
regular of type (|Y|, 2s, t, s), and adjoining one isolated vertex yields a
representative of a switching class whose group acts doubly transitively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SeidelGraph


@dataclass(frozen=True)
class ExtParams:
    """Parameters (t, s, sbar); n is the size of the one-point extension."""

    t: int
    s: int
    sbar: int

    @property
    def n(self) -> int:
        return 2 + 2 * self.s + 2 * self.sbar

    @property
    def srg(self) -> tuple:
        """Strongly regular type (v, k, lambda, mu) of the base graph."""
        return (self.n - 1, 2 * self.s, self.t, self.s)

    def as_tuple(self) -> tuple:
        return (self.t, self.s, self.sbar)


def extensible_params(g: SeidelGraph):
    """The parameter triple of g if all regularity conditions hold, else None.

    Every condition is verified at every base vertex; no symmetry of g is
    assumed.
    """
    n = g.n
    degs = {g.degree(i) for i in range(n)}
    if len(degs) != 1:
        return None
    k = degs.pop()
    if k % 2:
        return None
    s = k // 2
    full = (1 << n) - 1

    # distance-2 set per vertex, rejecting anything farther away
    sbar = None
    for y in range(n):
        n1 = g.adj[y]
        reach = 0
        row = n1
        while row:
            b = row & -row
            reach |= g.adj[b.bit_length() - 1]
            row ^= b
        n2 = reach & ~n1 & ~(1 << y) & full
        if (full & ~n1 & ~n2 & ~(1 << y)) != 0:
            return None   # diameter exceeds 2 (or the graph is disconnected)
        count2 = n2.bit_count()
        if count2 % 2:
            return None
        if sbar is None:
            sbar = count2 // 2
        elif sbar != count2 // 2:
            return None
        t = 2 * s - sbar - 1
        if t < 0:
            return None
        # neighbors of y: t links inside, sbar links across
        row = n1
        while row:
            b = row & -row
            z = b.bit_length() - 1
            row ^= b
            if (g.adj[z] & n1).bit_count() != t:
                return None
            if (g.adj[z] & n2).bit_count() != sbar:
                return None
        # distance-2 vertices: s links into each set
        row = n2
        while row:
            b = row & -row
            z = b.bit_length() - 1
            row ^= b
            if (g.adj[z] & n1).bit_count() != s:
                return None
            if (g.adj[z] & n2).bit_count() != s:
                return None
    t = 2 * s - sbar - 1
    # every edge in exactly t triangles
    for i in range(n):
        row = g.adj[i] >> (i + 1)
        while row:
            b = row & -row
            j = b.bit_length() - 1 + i + 1
            row ^= b
            if (g.adj[i] & g.adj[j]).bit_count() != t:
                return None
    if n != 1 + 2 * s + 2 * sbar:
        return None
    params = ExtParams(t, s, sbar)
    v, kk, lam, mu = params.srg
    if (v - kk - 1) * mu != kk * (kk - lam - 1):
        raise RuntimeError("parameter consistency identity violated")
    return params


def complement_params(p: ExtParams) -> ExtParams:
    """Parameters of the complement: s and sbar swap, t + tbar = s + sbar - 2."""
    return ExtParams(p.s + p.sbar - 2 - p.t, p.sbar, p.s)


def extend(g: SeidelGraph) -> SeidelGraph:
    """Adjoin one isolated vertex (new label n) to an extensible graph."""
    if extensible_params(g) is None:
        raise ValueError("graph is not extensible")
    return SeidelGraph(g.n + 1, g.edges())


def srg_params(g: SeidelGraph):
    """Strongly regular parameters (v, k, lambda, mu) of g, or None.

    Complete and empty graphs are excluded, as usual.
    """
    n = g.n
    degs = {g.degree(i) for i in range(n)}
    if len(degs) != 1:
        return None
    k = degs.pop()
    if k == 0 or k == n - 1:
        return None
    lam = mu = None
    for i in range(n):
        for j in range(i + 1, n):
            common = (g.adj[i] & g.adj[j]).bit_count()
            if g.adjacent(i, j):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    return (n, k, lam, mu)
