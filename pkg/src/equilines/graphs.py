"""Graphs carried as +1/-1 Seidel matrices, with switching and localization.

Vertices are 0..n-1.  The matrix E of a graph has +1 on the diagonal and
E[i][j] = -1 exactly when i ~ j.  Switching by a sign vector nu replaces
E[i][j] with nu[i]*nu[j]*E[i][j]; graphs related this way form a switching
class.  Localizing at a vertex j picks the unique member of the class in
which j is isolated, which makes switching equivalence decidable by a single
comparison of localized graphs.

The product of the three pair signs over a vertex triple is invariant under
switching (each nu entry appears squared), so the triple-sign table is a
cheap fingerprint of the switching class.
"""

from __future__ import annotations

from itertools import combinations


class SeidelGraph:
    """Immutable simple graph; adjacency stored as one bitmask per vertex."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise ValueError("need at least one vertex")
        adj = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for n={n}")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def _from_adj(cls, n, adj):
        g = object.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        return g

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def neighbors(self, i: int) -> frozenset:
        return frozenset(_bits(self.adj[i]))

    def edges(self) -> list:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if (self.adj[i] >> j) & 1]

    def edge_count(self) -> int:
        return sum(self.adj[i].bit_count() for i in range(self.n)) // 2

    def seidel_entry(self, i: int, j: int) -> int:
        """Entry E[i][j]: +1 on the diagonal, -1 on edges, +1 on non-edges."""
        if i == j:
            return 1
        return -1 if self.adjacent(i, j) else 1

    def seidel_matrix(self) -> list:
        return [[self.seidel_entry(i, j) for j in range(self.n)]
                for i in range(self.n)]

    def __eq__(self, other):
        return (isinstance(other, SeidelGraph)
                and self.n == other.n and self.adj == other.adj)

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"SeidelGraph({self.n}, {self.edges()})"


def _bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def check_switching_vector(nu, n: int) -> tuple:
    """Validate a switching vector: length n, entries in {-1, +1}."""
    nu = tuple(nu)
    if len(nu) != n:
        raise ValueError(f"switching vector has length {len(nu)}, graph has {n} vertices")
    if any(v not in (-1, 1) for v in nu):
        raise ValueError("switching vector entries must be -1 or +1")
    return nu


def apply_switching(g: SeidelGraph, nu) -> SeidelGraph:
    """Switch g by nu: the pair (i,j) flips adjacency iff nu[i]*nu[j] = -1."""
    nu = check_switching_vector(nu, g.n)
    minus = 0
    for i, v in enumerate(nu):
        if v < 0:
            minus |= 1 << i
    full = (1 << g.n) - 1
    adj = []
    for i in range(g.n):
        flip = (full ^ minus) if (minus >> i) & 1 else minus
        flip &= ~(1 << i)
        adj.append(g.adj[i] ^ flip)
    return SeidelGraph._from_adj(g.n, adj)


def localization_vector(g: SeidelGraph, j: int) -> tuple:
    """The switching vector that isolates j: -1 exactly on the neighbors of j."""
    if not (0 <= j < g.n):
        raise ValueError(f"vertex {j} out of range for n={g.n}")
    return tuple(-1 if (g.adj[j] >> k) & 1 else 1 for k in range(g.n))


def localize(g: SeidelGraph, j: int) -> SeidelGraph:
    """The unique graph in the switching class of g in which j is isolated."""
    return apply_switching(g, localization_vector(g, j))


def conjugate(g: SeidelGraph, sigma) -> SeidelGraph:
    """Relabel g by the permutation sigma (image form: vertex i -> sigma[i])."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(g.n)):
        raise ValueError("sigma is not a permutation of the vertex set")
    adj = [0] * g.n
    for i in range(g.n):
        si = sigma[i]
        row = g.adj[i]
        new = 0
        while row:
            b = row & -row
            new |= 1 << sigma[b.bit_length() - 1]
            row ^= b
        adj[si] = new
    return SeidelGraph._from_adj(g.n, adj)


def is_switching_equivalent(g1: SeidelGraph, g2: SeidelGraph):
    """Witness nu with apply_switching(g1, nu) == g2, or None.

    Two graphs are switching equivalent iff their localizations at any one
    common vertex coincide, so a single comparison at vertex 0 decides it.
    """
    if g1.n != g2.n:
        raise ValueError(f"vertex counts differ: {g1.n} != {g2.n}")
    nu1 = localization_vector(g1, 0)
    nu2 = localization_vector(g2, 0)
    if apply_switching(g1, nu1) != apply_switching(g2, nu2):
        return None
    nu = tuple(a * b for a, b in zip(nu1, nu2))
    assert apply_switching(g1, nu) == g2
    return nu


def triple_sign(g: SeidelGraph) -> dict:
    """Map each 3-subset (i,j,k), i<j<k, to E[i][j]*E[j][k]*E[i][k].

    The value is -1 iff the triple spans an odd number of edges.  Switching
    leaves every value unchanged.
    """
    if g.n < 3:
        raise ValueError("triple signs need at least 3 vertices")
    out = {}
    for i, j, k in combinations(range(g.n), 3):
        m = (((g.adj[i] >> j) & 1) + ((g.adj[j] >> k) & 1)
             + ((g.adj[i] >> k) & 1))
        out[(i, j, k)] = -1 if m & 1 else 1
    return out


def distances_from(g: SeidelGraph, x: int) -> list:
    """BFS distances from x; None marks unreachable vertices."""
    if not (0 <= x < g.n):
        raise ValueError(f"vertex {x} out of range for n={g.n}")
    dist = [None] * g.n
    dist[x] = 0
    frontier = [x]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            row = g.adj[u]
            while row:
                b = row & -row
                v = b.bit_length() - 1
                row ^= b
                if dist[v] is None:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def neighborhood(g: SeidelGraph, x: int, d) -> frozenset:
    """Vertices at graph distance exactly d from x; d="2+" means >= 2.

    Unreachable vertices count as distance infinity, so they appear in the
    "2+" selector and in none of the exact ones.
    """
    dist = distances_from(g, x)
    if d == "2+":
        return frozenset(v for v in range(g.n) if dist[v] is None or dist[v] >= 2)
    if d not in (0, 1, 2):
        raise ValueError(f"distance selector must be 0, 1, 2 or '2+', got {d!r}")
    return frozenset(v for v in range(g.n) if dist[v] == d)


def complement(g: SeidelGraph) -> SeidelGraph:
    """Graph on the same vertices whose edges are the non-edges of g."""
    full = (1 << g.n) - 1
    adj = [(~g.adj[i] & full) & ~(1 << i) for i in range(g.n)]
    return SeidelGraph._from_adj(g.n, adj)


# ---------------------------------------------------------------------------
# graph6 and JSON serialization

def to_graph6(g: SeidelGraph) -> str:
    """Encode in graph6 (no header): N(n) then the upper triangle by columns."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph6 encoding limited to n <= 258047 here")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append((g.adj[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return "".join(chr(c) for c in head + body)


def from_graph6(text) -> SeidelGraph:
    """Decode a graph6 string or bytes (optional '>>graph6<<' prefix tolerated)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 input")
    data = [ord(c) - 63 for c in s]
    if any(v < 0 or v > 63 for v in data):
        raise ValueError("invalid graph6 character")
    if data[0] == 63:
        if len(data) < 4:
            raise ValueError("truncated graph6 size")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    if n < 1:
        raise ValueError("graph6 with zero vertices not supported")
    need = n * (n - 1) // 2
    if len(data) != (need + 5) // 6:
        raise ValueError("graph6 body has the wrong length")
    bits = []
    for v in data:
        for k in range(5, -1, -1):
            bits.append((v >> k) & 1)
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return SeidelGraph(n, edges)


def graph_to_json(g: SeidelGraph) -> dict:
    """JSON form: {"n": n, "edges": [[i, j], ...]} with i<j, sorted."""
    return {"n": g.n, "edges": [[i, j] for i, j in g.edges()]}


def graph_from_json(d: dict) -> SeidelGraph:
    return SeidelGraph(int(d["n"]), [tuple(e) for e in d["edges"]])
