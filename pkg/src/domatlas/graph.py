"""Labeled simple graphs as per-vertex neighborhood bitmasks.

Vertex sets are plain Python ints used as bitmasks over vertices
0..n-1, so the hot counting loop is a fold of bitwise ORs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptySet, MalformedGraph6

MAX_ORDER = 63  # a vertex set must fit one machine word
GRAPH6_MAX_ORDER = 62  # single-byte size form only


def bits_of(mask: int):
    """Yield the set bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    adj[v] is the open neighborhood N(v) as a bitmask; closed[v] is
    N[v] = N(v) | {v}, precomputed once since it is the hottest
    primitive in dominating-set counting.
    """

    n: int
    adj: tuple[int, ...]
    closed: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"graph order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency list length must equal the order")
        full = (1 << self.n) - 1
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~full:
                raise ValueError(f"vertex {v} has neighbors outside 0..{self.n - 1}")
            if nbrs >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits_of(nbrs):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")
        object.__setattr__(
            self, "closed", tuple(nbrs | 1 << v for v, nbrs in enumerate(self.adj))
        )

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self):
        return [(u, v) for v in range(self.n) for u in bits_of(self.adj[v]) if u < v]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((a.bit_count() for a in self.adj), reverse=True))


def closed_neighborhood(g: Graph, s: int) -> int:
    """N[S]: union of closed neighborhoods over the vertices of s."""
    out = 0
    for v in bits_of(s):
        out |= g.closed[v]
    return out


def is_dominating(g: Graph, s: int) -> bool:
    """True iff N[S] covers every vertex of g."""
    return closed_neighborhood(g, s) == g.vertex_mask


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by smallest member.

    The order is deterministic so that downstream polynomial
    factorizations multiply factors in a fixed order.
    """
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grown = comp
            for u in bits_of(frontier):
                grown |= g.adj[u]
            frontier = grown & ~comp
            comp = grown
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph induced by s, relabeled 0..|s|-1 in increasing order."""
    if s == 0:
        raise EmptySet("cannot induce a subgraph on the empty vertex set")
    verts = list(bits_of(s))
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in bits_of(g.adj[v] & s):
            adj[index[v]] |= 1 << index[u]
    return Graph(len(verts), tuple(adj))


def _edge_positions(n: int):
    """Upper-triangle bit order used by graph6: column-major, (i, j) i < j."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def write_graph6(g: Graph) -> str:
    """Encode in the standard single-byte-size graph6 form."""
    if g.n > GRAPH6_MAX_ORDER:
        raise MalformedGraph6(f"graph6 single-byte form supports n <= {GRAPH6_MAX_ORDER}")
    bits = [g.adj[j] >> i & 1 for i, j in _edge_positions(g.n)]
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(63 + val))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode a single-byte-size graph6 string; rejects malformed input."""
    if not text:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in text):
        raise MalformedGraph6("graph6 characters must be in the range 63..126")
    if text[0] == "~":
        raise MalformedGraph6("multi-byte graph6 size forms are not supported")
    n = ord(text[0]) - 63
    if n < 1:
        raise MalformedGraph6("graph order must be at least 1")
    nbits = n * (n - 1) // 2
    body = text[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"expected {(nbits + 5) // 6} payload characters for n={n}, got {len(body)}"
        )
    bits = []
    for c in body:
        val = ord(c) - 63
        bits.extend(val >> k & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    adj = [0] * n
    for bit, (i, j) in zip(bits, _edge_positions(n)):
        if bit:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))
