"""Isomorph-free enumeration of small graphs via exhaustive canonicalization.

At atlas scale (order <= 6) the simplest correct method wins: sweep all
2^(n(n-1)/2) labeled graphs, collapse each isomorphism orbit by applying
every vertex permutation, and keep the lexicographically minimal
upper-triangle bit string as the class representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import OrderTooLarge
from .graph import Graph, _edge_positions, bits_of, is_connected, write_graph6

CANON_CAP = 9
ENUM_CAP = 7


@dataclass(frozen=True)
class CanonicalForm:
    """Labeling-independent identity of an isomorphism class.

    canon_bits is the minimal upper-triangle bit string (column-major,
    graph6 order) over all vertex permutations; canon_graph6 encodes the
    relabeled representative.
    """

    canon_bits: str
    canon_graph6: str


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> list[tuple[int, ...]]:
    """For each permutation, where each upper-triangle bit position lands."""
    pos = {pair: k for k, pair in enumerate(_edge_positions(n))}
    tables = []
    for perm in permutations(range(n)):
        table = []
        for i, j in _edge_positions(n):
            a, b = perm[i], perm[j]
            table.append(pos[(a, b) if a < b else (b, a)])
        tables.append(tuple(table))
    return tables


def _labeled_code(g: Graph) -> int:
    """Upper-triangle bits packed with position k at weight 2^k."""
    code = 0
    for k, (i, j) in enumerate(_edge_positions(g.n)):
        if g.adj[j] >> i & 1:
            code |= 1 << k
    return code


def _graph_from_code(n: int, code: int) -> Graph:
    adj = [0] * n
    for k, (i, j) in enumerate(_edge_positions(n)):
        if code >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def _min_orbit_code(n: int, code: int, tables) -> int:
    """Minimal permuted code under the lex order on bit strings.

    Position 0 is the most significant, so integer comparison of the
    reversed packing agrees with lexicographic comparison of bit strings.
    """
    m = n * (n - 1) // 2
    top = m - 1
    best = None
    for table in tables:
        lex = 0
        for k in bits_of(code):
            lex |= 1 << (top - table[k])
        if best is None or lex < best:
            best = lex
    return best if best is not None else 0


def _lex_to_plain(n: int, lex: int) -> int:
    m = n * (n - 1) // 2
    return sum(1 << k for k in range(m) if lex >> (m - 1 - k) & 1)


def canonical_form(g: Graph) -> CanonicalForm:
    """Minimal-bit-string canonical form; exact for any labeling."""
    if g.n > CANON_CAP:
        raise OrderTooLarge(f"canonicalization is capped at order {CANON_CAP}")
    m = g.n * (g.n - 1) // 2
    lex = _min_orbit_code(g.n, _labeled_code(g), _perm_tables(g.n))
    bits = format(lex, f"0{m}b") if m else ""
    return CanonicalForm(bits, write_graph6(_graph_from_code(g.n, _lex_to_plain(g.n, lex))))


def enumerate_graphs(n: int, connected_only: bool) -> list[Graph]:
    """One representative per isomorphism class of order n.

    Sorted by (edge count ascending, canonical bit string ascending);
    this frozen key defines the atlas row order.
    """
    if not 1 <= n <= ENUM_CAP:
        raise OrderTooLarge(f"enumeration is capped at order {ENUM_CAP}")
    tables = _perm_tables(n)
    m = n * (n - 1) // 2
    top = m - 1
    seen = bytearray(1 << m)
    classes = []
    for code in range(1 << m):
        if seen[code]:
            continue
        best_lex = None
        for table in tables:
            plain = 0
            lex = 0
            for k in bits_of(code):
                plain |= 1 << table[k]
                lex |= 1 << (top - table[k])
            seen[plain] = 1
            if best_lex is None or lex < best_lex:
                best_lex = lex
        if best_lex is None:
            best_lex = 0
            seen[0] = 1
        classes.append((code.bit_count(), best_lex))
    classes.sort()
    graphs = [_graph_from_code(n, _lex_to_plain(n, lex)) for _, lex in classes]
    if connected_only:
        graphs = [g for g in graphs if is_connected(g)]
    return graphs


def graphs_up_to(max_order: int, connected_only: bool):
    """All representatives of each order 1..max_order, in atlas order."""
    for n in range(1, max_order + 1):
        yield from enumerate_graphs(n, connected_only)
