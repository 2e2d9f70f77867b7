"""Exact domination polynomials: coefficient vectors d(G, 0..n) and gamma.

The counting core is an exhaustive sweep of all 2^n vertex subsets with
an OR-fold of precomputed closed neighborhoods; the disconnected fast
path multiplies per-component polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ArithmeticOverflow, InvalidFamilyOrder, OrderTooLarge
from .graph import Graph, components, induced_subgraph

COUNT_CAP = 26  # 2^26 subsets; the atlas itself never goes near this
_U64_MAX = (1 << 64) - 1


@dataclass(frozen=True)
class DominationPolynomial:
    """D(G, x) as exact nonnegative integer coefficients, degree ascending.

    gamma is derived from the coefficients (lowest nonzero index), never
    computed by a separate search.
    """

    n: int
    coeffs: tuple[int, ...]
    gamma: int = field(init=False)

    def __post_init__(self):
        n, c = self.n, self.coeffs
        if n < 1 or len(c) != n + 1:
            raise ValueError("coefficient vector must have length n + 1, n >= 1")
        if c[0] != 0:
            raise ValueError("the empty set never dominates: coeffs[0] must be 0")
        if c[n] != 1:
            raise ValueError("the full vertex set dominates uniquely: coeffs[n] must be 1")
        gamma = next(i for i, v in enumerate(c) if v > 0)
        for i, v in enumerate(c):
            if v < 0 or v > math.comb(n, i):
                raise ValueError(f"coeffs[{i}]={v} outside [0, C({n},{i})]")
            if i < gamma and v != 0:
                raise ValueError("coefficients below gamma must vanish")
        for i in range(gamma, n):
            # each dominating i-set has n-i dominating supersets of size
            # i+1, each counted at most i+1 times
            if c[i + 1] * (i + 1) < c[i] * (n - i):
                raise ValueError(f"upward-closure bound violated at i={i}")
        object.__setattr__(self, "gamma", gamma)

    def to_text(self) -> str:
        """Human form, highest degree first: ``x^4 + 4x^3 + 6x^2``."""
        terms = []
        for i in range(self.n, 0, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            coef = "" if c == 1 else str(c)
            power = "x" if i == 1 else f"x^{i}"
            terms.append(coef + power)
        return " + ".join(terms) if terms else "0"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "gamma": self.gamma, "coeffs": list(self.coeffs)}


def count_dominating_sets(g: Graph) -> DominationPolynomial:
    """Brute-force sweep of every vertex subset of g."""
    if g.n > COUNT_CAP:
        raise OrderTooLarge(f"subset sweep is capped at order {COUNT_CAP}")
    full = g.vertex_mask
    closed = g.closed
    counts = [0] * (g.n + 1)
    for s in range(1, full + 1):
        cover = 0
        m = s
        while m:
            low = m & -m
            cover |= closed[low.bit_length() - 1]
            m ^= low
        if cover == full:
            counts[s.bit_count()] += 1
    return DominationPolynomial(g.n, tuple(counts))


def convolve(a, b) -> list[int]:
    """Exact integer product of two coefficient vectors, overflow-checked."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    for k, v in enumerate(out):
        if v > _U64_MAX:
            raise ArithmeticOverflow(f"coefficient of degree {k} exceeds 64-bit range")
    return out


def poly_by_components(g: Graph) -> DominationPolynomial:
    """D(G, x) as the product of its components' polynomials."""
    comps = components(g)
    coeffs = [1]
    for comp in comps:
        factor = count_dominating_sets(induced_subgraph(g, comp))
        coeffs = convolve(coeffs, factor.coeffs)
    return DominationPolynomial(g.n, tuple(coeffs))


def evaluate(p: DominationPolynomial, x: complex) -> complex:
    """Horner evaluation of p at x."""
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _star(n: int) -> Graph:
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def _complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def closed_form_family(family: str, n: int) -> DominationPolynomial:
    """Named fixture polynomials: complete, path, cycle, star.

    The complete graph uses binomial coefficients directly (every
    nonempty subset dominates); the others are brute-forced, serving as
    independently constructed test fixtures.
    """
    if n < 1:
        raise InvalidFamilyOrder(f"order must be positive, got {n}")
    if family == "complete":
        return DominationPolynomial(n, tuple(0 if i == 0 else math.comb(n, i) for i in range(n + 1)))
    if family == "path":
        return count_dominating_sets(_path(n))
    if family == "cycle":
        if n < 3:
            raise InvalidFamilyOrder("cycles require order >= 3")
        return count_dominating_sets(_cycle(n))
    if family == "star":
        return count_dominating_sets(_star(n))
    raise InvalidFamilyOrder(f"unknown family {family!r}")
