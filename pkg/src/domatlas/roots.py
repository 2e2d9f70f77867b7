"""Complex domination roots with residual certificates.

The root 0 always has multiplicity exactly gamma (the lowest nonzero
coefficient sits at that degree), so it is deflated exactly and never
touched by the numeric solver. The remaining roots come from
Durand-Kerner simultaneous iteration on the monic deflated polynomial,
each finished with a Newton polish.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoConvergence
from .polynomial import DominationPolynomial, evaluate

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 1000

# irrational fraction of a turn; breaks the symmetry of the start circle
_ANGLE_OFFSET = 2.0 * math.pi * (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class RootSet:
    """All roots of a domination polynomial.

    nonzero_roots are sorted by (re, im); residuals are |D(r)| divided
    by the largest coefficient, one per nonzero root.
    """

    zero_multiplicity: int
    nonzero_roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    tolerance: float

    def __post_init__(self):
        tol = self.tolerance
        for r in self.nonzero_roots:
            if abs(r.imag) <= tol and r.real > tol:
                raise ValueError(f"positive real root {r}: impossible for nonnegative coefficients")
            if abs(r.imag) > tol:
                conj = min(abs(r.conjugate() - s) for s in self.nonzero_roots)
                if conj > tol * max(1.0, abs(r)):
                    raise ValueError(f"root {r} lacks a conjugate partner")

    def all_roots(self) -> list[complex]:
        """Zero root expanded with multiplicity, then the nonzero roots."""
        return [0j] * self.zero_multiplicity + list(self.nonzero_roots)

    def to_text(self) -> str:
        """``0 (x2), -2.000000+1.414214i, ...``; real roots printed plain."""
        parts = []
        if self.zero_multiplicity:
            parts.append(f"0 (x{self.zero_multiplicity})")
        parts.extend(format_root(r) for r in self.nonzero_roots)
        return ", ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "zero_multiplicity": self.zero_multiplicity,
            "roots": [{"re": r.real, "im": r.imag} for r in self.nonzero_roots],
        }


@dataclass(frozen=True)
class RootStatistics:
    real_count: int
    distinct_count: int
    max_modulus: float


def format_root(r: complex) -> str:
    if abs(r.imag) <= 1e-9:
        return f"{r.real:.6f}"
    return f"{r.real:.6f}{r.imag:+.6f}i"


def deflate_zero(p: DominationPolynomial) -> tuple[int, list[int]]:
    """Strip the exact x^gamma factor; reduced[0] = d(G, gamma) > 0."""
    return p.gamma, list(p.coeffs[p.gamma :])


def _horner(coeffs, x: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _horner_deriv(coeffs, x: complex) -> complex:
    acc = 0j
    for k in range(len(coeffs) - 1, 0, -1):
        acc = acc * x + k * coeffs[k]
    return acc


def _durand_kerner(coeffs, tol: float, max_iter: int) -> list[complex]:
    """All roots of a monic polynomial given ascending coefficients.

    Stops when per-root steps or all residuals fall below tol; near
    multiple roots the steps stagnate around the attainable accuracy, so
    the residual criterion is the one that fires there.
    """
    deg = len(coeffs) - 1
    scale = max(abs(c) for c in coeffs)
    radius = 1.0 + max(abs(c) for c in coeffs[:-1])  # Cauchy bound
    z = [radius * cmath.exp(1j * (2.0 * math.pi * k / deg + _ANGLE_OFFSET)) for k in range(deg)]
    for _ in range(max_iter):
        max_step = 0.0
        max_resid = 0.0
        for i in range(deg):
            denom = 1.0 + 0j
            for j in range(deg):
                if j != i:
                    denom *= z[i] - z[j]
            if denom == 0:
                continue
            val = _horner(coeffs, z[i])
            max_resid = max(max_resid, abs(val))
            step = val / denom
            z[i] -= step
            max_step = max(max_step, abs(step))
        if max_step < tol or max_resid < tol * scale:
            break
    return z


def _newton_polish(coeffs, z: complex) -> complex:
    d = _horner_deriv(coeffs, z)
    if d == 0:
        return z
    return z - _horner(coeffs, z) / d


# --- exact square-free decomposition (rational arithmetic) ---
#
# Domination polynomials routinely contain repeated factors (every K2
# component contributes (x + 2)), and simultaneous iteration loses half
# the digits per extra multiplicity. The coefficients are exact
# integers, so repeated factors are split off exactly first and the
# numeric solver only ever sees simple roots.


def _poly_trim(c: list[Fraction]) -> list[Fraction]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_deriv(c: list[Fraction]) -> list[Fraction]:
    return _poly_trim([k * c[k] for k in range(1, len(c))]) if len(c) > 1 else [Fraction(0)]


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for k, v in enumerate(a):
        out[k] += v
    for k, v in enumerate(b):
        out[k] -= v
    return _poly_trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    rem = list(a)
    if len(a) < len(b):
        return [Fraction(0)], _poly_trim(rem)
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        factor = rem[shift + len(b) - 1] / b[-1]
        quo[shift] = factor
        for k, v in enumerate(b):
            rem[shift + k] -= factor * v
    return _poly_trim(quo), _poly_trim(rem)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while len(b) > 1 or b[0] != 0:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]  # monic


def squarefree_factors(coeffs) -> list[tuple[int, list[Fraction]]]:
    """Yun decomposition: (multiplicity, monic square-free factor) pairs."""
    f = _poly_trim([Fraction(c) for c in coeffs])
    df = _poly_deriv(f)
    a = _poly_gcd(f, df)
    b, _ = _poly_divmod(f, a)
    c, _ = _poly_divmod(df, a)
    d = _poly_sub(c, _poly_deriv(b))
    factors = []
    mult = 1
    while len(b) > 1:
        a = _poly_gcd(b, d)
        if len(a) > 1:
            factors.append((mult, a))
        b, _ = _poly_divmod(b, a)
        c, _ = _poly_divmod(d, a)
        d = _poly_sub(c, _poly_deriv(b))
        mult += 1
    return factors


_SNAP = 1e-7  # relative imaginary-part snap; well below any true root pair


def _symmetrize(roots: list[complex]) -> list[complex]:
    """Restore exact conjugate symmetry blurred by the iteration.

    Real coefficients guarantee roots come in conjugate pairs; snap
    near-real iterates onto the axis and average each remaining pair
    with its partner's conjugate.
    """
    out = [
        complex(z.real, 0.0) if abs(z.imag) <= _SNAP * max(1.0, abs(z)) else z for z in roots
    ]
    unmatched = {i for i, z in enumerate(out) if z.imag < 0}
    for i, z in enumerate(out):
        if z.imag <= 0 or not unmatched:
            continue
        j = min(unmatched, key=lambda k: abs(out[k] - z.conjugate()))
        mean = (z + out[j].conjugate()) / 2
        out[i], out[j] = mean, mean.conjugate()
        unmatched.remove(j)
    return out


def find_roots(
    p: DominationPolynomial,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RootSet:
    """All roots of p with certified residuals.

    Raises NoConvergence (carrying the best iterate) if the iteration
    budget runs out or a polished root fails its residual certificate.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    gamma, reduced = deflate_zero(p)
    scale = max(p.coeffs)
    if len(reduced) == 1:
        return RootSet(gamma, (), (), tol)
    roots = []
    for mult, factor in squarefree_factors(reduced):
        fc = [float(c) for c in factor]
        simple = _durand_kerner(fc, tol, max_iter)
        simple = [_newton_polish(fc, z) for z in simple]
        roots.extend(_symmetrize(simple) * mult)
    roots.sort(key=lambda z: (z.real, z.imag))
    residuals = tuple(abs(evaluate(p, z)) / scale for z in roots)
    if any(res > tol for res in residuals):
        raise NoConvergence(
            f"root iteration did not certify within {max_iter} iterations",
            roots=roots,
            residuals=residuals,
        )
    return RootSet(gamma, tuple(roots), residuals, tol)


def root_statistics(rs: RootSet) -> RootStatistics:
    """Counts of real and distinct root locations, and the max modulus."""
    locations = ([0j] if rs.zero_multiplicity else []) + list(rs.nonzero_roots)
    max_mod = max((abs(r) for r in locations), default=0.0)
    thresh = max(rs.tolerance, 1e-9) * max(1.0, max_mod)
    reps: list[complex] = []
    for r in locations:
        if all(abs(r - q) > thresh for q in reps):
            reps.append(r)
    real = sum(1 for r in reps if abs(r.imag) <= thresh)
    return RootStatistics(real, len(reps), max_mod)


def reconstruct_coeffs(rs: RootSet) -> list[complex]:
    """Monic coefficient vector (ascending) rebuilt from the root set."""
    coeffs = [1.0 + 0j]
    for r in rs.all_roots():
        coeffs = [0j] + coeffs
        for k in range(len(coeffs) - 1):
            coeffs[k] -= r * coeffs[k + 1]
    return coeffs
