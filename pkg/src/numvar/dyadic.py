"""Binary decomposition of the tent kernel into plateau pieces.

A window length S with binary digits d_v (S = sum_v d_v 2^-v) splits the tent
psi_{S/2} into a sum of plateau kernels f_{v,c}: flat top of height 2^-v on
|x| <= c 2^-v, unit-slope ramp down to zero at (c+1) 2^-v.  The offsets come
from the digit prefix, c_v = sum_{u<v} 2^(v-u) d_u, and the means add up to
the tent integral: sum_v d_v (2 c_v + 1) 2^(-2v) = S^2 exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .points import GRID_ONE, Alpha
from .variance import as_dyadic

MAX_LEVEL = 64


@dataclass(frozen=True)
class PlateauKernel:
    """f_{v,c}: height 2^-v plateau of half-width c 2^-v with unit-slope ramps."""

    v: int
    c: int

    def __post_init__(self):
        if self.v < 0:
            raise ValueError("level v must be >= 0")
        if not 0 <= self.c < (1 << self.v):
            raise ValueError("offset c must satisfy 0 <= c < 2^v")

    def value(self, x):
        """f_{v,c}(x); exact for Fraction/int x, float arithmetic for float x."""
        t = abs(x)
        if isinstance(t, float):
            h = 2.0 ** -self.v
            inner = self.c * h
            if t <= inner:
                return h
            outer = inner + h
            return outer - t if t < outer else 0.0
        h = Fraction(1, 1 << self.v)
        inner = self.c * h
        if t <= inner:
            return h
        outer = inner + h
        return outer - t if t < outer else Fraction(0)

    def periodized(self, t):
        """sum_j f_{v,c}(t + j); j in {-1, 0, 1} is exhaustive since support <= 1."""
        return self.value(t) + self.value(t - 1) + self.value(t + 1)

    def mean(self) -> Fraction:
        """Integral of f_{v,c} over the line: (2c + 1) 2^(-2v), exact."""
        return Fraction(2 * self.c + 1, 1 << (2 * self.v))

    def fourier(self, j: int) -> float:
        """Fourier coefficient at nonzero integer frequency j.

        sin(2^(1-v) (c + 1/2) j pi) / (j pi) * sin(2^-v j pi) / (j pi), with
        the sine arguments reduced mod 2 in exact rationals first, so lattice
        frequencies give exact zeros.
        """
        if j == 0:
            raise ValueError("j = 0 is the mean; use mean()")
        z1 = Fraction((2 * self.c + 1) * j, 1 << self.v) % 2
        z2 = Fraction(j, 1 << self.v) % 2
        return _sin_pi(z1) * _sin_pi(z2) / (j * j * math.pi * math.pi)


def _sin_pi(z: Fraction) -> float:
    """sin(pi z) for z in [0, 2), exact at the lattice points 0, 1/2, 1, 3/2."""
    if z.denominator == 1:
        return 0.0
    if z.denominator == 2:
        return 1.0 if z.numerator % 4 == 1 else -1.0
    return math.sin(math.pi * float(z))


@dataclass(frozen=True)
class DyadicExpansion:
    """Digits and plateau offsets for one dyadic window length S."""

    s: Fraction
    digits: tuple
    coeffs: tuple

    def pairs(self) -> list:
        """The (v, c_v) pairs with d_v = 1, in increasing v."""
        return [(v, self.coeffs[v]) for v, d in enumerate(self.digits) if d]

    def kernels(self) -> list:
        return [PlateauKernel(v, c) for v, c in self.pairs()]

    def scalar_sum(self) -> Fraction:
        """sum_v d_v (2 c_v + 1) 2^(-2v); equals S^2 exactly."""
        return sum((PlateauKernel(v, c).mean() for v, c in self.pairs()), Fraction(0))


def decompose(s, max_level: int = MAX_LEVEL) -> DyadicExpansion:
    """Binary digits d_v and offsets c_v of S, with c_{v+1} = 2 (c_v + d_v)."""
    f = as_dyadic(s)
    k = f.numerator * (1 << MAX_LEVEL) // f.denominator  # S * 2^64, exact
    digits = []
    coeffs = []
    c = 0
    for v in range(max_level + 1):
        d = (k >> (MAX_LEVEL - v)) & 1 if v <= MAX_LEVEL else 0
        digits.append(d)
        coeffs.append(c)
        c = 2 * (c + d)
    if max_level < MAX_LEVEL and (k & ((1 << (MAX_LEVEL - max_level)) - 1)):
        raise ValueError(f"S = {f} has binary digits beyond level {max_level}")
    return DyadicExpansion(s=f, digits=tuple(digits), coeffs=tuple(coeffs))


def plateau_eval(v: int, c: int, x):
    return PlateauKernel(v, c).value(x)


def plateau_mean(v: int, c: int) -> Fraction:
    return PlateauKernel(v, c).mean()


def plateau_fourier(v: int, c: int, j: int) -> float:
    return PlateauKernel(v, c).fourier(j)


def verify_decomposition(s, x):
    """(tent value, plateau-sum value) at x; the two sides agree pointwise."""
    f = as_dyadic(s)
    if isinstance(x, float):
        lhs = max(float(f) - abs(x), 0.0)
    else:
        lhs = max(f - abs(Fraction(x)), Fraction(0))
    rhs = sum(k.value(x) for k in decompose(f).kernels())
    return lhs, rhs


def y_statistic(terms, n: int, kernel: PlateauKernel, alpha: Alpha) -> float:
    """Centered pair statistic of the n-th term against all earlier ones.

    Y = 2 sum_{m<n} sum_j f_{v,c}(alpha (x_n - x_m) + j) - 2 (n-1) mean(f).
    Gaps are reduced mod 1 on the exact grid before the float kernel is
    applied.  n is 1-based; n = 1 has no earlier terms and gives 0.
    """
    if not 1 <= n <= len(terms):
        raise ValueError(f"index n = {n} outside 1..{len(terms)}")
    a = alpha.a
    xn = terms[n - 1]
    acc = 0.0
    for m in range(n - 1):
        t = ((a * (xn - terms[m])) % GRID_ONE) / GRID_ONE
        acc += kernel.periodized(t)
    return 2.0 * acc - 2.0 * (n - 1) * float(kernel.mean())


def y_window_sum(counts, pair_count: int, kernel: PlateauKernel, alpha: Alpha) -> float:
    """sum of y_statistic over a window, grouped by repeated gap values.

    counts maps u = |x_n - x_m| to its multiplicity over the window's pairs
    (pair_count = total pairs); the kernel is even, so each group contributes
    multiplicity * periodized(alpha u).
    """
    a = alpha.a
    acc = 0.0
    for u, rep in counts.items():
        t = ((a * u) % GRID_ONE) / GRID_ONE
        acc += rep * kernel.periodized(t)
    return 2.0 * acc - 2.0 * pair_count * float(kernel.mean())
