"""Integer sequences, 128-bit fixed-point dilations, and rational approximants.

All circle arithmetic lives on the grid Z / 2^128: a dilation factor alpha is
stored as the integer A = floor(alpha * 2^128), and a dilated point alpha*x mod 1
is the integer (A*x) mod 2^128.  Everything downstream (window sums, sweeps,
counting) is then exact integer arithmetic.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

GRID_BITS = 128
GRID_ONE = 1 << GRID_BITS

# Terms must fit in a signed 64-bit register so that downstream numpy paths
# and the per-term rounding bound |x| * 2^-128 stay meaningful.
TERM_LIMIT = (1 << 63) - 1

_HEX_RE = re.compile(r"^[0-9a-fA-F]{32}$")


@dataclass(frozen=True)
class Alpha:
    """A dilation factor in [0, 1) as an unsigned 128-bit fixed-point fraction."""

    a: int

    def __post_init__(self):
        if not isinstance(self.a, int):
            raise TypeError("alpha numerator must be an int")
        if not 0 <= self.a < GRID_ONE:
            raise ValueError("alpha numerator out of [0, 2^128)")

    @classmethod
    def from_rational(cls, p: int, q: int) -> "Alpha":
        """alpha = p/q reduced mod 1, rounded down to the 2^-128 grid."""
        if q <= 0:
            raise ValueError("denominator must be positive")
        return cls(((p % q) << GRID_BITS) // q)

    @classmethod
    def golden(cls) -> "Alpha":
        """(sqrt(5) - 1) / 2, accurate to one unit in the last place."""
        return cls((math.isqrt(5 << (2 * GRID_BITS)) - GRID_ONE) // 2)

    @classmethod
    def sqrt2m1(cls) -> "Alpha":
        """sqrt(2) - 1, accurate to one unit in the last place."""
        return cls(math.isqrt(2 << (2 * GRID_BITS)) - GRID_ONE)

    @classmethod
    def from_hex(cls, digits: str) -> "Alpha":
        if not _HEX_RE.match(digits):
            raise ValueError("alpha hex form must be exactly 32 hex digits")
        return cls(int(digits, 16))

    @classmethod
    def parse(cls, text: str) -> "Alpha":
        """Parse 'rat:p/q', 'golden', 'sqrt2m1', or 'hex:<32 hex digits>'."""
        text = text.strip()
        if text == "golden":
            return cls.golden()
        if text == "sqrt2m1":
            return cls.sqrt2m1()
        if text.startswith("rat:"):
            body = text[4:]
            m = re.match(r"^(-?\d+)/(\d+)$", body)
            if not m:
                raise ValueError(f"bad rational alpha {text!r}, expected rat:p/q")
            return cls.from_rational(int(m.group(1)), int(m.group(2)))
        if text.startswith("hex:"):
            return cls.from_hex(text[4:])
        raise ValueError(f"unrecognized alpha spec {text!r}")

    @classmethod
    def random_stream(cls, count: int, seed) -> list["Alpha"]:
        """`count` alphas drawn uniformly from the 2^-128 grid (Philox stream)."""
        if count < 0:
            raise ValueError("count must be nonnegative")
        gen = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
        words = gen.integers(0, 1 << 64, size=(count, 2), dtype=np.uint64)
        return [cls((int(w[0]) << 64) | int(w[1])) for w in words]

    @property
    def hex(self) -> str:
        return f"{self.a:032x}"

    def as_fraction(self) -> Fraction:
        return Fraction(self.a, GRID_ONE)

    def as_float(self) -> float:
        return self.a / GRID_ONE

    def __str__(self) -> str:
        return f"hex:{self.hex}"


@dataclass(frozen=True)
class PointSet:
    """Sorted multiset of circle points, each an integer on the 2^-128 grid."""

    points: tuple

    def __post_init__(self):
        pts = self.points
        if any(not 0 <= p < GRID_ONE for p in pts):
            raise ValueError("points must lie on the grid [0, 2^128)")
        if any(pts[i] > pts[i + 1] for i in range(len(pts) - 1)):
            raise ValueError("points must be sorted")

    @classmethod
    def from_values(cls, values) -> "PointSet":
        """Build from exact fractions/floats in [0, 1), flooring to the grid."""
        grid = []
        for v in values:
            f = Fraction(v)
            if not 0 <= f < 1:
                raise ValueError("point values must lie in [0, 1)")
            grid.append((f.numerator << GRID_BITS) // f.denominator)
        return cls(tuple(sorted(grid)))

    @property
    def n(self) -> int:
        return len(self.points)

    def as_floats(self) -> list[float]:
        return [p / GRID_ONE for p in self.points]


@dataclass(frozen=True)
class SequenceSpec:
    """A named integer sequence: polynomial, linear, lacunary, or an explicit list.

    Polynomial coefficients are constant-first, so coeffs = (0, 0, 1) is n^2.
    """

    kind: str
    coeffs: tuple = ()
    base: int = 0
    values: tuple = ()

    def __post_init__(self):
        if self.kind == "poly":
            if len(self.coeffs) < 2 or self.coeffs[-1] == 0:
                raise ValueError("polynomial must have degree >= 1 (nonzero leading coefficient)")
        elif self.kind == "lacunary":
            if self.base < 2:
                raise ValueError("lacunary base must be >= 2")
        elif self.kind == "explicit":
            if not self.values:
                raise ValueError("explicit sequence must be nonempty")
        elif self.kind != "linear":
            raise ValueError(f"unknown sequence kind {self.kind!r}")

    @classmethod
    def linear(cls) -> "SequenceSpec":
        return cls("linear")

    @classmethod
    def poly(cls, coeffs) -> "SequenceSpec":
        return cls("poly", coeffs=tuple(int(c) for c in coeffs))

    @classmethod
    def lacunary(cls, base: int) -> "SequenceSpec":
        return cls("lacunary", base=int(base))

    @classmethod
    def explicit(cls, values) -> "SequenceSpec":
        return cls("explicit", values=tuple(int(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "SequenceSpec":
        """Parse 'linear', 'poly:c0,c1,...', 'lacunary:b', or 'explicit:@file'."""
        text = text.strip()
        if text == "linear":
            return cls.linear()
        if text.startswith("poly:"):
            try:
                coeffs = [int(c) for c in text[5:].split(",")]
            except ValueError as exc:
                raise ValueError(f"bad polynomial spec {text!r}") from exc
            return cls.poly(coeffs)
        if text.startswith("lacunary:"):
            return cls.lacunary(int(text[9:]))
        if text.startswith("explicit:@"):
            path = text[len("explicit:@"):]
            values = []
            with open(path, "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.split("#", 1)[0].strip()
                    if line:
                        values.append(int(line))
            return cls.explicit(values)
        raise ValueError(f"unrecognized sequence spec {text!r}")

    def label(self) -> str:
        if self.kind == "poly":
            return "poly:" + ",".join(str(c) for c in self.coeffs)
        if self.kind == "lacunary":
            return f"lacunary:{self.base}"
        if self.kind == "explicit":
            return f"explicit[{len(self.values)}]"
        return "linear"


def _check_term(value: int, index: int) -> int:
    if abs(value) > TERM_LIMIT:
        raise OverflowError(
            f"term {index} has magnitude {abs(value)} exceeding the signed 64-bit range"
        )
    return value


def generate_terms(spec: SequenceSpec, count: int) -> list:
    """First `count` terms x_1..x_count of the sequence, as exact Python ints.

    Raises OverflowError naming the first index whose term leaves the signed
    64-bit range, and ValueError if an explicit list is shorter than `count`.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if spec.kind == "linear":
        if count > TERM_LIMIT:
            raise OverflowError(f"term {TERM_LIMIT + 1} exceeds the signed 64-bit range")
        return list(range(1, count + 1))
    if spec.kind == "poly":
        terms = []
        for n in range(1, count + 1):
            acc = 0
            for c in reversed(spec.coeffs):
                acc = acc * n + c
            terms.append(_check_term(acc, n))
        return terms
    if spec.kind == "lacunary":
        terms = []
        acc = 1
        for n in range(1, count + 1):
            acc *= spec.base
            terms.append(_check_term(acc, n))
        return terms
    # explicit
    if count > len(spec.values):
        raise ValueError(
            f"explicit sequence has {len(spec.values)} terms, {count} requested"
        )
    return [_check_term(v, i + 1) for i, v in enumerate(spec.values[:count])]


def dilate_mod1(terms, alpha: Alpha) -> PointSet:
    """The multiset {alpha * x mod 1 : x in terms} on the 2^-128 grid.

    The product A*x is exact (Python bignum); reduction mod 2^128 keeps the
    low 128 bits with the correct sign convention for negative terms.  The
    only rounding is the one already inside A, so each point is within
    |x| * 2^-128 of the true alpha*x mod 1.
    """
    a = alpha.a
    return PointSet(tuple(sorted((a * x) % GRID_ONE for x in terms)))


def continued_fraction_convergents(alpha: Alpha, count: int):
    """Up to `count` continued-fraction convergents (p, q) of alpha.

    Runs the Euclidean algorithm on the exact 128-bit fraction.  Denominators
    are strictly increasing (when two convergents share q = 1 the better one
    is kept), and the list stops once q would reach 2^64, past which the
    grid representation no longer pins down convergents of the underlying
    real number.  Returns (convergents, truncated).
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    res = []
    hm2, hm1 = 0, 1
    km2, km1 = 1, 0
    num, den = alpha.a, GRID_ONE
    while den > 0 and len(res) < count:
        a = num // den
        h = a * hm1 + hm2
        k = a * km1 + km2
        if k >= 1 << 64:
            break
        if res and res[-1][1] == k:
            res[-1] = (h, k)
        else:
            res.append((h, k))
        hm2, hm1 = hm1, h
        km2, km1 = km1, k
        num, den = den, num - a * den
    return res, len(res) < count
