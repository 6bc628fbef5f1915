"""Arithmetic statistics of truncated integer sequences.

Representation numbers of differences, additive energy, divisor moments, GCD
sums, difference-set divisibility counts, and the repeated-difference mass
used for sparsity checks.  Everything here is exact integer counting; floats
appear only in the final weighted sums where the weights are irrational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

DEFAULT_PAIR_BUDGET = 10 ** 9
DEFAULT_CELL_BUDGET = 10 ** 9
DEFAULT_MEM_BUDGET = 512 << 20  # bytes of scratch for the numpy paths

GCD_VARIANTS = ("half", "one_over_max", "squared")


class BudgetExceeded(RuntimeError):
    """An O(N^2)-type computation would exceed its configured budget."""

    def __init__(self, message: str, estimated, budget):
        super().__init__(f"{message} (estimated {estimated}, budget {budget})")
        self.estimated = estimated
        self.budget = budget


@dataclass
class RepTable:
    """Counts Rep(u) of pairs m < n with N1 <= n <= N2 and |x_n - x_m| = u > 0."""

    window: tuple
    counts: dict
    pair_count: int = 0

    def merge(self, other: "RepTable") -> "RepTable":
        """Combine with the table of the adjacent window (N2+1, N3)."""
        if other.window[0] != self.window[1] + 1:
            raise ValueError(
                f"windows {self.window} and {other.window} are not adjacent"
            )
        merged = dict(self.counts)
        for u, r in other.counts.items():
            merged[u] = merged.get(u, 0) + r
        return RepTable(
            window=(self.window[0], other.window[1]),
            counts=merged,
            pair_count=self.pair_count + other.pair_count,
        )


def rep_table(terms, n1: int, n2: int, *, pair_budget: int = DEFAULT_PAIR_BUDGET) -> RepTable:
    """Exact difference counts by hashing all pairs (m < n, N1 <= n <= N2).

    Zero gaps (duplicate term values) are not stored; u ranges over positive
    integers only.
    """
    if not 1 <= n1 <= n2 <= len(terms):
        raise ValueError(f"window ({n1}, {n2}) outside 1..{len(terms)}")
    pairs = (n2 * (n2 - 1) - (n1 - 1) * (n1 - 2)) // 2
    if pairs > pair_budget:
        raise BudgetExceeded(
            "pair enumeration too large; for quadratics use the divisor route"
            " (rep_quadratic_divisor)",
            pairs,
            pair_budget,
        )
    counts: dict = {}
    for n in range(n1, n2 + 1):
        xn = terms[n - 1]
        for m in range(n - 1):
            u = xn - terms[m]
            if u < 0:
                u = -u
            if u:
                counts[u] = counts.get(u, 0) + 1
    return RepTable(window=(n1, n2), counts=counts, pair_count=pairs)


def energy_window(table: RepTable) -> int:
    """E(N1, N2) = sum of Rep(u)^2 over the table's support."""
    return sum(r * r for r in table.counts.values())


def additive_energy(terms, count: int, *, pair_budget: int = DEFAULT_PAIR_BUDGET) -> int:
    """Quadruples with x_{n1} - x_{n2} = x_{n3} - x_{n4}, indices up to `count`.

    Hashes all ordered differences (including zero), then sums squared
    multiplicities.
    """
    if not 0 <= count <= len(terms):
        raise ValueError(f"count {count} outside 0..{len(terms)}")
    if count * count > pair_budget:
        raise BudgetExceeded("ordered-difference enumeration too large",
                             count * count, pair_budget)
    d: dict = {}
    head = terms[:count]
    for x in head:
        for y in head:
            k = x - y
            d[k] = d.get(k, 0) + 1
    return sum(v * v for v in d.values())


def energy_direct(terms, n1: int, n2: int, *, mem_budget: int = DEFAULT_MEM_BUDGET) -> int:
    """E(N1, N2) = sum Rep(u)^2 without materializing the count map.

    Streams all pair gaps through residue buckets (u mod B), sorting one
    bucket at a time, so peak memory stays near pairs * 8 / B bytes.  Exact
    for |terms| < 2^62; intended for windows far beyond rep_table's reach.
    """
    if not 1 <= n1 <= n2 <= len(terms):
        raise ValueError(f"window ({n1}, {n2}) outside 1..{len(terms)}")
    x = np.asarray(terms[:n2], dtype=np.int64)
    if x.size and int(np.abs(x).max()) >= 1 << 62:
        raise OverflowError("terms too large for the int64 gap path")
    pairs = (n2 * (n2 - 1) - (n1 - 1) * (n1 - 2)) // 2
    if pairs == 0:
        return 0
    buckets = max(1, -(-pairs * 8 // mem_budget))
    total = 0
    for b in range(buckets):
        chunks = []
        for n in range(max(n1, 2), n2 + 1):
            gaps = np.abs(x[n - 1] - x[: n - 1])
            if buckets > 1:
                gaps = gaps[gaps % buckets == b]
            if gaps.size:
                chunks.append(gaps)
        if not chunks:
            continue
        arr = np.concatenate(chunks)
        arr = arr[arr != 0]
        if not arr.size:
            continue
        arr.sort()
        edges = np.flatnonzero(np.diff(arr)) + 1
        starts = np.concatenate(([0], edges))
        ends = np.concatenate((edges, [arr.size]))
        runs = ends - starts
        total += int(np.dot(runs, runs))
    return total


def _divisors(u: int) -> list:
    """All positive divisors of u, by trial division."""
    small, large = [], []
    d = 1
    while d * d <= u:
        if u % d == 0:
            small.append(d)
            if d * d != u:
                large.append(u // d)
        d += 1
    return small + large[::-1]


def divisor_lists(limit: int) -> list:
    """lists[n] = sorted divisors of n, for all n <= limit (index 0 unused)."""
    lists: list = [[] for _ in range(limit + 1)]
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            lists[m].append(d)
    return lists


def rep_quadratic_divisor(p, u: int, n_limit=None, divisors=None) -> int:
    """Rep_{1,N}(u) for the quadratic a x^2 + b x (+ any constant).

    Uses u = p(x) - p(y) = (a(x+y) + b)(x-y): enumerate divisors e = x - y,
    solve for t = x + y, and keep solutions with 1 <= y < x (<= N when given).
    Pass n_limit=None for the unrestricted count r(u) <= tau(u).
    """
    a, b = p
    if a == 0:
        raise ValueError("leading quadratic coefficient must be nonzero")
    if u < 1:
        raise ValueError("u must be a positive integer")
    count = 0
    for e in divisors if divisors is not None else _divisors(u):
        rest = u // e - b
        if rest % a:  # exact division test, valid for either sign of a
            continue
        t = rest // a
        if t < e + 2 or (t - e) % 2:
            continue
        if n_limit is not None and (t + e) // 2 > n_limit:
            continue
        count += 1
    return count


def tau_sieve(limit: int) -> np.ndarray:
    """tau(n) for n <= limit as an int64 array (index 0 unused)."""
    tau = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, math.isqrt(limit) + 1):
        tau[d * d] += 1
        tau[d * (d + 1):: d] += 2
    return tau


def tau_moment_sum(x: int, beta: int, *, mem_budget: int = 1 << 30) -> int:
    """Exact sum of tau(n)^beta over n <= x, by divisor-pair sieve."""
    if not 1 <= x <= 10 ** 8:
        raise ValueError("x must be in 1..10^8")
    if beta < 1:
        raise ValueError("beta must be a positive integer")
    if (x + 1) * 8 > mem_budget:
        raise BudgetExceeded("tau sieve array too large", (x + 1) * 8, mem_budget)
    tau = tau_sieve(x)[1:]
    max_tau = int(tau.max())
    if beta * max_tau.bit_length() + x.bit_length() <= 62:
        return int(np.sum(tau ** beta))
    return sum(int(t) ** beta for t in tau)  # overflow-proof fallback


def _gcd_weight_grid(variant: str, g, u1, u2):
    if variant == "half":
        return g / np.sqrt(u1 * u2)
    if variant == "one_over_max":
        return g / np.maximum(u1, u2)
    if variant == "squared":
        return (g * g) / (u1 * u2)
    raise ValueError(f"unknown gcd_sum variant {variant!r}; expected one of {GCD_VARIANTS}")


def _gcd_sum_dense(us, rs, variant, threshold, cell_budget):
    k = us.size
    if k * k > cell_budget:
        raise BudgetExceeded("gcd double sum too large", k * k, cell_budget)
    if threshold is not None and int(us[-1]) ** 2 >= 1 << 62:
        raise OverflowError(
            "support too large for the filtered dense path; use strategy='classes'")
    uf = us.astype(np.float64)
    block = max(1, min(k, (4 << 20) // max(k, 1)))
    total = 0.0
    for i0 in range(0, k, block):
        u1 = us[i0:i0 + block, None]
        g = np.gcd(u1, us[None, :])
        w = _gcd_weight_grid(variant, g.astype(np.float64), uf[i0:i0 + block, None], uf[None, :])
        if threshold is not None:
            # u1 u2 / g^2 is the exact integer (u1/g)(u2/g); compare without rounding
            ab = (u1 // g) * (us[None, :] // g)
            w = np.where(ab <= threshold, w, 0.0)
        total += float(np.sum(w * (rs[i0:i0 + block, None] * rs[None, :])))
    return total


def _gcd_weight_class(variant: str, a: int, b: int) -> float:
    # After writing u1 = g a, u2 = g b with gcd(a, b) = 1, every variant's
    # weight depends on (a, b) alone.
    if variant == "half":
        return 1.0 / math.sqrt(a * b)
    if variant == "one_over_max":
        return 1.0 / max(a, b)
    if variant == "squared":
        return 1.0 / (a * b)
    raise ValueError(f"unknown gcd_sum variant {variant!r}; expected one of {GCD_VARIANTS}")


def _gcd_sum_classes(us, rs, variant, threshold):
    # Enumerate ordered coprime (a, b) with a b <= T; for each, sum
    # Rep(g a) Rep(g b) over g via sorted lookups.
    total = 0.0
    t_cap = int(threshold)
    n = us.size
    for a in range(1, t_cap + 1):
        b_max = int(threshold // a)
        if b_max < 1:
            break
        sel = np.flatnonzero(us % a == 0)
        if not sel.size:
            continue
        g_vals = us[sel] // a
        r_a = rs[sel]
        for b in range(1, b_max + 1):
            if math.gcd(a, b) != 1:
                continue
            cand = g_vals * b
            pos = np.searchsorted(us, cand)
            pos_c = np.minimum(pos, n - 1)
            hit = us[pos_c] == cand
            if hit.any():
                total += _gcd_weight_class(variant, a, b) * float(
                    np.dot(r_a[hit], rs[pos_c[hit]])
                )
    return total


def gcd_sum(table: RepTable, variant: str, threshold=None, *,
            strategy: str = "auto", cell_budget: int = DEFAULT_CELL_BUDGET) -> float:
    """Double sum over the table of Rep(u1) Rep(u2) w(u1, u2), optionally
    restricted to pairs with u1 u2 / gcd(u1, u2)^2 <= threshold.

    Weights: half = gcd/sqrt(u1 u2), one_over_max = gcd/max(u1, u2),
    squared = gcd^2/(u1 u2).  strategy 'dense' walks all K^2 cells in numpy
    blocks; 'classes' (threshold required) enumerates coprime shape classes
    (a, b) with a b <= threshold, which is far cheaper for small thresholds;
    'auto' picks between them.
    """
    if variant not in GCD_VARIANTS:
        raise ValueError(f"unknown gcd_sum variant {variant!r}; expected one of {GCD_VARIANTS}")
    if not table.counts:
        return 0.0
    us = np.array(sorted(table.counts), dtype=np.int64)
    rs = np.array([table.counts[int(u)] for u in us], dtype=np.float64)
    if strategy == "auto":
        k = us.size
        use_classes = (
            threshold is not None
            and threshold >= 1
            and threshold * math.log(threshold + 2) * k < k * k
            and int(us[-1]) * int(threshold) < 1 << 62
        )
        strategy = "classes" if use_classes else "dense"
    if strategy == "classes":
        if threshold is None:
            raise ValueError("the class strategy requires a threshold")
        if int(us[-1]) * int(threshold) >= 1 << 62:
            raise OverflowError("threshold too large for the class strategy")
        if threshold < 1:
            return 0.0
        return _gcd_sum_classes(us, rs, variant, threshold)
    if strategy != "dense":
        raise ValueError(f"unknown strategy {strategy!r}")
    return _gcd_sum_dense(us, rs, variant, threshold, cell_budget)


def gcd_average(x: int) -> float:
    """sum_{n<=x} sum_{m<n} gcd(m, n)/n, exactly via the totient identity.

    Swapping the divisor sum gives sum_{d<=x} (phi(d)/d) floor(x/d) - x;
    accumulated with math.fsum.
    """
    if not 1 <= x <= 10 ** 7:
        raise ValueError("x must be in 1..10^7")
    phi = np.arange(x + 1, dtype=np.int64)
    for p in range(2, x + 1):
        if phi[p] == p:  # p prime
            phi[p::p] -= phi[p::p] // p
    return math.fsum(int(phi[d]) * (x // d) / d for d in range(1, x + 1)) - x


@dataclass(eq=False)
class DifferenceSet:
    """Sorted distinct differences p(m) - p(n), m != n, both indices <= N."""

    n: int
    values: np.ndarray = field(repr=False)

    def __len__(self):
        return int(self.values.size)


def difference_set(coeffs, count: int, *, pair_budget: int = DEFAULT_PAIR_BUDGET) -> DifferenceSet:
    """All distinct nonzero differences of polynomial values at 1..count."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if count * count > pair_budget:
        raise BudgetExceeded("difference grid too large", count * count, pair_budget)
    n = np.arange(1, count + 1, dtype=np.int64)
    vals = np.zeros_like(n)
    for c in reversed(coeffs):
        vals = vals * n + int(c)
    if vals.size and int(np.abs(vals).max()) >= 1 << 62:
        raise OverflowError("polynomial values too large for the int64 path")
    diffs = (vals[:, None] - vals[None, :]).ravel()
    return DifferenceSet(n=count, values=np.unique(diffs[diffs != 0]))


def _radical(ell: int):
    """(rad(ell), omega(ell)) by trial division."""
    rad = 1
    omega = 0
    rest = ell
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            rad *= p
            omega += 1
            while rest % p == 0:
                rest //= p
        p += 1 if p == 2 else 2
    if rest > 1:
        rad *= rest
        omega += 1
    return rad, omega


def divisibility_bound_check(diffs: DifferenceSet, ell: int, degree: int, count: int):
    """(count of multiples of ell in the set, (N + rad)^2 d^omega / rad, ok).

    The bound assumes the generating polynomial has no constant term and
    content 1 (strip/divide before building the difference set if needed).
    """
    if ell <= 1:
        raise ValueError("ell must be an integer > 1")
    hits = int(np.count_nonzero(diffs.values % ell == 0))
    rad, omega = _radical(ell)
    bound_num = (count + rad) ** 2 * degree ** omega
    return hits, bound_num / rad, hits * rad <= bound_num


def normalize_polynomial(coeffs):
    """Drop the constant term and divide by the content.

    Puts a polynomial into the form the divisibility bound assumes.
    """
    body = list(coeffs)
    if body:
        body[0] = 0
    g = 0
    for c in body:
        g = math.gcd(g, c)
    if g == 0:
        raise ValueError("polynomial must be nonconstant")
    return tuple(c // g for c in body)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


def congruence_solution_count(coeffs, q: int) -> int:
    """Roots of the polynomial mod a prime q, by exhaustive evaluation.

    At most deg many exist (asserted); rejects moduli where every coefficient
    vanishes, since the root bound's hypothesis fails there.
    """
    if not _is_prime(q):
        raise ValueError(f"modulus {q} is not prime")
    reduced = [c % q for c in coeffs]
    if not any(reduced):
        raise ValueError("all coefficients divisible by q; the congruence is trivial")
    count = 0
    for x in range(q):
        acc = 0
        for c in reversed(reduced):
            acc = (acc * x + c) % q
        if acc == 0:
            count += 1
    degree = max(i for i, c in enumerate(coeffs) if c)
    assert count <= degree, "root count exceeded the degree bound"
    return count


def sparse_u2_mass(terms, count: int, *, pair_budget: int = DEFAULT_PAIR_BUDGET):
    """(mass, exponent) of repeated gaps: mass = sum of Rep(u)^2 over Rep >= 2.

    exponent = log(mass)/log(N) for trend reporting (nan when undefined).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    table = rep_table(terms, 1, count, pair_budget=pair_budget)
    mass = sum(r * r for r in table.counts.values() if r >= 2)
    if mass > 0 and count > 1:
        exponent = math.log(mass) / math.log(count)
    else:
        exponent = math.nan
    return mass, exponent
