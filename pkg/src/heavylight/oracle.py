"""Independent small-arity verification by brute-force enumeration.

The pipeline computes heavy/light series through plethysm; this module
recomputes small components directly from the stratification by the number
of distinct light points, averaging over explicit permutations, so that any
systematic error in the plethysm machinery is caught by exact comparison.
Enumeration is capped at total arity 7.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .bisymseries import BiSymSeries
from .fixtures import SeriesFixture
from .partitions import gen_partitions, z_of
from .pipeline import stability_ok
from .uvpoly import UVPoly

ENUMERATION_CAP = 7


def set_partitions(n: int):
    """All set partitions of {1..n} as tuples of sorted block tuples.

    Enumerated via restricted-growth strings; the count is the Bell number.
    """
    if n == 0:
        yield ()
        return

    def rec(i, assignment, maxblock):
        if i > n:
            blocks: list = [[] for _ in range(maxblock + 1)]
            for elt, b in enumerate(assignment, start=1):
                blocks[b].append(elt)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(maxblock + 2):
            yield from rec(i + 1, assignment + [b], max(maxblock, b))

    yield from rec(2, [0], 0)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Number of set partitions of an n-set into k blocks, by enumeration.

    Direct enumeration is used up to n = 12 and cross-checked against the
    recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1) in the tests.
    """
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if n > 12:
        raise ValueError("enumeration capped at n = 12")
    return sum(1 for sp in set_partitions(n) if len(sp) == k)


def stirling2_recurrence(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * stirling2_recurrence(n - 1, k) + stirling2_recurrence(n - 1, k - 1)


def cycle_type(perm: tuple) -> tuple:
    """Cycle type of a permutation given in one-line notation on 1..n."""
    n = len(perm)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def representative_of_type(mu: tuple) -> tuple:
    """A canonical permutation of cycle type mu, in one-line notation."""
    out = []
    start = 1
    for part in mu:
        cyc = list(range(start, start + part))
        for i, x in enumerate(cyc):
            out.append(cyc[(i + 1) % part])
        start += part
    return tuple(out)


def _count_compatible_colorings(tau: tuple, pi: tuple, j: int) -> int:
    """Number of ordered partitions (B_1..B_j) of [n] with tau(B_i) = B_{pi(i)}.

    Equivalently surjective colorings c: [n] -> [j] with c(tau(x)) = pi(c(x));
    counted by full scan, which is exact and fast at the capped sizes.
    """
    n = len(tau)
    count = 0
    for assignment in _colorings(n, j):
        if all(assignment[tau[x] - 1] == pi[assignment[x] - 1] for x in range(n)):
            if len(set(assignment)) == j:
                count += 1
    return count


def _colorings(n: int, j: int):
    if n == 0:
        yield ()
        return
    for rest in _colorings(n - 1, j):
        for c in range(1, j + 1):
            yield rest + (c,)


def _block_permutation_counts(tau: tuple, j: int) -> dict:
    """Map pi -> number of ordered partitions (B_1..B_j) with tau(B_i) = B_{pi(i)}.

    Every surjective coloring determines its pi uniquely (pi(c(x)) = c(tau(x))
    must be well defined), so the sum over pi is organized by coloring.
    """
    n = len(tau)
    counts: dict = {}
    for assignment in _colorings(n, j):
        if len(set(assignment)) != j:
            continue
        pi = [0] * j
        ok = True
        for x in range(n):
            src = assignment[x]
            dst = assignment[tau[x] - 1]
            if pi[src - 1] == 0:
                pi[src - 1] = dst
            elif pi[src - 1] != dst:
                ok = False
                break
        if ok:
            key = tuple(pi)
            counts[key] = counts.get(key, 0) + 1
    return counts


def oracle_open_ch(
    g: int, m: int, n: int, fixture: SeriesFixture
) -> BiSymSeries:
    """Arity-(m, n) open heavy/light component computed without plethysm.

    For each class pair (type of sigma on the heavy markings, explicit tau on
    the light ones) and each number j of distinct light positions, averages
    over pi in S_j the count of ordered block decompositions compatible with
    (tau, pi), times the trace of (sigma, pi) on the arity-(m+j) term of the
    input series.
    """
    if m + n > ENUMERATION_CAP:
        raise ValueError(f"oracle enumeration capped at total arity {ENUMERATION_CAP}")
    needed = range(m + (1 if n else 0), m + n + 1)
    for arity in needed:
        if arity > fixture.trunc:
            raise ValueError(f"fixture truncation {fixture.trunc} lacks arity {arity}")
    trunc = m + n
    out: dict = {}
    for lam in gen_partitions(m):
        for mu in gen_partitions(n):
            tau = representative_of_type(mu)
            if n == 0:
                trace = fixture.data.trace_from_ch(m, lam) if stability_ok(g, m, 0) else UVPoly.zero()
            else:
                trace = UVPoly.zero()
                for j in range(1, n + 1):
                    acc = UVPoly.zero()
                    for pi, cnt in _block_permutation_counts(tau, j).items():
                        joint = tuple(
                            sorted(lam + cycle_type(pi), reverse=True)
                        )
                        tr = fixture.data.trace_from_ch(m + j, joint)
                        acc = acc + tr * cnt
                    trace = trace + acc * Fraction(1, factorial(j))
            if not trace.is_zero():
                coeff = trace * Fraction(1, z_of(lam) * z_of(mu))
                out[(lam, mu)] = coeff
    series = BiSymSeries(out, trunc)
    if not stability_ok(g, m, n):
        return BiSymSeries.zero(trunc)
    return series


def stirling_rank_check(
    g: int, m: int, n: int, numeric_open, numeric_smooth: dict
) -> bool:
    """Check the multiset-of-markings class identity at the numeric level.

    `numeric_open` is the bivariate numeric open series; `numeric_smooth`
    maps arity k to the numeric polynomial of the smooth space with k
    markings.  Verifies that the (m,n) value equals
    sum_k S(n,k) * numeric_smooth[m+k].
    """
    val = numeric_open[(m, n)] * (factorial(m) * factorial(n))
    if n == 0:
        expected = numeric_smooth.get(m, UVPoly.zero())
    else:
        expected = UVPoly.zero()
        for k in range(1, n + 1):
            s = stirling2(n, k)
            if s and (m + k) in numeric_smooth:
                expected = expected + numeric_smooth[m + k] * s
    return val == expected


def vertex_stable(g_e: int, special_count: int, weights) -> bool:
    """Stability of one component: 2g - 2 + #special + total weight > 0."""
    if g_e < 0 or special_count < 0:
        raise ValueError("arguments must be nonnegative")
    total = Fraction(0)
    for w in weights:
        w = Fraction(w)
        if not 0 < w <= 1:
            raise ValueError("weights must lie in (0, 1]")
        total += w
    return Fraction(2 * g_e - 2 + special_count) + total > 0


def oracle_compare(
    g: int, fixture: SeriesFixture, open_result, max_arity: int
) -> list:
    """Compare oracle_open_ch against the pipeline per (m, n); returns rows
    (m, n, ok) for every pair with m + n <= max_arity."""
    rows = []
    for total in range(max_arity + 1):
        for m in range(total + 1):
            n = total - m
            if m + n == 0:
                continue
            expected = open_result.component(m, n)
            got = oracle_open_ch(g, m, n, fixture)
            ok = got == expected
            rows.append((m, n, ok))
    return rows
