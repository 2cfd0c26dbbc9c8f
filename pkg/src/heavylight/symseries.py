"""Truncated symmetric-function series in the power-sum basis.

A SymSeries is a finitely supported map {partition -> UVPoly} together with
an arity bound `trunc`; the partition indexing a monomial p_lambda has size
equal to the arity of that term.  The power-sum basis is canonical
internally; Schur form is a presentation-layer conversion.

Binary operations truncate to the minimum of the two operand orders.
"""

from fractions import Fraction
from math import factorial

from .partitions import (
    gen_partitions,
    mn_character,
    multiplicities,
    specht_dimension,
    union,
    z_of,
)
from .powerseries import FormalPS1
from .uvpoly import UVPoly


def _as_poly(c) -> UVPoly:
    if isinstance(c, UVPoly):
        return c
    if isinstance(c, (int, Fraction)):
        return UVPoly.const(c)
    raise TypeError(f"cannot use {type(c)!r} as a coefficient")


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


class SymSeries:
    """Element of the arity-truncated symmetric-function series ring."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: dict, trunc: int):
        if trunc < 0:
            raise ValueError("truncation must be nonnegative")
        clean = {}
        for lam, c in coeffs.items():
            c = _as_poly(c)
            if sum(lam) <= trunc and not c.is_zero():
                clean[lam] = c
        self.coeffs = clean
        self.trunc = trunc

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(trunc: int) -> "SymSeries":
        return SymSeries({}, trunc)

    @staticmethod
    def one(trunc: int) -> "SymSeries":
        return SymSeries({(): UVPoly.one()}, trunc)

    @staticmethod
    def power_sum(k: int, trunc: int) -> "SymSeries":
        """The generator p_k."""
        if k < 1:
            raise ValueError("power sums are indexed by positive integers")
        return SymSeries({(k,): UVPoly.one()}, trunc)

    @staticmethod
    def p_monomial(lam: tuple, trunc: int, coeff=1) -> "SymSeries":
        return SymSeries({tuple(lam): _as_poly(coeff)}, trunc)

    @staticmethod
    def homogeneous_h(n: int, trunc: int) -> "SymSeries":
        """h_n = sum over partitions of n of p_lambda / z_lambda."""
        if n > trunc:
            raise ValueError("homogeneous degree exceeds truncation")
        return SymSeries(
            {lam: UVPoly.const(Fraction(1, z_of(lam))) for lam in gen_partitions(n)},
            trunc,
        )

    @staticmethod
    def schur(lam: tuple, trunc: int) -> "SymSeries":
        """s_lambda expanded in power sums."""
        n = sum(lam)
        return SymSeries(
            {
                mu: UVPoly.const(Fraction(mn_character(tuple(lam), mu), z_of(mu)))
                for mu in gen_partitions(n)
            },
            trunc,
        )

    @staticmethod
    def frobenius_from_traces(n: int, traces: dict, trunc: int) -> "SymSeries":
        """Assemble sum_lam traces[lam]/z_lam * p_lam over partitions of n.

        `traces` must provide a value for every partition of n.
        """
        coeffs = {}
        for lam in gen_partitions(n):
            if lam not in traces:
                raise ValueError(f"missing trace for class {lam}")
            coeffs[lam] = _as_poly(traces[lam]) / z_of(lam)
        return SymSeries(coeffs, trunc)

    # -- basic structure --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SymSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self[k] == other[k] for k in keys if sum(k) <= n)

    def __getitem__(self, lam: tuple) -> UVPoly:
        return self.coeffs.get(tuple(lam), UVPoly.zero())

    def arity_part(self, n: int) -> "SymSeries":
        return SymSeries(
            {lam: c for lam, c in self.coeffs.items() if sum(lam) == n}, self.trunc
        )

    def max_arity(self) -> int:
        return max((sum(lam) for lam in self.coeffs), default=0)

    def constant_term(self) -> UVPoly:
        return self[()]

    def truncate(self, trunc: int) -> "SymSeries":
        return SymSeries(self.coeffs, min(self.trunc, trunc))

    def support_keys(self):
        """Keys in canonical order: ascending arity, then lex-decreasing."""
        order = {lam: i for n in range(self.trunc + 1) for i, lam in enumerate(gen_partitions(n))}
        return sorted(self.coeffs, key=lambda lam: (sum(lam), order[lam]))

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, UVPoly)):
            other = SymSeries({(): _as_poly(other)}, self.trunc)
        n = min(self.trunc, other.trunc)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = self[lam] + c
        return SymSeries(out, n)

    __radd__ = __add__

    def __neg__(self):
        return SymSeries({k: -c for k, c in self.coeffs.items()}, self.trunc)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, UVPoly)):
            return self + (-_as_poly(other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, UVPoly)):
            c = _as_poly(other)
            return SymSeries({k: v * c for k, v in self.coeffs.items()}, self.trunc)
        n = min(self.trunc, other.trunc)
        out: dict = {}
        for lam, c1 in self.coeffs.items():
            s1 = sum(lam)
            if s1 > n:
                continue
            for mu, c2 in other.coeffs.items():
                if s1 + sum(mu) > n:
                    continue
                key = union(lam, mu)
                prod = c1 * c2
                prev = out.get(key)
                out[key] = prod if prev is None else prev + prod
        return SymSeries(out, n)

    __rmul__ = __mul__

    def scale(self, c) -> "SymSeries":
        return self * c

    # -- symmetric-function operations ------------------------------------

    def adams(self, k: int) -> "SymSeries":
        """The k-th Adams map: p_j -> p_{jk} and u,v -> u^k,v^k.

        Equals plethysm by p_k on the left.
        """
        if k == 1:
            return self
        out = {}
        for lam, c in self.coeffs.items():
            scaled = tuple(part * k for part in lam)
            if sum(scaled) <= self.trunc:
                out[scaled] = c.adams(k)
        return SymSeries(out, self.trunc)

    def plethysm(self, g: "SymSeries") -> "SymSeries":
        """Plethystic substitution self o g.

        `g` must have zero constant term.  Computed monomial-wise: p_lambda
        maps to the product over parts k of adams(k, g); per-partition
        products are memoized incrementally.
        """
        if not g.constant_term().is_zero():
            raise ValueError("plethysm requires zero constant term in the inner series")
        n = min(self.trunc, g.trunc)
        if not g.coeffs:
            # degenerate input: only the arity-0 part of self survives
            return SymSeries({(): self[()]}, n)
        g = g.truncate(n)
        adams_cache: dict = {}

        def adams_of(k):
            if k not in adams_cache:
                adams_cache[k] = g.adams(k)
            return adams_cache[k]

        prod_cache: dict = {(): SymSeries.one(n)}

        def product_for(lam):
            if lam not in prod_cache:
                rest = product_for(lam[1:])
                prod_cache[lam] = adams_of(lam[0]) * rest
            return prod_cache[lam]

        out = SymSeries.zero(n)
        for lam in sorted(self.coeffs, key=len):
            if sum(lam) > 0 and min(lam) > n:
                continue
            c = self.coeffs[lam]
            out = out + product_for(lam) * c
        return out

    def exp_series(self) -> "SymSeries":
        """Sum over n >= 1 of h_n o self (self must have zero constant term).

        Uses the Newton recurrence n*(h_n o f) = sum_k (p_k o f)(h_{n-k} o f).
        """
        if not self.constant_term().is_zero():
            raise ValueError("exp_series requires zero constant term")
        n = self.trunc
        h_of = [SymSeries.one(n)]
        p_of = {k: self.adams(k) for k in range(1, n + 1)}
        for m in range(1, n + 1):
            acc = SymSeries.zero(n)
            for k in range(1, m + 1):
                acc = acc + p_of[k] * h_of[m - k]
            h_of.append(acc * Fraction(1, m))
        total = SymSeries.zero(n)
        for m in range(1, n + 1):
            total = total + h_of[m]
        return total

    def log_series(self) -> "SymSeries":
        """Inverse of exp_series: the f with exp_series(f) = self.

        Computed by the Moebius formula f = sum_d mu(d)/d * adams_d(log(1+self)).
        """
        if not self.constant_term().is_zero():
            raise ValueError("log_series requires zero constant term")
        n = self.trunc
        # log(1 + self) as a series of products
        log1p = SymSeries.zero(n)
        power = SymSeries.one(n)
        for m in range(1, n + 1):
            power = power * self
            if not power.coeffs:
                break
            log1p = log1p + power * Fraction((-1) ** (m - 1), m)
        total = SymSeries.zero(n)
        for d in range(1, n + 1):
            mu = _mobius(d)
            if mu:
                total = total + log1p.adams(d) * Fraction(mu, d)
        return total

    def pleth_inverse(self) -> "SymSeries":
        """Compositional inverse under plethysm of p_1 + (arity >= 2 terms).

        Solves self o g = p_1 arity by arity; the result also satisfies
        g o self = p_1 to the truncation order.
        """
        n = self.trunc
        if not self.constant_term().is_zero() or self.arity_part(1) != SymSeries.power_sum(1, n):
            raise ValueError("pleth_inverse requires the form p_1 + higher-arity terms")
        higher = SymSeries(
            {lam: c for lam, c in self.coeffs.items() if sum(lam) >= 2}, n
        )
        g = SymSeries.power_sum(1, n)
        for d in range(2, n + 1):
            err = higher.truncate(d).plethysm(g.truncate(d)).arity_part(d)
            coeffs = dict(g.coeffs)
            for lam, c in err.coeffs.items():
                coeffs[lam] = g[lam] - c
            g = SymSeries(coeffs, n)
        return g

    def d_dpk(self, k: int) -> "SymSeries":
        """Formal partial derivative with respect to p_k."""
        out: dict = {}
        for lam, c in self.coeffs.items():
            m = multiplicities(lam).get(k, 0)
            if not m:
                continue
            rest = list(lam)
            rest.remove(k)
            key = tuple(rest)
            term = c * m
            prev = out.get(key)
            out[key] = term if prev is None else prev + term
        return SymSeries(out, self.trunc)

    def d_dp1(self) -> "SymSeries":
        return self.d_dpk(1)

    def to_schur(self) -> dict:
        """Expand into the Schur basis: map partition -> UVPoly.

        a_lam = sum_mu chi^lam(mu) * [p_mu] self.
        """
        out: dict = {}
        for n in range(self.trunc + 1):
            part_n = {lam: c for lam, c in self.coeffs.items() if sum(lam) == n}
            if not part_n:
                continue
            for lam in gen_partitions(n):
                acc = UVPoly.zero()
                for mu, c in part_n.items():
                    chi = mn_character(lam, mu)
                    if chi:
                        acc = acc + c * chi
                if not acc.is_zero():
                    out[lam] = acc
        return out

    @staticmethod
    def from_schur(schur_coeffs: dict, trunc: int) -> "SymSeries":
        """Inverse of to_schur: p_mu coefficient is sum_lam a_lam chi^lam(mu)/z_mu."""
        total = SymSeries.zero(trunc)
        for lam, c in schur_coeffs.items():
            total = total + SymSeries.schur(tuple(lam), trunc) * _as_poly(c)
        return total

    def trace_from_ch(self, n: int, lam: tuple) -> UVPoly:
        """Character value on the class of type lam: z_lam * [p_lam] self."""
        lam = tuple(lam)
        if sum(lam) != n:
            raise ValueError("class type size must equal the arity")
        if n > self.trunc:
            raise ValueError("arity exceeds truncation")
        return self[lam] * z_of(lam)

    def rank1(self, var: str = "x") -> FormalPS1:
        """Rank specialization p_1 -> var, p_k -> 0 for k >= 2."""
        coeffs = [UVPoly.zero() for _ in range(self.trunc + 1)]
        for lam, c in self.coeffs.items():
            if all(p == 1 for p in lam):
                coeffs[len(lam)] = coeffs[len(lam)] + c
        return FormalPS1(var, coeffs, self.trunc)

    def weight_zero(self) -> "SymSeries":
        """Specialize every coefficient at u = v = 0."""
        return SymSeries(
            {lam: c.weight_zero() for lam, c in self.coeffs.items()}, self.trunc
        )

    def map_coeffs(self, fn) -> "SymSeries":
        return SymSeries({lam: fn(c) for lam, c in self.coeffs.items()}, self.trunc)

    # -- presentation ------------------------------------------------------

    def __str__(self):
        from .partitions import format_partition

        parts = [
            f"({self[lam]})*p{format_partition(lam)}" for lam in self.support_keys()
        ]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__

    def schur_str(self) -> str:
        sch = self.to_schur()
        order = {
            lam: i
            for n in range(self.trunc + 1)
            for i, lam in enumerate(gen_partitions(n))
        }
        from .partitions import format_partition

        keys = sorted(sch, key=lambda lam: (sum(lam), order[lam]))
        parts = [f"({sch[lam]})*s{format_partition(lam)}" for lam in keys]
        return " + ".join(parts) if parts else "0"


def schur_dimension_egf(schur_coeffs: dict, trunc: int, var: str = "x") -> FormalPS1:
    """Exponential generating function of dimensions of a Schur expansion."""
    coeffs = [UVPoly.zero() for _ in range(trunc + 1)]
    for lam, c in schur_coeffs.items():
        n = sum(lam)
        if n <= trunc:
            coeffs[n] = coeffs[n] + _as_poly(c) * Fraction(specht_dimension(tuple(lam)), factorial(n))
    return FormalPS1(var, coeffs, trunc)
