"""Series pipelines for heavy/light moduli of weighted stable curves.

The two equivariant pipelines transform a fixed-genus series of marked-curve
classes into the corresponding heavy/light series:

  * open_series:   coproduct, then substitute the light-markings exponential
                   into the second factor (smooth locus).
  * closed_series: coproduct, then substitute the rational-tails corrector
                   followed by the exponential (stable compactification).

Numeric shadows of both pipelines act on exponential generating functions by
change of variables; they must agree with the rank specialization of the
equivariant results, and small-arity outputs are independently checked by a
brute-force stratification oracle.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .bisymseries import BiSymSeries, coproduct, exp2_of_p1
from .fixtures import SeriesFixture
from .powerseries import FormalPS1, FormalPS2, compose_ps1_into_ps2
from .symseries import SymSeries
from .uvpoly import UVPoly, divide_diagonal_exact


def stability_ok(g: int, m: int, n: int) -> bool:
    """Heavy/light stability: 2g - 2 + m + min(n, 1) > 0."""
    if g < 0 or m < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    return 2 * g - 2 + m + min(n, 1) > 0


@dataclass(frozen=True)
class HeavyLightResult:
    """Output of a heavy/light pipeline run."""

    genus: int
    variant: str
    data: BiSymSeries
    provenance: dict = field(default_factory=dict)

    def component(self, m: int, n: int) -> BiSymSeries:
        return self.data.arity_component(m, n)


def _mask_stability(g: int, series: BiSymSeries) -> BiSymSeries:
    """Zero all components outside the stability range."""
    return BiSymSeries(
        {
            (lam, mu): c
            for (lam, mu), c in series.coeffs.items()
            if stability_ok(g, sum(lam), sum(mu))
        },
        series.trunc,
    )


def open_series(fx: SeriesFixture, trunc: int | None = None) -> HeavyLightResult:
    """Heavy/light series of the smooth locus from the fixed-genus series.

    Computes coproduct(fx) o_2 Exp of the light generator, truncated at the
    requested total arity, with unstable components removed.
    """
    if fx.variant not in ("open", "weight0"):
        raise ValueError("open_series expects an open or weight0 fixture")
    t = fx.trunc if trunc is None else trunc
    if t > fx.trunc:
        raise ValueError(
            f"requested truncation {t} exceeds fixture truncation {fx.trunc}"
        )
    res = coproduct(fx.data.truncate(t)).pleth2(exp2_of_p1(t))
    res = _mask_stability(fx.genus, res)
    return HeavyLightResult(
        genus=fx.genus,
        variant=fx.variant,
        data=res,
        provenance={fx.name: fx.trunc},
    )


def tail_free_series(
    stable_fx: SeriesFixture, smooth_g0: SeriesFixture, trunc: int | None = None
) -> BiSymSeries:
    """Series of stable curves with no rational tails carrying only light points.

    This is the intermediate coproduct(stable) o_2 (p_1 - d(smooth genus-0)/dp_1)
    of the closed pipeline, exposed for the consistency checks.
    """
    if stable_fx.variant != "closed":
        raise ValueError("tail_free_series expects a closed fixture")
    if smooth_g0.variant != "open" or smooth_g0.genus != 0:
        raise ValueError("the corrector fixture must be the genus-0 open series")
    t_max = min(stable_fx.trunc, smooth_g0.trunc - 1)
    t = t_max if trunc is None else trunc
    if t > t_max:
        raise ValueError(f"requested truncation {t} exceeds available {t_max}")
    deriv = smooth_g0.data.d_dp1().truncate(t)
    inner = BiSymSeries.power_sum(1, 2, t) - BiSymSeries.inject(deriv, 2)
    return coproduct(stable_fx.data.truncate(t)).pleth2(inner)


def closed_series(
    stable_fx: SeriesFixture, smooth_g0: SeriesFixture, trunc: int | None = None
) -> HeavyLightResult:
    """Heavy/light series of the compactification.

    coproduct(stable) o_2 (p_1 - d(smooth_0)/dp_1) o_2 Exp(light generator),
    truncated and stability-masked.
    """
    core = tail_free_series(stable_fx, smooth_g0, trunc)
    t = core.trunc
    res = core.pleth2(exp2_of_p1(t))
    res = _mask_stability(stable_fx.genus, res)
    return HeavyLightResult(
        genus=stable_fx.genus,
        variant="closed",
        data=res,
        provenance={stable_fx.name: stable_fx.trunc, smooth_g0.name: smooth_g0.trunc},
    )


# -- genus-0 closed forms -----------------------------------------------------


def _falling_binomial_poly(k: int) -> UVPoly:
    """The polynomial binom(uv, k) = uv(uv-1)...(uv-k+1)/k!."""
    acc = UVPoly.one()
    for i in range(k):
        acc = acc * (UVPoly.uv_power(1) - UVPoly.const(i))
    return acc / Fraction(_factorial(k))


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def genus0_numeric_closed_form(order: int) -> FormalPS1:
    """Numeric genus-0 corrector series in y with UVPoly coefficients.

    The y^n/n! coefficient for n >= 2 equals minus the numeric series value
    of the smooth genus-0 space with n+1 markings; the series equals
    y + ((y+1)^{uv} - uv*y - 1) / (uv - u^2 v^2), with the division performed
    exactly on each coefficient (the numerator is always divisible; failure
    signals an internal invariant violation).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [UVPoly.zero(), UVPoly.one()]
    divisor = {1: Fraction(1), 2: Fraction(-1)}  # uv - (uv)^2
    for k in range(2, order + 1):
        coeffs.append(divide_diagonal_exact(_falling_binomial_poly(k), divisor))
    return FormalPS1("y", coeffs, order)


def legendre_check(smooth_fx: SeriesFixture, stable_fx: SeriesFixture, trunc: int | None = None) -> bool:
    """Verify the genus-0 smooth/stable derivative series are inverse.

    Checks (p_1 - d(smooth)/dp_1) o (p_1 + d(stable)/dp_1) = p_1 to the
    common truncation.
    """
    if smooth_fx.genus != 0 or stable_fx.genus != 0:
        raise ValueError("legendre_check expects genus-0 fixtures")
    t_max = min(smooth_fx.trunc, stable_fx.trunc) - 1
    t = t_max if trunc is None else min(trunc, t_max)
    p1 = SymSeries.power_sum(1, t)
    lhs = p1 - smooth_fx.data.d_dp1().truncate(t)
    rhs = p1 + stable_fx.data.d_dp1().truncate(t)
    return lhs.plethysm(rhs) == p1


# -- numeric change-of-variables pipelines ------------------------------------


def _expm1_ps2(order: int) -> FormalPS2:
    """e^y - 1 as a bivariate series in (x, y)."""
    coeffs = {(0, j): Fraction(1, _factorial(j)) for j in range(1, order + 1)}
    return FormalPS2(("x", "y"), coeffs, order)


def open_series_numeric(b_numeric: FormalPS1, order: int | None = None) -> FormalPS2:
    """Numeric heavy/light smooth series: substitute x -> x + e^y - 1."""
    n = b_numeric.order if order is None else order
    if n > b_numeric.order:
        raise ValueError("requested order exceeds the input series order")
    w = FormalPS2.variable(("x", "y"), 1, n) + _expm1_ps2(n)
    return compose_ps1_into_ps2(b_numeric.truncate(n), w)


def closed_series_numeric(bbar_numeric: FormalPS1, order: int | None = None) -> FormalPS2:
    """Numeric heavy/light stable series: substitute x -> z(x, y).

    z = x + (genus-0 corrector composed with e^y - 1); expanding the closed
    form reproduces x + e^y + (e^{uv y} - uv e^y + uv - 1)/(uv - u^2v^2) - 1.
    """
    n = bbar_numeric.order if order is None else order
    if n > bbar_numeric.order:
        raise ValueError("requested order exceeds the input series order")
    corr = genus0_numeric_closed_form(max(n, 1))
    zsub = FormalPS2.variable(("x", "y"), 1, n) + compose_ps1_into_ps2(
        corr.truncate(n), _expm1_ps2(n)
    )
    return compose_ps1_into_ps2(bbar_numeric.truncate(n), zsub)


# -- genus-1 Euler-characteristic closed forms --------------------------------


def _eps_poly(order: int) -> FormalPS1:
    """The quartic correction polynomial used by the genus-1 closed forms."""
    c = [
        Fraction(0),
        Fraction(19, 12),
        Fraction(23, 24),
        Fraction(10, 36),
        Fraction(1, 24),
    ]
    return FormalPS1("y", [UVPoly.const(v) for v in c[: order + 1]], order)


def genus1_light_chi_egf(order: int) -> FormalPS1:
    """EGF of Euler characteristics of the genus-1 all-light stable spaces.

    f(y) = -y/12 - log(1-y)/2 + eps(e^y - 1); the y^n coefficient times n!
    is the Euler characteristic of the space with n light markings.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    y = FormalPS1.identity("y", order)
    one_minus_y = FormalPS1("y", [UVPoly.one(), UVPoly.const(-1)], order)
    expm1 = _exp_minus_one(order)
    f = y * Fraction(-1, 12) - one_minus_y.log() * Fraction(1, 2)
    return f + _eps_poly(order).compose(expm1)


def _exp_minus_one(order: int) -> FormalPS1:
    coeffs = [UVPoly.zero()] + [
        UVPoly.const(Fraction(1, _factorial(j))) for j in range(1, order + 1)
    ]
    return FormalPS1("y", coeffs, order)


def genus1_stable_chi_egf(order: int) -> FormalPS1:
    """EGF of Euler characteristics of the genus-1 fully-marked stable spaces.

    Obtained from the light closed form by composing with the compositional
    inverse g of the u=v=1 specialization of the genus-0 corrector:
    -log(1+g)/12 - log(1 - log(1+g))/2 + eps(g).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    corr = genus0_numeric_closed_form(order)
    at_one = FormalPS1(
        "y", [UVPoly.const(c.eval(1, 1)) for c in corr.coeffs], order
    )
    g = at_one.reversion()
    one = UVPoly.one()
    log1pg = (g + one).log()
    inner = (FormalPS1("y", [one], order) - log1pg).log()
    return log1pg * Fraction(-1, 12) - inner * Fraction(1, 2) + _eps_poly(order).compose(g)


# -- derivative slice and tropical identities ----------------------------------


def slice_n1(fx: SeriesFixture, m: int) -> BiSymSeries:
    """The single-light-marking slice from the derivative of the next arity.

    Returns (d/dp_1 of the arity-(m+1) term), injected into factor 1, times
    the factor-2 singleton Schur generator.
    """
    if m + 1 > fx.trunc:
        raise ValueError(f"fixture truncation {fx.trunc} is too small for m={m}")
    term = fx.data.arity_part(m + 1)
    deriv = term.d_dp1()
    return BiSymSeries.inject(deriv, 1) * BiSymSeries.power_sum(1, 2, m + 1)


def tropical_euler(result: HeavyLightResult, m: int, n: int) -> BiSymSeries:
    """Equivariant Euler characteristic of the tropical heavy/light link.

    s_m^{(1)} s_n^{(2)} minus the weight-zero specialization of the open
    component; defined only where the tropical space is connected
    (genus >= 1, or genus 0 with m + n > 4).
    """
    g = result.genus
    if not (g >= 1 or (g == 0 and m + n > 4)):
        raise ValueError(
            f"tropical space for genus {g}, ({m},{n}) is not covered by the identity"
        )
    if result.variant not in ("open", "weight0"):
        raise ValueError("tropical_euler consumes the open-series result")
    comp = result.component(m, n).weight_zero()
    t = result.data.trunc
    sm = BiSymSeries.inject(SymSeries.homogeneous_h(m, t), 1)
    sn = BiSymSeries.inject(SymSeries.homogeneous_h(n, t), 2)
    return sm * sn - comp
