from fractions import Fraction
from math import factorial

import pytest

from heavylight.bisymseries import BiSymSeries
from heavylight.fixtures import load_fixture
from heavylight.oracle import (
    cycle_type,
    oracle_compare,
    oracle_open_ch,
    representative_of_type,
    set_partitions,
    stirling2,
    stirling2_recurrence,
    stirling_rank_check,
    vertex_stable,
)
from heavylight.pipeline import open_series, open_series_numeric
from heavylight.symseries import SymSeries
from heavylight.uvpoly import UVPoly


def test_set_partitions_bell_numbers():
    bell = [1, 1, 2, 5, 15, 52, 203]
    for n, b in enumerate(bell):
        assert sum(1 for _ in set_partitions(n)) == b


def test_stirling2():
    for n in range(1, 9):
        assert stirling2(n, n) == 1
        assert stirling2(n, 1) == 1
    assert stirling2(4, 2) == 7
    for n in range(10):
        for k in range(n + 2):
            assert stirling2(n, k) == stirling2_recurrence(n, k)
    with pytest.raises(ValueError):
        stirling2(13, 2)


def test_cycle_type_and_representative():
    assert cycle_type((2, 1, 3)) == (2, 1)
    for mu in [(3, 2, 1), (4,), (1, 1, 1)]:
        assert cycle_type(representative_of_type(mu)) == mu


def test_oracle_heavy_only_is_injection():
    smooth1 = load_fixture("genus1_smooth")
    for m in range(1, 5):
        got = oracle_open_ch(1, m, 0, smooth1)
        want = BiSymSeries.inject(smooth1.data.arity_part(m), 1).truncate(m)
        assert got == want


def test_oracle_matches_pipeline_genus1():
    smooth1 = load_fixture("genus1_smooth")
    res = open_series(smooth1, trunc=5)
    rows = oracle_compare(1, smooth1, res, 5)
    assert rows and all(ok for _, _, ok in rows)


def test_oracle_matches_pipeline_genus2_weight0():
    w0 = load_fixture("genus2_smooth_weight0")
    res = open_series(w0, trunc=5)
    rows = oracle_compare(2, w0, res, 5)
    assert rows and all(ok for _, _, ok in rows)
    got = oracle_open_ch(2, 0, 2, w0)
    assert got.to_schur_pairs() == {((), (2,)): UVPoly.const(-1)}


def test_oracle_cap():
    smooth1 = load_fixture("genus1_smooth")
    with pytest.raises(ValueError):
        oracle_open_ch(1, 4, 4, smooth1)


def test_stirling_rank_check():
    smooth1 = load_fixture("genus1_smooth")
    b = smooth1.data.rank1("x")
    numeric_smooth = {k: b[k] * factorial(k) for k in range(1, smooth1.trunc + 1)}
    table = open_series_numeric(b, smooth1.trunc)
    # n = 1 reduces to the next smooth value
    assert stirling_rank_check(1, 2, 1, table, numeric_smooth)
    assert table[(2, 1)] * (factorial(2) * factorial(1)) == numeric_smooth[3]
    # weight-zero genus-1 instance with several blocks
    assert stirling_rank_check(1, 1, 3, table, numeric_smooth)
    for m in range(4):
        for n in range(0, 5 - m):
            assert stirling_rank_check(1, m, n, table, numeric_smooth)


def test_vertex_stable():
    # terminal rational tail carrying weights that sum to 1 is unstable
    assert not vertex_stable(0, 1, [Fraction(1, 2), Fraction(1, 2)])
    assert vertex_stable(0, 1, [1, Fraction(1, 5)])
    assert not vertex_stable(1, 0, [])
    assert vertex_stable(1, 1, [])
    with pytest.raises(ValueError):
        vertex_stable(0, 1, [2])


def test_vertex_stable_monotone_in_heavy_weights():
    cases = [
        (0, 1, [Fraction(1, 3)]),
        (0, 2, []),
        (1, 0, []),
        (0, 1, [Fraction(1, 2), Fraction(1, 2)]),
    ]
    for g, s, ws in cases:
        if vertex_stable(g, s, ws):
            assert vertex_stable(g, s, ws + [1])


def test_oracle_input_agnostic_identity():
    # the stratification identity is linear in the input series: it holds
    # for the stable genus-1 fixture fed through the open pipeline as well
    stable1 = load_fixture("genus1_stable")
    res = open_series(
        type(stable1)(
            name=stable1.name,
            genus=1,
            variant="open",
            trunc=5,
            data=stable1.data.truncate(5),
        )
    )
    for m in range(3):
        for n in range(3 - m):
            got = oracle_open_ch(1, m, n, stable1)
            assert got == res.component(m, n)
