import pytest

from heavylight.fixtures import (
    FixtureError,
    SHIPPED,
    load_fixture,
    parse_fixture,
    write_fixture,
)
from heavylight.symseries import SymSeries
from heavylight.uvpoly import UVPoly

MINIMAL = """\
series demo
genus 0
variant open
truncation 4
term n=3 lambda=[3] poly=1*u^0*v^0
"""


def test_parse_minimal():
    fx = parse_fixture(MINIMAL)
    assert fx.name == "demo"
    assert fx.genus == 0
    assert fx.variant == "open"
    assert fx.trunc == 4
    assert fx.data == SymSeries({(3,): UVPoly.one()}, 4)


def test_duplicate_keys_error():
    text = MINIMAL + "term n=3 lambda=[3] poly=2*u^0*v^0\n"
    with pytest.raises(FixtureError) as err:
        parse_fixture(text)
    assert "duplicate" in str(err.value)


def test_term_arity_exceeding_truncation():
    text = MINIMAL + "term n=5 lambda=[5] poly=1*u^0*v^0\n"
    with pytest.raises(FixtureError) as err:
        parse_fixture(text)
    assert "exceeds truncation" in str(err.value)


def test_parse_error_carries_line_number():
    bad = MINIMAL.replace("term n=3 lambda=[3]", "term n=3 lambda=[2,1junk]")
    with pytest.raises(FixtureError) as err:
        parse_fixture(bad)
    assert err.value.lineno == 5


def test_size_mismatch_error():
    bad = MINIMAL.replace("lambda=[3]", "lambda=[2]")
    with pytest.raises(FixtureError):
        parse_fixture(bad)


def test_comments_and_blank_lines():
    text = "# header comment\n\n" + MINIMAL + "# trailing\n"
    assert parse_fixture(text).data[(3,)] == UVPoly.one()


def test_round_trip_byte_stability():
    for name in SHIPPED:
        fx = load_fixture(name)
        text = write_fixture(fx)
        again = parse_fixture(text)
        assert again == fx
        assert write_fixture(again) == text


def test_shipped_fixtures_validate():
    from heavylight.verify import fixture_suite

    checks = fixture_suite()
    failures = [name for name, ok, detail in checks if not ok]
    assert not failures, failures


def test_fixture_dir_env_override(tmp_path, monkeypatch):
    fx = parse_fixture(MINIMAL)
    from heavylight.fixtures import save_fixture

    monkeypatch.setenv("HL_FIXTURE_DIR", str(tmp_path))
    save_fixture(fx)
    assert (tmp_path / "demo.hlf").exists()
    assert load_fixture("demo") == fx


def test_missing_fixture_error(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_fixture("nonexistent", tmp_path)
