import pytest

from tsalg.registry import UnknownFixture, fixture_names, run_fixture

EXPECTED_FAIL = {"c3-dreg": {"induced_product_point_literal"}}


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_checks(name):
    rep = run_fixture(name)
    failing = {c.name for c in rep.checks if c.status != "pass"}
    assert failing == EXPECTED_FAIL.get(name, set())
    assert rep.passed == (not failing)


def test_report_json_shape():
    data = run_fixture("c2-dreg").to_json()
    assert set(data) == {"checks", "fixture", "passed", "summary"}
    assert all({"name", "statement", "status"} <= set(c) for c in data["checks"])


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        run_fixture("missing")
