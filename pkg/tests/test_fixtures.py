import pytest

from agbug.fixtures import FIXTURES, verify
from agbug.session import render


@pytest.mark.parametrize("fid", list(FIXTURES))
def test_worked_example(fid):
    rows = verify(fid)
    assert rows
    bad = [f"{r.label}: expected {render(r.expected)}, got {render(r.actual)}"
           for r in rows if not r.ok]
    assert not bad, bad


def test_unknown_fixture():
    with pytest.raises(KeyError):
        verify("2.1")
