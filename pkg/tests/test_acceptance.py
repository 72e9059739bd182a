"""One line per acceptance criterion, each checked exactly."""
import pytest

from vvmacdonald import acceptance


@pytest.mark.parametrize("k", [k for k, _, _ in acceptance.CRITERIA])
def test_criterion(k, capsys):
    ok, detail, secs = acceptance.run(k)
    with capsys.disabled():
        print("\n" + acceptance.format_line(k, ok, detail, secs))
    assert ok, detail
