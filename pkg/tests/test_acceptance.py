"""The eight acceptance criteria, one PASS/FAIL line each in the terminal summary."""
import pytest

from arthurlab import acceptance

LINES: dict[int, str] = {}


@pytest.mark.parametrize("cid", [c[0] for c in acceptance.CRITERIA])
def test_criterion(cid):
    try:
        result = acceptance.run_criterion(cid)
    except Exception:
        LINES[cid] = f"criterion {cid}: FAIL (raised)"
        raise
    LINES[cid] = result.line()
    print(result.line())
    assert result.passed, {k: v for k, v in result.details.items() if not v}
