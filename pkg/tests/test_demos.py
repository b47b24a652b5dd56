import shutil
import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("script", sorted(p.name for p in DEMOS.glob("*.py")))
def test_demo_runs(script):
    done = subprocess.run([sys.executable, str(DEMOS / script)],
                          capture_output=True, text=True, timeout=120)
    assert done.returncode == 0, done.stderr


@pytest.mark.skipif(shutil.which("simplex-ramsey") is None, reason="console script not installed")
def test_cli_walkthrough():
    done = subprocess.run(["sh", str(DEMOS / "cli_usage.sh")],
                          capture_output=True, text=True, timeout=120)
    assert done.returncode == 0, done.stderr
    assert "Verdict: NOT_DIAMETER_RAMSEY." in done.stdout
    assert '"valid": true' in done.stdout
