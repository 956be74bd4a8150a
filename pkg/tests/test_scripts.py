import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize(
    "script, args",
    [("reproduce_bounds.py", ["--max-n", "3", "--max-s", "3"]), ("sharpness_check.py", ["--max-cube", "3"])],
)
def test_script_runs_clean(script, args):
    proc = subprocess.run([sys.executable, str(SCRIPTS / script), *args], capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    assert "MISMATCH" not in proc.stdout and "VIOLATED" not in proc.stdout
