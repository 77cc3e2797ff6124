import os
import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]

# Allow running pytest straight from the source tree after a CMake build.
_pkg = ROOT / "build" / "python_pkg"
if _pkg.is_dir() and str(_pkg) not in sys.path:
    sys.path.insert(0, str(_pkg))


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("VERONESE_LAB_CLI", str(ROOT / "build" / "tools" / "veronese-lab"))
    if not os.path.exists(path):
        pytest.skip("veronese-lab binary not built")
    return path
