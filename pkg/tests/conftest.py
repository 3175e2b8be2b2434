import sys
from pathlib import Path

# allow running the suite from a fresh checkout without installing
ROOT = Path(__file__).resolve().parent.parent
for entry in (str(ROOT / "src"), str(ROOT / "tests")):
    if entry not in sys.path:
        sys.path.insert(0, entry)
