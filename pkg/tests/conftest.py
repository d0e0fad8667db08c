# tests/conftest.py
import sys
from pathlib import Path

# packages are imported top-level (ampleness, reporters, config, main)
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))
