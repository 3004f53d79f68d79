"""
nondet-agg
Bounded determinism checker for Spark-style aggregate

Usage:
    python main.py check --ops catalogue:mod5_add
    python main.py demo-float --preset cancellation --json
"""

import sys
from pathlib import Path

# Add directories to path
sys.path.append(str(Path(__file__).parent))

from cli.app import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
