"""Defaults for enumeration windows, search caps and diagram geometry."""

import os

# Offset window K: finite parts of enumerated elements span fewer than K periods
DEFAULT_WINDOW = int(os.environ.get("CTILDE_WINDOW", "1"))

# Hurwitz BFS stops after this many tuples and reports truncation
DEFAULT_ORBIT_CAP = int(os.environ.get("CTILDE_ORBIT_CAP", "20000"))

# Safety bound on pairwise sliding sweeps while normalizing
MAX_SLIDING_SWEEPS = 10_000

# Safety bound on crossing-graph closure passes in the join
MAX_JOIN_PASSES = 32

# ---------------------------------------------------------------------------
# SVG strip diagrams: one period is always PERIOD_WIDTH user units wide
# ---------------------------------------------------------------------------

PERIOD_WIDTH = 120
STRIP_HEIGHT = 120
MARGIN = 30
DRAWN_PERIODS = 3
