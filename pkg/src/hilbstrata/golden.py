"""Reference generators for the square staircase {1, x, y, xy}, transcribed verbatim.

``PRINTED`` reproduces a published worked example symbol for symbol, in the
text grammar of :mod:`hilbstrata.poly`.  One printed I3 generator has a
misprint (row (0,2) where (1,2) belongs, three times); ``CORRECTED`` holds
the hand-checked version of that entry.
"""

from __future__ import annotations

from .poly import TPoly, parse_tpoly
from .staircase import StandardSet

SQUARE = StandardSet.of([(0, 0), (1, 0), (0, 1), (1, 1)])

PRINTED = {
    "I2": [
        # alpha = (0,2), lambda = (1,0)
        "T[(1,2)|(0,0)] - T[(0,2)|(1,0)]*T[(2,0)|(0,0)] - T[(0,2)|(1,1)]*T[(2,1)|(0,0)]",
        "T[(1,2)|(1,0)] - T[(0,2)|(1,0)]*T[(2,0)|(1,0)] - T[(0,2)|(1,1)]*T[(2,1)|(1,0)] - T[(0,2)|(0,0)]",
        "T[(1,2)|(0,1)] - T[(0,2)|(1,0)]*T[(2,0)|(0,1)] - T[(0,2)|(1,1)]*T[(2,1)|(0,1)]",
        "T[(1,2)|(1,1)] - T[(0,2)|(1,0)]*T[(2,0)|(1,1)] - T[(0,2)|(1,1)]*T[(2,1)|(1,1)] - T[(0,2)|(0,1)]",
        # alpha = (2,0), lambda = (0,1)
        "T[(2,1)|(0,0)] - T[(2,0)|(0,1)]*T[(0,2)|(0,0)] - T[(2,0)|(1,1)]*T[(1,2)|(0,0)]",
        "T[(2,1)|(1,0)] - T[(2,0)|(0,1)]*T[(0,2)|(1,0)] - T[(2,0)|(1,1)]*T[(1,2)|(1,0)]",
        "T[(2,1)|(0,1)] - T[(2,0)|(0,1)]*T[(0,2)|(0,1)] - T[(2,0)|(1,1)]*T[(1,2)|(0,1)] - T[(2,0)|(0,0)]",
        "T[(2,1)|(1,1)] - T[(2,0)|(0,1)]*T[(0,2)|(1,1)] - T[(2,0)|(1,1)]*T[(1,2)|(1,1)] - T[(2,0)|(1,0)]",
    ],
    "I3": [
        "T[(1,2)|(1,0)]*T[(2,0)|(0,0)] + T[(1,2)|(1,1)]*T[(2,1)|(0,0)]"
        " - T[(2,1)|(0,1)]*T[(0,2)|(0,0)] - T[(2,1)|(1,1)]*T[(1,2)|(0,0)]",
        "T[(1,2)|(1,0)]*T[(2,0)|(1,0)] + T[(1,2)|(1,1)]*T[(2,1)|(1,0)] + T[(1,2)|(0,0)]"
        " - T[(2,1)|(0,1)]*T[(0,2)|(1,0)] - T[(2,1)|(1,1)]*T[(1,2)|(1,0)]",
        "T[(1,2)|(1,0)]*T[(2,0)|(0,1)] + T[(1,2)|(1,1)]*T[(2,1)|(0,1)]"
        " - T[(2,1)|(0,1)]*T[(0,2)|(0,1)] - T[(2,1)|(1,1)]*T[(1,2)|(0,1)] - T[(2,1)|(0,0)]",
        "T[(0,2)|(1,0)]*T[(2,0)|(1,1)] + T[(0,2)|(1,1)]*T[(2,1)|(1,1)] + T[(0,2)|(0,1)]"
        " - T[(2,1)|(0,1)]*T[(0,2)|(1,1)] - T[(2,1)|(1,1)]*T[(1,2)|(1,1)] - T[(2,1)|(1,0)]",
    ],
}

# index into PRINTED["I3"] -> hand-checked generator
CORRECTED = {
    3: "T[(1,2)|(1,0)]*T[(2,0)|(1,1)] + T[(1,2)|(1,1)]*T[(2,1)|(1,1)] + T[(1,2)|(0,1)]"
       " - T[(2,1)|(0,1)]*T[(0,2)|(1,1)] - T[(2,1)|(1,1)]*T[(1,2)|(1,1)] - T[(2,1)|(1,0)]",
}


def printed(label: str) -> list[TPoly]:
    return [parse_tpoly(s) for s in PRINTED[label]]


def corrected(label: str) -> list[TPoly]:
    out = printed(label)
    if label == "I3":
        for i, s in CORRECTED.items():
            out[i] = parse_tpoly(s)
    return out
