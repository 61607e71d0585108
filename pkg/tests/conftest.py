from __future__ import annotations

import math
from itertools import product


def brute_compositions(m: int) -> list[tuple[int, ...]]:
    """All compositions of m from the 2^(m-1) choices of cut points."""
    out = []
    for cuts in product((False, True), repeat=m - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


def comb0(a: int, b: int) -> int:
    return math.comb(a, b) if 0 <= b <= a else 0
