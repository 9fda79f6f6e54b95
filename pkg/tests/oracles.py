"""Independent oracles the package must reproduce.

Kept outside the package on purpose: these know nothing about its
internals and count by a different principle (hook lengths).
"""

import math


def rectangle_syt_count(m: int, p: int) -> int:
    """Standard Young tableaux of the m x p rectangle via hook lengths."""
    hooks = 1
    for r in range(m):
        for c in range(p):
            hooks *= (p - c) + (m - r) - 1
    count, rem = divmod(math.factorial(m * p), hooks)
    assert rem == 0
    return count
