"""Independent reference computations used by the tests."""

from __future__ import annotations

from collections import Counter
from typing import Dict

import numpy as np
from scipy.linalg import solve_banded


def fd_spin_current(beta: float, J_c: float, l_sf: float, l_c: float, l_g: float, n: int = 5000) -> float:
    """Spin current reaching an ideal absorber, by finite differences.

    Solves mu'' = mu / l_sf^2 on [-l_g, l_c] with mu = 0 at both ends and a
    spin current beta*J_c injected at x = 0; current is J = -mu'. Each side
    of the injector gets its own uniform grid of ``n`` intervals.
    """
    hg, hc = l_g / n, l_c / n
    k2 = 1.0 / l_sf**2
    # unknowns: nodes x_1 .. x_{2n-1}; node n is the injector
    m = 2 * n - 1
    ab = np.zeros((3, m))
    rhs = np.zeros(m)
    for i in range(m):
        h = hg if i < n - 1 else hc
        if i == n - 1:
            # control volume [-hg/2, hc/2] around the injector
            ab[1, i] = 1 / hg + 1 / hc + k2 * (hg + hc) / 2
            lower, upper = -1 / hg, -1 / hc
            rhs[i] = beta * J_c
        else:
            ab[1, i] = 2 / h**2 + k2
            lower = upper = -1 / h**2
        if i > 0:
            ab[2, i - 1] = lower
        if i < m - 1:
            ab[0, i + 1] = upper
    mu = solve_banded((1, 1), ab, rhs)
    # second-order one-sided derivative at x = l_c, where mu = 0
    return -(3 * 0.0 - 4 * mu[-1] + mu[-2]) / (2 * hc)


def ndr_unclocked_events(netlist, bits: int) -> Dict[str, int]:
    """Gate switching events for one word when every gate fires every cycle.

    A ripple word takes ``bits`` stage cycles. Without per-stage clocking all
    gates of all bits are biased and dissipate in every one of those cycles.
    """
    events: Counter = Counter()
    for _cycle in range(bits):
        for _bit in range(bits):
            for kind, count in netlist.gates.items():
                events[kind] += count
    return dict(events)


def ndr_clocked_events(netlist, bits: int) -> Dict[str, int]:
    """Events when only the stage holding the carry is clocked."""
    events: Counter = Counter()
    for cycle in range(bits):
        for bit in range(bits):
            if bit != cycle:
                continue
            for kind, count in netlist.gates.items():
                events[kind] += count
    return dict(events)
