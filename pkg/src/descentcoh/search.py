"""Exhaustive search over maps ``range(n_dom) -> range(n_cod)`` with pruning.

A candidate is extended one coordinate at a time; ``violates(q)`` sees the
partial assignment (``-1`` = unassigned) and must return True only when some
constraint whose inputs are all assigned fails. Every surviving complete map
is yielded, in lexicographic order of ``q[order[0]], q[order[1]], ...``.
"""
from __future__ import annotations

import numpy as np

from . import config
from .errors import SearchBudgetExceeded


def check_budget(n_dom, n_cod, budget=None, what="maps"):
    budget = config.LIMITS.map_budget if budget is None else budget
    if n_cod ** n_dom > budget:
        raise SearchBudgetExceeded(f"{n_cod}^{n_dom} candidate {what} exceed budget {budget}")


def search_maps(n_dom, n_cod, violates, order=None, budget=None, what="maps"):
    check_budget(n_dom, n_cod, budget, what)
    order = list(range(n_dom)) if order is None else list(order)
    q = np.full(n_dom, -1, dtype=np.int64)

    def rec(pos):
        if pos == n_dom:
            yield q.copy()
            return
        slot = order[pos]
        for v in range(n_cod):
            q[slot] = v
            if not violates(q):
                yield from rec(pos + 1)
        q[slot] = -1

    yield from rec(0)


def known(*arrays):
    """Mask of positions where every array is assigned."""
    m = arrays[0] >= 0
    for a in arrays[1:]:
        m = m & (a >= 0)
    return m


def lookup(q, idx):
    """``q[idx]`` with -1 propagated for negative indices."""
    safe = np.where(idx >= 0, idx, 0)
    return np.where(idx >= 0, q[safe], -1)
