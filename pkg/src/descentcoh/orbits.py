"""Partitions of a finite item list from generator edges."""
from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


def partition(n, edges, rank=None):
    """Connected components of the graph on ``range(n)`` with the given edges.

    Classes come back as sorted index tuples; ``rank(i)`` picks the canonical
    member (minimum) of each class and classes are ordered by it.
    """
    if n == 0:
        return []
    edges = list(edges)
    if edges:
        e = np.asarray(edges, dtype=np.int64)
        graph = coo_matrix((np.ones(len(e)), (e[:, 0], e[:, 1])), shape=(n, n))
    else:
        graph = coo_matrix((n, n))
    _, labels = connected_components(graph, directed=True, connection="weak")
    groups = {}
    for i, lab in enumerate(labels):
        groups.setdefault(int(lab), []).append(i)
    rank = rank or (lambda i: i)
    classes = [tuple(sorted(c, key=rank)) for c in groups.values()]
    classes.sort(key=lambda c: rank(c[0]))
    return classes
