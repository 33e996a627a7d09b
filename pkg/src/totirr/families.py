"""Generators for the named graph families.

Includes the two-layer construction attaining the global maximum of the
total irregularity on n vertices (matching vs. apex variant by parity).
"""

from __future__ import annotations

import bisect
import random
from typing import Sequence

import numpy as np

from .errors import InputError
from .graph import Graph, from_edge_list


def gen_empty(n: int) -> Graph:
    if n < 1:
        raise InputError(f"empty graph needs n >= 1, got {n}")
    return Graph(np.zeros((n, n), dtype=bool))


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise InputError(f"complete graph needs n >= 1, got {n}")
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    return Graph(adj)


def gen_path(l: int) -> Graph:
    """Path on l vertices; gen_path(1) is the single vertex."""
    if l < 1:
        raise InputError(f"path needs l >= 1, got {l}")
    return from_edge_list(l, [(i, i + 1) for i in range(l - 1)])


def gen_cycle(k: int) -> Graph:
    if k < 3:
        raise InputError(f"cycle needs k >= 3, got {k}")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def gen_star(n: int) -> Graph:
    """Star on n vertices: vertex 0 adjacent to all others."""
    if n < 1:
        raise InputError(f"star needs n >= 1, got {n}")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def gen_complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; vertices in distinct parts are adjacent.

    A vertex in a part of size p has degree n - p.
    """
    if not parts:
        raise InputError("at least one part is required")
    for p in parts:
        if p < 1:
            raise InputError(f"part sizes must be >= 1, got {p}")
    n = sum(parts)
    labels = np.repeat(np.arange(len(parts)), parts)
    adj = labels[:, None] != labels[None, :]
    return Graph(adj)


def gen_extremal_total_irr(n: int) -> Graph:
    """Graph attaining the maximum total irregularity on n vertices.

    Even n = 2p: top vertices t_1..t_p form a clique, t_i ~ b_j for i < j,
    plus the perfect matching t_i ~ b_i.  Odd n = 2p + 1: same skeleton
    without the matching, plus an apex adjacent to every top vertex.
    Labels: t_i -> i - 1, b_i -> p + i - 1, apex -> 2p.
    """
    if n < 2:
        raise InputError(f"extremal construction needs n >= 2, got {n}")
    p = n // 2
    edges = []
    for i in range(p):
        for j in range(i + 1, p):
            edges.append((i, j))          # clique on the top layer
            edges.append((i, p + j))      # t_i ~ b_j for i < j
    if n % 2 == 0:
        edges.extend((i, p + i) for i in range(p))
    else:
        edges.extend((i, 2 * p) for i in range(p))
    return from_edge_list(n, edges)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniformly random labeled tree on n vertices, deterministic per seed.

    Decodes a random Pruefer sequence; n = 1 and n = 2 are the unique trees.
    """
    if n < 1:
        raise InputError(f"tree needs n >= 1, got {n}")
    if n == 1:
        return gen_empty(1)
    if n == 2:
        return gen_complete(2)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_pruefer(n, seq)


def tree_from_pruefer(n: int, seq: Sequence[int]) -> Graph:
    """Standard Pruefer decoding: repeatedly join the smallest leaf."""
    if len(seq) != n - 2:
        raise InputError(f"Pruefer sequence for n={n} must have length {n - 2}")
    count = [0] * n
    for v in seq:
        count[v] += 1
    edges = []
    leaves = sorted(i for i in range(n) if count[i] == 0)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((leaf, v))
        count[v] -= 1
        if count[v] == 0:
            # keep the leaf pool sorted so decoding is canonical
            bisect.insort(leaves, v)
    edges.append((leaves[0], leaves[1]))
    return from_edge_list(n, edges)
