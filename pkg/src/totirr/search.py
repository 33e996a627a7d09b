"""Exhaustive and randomized verification engines.

Labeled graphs on n vertices are identified with integer codes
0 .. 2^(n(n-1)/2)-1 whose bits, most significant first, are the
upper-triangle adjacency entries in graph6 order.  Enumeration, the
brute-force maximum scan, and the bound sweeps all run over contiguous
code ranges, so parallel runs partition the range into blocks and reduce
with a lowest-index tie-break: results are byte-identical at any worker
count.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .errors import FalsificationError, InputError
from .bounds import _bound_formula, _hypothesis_ok, bound_theorem1
from .formats import emit_graph6, triangle_pairs
from .families import (
    gen_complete,
    gen_empty,
    gen_extremal_total_irr,
    gen_path,
    gen_star,
)
from .graph import Graph
from .indices import graph_total_irregularity
from .products import ProductKind, apply_product

ENUM_MAX_N = 8
_BLOCK = 1 << 16


def num_labeled_graphs(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def graph_from_code(n: int, code: int) -> Graph:
    """Decode an enumeration code into a Graph."""
    k = n * (n - 1) // 2
    adj = np.zeros((n, n), dtype=bool)
    for t, (i, j) in enumerate(triangle_pairs(n)):
        if (code >> (k - 1 - t)) & 1:
            adj[i, j] = adj[j, i] = True
    return Graph(adj)


def enumerate_labeled_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, exactly once, in
    lexicographic order of the upper-triangle bit string.

    n = 8 means 2^28 graphs and must be opted into via allow_large.
    """
    if not 1 <= n <= ENUM_MAX_N:
        raise InputError(f"enumeration supports 1 <= n <= {ENUM_MAX_N}, got {n}")
    if n == ENUM_MAX_N and not allow_large:
        raise InputError(
            f"n = {ENUM_MAX_N} enumerates 2^28 graphs; pass allow_large=True to confirm"
        )
    for code in range(num_labeled_graphs(n)):
        yield graph_from_code(n, code)


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one exhaustive or randomized verification task."""

    task: str
    n1: int
    n2: Optional[int]
    cases_examined: int
    max_value: Optional[int] = None
    min_slack: Optional[int] = None
    max_ratio: Optional[Fraction] = None
    witness: Tuple[str, ...] = ()
    seed: Optional[int] = None


def _pair_incidence(n: int) -> np.ndarray:
    """k x n 0/1 matrix mapping upper-triangle bits to vertex degrees."""
    pairs = triangle_pairs(n)
    inc = np.zeros((len(pairs), n), dtype=np.int64)
    for t, (i, j) in enumerate(pairs):
        inc[t, i] = inc[t, j] = 1
    return inc


def _theorem1_block(n: int, start: int, stop: int) -> Tuple[int, int]:
    """Max total irregularity and its lowest code over codes [start, stop)."""
    k = n * (n - 1) // 2
    inc = _pair_incidence(n)
    # ascending-sort coefficients: irr_t = sum (2i - n - 1) d_(i), i 1-based
    coeffs = 2 * np.arange(1, n + 1, dtype=np.int64) - n - 1
    shifts = np.array([k - 1 - t for t in range(k)], dtype=np.int64)
    best_val, best_code = -1, -1
    for lo in range(start, stop, _BLOCK):
        hi = min(lo + _BLOCK, stop)
        codes = np.arange(lo, hi, dtype=np.int64)
        bits = (codes[:, None] >> shifts[None, :]) & 1
        degs = bits @ inc
        degs.sort(axis=1)
        vals = degs @ coeffs
        idx = int(np.argmax(vals))
        val = int(vals[idx])
        if val > best_val:
            best_val, best_code = val, lo + idx
    return best_val, best_code


def _theorem1_worker(args) -> Tuple[int, int]:
    return _theorem1_block(*args)


def _split_range(total: int, workers: int) -> List[Tuple[int, int]]:
    """Contiguous, near-equal partition of [0, total)."""
    workers = max(1, min(workers, total))
    step = (total + workers - 1) // workers
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def verify_theorem1(n: int, workers: int = 1, allow_large: bool = False) -> SearchOutcome:
    """Brute-force the maximum total irregularity over all labeled graphs
    on n vertices and check it equals the closed-form bound.

    A mismatch would falsify the bound and raises FalsificationError.
    """
    if not 2 <= n <= ENUM_MAX_N:
        raise InputError(f"verify_theorem1 supports 2 <= n <= {ENUM_MAX_N}, got {n}")
    if n == ENUM_MAX_N and not allow_large:
        raise InputError(
            f"n = {ENUM_MAX_N} scans 2^28 graphs; pass allow_large=True to confirm"
        )
    total = num_labeled_graphs(n)
    ranges = _split_range(total, workers)
    if len(ranges) == 1:
        results = [_theorem1_block(n, *ranges[0])]
    else:
        with multiprocessing.Pool(len(ranges)) as pool:
            results = pool.map(_theorem1_worker, [(n, lo, hi) for lo, hi in ranges])
    # deterministic reduction: max value, lowest code on ties
    best_val, best_code = -1, -1
    for val, code in results:
        if val > best_val or (val == best_val and code < best_code):
            best_val, best_code = val, code
    expected = bound_theorem1(n)
    if best_val != expected:
        raise FalsificationError(
            f"exhaustive max irr_t at n={n} is {best_val}, formula says {expected}"
        )
    witness = graph_from_code(n, best_code)
    assert graph_total_irregularity(witness) == best_val
    return SearchOutcome(
        task="theorem1",
        n1=n,
        n2=None,
        cases_examined=total,
        max_value=best_val,
        witness=(emit_graph6(witness),),
    )


def _operand_pool(n: int) -> List[Tuple[Graph, int]]:
    """All labeled graphs on n vertices with their total irregularity."""
    pool = []
    for code in range(num_labeled_graphs(n)):
        g = graph_from_code(n, code)
        pool.append((g, graph_total_irregularity(g)))
    return pool


def _sweep_block(kind_tag: str, n1: int, n2: int, start: int, stop: int):
    """Scan pair indices [start, stop); returns partial extrema.

    Pair index p maps to (code_g, code_h) = divmod(p, 2^k2).
    """
    kind = ProductKind(kind_tag)
    pool_g = _operand_pool(n1)
    pool_h = _operand_pool(n2)
    size_h = len(pool_h)
    min_slack: Optional[int] = None
    slack_idx = -1
    max_ratio: Optional[Fraction] = None
    ratio_idx = -1
    hyp_cases = 0
    for p in range(start, stop):
        a, b = divmod(p, size_h)
        g, tg = pool_g[a]
        h, th = pool_h[b]
        if not _hypothesis_ok(kind, g, h):
            continue
        hyp_cases += 1
        actual = graph_total_irregularity(apply_product(kind, g, h))
        bound = _bound_formula(kind, g.n, g.m, h.n, h.m, tg, th)
        slack = bound - actual
        if slack < 0:
            raise FalsificationError(
                f"{kind.value} bound violated at pair index {p}: "
                f"actual={actual} > bound={bound} "
                f"(g={emit_graph6(g)}, h={emit_graph6(h)})"
            )
        if min_slack is None or slack < min_slack:
            min_slack, slack_idx = slack, p
        if bound > 0:
            ratio = Fraction(actual, bound)
            if max_ratio is None or ratio > max_ratio:
                max_ratio, ratio_idx = ratio, p
    return min_slack, slack_idx, max_ratio, ratio_idx, hyp_cases


def _sweep_worker(args):
    return _sweep_block(*args)


def sweep_operation_bounds(
    kind: ProductKind, n1: int, n2: int, workers: int = 1
) -> SearchOutcome:
    """Exhaustively check one operation's bound over every pair of labeled
    graphs on (n1, n2) vertices.

    Reports the minimum slack among hypothesis-satisfying pairs (zero
    confirms a sharpness witness inside the swept universe) and the max
    actual/bound ratio over pairs with positive bound.
    """
    kind = ProductKind(kind)
    if not (1 <= n1 <= 4 and 1 <= n2 <= 4):
        raise InputError(f"exhaustive sweeps support n1, n2 in [1, 4], got {n1}, {n2}")
    total = num_labeled_graphs(n1) * num_labeled_graphs(n2)
    ranges = _split_range(total, workers)
    if len(ranges) == 1:
        results = [_sweep_block(kind.value, n1, n2, *ranges[0])]
    else:
        with multiprocessing.Pool(len(ranges)) as pool:
            results = pool.map(
                _sweep_worker, [(kind.value, n1, n2, lo, hi) for lo, hi in ranges]
            )
    min_slack: Optional[int] = None
    slack_idx = -1
    max_ratio: Optional[Fraction] = None
    ratio_idx = -1
    for part_slack, part_sidx, part_ratio, part_ridx, _ in results:
        if part_slack is not None and (
            min_slack is None
            or part_slack < min_slack
            or (part_slack == min_slack and part_sidx < slack_idx)
        ):
            min_slack, slack_idx = part_slack, part_sidx
        if part_ratio is not None and (
            max_ratio is None
            or part_ratio > max_ratio
            or (part_ratio == max_ratio and part_ridx < ratio_idx)
        ):
            max_ratio, ratio_idx = part_ratio, part_ridx
    witness: Tuple[str, ...] = ()
    if min_slack is not None:
        size_h = num_labeled_graphs(n2)
        a, b = divmod(slack_idx, size_h)
        witness = (emit_graph6(graph_from_code(n1, a)), emit_graph6(graph_from_code(n2, b)))
    return SearchOutcome(
        task="sweep",
        n1=n1,
        n2=n2,
        cases_examined=total,
        min_slack=min_slack,
        max_ratio=max_ratio,
        witness=witness,
    )


def _deterministic_battery(n: int) -> List[Graph]:
    """Named extreme families on n vertices, always probed before sampling."""
    battery = [gen_empty(n), gen_path(n), gen_star(n), gen_complete(n)]
    if n >= 2:
        battery.append(gen_extremal_total_irr(n))
    return battery


def _random_graph(n: int, rng: random.Random) -> Graph:
    """Each edge independently present with probability 1/2."""
    adj = np.zeros((n, n), dtype=bool)
    for i, j in triangle_pairs(n):
        if rng.getrandbits(1):
            adj[i, j] = adj[j, i] = True
    return Graph(adj)


def probe_open_problem(
    kind: ProductKind, n1: int, n2: int, samples: int, seed: int
) -> SearchOutcome:
    """Empirical probe of whether the disjunction / symmetric-difference
    bounds can be attained: deterministic battery of extreme families
    first, then seeded random operand pairs.

    Reports the maximum actual/bound ratio (exact rational, over pairs
    with positive bound) and the minimum slack.  Fully reproducible from
    the seed; gathers evidence only, proves nothing.
    """
    kind = ProductKind(kind)
    if kind not in (ProductKind.DISJUNCTION, ProductKind.SYMDIFF):
        raise InputError(f"probe targets disjunction or symdiff, got {kind.value}")
    if samples < 0:
        raise InputError(f"samples must be >= 0, got {samples}")
    if n1 * n2 > 4096:
        raise InputError(f"probe requires n1*n2 <= 4096, got {n1 * n2}")
    rng = random.Random(seed)
    pairs: List[Tuple[Graph, Graph]] = [
        (g, h) for g in _deterministic_battery(n1) for h in _deterministic_battery(n2)
    ]
    for _ in range(samples):
        pairs.append((_random_graph(n1, rng), _random_graph(n2, rng)))

    min_slack: Optional[int] = None
    slack_pair: Optional[Tuple[Graph, Graph]] = None
    max_ratio: Optional[Fraction] = None
    ratio_pair: Optional[Tuple[Graph, Graph]] = None
    for g, h in pairs:
        tg = graph_total_irregularity(g)
        th = graph_total_irregularity(h)
        actual = graph_total_irregularity(apply_product(kind, g, h))
        bound = _bound_formula(kind, g.n, g.m, h.n, h.m, tg, th)
        slack = bound - actual
        if slack < 0:
            raise FalsificationError(
                f"{kind.value} bound violated: actual={actual} > bound={bound} "
                f"(g={emit_graph6(g)}, h={emit_graph6(h)})"
            )
        if min_slack is None or slack < min_slack:
            min_slack, slack_pair = slack, (g, h)
        if bound > 0:
            ratio = Fraction(actual, bound)
            if max_ratio is None or ratio > max_ratio:
                max_ratio, ratio_pair = ratio, (g, h)
    witness_pair = ratio_pair if ratio_pair is not None else slack_pair
    witness: Tuple[str, ...] = ()
    if witness_pair is not None:
        witness = (emit_graph6(witness_pair[0]), emit_graph6(witness_pair[1]))
    return SearchOutcome(
        task="probe",
        n1=n1,
        n2=n2,
        cases_examined=len(pairs),
        min_slack=min_slack,
        max_ratio=max_ratio,
        witness=witness,
        seed=seed,
    )
