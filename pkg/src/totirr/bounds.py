"""Closed-form upper bounds on the total irregularity of composed graphs,
plus the parity-dispatched global maximum for a single graph.

Every evaluator builds the actual composite via the products module, so a
BoundReport always compares the formula against a real adjacency-derived
value.  A negative slack on a hypothesis-satisfying pair would falsify a
published theorem and raises FalsificationError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FalsificationError, InputError
from .graph import Graph, is_connected
from .indices import graph_total_irregularity
from .products import ProductKind, apply_product


def bound_theorem1(n: int) -> int:
    """Maximum possible total irregularity over all graphs on n vertices:
    (2n^3 - 3n^2 - 2n)/12 for even n, (2n^3 - 3n^2 - 2n + 3)/12 for odd n."""
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    num = 2 * n**3 - 3 * n**2 - 2 * n
    if n % 2 == 1:
        num += 3
    assert num % 12 == 0, f"bound numerator {num} not divisible by 12 at n={n}"
    return num // 12


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one bound evaluation against the actual composite value."""

    kind: ProductKind
    n1: int
    m1: int
    n2: int
    m2: int
    irr_t_g: int
    irr_t_h: int
    actual: int
    bound: int
    hypothesis_ok: bool

    @property
    def slack(self) -> int:
        return self.bound - self.actual

    @property
    def tight(self) -> bool:
        return self.slack == 0


def _bound_formula(kind: ProductKind, n1, m1, n2, m2, tg, th) -> int:
    if kind is ProductKind.JOIN:
        return tg + th + n2 * (n1 - 1) * (n1 - 2)
    if kind is ProductKind.LEXICOGRAPHIC:
        return n2**3 * tg + n1**2 * th
    if kind is ProductKind.CARTESIAN:
        return n2**2 * tg + n1**2 * th
    if kind is ProductKind.STRONG:
        return n2 * (n2 + 2 * m2) * tg + n1 * (n1 + 2 * m1) * th
    if kind is ProductKind.DIRECT:
        return 2 * n2 * m2 * tg + 2 * n1 * m1 * th
    if kind is ProductKind.CORONA:
        return tg + n1**2 * th + n1**2 * (n2**2 + n1 * n2 - 4 * n2 + 2)
    if kind is ProductKind.DISJUNCTION:
        return n2 * (n2**2 + 2 * m2) * tg + n1 * (n1**2 + 2 * m1) * th
    if kind is ProductKind.SYMDIFF:
        return n2 * (n2**2 + 4 * m2) * tg + n1 * (n1**2 + 4 * m1) * th
    raise InputError(f"unknown product kind {kind!r}")


def _hypothesis_ok(kind: ProductKind, g: Graph, h: Graph) -> bool:
    """Whether the theorem's (partly implicit) hypotheses hold for (g, h).

    Join and corona carry the size ordering n1 >= n2.  Their proofs also
    take 'minimal degree sum' to mean a tree, which presumes the relevant
    operand is connected: join needs both operands connected, corona needs
    h connected.  Without connectivity the formulas are genuinely violated
    (e.g. the join of two edgeless graphs), so these are theorem
    hypotheses, not artifacts of this implementation.
    """
    if kind is ProductKind.JOIN:
        return g.n >= h.n and is_connected(g) and is_connected(h)
    if kind is ProductKind.CORONA:
        return g.n >= h.n and is_connected(h)
    return True


def evaluate_bound(kind: ProductKind, g: Graph, h: Graph) -> BoundReport:
    """Evaluate the theorem bound for `kind` on (g, h) and compare against
    the explicitly constructed composite.

    The formula is always evaluated; hypothesis_ok records whether the
    theorem's hypotheses hold (see _hypothesis_ok).  A violated bound
    under a satisfied hypothesis is a hard failure.
    """
    kind = ProductKind(kind)
    tg = graph_total_irregularity(g)
    th = graph_total_irregularity(h)
    composite = apply_product(kind, g, h)
    actual = graph_total_irregularity(composite)
    bound = _bound_formula(kind, g.n, g.m, h.n, h.m, tg, th)
    hypothesis_ok = _hypothesis_ok(kind, g, h)
    report = BoundReport(
        kind=kind,
        n1=g.n,
        m1=g.m,
        n2=h.n,
        m2=h.m,
        irr_t_g=tg,
        irr_t_h=th,
        actual=actual,
        bound=bound,
        hypothesis_ok=hypothesis_ok,
    )
    if hypothesis_ok and report.slack < 0:
        raise FalsificationError(
            f"{kind.value} bound violated: actual={actual} > bound={bound} "
            f"on operands n1={g.n}, m1={g.m}, n2={h.n}, m2={h.m}"
        )
    return report


def bound_join(g: Graph, h: Graph) -> BoundReport:
    return evaluate_bound(ProductKind.JOIN, g, h)


def bound_lexicographic(g: Graph, h: Graph) -> BoundReport:
    return evaluate_bound(ProductKind.LEXICOGRAPHIC, g, h)


def bound_cartesian(g: Graph, h: Graph) -> BoundReport:
    return evaluate_bound(ProductKind.CARTESIAN, g, h)


def bound_strong(g: Graph, h: Graph) -> BoundReport:
    return evaluate_bound(ProductKind.STRONG, g, h)


def bound_direct(g: Graph, h: Graph) -> BoundReport:
    return evaluate_bound(ProductKind.DIRECT, g, h)


def bound_corona(g: Graph, h: Graph) -> BoundReport:
    return evaluate_bound(ProductKind.CORONA, g, h)


def bound_disjunction(g: Graph, h: Graph) -> BoundReport:
    return evaluate_bound(ProductKind.DISJUNCTION, g, h)


def bound_symdiff(g: Graph, h: Graph) -> BoundReport:
    return evaluate_bound(ProductKind.SYMDIFF, g, h)
