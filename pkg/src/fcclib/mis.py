"""Exact maximum-independent-set solver over bit-packed adjacency.

An independent set in the input graph is a clique in its complement, so the
solver runs branch-and-bound clique search (greedy-coloring upper bounds,
candidate sets as arbitrary-precision bitmasks) on the complement.  Branching
order is fixed, so sizes, witnesses, and node counts are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import monotonic

from .errors import BudgetExceededError

DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True)
class MisResult:
    """Result of an independent-set search.

    ``complete`` is True when the size is the exact independence number;
    a decision-mode hit (``target`` reached) reports complete=False because
    the search stopped as soon as the target was met.
    """

    size: int
    members: tuple[int, ...]
    nodes: int
    complete: bool


class _TargetReached(Exception):
    pass


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def max_independent_set(
    adjacency,
    target: int | None = None,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    deadline: float | None = None,
) -> MisResult:
    """Largest independent set of the graph given as per-vertex bitmasks.

    With ``target`` set, the search stops as soon as an independent set of
    that size is found (decision mode).  Exceeding ``node_budget``, or running
    past ``deadline`` (a time.monotonic() timestamp), raises
    BudgetExceededError carrying the best size found so far (lower bound) and
    the root coloring bound (upper bound).
    """
    n = len(adjacency)
    if n == 0:
        return MisResult(size=0, members=(), nodes=0, complete=True)
    full = (1 << n) - 1
    # Clique search runs on the complement.
    nbr = [full & ~adjacency[v] & ~(1 << v) for v in range(n)]

    best = 0
    best_mask = 0
    nodes = 0
    root_bound = n

    def coloring(p: int) -> list[tuple[int, int]]:
        """Vertices of p with greedy color numbers, ascending by color."""
        order = []
        color = 0
        uncolored = p
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, color))
                uncolored &= ~(1 << v)
                avail &= ~(1 << v) & ~nbr[v]
        return order

    def expand(p: int, size: int, mask: int) -> None:
        nonlocal best, best_mask, nodes
        order = coloring(p)
        for v, c in reversed(order):
            if size + c <= best:
                return
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise BudgetExceededError(
                    f"independent-set search exceeded {node_budget} nodes",
                    best_lower=best,
                    best_upper=root_bound,
                )
            if deadline is not None and nodes & 1023 == 0 and monotonic() > deadline:
                raise BudgetExceededError(
                    "independent-set search exceeded the time budget",
                    best_lower=best,
                    best_upper=root_bound,
                )
            bit = 1 << v
            new_mask = mask | bit
            if size + 1 > best:
                best = size + 1
                best_mask = new_mask
                if target is not None and best >= target:
                    raise _TargetReached
            new_p = p & nbr[v]
            if new_p:
                expand(new_p, size + 1, new_mask)
            p &= ~bit

    root_order = coloring(full)
    root_bound = max(c for _, c in root_order)
    try:
        expand(full, 0, 0)
        complete = True
    except _TargetReached:
        complete = False
    return MisResult(
        size=best, members=_bits(best_mask), nodes=nodes, complete=complete
    )
