"""Redundancy bounds: code-size estimates, lower bounds from several routes
(minimum-distance counting, pairwise averaging, independence numbers,
eigenvalues), the exact-search upper bound, and comparison sweeps.

All bound arithmetic is exact (integers and fractions); ceilings are taken
only where a bound is reported in integer form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from time import monotonic

from .cosets import select_subspace_representatives
from .distance import (
    DEFAULT_MAX_ORDER,
    binary_plotkin_bound,
    build_drm,
    build_fdm,
    n_q_exact,
)
from .errors import BudgetExceededError
from .fields import (
    PrimeField,
    VectorIndex,
    hamming_ball_size,
    hamming_distance,
    hamming_weight,
)
from .functions import (
    FunctionSpec,
    _require_linear,
    classify,
    coset_decomposition,
    image_size,
    kernel_weight_sum,
)
from .graph import EXACT_ALPHA_LIMIT, build_graph
from .mis import DEFAULT_NODE_BUDGET, max_independent_set
from .spectrum import eigenvalue_redundancy_bound

AQ_EXACT_LIMIT = 2**12
AQ_AUTO_EXACT_LIMIT = 2**8
AQ_AUTO_ATTEMPT_BUDGET = 100_000


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class AqEstimate:
    """An estimate of the largest q-ary code of length n and distance d.

    ``kind`` records how the value was obtained: "exact", "hamming_upper",
    "singleton_upper", or "table_exact"/"table_upper"/"table_lower" for
    externally supplied rows.  ``witness`` (exact kind) holds a code of the
    stated size.
    """

    q: int
    n: int
    d: int
    value: int
    kind: str
    witness: tuple[tuple[int, ...], ...] | None = None

    @property
    def direction(self) -> str:
        """"exact", "upper", or "lower" relative to the true maximum."""
        if self.kind in ("exact", "table_exact"):
            return "exact"
        if self.kind == "table_lower":
            return "lower"
        return "upper"


def _conflict_rows(q: int, n: int, d: int) -> list[int]:
    """Bit-packed graph on all vectors, adjacent when distance < d."""
    total = q**n
    if q == 2:
        diffs = [z for z in range(1, total) if z.bit_count() < d]
        return [sum(1 << (i ^ z) for z in diffs) for i in range(total)]
    index = VectorIndex(q, n)
    vecs = [index.vector(i) for i in range(total)]
    rows = [0] * total
    for i in range(total):
        for j in range(i + 1, total):
            if hamming_distance(vecs[i], vecs[j]) < d:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


@lru_cache(maxsize=4096)
def a_q_exact(
    q: int, n: int, d: int, node_budget: int | None = DEFAULT_NODE_BUDGET
) -> AqEstimate:
    """Exact largest code size, by exhaustive independent-set search on the
    pairs-too-close conflict graph (every code is such an independent set).

    Conventions at the degenerate edges: length 0 admits one code word when
    d == 1 and none once d >= 2 (no symbols exist to separate two words);
    d > n likewise caps the code at a single word.
    """
    PrimeField(q)
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    if n == 0:
        value = 1 if d == 1 else 0
        witness = ((),) if d == 1 else ()
        return AqEstimate(q=q, n=n, d=d, value=value, kind="exact", witness=witness)
    index = VectorIndex(q, n)
    if d == 1:
        witness = (
            tuple(index.vector(i) for i in range(q**n)) if q**n <= 4096 else None
        )
        return AqEstimate(q=q, n=n, d=d, value=q**n, kind="exact", witness=witness)
    if d > n:
        return AqEstimate(
            q=q, n=n, d=d, value=1, kind="exact", witness=((0,) * n,)
        )
    if d == 2:
        # The parity-check code (digit sum 0) has q^(n-1) words at distance
        # >= 2, meeting the Singleton bound, so it is exactly optimal.
        witness = None
        if q**n <= AQ_EXACT_LIMIT:
            witness = tuple(
                index.vector(i)
                for i in range(q**n)
                if sum(index.vector(i)) % q == 0
            )
        return AqEstimate(
            q=q, n=n, d=d, value=q ** (n - 1), kind="exact", witness=witness
        )
    if q**n > AQ_EXACT_LIMIT:
        raise ValueError(
            f"exact search limited to {AQ_EXACT_LIMIT} words; q^n = {q ** n}"
        )
    rows = _conflict_rows(q, n, d)
    # Any maximum code can be translated to contain the zero word, so fix it
    # and search the subgraph of words at distance >= d from zero.
    total = q**n
    keep = [v for v in range(1, total) if not rows[0] >> v & 1]
    pos = {v: i for i, v in enumerate(keep)}
    sub = []
    for v in keep:
        mask = 0
        row = rows[v]
        for w in keep:
            if row >> w & 1:
                mask |= 1 << pos[w]
        sub.append(mask)
    result = max_independent_set(sub, node_budget=node_budget)
    chosen = [0] + [keep[i] for i in result.members]
    witness = tuple(index.vector(v) for v in sorted(chosen))
    for i in range(len(witness)):
        for j in range(i + 1, len(witness)):
            assert hamming_distance(witness[i], witness[j]) >= d
    return AqEstimate(
        q=q, n=n, d=d, value=len(witness), kind="exact", witness=witness
    )


def a_q_upper(q: int, n: int, d: int, method: str) -> AqEstimate:
    """Classical closed-form upper bounds on the largest code size."""
    PrimeField(q)
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    if method == "hamming":
        kind = "hamming_upper"
        if d > n:
            value = 1
        else:
            value = q**n // hamming_ball_size(q, n, (d - 1) // 2)
    elif method == "singleton":
        kind = "singleton_upper"
        value = q ** (n - d + 1) if n - d + 1 >= 0 else 1
        if d > n:
            value = 1
    else:
        raise ValueError(f"unknown method {method!r}")
    return AqEstimate(q=q, n=n, d=d, value=value, kind=kind)


@lru_cache(maxsize=4096)
def a_q_auto(q: int, n: int, d: int) -> AqEstimate:
    """Best available code-size estimate: exact where the space is small
    (closed forms, or a briefly budgeted search), otherwise the tighter of
    the Hamming and Singleton upper bounds."""
    if n == 0 or d <= 2 or d > n:
        return a_q_exact(q, n, d)
    if q**n <= AQ_AUTO_EXACT_LIMIT:
        try:
            return a_q_exact(q, n, d, AQ_AUTO_ATTEMPT_BUDGET)
        except BudgetExceededError:
            pass
    return min(
        a_q_upper(q, n, d, "hamming"),
        a_q_upper(q, n, d, "singleton"),
        key=lambda est: est.value,
    )


def systematic_ecc_bound(q: int, k: int, d: int, est: AqEstimate) -> int:
    """Smallest r with est.value * q^r >= q^k, i.e. ceil(k - log_q(value)).

    ``est`` must describe (q, k, d) and must not be a lower bound on the
    code size: an underestimate would overstate the required redundancy.
    """
    if (est.q, est.n, est.d) != (q, k, d):
        raise ValueError(
            f"estimate is for (q={est.q}, n={est.n}, d={est.d}), "
            f"not (q={q}, n={k}, d={d})"
        )
    if est.direction == "lower":
        raise ValueError("a lower bound on the code size cannot be used here")
    if est.value < 1:
        raise ValueError("code-size estimate must be positive")
    r = 0
    while est.value * q**r < q**k:
        r += 1
    return r


def theorem1_bound(f: FunctionSpec, t: int, alpha: int) -> int:
    """Smallest r with alpha * q^r >= q^k, for alpha the exact independence
    number of the parity-free conflict graph."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    q, k = f.q, f.k
    r = 0
    while alpha * q**r < q**k:
        r += 1
    return r


def two_t_bound(f: FunctionSpec, t: int) -> int:
    """2t for any non-constant function, 0 for a constant one."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return 2 * t if image_size(f) >= 2 else 0


def plotkin_linear_bound(f: FunctionSpec, t: int) -> Fraction:
    """Averaging bound for linear f:
    (q/(q-1)) * (2t+1) * (1 - q^-l) - k + s / ((q-1) * q^(k-1)),
    with s the total Hamming weight of the kernel."""
    _require_linear(f, "the linear averaging bound")
    if t < 1:
        raise ValueError("t must be >= 1")
    q, k, l = f.q, f.k, f.l
    if l < 1:
        raise ValueError("the bound needs a non-constant linear function")
    s = kernel_weight_sum(f)
    return (
        Fraction(q, q - 1) * (2 * t + 1) * (1 - Fraction(1, q**l))
        - k
        + Fraction(s, (q - 1) * q ** (k - 1))
    )


def fdm_upper_bound(
    f: FunctionSpec,
    t: int,
    r_cap: int | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
    deadline: float | None = None,
) -> int:
    """Achievable redundancy: exact minimum length of a parity code meeting
    the function-distance requirements (search on the FDM)."""
    result = n_q_exact(
        build_fdm(f, t), f.q, r_cap=r_cap, max_order=max_order, deadline=deadline
    )
    if not result.found:
        raise BudgetExceededError(
            f"no parity code found within length cap {result.r_cap}"
        )
    return result.n


def optimality_check(
    f: FunctionSpec, t: int, node_budget: int = 200_000, deadline: float | None = None
) -> bool:
    """True when some choice of minimum-weight coset representatives makes
    the pairwise distance requirements collapse to the function-distance
    matrix — certifying that the FDM search upper bound is exactly optimal.
    """
    _require_linear(f, "the optimality certificate")
    if t < 1:
        raise ValueError("t must be >= 1")
    q, k = f.q, f.k
    need = 2 * t + 1
    fdm = build_fdm(f, t)
    msg_index = VectorIndex(q, k)
    dec = coset_decomposition(f)

    def matches(reps: list[tuple[int, ...]], classes: list[int]) -> bool:
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                gap = need - hamming_distance(reps[i], reps[j])
                if (gap if gap > 0 else 0) != fdm[classes[i]][classes[j]]:
                    return False
        return True

    if classify(f).unit_basis_class:
        sel = select_subspace_representatives(f)
        if matches(list(sel.members), list(sel.class_indices)):
            return True

    # General search: one minimum-weight candidate per class, depth-first
    # with pairwise pruning against the already-chosen prefix.
    candidates = []
    for ranks in dec.classes:
        vecs = [msg_index.vector(rank) for rank in ranks]
        best = min(hamming_weight(v) for v in vecs)
        candidates.append([v for v in vecs if hamming_weight(v) == best])
    order = sorted(range(len(candidates)), key=lambda c: len(candidates[c]))
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def consistent(vec: tuple[int, ...], depth: int) -> bool:
        ci = order[depth]
        for prev_depth, prev in enumerate(chosen):
            gap = need - hamming_distance(prev, vec)
            if (gap if gap > 0 else 0) != fdm[order[prev_depth]][ci]:
                return False
        return True

    def search(depth: int) -> bool:
        nonlocal nodes
        if depth == len(order):
            return True
        for vec in candidates[order[depth]]:
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(
                    f"representative search exceeded {node_budget} nodes"
                )
            if deadline is not None and nodes & 1023 == 0 and monotonic() > deadline:
                raise BudgetExceededError(
                    "representative search exceeded the time budget"
                )
            if consistent(vec, depth):
                chosen.append(vec)
                if search(depth + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


def zll_bound(q: int, k: int, d: int, aq=None) -> int:
    """Smallest r such that for every m up to floor((d-1)/2) the radius-m
    ball in the message space fits inside a length-r code of distance d-2m.

    ``aq`` customizes the code-size estimator (default: exact where small,
    closed-form upper bounds otherwise — upper estimates only relax the
    inequality, keeping the reported r a valid lower bound)."""
    PrimeField(q)
    if d < 2 or k < 1:
        raise ValueError("need d >= 2 and k >= 1")
    if aq is None:
        aq = lambda qq, nn, dd: a_q_auto(qq, nn, dd).value
    m_max = (d - 1) // 2
    balls = [hamming_ball_size(q, k, m) for m in range(m_max + 1)]
    for r in range(k * d + d + 2):
        if all(balls[m] <= aq(q, r, d - 2 * m) for m in range(m_max + 1)):
            return r
    raise AssertionError("scan cap exceeded; estimator is not an upper bound")


def bgs_bound(q: int, k: int, d: int, aq=None) -> int:
    """Smallest r such that for every m up to floor((d-1)/2):
    ball(q,k,m) <= A_q(r, d-2m) - ball(q,r,m)/ball(q,r,d-2m-1) + 1,
    with the division kept as an exact fraction."""
    PrimeField(q)
    if d < 2 or k < 1:
        raise ValueError("need d >= 2 and k >= 1")
    if aq is None:
        aq = lambda qq, nn, dd: a_q_auto(qq, nn, dd).value
    m_max = (d - 1) // 2
    balls = [hamming_ball_size(q, k, m) for m in range(m_max + 1)]
    for r in range(k * d + d + 2):
        ok = True
        for m in range(m_max + 1):
            rhs = (
                aq(q, r, d - 2 * m)
                - Fraction(
                    hamming_ball_size(q, r, m),
                    hamming_ball_size(q, r, d - 2 * m - 1),
                )
                + 1
            )
            if balls[m] > rhs:
                ok = False
                break
        if ok:
            return r
    raise AssertionError("scan cap exceeded; estimator is not an upper bound")


class AqTable:
    """External code-size table: rows keyed by (q, n, d).

    Rows carry kinds table_exact / table_upper / table_lower.  Lookups for
    bounding purposes use exact and upper rows; achievability lookups use
    exact and lower rows (a known code of q^k words at length n shows
    redundancy n-k suffices).
    """

    def __init__(self, rows) -> None:
        self._rows: dict[tuple[int, int, int], list[AqEstimate]] = {}
        for row in rows:
            if not isinstance(row, AqEstimate):
                raise TypeError(f"expected AqEstimate, got {type(row).__name__}")
            self._rows.setdefault((row.q, row.n, row.d), []).append(row)

    def __len__(self) -> int:
        return sum(len(v) for v in self._rows.values())

    def estimate_for(self, q: int, n: int, d: int) -> AqEstimate | None:
        """Tightest usable (exact or upper) row for (q, n, d), if any."""
        rows = self._rows.get((q, n, d), [])
        exact = [r for r in rows if r.direction == "exact"]
        if exact:
            return min(exact, key=lambda r: r.value)
        upper = [r for r in rows if r.direction == "upper"]
        if upper:
            return min(upper, key=lambda r: r.value)
        return None

    def achievable_redundancy(self, q: int, k: int, d: int) -> int | None:
        """Least n-k over rows witnessing a code of size >= q^k (exact or
        lower rows with matching q and d, n >= k)."""
        best = None
        for (qq, n, dd), rows in self._rows.items():
            if qq != q or dd != d or n < k:
                continue
            if any(
                r.direction in ("exact", "lower") and r.value >= q**k
                for r in rows
            ):
                if best is None or n - k < best:
                    best = n - k
        return best


@dataclass(frozen=True)
class CompareRow:
    """One row of the bound-comparison sweep at a fixed message length."""

    k: int
    r_prime: int
    aq_kind: str
    r_bgs: int
    delta_bgs: int
    delta_blb: int | None = None
    delta_bub: int | None = None


def compare_report(
    q: int, d: int, k_range, table: AqTable | None = None
) -> list[CompareRow]:
    """Per-k comparison of the counting bound r' (best available code-size
    estimate; an external table row takes priority) against the ball-packing
    scan r_bgs; with a table, also deltas against the table's own lower and
    achievable redundancies (missing rows leave the cells empty)."""
    out = []
    for k in k_range:
        est = table.estimate_for(q, k, d) if table is not None else None
        if est is None:
            est = a_q_auto(q, k, d)
        r_prime = systematic_ecc_bound(q, k, d, est)
        r_bgs = bgs_bound(q, k, d)
        delta_blb = None
        delta_bub = None
        if table is not None:
            row = table.estimate_for(q, k, d)
            if row is not None:
                delta_blb = r_bgs - systematic_ecc_bound(q, k, d, row)
            r_bub = table.achievable_redundancy(q, k, d)
            if r_bub is not None:
                delta_bub = r_bgs - r_bub
        out.append(
            CompareRow(
                k=k,
                r_prime=r_prime,
                aq_kind=est.kind,
                r_bgs=r_bgs,
                delta_bgs=r_bgs - r_prime,
                delta_blb=delta_blb,
                delta_bub=delta_bub,
            )
        )
    return out


@dataclass(frozen=True)
class BoundEntry:
    """One bound in a report: sense is "lower" or "upper" (on redundancy)."""

    name: str
    sense: str
    rational: Fraction | None
    integer: int | None
    note: str = ""


@dataclass(frozen=True)
class BoundReport:
    """All applicable redundancy bounds for one (f, t) instance."""

    descriptor: str
    entries: tuple[BoundEntry, ...]
    optimal: bool | None = None


def bound_report(
    f: FunctionSpec,
    t: int,
    r_max: int = 8,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    max_order: int = DEFAULT_MAX_ORDER,
    deadline: float | None = None,
) -> BoundReport:
    """Assemble every applicable bound for (f, t), recording per-entry
    assumptions; inapplicable entries carry a reason instead of a value, and
    entries blocked by a solver budget carry a note prefixed "budget: "."""
    if t < 1:
        raise ValueError("t must be >= 1")
    q, k = f.q, f.k
    entries: list[BoundEntry] = []

    entries.append(
        BoundEntry(
            name="distance_2t",
            sense="lower",
            rational=Fraction(two_t_bound(f, t)),
            integer=two_t_bound(f, t),
            note="0 for constant functions",
        )
    )

    if f.mode == "linear" and f.l >= 1:
        val = plotkin_linear_bound(f, t)
        entries.append(
            BoundEntry(
                name="linear_averaging",
                sense="lower",
                rational=val,
                integer=_ceil_frac(val),
                note="closed form from kernel weights",
            )
        )
    else:
        entries.append(
            BoundEntry(
                name="linear_averaging",
                sense="lower",
                rational=None,
                integer=None,
                note="needs a non-constant linear function",
            )
        )

    if q == 2:
        try:
            val = binary_plotkin_bound(build_drm(f, t))
            entries.append(
                BoundEntry(
                    name="pairwise_averaging",
                    sense="lower",
                    rational=val,
                    integer=_ceil_frac(val),
                    note="average over all requirement pairs",
                )
            )
        except ValueError as exc:
            entries.append(
                BoundEntry(
                    name="pairwise_averaging",
                    sense="lower",
                    rational=None,
                    integer=None,
                    note=str(exc),
                )
            )
    else:
        entries.append(
            BoundEntry(
                name="pairwise_averaging",
                sense="lower",
                rational=None,
                integer=None,
                note="binary alphabets only",
            )
        )

    if q**k <= EXACT_ALPHA_LIMIT:
        try:
            alpha = max_independent_set(
                build_graph(f, t, 0).rows,
                node_budget=node_budget,
                deadline=deadline,
            ).size
            entries.append(
                BoundEntry(
                    name="independence",
                    sense="lower",
                    rational=Fraction(theorem1_bound(f, t, alpha)),
                    integer=theorem1_bound(f, t, alpha),
                    note=f"exact alpha = {alpha} at r=0",
                )
            )
        except BudgetExceededError as exc:
            entries.append(
                BoundEntry(
                    name="independence",
                    sense="lower",
                    rational=None,
                    integer=None,
                    note=f"budget: {exc}",
                )
            )
    else:
        entries.append(
            BoundEntry(
                name="independence",
                sense="lower",
                rational=None,
                integer=None,
                note=f"q^k = {q ** k} exceeds the exact-solver limit",
            )
        )

    if f.mode == "linear":
        res = eigenvalue_redundancy_bound(f, t, r_max)
        note = "scan exhausted; true bound may be larger" if res.exhausted else ""
        entries.append(
            BoundEntry(
                name="eigenvalue",
                sense="lower",
                rational=Fraction(res.value),
                integer=res.value,
                note=note,
            )
        )
    else:
        entries.append(
            BoundEntry(
                name="eigenvalue",
                sense="lower",
                rational=None,
                integer=None,
                note="linear functions only",
            )
        )

    try:
        val = fdm_upper_bound(f, t, max_order=max_order, deadline=deadline)
        entries.append(
            BoundEntry(
                name="code_search",
                sense="upper",
                rational=Fraction(val),
                integer=val,
                note="exact parity-code search on the function-distance matrix",
            )
        )
    except BudgetExceededError as exc:
        entries.append(
            BoundEntry(
                name="code_search",
                sense="upper",
                rational=None,
                integer=None,
                note=f"budget: {exc}",
            )
        )
    except ValueError as exc:
        entries.append(
            BoundEntry(
                name="code_search",
                sense="upper",
                rational=None,
                integer=None,
                note=str(exc),
            )
        )

    optimal: bool | None = None
    if f.mode == "linear":
        try:
            optimal = optimality_check(f, t, deadline=deadline)
        except BudgetExceededError:
            optimal = None

    descriptor = f"q={q} k={k} t={t} mode={f.mode}"
    return BoundReport(
        descriptor=descriptor, entries=tuple(entries), optimal=optimal
    )
