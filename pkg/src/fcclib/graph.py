"""Function-dependent conflict graphs and code extraction.

Vertices are all (message, parity) concatenations, indexed by canonical rank.
Two vertices conflict (are adjacent) when they cannot coexist in one code:
either they share the message part, or their function values differ while the
concatenated words sit closer than the required distance 2t+1.  An
independent set with one vertex per message is exactly an encoder table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CodeNotFoundError, DecodingFailureError
from .fields import VectorIndex, hamming_distance
from .functions import FunctionSpec, coset_decomposition
from .mis import DEFAULT_NODE_BUDGET, MisResult, max_independent_set

GRAPH_VERTEX_LIMIT = 2**16
EXACT_ALPHA_LIMIT = 2**11


@dataclass(frozen=True)
class FccGraph:
    """Conflict graph on q^(k+r) vertices with bit-packed adjacency rows.

    Vertex rank = rank(message) * q^r + rank(parity), i.e. the canonical
    rank of the concatenated digit string.
    """

    q: int
    k: int
    r: int
    t: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        expect = self.q ** (self.k + self.r)
        if len(self.rows) != expect:
            raise ValueError(f"expected {expect} adjacency rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")

    @property
    def n_vertices(self) -> int:
        return len(self.rows)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2


@dataclass(frozen=True)
class FccEncoder:
    """Systematic encoder: message u maps to the codeword (u, parity[rank(u)])."""

    f: FunctionSpec
    t: int
    r: int
    parity: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError("t must be >= 1")
        if self.r < 0:
            raise ValueError("r must be >= 0")
        expect = self.f.q**self.f.k
        if len(self.parity) != expect:
            raise ValueError(f"expected {expect} parity words, got {len(self.parity)}")
        for word in self.parity:
            if len(word) != self.r:
                raise ValueError(f"parity word {word} does not have length {self.r}")
            if any(not 0 <= d < self.f.q for d in word):
                raise ValueError(f"parity word {word} has symbols outside F_{self.f.q}")

    @property
    def q(self) -> int:
        return self.f.q

    @property
    def k(self) -> int:
        return self.f.k

    def encode(self, u: tuple[int, ...]) -> tuple[int, ...]:
        """Codeword for message u."""
        rank = VectorIndex(self.f.q, self.f.k).rank(u)
        return tuple(u) + self.parity[rank]


def build_graph(
    f: FunctionSpec, t: int, r: int, limit: int = GRAPH_VERTEX_LIMIT
) -> FccGraph:
    """Conflict graph for candidate codes of redundancy r protecting f at radius t.

    Edge rule: distinct vertices (u, p), (u', p') are adjacent when u == u',
    or when f(u) != f(u') and the concatenations differ in fewer than 2t+1
    positions.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    q, k = f.q, f.k
    n_vertices = q ** (k + r)
    if n_vertices > limit:
        raise ValueError(f"graph would have {n_vertices} vertices; limit is {limit}")
    cls = coset_decomposition(f).class_of
    need = 2 * t + 1
    p_count = q**r

    if q == 2 and f.mode == "linear":
        # Adjacency depends only on the XOR of the two vertex ranks.
        kernel = cls[0]
        edge_diffs = []
        for z in range(1, n_vertices):
            if z >> r == 0:
                edge_diffs.append(z)
            elif cls[z >> r] != kernel and z.bit_count() < need:
                edge_diffs.append(z)
        rows = []
        for i in range(n_vertices):
            acc = 0
            for z in edge_diffs:
                acc |= 1 << (i ^ z)
            rows.append(acc)
        return FccGraph(q=q, k=k, r=r, t=t, rows=tuple(rows))

    msg_index = VectorIndex(q, k)
    par_index = VectorIndex(q, r)
    u_vecs = [msg_index.vector(i) for i in range(q**k)]
    p_vecs = [par_index.vector(i) for i in range(p_count)]
    # Small distance tables keep the pair loop to integer lookups.
    du = [
        [hamming_distance(a, b) for b in u_vecs] for a in u_vecs
    ] if q**k <= 1024 else None
    dp = [[hamming_distance(a, b) for b in p_vecs] for a in p_vecs]
    rows = [0] * n_vertices
    for i in range(n_vertices):
        ui, pi = divmod(i, p_count)
        for j in range(i + 1, n_vertices):
            uj, pj = divmod(j, p_count)
            if ui == uj:
                edge = True
            elif cls[ui] != cls[uj]:
                d_msg = (
                    du[ui][uj] if du is not None
                    else hamming_distance(u_vecs[ui], u_vecs[uj])
                )
                edge = d_msg + dp[pi][pj] < need
            else:
                edge = False
            if edge:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return FccGraph(q=q, k=k, r=r, t=t, rows=tuple(rows))


def independence_number(
    G: FccGraph,
    target: int | None = None,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    deadline: float | None = None,
) -> MisResult:
    """Exact independence number of G, or a decision once ``target`` is hit.

    Exact mode (no target) is restricted to graphs of at most 2^11 vertices;
    decision mode accepts anything that was buildable.
    """
    if target is None and G.n_vertices > EXACT_ALPHA_LIMIT:
        raise ValueError(
            f"exact search limited to {EXACT_ALPHA_LIMIT} vertices; "
            f"got {G.n_vertices} (pass a target for decision mode)"
        )
    return max_independent_set(
        G.rows, target=target, node_budget=node_budget, deadline=deadline
    )


def extract_fcc(
    G: FccGraph,
    f: FunctionSpec,
    t: int,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    deadline: float | None = None,
) -> FccEncoder:
    """Extract an encoder from an independent set of size q^k in G.

    Raises CodeNotFoundError when the search proves no such set exists, and
    BudgetExceededError when the search ran out of nodes first.
    """
    if f.q != G.q or f.k != G.k or t != G.t:
        raise ValueError("graph was built for different (f, t) parameters")
    target = G.q**G.k
    result = max_independent_set(
        G.rows, target=target, node_budget=node_budget, deadline=deadline
    )
    if result.size < target:
        raise CodeNotFoundError(
            f"no independent set of size {target} at redundancy {G.r}"
        )
    p_count = G.q**G.r
    par_index = VectorIndex(G.q, G.r)
    parity: list[tuple[int, ...] | None] = [None] * target
    for v in result.members:
        u_rank, p_rank = divmod(v, p_count)
        if parity[u_rank] is not None:
            raise CodeNotFoundError(
                "independent set repeats a message value; no encoder extracted"
            )
        parity[u_rank] = par_index.vector(p_rank)
    if any(word is None for word in parity):
        raise CodeNotFoundError(
            "independent set misses a message value; no encoder extracted"
        )
    return FccEncoder(f=f, t=t, r=G.r, parity=tuple(parity))


def find_fcc_violation(
    E: FccEncoder,
) -> tuple[tuple[int, ...], tuple[int, ...], int] | None:
    """First message pair breaking the distance property, as (u_i, u_j,
    codeword distance), or None when the encoder is a valid code."""
    q, k = E.f.q, E.f.k
    cls = coset_decomposition(E.f).class_of
    msg_index = VectorIndex(q, k)
    vecs = [msg_index.vector(i) for i in range(q**k)]
    need = 2 * E.t + 1
    for i in range(q**k):
        for j in range(i + 1, q**k):
            if cls[i] == cls[j]:
                continue
            d = hamming_distance(vecs[i], vecs[j]) + hamming_distance(
                E.parity[i], E.parity[j]
            )
            if d < need:
                return (vecs[i], vecs[j], d)
    return None


def verify_fcc(E: FccEncoder) -> bool:
    """Check the defining distance property over all message pairs."""
    return find_fcc_violation(E) is None


def decode(E: FccEncoder, y: tuple[int, ...]):
    """Function value of the nearest codeword to y, if one lies within radius t.

    Raises DecodingFailureError when every codeword is farther than t; the
    decoder never guesses.
    """
    q, k, r = E.f.q, E.f.k, E.r
    if len(y) != k + r:
        raise ValueError(f"received word must have length {k + r}")
    if any(not 0 <= d < q for d in y):
        raise ValueError(f"received word {y} has symbols outside F_{q}")
    head, tail = tuple(y[:k]), tuple(y[k:])
    msg_index = VectorIndex(q, k)
    best_d = None
    best_rank = -1
    for rank in range(q**k):
        d = hamming_distance(msg_index.vector(rank), head) + hamming_distance(
            E.parity[rank], tail
        )
        if best_d is None or d < best_d:
            best_d = d
            best_rank = rank
    if best_d is None or best_d > E.t:
        raise DecodingFailureError(
            f"no codeword within distance {E.t} of the received word"
        )
    return E.f.eval(msg_index.vector(best_rank))


@dataclass(frozen=True)
class BlockCirculantReport:
    """Outcome of the nested circulant-structure check; truthy when it holds.

    ``violation`` pinpoints the first failure as (digit position, row rank,
    column rank): incrementing that digit of both coordinates changed the
    adjacency entry.
    """

    holds: bool
    violation: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _digit_increment_perm(q: int, n: int, position: int) -> list[int]:
    """Rank permutation that adds 1 (mod q) to one digit of every vector."""
    place = q ** (n - 1 - position)
    perm = []
    for x in range(q**n):
        digit = (x // place) % q
        perm.append(x + place if digit < q - 1 else x - (q - 1) * place)
    return perm


def verify_block_circulant(G: FccGraph, f: FunctionSpec) -> BlockCirculantReport:
    """Check that the adjacency matrix is circulant in q-by-q blocks at every
    nesting level, i.e. invariant under jointly incrementing any one digit of
    the row and column indices.
    """
    if f.q != G.q:
        raise ValueError("function and graph disagree on the field size")
    q = G.q
    n = G.k + G.r
    n_vertices = G.n_vertices
    for position in range(n):
        perm = _digit_increment_perm(q, n, position)
        for x in range(n_vertices):
            row = G.rows[x]
            shifted = 0
            while row:
                low = row & -row
                shifted |= 1 << perm[low.bit_length() - 1]
                row ^= low
            expect = G.rows[perm[x]]
            if shifted != expect:
                diff = shifted ^ expect
                y = (diff & -diff).bit_length() - 1
                return BlockCirculantReport(
                    holds=False, violation=(position, perm[x], y)
                )
    return BlockCirculantReport(holds=True)


def cartesian_bound_graph(
    f: FunctionSpec, t: int, r: int, limit: int = GRAPH_VERTEX_LIMIT
) -> FccGraph:
    """Cartesian product of the parity-free graph with a complete graph on
    the q^r parity words, on the same vertex set as build_graph(f, t, r).

    Edges: same message with different parity, or parity equal and messages
    adjacent in the parity-free graph.  Every edge here is also an edge of
    the full graph, which yields alpha(full) <= q^r * alpha(parity-free).
    """
    q, k = f.q, f.k
    n_vertices = q ** (k + r)
    if n_vertices > limit:
        raise ValueError(f"graph would have {n_vertices} vertices; limit is {limit}")
    g0 = build_graph(f, t, 0, limit=limit)
    p_count = q**r
    rows = []
    for i in range(n_vertices):
        ui, pi = divmod(i, p_count)
        block = ((1 << p_count) - 1) << (ui * p_count)
        acc = block ^ (1 << i)
        nbrs = g0.rows[ui]
        while nbrs:
            low = nbrs & -nbrs
            acc |= 1 << ((low.bit_length() - 1) * p_count + pi)
            nbrs ^= low
        rows.append(acc)
    return FccGraph(q=q, k=k, r=r, t=t, rows=tuple(rows))
