"""Shared oracles and factories for the test suite.

Everything here is deliberately naive and independent of the library's own
algorithms: itertools enumeration instead of rank arithmetic, dense nested
loops instead of bit tricks, plain recursion instead of branch-and-bound.
If a library result and an oracle result disagree, trust the oracle.
"""

from __future__ import annotations

import itertools

from fcclib import coset_decomposition, linear_function, table_function


def all_words(q, n):
    """Every length-n word over {0..q-1} in lexicographic order."""
    return list(itertools.product(range(q), repeat=n))


def slow_distance(x, y):
    assert len(x) == len(y)
    return sum(1 for a, b in zip(x, y) if a != b)


def slow_weight(x):
    return sum(1 for s in x if s != 0)


def clip(x):
    return x if x > 0 else 0


def slow_drm(f, t):
    """Pairwise requirement matrix straight from its definition."""
    words = all_words(f.q, f.k)
    vals = [f.eval(u) for u in words]
    return [
        [
            clip(2 * t + 1 - slow_distance(u, v)) if vals[i] != vals[j] else 0
            for j, v in enumerate(words)
        ]
        for i, u in enumerate(words)
    ]


def slow_fdm(f, t):
    """Class-level requirement matrix via direct cross-class minimisation."""
    words = all_words(f.q, f.k)
    vals = [f.eval(u) for u in words]
    labels = []
    for v in vals:
        if v not in labels:
            labels.append(v)
    m = len(labels)
    entries = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            d = min(
                slow_distance(u, v)
                for u, vu in zip(words, vals)
                if vu == labels[i]
                for v, vv in zip(words, vals)
                if vv == labels[j]
            )
            entries[i][j] = clip(2 * t + 1 - d)
    return entries, labels


def slow_adjacency(f, t, r):
    """Conflict-graph adjacency straight from its definition."""
    words = all_words(f.q, f.k + r)
    vals = [f.eval(w[: f.k]) for w in words]
    n = len(words)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            same_message = words[i][: f.k] == words[j][: f.k]
            conflict = (
                vals[i] != vals[j]
                and slow_distance(words[i], words[j]) < 2 * t + 1
            )
            if same_message or conflict:
                adj[i][j] = adj[j][i] = 1
    return adj


def rows_from_lists(adj):
    """Bit-packed adjacency rows from a dense 0/1 matrix."""
    return [sum(1 << j for j, e in enumerate(row) if e) for row in adj]


def lists_from_rows(rows, n):
    """Dense 0/1 matrix from bit-packed adjacency rows."""
    return [[(row >> j) & 1 for j in range(n)] for row in rows]


def brute_alpha(rows):
    """Exact independence number by plain include/exclude recursion."""
    n = len(rows)

    def go(avail):
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        return max(go(rest), 1 + go(rest & ~rows[v]))

    return go((1 << n) - 1)


def is_independent(rows, members):
    return all(not rows[i] >> j & 1 for i in members for j in members)


def rand_graph(rng, n, p):
    """Bit-packed rows of a G(n, p) random graph."""
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def rand_linear(rng, q, k, l):
    """Random linear function with a full-rank l x k matrix (l = 0 allowed)."""
    while True:
        rows = [tuple(rng.randrange(q) for _ in range(k)) for _ in range(l)]
        try:
            return linear_function(q, rows, k=k)
        except ValueError:
            continue


def rand_table(rng, q, k, n_values):
    """Random table function whose image is exactly {0..n_values-1}."""
    size = q**k
    assert size >= n_values
    labels = [i % n_values for i in range(size)]
    rng.shuffle(labels)
    return table_function(q, k, labels)


def words_at_distance(word, q, dist):
    """All words at Hamming distance exactly ``dist`` from ``word``."""
    out = []
    for positions in itertools.combinations(range(len(word)), dist):
        choices = [[s for s in range(q) if s != word[p]] for p in positions]
        for repl in itertools.product(*choices):
            w = list(word)
            for p, s in zip(positions, repl):
                w[p] = s
            out.append(tuple(w))
    return out


def subspace_selection_exists(f, cap=20_000):
    """Brute-force check: can one minimum-weight member per class be chosen
    so that the selected set is closed under addition?

    Returns None when the choice space exceeds ``cap`` combinations; keep
    instances small (q=2 k<=3, q=3 k<=2) so the cap is never the verdict.
    """
    dec = coset_decomposition(f)
    idx = f.index
    candidates = []
    for members in dec.classes:
        vecs = [idx.vector(r) for r in members]
        w = min(slow_weight(v) for v in vecs)
        candidates.append([v for v in vecs if slow_weight(v) == w])
    combos = 1
    for c in candidates:
        combos *= len(c)
        if combos > cap:
            return None
    for pick in itertools.product(*candidates):
        chosen = set(pick)
        closed = True
        for x in pick:
            for y in pick:
                if tuple((a + b) % f.q for a, b in zip(x, y)) not in chosen:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            return True
    return False
