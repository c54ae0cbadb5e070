"""Exact graph spectra via transforms, and the eigenvalue redundancy bound."""

import random
from fractions import Fraction

import numpy as np
import pytest

from fcclib import (
    SpectralBoundResult,
    Spectrum,
    build_graph,
    cvetkovic_alpha_bound,
    eigenvalue_redundancy_bound,
    eigenvalues_via_tensor_dft,
    independence_number,
    linear_function,
    spectrum_of,
)
from fcclib.spectrum import connection_row
from helpers import lists_from_rows, rand_linear


def _numpy_eigenvalues(G):
    dense = np.array(lists_from_rows(G.rows, G.n_vertices), dtype=float)
    return np.linalg.eigvalsh(dense)


def _spectra_match(spectrum, reference, tol=1e-8):
    got = sorted(float(v) for v in spectrum.eigenvalues)
    want = sorted(float(v) for v in reference)
    return len(got) == len(want) and all(
        abs(a - b) <= tol for a, b in zip(got, want)
    )


def _rand_cases(rng, count):
    cases = []
    while len(cases) < count:
        q = rng.choice([2, 3])
        k = rng.randrange(1, 4)
        r = rng.randrange(0, 3)
        if q ** (k + r) > (64 if q == 2 else 27):
            continue
        f = rand_linear(rng, q, k, rng.randrange(0, k + 1))
        t = rng.randrange(1, 3)
        cases.append((f, t, r))
    return cases


def test_connection_row_is_first_adjacency_row(ex_q2_k3, ex_q3_k2):
    rng = random.Random(20260818)
    for f, t, r in [(ex_q2_k3, 1, 1), (ex_q3_k2, 1, 1)] + _rand_cases(rng, 10):
        G = build_graph(f, t, r)
        row = connection_row(f, t, r)
        assert row == [G.rows[0] >> x & 1 for x in range(G.n_vertices)]


def test_spectrum_matches_dense_eigensolver():
    rng = random.Random(1)
    for f, t, r in _rand_cases(rng, 25):
        G = build_graph(f, t, r)
        S = spectrum_of(f, t, r)
        assert _spectra_match(S, _numpy_eigenvalues(G))
        assert eigenvalues_via_tensor_dft(G, f).eigenvalues == S.eigenvalues


def test_binary_spectra_are_exact_integers(ex_q2_k3):
    rng = random.Random(2)
    for f, t, r in [(ex_q2_k3, 1, 2)] + [c for c in _rand_cases(rng, 20) if c[0].q == 2]:
        if f.q != 2:
            continue
        S = spectrum_of(f, t, r)
        assert all(isinstance(v, int) for v in S.eigenvalues)


def test_spectrum_moment_and_degree_invariants():
    rng = random.Random(3)
    for f, t, r in _rand_cases(rng, 25):
        G = build_graph(f, t, r)
        S = spectrum_of(f, t, r)
        assert abs(sum(S.eigenvalues)) < 1e-6
        assert abs(sum(v * v for v in S.eigenvalues) - 2 * G.edge_count()) < 1e-6
        degrees = [G.degree(i) for i in range(G.n_vertices)]
        avg = sum(degrees) / len(degrees)
        assert S.lambda_max <= max(degrees) + 1e-9
        assert S.lambda_max >= avg - 1e-9


def test_table_functions_are_rejected(or_q2_k2):
    with pytest.raises(ValueError):
        spectrum_of(or_q2_k2, 1, 1)
    with pytest.raises(ValueError):
        eigenvalue_redundancy_bound(or_q2_k2, 1, 4)
    G = build_graph(or_q2_k2, 1, 1)
    with pytest.raises(ValueError):
        eigenvalues_via_tensor_dft(G, or_q2_k2)


def test_cvetkovic_bound_dominates_exact_alpha():
    rng = random.Random(4)
    for f, t, r in _rand_cases(rng, 20):
        G = build_graph(f, t, r)
        S = spectrum_of(f, t, r)
        bound = cvetkovic_alpha_bound(S, G.n_vertices)
        assert bound >= independence_number(G).size
        if f.q == 2:
            assert isinstance(bound, (int, Fraction))


def test_cvetkovic_closed_forms():
    # complete graph on n vertices: lambda = n-1 once, -1 rest; bound = 1
    n = 8
    S = Spectrum(q=2, eigenvalues=(n - 1,) + (-1,) * (n - 1))
    assert cvetkovic_alpha_bound(S, n) == 1
    # edgeless graph: flat spectrum, bound collapses to n
    flat = Spectrum(q=2, eigenvalues=(0,) * n)
    assert cvetkovic_alpha_bound(flat, n) == n


def test_feasibility_quantity_at_growing_redundancy(ex_q2_k3):
    # 1 - lambda_max/lambda_min for the two-bit map at t=1, r = 1, 2, 3
    want = {1: Fraction(6), 2: Fraction(6), 3: Fraction(13, 2)}
    for r, expect in want.items():
        S = spectrum_of(ex_q2_k3, 1, r)
        assert 1 - Fraction(S.lambda_max, S.lambda_min) == expect
        feasible = 2**r >= expect
        assert feasible == (r >= 3)


def test_redundancy_bound_examples(ex_q2_k3, const_q2_k3):
    assert eigenvalue_redundancy_bound(ex_q2_k3, 1, 8) == SpectralBoundResult(3, False)
    assert eigenvalue_redundancy_bound(ex_q2_k3, 1, 0) == SpectralBoundResult(1, True)
    # constant function: conflict graph at r=0 is edgeless
    assert eigenvalue_redundancy_bound(const_q2_k3, 1, 4) == SpectralBoundResult(0, False)
    with pytest.raises(ValueError):
        eigenvalue_redundancy_bound(ex_q2_k3, 1, -1)


def test_redundancy_bound_never_exceeds_true_redundancy():
    # the bound is a lower bound: whenever an encoder exists at redundancy r,
    # the feasibility inequality must already hold there
    rng = random.Random(5)
    for _ in range(12):
        q = rng.choice([2, 3])
        k = rng.randrange(1, 3)
        f = rand_linear(rng, q, k, rng.randrange(0, k + 1))
        t = 1
        true_r = None
        for r in range(0, 5):
            if q ** (k + r) > 256:
                break
            G = build_graph(f, t, r)
            if independence_number(G).size >= q**k:
                true_r = r
                break
        if true_r is None:
            continue
        res = eigenvalue_redundancy_bound(f, t, r_max=true_r)
        assert not res.exhausted
        assert res.value <= true_r


def test_row_length_validation():
    with pytest.raises(ValueError):
        connection_row(linear_function(2, [(1,)]), 0, 1)
    with pytest.raises(ValueError):
        connection_row(linear_function(2, [(1,)]), 1, -1)
