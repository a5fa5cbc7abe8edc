"""Brute-force and floating-point oracles, independent of the package solvers."""

from itertools import combinations

import numpy as np
from scipy.optimize import linprog


def brute_nu(edges):
    sets = [frozenset(e) for e in edges]
    for k in range(len(sets), 0, -1):
        for combo in combinations(sets, k):
            if all(not (a & b) for a, b in combinations(combo, 2)):
                return k
    return 0


def brute_tau(num_vertices, edges):
    sets = [frozenset(e) for e in edges]
    if not sets:
        return 0
    for k in range(1, num_vertices + 1):
        for combo in combinations(range(num_vertices), k):
            s = set(combo)
            if all(s & e for e in sets):
                return k
    raise AssertionError("no hitting set")


def float_nu_star(num_vertices, edges):
    if not edges:
        return 0.0
    A = [[1.0 if v in e else 0.0 for e in edges] for v in range(num_vertices)]
    r = linprog(-np.ones(len(edges)), A_ub=A, b_ub=np.ones(num_vertices), bounds=(0, None), method="highs")
    assert r.status == 0
    return -r.fun


def float_separable(target, others):
    """Margin separation LP solved in floating point by HiGHS."""
    A, b = [], []
    for p in target:
        A.append([-float(x) for x in p] + [1.0])
        b.append(-1.0)
    for p in others:
        A.append([float(x) for x in p] + [-1.0])
        b.append(-1.0)
    r = linprog(np.zeros(len(A[0])), A_ub=A, b_ub=b, bounds=[(None, None)] * len(A[0]), method="highs")
    return r.status == 0


def graph_isomorphic_hypergraphs(h1, h2):
    """Isomorphism of small hypergraphs via vertex permutations (brute force)."""
    from itertools import permutations

    if h1.num_vertices != h2.num_vertices or h1.num_edges != h2.num_edges:
        return False
    target = {frozenset(e) for e in h2.edges}
    for perm in permutations(range(h1.num_vertices)):
        if {frozenset(perm[v] for v in e) for e in h1.edges} == target:
            return True
    return False
