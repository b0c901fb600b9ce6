"""Brute-force oracles used to cross-check the exact algorithms.

These enumerate everything; they are only meant for tiny instances.
"""

from itertools import product

import numpy as np


def all_vectors(n, length):
    return product(range(n), repeat=length)


def brute_solutions(rows, b, n):
    """All x with A x = b mod n, A given as a list of rows."""
    width = len(rows[0]) if rows else 0
    out = []
    for x in all_vectors(n, width):
        if all(sum(a * xi for a, xi in zip(r, x)) % n == bi % n for r, bi in zip(rows, b)):
            out.append(tuple(x))
    return out


def brute_span(gens, n, length):
    """The set of all Z/n-combinations of the given vectors."""
    span = {tuple([0] * length)}
    for g in gens:
        g = tuple(int(x) % n for x in g)
        span = {tuple((s[i] + k * g[i]) % n for i in range(length)) for s in span for k in range(n)}
    return span


def brute_module_elements(rank, relations, n):
    """Cosets of (Z/n)^rank modulo the span of the relation columns."""
    rel_cols = [tuple(relations[i][j] for i in range(rank)) for j in range(len(relations[0]) if rank else 0)]
    span = brute_span(rel_cols, n, rank)
    seen, classes = set(), []
    for v in all_vectors(n, rank):
        if v in seen:
            continue
        cls = {tuple((v[i] + s[i]) % n for i in range(rank)) for s in span}
        seen |= cls
        classes.append(min(cls))
    return classes


def matmul_mod(A, B, n):
    return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64)) % n
