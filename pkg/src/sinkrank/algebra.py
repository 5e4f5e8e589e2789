"""Adjacency-matrix algebra linking the strategy-level and joint-level digraphs."""

from __future__ import annotations

import numpy as np

from .errors import IndexOutOfRangeError, NonBinaryResultError, NonSquareError


def kronecker(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two matrices."""
    return np.kron(np.asarray(a), np.asarray(b))


def _require_square(a: np.ndarray, what: str) -> np.ndarray:
    arr = np.asarray(a)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquareError(f"{what} has shape {arr.shape}, expected square")
    return arr


def abar_k(a_b: np.ndarray, k: int) -> np.ndarray:
    """The per-strategy deviation block of a best-response adjacency matrix.

    For row index r, the result's row r equals row k of ``a_b`` scaled by
    (1 - a_b[k, r]): rows whose strategy is already a best response to k
    are zeroed, the rest copy row k.
    """
    arr = _require_square(a_b, "a_b").astype(int)
    n = arr.shape[0]
    if not 0 <= k < n:
        raise IndexOutOfRangeError(f"k={k} outside [0, {n})")
    row_k = arr[k, :]
    # ones * (e_k^T A)  minus  (A^T e_k) (e_k^T A)
    return np.outer(np.ones(n, dtype=int), row_k) - np.outer(row_k, row_k)


def joint_strict_adjacency_from_formula(a_b: np.ndarray) -> np.ndarray:
    """Joint strict best-response adjacency built from the strategy-level one.

    Evaluates sum_k (E_kk kron abar_k + abar_k kron E_kk) under the joint
    index r = row * n + col. The result must be 0/1 when ``a_b`` is a
    genuine best-response adjacency matrix; anything else raises.
    """
    arr = _require_square(a_b, "a_b").astype(int)
    n = arr.shape[0]
    total = np.zeros((n * n, n * n), dtype=int)
    for k in range(n):
        e_kk = np.zeros((n, n), dtype=int)
        e_kk[k, k] = 1
        block = abar_k(arr, k)
        total += np.kron(e_kk, block) + np.kron(block, e_kk)
    if not np.isin(total, (0, 1)).all():
        raise NonBinaryResultError(
            "reconstruction produced entries outside {0, 1}; "
            "input is not a best-response adjacency matrix"
        )
    return total


def cartesian_product_adjacency(a1: np.ndarray, a2: np.ndarray) -> np.ndarray:
    """Adjacency of the digraph Cartesian product: I kron a2 + a1 kron I."""
    m1 = _require_square(a1, "a1")
    m2 = _require_square(a2, "a2")
    n1, n2 = m1.shape[0], m2.shape[0]
    return np.kron(np.eye(n1, dtype=m2.dtype), m2) + np.kron(m1, np.eye(n2, dtype=m1.dtype))
