"""Bitmask subset-DP kernels over shadow adjacency masks.

Three routines, all operating on an int64 array `adj` where bit w of adj[v]
means v ~ w, with n <= 20 so every subset fits an int64 index:

  * capped_anchored_endpoints(adj, n, cap): dp over all subsets S containing
    vertex 0; dp[S] = bitmask of endpoints v such that a path starting at 0
    with vertex set exactly S ends at v. States with popcount(S) >= cap are
    recorded but not expanded (cap = n means no cap).
  * free_endpoints(adj, n): same dp but paths may start anywhere
    (dp[{v}] = {v} for every v). Used for longest-path extraction.
  * cycle_probe(adj, n, ell): does a cycle of length exactly ell through
    vertex 0 exist using only these n vertices? Returns (S, closemask) for
    the first (lowest-S) witness subset, or (0, 0).

Kernels are numba-compiled when available; a pure-Python mirror of each is
kept both as a fallback (WEAKHAM_PURE=1 or numba missing) and as an
implementation cross-check in the tests. Callers are expected to enforce the
n <= 20 capability bound.
"""

from __future__ import annotations

import os

import numpy as np

_PURE = os.environ.get("WEAKHAM_PURE", "") == "1"
if not _PURE:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - environment without numba
        _PURE = True

__all__ = [
    "capped_anchored_endpoints",
    "free_endpoints",
    "cycle_probe",
    "using_numba",
]


def using_numba() -> bool:
    return not _PURE


# --- pure-Python reference implementations -----------------------------------


def capped_anchored_endpoints_py(adj: np.ndarray, n: int, cap: int) -> np.ndarray:
    size = 1 << n
    dp = np.zeros(size, dtype=np.int64)
    dp[1] = 1
    adj_l = [int(x) for x in adj]
    dp_l = dp.tolist()
    for S in range(1, size):
        if not S & 1:
            continue
        em = dp_l[S]
        if em == 0 or bin(S).count("1") >= cap:
            continue
        rest = em
        while rest:
            vbit = rest & (-rest)
            rest ^= vbit
            v = vbit.bit_length() - 1
            targets = adj_l[v] & ~S
            while targets:
                wbit = targets & (-targets)
                targets ^= wbit
                dp_l[S | wbit] |= wbit
    return np.array(dp_l, dtype=np.int64)


def free_endpoints_py(adj: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    adj_l = [int(x) for x in adj]
    dp_l = [0] * size
    for v in range(n):
        dp_l[1 << v] = 1 << v
    for S in range(1, size):
        em = dp_l[S]
        if em == 0:
            continue
        rest = em
        while rest:
            vbit = rest & (-rest)
            rest ^= vbit
            v = vbit.bit_length() - 1
            targets = adj_l[v] & ~S
            while targets:
                wbit = targets & (-targets)
                targets ^= wbit
                dp_l[S | wbit] |= wbit
    return np.array(dp_l, dtype=np.int64)


def cycle_probe_py(adj: np.ndarray, n: int, ell: int) -> tuple[int, int]:
    if ell > n:
        return 0, 0
    dp = capped_anchored_endpoints_py(adj, n, ell)
    a0 = int(adj[0])
    for S in range(1, 1 << n):
        if not S & 1:
            continue
        if bin(S).count("1") != ell:
            continue
        close = int(dp[S]) & a0
        if close:
            return S, close
    return 0, 0


# --- numba kernels -------------------------------------------------------------

if not _PURE:

    @njit(cache=True)
    def _capped_anchored_nb(adj, n, cap):  # pragma: no cover - compiled
        size = 1 << n
        dp = np.zeros(size, dtype=np.int64)
        dp[1] = 1
        for S in range(1, size):
            if S & 1 == 0:
                continue
            em = dp[S]
            if em == 0:
                continue
            pc = 0
            t = S
            while t:
                t &= t - 1
                pc += 1
            if pc >= cap:
                continue
            rest = em
            while rest:
                vbit = rest & (-rest)
                rest ^= vbit
                v = 0
                vb = vbit
                while vb > 1:
                    vb >>= 1
                    v += 1
                targets = adj[v] & ~S
                while targets:
                    wbit = targets & (-targets)
                    targets ^= wbit
                    dp[S | wbit] |= wbit
        return dp

    @njit(cache=True)
    def _free_nb(adj, n):  # pragma: no cover - compiled
        size = 1 << n
        dp = np.zeros(size, dtype=np.int64)
        for v in range(n):
            dp[1 << v] = 1 << v
        for S in range(1, size):
            em = dp[S]
            if em == 0:
                continue
            rest = em
            while rest:
                vbit = rest & (-rest)
                rest ^= vbit
                v = 0
                vb = vbit
                while vb > 1:
                    vb >>= 1
                    v += 1
                targets = adj[v] & ~S
                while targets:
                    wbit = targets & (-targets)
                    targets ^= wbit
                    dp[S | wbit] |= wbit
        return dp

    @njit(cache=True)
    def _cycle_probe_nb(adj, n, ell):  # pragma: no cover - compiled
        if ell > n:
            return np.int64(0), np.int64(0)
        dp = _capped_anchored_nb(adj, n, ell)
        a0 = adj[0]
        for S in range(1, 1 << n):
            if S & 1 == 0:
                continue
            pc = 0
            t = S
            while t:
                t &= t - 1
                pc += 1
            if pc != ell:
                continue
            close = dp[S] & a0
            if close != 0:
                return np.int64(S), np.int64(close)
        return np.int64(0), np.int64(0)


def capped_anchored_endpoints(adj: np.ndarray, n: int, cap: int) -> np.ndarray:
    adj = np.ascontiguousarray(adj, dtype=np.int64)
    if _PURE:
        return capped_anchored_endpoints_py(adj, n, cap)
    return _capped_anchored_nb(adj, np.int64(n), np.int64(cap))


def free_endpoints(adj: np.ndarray, n: int) -> np.ndarray:
    adj = np.ascontiguousarray(adj, dtype=np.int64)
    if _PURE:
        return free_endpoints_py(adj, n)
    return _free_nb(adj, np.int64(n))


def cycle_probe(adj: np.ndarray, n: int, ell: int) -> tuple[int, int]:
    adj = np.ascontiguousarray(adj, dtype=np.int64)
    if _PURE:
        return cycle_probe_py(adj, n, ell)
    s, close = _cycle_probe_nb(adj, np.int64(n), np.int64(ell))
    return int(s), int(close)
