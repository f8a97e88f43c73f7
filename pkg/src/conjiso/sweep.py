"""Exhaustive subset sweeps in Gray-code order with incremental boundaries.

Items are the vertices of a weighted graph (classes with edge counts E, or
permutations with 0/1 adjacency). Step i of the sweep visits the subset
``g(i) = i ^ (i >> 1)``; it differs from its predecessor in the single item
``b = ctz(i)``, so the boundary moves by ``+-(R_b - 2 * W[b] . prev)`` where
R_b is the weighted degree of b. Steps are processed in numpy blocks; each
block seeds its running totals with a direct evaluation, so blocks are
independent and may run on worker threads.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator

import numpy as np

WORKERS_ENV = "CONJISO_WORKERS"
CHUNK_BITS = 20


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def gray(i):
    return i ^ (i >> 1)


def _direct(W: np.ndarray, sizes: np.ndarray, subset: int) -> tuple[int, int]:
    member = np.array([subset >> b & 1 for b in range(len(sizes))], dtype=bool)
    return int(W[np.ix_(member, ~member)].sum()), int(sizes[member].sum())


class GraySweep:
    """Enumerate every subset of ``len(sizes)`` items with size and boundary.

    ``W`` must be symmetric with zero diagonal. Totals are int64, so the
    caller guarantees boundaries and sizes fit.
    """

    def __init__(self, W, sizes, chunk_bits: int = CHUNK_BITS):
        self.W = np.asarray(W, dtype=np.int64)
        self.sizes = np.asarray(sizes, dtype=np.int64)
        p = len(self.sizes)
        if self.W.shape != (p, p):
            raise ValueError("weight matrix shape does not match item count")
        if not np.array_equal(self.W, self.W.T) or self.W.diagonal().any():
            raise ValueError("weight matrix must be symmetric with zero diagonal")
        if p > 40:
            raise ValueError("too many items for an exhaustive sweep")
        self.p = p
        self.total = 1 << p
        self.chunk = min(self.total, 1 << chunk_bits)
        self.degree = self.W.sum(axis=1)
        binary = bool(((self.W == 0) | (self.W == 1)).all())
        self.nbr_masks = None
        if binary:
            weights = np.int64(1) << np.arange(p, dtype=np.int64)
            self.nbr_masks = (self.W * weights).sum(axis=1)

    def _block(self, start: int):
        stop = min(start + self.chunk, self.total)
        i = np.arange(start, stop, dtype=np.int64)
        g = gray(i)
        b0, s0 = _direct(self.W, self.sizes, int(g[0]))
        if len(i) == 1:
            return g, np.array([s0]), np.array([b0])
        prev, step = g[:-1], i[1:]
        bit = np.bitwise_count((step & -step) - 1).astype(np.int64)
        sign = 2 * ((g[1:] >> bit) & 1) - 1
        if self.nbr_masks is not None:
            inside = np.bitwise_count(prev & self.nbr_masks[bit]).astype(np.int64)
        else:
            inside = np.zeros(len(prev), dtype=np.int64)
            for c in range(self.p):
                inside += ((prev >> c) & 1) * self.W[bit, c]
        dbound = sign * (self.degree[bit] - 2 * inside)
        dsize = sign * self.sizes[bit]
        bound = np.empty(len(i), dtype=np.int64)
        size = np.empty(len(i), dtype=np.int64)
        bound[0], size[0] = b0, s0
        np.cumsum(dbound, out=bound[1:])
        np.cumsum(dsize, out=size[1:])
        bound[1:] += b0
        size[1:] += s0
        return g, size, bound

    def blocks(self) -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray]]:
        """Yield ``(subsets, sizes, boundaries)`` blocks in sweep order."""
        starts = range(0, self.total, self.chunk)
        workers = worker_count()
        if workers == 1:
            for s in starts:
                yield self._block(s)
            return
        with ThreadPoolExecutor(workers) as pool:
            yield from pool.map(self._block, starts)


def lex_key(masks: np.ndarray, p: int) -> np.ndarray:
    """Bit-reverse ``masks`` over p bits so that integer order on the result
    is lexicographic order on membership vectors (item 0 most significant)."""
    out = np.zeros_like(masks)
    for b in range(p):
        out |= ((masks >> b) & 1) << (p - 1 - b)
    return out
