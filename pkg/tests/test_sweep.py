import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conjiso.sweep import WORKERS_ENV, GraySweep, gray, lex_key, worker_count


def _direct(W, sizes, mask):
    inside = [i for i in range(len(sizes)) if mask >> i & 1]
    outside = [j for j in range(len(sizes)) if not mask >> j & 1]
    return sum(W[i][j] for i in inside for j in outside), sum(sizes[i] for i in inside)


def _collect(sweep):
    out = {}
    for masks, size, bound in sweep.blocks():
        for m, s, b in zip(masks.tolist(), size.tolist(), bound.tolist()):
            out[m] = (b, s)
    return out


@st.composite
def weighted_graphs(draw):
    p = draw(st.integers(1, 7))
    W = [[0] * p for _ in range(p)]
    for i in range(p):
        for j in range(i + 1, p):
            W[i][j] = W[j][i] = draw(st.integers(0, 50))
    sizes = draw(st.lists(st.integers(1, 100), min_size=p, max_size=p))
    return W, sizes


@settings(max_examples=80, deadline=None)
@given(weighted_graphs(), st.integers(0, 3))
def test_sweep_matches_direct(graph, chunk_bits):
    W, sizes = graph
    got = _collect(GraySweep(W, sizes, chunk_bits=chunk_bits))
    assert len(got) == 1 << len(sizes)
    for m, val in got.items():
        assert val == _direct(W, sizes, m)


def test_sweep_visits_gray_order():
    masks = np.concatenate([b[0] for b in GraySweep(np.zeros((4, 4)), [1] * 4, chunk_bits=2).blocks()])
    assert masks.tolist() == [gray(i) for i in range(16)]


def test_sweep_threads_agree(monkeypatch):
    rng = np.random.default_rng(0)
    W = rng.integers(0, 9, size=(9, 9))
    W = np.triu(W, 1) + np.triu(W, 1).T
    sizes = rng.integers(1, 20, size=9)
    serial = _collect(GraySweep(W, sizes, chunk_bits=4))
    monkeypatch.setenv(WORKERS_ENV, "3")
    assert worker_count() == 3
    assert _collect(GraySweep(W, sizes, chunk_bits=4)) == serial
    monkeypatch.setenv(WORKERS_ENV, "junk")
    assert worker_count() == 1


def test_sweep_rejects_bad_weights():
    with pytest.raises(ValueError):
        GraySweep([[0, 1], [2, 0]], [1, 1])
    with pytest.raises(ValueError):
        GraySweep([[1, 0], [0, 0]], [1, 1])
    with pytest.raises(ValueError):
        GraySweep([[0]], [1, 1])


def test_lex_key_orders_membership_vectors():
    p = 4
    masks = np.arange(16)
    keys = lex_key(masks, p)
    vectors = [tuple(m >> b & 1 for b in range(p)) for m in range(16)]
    assert sorted(range(16), key=lambda m: keys[m]) == sorted(range(16), key=lambda m: vectors[m])
