import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from ccma import linalg
from ccma.cost import CostLedger
from ccma.gf16 import MUL


def naive_mat_mul(a, b):
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = 0
            for k in range(a.shape[1]):
                acc ^= MUL[int(a[i, k])][int(b[k, j])]
            out[i, j] = acc
    return out


def rand_matrix(rng, r, c):
    return rng.integers(0, 16, size=(r, c), dtype=np.uint8)


@pytest.fixture
def nrng():
    return np.random.default_rng(7)


def test_mat_vec_examples(inst):
    v = np.arange(27, dtype=np.uint8) % 16
    assert np.array_equal(linalg.mat_vec(linalg.identity(27), v), v)
    e1 = np.zeros(27, dtype=np.uint8)
    e1[0] = 1
    assert np.array_equal(linalg.mat_vec(inst.T, e1), inst.T[:, 0])
    assert not linalg.mat_vec(linalg.zeros(5, 27), v).any()


def test_mat_vec_counts():
    lg = CostLedger()
    linalg.mat_vec(linalg.identity(27), np.ones(27, dtype=np.uint8), lg)
    assert (lg.scalar_mul, lg.add) == (729, 27 * 26)


def test_mat_vec_dimension_error():
    with pytest.raises(linalg.DimensionError):
        linalg.mat_vec(linalg.identity(3), np.ones(4, dtype=np.uint8))


@pytest.mark.parametrize("strategy", linalg.STRATEGIES)
def test_mat_mul_matches_naive(nrng, strategy):
    for r, k, c in [(29, 29, 29), (27, 27, 9), (5, 40, 3), (64, 64, 64), (1, 1, 1)]:
        a, b = rand_matrix(nrng, r, k), rand_matrix(nrng, k, c)
        assert np.array_equal(linalg.mat_mul(a, b, strategy), naive_mat_mul(a, b))
    a = rand_matrix(nrng, 20, 20)
    assert np.array_equal(linalg.mat_mul(a, linalg.identity(20), strategy), a)


def test_strassen_small_cutoff(nrng):
    a, b = rand_matrix(nrng, 13, 11), rand_matrix(nrng, 11, 7)
    assert np.array_equal(linalg.mat_mul(a, b, "strassen", cutoff=1), naive_mat_mul(a, b))


def test_strassen_count_one_level(nrng):
    a, b = rand_matrix(nrng, 32, 32), rand_matrix(nrng, 32, 32)
    lg = CostLedger()
    linalg.mat_mul(a, b, "strassen", lg, cutoff=16)
    # instrumented run: seven 16x16 schoolbook products
    inner = CostLedger()
    linalg.mat_mul(a[:16, :16], b[:16, :16], "schoolbook", inner)
    assert lg.scalar_mul == 7 * inner.scalar_mul == 28672


def test_mat_mul_errors(nrng):
    with pytest.raises(linalg.DimensionError):
        linalg.mat_mul(rand_matrix(nrng, 3, 4), rand_matrix(nrng, 3, 4))
    with pytest.raises(ValueError):
        linalg.mat_mul(linalg.identity(2), linalg.identity(2), "winograd")


def test_invert_examples():
    assert np.array_equal(linalg.invert(linalg.identity(6)), linalg.identity(6))
    d = 2 * linalg.identity(4)
    assert np.array_equal(linalg.invert(d), 9 * linalg.identity(4))
    m = linalg.as_matrix([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    m[1] = linalg.scale(5, m[0])
    with pytest.raises(linalg.SingularMatrixError) as exc:
        linalg.invert(m)
    assert exc.value.rank == 2


def test_invert_involution(nrng):
    done = 0
    while done < 20:
        m = rand_matrix(nrng, 12, 12)
        if linalg.rank(m) < 12:
            continue
        mi = linalg.invert(m)
        assert np.array_equal(linalg.mat_mul(m, mi), linalg.identity(12))
        assert np.array_equal(linalg.invert(mi), m)
        done += 1


@pytest.mark.parametrize("block", [1, 4, 9, 27, 40])
@pytest.mark.parametrize("strategy", linalg.STRATEGIES)
def test_block_mul(nrng, block, strategy):
    a, b = rand_matrix(nrng, 27, 27), rand_matrix(nrng, 27, 9)
    assert np.array_equal(linalg.block_mul(a, b, block, strategy), naive_mat_mul(a, b))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 64), st.integers(1, 64), st.integers(1, 64), st.integers(1, 70), st.data())
def test_products_agree_property(r, k, c, block, data):
    a = data.draw(arrays(np.uint8, (r, k), elements=st.integers(0, 15)))
    b = data.draw(arrays(np.uint8, (k, c), elements=st.integers(0, 15)))
    want = linalg.mat_mul(a, b)
    assert np.array_equal(linalg.mat_mul(a, b, "strassen", cutoff=8), want)
    assert np.array_equal(linalg.block_mul(a, b, block, "strassen"), want)


def test_window_table_shapes(inst):
    tabs = linalg.build_window_tables(inst.T, 2, n=13)
    assert [len(t) for t in tabs.tables] == [256] * 6 + [16]
    tabs = linalg.build_window_tables(inst.T, 1, n=13)
    assert [len(t) for t in tabs.tables] == [16] * 13
    with pytest.raises(ValueError, match="cap"):
        linalg.build_window_tables(inst.T, 13, n=13)
    with pytest.raises(ValueError, match="cap"):
        linalg.build_window_tables(inst.T, 3, n=13, cap=1000)


@pytest.mark.parametrize("window", [1, 2, 3, 4])
def test_window_tables_match_mat_vec(inst, rng, window):
    from ccma.core import embed
    tabs = linalg.build_window_tables(inst.T, window, n=13)
    assert not linalg.apply_window_tables(tabs, (0,) * 13).any()
    for _ in range(20):
        x = tuple(rng.randrange(16) for _ in range(13))
        lg = CostLedger()
        got = linalg.apply_window_tables(tabs, x, lg)
        assert np.array_equal(got, linalg.mat_vec(inst.T, embed(inst, x)))
        assert lg.scalar_mul == lg.bilinear == 0


def test_matrix_serialization_roundtrip(inst):
    text = linalg.serialize_matrix(inst.T1)
    assert text.splitlines()[0] == "matrix 27 27"
    assert np.array_equal(linalg.parse_matrix(text), inst.T1)
    with pytest.raises(ValueError):
        linalg.parse_matrix("matrix 2 2\n01\n")
