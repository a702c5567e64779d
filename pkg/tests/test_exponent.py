import math
import time

import pytest

from ccma.core import ccma_mul, frobenius
from ccma.cost import CostLedger
from ccma.exponent import (ParameterError, ScheduleTrace, default_params, pow_square_multiply,
                           pow_vzg, precompute_depth, recode, reduce_exponent, simulate_trace,
                           vzg_depth_bound, vzg_precompute)
from conftest import random_elem

ORDER = 16 ** 13 - 1


def oracle_pow(o, x, k):
    return o.to_normal(o.pow(o.from_normal(x), k))


def test_reduce_exponent():
    assert reduce_exponent(0, 16, 13) == 0
    assert reduce_exponent(ORDER, 16, 13) == ORDER
    assert reduce_exponent(ORDER + 1, 16, 13) == 1
    assert reduce_exponent(5, 16, 13) == 5
    with pytest.raises(ParameterError):
        reduce_exponent(-1, 16, 13)


def test_recode_example():
    # 37 = 0x25 with two-digit blocks of one-digit windows
    plan = recode(37, 16, 2, 1, 13)
    assert (plan.s, plan.t) == (7, 2)
    assert plan.digits[0] == (5, 2)
    assert all(row == (0, 0) for row in plan.digits[1:])
    assert plan.recompose() == 37


@pytest.mark.parametrize("r, u", [(1, 1), (2, 1), (3, 2), (5, 2), (13, 4), (4, 4)])
def test_recode_roundtrip(rng, r, u):
    for _ in range(50):
        k = rng.randrange(1, ORDER + 1)
        plan = recode(k, 16, r, u, 13)
        assert plan.recompose() == k
        assert all(d < 16 ** u for row in plan.digits for d in row)


def test_recode_rejects_bad_params():
    with pytest.raises(ParameterError):
        recode(5, 16, 1, 2, 13)
    with pytest.raises(ParameterError):
        recode(5, 16, 0, 0, 13)


@pytest.mark.parametrize("q, n, want", [
    (16, 13, (1, 1)), (2, 1024, (34, 3)), (16, 256, (3, 1)), (16, 1024, (5, 1)), (16, 4096, (7, 2)),
])
def test_default_params(q, n, want):
    assert default_params(q, n) == want


def test_x15_schedule(inst, oracle, rng):
    x = random_elem(rng)
    trace = ScheduleTrace()
    lg = CostLedger()
    got = pow_square_multiply(inst, x, 15, lg, trace)
    assert got == oracle_pow(oracle, x, 15)
    assert trace.depth == 4
    assert trace.width == 2
    assert [lanes for lanes, op in trace.rounds if op == "hadamard"] == [1, 2, 2, 1]
    assert lg.bilinear == trace.bilinear == 27 * 6
    assert "depth=4" in trace.render()


def test_precompute_table(inst, oracle, rng):
    x = random_elem(rng)
    trace = ScheduleTrace()
    table = vzg_precompute(inst, x, 1, trace=trace)
    assert sorted(table) == list(range(2, 16))
    for d, v in table.items():
        assert v == oracle_pow(oracle, x, d)
    assert trace.depth == precompute_depth(16, 1) == 4
    assert trace.width == 7
    ident = vzg_precompute(inst, inst.identity, 1)
    assert set(ident.values()) == {inst.identity}


def test_precompute_cap(inst):
    with pytest.raises(ParameterError):
        vzg_precompute(inst, inst.identity, 2, cap=100)
    with pytest.raises(ParameterError):
        pow_vzg(inst, inst.identity, 5, params=(2, 2), cap=100)


def test_special_exponents(inst, rng):
    zero = (0,) * 13
    for _ in range(10):
        x = random_elem(rng, nonzero=True)
        assert pow_vzg(inst, x, 16) == frobenius(x, 1)
        assert pow_square_multiply(inst, x, 16) == frobenius(x, 1)
        assert pow_vzg(inst, x, ORDER) == inst.identity
        assert pow_square_multiply(inst, x, ORDER) == inst.identity
        assert pow_vzg(inst, x, 0) == inst.identity
        assert pow_vzg(inst, x, 1) == x
    assert pow_vzg(inst, zero, 0) == inst.identity
    assert pow_vzg(inst, zero, ORDER) == zero
    assert pow_square_multiply(inst, zero, 7) == zero


@pytest.mark.parametrize("params", [None, (2, 1), (3, 2), (13, 1), (4, 3)])
def test_vzg_matches_oracle(inst, oracle, rng, params):
    for _ in range(15):
        x, k = random_elem(rng), rng.randrange(2 * ORDER)
        assert pow_vzg(inst, x, k, params) == oracle_pow(oracle, x, k)


@pytest.mark.parametrize("strategy", ["schoolbook", "strassen"])
def test_vzg_batched(inst, rng, strategy):
    for _ in range(5):
        x, k = random_elem(rng), rng.randrange(ORDER)
        assert pow_vzg(inst, x, k, strategy=strategy) == pow_vzg(inst, x, k)


def test_exponent_laws(inst, rng):
    for _ in range(10):
        x = random_elem(rng)
        j, l = rng.randrange(ORDER), rng.randrange(ORDER)
        lhs = ccma_mul(inst, pow_vzg(inst, x, j), pow_vzg(inst, x, l))
        assert lhs == pow_square_multiply(inst, x, j + l)


@pytest.mark.parametrize("algorithm", ["square-multiply", "vzg"])
def test_simulation_matches_real_trace(inst, rng, algorithm):
    for _ in range(10):
        k = rng.randrange(1, ORDER)
        sim = simulate_trace(16, 13, 2, k, algorithm)
        assert sim.exponent == k
        real = ScheduleTrace()
        x = random_elem(rng)
        if algorithm == "vzg":
            pow_vzg(inst, x, k, trace=real)
        else:
            pow_square_multiply(inst, x, k, trace=real)
        assert sim.rounds == real.rounds
        assert sim.bilinear == real.bilinear


def test_simulation_rejects_unknown_algorithm():
    with pytest.raises(ValueError):
        simulate_trace(16, 13, 2, 5, "ladder")


def test_vzg_ledger(inst, rng):
    x, k = random_elem(rng), rng.randrange(ORDER)
    lg, trace = CostLedger(), ScheduleTrace()
    pow_vzg(inst, x, k, ledger=lg, trace=trace)
    assert lg.bilinear == trace.bilinear
    assert lg.bilinear % 27 == 0
    assert lg.depth == trace.depth


@pytest.mark.parametrize("n", [256, 1024, 4096])
def test_depth_bound_large(rng, n):
    t0 = time.perf_counter()
    k = rng.randrange(16 ** n)
    r, u = default_params(16, n)
    trace = simulate_trace(16, n, 2, k, "vzg")
    assert trace.exponent == reduce_exponent(k, 16, n)
    assert trace.depth <= vzg_depth_bound(16, n)
    s, t = math.ceil(n / r), math.ceil(r / u)
    assert trace.width <= max(s * (t - 1), 16 ** u // 2, s)
    assert time.perf_counter() - t0 < 5
