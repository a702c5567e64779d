"""Exponentiation x^k in F_{16^n}.

Two algorithms, both written once against a small "algebra" interface so
the same scheduler can run on real field elements or symbolically on
exponents (to produce traces for n far beyond the instantiated field):

* right-to-left square-and-multiply kept in the evaluation domain through
  T1 = T P T^-1, with two lanes (squarings and accumulations);
* a von zur Gathen style parallel algorithm: q-ary recoding of k into
  u-digit windows inside r-digit blocks, a table of small powers, Frobenius
  shifts (free in a normal basis) and multiplication trees.
"""

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from . import linalg
from .core import batch_mul, ccma_mul, frobenius, from_eval, hadamard, to_eval
from .cost import CostLedger

DEFAULT_TABLE_CAP = 2 ** 16


class ParameterError(ValueError):
    pass


@dataclass
class ScheduleTrace:
    """Parallel rounds as ``(lanes, op)`` pairs; op is 'hadamard' for a
    round of field products, 'matvec' for a pure change of domain."""

    dim: int = 0
    rounds: list = field(default_factory=list)
    exponent: int = None  # set by symbolic runs: the exponent actually computed

    def add(self, lanes, op):
        self.rounds.append((lanes, op))

    @property
    def depth(self):
        return sum(1 for _, op in self.rounds if op == "hadamard")

    @property
    def width(self):
        return max((lanes for lanes, _ in self.rounds), default=0)

    @property
    def bilinear(self):
        return self.dim * sum(lanes for lanes, op in self.rounds if op == "hadamard")

    def render(self):
        lines = [f"round {i}: lanes={lanes} op={op}" for i, (lanes, op) in enumerate(self.rounds)]
        lines.append(f"depth={self.depth} width={self.width} bilinear={self.bilinear}")
        return "\n".join(lines)


def reduce_exponent(k, q, n):
    """Representative of k in [1, q^n - 1] (0 only for k = 0), so that
    x^k is unchanged for every x, including x = 0."""
    if k < 0:
        raise ParameterError("exponent must be nonnegative")
    if k == 0:
        return 0
    return (k - 1) % (q ** n - 1) + 1


@dataclass(frozen=True)
class ExponentPlan:
    k: int
    q: int
    n: int
    r: int
    u: int
    s: int
    t: int
    digits: tuple  # digits[i][j] in [0, q^u)

    def recompose(self):
        q, r, u = self.q, self.r, self.u
        return sum(sum(d * q ** (u * j) for j, d in enumerate(row)) * q ** (r * i)
                   for i, row in enumerate(self.digits))


def recode(k, q, r, u, n):
    if u < 1 or r < 1:
        raise ParameterError("r and u must be positive")
    if u > r:
        raise ParameterError(f"u = {u} exceeds r = {r}")
    k = reduce_exponent(k, q, n)
    s = -(-n // r)
    t = -(-r // u)
    block_mod, window = q ** r, q ** u
    digits = []
    rest = k
    for _ in range(s):
        block = rest % block_mod
        rest //= block_mod
        row = []
        for j in range(t):
            width = min(u, r - u * j)  # the last window may be short
            row.append(block % q ** width)
            block //= window
        digits.append(tuple(row))
    return ExponentPlan(k, q, n, r, u, s, t, tuple(digits))


def _logq(x, q):
    return math.log(x) / math.log(q)


def _snap(x):
    # floor/ceil of values that are integers up to rounding error
    return round(x, 9)


def default_params(q, n):
    """(r, u) from the asymptotic recipe, clamped to u >= 1 and r >= u."""
    if n < 2:
        raise ParameterError("need n >= 2")
    ln = _logq(n, q)
    lln = _logq(ln, q)
    r = math.ceil(_snap(ln * ln - 2 * ln * lln))
    u = math.floor(_snap(ln - 2 * lln))
    u = max(u, 1)
    r = max(r, u)
    return r, u


def vzg_depth_bound(q, n):
    """The four-term depth bound for the parallel algorithm (meaningful for
    large n only)."""
    ln = _logq(n, q)
    lln = _logq(ln, q)
    c = math.ceil
    return (c(_snap(math.log2(n / ln ** 2)))
            + c(_snap((ln + 1) / (ln - 2 * lln - 1)))
            + c(_snap(ln))
            + c(_snap(math.log2(n / (_logq(n / ln ** 2, q) * ln) + 1))))


def precompute_depth(q, u):
    return math.ceil(math.log2(q ** u - 1)) if q ** u > 2 else 0


# -- algebras the schedulers run on ------------------------------------------

class _FieldAlgebra:
    def __init__(self, inst, ledger, trace, strategy=None):
        self.inst, self.ledger, self.trace, self.strategy = inst, ledger, trace, strategy

    one = property(lambda self: self.inst.identity)

    def shift(self, x, i):
        return frobenius(x, i)

    def mul_round(self, pairs):
        self.trace.add(len(pairs), "hadamard")
        if self.strategy is not None:
            sub = CostLedger() if self.ledger is not None else None
            out = batch_mul(self.inst, pairs, self.strategy, sub)
        else:
            subs = [CostLedger() for _ in pairs] if self.ledger is not None else [None] * len(pairs)
            out = [ccma_mul(self.inst, a, b, lg) for (a, b), lg in zip(pairs, subs)]
            sub = reduce(CostLedger.merge, subs) if self.ledger is not None else None
        if self.ledger is not None:
            self.ledger.extend(sub)
        return out


class _EvalDomainAlgebra:
    """Values live in the evaluation space; a product is T1(a . b)."""

    def __init__(self, inst, ledger, trace):
        self.inst, self.ledger, self.trace = inst, ledger, trace

    def neutral(self):
        return np.ones(self.inst.dim, dtype=np.uint8)

    def to_eval(self, x):
        self.trace.add(1, "matvec")
        return to_eval(self.inst, x, self.ledger)

    def from_eval(self, w):
        self.trace.add(1, "matvec")
        return from_eval(self.inst, w, self.ledger)

    def mul_round(self, pairs):
        self.trace.add(len(pairs), "hadamard")
        out = []
        lanes = []
        for a, b in pairs:
            lg = CostLedger() if self.ledger is not None else None
            out.append(linalg.mat_vec(self.inst.T1, hadamard(a, b, lg), lg))
            if lg is not None:
                lanes.append(lg.round(1))
        if lanes:
            self.ledger.extend(reduce(CostLedger.merge, lanes))
        return out


class _SymbolicAlgebra:
    """Elements are exponents of x modulo q^n - 1; no field data needed."""

    def __init__(self, q, n, trace):
        self.q, self.mod, self.trace = q, q ** n - 1, trace
        self.one = 0

    def neutral(self):
        return 0

    def to_eval(self, x):
        self.trace.add(1, "matvec")
        return x

    def from_eval(self, w):
        self.trace.add(1, "matvec")
        return w

    def shift(self, e, i):
        return e * pow(self.q, i, self.mod) % self.mod

    def mul_round(self, pairs):
        self.trace.add(len(pairs), "hadamard")
        return [(a + b) % self.mod for a, b in pairs]


# -- schedulers --------------------------------------------------------------

def _square_multiply(alg, x, k):
    """Two lanes: one squares the running power of x, the other folds it into
    the accumulator when the current bit is set. The first fold into the
    neutral accumulator and the squaring after the top bit are dead work and
    are not issued."""
    x0 = alg.to_eval(x)
    acc = alg.neutral()
    acc_is_neutral = True
    nbits = k.bit_length()
    for i in range(nbits):
        fold = square = False
        if (k >> i) & 1:
            if acc_is_neutral:
                acc, acc_is_neutral = x0, False
            else:
                fold = True
        square = i < nbits - 1
        pairs = ([(acc, x0)] if fold else []) + ([(x0, x0)] if square else [])
        if not pairs:
            continue
        out = alg.mul_round(pairs)
        if fold:
            acc = out[0]
        if square:
            x0 = out[-1]
    return alg.from_eval(acc)


def _precompute(alg, x, size):
    """x^d for 1 <= d < size by the binary tree x_j = x_ceil(j/2) * x_floor(j/2),
    one round per level (level of j = ceil(log2 j))."""
    table = {1: x}
    level = 1
    while (1 << (level - 1)) + 1 < size:
        js = [j for j in range((1 << (level - 1)) + 1, min(1 << level, size - 1) + 1)]
        out = alg.mul_round([(table[(j + 1) // 2], table[j // 2]) for j in js])
        table.update(zip(js, out))
        level += 1
    return table


def _vzg(alg, x, plan):
    q, r, u = plan.q, plan.r, plan.u
    table = _precompute(alg, x, q ** u)
    table[0] = alg.one
    # step 2 (free): y_ij = sigma(x^K_ij, u j)
    y = [[alg.shift(table[d], u * j) for j, d in enumerate(row)] for row in plan.digits]
    # step 3: s independent chains of t - 1 products
    acc = [row[0] for row in y]
    for j in range(1, plan.t):
        acc = alg.mul_round([(acc[i], y[i][j]) for i in range(plan.s)])
    # step 4 (free)
    z = [alg.shift(v, r * i) for i, v in enumerate(acc)]
    # step 5: left-balanced product tree
    while len(z) > 1:
        prods = alg.mul_round([(z[i], z[i + 1]) for i in range(0, len(z) - 1, 2)])
        z = prods + ([z[-1]] if len(z) % 2 else [])
    return z[0]


# -- public entry points -------------------------------------------------------

def pow_square_multiply(inst, x, k, ledger=None, trace=None):
    trace = trace if trace is not None else ScheduleTrace()
    trace.dim = inst.dim
    k = reduce_exponent(k, 16, inst.n)
    if k == 0:
        return inst.identity
    return _square_multiply(_EvalDomainAlgebra(inst, ledger, trace), x, k)


def vzg_precompute(inst, x, u, ledger=None, trace=None, cap=DEFAULT_TABLE_CAP):
    """Table {d: x^d} for 2 <= d < 16^u."""
    size = 16 ** u
    if u < 1 or size > cap:
        raise ParameterError(f"a table of {size} powers is outside 1..{cap}")
    trace = trace if trace is not None else ScheduleTrace()
    trace.dim = inst.dim
    table = _precompute(_FieldAlgebra(inst, ledger, trace), tuple(x), size)
    del table[1]
    return table


def pow_vzg(inst, x, k, params=None, ledger=None, trace=None, strategy=None,
            cap=DEFAULT_TABLE_CAP):
    """x^k by the parallel windowed algorithm. ``params`` is ``(r, u)``
    (defaults from :func:`default_params`); ``strategy`` groups each round's
    products into matrix products ('schoolbook' or 'strassen')."""
    trace = trace if trace is not None else ScheduleTrace()
    trace.dim = inst.dim
    r, u = params or default_params(16, inst.n)
    if 16 ** u > cap:
        raise ParameterError(f"a table of {16 ** u} powers exceeds the cap {cap}")
    plan = recode(k, 16, r, u, inst.n)
    if plan.k == 0:
        return inst.identity
    return _vzg(_FieldAlgebra(inst, ledger, trace, strategy), tuple(int(c) for c in x), plan)


ALGORITHMS = ("square-multiply", "vzg")


def simulate_trace(q, n, g, k, algorithm="vzg", params=None):
    """Run a scheduler on exponents instead of field elements."""
    trace = ScheduleTrace(dim=2 * n + g - 1)
    alg = _SymbolicAlgebra(q, n, trace)
    if algorithm == "square-multiply":
        k = reduce_exponent(k, q, n)
        trace.exponent = _square_multiply(alg, 1, k) if k else 0
    elif algorithm == "vzg":
        r, u = params or default_params(q, n)
        plan = recode(k, q, r, u, n)
        trace.exponent = _vzg(alg, 1, plan) if plan.k else 0
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return trace
