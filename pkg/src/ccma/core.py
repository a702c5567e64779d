"""Multiplication in F_{16^n} by evaluation and interpolation on the curve.

Field elements (ExtElem) are n-tuples of F_16 coordinates over the normal
basis ``(alpha, alpha^16, ..., alpha^(16^(n-1)))``. Evaluation vectors
(EvalVec) are numpy arrays of length 2n + g - 1.
"""

import numpy as np

from . import linalg
from .cost import charge
from .gf16 import MUL_NP, parse


def embed(inst, x):
    """Coordinates of f_x in L(2D): x followed by n + g - 1 zeros."""
    x = np.asarray(x, dtype=np.uint8)
    if x.shape != (inst.n,):
        raise ValueError(f"expected {inst.n} coordinates, got {x.shape}")
    v = np.zeros(inst.dim, dtype=np.uint8)
    v[:inst.n] = x
    return v


def project(inst, v):
    return tuple(int(c) for c in v[:inst.n])


def hadamard(u, v, ledger=None):
    charge(ledger, "bilinear", len(u))
    return MUL_NP[u, v]


def to_eval(inst, x, ledger=None):
    """T(embed x), applying only the n columns that meet nonzero entries."""
    return linalg.mat_vec(inst.T_head, np.asarray(x, dtype=np.uint8), ledger)


def from_eval(inst, w, ledger=None):
    """P T^-1 w restricted to the n coordinates that survive the projection."""
    return tuple(int(c) for c in linalg.mat_vec(inst.T_inv_head, w, ledger))


def ccma_mul(inst, x, y, ledger=None):
    u = hadamard(to_eval(inst, x, ledger), to_eval(inst, y, ledger), ledger)
    if ledger is not None:
        ledger.round(1)
    return from_eval(inst, u, ledger)


def ccma_mul3(inst, x, y, z, ledger=None):
    """xyz with a single interpolation, staying in the evaluation domain
    between the two products via T1 = T P T^-1."""
    u = hadamard(to_eval(inst, x, ledger), to_eval(inst, y, ledger), ledger)
    u = linalg.mat_vec(inst.T1, u, ledger)
    w = hadamard(u, to_eval(inst, z, ledger), ledger)
    if ledger is not None:
        ledger.round(1).round(1)
    return from_eval(inst, w, ledger)


def frobenius(x, i=1):
    """x^(16^i): coordinate j moves to position (j + i) mod n."""
    x = tuple(int(c) for c in x)
    i %= len(x)
    return x[-i:] + x[:-i] if i else x


def batch_mul(inst, pairs, strategy="schoolbook", ledger=None):
    """Many products at once, with the matrix-vector steps grouped into
    square matrix products (so a fast matrix product can be plugged in)."""
    pairs = list(pairs)
    m = len(pairs)
    if m == 0:
        return []
    dim = inst.dim
    # operands as columns, each pair in adjacent columns, zero-padded to a multiple of dim
    n_ops = -(-2 * m // dim) * dim
    ops = np.zeros((dim, n_ops), dtype=np.uint8)
    for p, (x, y) in enumerate(pairs):
        ops[:, 2 * p] = embed(inst, x)
        ops[:, 2 * p + 1] = embed(inst, y)
    evals = np.concatenate([linalg.mat_mul(inst.T, ops[:, s:s + dim], strategy, ledger)
                            for s in range(0, n_ops, dim)], axis=1)
    charge(ledger, "bilinear", m * dim)
    prods = MUL_NP[evals[:, 0:2 * m:2], evals[:, 1:2 * m:2]]
    n_res = -(-m // dim) * dim
    packed = np.zeros((dim, n_res), dtype=np.uint8)
    packed[:, :m] = prods
    coords = np.concatenate([linalg.mat_mul(inst.T_inv, packed[:, s:s + dim], strategy, ledger)
                             for s in range(0, n_res, dim)], axis=1)
    if ledger is not None:
        ledger.round(m)
    return [tuple(int(c) for c in coords[:inst.n, p]) for p in range(m)]


def parse_element(text, n):
    """An element from ``n`` hex nibbles (coordinate 1 first), or from a
    comma-separated list whose entries may also be written ``a^k``."""
    text = text.strip()
    tokens = text.split(",") if "," in text else list(text)
    if len(tokens) != n:
        raise ValueError(f"expected {n} coordinates, got {len(tokens)} in {text!r}")
    return tuple(parse(t) for t in tokens)


def render_element(x):
    return "".join("%x" % c for c in x)
