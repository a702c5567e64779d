"""Dense linear algebra over F_16.

Matrices and vectors are numpy ``uint8`` arrays holding F_16 elements.
Products go through the 16x16 multiplication table and reduce with XOR.
Every routine takes an optional :class:`~ccma.cost.CostLedger` and charges
the multiplications and additions the modelled algorithm performs.
"""

from dataclasses import dataclass

import numpy as np

from .cost import charge
from .gf16 import INV, MUL_NP, Q

STRATEGIES = ("schoolbook", "strassen")
DEFAULT_CUTOFF = 16
DEFAULT_TABLE_CAP = 2 ** 24


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    def __init__(self, rank, size):
        super().__init__(f"matrix is singular (rank {rank} < {size})")
        self.rank = rank
        self.size = size


def as_matrix(rows):
    m = np.array(rows, dtype=np.uint8)
    if m.ndim != 2:
        raise DimensionError("a matrix must be two-dimensional")
    if m.size and m.max() >= Q:
        raise ValueError("entries must lie in F_16")
    return m


def identity(n):
    return np.eye(n, dtype=np.uint8)


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=np.uint8)


def scale(c, m):
    return MUL_NP[c][m]


def mat_vec(m, v, ledger=None):
    v = np.asarray(v, dtype=np.uint8)
    rows, cols = m.shape
    if v.shape != (cols,):
        raise DimensionError(f"cannot apply a {rows}x{cols} matrix to a vector of length {len(v)}")
    charge(ledger, "scalar_mul", rows * cols)
    charge(ledger, "add", rows * (cols - 1))
    if cols == 0:
        return np.zeros(rows, dtype=np.uint8)
    return np.bitwise_xor.reduce(MUL_NP[m, v[None, :]], axis=1)


def _schoolbook(a, b, ledger):
    r, k = a.shape
    c = b.shape[1]
    charge(ledger, "scalar_mul", r * k * c)
    charge(ledger, "add", r * (k - 1) * c)
    if k == 0:
        return zeros(r, c)
    return np.bitwise_xor.reduce(MUL_NP[a[:, :, None], b[None, :, :]], axis=1)


def _strassen_square(a, b, cutoff, ledger):
    size = a.shape[0]
    if size <= cutoff:
        return _schoolbook(a, b, ledger)
    h = size // 2
    a11, a12, a21, a22 = a[:h, :h], a[:h, h:], a[h:, :h], a[h:, h:]
    b11, b12, b21, b22 = b[:h, :h], b[:h, h:], b[h:, :h], b[h:, h:]
    # characteristic 2: every subtraction is an XOR
    charge(ledger, "add", 18 * h * h)
    m1 = _strassen_square(a11 ^ a22, b11 ^ b22, cutoff, ledger)
    m2 = _strassen_square(a21 ^ a22, b11, cutoff, ledger)
    m3 = _strassen_square(a11, b12 ^ b22, cutoff, ledger)
    m4 = _strassen_square(a22, b21 ^ b11, cutoff, ledger)
    m5 = _strassen_square(a11 ^ a12, b22, cutoff, ledger)
    m6 = _strassen_square(a21 ^ a11, b11 ^ b12, cutoff, ledger)
    m7 = _strassen_square(a12 ^ a22, b21 ^ b22, cutoff, ledger)
    out = np.empty((size, size), dtype=np.uint8)
    out[:h, :h] = m1 ^ m4 ^ m5 ^ m7
    out[:h, h:] = m3 ^ m5
    out[h:, :h] = m2 ^ m4
    out[h:, h:] = m1 ^ m2 ^ m3 ^ m6
    return out


def _strassen(a, b, cutoff, ledger):
    r, k = a.shape
    c = b.shape[1]
    size = max(r, k, c)
    if size <= cutoff:
        return _schoolbook(a, b, ledger)
    p = 1 << (size - 1).bit_length()
    ap = zeros(p, p)
    bp = zeros(p, p)
    ap[:r, :k] = a
    bp[:k, :c] = b
    return _strassen_square(ap, bp, cutoff, ledger)[:r, :c]


def mat_mul(a, b, strategy="schoolbook", ledger=None, cutoff=DEFAULT_CUTOFF):
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"inner dimensions differ: {a.shape} x {b.shape}")
    if strategy == "schoolbook":
        return _schoolbook(a, b, ledger)
    if strategy == "strassen":
        return _strassen(a, b, cutoff, ledger)
    raise ValueError(f"unknown strategy {strategy!r}")


def _pad(m, rows, cols):
    out = zeros(rows, cols)
    out[:m.shape[0], :m.shape[1]] = m
    return out


def block_mul(a, b, block, strategy="schoolbook", ledger=None, cutoff=DEFAULT_CUTOFF):
    """``a @ b`` computed as sums of ``block`` x ``block`` sub-products.

    Both operands are zero-padded up to multiples of ``block``; each
    output block is ``sum_k A_ik B_kj`` with the sub-products dispatched to
    ``mat_mul(strategy)``.
    """
    if block < 1:
        raise ValueError("block size must be positive")
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"inner dimensions differ: {a.shape} x {b.shape}")
    r, k = a.shape
    c = b.shape[1]
    nr, nk, nc = (-(-d // block) for d in (r, k, c))
    ap = _pad(a, nr * block, nk * block)
    bp = _pad(b, nk * block, nc * block)
    out = zeros(nr * block, nc * block)
    for i in range(nr):
        for j in range(nc):
            acc = zeros(block, block)
            for t in range(nk):
                acc ^= mat_mul(ap[i * block:(i + 1) * block, t * block:(t + 1) * block],
                               bp[t * block:(t + 1) * block, j * block:(j + 1) * block],
                               strategy, ledger, cutoff)
            charge(ledger, "add", (nk - 1) * block * block)
            out[i * block:(i + 1) * block, j * block:(j + 1) * block] = acc
    return out[:r, :c]


def rank(m):
    return _eliminate(m.copy())[0]


def _eliminate(work):
    """Gauss-Jordan on ``work`` in place; returns (rank, pivot columns)."""
    rows, cols = work.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(work[r:, c])[0]
        if len(nz) == 0:
            continue
        p = r + nz[0]
        if p != r:
            work[[r, p]] = work[[p, r]]
        work[r] = MUL_NP[INV[work[r, c]]][work[r]]
        col = work[:, c].copy()
        col[r] = 0
        # row_i -= col_i * row_r, for every other row at once
        work ^= MUL_NP[col[:, None], work[r][None, :]]
        pivots.append(c)
        r += 1
    return r, pivots


def invert(m):
    n, cols = m.shape
    if n != cols:
        raise DimensionError("only square matrices can be inverted")
    work = np.concatenate([m, identity(n)], axis=1)
    rk, pivots = _eliminate(work)
    if rk < n or (pivots and pivots[-1] >= n):
        raise SingularMatrixError(rank(m), n)
    return work[:, n:].copy()


@dataclass(frozen=True)
class WindowTables:
    """Lookup tables of ``M @ x`` for every value of each ``window``-wide
    chunk of the first ``n`` input coordinates. ``tables[i][v]`` holds the
    image of chunk value ``v`` placed at coordinate offset ``i * window``;
    the chunk's first coordinate is its least significant hex digit."""

    window: int
    n: int
    rows: int
    tables: tuple


def build_window_tables(m, window, n=None, cap=DEFAULT_TABLE_CAP):
    rows, cols = m.shape
    n = cols if n is None else n
    if not 1 <= window <= n:
        raise ValueError(f"window must lie in 1..{n}")
    if n > cols:
        raise DimensionError("n exceeds the matrix width")
    widths = [min(window, n - start) for start in range(0, n, window)]
    total = sum(Q ** w for w in widths)
    if total > cap:
        raise ValueError(f"window tables need {total} entries, above the cap of {cap}")
    tables = []
    for i, w in enumerate(widths):
        vals = np.arange(Q ** w)
        tab = np.zeros((Q ** w, rows), dtype=np.uint8)
        for d in range(w):
            digit = ((vals >> (4 * d)) & 0xF).astype(np.uint8)
            tab ^= MUL_NP[digit[:, None], m[None, :, i * window + d]]
        tab.setflags(write=False)
        tables.append(tab)
    return WindowTables(window, n, rows, tuple(tables))


def apply_window_tables(tabs, x, ledger=None):
    """``M @ embed(x)`` by table lookups; no multiplications are performed."""
    x = [int(c) for c in x]
    if len(x) != tabs.n:
        raise DimensionError(f"expected {tabs.n} coordinates, got {len(x)}")
    out = np.zeros(tabs.rows, dtype=np.uint8)
    for i, tab in enumerate(tabs.tables):
        idx = 0
        for d, c in enumerate(x[i * tabs.window:(i + 1) * tabs.window]):
            idx |= c << (4 * d)
        out ^= tab[idx]
    charge(ledger, "add", (len(tabs.tables) - 1) * tabs.rows)
    return out


def serialize_matrix(m):
    lines = [f"matrix {m.shape[0]} {m.shape[1]}"]
    lines.extend("".join("%x" % v for v in row) for row in m)
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if len(head) != 3 or head[0] != "matrix":
        raise ValueError("expected a 'matrix <rows> <cols>' header")
    rows, cols = int(head[1]), int(head[2])
    body = [ln.replace(" ", "") for ln in lines[1:]]
    if len(body) != rows or any(len(ln) != cols for ln in body):
        raise ValueError("matrix body does not match its header")
    return as_matrix([[int(ch, 16) for ch in ln] for ln in body])
