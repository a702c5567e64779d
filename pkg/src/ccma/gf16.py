"""Arithmetic in F_16 = F_2[a]/(a^4 + a + 1).

Elements are plain ints in ``range(16)``; bit ``i`` is the coefficient of
``a**i``, so ``a`` itself is ``0x2`` and ``a**4 == a + 1 == 0x3``.
Multiplication goes through exp/log tables.
"""

import numpy as np

Q = 16
ORDER = Q - 1
MODULUS = 0b10011  # a^4 + a + 1
GEN = 0x2

EXP = [1]
for _ in range(ORDER - 1):
    _v = EXP[-1] << 1
    if _v & Q:
        _v ^= MODULUS
    EXP.append(_v)
EXP = tuple(EXP)
LOG = {v: k for k, v in enumerate(EXP)}

# Full 16x16 product table; the numpy copy is used for vectorised gathers.
MUL = tuple(
    tuple(0 if x == 0 or y == 0 else EXP[(LOG[x] + LOG[y]) % ORDER] for y in range(Q))
    for x in range(Q)
)
MUL_NP = np.array(MUL, dtype=np.uint8)
INV = tuple([0] + [EXP[(ORDER - LOG[x]) % ORDER] for x in range(1, Q)])
INV_NP = np.array(INV, dtype=np.uint8)


def add(x, y):
    return x ^ y


def mul(x, y):
    return MUL[x][y]


def inv(x):
    if x == 0:
        raise ZeroDivisionError("inversion of zero")
    return INV[x]


def pow_base(x, k):
    """``x**k`` for ``k >= 0``; ``pow_base(0, 0)`` is 1 by convention."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if k == 0:
        return 1
    if x == 0:
        return 0
    return EXP[(LOG[x] * k) % ORDER]


def parse(token):
    """Parse one element: a hex digit, or ``a^k`` for the k-th power of a.

    A bare ``a`` is the hex digit 0xa (= a^9), not the generator; write
    ``a^1`` for that.
    """
    token = token.strip().lower()
    if token.startswith("a^"):
        k = int(token[2:])
        if not 0 <= k < ORDER:
            raise ValueError(f"exponent out of range in {token!r}")
        return EXP[k]
    if len(token) != 1:
        raise ValueError(f"not an F_16 element: {token!r}")
    return int(token, 16)


def render(x):
    return "%x" % x


def render_power(x):
    """Human form ``a^k`` (or ``0``)."""
    return "0" if x == 0 else f"a^{LOG[x]}"
