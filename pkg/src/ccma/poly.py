"""Polynomials over F_16, points of y^2 + y = x^5 and evaluation of
Riemann-Roch basis functions at rational points."""

from dataclasses import dataclass

from .gf16 import MUL, inv, parse


def trim(coeffs):
    """Normalise a coefficient sequence into a BasePoly tuple (degree-ascending,
    no trailing zeros; the zero polynomial is the empty tuple)."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(p):
    return len(p) - 1


def eval_poly(p, x0):
    acc = 0
    for c in reversed(p):
        acc = MUL[acc][x0] ^ c
    return acc


def parse_poly(tokens):
    """Degree-ascending hex nibbles (string or token list) to a BasePoly."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    return trim(parse(t) for t in tokens)


def render_poly(p):
    return " ".join("%x" % c for c in p) if p else "0"


@dataclass(frozen=True)
class RationalPoint:
    x: int = 0
    y: int = 0
    at_infinity: bool = False


INFINITY = RationalPoint(0, 1, True)


def on_curve(p):
    if p.at_infinity:
        return True
    x2 = MUL[p.x][p.x]
    x5 = MUL[MUL[x2][x2]][p.x]
    return MUL[p.y][p.y] ^ p.y == x5


def affine_points():
    """All affine F_16-points of the curve, in (x, y) order."""
    return [RationalPoint(x, y) for x in range(16) for y in range(16)
            if on_curve(RationalPoint(x, y))]


@dataclass(frozen=True)
class BasisFunction:
    """The function ``(num_y(x) * y + num_c(x)) / D(x)**denom_power``."""

    num_y: tuple
    num_c: tuple
    denom_power: int = 1

    def __add__(self, other):
        if self.denom_power != other.denom_power:
            raise ValueError("denominator powers differ")
        return BasisFunction(_poly_add(self.num_y, other.num_y),
                             _poly_add(self.num_c, other.num_c), self.denom_power)


def _poly_add(p, r):
    n = max(len(p), len(r))
    p = tuple(p) + (0,) * (n - len(p))
    r = tuple(r) + (0,) * (n - len(r))
    return trim(a ^ b for a, b in zip(p, r))


class UnsupportedPointError(ValueError):
    pass


def eval_basis(f, p, d_poly):
    if p.at_infinity:
        raise UnsupportedPointError("evaluation at the point at infinity is not supported")
    num = MUL[eval_poly(f.num_y, p.x)][p.y] ^ eval_poly(f.num_c, p.x)
    d_inv = inv(eval_poly(d_poly, p.x))
    for _ in range(f.denom_power):
        num = MUL[num][d_inv]
    return num
