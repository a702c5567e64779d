"""Reference arithmetic for F_{16^n} as F_16[X]/(Q(X)) in the power basis.

This is the ground truth the interpolation path is checked against, so it
deliberately shares nothing with it beyond :mod:`ccma.gf16`: products are
schoolbook convolutions reduced modulo Q, and the basis change to the
normal basis uses its own small elimination routine.
"""

from .gf16 import INV, MUL, Q as FIELD_SIZE


class OracleError(ValueError):
    pass


class OracleField:
    """F_16[X]/(modulus) for a monic ``modulus`` of degree n.

    Elements (PolyBasisElem) are n-tuples of coordinates over
    ``(1, b, ..., b^(n-1))`` with ``b`` the class of X.
    """

    def __init__(self, modulus):
        modulus = tuple(modulus)
        if not modulus or modulus[-1] != 1:
            raise OracleError("modulus must be monic")
        self.modulus = modulus
        self.n = len(modulus) - 1
        self.order = FIELD_SIZE ** self.n - 1
        self._nc = None
        self._nc_inv = None

    # -- elements -------------------------------------------------------
    @property
    def zero(self):
        return (0,) * self.n

    @property
    def one(self):
        return (1,) + (0,) * (self.n - 1)

    @property
    def gen(self):
        """The class ``b`` of X (the root alpha of Q)."""
        return self.element([0, 1])

    def element(self, coeffs):
        """Reduce an arbitrary-length coefficient list modulo Q."""
        return self._reduce(list(coeffs))

    def constant(self, c):
        return (c,) + (0,) * (self.n - 1)

    def _reduce(self, prod):
        n, q = self.n, self.modulus
        for k in range(len(prod) - 1, n - 1, -1):
            c = prod[k]
            if c:
                row = MUL[c]
                for i in range(n):
                    prod[k - n + i] ^= row[q[i]]
                prod[k] = 0
        prod = prod[:n]
        return tuple(prod) + (0,) * (n - len(prod))

    def add(self, x, y):
        return tuple(a ^ b for a, b in zip(x, y))

    def mul(self, x, y):
        prod = [0] * (2 * self.n - 1)
        for i, a in enumerate(x):
            if a:
                row = MUL[a]
                for j, b in enumerate(y):
                    prod[i + j] ^= row[b]
        return self._reduce(prod)

    def scale(self, c, x):
        row = MUL[c]
        return tuple(row[a] for a in x)

    def pow(self, x, k):
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            k >>= 1
        return result

    def inverse(self, x):
        r = self.pow(x, self.order - 1)
        if self.mul(r, x) != self.one:
            raise OracleError("element is not invertible (zero, or modulus reducible)")
        return r

    def frobenius(self, x, i=1):
        return self.pow(x, FIELD_SIZE ** i)

    # -- evaluation -----------------------------------------------------
    def eval_poly(self, p, at):
        """Horner evaluation of a BasePoly at an extension-field argument."""
        acc = self.zero
        for c in reversed(p):
            acc = self.add(self.mul(acc, at), self.constant(c))
        return acc

    def eval_basis(self, f, alpha, beta, d_poly):
        """Value of ``(num_y(alpha) beta + num_c(alpha)) / D(alpha)^p``."""
        num = self.add(self.mul(self.eval_poly(f.num_y, alpha), beta),
                       self.eval_poly(f.num_c, alpha))
        d_inv = self.inverse(self.eval_poly(d_poly, alpha))
        for _ in range(f.denom_power):
            num = self.mul(num, d_inv)
        return num

    # -- normal basis ---------------------------------------------------
    def conversion_matrix(self):
        """NC: column i holds the power-basis coordinates of b^(16^i)."""
        if self._nc is None:
            cols = []
            c = self.gen
            for _ in range(self.n):
                cols.append(c)
                c = self.pow(c, FIELD_SIZE)
            self._nc = [[cols[j][i] for j in range(self.n)] for i in range(self.n)]
        return self._nc

    def is_normal(self):
        try:
            self._inverse_nc()
        except OracleError:
            return False
        return True

    def _inverse_nc(self):
        if self._nc_inv is None:
            self._nc_inv = _invert(self.conversion_matrix())
        return self._nc_inv

    def from_normal(self, x):
        nc = self.conversion_matrix()
        return tuple(_dot(row, x) for row in nc)

    def to_normal(self, p):
        nci = self._inverse_nc()
        return tuple(_dot(row, p) for row in nci)


def _dot(row, v):
    acc = 0
    for a, b in zip(row, v):
        acc ^= MUL[a][b]
    return acc


def _invert(m):
    n = len(m)
    work = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if work[r][c]), None)
        if p is None:
            raise OracleError("conversion matrix is singular: the root of Q is not normal")
        work[c], work[p] = work[p], work[c]
        s = MUL[INV[work[c][c]]]
        work[c] = [s[v] for v in work[c]]
        for r in range(n):
            f = work[r][c]
            if r != c and f:
                row = MUL[f]
                work[r] = [v ^ row[w] for v, w in zip(work[r], work[c])]
    return [r[n:] for r in work]


def prime_factors(m):
    """Distinct prime factors of ``m`` by trial division."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out
