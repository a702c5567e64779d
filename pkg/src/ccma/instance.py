"""Construction data for the interpolation algorithm: parsing, validation,
setup of the evaluation matrices and certification of the printed data."""

from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np

from . import linalg
from .cost import CostLedger
from .gf16 import Q as FIELD_SIZE
from .oracle import OracleError, OracleField, prime_factors
from .builtin_data import INSTANCE_TEXT
from .poly import (INFINITY, BasisFunction, RationalPoint, affine_points, degree,
                   eval_basis, eval_poly, on_curve, parse_poly)

HEADER = "ccma-instance v1"
CURVE = "y2+y=x^5"
BASE_POLY = (1, 1, 0, 0, 1)


class InstanceError(ValueError):
    pass


class InstanceParseError(InstanceError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class InstanceValidationError(InstanceError):
    def __init__(self, check, message):
        super().__init__(f"{check}: {message}")
        self.check = check


class SetupError(InstanceError):
    pass


@dataclass(frozen=True, eq=False)
class CcmaInstance:
    n: int
    g: int
    q: int
    Q_poly: tuple
    D_poly: tuple
    beta_poly: tuple
    points: tuple  # index 0 is P_1 (the point at infinity) in 1-based file numbering
    eval_points: tuple  # 1-based indices into ``points``
    ld_basis: tuple
    ker_basis: tuple
    T: np.ndarray = None
    T_inv: np.ndarray = None
    T1: np.ndarray = None
    identity: tuple = None
    setup_cost: CostLedger = field(default_factory=CostLedger)

    @property
    def dim(self):
        """Dimension 2n + g - 1 of L(2D), the evaluation space."""
        return 2 * self.n + self.g - 1

    @property
    def basis(self):
        return self.ld_basis + self.ker_basis

    @property
    def is_setup(self):
        return self.T is not None

    @property
    def T_head(self):
        """The first n columns of T: its action on embedded field elements."""
        return self.T[:, :self.n]

    @property
    def T_inv_head(self):
        """The first n rows of T^-1: all the projection keeps."""
        return self.T_inv[:self.n, :]

    @property
    def oracle(self):
        return _oracle_for(self.Q_poly)


@lru_cache(maxsize=8)
def _oracle_for(q_poly):
    return OracleField(q_poly)


def _parse_basis_line(parts, lineno, denom_power):
    try:
        idx = int(parts[1])
        bar = parts.index("|")
    except (IndexError, ValueError):
        raise InstanceParseError(lineno, "expected '<i> <num_y nibbles> | <num_c nibbles>'")
    return idx, BasisFunction(parse_poly(parts[2:bar]), parse_poly(parts[bar + 1:]), denom_power)


def load_instance(text):
    """Parse instance text and check its structure (no matrices yet)."""
    lines = text.splitlines()
    fields = {}
    points = []
    ld, ker = {}, {}
    seen_header = False
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_header:
            if line != HEADER:
                raise InstanceParseError(lineno, f"expected header {HEADER!r}")
            seen_header = True
            continue
        parts = line.split()
        key = parts[0]
        try:
            if key in ("q", "n", "g"):
                fields[key] = int(parts[1])
            elif key == "base-poly":
                fields[key] = tuple(int(t) for t in parts[1:])
            elif key == "curve":
                fields[key] = parts[1]
            elif key in ("Q", "D", "beta"):
                fields[key] = parse_poly(parts[1:])
            elif key == "point":
                if len(parts) != 3:
                    raise ValueError("expected 'point <x> <y>'")
                points.append(RationalPoint(int(parts[1], 16), int(parts[2], 16)))
            elif key == "point-inf":
                points.append(INFINITY)
            elif key == "eval-points":
                fields[key] = tuple(int(t) for t in parts[1:])
            elif key == "LD":
                i, f = _parse_basis_line(parts, lineno, 1)
                if i in ld:
                    raise ValueError(f"duplicate LD {i}")
                ld[i] = f
            elif key == "KER":
                i, f = _parse_basis_line(parts, lineno, 2)
                if i in ker:
                    raise ValueError(f"duplicate KER {i}")
                ker[i] = f
            else:
                raise ValueError(f"unknown keyword {key!r}")
        except InstanceParseError:
            raise
        except (ValueError, IndexError) as exc:
            raise InstanceParseError(lineno, str(exc)) from None
    if not seen_header:
        raise InstanceParseError(1, "empty instance")
    for key in ("q", "base-poly", "n", "g", "curve", "Q", "D", "beta", "eval-points"):
        if key not in fields:
            raise InstanceValidationError("fields", f"missing '{key}' line")
    if any(p.x >= FIELD_SIZE or p.y >= FIELD_SIZE for p in points):
        raise InstanceValidationError("points", "coordinate outside F_16")
    n, g = fields["n"], fields["g"]
    inst = CcmaInstance(
        n=n, g=g, q=fields["q"],
        Q_poly=fields["Q"], D_poly=fields["D"], beta_poly=fields["beta"],
        points=tuple(points), eval_points=fields["eval-points"],
        ld_basis=tuple(ld[i] for i in sorted(ld)),
        ker_basis=tuple(ker[i] for i in sorted(ker)),
    )
    _validate(inst, fields, sorted(ld), sorted(ker))
    return inst


def _validate(inst, fields, ld_idx, ker_idx):
    def check(ok, name, message):
        if not ok:
            raise InstanceValidationError(name, message)

    n, g = inst.n, inst.g
    check(inst.q == FIELD_SIZE, "field", f"only q = 16 is supported, got {inst.q}")
    check(fields["base-poly"] == BASE_POLY, "field", "only a^4 + a + 1 is supported")
    check(fields["curve"] == CURVE, "curve", f"only {CURVE} is supported")
    check(n >= 2 and g == 2, "parameters", "need n >= 2 and genus 2")
    check(degree(inst.Q_poly) == n and inst.Q_poly[-1] == 1, "Q", f"Q must be monic of degree {n}")
    check(degree(inst.D_poly) == n + g - 1 and inst.D_poly[-1] == 1,
          "D", f"D must be monic of degree {n + g - 1}")
    check(degree(inst.beta_poly) < n, "beta", f"beta must have degree < {n}")
    # D(x) has no F_16 root, so every basis function is finite at every affine point
    check(all(eval_poly(inst.D_poly, x) for x in range(FIELD_SIZE)), "D", "D has a root in F_16")

    pts = inst.points
    check(all(on_curve(p) for p in pts), "points", "a listed point is not on the curve")
    check(len(set(pts)) == len(pts), "points", "repeated point")
    n_rational = len(affine_points()) + 1
    check(len(pts) == n_rational, "points",
          f"expected all {n_rational} rational points, got {len(pts)}")

    dim = 2 * n + g - 1
    ev = inst.eval_points
    check(len(ev) == dim, "eval-points", f"expected {dim} evaluation points, got {len(ev)}")
    check(len(set(ev)) == len(ev), "eval-points", "repeated evaluation point")
    check(all(1 <= i <= len(pts) for i in ev), "eval-points", "index out of range")
    check(not any(pts[i - 1].at_infinity for i in ev), "eval-points",
          "the point at infinity cannot be an evaluation point")

    check(ld_idx == list(range(1, n + 1)), "LD", f"expected LD 1..{n}, got {len(ld_idx)} functions")
    check(ker_idx == list(range(n + 1, dim + 1)), "KER",
          f"expected KER {n + 1}..{dim} ({n + g - 1} functions), got {len(ker_idx)}")
    d = degree(inst.D_poly)
    for f in inst.basis:
        bound = f.denom_power * d
        # pole orders at infinity: x has 2, y has 5
        check(degree(f.num_c) <= bound and degree(f.num_y) <= bound - 3,
              "basis-degrees", "numerator degree exceeds what L(2D) allows")


def evaluation_matrix(inst, eval_points=None):
    """T[j][i] = i-th L(2D) basis function at the j-th evaluation point."""
    ev = inst.eval_points if eval_points is None else eval_points
    return linalg.as_matrix([[eval_basis(f, inst.points[j - 1], inst.D_poly) for f in inst.basis]
                             for j in ev])


def _next_combination(combo, pool):
    """Lexicographic successor of ``combo`` among sorted subsets of ``pool``."""
    combo = list(combo)
    k, m = len(combo), len(pool)
    pos = {v: i for i, v in enumerate(pool)}
    for i in range(k - 1, -1, -1):
        if pos[combo[i]] < m - k + i:
            start = pos[combo[i]] + 1
            combo[i:] = pool[start:start + k - i]
            return tuple(combo)
    return None


def setup(inst, max_attempts=None):
    """Build T, T^-1, T1 = T P T^-1 and the identity element.

    If T is singular at the requested evaluation points, the selection
    advances through affine-point subsets in lexicographic order.
    """
    pool = [i for i, p in enumerate(inst.points, 1) if not p.at_infinity]
    selection = tuple(inst.eval_points)
    attempts = 0
    while True:
        attempts += 1
        T = evaluation_matrix(inst, selection)
        try:
            T_inv = linalg.invert(T)
            break
        except linalg.SingularMatrixError:
            pass
        if max_attempts is not None and attempts >= max_attempts:
            raise SetupError(f"no invertible evaluation matrix after {attempts} selections")
        selection = _next_combination(sorted(selection), pool)
        if selection is None:
            raise SetupError("every choice of evaluation points gives a singular matrix")
    cost = CostLedger()
    n = inst.n
    T1 = linalg.mat_mul(T[:, :n], T_inv[:n, :], ledger=cost)
    for m in (T, T_inv, T1):
        m.setflags(write=False)
    try:
        identity = inst.oracle.to_normal(inst.oracle.one)
    except OracleError as exc:
        raise SetupError(str(exc)) from None
    return replace(inst, eval_points=selection, T=T, T_inv=T_inv, T1=T1,
                   identity=identity, setup_cost=cost)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def render(self):
        lines = [f"[{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else "")
                 for c in self.checks]
        ok = sum(c.passed for c in self.checks)
        lines.append(f"{ok}/{len(self.checks)} checks passed")
        return "\n".join(lines)


CHECK_NAMES = ("trace", "normality", "primitivity", "residue-basis", "kernel", "curve-point")


def _trace_f2(field, x):
    acc, y = field.zero, x
    for _ in range(4 * field.n):
        acc = field.add(acc, y)
        y = field.mul(y, y)
    return acc


def verify_instance(inst, oracle=None):
    """Certify the algebraic claims behind the instance in the oracle field."""
    field = oracle or OracleField(inst.Q_poly)
    alpha = field.gen
    beta = field.eval_poly(inst.beta_poly, alpha)

    def trace():
        t = _trace_f2(field, field.pow(alpha, 5))
        return t == field.zero, "" if t == field.zero else "Tr(b^5) != 0"

    def normality():
        return field.is_normal(), ""

    def primitivity():
        if field.pow(alpha, field.order) != field.one:
            return False, "b^(q^n - 1) != 1"
        for p in prime_factors(field.order):
            if field.pow(alpha, field.order // p) == field.one:
                return False, f"order of b divides (q^n - 1)/{p}"
        return True, ""

    def residue_basis():
        conj = alpha
        for i, f in enumerate(inst.ld_basis, 1):
            if field.eval_basis(f, alpha, beta, inst.D_poly) != conj:
                return False, f"f_{i}(alpha, beta) != alpha^(16^{i - 1})"
            conj = field.pow(conj, FIELD_SIZE)
        return True, ""

    def kernel():
        for i, f in enumerate(inst.ker_basis, inst.n + 1):
            if field.eval_basis(f, alpha, beta, inst.D_poly) != field.zero:
                return False, f"g_{i}(alpha, beta) != 0"
        return True, ""

    def curve_point():
        lhs = field.add(field.mul(beta, beta), beta)
        return lhs == field.pow(alpha, 5), ""

    results = []
    for name, fn in zip(CHECK_NAMES, (trace, normality, primitivity, residue_basis, kernel, curve_point)):
        try:
            ok, detail = fn()
        except OracleError as exc:
            ok, detail = False, str(exc)
        results.append(CheckResult(name, ok, detail))
    return VerificationReport(tuple(results))


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    U1: np.ndarray
    U2: np.ndarray
    U3: np.ndarray
    U4: np.ndarray
    V1: np.ndarray
    V2: np.ndarray
    V3: np.ndarray
    V4: np.ndarray


class ConsistencyError(RuntimeError):
    pass


def block_decompose(inst):
    n = inst.n
    T, V = inst.T, inst.T_inv
    bd = BlockDecomposition(T[:n, :n], T[n:, :n], T[:n, n:], T[n:, n:],
                            V[:n, :n], V[n:, :n], V[:n, n:], V[n:, n:])
    mm = linalg.mat_mul
    m = n + inst.g - 1
    relations = {
        "U1V1+U3V2=I": (mm(bd.U1, bd.V1) ^ mm(bd.U3, bd.V2), linalg.identity(n)),
        "U1V3+U3V4=0": (mm(bd.U1, bd.V3) ^ mm(bd.U3, bd.V4), linalg.zeros(n, m)),
        "U2V1+U4V2=0": (mm(bd.U2, bd.V1) ^ mm(bd.U4, bd.V2), linalg.zeros(m, n)),
        "U2V3+U4V4=I": (mm(bd.U2, bd.V3) ^ mm(bd.U4, bd.V4), linalg.identity(m)),
        "T1 blocks": (np.block([[mm(bd.U1, bd.V1), mm(bd.U1, bd.V3)],
                                [mm(bd.U2, bd.V1), mm(bd.U2, bd.V3)]]), inst.T1),
    }
    for name, (got, want) in relations.items():
        if not np.array_equal(got, want):
            raise ConsistencyError(f"block relation {name} fails")
    return bd


def parse_instance(text):
    """Load and set up in one step."""
    return setup(load_instance(text))


@lru_cache(maxsize=1)
def default_instance():
    """The embedded F_{16^13} instance, set up (cached)."""
    return parse_instance(INSTANCE_TEXT)
