"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input or validation
error, 3 I/O error.
"""

import argparse
import os
import random
import sys

import numpy as np

from . import linalg
from .core import batch_mul, ccma_mul, ccma_mul3, frobenius, parse_element, render_element
from .cost import MODELS, CostLedger, format_report
from .exponent import ScheduleTrace, pow_square_multiply, pow_vzg
from .instance import (InstanceError, block_decompose, load_instance, default_instance, setup,
                       verify_instance)
from .builtin_data import INSTANCE_TEXT

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _instance(path):
    if path is None:
        return default_instance()
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read instance: {exc}")
    return setup(load_instance(text))


def _element(inst, text):
    try:
        return parse_element(text, inst.n)
    except ValueError as exc:
        raise CliError(EXIT_INPUT, f"bad element: {exc}")


def _bench(ledger, model):
    if model is not None:
        print(format_report(ledger, MODELS if model == "all" else (model,)))


def cmd_build(args):
    inst = _instance(args.instance)
    report = verify_instance(inst)
    print(report.render())
    if not report.passed:
        failed = ", ".join(c.name for c in report.checks if not c.passed)
        raise CliError(EXIT_INPUT, f"instance validation failed: {failed}")
    try:
        os.makedirs(args.out, exist_ok=True)
        for name, m in (("T", inst.T), ("T_inv", inst.T_inv), ("T1", inst.T1)):
            with open(os.path.join(args.out, f"{name}.mat"), "w", encoding="utf-8") as fh:
                fh.write(linalg.serialize_matrix(m))
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write matrices: {exc}")
    print(f"wrote T.mat, T_inv.mat, T1.mat to {args.out}")


def cmd_mul(args):
    inst = _instance(args.instance)
    x, y = _element(inst, args.x), _element(inst, args.y)
    ledger = CostLedger()
    print(render_element(ccma_mul(inst, x, y, ledger)))
    _bench(ledger, args.bench)


def cmd_mul3(args):
    inst = _instance(args.instance)
    x, y, z = (_element(inst, v) for v in (args.x, args.y, args.z))
    ledger = CostLedger()
    print(render_element(ccma_mul3(inst, x, y, z, ledger)))
    _bench(ledger, args.bench)


def cmd_pow(args):
    inst = _instance(args.instance)
    x = _element(inst, args.x)
    if args.k < 0:
        raise CliError(EXIT_INPUT, "--k must be nonnegative")
    ledger, trace = CostLedger(), ScheduleTrace()
    if args.algo == "sm":
        result = pow_square_multiply(inst, x, args.k, ledger, trace)
    else:
        if (args.r is None) != (args.u is None):
            raise CliError(EXIT_INPUT, "--r and --u go together")
        params = (args.r, args.u) if args.r is not None else None
        try:
            result = pow_vzg(inst, x, args.k, params, ledger, trace, args.strategy)
        except ValueError as exc:
            raise CliError(EXIT_INPUT, str(exc))
    print(render_element(result))
    if args.trace:
        print(trace.render())
    _bench(ledger, args.bench)


def cmd_batch(args):
    inst = _instance(args.instance)
    if len(args.elements) % 2:
        raise CliError(EXIT_INPUT, "batch needs an even number of elements")
    elems = [_element(inst, e) for e in args.elements]
    ledger = CostLedger()
    for r in batch_mul(inst, zip(elems[::2], elems[1::2]), args.strategy, ledger):
        print(render_element(r))
    _bench(ledger, args.bench)


def _suite(name, fn):
    try:
        detail = fn()
        return True, f"[PASS] {name}" + (f": {detail}" if detail else "")
    except AssertionError as exc:
        return False, f"[FAIL] {name}: {exc}"


def run_verify(inst, trials, seed):
    """Run the property suites; returns (all passed, report lines)."""
    rng = random.Random(seed)
    o = inst.oracle
    n = inst.n
    order = 16 ** n - 1

    def rand_elem(nonzero=False):
        while True:
            x = tuple(rng.randrange(16) for _ in range(n))
            if any(x) or not nonzero:
                return x

    def instance_checks():
        rep = verify_instance(inst, o)
        assert rep.passed, "; ".join(c.name for c in rep.checks if not c.passed)
        return f"{len(rep.checks)}/{len(rep.checks)} checks"

    def structure():
        assert np.array_equal(linalg.mat_mul(inst.T, inst.T_inv), linalg.identity(inst.dim)), "T T^-1 != I"
        block_decompose(inst)
        assert len(set(inst.identity)) == 1, "identity coordinates not constant"
        return f"T is {inst.dim}x{inst.dim}, block relations hold"

    def oracle_equivalence():
        for _ in range(trials):
            x, y = rand_elem(), rand_elem()
            want = o.to_normal(o.mul(o.from_normal(x), o.from_normal(y)))
            assert ccma_mul(inst, x, y) == want, f"mismatch at {render_element(x)}*{render_element(y)}"
        return f"{trials} products"

    def field_axioms():
        add = lambda a, b: tuple(p ^ q for p, q in zip(a, b))
        mul = lambda a, b: ccma_mul(inst, a, b)
        for _ in range(trials):
            x, y, z = rand_elem(), rand_elem(), rand_elem()
            assert mul(x, y) == mul(y, x), "commutativity"
            assert mul(mul(x, y), z) == mul(x, mul(y, z)), "associativity"
            assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z)), "distributivity"
            assert mul(x, inst.identity) == x, "identity"
            if any(x):
                assert mul(x, pow_vzg(inst, x, order - 1)) == inst.identity, "inverse"
        return f"{trials} trials"

    def frobenius_law():
        for _ in range(trials):
            x = rand_elem()
            assert pow_vzg(inst, x, 16) == frobenius(x, 1), "x^16 is not a rotation"
            assert o.to_normal(o.pow(o.from_normal(x), 16)) == frobenius(x, 1), "oracle x^16"
        return f"{trials} elements"

    def counts():
        lg = CostLedger()
        ccma_mul(inst, inst.identity, inst.identity, lg)
        g = inst.g
        assert (lg.bilinear, lg.total("S1")) == (inst.dim, 6 * n * n + n * (3 * g - 1) + g - 1), \
            f"mul charged {lg.bilinear}/{lg.total('S1')}"
        lg = CostLedger()
        ccma_mul3(inst, inst.identity, inst.identity, inst.identity, lg)
        assert (lg.bilinear, lg.total("S1")) == (2 * inst.dim, 12 * n * n + n * (8 * g - 4) + g * g - 1), \
            f"mul3 charged {lg.bilinear}/{lg.total('S1')}"
        return "mul and mul3 at the closed-form counts"

    def exponentiation():
        for _ in range(trials):
            x, k = rand_elem(), rng.randrange(order)
            want = o.to_normal(o.pow(o.from_normal(x), k))
            assert pow_square_multiply(inst, x, k) == want, "square-and-multiply"
            assert pow_vzg(inst, x, k) == want, "parallel windowed"
        return f"{trials} exponentiations"

    suites = [("instance", instance_checks), ("structure", structure), ("counts", counts)]
    if trials:
        suites += [("oracle-equivalence", oracle_equivalence), ("field-axioms", field_axioms),
                   ("frobenius", frobenius_law), ("exponentiation", exponentiation)]
    results = [_suite(name, fn) for name, fn in suites]
    ok = all(r for r, _ in results)
    lines = [line for _, line in results]
    lines.append(f"{sum(r for r, _ in results)}/{len(results)} suites passed (trials={trials}, seed={seed})")
    return ok, lines


def cmd_verify(args):
    inst = _instance(args.instance)
    ok, lines = run_verify(inst, args.trials, args.seed)
    print("\n".join(lines))
    if not ok:
        raise CliError(EXIT_VERIFY, "verification failed")


def cmd_instance(args):
    sys.stdout.write(INSTANCE_TEXT)


def build_parser():
    p = argparse.ArgumentParser(prog="ccma", description=(
        "Interpolation-based multiplication and exponentiation in F_{16^13}."))
    p.add_argument("--instance", help="instance file (default: the embedded F_16^13 instance)")
    sub = p.add_subparsers(dest="command", required=True)
    bench = dict(choices=MODELS + ("all",), default=None, help="print the cost ledger for a model")
    strategy = dict(choices=linalg.STRATEGIES, default=None)

    b = sub.add_parser("build", help="set up T, T^-1, T1 and certify the instance")
    b.add_argument("--out", required=True)
    b.set_defaults(fn=cmd_build)

    m = sub.add_parser("mul", help="x * y")
    m.add_argument("x")
    m.add_argument("y")
    m.add_argument("--bench", **bench)
    m.set_defaults(fn=cmd_mul)

    m3 = sub.add_parser("mul3", help="x * y * z")
    for a in "xyz":
        m3.add_argument(a)
    m3.add_argument("--bench", **bench)
    m3.set_defaults(fn=cmd_mul3)

    pw = sub.add_parser("pow", help="x^k")
    pw.add_argument("x")
    pw.add_argument("--k", type=int, required=True)
    pw.add_argument("--algo", choices=("sm", "vzg"), default="vzg")
    pw.add_argument("--r", type=int)
    pw.add_argument("--u", type=int)
    pw.add_argument("--strategy", **strategy)
    pw.add_argument("--trace", action="store_true", help="print the round schedule")
    pw.add_argument("--bench", **bench)
    pw.set_defaults(fn=cmd_pow)

    bt = sub.add_parser("batch", help="products of consecutive element pairs")
    bt.add_argument("elements", nargs="+")
    bt.add_argument("--strategy", choices=linalg.STRATEGIES, default="schoolbook")
    bt.add_argument("--bench", **bench)
    bt.set_defaults(fn=cmd_batch)

    v = sub.add_parser("verify", help="run the property suites")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(fn=cmd_verify)

    i = sub.add_parser("instance", help="print the embedded instance file")
    i.set_defaults(fn=cmd_instance)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
