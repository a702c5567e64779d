"""Operation accounting under the NS, S1 and S2 cost models.

* NS counts bilinear multiplications only.
* S1 counts every multiplication in F_16 (bilinear + scalar).
* S2 counts every multiplication and addition.

``rounds`` holds the lane count of each parallel multiplication round.
Two ledgers combine either in parallel (:meth:`CostLedger.merge`, rounds
summed position by position) or in sequence (:meth:`CostLedger.extend`,
rounds concatenated). Counters are summed in both cases.
"""

from dataclasses import dataclass, field
from itertools import zip_longest

MODELS = ("NS", "S1", "S2")
KINDS = ("bilinear", "scalar_mul", "add")


@dataclass
class CostLedger:
    bilinear: int = 0
    scalar_mul: int = 0
    add: int = 0
    rounds: list = field(default_factory=list)

    def charge(self, kind, count):
        if kind not in KINDS:
            raise ValueError(f"unknown charge kind {kind!r}")
        if count < 0:
            raise ValueError("charge count must be nonnegative")
        setattr(self, kind, getattr(self, kind) + count)
        return self

    def round(self, lanes):
        self.rounds.append(lanes)
        return self

    def merge(self, other):
        """Parallel composition (associative and commutative)."""
        return CostLedger(
            self.bilinear + other.bilinear,
            self.scalar_mul + other.scalar_mul,
            self.add + other.add,
            [a + b for a, b in zip_longest(self.rounds, other.rounds, fillvalue=0)],
        )

    def extend(self, other):
        """Append ``other`` as if it ran after ``self`` (in place)."""
        self.bilinear += other.bilinear
        self.scalar_mul += other.scalar_mul
        self.add += other.add
        self.rounds.extend(other.rounds)
        return self

    def total(self, model):
        if model == "NS":
            return self.bilinear
        if model == "S1":
            return self.bilinear + self.scalar_mul
        if model == "S2":
            return self.bilinear + self.scalar_mul + self.add
        raise ValueError(f"unknown cost model {model!r}")

    @property
    def depth(self):
        return len(self.rounds)

    @property
    def width(self):
        return max(self.rounds, default=0)

    def report(self, model):
        return {"model": model, "total": self.total(model), "depth": self.depth,
                "width": self.width, "bilinear": self.bilinear}


def format_report(ledger, models=MODELS):
    lines = []
    for model in models:
        r = ledger.report(model)
        lines.append("model={model} total={total} depth={depth} width={width} "
                     "bilinear={bilinear}".format(**r))
    return "\n".join(lines)


def charge(ledger, kind, count):
    """Charge ``ledger`` if one is being kept (``None`` means no accounting)."""
    if ledger is not None:
        ledger.charge(kind, count)
