"""Chudnovsky-style interpolation arithmetic in F_{16^13} over F_16, with
normal-basis exponentiation and NS/S1/S2 operation accounting."""

from .core import (batch_mul, ccma_mul, ccma_mul3, embed, frobenius, hadamard, parse_element,
                   project, render_element)
from .cost import CostLedger
from .exponent import (ScheduleTrace, default_params, pow_square_multiply, pow_vzg, recode,
                       simulate_trace, vzg_precompute)
from .instance import (CcmaInstance, block_decompose, load_instance, default_instance, setup,
                       verify_instance)
from .oracle import OracleField

__all__ = [
    "CcmaInstance", "CostLedger", "OracleField", "ScheduleTrace", "batch_mul", "block_decompose",
    "ccma_mul", "ccma_mul3", "default_params", "embed", "frobenius", "hadamard", "load_instance",
    "default_instance", "parse_element", "pow_square_multiply", "pow_vzg", "project", "recode",
    "render_element", "setup", "simulate_trace", "verify_instance", "vzg_precompute",
]
