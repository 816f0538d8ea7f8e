from .blocks import BlockPartition, are_twins, compute_blocks
from .kernelize import (
    KernelLift,
    KernelResult,
    kernel_encoding_bits,
    kernelize,
    lift_solution,
)
from .rules import Verdict, apply_rule1, apply_rule2, preprocess
