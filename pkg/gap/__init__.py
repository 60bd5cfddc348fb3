"""
核の規約による反例モジュール。
"""
from gap.counterexample import (
    CounterexampleReport,
    modulus,
    sign_with_kernel_convention,
    mckague_bob_operators,
    reproduce_counterexample,
)

__all__ = [
    "CounterexampleReport", "modulus", "sign_with_kernel_convention",
    "mckague_bob_operators", "reproduce_counterexample",
]
