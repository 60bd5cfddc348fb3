"""
抽出モジュール。

抽出等長写像 V_A / V_B、regSwap、ジャンク状態の抽出、定理の不等式チェックを提供する。
"""
from extraction.isometry import (
    control,
    embed,
    unitary_ua,
    unitary_ub,
    build_va,
    build_vb,
    build_vb_symmetrized,
    reg_swap,
    reg_swap_composed,
)
from extraction.verify import (
    ExtractionResult,
    BoundRecord,
    BoundReport,
    anticomm_bound,
    intertwining_bound,
    state_bound,
    second_operator_bound,
    extract,
    verify_theorem,
)

__all__ = [
    # isometry
    "control", "embed", "unitary_ua", "unitary_ub", "build_va", "build_vb",
    "build_vb_symmetrized", "reg_swap", "reg_swap_composed",
    # verify
    "ExtractionResult", "BoundRecord", "BoundReport", "anticomm_bound",
    "intertwining_bound", "state_bound", "second_operator_bound", "extract", "verify_theorem",
]
