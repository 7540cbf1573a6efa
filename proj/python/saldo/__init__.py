"""Disk-stack SAT machine simulator.

Thin python surface over the C++ core: formula parsing (word and DIMACS
forms), the explicit truth-mask algebra, the fixed and self-assembling disk
machines with their cost ledgers, and a brute-force oracle.
"""

from saldo._core import (
    CnfFormula,
    brute_force,
    cnf_mask,
    emit_dimacs,
    encode_word,
    mask_models,
    parse,
    run_machine,
    var_mask,
)

__all__ = [
    "CnfFormula",
    "brute_force",
    "cnf_mask",
    "emit_dimacs",
    "encode_word",
    "mask_models",
    "parse",
    "run_machine",
    "var_mask",
]
