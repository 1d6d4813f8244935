"""Majority-logic synthesis, verification, and cell-level simulation for
quantum-dot cellular automata."""

__version__ = "0.1.0"

from .adders import (AdderDesign, AdderRow, AuditRow, adder_classic,
                     adder_classic_simplified, adder_single_maj5,
                     adder_three_gate, audit_entries, compare_adders)
from .cellsim import (Cell, CellGrid, ChargeState4, ChargeState8, RelaxResult,
                      build_inverter, build_maj3, build_maj5, build_wire,
                      read_logic, relax)
from .errors import (ArityError, CapacityError, ChargeError, ConvergenceError,
                     MintermRangeError, ParseError, UndecidedError,
                     UnknownVariableError)
from .expr import parse_expr
from .network import (CostReport, Network, NetworkBuilder, VerifyReport,
                      combined_cost, cost, evaluate, format_expr, from_text,
                      to_text, truth_table, verify)
from .synth import (AtlasEntry, SearchBudget, atlas_to_text, synthesize,
                    synthesize_all_3var)
from .truthtable import (TruthTable, format_minterms, parse_minterm_spec)

__all__ = [
    "AdderDesign", "AdderRow", "ArityError", "AtlasEntry", "AuditRow",
    "CapacityError",
    "Cell", "CellGrid", "ChargeError", "ChargeState4", "ChargeState8",
    "ConvergenceError", "CostReport", "MintermRangeError", "Network",
    "NetworkBuilder", "ParseError", "RelaxResult", "SearchBudget",
    "TruthTable", "UndecidedError", "UnknownVariableError",
    "VerifyReport", "adder_classic", "adder_classic_simplified",
    "adder_single_maj5", "adder_three_gate", "atlas_to_text",
    "audit_entries", "build_inverter",
    "build_maj3", "build_maj5", "build_wire", "combined_cost", "compare_adders", "cost",
    "evaluate", "format_expr", "format_minterms", "from_text", "parse_expr",
    "parse_minterm_spec", "read_logic", "relax", "synthesize",
    "synthesize_all_3var", "to_text", "truth_table",
    "verify",
]
