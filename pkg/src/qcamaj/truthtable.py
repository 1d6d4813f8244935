"""Truth tables for Boolean functions of up to eight variables.

A function is stored as a flat bit vector indexed by minterm number.
Variable 0 supplies the most significant bit of the minterm index, so for
three variables named A, B, C the index of an assignment is 4A + 2B + C.
Every module in this package follows that convention, and verification
reports repeat it so results stay attributable to an ordering.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArityError, MintermRangeError, ParseError

MAX_VARS = 8


@dataclass(frozen=True)
class TruthTable:
    """Bit vector of a Boolean function, one bit per minterm.

    Two tables are equal exactly when their variable counts and bit
    vectors are equal, so structural equality is semantic equality.
    """

    n_vars: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n_vars <= MAX_VARS:
            raise ValueError(
                f"n_vars must be between 1 and {MAX_VARS}, got {self.n_vars}"
            )
        if len(self.bits) != 1 << self.n_vars:
            raise ValueError(
                f"expected {1 << self.n_vars} bits for {self.n_vars} "
                f"variables, got {len(self.bits)}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("truth table bits must be 0 or 1")

    @classmethod
    def from_minterms(cls, n_vars: int, minterms: Iterable[int]) -> "TruthTable":
        """Build a table that is 1 exactly on the given minterm indices.

        Raises MintermRangeError naming the first offending index if any
        minterm falls outside 0 .. 2**n_vars - 1.
        """
        if not 1 <= n_vars <= MAX_VARS:
            raise ValueError(
                f"n_vars must be between 1 and {MAX_VARS}, got {n_vars}"
            )
        size = 1 << n_vars
        bits = [0] * size
        for m in minterms:
            if not 0 <= m < size:
                raise MintermRangeError(m, n_vars)
            bits[m] = 1
        return cls(n_vars, tuple(bits))

    @classmethod
    def constant(cls, n_vars: int, value: int) -> "TruthTable":
        """All-zero or all-one table."""
        if value not in (0, 1):
            raise ValueError(f"constant value must be 0 or 1, got {value}")
        return cls(n_vars, (value,) * (1 << n_vars))

    def eval(self, assignment: Sequence[int]) -> int:
        """Look up the function value for one variable assignment.

        The assignment lists variable values in variable order; its length
        must equal n_vars.
        """
        if len(assignment) != self.n_vars:
            raise ArityError(
                f"assignment has {len(assignment)} values, "
                f"expected {self.n_vars}"
            )
        index = 0
        for v in assignment:
            if v not in (0, 1):
                raise ValueError(f"assignment values must be 0 or 1, got {v!r}")
            index = (index << 1) | v
        return self.bits[index]

    def minterms(self) -> frozenset[int]:
        """Indices where the function is 1.  Inverse of from_minterms."""
        return frozenset(i for i, b in enumerate(self.bits) if b)


_SPEC_RE = re.compile(r"sum\((\d+(,\d+)*)?\)", re.IGNORECASE)


def parse_minterm_spec(text: str) -> frozenset[int]:
    """Parse minterm-set text of the form ``sum(3,4,5,6,7)``.

    The keyword is case-insensitive and whitespace is ignored anywhere.
    ``sum()`` denotes the empty set.  Raises ParseError on anything else.
    """
    stripped = "".join(text.split())
    m = _SPEC_RE.fullmatch(stripped)
    if m is None:
        # point at the first character that breaks the expected shape
        probe = _SPEC_RE.match(stripped)
        position = probe.end() if probe else 0
        raise ParseError(f"bad minterm set {text!r}, expected sum(i,j,...)",
                         position)
    if m.group(1) is None:
        return frozenset()
    return frozenset(int(part) for part in m.group(1).split(","))


def format_minterms(minterms: Iterable[int]) -> str:
    """Render a minterm set in the ``sum(...)`` text form, ascending."""
    return "sum(" + ",".join(str(m) for m in sorted(set(minterms))) + ")"
