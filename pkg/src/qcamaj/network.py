"""Majority-inverter networks.

A network is a list of nodes in topological order plus one designated
output node.  Node kinds:

    input <var>          primary input by variable index
    const <0|1>          logic constant
    not <child>          inversion
    maj3 <c1> <c2> <c3>  three-input majority
    maj5 <c1> .. <c5>    five-input majority

Children always point at earlier list positions, so cycles cannot be
expressed.  Networks are built through NetworkBuilder, which hash-conses
nodes: structurally identical subterms get one shared node, and the cost
census therefore counts each shared subterm once.

The text serialization is line oriented and stable:

    network <n_vars>
    <id> <kind> <arg> ...
    output <id>

Cost accounting follows the usual majority-logic conventions.  gate_count
is majority gates plus inverters.  levels counts only majority nodes along
the longest output-to-input path; inverters and constants add no depth.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityError, CapacityError
from .truthtable import MAX_VARS, TruthTable

INPUT = "input"
CONST = "const"
NOT = "not"
MAJ3 = "maj3"
MAJ5 = "maj5"

_ARITY = {INPUT: 1, CONST: 1, NOT: 1, MAJ3: 3, MAJ5: 5}


@dataclass(frozen=True)
class Node:
    """One network node.  args holds a variable index, a constant value,
    or child node ids depending on kind."""

    kind: str
    args: tuple[int, ...]


@dataclass(frozen=True)
class Network:
    n_vars: int
    nodes: tuple[Node, ...]
    output: int

    def __post_init__(self):
        if self.n_vars < 1:
            raise ValueError(f"n_vars must be positive, got {self.n_vars}")
        if not 0 <= self.output < len(self.nodes):
            raise ValueError(f"output id {self.output} out of range")
        for i, node in enumerate(self.nodes):
            if node.kind not in _ARITY:
                raise ValueError(f"node {i}: unknown kind {node.kind!r}")
            if len(node.args) != _ARITY[node.kind]:
                raise ValueError(
                    f"node {i}: kind {node.kind} takes {_ARITY[node.kind]} "
                    f"arguments, got {len(node.args)}"
                )
            if node.kind == INPUT:
                if not 0 <= node.args[0] < self.n_vars:
                    raise ValueError(
                        f"node {i}: variable index {node.args[0]} out of "
                        f"range for {self.n_vars} inputs"
                    )
            elif node.kind == CONST:
                if node.args[0] not in (0, 1):
                    raise ValueError(
                        f"node {i}: constant must be 0 or 1, got {node.args[0]}"
                    )
            else:
                for c in node.args:
                    if not 0 <= c < i:
                        raise ValueError(
                            f"node {i}: child {c} does not precede the node"
                        )


class NetworkBuilder:
    """Creates nodes with hash-consing and assembles Networks.

    One builder may serve several outputs; networks built from it share
    the node pool, which is how multi-output designs share subterms.
    """

    def __init__(self, n_vars: int):
        if n_vars < 1:
            raise ValueError(f"n_vars must be positive, got {n_vars}")
        self.n_vars = n_vars
        self._nodes: list[Node] = []
        self._interned: dict[Node, int] = {}

    def _intern(self, kind: str, args: tuple[int, ...]) -> int:
        node = Node(kind, args)
        found = self._interned.get(node)
        if found is not None:
            return found
        for c in args if kind not in (INPUT, CONST) else ():
            if not 0 <= c < len(self._nodes):
                raise ValueError(f"child id {c} is not a known node")
        self._nodes.append(node)
        self._interned[node] = len(self._nodes) - 1
        return len(self._nodes) - 1

    def input(self, var: int) -> int:
        if not 0 <= var < self.n_vars:
            raise ValueError(
                f"variable index {var} out of range for {self.n_vars} inputs"
            )
        return self._intern(INPUT, (var,))

    def const(self, value: int) -> int:
        if value not in (0, 1):
            raise ValueError(f"constant must be 0 or 1, got {value}")
        return self._intern(CONST, (value,))

    def invert(self, child: int) -> int:
        return self._intern(NOT, (child,))

    def maj3(self, a: int, b: int, c: int) -> int:
        return self._intern(MAJ3, (a, b, c))

    def maj5(self, a: int, b: int, c: int, d: int, e: int) -> int:
        return self._intern(MAJ5, (a, b, c, d, e))

    def build(self, output: int) -> Network:
        return Network(self.n_vars, tuple(self._nodes), output)


def evaluate(net: Network, assignment) -> int:
    """Evaluate the output for one assignment (a 0/1 sequence in
    variable order)."""
    if len(assignment) != net.n_vars:
        raise ArityError(
            f"assignment has {len(assignment)} values, expected {net.n_vars}"
        )
    values = [0] * len(net.nodes)
    for i, node in enumerate(net.nodes):
        if node.kind == INPUT:
            v = assignment[node.args[0]]
            if v not in (0, 1):
                raise ValueError(f"assignment values must be 0 or 1, got {v!r}")
            values[i] = v
        elif node.kind == CONST:
            values[i] = node.args[0]
        elif node.kind == NOT:
            values[i] = 1 - values[node.args[0]]
        else:
            total = sum(values[c] for c in node.args)
            values[i] = 1 if 2 * total > len(node.args) else 0
    return values[net.output]


def truth_table(net: Network) -> TruthTable:
    """Exhaustive truth table of the output.  Refuses networks with more
    than eight inputs; 2**n rows stop being a sensible plan past that."""
    if net.n_vars > MAX_VARS:
        raise CapacityError(
            f"truth tables cover at most {MAX_VARS} variables, "
            f"network has {net.n_vars}"
        )
    n = net.n_vars
    bits = []
    for index in range(1 << n):
        assignment = [(index >> (n - 1 - i)) & 1 for i in range(n)]
        bits.append(evaluate(net, assignment))
    return TruthTable(n, tuple(bits))


def reachable(net: Network) -> set[int]:
    """Node ids in the output cone."""
    seen: set[int] = set()
    stack = [net.output]
    while stack:
        i = stack.pop()
        if i in seen:
            continue
        seen.add(i)
        node = net.nodes[i]
        if node.kind not in (INPUT, CONST):
            stack.extend(node.args)
    return seen


@dataclass(frozen=True)
class CostReport:
    maj3_count: int
    maj5_count: int
    inverter_count: int
    gate_count: int
    levels: int


def _census(nodes: tuple[Node, ...], ids: set[int]) -> CostReport:
    n3 = sum(1 for i in ids if nodes[i].kind == MAJ3)
    n5 = sum(1 for i in ids if nodes[i].kind == MAJ5)
    ninv = sum(1 for i in ids if nodes[i].kind == NOT)
    depth = [0] * len(nodes)
    for i in sorted(ids):
        node = nodes[i]
        if node.kind == NOT:
            depth[i] = depth[node.args[0]]
        elif node.kind in (MAJ3, MAJ5):
            depth[i] = 1 + max(depth[c] for c in node.args)
    levels = max((depth[i] for i in ids), default=0)
    return CostReport(n3, n5, ninv, n3 + n5 + ninv, levels)


def cost(net: Network) -> CostReport:
    """Census of the output cone.  Hash-consed shared subterms appear
    once in the node list, so they are counted once here."""
    return _census(net.nodes, reachable(net))


def combined_cost(nets) -> CostReport:
    """Census over the union of several output cones. The networks must
    share one node pool (be built from one builder); levels is the worst
    output depth."""
    nets = list(nets)
    if not nets:
        raise ValueError("need at least one network")
    pool = nets[0].nodes
    ids: set[int] = set()
    for net in nets:
        if net.nodes != pool:
            raise ValueError("networks do not share a node pool")
        ids |= reachable(net)
    return _census(pool, ids)


def order_note(n_vars: int, names=None) -> str:
    """Standard sentence recording the variable ordering in force."""
    names = list(names) if names is not None else default_names(n_vars)
    return (f"variable order {','.join(names)} with {names[0]} as the most "
            f"significant minterm bit")


@dataclass(frozen=True)
class VerifyReport:
    equivalent: bool
    differing_minterms: frozenset[int]
    computed_minterms: frozenset[int]
    variable_order_note: str


def verify(net: Network, spec: TruthTable, names=None) -> VerifyReport:
    """Compare a network against a reference table minterm by minterm."""
    if net.n_vars != spec.n_vars:
        raise ArityError(
            f"network has {net.n_vars} inputs but the reference table "
            f"has {spec.n_vars}"
        )
    got = truth_table(net)
    differing = frozenset(
        i for i, (a, b) in enumerate(zip(got.bits, spec.bits)) if a != b
    )
    return VerifyReport(
        equivalent=not differing,
        differing_minterms=differing,
        computed_minterms=got.minterms(),
        variable_order_note=order_note(net.n_vars, names),
    )


def default_names(n_vars: int) -> list[str]:
    """A, B, C, ... fallback variable names."""
    if n_vars > 26:
        raise CapacityError("default names cover at most 26 variables")
    return [chr(ord("A") + i) for i in range(n_vars)]


def format_expr(net: Network, names=None) -> str:
    """Render the output cone as expression text.

    Shared subterms are written out once per reference, so the text can
    be longer than the network; parsing it back yields an equivalent
    function (and re-shares the duplicates).
    """
    names = list(names) if names is not None else default_names(net.n_vars)
    if len(names) != net.n_vars:
        raise ArityError(
            f"got {len(names)} names for {net.n_vars} variables"
        )

    def render(i: int) -> str:
        node = net.nodes[i]
        if node.kind == INPUT:
            return names[node.args[0]]
        if node.kind == CONST:
            return str(node.args[0])
        if node.kind == NOT:
            return render(node.args[0]) + "'"
        label = "M" if node.kind == MAJ3 else "M5"
        return label + "(" + ",".join(render(c) for c in node.args) + ")"

    return render(net.output)


def to_text(net: Network) -> str:
    """Serialize in the line format documented in the module docstring."""
    lines = [f"network {net.n_vars}"]
    for i, node in enumerate(net.nodes):
        lines.append(f"{i} {node.kind} " + " ".join(str(a) for a in node.args))
    lines.append(f"output {net.output}")
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Network:
    """Parse the to_text format back into a Network."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or not lines[0].startswith("network "):
        raise ValueError("serialized network must start with 'network <n>'")
    try:
        n_vars = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError(f"bad header line {lines[0]!r}") from None
    if not lines[-1].startswith("output "):
        raise ValueError("serialized network must end with 'output <id>'")
    try:
        output = int(lines[-1].split()[1])
    except (IndexError, ValueError):
        raise ValueError(f"bad output line {lines[-1]!r}") from None
    nodes = []
    for expected, line in enumerate(lines[1:-1]):
        parts = line.split()
        if len(parts) < 3 or parts[0] != str(expected):
            raise ValueError(f"bad node line {line!r}")
        try:
            args = tuple(int(p) for p in parts[2:])
        except ValueError:
            raise ValueError(f"bad node line {line!r}") from None
        nodes.append(Node(parts[1], args))
    return Network(n_vars, tuple(nodes), output)
