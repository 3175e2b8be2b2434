"""The state graph of a feedback shift register and its analysis.

Every n-bit state has exactly one outgoing edge, to the register step
that appends the feedback bit. In-degrees are 0, 1 or 2; a state with
in-degree 0 is a leaf. The greedy generator is guaranteed to produce a
full de Bruijn cycle when (a) every non-leaf state has exactly two
children and (b) every state's forward walk reaches the chosen initial
state. ``check_gpo_conditions`` tests exactly those two conditions.
"""

import json
from collections import deque
from dataclasses import dataclass, field

from .bitcore import MAX_ORDER, State
from .boolfn import AnfFunction
from .errors import ArityMismatchError, OrderTooLargeError

__all__ = [
    "StateGraph",
    "ConditionReport",
    "CycleForest",
    "build_graph",
    "successor",
    "children",
    "is_leaf",
    "check_gpo_conditions",
    "decompose",
    "to_dot",
    "summary",
]


@dataclass(frozen=True)
class StateGraph:
    """Successor map plus reverse adjacency over all 2**order states."""

    order: int
    successors: tuple[int, ...]
    parent_lists: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return 1 << self.order


@dataclass
class ConditionReport:
    """Outcome of the two sufficiency checks, with example violations."""

    two_children_ok: bool
    unique_path_ok: bool
    branching_witnesses: tuple[State, ...] = ()
    unreachable_witnesses: tuple[State, ...] = ()

    @property
    def ok(self) -> bool:
        return self.two_children_ok and self.unique_path_ok

    def to_dict(self) -> dict:
        return {
            "two_children_ok": self.two_children_ok,
            "unique_path_ok": self.unique_path_ok,
            "branching_witnesses": [str(s) for s in self.branching_witnesses],
            "unreachable_witnesses": [str(s) for s in self.unreachable_witnesses],
        }


@dataclass
class CycleForest:
    """Cycles of the functional graph plus the root each tree state drains to."""

    order: int
    cycles: tuple[tuple[State, ...], ...]
    tree_of: dict[State, State] = field(default_factory=dict)


def build_graph(f: AnfFunction) -> StateGraph:
    """Materialize the full successor/parents structure for ``f``."""
    n = f.arity
    if n < 2:
        raise ArityMismatchError(f"state graphs need arity >= 2, got {n}")
    if n > MAX_ORDER:
        raise OrderTooLargeError(f"arity {n} exceeds cap {MAX_ORDER}")
    size = 1 << n
    mask = size - 1
    masks = f.masks
    succ = []
    parents: list[list[int]] = [[] for _ in range(size)]
    for v in range(size):
        y = 0
        for m in masks:
            if v & m == m:
                y ^= 1
        nxt = ((v << 1) & mask) | y
        succ.append(nxt)
        parents[nxt].append(v)
    return StateGraph(n, tuple(succ), tuple(tuple(p) for p in parents))


def _check_state(G: StateGraph, v: State) -> None:
    if v.order != G.order:
        raise ArityMismatchError(
            f"state order {v.order} does not match graph order {G.order}"
        )


def successor(G: StateGraph, v: State) -> State:
    _check_state(G, v)
    return State(G.order, G.successors[v.value])


def children(G: StateGraph, v: State) -> set[State]:
    """States whose edge enters ``v`` (its register-step preimages)."""
    _check_state(G, v)
    return {State(G.order, p) for p in G.parent_lists[v.value]}


def is_leaf(G: StateGraph, v: State) -> bool:
    _check_state(G, v)
    return not G.parent_lists[v.value]


def check_gpo_conditions(
    G: StateGraph, b: State, max_witnesses: int | None = 5
) -> ConditionReport:
    """Test the two greedy-sufficiency conditions with ``b`` as the target.

    Condition one: every non-leaf state has exactly two children.
    Condition two: the forward walk from every state reaches ``b``
    (checked by reverse BFS over the parents map, which is equivalent
    because out-degrees are all 1). Witness lists are capped at
    ``max_witnesses`` states each; pass None for the full lists.
    """
    _check_state(G, b)
    size = G.size
    branching = [v for v in range(size) if len(G.parent_lists[v]) == 1]

    reached = bytearray(size)
    reached[b.value] = 1
    queue = deque([b.value])
    count = 1
    while queue:
        v = queue.popleft()
        for p in G.parent_lists[v]:
            if not reached[p]:
                reached[p] = 1
                count += 1
                queue.append(p)
    unreachable = [] if count == size else [v for v in range(size) if not reached[v]]

    cap = len(branching) if max_witnesses is None else max_witnesses
    return ConditionReport(
        two_children_ok=not branching,
        unique_path_ok=not unreachable,
        branching_witnesses=tuple(State(G.order, v) for v in branching[:cap]),
        unreachable_witnesses=tuple(
            State(G.order, v)
            for v in (unreachable if max_witnesses is None else unreachable[:cap])
        ),
    )


def decompose(G: StateGraph) -> CycleForest:
    """Split the graph into its cycles and the trees hanging off them.

    Every state's forward walk ends on some cycle; each off-cycle state
    is assigned the first cycle vertex its walk reaches. States are
    scanned in ascending integer order, so the output is deterministic;
    each cycle is rotated to start at its smallest vertex.
    """
    size = G.size
    succ = G.successors
    color = bytearray(size)  # 0 unseen, 1 on current path, 2 classified
    root_of = [-1] * size
    on_cycle = bytearray(size)
    raw_cycles: list[list[int]] = []

    for start in range(size):
        if color[start]:
            continue
        path = []
        v = start
        while color[v] == 0:
            color[v] = 1
            path.append(v)
            v = succ[v]
        if color[v] == 1:
            # closed a new cycle inside the current path
            idx = len(path) - 1
            while path[idx] != v:
                idx -= 1
            cyc = path[idx:]
            for u in cyc:
                on_cycle[u] = 1
                root_of[u] = u
            raw_cycles.append(cyc)
        for u in reversed(path):
            if not on_cycle[u]:
                root_of[u] = root_of[succ[u]]
            color[u] = 2

    cycles = []
    for cyc in sorted(raw_cycles, key=min):
        k = cyc.index(min(cyc))
        rotated = cyc[k:] + cyc[:k]
        cycles.append(tuple(State(G.order, v) for v in rotated))
    tree_of = {
        State(G.order, v): State(G.order, root_of[v])
        for v in range(size)
        if not on_cycle[v]
    }
    return CycleForest(G.order, tuple(cycles), tree_of)


def to_dot(G: StateGraph, highlight: set[State] | None = None) -> str:
    """Render the graph as DOT, one node per state labeled by its bits."""
    marked = {s.value for s in highlight} if highlight else set()
    lines = ["digraph states {"]
    for v in range(G.size):
        name = format(v, f"0{G.order}b")
        attrs = ' [style=filled, fillcolor=gray]' if v in marked else ""
        lines.append(f'    "{name}"{attrs};')
    for v in range(G.size):
        src = format(v, f"0{G.order}b")
        dst = format(G.successors[v], f"0{G.order}b")
        lines.append(f'    "{src}" -> "{dst}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def summary(G: StateGraph, b: State | None = None) -> dict:
    """JSON-friendly digest: sizes, leaf count, cycle lengths, conditions."""
    forest = decompose(G)
    leaves = sum(1 for plist in G.parent_lists if not plist)
    out = {
        "order": G.order,
        "vertices": G.size,
        "leaves": leaves,
        "cycle_lengths": [len(c) for c in forest.cycles],
    }
    if b is not None:
        out["conditions"] = check_gpo_conditions(G, b).to_dict()
    return out


def summary_json(G: StateGraph, b: State | None = None) -> str:
    return json.dumps(summary(G, b), indent=2)
