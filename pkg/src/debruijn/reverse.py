"""Recovering feedback functions from de Bruijn sequences.

For any de Bruijn sequence S of order n and any window b of S there is
a feedback function that makes the greedy generator reproduce S from b:
rotate S to start at b, let the root window b_0..b_{n-2} map to
b_{n-1}, and map every other (n-1)-string to the complement of the bit
following its first occurrence. The lifted function f(x0..x_{n-1}) =
g(x1..x_{n-1}) never touches x0.

``enumerate_pairs`` applies this to every window of every de Bruijn
sequence of a small order and groups the windows that share a function.
"""

import json
from dataclasses import dataclass

from .bitcore import (
    PeriodicSequence,
    State,
    canonical_rotation,
    cyclic_windows,
    is_de_bruijn,
)
from .boolfn import AnfFunction, format_anf, from_truth_table, shift_embed
from .errors import BadInitialStateError, NotDeBruijnError, OrderTooLargeError

__all__ = [
    "derive_feedback",
    "all_debruijn_sequences",
    "PairGroup",
    "SequenceTable",
    "enumerate_pairs",
    "pairs_to_csv",
]

# Exhaustive sequence enumeration stays desk-scale only this far
# (2, 16, 2048 cycles for orders 3, 4, 5).
MAX_ENUM_ORDER = 5


def derive_feedback(S: PeriodicSequence, b: State) -> AnfFunction:
    """The feedback function that makes the greedy run from ``b`` print S."""
    n = b.order
    if not is_de_bruijn(S, n):
        raise NotDeBruijnError(f"sequence is not de Bruijn of order {n}")
    positions = {w.value: i for i, w in enumerate(cyclic_windows(S, n))}
    if b.value not in positions:
        raise BadInitialStateError(f"{b} is not a window of the sequence")
    start = positions[b.value]
    bits = S.bits[start:] + S.bits[:start]

    k = n - 1
    N = len(bits)
    table: list[int | None] = [None] * (1 << k)
    window = 0
    for j in range(k):
        window = (window << 1) | bits[j]
    table[window] = bits[k]  # root rule: the window of b maps to b's last bit
    mask = (1 << k) - 1
    for i in range(1, N):
        window = ((window << 1) & mask) | bits[(i + k - 1) % N]
        if table[window] is None:
            table[window] = 1 - bits[(i + k) % N]
    g = from_truth_table([v for v in table])  # total: every (n-1)-string occurs
    return shift_embed(g, n)


_SEQUENCE_CACHE: dict[int, tuple[PeriodicSequence, ...]] = {}


def all_debruijn_sequences(n: int) -> tuple[PeriodicSequence, ...]:
    """Every de Bruijn cycle of order n, one rotation each, starting 0^n.

    Depth-first search over the shift graph; memoized per order. There
    are 2**(2**(n-1) - n) of them.
    """
    if not 2 <= n <= MAX_ENUM_ORDER:
        raise OrderTooLargeError(
            f"exhaustive enumeration supports 2 <= n <= {MAX_ENUM_ORDER}, got {n}"
        )
    if n in _SEQUENCE_CACHE:
        return _SEQUENCE_CACHE[n]
    size = 1 << n
    mask = size - 1
    results: list[PeriodicSequence] = []
    visited = bytearray(size)
    visited[0] = 1
    path = [0]

    def dfs(cur: int):
        if len(path) == size:
            # the cycle closes iff appending 0 to the last state gives 0^n
            if ((cur << 1) & mask) == 0:
                results.append(
                    PeriodicSequence(tuple(v >> (n - 1) for v in path))
                )
            return
        base = (cur << 1) & mask
        for y in (0, 1):
            nxt = base | y
            if not visited[nxt]:
                visited[nxt] = 1
                path.append(nxt)
                dfs(nxt)
                path.pop()
                visited[nxt] = 0

    dfs(0)
    out = tuple(results)
    _SEQUENCE_CACHE[n] = out
    return out


@dataclass
class PairGroup:
    """Initial states sharing one derived feedback function."""

    function: AnfFunction
    initials: tuple[State, ...]


@dataclass
class SequenceTable:
    """All (function, initial-state) groups for one de Bruijn sequence."""

    sequence: PeriodicSequence
    groups: list[PairGroup]


def enumerate_pairs(n: int) -> list[SequenceTable]:
    """Derive the feedback for every (sequence, window) pair of order n."""
    tables = []
    for seq in all_debruijn_sequences(n):
        canonical = canonical_rotation(seq)
        by_fn: dict[AnfFunction, list[State]] = {}
        for b in cyclic_windows(canonical, n):
            f = derive_feedback(canonical, b)
            by_fn.setdefault(f, []).append(b)
        groups = [
            PairGroup(f, tuple(sorted(bs))) for f, bs in by_fn.items()
        ]
        groups.sort(key=lambda gr: format_anf(gr.function))
        tables.append(SequenceTable(canonical, groups))
    tables.sort(key=lambda tb: str(tb.sequence))
    return tables


def pairs_to_csv(tables: list[SequenceTable]) -> list[list[str]]:
    rows = [["sequence", "function", "initial_states"]]
    for tb in tables:
        for gr in tb.groups:
            rows.append(
                [
                    str(tb.sequence),
                    format_anf(gr.function),
                    " ".join(str(b) for b in gr.initials),
                ]
            )
    return rows


def pairs_to_json(tables: list[SequenceTable]) -> str:
    payload = [
        {
            "sequence": str(tb.sequence),
            "groups": [
                {
                    "function": format_anf(gr.function),
                    "initials": [str(b) for b in gr.initials],
                }
                for gr in tb.groups
            ],
        }
        for tb in tables
    ]
    return json.dumps(payload, indent=2)
