"""The greedy complement-preferring generator.

Starting from an initial state b, each step prints the oldest register
bit, computes the feedback bit y for the current state, and shifts in
the complement of y unless the resulting state has already appeared;
in that case it shifts in y itself (the fallback branch). The run ends
when the register returns to b. When the feedback function's state
graph satisfies the two conditions in ``fsrgraph.check_gpo_conditions``
the printed bits form a de Bruijn cycle.

Prefer-one is the special case f = 0 started at the all-zero state;
prefer-zero is f = 1 started at the all-one state.
"""

from dataclasses import dataclass

from .bitcore import PeriodicSequence, State
from .boolfn import AnfFunction
from .errors import ArityMismatchError, BadParamsError

__all__ = ["GpoRun", "run_gpo", "prefer_one", "prefer_zero", "format_trace"]


@dataclass(frozen=True)
class GpoRun:
    """One generator run: printed bits, visited states, branch record.

    ``trace`` lists every visited state in order, ending with the
    second visit of the initial state when the run completed. Bit i of
    ``sequence`` is the first bit of ``trace[i]``; ``fallback_flags[i]``
    is True when the step out of ``trace[i]`` took the fallback branch.
    """

    sequence: PeriodicSequence
    trace: tuple[State, ...]
    fallback_flags: tuple[bool, ...]
    completed: bool


def _execute(
    f: AnfFunction,
    start: State,
    cap: int,
    special: tuple[int, int] | None = None,
) -> GpoRun:
    """Shared engine; ``special`` forces one state's next state (no branch)."""
    n = f.arity
    size = 1 << n
    mask = size - 1
    top = n - 1
    masks = f.masks
    b = start.value
    visited = bytearray(size)
    visited[b] = 1
    trigger, target = special if special is not None else (-1, -1)

    cur = b
    trace_vals = [b]
    flags = []
    out_bits = []
    completed = False
    for _ in range(cap):
        out_bits.append(cur >> top)
        if cur == trigger:
            nxt = target
            flags.append(False)
        else:
            y = 0
            for m in masks:
                if cur & m == m:
                    y ^= 1
            preferred = ((cur << 1) & mask) | (y ^ 1)
            if visited[preferred]:
                nxt = preferred ^ 1
                flags.append(True)
            else:
                nxt = preferred
                flags.append(False)
        visited[nxt] = 1
        trace_vals.append(nxt)
        if nxt == b:
            completed = True
            break
        cur = nxt

    return GpoRun(
        sequence=PeriodicSequence(tuple(out_bits)),
        trace=tuple(State(n, v) for v in trace_vals),
        fallback_flags=tuple(flags),
        completed=completed,
    )


def run_gpo(f: AnfFunction, b: State, cap: int | None = None) -> GpoRun:
    """Run the generator from ``b`` for at most ``cap`` steps.

    ``cap`` defaults to 2**(n+1); a complete cycle needs exactly 2**n
    steps, so hitting the cap means the run can never return to ``b``
    (for instance because ``b`` is a leaf). In that case the returned
    run has ``completed=False`` and carries the partial trace; whether
    that is an error is the caller's call. A completed run may still be
    shorter than 2**n steps when the conditions fail, so check
    ``is_de_bruijn`` when a full cycle is required.
    """
    if f.arity != b.order:
        raise ArityMismatchError(
            f"function arity {f.arity} does not match state order {b.order}"
        )
    size = 1 << b.order
    if cap is None:
        cap = 2 * size
    if cap < size:
        raise BadParamsError(f"cap {cap} is below the cycle length {size}")
    return _execute(f, b, cap)


def prefer_one(n: int) -> GpoRun:
    """Greedy prefer-one: constant-0 feedback from the all-zero state."""
    return run_gpo(AnfFunction.constant(0, n), State.zeros(n))


def prefer_zero(n: int) -> GpoRun:
    """Greedy prefer-zero: constant-1 feedback from the all-one state."""
    return run_gpo(AnfFunction.constant(1, n), State.ones(n))


def format_trace(run: GpoRun) -> str:
    """One state per line; states entered through the fallback get ``*``."""
    lines = [str(run.trace[0])]
    for i, state in enumerate(run.trace[1:]):
        mark = "*" if run.fallback_flags[i] else ""
        lines.append(f"{state}{mark}")
    return "\n".join(lines) + "\n"
