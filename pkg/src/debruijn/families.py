"""The family catalog F1-F6: generators, counts and counting formulas.

Families F1-F3 run the plain greedy generator with feedbacks whose
graphs satisfy the sufficiency conditions; the extra catalog rows do
the same from the all-zero state. F4-F6 wrap the modified variants.
Distinctness is always counted up to rotation.

For reference: the t = n-1 member of F2 coincides with the output of
the classical same-preferring rule, and F4's ends recover prefer-one
(t = 1) and the opposite-preferring rule (t = n-1).
"""

import json
from dataclasses import dataclass, field

from .bitcore import (
    PeriodicSequence,
    State,
    canonical_rotation,
    cyclic_windows,
    is_de_bruijn,
    shift_append,
)
from .boolfn import AnfFunction, evaluate, from_truth_table, shift_embed
from .errors import (
    BadOrderError,
    BadParamsError,
    BadTError,
    NotDeBruijnError,
    NotDeBruijnSeedError,
)
from .gpo import run_gpo
from .variants import (
    enumerate_primitive,
    m_sequence,
    prefer_no,
    prim_poly_complement_run,
    prim_poly_run,
)

__all__ = [
    "FamilyEntry",
    "FamilyResult",
    "fsr_cycle",
    "debruijn_feedback",
    "f1_generate",
    "f1_count",
    "f2_generate",
    "f3_generate",
    "extra_function",
    "f4_generate",
    "f5_enumerate",
    "f6_enumerate",
    "f5_count_formula",
    "euler_totient",
]


@dataclass
class FamilyEntry:
    """One generated sequence with its initial state and per-entry params."""

    initial: State
    sequence: PeriodicSequence
    params: dict = field(default_factory=dict)

    @property
    def canonical(self) -> PeriodicSequence:
        return canonical_rotation(self.sequence)


@dataclass
class FamilyResult:
    """All sequences of one family instance, counted up to rotation."""

    family: str
    params: dict
    entries: list[FamilyEntry]
    distinct_count: int

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": {k: str(v) for k, v in self.params.items()},
            "distinct_count": self.distinct_count,
            "entries": [
                {
                    "params": {k: str(v) for k, v in e.params.items()},
                    "initial": str(e.initial),
                    "sequence": str(e.sequence),
                    "canonical": str(e.canonical),
                }
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def csv_rows(self) -> list[list[str]]:
        header = ["family", "params", "initial", "sequence", "canonical"]
        rows = [header]
        for e in self.entries:
            merged = {**self.params, **e.params}
            params = ";".join(f"{k}={v}" for k, v in merged.items())
            rows.append(
                [self.family, params, str(e.initial), str(e.sequence), str(e.canonical)]
            )
        return rows


def _finish(family: str, params: dict, entries: list[FamilyEntry], n: int) -> FamilyResult:
    for e in entries:
        if not is_de_bruijn(e.sequence, n):
            raise NotDeBruijnError(
                f"{family} entry from {e.initial} is not de Bruijn of order {n}"
            )
    distinct = len({str(e.canonical) for e in entries})
    return FamilyResult(family, params, entries, distinct)


def fsr_cycle(h: AnfFunction) -> PeriodicSequence:
    """Plain register output of ``h`` from the all-zero state, one cycle.

    Raises NotDeBruijnSeedError unless the orbit is the full de Bruijn
    cycle of order ``h.arity``.
    """
    m = h.arity
    s = State.zeros(m)
    bits = []
    for _ in range(1 << m):
        bits.append(s.bits[0])
        s = shift_append(s, evaluate(h, s))
    seq = PeriodicSequence(tuple(bits))
    if s != State.zeros(m) or not is_de_bruijn(seq, m):
        raise NotDeBruijnSeedError(
            f"feedback {h} does not generate a de Bruijn cycle of order {m}"
        )
    return seq


def debruijn_feedback(seq: PeriodicSequence, n: int) -> AnfFunction:
    """The unique feedback whose register reproduces the de Bruijn cycle."""
    if not is_de_bruijn(seq, n):
        raise NotDeBruijnError(f"sequence is not de Bruijn of order {n}")
    table = [0] * (1 << n)
    N = seq.period
    bits = seq.bits
    value = 0
    for j in range(n):
        value = (value << 1) | bits[j]
    mask = (1 << n) - 1
    for i in range(N):
        table[value] = bits[(i + n) % N]
        value = ((value << 1) & mask) | bits[(i + n) % N]
    return from_truth_table(table)


def f1_generate(h: AnfFunction, m: int, n: int) -> FamilyResult:
    """Greedy runs of the order-n embedding of a de Bruijn seed of order m.

    The initial states are the 2**m cyclic n-windows of the seed's own
    cycle, enumerated from its all-zero window.
    """
    if h.arity != m:
        raise BadParamsError(f"seed arity {h.arity} does not match m={m}")
    if not (2 <= m < n):
        raise BadOrderError(f"need n > m >= 2, got n={n}, m={m}")
    seed_cycle = fsr_cycle(h)  # raises NotDeBruijnSeedError on a bad seed
    f = shift_embed(h, n)
    entries = []
    for b in cyclic_windows(seed_cycle, n):
        run = run_gpo(f, b)
        entries.append(FamilyEntry(b, run.sequence))
    return _finish("F1", {"m": m, "n": n, "h": str(h)}, entries, n)


def f1_count(m: int, n: int) -> int:
    """Closed form for the number of distinct order-n sequences."""
    if not (2 <= m < n):
        raise BadOrderError(f"need n > m >= 2, got n={n}, m={m}")
    return (1 << m) - 2 if n == m + 1 else 1 << m


def f2_generate(n: int, t: int) -> FamilyResult:
    """Feedback 1 + x_t*...*x_{n-1}, started on the cycle (0 1^{n-t})."""
    if not 0 < t < n:
        raise BadTError(f"t must satisfy 0 < t < {n}, got {t}")
    f = AnfFunction(n, frozenset([frozenset(), frozenset(range(t, n))]))
    base = PeriodicSequence((0,) + (1,) * (n - t))
    entries = []
    for b in cyclic_windows(base, n):
        run = run_gpo(f, b)
        entries.append(FamilyEntry(b, run.sequence))
    return _finish("F2", {"n": n, "t": t}, entries, n)


def f3_generate(n: int) -> FamilyResult:
    """The fixed three-variable feedback, started on the cycle (1110)."""
    if n < 4:
        raise BadOrderError(f"order must be >= 4, got {n}")
    f = AnfFunction(
        n,
        frozenset(
            [
                frozenset(),
                frozenset([n - 3]),
                frozenset([n - 1]),
                frozenset([n - 3, n - 2]),
                frozenset([n - 2, n - 1]),
                frozenset([n - 3, n - 2, n - 1]),
            ]
        ),
    )
    entries = []
    for b in cyclic_windows(PeriodicSequence((1, 1, 1, 0)), n):
        run = run_gpo(f, b)
        entries.append(FamilyEntry(b, run.sequence))
    return _finish("F3", {"n": n}, entries, n)


def extra_function(
    kind: int, n: int, t: int | None = None, k: int | None = None, l: int | None = None
) -> AnfFunction:
    """One of the four extra catalog feedbacks (paired with b = 0^n).

    1: x_{n-1} + x_t*x_{n-1}           for 0 < t < n-1, n >= 3
    2: x_{n-1} + x_1*...*x_{n-1}       for n >= 3
    3: x_t*x_{t+1} + x_{t+1}*x_{n-1}   for 0 < t < n-2, n >= 4
    4: x_k*x_{n-1} + x_l*x_{n-1}       for 0 < k < l < n-1, n >= 4
    """
    if kind == 1:
        if n < 3 or t is None or not 0 < t < n - 1:
            raise BadParamsError(f"kind 1 needs 0 < t < n-1 and n >= 3, got n={n}, t={t}")
        monos = [frozenset([n - 1]), frozenset([t, n - 1])]
    elif kind == 2:
        if n < 3:
            raise BadParamsError(f"kind 2 needs n >= 3, got n={n}")
        monos = [frozenset([n - 1]), frozenset(range(1, n))]
    elif kind == 3:
        if n < 4 or t is None or not 0 < t < n - 2:
            raise BadParamsError(f"kind 3 needs 0 < t < n-2 and n >= 4, got n={n}, t={t}")
        monos = [frozenset([t, t + 1]), frozenset([t + 1, n - 1])]
    elif kind == 4:
        if n < 4 or k is None or l is None or not 0 < k < l < n - 1:
            raise BadParamsError(
                f"kind 4 needs 0 < k < l < n-1 and n >= 4, got n={n}, k={k}, l={l}"
            )
        monos = [frozenset([k, n - 1]), frozenset([l, n - 1])]
    else:
        raise BadParamsError(f"kind must be 1..4, got {kind}")
    return AnfFunction(n, frozenset(monos))


def f4_generate(n: int) -> FamilyResult:
    """All prefer-no runs for t = 1..n-1."""
    if n < 2:
        raise BadOrderError(f"order must be >= 2, got {n}")
    entries = []
    for t in range(1, n):
        run = prefer_no(n, t)
        entries.append(FamilyEntry(State.zeros(n), run.sequence, {"t": t}))
    return _finish("F4", {"n": n}, entries, n)


def f5_enumerate(n: int) -> FamilyResult:
    """All prim-poly runs over degrees 1..n-1 and all valid initial states."""
    if n < 3:
        raise BadOrderError(f"order must be >= 3, got {n}")
    entries = []
    for m in range(1, n):
        for g in enumerate_primitive(m):
            for b in cyclic_windows(m_sequence(g), n):
                run = prim_poly_run(n, g, b)
                entries.append(FamilyEntry(b, run.sequence, {"m": m, "g": str(g)}))
    return _finish("F5", {"n": n}, entries, n)


def f6_enumerate(n: int) -> FamilyResult:
    """The complemented twin of F5 over the same polynomial range."""
    if n < 3:
        raise BadOrderError(f"order must be >= 3, got {n}")
    mask = (1 << n) - 1
    entries = []
    for m in range(1, n):
        for g in enumerate_primitive(m):
            for w in cyclic_windows(m_sequence(g), n):
                b = State(n, w.value ^ mask)
                run = prim_poly_complement_run(n, g, b)
                entries.append(FamilyEntry(b, run.sequence, {"m": m, "g": str(g)}))
    return _finish("F6", {"n": n}, entries, n)


def euler_totient(k: int) -> int:
    if k < 1:
        raise ValueError(f"totient needs a positive integer, got {k}")
    result = k
    d = 2
    rem = k
    while d * d <= rem:
        if rem % d == 0:
            while rem % d == 0:
                rem //= d
            result -= result // d
        d += 1
    if rem > 1:
        result -= result // rem
    return result


def f5_count_formula(n: int) -> int:
    """Closed-form size of F5(n), counted up to rotation.

    One collision pair per degree-(n-1) polynomial; every lower degree
    contributes all 2**m - 1 initial states distinctly.
    """
    if n <= 2:
        raise BadOrderError(f"order must be > 2, got {n}")
    top = (1 << (n - 1)) - 1
    total = euler_totient(top) // (n - 1) * (top - 1)
    for m in range(1, n - 1):
        p = (1 << m) - 1
        total += euler_totient(p) // m * p
    return total
