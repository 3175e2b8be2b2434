"""Fixed-width register states and cyclic binary sequences.

A state is the content of an n-cell shift register, oldest bit first
(index 0 prints leftmost). A periodic sequence stores one full period
and is always read cyclically. Both are immutable values; graphs,
greedy runs and family catalogs are all built on the operations here.

Internally a state is an unsigned integer whose big-endian n-bit
expansion is the bit string, so bit 0 of the integer is the youngest
register cell. Round-trips through the textual form are exact.
"""

from dataclasses import dataclass
from typing import Iterable

from .errors import BadOrderError, OrderTooLargeError, WindowTooLongError

# Desk-scale guard: operations that enumerate all 2**n states refuse to
# go past this order.
MAX_ORDER = 24


@dataclass(frozen=True, order=True)
class State:
    """An n-bit register content; compares by (order, bits)."""

    order: int
    value: int

    def __post_init__(self):
        if self.order < 2:
            raise BadOrderError(f"state order must be at least 2, got {self.order}")
        if self.order > MAX_ORDER:
            raise OrderTooLargeError(
                f"state order {self.order} exceeds cap {MAX_ORDER}"
            )
        if not 0 <= self.value < 1 << self.order:
            raise ValueError(f"value {self.value} out of range for order {self.order}")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "State":
        bits = tuple(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bits must be 0 or 1, got {b!r}")
            value = (value << 1) | b
        return cls(len(bits), value)

    @classmethod
    def from_string(cls, text: str) -> "State":
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"state text must be a nonempty 0/1 string, got {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def zeros(cls, order: int) -> "State":
        return cls(order, 0)

    @classmethod
    def ones(cls, order: int) -> "State":
        return cls(order, (1 << order) - 1)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.order - 1 - i)) & 1 for i in range(self.order))

    def __str__(self) -> str:
        return format(self.value, f"0{self.order}b")


@dataclass(frozen=True)
class PeriodicSequence:
    """A cyclic binary sequence holding exactly one period."""

    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))
        if len(self.bits) < 1:
            raise ValueError("a periodic sequence needs at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("sequence bits must be 0 or 1")

    @classmethod
    def from_string(cls, text: str) -> "PeriodicSequence":
        cleaned = text.replace("_", "")
        cleaned = "".join(cleaned.split())
        if not cleaned or any(c not in "01" for c in cleaned):
            raise ValueError(f"sequence text must be a 0/1 string, got {text!r}")
        return cls(tuple(int(c) for c in cleaned))

    @property
    def period(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def shift_append(s: State, y: int) -> State:
    """Register step: drop the oldest bit of ``s`` and append ``y``."""
    if y not in (0, 1):
        raise ValueError(f"appended bit must be 0 or 1, got {y!r}")
    mask = (1 << s.order) - 1
    return State(s.order, ((s.value << 1) & mask) | y)


def conjugate(s: State) -> State:
    """The state with its first (oldest) bit flipped."""
    return State(s.order, s.value ^ (1 << (s.order - 1)))


def companion(s: State) -> State:
    """The state with its last (youngest) bit flipped."""
    return State(s.order, s.value ^ 1)


def cyclic_windows(seq: PeriodicSequence, n: int) -> list[State]:
    """All n-bit windows of ``seq`` read cyclically, one per start position.

    Unlike :func:`windows` this allows n to exceed the period; windows
    then wrap around the cycle more than once.
    """
    N = seq.period
    bits = seq.bits
    out = []
    for i in range(N):
        value = 0
        for j in range(n):
            value = (value << 1) | bits[(i + j) % N]
        out.append(State(n, value))
    return out


def windows(seq: PeriodicSequence, n: int) -> list[State]:
    """The period-many n-bit windows of ``seq``, wrapping at the boundary."""
    if n > seq.period:
        raise WindowTooLongError(
            f"window length {n} exceeds period {seq.period}"
        )
    return cyclic_windows(seq, n)


def is_de_bruijn(seq: PeriodicSequence, n: int) -> bool:
    """True iff every n-bit string occurs exactly once as a cyclic window."""
    if seq.period != 1 << n:
        return False
    seen = set()
    N = seq.period
    bits = seq.bits
    mask = (1 << n) - 1
    value = 0
    for j in range(n - 1):
        value = (value << 1) | bits[j]
    for i in range(N):
        value = ((value << 1) & mask) | bits[(i + n - 1) % N]
        if value in seen:
            return False
        seen.add(value)
    return True


def cyclically_equal(a: PeriodicSequence, b: PeriodicSequence) -> bool:
    """True iff ``b`` is some rotation of ``a``."""
    if a.period != b.period:
        return False
    return str(b) in str(a) + str(a)


def canonical_rotation(seq: PeriodicSequence) -> PeriodicSequence:
    """The lexicographically least rotation of ``seq``."""
    s = str(seq)
    doubled = s + s
    N = seq.period
    best = min(doubled[i : i + N] for i in range(N))
    return PeriodicSequence.from_string(best)


def complement_sequence(seq: PeriodicSequence) -> PeriodicSequence:
    """Flip every bit; the period is unchanged."""
    return PeriodicSequence(tuple(1 - b for b in seq.bits))
