"""Modified greedy generators and the polynomial tooling they need.

Three variants relax the graph conditions by hard-wiring one extra
transition into the greedy loop:

* prefer-no: product feedback x_t...x_{n-1} from the all-zero state,
  with the forced step 01^{n-1} -> 1^n;
* prim-poly: linear feedback built from a primitive polynomial, started
  anywhere on its m-sequence, with the forced step 10^{n-1} -> 0^n
  (and a complementary form started on the complemented m-sequence
  with 01^{n-1} -> 1^n);
* a fixed short nonlinear feedback started on the cycle (0111), with
  the forced step 10^{n-1} -> 0^n.
"""

from dataclasses import dataclass

from .bitcore import PeriodicSequence, State, cyclic_windows
from .boolfn import AnfFunction, complement_fn, from_primitive_poly
from .errors import (
    BadInitialStateError,
    BadOrderError,
    BadTError,
    DegreeOutOfRangeError,
    DegreeTooLargeError,
    NonTerminatingError,
    NotPrimitiveError,
)
from .gpo import GpoRun, _execute

__all__ = [
    "PrimPoly",
    "MAX_DEGREE",
    "m_sequence",
    "is_primitive",
    "enumerate_primitive",
    "prefer_no",
    "prim_poly_run",
    "prim_poly_complement_run",
    "special_fn_run",
]

# Primitivity is decided by walking the full state orbit, so keep the
# degree small enough for 2**m - 1 steps to stay cheap.
MAX_DEGREE = 20


@dataclass(frozen=True)
class PrimPoly:
    """A binary polynomial 1 + a1*x + ... + a_{m-1}*x^{m-1} + x^m.

    Only the middle coefficients a1..a_{m-1} are stored; the constant
    and leading coefficients are implicitly 1. The text form lists all
    coefficients in descending degree, e.g. ``1101`` is x^3 + x^2 + 1.
    """

    degree: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.degree < 1:
            raise DegreeOutOfRangeError(f"degree must be >= 1, got {self.degree}")
        if len(self.coeffs) != self.degree - 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree - 1} middle coefficients"
            )
        if any(a not in (0, 1) for a in self.coeffs):
            raise ValueError("coefficients must be 0 or 1")

    @classmethod
    def from_string(cls, text: str) -> "PrimPoly":
        if len(text) < 2 or any(c not in "01" for c in text):
            raise ValueError(f"polynomial text must be a 0/1 string, got {text!r}")
        if text[0] != "1" or text[-1] != "1":
            raise ValueError("leading and constant coefficients must both be 1")
        m = len(text) - 1
        # text[1:-1] holds a_{m-1}..a_1
        return cls(m, tuple(int(c) for c in reversed(text[1:-1])))

    def __str__(self) -> str:
        return "1" + "".join(str(a) for a in reversed(self.coeffs)) + "1"


def _step_mask(g: PrimPoly) -> int:
    """Feedback tap mask over a state value (oldest bit most significant)."""
    m = g.degree
    taps = 1 << (m - 1)  # s_0 always feeds back
    for i, a in enumerate(g.coeffs, start=1):
        if a:
            taps |= 1 << (m - 1 - i)
    return taps


def _orbit_length(g: PrimPoly) -> int:
    """Steps for the register to return to the seed state 0^{m-1}1."""
    m = g.degree
    mask = (1 << m) - 1
    taps = _step_mask(g)
    seed = 1
    v = seed
    steps = 0
    while True:
        fb = bin(v & taps).count("1") & 1
        v = ((v << 1) & mask) | fb
        steps += 1
        if v == seed or steps > mask:
            return steps


def is_primitive(g: PrimPoly) -> bool:
    """Orbit test: primitive iff the nonzero states form one full cycle."""
    if g.degree > MAX_DEGREE:
        raise DegreeTooLargeError(
            f"degree {g.degree} exceeds primitivity-test cap {MAX_DEGREE}"
        )
    return _orbit_length(g) == (1 << g.degree) - 1


def enumerate_primitive(m: int) -> list[PrimPoly]:
    """All primitive degree-m polynomials, ascending by coefficient string."""
    if m < 1:
        raise DegreeOutOfRangeError(f"degree must be >= 1, got {m}")
    if m > MAX_DEGREE:
        raise DegreeTooLargeError(f"degree {m} exceeds cap {MAX_DEGREE}")
    found = []
    for k in range(1 << (m - 1)):
        # k's bits, most significant first, are a_{m-1}..a_1
        coeffs = tuple((k >> i) & 1 for i in range(m - 1))
        g = PrimPoly(m, coeffs)
        if is_primitive(g):
            found.append(g)
    return found


def m_sequence(g: PrimPoly) -> PeriodicSequence:
    """The maximal-length register output of ``g``, seeded with 0^{m-1}1."""
    if not is_primitive(g):
        raise NotPrimitiveError(f"{g} is not primitive")
    m = g.degree
    period = (1 << m) - 1
    mask = period
    taps = _step_mask(g)
    v = 1
    bits = []
    for _ in range(period):
        bits.append(v >> (m - 1))
        fb = bin(v & taps).count("1") & 1
        v = ((v << 1) & mask) | fb
    return PeriodicSequence(tuple(bits))


def _must_complete(run: GpoRun, what: str) -> GpoRun:
    if not run.completed:
        raise NonTerminatingError(f"{what} failed to return to its initial state")
    return run


def prefer_no(n: int, t: int, allow_t_zero: bool = False) -> GpoRun:
    """Product-feedback variant from the all-zero state.

    ``t`` must satisfy 1 <= t < n; pass ``allow_t_zero=True`` to run the
    unchecked t = 0 case (full product), which empirically matches
    prefer-one as well.
    """
    if n < 2:
        raise BadOrderError(f"order must be >= 2, got {n}")
    if not (1 <= t < n or (t == 0 and allow_t_zero)):
        raise BadTError(f"t must satisfy 1 <= t < {n}, got {t}")
    f = AnfFunction(n, frozenset([frozenset(range(t, n))]))
    special = ((1 << (n - 1)) - 1, (1 << n) - 1)  # 01^{n-1} -> 1^n
    run = _execute(f, State.zeros(n), 2 << n, special)
    return _must_complete(run, f"prefer-no(n={n}, t={t})")


def _window_values(seq: PeriodicSequence, n: int) -> list[State]:
    return cyclic_windows(seq, n)


def prim_poly_run(n: int, g: PrimPoly, b: State) -> GpoRun:
    """Linear-feedback variant started on an m-sequence window.

    Valid initial states are the 2**m - 1 cyclic n-windows of the
    m-sequence of ``g``; the forced step is 10^{n-1} -> 0^n.
    """
    if not 1 <= g.degree < n:
        raise DegreeOutOfRangeError(
            f"degree {g.degree} must satisfy 1 <= m < {n}"
        )
    if b.order != n:
        raise BadInitialStateError(f"initial state has order {b.order}, want {n}")
    valid = set(_window_values(m_sequence(g), n))
    if b not in valid:
        raise BadInitialStateError(
            f"{b} is not a window of the m-sequence of {g}"
        )
    f = from_primitive_poly(g, n)
    special = (1 << (n - 1), 0)  # 10^{n-1} -> 0^n
    run = _execute(f, b, 2 << n, special)
    return _must_complete(run, f"prim-poly(n={n}, g={g}, b={b})")


def prim_poly_complement_run(n: int, g: PrimPoly, b: State) -> GpoRun:
    """Complemented twin: every step mirrors ``prim_poly_run`` bit-flipped.

    Valid initial states are the complements of the m-sequence windows;
    the forced step becomes 01^{n-1} -> 1^n. The mirrored feedback must
    satisfy f~(x) = 1 + f(complement of x); for a linear f that is f+1
    when the tap count is even, which holds for every primitive
    polynomial except the degree-1 one (its single tap needs f~ = f).
    """
    if not 1 <= g.degree < n:
        raise DegreeOutOfRangeError(
            f"degree {g.degree} must satisfy 1 <= m < {n}"
        )
    if b.order != n:
        raise BadInitialStateError(f"initial state has order {b.order}, want {n}")
    mask = (1 << n) - 1
    valid = {State(n, w.value ^ mask) for w in _window_values(m_sequence(g), n)}
    if b not in valid:
        raise BadInitialStateError(
            f"{b} is not a complemented window of the m-sequence of {g}"
        )
    f = from_primitive_poly(g, n)
    taps = 1 + sum(g.coeffs)
    if taps % 2 == 0:
        f = complement_fn(f)
    special = ((1 << (n - 1)) - 1, mask)  # 01^{n-1} -> 1^n
    run = _execute(f, b, 2 << n, special)
    return _must_complete(run, f"prim-poly-complement(n={n}, g={g}, b={b})")


def special_fn_run(n: int, b: State) -> GpoRun:
    """Fixed nonlinear feedback started on the cycle (0111).

    Feedback: x_{n-3} + x_{n-2} + x_{n-3}*x_{n-2} + x_{n-3}*x_{n-2}*x_{n-1},
    forced step 10^{n-1} -> 0^n; needs n >= 4.
    """
    if n < 4:
        raise BadOrderError(f"order must be >= 4, got {n}")
    if b.order != n:
        raise BadInitialStateError(f"initial state has order {b.order}, want {n}")
    valid = set(_window_values(PeriodicSequence((0, 1, 1, 1)), n))
    if b not in valid:
        raise BadInitialStateError(f"{b} is not an n-window of the cycle (0111)")
    f = AnfFunction(
        n,
        frozenset(
            [
                frozenset([n - 3]),
                frozenset([n - 2]),
                frozenset([n - 3, n - 2]),
                frozenset([n - 3, n - 2, n - 1]),
            ]
        ),
    )
    special = (1 << (n - 1), 0)
    run = _execute(f, b, 2 << n, special)
    return _must_complete(run, f"special-feedback(n={n}, b={b})")
