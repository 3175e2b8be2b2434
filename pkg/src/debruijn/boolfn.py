"""Boolean feedback functions in algebraic normal form.

An ANF function is an XOR of AND-monomials over variables x0..x{n-1},
where x0 reads the oldest register cell. The empty monomial is the
constant-1 term. Monomials live in a set, so duplicates annihilate.

Text grammar (used by the CLI and all parsers): terms separated by
``+``, factors inside a term joined by ``*``, factors are ``0``, ``1``
or ``x<index>``; whitespace is insignificant. Example::

    1 + x0 + x2*x3 + x1*x2*x3
"""

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Sequence

from .bitcore import State
from .errors import (
    AnfSyntaxError,
    ArityMismatchError,
    BadLengthError,
    BadOrderError,
)

if TYPE_CHECKING:  # pragma: no cover
    from .variants import PrimPoly


@dataclass(frozen=True)
class AnfFunction:
    """A Boolean function as a set of monomials (XOR semantics)."""

    arity: int
    monomials: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(
            self, "monomials", frozenset(frozenset(m) for m in self.monomials)
        )
        if self.arity < 1:
            raise BadOrderError(f"arity must be at least 1, got {self.arity}")
        for mono in self.monomials:
            for idx in mono:
                if not 0 <= idx < self.arity:
                    raise ArityMismatchError(
                        f"variable x{idx} out of range for arity {self.arity}"
                    )

    @classmethod
    def constant(cls, bit: int, arity: int) -> "AnfFunction":
        if bit not in (0, 1):
            raise ValueError(f"constant must be 0 or 1, got {bit!r}")
        monos = frozenset([frozenset()]) if bit else frozenset()
        return cls(arity, monos)

    @property
    def terms(self) -> list[tuple[int, ...]]:
        """Monomials in canonical order: by degree, then lexicographically."""
        return sorted((tuple(sorted(m)) for m in self.monomials), key=lambda t: (len(t), t))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Evaluation masks: monomial {i,..} sets bits (arity-1-i) of a state value."""
        n = self.arity
        return tuple(
            sum(1 << (n - 1 - i) for i in mono) for mono in self.terms
        )

    def __str__(self) -> str:
        return format_anf(self)


def evaluate(f: AnfFunction, s: State) -> int:
    """Apply ``f`` to the state's bits: XOR over monomials of AND."""
    if s.order != f.arity:
        raise ArityMismatchError(
            f"function arity {f.arity} does not match state order {s.order}"
        )
    v = s.value
    out = 0
    for mask in f.masks:
        if v & mask == mask:
            out ^= 1
    return out


def parse_anf(text: str, arity: int | None = None) -> AnfFunction:
    """Parse function text; see the module docstring for the grammar.

    The arity defaults to one past the highest variable index (at least
    1); pass ``arity`` to widen, e.g. a constant of a given width.
    """
    n = len(text)
    i = 0

    def skip_ws(pos: int) -> int:
        while pos < n and text[pos].isspace():
            pos += 1
        return pos

    i = skip_ws(i)
    if i == n:
        raise AnfSyntaxError("empty function text", i)

    accum: set[frozenset[int]] = set()
    max_idx = -1
    while True:
        # one term: factors joined by '*'
        term_vars: set[int] = set()
        term_zero = False
        while True:
            i = skip_ws(i)
            if i == n:
                raise AnfSyntaxError("expected a factor", i)
            ch = text[i]
            if ch == "0":
                term_zero = True
                i += 1
            elif ch == "1":
                i += 1
            elif ch in ("x", "X"):
                i += 1
                start = i
                while i < n and text[i].isdigit():
                    i += 1
                if start == i:
                    raise AnfSyntaxError("expected a variable index after 'x'", i)
                idx = int(text[start:i])
                term_vars.add(idx)
                max_idx = max(max_idx, idx)
            else:
                raise AnfSyntaxError(f"unexpected character {ch!r}", i)
            i = skip_ws(i)
            if i < n and text[i] == "*":
                i += 1
                continue
            break
        if not term_zero:
            mono = frozenset(term_vars)
            if mono in accum:
                accum.remove(mono)
            else:
                accum.add(mono)
        if i == n:
            break
        if text[i] != "+":
            raise AnfSyntaxError(f"expected '+' between terms, got {text[i]!r}", i)
        i += 1

    inferred = max(max_idx + 1, 1)
    if arity is None:
        arity = inferred
    elif arity < inferred:
        raise ArityMismatchError(
            f"arity {arity} too small for variable x{max_idx}"
        )
    return AnfFunction(arity, frozenset(accum))


def format_anf(f: AnfFunction) -> str:
    """Canonical text form; inverse of :func:`parse_anf` on canonical input."""
    if not f.monomials:
        return "0"
    parts = []
    for term in f.terms:
        if not term:
            parts.append("1")
        else:
            parts.append("*".join(f"x{i}" for i in term))
    return " + ".join(parts)


def from_truth_table(values: Sequence[int]) -> AnfFunction:
    """Interpolate the ANF whose truth table is ``values``.

    Index i corresponds to the state whose string form is the k-bit
    big-endian expansion of i (oldest bit most significant).
    """
    size = len(values)
    if size < 2 or size & (size - 1):
        raise BadLengthError(f"table length must be a power of two >= 2, got {size}")
    k = size.bit_length() - 1
    coeffs = [v & 1 for v in values]
    if any(v not in (0, 1) for v in values):
        raise ValueError("table entries must be 0 or 1")
    # binary Moebius transform, in place
    for j in range(k):
        step = 1 << j
        for i in range(size):
            if i & step:
                coeffs[i] ^= coeffs[i ^ step]
    monos = []
    for i in range(size):
        if coeffs[i]:
            monos.append(frozenset(k - 1 - j for j in range(k) if i >> j & 1))
    return AnfFunction(k, frozenset(monos))


def is_nonsingular(f: AnfFunction) -> bool:
    """True iff f = x0 + g(x1..x{n-1}), i.e. the register map is a bijection."""
    x0 = frozenset([0])
    if x0 not in f.monomials:
        return False
    return all(0 not in m for m in f.monomials if m != x0)


def shift_embed(h: AnfFunction, n: int) -> AnfFunction:
    """Re-index ``h`` to read the last ``h.arity`` cells of an n-cell register."""
    m = h.arity
    if n <= m:
        raise BadOrderError(f"target arity {n} must exceed source arity {m}")
    offset = n - m
    monos = frozenset(frozenset(i + offset for i in mono) for mono in h.monomials)
    return AnfFunction(n, monos)


def from_primitive_poly(g: "PrimPoly", n: int) -> AnfFunction:
    """The linear feedback x_{n-m} + a1*x_{n-m+1} + ... + a_{m-1}*x_{n-1}.

    ``g`` is a degree-m polynomial with coefficient attributes ``degree``
    and ``coeffs`` (a1..a_{m-1}); constant and leading terms are implicit.
    """
    m = g.degree
    if m < 1 or n <= m:
        raise BadOrderError(f"need order > degree >= 1, got order {n}, degree {m}")
    monos = [frozenset([n - m])]
    for i, a in enumerate(g.coeffs, start=1):
        if a:
            monos.append(frozenset([n - m + i]))
    return AnfFunction(n, frozenset(monos))


def complement_fn(f: AnfFunction) -> AnfFunction:
    """Toggle the constant term, complementing the function pointwise."""
    return AnfFunction(f.arity, f.monomials ^ frozenset([frozenset()]))
