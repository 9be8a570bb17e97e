"""Exact integer polynomials and dominance on the half-line ``[0, inf)``.

Nothing here touches floating point.  Sign questions on ``[0, inf)`` are
settled with a Sturm sequence over :class:`fractions.Fraction`.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


class IntPolynomial:
    """Dense polynomial with ``int`` coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has the empty
    coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, a: int) -> IntPolynomial:
        return cls((a,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def padded(self, length: int) -> tuple[int, ...]:
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return render(self)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, _lift(other).coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0)
                              for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-a for a in self.coeffs])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-_lift(other))

    def __rsub__(self, other) -> IntPolynomial:
        return _lift(other) - self

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, _lift(other).coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, t: int) -> IntPolynomial:
        """Multiply by ``x**t``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * t + self.coeffs)

    def __call__(self, q) -> Fraction:
        return eval_rational(self, q)

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> IntPolynomial:
        return cls(int(a) for a in data)


def _lift(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    raise TypeError(f"cannot combine IntPolynomial with {type(p).__name__}")


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def add(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return f + g


def sub(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return f - g


def mul(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return f * g


def eval_rational(f: IntPolynomial, q) -> Fraction:
    q = Fraction(q)
    acc = Fraction(0)
    for a in reversed(f.coeffs):
        acc = acc * q + a
    return acc


def binomial_power(n: int) -> IntPolynomial:
    """``(1 + x)**n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return IntPolynomial(comb(n, j) for j in range(n + 1))


def render(f: IntPolynomial) -> str:
    """Text form ``"c0 + c1*x + c2*x^2"``; zero terms are omitted."""
    terms = []
    for j, a in enumerate(f.coeffs):
        if a == 0:
            continue
        if j == 0:
            body = str(abs(a))
        else:
            mono = "x" if j == 1 else f"x^{j}"
            body = mono if abs(a) == 1 else f"{abs(a)}*{mono}"
        sign = "-" if a < 0 else "+"
        if not terms:
            terms.append(("-" if a < 0 else "") + body)
        else:
            terms.append(f"{sign} {body}")
    return " ".join(terms) if terms else "0"


def to_json(f: IntPolynomial) -> str:
    return json.dumps(f.to_json())


# -- rational polynomial helpers for root isolation --------------------
def _strip(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        coef = a[-1] / lb
        shift = len(a) - 1 - db
        for i, y in enumerate(b):
            a[i + shift] -= coef * y
        a.pop()
        _strip(a)
    return a


def _quo(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    while a and len(a) - 1 >= db:
        coef = a[-1] / lb
        shift = len(a) - 1 - db
        q[shift] = coef
        for i, y in enumerate(b):
            a[i + shift] -= coef * y
        a.pop()
    return _strip(q)


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _rem(a, b)
    return a


def _deriv(a: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(a)][1:]


def _eval(a: Sequence[Fraction], q: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * q + c
    return acc


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sturm_sequence(f: Sequence) -> list[list[Fraction]]:
    p0 = _strip([Fraction(c) for c in f])
    if not p0:
        return []
    seq = [p0, _deriv(p0)]
    while seq[-1]:
        r = _rem(seq[-2], seq[-1])
        seq.append([-c for c in r])
    return seq[:-1]


def _variations(seq: list[list[Fraction]], q: Fraction) -> int:
    signs = [s for s in (_sign(_eval(p, q)) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _squarefree(c: list[Fraction]) -> list[Fraction]:
    g = _gcd(c, _deriv(c))
    if len(g) <= 1:
        return c
    return _quo(c, g)


def _positive_root_bounds(c: list[Fraction]) -> tuple[Fraction, Fraction]:
    """``(lo, hi)`` with every positive root strictly inside.  ``c`` must
    have nonzero constant term."""
    lead = abs(c[-1])
    hi = 1 + max(abs(a) for a in c[:-1]) / lead
    tail = abs(c[0])
    lo = tail / (tail + max(abs(a) for a in c[1:]))
    return lo / 2, hi + 1


def positive_root_intervals(f: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals ``(a, b)``, each holding exactly one
    distinct positive root of ``f``.  Endpoints are never roots."""
    c = [Fraction(a) for a in f.coeffs]
    while c and c[0] == 0:
        c.pop(0)
    if len(c) <= 1:
        return []
    c = _squarefree(c)
    if len(c) <= 1:
        return []
    lo, hi = _positive_root_bounds(c)
    seq = sturm_sequence(c)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, _variations(seq, lo), _variations(seq, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        while _eval(c, mid) == 0:
            mid = (a + mid) / 2
        vm = _variations(seq, mid)
        stack.append((mid, b, vm, vb))
        stack.append((a, mid, va, vm))
    out.sort()
    return out


def sample_points(f: IntPolynomial) -> list[Fraction]:
    """Rational points meeting ``0`` and every gap between consecutive
    distinct roots of ``f`` in ``(0, inf)``, plus one point beyond the
    largest root."""
    c = [Fraction(a) for a in f.coeffs]
    while c and c[0] == 0:
        c.pop(0)
    pts = {Fraction(0), Fraction(1)}
    if len(c) > 1:
        lo, hi = _positive_root_bounds(_squarefree(c))
        pts.update((lo, hi))
        for a, b in positive_root_intervals(f):
            pts.update((a, b))
    return sorted(pts)


@dataclass(frozen=True)
class NonnegResult:
    nonneg: bool
    witness: Fraction | None = None

    def __bool__(self) -> bool:
        return self.nonneg


def nonneg_on_nonneg_axis(d: IntPolynomial) -> NonnegResult:
    """Decide ``d(x) >= 0`` for all ``x >= 0``.

    A ``False`` answer carries a rational ``witness >= 0`` with
    ``d(witness) < 0``.
    """
    if all(a >= 0 for a in d.coeffs):
        return NonnegResult(True)
    for q in sample_points(d):
        if eval_rational(d, q) < 0:
            return NonnegResult(False, q)
    return NonnegResult(True)


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def compare_near_zero(f: IntPolynomial, g: IntPolynomial) -> Ordering:
    """Ordering of ``f`` and ``g`` on ``(0, eps)`` for small ``eps``."""
    size = max(len(f), len(g))
    for a, b in zip(f.padded(size), g.padded(size)):
        if a != b:
            return Ordering.LESS if a < b else Ordering.GREATER
    return Ordering.EQUAL


def compare_near_infinity(f: IntPolynomial, g: IntPolynomial) -> Ordering:
    """Ordering of ``f`` and ``g`` for all sufficiently large ``x``."""
    size = max(len(f), len(g))
    for a, b in zip(reversed(f.padded(size)), reversed(g.padded(size))):
        if a != b:
            return Ordering.LESS if a < b else Ordering.GREATER
    return Ordering.EQUAL


class Dominance(enum.Enum):
    EQUAL = "EQUAL"
    COEFFWISE_GE = "COEFFWISE_GE"
    EVERYWHERE_GE = "EVERYWHERE_GE"
    EVERYWHERE_LE = "EVERYWHERE_LE"
    CROSSES = "CROSSES"


@dataclass(frozen=True)
class DominanceVerdict:
    """Outcome of comparing ``f`` with ``g`` on ``[0, inf)``.

    For ``CROSSES``, ``f - g`` has strict opposite signs at ``x_lo`` and
    ``x_hi`` (``x_lo < x_hi``).  ``coefficientwise`` records whether the
    inequality (either direction) already holds coefficient by coefficient.
    """

    tag: Dominance
    x_lo: Fraction | None = None
    x_hi: Fraction | None = None
    coefficientwise: bool = False

    @property
    def f_ge_g(self) -> bool:
        return self.tag in (Dominance.EQUAL, Dominance.COEFFWISE_GE,
                            Dominance.EVERYWHERE_GE)

    @property
    def f_le_g(self) -> bool:
        return self.tag in (Dominance.EQUAL, Dominance.EVERYWHERE_LE)

    def to_dict(self) -> dict:
        out: dict = {"tag": self.tag.value,
                     "coefficientwise": self.coefficientwise}
        if self.tag is Dominance.CROSSES:
            out["x_lo"] = _fmt_fraction(self.x_lo)
            out["x_hi"] = _fmt_fraction(self.x_hi)
        return out

    def __str__(self) -> str:
        if self.tag is Dominance.CROSSES:
            return (f"CROSSES (witnesses x={_fmt_fraction(self.x_lo)}, "
                    f"x={_fmt_fraction(self.x_hi)})")
        return self.tag.value


def _fmt_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def dominance(f: IntPolynomial, g: IntPolynomial) -> DominanceVerdict:
    if f == g:
        return DominanceVerdict(Dominance.EQUAL, coefficientwise=True)
    d = f - g
    if all(a >= 0 for a in d.coeffs):
        return DominanceVerdict(Dominance.COEFFWISE_GE, coefficientwise=True)
    if all(a <= 0 for a in d.coeffs):
        return DominanceVerdict(Dominance.EVERYWHERE_LE, coefficientwise=True)
    below = nonneg_on_nonneg_axis(d)
    if below:
        return DominanceVerdict(Dominance.EVERYWHERE_GE)
    above = nonneg_on_nonneg_axis(-d)
    if above:
        return DominanceVerdict(Dominance.EVERYWHERE_LE)
    lo, hi = sorted((below.witness, above.witness))
    return DominanceVerdict(Dominance.CROSSES, lo, hi)
