"""
Second-order jet arithmetic

Handles:
- Jet2 values carrying (f, f', f'') of a radial function at one radius
- Leibniz and quotient rules for +, -, *, /
- Chain rule for the elementary functions of the radial calculus
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from .exceptions import DomainError, NumericalError

Number = Union[int, float]

# Terms of the even series of s_K(r)/r; enough for |K| r^2 <= 1 at double precision
_SINC_TERMS = 14


class JetOp(str, Enum):
    """Binary jet operations"""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


class Elementary(str, Enum):
    """Elementary functions that can be composed with a jet"""

    SIN = "sin"
    COS = "cos"
    SINH = "sinh"
    COSH = "cosh"
    EXP = "exp"
    LOG = "log"
    POW = "pow_k"


@dataclass(frozen=True, slots=True)
class Jet2:
    """Value, first and second derivative of a function of r at one radius"""

    value: float
    d1: float = 0.0
    d2: float = 0.0

    @classmethod
    def constant(cls, c: Number) -> "Jet2":
        """Jet of a constant function"""
        return cls(float(c), 0.0, 0.0)

    @classmethod
    def variable(cls, r: Number) -> "Jet2":
        """Jet of the identity function at r"""
        return cls(float(r), 1.0, 0.0)

    def is_finite(self) -> bool:
        """True when no channel is NaN or infinite"""
        return math.isfinite(self.value) and math.isfinite(self.d1) and math.isfinite(self.d2)

    def as_tuple(self) -> Tuple[float, float, float]:
        """The three channels as a plain tuple"""
        return (self.value, self.d1, self.d2)

    @staticmethod
    def _coerce(other: Union["Jet2", Number]) -> "Jet2":
        return other if isinstance(other, Jet2) else Jet2.constant(other)

    def __add__(self, other: Union["Jet2", Number]) -> "Jet2":
        return jet_combine(JetOp.ADD, self, Jet2._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Union["Jet2", Number]) -> "Jet2":
        return jet_combine(JetOp.SUB, self, Jet2._coerce(other))

    def __rsub__(self, other: Union["Jet2", Number]) -> "Jet2":
        return jet_combine(JetOp.SUB, Jet2._coerce(other), self)

    def __mul__(self, other: Union["Jet2", Number]) -> "Jet2":
        return jet_combine(JetOp.MUL, self, Jet2._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Jet2", Number]) -> "Jet2":
        return jet_combine(JetOp.DIV, self, Jet2._coerce(other))

    def __rtruediv__(self, other: Union["Jet2", Number]) -> "Jet2":
        return jet_combine(JetOp.DIV, Jet2._coerce(other), self)

    def __neg__(self) -> "Jet2":
        return Jet2(-self.value, -self.d1, -self.d2)

    def __pow__(self, k: Number) -> "Jet2":
        return jet_elementary(Elementary.POW, self, k=k)


def jet_combine(
    op: JetOp, a: Jet2, b: Jet2, *, radius: Optional[float] = None
) -> Jet2:
    """
    Combine two jets pointwise

    Args:
        op: Operation to apply
        a: Left operand
        b: Right operand
        radius: Radius the jets belong to, reported in domain errors

    Returns:
        The 2-jet of the combination

    Raises:
        DomainError: Division by a jet whose value is zero
    """
    op = JetOp(op)
    if op is JetOp.ADD:
        return Jet2(a.value + b.value, a.d1 + b.d1, a.d2 + b.d2)
    if op is JetOp.SUB:
        return Jet2(a.value - b.value, a.d1 - b.d1, a.d2 - b.d2)
    if op is JetOp.MUL:
        return Jet2(
            a.value * b.value,
            a.d1 * b.value + a.value * b.d1,
            a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2,
        )

    if b.value == 0.0:
        raise DomainError("division by a jet with zero value", radius)
    quotient = a.value / b.value
    rate = b.d1 / b.value
    q1 = a.d1 / b.value - quotient * rate
    q2 = (a.d2 - 2.0 * q1 * b.d1 - quotient * b.d2) / b.value
    return Jet2(quotient, q1, q2)


def _derivatives(fn: Elementary, x: float, radius: Optional[float]) -> Tuple[float, float, float]:
    """fn, fn' and fn'' evaluated at x"""
    if fn is Elementary.SIN:
        s, c = math.sin(x), math.cos(x)
        return s, c, -s
    if fn is Elementary.COS:
        s, c = math.sin(x), math.cos(x)
        return c, -s, -c
    if fn is Elementary.SINH:
        s, c = math.sinh(x), math.cosh(x)
        return s, c, s
    if fn is Elementary.COSH:
        s, c = math.sinh(x), math.cosh(x)
        return c, s, c
    if fn is Elementary.EXP:
        e = math.exp(x)
        return e, e, e
    if x <= 0.0:
        raise DomainError(f"log of non-positive argument {x!r}", radius)
    return math.log(x), 1.0 / x, -1.0 / (x * x)


def _integer_power(a: Jet2, k: int, radius: Optional[float]) -> Jet2:
    result = Jet2.constant(1.0)
    for _ in range(abs(k)):
        result = jet_combine(JetOp.MUL, result, a, radius=radius)
    if k < 0:
        result = jet_combine(JetOp.DIV, Jet2.constant(1.0), result, radius=radius)
    return result


def jet_elementary(
    fn: Elementary,
    a: Jet2,
    *,
    k: Optional[Number] = None,
    radius: Optional[float] = None,
) -> Jet2:
    """
    Compose an elementary function with a jet by the chain rule

    Args:
        fn: Elementary function
        a: Inner jet
        k: Exponent, required for pow_k
        radius: Radius the jet belongs to, reported in domain errors

    Returns:
        The 2-jet of fn(a)

    Raises:
        DomainError: log of a non-positive value, non-integer power of a
            non-positive value, or a missing exponent
        NumericalError: The result overflows
    """
    fn = Elementary(fn)
    if fn is Elementary.POW:
        if k is None:
            raise DomainError("pow_k requires an exponent", radius)
        if float(k).is_integer():
            return _integer_power(a, int(k), radius)
        if a.value <= 0.0:
            raise DomainError(
                f"non-integer power {k!r} of non-positive value {a.value!r}", radius
            )
        scaled = jet_elementary(Elementary.LOG, a, radius=radius) * float(k)
        return jet_elementary(Elementary.EXP, scaled, radius=radius)

    try:
        f0, f1, f2 = _derivatives(fn, a.value, radius)
    except OverflowError as e:
        raise NumericalError(f"overflow evaluating {fn.value} at {a.value!r}") from e
    return Jet2(f0, f1 * a.d1, f2 * a.d1 * a.d1 + f1 * a.d2)


def sinc_jet(curvature: float, r: float) -> Jet2:
    """
    2-jet of s_K(r)/r, the normalised scalar Jacobi solution

    Near r = 0 the even Taylor series is summed so that the removable
    singularity costs no precision.
    """
    if curvature == 0.0:
        return Jet2.constant(1.0)

    if abs(curvature) * r * r <= 1.0:
        value = d1 = d2 = 0.0
        coefficient = 1.0
        for j in range(_SINC_TERMS):
            power = 2 * j
            value += coefficient * r**power
            if j >= 1:
                d1 += power * coefficient * r ** (power - 1)
                d2 += power * (power - 1) * coefficient * r ** (power - 2)
            coefficient *= -curvature / ((power + 2) * (power + 3))
        return Jet2(value, d1, d2)

    x = Jet2.variable(r)
    root = math.sqrt(abs(curvature))
    fn = Elementary.SIN if curvature > 0 else Elementary.SINH
    s = jet_elementary(fn, x * root, radius=r) / root
    return jet_combine(JetOp.DIV, s, x, radius=r)
