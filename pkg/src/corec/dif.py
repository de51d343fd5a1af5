"""Derivative towers: values carrying all their derivatives.

A :class:`Dif` is the lazy chain ``[e, e', e'', ...]`` of an expression and
its derivatives with respect to one implicit variable, evaluated at a
point. The chain forms a differential algebra: the derivation (``deriv``)
is linear and obeys the Leibniz rule, and the arithmetic below realizes
both co-recursively, so the derivatives compute themselves as the
expression is manipulated. No expression tree is kept.

Constants get the compact :meth:`Dif.const` form (a value followed by
zeros); the differentiation variable at a point x0 is ``Dif.var(x0)``,
the chain ``[x0, 1, 0, 0, ...]``. Plain numbers lift to constants
automatically in mixed arithmetic.

Division has a deliberate quirk, inherited from the limit it implements:
when both numerator and denominator have value 0, the quotient of the
shifted towers is returned. Its *value* is the correct limit of the
ratio, but the remaining elements are not the derivative tower of the
extended quotient function; only the value is contractual.
"""

from __future__ import annotations

from fractions import Fraction

from .cells import LazyPair
from .coeffs import (
    scalar_asin,
    scalar_atan,
    scalar_cos,
    scalar_exp,
    scalar_log,
    scalar_recip,
    scalar_sin,
    scalar_sqrt,
)
from .series import Series, ZERO as SERIES_ZERO

__all__ = ["Dif", "ZERO_TOWER", "damped_sine", "lambert_w_tower", "taylor_from_tower"]


class Dif(LazyPair):
    """A value and, lazily, all of its derivatives."""

    __slots__ = ()

    @classmethod
    def const(cls, value) -> "Dif":
        """Compact constant: ``value`` followed by zero derivatives."""
        return _Const(value)

    @classmethod
    def var(cls, x0) -> "Dif":
        """The differentiation variable with value ``x0``: [x0, 1, 0, 0, ...]."""
        return cls.cons(x0, _Const(1))

    # -- reading -------------------------------------------------------

    @property
    def value(self):
        return self.head

    def deriv(self) -> "Dif":
        """The derivative tower: element k of the result is element k+1 here."""
        return self.tail

    def elements(self, n: int) -> list:
        return self.take(n)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if isinstance(a, _Const):
            if isinstance(b, _Const):
                return _Const(a.value + b.value)
            return Dif(lambda: a.value + b.value, lambda: b.tail)
        if isinstance(b, _Const):
            return Dif(lambda: a.value + b.value, lambda: a.tail)
        return Dif(lambda: a.value + b.value, lambda: a.tail + b.tail)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        if isinstance(self, _Const):
            return _Const(-self.value)
        a = self
        return Dif(lambda: -a.value, lambda: -a.tail)

    def scale(self, c) -> "Dif":
        """Multiply the whole tower by the scalar ``c``."""
        if isinstance(self, _Const):
            return _Const(c * self.value)
        a = self
        return Dif(lambda: c * a.value, lambda: a.tail.scale(c))

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if isinstance(a, _Const):
            return b.scale(a.value)
        if isinstance(b, _Const):
            return a.scale(b.value)
        # Leibniz: (a*b)' = a*b' + a'*b
        return Dif(lambda: a.value * b.value,
                   lambda: a * b.tail + a.tail * b)

    __rmul__ = __mul__

    def sqr(self) -> "Dif":
        """self * self with the shared-factor form 2*(tail*whole) for the tail."""
        if isinstance(self, _Const):
            return _Const(self.value * self.value)
        a = self
        return Dif(lambda: a.value * a.value,
                   lambda: (a.tail * a).scale(2))

    def recip(self) -> "Dif":
        """Multiplicative inverse; requires a nonzero value."""
        if isinstance(self, _Const):
            return _Const(scalar_recip(self.value))
        a = self
        if a.value == 0:
            raise ZeroDivisionError("recip of a tower with zero value")
        ip = Dif(lambda: scalar_recip(a.value),
                 lambda: -(a.tail * ip.sqr()))
        return ip

    def __truediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if isinstance(b, _Const):
            if b.value == 0:
                if isinstance(a, _Const) and a.value == 0:
                    return ZERO_TOWER
                raise ZeroDivisionError("division by a zero tower")
            return a.scale(scalar_recip(b.value))
        x, y = a.value, b.value
        if y == 0:
            if x == 0:
                # The limit of the ratio; see the module note.
                return a.tail / b.tail
            raise ZeroDivisionError(
                "pole: division by a tower with zero value"
            )
        w = Dif(lambda: _num_div(x, y),
                lambda: a.tail / b - w * (b.tail / b))
        return w

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    # -- elementary functions ---------------------------------------------

    def exp(self) -> "Dif":
        if isinstance(self, _Const):
            return _Const(scalar_exp(self.value))
        a = self
        w = Dif.cons(scalar_exp(a.value), lambda: a.tail * w)
        return w

    def log(self) -> "Dif":
        if isinstance(self, _Const):
            return _Const(scalar_log(self.value))
        a = self
        return Dif.cons(scalar_log(a.value), lambda: a.tail / a)

    def sqrt(self) -> "Dif":
        if isinstance(self, _Const):
            return _Const(scalar_sqrt(self.value))
        a = self
        w = Dif.cons(scalar_sqrt(a.value),
                     lambda: (a.tail / w).scale(0.5))
        return w

    def sin(self) -> "Dif":
        if isinstance(self, _Const):
            return _Const(scalar_sin(self.value))
        a = self
        return Dif.cons(scalar_sin(a.value), lambda: a.tail * a.cos())

    def cos(self) -> "Dif":
        if isinstance(self, _Const):
            return _Const(scalar_cos(self.value))
        a = self
        return Dif.cons(scalar_cos(a.value), lambda: -(a.tail * a.sin()))

    def atan(self) -> "Dif":
        if isinstance(self, _Const):
            return _Const(scalar_atan(self.value))
        a = self
        return Dif.cons(scalar_atan(a.value),
                        lambda: a.tail / (a.sqr() + 1))

    def asin(self) -> "Dif":
        if isinstance(self, _Const):
            return _Const(scalar_asin(self.value))
        a = self
        return Dif.cons(scalar_asin(a.value),
                        lambda: a.tail / (1 - a.sqr()).sqrt())


class _Const(Dif):
    """Value followed by zeros, kept compact."""

    __slots__ = ()

    def __init__(self, value):
        self._hs = 2  # forced
        self._h = value
        self._ts = 0  # the zero tail is shared and created lazily
        self._t = lambda: ZERO_TOWER
        self._index = 0


def _make_zero_tower() -> Dif:
    z = _Const.__new__(_Const)
    z._hs = 2
    z._h = 0
    z._ts = 2
    z._t = z
    z._index = 0
    return z


#: The all-zero tower (the compact constant 0); its tail is itself.
ZERO_TOWER = _make_zero_tower()

_NUMBER_TYPES = (int, float, complex)


def _num_div(x, y):
    # Keep int/int exact; everything else divides natively.
    if isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return x / y


def _lift(x):
    if isinstance(x, Dif):
        return x
    if isinstance(x, _NUMBER_TYPES) or hasattr(x, "numerator"):
        return _Const(x)
    return NotImplemented


# -- showcase towers ------------------------------------------------------


def damped_sine(x: Dif) -> Dif:
    """Tower of sin(x) * exp(-x) for a variable tower ``x`` (derivative 1).

    Applying the Leibniz rule blindly makes the n-th derivative cost grow
    exponentially; sine and cosine generate the same terms with alternating
    signs, so a coupled pair of linear co-recursions produces element n in
    O(n) work instead.
    """
    x0 = x.value
    decay = scalar_exp(-x0)
    p = Dif.cons(scalar_sin(x0) * decay, lambda: q - p)
    q = Dif.cons(scalar_cos(x0) * decay, lambda: -p - q)
    return p


def lambert_w_tower() -> Dif:
    """Derivatives of the Lambert W function at z = 0.

    W is defined implicitly by W(z) * exp(W(z)) = z; differentiating gives
    dW/dz = exp(-W) / (1 + W), which together with W(0) = 0 is the whole
    definition. Element n of the result is n-th derivative of W at 0,
    i.e. (-n)**(n-1) up to floating error.
    """
    w = Dif.cons(0.0, lambda: (-w).exp() / (1.0 + w))
    return w


def taylor_from_tower(d: Dif) -> Series:
    """Series whose coefficient k is element k of ``d`` divided by k!.

    Bridges derivative towers at a point to the power-series module.
    """
    def go(node, k, fact):
        if node is ZERO_TOWER:
            return SERIES_ZERO
        return Series(lambda: _by_factorial(node.value, fact),
                      lambda: go(node.tail, k + 1, fact * (k + 1)))

    return go(d, 0, 1)


def _by_factorial(x, fact):
    if isinstance(x, int):
        return Fraction(x, fact)
    return x / fact
