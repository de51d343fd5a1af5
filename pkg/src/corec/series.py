"""Formal power series over an arbitrary coefficient domain.

A :class:`Series` is the lazy sequence of coefficients ``[u0, u1, u2, ...]``
of ``sum_k u_k x^k``; the variable is never evaluated and convergence never
enters. Coefficients may be exact (``int``/``Fraction``), floats, derivative
towers, or again series (series-of-series are how bivariate expansions are
represented here).

:data:`ZERO` is the compact all-zero series. It is purely constructional:
operations short-circuit on it when they can, but no attempt is made to
detect that an arbitrary lazy tail happens to be all zeros (that question
is undecidable). Its elements read as plain ``0``, which participates in
every supported coefficient domain.

Multiplication is the Cauchy product, division is the co-recursive long
division (requiring an invertible leading coefficient, never cancelling
powers of x), and the elementary functions are defined by their integral
equations, e.g. ``W = exp U`` satisfies ``W = exp(u0) + integral(W * U')``.
Equality of series is deliberately not an operation; tests and callers
compare finite coefficient windows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .cells import LazyPair
from .coeffs import (
    scalar_cos,
    scalar_exp,
    scalar_log,
    scalar_pow,
    scalar_sin,
    scalar_sqrt,
)

__all__ = ["Series", "ZERO", "sint", "transpose"]


def _div(a, b):
    # Coefficient division that keeps int/int exact.
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _div_by_int(x, n):
    if isinstance(x, int):
        return Fraction(x, n)
    return x / n


def _invertible(c):
    # Derivative towers are invertible iff their value is; plain
    # coefficients iff they are nonzero.
    lead = getattr(c, "value", c)
    return not (lead == 0)


class Series(LazyPair):
    """Coefficient stream of a formal power series."""

    __slots__ = ()

    # -- construction ------------------------------------------------

    @classmethod
    def from_list(cls, values) -> "Series":
        """Polynomial with the given coefficients, then the compact zero tail."""
        node = ZERO
        for v in reversed(values):
            node = cls.cons(v, node)
        return node

    @classmethod
    def monomial(cls, m: int) -> "Series":
        """x**m: coefficient m is 1, every other coefficient 0."""
        if m < 0:
            raise ValueError("monomial: power must be >= 0")
        return cls.from_list([0] * m + [1])

    # -- reading -----------------------------------------------------

    def coefficients(self, n: int) -> list:
        """The first ``n`` coefficients as a list."""
        return self.take(n)

    # -- pointwise structure -----------------------------------------

    def map(self, f: Callable) -> "Series":
        """Apply ``f`` to every coefficient; the compact zero tail is preserved
        without applying ``f`` (so ``f`` is assumed to fix zero)."""
        if self is ZERO:
            return ZERO
        u = self
        return Series(lambda: f(u.head), lambda: _map_rest(u, f))

    def scale(self, c) -> "Series":
        """Multiply every coefficient by ``c``.

        ``c`` lives in the coefficient domain; for series-of-series this is
        how an inner-series scalar multiplies an outer series (the ``*``
        operator would mean the outer Cauchy product instead).
        """
        if self is ZERO:
            return ZERO
        u = self
        return Series(lambda: c * u.head, lambda: _scale_rest(u, c))

    def shift(self, m: int) -> "Series":
        """Multiply by x**m, i.e. prepend ``m`` zero coefficients."""
        if m < 0:
            raise ValueError("shift: m must be >= 0")
        if self is ZERO:
            return ZERO
        node = self
        for _ in range(m):
            node = Series.cons(0, node)
        return node

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, Series):
            if self is ZERO:
                return other
            if other is ZERO:
                return self
            u, v = self, other
            return Series(lambda: u.head + v.head, lambda: u.tail + v.tail)
        # scalar: adds to the constant term
        if self is ZERO:
            return Series.cons(other, ZERO)
        u = self
        return Series(lambda: u.head + other, lambda: u.tail)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Series):
            if other is ZERO:
                return self
            if self is ZERO:
                return -other
            u, v = self, other
            return Series(lambda: u.head - v.head, lambda: u.tail - v.tail)
        u = self
        if u is ZERO:
            return Series.cons(-other, ZERO)
        return Series(lambda: u.head - other, lambda: u.tail)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self.map(lambda c: -c)

    def __mul__(self, other):
        if isinstance(other, Series):
            if self is ZERO or other is ZERO:
                return ZERO
            u, v = self, other
            # u*v = u0*v0 + x*(u0*vq + uq*v), computed co-recursively
            return Series(lambda: u.head * v.head,
                          lambda: v.tail.scale(u.head) + u.tail * v)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Series):
            v = other
            if v is ZERO:
                raise ZeroDivisionError("series division by the zero series")
            if not _invertible(v.head):
                raise ZeroDivisionError(
                    "series division needs an invertible leading coefficient"
                )
            if self is ZERO:
                return ZERO
            u = self
            w = Series(lambda: _div(u.head, v.head),
                       lambda: (u.tail - v.tail.scale(w.head)) / v)
            return w
        c = Fraction(other) if isinstance(other, int) else other
        return self.map(lambda x: x / c)

    def __rtruediv__(self, other):
        return Series.cons(other, ZERO) / self

    def __pow__(self, a):
        if isinstance(a, int) and a >= 0:
            # Repeated multiplication: total, and exact for any head.
            result = Series.cons(1, ZERO)
            base, k = self, a
            while k:
                if k & 1:
                    result = result * base
                k >>= 1
                if k:
                    base = base * base
            return result
        return self.pow(a)

    # -- calculus ------------------------------------------------------

    def diff(self) -> "Series":
        """Coefficient k of the result is (k+1) * u_{k+1}."""
        u = self
        if u is ZERO:
            return ZERO
        return Series.defer(lambda: _diff_node(u.tail))

    def integral(self, constant=0) -> "Series":
        """Antiderivative with the given constant term."""
        if self is ZERO:
            if isinstance(constant, (int, float, Fraction)) and constant == 0:
                return ZERO
            return Series.cons(constant, ZERO)
        u = self
        return Series.cons(constant, lambda: _integral_tail(u, 1))

    # -- elementary functions ------------------------------------------

    def exp(self) -> "Series":
        """W with W' = W * U'; head is exp of the leading coefficient."""
        if self is ZERO:
            return Series.cons(1, ZERO)
        u = self
        w = Series.cons(scalar_exp(u.head),
                        lambda: _integral_tail(u.diff() * w, 1))
        return w

    def log(self) -> "Series":
        """W with W' = U'/U; the leading coefficient must admit a scalar log."""
        if self is ZERO:
            raise ValueError("log: the zero series has no logarithm")
        u = self
        head = scalar_log(u.head)
        return Series.cons(head, lambda: _integral_tail(u.diff() / u, 1))

    def sqrt(self) -> "Series":
        """W with W**2 = U, via W = sqrt(u0) + integral(U' / (2W))."""
        if self is ZERO or not _invertible(self.head):
            raise ValueError("sqrt: leading coefficient must be nonzero")
        u = self
        w = Series.cons(scalar_sqrt(u.head),
                        lambda: _integral_tail(u.diff() / (w * 2), 1))
        return w

    def pow(self, a) -> "Series":
        """U**a for a scalar exponent, via W = u0**a + integral(a * U' * W / U)."""
        if self is ZERO or not _invertible(self.head):
            raise ValueError("pow: leading coefficient must be nonzero")
        u = self
        w = Series.cons(scalar_pow(u.head, a),
                        lambda: _integral_tail((u.diff() * w / u).scale(a), 1))
        return w

    def sin(self) -> "Series":
        return _sin_cos(self)[0]

    def cos(self) -> "Series":
        return _sin_cos(self)[1]

    # -- composition ----------------------------------------------------

    def compose(self, v: "Series") -> "Series":
        """U(V(x)) for V with zero constant term, as a nested Horner scheme."""
        if not isinstance(v, Series):
            raise TypeError("compose expects a Series argument")
        if v is ZERO:
            vbar = ZERO
        else:
            if v.head != 0:
                raise ValueError(
                    "compose: inner series must have a zero constant term"
                )
            vbar = v.tail

        def horner(node):
            if node is ZERO:
                return ZERO
            return Series(lambda: node.head,
                          lambda: vbar * horner(node.tail))

        return horner(self)

    def revert(self) -> "Series":
        """The series T with V(T(z)) = z, for V = z + v2 z^2 + ...

        Requires a zero constant term and a unit linear coefficient. The
        naive fixed point t = z - v2 t^2 - ... is not productive; writing
        t = z*p makes it one.
        """
        v = self
        if v is ZERO or v.head != 0:
            raise ValueError("revert: constant term must be 0")
        if v.tail.head != 1:
            raise ValueError("revert: linear coefficient must be 1")
        vb = v.tail.tail
        t = Series.cons(0, lambda: p)
        p = Series.cons(1, lambda: -(p * p * vb.compose(t)))
        return t


class _ZeroSeries(Series):
    __slots__ = ()

    def __repr__(self):
        return "<Series 0>"


def _make_zero() -> Series:
    z = _ZeroSeries.__new__(_ZeroSeries)
    z._hs = 2  # forced
    z._h = 0
    z._ts = 2
    z._t = z
    z._index = 0
    return z


#: The compact all-zero series.
ZERO = _make_zero()


def sint(constant, u: Series) -> Series:
    """Antiderivative of ``u`` with constant term ``constant``."""
    return u.integral(constant)


def transpose(m: Series) -> Series:
    """Swap the two index levels of a series of series.

    Coefficient (i, j) of the result is coefficient (j, i) of the input;
    both directions stay lazy. Plain scalar entries produced by a compact
    zero tail are treated as zero series.
    """
    if m is ZERO:
        return ZERO
    return Series(lambda: m.map(_coeff_head),
                  lambda: transpose(m.map(_coeff_tail)))


def _coeff_head(c):
    return c.head if isinstance(c, Series) else c


def _coeff_tail(c):
    return c.tail if isinstance(c, Series) else ZERO


# -- lazy helpers (forcing only happens inside thunks) -------------------

def _map_rest(u, f):
    t = u.tail
    return ZERO if t is ZERO else t.map(f)


def _scale_rest(u, c):
    t = u.tail
    return ZERO if t is ZERO else t.scale(c)


def _diff_node(t):
    if t is ZERO:
        return ZERO
    return _diff_scaled(t, 1)


def _diff_scaled(t, k):
    return Series(lambda: t.head * k, lambda: _diff_scaled_rest(t, k))


def _diff_scaled_rest(t, k):
    tt = t.tail
    return ZERO if tt is ZERO else _diff_scaled(tt, k + 1)


def _integral_tail(u, k):
    if u is ZERO:
        return ZERO
    return Series(lambda: _div_by_int(u.head, k),
                  lambda: _integral_rest(u, k))


def _integral_rest(u, k):
    return _integral_tail(u.tail, k + 1)


def _sin_cos(u):
    if u is ZERO:
        return ZERO, Series.cons(1, ZERO)
    s_head = scalar_sin(u.head)
    c_head = scalar_cos(u.head)
    d = u.diff()
    s = Series.cons(s_head, lambda: _integral_tail(d * c, 1))
    c = Series.cons(c_head, lambda: _integral_tail(-(d * s), 1))
    return s, c
