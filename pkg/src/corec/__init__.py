"""Co-recursive lazy streams and the semi-numerical structures built on them.

The engine (:mod:`corec.stream`) provides memoized infinite sequences that
may be defined in terms of themselves, with a guard that turns unsound
self-reference into an error instead of a hang. On top of it sit formal
power series (:mod:`corec.series`), derivative towers (:mod:`corec.dif`),
audio generators (:mod:`corec.dsp`), the semiclassical double expansion
(:mod:`corec.wkb`), and the zero-dimensional field-theory amplitudes
(:mod:`corec.qft`). ``corec.cli`` exposes the showcases as a command line.
"""

from .cells import NonProductiveError
from .coeffs import Rational, format_coeff, rational
from .dif import Dif, ZERO_TOWER, damped_sine, lambert_w_tower, taylor_from_tower
from .series import Series, ZERO, sint, transpose
from .stream import Stream, cons, defer, delay, prepend, repeat, scale, take, zip_with

__all__ = [
    "NonProductiveError",
    "Stream",
    "cons",
    "defer",
    "zip_with",
    "scale",
    "delay",
    "prepend",
    "take",
    "repeat",
    "Series",
    "ZERO",
    "sint",
    "transpose",
    "Dif",
    "ZERO_TOWER",
    "damped_sine",
    "lambert_w_tower",
    "taylor_from_tower",
    "Rational",
    "rational",
    "format_coeff",
]

__version__ = "0.1.0"
