"""Memoized lazy cells with a re-entrancy guard.

Everything in this package is built from pairs of lazy cells: a head cell
and a tail cell, each holding either a thunk or an already-forced value.
Self-referential definitions work because a producer may capture a handle
to the structure it is defining; they are sound whenever forcing element k
only ever needs elements at indices strictly below k ("finite progress").

Each cell moves through three states: unevaluated, in progress, evaluated.
A definition that is not productive, i.e. one whose cell k transitively
demands cell k itself, re-enters an in-progress cell. That re-entry raises
:class:`NonProductiveError` instead of looping forever.

Forced values are retained for the lifetime of the structure; there is no
eviction. Forcing is not re-entrant-safe across threads: a lazy structure
(and everything it references) must be driven by one logical thread at a
time. Fully forced prefixes may be read concurrently.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager

_UNFORCED = 0
_FORCING = 1
_FORCED = 2

_STACK_CAP = 50_000


class NonProductiveError(RuntimeError):
    """A self-referential definition demanded itself with no prefix to stand on."""


@contextmanager
def _stack_headroom(wanted):
    # Deep co-recursive definitions cost one Python frame per dependency
    # level, so consuming long prefixes may need more than the default
    # recursion limit. Raised temporarily, never lowered.
    old = sys.getrecursionlimit()
    new = max(old, min(_STACK_CAP, wanted))
    sys.setrecursionlimit(new)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


class _Thunk:
    """A single guarded cell; used where a whole node is produced lazily."""

    __slots__ = ("_state", "_value")

    def __init__(self, fn):
        self._state = _UNFORCED
        self._value = fn

    def force(self):
        state = self._state
        if state == _FORCED:
            return self._value
        if state == _FORCING:
            raise NonProductiveError(
                "non-productive definition: a deferred node depends on itself"
            )
        self._state = _FORCING
        try:
            value = self._value()
        except BaseException:
            self._state = _UNFORCED
            raise
        self._value = value
        self._state = _FORCED
        return value


class LazyPair:
    """Base for head/tail structures built from guarded memoized cells.

    ``_h``/``_t`` hold a zero-argument thunk until forced, then the value.
    ``_index`` is a best-effort position stamp used only in error messages:
    when a tail is forced, the child node is stamped with the parent's
    index plus one.
    """

    __slots__ = ("_hs", "_h", "_ts", "_t", "_index")

    def __init__(self, head, tail):
        self._hs = _UNFORCED
        self._h = head
        self._ts = _UNFORCED
        self._t = tail
        self._index = 0

    @classmethod
    def cons(cls, value, tail):
        """Node with an already-known head; ``tail`` is a node or a thunk."""
        node = cls.__new__(cls)
        node._hs = _FORCED
        node._h = value
        if callable(tail):
            node._ts = _UNFORCED
        else:
            node._ts = _FORCED
        node._t = tail
        node._index = 0
        return node

    @classmethod
    def defer(cls, fn):
        """A node computed entirely on demand; ``fn`` returns the real node.

        This is the hook for definitions that mention the structure being
        defined in head position, where ``cons`` cannot be used.
        """
        cell = _Thunk(fn)
        node = cls.__new__(cls)
        node._hs = _UNFORCED
        node._h = lambda: cell.force().head
        node._ts = _UNFORCED
        node._t = lambda: cell.force().tail
        node._index = 0
        return node

    @property
    def head(self):
        state = self._hs
        if state == _FORCED:
            return self._h
        if state == _FORCING:
            raise NonProductiveError(
                "non-productive definition: cell %d depends on its own value "
                "before any prefix is available" % self._index
            )
        self._hs = _FORCING
        try:
            value = self._h()
        except BaseException:
            self._hs = _UNFORCED
            raise
        self._h = value
        self._hs = _FORCED
        return value

    @property
    def tail(self):
        state = self._ts
        if state == _FORCED:
            return self._t
        if state == _FORCING:
            raise NonProductiveError(
                "non-productive definition: the tail at cell %d depends on "
                "itself" % self._index
            )
        self._ts = _FORCING
        try:
            node = self._t()
        except BaseException:
            self._ts = _UNFORCED
            raise
        self._t = node
        self._ts = _FORCED
        if node is not self and node._index == 0:
            node._index = self._index + 1
        return node

    def take(self, n):
        """Force and return the first ``n`` elements as a list."""
        if n < 0:
            raise ValueError("take: n must be >= 0")
        out = []
        node = self
        with _stack_headroom(2048 + 16 * n):
            for _ in range(n):
                out.append(node.head)
                node = node.tail
        return out

    def at(self, k):
        """Force and return element ``k`` (elements 0..k-1 are forced too)."""
        if k < 0:
            raise ValueError("at: index must be >= 0")
        return self.take(k + 1)[-1]

    def __iter__(self):
        node = self
        while True:
            yield node.head
            node = node.tail

    def _forced_prefix(self, limit=8):
        # Repr helper: report only what is already materialized, so that
        # printing a structure never forces (or fails) anything.
        out = []
        node = self
        while len(out) < limit and node._hs == _FORCED:
            out.append(node._h)
            if node._ts != _FORCED:
                break
            node = node._t
        return out

    def __repr__(self):
        shown = self._forced_prefix()
        inner = ", ".join(repr(v) for v in shown)
        return "<%s [%s...]>" % (type(self).__name__, inner)
