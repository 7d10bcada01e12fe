"""Sprague-Grundy tables and strategy queries."""

from __future__ import annotations

import io
import os
import warnings
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .beatty import BeattyKind, classify
from .rules import GameId, GameRule, Move, Position, moves_with_labels

__all__ = [
    "GrundyTable",
    "OutOfTable",
    "TableMemoryError",
    "mex",
    "build_table",
    "estimate_bytes",
    "grundy",
    "row",
    "is_p_position_oracle",
    "winning_moves",
]

ORDERS = ("sequential", "wavefront")

# per-diagonal bitsets are used while they fit in this many bytes
DENSE_LIMIT = 256 * 2**20

_CODES = {
    GameId.WYTHOFF: _kernels.WYTHOFF,
    GameId.R_WYTHOFF: _kernels.R_WYTHOFF,
    GameId.E_WYTHOFF: _kernels.E_WYTHOFF,
    GameId.GENERALIZED: _kernels.PAIRS,
}


class OutOfTable(IndexError):
    """Position or row outside the computed table."""


class TableMemoryError(MemoryError):
    pass


def mex(values: Iterable[int]) -> int:
    """Smallest nonnegative integer not in ``values`` (``mex(()) == 0``)."""
    seen = set(values)
    m = 0
    while m in seen:
        m += 1
    return m


@dataclass(frozen=True, eq=False)
class GrundyTable:
    """Grundy values of every canonical ``(a, b)`` with ``a <= rows`` and
    ``a <= b <= bound``; ``rows == bound`` for a complete table."""

    rule: GameRule
    bound: int
    rows: int
    values: np.ndarray
    offsets: np.ndarray

    def __post_init__(self):
        self.values.flags.writeable = False
        self.offsets.flags.writeable = False

    @property
    def complete(self) -> bool:
        return self.rows == self.bound

    def __contains__(self, p) -> bool:
        a, b = min(p), max(p)
        return a >= 0 and a <= self.rows and b <= self.bound

    def __eq__(self, other):
        if not isinstance(other, GrundyTable):
            return NotImplemented
        return (
            self.rule == other.rule
            and self.bound == other.bound
            and self.rows == other.rows
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    def value(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        if a < 0 or a > self.rows or b > self.bound:
            raise OutOfTable(f"({a},{b}) is outside the table (rows<={self.rows}, bound={self.bound})")
        return int(self.values[self.offsets[a] + b - a])

    def row(self, a: int) -> np.ndarray:
        """``g(a, i)`` for ``i = 0..bound``, as int64."""
        if a < 0 or a > self.rows:
            raise OutOfTable(f"row {a} is outside the table (rows<={self.rows})")
        i = np.arange(self.bound + 1)
        lo = np.minimum(i, a)
        hi = np.maximum(i, a)
        return self.values[self.offsets[lo] + hi - lo].astype(np.int64)

    def diagonal(self, offset: int) -> np.ndarray:
        """``g(x, x + offset)`` for every ``x`` with the cell inside the table."""
        if offset < 0 or offset > self.bound:
            raise OutOfTable(f"diagonal {offset} is outside the table")
        x = np.arange(min(self.rows, self.bound - offset) + 1)
        return self.values[self.offsets[x] + offset].astype(np.int64)

    def coords(self) -> tuple[np.ndarray, np.ndarray]:
        """Arrays ``(a, b)`` aligned with ``values``."""
        lengths = np.diff(self.offsets)
        a = np.repeat(np.arange(self.rows + 1), lengths)
        b = np.arange(len(self.values)) - self.offsets[a] + a
        return a, b

    def positions_with(self, v: int) -> list[Position]:
        a, b = self.coords()
        idx = np.nonzero(self.values == v)[0]
        return [Position(int(a[i]), int(b[i])) for i in idx]

    def square(self) -> np.ndarray:
        """Symmetric ``(bound+1) x (bound+1)`` int64 matrix; complete tables only."""
        if not self.complete:
            raise OutOfTable("square() needs a complete table")
        n = self.bound + 1
        out = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            r = self.values[self.offsets[a] : self.offsets[a + 1]]
            out[a, a:] = r
            out[a:, a] = r
        return out

    def cells(self, symmetric: bool = False) -> np.ndarray:
        """``(n, 3)`` int64 array of ``a, b, g`` sorted by (a, b).

        Canonical cells only, unless ``symmetric`` (complete tables), which
        lists both ``(a, b)`` and ``(b, a)``.
        """
        if symmetric:
            sq = self.square()
            a, b = np.indices(sq.shape)
            return np.column_stack([a.ravel(), b.ravel(), sq.ravel()])
        a, b = self.coords()
        return np.column_stack([a, b, self.values.astype(np.int64)])

    def to_csv(self, out=None, symmetric: bool = False) -> Optional[str]:
        """Write ``a,b,g`` lines sorted by (a, b); returns the text when ``out`` is None."""
        buf = io.StringIO() if out is None else out
        buf.write("a,b,g\n")
        np.savetxt(buf, self.cells(symmetric), fmt="%d", delimiter=",", newline="\n")
        return buf.getvalue() if out is None else None


def estimate_bytes(bound: int, rows: Optional[int] = None, order: str = "sequential") -> int:
    """Rough peak memory of ``build_table`` in bytes."""
    A = bound if rows is None else min(rows, bound)
    B = bound
    cells = (A + 1) * (B + 1) - A * (A + 1) // 2
    words = (A + B + 2) // 64 + 2
    est = 4 * cells + 8 * (A + 1) * words
    if order == "wavefront" or 8 * (B + 1) * words <= DENSE_LIMIT:
        est += 8 * (B + 1) * words
    return est + 8 * (A + B + 2)


def _set_threads(threads: Optional[int]) -> None:
    import numba

    if threads is None:
        env = os.environ.get("WYTHOFF_THREADS", "").strip()
        threads = int(env) if env else 0
    top = numba.config.NUMBA_NUM_THREADS
    numba.set_num_threads(top if threads <= 0 else min(threads, top))


def build_table(
    rule: GameRule,
    bound: int,
    *,
    rows: Optional[int] = None,
    order: str = "sequential",
    threads: Optional[int] = None,
) -> GrundyTable:
    """Compute the table of ``rule`` for all ``a <= b <= bound``.

    ``rows`` limits the smaller pile to ``a <= rows``; such strips are closed
    under moves, so they are exact.  ``order="wavefront"`` fills by ascending
    ``a + b`` (parallel, complete tables only); both orders give identical
    tables.
    """
    bound = int(bound)
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    A = bound if rows is None else int(rows)
    if A < 0:
        raise ValueError(f"rows must be nonnegative, got {A}")
    A = min(A, bound)
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}, got {order!r}")
    code = _CODES[rule.id]
    try:
        if order == "wavefront":
            if A != bound:
                raise ValueError("wavefront order builds complete tables only")
            if code == _kernels.E_WYTHOFF:
                code = _kernels.PAIRS
            pairs = rule.pair_matrix(bound) if code == _kernels.PAIRS else np.zeros((1, 1), np.bool_)
            with warnings.catch_warnings():
                # numba probes TBB first; an outdated system TBB only means another layer is used
                warnings.filterwarnings("ignore", message="The TBB threading layer")
                _set_threads(threads)
                g, off = _kernels.fill_wavefront(code, bound, pairs)
        else:
            pairs = rule.pair_matrix(A) if code == _kernels.PAIRS else np.zeros((1, 1), np.bool_)
            words = (A + bound + 2) // 64 + 2
            dense = 8 * (bound + 1) * words <= DENSE_LIMIT
            g, off = _kernels.fill_columns(code, A, bound, dense, pairs)
    except MemoryError:
        raise TableMemoryError(
            f"not enough memory for a {rule.name} table with bound {bound}"
            f" (estimated {estimate_bytes(bound, A, order) / 2**20:.0f} MiB)"
        ) from None
    return GrundyTable(rule, bound, A, g, off)


def grundy(table: GrundyTable, p) -> int:
    """Table lookup of the Grundy value of ``p``."""
    a, b = p
    return table.value(a, b)


def row(table: GrundyTable, a: int) -> np.ndarray:
    return table.row(a)


def is_p_position_oracle(p) -> bool:
    """Closed-form P-position test, valid for every supported game."""
    a, b = min(p), max(p)
    if a == 0:
        return b == 0
    c = classify(a)
    return c.kind is BeattyKind.A and b == a + c.index


def winning_moves(rule: GameRule, p) -> list[tuple[Move, Position]]:
    """Labeled moves from ``p`` to a P-position; empty iff ``p`` is a P-position."""
    if not isinstance(p, Position):
        p = Position(*p)
    return [(m, q) for m, q in moves_with_labels(rule, p) if is_p_position_oracle(q)]
