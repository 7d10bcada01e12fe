"""Wythoff's game, its R- and E- variants, and Sprague-Grundy analysis tools."""

from .beatty import BeattyClass, BeattyKind, beatty_a, beatty_b, classify
from .engine import (
    GrundyTable,
    OutOfTable,
    build_table,
    grundy,
    is_p_position_oracle,
    mex,
    row,
    winning_moves,
)
from .rules import (
    E_WYTHOFF,
    R_WYTHOFF,
    WYTHOFF,
    GameId,
    GameRule,
    Move,
    MoveKind,
    Position,
    followers,
    moves_with_labels,
    p_position_formula,
    value1_formula,
)

__version__ = "0.1.0"

__all__ = [
    "BeattyClass",
    "BeattyKind",
    "beatty_a",
    "beatty_b",
    "classify",
    "GrundyTable",
    "OutOfTable",
    "build_table",
    "grundy",
    "is_p_position_oracle",
    "mex",
    "row",
    "winning_moves",
    "E_WYTHOFF",
    "R_WYTHOFF",
    "WYTHOFF",
    "GameId",
    "GameRule",
    "Move",
    "MoveKind",
    "Position",
    "followers",
    "moves_with_labels",
    "p_position_formula",
    "value1_formula",
]
