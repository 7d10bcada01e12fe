"""Positions, move rules and follower enumeration for the two-pile games.

Supported games:

* ``wythoff``     -- take any amount from one pile, or the same amount from both.
* ``r-wythoff``   -- single-pile removal only from the larger pile (either pile
  when the piles are equal), plus equal removal from both.
* ``e-wythoff``   -- Wythoff plus taking ``k`` from the smaller pile (either when
  equal) and ``l`` from the other, ``0 <= l < k``.
* ``generalized`` -- Wythoff plus the same unequal-pair move restricted to
  ``k in K``, ``l in L`` and a relation ``R(k, l)``; configured from a file.
"""

from __future__ import annotations

import configparser
import enum
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator, Optional

import numpy as np

from .beatty import beatty_a, beatty_b

__all__ = [
    "Position",
    "GameId",
    "IntSet",
    "Relation",
    "GameRule",
    "MoveKind",
    "Move",
    "ConfigError",
    "FormulaUnavailable",
    "WYTHOFF",
    "R_WYTHOFF",
    "E_WYTHOFF",
    "followers",
    "moves_with_labels",
    "p_position_formula",
    "value1_formula",
    "load_rule",
    "preset",
    "parse_game",
]


class ConfigError(ValueError):
    """Malformed rule configuration or game name."""


class FormulaUnavailable(ValueError):
    """No closed form is known for the requested rule."""


@dataclass(frozen=True, order=True, init=False)
class Position:
    """An unordered pair of pile sizes, stored as ``low <= high``."""

    low: int
    high: int

    def __init__(self, a: int, b: int):
        a, b = int(a), int(b)
        if a < 0 or b < 0:
            raise ValueError(f"pile sizes must be nonnegative, got ({a}, {b})")
        if a > b:
            a, b = b, a
        object.__setattr__(self, "low", a)
        object.__setattr__(self, "high", b)

    @classmethod
    def parse(cls, text: str) -> "Position":
        """Parse ``"a,b"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b', got {text!r}")
        try:
            a, b = (int(x) for x in parts)
        except ValueError:
            raise ValueError(f"expected 'a,b' with integers, got {text!r}") from None
        return cls(a, b)

    @property
    def total(self) -> int:
        return self.low + self.high

    def __iter__(self) -> Iterator[int]:
        yield self.low
        yield self.high

    def __repr__(self) -> str:
        return f"({self.low},{self.high})"


class GameId(str, enum.Enum):
    WYTHOFF = "wythoff"
    R_WYTHOFF = "r-wythoff"
    E_WYTHOFF = "e-wythoff"
    GENERALIZED = "generalized"


@dataclass(frozen=True)
class IntSet:
    """A set of nonnegative integers: a range ``lo..hi`` (``hi=None`` is
    unbounded) or an explicit finite list."""

    lo: int = 1
    hi: Optional[int] = None
    values: Optional[tuple[int, ...]] = None

    @classmethod
    def parse(cls, text: str) -> "IntSet":
        text = text.strip()
        try:
            if text in ("*", "all"):
                return cls()
            if ".." in text:
                lo, hi = text.split("..", 1)
                hi = hi.strip()
                return cls(int(lo), None if hi in ("*", "") else int(hi))
            vals = tuple(sorted({int(x) for x in text.split(",") if x.strip()}))
        except ValueError:
            raise ConfigError(f"bad integer set {text!r}") from None
        if not vals:
            raise ConfigError("empty integer set")
        if vals[0] < 0:
            raise ConfigError(f"integer set {text!r} has negative members")
        return cls(values=vals)

    def __contains__(self, x: int) -> bool:
        if self.values is not None:
            return x in self.values
        return x >= self.lo and (self.hi is None or x <= self.hi)

    def __str__(self) -> str:
        if self.values is not None:
            return ",".join(map(str, self.values))
        return f"{self.lo}..{'*' if self.hi is None else self.hi}"


@dataclass(frozen=True)
class Relation:
    """Predicate on ``(k, l)`` for the adjoined move; ``k > l`` always holds.

    ``full``: every pair. ``successor``: ``k == l + 1``.
    ``mod``: ``(k - l) % modulus == residue``. ``max-gap``: ``k - l <= gap``.
    """

    name: str = "full"
    modulus: int = 1
    residue: int = 0
    gap: int = 1

    NAMES = ("full", "successor", "mod", "max-gap")

    def __post_init__(self):
        if self.name not in self.NAMES:
            raise ConfigError(f"unknown relation {self.name!r}; expected one of {', '.join(self.NAMES)}")
        if self.name == "mod" and self.modulus < 1:
            raise ConfigError("relation 'mod' needs modulus >= 1")
        if self.name == "max-gap" and self.gap < 1:
            raise ConfigError("relation 'max-gap' needs gap >= 1")

    def __call__(self, k: int, l: int) -> bool:
        if k <= l:
            return False
        if self.name == "successor":
            return k == l + 1
        if self.name == "mod":
            return (k - l) % self.modulus == self.residue % self.modulus
        if self.name == "max-gap":
            return k - l <= self.gap
        return True


@dataclass(frozen=True)
class GameRule:
    id: GameId
    name: str = ""
    k_set: IntSet = field(default_factory=IntSet)
    l_set: IntSet = field(default_factory=lambda: IntSet(lo=0))
    relation: Relation = field(default_factory=Relation)

    def __post_init__(self):
        if not self.name:
            object.__setattr__(self, "name", self.id.value)

    @property
    def named(self) -> bool:
        """True for the three games with closed-form theory."""
        return self.id is not GameId.GENERALIZED

    def pair_allowed(self, k: int, l: int) -> bool:
        """Whether the unequal-pair move (k from the smaller, l from the other) exists."""
        if self.id is GameId.E_WYTHOFF:
            return 0 <= l < k
        if self.id is GameId.GENERALIZED:
            return l >= 0 and k in self.k_set and l in self.l_set and self.relation(k, l)
        return False

    def pair_matrix(self, k_max: int) -> np.ndarray:
        """``m[k, l]`` is True when the unequal-pair move ``(k, l)`` is allowed."""
        m = np.zeros((k_max + 1, k_max + 1), dtype=np.bool_)
        for k in range(1, k_max + 1):
            for l in range(k):
                m[k, l] = self.pair_allowed(k, l)
        return m

    def __str__(self) -> str:
        return self.name


WYTHOFF = GameRule(GameId.WYTHOFF)
R_WYTHOFF = GameRule(GameId.R_WYTHOFF)
E_WYTHOFF = GameRule(GameId.E_WYTHOFF)


class MoveKind(str, enum.Enum):
    SINGLE_LARGER = "SinglePileLarger"
    SINGLE_SMALLER = "SinglePileSmaller"
    SINGLE_EITHER = "SinglePileEither"
    EQUAL_BOTH = "EqualBoth"
    UNEQUAL_PAIR = "UnequalPair"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    take_low: int
    take_high: int

    def apply(self, p: Position) -> Position:
        if self.take_low + self.take_high < 1:
            raise ValueError("a move must remove at least one token")
        if self.take_low > p.low or self.take_high > p.high:
            raise ValueError(f"{self} is not applicable to {p}")
        return Position(p.low - self.take_low, p.high - self.take_high)

    def describe(self) -> str:
        k = self.kind
        if k is MoveKind.SINGLE_LARGER:
            return f"take {self.take_high} from the larger pile"
        if k is MoveKind.SINGLE_SMALLER:
            return f"take {self.take_low} from the smaller pile"
        if k is MoveKind.SINGLE_EITHER:
            return f"take {self.take_high} from either (equal) pile"
        if k is MoveKind.EQUAL_BOTH:
            return f"take {self.take_low} from both piles"
        return f"take {self.take_low} from the smaller pile and {self.take_high} from the other"

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "take_low": self.take_low, "take_high": self.take_high}


def moves_with_labels(rule: GameRule, p: Position) -> list[tuple[Move, Position]]:
    """Every legal move from ``p`` with its (canonical) result.

    Distinct moves that land on the same position are all listed.
    """
    a, b = p.low, p.high
    moves: list[Move] = []
    if a == b:
        moves += [Move(MoveKind.SINGLE_EITHER, 0, j) for j in range(1, b + 1)]
    else:
        moves += [Move(MoveKind.SINGLE_LARGER, 0, j) for j in range(1, b + 1)]
        if rule.id is not GameId.R_WYTHOFF:
            moves += [Move(MoveKind.SINGLE_SMALLER, i, 0) for i in range(1, a + 1)]
    moves += [Move(MoveKind.EQUAL_BOTH, i, i) for i in range(1, a + 1)]
    if rule.id in (GameId.E_WYTHOFF, GameId.GENERALIZED):
        # O(a^2) pairs: the follower set itself can be that large.
        # l = 0 is the single-pile move already listed above
        moves += [
            Move(MoveKind.UNEQUAL_PAIR, k, l)
            for k in range(2, a + 1)
            for l in range(1, k)
            if rule.pair_allowed(k, l)
        ]
    return [(m, m.apply(p)) for m in moves]


def followers(rule: GameRule, p: Position) -> frozenset[Position]:
    """The distinct positions reachable from ``p`` in one move."""
    return frozenset(q for _, q in moves_with_labels(rule, p))


def p_position_formula(n: int) -> Position:
    """The n-th Wythoff P-position ``(floor(n phi), floor(n phi) + n)``."""
    return Position(beatty_a(n), beatty_b(n))


def value1_formula(rule: GameRule, n_max: int) -> frozenset[Position]:
    """Closed-form Grundy-value-1 positions, indices ``1 <= n <= n_max``."""
    if rule.id is GameId.R_WYTHOFF:
        out = {Position(2, 2), Position(4, 6)}
        out.update(Position(beatty_a(n) - 1, beatty_b(n) - 1) for n in range(1, n_max + 1) if n != 2)
        return frozenset(out)
    if rule.id is GameId.E_WYTHOFF:
        return frozenset(Position(beatty_a(n) - 1, beatty_b(n) - 1) for n in range(1, n_max + 1))
    raise FormulaUnavailable(f"no value-1 formula for {rule.name}")


# --- configuration -----------------------------------------------------------

_PRESETS = ("wythoff", "r-wythoff", "e-wythoff", "successor")


def _rule_from_section(sec, source: str) -> GameRule:
    try:
        gid = GameId(sec.get("id", "").strip())
    except ValueError:
        raise ConfigError(f"{source}: 'id' must be one of {', '.join(g.value for g in GameId)}") from None
    if gid is not GameId.GENERALIZED:
        return GameRule(gid)
    try:
        relation = Relation(
            name=sec.get("relation", "full").strip(),
            modulus=sec.getint("modulus", 1),
            residue=sec.getint("residue", 0),
            gap=sec.getint("gap", 1),
        )
    except ValueError as exc:
        raise ConfigError(f"{source}: {exc}") from None
    return GameRule(
        gid,
        name=sec.get("name", "generalized").strip(),
        k_set=IntSet.parse(sec.get("k_set", "1..*")),
        l_set=IntSet.parse(sec.get("l_set", "0..*")),
        relation=relation,
    )


def _parse_config(text: str, source: str) -> GameRule:
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(f"{source}: {exc}") from None
    if not cp.has_section("game"):
        raise ConfigError(f"{source}: missing [game] section")
    return _rule_from_section(cp["game"], source)


def load_rule(path) -> GameRule:
    """Read a rule from a ``[game]`` key-value file (see presets/*.ini)."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read rule config {path}: {exc.strerror}") from None
    return _parse_config(text, str(path))


def preset(name: str) -> GameRule:
    """A bundled rule: wythoff, r-wythoff, e-wythoff or successor."""
    if name not in _PRESETS:
        raise ConfigError(f"unknown preset {name!r}; expected one of {', '.join(_PRESETS)}")
    text = resources.files(__package__).joinpath("presets", f"{name}.ini").read_text(encoding="utf-8")
    return _parse_config(text, f"preset:{name}")


def parse_game(text: str) -> GameRule:
    """``wythoff | r-wythoff | e-wythoff | generalized:<path> | preset:<name>``."""
    if text.startswith("generalized:"):
        return load_rule(text.split(":", 1)[1])
    if text.startswith("preset:"):
        return preset(text.split(":", 1)[1])
    try:
        gid = GameId(text)
    except ValueError:
        raise ConfigError(f"unknown game {text!r}") from None
    if gid is GameId.GENERALIZED:
        raise ConfigError("use generalized:<path> to name a generalized rule")
    return GameRule(gid)
