"""Exact-arithmetic domain types for cubic soft sets.

Every membership value is a :class:`fractions.Fraction` restricted to
[0, 1].  Fractions are always kept in lowest terms, so structural equality
is value equality and no comparison ever needs a tolerance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import (
    DuplicateElement,
    DuplicateParameter,
    InvertedInterval,
    MalformedNumber,
    MissingGrade,
    OutOfUnitRange,
)

ZERO = Fraction(0)
ONE = Fraction(1)

_DECIMAL = re.compile(r"\d+(\.\d+)?")
_RATIO = re.compile(r"(\d+)/(\d+)")


def unit(value, where: str | None = None) -> Fraction:
    """Coerce an int, Fraction or numeric string to a Fraction in [0, 1]."""
    if isinstance(value, str):
        return parse_unit_value(value, where)
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        # floats are refused outright: they would smuggle in binary rounding
        raise MalformedNumber(value, where)
    q = Fraction(value)
    if not ZERO <= q <= ONE:
        raise OutOfUnitRange(q, where)
    return q


def parse_unit_value(text: str, where: str | None = None) -> Fraction:
    """Parse ``"0.35"`` or ``"7/20"`` exactly.

    >>> parse_unit_value("0.35")
    Fraction(7, 20)
    """
    if not isinstance(text, str):
        raise MalformedNumber(text, where)
    if _DECIMAL.fullmatch(text):
        q = Fraction(text)
    else:
        m = _RATIO.fullmatch(text)
        if m is None or int(m.group(2)) == 0:
            raise MalformedNumber(text, where)
        q = Fraction(int(m.group(1)), int(m.group(2)))
    if q > ONE:
        raise OutOfUnitRange(text, where)
    return q


def format_unit(q: Fraction) -> str:
    """Shortest exact decimal when one exists, otherwise ``n/m``."""
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{q.numerator}/{q.denominator}"
    places = max(twos, fives)
    if places == 0:
        return str(q.numerator)
    digits = q.numerator * 10**places // q.denominator
    whole, frac = divmod(digits, 10**places)
    return f"{whole}.{frac:0{places}d}".rstrip("0")


@dataclass(frozen=True, slots=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvertedInterval(self.lo, self.hi)

    def __str__(self) -> str:
        return f"[{format_unit(self.lo)},{format_unit(self.hi)}]"


@dataclass(frozen=True, slots=True)
class CubicGrade:
    ivf: Interval
    fuzzy: Fraction

    @property
    def lo(self) -> Fraction:
        return self.ivf.lo

    @property
    def hi(self) -> Fraction:
        return self.ivf.hi

    def __str__(self) -> str:
        return f"<{self.ivf},{format_unit(self.fuzzy)}>"


def make_grade(lo, hi, fuzzy) -> CubicGrade:
    """Validated grade constructor; accepts strings, ints or Fractions."""
    return CubicGrade(Interval(unit(lo), unit(hi)), unit(fuzzy))


def _grade(lo: Fraction, hi: Fraction, fuzzy: Fraction) -> CubicGrade:
    # Unchecked constructor for results of operations that provably keep
    # the invariants (min/max/complement of valid grades).  Skips the
    # frozen-dataclass __init__ which dominates campaign run time.
    iv = object.__new__(Interval)
    object.__setattr__(iv, "lo", lo)
    object.__setattr__(iv, "hi", hi)
    g = object.__new__(CubicGrade)
    object.__setattr__(g, "ivf", iv)
    object.__setattr__(g, "fuzzy", fuzzy)
    return g


@dataclass(frozen=True)
class ParameterId:
    """A parameter ``e`` or its negation ``¬e``.

    Product parameters carry their two components in ``pair``; their
    ``name`` is the display form ``(a,b)``.
    """

    name: str
    negated: bool = False
    pair: tuple[ParameterId, ParameterId] | None = None

    @classmethod
    def product(cls, a: ParameterId, b: ParameterId) -> ParameterId:
        return cls(f"({a.label},{b.label})", False, (a, b))

    @property
    def label(self) -> str:
        return ("¬" if self.negated else "") + self.name

    def __str__(self) -> str:
        return self.label


def negate_parameter(p: ParameterId) -> ParameterId:
    return ParameterId(p.name, not p.negated, p.pair)


@dataclass(frozen=True, eq=True)
class CubicSoftSet:
    """A total map (parameter, element) -> CubicGrade over ordered lists."""

    universe: tuple[str, ...]
    params: tuple[ParameterId, ...]
    grades: Mapping[tuple[ParameterId, str], CubicGrade] = field(repr=False)

    def __post_init__(self):
        universe = tuple(self.universe)
        params = tuple(self.params)
        seen: set = set()
        for x in universe:
            if x in seen:
                raise DuplicateElement(x)
            seen.add(x)
        seen = set()
        for p in params:
            if p in seen:
                raise DuplicateParameter(p)
            seen.add(p)
        grades = {}
        for p in params:
            for x in universe:
                try:
                    g = self.grades[(p, x)]
                except KeyError:
                    raise MissingGrade(p, x) from None
                if not isinstance(g, CubicGrade):
                    raise TypeError(f"grade at ({p}, {x}) is not a CubicGrade")
                grades[(p, x)] = g
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "grades", MappingProxyType(grades))

    @classmethod
    def _trusted(cls, universe, params, grades) -> CubicSoftSet:
        """Build without validation; callers guarantee the invariants."""
        s = object.__new__(cls)
        object.__setattr__(s, "universe", tuple(universe))
        object.__setattr__(s, "params", tuple(params))
        object.__setattr__(s, "grades", MappingProxyType(grades))
        return s

    @classmethod
    def from_rows(
        cls,
        universe: Iterable[str],
        rows: Mapping[ParameterId | str, Iterable],
    ) -> CubicSoftSet:
        """Build from ``{param: [(lo, hi, fuzzy), ...]}`` in universe order.

        Handy for transcribing tables; string keys become plain parameters.
        """
        universe = tuple(universe)
        params = []
        grades = {}
        for key, cells in rows.items():
            p = key if isinstance(key, ParameterId) else ParameterId(key)
            params.append(p)
            cells = list(cells)
            if len(cells) != len(universe):
                raise ValueError(f"row {p} has {len(cells)} cells for {len(universe)} elements")
            for x, (lo, hi, fz) in zip(universe, cells):
                grades[(p, x)] = make_grade(lo, hi, fz)
        return cls(universe, tuple(params), grades)

    def __hash__(self):
        return hash((self.universe, self.params, frozenset(self.grades.items())))

    def __getitem__(self, key: tuple[ParameterId, str]) -> CubicGrade:
        return self.grades[key]

    def grade(self, param: ParameterId | str, element: str) -> CubicGrade:
        p = param if isinstance(param, ParameterId) else ParameterId(param)
        return self.grades[(p, element)]

    def cells(self) -> Iterator[tuple[ParameterId, str, CubicGrade]]:
        """Cells in (parameter order, universe order)."""
        for p in self.params:
            for x in self.universe:
                yield p, x, self.grades[(p, x)]

    def param_set(self) -> frozenset[ParameterId]:
        return frozenset(self.params)

    def restrict(self, params: Iterable[ParameterId]) -> CubicSoftSet:
        keep = [p for p in self.params if p in set(params)]
        return CubicSoftSet._trusted(
            self.universe, keep, {(p, x): self.grades[(p, x)] for p in keep for x in self.universe}
        )


class ConstantKind(Enum):
    DDOT0 = "ddot0"
    DDOT1 = "ddot1"
    HAT0 = "hat0"
    HAT1 = "hat1"


_CONSTANTS = {
    ConstantKind.DDOT0: (ZERO, ONE),
    ConstantKind.DDOT1: (ONE, ZERO),
    ConstantKind.HAT0: (ZERO, ZERO),
    ConstantKind.HAT1: (ONE, ONE),
}


def constant_cubic_soft_set(kind: ConstantKind | str, universe, params) -> CubicSoftSet:
    kind = ConstantKind(kind)
    iv, fz = _CONSTANTS[kind]
    g = CubicGrade(Interval(iv, iv), fz)
    params = [p if isinstance(p, ParameterId) else ParameterId(p) for p in params]
    universe = list(universe)
    return CubicSoftSet(universe, params, {(p, x): g for p in params for x in universe})
