"""Grade-level and soft-level operations: joins, meets, orders, products."""

from __future__ import annotations

from enum import Enum

from .core import ONE, CubicGrade, CubicSoftSet, Interval, ParameterId, _grade, negate_parameter
from .errors import ParameterSetMismatch, UniverseMismatch


class CombineKind(Enum):
    P_UNION = "p-union"
    P_INTERSECTION = "p-intersection"
    R_UNION = "r-union"
    R_INTERSECTION = "r-intersection"

    @property
    def is_union(self) -> bool:
        return self in (CombineKind.P_UNION, CombineKind.R_UNION)


class ProductKind(Enum):
    P_OR = "p-or"
    R_OR = "r-or"
    P_AND = "p-and"
    R_AND = "r-and"


class OrderKind(Enum):
    P = "p"
    R = "r"


PRODUCT_COMBINE = {
    ProductKind.P_OR: CombineKind.P_UNION,
    ProductKind.R_OR: CombineKind.R_UNION,
    ProductKind.P_AND: CombineKind.P_INTERSECTION,
    ProductKind.R_AND: CombineKind.R_INTERSECTION,
}


def rmin(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), min(a.hi, b.hi))


def rmax(a: Interval, b: Interval) -> Interval:
    return Interval(max(a.lo, b.lo), max(a.hi, b.hi))


def ivf_leq(a: Interval, b: Interval) -> bool:
    return a.lo <= b.lo and a.hi <= b.hi


# (interval uses max?, fuzzy uses max?)
_DIRECTIONS = {
    CombineKind.P_UNION: (True, True),
    CombineKind.P_INTERSECTION: (False, False),
    CombineKind.R_UNION: (True, False),
    CombineKind.R_INTERSECTION: (False, True),
}


def grade_combine(kind: CombineKind, a: CubicGrade, b: CubicGrade) -> CubicGrade:
    up_iv, up_fz = _DIRECTIONS[kind]
    x, y = a.ivf, b.ivf
    if up_iv:
        lo = x.lo if x.lo >= y.lo else y.lo
        hi = x.hi if x.hi >= y.hi else y.hi
    else:
        lo = x.lo if x.lo <= y.lo else y.lo
        hi = x.hi if x.hi <= y.hi else y.hi
    if up_fz:
        fz = a.fuzzy if a.fuzzy >= b.fuzzy else b.fuzzy
    else:
        fz = a.fuzzy if a.fuzzy <= b.fuzzy else b.fuzzy
    return _grade(lo, hi, fz)


def grade_complement(a: CubicGrade) -> CubicGrade:
    return _grade(ONE - a.ivf.hi, ONE - a.ivf.lo, ONE - a.fuzzy)


def grade_leq(kind: OrderKind, a: CubicGrade, b: CubicGrade) -> bool:
    if not ivf_leq(a.ivf, b.ivf):
        return False
    if kind is OrderKind.P:
        return a.fuzzy <= b.fuzzy
    return a.fuzzy >= b.fuzzy


def _same_universe(f: CubicSoftSet, g: CubicSoftSet) -> None:
    if f.universe != g.universe:
        raise UniverseMismatch(f.universe, g.universe)


def soft_equal(f: CubicSoftSet, g: CubicSoftSet) -> bool:
    """Equal parameter sets, equal universes and equal grades everywhere.

    List order is irrelevant here; it only fixes serialization.
    """
    if set(f.universe) != set(g.universe) or f.param_set() != g.param_set():
        return False
    return all(f.grades[(p, x)] == g.grades[(p, x)] for p in f.params for x in f.universe)


def soft_suborder(kind: OrderKind, f: CubicSoftSet, g: CubicSoftSet) -> bool:
    _same_universe(f, g)
    gp = g.param_set()
    if not all(p in gp for p in f.params):
        return False
    return all(
        grade_leq(kind, f.grades[(p, x)], g.grades[(p, x)]) for p in f.params for x in f.universe
    )


def soft_combine(kind: CombineKind, f: CubicSoftSet, g: CubicSoftSet) -> CubicSoftSet:
    _same_universe(f, g)
    gp = g.param_set()
    universe = f.universe
    grades = {}
    if kind.is_union:
        fp = f.param_set()
        params = list(f.params) + [p for p in g.params if p not in fp]
        for p in params:
            in_f, in_g = p in fp, p in gp
            for x in universe:
                if in_f and in_g:
                    grades[(p, x)] = grade_combine(kind, f.grades[(p, x)], g.grades[(p, x)])
                elif in_f:
                    grades[(p, x)] = f.grades[(p, x)]
                else:
                    grades[(p, x)] = g.grades[(p, x)]
    else:
        params = [p for p in f.params if p in gp]
        for p in params:
            for x in universe:
                grades[(p, x)] = grade_combine(kind, f.grades[(p, x)], g.grades[(p, x)])
    return CubicSoftSet._trusted(universe, params, grades)


def p_union(f, g):
    return soft_combine(CombineKind.P_UNION, f, g)


def p_intersection(f, g):
    return soft_combine(CombineKind.P_INTERSECTION, f, g)


def r_union(f, g):
    return soft_combine(CombineKind.R_UNION, f, g)


def r_intersection(f, g):
    return soft_combine(CombineKind.R_INTERSECTION, f, g)


def soft_product(kind: ProductKind, f: CubicSoftSet, g: CubicSoftSet) -> CubicSoftSet:
    """Parameters are I x J in row-major order, named ``(a,b)``."""
    _same_universe(f, g)
    combine = PRODUCT_COMBINE[kind]
    params = []
    grades = {}
    for a in f.params:
        for b in g.params:
            ab = ParameterId.product(a, b)
            params.append(ab)
            for x in f.universe:
                grades[(ab, x)] = grade_combine(combine, f.grades[(a, x)], g.grades[(b, x)])
    return CubicSoftSet(f.universe, params, grades)


def soft_complement(f: CubicSoftSet) -> CubicSoftSet:
    params = [negate_parameter(p) for p in f.params]
    grades = {
        (np, x): grade_complement(f.grades[(p, x)])
        for p, np in zip(f.params, params)
        for x in f.universe
    }
    return CubicSoftSet._trusted(f.universe, params, grades)


def star_swap(f: CubicSoftSet, g: CubicSoftSet) -> tuple[CubicSoftSet, CubicSoftSet]:
    """Exchange fuzzy components: F* = (A, mu), G* = (B, lambda)."""
    _same_universe(f, g)
    if f.param_set() != g.param_set():
        raise ParameterSetMismatch(f.params, g.params)
    fs, gs = {}, {}
    for p in f.params:
        for x in f.universe:
            a, b = f.grades[(p, x)], g.grades[(p, x)]
            fs[(p, x)] = CubicGrade(a.ivf, b.fuzzy)
            gs[(p, x)] = CubicGrade(b.ivf, a.fuzzy)
    return (
        CubicSoftSet._trusted(f.universe, f.params, fs),
        CubicSoftSet._trusted(g.universe, g.params, gs),
    )
