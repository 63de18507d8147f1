"""Internal/external classification and the closure-theorem hypotheses."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .algebra import star_swap
from .core import CubicGrade, CubicSoftSet, ParameterId
from .errors import NotBothInternalExternal, UniverseMismatch

Cell = tuple[ParameterId, str]


def is_internal_grade(g: CubicGrade) -> bool:
    return g.ivf.lo <= g.fuzzy <= g.ivf.hi


def is_external_grade(g: CubicGrade) -> bool:
    # boundary values count as external: only the open interval is excluded
    return not (g.ivf.lo < g.fuzzy < g.ivf.hi)


@dataclass(frozen=True)
class Classification:
    internal: bool
    external: bool
    internal_violations: tuple[Cell, ...]
    external_violations: tuple[Cell, ...]

    def to_json(self) -> dict:
        def cells(vs):
            return [{"parameter": p.label, "element": x} for p, x in vs]

        return {
            "internal": self.internal,
            "external": self.external,
            "internal_violations": cells(self.internal_violations),
            "external_violations": cells(self.external_violations),
        }


def classify(f: CubicSoftSet) -> Classification:
    not_int, not_ext = [], []
    for p, x, g in f.cells():
        if not is_internal_grade(g):
            not_int.append((p, x))
        if not is_external_grade(g):
            not_ext.append((p, x))
    return Classification(not not_int, not not_ext, tuple(not_int), tuple(not_ext))


def is_icss(f: CubicSoftSet) -> bool:
    return all(is_internal_grade(g) for g in f.grades.values())


def is_ecss(f: CubicSoftSet) -> bool:
    return all(is_external_grade(g) for g in f.grades.values())


def theorem1_witness(f: CubicSoftSet) -> Cell | None:
    """First cell with A-(x) < lambda(x) < A+(x), or None when F is external."""
    for p, x, g in f.cells():
        if g.ivf.lo < g.fuzzy < g.ivf.hi:
            return p, x
    return None


@dataclass(frozen=True)
class BoundaryCell:
    param: ParameterId
    element: str
    in_global_bounds: bool
    on_own_endpoint: bool


@dataclass(frozen=True)
class BoundaryReport:
    """``holds`` is the global-bounds claim; ``pointwise_holds`` the per-cell one."""

    holds: bool
    pointwise_holds: bool
    cells: tuple[BoundaryCell, ...]

    def __bool__(self) -> bool:
        return self.holds


def theorem2_boundary_check(f: CubicSoftSet) -> BoundaryReport:
    c = classify(f)
    if not (c.internal and c.external):
        raise NotBothInternalExternal(
            f"expected a set that is both internal and external (internal={c.internal}, "
            f"external={c.external})"
        )
    cells = []
    for p in f.params:
        bounds = set()
        for x in f.universe:
            g = f.grades[(p, x)]
            bounds.add(g.ivf.lo)
            bounds.add(g.ivf.hi)
        for x in f.universe:
            g = f.grades[(p, x)]
            cells.append(
                BoundaryCell(p, x, g.fuzzy in bounds, g.fuzzy in (g.ivf.lo, g.ivf.hi))
            )
    return BoundaryReport(
        all(c.in_global_bounds for c in cells),
        all(c.on_own_endpoint for c in cells),
        tuple(cells),
    )


class TheoremId(Enum):
    PU_ICSS = "T-PU-ICSS"
    PI_ICSS = "T-PI-ICSS"
    COMP_ICSS = "T-COMP-ICSS"
    COMP_ECSS = "T-COMP-ECSS"
    RU_ICSS = "T-RU-ICSS"
    RI_ICSS = "T-RI-ICSS"
    STAR_PU_ICSS = "T-STAR-PU-ICSS"
    STAR_PI_ICSS = "T-STAR-PI-ICSS"
    STAR_PU_ECSS = "T-STAR-PU-ECSS"
    PI_ECSS = "T-PI-ECSS"
    PI_BOTH = "T-PI-BOTH"
    PU_ECSS = "T-PU-ECSS"
    RU_ECSS = "T-RU-ECSS"
    RI_ECSS = "T-RI-ECSS"
    RI_BOTH = "T-RI-BOTH"
    ICSS_RU_ECSS = "T-ICSS-RU-ECSS"
    ICSS_RI_ECSS = "T-ICSS-RI-ECSS"


class Interpretation(Enum):
    AS_WRITTEN = "as-written"
    OPEN_OPEN = "open-open"
    CLOSED_CLOSED = "closed-closed"


class Premise(Enum):
    NONE = "none"
    ICSS = "icss"
    ECSS = "ecss"
    STAR_ICSS = "star-icss"  # F, G external and F*, G* internal
    STAR_ECSS = "star-ecss"  # F, G, F*, G* all external


class CondKind(Enum):
    LOWER_MAX_LE = "max(A-,B-) <= t"
    UPPER_MIN_GE = "min(A+,B+) >= t"
    LE_LOWER_MAX = "t <= max(A-,B-)"
    GE_UPPER_MIN = "t >= min(A+,B+)"
    BRACKET = "beta ~ t ~ alpha"
    EQUAL_CHAIN = "alpha = t = beta"


@dataclass(frozen=True)
class Condition:
    kind: CondKind
    term: str  # "meet" (lambda ^ mu) or "join" (lambda v mu)
    # written closedness of the (beta side, alpha side) brackets
    written: tuple[bool, bool] | None = None


@dataclass(frozen=True)
class TheoremSpec:
    id: TheoremId
    unary: bool
    premise: Premise
    condition: Condition | None
    operation: str  # name understood by the verify module
    conclusion: str  # "icss", "ecss" or "both"


_R = TheoremId
_P = Premise
_C = CondKind

REGISTRY: dict[TheoremId, TheoremSpec] = {
    s.id: s
    for s in [
        TheoremSpec(_R.PU_ICSS, False, _P.ICSS, None, "p-union", "icss"),
        TheoremSpec(_R.PI_ICSS, False, _P.ICSS, None, "p-intersection", "icss"),
        TheoremSpec(_R.COMP_ICSS, True, _P.ICSS, None, "complement", "icss"),
        TheoremSpec(_R.COMP_ECSS, True, _P.ECSS, None, "complement", "ecss"),
        TheoremSpec(_R.RU_ICSS, False, _P.ICSS, Condition(_C.LOWER_MAX_LE, "meet"), "r-union", "icss"),
        TheoremSpec(_R.RI_ICSS, False, _P.ICSS, Condition(_C.UPPER_MIN_GE, "join"), "r-intersection", "icss"),
        TheoremSpec(_R.STAR_PU_ICSS, False, _P.STAR_ICSS, None, "p-union", "icss"),
        TheoremSpec(_R.STAR_PI_ICSS, False, _P.STAR_ICSS, None, "p-intersection", "icss"),
        TheoremSpec(_R.STAR_PU_ECSS, False, _P.STAR_ECSS, None, "p-union", "ecss"),
        TheoremSpec(_R.PI_ECSS, False, _P.ECSS, Condition(_C.BRACKET, "meet", (False, True)), "p-intersection", "ecss"),
        TheoremSpec(_R.PU_ECSS, False, _P.ECSS, Condition(_C.BRACKET, "join", (True, False)), "p-union", "ecss"),
        TheoremSpec(_R.RU_ECSS, False, _P.ECSS, Condition(_C.BRACKET, "meet", (True, False)), "r-union", "ecss"),
        TheoremSpec(_R.RI_ECSS, False, _P.ECSS, Condition(_C.BRACKET, "join", (False, True)), "r-intersection", "ecss"),
        TheoremSpec(_R.PI_BOTH, False, _P.NONE, Condition(_C.EQUAL_CHAIN, "meet"), "p-intersection", "both"),
        TheoremSpec(_R.RI_BOTH, False, _P.NONE, Condition(_C.EQUAL_CHAIN, "join"), "r-intersection", "both"),
        TheoremSpec(_R.ICSS_RU_ECSS, False, _P.ICSS, Condition(_C.LE_LOWER_MAX, "meet"), "r-union", "ecss"),
        TheoremSpec(_R.ICSS_RI_ECSS, False, _P.ICSS, Condition(_C.GE_UPPER_MIN, "join"), "r-intersection", "ecss"),
    ]
}

BRACKET_THEOREMS = tuple(t for t, s in REGISTRY.items() if s.condition and s.condition.kind is _C.BRACKET)


def alpha_beta(a: CubicGrade, b: CubicGrade) -> tuple[Fraction, Fraction]:
    """alpha = min{max{A+,B-}, max{A-,B+}}, beta = max{min{A+,B-}, min{A-,B+}}.

    alpha >= beta always holds, so the condition set runs from beta up to alpha.
    """
    al, ah, bl, bh = a.ivf.lo, a.ivf.hi, b.ivf.lo, b.ivf.hi
    return min(max(ah, bl), max(al, bh)), max(min(ah, bl), min(al, bh))


def bracket_closedness(cond: Condition, interp: Interpretation) -> tuple[bool, bool]:
    if interp is Interpretation.OPEN_OPEN:
        return False, False
    if interp is Interpretation.CLOSED_CLOSED:
        return True, True
    return cond.written


@dataclass(frozen=True)
class CellCheck:
    param: ParameterId
    element: str
    value: Fraction
    holds: bool
    vacuous: bool = False
    alpha: Fraction | None = None
    beta: Fraction | None = None


def _check_cell(cond: Condition, a: CubicGrade, b: CubicGrade, interp: Interpretation):
    t = min(a.fuzzy, b.fuzzy) if cond.term == "meet" else max(a.fuzzy, b.fuzzy)
    k = cond.kind
    if k is _C.LOWER_MAX_LE:
        return t, max(a.ivf.lo, b.ivf.lo) <= t, False, None, None
    if k is _C.UPPER_MIN_GE:
        return t, min(a.ivf.hi, b.ivf.hi) >= t, False, None, None
    if k is _C.LE_LOWER_MAX:
        return t, t <= max(a.ivf.lo, b.ivf.lo), False, None, None
    if k is _C.GE_UPPER_MIN:
        return t, t >= min(a.ivf.hi, b.ivf.hi), False, None, None
    alpha, beta = alpha_beta(a, b)
    if k is _C.EQUAL_CHAIN:
        return t, alpha == t == beta, False, alpha, beta
    lo_closed, hi_closed = bracket_closedness(cond, interp)
    empty = beta > alpha or (beta == alpha and not (lo_closed and hi_closed))
    above = beta <= t if lo_closed else beta < t
    below = t <= alpha if hi_closed else t < alpha
    return t, above and below, empty, alpha, beta


def _require_same_universe(f: CubicSoftSet, g: CubicSoftSet) -> None:
    if f.universe != g.universe:
        raise UniverseMismatch(f.universe, g.universe)


def condition_report(
    tid: TheoremId,
    f: CubicSoftSet,
    g: CubicSoftSet,
    interpretation: Interpretation = Interpretation.AS_WRITTEN,
) -> list[CellCheck]:
    """Per-cell evaluation of a theorem's side condition over shared parameters.

    Cells whose condition set is empty are flagged ``vacuous``.
    """
    cond = REGISTRY[tid].condition
    if cond is None:
        return []
    _require_same_universe(f, g)
    gp = g.param_set()
    out = []
    for p in f.params:
        if p not in gp:
            continue
        for x in f.universe:
            t, ok, empty, alpha, beta = _check_cell(cond, f.grades[(p, x)], g.grades[(p, x)], interpretation)
            out.append(CellCheck(p, x, t, ok, empty, alpha, beta))
    return out


def side_condition(
    tid: TheoremId,
    f: CubicSoftSet,
    g: CubicSoftSet,
    interpretation: Interpretation = Interpretation.AS_WRITTEN,
) -> bool:
    """Only the cellwise inequality part of a hypothesis (no class premises)."""
    cond = REGISTRY[tid].condition
    if cond is None:
        return True
    _require_same_universe(f, g)
    gp = g.param_set()
    for p in f.params:
        if p not in gp:
            continue
        for x in f.universe:
            if not _check_cell(cond, f.grades[(p, x)], g.grades[(p, x)], interpretation)[1]:
                return False
    return True


def hypothesis(
    tid: TheoremId,
    f: CubicSoftSet,
    g: CubicSoftSet | None = None,
    interpretation: Interpretation = Interpretation.AS_WRITTEN,
) -> bool:
    """Full premise of a theorem: class requirements plus side condition."""
    spec = REGISTRY[tid]
    if spec.unary:
        return is_icss(f) if spec.premise is _P.ICSS else is_ecss(f)
    if g is None:
        raise TypeError(f"{tid.value} needs two operands")
    _require_same_universe(f, g)
    if spec.premise in (_P.STAR_ICSS, _P.STAR_ECSS):
        fs, gs = star_swap(f, g)
        if not (is_ecss(f) and is_ecss(g)):
            return False
        starred = is_icss if spec.premise is _P.STAR_ICSS else is_ecss
        return starred(fs) and starred(gs)
    if spec.premise is _P.ICSS and not (is_icss(f) and is_icss(g)):
        return False
    if spec.premise is _P.ECSS and not (is_ecss(f) and is_ecss(g)):
        return False
    return side_condition(tid, f, g, interpretation)
