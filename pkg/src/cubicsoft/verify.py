"""Finite-instance checking of the closure theorems.

Campaigns enumerate (or sample) operand pairs on a rational grid, evaluate
each theorem's hypothesis and conclusion, and aggregate the verdicts into a
deterministic report.  Work is split into fixed-size chunks by instance
index; chunks merge in index order, so the report never depends on how many
workers ran them.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import algebra
from .algebra import CombineKind, OrderKind, soft_combine, soft_complement, soft_equal, soft_suborder, star_swap
from .classify import (
    REGISTRY,
    Interpretation,
    TheoremId,
    condition_report,
    hypothesis,
    is_external_grade,
    is_internal_grade,
)
from .core import CubicGrade, CubicSoftSet, Interval, ParameterId, _grade, format_unit
from .document import to_document
from .errors import CampaignTooLarge

DEFAULT_CAP = 10**8
DEFAULT_MAX_COUNTEREXAMPLES = 20
CHUNK = 1000


def campaign_cap() -> int:
    env = os.environ.get("CSS_MAX_CAMPAIGN")
    return int(env) if env else DEFAULT_CAP


@lru_cache(maxsize=None)
def grid(k: int) -> tuple[Fraction, ...]:
    if k < 1:
        raise ValueError("grid needs k >= 1")
    return tuple(Fraction(i, k) for i in range(k + 1))


@lru_cache(maxsize=None)
def grid_intervals(k: int) -> tuple[Interval, ...]:
    g = grid(k)
    return tuple(Interval(g[i], g[j]) for i in range(k + 1) for j in range(i, k + 1))


@lru_cache(maxsize=None)
def enumerate_grades(k: int) -> tuple[CubicGrade, ...]:
    """All grades <[lo,hi],d> on the grid {0, 1/k, ..., 1}, intervals outermost."""
    return tuple(CubicGrade(iv, d) for iv in grid_intervals(k) for d in grid(k))


# -- instance shapes -------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    steps: int
    universe_size: int = 1
    shared_params: int = 1
    left_only: int = 0
    right_only: int = 0

    def to_json(self) -> dict:
        return {
            "kind": "exhaustive",
            "steps": self.steps,
            "universe_size": self.universe_size,
            "shared_params": self.shared_params,
            "left_only": self.left_only,
            "right_only": self.right_only,
        }


@dataclass(frozen=True)
class RandomSpec:
    samples: int
    seed: int
    universe_size: int = 1
    shared_params: int = 1
    left_only: int = 0
    right_only: int = 0
    constrained: bool = False
    steps: int = 100
    retry_cap: int = 1000

    def to_json(self) -> dict:
        return {
            "kind": "random",
            "samples": self.samples,
            "steps": self.steps,
            "universe_size": self.universe_size,
            "shared_params": self.shared_params,
            "left_only": self.left_only,
            "right_only": self.right_only,
            "constrained": self.constrained,
            "retry_cap": self.retry_cap,
        }


def _shape(spec: GridSpec | RandomSpec):
    universe = tuple(f"x{i + 1}" for i in range(spec.universe_size))
    shared = [ParameterId(f"e{i + 1}") for i in range(spec.shared_params)]
    left = tuple(shared + [ParameterId(f"f{i + 1}") for i in range(spec.left_only)])
    right = tuple(shared + [ParameterId(f"g{i + 1}") for i in range(spec.right_only)])
    return universe, left, right


def _build(universe, params, grades_seq) -> CubicSoftSet:
    it = iter(grades_seq)
    return CubicSoftSet._trusted(universe, params, {(p, x): next(it) for p in params for x in universe})


# -- verdicts --------------------------------------------------------------


@dataclass(frozen=True)
class TheoremVerdict:
    hypothesis: bool
    conclusion: bool
    witness: tuple[ParameterId, str] | None = None


OPERATIONS: dict[str, Callable[..., CubicSoftSet]] = {
    "p-union": algebra.p_union,
    "p-intersection": algebra.p_intersection,
    "r-union": algebra.r_union,
    "r-intersection": algebra.r_intersection,
    "complement": soft_complement,
}

_CONCLUSIONS: dict[str, Callable[[CubicGrade], bool]] = {
    "icss": is_internal_grade,
    "ecss": is_external_grade,
    "both": lambda g: is_internal_grade(g) and is_external_grade(g),
}


def check_theorem(
    tid: TheoremId,
    f: CubicSoftSet,
    g: CubicSoftSet | None = None,
    interpretation: Interpretation = Interpretation.AS_WRITTEN,
) -> TheoremVerdict:
    spec = REGISTRY[tid]
    hyp = hypothesis(tid, f, g, interpretation)
    op = OPERATIONS[spec.operation]
    result = op(f) if spec.unary else op(f, g)
    ok = _CONCLUSIONS[spec.conclusion]
    bad = next(((p, x) for p, x, gr in result.cells() if not ok(gr)), None)
    return TheoremVerdict(hyp, bad is None, bad if hyp else None)


# -- campaign reports ------------------------------------------------------


@dataclass
class CampaignReport:
    theorem: TheoremId
    interpretation: Interpretation
    mode: dict
    instances_tested: int = 0
    hypothesis_holds: int = 0
    conclusion_holds_given_hypothesis: int = 0
    counterexample_count: int = 0
    counterexamples: list = field(default_factory=list)
    vacuous_cells: int = 0
    seed: int | None = None
    draws: int = 0
    rejected_draws: int = 0

    @property
    def clean(self) -> bool:
        return self.counterexample_count == 0

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem.value,
            "interpretation": self.interpretation.value,
            "mode": self.mode,
            "seed": self.seed,
            "instances_tested": self.instances_tested,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds_given_hypothesis": self.conclusion_holds_given_hypothesis,
            "counterexample_count": self.counterexample_count,
            "counterexamples": self.counterexamples,
            "vacuous_cells": self.vacuous_cells,
        }
        if self.mode.get("kind") == "random":
            rate = Fraction(self.rejected_draws, self.draws) if self.draws else Fraction(0)
            out["rejection"] = {
                "draws": self.draws,
                "rejected": self.rejected_draws,
                "rate": format_unit(rate),
            }
        return out


@dataclass
class _Partial:
    tested: int = 0
    hyp: int = 0
    concl: int = 0
    cex_count: int = 0
    cex: list = field(default_factory=list)
    vacuous: int = 0
    draws: int = 0
    rejected: int = 0


def _evaluate(tid, interp, f, g, tag, part: _Partial, limit: int) -> None:
    spec = REGISTRY[tid]
    v = check_theorem(tid, f, g, interp)
    part.tested += 1
    if spec.condition is not None and not spec.unary:
        part.vacuous += sum(c.vacuous for c in condition_report(tid, f, g, interp))
    if not v.hypothesis:
        return
    part.hyp += 1
    if v.conclusion:
        part.concl += 1
        return
    part.cex_count += 1
    if len(part.cex) < limit:
        entry = {
            "instance": tag,
            "F": to_document(f),
            "witness": {"parameter": v.witness[0].label, "element": v.witness[1]},
        }
        if g is not None:
            entry["G"] = to_document(g)
        part.cex.append(entry)


def _exhaustive_chunk(args) -> _Partial:
    tid, interp, spec, start, stop, limit = args
    unary = REGISTRY[tid].unary
    grades = enumerate_grades(spec.steps)
    n = len(grades)
    universe, left, right = _shape(spec)
    nf = len(universe) * len(left)
    ng = 0 if unary else len(universe) * len(right)
    part = _Partial()
    for idx in range(start, stop):
        digits = []
        r = idx
        for _ in range(nf + ng):
            r, d = divmod(r, n)
            digits.append(grades[d])
        # most significant digit first so enumeration order is lexicographic
        digits.reverse()
        f = _build(universe, left, digits[:nf])
        g = None if unary else _build(universe, right, digits[nf:])
        _evaluate(tid, interp, f, g, idx, part, limit)
    return part


class _Sampler:
    def __init__(self, rng: random.Random, k: int):
        self.rng = rng
        self.k = k
        self.intervals = grid_intervals(k)
        self.values = grid(k)

    def grade(self) -> CubicGrade:
        iv = self.rng.choice(self.intervals)
        return _grade(iv.lo, iv.hi, self.rng.choice(self.values))

    def soft_set(self, universe, params) -> CubicSoftSet:
        return CubicSoftSet._trusted(
            universe, params, {(p, x): self.grade() for p in params for x in universe}
        )


def _random_chunk(args) -> _Partial:
    tid, interp, spec, chunk_index, start, stop, limit = args
    unary = REGISTRY[tid].unary
    sampler = _Sampler(random.Random(f"{spec.seed}:{chunk_index}"), spec.steps)
    universe, left, right = _shape(spec)
    part = _Partial()
    for idx in range(start, stop):
        for _attempt in range(spec.retry_cap if spec.constrained else 1):
            f = sampler.soft_set(universe, left)
            g = None if unary else sampler.soft_set(universe, right)
            part.draws += 1
            if not spec.constrained or hypothesis(tid, f, g, interp):
                break
            part.rejected += 1
        _evaluate(tid, interp, f, g, idx, part, limit)
    return part


def campaign_size(tid: TheoremId, spec: GridSpec) -> int:
    universe, left, right = _shape(spec)
    cells = len(universe) * len(left)
    if not REGISTRY[tid].unary:
        cells += len(universe) * len(right)
    return len(enumerate_grades(spec.steps)) ** cells


def run_campaign(
    tid: TheoremId | str,
    mode: GridSpec | RandomSpec,
    interpretation: Interpretation | str = Interpretation.AS_WRITTEN,
    *,
    cap: int | None = None,
    max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES,
    workers: int = 1,
) -> CampaignReport:
    tid = TheoremId(tid)
    interpretation = Interpretation(interpretation)
    limit = max_counterexamples
    if isinstance(mode, GridSpec):
        total = campaign_size(tid, mode)
        cap = campaign_cap() if cap is None else cap
        if total > cap:
            raise CampaignTooLarge(total, cap)
        jobs = [
            (tid, interpretation, mode, s, min(s + CHUNK, total), limit)
            for s in range(0, total, CHUNK)
        ]
        worker = _exhaustive_chunk
        seed = None
    else:
        total = mode.samples
        jobs = [
            (tid, interpretation, mode, i, s, min(s + CHUNK, total), limit)
            for i, s in enumerate(range(0, total, CHUNK))
        ]
        worker = _random_chunk
        seed = mode.seed
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(worker, jobs))
    else:
        parts = [worker(j) for j in jobs]

    report = CampaignReport(tid, interpretation, mode.to_json(), seed=seed)
    for p in parts:
        report.instances_tested += p.tested
        report.hypothesis_holds += p.hyp
        report.conclusion_holds_given_hypothesis += p.concl
        report.counterexample_count += p.cex_count
        report.vacuous_cells += p.vacuous
        report.draws += p.draws
        report.rejected_draws += p.rejected
        room = limit - len(report.counterexamples)
        report.counterexamples.extend(p.cex[: max(room, 0)])
    return report


def run_all_interpretations(tid, mode, **kw) -> dict[Interpretation, CampaignReport]:
    return {i: run_campaign(tid, mode, i, **kw) for i in Interpretation}


def interpretation_summary(reports: dict[Interpretation, CampaignReport]) -> dict:
    """Combined document naming the interpretations that came out clean."""
    first = next(iter(reports.values()))
    return {
        "theorem": first.theorem.value,
        "reports": {i.value: r.to_json() for i, r in reports.items()},
        "clean_interpretations": [
            i.value for i, r in reports.items() if r.clean and r.hypothesis_holds > 0
        ],
    }


# -- constructed instances for order properties ----------------------------


def _units(q: Fraction, k: int) -> int:
    return q.numerator * (k // q.denominator)


class OrderedSampler(_Sampler):
    """Generates sets already related by an order, by shrinking or growing grades."""

    def shrink(self, g: CubicGrade, kind: OrderKind) -> CubicGrade:
        k, r, v = self.k, self.rng, self.values
        lo, hi, d = _units(g.ivf.lo, k), _units(g.ivf.hi, k), _units(g.fuzzy, k)
        h = r.randint(0, hi)
        lo2 = r.randint(0, min(lo, h))
        d2 = r.randint(0, d) if kind is OrderKind.P else r.randint(d, k)
        return _grade(v[lo2], v[h], v[d2])

    def grow(self, g: CubicGrade, kind: OrderKind) -> CubicGrade:
        k, r, v = self.k, self.rng, self.values
        lo, hi, d = _units(g.ivf.lo, k), _units(g.ivf.hi, k), _units(g.fuzzy, k)
        h = r.randint(hi, k)
        lo2 = r.randint(lo, h)
        d2 = r.randint(d, k) if kind is OrderKind.P else r.randint(0, d)
        return _grade(v[lo2], v[h], v[d2])

    def params(self, pool) -> list[ParameterId]:
        chosen = [p for p in pool if self.rng.random() < 0.6]
        return chosen or [self.rng.choice(pool)]

    def sub(self, g: CubicSoftSet, kind: OrderKind, keep_all: bool = False) -> CubicSoftSet:
        params = list(g.params) if keep_all or not g.params else self.params(g.params)
        return CubicSoftSet._trusted(
            g.universe,
            params,
            {(p, x): self.shrink(g.grades[(p, x)], kind) for p in params for x in g.universe},
        )

    def sup(self, f: CubicSoftSet, kind: OrderKind, pool) -> CubicSoftSet:
        have = f.param_set()
        params = list(f.params) + [p for p in pool if p not in have and self.rng.random() < 0.5]
        grades = {}
        for p in params:
            for x in f.universe:
                grades[(p, x)] = self.grow(f.grades[(p, x)], kind) if p in have else self.grade()
        return CubicSoftSet._trusted(f.universe, params, grades)


PARAM_POOL = tuple(ParameterId(f"e{i}") for i in range(1, 5))

PROPOSITIONS = {
    1: "P-order is transitive",
    2: "complement reverses P-order when I=J",
    3: "F below G and E gives F below the P-intersection of G and E",
    4: "F and E below G gives their P-union below G",
    5: "P-union and P-intersection are monotone in both arguments",
    6: "R-order is transitive",
    7: "complement reverses R-order when I=J",
    8: "F below G and E gives F below the R-intersection of G and E",
    9: "F and E below G gives their R-union below G",
    10: "R-union and R-intersection are monotone in both arguments",
}


def _proposition_instance(n: int, s: OrderedSampler, universe) -> bool:
    kind = OrderKind.P if n <= 5 else OrderKind.R
    union = CombineKind.P_UNION if kind is OrderKind.P else CombineKind.R_UNION
    inter = CombineKind.P_INTERSECTION if kind is OrderKind.P else CombineKind.R_INTERSECTION
    m = (n - 1) % 5 + 1
    pool = PARAM_POOL

    def fresh():
        return s.soft_set(universe, s.params(pool))

    if m == 1:
        e = fresh()
        g = s.sub(e, kind)
        f = s.sub(g, kind)
        return soft_suborder(kind, f, g) and soft_suborder(kind, g, e) and soft_suborder(kind, f, e)
    if m == 2:
        g = fresh()
        f = s.sub(g, kind, keep_all=True)
        return soft_suborder(kind, f, g) and soft_suborder(kind, soft_complement(g), soft_complement(f))
    if m == 3:
        f = fresh()
        g = s.sup(f, kind, pool)
        e = s.sup(f, kind, pool)
        return soft_suborder(kind, f, soft_combine(inter, g, e))
    if m == 4:
        g = fresh()
        f = s.sub(g, kind)
        e = s.sub(g, kind)
        return soft_suborder(kind, soft_combine(union, f, e), g)
    g = fresh()
    t = fresh()
    f = s.sub(g, kind)
    e = s.sub(t, kind)
    return soft_suborder(kind, soft_combine(union, f, e), soft_combine(union, g, t)) and soft_suborder(
        kind, soft_combine(inter, f, e), soft_combine(inter, g, t)
    )


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: int
    failed: int

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "failed": self.failed}


def _universe(rng: random.Random):
    return tuple(f"x{i + 1}" for i in range(rng.randint(1, 3)))


def proposition_suite(samples: int, seed: int, steps: int = 100) -> dict[int, PropertyResult]:
    out = {}
    for n, name in PROPOSITIONS.items():
        s = OrderedSampler(random.Random(f"{seed}:prop{n}"), steps)
        ok = sum(_proposition_instance(n, s, _universe(s.rng)) for _ in range(samples))
        out[n] = PropertyResult(name, ok, samples - ok)
    return out


# -- algebraic laws --------------------------------------------------------


def _law_instance(law: str, s: _Sampler) -> bool:
    universe = _universe(s.rng)
    f = s.soft_set(universe, s.params(PARAM_POOL))
    if law == "commutativity":
        g = s.soft_set(universe, s.params(PARAM_POOL))
        return all(soft_equal(soft_combine(k, f, g), soft_combine(k, g, f)) for k in CombineKind)
    if law == "idempotence":
        return all(soft_combine(k, f, f) == f for k in CombineKind)
    if law == "de-morgan":
        a, b = s.grade(), s.grade()
        c = algebra.grade_complement
        return c(algebra.grade_combine(CombineKind.P_UNION, a, b)) == algebra.grade_combine(
            CombineKind.P_INTERSECTION, c(a), c(b)
        ) and c(algebra.grade_combine(CombineKind.R_UNION, a, b)) == algebra.grade_combine(
            CombineKind.R_INTERSECTION, c(a), c(b)
        )
    if law == "complement-involution":
        return soft_complement(soft_complement(f)) == f
    if law == "star-swap-involution":
        g = s.soft_set(universe, f.params)
        return star_swap(*star_swap(f, g)) == (f, g)
    raise ValueError(law)


LAWS = ("commutativity", "idempotence", "de-morgan", "complement-involution", "star-swap-involution")


def law_suite(samples: int, seed: int, steps: int = 100) -> dict[str, PropertyResult]:
    out = {}
    for law in LAWS:
        s = OrderedSampler(random.Random(f"{seed}:{law}"), steps)
        ok = sum(_law_instance(law, s) for _ in range(samples))
        out[law] = PropertyResult(law, ok, samples - ok)
    return out


def random_soft_set(rng: random.Random, steps: int = 100, max_universe: int = 3) -> CubicSoftSet:
    """Random document-ready set: random universe, params possibly negated or paired."""
    s = OrderedSampler(rng, steps)
    universe = tuple(f"x{i + 1}" for i in range(rng.randint(0, max_universe)))
    params = []
    for p in PARAM_POOL:
        roll = rng.random()
        if roll < 0.4:
            params.append(p)
        elif roll < 0.6:
            params.append(ParameterId(p.name, True))
        elif roll < 0.7:
            params.append(ParameterId.product(p, ParameterId(rng.choice("ab"), rng.random() < 0.5)))
    return s.soft_set(universe, params)
