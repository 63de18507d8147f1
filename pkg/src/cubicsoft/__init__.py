"""Exact algebra of cubic soft sets, with classification and theorem checking."""

from .algebra import (
    CombineKind,
    OrderKind,
    ProductKind,
    grade_combine,
    grade_complement,
    ivf_leq,
    p_intersection,
    p_union,
    r_intersection,
    r_union,
    rmax,
    rmin,
    soft_combine,
    soft_complement,
    soft_equal,
    soft_product,
    soft_suborder,
    star_swap,
)
from .classify import (
    Classification,
    Interpretation,
    TheoremId,
    classify,
    hypothesis,
    theorem1_witness,
    theorem2_boundary_check,
)
from .core import (
    ConstantKind,
    CubicGrade,
    CubicSoftSet,
    Interval,
    ParameterId,
    constant_cubic_soft_set,
    format_unit,
    make_grade,
    negate_parameter,
    parse_unit_value,
)
from .document import dump_json, dumps, from_document, load_cubic_soft_set, to_document
from .verify import GridSpec, RandomSpec, check_theorem, enumerate_grades, run_campaign

__all__ = [
    "check_theorem",
    "Classification",
    "classify",
    "CombineKind",
    "constant_cubic_soft_set",
    "ConstantKind",
    "CubicGrade",
    "CubicSoftSet",
    "dump_json",
    "dumps",
    "enumerate_grades",
    "format_unit",
    "from_document",
    "grade_combine",
    "grade_complement",
    "GridSpec",
    "hypothesis",
    "Interpretation",
    "Interval",
    "ivf_leq",
    "load_cubic_soft_set",
    "make_grade",
    "negate_parameter",
    "OrderKind",
    "p_intersection",
    "p_union",
    "ParameterId",
    "parse_unit_value",
    "ProductKind",
    "r_intersection",
    "r_union",
    "RandomSpec",
    "rmax",
    "rmin",
    "run_campaign",
    "soft_combine",
    "soft_complement",
    "soft_equal",
    "soft_product",
    "soft_suborder",
    "star_swap",
    "theorem1_witness",
    "theorem2_boundary_check",
    "TheoremId",
    "to_document",
]
