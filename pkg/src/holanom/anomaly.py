"""Anomaly polynomials of twisted theories: computation and classification.

The top-degree component of Td * ch(V) on a dimension-n space is the
complete one-loop anomaly of the twisted theory built on V.  Its monomials
split into three buckets that answer different questions:

  pure gauge      -- monomials in s2, s3, f1 only: the internal obstruction
                     to quantizing the gauge theory at all;
  mixed           -- monomials containing both a gravitational and a gauge
                     generator: the obstruction to a background of
                     holomorphic vector fields;
  gravitational   -- monomials in the g's only: the residual central
                     charges once the other two buckets vanish.

In dimension 2 the gravitational bucket is spanned by g1*g2 and g1^3 with
coefficients a_hol and c_hol; in dimension 1 it is spanned by g1^2, with
c = 24 times its coefficient in the standard Virasoro normalization.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import univariate
from .chern import (
    FieldContent,
    GAUGE_GENERATOR_DEGREES,
    GaugeGroup,
    ch_content,
    gravitational_context,
    todd,
    trivial,
    twist_context,
    untwisted_context,
)
from .ring import (
    GeneratorMismatch,
    GeneratorSet,
    GradedPoly,
    Rational,
    RationalLike,
    format_rational,
    homogeneous_monomials,
)
from .theory import (
    Chiral,
    Hyper,
    N2Vector,
    N4Vector,
    Theory,
    Vector,
    interpolate_in_r,
    twist_content,
)

GAUGE_GENERATORS = frozenset(GAUGE_GENERATOR_DEGREES)


def context_for_content(content: FieldContent) -> GeneratorSet:
    """Smallest twist context able to carry the content's Chern character."""
    simple = any(a.rep.t2 or a.rep.t3 for _, a in content.pieces)
    abelian = any(a.rep.q for _, a in content.pieces)
    return twist_context(content.dimension, simple=simple, abelian=abelian)


def context_for_theory(theory: Theory) -> GeneratorSet:
    """Twist context determined by a theory's declared gauge data."""
    return twist_context(
        theory.dimension,
        simple=theory.gauge.su is not None,
        abelian=theory.gauge.abelian,
    )


def anomaly_polynomial(
    content: FieldContent, ctx: Union[GeneratorSet, None] = None
) -> GradedPoly:
    """[Td * ch(content)] in degree 2n+2 for an n-dimensional content."""
    n = content.dimension
    if ctx is None:
        ctx = context_for_content(content)
    return (todd(n, ctx) * ch_content(content, ctx)).component(2 * n + 2)


# ---------------------------------------------------------------------------
# classification


def _bucket_of(ctx: GeneratorSet, exponents) -> str:
    gauge = grav = False
    for name, e in zip(ctx.names, exponents):
        if e == 0:
            continue
        if name in GAUGE_GENERATORS:
            gauge = True
        else:
            grav = True
    if gauge and grav:
        return "mixed"
    if gauge:
        return "pure_gauge"
    return "gravitational"


@dataclass(frozen=True)
class AnomalyReport:
    """The degree-(2n+2) anomaly, partitioned monomial by monomial.

    Bucket maps are sparse: only non-zero coefficients are stored, keyed by
    monomial names like "g1*s2".  a_hol/c_hol are carried for n = 2 and
    virasoro_c for n = 1; the inapplicable ones are None.
    """

    n: int
    full: GradedPoly
    gravitational: dict[str, Fraction] = field(default_factory=dict)
    pure_gauge: dict[str, Fraction] = field(default_factory=dict)
    mixed: dict[str, Fraction] = field(default_factory=dict)
    a_hol: Union[Fraction, None] = None
    c_hol: Union[Fraction, None] = None
    virasoro_c: Union[Fraction, None] = None


def classify(poly: GradedPoly, n: int) -> AnomalyReport:
    """Partition a homogeneous degree-(2n+2) polynomial into anomaly buckets."""
    degree = poly.homogeneous_degree()
    if degree is None or (not poly.is_zero() and degree != 2 * n + 2):
        raise ValueError(f"classify expects a homogeneous polynomial of degree {2 * n + 2}")
    buckets: dict[str, dict[str, Fraction]] = {
        "gravitational": {},
        "pure_gauge": {},
        "mixed": {},
    }
    for exponents, coeff in poly.terms():
        buckets[_bucket_of(poly.ctx, exponents)][poly.ctx.monomial_name(exponents)] = coeff
    grav = buckets["gravitational"]
    a_hol = c_hol = virasoro_c = None
    if n == 2:
        a_hol = grav.get("g1*g2", Fraction(0))
        c_hol = grav.get("g1^3", Fraction(0))
    elif n == 1:
        virasoro_c = 24 * grav.get("g1^2", Fraction(0))
    return AnomalyReport(
        n=n,
        full=poly,
        gravitational=grav,
        pure_gauge=buckets["pure_gauge"],
        mixed=buckets["mixed"],
        a_hol=a_hol,
        c_hol=c_hol,
        virasoro_c=virasoro_c,
    )


def pure_gauge_monomials(ctx: GeneratorSet, n: int) -> list[str]:
    """Names of all degree-(2n+2) monomials built from gauge generators only."""
    return [
        ctx.monomial_name(e)
        for e in homogeneous_monomials(ctx, 2 * n + 2)
        if _bucket_of(ctx, e) == "pure_gauge"
    ]


def mixed_monomials(ctx: GeneratorSet, n: int) -> list[str]:
    """Names of all degree-(2n+2) monomials mixing gauge and gravitational parts."""
    return [
        ctx.monomial_name(e)
        for e in homogeneous_monomials(ctx, 2 * n + 2)
        if _bucket_of(ctx, e) == "mixed"
    ]


# ---------------------------------------------------------------------------
# conversions between holomorphic and physical coefficients


def physical_ac(a_hol: RationalLike, c_hol: RationalLike) -> tuple[Fraction, Fraction]:
    """(a, c) from the holomorphic pair: a = -9/4 (a_hol + 6 c_hol),
    c = -3/4 (5 a_hol + 18 c_hol)."""
    a_hol, c_hol = Fraction(a_hol), Fraction(c_hol)
    a = Fraction(-9, 4) * (a_hol + 6 * c_hol)
    c = Fraction(-3, 4) * (5 * a_hol + 18 * c_hol)
    return a, c


def holomorphic_ac(a: RationalLike, c: RationalLike) -> tuple[Fraction, Fraction]:
    """(a_hol, c_hol) from the physical pair: a_hol = 2/3 (a - c),
    c_hol = 1/9 (c - 5/3 a).  Inverse of physical_ac."""
    a, c = Fraction(a), Fraction(c)
    a_hol = Fraction(2, 3) * (a - c)
    c_hol = Fraction(1, 9) * (c - Fraction(5, 3) * a)
    return a_hol, c_hol


# ---------------------------------------------------------------------------
# untwisted R-symmetry pipeline


def r_symmetry_polynomial(tr_r: RationalLike, tr_r3: RationalLike) -> GradedPoly:
    """Mixed R-symmetry/gravity anomaly (1/3!)(TrR^3 tc1^3 - 1/4 TrR tc1 p1)."""
    ctx = untwisted_context()
    tc1 = GradedPoly.generator(ctx, "tc1")
    p1 = GradedPoly.generator(ctx, "p1")
    return Fraction(1, 6) * (
        Fraction(tr_r3) * tc1**3 - Fraction(1, 4) * Fraction(tr_r) * tc1 * p1
    )


def twist_substitute(poly: GradedPoly) -> GradedPoly:
    """Break the frame to the unitary subgroup and twist: tc1 -> -g1/2, p1 -> 2 g2."""
    allowed = {"tc1", "p1"}
    for exponents, _ in poly.terms():
        for name, e in zip(poly.ctx.names, exponents):
            if e and name not in allowed:
                raise GeneratorMismatch(f"twist substitution does not accept {name!r}")
    target = gravitational_context(2)
    images = {
        "tc1": GradedPoly.generator(target, "g1") * Fraction(-1, 2),
        "p1": GradedPoly.generator(target, "g2") * 2,
    }
    return poly.substitute(target, images)


# ---------------------------------------------------------------------------
# obstructions


def gauge_obstruction(report: AnomalyReport) -> tuple[dict[str, Fraction], bool]:
    """Pure-gauge bucket and whether it vanishes (the theory quantizes at all)."""
    return dict(report.pure_gauge), not report.pure_gauge


def t_background_obstruction(report: AnomalyReport) -> tuple[dict[str, Fraction], bool]:
    """Mixed bucket and whether it vanishes (holomorphic vector fields can back-react).

    Only meaningful once the pure-gauge obstruction is clear; a non-zero
    gauge bucket is reported as a warning, not an error.  The purely
    gravitational part is deliberately not included here: it is the
    residual central charge, not an obstruction.
    """
    if report.pure_gauge:
        warnings.warn(
            "pure-gauge anomaly is non-zero; the mixed obstruction is only "
            "meaningful once it vanishes",
            stacklevel=2,
        )
    return dict(report.mixed), not report.mixed


# ---------------------------------------------------------------------------
# solving for anomaly-free R-charges


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an R-charge solve.

    polynomials maps each targeted monomial to its exact coefficient
    polynomial in r (ascending).  roots is the sorted list of rational
    values killing every non-trivial constraint, or None when every
    constraint is identically zero (the charge is unconstrained).
    """

    target: str
    polynomials: dict[str, univariate.Coeffs]
    roots: Union[list[Fraction], None]
    unconstrained: bool


def solve_r(theory: Theory, target: str = "all-mixed") -> SolveResult:
    """Rational R-charges making the targeted anomaly coefficients vanish.

    target is a single gauge or mixed monomial name (e.g. "g1*s2"), or
    "all-mixed" to require every mixed coefficient to vanish at once.
    Coefficients are exact cubics in r, so the rational root theorem finds
    every rational solution; irrational roots are deliberately not
    approximated and simply do not appear.
    """
    ctx = context_for_theory(theory)
    n = theory.dimension
    if target == "all-mixed":
        names = mixed_monomials(ctx, n)
    else:
        admissible = set(mixed_monomials(ctx, n)) | set(pure_gauge_monomials(ctx, n))
        if target not in admissible:
            raise ValueError(
                f"target {target!r} is not a gauge or mixed monomial of this theory; "
                f"choose from {sorted(admissible)} or 'all-mixed'"
            )
        names = [target]

    polynomials: dict[str, univariate.Coeffs] = {}
    for name in names:
        exponents = ctx.monomial(_name_to_mapping(name))

        def coefficient_at(instance: Theory, exponents=exponents) -> Fraction:
            poly = anomaly_polynomial(twist_content(instance), ctx)
            return poly.coefficient(exponents)

        polynomials[name] = interpolate_in_r(theory, coefficient_at)

    constraints = [c for c in polynomials.values() if c]
    if not constraints:
        return SolveResult(target, polynomials, None, True)
    roots = set(univariate.rational_roots(constraints[0]))
    for coeffs in constraints[1:]:
        roots &= set(univariate.rational_roots(coeffs))
    return SolveResult(target, polynomials, sorted(roots), False)


def _name_to_mapping(name: str) -> dict[str, int]:
    out: dict[str, int] = {}
    if name == "1":
        return out
    for part in name.split("*"):
        if "^" in part:
            gen, e = part.split("^")
            out[gen] = out.get(gen, 0) + int(e)
        else:
            out[part] = out.get(part, 0) + 1
    return out


# ---------------------------------------------------------------------------
# display form of the gravitational anomaly as a local functional

COCYCLE_A = "(1/12) ∫ tr(Jμ) tr(∂Jμ ∂Jμ)"
COCYCLE_C = "(1/6) ∫ tr(Jμ) tr(∂Jμ) tr(∂Jμ)"


def render_local_cocycle(a_hol: RationalLike, c_hol: RationalLike) -> str:
    """Display the dimension-2 gravitational anomaly as a local functional.

    Purely presentational; the -4 pi^2 normalization between the
    characteristic class and the functional lives here and nowhere else.
    """
    a_hol, c_hol = Fraction(a_hol), Fraction(c_hol)
    if a_hol == 0 and c_hol == 0:
        return "-4π²Θ = 0  (the anomaly vanishes)"
    return "\n".join(
        [
            f"-4π²Θ = ({format_rational(a_hol)}) · Θ_a"
            f" + ({format_rational(c_hol)}) · Θ_c",
            f"  Θ_a = {COCYCLE_A}",
            f"  Θ_c = {COCYCLE_C}",
        ]
    )


# ---------------------------------------------------------------------------
# reference table of basic multiplets


def multiplet_table() -> list[tuple[str, Fraction, Fraction, Fraction, Fraction]]:
    """(label, a, c, a_hol, c_hol) per unit multiplet, from the full pipeline.

    Rows are normalized per unit of gauge-group dimension (vectors) or
    representation dimension (matter), so they apply to any group by
    scaling.
    """
    su2 = GaugeGroup(su=2)
    rows = [
        ("n1-vector", Theory(gauge=su2, multiplets=(Vector(),)), 3),
        ("n1-chiral", Theory(multiplets=(Chiral(Fraction(-1, 3), trivial(1)),)), 1),
        ("n2-vector", Theory(gauge=su2, multiplets=(N2Vector(),)), 3),
        ("n2-hyper", Theory(multiplets=(Hyper(trivial(1)),)), 1),
        ("n4-vector", Theory(gauge=su2, multiplets=(N4Vector(),)), 3),
    ]
    table = []
    for label, theory, dim in rows:
        report = classify(anomaly_polynomial(twist_content(theory), context_for_theory(theory)), 2)
        a_hol = report.a_hol / dim
        c_hol = report.c_hol / dim
        a, c = physical_ac(a_hol, c_hol)
        table.append((label, a, c, a_hol, c_hol))
    return table
