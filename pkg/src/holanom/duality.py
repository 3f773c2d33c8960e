"""Electric/magnetic SQCD pairs and exact anomaly matching.

The electric theory is SU(N_c) with N_f fundamental and N_f
anti-fundamental chirals at the anomaly-free R-charge r = -N_c/N_f.  The
magnetic dual is SU(N_f - N_c) with N_f flavors of dual quarks at
r = -(N_f - N_c)/N_f plus N_f^2 gauge-singlet mesons whose R-charge is the
matching variable.  Matching solves the linear equation for a_hol and then
verifies the cubic c_hol equation exactly at the root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import univariate
from .anomaly import anomaly_polynomial, classify, context_for_theory
from .chern import GaugeGroup, antifundamental, fundamental, trivial
from .theory import (
    Chiral,
    ConfigurationError,
    ConsistencyError,
    Theory,
    Vector,
    interpolate_in_r,
    twist_content,
)
from .ring import RationalLike


@dataclass(frozen=True)
class SQCDSpec:
    colors: int
    flavors: int

    def __post_init__(self):
        if self.colors < 2:
            raise ConfigurationError("SQCD needs at least 2 colors")
        if self.flavors < 1:
            raise ConfigurationError("SQCD needs at least 1 flavor")

    @property
    def dual_colors(self) -> int:
        return self.flavors - self.colors


def quark_charge(spec: SQCDSpec) -> Fraction:
    """The unique R-charge admitting a background of holomorphic vector fields."""
    return Fraction(-spec.colors, spec.flavors)


def electric_theory(spec: SQCDSpec) -> Theory:
    r = quark_charge(spec)
    return Theory(
        gauge=GaugeGroup(su=spec.colors),
        multiplets=(
            Vector(),
            Chiral(r, fundamental(spec.colors), copies=spec.flavors),
            Chiral(r, antifundamental(spec.colors), copies=spec.flavors),
        ),
    )


def _hol_pair(theory: Theory) -> tuple[Fraction, Fraction]:
    report = classify(anomaly_polynomial(twist_content(theory), context_for_theory(theory)), 2)
    return report.a_hol, report.c_hol


def electric_anomalies(spec: SQCDSpec) -> tuple[Fraction, Fraction]:
    """(a_hol, c_hol) of electric SQCD, cross-checked against the closed forms.

    a_hol = -(N_c^2 + 1)/24 independently of N_f;
    c_hol = (2 N_c^4 - N_c^2 N_f^2 + N_f^2) / (48 N_f^2).
    """
    a_hol, c_hol = _hol_pair(electric_theory(spec))
    nc, nf = spec.colors, spec.flavors
    expected_a = Fraction(-(nc**2 + 1), 24)
    expected_c = Fraction(2 * nc**4 - nc**2 * nf**2 + nf**2, 48 * nf**2)
    if (a_hol, c_hol) != (expected_a, expected_c):
        raise ConsistencyError(
            f"computed ({a_hol}, {c_hol}) != closed form ({expected_a}, {expected_c})"
        )
    return a_hol, c_hol


def magnetic_theory(spec: SQCDSpec, r_meson: RationalLike, meson_unknown: bool = False) -> Theory:
    """SU(N_f - N_c) dual with N_f^2 singlet mesons at R-charge r_meson."""
    dual = spec.dual_colors
    if dual < 2:
        raise ConfigurationError(
            f"magnetic gauge group SU({dual}) needs N_f - N_c >= 2"
        )
    r_dual = Fraction(-dual, spec.flavors)
    return Theory(
        gauge=GaugeGroup(su=dual),
        multiplets=(
            Vector(),
            Chiral(r_dual, fundamental(dual), copies=spec.flavors),
            Chiral(r_dual, antifundamental(dual), copies=spec.flavors),
            Chiral(
                Fraction(r_meson),
                trivial(1),
                copies=spec.flavors**2,
                unknown_r=meson_unknown,
            ),
        ),
        superpotential_note="dual superpotential coupling mesons to dual quarks; "
        "recorded only, excluded from all anomaly arithmetic",
    )


def magnetic_anomalies(spec: SQCDSpec, r_meson: RationalLike) -> tuple[Fraction, Fraction]:
    return _hol_pair(magnetic_theory(spec, r_meson))


@dataclass(frozen=True)
class MatchResult:
    r_meson: Union[Fraction, None]
    matched: bool
    a_hol: Union[Fraction, None] = None
    c_hol: Union[Fraction, None] = None
    residual: Union[univariate.Coeffs, None] = None


def seiberg_match(spec: SQCDSpec) -> MatchResult:
    """Solve the meson R-charge from the a_hol match, then verify c_hol at it.

    The magnetic a_hol is affine in the meson charge, so the match
    condition is a linear equation; if it has no rational solution the
    residual polynomial is returned instead of a root.
    """
    a_electric, c_electric = electric_anomalies(spec)
    template = magnetic_theory(spec, 0, meson_unknown=True)

    def a_hol_of(theory: Theory) -> Fraction:
        return _hol_pair(theory)[0]

    a_coeffs = interpolate_in_r(template, a_hol_of)
    difference = univariate.add(a_coeffs, (-a_electric,))
    if not difference:
        raise ConsistencyError("magnetic a_hol is identically the electric value")
    roots = univariate.rational_roots(difference)
    if not roots:
        return MatchResult(None, False, residual=difference)
    r_meson = roots[0]
    _, c_magnetic = magnetic_anomalies(spec, r_meson)
    return MatchResult(
        r_meson,
        c_magnetic == c_electric,
        a_hol=a_electric,
        c_hol=c_electric,
    )
