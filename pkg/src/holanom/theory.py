"""Declarative four-dimensional supersymmetric theories and their holomorphic twist.

A Theory is a gauge group plus a list of multiplets.  The twist map
compiles it to the FieldContent whose Chern character drives every anomaly
computation: a chiral multiplet of R-charge r becomes an even K^((r+1)/2)
atom, a vector multiplet the parity-odd adjoint, and the extended-
supersymmetry multiplets their standard decompositions into those two.

Anomaly coefficients of a theory with one undetermined R-charge are exact
polynomials of degree at most 3 in it (the charge enters only through
exp(-(r+1)/2 * g1), truncated in degree 6), so interpolate_in_r recovers
them exactly from four sample points and verifies against a fifth.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Union

from .chern import (
    Atom,
    FieldContent,
    GaugeGroup,
    GaugeRep,
    Kpow,
    TRIVIAL,
    adjoint,
    wedge_total,
)
from .ring import Rational, RationalLike
from .univariate import Coeffs, evaluate, lagrange_interpolate


class ConfigurationError(ValueError):
    """A theory description that cannot be compiled."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Chiral:
    """N=1 chiral multiplet of R-charge r in a gauge representation."""

    r: Fraction
    rep: GaugeRep
    copies: int = 1
    unknown_r: bool = False

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        if self.copies < 1:
            raise ValueError("copies must be positive")


@dataclass(frozen=True)
class Vector:
    """N=1 vector multiplet for the theory's simple gauge group."""


@dataclass(frozen=True)
class N2Vector:
    """N=2 vector multiplet (an N=1 vector plus an adjoint chiral at r = -1/3)."""


@dataclass(frozen=True)
class Hyper:
    """N=2 hypermultiplet valued in a representation."""

    rep: GaugeRep
    copies: int = 1

    def __post_init__(self):
        if self.copies < 1:
            raise ValueError("copies must be positive")


@dataclass(frozen=True)
class N4Vector:
    """N=4 vector multiplet (an N=1 vector plus three adjoint chirals at r = -1/3)."""


@dataclass(frozen=True)
class Raw:
    """Pre-twisted field content passed through unchanged."""

    content: FieldContent


Multiplet = Union[Chiral, Vector, N2Vector, Hyper, N4Vector, Raw]

_VECTOR_KINDS = (Vector, N2Vector, N4Vector)
_BUILTIN_KINDS = (Chiral, Vector, N2Vector, Hyper, N4Vector)


@dataclass(frozen=True)
class Theory:
    """A 4d theory: dimension of the twisted spacetime, gauge data, multiplets.

    The superpotential note is recorded verbatim and never enters any
    computation; it does not define a quantity with a cohomological grading
    and plays no role in the anomaly arithmetic.
    """

    dimension: int = 2
    gauge: GaugeGroup = GaugeGroup()
    multiplets: tuple[Multiplet, ...] = ()
    superpotential_note: Union[str, None] = None

    def __post_init__(self):
        object.__setattr__(self, "multiplets", tuple(self.multiplets))
        for m in self.multiplets:
            if isinstance(m, _BUILTIN_KINDS) and self.dimension != 2:
                raise ConfigurationError(
                    f"built-in multiplet {type(m).__name__} requires dimension 2"
                )
            if isinstance(m, _VECTOR_KINDS) and self.gauge.su is None:
                raise ConfigurationError(
                    f"{type(m).__name__} requires a simple gauge group"
                )
            if isinstance(m, Raw) and m.content.dimension != self.dimension:
                raise ConfigurationError("raw content dimension does not match the theory")
            rep = getattr(m, "rep", None)
            if rep is not None:
                if (rep.t2 != 0 or rep.t3 != 0) and self.gauge.su is None:
                    raise ConfigurationError(
                        "non-trivial gauge representation requires a simple gauge group"
                    )
                if rep.q != 0 and not self.gauge.abelian:
                    raise ConfigurationError(
                        "charged representation requires the abelian background"
                    )


def chiral_twist_power(r: RationalLike) -> Fraction:
    """Canonical-bundle power of the twisted chiral: lam = (r+1)/2."""
    return (Fraction(r) + 1) / 2


def twist_content(theory: Theory) -> FieldContent:
    """Compile a theory to the twisted field content.

    Only the base of the shifted cotangent space enters: the conjugate
    sector is accounted for by the index-style anomaly formula itself, and
    this convention reproduces all the standard multiplet coefficients.
    """
    n = theory.dimension
    pieces: list[tuple[int, Atom]] = []
    for m in theory.multiplets:
        if isinstance(m, Chiral):
            pieces.append((m.copies, Atom(Kpow(chiral_twist_power(m.r)), m.rep, "even")))
        elif isinstance(m, Vector):
            pieces.append((1, Atom(TRIVIAL, adjoint(theory.gauge.su), "odd")))
        elif isinstance(m, N2Vector):
            pieces.extend(
                wedge_total(Fraction(1, 3), 1, adjoint(theory.gauge.su), "odd", n).pieces
            )
        elif isinstance(m, Hyper):
            pieces.append((m.copies, Atom(Kpow(Fraction(1, 3)), m.rep, "even")))
            pieces.append((m.copies, Atom(Kpow(Fraction(2, 3)), m.rep, "odd")))
        elif isinstance(m, N4Vector):
            adj = adjoint(theory.gauge.su)
            pieces.append((1, Atom(TRIVIAL, adj, "odd")))
            pieces.append((3, Atom(Kpow(Fraction(1, 3)), adj, "even")))
        elif isinstance(m, Raw):
            pieces.extend(m.content.pieces)
        else:
            raise ConfigurationError(f"unknown multiplet kind {type(m).__name__}")
    return FieldContent(n, tuple(pieces))


# ---------------------------------------------------------------------------
# exact interpolation in an undetermined R-charge

SAMPLE_POINTS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2))
CHECK_POINT = Fraction(3)


def unknown_indices(theory: Theory) -> list[int]:
    return [
        i
        for i, m in enumerate(theory.multiplets)
        if isinstance(m, Chiral) and m.unknown_r
    ]


def with_unknown_r(theory: Theory, value: RationalLike) -> Theory:
    """The theory with every unknown-marked chiral set to the given R-charge."""
    value = Fraction(value)
    multiplets = tuple(
        replace(m, r=value, unknown_r=False)
        if isinstance(m, Chiral) and m.unknown_r
        else m
        for m in theory.multiplets
    )
    return replace(theory, multiplets=multiplets)


def interpolate_in_r(
    theory: Theory, evaluator: Callable[[Theory], Rational]
) -> Coeffs:
    """Exact cubic polynomial in the unknown R-charge matching the evaluator.

    Samples the evaluator at four rational nodes, Lagrange-interpolates,
    and confirms the result at a held-out fifth node; a mismatch means the
    evaluator is not cubic in r and is reported as an internal error.
    """
    if not unknown_indices(theory):
        raise ConfigurationError("no multiplet is marked as carrying the unknown R-charge")
    points = [(x, Fraction(evaluator(with_unknown_r(theory, x)))) for x in SAMPLE_POINTS]
    coeffs = lagrange_interpolate(points)
    checked = Fraction(evaluator(with_unknown_r(theory, CHECK_POINT)))
    if evaluate(coeffs, CHECK_POINT) != checked:
        raise ConsistencyError(
            "interpolated polynomial fails the held-out check; "
            "the evaluator is not polynomial of degree <= 3 in r"
        )
    return coeffs
