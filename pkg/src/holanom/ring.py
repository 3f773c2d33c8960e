"""Truncated graded-commutative polynomials over exact rationals.

A polynomial lives in a ring with a fixed, ordered list of named generators
of even cohomological degree and a hard degree cap: every monomial whose
total weighted degree exceeds the cap is identically zero.  This is the
cohomology ring H^{<= cap} in which all characteristic-class arithmetic in
this package takes place.

Representation:

  GeneratorSet -- ordered (name, degree) pairs plus the cap.
  GradedPoly   -- map from exponent tuples (one entry per generator, in
                  GeneratorSet order) to non-zero Fraction coefficients;
                  the zero polynomial is the empty map.

Coefficients are ``fractions.Fraction``, so arithmetic is exact, never
overflows, and results are always in lowest terms with positive
denominator.  All generators have even degree, so the ring is honestly
commutative and no Koszul signs arise.  Values are immutable after
construction; every operation returns a new polynomial.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int]

_RATIONAL_TOKEN = re.compile(r"[+-]?\d+(?:/\d+)?")


class GeneratorMismatch(ValueError):
    """An operation mixed polynomials over different generator sets."""


class SeriesDomainError(ValueError):
    """exp or log applied to a polynomial with the wrong constant term."""


def parse_rational(token: str) -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction; reject anything else.

    Decimal notation is deliberately not accepted: every number in this
    package must round-trip exactly through its text form.
    """
    if not _RATIONAL_TOKEN.fullmatch(token):
        raise ValueError(f"malformed rational {token!r} (expected p/q or integer)")
    if "/" in token and int(token.split("/")[1]) == 0:
        raise ValueError(f"malformed rational {token!r} (zero denominator)")
    return Fraction(token)


def format_rational(value: RationalLike) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered named generators of even degree >= 2, with a degree cap."""

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    cap: int

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"generator names must be unique: {self.names}")
        for degree in self.degrees:
            if degree < 2 or degree % 2:
                raise ValueError(f"generator degrees must be even and >= 2, got {degree}")
        if self.cap < 2 or self.cap % 2:
            raise ValueError(f"cap must be a positive even integer, got {self.cap}")
        if self.degrees and self.cap < max(self.degrees):
            raise ValueError("cap must be at least the largest generator degree")

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GeneratorMismatch(f"unknown generator {name!r} in {self.names}") from None

    def degree(self, exponents: Sequence[int]) -> int:
        """Total weighted degree of an exponent tuple."""
        return sum(e * d for e, d in zip(exponents, self.degrees))

    def monomial(self, spec: Union[Mapping[str, int], Sequence[int]]) -> tuple[int, ...]:
        """Normalize a monomial given as {name: exponent} or a full tuple."""
        if isinstance(spec, Mapping):
            exponents = [0] * len(self.names)
            for name, e in spec.items():
                exponents[self.index(name)] = int(e)
        else:
            exponents = [int(e) for e in spec]
            if len(exponents) != len(self.names):
                raise GeneratorMismatch(
                    f"exponent tuple of length {len(exponents)} does not fit {len(self.names)} generators"
                )
        if any(e < 0 for e in exponents):
            raise ValueError(f"negative exponent in monomial {spec!r}")
        return tuple(exponents)

    def monomial_name(self, exponents: Sequence[int]) -> str:
        """Render an exponent tuple as e.g. "g1^2*f1"; the constant monomial is "1"."""
        parts = []
        for name, e in zip(self.names, exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def homogeneous_monomials(ctx: GeneratorSet, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, in a fixed canonical order."""
    ranges = [range(degree // d + 1) for d in ctx.degrees]
    found = [e for e in itertools.product(*ranges) if ctx.degree(e) == degree]
    return sorted(found, reverse=True)


class GradedPoly:
    """Element of the truncated graded ring over a GeneratorSet.

    Supports +, -, * (by polynomials and by rational scalars), integer
    powers, exp/log of nilpotent series, degree-component extraction and
    exact coefficient lookup.  Monomials above the cap are silently
    discarded by every operation: that is the ring structure, not data
    loss.
    """

    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx: GeneratorSet, terms: Union[Mapping, Iterable] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[tuple[int, ...], Fraction] = {}
        for exponents, coeff in items:
            exponents = ctx.monomial(exponents)
            if ctx.degree(exponents) > ctx.cap:
                continue
            coeff = Fraction(coeff)
            if coeff:
                total = collected.get(exponents, Fraction(0)) + coeff
                if total:
                    collected[exponents] = total
                else:
                    collected.pop(exponents, None)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "_terms", collected)

    def __setattr__(self, name, value):
        raise AttributeError("GradedPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx: GeneratorSet) -> "GradedPoly":
        return cls(ctx)

    @classmethod
    def constant(cls, ctx: GeneratorSet, value: RationalLike) -> "GradedPoly":
        return cls(ctx, {(0,) * len(ctx.names): Fraction(value)})

    @classmethod
    def generator(cls, ctx: GeneratorSet, name: str) -> "GradedPoly":
        return cls(ctx, {ctx.monomial({name: 1}): Fraction(1)})

    # -- inspection --------------------------------------------------------

    def terms(self):
        """Iterate (exponent tuple, coefficient) pairs; order unspecified."""
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self.ctx.names), Fraction(0))

    def coefficient(self, monomial) -> Fraction:
        """Exact coefficient of a monomial ({name: exp} mapping or exponent tuple)."""
        return self._terms.get(self.ctx.monomial(monomial), Fraction(0))

    def component(self, degree: int) -> "GradedPoly":
        """The homogeneous part of the given degree (zero if out of range)."""
        return GradedPoly(
            self.ctx,
            {e: c for e, c in self._terms.items() if self.ctx.degree(e) == degree},
        )

    def max_degree(self) -> int:
        """Largest degree carrying a non-zero term; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(self.ctx.degree(e) for e in self._terms)

    def homogeneous_degree(self) -> Union[int, None]:
        """The common degree of all terms, or None if mixed; 0 for the zero polynomial."""
        degrees = {self.ctx.degree(e) for e in self._terms}
        if not degrees:
            return 0
        if len(degrees) == 1:
            return degrees.pop()
        return None

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            if other.ctx != self.ctx:
                raise GeneratorMismatch(
                    f"polynomials over different generator sets: {self.ctx.names} vs {other.ctx.names}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return GradedPoly.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other) -> "GradedPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return GradedPoly(self.ctx, merged)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly(self.ctx, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "GradedPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "GradedPoly":
        return (-self) + other

    def __mul__(self, other) -> "GradedPoly":
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            return GradedPoly(self.ctx, {e: c * scalar for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        cap = self.ctx.cap
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self._terms.items():
            da = self.ctx.degree(ea)
            for eb, cb in other._terms.items():
                if da + self.ctx.degree(eb) > cap:
                    continue
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return GradedPoly(self.ctx, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "GradedPoly":
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, exponent: int) -> "GradedPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = GradedPoly.constant(self.ctx, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.constant(self.ctx, other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    __hash__ = None

    # -- series ------------------------------------------------------------

    def exp(self) -> "GradedPoly":
        """Exponential sum_k p^k / k!; requires zero constant term.

        The sum terminates because any polynomial with zero constant term
        is nilpotent in the truncated ring.
        """
        if self.constant_term != 0:
            raise SeriesDomainError("exp requires a zero constant term")
        total = GradedPoly.constant(self.ctx, 1)
        power = total
        k = 0
        while True:
            k += 1
            power = power * self * Fraction(1, k)
            if power.is_zero():
                return total
            total = total + power

    def log(self) -> "GradedPoly":
        """Logarithm sum_k (-1)^(k-1) (p-1)^k / k; requires constant term 1."""
        if self.constant_term != 1:
            raise SeriesDomainError("log requires constant term 1")
        shifted = self - 1
        total = GradedPoly.zero(self.ctx)
        power = GradedPoly.constant(self.ctx, 1)
        k = 0
        while True:
            k += 1
            power = power * shifted
            if power.is_zero():
                return total
            total = total + power * Fraction((-1) ** (k - 1), k)

    # -- structural maps ---------------------------------------------------

    def substitute(
        self, target: GeneratorSet, images: Mapping[str, "GradedPoly"]
    ) -> "GradedPoly":
        """Evaluate each generator at its image polynomial over the target ring.

        Every generator actually used must have an image; all images must
        share the target generator set.
        """
        for poly in images.values():
            if poly.ctx != target:
                raise GeneratorMismatch("substitution images must live in the target ring")
        out = GradedPoly.zero(target)
        for exponents, coeff in self._terms.items():
            term = GradedPoly.constant(target, coeff)
            for name, e in zip(self.ctx.names, exponents):
                if e == 0:
                    continue
                if name not in images:
                    raise GeneratorMismatch(f"no substitution image for generator {name!r}")
                term = term * images[name] ** e
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, RationalLike]) -> Fraction:
        """Evaluate the stored (truncated) terms at rational generator values."""
        total = Fraction(0)
        for exponents, coeff in self._terms.items():
            product = coeff
            for name, e in zip(self.ctx.names, exponents):
                if e == 0:
                    continue
                if name not in values:
                    raise GeneratorMismatch(f"no value supplied for generator {name!r}")
                product *= Fraction(values[name]) ** e
            total += product
        return total

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda item: (self.ctx.degree(item[0]), item[0]))
        parts = []
        for exponents, coeff in ordered:
            name = self.ctx.monomial_name(exponents)
            if name == "1":
                text = format_rational(coeff)
            elif coeff == 1:
                text = name
            elif coeff == -1:
                text = f"-{name}"
            else:
                text = f"{format_rational(coeff)}*{name}"
            parts.append(text)
        rendered = parts[0]
        for part in parts[1:]:
            rendered += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return rendered

    __repr__ = __str__
