"""Theory-file grammar: parsing, validation errors, canonical rendering."""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from holanom.chern import Atom, FieldContent, GaugeGroup, Kpow, fundamental, trivial
from holanom.theory import Chiral, Hyper, N2Vector, N4Vector, Raw, Theory, Vector
from holanom.theoryfile import TheoryParseError, parse_theory_file, render_theory

SQCD_TEXT = """\
# electric SQCD with 3 colors and 5 flavors
dimension 2
gauge su 3
multiplet vector
multiplet chiral r -3/5 rep fundamental copies 5
multiplet chiral r -3/5 rep antifundamental copies 5
"""


def test_parse_sqcd():
    theory = parse_theory_file(SQCD_TEXT)
    assert theory.dimension == 2
    assert theory.gauge == GaugeGroup(su=3)
    vector, quarks, antiquarks = theory.multiplets
    assert isinstance(vector, Vector)
    assert quarks == Chiral(F(-3, 5), fundamental(3), copies=5)
    assert antiquarks.rep.t3 == -1 and antiquarks.copies == 5


def test_parse_bare_dimension():
    theory = parse_theory_file("dimension 2\n")
    assert theory == Theory()


def test_parse_defaults_to_dimension_two():
    theory = parse_theory_file("gauge none\n")
    assert theory.dimension == 2


def test_parse_full_grammar():
    text = """
    dimension 2
    gauge su 2
    flavor-u1 on
    multiplet chiral r 1/3 rep trivial 2 charge -1/2 copies 4
    multiplet n2-vector
    multiplet n4-vector
    multiplet hyper rep fundamental copies 2
    multiplet raw parity odd k 2/3 rep adjoint
    unknown-r 1
    """
    theory = parse_theory_file(text)
    chiral, n2, n4, hyper, raw = theory.multiplets
    assert chiral.rep.q == F(-1, 2) and chiral.copies == 4 and chiral.unknown_r
    assert isinstance(n2, N2Vector) and isinstance(n4, N4Vector)
    assert isinstance(hyper, Hyper) and hyper.copies == 2
    assert isinstance(raw, Raw)
    ((mult, atom),) = raw.content.pieces
    assert mult == 1 and atom.parity == "odd" and atom.geom == Kpow(F(2, 3))


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("multiplet chiral r 1/0 rep trivial 1\n", "zero denominator"),
        ("multiplet chiral r 0.5 rep trivial 1\n", "malformed rational"),
        ("frobnicate 3\n", "unknown keyword"),
        ("dimension 2\ndimension 2\n", "duplicate dimension"),
        ("gauge none\ngauge su 3\n", "duplicate gauge"),
        ("flavor-u1 on\nflavor-u1 off\n", "duplicate flavor-u1"),
        ("gauge su 1\n", "N >= 2"),
        ("multiplet vector\n", "requires 'gauge su"),
        ("multiplet chiral r 0 rep fundamental\n", "requires 'gauge su"),
        ("multiplet chiral r 0 rep trivial 1 charge 1\n", "flavor-u1"),
        ("multiplet chiral r 0 rep spinor\n", "unknown representation"),
        ("multiplet chiral r 0 rep trivial 1 copies 0\n", "copies"),
        ("gauge su 2\nmultiplet chiral r 0\n", "missing"),
        ("multiplet chiral r 0 rep trivial 1 extra\n", "trailing"),
        ("unknown-r 1\n", "out of range"),
        ("gauge su 2\nmultiplet vector\nunknown-r 1\n", "chiral"),
        ("dimension 1\nmultiplet chiral r 0 rep trivial 1\n", "dimension 2"),
        ("multiplet raw parity sideways k 0 rep trivial 1\n", "parity"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(TheoryParseError) as info:
        parse_theory_file(text)
    assert fragment in str(info.value)


def test_parse_error_reports_line_number():
    text = "dimension 2\ngauge su 3\nmultiplet chiral r 1/0 rep fundamental\n"
    with pytest.raises(TheoryParseError) as info:
        parse_theory_file(text)
    assert info.value.line_no == 3
    assert str(info.value).startswith("line 3:")


def test_render_parse_round_trip_is_identity_on_canonical_text():
    theory = parse_theory_file(SQCD_TEXT)
    canonical = render_theory(theory)
    assert render_theory(parse_theory_file(canonical)) == canonical
    assert parse_theory_file(canonical) == theory


def test_round_trip_assorted_theories():
    theories = [
        Theory(),
        Theory(gauge=GaugeGroup(su=4), multiplets=(Vector(), N2Vector(), N4Vector())),
        Theory(
            gauge=GaugeGroup(su=2, abelian=True),
            multiplets=(
                Chiral(F(7, 3), trivial(3, F(-1, 2)), copies=2, unknown_r=True),
                Hyper(fundamental(2), copies=5),
            ),
        ),
        Theory(
            dimension=1,
            gauge=GaugeGroup(abelian=True),
            multiplets=(
                Raw(FieldContent(1, ((1, Atom(Kpow(F(0)), trivial(1), "even")),))),
                Raw(FieldContent(1, ((1, Atom(Kpow(F(0)), trivial(1, 1), "odd")),))),
            ),
        ),
    ]
    for theory in theories:
        assert parse_theory_file(render_theory(theory)) == theory


def test_render_splits_negative_raw_multiplicity():
    raw = Raw(FieldContent(2, ((-2, Atom(Kpow(F(1, 2)), trivial(1), "even")),)))
    rendered = render_theory(Theory(multiplets=(raw,)))
    assert "parity odd" in rendered and "copies 2" in rendered
    reparsed = parse_theory_file(rendered)
    ((mult, atom),) = reparsed.multiplets[0].content.pieces
    assert mult == 2 and atom.parity == "odd"


def test_unknown_r_index_counts_rendered_lines():
    theory = Theory(
        gauge=GaugeGroup(su=2),
        multiplets=(
            Raw(
                FieldContent(
                    2,
                    (
                        (1, Atom(Kpow(F(1, 3)), trivial(1), "even")),
                        (1, Atom(Kpow(F(2, 3)), trivial(1), "odd")),
                    ),
                )
            ),
            Chiral(F(0), trivial(1), unknown_r=True),
        ),
    )
    rendered = render_theory(theory)
    assert "unknown-r 3" in rendered
    reparsed = parse_theory_file(rendered)
    assert any(getattr(m, "unknown_r", False) for m in reparsed.multiplets)
