import pytest
from hypothesis import given

from homlie import fixtures as fx
from homlie.core import axiom_report
from homlie.errors import ParseError, ValidationError
from homlie.formats import (
    emit_algebra,
    emit_envelope,
    emit_form,
    emit_morphism,
    parse_algebra,
    parse_expr_text,
    parse_form,
    parse_targets,
    read_algebra,
    read_envelope,
    read_morphism,
)
from homlie.restricted import is_restrictable

from .conftest import FIXTURES, instances

ALG_FILES = sorted(FIXTURES.glob("*.alg"))


@pytest.mark.parametrize("path", ALG_FILES, ids=lambda p: p.name)
def test_algebra_fixture_roundtrip(path):
    text = path.read_text()
    A = parse_algebra(text)
    assert emit_algebra(A.algebra, A.pmap) == text
    assert axiom_report(A.algebra).valid


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.map")), ids=lambda p: p.name)
def test_morphism_fixture_roundtrip(path, tmp_path):
    mf = read_morphism(path)
    lines = path.read_text().splitlines()
    src, tgt = (str(path.parent / ln.split(None, 1)[1]) for ln in lines[:2])
    again = tmp_path / path.name
    again.write_text(emit_morphism(src, tgt, mf.morphism))
    assert read_morphism(again).morphism == mf.morphism


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.env")), ids=lambda p: p.name)
def test_envelope_fixture_roundtrip(path):
    E = read_envelope(path)
    lines = path.read_text().splitlines()
    base, env = lines[0].split(None, 1)[1], lines[1].split(None, 1)[1]
    assert emit_envelope(base, env, E) == path.read_text()


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.form")), ids=lambda p: p.name)
def test_form_fixture_roundtrip(path):
    name = {"nonab2_diag.form": "nonab2.alg", "ab1_unit.form": "ab1.alg"}[path.name]
    L = read_algebra(FIXTURES / name).algebra
    form = parse_form(path.read_text(), L)
    assert emit_form(form) == path.read_text()


def test_nonab2_fixture_parses():
    A = read_algebra(FIXTURES / "nonab2.alg")
    assert A.algebra == fx.nonab2()
    assert A.pmap.images == ((1, 0), (0, 0))


@given(instances(with_p=True))
def test_emit_parse_identity_on_generated(pair):
    L, P = pair
    text = emit_algebra(L, P)
    A = parse_algebra(text)
    assert A.algebra == L and A.pmap == P
    assert emit_algebra(A.algebra, A.pmap) == text


# grammar -------------------------------------------------------------------------

NONAB2 = "p 2\ndim 2\nnames h x\n"


def test_coefficient_out_of_range():
    with pytest.raises(ParseError) as info:
        parse_algebra(NONAB2 + "bracket h x = 2*x\n")
    assert info.value.line == 4 and info.value.column > 0


def test_jacobi_violation_reports_triple():
    text = "p 2\ndim 3\nnames a b c\nbracket a b = a\nbracket b c = b\nbracket a c = c\n"
    with pytest.raises(ValidationError) as info:
        parse_algebra(text)
    assert "hom_jacobi" in str(info.value) and "(a, b, c)" in str(info.value)
    assert info.value.counterexample


def test_non_multiplicative_twist_rejected():
    with pytest.raises(ValidationError):
        parse_algebra(NONAB2 + "alpha h = x\nalpha x = h\nbracket h x = x\n")


def test_defaults_and_comments():
    A = parse_algebra("# header\n" + NONAB2 + "bracket x h = x   # reversed\n")
    assert A.algebra == fx.nonab2()
    assert A.pmap is None


@pytest.mark.parametrize(
    "text",
    [
        "dim 2\nnames h x\n",
        "p 4\ndim 1\nnames a\n",
        "p 2\ndim 3\nnames h x\n",
        NONAB2 + "bracket h y = x\n",
        NONAB2 + "bracket h x = x $\n",
        NONAB2 + "pmap h = h\n",
        NONAB2 + "frobnicate h\n",
        NONAB2 + "bracket h x = x\nbracket h x = 0\n",
    ],
)
def test_malformed_files(text):
    with pytest.raises(ParseError):
        parse_algebra(text)


def test_expressions():
    names = ("h", "x")
    assert parse_expr_text("h + 2*x", names, 3) == (1, 2)
    assert parse_expr_text("0", names, 3) == (0, 0)
    assert parse_expr_text("x + x", names, 2) == (0, 0)
    with pytest.raises(ParseError):
        parse_expr_text("3*x", names, 3)
    with pytest.raises(ParseError):
        parse_expr_text("h +", names, 3)


def test_form_symmetric_closure_and_conflict():
    L = fx.nonab2(3)
    f = parse_form("form h x = 1\n", L)
    assert f.gram == ((0, 1), (1, 0))
    with pytest.raises(ParseError):
        parse_form("form h x = 1\nform x h = 2\n", L)


def test_targets_partial():
    t = parse_targets("pmap e = z\n", fx.heis3())
    assert t == {0: (0, 0, 1)}
    with pytest.raises(ParseError):
        parse_targets("alpha e = e\n", fx.heis3())


def test_nr3_parses_but_is_not_restrictable():
    A = read_algebra(FIXTURES / "nr3.alg")
    assert not is_restrictable(A.algebra).decision


def test_fixture_files_match_constructors():
    import subprocess
    import sys

    script = FIXTURES.parent / "scripts" / "make_fixtures.py"
    done = subprocess.run([sys.executable, str(script), "--check"], capture_output=True, text=True)
    assert done.returncode == 0, done.stdout
