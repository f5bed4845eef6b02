import random

import pytest
from hypothesis import given, settings, strategies as st

from gbds.corpus import random_element, random_system
from gbds.errors import ParseError, ValidationError
from gbds.expr import (
    format_element,
    format_group_elem,
    parse_cylinder,
    parse_element,
    parse_group_elem,
    parse_word,
)
from gbds.fixtures import FIXTURES
from gbds.groupoid import GroupElem
from gbds.scalar import Scalar, format_scalar, parse_scalar
from gbds.sysfile import dump_system, load_system, parse_system_text, system_to_data

seeds = st.integers(min_value=0, max_value=10**9)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_shipped_system_files_match_fixtures(name):
    from pathlib import Path

    path = Path(__file__).parent.parent / "systems" / f"{name.lower()}.yaml"
    assert system_to_data(load_system(path)) == system_to_data(FIXTURES[name]())


@settings(max_examples=100)
@given(seeds)
def test_dump_round_trip(seed):
    s = random_system(random.Random(seed))
    again = parse_system_text(dump_system(s))
    assert system_to_data(again) == system_to_data(s)


def test_default_ideals():
    s = parse_system_text("atoms: [u, w]\nalphabet: [a]\nactions: {a: {u: [w], w: []}}\n")
    assert s.ideal("a").names() == ("w",)
    assert s.defaulted_ideals == ("a",)


@pytest.mark.parametrize(
    "text",
    [
        "atoms: [u]\nalphabet: [a]\nactions: {a: {u: [u]}}\nideals: {a: []}\n",
        "atoms: [u, w]\nalphabet: [a]\nactions: {a: {u: [w], w: [w]}}\n",
        "atoms: [u]\nalphabet: [a]\nactions: {a: {u: [x]}}\n",
        "atoms: [u, u]\nalphabet: [a]\nactions: {a: {u: []}}\n",
        "atoms: []\nalphabet: [a]\nactions: {a: {}}\n",
    ],
)
def test_invalid_systems_rejected(text):
    with pytest.raises(ValidationError):
        parse_system_text(text)


def test_yaml_syntax_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_system_text("atoms: [u\nalphabet: [a]\n")
    assert "line 2, column 9" in str(info.value)


def test_scalars():
    assert parse_scalar("1/2") == Scalar(1, 0) * Scalar(parse_scalar("1/2").re)
    for text in ["2", "1/2", "(2+1i)", "(1i)", "(-1/3-2i)", "-3"]:
        assert format_scalar(parse_scalar(text)) == text
    with pytest.raises(ParseError):
        parse_scalar("(1+)")


def test_words(F2, F4):
    assert parse_word(F2, "ab") == ("a", "b")
    assert parse_word(F2, "a·b·a") == ("a", "b", "a")
    assert parse_word(F2, "e") == ()
    assert parse_word(F4, "∅") == ()
    with pytest.raises(ParseError) as info:
        parse_word(F2, "abc")
    assert info.value.position == 0


def test_element_syntax(F2):
    assert not parse_element(F2, "0").terms
    x = parse_element(F2, "2*a.{v}|b + (1/2+1i) e.{v} - a.{v}|b")
    assert len(x.terms) == 2
    assert parse_element(F2, "a.{}") == parse_element(F2, "0 a.{v}")
    for bad, col in [("a.{w}", 3), ("a.v", 2), ("a.{v} +", 7), ("a.{v} b", 6)]:
        with pytest.raises(ParseError) as info:
            parse_element(F2, bad)
        assert info.value.position == col, bad


def test_element_outside_domain_is_parse_error(F4):
    # theta_a(2) = empty, so 2 is outside the generator of I_a... a.{1} is fine
    parse_element(F4, "a.{1}")
    with pytest.raises(ParseError):
        parse_element(F4, "aa.{1}")


@settings(max_examples=150)
@given(seeds)
def test_element_round_trip(seed):
    rng = random.Random(seed)
    s = random_system(rng)
    x = random_element(rng, s)
    assert parse_element(s, format_element(x)) == x


def test_group_elements(F2):
    assert parse_group_elem(F2, "a b^-1") == GroupElem((("a", 1), ("b", -1)))
    assert parse_group_elem(F2, "ab^{-1}") == GroupElem((("a", 1), ("b", -1)))
    assert parse_group_elem(F2, "a a^-1").is_identity
    t = GroupElem((("b", -1), ("a", 1)))
    assert parse_group_elem(F2, format_group_elem(F2, t)) == t


def test_cylinder(F4):
    c = parse_cylinder(F4, "a.{1}")
    assert c.word == ("a",) and c.atoms.names() == ("1",)
