"""Path-word grammar."""

import pytest

from quiverdef.words import WordError, format_word, parse_word


def test_direct_word():
    assert parse_word("delta*beta") == ("direct", ("delta", "beta"))
    assert parse_word("beta") == ("direct", ("beta",))


def test_hybrid_words():
    assert parse_word("gamma*delta^-1") == ("hybrid_source", "gamma", "delta")
    assert parse_word("beta^-1*eta") == ("hybrid_target", "beta", "eta")


def test_unknown_arrow_has_position():
    with pytest.raises(WordError) as exc:
        parse_word("beta*zeta")
    assert "position" in str(exc.value)


def test_inverse_only_in_two_letter_hybrids():
    with pytest.raises(WordError):
        parse_word("beta*gamma*delta^-1")
    with pytest.raises(WordError):
        parse_word("beta^-1*eta^-1")


def test_empty_and_garbage():
    with pytest.raises(WordError):
        parse_word("")
    with pytest.raises(WordError):
        parse_word("beta**gamma")


def test_format_round_trip():
    for text in ("delta*beta", "gamma*delta^-1", "beta^-1*eta", "alpha"):
        assert format_word(parse_word(text)) == text
