import pytest

from subconj.blockcode import find_inverse_rule, image_language
from subconj.core import HypothesisError
from subconj.presentation import check_symbol_bound, count_3blocks, k_block_presentation, k_block_rule
from subconj.substitution import (
    MORSE,
    TOEPLITZ,
    Substitution,
    format_substitution,
    is_one_to_one,
    is_primitive,
    language,
    parse_substitution,
    power,
)
from subconj.verifier import build_certificate

MORSE_3BLOCK_TABLE = {
    "001": ("101", "011"),
    "010": ("110", "100"),
    "011": ("110", "101"),
    "100": ("001", "010"),
    "101": ("001", "011"),
    "110": ("010", "100"),
}
SIX = Substitution.from_mapping(
    {"a": "ab", "b": "cd", "c": "ef", "d": "fa", "e": "bc", "f": "de"}
)


def test_morse_3block_table():
    spec = k_block_presentation(MORSE, 3)
    assert dict(spec.presented.items()) == MORSE_3BLOCK_TABLE
    assert spec.note == ""


def test_morse_3block_formula():
    # zeta(stu) = (s2 t1 t2)(t1 t2 u1) where theta(s) = s1 s2
    zeta = k_block_presentation(MORSE, 3).presented
    for w in language(MORSE, 3):
        s, t, u = (MORSE[x] for x in w)
        assert zeta["".join(w)] == (s[1] + t[0] + t[1], t[0] + t[1] + u[0])


def test_k1_is_identity():
    for theta in (MORSE, TOEPLITZ, power(MORSE, 2)):
        assert k_block_presentation(theta, 1).presented == theta


def test_morse_2block():
    spec = k_block_presentation(MORSE, 2)
    zeta = spec.presented
    assert zeta.L == 2 and zeta.alphabet == ("00", "01", "10", "11")
    f = k_block_rule(MORSE, 2)
    assert build_certificate(MORSE, f).ok
    for n in range(1, 9):
        assert image_language(f, MORSE, n) == language(zeta, n)


@pytest.mark.parametrize("theta", [MORSE, TOEPLITZ, power(MORSE, 2)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_presentations_are_conjugate(theta, k):
    spec = k_block_presentation(theta, k)
    assert len(spec.presented.alphabet) == len(language(theta, k))
    f = k_block_rule(theta, k)
    assert build_certificate(theta, f).ok
    g = find_inverse_rule(f, theta, 3)
    assert g.width == 1
    assert all(v == k_[0][0] for k_, v in g.table)
    if k > 1:
        assert is_primitive(spec.presented)
        for n in range(1, 7):
            assert image_language(f, theta, n) == language(spec.presented, n)


def test_long_presentation_is_flagged():
    assert k_block_presentation(MORSE, 4).note


def test_presentation_of_finite_system():
    with pytest.raises(HypothesisError):
        k_block_presentation(Substitution.from_mapping({"0": "010", "1": "101"}), 2)


def test_presentation_serialises_with_composite_tokens():
    text = format_substitution(k_block_presentation(MORSE, 3).presented)
    assert text.splitlines()[0] == "001 -> 101 011"
    assert parse_substitution(text) == k_block_presentation(MORSE, 3).presented


def test_count_3blocks():
    assert count_3blocks(MORSE) == 6
    assert count_3blocks(TOEPLITZ) == 5
    with pytest.raises(HypothesisError):
        count_3blocks(Substitution.from_mapping({"0": "00"}))


def test_symbol_bound():
    zeta = k_block_presentation(MORSE, 3).presented
    r = check_symbol_bound(MORSE, zeta)
    assert (r.bound, r.zeta_size, r.satisfied, r.attained) == (6, 6, True, True)
    r = check_symbol_bound(MORSE, MORSE)
    assert (r.satisfied, r.attained) == (True, False)
    assert is_primitive(SIX) and is_one_to_one(SIX)
    r = check_symbol_bound(TOEPLITZ, SIX)
    assert (r.bound, r.zeta_size, r.satisfied) == (5, 6, False)


def test_symbol_bound_hypotheses():
    with pytest.raises(HypothesisError, match="lengths differ"):
        check_symbol_bound(MORSE, power(MORSE, 2))
    with pytest.raises(HypothesisError):
        check_symbol_bound(MORSE, Substitution.from_mapping({"0": "01", "1": "01"}))
