import itertools

import pytest

from subconj.blockcode import LocalRule, apply_rule, constant_rule, find_inverse_rule, identity_rule, image_language, shift_normalize
from subconj.core import HypothesisError, RangeError
from subconj.presentation import k_block_rule
from subconj.substitution import MORSE, TOEPLITZ, Substitution, language, parse_substitution, power
from subconj.verifier import (
    CertificateFailure,
    ConjugacyCertificate,
    Theorem2Certificate,
    build_certificate,
    build_theorem2_certificate,
    check_interior_disagreement,
    check_star,
    check_star2,
    find_N,
)
from oracles import expand

MORSE2 = power(MORSE, 2)
ENDONLY = Substitution.from_mapping({"0": "010", "1": "011"})
XOR_ENDS = LocalRule.from_function(lambda x: str(int(x[0]) ^ int(x[3])), "01", 0, 3)
TWO_BLOCK = k_block_rule(MORSE, 2)


def star_by_strings(rules, f, N, three_blocks):
    """Independent (*) check: expand with string replacement, apply f window by window."""
    c = len(rules["0"]) ** N
    images = {}
    for w in three_blocks:
        x = expand(rules, w, N)
        images[w] = [f(tuple(x[i : i + f.width])) for i in range(2 * c)]
    return all(
        images[p] != images[q]
        for p, q in itertools.combinations(three_blocks, 2)
        if p[1] != q[1]
    )


def test_check_star_morse2_identity():
    res = check_star(MORSE2, identity_rule("01"), 1)
    assert res.passed
    three = language(MORSE2, 3).strings()
    assert star_by_strings({"0": "0110", "1": "1001"}, identity_rule("01"), 1, three)
    assert all(0 <= i < 8 for _, _, i in res.evidence)
    # distinct middles already differ inside the middle image
    for p, q, _ in res.evidence:
        assert MORSE2(p)[4:8] != MORSE2(q)[4:8]


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_check_star_constant_fails(N):
    res = check_star(MORSE, constant_rule("01"), N)
    assert not res.passed and res.witness is not None


def test_check_star_presentation_rule():
    f = k_block_rule(MORSE, 3)
    assert f.anticipation == 2
    with pytest.raises(RangeError):
        check_star(MORSE, f, 1)
    three = language(MORSE, 3).strings()
    assert check_star(MORSE, f, 2).passed
    assert star_by_strings({"0": "01", "1": "10"}, f, 2, three)
    assert find_N(MORSE, f) == 2


def test_check_star_requires_one_to_one():
    merge = Substitution.from_mapping({"0": "01", "1": "01"})
    with pytest.raises(HypothesisError):
        check_star(merge, identity_rule("01"), 1)


def test_find_N():
    assert find_N(MORSE2, identity_rule("01")) == 1
    assert find_N(MORSE, constant_rule("01")) is None


def test_star_failure_is_deterministic():
    a = check_star(MORSE, constant_rule("01"), 3)
    b = check_star(MORSE, constant_rule("01"), 3)
    assert a == b


def test_certificate_morse2_identity():
    cert = build_certificate(MORSE2, identity_rule("01"), depth=4)
    assert isinstance(cert, ConjugacyCertificate)
    assert cert.N == 1
    assert cert.condition1.unique and cert.condition2 and cert.condition3
    assert [("".join(k), "".join(v)) for k, v in cert.g_table] == [
        ("00", "0110"),
        ("01", "0110"),
        ("10", "1001"),
        ("11", "1001"),
    ]
    for st, b in cert.g_table:
        assert len(b) == 4


def test_certificate_failure_at_find_N():
    res = build_certificate(MORSE, constant_rule("01"), N_max=5)
    assert isinstance(res, CertificateFailure)
    assert res.condition == "star"


def test_certificate_presentation_rule_gives_zeta_system(fixtures_dir):
    f = k_block_rule(MORSE, 3)
    cert = build_certificate(MORSE, f)
    assert isinstance(cert, ConjugacyCertificate)
    zeta = parse_substitution((fixtures_dir / "zeta6.sub").read_text())
    for n in range(1, 9):
        assert image_language(f, MORSE, n) == language(zeta, n)


def test_certificate_accepts_memory():
    centred = LocalRule(1, 1, k_block_rule(MORSE, 3).table)
    cert = build_certificate(MORSE, centred)
    assert cert.shift == 1 and cert.f.memory == 0


@pytest.mark.parametrize(
    "theta, f",
    [
        (MORSE2, identity_rule("01")),
        (MORSE, k_block_rule(MORSE, 3)),
        (MORSE, k_block_rule(MORSE, 2)),
        (TOEPLITZ, identity_rule("01")),
        (TOEPLITZ, k_block_rule(TOEPLITZ, 3)),
    ],
)
def test_certificate_soundness(theta, f):
    cert = build_certificate(theta, f, depth=4)
    assert cert.ok
    g = cert.g
    # the induced 2-block map determines every letter that has both neighbours
    for k in range(3, 9):
        seen = {}
        for w in language(theta, k):
            y = tuple(s for i in range(k - 1) for s in g[w[i : i + 2]])
            assert seen.setdefault(y, w[1:-1]) == w[1:-1]
    assert find_inverse_rule(cert.f, theta, 6) is not None


def test_certificate_json_is_stable():
    a = build_certificate(MORSE, k_block_rule(MORSE, 3)).to_json()
    b = build_certificate(MORSE, k_block_rule(MORSE, 3)).to_json()
    assert a == b


def test_interior_disagreement():
    res = check_interior_disagreement(MORSE2)
    assert res.passed
    assert res.evidence == (("0", "1", (1, 2)),)
    res = check_interior_disagreement(ENDONLY)
    assert not res.passed and res.witness == ("0", "1")
    with pytest.raises(HypothesisError, match="L >= 3"):
        check_interior_disagreement(MORSE)


def test_check_star2():
    assert check_star2(MORSE2, identity_rule("01"), 1).passed
    assert not check_star2(MORSE2, constant_rule("01"), 1).passed
    res = check_star2(MORSE2, XOR_ENDS, 1)
    assert not res.passed and res.collision == ("0", "1")
    # oracle: 0110 and 1001 both give 0 xor 0 / 1 xor 1
    assert XOR_ENDS(tuple("0110")) == XOR_ENDS(tuple("1001")) == "0"


@pytest.mark.parametrize(
    "f", [identity_rule("01"), TWO_BLOCK, k_block_rule(MORSE, 3), constant_rule("01"), XOR_ENDS]
)
@pytest.mark.parametrize("N", [1, 2])
def test_star2_implies_star(f, N):
    if check_star2(MORSE2, f, N).passed:
        assert check_star(MORSE2, f, N).passed


def test_letter_blocks_identity():
    cert = build_theorem2_certificate(MORSE2, identity_rule("01"))
    assert isinstance(cert, Theorem2Certificate)
    assert (cert.N, cert.a) == (1, 0)
    assert dict(cert.B) == {"0": tuple("0110"), "1": tuple("1001")}
    assert cert.Bprime == ((),)
    assert cert.mirroring


def test_letter_blocks_recover_preimage():
    cert = build_theorem2_certificate(MORSE2, identity_rule("01"))
    letter_of = {b: s for s, b in cert.B}
    for w in language(MORSE2, 5):
        y = tuple(expand({"0": "0110", "1": "1001"}, "".join(w), 1))
        assert tuple(letter_of[y[i : i + 4]] for i in range(0, 20, 4)) == w


def test_letter_blocks_nonempty_between_blocks():
    cert = build_theorem2_certificate(MORSE2, TWO_BLOCK, depth=4)
    assert isinstance(cert, Theorem2Certificate)
    assert cert.a == 1 and cert.N == 1
    assert cert.Bprime and all(len(b) == 1 for b in cert.Bprime)
    keys = [k for k, _ in cert.neighbor_map]
    assert len(keys) == len(set(keys))
    # each between-block sits inside some f(theta^N(st))
    images = [apply_rule(TWO_BLOCK, MORSE2(st)) for st in language(MORSE2, 2)]
    for b in cert.Bprime:
        assert any(b == im[i : i + 1] for im in images for i in range(len(im)))


def test_letter_blocks_hypothesis_gate():
    with pytest.raises(HypothesisError):
        build_theorem2_certificate(ENDONLY, identity_rule("01"))


def test_letter_blocks_fail_when_letters_merge():
    res = build_theorem2_certificate(MORSE2, constant_rule("01"), N_max=3)
    assert isinstance(res, CertificateFailure) and res.condition == "star2"
