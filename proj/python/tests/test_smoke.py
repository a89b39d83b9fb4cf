import pytest

import ordval


def test_group_predicates():
    assert ordval.densely_ordered("lex(loc{2}, loc{2})")
    assert not ordval.dense_in_hull("lex(loc{2}, loc{2})")
    assert ordval.dense_in_hull("lex(Q, loc{2})")
    assert ordval.discretely_ordered("lex(Z, Z)")
    assert ordval.closed_in_hull("omega(prefixprimes)")
    assert ordval.limit_point("lex(loc{2}, loc{2})", "{2: 1/3}")
    assert ordval.member("loc{2}", "{1: 3/8}")
    assert not ordval.member("loc{2}", "{1: 1/3}")


def test_oracles_and_witnesses():
    assert ordval.between("lex(loc{2}, loc{2})", "{1: 1/3}", "{1: 1/3, 2: 1}") is None
    assert ordval.between("Q", "{}", "{1: 1}") is not None
    assert ordval.nondense_witness("lex(loc{2}, loc{2})") == "{1: 1/3}"
    assert ordval.p_divisible_segment("omega(prefixprimes)", 2) == "trivial"
    assert ordval.p_divisible_segment("omega(prefixprimes)", 3) == "whole"


def test_series_field():
    ctx = ("Q", "Q")
    assert ordval.s_mul(*ctx, "1*t^({1:1})", "2*t^({1:2})") == "2*t^({1: 3})"
    assert ordval.s_vmin(*ctx, "3*t^({1:1/2}) + t^({1:2})") == "{1: 1/2}"
    terms, guarantee, exact = ordval.trunc_inverse(*ctx, "1*t^({}) + -1*t^({1:1})", 3)
    assert terms == "1*t^({}) + 1*t^({1: 1}) + 1*t^({1: 2})"
    assert guarantee == "{1: 2}"
    assert not exact
    terms, _, _ = ordval.trunc_sqrt(*ctx, "1*t^({}) + 1*t^({1:1})", 3)
    assert terms == "1*t^({}) + 1/2*t^({1: 1}) + -1/8*t^({1: 2})"


def test_cuts_and_formula():
    cut = ordval.make_cut("rc(Q)", "lex(loc{2}, loc{2})", "group-limit")
    assert cut == "t^({2: 1/3})"
    args = ("rc(Q)", "lex(loc{2}, loc{2})")
    assert not ordval.member_os(*args, "1*t^({2:-1})", cut)
    assert ordval.os_violation_witness(*args, "1*t^({2:-1})", cut) == "1*t^({2: 1/2})"
    assert not ordval.phi_holds("Q", "Q", "2*t^({1:0})")
    assert ordval.phi_holds("quad(2)", "Q", "2*t^({1:0})")


def test_classify_and_cli():
    text = ordval.classify_text("Q", "lex(loc{2}, loc{2})")
    assert "dense_in_hull: false" in text
    assert '"arc_v0_collapse": true' in ordval.classify_json("Q", "lex(loc{2}, loc{2})")
    code, out = ordval.run_command(["predicate", "phi", "--coeff", "Q", "--group", "Q",
                                    "--at", "2*t^({1:0})"])
    assert (code, out) == (0, "phi: false\n")
    code, out = ordval.run_command(["parse", "lex("])
    assert code == 2 and "offset 4" in out


def test_suites_and_errors():
    passed, assertions, _ = ordval.run_suite("examples")
    assert passed and assertions >= 14
    passed, _, _ = ordval.run_suite("lemma415", seed=7, trials=50)
    assert passed
    with pytest.raises(ValueError):
        ordval.canonical_group("loc{4}")
