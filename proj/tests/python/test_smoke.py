import itertools
import pathlib

import pytest

import semacode

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"


def words(letters, cap):
    for n in range(cap + 1):
        for w in itertools.product(letters, repeat=n):
            yield "".join(w)


def test_ideal_membership_matches_factor_check():
    a = semacode.Alphabet.binary()
    ideal = semacode.Ideal.generated(a, "two-sided", ["ab", "bba"])
    for w in words("ab", 6):
        assert (w in ideal) == ("ab" in w or "bba" in w), w


def test_meet_and_join():
    a = semacode.Alphabet.binary()
    i = semacode.Ideal.generated(a, "two-sided", ["a"])
    j = semacode.Ideal.generated(a, "two-sided", ["b"])
    meet, join = i & j, i | j
    for w in words("ab", 5):
        assert (w in meet) == ("a" in w and "b" in w)
        assert (w in join) == (w != "")
    assert meet.subset_of(join)
    assert not join.subset_of(meet)


def test_code_of_cofinite_ideal_is_semaphore():
    a = semacode.Alphabet.binary()
    ideal = semacode.Ideal.cofinite(a, "two-sided", ["", "b", "bb"])
    code = ideal.code(6)
    assert semacode.is_semaphore_code(a, code)
    for w in code:
        assert w in ideal and w[1:] not in ideal


def test_bad_side_raises():
    with pytest.raises(semacode.SemacodeError):
        semacode.Ideal.generated(semacode.Alphabet.binary(), "sideways", ["a"])


def test_example_machine_accepts_anbn():
    t = semacode.TuringMachine.example()
    for w in words("ab", 8):
        n = len(w) // 2
        expected = n >= 1 and w == "a" * n + "b" * n
        assert t.run(w)["accepted"] == expected, w
    assert t.beta_omega_tracked("a@q0", "b", "") == "Y@q6"
    assert not t.is_legal("a@q0 b@q1")


def test_machine_file_matches_builtin():
    t = semacode.TuringMachine.parse((DATA / "anbn.tm").read_text())
    assert t.run("aabb")["accepted"]
    assert not t.run("aab")["accepted"]


def test_reset_search_agrees_with_closed_form():
    t = semacode.TuringMachine.example()
    for w in ["a", "b", "Y", "a@q1", "b@q0", "X", "a b"]:
        verdict = semacode.reset_search(t, w, "right", 3, 100)
        if verdict == "NonReset":
            assert semacode.example_nonreset(t, w), w
    assert semacode.reset_search(t, "a", "right", 3, 100) == "NonReset"


def test_rsc_ell_is_semaphore():
    t = semacode.TuringMachine.example()
    code = semacode.rsc_ell(t, 1)
    assert semacode.is_semaphore_code(t.omega, code)
    assert len(code) == len(t.omega)


def test_worked_hat_lift():
    c = semacode.classify(fixture="newnotsp")
    assert c["special"] == "false"
    assert {"a", "bba"} <= set(c["lambda"])
    part = semacode.classify(partition=(DATA / "newnotsp.part").read_text())
    assert part["lambda"] == c["lambda"]
    assert [w for w in semacode.classify(fixture="newcer")["res"] if len(w) <= 2] == ["aa", "ab"]


def test_notr_trace_is_not_transitive():
    rel = set(semacode.rho_k("notr", 2))
    assert ("aa", "ba") in rel and ("ba", "bb") in rel
    assert ("aa", "bb") not in rel


def test_graph_and_sequence_files():
    text = (DATA / "debruijn2.graph").read_text()
    assert semacode.is_k_reset(text, 2)
    assert not semacode.is_k_reset(text, 1)
    report = semacode.verify_projective((DATA / "constant.seq").read_text())
    assert report["violations"] == []
    assert report["maps_checked"] == 6
