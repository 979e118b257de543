"""Smoke test for the extension module; runs under ctest or pytest."""

import nanoinv


def test_basics():
    assert nanoinv.rank("A:+ B:+ C:+ B:+ A:+ C:+") == 3
    assert len(nanoinv.orbit("X:+ X:+ Y:- Y:-")) == 4
    assert nanoinv.canonical("X:+ Y:- X:+ | Y:-") == "A:+ B:- A:+ | B:-"
    assert nanoinv.cyclic_canonical("A:- A:-") == nanoinv.cyclic_canonical("A:+ A:+")
    assert len(nanoinv.subphrases("A:+ B:+ A:+ | B:+")) == 4
    assert nanoinv.pair("A:+ A:+", "A:+ A:+ B:- B:- C:+ C:+") == 2


def test_invariants():
    assert nanoinv.arnold("A:+ A:+ B:- B:- C:+ C:+") == {"Jplus": "-2/1", "Jminus": "-5/1", "St": "1/1"}
    g = nanoinv.gamma("A:+ A:+", 1)
    assert sum(g.values()) == 2
    abc = nanoinv.Alphabet("x,y,z", "x<->y")
    assert nanoinv.cyclic_canonical("A:y A:y", abc) == "A:x A:x"


def test_errors_and_cli():
    try:
        nanoinv.rank("A:+ A:+ A:+")
    except nanoinv.NanoError as e:
        assert "occurs 3 times" in str(e)
    else:
        raise AssertionError("expected NanoError")
    code, out, _ = nanoinv.run_cli(["rank", "A:+ A:+"])
    assert code == 0 and out == "1\n"
    checks = nanoinv.verify("theta-phi")
    assert [c["criterion"] for c in checks] == [1, 2, 3]
    assert all(c["passed"] for c in checks)


if __name__ == "__main__":
    test_basics()
    test_invariants()
    test_errors_and_cli()
    print("python smoke: ok")
