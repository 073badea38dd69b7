import comyhill as c


def test_conat_arithmetic():
    assert c.add(c.nat(2), 3).value() == 5
    assert c.min(3, "inf").value() == 3
    assert c.max(c.nat(3), c.inf()).value(256) is None
    assert c.sub(7, 2).value() == 5
    assert c.lift("double", 4).value() == 8
    assert c.nat(3).bits(5) == [0, 0, 0, 1, 0]


def test_selection():
    q = lambda x: not x.at_least(4) or x.at_least(6)  # false exactly at 4, 5
    e = c.epsilon(q)
    assert e.value() == 4
    assert not c.forall(q)
    assert c.exists(q)
    assert c.forall(lambda x: True)
    assert c.epsilon(lambda x: True).value(256) is None


def test_myhill_nat():
    m = c.myhill_nat("even-odd-ladder")
    for x in range(64):
        assert m.h_inv(m.h(x)) == x
    s = c.myhill_nat_fns(lambda n: n + 1, lambda n: n + 1)
    assert [s.h(x) for x in range(6)] == [1, 0, 3, 2, 5, 4]
    assert s.witness(1) == -1


def test_myhill_conat():
    b = c.myhill_conat("lifted-ladder")
    assert b.h("inf").value(128) is None
    for k in range(16):
        assert b.h_inv(b.h(k)).value(128) == k
    assert b.continuous(16)
    col = c.myhill_conat("collapse(2)")
    assert col.switch_rank(4) is not None
    assert col.witness(5) is not None


def test_two_ninfty():
    b = c.two_bijection("broken-ladder(4)")
    level, v = b.h(1, 3)
    back_level, back = b.h_inv(level, v)
    assert (back_level, back.value(128)) == (1, 3)


def test_adversary_report():
    r = c.adversary("assume-infinite")
    assert r["outcome"] == "Defeated"
    for key in ("candidate", "stage", "n", "m", "s_left", "s_right", "committed_x", "violation",
                "forced_bits_highwater"):
        assert key in r
    assert c.adversary("assume-infinite", budget=0)["outcome"] == "Survived"


def test_registry_and_errors():
    names = [n for n, _, _ in c.families()]
    assert "broken-ladder(x)" in names
    try:
        c.myhill_nat("nope")
    except c.ComyhillError as e:
        assert "nope" in str(e)
    else:
        raise AssertionError("unknown family accepted")
