import legfront


def test_invariants_of_unknot():
    assert legfront.invariants_text("L1 R1") == (-1, 0)


def test_invariants_of_trefoil():
    assert legfront.invariants_text("L1 L3 X2 X2 X2 R1 R1") == (1, 0)
