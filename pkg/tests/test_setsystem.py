import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ecclab.setsystem import (
    HSE,
    OV,
    SetSystemFormatError,
    SetSystemInstance,
    random_instance,
    read_set_system,
    solve_set_system,
    write_set_system,
)


def test_from_sets_and_unpack():
    inst = SetSystemInstance.from_sets([[0, 2]], [[1]], 3, OV)
    assert inst.list_a == [0b101]
    assert inst.sets_a() == [[0, 2]]
    assert inst.sets_b() == [[1]]


def test_from_sets_rejects_out_of_range():
    with pytest.raises(SetSystemFormatError):
        SetSystemInstance.from_sets([[3]], [], 3, OV)


def test_rejects_unknown_mode():
    with pytest.raises(SetSystemFormatError):
        SetSystemInstance(2, [], [], "xor")


def test_solve_ov():
    inst = SetSystemInstance.from_sets([[0], [1]], [[1], [0]], 2, OV)
    found, wit = solve_set_system(inst)
    assert found and inst.list_a[wit[0]] & inst.list_b[wit[1]] == 0


def test_solve_ov_negative():
    inst = SetSystemInstance.from_sets([[0, 1]], [[0], [1]], 2, OV)
    assert solve_set_system(inst) == (False, None)


def test_solve_hse():
    inst = SetSystemInstance.from_sets([[0, 1], [0]], [[0], [1]], 2, HSE)
    found, wit = solve_set_system(inst)
    assert found and wit == 0


def test_solve_hse_negative():
    inst = SetSystemInstance.from_sets([[0]], [[1]], 2, HSE)
    assert solve_set_system(inst) == (False, None)


def test_empty_b_is_trivially_hit():
    inst = SetSystemInstance.from_sets([[0]], [], 2, HSE)
    assert solve_set_system(inst)[0] is True


def test_bruteforce_against_itertools():
    rng = random.Random(4)
    for _ in range(100):
        inst = random_instance(rng.randint(0, 4), rng.randint(0, 4), rng.randint(1, 5),
                               rng.choice((OV, HSE)), rng)
        found, _ = solve_set_system(inst)
        if inst.mode == OV:
            want = any(a & b == 0 for a in inst.list_a for b in inst.list_b)
        else:
            want = any(all(a & b for b in inst.list_b) for a in inst.list_a)
        assert found == want


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, 5), st.integers(0, 5), st.integers(1, 6))
def test_round_trip(seed, na, nb, d):
    rng = random.Random(seed)
    inst = random_instance(na, nb, d, rng.choice((OV, HSE)), rng)
    back = read_set_system(write_set_system(inst))
    assert back == inst
    assert write_set_system(back) == write_set_system(inst)


def test_read_handles_empty_sets_and_comments():
    text = "# comment\ns 2 1 3 OV\n0 2\n\n1\n"
    inst = read_set_system(text)
    assert inst.sets_a() == [[0, 2], []]
    assert inst.sets_b() == [[1]]


def test_read_rejects_bad_header():
    with pytest.raises(SetSystemFormatError):
        read_set_system("s 1 1 OV\n0\n1\n")
