import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from selfdual.buildup import (
    EXHAUSTIVE_LIMIT,
    BuildUpWitness,
    Exhausted,
    FreeRankTooSmall,
    LengthTooSmall,
    NotSelfDual,
    WitnessInvalid,
    all_st_assignments,
    buildup,
    find_witness_vectors,
    modified_buildup,
    reduce,
    seed_code,
)
from selfdual.codes import Code, is_self_dual, same_row_space
from selfdual.ring import RingSpec, get_ring
from selfdual.search import fixtures, table_code

GF3, GF7, Z9 = RingSpec.field(3), RingSpec.field(7), RingSpec.zpm(3, 2)
RINGS = [GF3, GF7, RingSpec.field(11), Z9, RingSpec.zpm(3, 3), RingSpec.galois(3, 2, 2),
         RingSpec.zpm(7, 2), RingSpec.field(3, 3)]


def c1_witness():
    return BuildUpWitness.from_ints(Z9, [1, 3, 5, 0], [3, 8, 0, 4], 2, 2)


def test_seed_code_is_self_dual():
    for spec in RINGS:
        c = seed_code(spec)
        assert c.n == 4 and is_self_dual(c)


def test_buildup_layout():
    c1 = fixtures()["c1"].code
    g = buildup(c1, c1_witness())
    assert g.n == 8 and g.k == 4
    assert g.gen[:2, :4].tolist() == [[1, 0, 0, 0], [0, 1, 0, 0]]
    assert g.gen[:2, 4:].tolist() == [[1, 3, 5, 0], [3, 8, 0, 4]]
    assert np.array_equal(g.gen[2:, 4:], c1.gen)


@pytest.mark.parametrize("bad", ["x1x1", "x1x2", "ab", "length"])
def test_invalid_witness(bad):
    c1 = fixtures()["c1"].code
    x1, x2, a, b = [1, 3, 5, 0], [3, 8, 0, 4], 2, 2
    if bad == "x1x1":
        x1 = [1, 3, 5, 1]
    elif bad == "x1x2":
        x2 = x1
    elif bad == "ab":
        a = 1
    else:
        x1, x2 = x1 + [0], x2 + [0]
    w = BuildUpWitness.from_ints(Z9, x1, x2, a, b)
    assert bool(w.problems()) == (bad != "length")
    with pytest.raises(WitnessInvalid):
        buildup(c1, w)


def test_buildup_rejects_non_self_dual_seed():
    c = Code.from_rows(GF3, [[1, 1, 1, 0]])
    w = next(find_witness_vectors(seed_code(GF3)))
    with pytest.raises(NotSelfDual):
        buildup(c, w)


def test_exhaustive_contains_known_witness():
    c1 = fixtures()["c1"].code
    target = c1_witness()
    found = False
    for w in find_witness_vectors(c1, "exhaustive", alpha=2, beta=2):
        assert not w.problems()
        if np.array_equal(w.x1, target.x1) and np.array_equal(w.x2, target.x2):
            found = True
            break
    assert found


def test_exhaustive_ternary_postcondition():
    ws = list(find_witness_vectors(seed_code(GF3), "exhaustive"))
    assert ws
    assert all(not w.problems() for w in ws)
    assert len({(w.x1.tobytes(), w.x2.tobytes()) for w in ws}) == len(ws)


def test_exhaustive_limit():
    code = fixtures()["s11"].code
    assert 3**code.n > EXHAUSTIVE_LIMIT
    with pytest.raises(ValueError):
        next(find_witness_vectors(code, "exhaustive"))


def test_random_witnesses_gf7_length16():
    c16 = table_code(3, 1)
    ws = list(find_witness_vectors(c16, seed=1, count=100))
    assert len(ws) == 100 and all(not w.problems() for w in ws)


def test_random_stream_is_deterministic():
    c = fixtures()["g2"].code
    a = [w.x1.tolist() + w.x2.tolist() for w in find_witness_vectors(c, seed=9, count=20)]
    b = [w.x1.tolist() + w.x2.tolist() for w in find_witness_vectors(c, seed=9, count=20)]
    assert a == b


def test_no_witnesses_raises_exhausted():
    # x.x = -1 has no solution in GF(3)^1
    c = Code.from_rows(GF3, [[1]])
    with pytest.raises(Exhausted):
        next(find_witness_vectors(c, "exhaustive"))


@given(st.sampled_from(RINGS), st.integers(0, 2**32 - 1))
def test_random_buildup_is_self_dual(spec, seed):
    c = seed_code(spec)
    for w in find_witness_vectors(c, seed=seed, count=3):
        big = buildup(c, w)
        assert big.n == 8 and is_self_dual(big)
        for w2 in find_witness_vectors(big, seed=seed + 1, count=1):
            assert is_self_dual(buildup(big, w2))


# --------------------------------------------------------------------------
# coset variant


def test_modified_all_zero_assignment_is_empty():
    # s = t = 0 forces x1 into C0 = C0^perp, so (1,0,0,0,x1) has norm 1, never 0
    c0 = Code.from_rows(GF3, [[1, 0, 1, 1], [0, 1, 1, 2]])
    assert modified_buildup(c0, [[0, 0], [0, 0]]) == []


def test_modified_recovers_buildup_of_a_witness():
    c0 = Code.from_rows(GF3, [[1, 0, 1, 1], [0, 1, 1, 2]])
    w = next(find_witness_vectors(c0, seed=4))
    s, t, _ = w.derived(c0)
    # buildup's rows start with (-s_i, -t_i); the coset variant's with (s_i, t_i)
    out = modified_buildup(c0, np.stack([-s, -t], axis=1))
    assert out and all(is_self_dual(c) and c.n == 8 for c in out)
    assert any(same_row_space(c, buildup(c0, w)) for c in out)


def test_modified_gf7_one_assignment():
    c0 = seed_code(GF7)
    out = modified_buildup(c0, [[1, 2], [3, 0]])
    assert all(is_self_dual(c) for c in out)


def test_all_st_assignments_count():
    assert sum(1 for _ in all_st_assignments(GF3, 2)) == 81


def test_modified_requires_field():
    with pytest.raises(ValueError):
        modified_buildup(fixtures()["c1"].code, [[0, 0], [0, 0]])


# --------------------------------------------------------------------------
# converse


def test_reduce_g2():
    g2 = buildup(fixtures()["c1"].code, c1_witness())
    cert = reduce(g2, 2, 2)
    assert cert.c0.n == 4 and is_self_dual(cert.c0)
    assert same_row_space(cert.permuted, cert.rebuilt())
    assert min(cert.unit_counts) >= 2


def test_reduce_c28_gives_length_24():
    cert = reduce(fixtures()["g_c28"].code)
    assert cert.c0.n == 24 and is_self_dual(cert.c0) and cert.check()


def test_reduce_errors():
    with pytest.raises(LengthTooSmall):
        reduce(fixtures()["c1"].code)
    with pytest.raises(NotSelfDual):
        reduce(Code.from_rows(GF3, np.eye(8, dtype=int)[:4]))
    # 3 Z9^8 is self-dual with no free rows
    tors = Code.from_rows(Z9, 3 * np.eye(8, dtype=int))
    assert is_self_dual(tors)
    with pytest.raises(FreeRankTooSmall):
        reduce(tors)


@given(st.sampled_from(RINGS), st.integers(0, 2**32 - 1))
def test_reduce_buildup_round_trip(spec, seed):
    c = seed_code(spec)
    w = next(find_witness_vectors(c, seed=seed))
    big = buildup(c, w)
    w2 = next(find_witness_vectors(big, seed=seed))
    cert = reduce(buildup(big, w2))
    assert cert.check()
    assert cert.c0.n == 8


def test_witness_derived_values():
    c1 = fixtures()["c1"].code
    w = c1_witness()
    s, t, y = w.derived(c1)
    R = get_ring(Z9)
    assert s.tolist() == [int(R.dot(r, w.x1)) for r in c1.gen]
    assert t.tolist() == [int(R.dot(r, w.x2)) for r in c1.gen]
    assert y.shape == (2, 4)
