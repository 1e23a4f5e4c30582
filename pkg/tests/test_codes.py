from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from selfdual.codes import (
    BudgetExceeded,
    Code,
    contains,
    dual,
    inner_product_report,
    is_self_dual,
    low_weight_counts,
    macwilliams,
    mass_formula_gf7,
    min_euclidean_weight,
    min_weight,
    residue_code,
    same_row_space,
    screen,
    torsion_code,
    weight_enumerator,
)
from selfdual.lattice import lattice_report
from selfdual.ring import RingSpec, get_ring
from selfdual.search import fixtures

GF3 = RingSpec.field(3)
Z9 = RingSpec.zpm(3, 2)
SPECS = [GF3, RingSpec.field(7), Z9, RingSpec.zpm(3, 3), RingSpec.galois(3, 2, 2)]


@st.composite
def codes(draw, specs=SPECS, max_n=7, max_k=4):
    spec = draw(st.sampled_from(specs))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    rows = draw(st.lists(st.lists(st.integers(0, spec.size - 1), min_size=n, max_size=n),
                         min_size=k, max_size=k))
    return Code(spec, rows)


def test_standard_form_examples():
    sf = Code.from_rows(GF3, [[0, 1], [1, 0]]).standard
    assert sf.gen.tolist() == [[1, 0], [0, 1]]
    assert sorted(sf.perm.tolist()) == [0, 1]
    c1 = fixtures()["c1"].code
    assert c1.blocks == (2, 0)
    assert c1.standard.gen.tolist() == [[1, 0, 2, 2], [0, 1, 2, 7]]
    t = Code.from_rows(Z9, [[3, 3, 0, 0]])
    assert t.blocks == (0, 1)
    assert t.standard.gen.tolist() == [[3, 3, 0, 0]]
    assert t.cardinality == 3


@given(codes())
def test_standard_form_spans_same_module(code):
    sf = code.standard
    back = Code(code.spec, sf.unpermuted())
    assert same_row_space(code, back)
    # rows are zero left of their pivot and the pivot is gamma^v
    R = code.ring
    for i, v in enumerate(sf.valuations):
        assert not sf.gen[i, :i].any()
        assert int(sf.gen[i, i]) == R.gamma_pow(v)


@given(codes())
def test_dual_cardinality_and_involution(code):
    d = dual(code)
    assert code.cardinality * d.cardinality == code.spec.size**code.n
    assert not code.ring.matmul(code.gen, d.gen.T).any() if d.k else True
    assert same_row_space(dual(d), code)


def test_dual_examples():
    full = Code.from_rows(GF3, np.eye(3, dtype=int))
    assert dual(full).cardinality == 1
    d = dual(Code.from_rows(Z9, [[3, 0], [0, 3]]))
    assert same_row_space(d, Code.from_rows(Z9, [[3, 0], [0, 3]]))


def test_self_duality_examples():
    assert is_self_dual(fixtures()["c1"].code)
    assert not is_self_dual(Code.from_rows(GF3, [[1, 0, 0, 0]]))
    assert is_self_dual(Code.from_rows(GF3, [[1, 0, 1, 1], [0, 1, 1, 2]]))
    rep = inner_product_report(Code.from_rows(GF3, [[1, 0, 1, 1], [1, 1, 0, 0]]))
    assert not rep.self_orthogonal and rep.failures()
    # self-orthogonal but too small
    rep = inner_product_report(Code.from_rows(GF3, [[1, 1, 1, 0, 0, 0]]))
    assert rep.self_orthogonal and not rep.self_dual


def test_contains():
    c = fixtures()["g2"].code
    assert contains(c, c.gen[0])
    assert contains(c, c.ring.mul(3, c.gen[1]))
    assert not contains(c, np.eye(8, dtype=np.int64)[0])


def test_residue_and_torsion_examples():
    c1 = fixtures()["c1"].code
    res = residue_code(c1)
    assert res.spec == GF3
    assert same_row_space(res, Code.from_rows(GF3, [[1, 0, 2, 2], [0, 1, 2, 1]]))
    assert is_self_dual(res)
    tor = torsion_code(Code.from_rows(Z9, [[3, 3, 0, 0]]))
    assert same_row_space(tor, Code.from_rows(GF3, [[1, 1, 0, 0]]))
    assert residue_code(Code.from_rows(Z9, [[3, 3, 0, 0]])).cardinality == 1
    g3res = residue_code(fixtures()["g3"].code)
    assert is_self_dual(g3res) and min_weight(g3res).weight == 6


def test_residue_contained_in_torsion():
    rng = np.random.default_rng(3)
    for _ in range(20):
        code = Code.from_rows(Z9, rng.integers(0, 9, (3, 6)))
        res, tor = residue_code(code), torsion_code(code)
        assert np.all(contains(tor, res.gen)) if res.k else True


def test_zero_code_enumerator():
    z = Code(GF3, np.zeros((1, 5), dtype=np.int64))
    we = weight_enumerator(z)
    assert we.counts == (1, 0, 0, 0, 0, 0)
    assert min_weight(z).weight is None


def test_min_weight_examples():
    assert min_weight(fixtures()["c1"].code).weight == 3
    mw = min_weight(Code.from_rows(GF3, [[1, 1], [2, 2]]))
    assert mw.weight == 2
    assert np.count_nonzero(mw.witness) == 2


@pytest.mark.parametrize("name", ["c1", "g2", "g3", "g4"])
def test_min_weight_witness_is_codeword(name):
    code = fixtures()[name].code
    for use_residue in (True, False):
        mw = min_weight(code, use_residue=use_residue)
        assert contains(code, mw.witness)
        assert np.count_nonzero(mw.witness) == mw.weight


def test_euclidean_enumerator_c1():
    c1 = fixtures()["c1"].code
    R = c1.ring
    dist = {}
    for msg in product(range(9), repeat=2):
        w = R.matmul(np.array([msg]), c1.gen)[0]
        e = sum(min(int(x), 9 - int(x)) ** 2 for x in w)
        dist[e] = dist.get(e, 0) + 1
    we = weight_enumerator(c1, "euclidean")
    assert we.nonzero() == dict(sorted(dist.items()))
    assert min_euclidean_weight(c1).weight == min(e for e in dist if e)


@pytest.mark.parametrize("name", ["c1", "g2", "g3", "g4"])
def test_mu_matches_euclidean_weight(name):
    code = fixtures()[name].code
    m = code.spec.char
    dE = min_euclidean_weight(code).weight
    mu = lattice_report(code).mu
    assert mu == min(dE / m, m)


def test_macwilliams_fixed_point_for_self_dual_codes():
    for name, q in [("g2", 9), ("g3", 9), ("s11", 3), ("c11", 7)]:
        code = fixtures()[name].code
        we = weight_enumerator(code)
        assert macwilliams(we.counts, code.n, q) == we.counts


@given(codes(specs=[GF3, RingSpec.field(7), Z9]))
def test_macwilliams_gives_dual_enumerator(code):
    q = code.spec.size
    we = weight_enumerator(code)
    assert macwilliams(we.counts, code.n, q) == weight_enumerator(dual(code)).counts


@pytest.mark.parametrize("name", ["g3", "g4"])
def test_low_weight_counts_match_full_enumeration(name):
    code = fixtures()[name].code
    low = low_weight_counts(code, 8)
    we = weight_enumerator(code)
    assert low == tuple(we[w] for w in range(9))


def test_budget():
    g5 = fixtures()["g5"].code
    with pytest.raises(BudgetExceeded) as exc:
        weight_enumerator(g5, budget=1000)
    assert exc.value.size == 9**10
    with pytest.raises(BudgetExceeded):
        min_weight(g5, budget=1000, use_residue=False)


def test_jobs_do_not_change_results():
    for name in ["g3", "s11"]:
        code = fixtures()[name].code
        assert weight_enumerator(code, jobs=1) == weight_enumerator(code, jobs=3)
        assert min_weight(code, jobs=1).weight == min_weight(code, jobs=4).weight


def test_screen():
    code = fixtures()["g3"].code
    assert screen(code, 7) is None
    we = screen(code, 6)
    assert we == weight_enumerator(code)


def test_galois_ring_code_enumeration():
    spec = RingSpec.galois(3, 2, 2)
    R = get_ring(spec)
    code = Code(spec, [[1, 0, R.pack([2, 1]), R.pack([0, 3])], [0, 1, 3, R.pack([1, 1])]])
    words = {tuple(R.add(R.mul(a, code.gen[0]), R.mul(b, code.gen[1])))
             for a in range(81) for b in range(81)}
    counts = [0] * 5
    for w in words:
        counts[sum(1 for x in w if x)] += 1
    assert weight_enumerator(code).counts == tuple(counts)


def test_mass_formula():
    assert mass_formula_gf7(2) == 2
    assert mass_formula_gf7(4) == 16
    assert mass_formula_gf7(8) == 2 * 8 * 50 * 344
    with pytest.raises(ValueError):
        mass_formula_gf7(5)
