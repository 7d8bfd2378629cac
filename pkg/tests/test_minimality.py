import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hiercode.code import BudgetExceeded, DefiningSet, codeword, covers
from hiercode.gf2 import BitVec, rank
from hiercode.harness import instance_defining_set
from hiercode.minimality import (
    Method,
    RankDeficientError,
    Result,
    ZeroCodewordError,
    ashikhmin_barg_check,
    code_is_minimal,
    codeword_verdicts,
    find_witness,
    h_set,
    is_minimal_definitional,
    is_minimal_geometric,
    validate_witness,
)
from hiercode.randomized import monotone, random_full_rank_set, random_nested_pair

from conftest import poset_instances

V = BitVec.from_str


def word(x, cols):
    return tuple(bin(x & d).count("1") % 2 for d in cols)


def minimal_bruteforce(D, y):
    """Tuple-based restatement of the definition, sharing no code with the library."""
    cy = word(y, D.columns)
    for x in range(1 << D.k):
        cx = word(x, D.columns)
        if any(cx) and cx != cy and all(a <= b for a, b in zip(cx, cy)):
            return False
    return True


def d0(m, l):
    return instance_defining_set(m, l, (), "D0")[0]


def d(m, l, masks):
    return instance_defining_set(m, l, masks, "D")[0]


class TestDefinitional:
    def test_identity(self, identity3):
        v = is_minimal_definitional(V("110"), identity3)
        assert v.result is Result.NOT_MINIMAL
        assert v.witness == (V("110"), V("100"))

    def test_simplex(self, simplex2):
        assert is_minimal_definitional(V("10"), simplex2).result is Result.MINIMAL

    def test_d0_m2_l2(self):
        v = is_minimal_definitional(V("1100"), d0(2, 2))
        assert v.result is Result.NOT_MINIMAL
        assert v.witness == (V("1100"), V("1000"))

    def test_zero_codeword(self, identity3):
        with pytest.raises(ZeroCodewordError):
            is_minimal_definitional(0, identity3)
        with pytest.raises(ZeroCodewordError):
            is_minimal_definitional(V("100"), d0(1, 2))

    def test_budget(self):
        D = DefiningSet.of([1 << i for i in range(17)], 17)
        with pytest.raises(BudgetExceeded):
            is_minimal_definitional(1, D)
        with pytest.raises(BudgetExceeded):
            code_is_minimal(D, Method.DEFINITIONAL)


class TestHSet:
    def test_zero_y(self, identity3):
        assert h_set(0, identity3) == identity3.vectors

    def test_identity(self, identity3):
        assert h_set(V("110"), identity3) == [V("001")]

    def test_d0_m2_l1_empty(self):
        assert h_set(V("001"), d0(2, 1)) == []


class TestGeometric:
    def test_identity(self, identity3):
        v = is_minimal_geometric(V("110"), identity3)
        assert v.result is Result.NOT_MINIMAL
        assert validate_witness(identity3, *v.witness)

    def test_d0_m3_l2_case1(self):
        D = d0(3, 2)
        assert is_minimal_geometric(V("00010"), D).result is Result.MINIMAL
        # the explicit independent family from the case-1 argument, gamma_1 = e_2
        g1 = V("01")
        fam = [BitVec.unit(i, 3).concat(g1) for i in (1, 2, 3)] + [BitVec.zero(3).concat(g1)]
        cols = set(h_set(V("00010"), D))
        assert all(f in cols for f in fam)
        assert rank(fam) == 4

    def test_d0_m2_l2(self):
        D = d0(2, 2)
        h = h_set(V("1100"), D)
        assert sorted(str(x) for x in h) == ["0001", "0010", "0011"]
        assert is_minimal_geometric(V("1100"), D).result is Result.NOT_MINIMAL

    def test_rank_deficient(self):
        with pytest.raises(RankDeficientError, match="reduce_to_full_rank"):
            is_minimal_geometric(V("010"), d0(1, 2))

    def test_zero(self, identity3):
        with pytest.raises(ZeroCodewordError):
            is_minimal_geometric(0, identity3)


class TestCodeLevel:
    @pytest.mark.parametrize("masks", [(1,), (2,), (3,), (1, 2)])
    def test_m3_l2_minimal(self, masks):
        D = d(3, 2, masks)
        for method in (Method.GEOMETRIC, Method.DEFINITIONAL):
            assert code_is_minimal(D, method).result is Result.MINIMAL

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_l1_not_minimal(self, m):
        D = d(m, 1, (1,))
        for method in (Method.GEOMETRIC, Method.DEFINITIONAL):
            v = code_is_minimal(D, method)
            assert v.result is Result.NOT_MINIMAL
            assert validate_witness(D, *v.witness)

    def test_punctured_simplex(self):
        D = DefiningSet.of(range(1, 8), 3)
        assert code_is_minimal(D, Method.GEOMETRIC).result is Result.MINIMAL
        assert code_is_minimal(D, Method.DEFINITIONAL).result is Result.MINIMAL

    def test_rank_deficient_geometric_reduces(self):
        D = d0(1, 3)
        assert not D.full_rank
        assert code_is_minimal(D, Method.GEOMETRIC).result is Result.MINIMAL

    def test_methods_return_same_first_witness(self):
        for m, l, masks in [(2, 2, (3,)), (2, 3, (7,)), (1, 3, (3,)), (2, 1, (1,))]:
            D = d(m, l, masks)
            g = code_is_minimal(D, Method.GEOMETRIC)
            b = code_is_minimal(D, Method.DEFINITIONAL)
            assert g.witness == b.witness == find_witness(D)


class TestAshikhminBarg:
    def test_simplex(self, simplex2):
        assert ashikhmin_barg_check(simplex2).result is Result.MINIMAL

    def test_identity(self, identity3):
        assert ashikhmin_barg_check(identity3).result is Result.INCONCLUSIVE
        assert code_is_minimal(identity3, Method.DEFINITIONAL).result is Result.NOT_MINIMAL

    def test_inconclusive_but_minimal(self):
        # m = 1, l = 4, B = {2,3}, {2,4}, {3,4}, {2,5}: w_min / w_max = 7 / 14
        D = d(1, 4, (3, 5, 6, 9))
        assert ashikhmin_barg_check(D).result is Result.INCONCLUSIVE
        assert code_is_minimal(D, Method.DEFINITIONAL).result is Result.MINIMAL

    def test_never_not_minimal(self):
        for *_, D in poset_instances(6, t_max=2):
            v = ashikhmin_barg_check(D)
            assert v.result is not Result.NOT_MINIMAL
            if v.result is Result.MINIMAL:
                assert code_is_minimal(D, Method.DEFINITIONAL).minimal


class TestFindWitness:
    @pytest.mark.parametrize("l", [2, 3, 4])
    def test_d0_m2(self, l):
        D = d0(2, l)
        assert find_witness(D) is not None
        u = V("11" + "0" * l)
        v = V("10" + "0" * l)
        assert validate_witness(D, u, v)

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_d0_l1(self, m):
        D = d0(m, 1)
        assert find_witness(D) is not None
        u = BitVec.zero(m).concat(V("1"))
        v = V("11" + "0" * (m - 2)).concat(V("1"))
        assert validate_witness(D, u, v)

    def test_d_m1_l3(self):
        D = d(1, 3, (0b011,))
        assert find_witness(D) is not None
        assert validate_witness(D, V("0001"), V("1001"))

    def test_minimal_code_has_none(self):
        assert find_witness(d0(3, 2)) is None


def test_codeword_verdicts_match_bruteforce():
    for m, l, fam, kind, D in poset_instances(5, t_max=2):
        reps = D.coset_representatives()[1:]
        for method in (Method.GEOMETRIC, Method.DEFINITIONAL):
            verdicts = codeword_verdicts(D, method)
            assert len(verdicts) == len(reps)
            for y, v in zip(reps, verdicts):
                assert v.minimal == minimal_bruteforce(D, y), (m, l, fam, kind, y)
                if v.witness:
                    assert v.witness[0].bits == y
                    assert validate_witness(D, *v.witness)


def test_single_codeword_apis_agree_with_scan():
    for m, l, fam, kind, D in poset_instances(5, t_max=1):
        if not D.full_rank:
            continue
        scan = codeword_verdicts(D, Method.DEFINITIONAL)
        for y, v in zip(D.coset_representatives()[1:], scan):
            assert is_minimal_geometric(y, D).witness == v.witness
            assert is_minimal_definitional(y, D).witness == v.witness


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_geometric_equals_definitional_random(k, rnd):
    D = random_full_rank_set(random.Random(rnd.random()), k)
    geo = codeword_verdicts(D, Method.GEOMETRIC)
    dfn = codeword_verdicts(D, Method.DEFINITIONAL)
    assert [(v.result, v.witness) for v in geo] == [(v.result, v.witness) for v in dfn]


def test_proposition_both_directions_small():
    for *_, D in poset_instances(5, t_max=2):
        hs = [set(h_set(x, D)) for x in range(1 << D.k)]
        words = [codeword(x, D) for x in range(1 << D.k)]
        for x, y in itertools.product(range(1 << D.k), repeat=2):
            assert covers(words[y], words[x]) == (hs[y] <= hs[x])


def test_monotonicity_random():
    rng = random.Random(11)
    hits = 0
    for _ in range(150):
        M, N = random_nested_pair(rng, rng.randint(1, 5))
        assert set(M.columns) <= set(N.columns)
        assert monotone(M, N)
        hits += bool(code_is_minimal(M, Method.DEFINITIONAL).minimal)
    assert hits > 0
