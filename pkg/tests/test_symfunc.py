import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockheis import oracles
from fockheis.errors import BasisMismatch, InvalidInput
from fockheis.partitions import Partition, partitions_of, partitions_upto
from fockheis.schar import VirtualRep, induction_product
from fockheis.symfunc import (
    SCHUR,
    SymFunc,
    characteristic,
    plethysm_pb,
    power_sum_to_schur,
    schur_multiply,
    schur_to_power_sums,
    to_power_sums,
    to_schur,
)

simple_symfunc_st = st.lists(
    st.tuples(
        st.lists(st.integers(1, 5), max_size=4).map(
            lambda xs: Partition(sorted(xs, reverse=True))
        ),
        st.fractions(min_value=-5, max_value=5, max_denominator=4),
    ),
    max_size=5,
).map(lambda pairs: SymFunc(SCHUR, dict(pairs)))


class TestSchurMultiply:
    def test_pieri_example(self):
        s1 = SymFunc.schur([1])
        assert (s1 * s1).terms == {
            Partition([2]): Fraction(1),
            Partition([1, 1]): Fraction(1),
        }

    def test_lr_example(self):
        f = SymFunc.schur([2, 1])
        assert (f * f).coefficient([4, 2]) == 1

    def test_unit(self):
        f = SymFunc(SCHUR, {Partition([3, 1]): Fraction(2, 3), Partition([2]): -1})
        assert schur_multiply(f, SymFunc.one()).terms == f.terms

    def test_basis_mismatch(self):
        with pytest.raises(BasisMismatch):
            schur_multiply(SymFunc.schur([1]), SymFunc.power([1]))

    def test_tableau_oracle_grid(self):
        # small slice here; the full |mu|+|nu| <= 8 sweep is acceptance 3
        for a in range(0, 4):
            for mu in partitions_of(a):
                for b in range(0, 6 - a):
                    for nu in partitions_of(b):
                        fast = {
                            lam: int(c)
                            for lam, c in schur_multiply(
                                SymFunc.schur(mu), SymFunc.schur(nu)
                            ).terms.items()
                        }
                        assert fast == oracles.schur_product_by_tableaux(mu, nu)

    @given(simple_symfunc_st)
    @settings(max_examples=50, deadline=None)
    def test_cancellation(self, f):
        assert (f - f).is_zero()
        assert schur_multiply(f, SymFunc.zero()).is_zero()


class TestPowerSumConversions:
    def test_power_sum_to_schur_examples(self):
        assert power_sum_to_schur(1).terms == {Partition([1]): 1}
        assert power_sum_to_schur(2).terms == {
            Partition([2]): 1,
            Partition([1, 1]): -1,
        }
        assert power_sum_to_schur(3).terms == {
            Partition([3]): 1,
            Partition([2, 1]): -1,
            Partition([1, 1, 1]): 1,
        }

    def test_schur_to_power_sums_examples(self):
        assert schur_to_power_sums([1]).terms == {Partition([1]): 1}
        assert schur_to_power_sums([2]).terms == {
            Partition([1, 1]): Fraction(1, 2),
            Partition([2]): Fraction(1, 2),
        }
        assert schur_to_power_sums([1, 1]).terms == {
            Partition([1, 1]): Fraction(1, 2),
            Partition([2]): Fraction(-1, 2),
        }

    def test_round_trip_up_to_8(self):
        for tau in partitions_upto(8):
            f = SymFunc.schur(tau)
            assert to_schur(to_power_sums(f)).terms == f.terms

    def test_hook_sum_converts_to_single_power_sum(self):
        for m in range(1, 9):
            p = to_power_sums(power_sum_to_schur(m))
            assert p.terms == {Partition([m]): Fraction(1)}


class TestPlethysm:
    def test_b1_is_identity(self):
        f = SymFunc(SCHUR, {Partition([3, 1]): 2, Partition([2, 2]): -3})
        assert plethysm_pb(f, 1).terms == f.terms

    def test_s1_gives_hook_sum(self):
        for b in range(1, 5):
            assert plethysm_pb(SymFunc.schur([1]), b).terms == power_sum_to_schur(
                b
            ).terms

    def test_s2_b2_frozen_from_monomial_oracle(self):
        # oracle: s2(x^2) in 4 variables expands as s4 - s31 + s22
        got = plethysm_pb(SymFunc.schur([2]), 2)
        assert got.terms == {
            Partition([4]): 1,
            Partition([3, 1]): -1,
            Partition([2, 2]): 1,
        }

    def test_integrality(self):
        for b in range(1, 5):
            for tau in partitions_upto(6):
                out = plethysm_pb(SymFunc.schur(tau), b)
                assert all(c.denominator == 1 for c in out.terms.values()), (tau, b)

    def test_monomial_expansion_oracle(self):
        # s_mu * s_tau[p_b] against brute-force polynomials in N >= |mu|+b|tau| vars
        cases = [
            ([1], [1], 2),
            ([2], [1], 2),
            ([1, 1], [2], 2),
            ([2, 1], [1], 3),
            ([2], [1, 1], 2),
            ([1], [2], 3),
        ]
        for mu, tau, b in cases:
            mu, tau = Partition(mu), Partition(tau)
            deg = mu.size + b * tau.size
            nvars = deg
            fast = schur_multiply(
                SymFunc.schur(mu), plethysm_pb(SymFunc.schur(tau), b)
            )
            lhs = oracles.poly_multiply(
                oracles.schur_polynomial(mu, nvars),
                oracles.poly_substitute_power(
                    oracles.schur_polynomial(tau, nvars), b
                ),
            )
            expansion = oracles.schur_expansion_in_vars(lhs, nvars, deg)
            assert expansion == {lam: int(c) for lam, c in fast.terms.items()}

    def test_rejects_nonpositive_b(self):
        with pytest.raises(InvalidInput):
            plethysm_pb(SymFunc.schur([1]), 0)


class TestCharacteristic:
    def test_trivial(self):
        assert characteristic(VirtualRep.irreducible([5])).terms == {
            Partition([5]): 1
        }

    def test_regular_rep_of_s2(self):
        U = VirtualRep(2, {Partition([2]): 1, Partition([1, 1]): 1})
        assert characteristic(U).terms == {
            Partition([2]): 1,
            Partition([1, 1]): 1,
        }

    def test_hook_alternating_sum_is_power_sum(self):
        for m in range(1, 9):
            U = VirtualRep(
                m, {Partition([m - j] + [1] * j): (-1) ** j for j in range(m)}
            )
            assert characteristic(U).terms == power_sum_to_schur(m).terms

    def test_ring_isomorphism(self):
        # characteristic turns induction into multiplication, |a|+|b| <= 8
        for a in range(1, 5):
            for mu in partitions_of(a):
                for b in range(1, min(5, 9 - a)):
                    for nu in partitions_of(b):
                        va, vb = VirtualRep.irreducible(mu), VirtualRep.irreducible(nu)
                        lhs = schur_multiply(characteristic(va), characteristic(vb))
                        rhs = characteristic(induction_product(va, vb))
                        assert lhs.terms == rhs.terms


class TestJsonAndPurge:
    def test_json_round_trip(self):
        f = SymFunc(
            SCHUR,
            {Partition([2, 1]): Fraction(-1, 2), Partition([3]): Fraction(4)},
        )
        data = json.loads(json.dumps(f.to_json()))
        assert SymFunc.from_json(data).terms == f.terms

    def test_rational_strings(self):
        f = SymFunc(SCHUR, {Partition([2, 1]): Fraction(-1, 2)})
        assert f.to_json()["terms"][0]["coeff"] == "-1/2"

    def test_zero_coefficients_purged(self):
        f = SymFunc(SCHUR, {Partition([2]): 0, Partition([1]): 1})
        assert Partition([2]) not in f.terms
