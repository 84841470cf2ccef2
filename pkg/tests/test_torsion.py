from math import lcm

import mpmath as mp
import pytest

from torsionfree.errors import PreconditionError, ResourceCapError
from torsionfree.torsion import (companion_matrix, finite_subgroup_bound,
                                 matrix_order_is, max_torsion_order,
                                 naive_max_order, paper_order_bounds, totient,
                                 torsion_order_volume_bound,
                                 totient_sqrt_inequality, witness_matrix)


class TestTotient:
    def test_small_values(self):
        assert totient(1) == 1
        assert totient(2) == 1
        assert totient(12) == 4
        assert totient(13) == 12
        assert totient(2**10) == 2**9

    def test_sqrt_inequality_brute(self):
        # 2 phi(l)^2 >= l for every l up to 10^4
        for ell in range(1, 10**4 + 1):
            assert totient_sqrt_inequality(ell)


class TestMaxTorsionOrder:
    def test_frozen_orders_dim1(self):
        want = {1: 2, 2: 6, 3: 6, 4: 12, 5: 12, 6: 30}
        for n, order in want.items():
            prof = max_torsion_order(n, 1)
            assert prof.exact_max_order == order

    def test_frozen_witnesses_dim1(self):
        want = {1: (2,), 2: (6,), 3: (6,), 4: (3, 4), 5: (3, 4), 6: (5, 6)}
        for n, orders in want.items():
            assert max_torsion_order(n, 1).witness_orders == orders

    def test_frozen_orders_dim2(self):
        want = {1: 6, 2: 12, 3: 30, 4: 60}
        for n, order in want.items():
            assert max_torsion_order(n, 2).exact_max_order == order

    def test_against_naive_oracle(self):
        for n in range(1, 13):
            for d in range(1, 13):
                if n * d > 12:
                    continue
                assert max_torsion_order(n, d).exact_max_order == \
                    naive_max_order(n, d)

    def test_large_budget(self):
        prof = max_torsion_order(64, 1)
        assert prof.exact_max_order == 13693680
        assert prof.exact_max_order == lcm(5, 7, 9, 11, 13, 16, 19)

    def test_monotone_in_n(self):
        prev = 0
        for n in range(1, 13):
            cur = max_torsion_order(n, 1).exact_max_order
            assert cur >= prev
            prev = cur

    def test_monotone_in_d(self):
        for n in (1, 2, 3):
            prev = 0
            for d in range(1, 5):
                cur = max_torsion_order(n, d).exact_max_order
                assert cur >= prev
                prev = cur

    def test_witness_invariants(self):
        for n in range(1, 9):
            prof = max_torsion_order(n, 1)
            ws = prof.witness_orders
            assert lcm(*ws) == prof.exact_max_order
            assert sum(totient(w) for w in ws) <= n
            assert len(set(ws)) == len(ws)
            assert all(w >= 2 for w in ws)

    def test_budget_cap(self):
        with pytest.raises(ResourceCapError):
            max_torsion_order(65, 1)
        with pytest.raises(ResourceCapError):
            max_torsion_order(13, 5)

    def test_domain(self):
        with pytest.raises(PreconditionError):
            max_torsion_order(0, 1)
        with pytest.raises(PreconditionError):
            max_torsion_order(1, 0)


class TestStatedBounds:
    def test_formulas(self):
        for n in (1, 2, 3):
            for d in (1, 2):
                prof = max_torsion_order(n, d)
                assert prof.paper_bound_stated == 2 * (n * d) ** (2 * n)
                assert prof.paper_bound_proof == 4 * (n * d) ** (2 * n)

    def test_stated_bound_holds_on_grid(self):
        # exact values stay below the stated bound everywhere we can check
        for n in range(1, 13):
            for d in range(1, 13):
                if n * d > 12:
                    continue
                prof = max_torsion_order(n, d)
                assert prof.exact_max_order <= prof.paper_bound_stated

    def test_frozen_stated_values(self):
        want = {1: 2, 2: 32, 3: 1458, 4: 131072, 5: 19531250, 6: 4353564672}
        for n, v in want.items():
            assert max_torsion_order(n, 1).paper_bound_stated == v

    def test_json(self):
        js = max_torsion_order(4, 1).to_json()
        assert js["exact_max_order"] == "12"
        assert js["witness_orders"] == [3, 4]
        assert js["paper_bound_stated"] == "131072"
        assert js["paper_bound_proof"] == "262144"


class TestMatrixWitnesses:
    def test_companion(self):
        from torsionfree.polyalg import IntPoly
        M = companion_matrix(IntPoly((1, 0, 1)))  # x^2 + 1
        assert matrix_order_is(M, 4)

    def test_witness_orders_realized(self):
        for n in range(1, 5):
            prof = max_torsion_order(n, 1)
            for w in prof.witness_orders:
                M = witness_matrix((w,), totient(w))
                assert matrix_order_is(M, w)

    def test_block_witness(self):
        prof = max_torsion_order(4, 1)
        M = witness_matrix(prof.witness_orders, 4)
        assert matrix_order_is(M, prof.exact_max_order)

    def test_order_is_exact_not_multiple(self):
        M = witness_matrix((3,), 2)
        assert matrix_order_is(M, 3)
        assert not matrix_order_is(M, 6)
        assert not matrix_order_is(M, 2)

    def test_identity_padding(self):
        M = witness_matrix((2,), 3)
        assert len(M) == 3
        assert matrix_order_is(M, 2)


class TestVolumeBounds:
    def test_volume_bound_formula(self):
        with mp.workdps(30):
            v = torsion_order_volume_bound(100, 1.0, 1.0)
            assert mp.nstr(v, 17) == mp.nstr(mp.log(mp.mpf(100)), 17)

    def test_monotone(self):
        with mp.workdps(30):
            assert torsion_order_volume_bound(200, 1.0, 2.0) > \
                torsion_order_volume_bound(100, 1.0, 2.0)

    def test_domain(self):
        with pytest.raises(PreconditionError):
            torsion_order_volume_bound(2, 1.0, 1.0)

    def test_finite_subgroup_bound(self):
        with mp.workdps(30):
            v = finite_subgroup_bound(100, 3, 60, 1.0, 1.0)
            want = 60 * mp.log(mp.mpf(100)) ** 3
            assert mp.nstr(v, 17) == mp.nstr(want, 17)

    def test_jordan_scaling(self):
        with mp.workdps(30):
            a = finite_subgroup_bound(100, 3, 60, 1.0, 1.0)
            b = finite_subgroup_bound(100, 3, 120, 1.0, 1.0)
            assert mp.nstr(b / a, 17) == "2.0"


class TestPaperOrderBounds:
    def test_matches_profile(self):
        stated, proof = paper_order_bounds(5, 2)
        prof = max_torsion_order(5, 2)
        assert stated == prof.paper_bound_stated
        assert proof == prof.paper_bound_proof
