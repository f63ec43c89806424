import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from qorder import (
    DegreeTooLargeError,
    FFElement,
    FqPoly,
    NotMonicError,
    ZeroConstantTermError,
    adjoint_action,
    apply_action,
    base_field,
    build_tower,
    divisors_of_xn_minus_1,
    embed_base,
    fq_order,
    is_normal,
    linearized_eval,
    monic_reciprocal,
    order_record,
    phi_q,
    trace_to_prime,
)
from qorder.errors import FieldMismatchError

from oracles import oracle_fq_order, oracle_is_normal

F2 = base_field(2)
F3 = base_field(3)


def all_polys_up_to(field, max_degree):
    out = []
    for d in range(max_degree + 2):
        for coeffs in itertools.product(range(field.size), repeat=d):
            out.append(FqPoly(field, coeffs))
    return list({f for f in out})


class TestApplyAction:
    def test_frozen_f4(self, f4):
        t, _ = f4
        g = FqPoly(F2, (1, 1))  # x + 1
        assert apply_action(g, FFElement(t, 1)).value == 0  # 1^2 + 1
        assert apply_action(g, FFElement(t, 2)).value == 1  # omega^2 + omega

    def test_xn_minus_1_annihilates_everything(self, small_grid):
        for t, _ in small_grid:
            g = FqPoly.x_pow_minus_one(t.base, t.n)
            for v in range(t.size):
                assert apply_action(g, FFElement(t, v)).value == 0

    def test_identity_polynomial(self, small_grid):
        for t, _ in small_grid:
            one = FqPoly.one(t.base)
            for v in range(t.size):
                assert apply_action(one, FFElement(t, v)).value == v

    @pytest.mark.parametrize("p,s,n", [(2, 1, 2), (2, 1, 3)])
    def test_module_axioms_exhaustive(self, p, s, n):
        t = build_tower(p, s, n)
        polys = all_polys_up_to(t.base, 2)
        elements = [FFElement(t, v) for v in range(t.size)]
        for f, g in itertools.product(polys, repeat=2):
            for x in elements:
                assert apply_action(f + g, x) == apply_action(f, x) + apply_action(g, x)
                assert apply_action(f * g, x) == apply_action(f, apply_action(g, x))

    def test_module_axioms_sampled_f9(self, f9):
        t, _ = f9
        rng = random.Random(5)
        elements = [FFElement(t, v) for v in range(t.size)]
        for _ in range(60):
            f = FqPoly(t.base, [rng.randrange(9) for _ in range(rng.randrange(4))])
            g = FqPoly(t.base, [rng.randrange(9) for _ in range(rng.randrange(4))])
            for x in elements:
                assert apply_action(f + g, x) == apply_action(f, x) + apply_action(g, x)
                assert apply_action(f * g, x) == apply_action(f, apply_action(g, x))

    def test_fq_linearity(self, f16_over_f4):
        t, _ = f16_over_f4
        g = FqPoly(t.base, (2, 3, 1))
        for a in range(t.size):
            for c in range(t.q):
                x = FFElement(t, a)
                assert apply_action(g, embed_base(c, t) * x) == embed_base(c, t) * apply_action(g, x)

    def test_wrong_coefficient_field(self, f4):
        t, _ = f4
        with pytest.raises(FieldMismatchError):
            apply_action(FqPoly(F3, (1, 1)), FFElement(t, 1))


class TestLinearizedEval:
    def test_equals_apply_action_for_monic(self, small_grid):
        for t, fp in small_grid:
            for g in divisors_of_xn_minus_1(fp):
                if not g.degree >= 0 or g.is_zero:
                    continue
                for v in range(t.size):
                    x = FFElement(t, v)
                    assert linearized_eval(g, x) == apply_action(g, x)

    def test_requires_monic(self, f9):
        t, _ = f9
        with pytest.raises(NotMonicError):
            linearized_eval(FqPoly(t.base, (1, 2)), FFElement(t, 1))

    def test_base_elements_killed_by_x_minus_1(self):
        t = build_tower(3, 1, 2)
        g = FqPoly(F3, (2, 1))  # x - 1
        for c in range(3):
            assert linearized_eval(g, embed_base(c, t)).value == 0

    def test_f8_trace_polynomial(self, f8):
        # over F_2 with n = 3, x^2 + x + 1 acts as the absolute trace
        t, _ = f8
        g = FqPoly(F2, (1, 1, 1))
        for v in range(8):
            x = FFElement(t, v)
            assert linearized_eval(g, x).value == trace_to_prime(x)


class TestFqOrder:
    def test_frozen_f4(self, f4):
        t, fp = f4
        assert fq_order(FFElement(t, 0), fp) == FqPoly.one(F2)
        assert fq_order(FFElement(t, 1), fp) == FqPoly(F2, (1, 1))
        assert fq_order(FFElement(t, 2), fp) == FqPoly(F2, (1, 0, 1))
        assert fq_order(FFElement(t, 3), fp) == FqPoly(F2, (1, 0, 1))

    def test_against_divisor_scan_oracle(self, small_grid):
        for t, fp in small_grid:
            for v in range(t.size):
                x = FFElement(t, v)
                assert fq_order(x, fp) == oracle_fq_order(x, fp), (t, v)

    def test_minimality(self, small_grid):
        for t, fp in small_grid:
            for v in range(t.size):
                x = FFElement(t, v)
                m = fq_order(x, fp)
                assert apply_action(m, x).is_zero
                assert (FqPoly.x_pow_minus_one(t.base, t.n) % m).is_zero
                for p_, _ in fp.factors:
                    if (m % p_).is_zero:
                        assert not apply_action(m // p_, x).is_zero

    def test_order_one_only_for_zero(self, small_grid):
        for t, fp in small_grid:
            ones = [v for v in range(t.size) if fq_order(FFElement(t, v), fp).degree == 0]
            assert ones == [0]


class TestIsNormal:
    def test_frozen_f4(self, f4):
        t, fp = f4
        assert is_normal(FFElement(t, 2), fp)
        assert is_normal(FFElement(t, 3), fp)
        assert not is_normal(FFElement(t, 1), fp)
        assert not is_normal(FFElement(t, 0), fp)

    def test_against_conjugate_basis_oracle(self, small_grid):
        for t, fp in small_grid:
            for v in range(t.size):
                x = FFElement(t, v)
                assert is_normal(x, fp) == oracle_is_normal(x), (t, v)

    def test_normal_count_is_phi(self, small_grid):
        for t, fp in small_grid:
            count = sum(is_normal(FFElement(t, v), fp) for v in range(t.size))
            assert count == phi_q(fp) > 0

    def test_order_record(self, f4):
        t, fp = f4
        rec = order_record(FFElement(t, 2), fp)
        assert rec.order == FqPoly(F2, (1, 0, 1))
        assert rec.is_normal
        assert rec.element.value == 2


class TestAdjointAction:
    def test_frozen_f4(self, f4):
        t, _ = f4
        g = FqPoly(F2, (1, 1))
        assert adjoint_action(g, FFElement(t, 1)).value == 0  # 1 + 1^2
        assert adjoint_action(g, FFElement(t, 2)).value == 1  # omega + omega^2

    def test_errors(self, f8):
        t, _ = f8
        x = FFElement(t, 3)
        t3 = build_tower(3, 1, 2)
        with pytest.raises(NotMonicError):
            adjoint_action(FqPoly(F3, (1, 2)), FFElement(t3, 1))
        with pytest.raises(ZeroConstantTermError):
            adjoint_action(FqPoly(F2, (0, 1)), x)
        with pytest.raises(DegreeTooLargeError):
            adjoint_action(FqPoly.x_pow_minus_one(F2, 3), x)

    def test_power_identity_exhaustive_small(self, small_grid):
        # adjoint(g, x)^(q^deg g) = g(0) * (g* . x)
        for t, fp in small_grid:
            for g in divisors_of_xn_minus_1(fp):
                if g.degree >= t.n or g.degree < 0 or g.is_zero:
                    continue
                a0 = embed_base(g.coeffs[0], t)
                for v in range(t.size):
                    x = FFElement(t, v)
                    lhs = adjoint_action(g, x) ** (t.q ** g.degree)
                    rhs = a0 * apply_action(monic_reciprocal(g), x)
                    assert lhs == rhs, (t, str(g), v)

    def test_trace_pairing_identity(self):
        # Tr(a * (g . x)) = Tr(adjoint(g, a) * x)
        t = build_tower(2, 2, 3)
        rng = random.Random(11)
        for _ in range(300):
            m = rng.randrange(0, t.n)
            if m == 0:
                coeffs = [1]
            else:
                coeffs = [rng.randrange(1, t.q)]
                coeffs.extend(rng.randrange(t.q) for _ in range(m - 1))
                coeffs.append(1)
            g = FqPoly(t.base, coeffs)
            a = FFElement(t, rng.randrange(t.size))
            x = FFElement(t, rng.randrange(t.size))
            lhs = trace_to_prime(a * apply_action(g, x))
            rhs = trace_to_prime(adjoint_action(g, a) * x)
            assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 624), st.data())
def test_adjoint_power_identity_random_f625(xv, data):
    t = build_tower(5, 1, 4)
    n, q = t.n, t.q
    m = data.draw(st.integers(0, n - 1))
    if m == 0:
        g = FqPoly.one(t.base)
    else:
        const = data.draw(st.integers(1, q - 1))
        mids = data.draw(st.lists(st.integers(0, q - 1), min_size=m - 1, max_size=m - 1))
        g = FqPoly(t.base, (const, *mids, 1))
    x = FFElement(t, xv)
    lhs = adjoint_action(g, x) ** (q**m)
    rhs = embed_base(g.coeffs[0], t) * apply_action(monic_reciprocal(g), x)
    assert lhs == rhs
