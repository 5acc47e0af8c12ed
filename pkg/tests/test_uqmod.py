from fractions import Fraction

import pytest

from braidpow.laurent import ONE, lqint
from braidpow.qarith import RatScalar
from braidpow.uqmod import (
    IrrepMultiset,
    ModuleAuditError,
    WeightModule,
    decompose,
    dim_irrep,
    highest_weight_vectors,
    outer,
    simple_gl2,
    specialize_module,
    standard_gld,
    tensor,
)


def test_dim_irrep_oracles():
    assert dim_irrep((7, 2)) == 6
    assert dim_irrep((2, 1, 0)) == 8
    assert dim_irrep((1, 0, 0)) == 3
    assert dim_irrep((3, 0)) == 4
    assert dim_irrep((2, 2, 0, 0)) == 20
    assert dim_irrep((1, 0, 1, 0), blocks=(2, 2)) == 4
    with pytest.raises(ValueError):
        dim_irrep((0, 1))


def test_simple_gl2_structure():
    v = simple_gl2(3, 1)
    assert v.dim == 3
    assert v.weights == ((3, 1), (2, 2), (1, 3))
    # E v_1 = (1) v_0, F v_0 = (2) v_1
    assert v.e_ops[0][1][0] == lqint(1)
    assert v.f_ops[0][0][1] == lqint(2)
    with pytest.raises(ValueError):
        simple_gl2(0, 1)


def test_audit_rejects_wrong_coefficient():
    v = simple_gl2(2, 0)
    bad_e = [{1: {0: lqint(1)}, 2: {1: lqint(1)}}]  # should be (2) on the last step
    with pytest.raises(ModuleAuditError):
        WeightModule(("bad",), v.alphas, v.blocks, v.weights, bad_e, v.f_ops)


def test_audit_rejects_serre_violation():
    m = standard_gld(3)
    bad_e = [dict(op) for op in m.e_ops]
    bad_e[0] = {1: {0: {0: Fraction(2)}}}  # scale E_1 by 2: [E_1,F_1] breaks
    with pytest.raises(ModuleAuditError):
        WeightModule(m.kind, m.alphas, m.blocks, m.weights, bad_e, m.f_ops)


def test_tensor_coproduct_example():
    v1 = simple_gl2(1, 0)
    t = tensor(v1, v1)
    # E(v_0 ox v_1) = q v_0 ox v_0
    col = t.e_ops[0][1]
    assert col == {0: {1: Fraction(1)}}
    # F(v_0 ox v_0) = q^-1 v_1 ox v_0 + v_0 ox v_1
    col = t.f_ops[0][0]
    assert col == {2: {-1: Fraction(1)}, 1: {0: Fraction(1)}}


def test_decompose_simple_and_tensor():
    assert decompose(simple_gl2(4, 1)) == {(4, 1): 1}
    v1 = simple_gl2(1, 0)
    t2 = tensor(v1, v1)
    assert decompose(t2) == {(2, 0): 1, (1, 1): 1}
    t3 = tensor(t2, v1)
    assert decompose(t3) == {(3, 0): 1, (2, 1): 2}
    assert decompose(t3).total_dim() == 8


def test_decompose_matches_clebsch_gordan():
    for la, lb in [(2, 1), (3, 2), (4, 4)]:
        got = decompose(tensor(simple_gl2(la, 0), simple_gl2(lb, 0)))
        want = {}
        for m in range(min(la, lb) + 1):
            want[(la + lb - m, m)] = 1
        assert got == want


def test_highest_weight_vectors_dims():
    v1 = simple_gl2(1, 0)
    t = tensor(v1, v1)
    assert highest_weight_vectors(t, (2, 0)).dim == 1
    assert highest_weight_vectors(t, (1, 1)).dim == 1
    assert highest_weight_vectors(t, (0, 2)).dim == 0
    hw = highest_weight_vectors(t, (1, 1)).basis[0]
    # the singlet in V_1 ox V_1: v_0 ox v_1 - q v_1 ox v_0
    assert hw[1] == RatScalar(1) and hw[2] == RatScalar({1: Fraction(-1)})


def test_standard_gld_and_outer():
    w = standard_gld(3)
    assert decompose(w) == {(1, 0, 0): 1}
    one = standard_gld(1)
    assert (one.dim, one.ngen) == (1, 0)
    assert decompose(one) == {(1,): 1}
    m = outer(standard_gld(2), standard_gld(3))
    assert m.dim == 6
    assert m.blocks == (2, 3)
    assert m.ngen == 1 + 2
    assert decompose(m) == {(1, 0, 1, 0, 0): 1}
    assert decompose(m).total_dim() == 6


def test_specialize_module_keeps_structure():
    t = tensor(simple_gl2(2, 0), simple_gl2(2, 0))
    s = specialize_module(t, Fraction(97, 101))
    assert s.dim == t.dim and s.weights == t.weights
    got = decompose(s)
    assert got == decompose(t)


def test_irrep_multiset_total_dim():
    ms = IrrepMultiset({(3, 0): 1, (2, 1): 2}, blocks=(2,))
    assert ms.total_dim() == 4 + 2 * 2
