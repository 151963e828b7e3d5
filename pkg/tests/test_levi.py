import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arthurlab import levi

signed_perms = st.integers(1, 5).flatmap(
    lambda m: st.tuples(st.permutations(range(m)).map(tuple),
                        st.lists(st.integers(0, 1), min_size=m, max_size=m).map(tuple)))


def _perm_sign(p) -> int:
    return round(np.linalg.det(np.abs(levi.sp_matrix((p, (0,) * len(p))))))


@given(signed_perms, signed_perms)
def test_compose_is_matrix_product(a, b):
    if len(a[0]) != len(b[0]):
        return
    lhs = levi.sp_matrix(levi.sp_compose(a, b))
    assert np.array_equal(lhs, levi.sp_matrix(a) @ levi.sp_matrix(b))
    assert levi.sp_compose(a, levi.sp_inverse(a)) == levi.sp_identity(len(a[0]))


@given(signed_perms)
def test_x_parity_from_determinant(a):
    # det of a signed permutation matrix is sign(perm) * (-1)^(number of flips)
    det = round(np.linalg.det(levi.sp_matrix(a)))
    assert (-1) ** levi.x_parity(a) == det * _perm_sign(a[0])


@given(signed_perms)
def test_regular_iff_no_eigenvalue_one(a):
    m = levi.sp_matrix(a).astype(float)
    no_fixed = abs(np.linalg.det(m - np.eye(len(m)))) > 1e-9
    assert levi.is_regular_signed(a) == no_fixed


@pytest.mark.parametrize("e,f", [(e, f) for e in range(1, 6) for f in range(1, 6) if e + f <= 6])
def test_w_group_order_and_description(e, f):
    w = levi.w_group(e, f)
    assert len(w) == math.factorial(e + f)
    # flips record exactly the letters that change sides
    side = [0] * e + [1] * f
    for p, fl in w:
        assert all(fl[h] == (side[h] != side[p[h]]) for h in range(e + f))


def test_w_group_rejects_empty():
    with pytest.raises(ValueError):
        levi.w_group(0, 2)


def test_closure_cap():
    with pytest.raises(OverflowError):
        levi.closure(levi.w_group_generators(4, 4), 8, cap=100)


@pytest.mark.parametrize("shape", [levi.shape_so14(), levi.shape_so25()])
def test_reference_diagrams(shape):
    rep = levi.diagram_report(shape)
    assert rep.orders == (2, 4, 2, 2, 2, 1)
    assert all(rep.identities.values())
    assert rep.homomorphism and rep.exact_rows and rep.exact_columns


def test_reference_partitions():
    assert levi.shape_so14().t_partition["T1"] == [0]
    assert levi.shape_so25().t_partition["T1"] == [0]


def test_regular_elements_of_reference():
    # W = Z/2 acting by -1 on the one-dimensional T_psi: the non-identity element is regular
    assert len(levi.regular_elements(levi.shape_so14())) == 1


def _full_hom_check(shape):
    elems = list(levi.normalizer_elements(shape))
    for a, b in itertools.product(elems, repeat=2):
        assert levi.x_map(shape, levi.compose(a, b)) == levi.x_map(shape, a) + levi.x_map(shape, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.booleans())
def test_random_shapes(seed, discrete):
    rng = np.random.default_rng(seed)
    shape = levi.random_shape(rng, max_order=2000, discrete=discrete)
    rep = levi.diagram_report(shape, seed=seed)
    assert all(rep.identities.values())
    assert rep.exact_rows and rep.exact_columns and rep.homomorphism
    if levi.is_discrete_m(shape):
        assert rep.x_surjective
    if rep.N <= 64:
        _full_hom_check(shape)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_shape_json_roundtrip(seed):
    shape = levi.random_shape(np.random.default_rng(seed), max_order=2000)
    again = levi.shape_from_json(shape.to_json())
    assert again.to_json() == shape.to_json()
    assert again.local_parameter().profile() == shape.local_parameter().profile()


def test_shape_errors():
    comps = {"o": {"selfdual": "orthogonal", "dim": 1}, "s": {"selfdual": "symplectic", "dim": 2}}
    with pytest.raises(levi.ShapeError):
        levi.make_shape(comps, [], {"o": 1})
    with pytest.raises(levi.ShapeError):
        levi.make_shape(comps, [{"psi": {"s": 1}}, {"psi": {"s": 1}}], {})
    with pytest.raises(levi.ShapeError):
        levi.make_shape(comps, [{"psi": {"x": 1}}], {})
    with pytest.raises(levi.ShapeError):
        levi.shape_from_json([])


def test_embed_groups_equal_factors():
    comps = {"s": {"selfdual": "symplectic", "dim": 2}}
    param, shape = levi.embed(comps, [{"s": 1}, {"s": 1}], {"s": 1})
    assert [b.e for b in shape.gl_blocks] == [2]
    assert dict((c.label, m) for c, m in param.components) == {"s": 5}


def test_normalizer_cap():
    comps = {"s": {"selfdual": "symplectic", "dim": 2}}
    shape = levi.make_shape(comps, [{"psi": {"s": 1}, "e": 6}], {"s": 1})
    with pytest.raises(OverflowError):
        list(levi.normalizer_elements(shape, cap=1000))
