import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arthurlab import exact as ex
from arthurlab import so_structure as so


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_root_counts(n):
    assert len(so.roots(n)) == 2 * n * n
    assert len(so.positive_roots(n)) == n * n
    assert len(so.simple_roots(n)) == n
    # X_a for every root, H_a for every positive root
    assert len(so.chevalley_basis(n)) == 3 * n * n


def test_rejects_bad_rank():
    with pytest.raises(ValueError):
        so.build_group(-1)
    with pytest.raises(ValueError):
        so.chevalley_basis(0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_basis_spans_so(n):
    # the elements span so(gram), of dimension n(2n+1)
    mats = [ex.to_complex(b.matrix).real.ravel() for b in so.chevalley_basis(n)]
    assert np.linalg.matrix_rank(np.array(mats)) == n * (2 * n + 1)
    g = so.build_group(n)
    assert all(g.in_lie_algebra(b.matrix) for b in so.chevalley_basis(n))


@pytest.mark.parametrize("n", [2, 3])
def test_cartan_action(n):
    # [H, X_a] = <a, H> X_a, computed from the matrices alone
    for r in so.positive_roots(n):
        h = so.coroot_int(r)
        for b in so.roots(n):
            x = so.root_vector_int(b)
            comm = h @ x - x @ h
            c = sum(b.coords[k] * h[k, k] for k in range(n))
            assert np.array_equal(comm, c * x)
            assert b.pairing(so.cartan_diag(so.coroot(r), n)) == c


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bracket_rule(n):
    for b, g in itertools.product(so.roots(n), repeat=2):
        c = so.bracket_coefficient(b, g)
        if c is not None:
            assert abs(c) == so.string_length(b, g) + 1


def test_bracket_coefficient_none_when_not_root():
    r = so.positive_roots(2)
    assert so.bracket_coefficient(r[0], r[0]) is None


def test_unipotent_in_group():
    g = so.build_group(2)
    for r in so.roots(2):
        assert g.contains(ex.expm_nilpotent(so.root_vector(r)))


def _sigma_kind(p, q, r, mats, z, zi):
    # the Galois action on the dual Lie algebra: X -> z conj(X) z^-1
    y = z @ mats[r].conj() @ zi
    hit = [b for b, m in mats.items()
           if np.linalg.matrix_rank(np.stack([y.ravel(), m.ravel()]), tol=1e-9) == 1]
    if hit == [-r]:
        return "imaginary"
    if hit == [r]:
        return "real"
    return "complex"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_root_classification_against_galois_action(n):
    mats = {r: so.root_vector_int(r) for r in so.roots(n)}
    for q in range(n + 1):
        p = 2 * n + 1 - q
        z = ex.to_complex(so.inner_twist(p, q).z)
        zi = np.linalg.inv(z)
        for r in so.roots(n):
            assert so.classify_root(p, q, r) == _sigma_kind(p, q, r, mats, z, zi)


def test_classification_example():
    r = {x.name: x for x in so.roots(2)}
    kinds = {name: so.classify_root(4, 1, r[name]) for name in r}
    imag = [k for k, v in kinds.items() if v == "imaginary"]
    assert all("1" in k and "2" not in k for k in imag)
    assert "complex" in kinds.values() and "real" in kinds.values()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_twist_checks(n):
    for q in range(n + 1):
        assert all(so.check_twist(2 * n + 1 - q, q).values())


def test_twist_rejects_p_le_q():
    with pytest.raises(ValueError):
        so.inner_twist(2, 3)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_xi_lands_in_target_algebra(nq, coeffs):
    n, q = nq
    p = 2 * n + 1 - q
    rs = so.roots(n)
    x = sum(c * so.root_vector_int(rs[(5 * k) % len(rs)]) for k, c in enumerate(coeffs))
    y = ex.to_complex(so.inner_twist(p, q).xi(ex.matrix(np.asarray(x).tolist())))
    target = np.diag([1.0] * p + [-1.0] * q)
    assert np.allclose(y.T @ target + target @ y, 0)


def test_fixtures():
    for bundle in (so.so14_fixtures(), so.so25_fixtures()):
        assert bundle.ok, {k: v for k, v in bundle.checks.items() if not v}
        assert bundle.to_json()["name"] == bundle.name


def test_so14_iwasawa_of_w_n():
    # w^-1 n(x) has t^{-1} = 1 + |x|^2, read from rows 1 and 5
    x = (1, 2, -1)
    g = ex.inverse(so.so14_fixtures().w_breve) @ so.so14_n(x)
    assert g[0, 0] - g[4, 0] == 1 + sum(v * v for v in x)


def test_rational_rotation_orthogonal():
    b = so.rational_rotation(1, 2, 3)
    assert ex.equal(b.T @ b, ex.identity(3))
    assert ex.det(b) == 1
