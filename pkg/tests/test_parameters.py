import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arthurlab import parameters as prm
from arthurlab.parameters import IrreducibleComponent as IC


def comp(label, dim, sd, su2=1, dual=None):
    return IC(label, dim, sd, su2, dual)


def exc1():
    return prm.validate([(comp("omega0", 1, "orthogonal"), 2), (comp("tau1", 2, "symplectic"), 1)])


def exc2():
    return prm.validate([(comp("tau1", 2, "symplectic"), 3)])


def test_reference_centralizers():
    assert str(prm.centralizer(exc1())) == "Sp(2) x O(1)"
    assert str(prm.centralizer(exc2())) == "O(3)"
    assert prm.component_group(exc1()).order == 2
    assert prm.component_group(exc2()).order == 2


def test_reference_classes():
    assert prm.classify(exc1()) == "exc1"
    assert prm.classify(exc2()) == "exc2"


def test_report_keys_sorted():
    rep = prm.report(exc2())
    assert list(rep) == sorted(rep)
    assert rep["class"] == "exc2" and rep["n"] == 3


def test_validation_errors():
    with pytest.raises(prm.ParameterError):
        prm.validate([(comp("o", 1, "orthogonal"), 3)])
    with pytest.raises(prm.ParameterError):
        comp("s", 3, "symplectic")
    with pytest.raises(prm.ParameterError):
        prm.validate([(comp("a", 2, "symplectic"), 1), (comp("a", 2, "symplectic"), 1)])
    with pytest.raises(prm.ParameterError):
        prm.validate([(comp("t", 2, "symplectic"), 1)], n=2)
    with pytest.raises(prm.ParameterError):
        prm.from_json({"components": [{"label": "x"}]})


def test_dual_pairs_merge():
    a = comp("a", 1, "none", dual="b")
    b = comp("b", 1, "none", dual="a")
    param = prm.validate([(a, 2), (b, 2)])
    assert len(param.components) == 1
    assert param.total_dim == 4
    assert str(prm.centralizer(param)) == "GL(2)"
    assert prm.classify(param) == "other"


def test_json_roundtrip():
    p = exc1()
    assert prm.from_json(p.to_json()).profile() == p.profile()


# random parameters: a few components of each self-duality type
def _param_strategy():
    sym = st.tuples(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))  # (dim/2, mult, su2)
    orth = st.tuples(st.integers(1, 3), st.integers(1, 2), st.integers(1, 3))  # (dim, mult/2, su2)
    pair = st.tuples(st.integers(1, 2), st.integers(1, 2))

    @st.composite
    def build(draw):
        items = []
        for k, (h, m, a) in enumerate(draw(st.lists(sym, max_size=3))):
            items.append((comp(f"s{k}", 2 * h, "symplectic", a), m))
        for k, (d, h, a) in enumerate(draw(st.lists(orth, max_size=2))):
            items.append((comp(f"o{k}", d, "orthogonal", a), 2 * h))
        for k, (d, m) in enumerate(draw(st.lists(pair, max_size=2))):
            items.append((comp(f"p{k}", d, "none"), m))
        if not items:
            items.append((comp("s", 2, "symplectic"), 1))
        return prm.validate(items)

    return build()


params = _param_strategy()


@given(params)
def test_component_group_order(param):
    n_sym = len(param.symplectic())
    group = prm.component_group(param)
    assert group.order == 2 ** n_sym == prm.centralizer(param).component_group_order
    assert len(set(group.elements())) == group.order


@given(params)
def test_s_psi_and_center(param):
    # nu_a(-1) is -1 exactly for even a; det(-1) on O(l) is (-1)^l
    s = prm.s_psi_image(param)
    z = prm.center_image(param)
    for (c, m), bit in zip(param.symplectic(), s.coeffs):
        assert bit == (m * (c.su2_dim - 1)) % 2
    for (c, m), bit in zip(param.symplectic(), z.coeffs):
        assert bit == m % 2


@given(params, st.sampled_from([1, -1]))
def test_characters_restrict_to_chi(param, chi):
    z = prm.center_image(param)
    chars = prm.characters(param, chi)
    k = len(z.basis)
    if z.is_zero:
        assert len(chars) == (2 ** k if chi == 1 else 0)
    else:
        assert len(chars) == 2 ** (k - 1)
    for eps in chars:
        assert prm.character_value(eps, z) == chi


@given(params)
def test_characters_are_homomorphisms(param):
    g = prm.component_group(param)
    elems = list(g.elements())
    for eps in itertools.islice(itertools.product((1, -1), repeat=len(g.basis)), 8):
        for x, y in itertools.islice(itertools.product(elems, repeat=2), 16):
            assert prm.character_value(eps, x + y) == prm.character_value(eps, x) * prm.character_value(eps, y)


@given(params)
def test_classes_exclusive(param):
    cls = prm.classify(param)
    assert cls in prm.CLASSES
    if cls in ("discrete", "elliptic2"):
        assert prm.is_elliptic_shape(param)


@settings(max_examples=30)
@given(params, st.sampled_from([1, 3, 5]))
def test_odd_orthogonal_rejected(param, m):
    with pytest.raises(prm.ParameterError):
        prm.validate(list(param.components) + [(comp("bad", 1, "orthogonal"), m)])


def test_scan_size_and_parity():
    scan = list(prm.enumerate_parameters(12))
    assert len(scan) > 500
    assert all(p.total_dim % 2 == 0 and p.total_dim <= 12 for p in scan)
    exact = list(prm.enumerate_parameters(6, exact=True))
    assert all(p.total_dim == 6 for p in exact)
