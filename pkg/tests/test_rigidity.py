import pytest

from rigdim import fixtures
from rigdim.homological import ValueWithStatus, homological_dims
from rigdim.quiveralg import Quiver, build_algebra, direct_product
from rigdim.exactla import QQ
from rigdim.repmod import is_indecomposable, projective, simple
from rigdim.rigidity import (
    SelfInjectiveInput,
    enumerate_indecomposables,
    ext_vanishing_bound,
    rigidity_dimension,
)

E = ValueWithStatus.exact


def test_enumeration_examples():
    B = enumerate_indecomposables(fixtures.cyc2())
    assert B.complete and sorted(m.label for m in B.modules) == ["P1", "P2", "S1", "S2"]
    A = enumerate_indecomposables(fixtures.a2())
    assert sorted(m.dims for m in A.modules) == [(0, 1), (1, 0), (1, 1)]
    X = enumerate_indecomposables(fixtures.x3())
    assert sorted(m.dim for m in X.modules) == [1, 2, 3]
    for m in X.modules:
        assert is_indecomposable(m)


def test_enumeration_non_nakayama_is_incomplete():
    q = Quiver.from_names(["1", "2", "3"], [("a", "1", "2"), ("b", "1", "3")])
    alg = build_algebra(QQ, q, [])
    found = enumerate_indecomposables(alg)
    assert not found.complete
    report = rigidity_dimension(alg)
    assert report.completeness == "lower_bound_only" and report.interval is not None


def test_ext_vanishing_bound():
    assert ext_vanishing_bound(fixtures.a2()) == E(0)
    assert ext_vanishing_bound(fixtures.a3r()) == E(1)
    assert ext_vanishing_bound(fixtures.a3()) == E(0)
    with pytest.raises(SelfInjectiveInput):
        ext_vanishing_bound(fixtures.cyc2())


@pytest.mark.parametrize(
    "make, cf",
    [
        (fixtures.a2, 2),
        (fixtures.cyc2, 3),
        (fixtures.dual_numbers, 2),
        (fixtures.a3, 2),
        (fixtures.a3r, 3),
        (fixtures.x3, 2),
        (fixtures.t2_squared, 2),
        (fixtures.dual_squared, 2),
        (lambda: fixtures.nakayama_cycle(3), 4),
    ],
)
def test_cf_values(make, cf):
    report = rigidity_dimension(make())
    assert report.cf == E(cf)
    assert report.completeness == "exact"
    assert report.rep_n_finite_up_to == cf - 1


def test_witness_cyc2():
    report = rigidity_dimension(fixtures.cyc2())
    assert report.witness in (["P1", "P2", "S1"], ["P1", "P2", "S2"])


def test_semisimple_is_infinite():
    K = build_algebra(QQ, Quiver.from_names(["1"], []), [])
    assert rigidity_dimension(K).cf.is_infinite


def test_antitone_evd():
    for make in (fixtures.cyc2, lambda: fixtures.nakayama_cycle(3), fixtures.x3, fixtures.dual_squared):
        report = rigidity_dimension(make())
        cands = report.candidates
        for c in cands:
            for d in cands:
                if set(c.labels) <= set(d.labels):
                    assert d.evd.lower <= c.evd.lower


def test_cf_blockwise_min():
    pairs = [
        (fixtures.a2, fixtures.a2),
        (fixtures.cyc2, fixtures.dual_numbers),
        (fixtures.a3r, fixtures.cyc2),
    ]
    for f, g in pairs:
        a, b = f(), g()
        prod = direct_product(a, b)
        got = rigidity_dimension(prod).cf
        assert got == E(min(rigidity_dimension(a).cf.value, rigidity_dimension(b).cf.value))


def test_user_supplied_list():
    B = fixtures.cyc2()
    mods = enumerate_indecomposables(B).modules
    assert rigidity_dimension(B, indecs=mods, complete=True).cf == E(3)
    partial = rigidity_dimension(B, indecs=[simple(B, 1)], complete=False)
    assert partial.cf.status == "at_least" and partial.cf.bound == 3


def test_maximal_orthogonal_pins_cf():
    from rigdim.homological import max_orthogonal_check
    from rigdim.repmod import injective

    A = fixtures.a3r()
    found = enumerate_indecomposables(A)
    M = [projective(A, i) for i in range(3)] + [injective(A, i) for i in range(3)]
    idim = homological_dims(A).idim_left
    assert max_orthogonal_check(M, 1, found.modules, complete=True)
    assert 1 <= idim.value <= 2
    assert rigidity_dimension(A).cf == E(3)
