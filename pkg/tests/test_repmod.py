import random

import pytest

from rigdim import fixtures
from rigdim.exactla import FieldSpec, Matrix
from rigdim.repmod import (
    AlgebraMismatch,
    ModuleMap,
    RelationViolated,
    Representation,
    UnsupportedCharacteristic,
    cosyzygy,
    direct_sum,
    dual,
    envelopes,
    hom_basis,
    hom_dim,
    injective,
    injective_envelope,
    is_indecomposable,
    is_isomorphic,
    projective,
    projective_cover,
    random_module,
    simple,
    structure,
    syzygies,
)

import oracles


def test_hom_examples_a2():
    A = fixtures.a2()
    P1, P2 = projective(A, 0), projective(A, 1)
    S1, S2 = simple(A, 0), simple(A, 1)
    assert hom_dim(P2, P1) == 1 == P1.dims[1]
    assert hom_dim(S1, S1) == 1 and hom_dim(S1, S2) == 0
    assert hom_dim(direct_sum([P1, P2]), direct_sum([P1, P2])) == 3
    assert oracles.hom_dim(P2, P1) == 1


def test_hom_maps_commute():
    B = fixtures.cyc2()
    M = direct_sum([projective(B, 0), simple(B, 0), projective(B, 1)])
    for f in hom_basis(M, M).basis:
        assert f.commutes()


def test_dim_vectors_a2():
    A = fixtures.a2()
    assert projective(A, 0).dims == (1, 1) and projective(A, 1).dims == (0, 1)
    assert injective(A, 0).dims == (1, 0) and injective(A, 1).dims == (1, 1)


def test_structure_a2():
    A = fixtures.a2()
    st = structure(projective(A, 0))
    assert is_isomorphic(st.radical, simple(A, 1))
    assert is_isomorphic(st.top, simple(A, 0))
    S = simple(A, 0)
    assert structure(S).radical.is_zero() and is_isomorphic(structure(S).socle, S)


def test_socle_of_cyc2_projectives_is_simple():
    B = fixtures.cyc2()
    for i in range(2):
        assert sum(structure(projective(B, i)).socle.dims) == 1


def test_envelopes_a2():
    A = fixtures.a2()
    cov = projective_cover(simple(A, 0))
    assert cov.module.dims == (1, 1) and cov.epi.is_surjective()
    env = injective_envelope(simple(A, 1))
    assert env.module.dims == (1, 1) and env.mono.is_injective()
    P = projective(A, 0)
    pc = envelopes(P)["projective_cover"]
    assert pc[1].is_isomorphism()


def test_syzygies():
    D = fixtures.dual_numbers()
    k = simple(D, 0)
    assert is_isomorphic(syzygies(k, 1)[0], k)
    B = fixtures.cyc2()
    S1 = simple(B, 0)
    o1, o2 = syzygies(S1, 2)
    assert is_isomorphic(o1, simple(B, 1))
    r = is_isomorphic(o2, S1)
    assert r and r.certificate.is_isomorphism() and r.certificate.commutes()
    assert syzygies(projective(B, 0), 1)[0].is_zero()
    assert is_isomorphic(cosyzygy(S1), simple(B, 1))


def test_dual():
    A = fixtures.a2()
    P1 = projective(A, 0)
    D = dual(P1)
    assert D.algebra is A.opposite() and D.dims == (1, 1)
    assert dual(D).dims == P1.dims
    assert [m.rank() for m in dual(D).mats] == [m.rank() for m in P1.mats]
    assert is_isomorphic(dual(simple(A, 0)), simple(A.opposite(), 0))
    assert is_isomorphic(dual(projective(A.opposite(), 1)), injective(A, 1))


def test_isomorphism_outcomes():
    A = fixtures.a2()
    P1, P2 = projective(A, 0), projective(A, 1)
    r = is_isomorphic(P1, P1)
    assert r.status == "isomorphic"
    assert is_isomorphic(P1, P2).status == "not_isomorphic"
    with pytest.raises(AlgebraMismatch):
        is_isomorphic(P1, projective(fixtures.a2(), 0))


def test_indecomposable():
    A = fixtures.a2()
    assert is_indecomposable(simple(A, 0))
    assert not is_indecomposable(direct_sum([projective(A, 0), projective(A, 1)]))
    assert is_indecomposable(projective(fixtures.cyc2(), 0))


def test_small_characteristic_rejected():
    A = fixtures.a2(FieldSpec.prime(2))
    M = direct_sum([projective(A, 0), projective(A, 1)])
    with pytest.raises(UnsupportedCharacteristic):
        is_indecomposable(M)


def test_relations_checked():
    B = fixtures.cyc2()
    one = Matrix(B.field, [[1]])
    with pytest.raises(RelationViolated):
        Representation(B, [1, 1], [one, one])


def test_map_validation():
    A = fixtures.a2()
    P1, S1 = projective(A, 0), simple(A, 0)
    bad = [Matrix(A.field, [[1]]), Matrix(A.field, [[1]])]
    with pytest.raises(ValueError):
        ModuleMap(P1, P1, [Matrix(A.field, [[1]]), Matrix(A.field, [[0]])])
    assert ModuleMap(P1, P1, bad).is_isomorphism()
    assert len(hom_basis(P1, S1).basis) == 1


@pytest.mark.parametrize("name", sorted(fixtures.FIXTURES))
def test_hom_from_projectives_and_into_injectives(name):
    alg = fixtures.FIXTURES[name]()
    rng = random.Random(hash(name) % 1000)
    for _ in range(50):
        M = random_module(alg, rng)
        M.validate()
        for i in range(alg.n_vertices):
            assert hom_dim(projective(alg, i), M) == M.dims[i]
            assert hom_dim(M, injective(alg, i)) == M.dims[i]


@pytest.mark.parametrize("name", ["CYC2", "A3R", "X3"])
def test_hom_dim_matches_oracle(name):
    alg = fixtures.FIXTURES[name]()
    rng = random.Random(7)
    for _ in range(8):
        M, N = random_module(alg, rng), random_module(alg, rng)
        assert hom_dim(M, N) == oracles.hom_dim(M, N)


@pytest.mark.parametrize("name", ["CYC2", "A3R", "DUAL"])
def test_top_and_socle_preserved(name):
    alg = fixtures.FIXTURES[name]()
    rng = random.Random(3)
    for _ in range(10):
        M = random_module(alg, rng)
        if M.is_zero():
            continue
        cov = projective_cover(M)
        assert structure(cov.module).top.dims == structure(M).top.dims
        env = injective_envelope(M)
        assert structure(env.module).socle.dims == structure(M).socle.dims
