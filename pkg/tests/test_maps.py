"""Falsification harness: positive maps survive, negatives are refuted."""

import pytest

import altstar as st
from altstar.maps import sample_pool
from altstar.sampling import derive_rng, random_element
from altstar.scalars import I, ONE, Scalar, TWO, ZERO


@pytest.fixture(scope="module")
def zorn_patched_double(zorn):
    p = zorn.basis_element(2)  # u1, not an idempotent
    return st.patched_map(st.identity_map(zorn), {p: p.scale(TWO)},
                          name="patched-double")


# -- construction and application ---------------------------------------------


def test_apply_linear_core(m2):
    phi = st.identity_map(m2)
    rng = derive_rng(501, "apply")
    for _ in range(20):
        x = random_element(m2, rng)
        assert st.apply_map(phi, x) == x


def test_patch_lookup_precedes_linear_core(zorn):
    u1, w1 = zorn.basis_element(2), zorn.basis_element(5)
    swap = st.patched_map(st.identity_map(zorn), {u1: w1, w1: u1},
                          name="uw-swap")
    assert swap(u1) == w1
    assert swap(w1) == u1
    assert swap(zorn.basis_element(3)) == zorn.basis_element(3)
    assert st.bijective_claim(swap)


def test_conjugating_map_applies_conjugation_first(m2):
    phi = st.star_as_map(m2)
    rng = derive_rng(502, "star-map")
    for _ in range(20):
        x = random_element(m2, rng)
        assert phi(x) == x.star()


def test_domain_mismatch_rejected(m2, zorn):
    phi = st.identity_map(m2)
    with pytest.raises(st.MapError):
        phi(zorn.unit)


def test_patch_table_validation(m2, zorn):
    e11, e12, e21 = m2.basis_element(0), m2.basis_element(1), \
        m2.basis_element(2)
    base = st.identity_map(m2)
    # duplicate outputs
    with pytest.raises(st.MapError):
        st.patched_map(base, {e11: e21, e12: e21})
    # wrong algebra
    with pytest.raises(st.MapError):
        st.patched_map(base, {zorn.unit: e11})
    # distinct outputs that are not a rewiring: constructible, but the
    # bijectivity claim is withdrawn
    chain = st.patched_map(base, {e11: e12, e12: e21})
    assert not st.bijective_claim(chain)
    # permutation-style rewiring keeps the claim
    ok = st.patched_map(base, {e11: e12, e12: e11})
    assert st.bijective_claim(ok)


def test_linear_part_shape_validated(m2):
    with pytest.raises(st.MapError):
        st.AlgebraMap(m2, m2, [[ONE] * 3 for _ in range(4)])


def test_bijective_claim(m2):
    assert st.bijective_claim(st.identity_map(m2))
    zero_map = st.AlgebraMap(m2, m2, [[ZERO] * 4 for _ in range(4)],
                             name="zero")
    assert not st.bijective_claim(zero_map)


def test_unital_examples(m2):
    assert st.check_unital(st.identity_map(m2))
    assert not st.check_unital(st.scale_map(m2, TWO))
    assert st.check_unital(st.matrix_swap_conjugation(m2))


# -- sample pool ---------------------------------------------------------------


def test_pool_contains_structured_points(zorn, zorn_peirce,
                                         zorn_patched_double):
    pool = sample_pool(zorn_patched_double, zorn_peirce, 24, seed=3)
    coords = {x.coords for x in pool}
    assert zorn.basis_element(2).coords in coords          # the patch point
    assert zorn.unit.coords in coords
    assert zorn_peirce.e1.coords in coords
    assert zorn_peirce.e2.coords in coords
    assert zorn_peirce.e1.scale(Scalar(1, 0, 2)).coords in coords
    assert zorn_peirce.e1.scale(I).coords in coords
    assert len(pool) == 24
    assert len(coords) == 24


# -- positive subjects ----------------------------------------------------------


def _all_positive_checks(phi, p, samples, seed):
    assert st.check_unital(phi)
    for n in (2, 3):
        rep = st.check_jordan_condition(phi, p, n, samples, seed)
        assert not rep.refuted, rep.witness
        assert rep.samples_run == samples
        assert "not refuted" in rep.verdict
    iso = st.check_star_ring_isomorphism(phi, p, samples, seed)
    assert iso.ok, [c.check for c in iso.checks if c.refuted]
    return iso


def test_identity_on_zorn_passes(zorn, zorn_peirce):
    _all_positive_checks(st.identity_map(zorn), zorn_peirce, 150, seed=5)


def test_rotation_automorphism_passes(zorn, zorn_peirce):
    _all_positive_checks(st.zorn_rotation_map(zorn), zorn_peirce, 150,
                         seed=5)


def test_swap_conjugation_passes(m2, m2_peirce):
    _all_positive_checks(st.matrix_swap_conjugation(m2), m2_peirce, 150,
                         seed=5)


def test_entrywise_conjugation_is_star_ring_automorphism(m2, m2_peirce):
    _all_positive_checks(st.conjugation_map(m2), m2_peirce, 150, seed=5)


def test_passing_iso_implies_passing_condition(zorn, zorn_peirce, m2,
                                               m2_peirce):
    # forward direction at desk scale, for every shipped positive example
    shipped = [(st.identity_map(zorn), zorn_peirce),
               (st.zorn_rotation_map(zorn), zorn_peirce),
               (st.matrix_swap_conjugation(m2), m2_peirce),
               (st.conjugation_map(m2), m2_peirce)]
    for phi, p in shipped:
        iso = st.check_star_ring_isomorphism(phi, p, 80, seed=6)
        if iso.ok:
            for n in (2, 3):
                assert not st.check_jordan_condition(phi, p, n, 80,
                                                     seed=6).refuted


def test_condition_consistent_across_arities(zorn, zorn_peirce):
    phi = st.zorn_rotation_map(zorn)
    verdicts = {n: st.check_jordan_condition(phi, zorn_peirce, n, 60,
                                             seed=7).refuted
                for n in (2, 3, 4)}
    assert verdicts == {2: False, 3: False, 4: False}


# -- negative subjects ----------------------------------------------------------


def test_patched_map_is_refuted_with_reproducible_witness(
        zorn, zorn_peirce, zorn_patched_double):
    phi = zorn_patched_double
    rep = st.check_jordan_condition(phi, zorn_peirce, 3, 500, seed=5)
    assert rep.refuted
    w = rep.witness
    assert w is not None
    # the patch point is in the pool, so refutation comes fast
    assert rep.samples_run <= 200
    # the witness re-evaluates to an exact inequality
    a, b = w.inputs
    tag = w.kind.split("=", 1)[1]
    xi = {"1": zorn.unit, "e1": zorn_peirce.e1,
          "e2": zorn_peirce.e2}[tag]
    lhs = phi(st.q_star([xi, a, b]))
    rhs = st.q_star([phi(xi), phi(a), phi(b)])
    assert lhs == w.lhs and rhs == w.rhs
    assert lhs != rhs


def test_refutation_is_deterministic(zorn, zorn_peirce,
                                     zorn_patched_double):
    r1 = st.check_jordan_condition(zorn_patched_double, zorn_peirce, 3,
                                   500, seed=5)
    r2 = st.check_jordan_condition(zorn_patched_double, zorn_peirce, 3,
                                   500, seed=5)
    assert r1 == r2


def test_scaling_map_breaks_star_preservation(m2, m2_peirce):
    phi = st.scale_map(m2, I, name="scale-by-i")
    iso = st.check_star_ring_isomorphism(phi, m2_peirce, 100, seed=5)
    assert not iso.ok
    c = iso.check("star_preservation")
    assert c.refuted
    (x,) = c.witness.inputs
    assert phi(x.star()) == c.witness.lhs
    assert phi(x).star() == c.witness.rhs
    assert c.witness.lhs != c.witness.rhs


def test_patched_map_fails_additivity(zorn, zorn_peirce,
                                      zorn_patched_double):
    iso = st.check_star_ring_isomorphism(zorn_patched_double, zorn_peirce,
                                         200, seed=5)
    assert iso.check("additivity").refuted


def test_nonunital_map_rejected_by_condition_check(m2, m2_peirce):
    with pytest.raises(st.MapError):
        st.check_jordan_condition(st.scale_map(m2, TWO), m2_peirce, 3,
                                  10, seed=1)


def test_condition_requires_arity_at_least_two(m2, m2_peirce):
    with pytest.raises(st.MapError):
        st.check_jordan_condition(st.identity_map(m2), m2_peirce, 1, 10,
                                  seed=1)


def test_peirce_system_must_live_on_domain(m2, zorn_peirce):
    with pytest.raises(st.MapError):
        st.check_jordan_condition(st.identity_map(m2), zorn_peirce, 2, 10,
                                  seed=1)


def test_rotation_map_requires_zorn(m2):
    with pytest.raises(st.MapError):
        st.zorn_rotation_map(m2)


def test_swap_conjugation_requires_m2(zorn):
    with pytest.raises(st.MapError):
        st.matrix_swap_conjugation(zorn)
