import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from cartan_forge.corpus import problems
from cartan_forge.equations import HypothesisError
from cartan_forge.forms import DForm, de_rham, horizontal_diff
from cartan_forge.lagrangian import (LagrangianClass, PresymplecticRep, action_from_internal,
                                     gauge_compare, hidden_status, internal_of_lagrangian,
                                     is_internal_lagrangian, presymplectic_cocycle_check,
                                     presymplectic_of, shift_witness)
from cartan_forge.parser import parse_form


def load(name, index=0):
    return problems(name)[index]


@pytest.fixture(scope="module")
def wave():
    return load("wave2d")


def F(problem, text):
    return parse_form(problem.system.space, text)


class TestInternal:
    def test_wave_representative(self, wave):
        lc = internal_of_lagrangian(wave.lagrangian, wave.system)
        assert lc.representative.to_text() == \
            "(1/2*u_{t}^2 - 1/2*u_{x}^2)*dx&dt + u_{t}*dx&th[u] + u_{x}*dt&th[u]"

    def test_bare_lagrangian_is_not_internal(self, wave):
        verdict = is_internal_lagrangian(wave.lagrangian, wave.system)
        assert not verdict
        assert not verdict.residue.is_zero()

    def test_negative_example(self, wave):
        verdict = is_internal_lagrangian(F(wave, "u*dx&dt"), wave.system)
        assert not verdict.ok
        assert verdict.residue.to_text() == "dx&dt&th[u]"

    def test_wrong_degree(self, wave):
        with pytest.raises(ValueError):
            is_internal_lagrangian(F(wave, "u*dx"), wave.system)

    def test_class_validates(self, wave):
        with pytest.raises(HypothesisError):
            LagrangianClass(F(wave, "u*dx&dt"), wave.system)

    def test_euler_must_vanish(self, wave):
        with pytest.raises(HypothesisError) as info:
            internal_of_lagrangian(F(wave, "(u_t^2 + u_x^2)/2*dx&dt"), wave.system)
        assert info.value.residue.to_text() == "-2*u_{xx}*dx&dt&th[u]"

    @pytest.mark.parametrize("name", ["wave2d", "pkdv", "scalar_field_nd", "maxwell3d"])
    def test_corpus_lagrangians(self, name):
        for prob in problems(name):
            lc = internal_of_lagrangian(prob.lagrangian, prob.system)
            assert is_internal_lagrangian(lc.representative, prob.system).ok


class TestGauge:
    def test_identical(self, wave):
        l = internal_of_lagrangian(wave.lagrangian, wave.system).representative
        assert gauge_compare(l, l, wave.system).ok

    def test_detects_difference(self, wave):
        l = internal_of_lagrangian(wave.lagrangian, wave.system).representative
        cmp = gauge_compare(l + F(wave, "u*dx&dt"), l, wave.system)
        assert not cmp.ok
        assert cmp.residual == F(wave, "u*dx&dt")

    def test_contact_two_is_free(self, wave):
        l = internal_of_lagrangian(wave.lagrangian, wave.system).representative
        c = F(wave, "u*th[u]&th[u;x]")
        assert gauge_compare(l + c, l, wave.system, c=c).ok

    @pytest.mark.parametrize("name,index,eta", [
        ("wave2d", 0, "u*u_x*dx + u_t^2*dt"),
        ("pkdv", 0, "v*v_xx*dt"),
        ("scalar_field_nd", 1, "u*u_x*dx&dy + u_t*u_y*dy&dt + x*u_tt*dx&dt"),
    ])
    def test_shift_by_total_divergence(self, name, index, eta):
        prob = load(name, index)
        sys = prob.system
        eta = F(prob, eta)
        gw = shift_witness(prob.lagrangian, eta, sys)
        l1 = internal_of_lagrangian(prob.lagrangian + horizontal_diff(eta), sys).representative
        l2 = internal_of_lagrangian(prob.lagrangian, sys).representative
        cmp = gauge_compare(l1, l2, sys, gw.c, gw.rho, gw.sigma)
        assert cmp.ok, cmp.checks

    def test_three_dimensional_rho_is_nontrivial(self):
        prob = load("scalar_field_nd", 1)
        gw = shift_witness(prob.lagrangian, F(prob, "u*u_x*dx&dy + u_t*u_y*dy&dt + x*u_tt*dx&dt"),
                           prob.system)
        assert gw.rho.to_text() == "-u*dy&th[u]"

    def test_shift_rejects_bad_eta(self, wave):
        with pytest.raises(ValueError):
            shift_witness(wave.lagrangian, F(wave, "u*th[u]"), wave.system)


class TestAction:
    @pytest.mark.parametrize("name", ["wave2d", "pkdv", "maxwell3d"])
    def test_round_trip(self, name):
        prob = load(name)
        l = internal_of_lagrangian(prob.lagrangian, prob.system).representative
        res = action_from_internal(l, prob.system)
        assert res.certificates == {"a": True, "b": True, "c": True, "noether": True, "extension": True}
        assert res.lagrangian.is_horizontal()

    def test_wave_recovers_action(self, wave):
        l = internal_of_lagrangian(wave.lagrangian, wave.system).representative
        assert action_from_internal(l, wave.system).lagrangian == wave.lagrangian

    def test_zero(self, wave):
        res = action_from_internal(DForm(wave.system.space), wave.system)
        assert res.lagrangian.is_zero()
        assert all(res.certificates.values())

    def test_pkdv_needs_ideal_correction(self):
        prob = load("pkdv")
        l = internal_of_lagrangian(prob.lagrangian, prob.system).representative
        res = action_from_internal(l, prob.system)
        assert not res.source_operator.is_zero()
        assert res.extension.ideal_terms

    def test_rejects_non_internal(self, wave):
        with pytest.raises(HypothesisError):
            action_from_internal(F(wave, "u*dx&dt"), wave.system)


class TestPresymplectic:
    def test_wave(self, wave):
        rep = presymplectic_of(internal_of_lagrangian(wave.lagrangian, wave.system))
        assert rep.omega.to_text() == "dx&th[u]&th[u;t] + dt&th[u]&th[u;x]"
        assert presymplectic_cocycle_check(rep).ok
        assert hidden_status(rep) == "not hidden"

    def test_non_cocycle(self, wave):
        w = F(wave, "th[u]&th[u;x]&dx")
        verdict = presymplectic_cocycle_check(w, wave.system)
        assert not verdict.ok
        want = F(wave, "-dx&dt&th[u]&th[u;xt] - dx&dt&th[u;t]&th[u;x]")
        assert verdict.residue == want
        # u_xt is internal on the wave equation, so the plain exterior derivative is the oracle
        assert oracle.naive_equal(oracle.to_naive(want), oracle.n_d(oracle.to_naive(w)))

    def test_requires_contact_two(self, wave):
        with pytest.raises(ValueError):
            presymplectic_cocycle_check(F(wave, "th[u]&dx&dt"), wave.system)
        with pytest.raises(ValueError):
            presymplectic_cocycle_check(F(wave, "th[u]&th[u;x]"))

    def test_zero_is_undetermined(self, wave):
        rep = PresymplecticRep(DForm(wave.system.space), DForm(wave.system.space), wave.system)
        assert hidden_status(rep) == "undetermined"

    def test_maxwell4d_not_hidden(self):
        prob = load("maxwell4d")
        rep = presymplectic_of(internal_of_lagrangian(prob.lagrangian, prob.system))
        assert not rep.is_zero()
        assert presymplectic_cocycle_check(rep).ok
        assert hidden_status(rep) == "not hidden"


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9))
def test_presymplectic_invariant_under_exact_shifts(seed):
    """Adding d(rho) with rho in C^1 leaves the restricted Omega unchanged."""
    rng = random.Random(seed)
    prob = load("wave2d")
    sys, sp = prob.system, prob.system.space
    l = internal_of_lagrangian(prob.lagrangian, sys).representative
    rho = oracle.random_form(rng, sp, 1, max_order=2, contact_bias=1.0)
    shifted = sys.reduce_form(l + de_rham(rho))
    a = presymplectic_of(LagrangianClass(l, sys)).omega
    b = presymplectic_of(LagrangianClass(shifted, sys)).omega
    assert a == b
