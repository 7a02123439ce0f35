import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from cartan_forge.expr import Expr
from cartan_forge.forms import DForm, horizontal_diff
from cartan_forge.jet import AUX_PHI, AUX_PSI, JetSpace
from cartan_forge.parser import parse, parse_form
from cartan_forge.variational import (CDiffOp, NotLinearError, adjoint, adjoint_operator,
                                      compose_dh, euler, horizontal_primitive, ibp_operator,
                                      ibp_scalar, correction_residual, linearization, noether_form,
                                      noether_identity_check, operator_of_cartan_form,
                                      verify_decomposition)

F = parse_form
WAVE = "(u_t^2 - u_x^2)/2*dx&dt"


class TestEuler:
    def test_free_particle(self, x1):
        assert euler(F(x1, "u_x^2/2*dx")).to_text() == ["-u_{xx}"]

    def test_wave(self, xt):
        assert euler(F(xt, WAVE)).to_text() == ["-u_{tt} + u_{xx}"]

    def test_matches_sympy_oracle(self, xt):
        L = F(xt, "(u*u_x*u_tt + x*u_xt^2 + t*u^3)*dx&dt")
        got = euler(L)
        dens = oracle.to_sympy(parse(xt, "u*u_x*u_tt + x*u_xt^2 + t*u^3"))
        assert [oracle.to_sympy(c) for c in got.components] == oracle.euler(xt, dens)

    def test_total_divergence_is_null(self, x1):
        assert euler(horizontal_diff(F(x1, "u^2"))).is_zero()

    def test_rejects_wrong_degree(self, xt):
        with pytest.raises(ValueError):
            euler(F(xt, "u*dx"))
        with pytest.raises(ValueError):
            euler(F(xt, "u*th[u]&dx"))

    def test_two_fields(self):
        sp = JetSpace(("x",), ("u", "v"))
        assert euler(F(sp, "u_x*v_x*dx")).to_text() == ["-v_{xx}", "-u_{xx}"]


def top_op(space, text):
    return CDiffOp.from_generic_form(F(space, text), space.m)


class TestIntegrationByParts:
    def test_single_derivative(self, x1):
        op = top_op(x1, "u*phi[u]_x*dx")
        dec = ibp_scalar(op)
        assert dec.source(x1).to_text() == ["-u_{x}"]
        assert dec.boundary.apply_generic().to_text() == "u*phi[u]"
        assert verify_decomposition(op, dec).is_zero()

    def test_order_zero(self, x1):
        dec = ibp_scalar(top_op(x1, "phi[u]*dx"))
        assert dec.source(x1).to_text() == ["1"]
        assert dec.boundary.is_zero()

    def test_pure_divergence(self, x1):
        dec = ibp_scalar(top_op(x1, "phi[u]_xx*dx"))
        assert dec.source(x1).is_zero()
        assert dec.boundary.apply_generic().to_text() == "phi[u]_{x}"

    def test_boundary_row_sign(self, xt):
        # a D_t phi dx&dt = d_h(-a phi dx) - D_t(a) phi dx&dt
        dec = ibp_scalar(top_op(xt, "u*phi[u]_t*dx&dt"))
        assert dec.boundary.apply_generic() == F(xt, "-u*phi[u]*dx")
        assert dec.source(xt).to_text() == ["-u_{t}"]

    def test_rejects_non_linear(self, x1):
        with pytest.raises(NotLinearError):
            top_op(x1, "phi[u]^2*dx")

    def test_operator_pairing(self, x1):
        o = ibp_operator(top_op(x1, "G[1]*phi[u]*dx"), 1)
        assert o.boundary.is_zero()
        assert [e.to_text() for e in o.source_operator.apply_generic()] == ["G[1]"]

        o = ibp_operator(top_op(x1, "G[1]*phi[u]_x*dx"), 1)
        assert o.boundary.apply_generic().to_text() == "phi[u]*G[1]"
        assert [e.to_text() for e in o.source_operator.apply_generic()] == ["-G[1]_{x}"]

        o = ibp_operator(top_op(x1, "G[1]_x*phi[u]*dx"), 1)
        assert o.boundary.is_zero()
        assert [e.to_text() for e in o.source_operator.apply_generic()] == ["G[1]_{x}"]


class TestAdjoint:
    def test_linearization(self, xt):
        lf = linearization([parse(xt, "u_xx*u + x*u_t")])
        assert [e.to_text() for e in lf.apply_generic()] == ["x*phi[u]_{t} + u*phi[u]_{xx} + u_{xx}*phi[u]"]

    def test_adjoint_example(self, xt):
        # hand: (u D_xx + x D_t + u_xx)* = D_xx(u .) - D_t(x .) + u_xx
        a = adjoint(linearization([parse(xt, "u_xx*u + x*u_t")]))
        got = a.op.apply_generic(AUX_PSI)
        assert [e.to_text() for e in got] == ["-x*psi[1]_{t} + u*psi[1]_{xx} + 2*u_{x}*psi[1]_{x} + 2*u_{xx}*psi[1]"]

    def test_adjoint_is_involutive(self, xt):
        lf = linearization([parse(xt, "u_xx*u + x*u_t"), parse(xt, "u_x^3")])
        assert adjoint_operator(adjoint_operator(lf)) == lf

    def test_scalar_only(self, xt):
        with pytest.raises(ValueError):
            adjoint_operator(top_op(xt, "phi[u]*dx&dt"))


class TestNoetherForm:
    def test_free_particle(self, x1):
        nf = noether_form(F(x1, "u_x^2/2*dx"))
        assert nf.omega.to_text() == "u_{x}*th[u]"
        assert nf.residual.is_zero()

    def test_wave(self, xt):
        nf = noether_form(F(xt, WAVE))
        assert nf.omega.to_text() == "u_{t}*dx&th[u] + u_{x}*dt&th[u]"
        assert noether_identity_check(F(xt, WAVE), nf.omega).ok

    def test_contact_part_is_absorbed(self, xt):
        L = F(xt, WAVE) + F(xt, "u*th[u]&dt")
        nf = noether_form(L)
        assert (L + nf.omega) == (F(xt, WAVE) + noether_form(F(xt, WAVE)).omega)
        assert correction_residual(L, nf.omega).is_zero()

    def test_identity_fails_for_wrong_form(self, xt):
        check = noether_identity_check(F(xt, WAVE), F(xt, "u_t*th[u]&dx"))
        assert not check.ok

    def test_operator_of_cartan_form(self, x1):
        op = operator_of_cartan_form(F(x1, "u_x*th[u]"))
        assert [e.to_text() for e in [op.apply_generic()]] == ["u_{x}*phi[u]"]

    def test_rejects_wrong_degree(self, xt):
        with pytest.raises(ValueError):
            noether_form(F(xt, "u*dx"))


class TestHorizontalPrimitive:
    def test_simple_closed_operator(self, xt):
        # d_h of anything is closed; the primitive must reproduce it
        sp3 = JetSpace(("x", "y", "t"), ("u",))
        for text in ["u*phi[u]_x", "u*phi[u]_y*dx + x*phi[u]_xt*dt"]:
            op = compose_dh(CDiffOp.from_generic_form(F(sp3, text), 1))
            assert compose_dh(horizontal_primitive(op)) == op

    def test_rejects_non_closed(self, xt):
        op = CDiffOp.from_generic_form(F(xt, "phi[u]*dx"), 1)
        with pytest.raises(ValueError):
            horizontal_primitive(op)

    def test_degree_range(self, x1):
        with pytest.raises(ValueError):
            horizontal_primitive(CDiffOp.from_generic_form(F(x1, "phi[u]*dx"), 1))


# -- properties -----------------------------------------------------------------------

SPACES = [JetSpace(("x",), ("u",)), JetSpace(("x", "t"), ("u",)),
          JetSpace(("x", "y", "t"), ("u", "v"))]


def random_top_operator(rng, space, max_order=3):
    total = Expr(space)
    for _ in range(rng.randint(1, 4)):
        coeff = oracle.random_expr(rng, space, max_order=2, terms=2)
        j = rng.randrange(space.m)
        total = total + coeff * Expr.aux(space, AUX_PHI, j, oracle.random_alpha(rng, space.n, max_order))
    return CDiffOp.from_generic_form(DForm.volume(space, total), space.m)


@st.composite
def cases(draw):
    return draw(st.sampled_from(SPACES)), random.Random(draw(st.integers(0, 10**9)))


@settings(max_examples=80, deadline=None)
@given(cases())
def test_ibp_source_matches_adjoint_oracle(case):
    space, rng = case
    op = random_top_operator(rng, space)
    if op.is_zero():
        return
    dec = ibp_scalar(op)
    assert verify_decomposition(op, dec).is_zero()
    row = op.rows[0]
    for col in range(space.m):
        coeffs = {a: oracle.to_sympy(Expr(space, p))
                  for a, p in op.entries.get((row, col), {}).items()}
        want = oracle.adjoint_formula(space, coeffs, 1)
        assert oracle.to_sympy(dec.source(space).components[col]) == want


@settings(max_examples=60, deadline=None)
@given(cases())
def test_ibp_is_independent_of_strip_order(case):
    space, rng = case
    op = random_top_operator(rng, space)
    if op.is_zero():
        return
    a, b = ibp_scalar(op, "smallest"), ibp_scalar(op, "largest")
    assert a.source_polys == b.source_polys
    diff = a.boundary - b.boundary
    assert compose_dh(diff).is_zero()
    if space.n >= 2 and not diff.is_zero():
        assert compose_dh(horizontal_primitive(diff)) == diff


@settings(max_examples=60, deadline=None)
@given(cases())
def test_euler_kills_total_divergences(case):
    space, rng = case
    eta = oracle.random_horizontal(rng, space, space.n - 1, max_order=3)
    assert euler(horizontal_diff(eta)).is_zero()


@settings(max_examples=60, deadline=None)
@given(cases())
def test_euler_matches_oracle(case):
    space, rng = case
    dens = oracle.random_expr(rng, space, max_order=2, terms=4, max_deg=3)
    got = euler(DForm.volume(space, dens))
    assert [oracle.to_sympy(c) for c in got.components] == oracle.euler(space, oracle.to_sympy(dens))


@settings(max_examples=40, deadline=None)
@given(cases())
def test_helmholtz_self_adjointness(case):
    space, rng = case
    dens = oracle.random_expr(rng, space, max_order=2, terms=3, max_deg=3)
    lin = linearization(euler(DForm.volume(space, dens)).components)
    assert adjoint_operator(lin) == lin


@settings(max_examples=60, deadline=None)
@given(cases())
def test_adjoint_witness(case):
    space, rng = case
    rows = [oracle.random_expr(rng, space, max_order=2, terms=3) for _ in range(rng.randint(1, 2))]
    lin = linearization(rows)
    a = adjoint(lin)
    phi_vals = lin.apply_generic(AUX_PHI)
    star_vals = a.op.apply_generic(AUX_PSI)
    z = space.zero_index()
    lhs = Expr(space)
    for i, s in enumerate(star_vals):
        lhs = lhs + s * Expr.aux(space, AUX_PHI, i, z)
    for r, v in enumerate(phi_vals):
        lhs = lhs - v * Expr.aux(space, AUX_PSI, r, z)
    assert DForm.volume(space, lhs) == horizontal_diff(a.witness)


@settings(max_examples=40, deadline=None)
@given(cases())
def test_noether_identity_on_random_lagrangians(case):
    space, rng = case
    L = oracle.random_horizontal(rng, space, space.n, max_order=2)
    if rng.random() < 0.5:
        L = L + oracle.random_form(rng, space, space.n, max_order=2, contact_bias=0.5)
    for direction in ("smallest", "largest"):
        nf = noether_form(L, direction)
        assert nf.residual.is_zero()
        assert noether_identity_check(nf.horizontal, nf.cartan_part).ok
