import math

import numpy as np
import pytest

import glkinks as gk


def test_figure_friction():
    for fig, tol in ((1, 1e-4), (2, 1e-4), (3, 1e-3), (4, 1e-3)):
        f = gk.figure_spec(fig)
        assert abs(f.recomputed_rho() - f.quoted_rho) < tol


def test_undriven_limits_and_residual():
    k = gk.make_undriven(1.0, 1.0, 1)
    assert k.rho == pytest.approx(3.0 / math.sqrt(2.0))
    assert {k.left_limit, k.right_limit} == {0.0, 1.0}
    assert gk.max_residual(k) < 1e-10
    assert gk.max_residual(k, finite_difference=True) < 1e-8


def test_vectorized_profile_marks_poles():
    k = gk.make_undriven(1.0, 1.0, 4)
    xs = np.linspace(-5.0, 5.0, 1001)
    ys = k(xs)
    assert ys.shape == xs.shape
    assert k.singularities
    pole = k.singularities[0]
    with pytest.raises(gk.SingularPoint):
        k(pole)
    assert np.isfinite(ys[np.abs(xs - pole) > 0.1]).all()


def test_driven_lambda_kink_and_forbidden_interval():
    f = gk.figure_spec(1)
    lo, hi = gk.lambda_forbidden_interval(f.setup(), gk.DrivenCase.I, gk.Sign.plus)
    assert lo == 0.0 and hi > 0.0
    assert not f.make(2.0 * hi).singularities
    assert f.make(0.5 * hi).singularities
    with pytest.raises(gk.ParameterError):
        gk.driven_setup(1.0, 1.0, 2.0)


def test_rk4_reproduces_closed_form():
    k = gk.make_undriven(1.0, 1.0, 1)
    v, d1, _ = k.derivatives(-10.0)
    xs, psi, blowup = gk.integrate(k.params, v, d1, -10.0, 10.0, 1e-3)
    assert blowup is None
    assert np.max(np.abs(np.array(psi) - k(np.array(xs)))) < 1e-6


def test_delay_saturates():
    f = gk.figure_spec(2)
    lambdas, mids, inf = f.delay_curve([10.0, 100.0, 1000.0])
    gaps = [abs(m - inf) for m in mids]
    assert gaps[0] > gaps[1] > gaps[2]


def test_cli_in_process():
    code, out, err = gk.run_cli(["eval", "--family", "undriven", "--index", "1",
                                 "--grid", "-1:1:3"])
    assert code == 0, err
    assert out.splitlines()[-1].startswith("1,")
    assert gk.run_cli(["figure", "--fig", "9"])[0] == 2
