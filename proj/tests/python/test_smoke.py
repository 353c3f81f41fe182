import json
import math

import numpy as np
import pytest

import zsspec


def test_satsuma_yajima_spectrum():
    r = zsspec.compute_spectrum(zsspec.Potential.satsuma_yajima(1.8), 120, 0.15)
    ks = sorted(k.imag for k in r.discrete_k)
    assert len(ks) == 4
    assert np.allclose(ks, [-1.3, -0.3, 0.3, 1.3], atol=1e-9)
    assert r.all_k.shape == (240,)
    assert max(r.residuals) < 1e-6
    assert json.loads(r.to_json())["params"]["n"] == 120


def test_eigenvalues_match_numpy():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(7, 7)) + 1j * rng.normal(size=(7, 7))
    mu, vecs = zsspec.eigenvalues(a, True)
    ref = np.linalg.eigvals(a)
    for z in mu:
        assert np.min(np.abs(ref - z)) < 1e-10
    assert np.linalg.norm(a @ vecs - vecs * mu) < 1e-8 * np.linalg.norm(a)


def test_chebyshev_basis():
    b = zsspec.chebyshev_basis(5)
    assert b.nodes[0] == -1.0 and b.nodes[-1] == 1.0
    assert np.allclose(b.vandermonde @ b.transform, np.eye(5))


def test_python_callable_potential():
    p = zsspec.Potential.custom(lambda x: 1.8 / math.cosh(x), 0, 0, "py-sech")
    assert p(0.0) == pytest.approx(1.8)
    r = zsspec.compute_spectrum(p, 80, 0.15)
    assert min(abs(k - 1.3j) for k in r.discrete_k) < 1e-8
    rec = zsspec.convergence_study(p, [(0.15, 40), (0.15, 60)], 1.3j, threads=2)
    assert rec.status == ["found", "found"]
    assert rec.errors[1] < rec.errors[0]


def test_eigenfunction_and_fcm():
    ef = zsspec.eigenfunction(zsspec.Potential.solitonic(), 100, 0.1, 1, 0.5 + 0.5j)
    assert ef.residual < 1e-6
    assert np.isclose(np.sum(np.abs(ef.psi1) ** 2 + np.abs(ef.psi2) ** 2), 1.0)
    f = zsspec.fcm_spectrum(zsspec.Potential.satsuma_yajima(1.8), 25.0, 128)
    assert f.method == "fcm"
    assert min(abs(k - 1.3j) for k in f.discrete_k) < 1e-6


def test_evolution():
    res = zsspec.evolve(zsspec.Potential.satsuma_yajima(1.0), m=128, t_end=0.5, stride=100)
    assert res.field.shape[1] == 128
    assert abs(res.mass_series[-1] - res.mass_series[0]) < 1e-10
    assert zsspec.count_structures(res.field[-1]) == 1


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        zsspec.compute_spectrum(zsspec.Potential.solitonic(), 4, 0.1)
    with pytest.raises(OSError):
        zsspec.Potential.from_file("/no/such/table.txt")
