import math

import numpy as np
import pytest

import landau_lab as ll


@pytest.fixture
def unit():
    return ll.MagneticSetup(1.0, 1.0)


def test_setup_scales():
    s = ll.MagneticSetup(eB=4.0, m_e=2.0)
    assert s.magnetic_length == pytest.approx(0.5)
    assert s.larmor == pytest.approx(1.0)
    assert s.level_energy(2) == pytest.approx(5.0)
    with pytest.raises(ValueError):
        ll.MagneticSetup(-1.0, 1.0)


def test_special_functions_vectorize():
    assert ll.hermite(3, 1.0) == pytest.approx(-4.0)
    assert ll.assoc_laguerre(1, 1.0, 1.0) == pytest.approx(1.0)
    xi = np.linspace(-2, 2, 7)
    np.testing.assert_allclose(ll.hermite(2, xi), 4 * xi**2 - 2)
    assert ll.norm_constants(ll.MagneticSetup(), 1, 1)["n_nm"] == pytest.approx(1.0)


def test_gauges(unit):
    assert ll.potential(unit, ll.GaugeChoice.symmetric(), 1.0, 2.0) == pytest.approx((-1.0, 0.5))
    assert ll.potential(unit, ll.GaugeChoice.landau1(), 1.0, 2.0) == pytest.approx((-2.0, 0.0))
    d = ll.GaugeChoice.symmetric().deformed(ll.HarmonicGauge.xy(1.0))
    assert ll.potential(unit, d, 0.3, -1.7) == pytest.approx(ll.potential(unit, ll.GaugeChoice.landau1(), 0.3, -1.7))
    assert ll.gauge_phase(unit, ll.HarmonicGauge.xy(1.0), 1.0, math.pi) == pytest.approx(1j)
    curl, div = ll.curl_check(unit, d, [(0.1, 0.2), (3.0, -1.0)])
    assert curl < 1e-14 and div < 1e-14


def test_states_on_arrays(unit):
    assert ll.psi_sym_nm(unit, 0, 0, 0.0, 0.0) == pytest.approx(0.3989422804, rel=1e-9)
    assert ll.psi_l1_nkx(unit, 0, 0.0, 0.0, 0.0) == pytest.approx(0.2996557376, rel=1e-9)
    x = np.linspace(-1, 1, 5)
    st = ll.QuantumState.l1_nm(unit, 2, -1)
    np.testing.assert_allclose(st(x, 0.5 * x), ll.psi_l1_nm(unit, 2, -1, x, 0.5 * x))
    assert st.gauge == ll.GaugeChoice.landau1()
    assert st.label == "L1NM(n=2,m=-1)"
    with pytest.raises(ValueError):
        ll.QuantumState.sym_nm(unit, 1, 2)
    assert ll.overlap_kernel(unit, 0, 0.0, 0) == pytest.approx(math.pi ** -0.25)


def test_matrix_elements(unit):
    a = ll.QuantumState.sym_nm(unit, 2, 1)
    r = ll.matrix_element(unit, a, ll.Operator.LMechZ, ll.GaugeChoice.symmetric(), a)
    assert abs(r.value - 5.0) < 1e-8
    q = ll.matrix_element(unit, ll.QuantumState.sym_nm(unit, 1, 1), ll.Operator.PConsX, ll.GaugeChoice.symmetric(),
                          ll.QuantumState.sym_nm(unit, 1, 0))
    assert abs(q.value + 1j * math.sqrt(0.5)) < 1e-8
    strip = ll.QuantumState.l1_nkx(unit, 0, 0.0)
    with pytest.raises(ll.DeltaNormalizedError):
        ll.matrix_element(unit, strip, ll.Operator.PCanX, None, strip)
    with pytest.raises(ll.ConfigurationError):
        ll.apply(unit, ll.Operator.PMechX, None, a, 0.1, 0.2)
    assert ll.eigen_residual(a) < 1e-6


def test_packets_and_gcc(unit):
    p = ll.PacketSpec(1, 0.7, 1.0)
    lm = ll.packet_expectation(unit, ll.Operator.LMechZ, ll.GaugeChoice.landau1(), p)
    assert abs(lm.value - 3.0) < 1e-6
    lc = ll.packet_expectation(unit, ll.Operator.LConsZ, ll.GaugeChoice.landau1(), p)
    assert abs(lc.value - (1.5 - (0.49 + 0.5) / 2 - 0.25)) < 1e-6
    k = ll.table1_closed_form(unit, ll.Operator.LConsZ, ll.BasisClass.L1NM, p)
    assert abs(lc.value - k) < 1e-6
    op = ll.gcc_build(ll.Operator.GccOam, ll.GaugeChoice.symmetric())
    s = ll.QuantumState.sym_nm(unit, 1, 0)
    g = ll.matrix_element(unit, s, op, ll.GaugeChoice.symmetric(), s)
    c = ll.matrix_element(unit, s, ll.Operator.LConsZ, ll.GaugeChoice.symmetric(), s)
    assert abs(g.value - c.value) < 1e-8


def test_fock(unit):
    assert ll.table2_entry(unit, ll.Operator.LConsZ, ll.BasisClass.SymNM, 3, -1, -1) == pytest.approx(-1.0)
    assert ll.table2_entry(unit, ll.Operator.PCanX, ll.BasisClass.L1NM, 1, 1, 0) == pytest.approx(-1j * math.sqrt(0.5))
    assert ll.table2_entry(unit, ll.Operator.LCanZ, ll.BasisClass.L1NM, 2, 2, 0) == pytest.approx(math.sqrt(0.5))
    mat, valid = ll.operator_matrix(unit, ll.Operator.LConsZ, ll.BasisClass.SymNM, 3, 3)
    assert mat.shape == (16, 16)
    assert np.allclose(np.diag(mat).real, [na - nb for na in range(4) for nb in range(4)])
    checks = ll.commutator_suite(unit, 8, 8)
    assert all(c["max_deviation"] < 1e-12 for c in checks if not c["expect_nonzero"])
    assert any(c["expect_nonzero"] and c["max_deviation"] > 0.1 for c in checks)


def test_classical(unit):
    traj = ll.integrate(unit, (0.0, 0.0, 1.0, 0.0), 2 * math.pi / 1000, 1000)
    assert traj.shape == (1001, 5)
    assert np.hypot(traj[-1, 1], traj[-1, 2]) < 1e-8
    np.testing.assert_allclose(traj[:, 2], 1 - np.cos(traj[:, 0]), atol=1e-9)
    drift = ll.conserved_drift(unit, (0.7, -0.4, 0.9, 0.6), 2 * math.pi / 1000, 100000)
    assert max(drift.values()) < 1e-6
    lag = ll.lagrangian_identities(unit, (0.7, -0.4, 0.9, 0.6), 2 * math.pi / 500, 1000)
    assert max(lag["sym_p_phi"], lag["sym_p_x"], lag["l1_p_x"], lag["l1_p_phi"]) < 1e-12


def test_suites():
    rows = ll.run_table2({"table2_n_max": 0, "m_min": -1})
    assert rows and all(r["passed"] for r in rows)
    rows = ll.run_classical({"periods": 10})
    assert all(r["passed"] for r in rows)
    with pytest.raises(ll.ConfigError):
        ll.run_table1({"colour": "blue"})
    with pytest.raises(ll.ConfigError):
        ll.run_table1({"sigma_list": [1.0, -2.0]})
