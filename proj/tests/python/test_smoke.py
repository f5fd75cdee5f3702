import math
import os
import sys

import pytest

module_dir = os.environ.get("SJD_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

sjd = pytest.importorskip("_sjd") if module_dir else pytest.importorskip("sjd")


def test_transform_round_trips():
    eta, w = 0.5 + 0.25j, 0.3 - 0.4j
    z, w2 = sjd.fc_forward(eta, w)
    assert w2 == w
    eta_back, _ = sjd.fc_inverse(z, w)
    assert abs(eta_back - eta) < 1e-14

    v = sjd.cayley_to_uhp(w)
    assert v.imag > 0
    assert abs(sjd.cayley_to_disk(v) - w) < 1e-14


def test_group_action():
    g = sjd.SU11Element(math.sqrt(2), 1j)
    j = sjd.JacobiElement(g, 0.3 + 0.2j, 0.0)
    z, w = sjd.act_disk(j, 0.1 + 0.1j, 0.2)
    assert abs(w) < 1.0
    z2, w2 = sjd.act_disk(sjd.inverse(j), z, w)
    assert abs(z2 - (0.1 + 0.1j)) < 1e-12
    assert abs(w2 - 0.2) < 1e-12


def test_closed_form_dynamics():
    c = sjd.HamiltonianCoeffs(1.0, 2.0, 0.5)
    delta, w1, w2 = sjd.riccati_roots(c)
    assert delta == pytest.approx(3.0)
    w_c, eta_c = sjd.critical_point(c)
    assert abs(w_c - (math.sqrt(3) - 2)) < 1e-14
    assert abs(sjd.solve_riccati_disk(w_c, c, 4.0) - w_c) < 1e-12

    params = sjd.ModelParams(1.0)
    grid = [0.1 * i for i in range(51)]
    traj = sjd.integrate(sjd.Chart.FC, 0j, 0j, c, grid, params)
    assert traj.complete
    assert max(abs(e - traj.energy[0]) for e in traj.energy) < 1e-9
    for t, (eta, w) in zip(traj.times, traj.states):
        assert abs(w - sjd.solve_riccati_disk(0j, c, t)) < 1e-9
        assert abs(eta - sjd.solve_eta_closed(0j, c, t)) < 1e-9


def test_berry_phase_circle():
    params = sjd.ModelParams(1.0)
    n = 20000
    path = [
        (0j, 0.5 * complex(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)))
        for i in range(n + 1)
    ]
    phi = sjd.berry_phase_fc(path, params)
    assert phi == pytest.approx(-4 * math.pi / 3, abs=1e-6)


def test_verification_harness():
    rep = sjd.run_verification(11, 10)
    assert rep.all_pass()
    names = [r.name for r in rep.results]
    assert "geometry/fc_pullback" in names
    bad = sjd.run_verification(11, 10, inject_fc_bug=True)
    failed = [r.name for r in bad.results if not r.passed]
    assert failed == ["geometry/fc_pullback"]


def test_domain_errors():
    with pytest.raises(Exception):
        sjd.cayley_to_disk(1 - 1j)  # not in the upper half-plane
    with pytest.raises(Exception):
        sjd.fc_forward(0j, 1.5 + 0j)  # |w| >= 1
