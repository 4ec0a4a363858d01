import json
import math

import pytest

cesaro = pytest.importorskip("cesaro")


def test_sequence_norms():
    assert cesaro.norm("tandori_l1", [0.0, 1.0]) == pytest.approx(2.0)
    assert cesaro.norm("ces_inf", [1.0]) == pytest.approx(1.0)
    assert cesaro.norm("lp:2", [3.0, 4.0]) == pytest.approx(5.0)
    # Hardy: ||C a||_2 <= 2 ||a||_2
    a = [1.0 / (k + 1) for k in range(200)]
    assert cesaro.norm("ces:lp:2", a) <= 2.0 * cesaro.norm("lp:2", a)


def test_transforms():
    assert cesaro.cesaro([1, 2, 3]) == pytest.approx([1, 1.5, 2])
    assert cesaro.majorant([1, -3, 2]) == [3, 3, 2]
    assert cesaro.rearrange([1, -3, 2]) == [3, 2, 1]
    assert cesaro.copson([2, 2]) == pytest.approx([3, 1])


def test_function_norms():
    f = cesaro.StepFn([0.0, 4.0], [1.0], domain="halfline")
    assert cesaro.norm("lorentz:power:0.5", f) == pytest.approx(2.0)
    assert f.integral_abs() == pytest.approx(4.0)
    g = cesaro.StepFn([0.0, 0.5, 1.0], [1.0, 3.0])
    assert g.majorant().values == [3.0, 3.0]


def test_dual_norms():
    # ces_inf norm of (0, 1, 3) is 4/3; its Tandori l1 norm is 9
    w = cesaro.dual_norm("tandori_l1", [0.0, 1.0, 3.0])
    assert w["value"] == pytest.approx(4.0 / 3.0, rel=1e-12)
    assert w["violation"] <= 1e-10
    assert cesaro.dual_norm("ces_inf", [0.0, 1.0, 3.0])["value"] == pytest.approx(9.0)
    f = cesaro.StepFn([0.0, 4.0], [1.0], domain="halfline")
    assert cesaro.dual_norm("ces_inf", f)["value"] == pytest.approx(4.0)
    with pytest.raises(ValueError):
        cesaro.dual_norm("lp:2", [1.0])


def test_concave_and_indices():
    phi = cesaro.ConcaveFn.power(0.5)
    assert phi(4.0) == pytest.approx(2.0)
    assert phi.psi(4.0) == pytest.approx(2.0)
    est = cesaro.estimate_indices(phi)
    assert abs(est["p"] - 0.5) <= 0.02 and abs(est["q"] - 0.5) <= 0.02
    assert cesaro.check_q_less_one(phi)["best_C"] == pytest.approx(2.0, abs=1e-6)
    with pytest.raises(cesaro.ArgumentError):
        cesaro.ConcaveFn.power(1.5)


def test_log_weight_anchor():
    phi = cesaro.ConcaveFn.power(1.0, unit=True)
    for t in (0.01, 0.3, 0.9):
        assert cesaro.thm8_weight(phi, t) == pytest.approx(math.log(1.0 / t), abs=1e-9)


def test_verify_is_deterministic():
    assert "thm2" in cesaro.suite_names()
    a = cesaro.verify_json("thm2", seed=3, trials=100)
    assert a == cesaro.verify_json("thm2", seed=3, trials=100)
    rep = json.loads(a)
    assert rep["schema"] == "cesaro-lab-report v1"
    assert rep["overall"] == "pass"
    assert len(rep["cases"]) == 100
    with pytest.raises(ValueError):
        cesaro.verify("nope")


def test_cli_in_process():
    code, out, _ = cesaro.run_cli(["norm", "--space", "tandori_l1", "--seq", "0,1"])
    assert (code, out) == (0, "2\n")
    assert cesaro.run_cli(["verify", "nope"])[0] == 2
