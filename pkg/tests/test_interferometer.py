import numpy as np
import pytest

from etherdrift.errors import DegenerateConfigError, DomainError, InputError
from etherdrift.interferometer import (InterferometerConfig, angle_scan,
                                       arm_speed, delay_exact,
                                       delay_first_order, fringe_shift,
                                       improvement_factor, min_detectable_u,
                                       rotation_signal)
from etherdrift.kinematics import CompositionLaw, MediumSpec
from etherdrift.units import PAPER

C = PAPER.c


def config(n1=1.0006, n2=1.0001, L=1.0, u=1e3, lam=633e-9,
           composition=CompositionLaw.EINSTEIN, e_f=0.0):
    return InterferometerConfig.from_indices(L, n1, n2, u, lam, composition, e_f)


def test_transverse_orientation_gives_rest_speed():
    cfg = config(u=3e5)
    assert arm_speed(cfg, 1, 90.0) == C / 1.0006
    assert arm_speed(cfg, 2, 270.0) == C / 1.0001


def test_vacuum_einstein_arm_is_invariant():
    cfg = config(n1=1.0, n2=1.0, u=2.5e5)
    assert arm_speed(cfg, 1, 0.0) == pytest.approx(C, rel=1e-15)


def test_arm_speed_tangherlini_frozen():
    cfg = config(n1=1.0003, n2=1.0, u=3e5, composition=CompositionLaw.TANGHERLINI)
    # (c/1.0003 - 3e5)/(1 - (3e5/c)^2), 50-digit arithmetic
    assert arm_speed(cfg, 1, 0.0) == pytest.approx(299402847.05336435, rel=1e-14)


def test_arm_index_validated():
    with pytest.raises(InputError):
        arm_speed(config(), 3, 0.0)


def test_delay_identical_arms_is_zero_everywhere():
    cfg = config(n1=1.0004, n2=1.0004, u=2e5)
    for theta in (0.0, 37.0, 90.0, 180.0, 233.0):
        assert delay_exact(cfg, theta) == 0.0


def test_delay_static_case():
    cfg = config(u=0.0)
    expected = (1.0 / C) * (1.0006 - 1.0001)
    assert delay_exact(cfg, 0.0) == pytest.approx(expected, rel=1e-15)
    assert delay_first_order(cfg, 123.4) == pytest.approx(expected, rel=1e-15)


def test_delay_exact_frozen():
    # L(1/w1 - 1/w2) at theta=0 for the reference configuration,
    # 50-digit arithmetic
    assert delay_exact(config(), 0.0) == pytest.approx(1.6678316064227491e-12, rel=5e-12)


def test_delay_first_order_frozen():
    # (L/c)(n1-n2)[1 + (u/c)(n1+n2)], 50-digit arithmetic
    assert delay_first_order(config(), 0.0) == pytest.approx(
        1.6678316063855960e-12, rel=1e-14)


def test_first_order_matches_exact_to_second_order():
    cfg = config(u=C * 1e-5)
    residual = abs(delay_exact(cfg, 0.0) - delay_first_order(cfg, 0.0))
    assert residual <= 5.0 * (cfg.u / C) ** 2 * (cfg.L / C)


def test_first_order_reversal_is_sign_flip_of_u():
    cfg = config(u=7.7e4)
    flipped = config(u=-7.7e4)
    for theta in (0.0, 10.0, 45.0, 77.7):
        assert delay_first_order(cfg, theta + 180.0) == delay_first_order(flipped, theta)


def test_rotation_signal_frozen():
    signal = rotation_signal(config())
    # Dt(0) - Dt(180) and 2(u/c)(n1^2-n2^2)(L/c), 50-digit arithmetic
    assert signal.first_order == pytest.approx(2.2260789671464744e-17, rel=1e-14)
    assert signal.exact == pytest.approx(2.2260789671712776e-17, rel=1e-6)
    assert signal.exact == pytest.approx(signal.first_order, rel=1e-6)


def test_rotation_signal_odd_in_u():
    plus = rotation_signal(config(u=5e4))
    minus = rotation_signal(config(u=-5e4))
    assert plus.first_order == -minus.first_order
    assert plus.exact == pytest.approx(-minus.exact, rel=1e-9)


def test_rotation_signal_swap_and_flip_invariance():
    base = rotation_signal(config(n1=1.0006, n2=1.0001, u=4e4)).first_order
    swapped = rotation_signal(config(n1=1.0001, n2=1.0006, u=-4e4)).first_order
    assert base == pytest.approx(swapped, rel=1e-15)


def test_rotation_signal_identical_arms_bitwise_zero():
    for law in CompositionLaw:
        signal = rotation_signal(config(n1=1.0, n2=1.0, u=2.9e5, composition=law))
        assert signal.exact == 0.0
        assert signal.first_order == 0.0


def test_rotation_signal_full_drag_cancels_first_order():
    signal = rotation_signal(config(e_f=1.0))
    assert signal.first_order == 0.0


def test_fringe_shift():
    assert fringe_shift(633e-9 / C, 633e-9) == pytest.approx(1.0, rel=1e-15)
    assert fringe_shift(0.0, 633e-9) == 0.0
    # c * 2.23e-17/633nm, 50-digit arithmetic
    assert fringe_shift(2.23e-17, 633e-9) == pytest.approx(0.010561408867930490, rel=1e-15)
    assert fringe_shift(2.0 * 2.23e-17, 633e-9) == pytest.approx(
        2.0 * fringe_shift(2.23e-17, 633e-9), rel=1e-15)
    with pytest.raises(DomainError):
        fringe_shift(1e-17, 0.0)


def test_min_detectable_u_frozen_and_inverts_forward_formula():
    cfg = config()
    # res lambda c/(2(n1^2-n2^2)L), 50-digit arithmetic
    u_min = min_detectable_u(cfg, 1e-3)
    assert u_min == pytest.approx(94.851115066726646, rel=1e-13)
    at_threshold = config(u=u_min)
    fringes = fringe_shift(rotation_signal(at_threshold).first_order, cfg.lambda_vac)
    assert fringes == pytest.approx(1e-3, rel=1e-12)


def test_min_detectable_u_scales():
    cfg = config()
    doubled = config(L=2.0)
    assert min_detectable_u(doubled, 1e-3) == pytest.approx(
        min_detectable_u(cfg, 1e-3) / 2.0, rel=1e-14)
    assert min_detectable_u(cfg, 5e-4) == pytest.approx(
        min_detectable_u(cfg, 1e-3) / 2.0, rel=1e-14)


def test_min_detectable_u_degenerate():
    with pytest.raises(DegenerateConfigError):
        min_detectable_u(config(n1=1.0003, n2=1.0003), 1e-3)
    with pytest.raises(DegenerateConfigError):
        min_detectable_u(config(e_f=1.0), 1e-3)
    with pytest.raises(DomainError):
        min_detectable_u(config(), 0.0)


def test_improvement_factor():
    assert improvement_factor(C, 1.0006, 1.0001) == pytest.approx(
        1.0006 ** 2 - 1.0001 ** 2, rel=1e-15)
    assert improvement_factor(1e3, 1.2, 1.2) == 0.0
    # (c/u)(n1^2 - n2^2) for the reference pair, 50-digit arithmetic
    assert improvement_factor(1e3, 1.0006, 1.0001) == pytest.approx(
        299.89738536030, rel=1e-13)
    with pytest.raises(DomainError):
        improvement_factor(0.0, 1.0006, 1.0001)


def test_angle_scan_two_steps_is_rotation_pair():
    cfg = config()
    rows = angle_scan(cfg, 2)
    assert [row.theta_deg for row in rows] == [0.0, 180.0]
    assert rows[0].delay_exact_s == delay_exact(cfg, 0.0)
    assert rows[1].delay_exact_s == delay_exact(cfg, 180.0)
    assert rows[0].delay_exact_s - rows[1].delay_exact_s == rotation_signal(cfg).exact


def test_angle_scan_static_is_constant():
    rows = angle_scan(config(u=0.0), 8)
    assert len({row.delay_exact_s for row in rows}) == 1


def test_angle_scan_half_turn_antisymmetry():
    cfg = config(u=2e5)
    rows = angle_scan(cfg, 12)
    static = (cfg.L / C) * (1.0006 - 1.0001)
    for k in range(6):
        a = rows[k].delay_first_order_s - static
        b = rows[k + 6].delay_first_order_s - static
        assert a == pytest.approx(-b, rel=1e-12, abs=1e-40)


def test_angle_scan_validates_steps():
    with pytest.raises(InputError):
        angle_scan(config(), 1)


def test_config_validation_names_offender():
    with pytest.raises(DomainError, match="n1"):
        config(n1=0.5)
    with pytest.raises(DomainError, match="n2"):
        config(n2=0.99)
    with pytest.raises(DomainError):
        config(L=0.0)
    with pytest.raises(DomainError):
        config(lam=-1e-9)
    with pytest.raises(DomainError):
        config(u=C)
    with pytest.raises(DomainError):
        config(e_f=1.5)
    with pytest.raises(DomainError):
        InterferometerConfig(1.0, MediumSpec(0.99), MediumSpec(1.0), 0.0, 633e-9)
