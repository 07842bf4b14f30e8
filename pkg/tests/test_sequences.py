import math
from fractions import Fraction

import pytest

from balcfg import polynomials as ip
from balcfg.errors import RootCountMismatch
from balcfg.sequences import (
    PolyPair,
    RootGrid,
    check_parity_degrees,
    closed_form_t,
    model_configuration,
    numeric_sequences,
    symbolic_sequences,
    t_grid,
    wn_equation_roots,
)

# hand-expanded low-order terms, ascending coefficients
U1 = PolyPair(x=(-1, 0, 1), y=(0, -1))            # (t^2 - 1, -t)
W1 = PolyPair(x=(0, -2, 0, 1), y=(1, 0, -1))      # (t^3 - 2t, 1 - t^2)
W2 = PolyPair(x=(0, 3, 0, -4, 0, 1), y=(-1, 0, 3, 0, -1))


def test_symbolic_frozen_low_orders():
    us, ws = symbolic_sequences(2)
    assert us[0] == PolyPair(x=(1,), y=())
    assert ws[0] == PolyPair(x=(0, 1), y=(-1,))
    assert us[1] == U1
    assert ws[1] == W1
    assert ws[2] == W2


def test_recurrence_sign_is_forced():
    # flipping the w step to use the previous u collapses w_1 to (0, 1),
    # whose x part is the zero polynomial instead of odd degree 3
    u0 = PolyPair(x=(1,), y=())
    w0 = PolyPair(x=(0, 1), y=(-1,))
    w1_variant = PolyPair(
        x=ip.sub(ip.shift_up(u0.x), w0.x),
        y=ip.sub(ip.shift_up(u0.y), w0.y),
    )
    assert w1_variant == PolyPair(x=(), y=(1,))
    assert ip.degree(w1_variant.x) < 3
    verdict = check_parity_degrees([u0, U1], [w0, w1_variant])
    assert not verdict
    assert (verdict.index, verdict.which) == (1, "w.x")


def test_numeric_matches_symbolic_evaluation():
    us_s, ws_s = symbolic_sequences(3)
    for t in (0.7, -1.2):
        us_n, ws_n = numeric_sequences(t, 3)
        for i in range(4):
            assert math.isclose(us_n[i].x, ip.eval_at(us_s[i].x, t), abs_tol=1e-12)
            assert math.isclose(us_n[i].y, ip.eval_at(us_s[i].y, t), abs_tol=1e-12)
            assert math.isclose(ws_n[i].x, ip.eval_at(ws_s[i].x, t), abs_tol=1e-12)
            assert math.isclose(ws_n[i].y, ip.eval_at(ws_s[i].y, t), abs_tol=1e-12)


def test_numeric_sequences_exact_mode():
    us, ws = numeric_sequences(Fraction(1, 2), 2)
    assert us[1].as_tuple() == (Fraction(-3, 4), Fraction(-1, 2))
    assert ws[1].mode == "exact"


def test_parity_degrees_hold_through_order_ten():
    us, ws = symbolic_sequences(10)
    assert check_parity_degrees(us, ws)


def test_roots_frozen_n1_n2():
    assert wn_equation_roots(1).values == (-1.0,)
    g2 = wn_equation_roots(2).values
    assert len(g2) == 2
    assert abs(g2[0] + 1.6180340) < 1e-6
    assert abs(g2[1] - 0.6180340) < 1e-6


def test_roots_agree_with_closed_form_grid():
    for n in range(1, 9):
        solved = wn_equation_roots(n)
        grid = t_grid(2 * n + 1)
        assert solved.m == grid.m == 2 * n + 1
        assert len(solved.values) == len(grid.values) == n
        for a, b in zip(solved.values, grid.values):
            assert abs(a - b) < 1e-10


def test_exact_root_at_minus_one_when_three_divides_m():
    # m = 9 includes t = 2cos(2pi/3) = -1, a rational root the isolator
    # must peel off exactly
    assert any(v == -1.0 for v in wn_equation_roots(4).values)


def test_t_grid_frozen_m5():
    grid = t_grid(5)
    assert abs(grid.values[0] + 1.618033988749895) < 1e-15
    assert abs(grid.values[1] - 0.6180339887498949) < 1e-15
    assert closed_form_t(5, 1) == 2 * math.cos(2 * math.pi / 5)


def test_t_grid_rejects_even_m():
    with pytest.raises(ValueError):
        t_grid(6)


def test_root_grid_validates_count():
    with pytest.raises(RootCountMismatch):
        RootGrid(m=5, values=(-1.0,))


def test_root_grid_validates_order_and_range():
    with pytest.raises(ValueError):
        RootGrid(m=5, values=(0.6, -1.6))
    with pytest.raises(ValueError):
        RootGrid(m=5, values=(-2.5, 0.6))


def test_model_configuration_layout_m5():
    for k in (1, 2):
        c = model_configuration(5, k)
        assert c.m == 5
        t = closed_form_t(5, k)
        us, ws = numeric_sequences(t, 2)
        assert c[0].as_tuple() == us[0].as_tuple()
        assert c[1].as_tuple() == us[1].as_tuple()
        assert c[2].as_tuple() == (0.0, 1.0)
        assert c[3].as_tuple() == ws[0].as_tuple()
        assert c[4].as_tuple() == ws[1].as_tuple()


def test_model_configuration_rejects_bad_k():
    with pytest.raises(ValueError):
        model_configuration(5, 3)
    with pytest.raises(ValueError):
        model_configuration(5, 0)
    with pytest.raises(ValueError):
        model_configuration(4, 1)
