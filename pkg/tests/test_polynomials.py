from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from balcfg import polynomials as ip

# ascending coefficient tuples: (2, -2, -1, 1) is t^3 - t^2 - 2t + 2
CUBIC_MIXED = (2, -2, -1, 1)


def test_trim_and_degree():
    assert ip.trim([1, 2, 0, 0]) == (1, 2)
    assert ip.trim([0, 0]) == ()
    assert ip.degree(()) == -1
    assert ip.degree((5,)) == 0
    assert ip.degree((0, 0, 3)) == 2


def test_arithmetic_frozen():
    assert ip.add((1, 2), (3, -2)) == (4,)
    assert ip.sub((1, 2), (1, 2)) == ()
    assert ip.neg((1, -2)) == (-1, 2)
    assert ip.shift_up((1, 2)) == (0, 1, 2)


def test_eval_modes():
    p = (-1, 0, 1)  # t^2 - 1
    assert ip.eval_at(p, 2.0) == 3.0
    assert ip.eval_at(p, Fraction(1, 2)) == Fraction(-3, 4)
    assert isinstance(ip.eval_at(p, Fraction(1, 2)), Fraction)


def test_parity_predicates():
    assert ip.is_even_poly((-1, 0, 1))
    assert not ip.is_odd_poly((-1, 0, 1))
    assert ip.is_odd_poly((0, -2, 0, 1))
    assert ip.is_even_poly(())  # zero polynomial is both
    assert ip.is_odd_poly(())


def test_sign_at_is_exact_at_roots():
    p = (-1, 0, 1)
    assert ip.sign_at(p, Fraction(1)) == 0
    assert ip.sign_at(p, Fraction(1, 2)) == -1
    assert ip.sign_at(p, Fraction(3, 2)) == 1


@given(
    st.lists(st.integers(-50, 50), min_size=1, max_size=8),
    st.fractions(min_value=Fraction(-10), max_value=Fraction(10), max_denominator=32),
)
def test_sign_at_matches_exact_evaluation(coeffs, x):
    p = ip.trim(coeffs)
    if not p:
        return
    value = ip.eval_at(p, x)
    assert ip.sign_at(p, x) == (0 if value == 0 else (1 if value > 0 else -1))


def test_root_bound_is_a_power_of_two_bound():
    b = ip.root_bound((2, -2, -1, 1))
    assert b & (b - 1) == 0
    # no sign change outside [-b, b]
    assert ip.sign_at((2, -2, -1, 1), Fraction(b)) == ip.sign_at(
        (2, -2, -1, 1), Fraction(4 * b)
    )


def test_descartes_count_isolates():
    p = (-1, 0, 1)
    assert ip.descartes_count(p, Fraction(0), Fraction(2)) == 1
    assert ip.descartes_count(p, Fraction(-2), Fraction(0)) == 1
    assert ip.descartes_count(p, Fraction(2), Fraction(4)) == 0


def test_certified_roots_quadratic():
    width = Fraction(1, 10**12)
    roots = ip.certified_roots((-1, 0, 1), width)
    assert len(roots) == 2
    for (lo, hi), expect in zip(roots, (-1, 1)):
        assert hi - lo <= width
        assert lo <= expect <= hi


def test_certified_roots_with_exact_dyadic_root():
    # (t - 1)(t^2 - 2): the rational root must not break bisection
    width = Fraction(1, 10**12)
    roots = ip.certified_roots(CUBIC_MIXED, width)
    assert len(roots) == 3
    mids = [float((lo + hi) / 2) for lo, hi in roots]
    assert abs(mids[0] + 2 ** 0.5) < 1e-12
    assert mids[1] == 1.0
    assert roots[1][0] == roots[1][1] == 1  # exact hit, zero width
    assert abs(mids[2] - 2 ** 0.5) < 1e-12


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5, unique=True))
def test_certified_roots_recover_integer_roots(int_roots):
    p = (1,)
    for r in int_roots:
        # multiply by (t - r)
        p = ip.add(ip.shift_up(p), ip.neg(tuple(r * a for a in p)))
    width = Fraction(1, 10**9)
    found = ip.certified_roots(p, width)
    assert len(found) == len(int_roots)
    for (lo, hi), expect in zip(found, sorted(int_roots)):
        assert lo <= expect <= hi


def test_certified_roots_none_for_positive_definite():
    assert ip.certified_roots((1, 0, 1), Fraction(1, 1000)) == []


def test_certified_roots_degenerate_inputs():
    # constants (and the zero polynomial) have no isolatable roots
    assert ip.certified_roots((), Fraction(1, 2)) == []
    assert ip.certified_roots((7,), Fraction(1, 2)) == []
