import pytest

from skewdna.skewpoly import (
    SkewPoly,
    UnsupportedDivisorError,
    apply_theta,
    is_palindromic,
    is_theta_palindromic,
    right_divides_xn_minus_1,
    right_divmod,
    skew_mul,
)
from skewdna.text import parse_poly_expr
from skewdna.worked import EX4_G, EX4_H, EX5_G

from conftest import random_element


def P(text, ring):
    return parse_poly_expr(text, ring)


def random_poly(ring, rng, degree, monic=False):
    cs = [random_element(ring, rng) for _ in range(degree + 1)]
    if monic:
        cs[-1] = ring.one
    return SkewPoly(ring, cs)


def test_x_plus_one_squared(r11):
    f = P("x + 1", r11)
    assert skew_mul(f, f) == P("x^2 + 1", r11)


def test_example4_product(r13):
    h, g = P(EX4_H, r13), P(EX4_G, r13)
    assert h * g == SkewPoly.xn_minus_1(r13, 6)
    q, r = right_divmod(SkewPoly.xn_minus_1(r13, 6), g)
    assert q == h and not r


def test_identity(r13, rng):
    f = random_poly(r13, rng, 4)
    one = SkewPoly.constant(r13, r13.one)
    assert f * one == f
    assert one * f == f


def test_twist_law(r11, gf16):
    x = SkewPoly.monomial(r11, 1)
    a = r11.constant(gf16.exp(1))
    A = SkewPoly.constant(r11, a)
    assert x * A == SkewPoly.monomial(r11, 1, r11.theta(a))
    assert x * A != A * x


def test_associative_distributive(r13, rng):
    for _ in range(20):
        f, g, h = (random_poly(r13, rng, d) for d in (2, 3, 2))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (g + h) * f == g * f + h * f


def test_degree_additive_for_unit_leads(r13, rng):
    f = random_poly(r13, rng, 3, monic=True)
    g = random_poly(r13, rng, 2, monic=True)
    assert (f * g).degree == 5


def test_divmod_small(r11):
    q, r = right_divmod(P("x^2 - 1", r11), P("x + 1", r11))
    assert q == P("x + 1", r11) and not r


def test_divmod_round_trip(r13, rng):
    for _ in range(50):
        f = random_poly(r13, rng, rng.randrange(0, 7))
        g = random_poly(r13, rng, rng.randrange(1, 4), monic=True)
        q, r = right_divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree


def test_divmod_rejects_non_monic(r11, gf16):
    g = SkewPoly(r11, [r11.one, r11.constant(gf16.exp(2))])
    with pytest.raises(UnsupportedDivisorError, match="normalize"):
        right_divmod(P("x^2", r11), g)
    g = SkewPoly(r11, [r11.one, r11.variable(1)])
    with pytest.raises(UnsupportedDivisorError):
        right_divmod(P("x^2", r11), g)


def test_right_divides(r11, r13):
    assert right_divides_xn_minus_1(P("x + 1", r11), 2)
    assert right_divides_xn_minus_1(P(EX4_G, r13), 6)
    assert not right_divides_xn_minus_1(P("x + b", r11), 2)
    with pytest.raises(ValueError, match="even"):
        right_divides_xn_minus_1(P("x + 1", r11), 3)


def test_palindromic(r11, r13):
    assert is_palindromic(P(EX5_G, r13))
    assert is_palindromic(P("x^2 + u1*x + 1", r11))
    assert not is_palindromic(P("x + b", r11))
    with pytest.raises(ValueError):
        is_palindromic(SkewPoly(r11, []))


def test_theta_palindromic(r11, r13):
    g = P(EX4_G, r13)
    assert is_theta_palindromic(g) and g.degree == 3
    assert is_theta_palindromic(P("x + 1", r11))
    assert not is_theta_palindromic(P("1 + b*x + b*x^2 + x^3", r11))
    with pytest.raises(ValueError):
        is_theta_palindromic(SkewPoly(r11, []))


def test_apply_theta(r11, r13, rng):
    f = random_poly(r13, rng, 4)
    assert apply_theta(apply_theta(f)) == f
    assert apply_theta(P("x + u1", r11)) == P("x + (u1 + 1)", r11)
    one = SkewPoly.constant(r11, r11.one)
    assert apply_theta(one) == one
