"""Tests for root data, the invariant form, and Weyl orbits."""

from fractions import Fraction

import pytest

from weylmod.root_system import (
    build_algebra,
    dominant_representative,
    enumerate_root_lattice_ball,
    gram_is_positive_definite,
    inner_product,
    norm_sq,
    pair_weight_root,
    reflect_simple,
    root_norm_sq,
    same_weyl_orbit,
    weyl_orbit,
)

# (series, rank) -> (#positive roots, dual Coxeter number, dimension)
_DATA = {
    ("A", 1): (1, 2, 3),
    ("A", 2): (3, 3, 8),
    ("A", 3): (6, 4, 15),
    ("B", 2): (4, 3, 10),
    ("B", 3): (9, 5, 21),
    ("C", 3): (9, 4, 21),
    ("D", 4): (12, 6, 28),
    ("G", 2): (6, 4, 14),
    ("F", 4): (24, 9, 52),
    ("A", 5): (15, 6, 35),
    ("E", 6): (36, 12, 78),
}


def test_root_counts_and_dual_coxeter():
    for (series, rank), (npos, h, dim) in _DATA.items():
        a = build_algebra(series, rank)
        assert len(a.positive_roots) == npos
        assert a.dual_coxeter == h
        assert a.dim == dim


def test_bad_input_rejected():
    with pytest.raises(ValueError):
        build_algebra("Z", 9)
    with pytest.raises(ValueError):
        build_algebra("E", 9)
    with pytest.raises(ValueError):
        build_algebra("B", 1)
    with pytest.raises(ValueError):
        build_algebra("A", 0)


def test_normalization_long_roots_norm_two():
    for series, rank in _DATA:
        a = build_algebra(series, rank)
        assert gram_is_positive_definite(a)
        theta = a.root_vector(a.highest_root)
        assert root_norm_sq(theta) == 2
        # d_i = (alpha_i, alpha_i)/2 <= 1 with equality for long roots
        assert max(a.d) == 1


def test_g2_short_root_norm():
    g2 = build_algebra("G", 2)
    short = [d for d in g2.d if d != 1]
    assert short == [Fraction(1, 3)]
    i = g2.d.index(Fraction(1, 3))
    alpha = g2.root_vector([1 if j == i else 0 for j in range(2)])
    assert root_norm_sq(alpha) == Fraction(2, 3)


def test_rho_and_form():
    sl2 = build_algebra("A", 1)
    assert norm_sq(sl2.rho) == Fraction(1, 2)
    sl3 = build_algebra("A", 2)
    assert norm_sq(sl3.rho) == 2
    # (rho, alpha_i-check) = 1 for all i
    for series, rank in _DATA:
        a = build_algebra(series, rank)
        rho = a.rho
        for i in range(rank):
            alpha = a.root_vector([1 if j == i else 0 for j in range(rank)])
            assert 2 * pair_weight_root(rho, alpha) == root_norm_sq(alpha)


def test_inner_product_symmetry_and_integrality():
    a = build_algebra("B", 2)
    x = a.weight([1, 2])
    y = a.weight([-3, 1])
    assert inner_product(x, y) == inner_product(y, x)


def test_reflections_preserve_norm():
    a = build_algebra("G", 2)
    w = a.weight([2, -1])
    for i in range(2):
        r = reflect_simple(w, i)
        assert norm_sq(r) == norm_sq(w)
        assert reflect_simple(r, i) == w


def test_dominant_representative_and_orbit():
    a = build_algebra("A", 2)
    w = a.weight([-1, -1])
    dom, _ = dominant_representative(w)
    assert dom.is_dominant()
    orb = weyl_orbit(a.weight([1, 0]))
    assert len(orb) == 3
    assert same_weyl_orbit(a.weight([1, 0]), a.weight([-1, 1]))
    assert not same_weyl_orbit(a.weight([1, 0]), a.weight([0, 1]))
    # |W| orbit of a regular weight: A2 has Weyl group of order 6
    assert len(weyl_orbit(a.rho)) == 6


def test_weyl_orbit_sizes_sl2():
    sl2 = build_algebra("A", 1)
    assert len(weyl_orbit(sl2.weight([0]))) == 1
    assert len(weyl_orbit(sl2.weight([3]))) == 2


def test_ball_enumeration_exact():
    sl2 = build_algebra("A", 1)
    lam = sl2.weight([3])  # 3 omega = (3/2) alpha
    ball = enumerate_root_lattice_ball(sl2, lam, norm_sq(lam))
    # |m alpha + 3/2 alpha|^2 = 2 (m + 3/2)^2 <= 9/2 <=> -3 <= m <= 0
    assert [mu.coords for mu in ball] == [(-3,), (-2,), (-1,), (0,)]
    for mu in ball:
        q = root_norm_sq(mu) + 2 * pair_weight_root(lam, mu)
        assert q <= 0


def test_ball_enumeration_sl3_membership():
    sl3 = build_algebra("A", 2)
    lam = sl3.rho
    ball = set(
        mu.coords for mu in enumerate_root_lattice_ball(sl3, lam, norm_sq(lam))
    )
    # brute-force box check over a generous range
    expected = set()
    for m1 in range(-4, 5):
        for m2 in range(-4, 5):
            mu = sl3.root_vector([m1, m2])
            if root_norm_sq(mu) + 2 * pair_weight_root(lam, mu) <= 0:
                expected.add((m1, m2))
    assert ball == expected
    assert (0, 0) in ball


def test_ball_is_sorted_deterministically():
    sl3 = build_algebra("A", 2)
    ball = [
        mu.coords
        for mu in enumerate_root_lattice_ball(sl3, sl3.rho, norm_sq(sl3.rho))
    ]
    assert ball == sorted(ball)
