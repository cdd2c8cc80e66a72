import random

import pytest

from qcluster.builders import build_disk_seed
from qcluster.errors import FrozenMutation
from qcluster.quiver import IceQuiver, Vertex
from qcluster.rootdata import cartan_data
from qcluster.scalars import Scalar
from qcluster.tropical import (
    LusztigDatum,
    TropicalPoint,
    count_F0_dim,
    lusztig_weight,
    orbit_normal_form,
    potential_trop,
    trop_eval,
    trop_mutate,
)


def test_trop_mutate_golden4(golden4):
    p = TropicalPoint(golden4, {"b": 1})
    out = trop_mutate(p, "b")
    assert out.coord("b") == -1
    assert out.coord("a") == 0 and out.coord("c") == 0 and out.coord("d") == 0


def test_trop_mutate_involutive(golden4):
    rng = random.Random(0)
    for _ in range(30):
        p = TropicalPoint(
            golden4, tuple(rng.randint(-3, 3) for _ in range(4))
        )
        k = rng.choice(["a", "b"])
        again = trop_mutate(trop_mutate(p, k), k)
        assert again.coords == p.coords and again.chart == p.chart


def test_trop_mutate_frozen_error(golden4):
    with pytest.raises(FrozenMutation):
        trop_mutate(TropicalPoint(golden4, {}), "d")


def test_frozen_basis_points_fixed(golden4):
    rng = random.Random(1)
    for vid in ("c", "d"):
        p = TropicalPoint(golden4, {vid: 1})
        for _ in range(200):
            p = trop_mutate(p, rng.choice(["a", "b"]))
        assert p.as_dict() == {vid: 1}


def symbolic_k2_oracle(chart, p, k):
    """Tropicalization via substitution: evaluate the K2 exchange on
    A_i = t^{p_i} with exact Laurent polynomials (positive coefficients,
    so valuations never cancel) and read the lowest exponent."""
    ki = chart.index[k]
    plus = Scalar.one()
    minus = Scalar.one()
    for j, x in enumerate(p.coords):
        e = chart.eps2[ki][j] // 2
        if e > 0:
            plus = plus * Scalar.q_half(2 * e * x)
        elif e < 0:
            minus = minus * Scalar.q_half(2 * (-e) * x)
    total = plus + minus
    val = min(total.terms) // 2
    return val - p.coords[ki]


def test_trop_mutate_matches_symbolic_oracle():
    rng = random.Random(2)
    for trial in range(100):
        n = rng.choice([2, 3, 4])
        eps2 = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = 2 * rng.randint(-2, 2)
                eps2[i][j], eps2[j][i] = v, -v
        chart = IceQuiver([Vertex(f"v{i}", False) for i in range(n)], eps2)
        p = TropicalPoint(chart, tuple(rng.randint(-5, 5) for _ in range(n)))
        k = f"v{rng.randrange(n)}"
        out = trop_mutate(p, k)
        assert out.coord(k) == symbolic_k2_oracle(chart, p, k)


def test_trop_eval(golden4):
    p = TropicalPoint(golden4, {"a": 3, "b": -1, "c": 2})
    assert trop_eval([{"a": 1}], p) == 3
    assert trop_eval([{"a": 1}, {"b": 1}, {"c": 1}, {"d": 1}], p) == -1
    # positive constant rescalings are tropically invisible (not encoded)
    assert trop_eval([{"a": 1, "b": 2}], p) == 1


def test_lusztig_weight_examples():
    c = cartan_data("A1")
    zero = LusztigDatum(c, (1,), (0,), (0,), (0,), (0,))
    assert lusztig_weight(zero) == ((0,), (0,))
    d1 = LusztigDatum(c, (1,), (1,), (0,), (1,), (0,))
    assert lusztig_weight(d1) == ((1,), (1,))
    d2 = LusztigDatum(c, (1,), (0,), (1,), (0,), (0,))
    assert lusztig_weight(d2) == ((1,), (1,))


def test_lusztig_datum_validation():
    c = cartan_data("A1")
    with pytest.raises(ValueError):
        LusztigDatum(c, (1,), (-1,), (0,), (0,), (0,))


def test_count_f0_examples():
    c1 = cartan_data("A1")
    assert count_F0_dim(c1, (1,), ((0,), (0,))) == 1
    assert count_F0_dim(c1, (1,), ((1,), (1,))) == 3
    c2 = cartan_data("A2")
    assert count_F0_dim(c2, (1, 2, 1), ((1, 0), (0, 0))) == 1


def test_count_f0_star_symmetry():
    """Swapping both weight components through the star involution
    preserves the count (A2 enumeration)."""
    c = cartan_data("A2")
    word = (1, 2, 1)

    def star_vec(v):
        return (v[1], v[0])  # A2 star swaps the two simple roots

    for l1 in ((1, 0), (0, 1), (1, 1)):
        for l2 in ((0, 0), (1, 0), (1, 1)):
            a = count_F0_dim(c, word, (l1, l2))
            b = count_F0_dim(c, word, (star_vec(l2), star_vec(l1)))
            assert a == b


def test_potential_trop():
    c = cartan_data("A1")
    zero = LusztigDatum(c, (1,), (0,), (0,), (0,), (0,))
    assert potential_trop(zero, 1) == 0
    d = LusztigDatum(c, (1,), (2,), (0,), (3,), (0,))
    assert potential_trop(d, 1) == 2
    rng = random.Random(3)
    c2 = cartan_data("A2")
    for _ in range(20):
        d = LusztigDatum(
            c2,
            (1, 2, 1),
            tuple(rng.randint(0, 4) for _ in range(3)),
            (0, 0),
            tuple(rng.randint(0, 4) for _ in range(3)),
            (0, 0),
        )
        for i in (1, 2):
            assert potential_trop(d, i) >= 0


def test_orbit_normal_form():
    c = cartan_data("A1")
    d = LusztigDatum(c, (1,), (2,), (5,), (1,), (0,))
    assert orbit_normal_form(d) == d
    d2 = LusztigDatum(c, (1,), (2,), (5,), (1,), (1,))
    out = orbit_normal_form(d2)
    assert out.mu == (0,)
    assert out.lam == (4,)  # lam + w0(mu) = 5 - 1
    assert orbit_normal_form(out) == out
    c2 = cartan_data("A2")
    d3 = LusztigDatum(c2, (1, 2, 1), (0, 1, 0), (2, -1), (1, 0, 0), (1, 2))
    out3 = orbit_normal_form(d3)
    assert out3.mu == (0, 0)
    # lam' = lam + w0(mu); w0(alpha_i) = -alpha_{i*} in A2
    assert out3.lam == (2 - 2, -1 - 1)
    assert orbit_normal_form(out3) == out3


def test_disk_frozen_tropical_fixpoints():
    disk = build_disk_seed(cartan_data("A2"), (1, 2, 1))
    rng = random.Random(4)
    for vid in disk.quiver.frozen_ids():
        p = TropicalPoint(disk.quiver, {vid: 1})
        for _ in range(100):
            p = trop_mutate(p, rng.choice(p.chart.mutable_ids()))
        assert p.as_dict() == {vid: 1}
