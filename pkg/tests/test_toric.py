import math
import random
from fractions import Fraction

import pytest
from oracles import unit_tuples

from lensreeb.chen_ruan import GradedTable
from lensreeb.errors import InputError, NotNormalized
from lensreeb.lens import normalize, validate
from lensreeb.toric import (
    bezout_pairs,
    build_toric_model,
    class_min_index,
    cz_index,
    cz_spectrum,
    hc_table,
    k0_threshold,
    mean_index,
    model_matrix,
    verify_basis_identity,
    verify_determinant,
    verify_kernel_generator,
    verify_periodicity,
    with_bezout_pair,
)


def model_for(p, weights):
    space, _ = normalize(validate(p, weights))
    return build_toric_model(space)


def random_model(rng, p_max=40):
    p = rng.randint(1, p_max)
    n = rng.randint(1, 3)
    units = [u for u in range(1, p) if math.gcd(u, p) == 1] or [1]
    weights = tuple(rng.choice(units) for _ in range(n)) + (1,)
    return build_toric_model(validate(p, weights))


class TestConstruction:
    def test_gorenstein_cube_root(self):
        model = model_for(3, (1, 1, 1))
        assert (model.m, model.k, model.q) == (1, 0, -3)
        assert (model.c, model.d, model.a0) == (-1, 0, 2)
        assert model.normals == ((0, 0, 1), (1, 0, 1), (-1, -3, 1))
        assert model.eta == (0, -1, 0)
        assert verify_determinant(model) == -3

    def test_generic_order_five(self):
        model = model_for(5, (1, 1, 1))
        assert (model.m, model.k, model.q) == (5, 2, 3)
        assert (model.c, model.d, model.a0) == (1, 3, -1)
        assert model.normals == ((0, 2, 5), (1, 0, 5), (-1, 3, 5))
        assert verify_determinant(model) == -5

    def test_sphere(self):
        model = model_for(1, (1, 1, 1))
        assert (model.m, model.k, model.q) == (1, 0, -1)
        assert (model.c, model.d, model.a0) == (-1, 0, 2)
        assert verify_determinant(model) == -1

    def test_requires_normalized(self):
        space = validate(5, (2, 3, 3))
        with pytest.raises(NotNormalized):
            build_toric_model(space)

    def test_k_stays_a_unit(self):
        # The congruence alone pins k only mod m; a representative
        # sharing a factor with p would collapse the kernel order.
        for p, weights, expected_k in [(10, (7, 1), 9), (15, (1, 4, 1), 8)]:
            model = model_for(p, weights)
            assert model.k == expected_k
            assert math.gcd(model.k, p) == 1
            assert verify_kernel_generator(model).order == p

    def test_k_minimality(self):
        rng = random.Random(7)
        for _ in range(200):
            model = random_model(rng)
            p = model.space.p
            c1 = sum(model.space.reduced)
            g = math.gcd(p, c1)
            if model.m == 1:
                assert model.k == 0
                continue
            smaller = [
                k
                for k in range(model.k)
                if (k * c1 - g) % p == 0 and math.gcd(k, p) == 1
            ]
            assert smaller == []

    def test_exhaustive_small_structures(self):
        for p in range(1, 21):
            for pair in unit_tuples(p, 2):
                model = build_toric_model(validate(p, pair + (1,)))
                assert abs(verify_determinant(model)) == p
                verify_basis_identity(model)
                verdict = verify_kernel_generator(model)
                assert verdict.order == p or (verdict.status == "degenerate")
                assert model.k * model.d - model.m * model.c == 1
                assert math.gcd(model.k, model.m) == 1

    def test_n_equals_one_layout(self):
        model = model_for(10, (7, 1))
        assert model.space.n == 1
        assert len(model.normals) == 2
        assert model.normals[0] == (model.k, model.m)
        matrix = model_matrix(model)
        assert matrix[0] == [model.k, model.normals[1][0]]


class TestIndex:
    def test_cube_root_values(self):
        model = model_for(3, (1, 1, 1))
        assert [cz_index(model, N) for N in range(1, 6)] == [0, 2, 4, 2, 4]

    def test_order_five_fractional(self):
        model = model_for(5, (1, 1, 1))
        assert cz_index(model, 1) == Fraction(-4, 5)

    def test_sphere_law(self):
        model = model_for(1, (1, 1, 1))
        for N in range(1, 50):
            assert cz_index(model, N) == 2 + 2 * N

    def test_iterate_validation(self):
        model = model_for(3, (1, 1, 1))
        with pytest.raises(InputError):
            cz_index(model, 0)

    def test_periodicity(self):
        rng = random.Random(11)
        for _ in range(30):
            model = random_model(rng)
            assert verify_periodicity(model, model.space.p + 60) > 0

    def test_periodicity_horizon_validation(self):
        model = model_for(5, (1, 1, 1))
        with pytest.raises(InputError):
            verify_periodicity(model, 5)

    def test_mean_index_is_two_over_p(self):
        rng = random.Random(13)
        for _ in range(60):
            model = random_model(rng)
            assert mean_index(model) == Fraction(2, model.space.p)

    def test_mean_index_sandwich(self):
        rng = random.Random(17)
        for _ in range(25):
            model = random_model(rng)
            delta = mean_index(model)
            n = model.space.n
            for N in range(1, 120):
                gap = cz_index(model, N) - N * delta
                assert -n < gap <= n

    def test_sandwich_equality_attained(self):
        model = model_for(3, (1, 1, 1))
        assert cz_index(model, 3) - 3 * mean_index(model) == 2


class TestSpectrumAndClasses:
    def test_spectrum_rows(self):
        model = model_for(3, (1, 1, 1))
        spec = cz_spectrum(model, 1, 5)
        assert spec.rows == ((1, Fraction(0)), (4, Fraction(2)))
        spec0 = cz_spectrum(model, 0, 7)
        assert [N for N, _ in spec0.rows] == [3, 6]

    def test_spectrum_validation(self):
        model = model_for(3, (1, 1, 1))
        with pytest.raises(InputError):
            cz_spectrum(model, 3, 5)
        with pytest.raises(InputError):
            cz_spectrum(model, 1, 0)

    def test_class_min_index_cube_root(self):
        model = model_for(3, (1, 1, 1))
        assert class_min_index(model, 1) == (1, 0)
        assert class_min_index(model, 2) == (2, 2)
        assert class_min_index(model, 0) == (3, 4)

    def test_class_min_takes_minimum_of_two_representatives(self):
        rng = random.Random(19)
        for _ in range(40):
            model = random_model(rng)
            p = model.space.p
            for klass in range(p):
                first = klass if klass >= 1 else p
                _, k_a = class_min_index(model, klass)
                assert k_a == min(cz_index(model, first), cz_index(model, first + p))

    def test_hc_table_structure(self):
        model = model_for(3, (1, 1, 1))
        table, k_a = hc_table(model, 1, 10)
        assert k_a == 0
        assert isinstance(table, GradedTable)
        assert table.degrees_for_class(1) == [Fraction(d) for d in (0, 2, 4, 6, 8, 10)]

    def test_hc_union_matches_spectrum_multiset(self):
        rng = random.Random(23)
        cap = Fraction(40)
        for _ in range(15):
            model = random_model(rng, p_max=12)
            p = model.space.p
            union = []
            for klass in range(p):
                table, _ = hc_table(model, klass, cap)
                union.extend(deg for (_, deg) in table.entries)
            spectrum = []
            N = 1
            while True:
                mu = cz_index(model, N)
                # indices grow by 2 every p iterates, so past the cap by
                # a full period nothing returns below it
                if mu > cap and N > 2 * p * (int(cap) + model.space.n):
                    break
                if mu <= cap:
                    spectrum.append(mu)
                N += 1
            assert sorted(union) == sorted(spectrum)

    def test_k0_threshold(self):
        assert k0_threshold(model_for(5, (1, 1, 1)), 1) == Fraction(26, 5)
        assert k0_threshold(model_for(1, (1, 1, 1)), 0) == 6
        model3 = model_for(3, (1, 1, 1))
        assert k0_threshold(model3, 0) == 6  # k_a = 4 < 5 -> 6
        assert k0_threshold(model3, 1) == 6  # k_a = 0 -> 0 + 2*3


class TestBezout:
    def test_pairs_are_valid_and_distinct(self):
        rng = random.Random(29)
        for _ in range(40):
            model = random_model(rng)
            pairs = bezout_pairs(model, count=5)
            assert len(set(pairs)) == 5
            assert pairs[0] == (model.c, model.d)
            for c, d in pairs:
                assert model.k * d - model.m * c == 1

    def test_index_invariance_under_pair_choice(self):
        rng = random.Random(31)
        for _ in range(20):
            model = random_model(rng, p_max=25)
            reference = [cz_index(model, N) for N in range(1, 80)]
            for c, d in bezout_pairs(model, count=5)[1:]:
                alt = with_bezout_pair(model, c, d)
                # distinct pairs shift a0, yet the index must not move
                assert alt.a0 != model.a0
                assert [cz_index(alt, N) for N in range(1, 80)] == reference

    def test_a0_shift(self):
        model = model_for(5, (1, 1, 1))
        alt = with_bezout_pair(model, model.c + model.k, model.d + model.m)
        assert alt.a0 == model.a0 - model.space.p

    def test_rejects_invalid_pair(self):
        model = model_for(5, (1, 1, 1))
        with pytest.raises(InputError):
            with_bezout_pair(model, model.c + 1, model.d)

    def test_count_validation(self):
        model = model_for(5, (1, 1, 1))
        with pytest.raises(InputError):
            bezout_pairs(model, count=0)
