import math
from fractions import Fraction

import numpy as np
import pytest
from oracles import eigenvalue_age_oracle, unit_tuples

from lensreeb.chen_ruan import age, cr_max_degree, cr_table, existence_report, sector
from lensreeb.errors import InputError
from lensreeb.lens import validate


class TestAges:
    def test_l3_111_degrees(self):
        space = validate(3, (1, 1, 1))
        assert [2 * age(space, k) for k in range(3)] == [0, 2, 4]

    def test_l5_111_degrees(self):
        space = validate(5, (1, 1, 1))
        degrees = [2 * age(space, k) for k in range(5)]
        assert degrees == [
            Fraction(0),
            Fraction(6, 5),
            Fraction(12, 5),
            Fraction(18, 5),
            Fraction(24, 5),
        ]

    def test_sector_rotations(self):
        space = validate(5, (2, 3, 1))
        sec = sector(space, 2)
        assert sec.rotations == (Fraction(4, 5), Fraction(1, 5), Fraction(2, 5))
        assert sec.age == Fraction(7, 5)

    def test_sector_label_range(self):
        space = validate(5, (1, 1, 1))
        with pytest.raises(InputError):
            age(space, 5)
        with pytest.raises(InputError):
            age(space, -1)

    def test_p_one_degenerate(self):
        space = validate(1, (1, 1))
        table = cr_table(space)
        assert table.rows() == [{"class": 0, "degree": "0/1", "dim": 1}]
        assert cr_max_degree(space) == 0

    def test_eigenvalue_oracle_agreement(self):
        # Small exhaustive slice here; the acceptance suite covers p <= 12.
        rng = np.random.default_rng(20240817)
        for p in range(2, 9):
            for weights in unit_tuples(p, 3):
                space = validate(p, weights)
                for k in range(p):
                    assert age(space, k) == eigenvalue_age_oracle(
                        p, space.reduced, k, rng
                    ), (p, weights, k)


class TestTableStructure:
    @pytest.mark.parametrize("p", [1, 2, 3, 4, 5, 7, 8, 9, 12])
    def test_bounds_and_counts(self, p):
        space = validate(p, (1, 1, 1))
        table = cr_table(space)
        assert len(table.entries) == p
        bound = 2 * space.n + 2
        for (k, degree), dim in table.entries.items():
            assert dim == 1
            if k == 0:
                assert degree == 0
            else:
                assert 0 < degree < bound
        assert cr_max_degree(space) < bound

    def test_rescaling_covariance(self):
        # d_k of the rescaled tuple equals d_{ck mod p} of the original.
        for p in range(2, 11):
            units = [u for u in range(1, p) if math.gcd(u, p) == 1]
            for weights in unit_tuples(p, 3):
                space = validate(p, weights)
                base = {k: age(space, k) for k in range(p)}
                for c in units:
                    rescaled = validate(p, tuple((c * w) % p for w in weights))
                    for k in range(p):
                        assert age(rescaled, k) == base[(c * k) % p]

    def test_graded_table_api(self):
        space = validate(3, (1, 1, 1))
        table = cr_table(space)
        assert table.classes() == [0, 1, 2]
        assert table.degrees_for_class(1) == [Fraction(2)]
        assert table.dim(1, 2) == 1
        assert table.dim(1, 4) == 0


class TestExistenceReport:
    def test_shape_and_verdicts(self):
        space = validate(5, (1, 1, 1))
        report = existence_report(space)
        assert len(report["classes"]) == 5
        assert report["vanishing_above"] == 6
        assert report["max_degree"] == "24/5"
        for entry in report["classes"]:
            assert entry["dim"] == 1
            assert "closed orbit" in entry["verdict"]
        assert report["assumptions"]
