import random
import time
from itertools import product

import pytest
from oracles import fraction_rank, iter_partitions, partition_staircase

from boreltangent.enumeration import enumerate_strongly_stable
from boreltangent.monomials import (
    DimensionMismatchError,
    MonomialIdeal,
    NonArtinianIdealError,
    StandardSet,
    minimal_generators,
    parse_ideal,
)
from boreltangent.scan import power_ideal
from boreltangent.tangent import (
    OracleSizeError,
    VerificationError,
    alpha_support_box,
    bareiss_rank,
    constraint_rank,
    graded_dimension,
    tangent_dimension,
    tangent_dimension_oracle,
    verify_tangent,
)

SQUARE = parse_ideal("x^2,x*y,y^2,x*z^2,y*z^2,z^4")
SESSION = parse_ideal("x^2,y^3,z^3,x*y,x*z,y*z^2,y^2*z")


def test_maximal_ideal_is_smooth():
    report = tangent_dimension(parse_ideal("x,y,z"))
    assert report.total == 3
    assert report.zero_rank == 0


def test_square_anchor():
    report = tangent_dimension(SQUARE)
    assert (report.total, report.zero_rank, report.g, report.l) == (36, 12, 6, 8)
    assert constraint_rank(SQUARE) == 12
    assert tangent_dimension_oracle(SQUARE) == 36


def test_power_square_n3():
    assert tangent_dimension(power_ideal(3, 2)).total == 18
    assert tangent_dimension_oracle(power_ideal(3, 2)) == 18
    assert constraint_rank(power_ideal(3, 2)) == 6 * 4 - 18


@pytest.mark.parametrize("k", range(1, 7))
def test_single_variable_is_smooth(k):
    ideal = MonomialIdeal(1, ((k,),))
    assert tangent_dimension(ideal).total == k
    assert tangent_dimension_oracle(ideal) == k
    assert alpha_support_box(ideal) == ((-k, k - 1),)


def test_two_variable_examples():
    ideal = parse_ideal("x,y^2")
    assert tangent_dimension(ideal).total == 4
    assert constraint_rank(ideal) == 0
    assert tangent_dimension_oracle(ideal) == 4


def test_graded_examples():
    assert graded_dimension(parse_ideal("x,y"), (-1, -1)) == 0
    assert graded_dimension(power_ideal(2, 2), (-1, 0)) == 2
    # pinned regression value for the three-variable session example
    assert graded_dimension(SESSION, (0, 2, -3)) == 1
    assert tangent_dimension(SESSION).total == 29
    assert tangent_dimension_oracle(SESSION) == 29


def test_graded_length_mismatch():
    with pytest.raises(DimensionMismatchError):
        graded_dimension(SQUARE, (0, 1))


def test_support_box_examples():
    assert alpha_support_box(parse_ideal("x,y,z")) == ((-1, 0), (-1, 0), (-1, 0))
    assert alpha_support_box(SQUARE) == ((-2, 1), (-2, 1), (-4, 3))
    with pytest.raises(NonArtinianIdealError):
        alpha_support_box(parse_ideal("x,y", nvars=3))


def test_maximal_ideal_nonzero_degrees():
    ideal = parse_ideal("x,y,z")
    box = alpha_support_box(ideal)
    nonzero = {alpha for alpha in product(*(range(lo, hi + 1) for lo, hi in box))
               if graded_dimension(ideal, alpha) > 0}
    assert nonzero == {(-1, 0, 0), (0, -1, 0), (0, 0, -1)}


@pytest.mark.parametrize("ideal", [SQUARE, SESSION, power_ideal(3, 2)])
def test_graded_sum_identity_and_outside_shell(ideal):
    report = tangent_dimension(ideal)
    box = alpha_support_box(ideal)
    total = sum(graded_dimension(ideal, alpha)
                for alpha in product(*(range(lo, hi + 1) for lo, hi in box)))
    assert total == report.total
    assert report.total == sum(dim for _alpha, dim in report.graded)
    for alpha, _dim in report.graded:
        assert all(lo <= a <= hi for a, (lo, hi) in zip(alpha, box))
    # one shell beyond the box: everything vanishes
    for t in range(ideal.nvars):
        for bound, offset in ((box[t][0], -1), (box[t][1], +1)):
            alpha = [0] * ideal.nvars
            alpha[t] = bound + offset
            assert graded_dimension(ideal, tuple(alpha)) == 0


def test_report_invariants_small_enumeration():
    for l in range(1, 9):
        for ideal in enumerate_strongly_stable(3, l):
            report = tangent_dimension(ideal)
            assert report.total == sum(dim for _a, dim in report.graded)
            assert all(dim > 0 for _a, dim in report.graded)
            assert report.zero_rank == report.g * report.l - report.total
            assert report.zero_rank >= 0


def test_oracle_equivalence_quick_sweep():
    for l in range(1, 8):
        for ideal in enumerate_strongly_stable(3, l):
            assert tangent_dimension(ideal).total == tangent_dimension_oracle(ideal)
    for l in range(1, 6):
        for ideal in enumerate_strongly_stable(4, l):
            assert tangent_dimension(ideal).total == tangent_dimension_oracle(ideal)


def test_plane_smoothness_quick_sweep():
    for l in range(1, 9):
        for partition in iter_partitions(l):
            staircase = StandardSet(2, partition_staircase(partition))
            ideal = minimal_generators(staircase)
            assert tangent_dimension(ideal, standard=staircase).total == 2 * l


def test_three_variable_lower_bound():
    for l in range(1, 11):
        for ideal in enumerate_strongly_stable(3, l):
            total = tangent_dimension(ideal).total
            assert total >= 3 * l
            if ideal.pure_powers()[0] == 1:
                assert total == 3 * l


def test_generator_order_does_not_matter():
    gens = list(SQUARE.gens)
    rng = random.Random(7)
    for _ in range(5):
        rng.shuffle(gens)
        assert tangent_dimension(MonomialIdeal(3, tuple(gens))) == tangent_dimension(SQUARE)


def test_precomputed_standard_set_agrees():
    from boreltangent.monomials import standard_set

    std = standard_set(SQUARE)
    assert tangent_dimension(SQUARE, standard=std) == tangent_dimension(SQUARE)
    with pytest.raises(DimensionMismatchError):
        tangent_dimension(SQUARE, standard=StandardSet(2, frozenset([(0, 0)])))


def test_square_anchor_is_fast():
    start = time.monotonic()
    assert tangent_dimension(SQUARE).total == 36
    assert constraint_rank(SQUARE) == 12
    assert time.monotonic() - start < 1.0


def test_bareiss_rank_basics():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[1, 0], [0, 1]]) == 2
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[2, 3, 5], [4, 6, 10], [1, 1, 1]]) == 2


def test_bareiss_rank_matches_fraction_elimination():
    rng = random.Random(2024)
    for _trial in range(60):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        matrix = [[rng.randint(-4, 4) for _ in range(ncols)] for _ in range(nrows)]
        assert bareiss_rank(matrix) == fraction_rank(matrix)


def test_oracle_size_cap():
    with pytest.raises(OracleSizeError):
        tangent_dimension_oracle(SQUARE, size_cap=10)


def test_verify_tangent():
    report = verify_tangent(SQUARE)
    assert report.total == 36


def test_verify_tangent_raises_on_mismatch(monkeypatch):
    import boreltangent.tangent as tangent_module

    monkeypatch.setattr(tangent_module, "tangent_dimension_oracle",
                        lambda ideal, standard=None, size_cap=2000: -1)
    with pytest.raises(VerificationError):
        tangent_module.verify_tangent(SQUARE)


def test_report_json_schema():
    report = tangent_dimension(SQUARE)
    obj = report.to_json()
    assert obj["total"] == 36 and obj["zero_rank"] == 12
    assert obj["ideal"] == {"vars": 3, "gens": [list(g) for g in SQUARE.gens]}
    alphas = [tuple(entry["alpha"]) for entry in obj["graded"]]
    assert alphas == sorted(alphas)
    assert sum(entry["dim"] for entry in obj["graded"]) == 36
