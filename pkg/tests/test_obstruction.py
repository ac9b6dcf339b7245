import pytest

from bottlift.obstruction import (
    Coordinate,
    GradedCoefficients,
    UnsupportedSystemError,
    VERDICT_INDETERMINATE,
    VERDICT_OBSTRUCTED,
    VERDICT_UNOBSTRUCTED,
    builtin_coefficients,
    coordinate_obstruction,
    e2_entry,
    format_group,
    parse_coefficients_text,
    parse_coordinate_text,
    partition_count,
    pi0_factors,
    restriction_index,
    space_for_level,
)
from bottlift.selftest import count_partitions_bf

MU = builtin_coefficients("MU")


# -- partitions and builtin systems ------------------------------------------------


@pytest.mark.parametrize("k", range(0, 16))
def test_partition_count_vs_enumerator(k):
    assert partition_count(k) == count_partitions_bf(k)


def test_builtin_mu():
    assert MU.rank(4) == 2  # p(2)
    assert MU.group(3) == (0, ())
    assert MU.group(0) == (1, ())
    assert MU.even and MU.torsion_free


def test_builtin_sl1mu():
    sl1 = builtin_coefficients("sl1MU")
    assert sl1.rank(0) == 0
    assert sl1.rank(4) == 2
    assert sl1.rank(2 * 9) == MU.rank(18)


def test_builtin_z_even_shift():
    z6 = builtin_coefficients("Z_even_shift(6)")
    assert z6.group(6) == (1, ())
    assert z6.rank(4) == 0
    assert z6.even
    assert not builtin_coefficients("Z_even_shift(3)").even


def test_builtin_unknown():
    with pytest.raises(ValueError, match="unknown coefficient system"):
        builtin_coefficients("KO")


# -- the file formats ---------------------------------------------------------------


COEFFS_DOC = """\
# a small even system with torsion in degree 6
name demo
0 1
2 1
4 2
6 1 2 4
"""


def test_parse_coefficients_text():
    sys = parse_coefficients_text(COEFFS_DOC)
    assert sys.name == "demo"
    assert sys.group(4) == (2, ())
    assert sys.group(6) == (1, (2, 4))
    assert sys.group(8) == (0, ())
    assert sys.even
    assert not sys.torsion_free


def test_parse_coefficients_errors():
    with pytest.raises(ValueError, match="header"):
        parse_coefficients_text("0 1\n")
    with pytest.raises(ValueError, match="missing 'name'"):
        parse_coefficients_text("# nothing\n")
    with pytest.raises(ValueError, match="duplicate degree"):
        parse_coefficients_text("name d\n2 1\n2 2\n")
    with pytest.raises(ValueError, match="non-integer"):
        parse_coefficients_text("name d\n2 x\n")
    with pytest.raises(ValueError, match="torsion orders"):
        parse_coefficients_text("name d\n2 1 1\n")


def test_parse_coordinate_text():
    coord = parse_coordinate_text(MU, "1 0\n3 1 0 0\n")
    assert coord.truncation == 3
    assert coord.entries[3] == (1, 0, 0)
    assert coord.entries[2] == (0, 0)  # unspecified below truncation means zero
    assert coord.leading_degree() == 3


def test_parse_coordinate_errors():
    with pytest.raises(ValueError, match="duplicate degree"):
        parse_coordinate_text(MU, "1 0\n1 1\n")
    with pytest.raises(ValueError, match="expected rank"):
        parse_coordinate_text(MU, "3 1 0\n")  # rank of degree-6 group is 3
    with pytest.raises(ValueError, match="non-integer"):
        parse_coordinate_text(MU, "1 a\n")


# -- rank tables ---------------------------------------------------------------------


def test_e2_entry_examples():
    assert e2_entry(2, 4, 2, MU) == (1, ())  # H^4(BSU) x pi_2
    assert e2_entry(2, 5, 8, MU) == (0, ())  # odd cohomological degree
    assert e2_entry(4, 10, 2, MU) == (1, ())  # H^10(BU6) = Z{y5}


def test_e2_entry_torsion_replication():
    sys = parse_coefficients_text(COEFFS_DOC)
    # H^8(BSU) has rank 2 (c4, c2^2); torsion orders replicate once per generator
    assert e2_entry(2, 8, 6, sys) == (2, (2, 2, 4, 4))


def test_e2_entry_validation():
    with pytest.raises(ValueError):
        e2_entry(3, 4, 2, MU)
    with pytest.raises(ValueError):
        e2_entry(2, -2, 2, MU)


def test_space_for_level():
    assert space_for_level(2).name == "H_BSU"
    assert space_for_level(4).name == "H_BU6"
    with pytest.raises(ValueError):
        space_for_level(6)


def test_pi0_factors_mu():
    factors = pi0_factors(2, MU, 6)
    assert factors[0] == (1, (1, ()))
    assert factors[1] == (2, (2, ()))
    assert factors[2] == (3, (6, ()))  # rank H^8(BSU) = 2 times p(3) = 3


def test_pi0_factors_single_stage():
    z2 = builtin_coefficients("Z_even_shift(2)")
    factors = dict(pi0_factors(2, z2, 8))
    assert factors[1] == (1, ())  # H^4(BSU) (x) Z
    assert factors[2] == (0, ())  # pi_4 = 0


def test_pi0_rejects_odd_targets():
    odd = parse_coefficients_text("name odd\n3 1\n")
    with pytest.raises(UnsupportedSystemError, match="target not even"):
        pi0_factors(2, odd, 10)
    with pytest.raises(UnsupportedSystemError):
        pi0_factors(4, builtin_coefficients("Z_even_shift(3)"), 10)


def test_pi0_validation():
    with pytest.raises(ValueError):
        pi0_factors(2, MU, 7)
    with pytest.raises(ValueError):
        pi0_factors(5, MU, 10)


# -- restriction indices ----------------------------------------------------------------


def test_restriction_index_level_2():
    assert all(restriction_index(2, m) == 1 for m in range(1, 31))


def test_restriction_index_level_4():
    assert [restriction_index(4, m) for m in range(1, 9)] == [1, 1, 2, 1, 6, 1, 4, 3]
    assert restriction_index(4, 3) == 2


@pytest.mark.parametrize("m", range(1, 31))
def test_restriction_index_level_4_closed_form(m):
    from bottlift.spaces import prime_power_root

    pp = prime_power_root(m + 1)
    expected = (m + 1) // pp[0] if pp is not None else m + 1
    assert restriction_index(4, m) == expected


def test_restriction_index_validation():
    with pytest.raises(ValueError):
        restriction_index(3, 1)
    with pytest.raises(ValueError):
        restriction_index(4, 0)


# -- coordinates and verdicts --------------------------------------------------------------


def test_coordinate_validation():
    with pytest.raises(ValueError, match="expected rank"):
        Coordinate(MU, {2: (1,)})  # rank of pi_4 is 2
    with pytest.raises(ValueError, match="start at 1"):
        Coordinate(MU, {0: ()})
    with pytest.raises(ValueError, match="exceeds truncation"):
        Coordinate(MU, {3: (1, 0, 0)}, truncation=2)
    with pytest.raises(UnsupportedSystemError, match="torsion-free"):
        Coordinate(parse_coefficients_text(COEFFS_DOC), {})


def test_zero_coordinate_empty_report():
    report = coordinate_obstruction(Coordinate(MU, {}, truncation=5), 4)
    assert report.records == ()
    assert not report.has_obstruction()


def test_obstructed_at_leading_odd_entry():
    coord = Coordinate(MU, {3: (1, 0, 0)})
    report = coordinate_obstruction(coord, 4)
    assert report.verdict_at(3) == VERDICT_OBSTRUCTED
    assert report.records[0].index == 2
    assert report.has_obstruction()


def test_unobstructed_with_even_leading_entry():
    coord = Coordinate(MU, {3: (2, -4, 6), 5: (1, 0, 0, 0, 0, 0, 0)})
    report = coordinate_obstruction(coord, 4)
    assert report.verdict_at(3) == VERDICT_UNOBSTRUCTED
    assert report.verdict_at(4) == VERDICT_INDETERMINATE
    assert report.verdict_at(5) == VERDICT_INDETERMINATE
    assert report.verdict_at(1) is None  # zero entries below the leading degree
    assert not report.has_obstruction()


def test_leading_degree_skips_explicit_zeros():
    coord = Coordinate(MU, {1: (0,), 2: (0, 0), 3: (0, 0, 2)})
    assert coord.leading_degree() == 3
    report = coordinate_obstruction(coord, 4)
    assert report.verdict_at(3) == VERDICT_UNOBSTRUCTED


def test_level_2_unobstructed_everywhere():
    coord = Coordinate(MU, {3: (1, 0, 0), 4: (7, 1, 1, 1, 1)})
    report = coordinate_obstruction(coord, 2)
    assert len(report.records) == 4
    assert all(r.verdict == VERDICT_UNOBSTRUCTED for r in report.records)
    assert all(r.index == 1 for r in report.records)


@pytest.mark.parametrize("entries,leading", [({3: (1, 0, 0)}, 3), ({5: (0, 1, 2, 3, 4, 5, 6)}, 5)])
def test_scaling_by_index_unobstructs(entries, leading):
    coord = Coordinate(MU, entries)
    d = restriction_index(4, leading)
    assert coordinate_obstruction(coord, 4).verdict_at(leading) == VERDICT_OBSTRUCTED
    assert coordinate_obstruction(coord.scaled(d), 4).verdict_at(leading) == VERDICT_UNOBSTRUCTED


def test_coordinate_obstruction_requires_even_system():
    odd = GradedCoefficients.from_table("oddfree", {3: (1, ())})
    coord = Coordinate(odd, {})
    with pytest.raises(UnsupportedSystemError, match="not even"):
        coordinate_obstruction(coord, 4)


# -- rendering -----------------------------------------------------------------------------


def test_format_group():
    assert format_group((0, ())) == "0"
    assert format_group((1, ())) == "Z"
    assert format_group((2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    assert format_group((0, (2,))) == "Z/2"
