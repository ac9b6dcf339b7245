import pytest
from hypothesis import given, settings, strategies as st

from bottlift.rings import (
    GradedPolynomial,
    RingMismatchError,
    RingSpec,
    format_polynomial,
    monomial_basis,
    parse_polynomial,
    poincare_rank,
    poincare_ranks,
    weight,
)
from bottlift.spaces import BSU_RING, BU1_RING, BU6_RING
from bottlift.symmetric import BU_HOMOLOGY_RING as B, SIGMA_RING


def bp(text: str) -> GradedPolynomial:
    return parse_polynomial(B, text)


# -- arithmetic examples -------------------------------------------------------


def test_add_additive_inverse():
    s1 = SIGMA_RING.gen("s1")
    assert (s1 + (-s1)).is_zero()


def test_add_disjoint_supports():
    assert bp("b1^2") + bp("b2") == bp("b1^2 + b2")


def test_add_coefficient_addition():
    assert bp("2*b1*b2") + bp("3*b1*b2") == bp("5*b1*b2")


def test_mul_square():
    assert bp("b1") * bp("b1") == bp("b1^2")


def test_mul_unit():
    p = SIGMA_RING.gen("s1") - SIGMA_RING.gen("s2")
    assert p * SIGMA_RING.one() == p


def test_mul_difference_of_squares():
    assert bp("b1 + b2") * bp("b1 - b2") == bp("b1^2 - b2^2")


def test_ring_mismatch():
    with pytest.raises(RingMismatchError, match="incompatible rings"):
        B.gen("b1") + SIGMA_RING.gen("s1")
    with pytest.raises(RingMismatchError):
        B.gen("b1") * SIGMA_RING.gen("s1")
    # zero polynomials carry their ring tag, so the check stays total
    with pytest.raises(RingMismatchError):
        B.zero() + SIGMA_RING.zero()


def test_integer_scaling():
    assert 3 * bp("b1") - bp("b1") == bp("2*b1")


# -- homogeneous parts ---------------------------------------------------------


def test_homogeneous_part_whole():
    p = bp("b1^2 + b2")  # both sit in degree 4
    assert p.homogeneous_part(4) == p
    assert p.is_homogeneous() and p.degree() == 4


def test_homogeneous_part_selects():
    assert bp("b1^2 + b3").homogeneous_part(6) == bp("b3")


def test_homogeneous_part_constants():
    assert B.constant(5).homogeneous_part(0) == B.constant(5)


def test_homogeneous_parts_sum_to_whole():
    p = bp("7 + b1 - 4*b1*b2 + b3^2")
    total = B.zero()
    for d in sorted(p.degrees()):
        total = total + p.homogeneous_part(d)
    assert total == p


# -- monomial bases and ranks ----------------------------------------------------


def test_monomial_basis_bsu_degree_10():
    basis = monomial_basis(BSU_RING, 10)
    assert [str(m) for m in basis] == ["c2*c3", "c5"]


def test_monomial_basis_x_degree_6():
    assert [str(m) for m in monomial_basis(BU1_RING, 6)] == ["x^3"]


def test_monomial_basis_bu6_degree_10():
    assert [str(m) for m in monomial_basis(BU6_RING, 10)] == ["y5"]


def test_monomial_basis_degree_zero_and_odd():
    assert [str(m) for m in monomial_basis(B, 0)] == ["1"]
    assert monomial_basis(B, 7) == []


def test_poincare_rank_examples():
    assert poincare_rank(BSU_RING, 4) == 1
    assert poincare_rank(BSU_RING, 12) == 4  # c2^3, c2*c4, c3^2, c6
    for ring in (B, SIGMA_RING, BSU_RING, BU6_RING, BU1_RING):
        assert poincare_rank(ring, 0) == 1


def _series_ranks(degrees: list[int], max_degree: int) -> list[int]:
    # truncated product of geometric series 1/(1 - t^d), one factor per generator
    coeffs = [0] * (max_degree + 1)
    coeffs[0] = 1
    for d in degrees:
        for i in range(d, max_degree + 1):
            coeffs[i] += coeffs[i - d]
    return coeffs


@pytest.mark.parametrize("ring", [B, BSU_RING, BU6_RING, BU1_RING])
def test_poincare_ranks_match_geometric_series(ring):
    max_degree = 30
    degrees = [d for _s, d in ring.generators_up_to(max_degree)]
    series = _series_ranks(degrees, max_degree)
    assert poincare_ranks(ring, max_degree) == [
        (d, series[d]) for d in range(0, max_degree + 1, 2)
    ]


def test_weight():
    assert weight(12) == 6
    with pytest.raises(ValueError):
        weight(7)


# -- canonical form and text round-trip ---------------------------------------


def test_canonical_order_of_terms():
    p = bp("3*b3 - 3*b1*b2 + b1^3")
    assert format_polynomial(p) == "b1^3 - 3*b1*b2 + 3*b3"


def test_format_zero_and_negative_lead():
    assert format_polynomial(B.zero()) == "0"
    assert format_polynomial(-bp("b1^2 - 2*b2")) == "-b1^2 + 2*b2"


def test_parse_rejects_unknown_generator():
    with pytest.raises(ValueError, match="unknown generator"):
        parse_polynomial(B, "c1")
    with pytest.raises(ValueError):
        parse_polynomial(B, "b01")  # no leading zeros in scheme subscripts


def test_scheme_generator_validation():
    assert B.has_generator("b12")
    assert not B.has_generator("b0")
    assert not BSU_RING.has_generator("c1")  # starts at c2
    with pytest.raises(ValueError):
        RingSpec("bad", generators=[("u", 3)])  # odd degree


# -- randomized properties -----------------------------------------------------


@st.composite
def b_polys(draw):
    n_terms = draw(st.integers(min_value=0, max_value=4))
    terms = {}
    for _ in range(n_terms):
        exps = draw(
            st.dictionaries(
                st.sampled_from(["b1", "b2", "b3", "b4"]),
                st.integers(min_value=1, max_value=3),
                max_size=3,
            )
        )
        coeff = draw(st.integers(min_value=-9, max_value=9))
        mono = B.monomial(exps)
        terms[mono] = terms.get(mono, 0) + coeff
    return B.polynomial(terms)


@settings(max_examples=60, deadline=None)
@given(b_polys(), b_polys(), b_polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p * B.one() == p
    assert p + B.zero() == p
    assert (p - p).is_zero()


@settings(max_examples=60, deadline=None)
@given(b_polys(), b_polys(), st.integers(min_value=0, max_value=10))
def test_homogeneous_multiplication(p, q, d):
    ph, qh = p.homogeneous_part(2 * d), q.homogeneous_part(4)
    prod = ph * qh
    assert prod.is_homogeneous()
    if not prod.is_zero():
        assert prod.degree() == 2 * d + 4


@settings(max_examples=80, deadline=None)
@given(b_polys())
def test_text_round_trip(p):
    assert parse_polynomial(B, format_polynomial(p)) == p


@settings(max_examples=60, deadline=None)
@given(b_polys())
def test_homogeneous_decomposition_sums(p):
    total = B.zero()
    for d in p.degrees():
        total = total + p.homogeneous_part(d)
    assert total == p
